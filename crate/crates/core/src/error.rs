use std::fmt;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Characteristic is not a prime in the supported range.
    NotPrime(u64),
    /// A power-of-p argument was expected (e.g. `q` in a Frobenius step).
    NotPowerOfP { q: u64, p: u64 },
    /// Operands belong to different ring contexts.
    RingMismatch,
    /// Input violates a homogeneity requirement.
    Inhomogeneous(String),
    /// Parse failure, with position information when available.
    Parse(String),
    /// The operation is undefined on the zero module.
    ZeroModule,
    /// An index argument is out of its valid range.
    IndexOutOfRange(String),
    /// Structural expectation violated (e.g. non-hypersurface input to a
    /// hypersurface-only test).
    Unsupported(String),
    /// A search budget ran out before the answer was decided.
    Undecided(String),
    /// A depth certificate failed where theory says it cannot; carries a
    /// reproduction bundle so the case can be replayed.
    TheoremContradiction(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime in [2, 2^31]"),
            Error::NotPowerOfP { q, p } => write!(f, "{q} is not a power of {p}"),
            Error::RingMismatch => write!(f, "operands live in different rings"),
            Error::Inhomogeneous(s) => write!(f, "inhomogeneous input: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::ZeroModule => write!(f, "operation undefined on the zero module"),
            Error::IndexOutOfRange(s) => write!(f, "index out of range: {s}"),
            Error::Unsupported(s) => write!(f, "unsupported input: {s}"),
            Error::Undecided(s) => write!(f, "undecided: {s}"),
            Error::TheoremContradiction(s) => {
                write!(f, "depth certificate failed unexpectedly: {s}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
