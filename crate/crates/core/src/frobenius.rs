//! The Frobenius pushforward engine.
//!
//! Over the ambient ring with `d` variables and a Frobenius step `q = p^n`,
//! the pushforward of the free module is free on the standard basis `*m_a`,
//! `m_a = prod x_k^{a(k)}` indexed by `q`-adic digit vectors. Multiplication
//! by a ring element `s` becomes a `q^d x q^d` matrix `D(s)` over the ring,
//! persymmetric (symmetric about the counterdiagonal), and a presentation
//! matrix pushes forward blockwise: every entry `a_ij` is replaced by
//! `D(a_ij)`. Degrees scale by `1/q`.

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fl::FiniteLengthModule;
use crate::module::GradedModule;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::vecpoly::{VecPoly, VTerm};
use std::collections::BTreeMap;

/// Digits of `a` in base `q`, least significant first, length `d`.
pub fn qadic_digits(a: u64, q: u64, d: usize) -> Result<Vec<u64>> {
    let total = q
        .checked_pow(d as u32)
        .ok_or_else(|| Error::IndexOutOfRange("q^d overflows".into()))?;
    if a >= total {
        return Err(Error::IndexOutOfRange(format!("{a} >= q^d = {total}")));
    }
    let mut digits = vec![0u64; d];
    let mut rest = a;
    for digit in digits.iter_mut() {
        *digit = rest % q;
        rest /= q;
    }
    Ok(digits)
}

fn check_q(ring: &PolyRing, q: u64) -> Result<u32> {
    let p = ring.p();
    let mut qq = q;
    let mut n = 0u32;
    while qq > 1 {
        if qq % p != 0 {
            return Err(Error::NotPowerOfP { q, p });
        }
        qq /= p;
        n += 1;
    }
    if q < p {
        return Err(Error::NotPowerOfP { q, p });
    }
    Ok(n)
}

/// The ordered monomial basis `m_a` of the pushforward of the free module.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    pub q: u64,
    pub d: usize,
    pub monomials: Vec<Monomial>,
}

impl StandardBasis {
    pub fn new(ring: &PolyRing, q: u64) -> Result<Self> {
        check_q(ring, q)?;
        let d = ring.nvars();
        let total = q
            .checked_pow(d as u32)
            .filter(|t| *t <= 1 << 22)
            .ok_or_else(|| Error::IndexOutOfRange("standard basis too large".into()))?;
        let mut monomials = Vec::with_capacity(total as usize);
        for a in 0..total {
            let digits = qadic_digits(a, q, d)?;
            let mut m = Monomial::one();
            for (k, &dk) in digits.iter().enumerate() {
                m.e[k] = dk as u16;
            }
            monomials.push(m);
        }
        Ok(StandardBasis { q, d, monomials })
    }

    pub fn size(&self) -> u64 {
        self.monomials.len() as u64
    }

    /// Degree of the pushforward basis vector `*(e m_a)` for a source
    /// generator of degree `gen`.
    pub fn pushed_degree(&self, ring: &PolyRing, gen: &Degree, a: u64) -> Degree {
        let md = ring.mono_degree(&self.monomials[a as usize]) as i64;
        gen.add(&Degree::int(md)).div_q(self.q)
    }
}

/// Sparse matrix of the endomorphism `*t -> *(s t)` of the pushed-forward
/// free module, rows indexed by the standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationMatrix {
    pub q: u64,
    pub size: u64,
    /// Row-major sparse entries, columns sorted.
    pub rows: Vec<Vec<(u64, Polynomial)>>,
}

/// `D(s)` with respect to the standard basis: for a monomial `c x^gamma` the
/// row `a` has its unique entry at column `sum rem(gamma_k + a_k) q^k` with
/// value `c prod x_k^(quot(gamma_k + a_k))`; general `s` by linearity.
pub fn mult_matrix(ring: &PolyRing, s: &Polynomial, q: u64) -> Result<MultiplicationMatrix> {
    let basis = StandardBasis::new(ring, q)?;
    let n = basis.size();
    let d = basis.d;
    let mut rows: Vec<BTreeMap<u64, Polynomial>> = vec![BTreeMap::new(); n as usize];
    for (gamma, c) in &s.terms {
        for a in 0..n {
            let digits = qadic_digits(a, q, d)?;
            let mut col = 0u64;
            let mut qpow = 1u64;
            let mut mono = Monomial::one();
            for k in 0..d {
                let total = gamma.exponent(k) as u64 + digits[k];
                col += (total % q) * qpow;
                qpow *= q;
                let quot = total / q;
                assert!(quot <= u16::MAX as u64, "exponent overflow");
                mono.e[k] = quot as u16;
            }
            let entry = rows[a as usize]
                .entry(col)
                .or_insert_with(Polynomial::zero);
            *entry = ring.add(entry, &ring.monomial_poly(mono, *c));
        }
    }
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().filter(|(_, p)| !p.is_zero()).collect())
        .collect();
    Ok(MultiplicationMatrix { q, size: n, rows })
}

impl MultiplicationMatrix {
    pub fn entry(&self, i: u64, j: u64) -> Polynomial {
        self.rows[i as usize]
            .iter()
            .find(|(c, _)| *c == j)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(Polynomial::zero)
    }

    pub fn identity(ring: &PolyRing, q: u64) -> Result<Self> {
        mult_matrix(ring, &ring.one(), q)
    }

    /// Symmetry about the counterdiagonal: `a_{ij} = a_{n-1-j, n-1-i}`.
    pub fn is_persymmetric(&self) -> bool {
        let n = self.size;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, p) in row {
                if &self.entry(n - 1 - j, n - 1 - (i as u64)) != p {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, ring: &PolyRing, other: &MultiplicationMatrix) -> MultiplicationMatrix {
        assert_eq!(self.size, other.size);
        let mut rows: Vec<BTreeMap<u64, Polynomial>> =
            vec![BTreeMap::new(); self.size as usize];
        for (i, row) in self.rows.iter().enumerate() {
            for (k, p) in row {
                for (j, t) in &other.rows[*k as usize] {
                    let prod = ring.mul(p, t);
                    let entry = rows[i].entry(*j).or_insert_with(Polynomial::zero);
                    *entry = ring.add(entry, &prod);
                }
            }
        }
        MultiplicationMatrix {
            q: self.q,
            size: self.size,
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().filter(|(_, p)| !p.is_zero()).collect())
                .collect(),
        }
    }

    pub fn add(&self, ring: &PolyRing, other: &MultiplicationMatrix) -> MultiplicationMatrix {
        assert_eq!(self.size, other.size);
        let mut rows: Vec<BTreeMap<u64, Polynomial>> =
            vec![BTreeMap::new(); self.size as usize];
        for (i, row) in self.rows.iter().enumerate().chain(other.rows.iter().enumerate()) {
            for (j, p) in row {
                let entry = rows[i].entry(*j).or_insert_with(Polynomial::zero);
                *entry = ring.add(entry, p);
            }
        }
        MultiplicationMatrix {
            q: self.q,
            size: self.size,
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().filter(|(_, p)| !p.is_zero()).collect())
                .collect(),
        }
    }
}

/// The blockwise pushforward of a presentation matrix, with scaled degrees.
#[derive(Debug, Clone)]
pub struct PushforwardMatrix {
    pub q: u64,
    pub block: u64,
    pub rows: Vec<VecPoly>,
    pub row_degs: Vec<Degree>,
    pub col_degs: Vec<Degree>,
}

/// Pushforward rows: source row `(i, a)` collects, for every source term
/// `c x^gamma e_j`, the row `a` of `D(c x^gamma)` placed in column block `j`.
pub fn nabla_rows(
    ring: &PolyRing,
    rows: &[VecPoly],
    q: u64,
) -> Result<Vec<VecPoly>> {
    let basis = StandardBasis::new(ring, q)?;
    let n = basis.size();
    let d = basis.d;
    let mut out = Vec::with_capacity(rows.len() * n as usize);
    for row in rows {
        for a in 0..n {
            let digits = qadic_digits(a, q, d)?;
            let mut terms: Vec<VTerm> = Vec::with_capacity(row.terms.len());
            for t in &row.terms {
                let mut col = 0u64;
                let mut qpow = 1u64;
                let mut mono = Monomial::one();
                for k in 0..d {
                    let total = t.mono.exponent(k) as u64 + digits[k];
                    col += (total % q) * qpow;
                    qpow *= q;
                    let quot = total / q;
                    assert!(quot <= u16::MAX as u64, "exponent overflow");
                    mono.e[k] = quot as u16;
                }
                terms.push(VTerm {
                    comp: t.comp * n as u32 + col as u32,
                    mono,
                    coeff: t.coeff,
                });
            }
            out.push(VecPoly::normalize(ring, terms));
        }
    }
    Ok(out)
}

/// Assemble the full pushforward of a dense presentation matrix.
pub fn nabla_matrix(
    ring: &PolyRing,
    matrix: &[Vec<Polynomial>],
    row_degs: &[Degree],
    col_degs: &[Degree],
    q: u64,
) -> Result<PushforwardMatrix> {
    let basis = StandardBasis::new(ring, q)?;
    let ncols = col_degs.len();
    let rows: Vec<VecPoly> = matrix
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols);
            let comps: Vec<(u32, Polynomial)> = r
                .iter()
                .enumerate()
                .map(|(j, p)| (j as u32, p.clone()))
                .collect();
            VecPoly::from_components(ring, &comps)
        })
        .collect();
    let out_rows = nabla_rows(ring, &rows, q)?;
    let mut out_row_degs = Vec::new();
    for rd in row_degs {
        for a in 0..basis.size() {
            out_row_degs.push(basis.pushed_degree(ring, rd, a));
        }
    }
    let mut out_col_degs = Vec::new();
    for cd in col_degs {
        for b in 0..basis.size() {
            out_col_degs.push(basis.pushed_degree(ring, cd, b));
        }
    }
    Ok(PushforwardMatrix {
        q,
        block: basis.size(),
        rows: out_rows,
        row_degs: out_row_degs,
        col_degs: out_col_degs,
    })
}

/// The Frobenius pushforward `F_* M` as a module over the same ring: the
/// blockwise pushforward of the full ambient presentation (rows plus ideal
/// multiples of every generator), with degrees scaled by `1/q`.
pub fn pushforward(module: &GradedModule, q: u64) -> Result<GradedModule> {
    let ring = module.ring().clone();
    let amb = ring.ambient();
    check_q(amb, q)?;
    let basis = StandardBasis::new(amb, q)?;
    let aug = module.aug_rows();
    let new_rows = nabla_rows(amb, &aug, q)?;
    let mut col_degs = Vec::with_capacity(module.ngens() * basis.size() as usize);
    for g in module.gen_degs() {
        for b in 0..basis.size() {
            col_degs.push(basis.pushed_degree(amb, g, b));
        }
    }
    GradedModule::new(ring, col_degs, new_rows)
}

/// `F_*^n M` by repeated single steps `q = p`, minimizing between steps.
pub fn iterate_pushforward(module: &GradedModule, n: usize) -> Result<GradedModule> {
    let p = module.ring().p();
    let mut cur = module.clone();
    for _ in 0..n {
        cur = pushforward(&cur, p)?.minimal_presentation().module;
    }
    Ok(cur)
}

/// Verify the conjugation identity `P (A^T)^nabla P^{-1} = (A^nabla)^T` for a
/// square matrix over the ambient ring, entry by entry.
pub fn conjugation_check(ring: &PolyRing, matrix: &[Vec<Polynomial>], q: u64) -> Result<bool> {
    let n = matrix.len();
    for r in matrix {
        if r.len() != n {
            return Err(Error::Unsupported("matrix must be square".into()));
        }
    }
    let basis = StandardBasis::new(ring, q)?;
    let bs = basis.size();
    // transpose of the source matrix
    let mut tr = vec![vec![Polynomial::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            tr[i][j] = matrix[j][i].clone();
        }
    }
    let degs = vec![Degree::zero(); n];
    let push = nabla_matrix(ring, matrix, &degs, &degs, q)?;
    let push_tr = nabla_matrix(ring, &tr, &degs, &degs, q)?;
    // index arithmetic: entry ((i,a),(j,b)) of P M P is M[(i, bs-1-a), (j, bs-1-b)]
    let lookup = |pm: &PushforwardMatrix, ri: u64, ci: u64| -> Polynomial {
        pm.rows[ri as usize].component(ci as u32)
    };
    for i in 0..n as u64 {
        for a in 0..bs {
            for j in 0..n as u64 {
                for b in 0..bs {
                    let lhs = lookup(&push_tr, i * bs + (bs - 1 - a), j * bs + (bs - 1 - b));
                    let rhs = lookup(&push, j * bs + b, (i * bs + a) as u64);
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Matlis-dual route to the pushforward at finite length: dualize, push the
/// presentation forward, dualize back. Agrees with `pushforward` up to
/// isomorphism.
pub fn tf_functor_fl(fl: &FiniteLengthModule, q: u64) -> Result<FiniteLengthModule> {
    let dual = fl.matlis_dual();
    let pushed = pushforward(&dual.to_module(), q)?;
    let pushed_fl = FiniteLengthModule::from_module(&pushed.minimal_presentation().module)?;
    Ok(pushed_fl.matlis_dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::module::GradedModule;
    use crate::ring::GradedRing;
    use std::sync::Arc;

    fn poly_ring(p: u64, vars: &[&str]) -> Arc<GradedRing> {
        GradedRing::polynomial_ring(
            PolyRing::standard(PrimeField::new(p).unwrap(), vars).unwrap(),
        )
    }

    #[test]
    fn digits() {
        assert_eq!(qadic_digits(0, 3, 2).unwrap(), vec![0, 0]);
        assert_eq!(qadic_digits(5, 3, 2).unwrap(), vec![2, 1]);
        // complement identity: digits(q^d - 1) = (q-1, ..., q-1)
        assert_eq!(qadic_digits(8, 3, 2).unwrap(), vec![2, 2]);
        for a in 0..9u64 {
            let d = qadic_digits(a, 3, 2).unwrap();
            let c = qadic_digits(8 - a, 3, 2).unwrap();
            for k in 0..2 {
                assert_eq!(c[k], 2 - d[k]);
            }
        }
        assert!(qadic_digits(9, 3, 2).is_err());
    }

    #[test]
    fn identity_matrix() {
        let r = poly_ring(3, &["x"]);
        let amb = r.ambient();
        let id = MultiplicationMatrix::identity(amb, 3).unwrap();
        assert_eq!(id.size, 3);
        for i in 0..3 {
            assert_eq!(id.entry(i, i), amb.one());
        }
        assert!(id.is_persymmetric());
    }

    #[test]
    fn mult_by_x_one_variable() {
        // D(x) for q=3, d=1: *1 -> *x, *x -> *x^2, *x^2 -> x * *1
        let r = poly_ring(3, &["x"]);
        let amb = r.ambient();
        let m = mult_matrix(amb, &amb.var(0), 3).unwrap();
        assert_eq!(m.entry(0, 1), amb.one());
        assert_eq!(m.entry(1, 2), amb.one());
        assert_eq!(m.entry(2, 0), amb.var(0));
        assert_eq!(m.entry(0, 0), Polynomial::zero());
        assert!(m.is_persymmetric());
    }

    #[test]
    fn ring_homomorphism_and_persymmetry() {
        let r = poly_ring(3, &["x", "y"]);
        let amb = r.ambient();
        let s = amb.parse("x^2 + 2*y").unwrap();
        let t = amb.parse("x*y + 1").unwrap();
        let ds = mult_matrix(amb, &s, 3).unwrap();
        let dt = mult_matrix(amb, &t, 3).unwrap();
        assert!(ds.is_persymmetric());
        assert!(dt.is_persymmetric());
        let dst = mult_matrix(amb, &amb.mul(&s, &t), 3).unwrap();
        assert_eq!(ds.mul(amb, &dt), dst);
        let dsum = mult_matrix(amb, &amb.add(&s, &t), 3).unwrap();
        assert_eq!(ds.add(amb, &dt), dsum);
    }

    #[test]
    fn kunz_free_ranks() {
        // F_* S is free of rank q^d
        let r = poly_ring(3, &["x", "y"]);
        let s = GradedModule::ring_module(r.clone());
        let p1 = pushforward(&s, 3).unwrap();
        assert_eq!(p1.ngens(), 9);
        assert_eq!(p1.nrows(), 0);
        let p2 = pushforward(&s, 9).unwrap();
        assert_eq!(p2.ngens(), 81);
        assert_eq!(p2.nrows(), 0);
    }

    #[test]
    fn pushforward_of_residue_field() {
        // F_* k = k (perfect residue field)
        let r = poly_ring(3, &["x", "y"]);
        let k = GradedModule::residue_field(r.clone());
        let p = pushforward(&k, 3).unwrap();
        assert_eq!(p.length(), Some(1));
        let mp = p.minimal_presentation();
        assert_eq!(mp.module.ngens(), 1);
    }

    #[test]
    fn pushforward_line_mod_x() {
        // coker (x) over F_3[x]: F_*(S/x) has length 1
        let r = poly_ring(3, &["x"]);
        let amb = r.ambient().clone();
        let m = GradedModule::new(
            r,
            vec![Degree::zero()],
            vec![VecPoly::from_poly(0, &amb.parse("x").unwrap())],
        )
        .unwrap();
        let p = pushforward(&m, 3).unwrap();
        assert_eq!(p.ngens(), 3);
        assert_eq!(p.length(), Some(1));
    }

    #[test]
    fn length_preserved_and_iterate_trivializes() {
        let r = poly_ring(3, &["x", "y"]);
        let amb = r.ambient().clone();
        // T/(x^2, xy, y^2): length 3
        let m = GradedModule::new(
            r.clone(),
            vec![Degree::zero()],
            vec![
                VecPoly::from_poly(0, &amb.parse("x^2").unwrap()),
                VecPoly::from_poly(0, &amb.parse("x*y").unwrap()),
                VecPoly::from_poly(0, &amb.parse("y^2").unwrap()),
            ],
        )
        .unwrap();
        let p = pushforward(&m, 3).unwrap();
        assert_eq!(p.length(), Some(3));
        // after enough iterations the module becomes a vector space k^l
        let it = iterate_pushforward(&m, 3).unwrap();
        assert_eq!(it.ngens(), 3);
        assert_eq!(it.length(), Some(3));
        assert!(it.gb().basis.iter().all(|v| {
            v.lead().mono.weighted_degree(amb.weights()) == 1
        }));
        // iterate with n = 0 is the identity
        let same = iterate_pushforward(&m, 0).unwrap();
        assert_eq!(same.rows(), m.rows());
    }

    #[test]
    fn iterate_matches_single_step() {
        // two p-steps agree with one p^2-step up to minimal presentation data
        let r = poly_ring(3, &["x"]);
        let s = GradedModule::ring_module(r.clone());
        let twice = iterate_pushforward(&s, 2).unwrap();
        let once = pushforward(&s, 9).unwrap().minimal_presentation().module;
        assert_eq!(twice.ngens(), once.ngens());
        assert_eq!(twice.nrows(), once.nrows());
        let (h1, _) = twice.hilbert_series().normalized();
        let (h2, _) = once.hilbert_series().normalized();
        assert_eq!(h1, h2);
    }

    #[test]
    fn conjugation_identity_small() {
        let r = poly_ring(3, &["x"]);
        let amb = r.ambient();
        // A = (x): 3x3 check by hand is the base case
        let a = vec![vec![amb.var(0)]];
        assert!(conjugation_check(amb, &a, 3).unwrap());
        // identity matrix
        let id = vec![
            vec![amb.one(), amb.zero()],
            vec![amb.zero(), amb.one()],
        ];
        assert!(conjugation_check(amb, &id, 3).unwrap());
    }

    #[test]
    fn pushforward_over_quotient_ring() {
        // F_* R over the cusp: 9 generators, nontrivial relations
        let r = crate::module::tests::cusp_ring();
        let m = GradedModule::ring_module(r);
        let p = pushforward(&m, 3).unwrap();
        assert_eq!(p.ngens(), 9);
        assert!(p.nrows() > 0);
        // rank over a 1-dimensional domain: the Hilbert series of F_*R and
        // R^3 have the same dimension and leading behavior; check dimension
        assert_eq!(p.dimension().unwrap(), 1);
    }

    #[test]
    fn tf_functor_matches_pushforward_small() {
        let r = poly_ring(3, &["x"]);
        let amb = r.ambient().clone();
        // M = T/(x^2): F_* M = k^2, and the dual route agrees
        let m = GradedModule::new(
            r.clone(),
            vec![Degree::zero()],
            vec![VecPoly::from_poly(0, &amb.parse("x^2").unwrap())],
        )
        .unwrap();
        let fl = FiniteLengthModule::from_module(&m).unwrap();
        let via_dual = tf_functor_fl(&fl, 3).unwrap();
        let direct = pushforward(&m, 3).unwrap();
        assert_eq!(via_dual.length() as u64, direct.length().unwrap());
        // both are k^2: every variable acts as zero
        let direct_fl =
            FiniteLengthModule::from_module(&direct.minimal_presentation().module).unwrap();
        assert!(via_dual.mats()[0].is_zero());
        assert!(direct_fl.mats()[0].is_zero());
    }
}
