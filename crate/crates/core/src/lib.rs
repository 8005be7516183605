//! Exact computational algebra for Frobenius pushforwards over weighted
//! graded rings of positive characteristic.
//!
//! The library builds presentations of `F_* M` (a module with scalars acting
//! through `x -> x^q`), decomposes modules into indecomposable summands via
//! endomorphism-algebra idempotents, tests F-splitness, computes higher
//! para-canonical modules by graded duality over the ambient polynomial ring,
//! and drives a search for maximal Cohen-Macaulay modules.
//!
//! Everything is exact: coefficients live in a prime field `F_p`, gradings are
//! rationals with `p`-power denominators, and all homological invariants come
//! from Groebner bases over the ambient ring.

pub mod arith;
pub mod canonical;
pub mod decompose;
pub mod degree;
pub mod endo;
pub mod error;
pub mod fl;
pub mod frobenius;
pub mod groebner;
pub mod hilbert;
pub mod hom;
pub mod module;
pub mod monomial;
pub mod net;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod sample;
pub mod vecpoly;

pub use arith::PrimeField;
pub use canonical::{h_invariant, mcm_from_module, para_canonical};
pub use decompose::{
    decompose, fedder_check, is_direct_summand, is_fsplit, Decomposition, SummandCertificate,
};
pub use degree::Degree;
pub use error::Error;
pub use fl::FiniteLengthModule;
pub use frobenius::{
    conjugation_check, iterate_pushforward, mult_matrix, nabla_matrix, pushforward,
    qadic_digits, tf_functor_fl, MultiplicationMatrix, PushforwardMatrix, StandardBasis,
};
pub use hilbert::HilbertSeries;
pub use hom::{hom_degree_zero, is_isomorphic, HomSpace, Isomorphism};
pub use module::{Depth, GradedModule, MinimalPresentation};
pub use monomial::Monomial;
pub use net::{mcm_search, mcm_search_with_deadline, net_explore, net_explore_with_deadline, FNet, McmOutcome, NetClass};
pub use poly::{PolyRing, Polynomial};
pub use resolution::{depth, ext_module, free_resolution, minimal_resolution, FreeResolution};
pub use ring::GradedRing;
