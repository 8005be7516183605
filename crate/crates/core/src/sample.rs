//! Seeded random generators for polynomials and modules, used by the
//! randomized property suites and the idempotent search.

use crate::degree::Degree;
use crate::module::{monomials_of_degree, GradedModule};
use crate::poly::{PolyRing, Polynomial};
use crate::ring::GradedRing;
use crate::vecpoly::{VecPoly, VTerm};
use rand::Rng;
use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Deterministic generator for a given seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random homogeneous polynomial of the given weighted degree (possibly zero
/// if every coefficient draw vanishes).
pub fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    ring: &PolyRing,
    degree: u64,
    density: f64,
) -> Polynomial {
    let monos = monomials_of_degree(ring, degree);
    let p = ring.p();
    let mut terms = Vec::new();
    for m in monos {
        if rng.gen_bool(density) {
            let c = rng.gen_range(1..p);
            terms.push((m, c));
        }
    }
    ring.from_terms(terms)
}

/// Random polynomial with terms spread over degrees `1..=max_degree`.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: &PolyRing,
    max_degree: u64,
    terms: usize,
) -> Polynomial {
    let p = ring.p();
    let mut acc = Vec::new();
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        let monos = monomials_of_degree(ring, d);
        if monos.is_empty() {
            continue;
        }
        let m = monos[rng.gen_range(0..monos.len())];
        acc.push((m, rng.gen_range(1..p)));
    }
    ring.from_terms(acc)
}

/// Random finite-length module over `ring` with length in `1..=max_len`:
/// a cyclic-or-two-generator quotient by variable powers plus random
/// homogeneous elements, resampled until the length lands in range.
pub fn random_finite_length_module(
    rng: &mut ChaCha8Rng,
    ring: &Arc<GradedRing>,
    max_len: u64,
) -> GradedModule {
    let amb = ring.ambient().clone();
    loop {
        let ngens = rng.gen_range(1..=2usize);
        let gen_degs: Vec<Degree> = (0..ngens)
            .map(|_| Degree::int(rng.gen_range(0..=1i64)))
            .collect();
        let mut rows = Vec::new();
        for j in 0..ngens {
            for v in 0..amb.nvars() {
                let e = rng.gen_range(1..=2u32);
                let mono = crate::monomial::Monomial::var(v).pow(e);
                rows.push(VecPoly {
                    terms: vec![VTerm {
                        comp: j as u32,
                        mono,
                        coeff: 1,
                    }],
                });
            }
        }
        // a few random homogeneous rows tie the generators together
        for _ in 0..rng.gen_range(0..=2) {
            let j = rng.gen_range(0..ngens);
            let base = gen_degs[j];
            let target = base.add(&Degree::int(rng.gen_range(1..=2i64)));
            let mut terms = Vec::new();
            for (jj, gd) in gen_degs.iter().enumerate() {
                let need = target.sub(gd);
                let Some(di) = need.as_integer() else { continue };
                if di < 0 {
                    continue;
                }
                let poly = random_homogeneous(rng, &amb, di as u64, 0.6);
                for (m, c) in poly.terms {
                    terms.push(VTerm {
                        comp: jj as u32,
                        mono: m,
                        coeff: c,
                    });
                }
            }
            rows.push(VecPoly::normalize(&amb, terms));
        }
        let Ok(m) = GradedModule::new(ring.clone(), gen_degs, rows) else {
            continue;
        };
        match m.length() {
            Some(l) if l >= 1 && l <= max_len => return m,
            _ => continue,
        }
    }
}

/// Random graded module with a handful of generators and homogeneous
/// relation rows; dimension varies.
pub fn random_module(
    rng: &mut ChaCha8Rng,
    ring: &Arc<GradedRing>,
    max_gens: usize,
    max_rows: usize,
) -> GradedModule {
    let amb = ring.ambient().clone();
    loop {
        let ngens = rng.gen_range(1..=max_gens);
        let gen_degs: Vec<Degree> = (0..ngens)
            .map(|_| Degree::int(rng.gen_range(0..=2i64)))
            .collect();
        let nrows = rng.gen_range(0..=max_rows);
        let mut rows = Vec::new();
        for _ in 0..nrows {
            let target = Degree::int(rng.gen_range(1..=3i64));
            let mut terms = Vec::new();
            for (j, gd) in gen_degs.iter().enumerate() {
                let need = target.sub(gd);
                let Some(di) = need.as_integer() else { continue };
                if di < 0 {
                    continue;
                }
                let poly = random_homogeneous(rng, &amb, di as u64, 0.4);
                for (m, c) in poly.terms {
                    terms.push(VTerm {
                        comp: j as u32,
                        mono: m,
                        coeff: c,
                    });
                }
            }
            let row = VecPoly::normalize(&amb, terms);
            if !row.is_zero() {
                rows.push(row);
            }
        }
        let Ok(m) = GradedModule::new(ring.clone(), gen_degs, rows) else {
            continue;
        };
        if !m.is_zero() {
            return m;
        }
    }
}

/// Random submodule generators: homogeneous vectors inside the generator
/// free module of `m`.
pub fn random_submodule_gens(
    rng: &mut ChaCha8Rng,
    m: &GradedModule,
    count: usize,
) -> Vec<VecPoly> {
    let amb = m.ring().ambient().clone();
    let mut out = Vec::new();
    for _ in 0..count {
        let target = Degree::int(rng.gen_range(1..=3i64));
        let mut terms = Vec::new();
        for (j, gd) in m.gen_degs().iter().enumerate() {
            let need = target.sub(gd);
            let Some(di) = need.as_integer() else { continue };
            if di < 0 {
                continue;
            }
            let poly = random_homogeneous(rng, &amb, di as u64, 0.5);
            for (mm, c) in poly.terms {
                terms.push(VTerm {
                    comp: j as u32,
                    mono: mm,
                    coeff: c,
                });
            }
        }
        let v = VecPoly::normalize(&amb, terms);
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}
