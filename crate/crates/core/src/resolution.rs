//! Minimal graded free resolutions, projective dimension, depth via the
//! Auslander-Buchsbaum formula, and Ext modules into twists of the ambient
//! ring.

use crate::degree::Degree;
use crate::error::Result;
use crate::groebner::{kernel_mod, syzygies, GbBuilder};
use crate::module::{Depth, GradedModule};
use crate::poly::{PolyRing, Polynomial};
use crate::vecpoly::{apply_rows, VecPoly};

/// A chain of free modules `F_0 <- F_1 <- ...`; `diffs[k]` holds the rows of
/// the map `F_{k+1} -> F_k` (row `i` is the image of the `i`-th basis
/// vector). Minimal: no entry has degree zero.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub gen_degs: Vec<Vec<Degree>>,
    pub diffs: Vec<Vec<VecPoly>>,
    pub truncated: bool,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.diffs.len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.gen_degs.iter().map(|d| d.len()).collect()
    }

    /// Graded Betti numbers: for each homological index the multiset of
    /// degrees, sorted.
    pub fn betti(&self) -> Vec<Vec<Degree>> {
        self.gen_degs
            .iter()
            .map(|d| {
                let mut v = d.clone();
                v.sort();
                v
            })
            .collect()
    }

    /// Projective dimension; `None` when truncated before completion.
    pub fn pd(&self) -> Option<usize> {
        if self.truncated {
            None
        } else {
            Some(self.diffs.len())
        }
    }

    /// Check that consecutive differentials compose to zero (exactly over the
    /// polynomial ring; modulo the ideal over a quotient).
    pub fn is_complex(&self, ring: &crate::ring::GradedRing) -> bool {
        let amb = ring.ambient();
        for k in 0..self.diffs.len().saturating_sub(1) {
            for row in &self.diffs[k + 1] {
                let composed = apply_rows(amb, row, &self.diffs[k]);
                let reduced = if ring.is_polynomial_ring() {
                    composed
                } else {
                    let comps: Vec<(u32, Polynomial)> = composed
                        .components_used()
                        .into_iter()
                        .map(|c| (c, ring.nf_poly(&composed.component(c))))
                        .collect();
                    VecPoly::from_components(amb, &comps)
                };
                if !reduced.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Minimal generators of the module generated by `rows`, over the quotient
/// ring when `relations` is nonempty (the ideal rows seed the basis).
fn minimize_rows(
    amb: &PolyRing,
    rows: Vec<VecPoly>,
    gen_degs: &[Degree],
    relations: &[Polynomial],
    ncomps: u32,
) -> Vec<VecPoly> {
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by(|&a, &b| {
        let da = rows[a].degree(amb, gen_degs).unwrap();
        let db = rows[b].degree(amb, gen_degs).unwrap();
        da.cmp(&db).then_with(|| rows[a].cmp(&rows[b]))
    });
    let mut builder = GbBuilder::new();
    for f in relations {
        for j in 0..ncomps {
            builder.add(amb, &VecPoly::from_poly(j, f));
        }
    }
    builder.close(amb);
    let mut kept = Vec::new();
    for &i in &order {
        if builder.add(amb, &rows[i]) {
            builder.close(amb);
            kept.push(rows[i].clone());
        }
    }
    kept
}

/// Minimal free resolution. With `over_ambient` the module is resolved as a
/// module over the ambient polynomial ring (restriction of scalars), which
/// always terminates within `nvars` steps; otherwise over its own ring,
/// truncating at `max_len`.
pub fn minimal_resolution(
    module: &GradedModule,
    over_ambient: bool,
    max_len: usize,
) -> FreeResolution {
    let ring = module.ring().clone();
    let amb = ring.ambient();
    let mp = module.minimal_presentation();
    let m0 = &mp.module;
    let relations: &[Polynomial] = if over_ambient { &[] } else { ring.relations() };

    let mut gen_degs: Vec<Vec<Degree>> = vec![m0.gen_degs().to_vec()];
    let mut diffs: Vec<Vec<VecPoly>> = Vec::new();
    // first differential: minimal generators of the relation module
    let mut first = m0.rows().to_vec();
    if over_ambient {
        for f in ring.relations() {
            for j in 0..m0.ngens() {
                first.push(VecPoly::from_poly(j as u32, f));
            }
        }
    }
    let first = minimize_rows(amb, first, m0.gen_degs(), relations, m0.ngens() as u32);
    if first.is_empty() {
        return FreeResolution {
            gen_degs,
            diffs,
            truncated: false,
        };
    }
    if max_len == 0 {
        return FreeResolution {
            gen_degs,
            diffs,
            truncated: true,
        };
    }
    let degs: Vec<Degree> = first
        .iter()
        .map(|v| v.degree(amb, &gen_degs[0]).unwrap())
        .collect();
    gen_degs.push(degs);
    diffs.push(first);

    loop {
        let last = diffs.last().unwrap();
        let ncomps = gen_degs[diffs.len() - 1].len() as u32;
        let syz = next_kernel(amb, last, relations, ncomps);
        let cur_degs = gen_degs.last().unwrap().clone();
        let syz = minimize_rows(amb, syz, &cur_degs, relations, cur_degs.len() as u32);
        if syz.is_empty() {
            return FreeResolution {
                gen_degs,
                diffs,
                truncated: false,
            };
        }
        if diffs.len() >= max_len {
            return FreeResolution {
                gen_degs,
                diffs,
                truncated: true,
            };
        }
        let degs: Vec<Degree> = syz
            .iter()
            .map(|v| v.degree(amb, &cur_degs).unwrap())
            .collect();
        gen_degs.push(degs);
        diffs.push(syz);
    }
}

fn next_kernel(
    amb: &PolyRing,
    rows: &[VecPoly],
    relations: &[Polynomial],
    ncomps: u32,
) -> Vec<VecPoly> {
    if relations.is_empty() {
        syzygies(amb, rows, ncomps)
    } else {
        let mut modulo = Vec::new();
        for f in relations {
            for j in 0..ncomps {
                modulo.push(VecPoly::from_poly(j, f));
            }
        }
        kernel_mod(amb, rows, &modulo, ncomps)
    }
}

/// Minimal free resolution over the module's own ring, truncated at
/// `max_len` steps (the `truncated` flag reports whether more would follow).
pub fn free_resolution(module: &GradedModule, max_len: usize) -> FreeResolution {
    minimal_resolution(module, false, max_len)
}

/// Depth with respect to the irrelevant maximal ideal, via the
/// Auslander-Buchsbaum formula over the ambient polynomial ring.
pub fn depth(module: &GradedModule) -> Depth {
    if module.is_zero() {
        return Depth::Infinite;
    }
    let n = module.ring().nvars();
    let res = minimal_resolution(module, true, n + 1);
    let pd = res.pd().expect("ambient resolutions terminate");
    Depth::Finite(n - pd)
}

/// `Ext^i_T(M, T)` shifted by `twist`, presented minimally (an `R`-module
/// when `M` is one). Vanishes for `i` above the ambient dimension.
pub fn ext_module(i: usize, module: &GradedModule, twist: &Degree) -> Result<GradedModule> {
    let ring = module.ring().clone();
    let amb = ring.ambient();
    let n = ring.nvars();
    if module.is_zero() || i > n {
        return Ok(GradedModule::zero_module(ring));
    }
    let res = minimal_resolution(module, true, n + 1);
    let pd = res.pd().expect("ambient resolutions terminate");
    if i > pd {
        return Ok(GradedModule::zero_module(ring));
    }
    // dual basis degrees of F_i^dual
    let dual_degs: Vec<Degree> = res.gen_degs[i].iter().map(|g| twist.sub(g)).collect();
    let rank_i = res.gen_degs[i].len() as u32;
    // rows of the transposed differential F_i^dual -> F_{i+1}^dual
    let tr_rows_next: Vec<VecPoly> = if i == pd {
        Vec::new()
    } else {
        transpose_rows(amb, &res.diffs[i], rank_i, res.gen_degs[i + 1].len() as u32)
    };
    // kernel of the map to F_{i+1}^dual
    let kernel: Vec<VecPoly> = if i == pd {
        (0..rank_i).map(VecPoly::unit).collect()
    } else {
        syzygies(amb, &tr_rows_next, res.gen_degs[i + 1].len() as u32)
    };
    // image of F_{i-1}^dual: rows of the transposed previous differential
    let image: Vec<VecPoly> = if i == 0 {
        Vec::new()
    } else {
        transpose_rows(
            amb,
            &res.diffs[i - 1],
            res.gen_degs[i - 1].len() as u32,
            rank_i,
        )
    };
    let gens: Vec<Degree> = kernel
        .iter()
        .map(|v| v.degree(amb, &dual_degs).unwrap())
        .collect();
    let rels = kernel_mod(amb, &kernel, &image, rank_i);
    let raw = GradedModule::new(ring, gens, rels)?;
    Ok(raw.minimal_presentation().module)
}

/// Rows of the transpose: input rows present a map `F_a -> F_b` (a rows over
/// b comps); output is `b` rows over `a` comps.
fn transpose_rows(amb: &PolyRing, rows: &[VecPoly], nrows_out: u32, _ncols: u32) -> Vec<VecPoly> {
    let a = rows.len() as u32;
    let _ = a;
    (0..nrows_out)
        .map(|j| {
            let comps: Vec<(u32, Polynomial)> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| (i as u32, r.component(j)))
                .collect();
            VecPoly::from_components(amb, &comps)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::poly::PolyRing;
    use crate::ring::GradedRing;
    use std::sync::Arc;

    fn poly_ring(p: u64, vars: &[&str]) -> Arc<GradedRing> {
        GradedRing::polynomial_ring(
            PolyRing::standard(PrimeField::new(p).unwrap(), vars).unwrap(),
        )
    }

    #[test]
    fn koszul_resolution_ranks() {
        // T/(x,y,z): ranks 1, 3, 3, 1
        let r = poly_ring(3, &["x", "y", "z"]);
        let k = GradedModule::residue_field(r.clone());
        let res = free_resolution(&k, 10);
        assert_eq!(res.ranks(), vec![1, 3, 3, 1]);
        assert!(!res.truncated);
        assert!(res.is_complex(&r));
        // alternating Hilbert series sum reproduces the module's series
        let mut acc = crate::hilbert::HilbertSeries::zero(r.ambient().weights().to_vec());
        for (idx, degs) in res.gen_degs.iter().enumerate() {
            for d in degs {
                let mut one = std::collections::BTreeMap::new();
                one.insert(*d, if idx % 2 == 0 { 1i64 } else { -1 });
                acc = acc.add(&crate::hilbert::HilbertSeries::from_numer(
                    one,
                    r.ambient().weights().to_vec(),
                ));
            }
        }
        assert_eq!(&acc, k.hilbert_series());
    }

    #[test]
    fn free_module_has_length_zero_resolution() {
        let r = poly_ring(3, &["x", "y"]);
        let f = GradedModule::free(r, vec![Degree::zero(), Degree::int(2)]);
        let res = free_resolution(&f, 10);
        assert_eq!(res.length(), 0);
        assert_eq!(res.ranks(), vec![2]);
    }

    #[test]
    fn maximal_ideal_pd_two() {
        // (x,y,z) in T: pd 2, ranks 3,3,1, depth 1
        let r = poly_ring(3, &["x", "y", "z"]);
        let amb = r.ambient().clone();
        let m = GradedModule::from_ideal(
            r.clone(),
            &[
                amb.parse("x").unwrap(),
                amb.parse("y").unwrap(),
                amb.parse("z").unwrap(),
            ],
        )
        .unwrap();
        let res = free_resolution(&m, 10);
        assert_eq!(res.ranks(), vec![3, 3, 1]);
        assert_eq!(depth(&m), Depth::Finite(1));
    }

    #[test]
    fn depth_values() {
        let r = poly_ring(3, &["x", "y", "z"]);
        let t = GradedModule::ring_module(r.clone());
        assert_eq!(depth(&t), Depth::Finite(3));
        assert_eq!(depth(&GradedModule::zero_module(r.clone())), Depth::Infinite);
        assert_eq!(depth(&GradedModule::residue_field(r)), Depth::Finite(0));
        // two-plane ring: depth 1 (the classic non-CM witness)
        let amb =
            PolyRing::standard(PrimeField::new(3).unwrap(), &["x", "y", "z", "u"]).unwrap();
        let rels: Vec<_> = ["x*z", "x*u", "y*z", "y*u"]
            .iter()
            .map(|s| amb.parse(s).unwrap())
            .collect();
        let rq = GradedRing::new(amb, rels).unwrap();
        let m = GradedModule::ring_module(rq);
        assert_eq!(depth(&m), Depth::Finite(1));
    }

    #[test]
    fn depth_lambda0_consistency() {
        let r = poly_ring(3, &["x", "y"]);
        let s = GradedModule::ring_module(r.clone());
        let k = GradedModule::residue_field(r.clone());
        let sum = s.direct_sum(&k).unwrap();
        assert!(depth(&s).at_least(1) && s.lambda0() == 0);
        assert!(!depth(&sum).at_least(1) && sum.lambda0() > 0);
    }

    #[test]
    fn ext_basics() {
        let r = poly_ring(3, &["x", "y"]);
        let t = GradedModule::ring_module(r.clone());
        // Ext^0(T, T) = T
        let e0 = ext_module(0, &t, &Degree::zero()).unwrap();
        assert_eq!(e0.ngens(), 1);
        assert_eq!(e0.nrows(), 0);
        assert!(ext_module(1, &t, &Degree::zero()).unwrap().is_zero());
        // Ext^1(T/x, T) = (T/x)(1): one generator of degree -1... with our
        // twist convention the dual generator sits in degree -1 + shift
        let tx = GradedModule::new(
            r.clone(),
            vec![Degree::zero()],
            vec![VecPoly::from_poly(0, &r.ambient().parse("x").unwrap())],
        )
        .unwrap();
        let e1 = ext_module(1, &tx, &Degree::zero()).unwrap();
        assert_eq!(e1.ngens(), 1);
        assert_eq!(e1.gen_degs()[0], Degree::int(-1));
        let hs_shifted = e1.hilbert_series().shift(&Degree::int(1));
        assert_eq!(&hs_shifted, tx.hilbert_series());
        assert!(ext_module(0, &tx, &Degree::zero()).unwrap().is_zero());
    }

    #[test]
    fn ext_of_residue_field_is_shifted_dual_koszul() {
        // over T = F_3[x,y,z]: Ext^i(k, T) = 0 for i < 3, k(w) at i = 3
        let r = poly_ring(3, &["x", "y", "z"]);
        let k = GradedModule::residue_field(r.clone());
        for i in 0..3 {
            assert!(ext_module(i, &k, &Degree::zero()).unwrap().is_zero());
        }
        let e3 = ext_module(3, &k, &Degree::zero()).unwrap();
        assert_eq!(e3.length(), Some(1));
        // generator degree: -(sum of weights) relative to zero twist
        assert_eq!(e3.gen_degs()[0], Degree::int(-3));
    }
}
