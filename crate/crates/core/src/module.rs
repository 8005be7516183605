//! Finitely presented graded modules.
//!
//! A module is the cokernel of its presentation: relation rows act on
//! generator columns, `M = R^gens / <rows>`. Entries are homogeneous
//! polynomials over the ambient ring, understood modulo the defining ideal;
//! every Groebner computation augments the rows with `f * e_j` for the ring
//! relations `f`, so membership is always membership over the quotient ring.

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, kernel_mod, GbBuilder, ModuleGb};
use crate::hilbert::{series_from_leads, HilbertSeries};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use crate::vecpoly::VecPoly;
use std::sync::{Arc, OnceLock};

/// Depth with the zero module's convention of infinite depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Finite(usize),
    Infinite,
}

impl Depth {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Depth::Finite(d) => Some(*d),
            Depth::Infinite => None,
        }
    }

    pub fn at_least(&self, n: usize) -> bool {
        match self {
            Depth::Finite(d) => *d >= n,
            Depth::Infinite => true,
        }
    }
}

impl std::fmt::Display for Depth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Depth::Finite(d) => write!(f, "{d}"),
            Depth::Infinite => write!(f, "infinity"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GradedModule {
    ring: Arc<GradedRing>,
    gen_degs: Vec<Degree>,
    rows: Vec<VecPoly>,
    row_degs: Vec<Degree>,
    gb: OnceLock<Arc<ModuleGb>>,
    hs: OnceLock<HilbertSeries>,
}

impl PartialEq for GradedModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.gen_degs == other.gen_degs
            && self.rows == other.rows
    }
}

impl GradedModule {
    pub fn new(
        ring: Arc<GradedRing>,
        gen_degs: Vec<Degree>,
        rows: Vec<VecPoly>,
    ) -> Result<Self> {
        let ngens = gen_degs.len() as u32;
        let mut kept = Vec::new();
        let mut row_degs = Vec::new();
        for v in rows {
            if v.is_zero() {
                continue;
            }
            if v.max_comp().unwrap_or(0) >= ngens {
                return Err(Error::IndexOutOfRange(
                    "relation references a missing generator".into(),
                ));
            }
            if !v.is_homogeneous(ring.ambient(), &gen_degs) {
                return Err(Error::Inhomogeneous(v.format(ring.ambient())));
            }
            let d = v.degree(ring.ambient(), &gen_degs).unwrap();
            kept.push(v);
            row_degs.push(d);
        }
        Ok(GradedModule {
            ring,
            gen_degs,
            rows: kept,
            row_degs,
            gb: OnceLock::new(),
            hs: OnceLock::new(),
        })
    }

    /// Free module with the given generator degrees.
    pub fn free(ring: Arc<GradedRing>, gen_degs: Vec<Degree>) -> Self {
        GradedModule::new(ring, gen_degs, Vec::new()).expect("free module")
    }

    pub fn zero_module(ring: Arc<GradedRing>) -> Self {
        GradedModule::free(ring, Vec::new())
    }

    /// The ring as a module over itself.
    pub fn ring_module(ring: Arc<GradedRing>) -> Self {
        GradedModule::free(ring, vec![Degree::zero()])
    }

    /// Residue field `R/m` as a module.
    pub fn residue_field(ring: Arc<GradedRing>) -> Self {
        let rows = (0..ring.nvars())
            .map(|i| VecPoly::from_poly(0, &ring.ambient().var(i)))
            .collect();
        GradedModule::new(ring, vec![Degree::zero()], rows).expect("residue field")
    }

    /// Submodule of `R` generated by homogeneous ideal generators.
    pub fn from_ideal(ring: Arc<GradedRing>, gens: &[Polynomial]) -> Result<Self> {
        let mut degs = Vec::new();
        let mut phi = Vec::new();
        for g in gens {
            let g = ring.nf_poly(g);
            if g.is_zero() {
                return Err(Error::Unsupported(
                    "ideal generator is zero in the ring".into(),
                ));
            }
            let d = ring
                .ambient()
                .homogeneous_degree(&g)?
                .expect("nonzero generator");
            degs.push(Degree::int(d as i64));
            phi.push(VecPoly::from_poly(0, &g));
        }
        let modulo: Vec<VecPoly> = ring
            .relations()
            .iter()
            .map(|f| VecPoly::from_poly(0, f))
            .collect();
        let rows = kernel_mod(ring.ambient(), &phi, &modulo, 1);
        GradedModule::new(ring, degs, rows)
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn ngens(&self) -> usize {
        self.gen_degs.len()
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn gen_degs(&self) -> &[Degree] {
        &self.gen_degs
    }

    pub fn row_degs(&self) -> &[Degree] {
        &self.row_degs
    }

    pub fn rows(&self) -> &[VecPoly] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        self.rows[i].component(j as u32)
    }

    /// Presentation rows plus `f * e_j` for every ring relation `f`: the
    /// full relation module over the ambient polynomial ring.
    pub fn aug_rows(&self) -> Vec<VecPoly> {
        let mut out = self.rows.clone();
        for f in self.ring.relations() {
            for j in 0..self.ngens() {
                out.push(VecPoly::from_poly(j as u32, f));
            }
        }
        out
    }

    /// Groebner basis of the augmented row module, cached.
    pub fn gb(&self) -> &ModuleGb {
        self.gb
            .get_or_init(|| Arc::new(buchberger(self.ring.ambient(), &self.aug_rows())))
    }

    /// Normal form of a vector in the generator free module.
    pub fn nf(&self, v: &VecPoly) -> VecPoly {
        self.gb().nf(self.ring.ambient(), v)
    }

    pub fn hilbert_series(&self) -> &HilbertSeries {
        self.hs.get_or_init(|| {
            let leads = self.gb().lead_monomials(self.ngens() as u32);
            series_from_leads(self.ring.ambient(), &self.gen_degs, &leads)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.ngens() == 0 || self.hilbert_series().is_zero()
    }

    /// Krull dimension (error on the zero module).
    pub fn dimension(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        Ok(self.hilbert_series().dimension())
    }

    /// Length when finite, `None` otherwise.
    pub fn length(&self) -> Option<u64> {
        self.hilbert_series().finite_length()
    }

    pub fn direct_sum(&self, other: &GradedModule) -> Result<GradedModule> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gen_degs = self.gen_degs.clone();
        gen_degs.extend_from_slice(&other.gen_degs);
        let shift = self.ngens() as u32;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|v| v.shift_comps(shift)));
        GradedModule::new(self.ring.clone(), gen_degs, rows)
    }

    /// Twist all degrees by a constant.
    pub fn shifted(&self, by: &Degree) -> GradedModule {
        let gen_degs = self.gen_degs.iter().map(|d| d.add(by)).collect();
        GradedModule::new(self.ring.clone(), gen_degs, self.rows.clone())
            .expect("shift preserves homogeneity")
    }

    /// Reduce every entry modulo the defining ideal.
    pub fn reduce_rows_mod_ideal(&self) -> GradedModule {
        if self.ring.is_polynomial_ring() {
            return self.clone();
        }
        let rows = self
            .rows
            .iter()
            .map(|v| self.nf_row_mod_ideal(v))
            .collect();
        GradedModule::new(self.ring.clone(), self.gen_degs.clone(), rows)
            .expect("reduction preserves homogeneity")
    }

    fn nf_row_mod_ideal(&self, v: &VecPoly) -> VecPoly {
        let amb = self.ring.ambient();
        let comps: Vec<(u32, Polynomial)> = v
            .components_used()
            .into_iter()
            .map(|c| (c, self.ring.nf_poly(&v.component(c))))
            .collect();
        VecPoly::from_components(amb, &comps)
    }

    /// The submodule of `self` generated by vectors in the generator free
    /// module. Returns the submodule as a module (generators in the given
    /// order, normal-formed) together with the inclusion rows.
    pub fn submodule(&self, gens: &[VecPoly]) -> Result<(GradedModule, Vec<VecPoly>)> {
        let amb = self.ring.ambient();
        let mut incl = Vec::new();
        let mut degs = Vec::new();
        for g in gens {
            let gnf = self.nf(g);
            if gnf.is_zero() {
                continue;
            }
            if !gnf.is_homogeneous(amb, &self.gen_degs) {
                return Err(Error::Inhomogeneous(gnf.format(amb)));
            }
            degs.push(gnf.degree(amb, &self.gen_degs).unwrap());
            incl.push(gnf);
        }
        let rows = kernel_mod(amb, &incl, &self.aug_rows(), self.ngens() as u32);
        let module = GradedModule::new(self.ring.clone(), degs, rows)?;
        Ok((module, incl))
    }

    /// Quotient of `self` by the submodule generated by the given vectors.
    pub fn quotient(&self, extra_rows: &[VecPoly]) -> Result<GradedModule> {
        let mut rows = self.rows.clone();
        rows.extend_from_slice(extra_rows);
        GradedModule::new(self.ring.clone(), self.gen_degs.clone(), rows)
    }

    /// Minimal presentation: prune unit entries (Gaussian elimination over
    /// the field), then keep a minimal generating set of the relation rows.
    pub fn minimal_presentation(&self) -> MinimalPresentation {
        let amb = self.ring.ambient();
        let field = amb.field();
        let mut gen_degs = self.gen_degs.clone();
        let mut rows: Vec<VecPoly> = self
            .rows
            .iter()
            .map(|v| self.nf_row_mod_ideal(v))
            .filter(|v| !v.is_zero())
            .collect();
        // original generator -> expression over current generators
        let mut expr: Vec<VecPoly> = (0..self.ngens())
            .map(|j| VecPoly::unit(j as u32))
            .collect();
        // surviving original index per current generator
        let mut sources: Vec<usize> = (0..self.ngens()).collect();

        // phase 1: eliminate degree-zero (constant) entries
        loop {
            let mut found = None;
            'scan: for (i, rv) in rows.iter().enumerate() {
                for t in &rv.terms {
                    if t.mono.is_one() {
                        found = Some((i, t.comp, t.coeff));
                        break 'scan;
                    }
                }
            }
            let Some((i, j, c)) = found else { break };
            let pivot_row = rows.remove(i);
            let cinv = field.inv(c);
            // e_j = -c^{-1} * (pivot minus its j-entry)
            let rest = VecPoly {
                terms: pivot_row
                    .terms
                    .iter()
                    .filter(|t| t.comp != j)
                    .copied()
                    .collect(),
            };
            let subst = rest.scale(amb, field.neg(cinv));
            let substitute = |v: &VecPoly| -> VecPoly {
                let part = v.component(j);
                let without: VecPoly = VecPoly {
                    terms: v.terms.iter().filter(|t| t.comp != j).copied().collect(),
                };
                let res = if part.is_zero() {
                    without
                } else {
                    without.add(amb, &subst.mul_poly(amb, &part))
                };
                // drop the generator index
                VecPoly {
                    terms: res
                        .terms
                        .into_iter()
                        .map(|mut t| {
                            debug_assert_ne!(t.comp, j);
                            if t.comp > j {
                                t.comp -= 1;
                            }
                            t
                        })
                        .collect(),
                }
            };
            rows = rows
                .iter()
                .map(|v| self.reduce_entries(&substitute(v)))
                .filter(|v| !v.is_zero())
                .collect();
            expr = expr.iter().map(&substitute).collect();
            gen_degs.remove(j as usize);
            sources.remove(j as usize);
        }

        // phase 2: minimal generating set of the relation module, seeded with
        // the implicit ideal rows
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by(|&a, &b| {
            let da = rows[a].degree(amb, &gen_degs).unwrap();
            let db = rows[b].degree(amb, &gen_degs).unwrap();
            da.cmp(&db).then_with(|| rows[a].cmp(&rows[b]))
        });
        let mut builder = GbBuilder::new();
        for f in self.ring.relations() {
            for jj in 0..gen_degs.len() {
                builder.add(amb, &VecPoly::from_poly(jj as u32, f));
            }
        }
        builder.close(amb);
        let mut kept_rows = Vec::new();
        for &i in &order {
            if builder.add(amb, &rows[i]) {
                builder.close(amb);
                kept_rows.push(rows[i].clone());
            }
        }

        let module = GradedModule::new(self.ring.clone(), gen_degs, kept_rows)
            .expect("minimal presentation stays valid");
        MinimalPresentation {
            module,
            old_to_new: expr,
            new_gen_sources: sources,
        }
    }

    fn reduce_entries(&self, v: &VecPoly) -> VecPoly {
        if self.ring.is_polynomial_ring() {
            v.clone()
        } else {
            self.nf_row_mod_ideal(v)
        }
    }

    /// Length of the largest finite-length submodule `H^0_m(M)`: iterate the
    /// colon `(N : m)` inside the generator free module until it stabilizes.
    pub fn lambda0(&self) -> u64 {
        if self.ngens() == 0 {
            return 0;
        }
        let amb = self.ring.ambient();
        let base = self.hilbert_series().clone();
        let mut cur_rows = self.aug_rows();
        let mut cur_hs = base.clone();
        loop {
            let mut next_rows = colon_max_ideal(self, &cur_rows);
            next_rows.extend(cur_rows.iter().cloned());
            let gb = buchberger(amb, &next_rows);
            let hs = series_from_leads(
                amb,
                &self.gen_degs,
                &gb.lead_monomials(self.ngens() as u32),
            );
            if hs == cur_hs {
                break;
            }
            cur_rows = next_rows;
            cur_hs = hs;
        }
        base.sub(&cur_hs)
            .finite_length()
            .expect("saturation torsion has finite length")
    }

    /// Generators of the annihilator ideal of the module in the ambient ring
    /// (contains the defining ideal).
    pub fn annihilator(&self) -> Vec<Polynomial> {
        let n = self.ngens();
        if n == 0 {
            return vec![self.ring.ambient().one()];
        }
        let amb = self.ring.ambient();
        let n32 = n as u32;
        // kernel of T -> prod_j M, f -> (f e_j)_j
        let phi = vec![VecPoly {
            terms: (0..n32)
                .map(|j| crate::vecpoly::VTerm {
                    comp: j * n32 + j,
                    mono: Monomial::one(),
                    coeff: 1,
                })
                .collect(),
        }];
        let mut modulo = Vec::new();
        for j in 0..n32 {
            for row in self.aug_rows() {
                modulo.push(row.shift_comps(j * n32));
            }
        }
        let ker = kernel_mod(amb, &phi, &modulo, n32 * n32);
        let mut out: Vec<Polynomial> = ker.iter().map(|v| v.component(0)).collect();
        out.retain(|f| !f.is_zero());
        out
    }

    /// Largest submodule of strictly smaller dimension (the "small" part)
    /// and the corresponding unmixed quotient: `(quotient, kernel)`.
    ///
    /// Computed as the kernel of the biduality map `M -> Hom(Hom(M, Sbar),
    /// Sbar)` over a complete-intersection reduction `Sbar = T/(y)` with `y`
    /// a regular sequence of length `codim M` inside the annihilator.
    pub fn unmixed_quotient(&self) -> Result<(GradedModule, GradedModule)> {
        let t = self.dimension()?;
        let amb = self.ring.ambient();
        let n = amb.nvars();
        let c = n - t;
        let ys: Vec<Polynomial> = if c == 0 {
            Vec::new()
        } else {
            let ann = self.annihilator();
            regular_sequence(self, &ann, c)?
        };
        let y_rows = |ncomps: u32| -> Vec<VecPoly> {
            let mut out = Vec::new();
            for f in &ys {
                for j in 0..ncomps {
                    out.push(VecPoly::from_poly(j, f));
                }
            }
            out
        };
        let aug = self.aug_rows();
        let ngens = self.ngens() as u32;
        let nrows = aug.len() as u32;
        // K = Hom_{Sbar}(M, Sbar) as a kernel inside the dual free module:
        // column vectors of the presentation, modulo (y)
        let cols: Vec<VecPoly> = (0..ngens)
            .map(|j| {
                let comps: Vec<(u32, Polynomial)> = (0..nrows)
                    .map(|i| (i, aug[i as usize].component(j)))
                    .collect();
                VecPoly::from_components(amb, &comps)
            })
            .collect();
        let kgens = kernel_mod(amb, &cols, &y_rows(nrows), nrows);
        // u : M -> Sbar^s has matrix K^T; its kernel is generated by
        // {v : v . K^T = 0 mod (y)}
        let s = kgens.len() as u32;
        let ktcols: Vec<VecPoly> = (0..ngens)
            .map(|j| {
                let comps: Vec<(u32, Polynomial)> = (0..s)
                    .map(|t| (t, kgens[t as usize].component(j)))
                    .collect();
                VecPoly::from_components(amb, &comps)
            })
            .collect();
        let wgens = if s == 0 {
            // no functionals at all: every element is small
            (0..ngens).map(VecPoly::unit).collect()
        } else {
            kernel_mod(amb, &ktcols, &y_rows(s), s)
        };
        let (kernel, incl) = self.submodule(&wgens)?;
        let quotient = self.quotient(&incl)?;
        Ok((quotient, kernel))
    }
}

/// Generators of `(N : m)` inside the generator free module of `m`, where
/// `N` is the module generated by `rows`.
fn colon_max_ideal(module: &GradedModule, rows: &[VecPoly]) -> Vec<VecPoly> {
    let amb = module.ring().ambient();
    let n = module.ngens() as u32;
    let d = amb.nvars() as u32;
    // map F -> F^d, v -> (x_i v)_i ; kernel mod N^(d)
    let phi: Vec<VecPoly> = (0..n)
        .map(|j| {
            let comps: Vec<(u32, Polynomial)> = (0..d)
                .map(|i| (i * n + j, amb.var(i as usize)))
                .collect();
            VecPoly::from_components(amb, &comps)
        })
        .collect();
    let mut modulo = Vec::new();
    for i in 0..d {
        for row in rows {
            modulo.push(row.shift_comps(i * n));
        }
    }
    kernel_mod(amb, &phi, &modulo, n * d)
}

/// Find a homogeneous regular sequence of the given length inside the ideal
/// spanned by `pool` (deterministic sweep: single generators, then padded
/// two-term combinations).
fn regular_sequence(
    module: &GradedModule,
    pool: &[Polynomial],
    len: usize,
) -> Result<Vec<Polynomial>> {
    let amb = module.ring().ambient();
    let n = amb.nvars();
    let mut chosen: Vec<Polynomial> = Vec::new();
    for step in 0..len {
        let target_dim = n - step - 1;
        let mut found = None;
        let try_candidate = |f: &Polynomial| -> bool {
            if f.is_zero() {
                return false;
            }
            let mut gens = chosen.clone();
            gens.push(f.clone());
            let vecs: Vec<VecPoly> = gens.iter().map(|g| VecPoly::from_poly(0, g)).collect();
            let gb = buchberger(amb, &vecs);
            let hs = series_from_leads(amb, &[Degree::zero()], &gb.lead_monomials(1));
            !hs.is_zero() && hs.dimension() == target_dim
        };
        for f in pool {
            if try_candidate(f) {
                found = Some(f.clone());
                break;
            }
        }
        if found.is_none() {
            // two-term combinations padded by monomials to a common degree
            'pairs: for a in 0..pool.len() {
                for b in 0..pool.len() {
                    if a == b {
                        continue;
                    }
                    let da = amb.homogeneous_degree(&pool[a]).ok().flatten();
                    let db = amb.homogeneous_degree(&pool[b]).ok().flatten();
                    let (Some(da), Some(db)) = (da, db) else { continue };
                    if db < da {
                        continue;
                    }
                    let gap = db - da;
                    for m in monomials_of_degree(amb, gap) {
                        for coef in 1..amb.p().min(4) {
                            let cand =
                                amb.add(&pool[b], &amb.mul_term(&pool[a], &m, coef));
                            if try_candidate(&cand) {
                                found = Some(cand);
                                break 'pairs;
                            }
                        }
                    }
                }
            }
        }
        match found {
            Some(f) => chosen.push(f),
            None => {
                return Err(Error::Unsupported(
                    "no regular sequence found in the annihilator".into(),
                ))
            }
        }
    }
    Ok(chosen)
}

/// All monomials of a given weighted degree.
pub fn monomials_of_degree(ring: &crate::poly::PolyRing, deg: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let nv = ring.nvars();
    let weights = ring.weights();
    fn rec(
        weights: &[u32],
        nv: usize,
        var: usize,
        left: u64,
        cur: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if var == nv {
            if left == 0 {
                out.push(*cur);
            }
            return;
        }
        let w = weights[var] as u64;
        let maxe = left / w;
        for e in 0..=maxe {
            cur.e[var] = e as u16;
            rec(weights, nv, var + 1, left - e * w, cur, out);
        }
        cur.e[var] = 0;
    }
    let mut cur = Monomial::one();
    rec(weights, nv, 0, deg, &mut cur, &mut out);
    out
}

/// Result of minimizing a presentation, with generator bookkeeping for
/// composing certificates through the change of generators.
#[derive(Debug, Clone)]
pub struct MinimalPresentation {
    pub module: GradedModule,
    /// Expression of each original generator over the minimal generators.
    pub old_to_new: Vec<VecPoly>,
    /// Original index of each minimal generator.
    pub new_gen_sources: Vec<usize>,
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::poly::PolyRing;

    pub(crate) fn poly_ring(p: u64, vars: &[&str]) -> Arc<GradedRing> {
        GradedRing::polynomial_ring(
            PolyRing::standard(PrimeField::new(p).unwrap(), vars).unwrap(),
        )
    }

    pub(crate) fn cusp_ring() -> Arc<GradedRing> {
        let amb = PolyRing::new(
            PrimeField::new(3).unwrap(),
            vec!["x".into(), "y".into()],
            vec![3, 2],
        )
        .unwrap();
        let f = amb.parse("x^2 - y^3").unwrap();
        GradedRing::new(amb, vec![f]).unwrap()
    }

    #[test]
    fn zero_module_in_disguise() {
        // presentation [[1]] minimizes to zero generators
        let r = poly_ring(3, &["x", "y"]);
        let m = GradedModule::new(
            r.clone(),
            vec![Degree::zero()],
            vec![VecPoly::from_poly(0, &r.ambient().one())],
        )
        .unwrap();
        let mp = m.minimal_presentation();
        assert_eq!(mp.module.ngens(), 0);
        assert!(m.is_zero());
    }

    #[test]
    fn already_minimal_unchanged() {
        let r = poly_ring(3, &["x", "y"]);
        let m = GradedModule::residue_field(r);
        let mp = m.minimal_presentation();
        assert_eq!(mp.module.ngens(), 1);
        assert_eq!(mp.module.nrows(), 2);
    }

    #[test]
    fn redundant_presentation_minimizes() {
        // S + (S/x) presented with 3 generators, one redundant:
        // gens e0,e1,e2 with e2 = x*e0 (relation e2 - x e0), and x*e1 = 0.
        let r = poly_ring(3, &["x", "y"]);
        let amb = r.ambient().clone();
        let rows = vec![
            VecPoly::from_components(
                &amb,
                &[(0, amb.neg(&amb.var(0))), (2, amb.one())],
            ),
            VecPoly::from_components(&amb, &[(1, amb.var(0))]),
        ];
        let m = GradedModule::new(
            r,
            vec![Degree::zero(), Degree::zero(), Degree::int(1)],
            rows,
        )
        .unwrap();
        let mp = m.minimal_presentation();
        assert_eq!(mp.module.ngens(), 2);
        // Hilbert series is preserved by minimization
        assert_eq!(m.hilbert_series(), mp.module.hilbert_series());
    }

    #[test]
    fn dimensions() {
        let r3 = poly_ring(3, &["x", "y", "z"]);
        assert_eq!(
            GradedModule::ring_module(r3.clone()).dimension().unwrap(),
            3
        );
        assert_eq!(
            GradedModule::residue_field(r3.clone()).dimension().unwrap(),
            0
        );
        let z = GradedModule::zero_module(r3);
        assert!(z.dimension().is_err());
        // two-plane ring has dimension 2
        let amb =
            PolyRing::standard(PrimeField::new(3).unwrap(), &["x", "y", "z", "u"]).unwrap();
        let rels: Vec<Polynomial> = ["x*z", "x*u", "y*z", "y*u"]
            .iter()
            .map(|s| amb.parse(s).unwrap())
            .collect();
        let r = GradedRing::new(amb, rels).unwrap();
        assert_eq!(GradedModule::ring_module(r).dimension().unwrap(), 2);
    }

    #[test]
    fn lambda0_values() {
        let r = poly_ring(3, &["x", "y"]);
        let s = GradedModule::ring_module(r.clone());
        assert_eq!(s.lambda0(), 0);
        let k = GradedModule::residue_field(r.clone());
        let sum = s.direct_sum(&k).unwrap();
        assert_eq!(sum.lambda0(), 1);
        assert_eq!(k.lambda0(), 1);
    }

    #[test]
    fn lambda0_additive_on_sums() {
        let r = poly_ring(3, &["x", "y"]);
        let k = GradedModule::residue_field(r.clone());
        // T/(x^2, y) has length 2
        let amb = r.ambient().clone();
        let m2 = GradedModule::new(
            r.clone(),
            vec![Degree::zero()],
            vec![
                VecPoly::from_poly(0, &amb.parse("x^2").unwrap()),
                VecPoly::from_poly(0, &amb.parse("y").unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(m2.lambda0(), 2);
        let sum = m2.direct_sum(&k).unwrap();
        assert_eq!(sum.lambda0(), 3);
    }

    #[test]
    fn ideal_module_cusp_maximal_ideal() {
        let r = cusp_ring();
        let amb = r.ambient().clone();
        let m = GradedModule::from_ideal(
            r,
            &[amb.parse("x").unwrap(), amb.parse("y").unwrap()],
        )
        .unwrap();
        assert_eq!(m.ngens(), 2);
        assert_eq!(m.dimension().unwrap(), 1);
        // the maximal ideal of the cusp is not free: relations exist
        assert!(m.nrows() > 0);
    }

    #[test]
    fn unmixed_quotient_cases() {
        // unmixed input: kernel is zero
        let r = poly_ring(3, &["x", "y"]);
        let s = GradedModule::ring_module(r.clone());
        let (q, ker) = s.unmixed_quotient().unwrap();
        assert!(ker.is_zero());
        assert_eq!(q.hilbert_series(), s.hilbert_series());
        // S + k: kernel is the finite-length part
        let k = GradedModule::residue_field(r.clone());
        let sum = s.direct_sum(&k).unwrap();
        let (q2, ker2) = sum.unmixed_quotient().unwrap();
        assert_eq!(ker2.length(), Some(1));
        assert_eq!(q2.hilbert_series(), s.hilbert_series());
        // idempotence
        let (_, ker3) = q2.unmixed_quotient().unwrap();
        assert!(ker3.is_zero());
    }

    #[test]
    fn unmixed_two_planes() {
        let amb =
            PolyRing::standard(PrimeField::new(3).unwrap(), &["x", "y", "z", "u"]).unwrap();
        let rels: Vec<Polynomial> = ["x*z", "x*u", "y*z", "y*u"]
            .iter()
            .map(|s| amb.parse(s).unwrap())
            .collect();
        let r = GradedRing::new(amb, rels).unwrap();
        let m = GradedModule::ring_module(r);
        let (_, ker) = m.unmixed_quotient().unwrap();
        assert!(ker.is_zero(), "two planes are unmixed");
    }

    #[test]
    fn annihilator_of_quotient() {
        let r = poly_ring(3, &["x", "y"]);
        let amb = r.ambient().clone();
        let m = GradedModule::new(
            r,
            vec![Degree::zero()],
            vec![VecPoly::from_poly(0, &amb.parse("x").unwrap())],
        )
        .unwrap();
        let ann = m.annihilator();
        let gb = buchberger(&amb, &ann.iter().map(|f| VecPoly::from_poly(0, f)).collect::<Vec<_>>());
        assert!(gb.is_member(&amb, &VecPoly::from_poly(0, &amb.parse("x").unwrap())));
        assert!(!gb.is_member(&amb, &VecPoly::from_poly(0, &amb.parse("y").unwrap())));
    }
}
