//! Degree-zero homomorphism spaces between graded modules, composition, and
//! isomorphism testing with certificates.
//!
//! A homomorphism `M -> N` is stored as its rows: row `j` is the image of the
//! `j`-th generator of `M` as a vector over the generators of `N`, kept in
//! normal form with respect to the relation module of `N`, so equality of
//! maps is equality of rows. The basis of `Hom_0(M, N(shift))` comes from a
//! linear solve: unknown coefficients sit on standard monomials of the right
//! degrees, and every relation row of `M` must map into the relations of `N`.

use crate::arith::FpMatrix;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::module::{monomials_of_degree, GradedModule};
use crate::monomial::Monomial;
use crate::vecpoly::{apply_rows, VecPoly, VTerm};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// A basis of the degree-preserving homomorphisms `M -> N(shift)`.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub shift: Degree,
    /// Each element: one row per source generator, in normal form.
    pub basis: Vec<Vec<VecPoly>>,
    /// Constant coefficient matrices (source gens x target gens): the induced
    /// action on generator covers modulo the maximal ideal.
    pub const_parts: Vec<FpMatrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Linear combination of the basis.
    pub fn element(&self, module_n: &GradedModule, coeffs: &[u64]) -> Vec<VecPoly> {
        let amb = module_n.ring().ambient();
        let nsrc = self.basis.first().map(|b| b.len()).unwrap_or(0);
        let mut rows = vec![VecPoly::zero(); nsrc];
        for (t, c) in coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            for (j, row) in self.basis[t].iter().enumerate() {
                rows[j] = rows[j].add_scaled(amb, *c, &Monomial::one(), row);
            }
        }
        rows
    }

    pub fn const_part_of(&self, field: &crate::arith::PrimeField, coeffs: &[u64]) -> FpMatrix {
        let (r, c) = self
            .const_parts
            .first()
            .map(|m| (m.rows, m.cols))
            .unwrap_or((0, 0));
        let mut acc = FpMatrix::zero(r, c);
        for (t, co) in coeffs.iter().enumerate() {
            if *co != 0 {
                acc = acc.add(field, &self.const_parts[t].scale(field, *co));
            }
        }
        acc
    }
}

/// Compute a basis of `Hom_0(M, N(shift))`.
pub fn hom_degree_zero(
    m: &GradedModule,
    n: &GradedModule,
    shift: &Degree,
) -> Result<HomSpace> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = m.ring().clone();
    let amb = ring.ambient();
    let field = amb.field();
    let ngens_m = m.ngens();
    let ngens_n = n.ngens();
    let gb_n = n.gb();
    let leads = gb_n.lead_monomials(ngens_n as u32);

    // unknowns: standard monomials of the right degree per entry (j, l)
    struct Unknown {
        src: usize,
        tgt: u32,
        mono: Monomial,
    }
    let mut unknowns: Vec<Unknown> = Vec::new();
    for j in 0..ngens_m {
        for l in 0..ngens_n {
            let delta = m.gen_degs()[j].sub(&n.gen_degs()[l]).sub(shift);
            let Some(di) = delta.as_integer() else { continue };
            if di < 0 {
                continue;
            }
            for mono in monomials_of_degree(amb, di as u64) {
                if leads[l].iter().any(|lm| lm.divides(&mono)) {
                    continue;
                }
                unknowns.push(Unknown {
                    src: j,
                    tgt: l as u32,
                    mono,
                });
            }
        }
    }
    if unknowns.is_empty() {
        return Ok(HomSpace {
            shift: *shift,
            basis: Vec::new(),
            const_parts: Vec::new(),
        });
    }

    // constraints: every relation row of M lands in the relations of N
    let mut coord_index: HashMap<(usize, u32, Monomial), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, u64)> = Vec::new(); // (coord, unknown, coeff)
    for (ri, row) in m.rows().iter().enumerate() {
        for (u, unk) in unknowns.iter().enumerate() {
            let coef = row.component(unk.src as u32);
            if coef.is_zero() {
                continue;
            }
            let moved = VecPoly::from_poly(unk.tgt, &coef).mul_term(amb, &unk.mono, 1);
            let nf = gb_n.nf(amb, &moved);
            for t in &nf.terms {
                let key = (ri, t.comp, t.mono);
                let next = coord_index.len();
                let idx = *coord_index.entry(key).or_insert(next);
                entries.push((idx, u, t.coeff));
            }
        }
    }
    let nrows = coord_index.len();
    let mut mat = FpMatrix::zero(nrows, unknowns.len());
    for (r, c, v) in entries {
        let old = mat.get(r, c);
        mat.set(r, c, field.add(old, v));
    }
    let null = mat.nullspace(field);

    let mut basis = Vec::with_capacity(null.len());
    let mut const_parts = Vec::with_capacity(null.len());
    for v in null {
        let mut rows = vec![VecPoly::zero(); ngens_m];
        let mut cm = FpMatrix::zero(ngens_m, ngens_n);
        let mut terms_per_src: Vec<Vec<VTerm>> = vec![Vec::new(); ngens_m];
        for (u, unk) in unknowns.iter().enumerate() {
            let c = v[u];
            if c == 0 {
                continue;
            }
            terms_per_src[unk.src].push(VTerm {
                comp: unk.tgt,
                mono: unk.mono,
                coeff: c,
            });
            if unk.mono.is_one() {
                let old = cm.get(unk.src, unk.tgt as usize);
                cm.set(unk.src, unk.tgt as usize, field.add(old, c));
            }
        }
        for (j, terms) in terms_per_src.into_iter().enumerate() {
            rows[j] = VecPoly::normalize(amb, terms);
        }
        basis.push(rows);
        const_parts.push(cm);
    }
    Ok(HomSpace {
        shift: *shift,
        basis,
        const_parts,
    })
}

/// Identity endomorphism rows.
pub fn identity_hom(m: &GradedModule) -> Vec<VecPoly> {
    (0..m.ngens()).map(|j| VecPoly::unit(j as u32)).collect()
}

/// Composite `g . f` of `f: M -> N` and `g: N -> P`, rows in normal form
/// with respect to `P`.
pub fn compose(
    f_rows: &[VecPoly],
    g_rows: &[VecPoly],
    target: &GradedModule,
) -> Vec<VecPoly> {
    let amb = target.ring().ambient();
    f_rows
        .iter()
        .map(|r| target.nf(&apply_rows(amb, r, g_rows)))
        .collect()
}

/// Normal-form the rows of a map into `target`.
pub fn nf_rows(rows: &[VecPoly], target: &GradedModule) -> Vec<VecPoly> {
    rows.iter().map(|r| target.nf(r)).collect()
}

/// Solve `sum_t y_t h_t = target` coordinate-wise (all rows already in normal
/// form against the same module).
pub fn solve_hom_combination(
    field: &crate::arith::PrimeField,
    candidates: &[Vec<VecPoly>],
    target: &[VecPoly],
) -> Option<Vec<u64>> {
    let mut coord_index: HashMap<(usize, u32, Monomial), usize> = HashMap::new();
    let mut collect = |rows: &[VecPoly], sink: &mut Vec<(usize, u64)>| {
        for (j, row) in rows.iter().enumerate() {
            for t in &row.terms {
                let key = (j, t.comp, t.mono);
                let next = coord_index.len();
                let idx = *coord_index.entry(key).or_insert(next);
                sink.push((idx, t.coeff));
            }
        }
    };
    let mut cand_coords: Vec<Vec<(usize, u64)>> = Vec::new();
    for c in candidates {
        let mut v = Vec::new();
        collect(c, &mut v);
        cand_coords.push(v);
    }
    let mut tgt_coords = Vec::new();
    collect(target, &mut tgt_coords);
    let dim = coord_index.len();
    // solve A y = b with A columns = candidates
    let mut mat = FpMatrix::zero(dim, candidates.len() + 1);
    for (u, coords) in cand_coords.iter().enumerate() {
        for (idx, c) in coords {
            let old = mat.get(*idx, u);
            mat.set(*idx, u, field.add(old, *c));
        }
    }
    for (idx, c) in tgt_coords {
        let old = mat.get(idx, candidates.len());
        mat.set(idx, candidates.len(), field.add(old, c));
    }
    let pivots = mat.rref(field);
    // inconsistent if a pivot lands in the last column
    if pivots.contains(&candidates.len()) {
        return None;
    }
    let mut y = vec![0u64; candidates.len()];
    for (r, &pc) in pivots.iter().enumerate() {
        y[pc] = mat.get(r, candidates.len());
    }
    Some(y)
}

/// An isomorphism certificate: the twist and mutually inverse maps in the
/// original generator coordinates.
#[derive(Debug, Clone)]
pub struct Isomorphism {
    pub shift: Degree,
    pub forward: Vec<VecPoly>,
    pub backward: Vec<VecPoly>,
}

/// Decide `M ~= N(shift)` for some twist when `allow_shift`, or on the nose
/// otherwise. Uses minimal presentations, generator-degree and Hilbert-series
/// filters, then hunts for a map with invertible constant part (graded
/// Nakayama turns that into an isomorphism).
pub fn is_isomorphic(m: &GradedModule, n: &GradedModule, allow_shift: bool) -> Result<Option<Isomorphism>> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    let mp = m.minimal_presentation();
    let np = n.minimal_presentation();
    let mm = &mp.module;
    let nn = &np.module;
    if mm.ngens() != nn.ngens() {
        return Ok(None);
    }
    if mm.ngens() == 0 {
        return Ok(Some(Isomorphism {
            shift: Degree::zero(),
            forward: vec![VecPoly::zero(); m.ngens()],
            backward: vec![VecPoly::zero(); n.ngens()],
        }));
    }
    let mut md: Vec<Degree> = mm.gen_degs().to_vec();
    let mut nd: Vec<Degree> = nn.gen_degs().to_vec();
    md.sort();
    nd.sort();
    let shift = md[0].sub(&nd[0]);
    if !allow_shift && !shift.is_zero() {
        return Ok(None);
    }
    for (a, b) in md.iter().zip(nd.iter()) {
        if *a != b.add(&shift) {
            return Ok(None);
        }
    }
    if mm.hilbert_series() != &nn.hilbert_series().shift(&shift) {
        return Ok(None);
    }
    let hom = hom_degree_zero(mm, nn, &shift)?;
    if hom.dim() == 0 {
        return Ok(None);
    }
    let field = *m.ring().ambient().field();
    let Some(coeffs) = find_invertible_const_part(&field, &hom) else {
        return Ok(None);
    };
    let fwd_min = hom.element(nn, &coeffs);
    // inverse: solve g . f = id over the backward hom space
    let back = hom_degree_zero(nn, mm, &shift.neg())?;
    let composites: Vec<Vec<VecPoly>> = back
        .basis
        .iter()
        .map(|g| compose(&fwd_min, g, mm))
        .collect();
    let id_m = nf_rows(&identity_hom(mm), mm);
    let Some(ys) = solve_hom_combination(&field, &composites, &id_m) else {
        return Ok(None);
    };
    let bwd_min = back.element(mm, &ys);
    // verify both composites
    let check1 = compose(&fwd_min, &bwd_min, mm);
    if check1 != id_m {
        return Ok(None);
    }
    let id_n = nf_rows(&identity_hom(nn), nn);
    let check2 = compose(&bwd_min, &fwd_min, nn);
    if check2 != id_n {
        return Ok(None);
    }
    // lift certificates to the original generator coordinates
    let fwd = lift_map(&mp, &np, &fwd_min, n);
    let bwd = lift_map(&np, &mp, &bwd_min, m);
    Ok(Some(Isomorphism {
        shift,
        forward: fwd,
        backward: bwd,
    }))
}

/// Transport a map between minimal presentations back to the original
/// generators on both sides.
fn lift_map(
    src: &crate::module::MinimalPresentation,
    tgt: &crate::module::MinimalPresentation,
    rows_min: &[VecPoly],
    target_orig: &GradedModule,
) -> Vec<VecPoly> {
    let amb = target_orig.ring().ambient();
    // minimal target generator t corresponds to original index sources[t]
    let remap: Vec<VecPoly> = rows_min
        .iter()
        .map(|r| {
            VecPoly {
                terms: r
                    .terms
                    .iter()
                    .map(|t| VTerm {
                        comp: tgt.new_gen_sources[t.comp as usize] as u32,
                        ..*t
                    })
                    .collect::<Vec<_>>(),
            }
        })
        .map(|r| VecPoly::normalize(amb, r.terms))
        .collect();
    src.old_to_new
        .iter()
        .map(|expr| target_orig.nf(&apply_rows(amb, expr, &remap)))
        .collect()
}

/// Search the hom space for an element whose constant part is invertible:
/// single basis elements, pair sums, then seeded random combinations; for a
/// tiny space, exhaustive sweep.
pub fn find_invertible_const_part(
    field: &crate::arith::PrimeField,
    hom: &HomSpace,
) -> Option<Vec<u64>> {
    let r = hom.dim();
    if r == 0 {
        return None;
    }
    let k = hom.const_parts[0].rows;
    if k != hom.const_parts[0].cols {
        return None;
    }
    let try_coeffs = |coeffs: &[u64]| -> bool {
        hom.const_part_of(field, coeffs).inverse(field).is_some()
    };
    for i in 0..r {
        let mut c = vec![0u64; r];
        c[i] = 1;
        if try_coeffs(&c) {
            return Some(c);
        }
    }
    for i in 0..r {
        for j in (i + 1)..r {
            for s in 1..field.p().min(4) {
                let mut c = vec![0u64; r];
                c[i] = 1;
                c[j] = s;
                if try_coeffs(&c) {
                    return Some(c);
                }
            }
        }
    }
    // exhaustive for tiny spaces
    let total = (field.p() as u128).checked_pow(r as u32);
    if let Some(total) = total {
        if total <= (1 << 16) {
            let mut c = vec![0u64; r];
            loop {
                let mut i = 0;
                loop {
                    if i == r {
                        return None;
                    }
                    c[i] += 1;
                    if c[i] < field.p() {
                        break;
                    }
                    c[i] = 0;
                    i += 1;
                }
                if try_coeffs(&c) {
                    return Some(c);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..4000 {
        let c: Vec<u64> = (0..r).map(|_| rng.gen_range(0..field.p())).collect();
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        if try_coeffs(&c) {
            return Some(c);
        }
    }
    None
}
