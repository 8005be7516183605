//! Krull-Schmidt decomposition via endomorphism idempotents, direct-summand
//! tests with split certificates, F-splitness, and Fedder's criterion.

use crate::degree::Degree;
use crate::endo::{
    analyze_end, eval_poly_hom, idempotent_image, newton_idempotent, EndOutcome,
};
use crate::error::{Error, Result};
use crate::frobenius::pushforward;
use crate::hom::{
    compose, hom_degree_zero, identity_hom, is_isomorphic, nf_rows, solve_hom_combination,
};
use crate::arith::FpMatrix;
use crate::module::GradedModule;
use crate::monomial::Monomial;
use crate::ring::GradedRing;
use crate::vecpoly::{apply_rows, VecPoly};

/// One direct summand with split maps relative to the decomposed module.
#[derive(Debug, Clone)]
pub struct Piece {
    pub module: GradedModule,
    /// Rows: piece generators expressed in the ambient module's generators.
    pub inclusion: Vec<VecPoly>,
    /// Rows: ambient module generators expressed in piece generators.
    pub projection: Vec<VecPoly>,
    /// Whether the endomorphism algebra was certified local.
    pub certified: bool,
}

/// A full decomposition into (certified) indecomposables.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
    pub undecided: bool,
}

/// Isomorphism classes in a decomposition, up to degree shift.
#[derive(Debug, Clone)]
pub struct ComponentClass {
    /// Shift-normalized representative (smallest generator degree zero).
    pub representative: GradedModule,
    pub multiplicity: usize,
    pub piece_indices: Vec<usize>,
    /// Twist of each occurrence relative to the representative.
    pub shifts: Vec<Degree>,
}

impl Decomposition {
    /// Hilbert-series additivity plus the full orthogonality relations of the
    /// split maps: the pieces assemble back to the module.
    pub fn verify(&self, m: &GradedModule) -> bool {
        let amb = m.ring().ambient();
        // sum of inclusion . projection composites is the identity on M
        let mut total = vec![VecPoly::zero(); m.ngens()];
        for piece in &self.pieces {
            for (j, row) in piece.projection.iter().enumerate() {
                let through = apply_rows(amb, row, &piece.inclusion);
                total[j] = total[j].add(amb, &through);
            }
        }
        let id = nf_rows(&identity_hom(m), m);
        for (j, row) in total.iter().enumerate() {
            if m.nf(row) != id[j] {
                return false;
            }
        }
        // pairwise orthogonality and self-identity
        for (s, ps) in self.pieces.iter().enumerate() {
            for (t, pt) in self.pieces.iter().enumerate() {
                for (g, incl_row) in ps.inclusion.iter().enumerate() {
                    let through = pt.module.nf(&apply_rows(amb, incl_row, &pt.projection));
                    let expect = if s == t {
                        pt.module.nf(&VecPoly::unit(g as u32))
                    } else {
                        VecPoly::zero()
                    };
                    if through != expect {
                        return false;
                    }
                }
            }
        }
        // Hilbert series add up
        let mut hs = crate::hilbert::HilbertSeries::zero(amb.weights().to_vec());
        for piece in &self.pieces {
            hs = hs.add(piece.module.hilbert_series());
        }
        &hs == m.hilbert_series()
    }

    /// Group the pieces into isomorphism classes up to shift.
    pub fn classes(&self) -> Result<Vec<ComponentClass>> {
        let mut out: Vec<ComponentClass> = Vec::new();
        for (idx, piece) in self.pieces.iter().enumerate() {
            let min_deg = piece
                .module
                .gen_degs()
                .iter()
                .min()
                .copied()
                .unwrap_or(Degree::zero());
            let normalized = piece.module.shifted(&min_deg.neg());
            let mut placed = false;
            for class in out.iter_mut() {
                if class.representative.ngens() != normalized.ngens() {
                    continue;
                }
                if class.representative.hilbert_series() != normalized.hilbert_series() {
                    continue;
                }
                if is_isomorphic(&normalized, &class.representative, false)?.is_some() {
                    class.multiplicity += 1;
                    class.piece_indices.push(idx);
                    class.shifts.push(min_deg);
                    placed = true;
                    break;
                }
            }
            if !placed {
                out.push(ComponentClass {
                    representative: normalized,
                    multiplicity: 1,
                    piece_indices: vec![idx],
                    shifts: vec![min_deg],
                });
            }
        }
        // deterministic order: by generator count, then series
        out.sort_by(|a, b| {
            a.representative
                .ngens()
                .cmp(&b.representative.ngens())
                .then_with(|| {
                    format!("{:?}", a.representative.hilbert_series().numer)
                        .cmp(&format!("{:?}", b.representative.hilbert_series().numer))
                })
        });
        Ok(out)
    }

    /// Total free rank: multiplicity of rank-one free pieces.
    pub fn free_rank(&self) -> usize {
        self.pieces
            .iter()
            .filter(|p| p.module.ngens() == 1 && p.module.nrows() == 0)
            .count()
    }
}

/// Full Krull-Schmidt decomposition with verified split certificates.
pub fn decompose(m: &GradedModule, seed: u64) -> Result<Decomposition> {
    let amb = m.ring().ambient().clone();
    let mp = m.minimal_presentation();
    let start_incl: Vec<VecPoly> = mp
        .new_gen_sources
        .iter()
        .map(|&src| VecPoly::unit(src as u32))
        .collect();
    let start_proj: Vec<VecPoly> = mp.old_to_new.clone();
    let mut work: Vec<(GradedModule, Vec<VecPoly>, Vec<VecPoly>)> =
        vec![(mp.module, start_incl, start_proj)];
    let mut pieces = Vec::new();
    let mut undecided = false;

    while let Some((mc, incl, proj)) = work.pop() {
        if mc.ngens() == 0 {
            continue;
        }
        if mc.nrows() == 0 {
            // free module: one rank-one piece per generator
            for t in 0..mc.ngens() {
                let piece_mod =
                    GradedModule::free(mc.ring().clone(), vec![mc.gen_degs()[t]]);
                let inclusion = vec![m.nf(&incl[t])];
                let projection: Vec<VecPoly> = proj
                    .iter()
                    .map(|row| {
                        let p = row.component(t as u32);
                        VecPoly::from_poly(0, &p)
                    })
                    .collect();
                pieces.push(Piece {
                    module: piece_mod,
                    inclusion,
                    projection,
                    certified: true,
                });
            }
            continue;
        }
        let hom = hom_degree_zero(&mc, &mc, &Degree::zero())?;
        match analyze_end(&mc, &hom, seed) {
            EndOutcome::Local => {
                pieces.push(Piece {
                    module: mc,
                    inclusion: incl,
                    projection: proj,
                    certified: true,
                });
            }
            EndOutcome::Undecided(_) => {
                undecided = true;
                pieces.push(Piece {
                    module: mc,
                    inclusion: incl,
                    projection: proj,
                    certified: false,
                });
            }
            EndOutcome::Split { element_rows, poly } => {
                let field = *amb.field();
                let e0 = eval_poly_hom(&field, &poly, &element_rows, &mc);
                let Some(e) = newton_idempotent(&e0, &mc) else {
                    undecided = true;
                    pieces.push(Piece {
                        module: mc,
                        inclusion: incl,
                        projection: proj,
                        certified: false,
                    });
                    continue;
                };
                // complement idempotent 1 - e
                let id = nf_rows(&identity_hom(&mc), &mc);
                let minus_one = field.reduce_i64(-1);
                let comp: Vec<VecPoly> = (0..mc.ngens())
                    .map(|j| {
                        mc.nf(&id[j].add_scaled(&amb, minus_one, &Monomial::one(), &e[j]))
                    })
                    .collect();
                for part in [e, comp] {
                    let (img, incl_c, proj_c) = idempotent_image(&mc, &part)?;
                    let sub_mp = img.minimal_presentation();
                    let sub = sub_mp.module;
                    if sub.ngens() == 0 {
                        continue;
                    }
                    // transport certificates out to the original module
                    let incl_new: Vec<VecPoly> = sub_mp
                        .new_gen_sources
                        .iter()
                        .map(|&src| {
                            let in_mc = &incl_c[src];
                            m.nf(&apply_rows(&amb, in_mc, &incl))
                        })
                        .collect();
                    let proj_new: Vec<VecPoly> = proj
                        .iter()
                        .map(|row_in_mc| {
                            let in_img = apply_rows(&amb, row_in_mc, &proj_c);
                            sub.nf(&apply_rows(&amb, &in_img, &sub_mp.old_to_new))
                        })
                        .collect();
                    work.push((sub, incl_new, proj_new));
                }
            }
        }
    }
    let d = Decomposition { pieces, undecided };
    debug_assert!(d.verify(m), "decomposition failed verification");
    Ok(d)
}

/// A verified split realization of `Q(shift)` inside `M`.
#[derive(Debug, Clone)]
pub struct SummandCertificate {
    pub shift: Degree,
    /// Rows: `Q` generators into `M` generators.
    pub injection: Vec<VecPoly>,
    /// Rows: `M` generators onto `Q` generators; retraction . injection = id.
    pub retraction: Vec<VecPoly>,
}

fn const_matrix_of_rows(
    field: &crate::arith::PrimeField,
    rows: &[VecPoly],
    ncols: usize,
) -> FpMatrix {
    let mut m = FpMatrix::zero(rows.len(), ncols);
    for (j, row) in rows.iter().enumerate() {
        for t in &row.terms {
            if t.mono.is_one() {
                let old = m.get(j, t.comp as usize);
                m.set(j, t.comp as usize, field.add(old, t.coeff));
            }
        }
    }
    m
}

/// Test whether the (indecomposable, minimally presented) module `qs` splits
/// off `mm`; returns the split maps on success.
fn summand_indecomposable(
    qs: &GradedModule,
    mm: &GradedModule,
    end_q: &crate::hom::HomSpace,
) -> Result<Option<(Vec<VecPoly>, Vec<VecPoly>)>> {
    let field = *qs.ring().ambient().field();
    let fwd = hom_degree_zero(qs, mm, &Degree::zero())?;
    if fwd.dim() == 0 {
        return Ok(None);
    }
    let bwd = hom_degree_zero(mm, qs, &Degree::zero())?;
    if bwd.dim() == 0 {
        return Ok(None);
    }
    for phi in &fwd.basis {
        for psi in &bwd.basis {
            let c = compose(phi, psi, qs);
            let cbar = const_matrix_of_rows(&field, &c, qs.ngens());
            if cbar.inverse(&field).is_none() {
                continue;
            }
            // invert c inside End(Q): solve c . x = id
            let composites: Vec<Vec<VecPoly>> = end_q
                .basis
                .iter()
                .map(|eps| compose(&c, eps, qs))
                .collect();
            let id_q = nf_rows(&identity_hom(qs), qs);
            let Some(y) = solve_hom_combination(&field, &composites, &id_q) else {
                continue;
            };
            let cinv = end_q.element(qs, &y);
            let retraction = compose(psi, &cinv, qs);
            let check = compose(phi, &retraction, qs);
            if check == id_q {
                return Ok(Some((phi.clone(), retraction)));
            }
        }
    }
    Ok(None)
}

/// Decide whether `q` is a direct summand of `m` (up to degree shift) and
/// produce a verified certificate. A decomposable `q` is decomposed first and
/// its components are split off one at a time.
pub fn is_direct_summand(
    q: &GradedModule,
    m: &GradedModule,
    seed: u64,
) -> Result<Option<SummandCertificate>> {
    if q.ring() != m.ring() {
        return Err(Error::RingMismatch);
    }
    let amb = q.ring().ambient().clone();
    let qp = q.minimal_presentation();
    let qq = &qp.module;
    if qq.ngens() == 0 {
        return Ok(Some(SummandCertificate {
            shift: Degree::zero(),
            injection: vec![VecPoly::zero(); q.ngens()],
            retraction: vec![VecPoly::zero(); m.ngens()],
        }));
    }
    let dq = decompose(qq, seed)?;
    if dq.undecided {
        return Err(Error::Undecided(
            "could not decompose the candidate summand".into(),
        ));
    }
    let mp = m.minimal_presentation();
    // current remainder, with maps to and from the ORIGINAL m generators
    let mut cur = mp.module.clone();
    let mut cur_incl: Vec<VecPoly> = mp
        .new_gen_sources
        .iter()
        .map(|&s| VecPoly::unit(s as u32))
        .collect();
    let mut cur_proj: Vec<VecPoly> = mp.old_to_new.clone();
    // per piece of q: injection into m, retraction from m
    let mut inj_parts: Vec<Vec<VecPoly>> = Vec::new();
    let mut ret_parts: Vec<Vec<VecPoly>> = Vec::new();
    let mut shift_seen: Option<Degree> = None;
    for piece in &dq.pieces {
        let end_q = hom_degree_zero(&piece.module, &piece.module, &Degree::zero())?;
        // candidate shifts: make some generator degrees line up
        let mut shifts: Vec<Degree> = Vec::new();
        for md in cur.gen_degs() {
            for qd in piece.module.gen_degs() {
                let s = md.sub(qd);
                if !shifts.contains(&s) {
                    shifts.push(s);
                }
            }
        }
        shifts.sort();
        let mut found = false;
        for s in shifts {
            let qs = piece.module.shifted(&s);
            if let Some((inj, ret)) = summand_indecomposable(&qs, &cur, &end_q)? {
                // lift to original m coordinates
                let inj_m: Vec<VecPoly> = inj
                    .iter()
                    .map(|row| m.nf(&apply_rows(&amb, row, &cur_incl)))
                    .collect();
                let ret_m: Vec<VecPoly> = (0..m.ngens())
                    .map(|j| {
                        let to_cur = &cur_proj[j];
                        qs.nf(&apply_rows(&amb, to_cur, &ret))
                    })
                    .collect();
                inj_parts.push(inj_m);
                ret_parts.push(ret_m);
                shift_seen.get_or_insert(s);
                // peel: remainder is the image of 1 - inj.ret on cur
                let field = *amb.field();
                let id = nf_rows(&identity_hom(&cur), &cur);
                let minus_one = field.reduce_i64(-1);
                let e_rows: Vec<VecPoly> = (0..cur.ngens())
                    .map(|j| {
                        let through = apply_rows(&amb, &ret[j], &inj);
                        cur.nf(&id[j].add_scaled(&amb, minus_one, &Monomial::one(), &through))
                    })
                    .collect();
                let (rem, rem_incl, rem_proj) = idempotent_image(&cur, &e_rows)?;
                let rem_mp = rem.minimal_presentation();
                let new_incl: Vec<VecPoly> = rem_mp
                    .new_gen_sources
                    .iter()
                    .map(|&src| m.nf(&apply_rows(&amb, &rem_incl[src], &cur_incl)))
                    .collect();
                let new_proj: Vec<VecPoly> = (0..m.ngens())
                    .map(|j| {
                        let a = apply_rows(&amb, &cur_proj[j], &rem_proj);
                        rem_mp.module.nf(&apply_rows(&amb, &a, &rem_mp.old_to_new))
                    })
                    .collect();
                cur = rem_mp.module;
                cur_incl = new_incl;
                cur_proj = new_proj;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    // assemble block maps from q (original generators) into m
    let ngq: usize = q.ngens();
    let mut injection = vec![VecPoly::zero(); ngq];
    let mut retraction = vec![VecPoly::zero(); m.ngens()];
    // piece p generators sit inside qq; transport via the q min-pres maps
    let mut comp_base = 0u32;
    for (pi, piece) in dq.pieces.iter().enumerate() {
        // injection of original q gens: old_to_new -> piece projection -> m
        // retraction of m onto the block of piece generators
        for (j, row) in ret_parts[pi].iter().enumerate() {
            retraction[j] = retraction[j].add(&amb, &row.shift_comps(comp_base));
        }
        let _ = piece;
        comp_base += dq.pieces[pi].module.ngens() as u32;
    }
    for (g, expr) in qp.old_to_new.iter().enumerate() {
        // expr: over qq generators; map through piece projections into blocks
        let mut acc = VecPoly::zero();
        let mut base = 0u32;
        for (pi, piece) in dq.pieces.iter().enumerate() {
            let to_piece: Vec<VecPoly> = piece.projection.clone();
            let in_piece = apply_rows(&amb, expr, &to_piece);
            let through = apply_rows(&amb, &in_piece, &inj_parts[pi]);
            acc = acc.add(&amb, &through);
            base += piece.module.ngens() as u32;
        }
        let _ = base;
        injection[g] = m.nf(&acc);
    }
    // final verification on the block form: retraction . injection must be
    // the identity of q (checked through q's relations)
    let composite = compose(&injection, &retraction, {
        // block target: direct sum of the pieces equals q up to iso; verify
        // through q itself by mapping blocks back
        // simpler: verify injection is split by checking in m-free coords
        m
    });
    let _ = composite;
    let cert = SummandCertificate {
        shift: shift_seen.unwrap_or(Degree::zero()),
        injection,
        retraction,
    };
    // verify: retraction . injection is an automorphism of q
    let back: Vec<VecPoly> = cert
        .injection
        .iter()
        .map(|row| apply_rows(&amb, row, &cert.retraction))
        .collect();
    // back: q gens -> block coordinates; map blocks back into q gens
    let mut block_to_q: Vec<VecPoly> = Vec::new();
    for piece in &dq.pieces {
        for t in 0..piece.module.ngens() {
            // piece gen t -> qq gens -> original q gens
            let in_qq = &piece.inclusion[t];
            let remapped = VecPoly {
                terms: in_qq
                    .terms
                    .iter()
                    .map(|tm| crate::vecpoly::VTerm {
                        comp: qp.new_gen_sources[tm.comp as usize] as u32,
                        ..*tm
                    })
                    .collect(),
            };
            block_to_q.push(VecPoly::normalize(&amb, remapped.terms));
        }
    }
    let round: Vec<VecPoly> = back
        .iter()
        .map(|row| q.nf(&apply_rows(&amb, row, &block_to_q)))
        .collect();
    let field = *amb.field();
    let rbar = const_matrix_of_rows(&field, &round, q.ngens());
    // graded Nakayama: invertible constant part means automorphism
    let id_ok = if q.ngens() == 0 {
        true
    } else {
        rbar.inverse(&field).is_some()
    };
    if !id_ok {
        return Err(Error::Undecided(
            "summand certificate failed verification".into(),
        ));
    }
    Ok(Some(cert))
}

/// Is `q` a direct summand of its own Frobenius pushforward?
pub fn is_fsplit(q: &GradedModule, step: u64, seed: u64) -> Result<bool> {
    let pushed = pushforward(q, step)?;
    Ok(is_direct_summand(q, &pushed, seed)?.is_some())
}

/// Fedder's criterion for a hypersurface `T/(f)`: F-pure exactly when
/// `f^(p-1)` does not lie in the Frobenius power of the maximal ideal, i.e.
/// some monomial of `f^(p-1)` has every exponent below `p`.
pub fn fedder_check(ring: &GradedRing) -> Result<bool> {
    if ring.relations().is_empty() {
        return Ok(true);
    }
    if ring.relations().len() != 1 {
        return Err(Error::Unsupported(
            "Fedder test requires a hypersurface (one defining relation)".into(),
        ));
    }
    let amb = ring.ambient();
    let p = ring.p();
    let fp = amb.pow(&ring.relations()[0], p - 1);
    let nv = amb.nvars();
    Ok(fp.terms.iter().any(|(mono, _)| {
        (0..nv).all(|v| (mono.exponent(v) as u64) < p)
    }))
}
