//! Endomorphism-algebra analysis: finding idempotents and certifying that an
//! algebra is local.
//!
//! Everything runs inside the finite-dimensional image of `End_0(M)` acting
//! on generator covers modulo the maximal ideal (the "constant part"). That
//! map is an algebra homomorphism whose kernel consists of maps with all
//! entries of positive degree; such a matrix strictly drops generator
//! degrees, so the kernel is a nil ideal and idempotents as well as locality
//! transfer faithfully. Idempotents found downstairs lift upstairs by the
//! `e -> 3e^2 - 2e^3` iteration, whose defect squares each round.

use crate::arith::{factor_univariate, min_poly_matrix, FpMatrix, FpPoly, PrimeField};
use crate::hom::{compose, nf_rows, HomSpace};
use crate::module::GradedModule;
use crate::monomial::Monomial;
use crate::vecpoly::VecPoly;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Outcome of analyzing an endomorphism algebra.
#[derive(Debug, Clone)]
pub enum EndOutcome {
    /// A nontrivial idempotent was found: apply `poly` to the endomorphism
    /// with the given rows, then lift to an exact idempotent.
    Split {
        element_rows: Vec<VecPoly>,
        poly: FpPoly,
    },
    /// Certified local: the constant-part algebra is a nilpotent ideal
    /// extension of a finite field.
    Local,
    /// Budget exhausted without a certificate either way.
    Undecided(String),
}

/// Incremental echelon basis of flattened matrices.
struct LinSpace {
    width: usize,
    rows: Vec<(Vec<u64>, usize)>,
}

impl LinSpace {
    fn new(width: usize) -> Self {
        LinSpace {
            width,
            rows: Vec::new(),
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, f: &PrimeField, v: &[u64]) -> Vec<u64> {
        let mut v = v.to_vec();
        for (row, piv) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for i in 0..self.width {
                    v[i] = f.sub(v[i], f.mul(c, row[i]));
                }
            }
        }
        v
    }

    /// Insert if independent; returns whether the space grew.
    fn insert(&mut self, f: &PrimeField, v: &[u64]) -> bool {
        let v = self.reduce(f, v);
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(piv) => {
                let inv = f.inv(v[piv]);
                let norm: Vec<u64> = v.iter().map(|&x| f.mul(x, inv)).collect();
                self.rows.push((norm, piv));
                self.rows.sort_by_key(|(_, p)| *p);
                true
            }
        }
    }

    fn contains(&self, f: &PrimeField, v: &[u64]) -> bool {
        self.reduce(f, v).iter().all(|&x| x == 0)
    }
}

fn flat(m: &FpMatrix) -> Vec<u64> {
    m.a.iter().map(|&x| x as u64).collect()
}

/// Evaluate a univariate polynomial on a matrix.
fn eval_poly_matrix(f: &PrimeField, p: &FpPoly, a: &FpMatrix) -> FpMatrix {
    let k = a.rows;
    let mut acc = FpMatrix::zero(k, k);
    for &c in p.c.iter().rev() {
        acc = acc.mul(f, a);
        if c != 0 {
            acc = acc.add(f, &FpMatrix::identity(k).scale(f, c));
        }
    }
    acc
}

/// Evaluate a univariate polynomial on an endomorphism given by rows.
pub fn eval_poly_hom(
    _f: &PrimeField,
    p: &FpPoly,
    rows: &[VecPoly],
    module: &GradedModule,
) -> Vec<VecPoly> {
    let amb = module.ring().ambient();
    let n = rows.len();
    let zero: Vec<VecPoly> = vec![VecPoly::zero(); n];
    let id: Vec<VecPoly> = (0..n).map(|j| VecPoly::unit(j as u32)).collect();
    let mut acc = zero;
    for &c in p.c.iter().rev() {
        acc = compose(&acc, rows, module);
        if c != 0 {
            for j in 0..n {
                acc[j] = acc[j].add_scaled(amb, c, &Monomial::one(), &id[j]);
                acc[j] = module.nf(&acc[j]);
            }
        }
    }
    acc
}

/// Lift an approximate idempotent (defect nilpotent) to an exact one.
pub fn newton_idempotent(
    rows: &[VecPoly],
    module: &GradedModule,
) -> Option<Vec<VecPoly>> {
    let amb = module.ring().ambient();
    let field = amb.field();
    let mut e = nf_rows(rows, module);
    for _ in 0..64 {
        let e2 = compose(&e, &e, module);
        if e2 == e {
            return Some(e);
        }
        let e3 = compose(&e2, &e, module);
        // 3 e^2 - 2 e^3
        let three = 3 % field.p();
        let minus_two = field.reduce_i64(-2);
        let mut next = Vec::with_capacity(e.len());
        for j in 0..e.len() {
            let a = e2[j].scale(amb, three);
            let b = e3[j].scale(amb, minus_two);
            next.push(module.nf(&a.add(amb, &b)));
        }
        e = next;
    }
    None
}

/// Splitting data extracted from a minimal polynomial with at least two
/// coprime factor blocks: a polynomial `P` with `P(a)` a nontrivial
/// idempotent of `F_p[a]`.
fn idempotent_poly(f: &PrimeField, mu: &FpPoly) -> Option<FpPoly> {
    let facs = factor_univariate(f, mu);
    if facs.len() < 2 {
        return None;
    }
    // first block vs the rest
    let mut fpow = FpPoly::one();
    for _ in 0..facs[0].1 {
        fpow = fpow.mul(f, &facs[0].0);
    }
    let g = mu.div_exact(f, &fpow);
    let (one, u, _v) = fpow.xgcd(f, &g);
    debug_assert_eq!(one.deg(), 0);
    Some(u.mul(f, &fpow).rem(f, mu))
}

/// Analyze the endomorphism algebra presented by a hom-space basis of
/// `End_0(M)`. Either produces splitting data, certifies locality, or gives
/// up with an explicit message.
pub fn analyze_end(
    module: &GradedModule,
    hom: &HomSpace,
    seed: u64,
) -> EndOutcome {
    let field = *module.ring().ambient().field();
    let r = hom.dim();
    let k = module.ngens();
    if r <= 1 || k <= 1 {
        // spanned by the identity up to nil kernel
        return EndOutcome::Local;
    }
    let width = k * k;
    let mut span = LinSpace::new(width);
    let mut span_basis: Vec<FpMatrix> = Vec::new();
    for cp in &hom.const_parts {
        if span.insert(&field, &flat(cp)) {
            span_basis.push(cp.clone());
        }
    }
    if span.dim() <= 1 {
        return EndOutcome::Local;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nil_seeds: Vec<FpMatrix> = Vec::new();

    // candidate sweep: basis singles, pair sums, random combinations
    let mut candidates: Vec<Vec<u64>> = Vec::new();
    for i in 0..r {
        let mut c = vec![0u64; r];
        c[i] = 1;
        candidates.push(c);
    }
    for i in 0..r.min(12) {
        for j in (i + 1)..r.min(12) {
            let mut c = vec![0u64; r];
            c[i] = 1;
            c[j] = 1;
            candidates.push(c);
        }
    }
    for _ in 0..(40 + 4 * r) {
        candidates.push((0..r).map(|_| rng.gen_range(0..field.p())).collect());
    }
    for coeffs in &candidates {
        let a_bar = hom.const_part_of(&field, coeffs);
        if a_bar.is_zero() {
            continue;
        }
        let mu = min_poly_matrix(&field, &a_bar);
        if let Some(p) = idempotent_poly(&field, &mu) {
            return EndOutcome::Split {
                element_rows: hom.element(module, coeffs),
                poly: p,
            };
        }
        // single factor: harvest a nilpotent part
        let facs = factor_univariate(&field, &mu);
        let (irr, mult) = &facs[0];
        if *mult >= 2 || irr == &FpPoly::x() {
            let nil = if irr == &FpPoly::x() && *mult >= 1 {
                a_bar.clone()
            } else {
                eval_poly_matrix(&field, irr, &a_bar)
            };
            if !nil.is_zero() {
                nil_seeds.push(nil);
            }
        }
    }

    // locality certification loop
    for _round in 0..=width {
        // two-sided ideal closure of the harvested nilpotents
        let mut nspace = LinSpace::new(width);
        let mut nbasis: Vec<FpMatrix> = Vec::new();
        let mut queue: Vec<FpMatrix> = Vec::new();
        for s in &nil_seeds {
            if nspace.insert(&field, &flat(s)) {
                nbasis.push(s.clone());
                queue.push(s.clone());
            }
        }
        while let Some(x) = queue.pop() {
            for b in &span_basis {
                for y in [b.mul(&field, &x), x.mul(&field, b)] {
                    if nspace.insert(&field, &flat(&y)) {
                        nbasis.push(y.clone());
                        queue.push(y);
                    }
                }
            }
        }
        // the ideal must consist of nilpotents; sample for splitters
        for x in nbasis.iter() {
            let mu = min_poly_matrix(&field, x);
            if let Some(p) = idempotent_poly(&field, &mu) {
                if let Some(coeffs) = hom_coeffs_for_matrix(&field, hom, x) {
                    return EndOutcome::Split {
                        element_rows: hom.element(module, &coeffs),
                        poly: p,
                    };
                }
                return EndOutcome::Undecided(
                    "split matrix not expressible over the hom basis".into(),
                );
            }
        }
        // ideal powers must reach zero
        if !space_nilpotent(&field, &nbasis, width) {
            return EndOutcome::Undecided("nilpotent closure did not terminate".into());
        }
        // quotient Q = span / N
        let mut qreps: Vec<FpMatrix> = Vec::new();
        let mut qspace = LinSpace::new(width);
        for s in &nbasis {
            qspace.insert(&field, &flat(s));
        }
        for b in &span_basis {
            if qspace.insert(&field, &flat(b)) {
                qreps.push(b.clone());
            }
        }
        let qdim = qreps.len();
        if qdim == 0 {
            return EndOutcome::Undecided("identity collapsed into the radical".into());
        }
        // coordinates in Q: reduce mod N, solve over representatives
        let nred = |x: &FpMatrix| -> Vec<u64> {
            let mut sp = LinSpace::new(width);
            for s in &nbasis {
                sp.insert(&field, &flat(s));
            }
            sp.reduce(&field, &flat(x))
        };
        let mut qcoord_space = LinSpace::new(width);
        let mut qcoord_reps: Vec<Vec<u64>> = Vec::new();
        for qrep in &qreps {
            let v = nred(qrep);
            qcoord_space.insert(&field, &v);
            qcoord_reps.push(v);
        }
        let project = |x: &FpMatrix| -> Option<Vec<u64>> {
            // express nred(x) over qcoord_reps
            let target = nred(x);
            let mut mat = FpMatrix::zero(width, qdim + 1);
            for (col, rep) in qcoord_reps.iter().enumerate() {
                for i in 0..width {
                    mat.set(i, col, rep[i]);
                }
            }
            for i in 0..width {
                mat.set(i, qdim, target[i]);
            }
            let pivots = mat.rref(&field);
            if pivots.contains(&qdim) {
                return None;
            }
            let mut y = vec![0u64; qdim];
            for (row, &pc) in pivots.iter().enumerate() {
                y[pc] = mat.get(row, qdim);
            }
            Some(y)
        };
        // commutativity of Q
        let mut commutative = true;
        'comm: for i in 0..qdim {
            for j in (i + 1)..qdim {
                let comm = qreps[i]
                    .mul(&field, &qreps[j])
                    .sub(&field, &qreps[j].mul(&field, &qreps[i]));
                let reduced = nred(&comm);
                if reduced.iter().any(|&x| x != 0) {
                    commutative = false;
                    break 'comm;
                }
            }
        }
        // regular representation of Q for minimal polynomials
        let qmul = |x: &FpMatrix| -> Option<FpMatrix> {
            // matrix of left multiplication by x on Q
            let mut m = FpMatrix::zero(qdim, qdim);
            for (j, qrep) in qreps.iter().enumerate() {
                let prod = x.mul(&field, qrep);
                let y = project(&prod)?;
                for (i, &c) in y.iter().enumerate() {
                    m.set(j, i, c);
                }
            }
            Some(m)
        };
        // sample Q elements
        let mut sample_coeffs: Vec<Vec<u64>> = Vec::new();
        for i in 0..qdim {
            let mut c = vec![0u64; qdim];
            c[i] = 1;
            sample_coeffs.push(c);
        }
        for i in 0..qdim.min(10) {
            for j in (i + 1)..qdim.min(10) {
                let mut c = vec![0u64; qdim];
                c[i] = 1;
                c[j] = 1;
                sample_coeffs.push(c);
            }
        }
        for _ in 0..(60 + 6 * qdim) {
            sample_coeffs.push((0..qdim).map(|_| rng.gen_range(0..field.p())).collect());
        }
        let mut best_field_witness = false;
        for c in &sample_coeffs {
            let mut x = FpMatrix::zero(k, k);
            for (t, &ct) in c.iter().enumerate() {
                if ct != 0 {
                    x = x.add(&field, &qreps[t].scale(&field, ct));
                }
            }
            if nred(&x).iter().all(|&v| v == 0) {
                continue;
            }
            let Some(lx) = qmul(&x) else {
                return EndOutcome::Undecided("projection failure in quotient".into());
            };
            let mu = min_poly_matrix(&field, &lx);
            let facs = factor_univariate(&field, &mu);
            if facs.len() >= 2 {
                // split in the quotient; lift through the nilpotent ideal
                let p = idempotent_poly(&field, &mu).expect("two blocks split");
                if let Some(coeffs) = hom_coeffs_for_matrix(&field, hom, &x) {
                    return EndOutcome::Split {
                        element_rows: hom.element(module, &coeffs),
                        poly: p,
                    };
                }
                return EndOutcome::Undecided(
                    "split element not expressible over the hom basis".into(),
                );
            }
            let (irr, mult) = &facs[0];
            if *mult >= 2 || irr == &FpPoly::x() {
                // new nilpotent below: enlarge the ideal and restart
                let nil = if irr == &FpPoly::x() {
                    x.clone()
                } else {
                    eval_poly_matrix(&field, irr, &x)
                };
                if !nspace.contains(&field, &flat(&nil)) {
                    nil_seeds.push(nil);
                    best_field_witness = false;
                    break;
                }
            } else if commutative && *mult == 1 && irr.deg() == qdim {
                // primitive element of a field quotient: local certified
                best_field_witness = true;
                break;
            }
        }
        if best_field_witness {
            return EndOutcome::Local;
        }
        // if no new nilpotent was found and no witness, decide or give up
        let grew = nil_seeds
            .iter()
            .any(|s| !nspace.contains(&field, &flat(s)));
        if !grew {
            if commutative && qdim == 1 {
                return EndOutcome::Local;
            }
            return EndOutcome::Undecided(format!(
                "no primitive element found (quotient dim {qdim}, commutative: {commutative})"
            ));
        }
    }
    EndOutcome::Undecided("radical growth did not stabilize".into())
}

/// Express a matrix over the constant parts of the hom basis.
fn hom_coeffs_for_matrix(
    field: &PrimeField,
    hom: &HomSpace,
    target: &FpMatrix,
) -> Option<Vec<u64>> {
    let width = target.rows * target.cols;
    let r = hom.dim();
    let mut mat = FpMatrix::zero(width, r + 1);
    for (col, cp) in hom.const_parts.iter().enumerate() {
        for i in 0..width {
            mat.set(i, col, cp.a[i] as u64);
        }
    }
    for i in 0..width {
        mat.set(i, r, target.a[i] as u64);
    }
    let pivots = mat.rref(field);
    if pivots.contains(&r) {
        return None;
    }
    let mut y = vec![0u64; r];
    for (row, &pc) in pivots.iter().enumerate() {
        y[pc] = mat.get(row, r);
    }
    Some(y)
}

/// Does the span of `basis` generate a nilpotent multiplicative system?
fn space_nilpotent(field: &PrimeField, basis: &[FpMatrix], width: usize) -> bool {
    if basis.is_empty() {
        return true;
    }
    let mut cur: Vec<FpMatrix> = basis.to_vec();
    for _ in 0..=width {
        let mut next_space = LinSpace::new(width);
        let mut next: Vec<FpMatrix> = Vec::new();
        for a in &cur {
            for b in basis {
                let prod = a.mul(field, b);
                if next_space.insert(field, &flat(&prod)) {
                    next.push(prod);
                }
            }
        }
        if next.is_empty() {
            return true;
        }
        if next.len() == cur.len() {
            // compare spans for stabilization
            let mut cur_space = LinSpace::new(width);
            for a in &cur {
                cur_space.insert(field, &flat(a));
            }
            if next.iter().all(|m| cur_space.contains(field, &flat(m))) {
                return false;
            }
        }
        cur = next;
    }
    false
}

/// Image of an idempotent endomorphism: the submodule it generates together
/// with inclusion and projection certificates.
pub fn idempotent_image(
    module: &GradedModule,
    e_rows: &[VecPoly],
) -> crate::error::Result<(GradedModule, Vec<VecPoly>, Vec<VecPoly>)> {
    let nf_e: Vec<VecPoly> = nf_rows(e_rows, module);
    let mut gens: Vec<VecPoly> = Vec::new();
    let mut where_is: Vec<Option<u32>> = vec![None; nf_e.len()];
    for (j, row) in nf_e.iter().enumerate() {
        if !row.is_zero() {
            where_is[j] = Some(gens.len() as u32);
            gens.push(row.clone());
        }
    }
    let (image, incl) = module.submodule(&gens)?;
    let projection: Vec<VecPoly> = where_is
        .iter()
        .map(|w| match w {
            Some(t) => VecPoly::unit(*t),
            None => VecPoly::zero(),
        })
        .collect();
    Ok((image, incl, projection))
}
