//! Finite-length modules as a field basis with one multiplication matrix per
//! ambient variable. Matlis duality at finite length is transposition with
//! negated degrees.

use crate::arith::FpMatrix;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::module::GradedModule;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use crate::vecpoly::VecPoly;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct FiniteLengthModule {
    ring: Arc<GradedRing>,
    basis_degs: Vec<Degree>,
    /// `mats[v]`: row `i` holds the coordinates of `x_v * b_i`.
    mats: Vec<FpMatrix>,
}

impl FiniteLengthModule {
    pub fn new(
        ring: Arc<GradedRing>,
        basis_degs: Vec<Degree>,
        mats: Vec<FpMatrix>,
    ) -> Result<Self> {
        let n = basis_degs.len();
        if mats.len() != ring.nvars() {
            return Err(Error::Unsupported(
                "one multiplication matrix per variable required".into(),
            ));
        }
        for m in &mats {
            if m.rows != n || m.cols != n {
                return Err(Error::Unsupported("matrix size mismatch".into()));
            }
        }
        let fl = FiniteLengthModule {
            ring,
            basis_degs,
            mats,
        };
        fl.validate()?;
        Ok(fl)
    }

    /// Check commutativity, the defining relations, and nilpotency.
    fn validate(&self) -> Result<()> {
        let f = self.ring.ambient().field();
        let n = self.length();
        for a in 0..self.mats.len() {
            for b in (a + 1)..self.mats.len() {
                let ab = self.mats[a].mul(f, &self.mats[b]);
                let ba = self.mats[b].mul(f, &self.mats[a]);
                if ab != ba {
                    return Err(Error::Unsupported(
                        "multiplication matrices do not commute".into(),
                    ));
                }
            }
        }
        for rel in self.ring.relations() {
            if !self.eval_poly(rel).is_zero() {
                return Err(Error::Unsupported(
                    "multiplication matrices violate a ring relation".into(),
                ));
            }
        }
        // finite length over the graded ring forces nilpotent variables
        for m in &self.mats {
            let mut pow = FpMatrix::identity(n);
            for _ in 0..=n {
                pow = pow.mul(f, m);
            }
            if !pow.is_zero() {
                return Err(Error::Unsupported(
                    "a variable acts non-nilpotently".into(),
                ));
            }
        }
        Ok(())
    }

    /// Evaluate a polynomial on the multiplication matrices.
    pub fn eval_poly(&self, poly: &Polynomial) -> FpMatrix {
        let f = self.ring.ambient().field();
        let n = self.length();
        let mut acc = FpMatrix::zero(n, n);
        for (mono, c) in &poly.terms {
            let mut term = FpMatrix::identity(n).scale(f, *c);
            for v in 0..self.ring.nvars() {
                for _ in 0..mono.exponent(v) {
                    term = term.mul(f, &self.mats[v]);
                }
            }
            acc = acc.add(f, &term);
        }
        acc
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.basis_degs.len()
    }

    pub fn basis_degs(&self) -> &[Degree] {
        &self.basis_degs
    }

    pub fn mats(&self) -> &[FpMatrix] {
        &self.mats
    }

    /// Matlis dual: transposed action on the dual basis, negated degrees.
    pub fn matlis_dual(&self) -> FiniteLengthModule {
        FiniteLengthModule {
            ring: self.ring.clone(),
            basis_degs: self.basis_degs.iter().map(|d| d.neg()).collect(),
            mats: self.mats.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Extract the basis-and-matrices form from a finite-length presentation.
    pub fn from_module(module: &GradedModule) -> Result<FiniteLengthModule> {
        let ring = module.ring().clone();
        let nvars = ring.nvars();
        let amb = ring.ambient().clone();
        if module.is_zero() {
            return Ok(FiniteLengthModule {
                ring,
                basis_degs: Vec::new(),
                mats: vec![FpMatrix::zero(0, 0); nvars],
            });
        }
        if module.dimension()? != 0 {
            return Err(Error::Unsupported("module has positive dimension".into()));
        }
        let gb = module.gb();
        let leads = gb.lead_monomials(module.ngens() as u32);
        // standard monomials per component, breadth-first
        let mut basis: Vec<(u32, Monomial)> = Vec::new();
        for j in 0..module.ngens() {
            let mut frontier = vec![Monomial::one()];
            let mut seen = std::collections::BTreeSet::new();
            while let Some(m) = frontier.pop() {
                if seen.contains(&m) || leads[j].iter().any(|l| l.divides(&m)) {
                    continue;
                }
                seen.insert(m);
                for v in 0..amb.nvars() {
                    frontier.push(m.mul(&Monomial::var(v)));
                }
            }
            basis.extend(seen.into_iter().map(|m| (j as u32, m)));
        }
        basis.sort();
        let index: std::collections::HashMap<(u32, Monomial), usize> = basis
            .iter()
            .enumerate()
            .map(|(i, bm)| (*bm, i))
            .collect();
        let n = basis.len();
        let basis_degs: Vec<Degree> = basis
            .iter()
            .map(|(j, m)| {
                module.gen_degs()[*j as usize].add(&Degree::int(amb.mono_degree(m) as i64))
            })
            .collect();
        let field = amb.field();
        let mut mats = vec![FpMatrix::zero(n, n); amb.nvars()];
        for (i, (j, m)) in basis.iter().enumerate() {
            for v in 0..amb.nvars() {
                let shifted = VecPoly {
                    terms: vec![crate::vecpoly::VTerm {
                        comp: *j,
                        mono: m.mul(&Monomial::var(v)),
                        coeff: 1,
                    }],
                };
                let nf = gb.nf(&amb, &shifted);
                for t in &nf.terms {
                    let col = index[&(t.comp, t.mono)];
                    let old = mats[v].get(i, col);
                    mats[v].set(i, col, field.add(old, t.coeff));
                }
            }
        }
        Ok(FiniteLengthModule {
            ring,
            basis_degs,
            mats,
        })
    }

    /// Presentation form: one generator per basis element, rows expressing
    /// the variable actions.
    pub fn to_module(&self) -> GradedModule {
        let amb = self.ring.ambient();
        let n = self.length();
        let mut rows = Vec::new();
        for v in 0..amb.nvars() {
            for i in 0..n {
                let mut comps: Vec<(u32, Polynomial)> = vec![(i as u32, amb.var(v))];
                for k in 0..n {
                    let c = self.mats[v].get(i, k);
                    if c != 0 {
                        comps.push((k as u32, amb.constant(amb.field().neg(c))));
                    }
                }
                rows.push(VecPoly::from_components(amb, &comps));
            }
        }
        GradedModule::new(self.ring.clone(), self.basis_degs.clone(), rows)
            .expect("variable action rows are homogeneous")
    }
}
