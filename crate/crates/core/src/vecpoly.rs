//! Sparse vectors over a free module `T^n`: the working representation for
//! presentation rows, Groebner bases and syzygies.
//!
//! Terms `(component, monomial, coefficient)` are kept sorted under the
//! position-over-term order: smaller component index ranks higher, ties are
//! broken by the ring's monomial order.

use crate::degree::Degree;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VTerm {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VecPoly {
    /// Sorted descending under POT order; no zero coefficients.
    pub terms: Vec<VTerm>,
}

/// Row vector times row matrix: `sum_j v[j] * rows[j]`.
pub fn apply_rows(ring: &PolyRing, v: &VecPoly, rows: &[VecPoly]) -> VecPoly {
    let mut acc = VecPoly::zero();
    for t in &v.terms {
        let row = &rows[t.comp as usize];
        acc = acc.add_scaled(ring, t.coeff, &t.mono, row);
    }
    acc
}

/// POT comparison: component 0 is the highest-ranked position.
pub fn cmp_vterm(ring: &PolyRing, a: &VTerm, b: &VTerm) -> Ordering {
    match b.comp.cmp(&a.comp) {
        Ordering::Equal => ring.cmp_mono(&a.mono, &b.mono),
        ord => ord,
    }
}

impl VecPoly {
    pub fn zero() -> Self {
        VecPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Standard basis vector `e_comp`.
    pub fn unit(comp: u32) -> Self {
        VecPoly {
            terms: vec![VTerm {
                comp,
                mono: Monomial::one(),
                coeff: 1,
            }],
        }
    }

    /// Embed a polynomial into component `comp`. The polynomial's term order
    /// agrees with the POT order within a fixed component, so no resort.
    pub fn from_poly(comp: u32, poly: &Polynomial) -> Self {
        VecPoly {
            terms: poly
                .terms
                .iter()
                .map(|(m, c)| VTerm {
                    comp,
                    mono: *m,
                    coeff: *c,
                })
                .collect(),
        }
    }

    /// Build from (component, polynomial) entries.
    pub fn from_components(ring: &PolyRing, entries: &[(u32, Polynomial)]) -> Self {
        let mut entries: Vec<&(u32, Polynomial)> = entries.iter().collect();
        entries.sort_by_key(|(c, _)| *c);
        let mut terms = Vec::new();
        for (comp, poly) in entries {
            if poly.is_zero() {
                continue;
            }
            let _ = ring;
            terms.extend(poly.terms.iter().map(|(m, c)| VTerm {
                comp: *comp,
                mono: *m,
                coeff: *c,
            }));
        }
        VecPoly { terms }
    }

    pub fn lead(&self) -> &VTerm {
        &self.terms[0]
    }

    /// Extract the polynomial sitting in one component.
    pub fn component(&self, comp: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.mono, t.coeff))
                .collect(),
        }
    }

    pub fn components_used(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.iter().map(|t| t.comp).collect();
        out.dedup();
        out
    }

    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    /// Shift all component indices by a constant.
    pub fn shift_comps(&self, by: u32) -> VecPoly {
        VecPoly {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp + by,
                    ..*t
                })
                .collect(),
        }
    }

    /// Keep only components in `[lo, hi)`, re-based at zero.
    pub fn restrict_comps(&self, lo: u32, hi: u32) -> VecPoly {
        VecPoly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp >= lo && t.comp < hi)
                .map(|t| VTerm {
                    comp: t.comp - lo,
                    ..*t
                })
                .collect(),
        }
    }

    pub fn scale(&self, ring: &PolyRing, c: u64) -> VecPoly {
        let f = ring.field();
        let c = c % ring.p();
        if c == 0 {
            return VecPoly::zero();
        }
        VecPoly {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    coeff: f.mul(t.coeff, c),
                    ..*t
                })
                .collect(),
        }
    }

    /// Multiply by a term `c * m`; order is preserved.
    pub fn mul_term(&self, ring: &PolyRing, m: &Monomial, c: u64) -> VecPoly {
        let f = ring.field();
        let c = c % ring.p();
        if c == 0 {
            return VecPoly::zero();
        }
        VecPoly {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp,
                    mono: t.mono.mul(m),
                    coeff: f.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn add(&self, ring: &PolyRing, other: &VecPoly) -> VecPoly {
        let f = ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match cmp_vterm(ring, &a[i], &b[j]) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].coeff, b[j].coeff);
                    if c != 0 {
                        out.push(VTerm { coeff: c, ..a[i] });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VecPoly { terms: out }
    }

    /// `self + c * m * other` in one merge pass.
    pub fn add_scaled(&self, ring: &PolyRing, c: u64, m: &Monomial, other: &VecPoly) -> VecPoly {
        self.add(ring, &other.mul_term(ring, m, c))
    }

    pub fn sub(&self, ring: &PolyRing, other: &VecPoly) -> VecPoly {
        self.add_scaled(ring, ring.field().neg(1), &Monomial::one(), other)
    }

    /// Multiply by a general polynomial.
    pub fn mul_poly(&self, ring: &PolyRing, poly: &Polynomial) -> VecPoly {
        let mut acc = VecPoly::zero();
        for (m, c) in &poly.terms {
            acc = acc.add_scaled(ring, *c, m, self);
        }
        acc
    }

    /// Sort and combine arbitrary terms into canonical form.
    pub fn normalize(ring: &PolyRing, mut terms: Vec<VTerm>) -> VecPoly {
        terms.sort_by(|a, b| cmp_vterm(ring, b, a));
        let f = ring.field();
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            let c = t.coeff % ring.p();
            if c == 0 {
                continue;
            }
            if let Some(last) = out.last_mut() {
                if last.comp == t.comp && last.mono == t.mono {
                    last.coeff = f.add(last.coeff, c);
                    if last.coeff == 0 {
                        out.pop();
                    }
                    continue;
                }
            }
            out.push(VTerm { coeff: c, ..t });
        }
        VecPoly { terms: out }
    }

    /// Degree of a homogeneous vector given component degrees (scaled by the
    /// common denominator handled by the caller). Returns `None` for zero.
    pub fn degree(&self, ring: &PolyRing, comp_degrees: &[Degree]) -> Option<Degree> {
        let t = self.terms.first()?;
        Some(
            comp_degrees[t.comp as usize]
                .add(&Degree::int(ring.mono_degree(&t.mono) as i64)),
        )
    }

    /// Check that all terms have the same degree under `comp_degrees`.
    pub fn is_homogeneous(&self, ring: &PolyRing, comp_degrees: &[Degree]) -> bool {
        let Some(d0) = self.degree(ring, comp_degrees) else {
            return true;
        };
        self.terms.iter().all(|t| {
            comp_degrees[t.comp as usize]
                .add(&Degree::int(ring.mono_degree(&t.mono) as i64))
                == d0
        })
    }

    pub fn format(&self, ring: &PolyRing) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for comp in self.components_used() {
            let p = self.component(comp);
            parts.push(format!("({})*e{}", ring.format(&p), comp));
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    fn ring() -> PolyRing {
        PolyRing::standard(PrimeField::new(5).unwrap(), &["x", "y"]).unwrap()
    }

    #[test]
    fn order_and_arith() {
        let r = ring();
        let x = r.parse("x").unwrap();
        let y = r.parse("y").unwrap();
        let v = VecPoly::from_components(&r, &[(1, x.clone()), (0, y.clone())]);
        // component 0 ranks first
        assert_eq!(v.lead().comp, 0);
        let w = v.add(&r, &v);
        assert_eq!(w.component(0), r.scale(&y, 2));
        let z = v.sub(&r, &v);
        assert!(z.is_zero());
        let m = crate::monomial::Monomial::var(0);
        let vx = v.mul_term(&r, &m, 1);
        assert_eq!(vx.component(1), r.parse("x^2").unwrap());
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        let v = VecPoly::from_components(
            &r,
            &[(0, r.parse("x^2").unwrap()), (1, r.parse("y").unwrap())],
        );
        // deg e0 = 0, deg e1 = 1 makes it homogeneous of degree 2
        assert!(v.is_homogeneous(&r, &[Degree::zero(), Degree::int(1)]));
        assert!(!v.is_homogeneous(&r, &[Degree::zero(), Degree::zero()]));
        assert_eq!(
            v.degree(&r, &[Degree::zero(), Degree::int(1)]),
            Some(Degree::int(2))
        );
    }
}
