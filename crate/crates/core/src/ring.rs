//! Graded ring contexts `R = T/I` for a weighted polynomial ring `T` and a
//! weighted-homogeneous ideal `I`.

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, ModuleGb};
use crate::hilbert::series_from_leads;
use crate::poly::{PolyRing, Polynomial};
use crate::vecpoly::VecPoly;
use std::sync::{Arc, OnceLock};

/// A quotient `T/I` of the ambient weighted polynomial ring by homogeneous
/// relations. An empty relation list is the polynomial ring itself.
#[derive(Debug, Clone)]
pub struct GradedRing {
    ambient: PolyRing,
    relations: Vec<Polynomial>,
    ideal_gb: OnceLock<Arc<ModuleGb>>,
    dim: OnceLock<usize>,
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.relations == other.relations
    }
}
impl Eq for GradedRing {}

impl GradedRing {
    pub fn new(ambient: PolyRing, relations: Vec<Polynomial>) -> Result<Arc<Self>> {
        for f in &relations {
            let deg = ambient.homogeneous_degree(f)?;
            if deg == Some(0) {
                return Err(Error::Unsupported(
                    "a relation is a nonzero constant; the quotient is zero".into(),
                ));
            }
        }
        let relations: Vec<Polynomial> =
            relations.into_iter().filter(|f| !f.is_zero()).collect();
        Ok(Arc::new(GradedRing {
            ambient,
            relations,
            ideal_gb: OnceLock::new(),
            dim: OnceLock::new(),
        }))
    }

    pub fn polynomial_ring(ambient: PolyRing) -> Arc<Self> {
        GradedRing::new(ambient, Vec::new()).expect("no relations to validate")
    }

    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn p(&self) -> u64 {
        self.ambient.p()
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    /// Sum of the variable weights (the canonical twist for duality).
    pub fn weight_sum(&self) -> u64 {
        self.ambient.weight_sum()
    }

    /// Reduced Groebner basis of the defining ideal, cached.
    pub fn ideal_gb(&self) -> &ModuleGb {
        self.ideal_gb.get_or_init(|| {
            let vecs: Vec<VecPoly> = self
                .relations
                .iter()
                .map(|f| VecPoly::from_poly(0, f))
                .collect();
            Arc::new(buchberger(&self.ambient, &vecs))
        })
    }

    /// Normal form of a polynomial modulo the defining ideal.
    pub fn nf_poly(&self, f: &Polynomial) -> Polynomial {
        if self.is_polynomial_ring() {
            return f.clone();
        }
        self.ideal_gb()
            .nf(&self.ambient, &VecPoly::from_poly(0, f))
            .component(0)
    }

    /// Krull dimension of `T/I`, cached.
    pub fn dimension(&self) -> usize {
        *self.dim.get_or_init(|| {
            if self.relations.is_empty() {
                return self.nvars();
            }
            let leads = self.ideal_gb().lead_monomials(1);
            let hs = series_from_leads(&self.ambient, &[Degree::zero()], &leads);
            hs.dimension()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    #[test]
    fn cusp_ring() {
        let amb = PolyRing::new(
            PrimeField::new(3).unwrap(),
            vec!["x".into(), "y".into()],
            vec![3, 2],
        )
        .unwrap();
        let f = amb.parse("x^2 - y^3").unwrap();
        let r = GradedRing::new(amb, vec![f]).unwrap();
        assert_eq!(r.dimension(), 1);
        let y6 = r.ambient().parse("y^6").unwrap();
        let x4 = r.ambient().parse("x^4").unwrap();
        // x^4 = (x^2)^2 = y^6 in the quotient
        assert_eq!(r.nf_poly(&x4), r.nf_poly(&y6));
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let amb = PolyRing::standard(PrimeField::new(3).unwrap(), &["x", "y"]).unwrap();
        let f = amb.parse("x^2 - y^3").unwrap();
        assert!(GradedRing::new(amb, vec![f]).is_err());
    }

    #[test]
    fn two_planes_dimension() {
        let amb = PolyRing::standard(PrimeField::new(3).unwrap(), &["x", "y", "z", "u"]).unwrap();
        let rels: Vec<Polynomial> = ["x*z", "x*u", "y*z", "y*u"]
            .iter()
            .map(|s| amb.parse(s).unwrap())
            .collect();
        let r = GradedRing::new(amb, rels).unwrap();
        assert_eq!(r.dimension(), 2);
    }
}
