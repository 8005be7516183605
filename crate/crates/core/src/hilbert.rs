//! Hilbert series of graded modules as exact rational functions.
//!
//! A series is stored as a numerator (integer coefficients on rational
//! degrees) over the fixed denominator `prod_i (1 - t^{w_i})`. The numerator
//! of a quotient by a monomial submodule comes from the usual pivot
//! recursion; passing to lead terms reduces every computation to that case.

use crate::degree::Degree;
use crate::monomial::Monomial;
use crate::poly::PolyRing;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Numerator coefficients keyed by degree; zero entries pruned.
    pub numer: BTreeMap<Degree, i64>,
    /// Denominator exponents: one factor `1 - t^w` per ambient variable.
    pub weights: Vec<u32>,
}

impl HilbertSeries {
    pub fn zero(weights: Vec<u32>) -> Self {
        HilbertSeries {
            numer: BTreeMap::new(),
            weights,
        }
    }

    pub fn from_numer(numer: BTreeMap<Degree, i64>, weights: Vec<u32>) -> Self {
        let mut s = HilbertSeries { numer, weights };
        s.numer.retain(|_, c| *c != 0);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_empty()
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.weights, other.weights);
        let mut numer = self.numer.clone();
        for (d, c) in &other.numer {
            *numer.entry(*d).or_insert(0) += c;
        }
        HilbertSeries::from_numer(numer, self.weights.clone())
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HilbertSeries {
        HilbertSeries {
            numer: self.numer.iter().map(|(d, c)| (*d, -c)).collect(),
            weights: self.weights.clone(),
        }
    }

    /// Multiply by `t^by`.
    pub fn shift(&self, by: &Degree) -> HilbertSeries {
        HilbertSeries {
            numer: self.numer.iter().map(|(d, c)| (d.add(by), *c)).collect(),
            weights: self.weights.clone(),
        }
    }

    /// Shift so the smallest numerator degree is zero; returns the shift
    /// applied. Used for comparisons up to a degree twist.
    pub fn normalized(&self) -> (HilbertSeries, Degree) {
        match self.numer.keys().next() {
            None => (self.clone(), Degree::zero()),
            Some(min) => {
                let by = min.neg();
                (self.shift(&by), by)
            }
        }
    }

    /// Common-denominator integer exponent form: returns (scale D, map from
    /// integer exponent of u = t^(1/D) to coefficient).
    fn integer_form(&self) -> (u64, BTreeMap<i64, i64>) {
        let mut den = 1u64;
        for d in self.numer.keys() {
            let dd = d.den();
            den = den / gcd_u(den, dd) * dd;
        }
        let map = self
            .numer
            .iter()
            .map(|(d, c)| (d.scaled_num(den), *c))
            .collect();
        (den, map)
    }

    /// Krull dimension of the module: pole order of the series at `t = 1`.
    pub fn dimension(&self) -> usize {
        assert!(!self.is_zero(), "dimension of the zero module");
        let (_, mut coeffs) = self.integer_form();
        // multiplicity of the root u = 1 in the numerator
        let mut mult = 0usize;
        loop {
            let sum: i64 = coeffs.values().sum();
            if sum != 0 {
                break;
            }
            // divide by (1 - u), up to sign: coefficient at u^{k-1} of the
            // negated quotient is the running sum of coefficients >= k
            let min = *coeffs.keys().next().unwrap();
            let max = *coeffs.keys().next_back().unwrap();
            let mut q: BTreeMap<i64, i64> = BTreeMap::new();
            let mut running = 0i64;
            for k in (min..=max).rev() {
                running += coeffs.get(&k).copied().unwrap_or(0);
                if k > min && running != 0 {
                    q.insert(k - 1, running);
                }
            }
            coeffs = q;
            mult += 1;
            if mult > self.weights.len() {
                panic!("numerator vanishing exceeds denominator order");
            }
        }
        self.weights.len() - mult
    }

    /// Total length if the module is finite dimensional over the field.
    /// Divides out every denominator factor; `None` if any division fails.
    pub fn finite_length(&self) -> Option<u64> {
        if self.is_zero() {
            return Some(0);
        }
        let (den, mut coeffs) = self.integer_form();
        for &w in &self.weights {
            coeffs = divide_one_minus_power(&coeffs, w as i64 * den as i64)?;
        }
        let total: i64 = coeffs.values().sum();
        u64::try_from(total).ok()
    }

    /// Power-series coefficients for all degrees `<= max` (rational keys).
    pub fn expand_upto(&self, max: &Degree) -> BTreeMap<Degree, i64> {
        let (den, coeffs) = self.integer_form();
        let den_all = lcm_u(den, max.den());
        let maxi = max.scaled_num(den_all);
        // rescale numerator to den_all
        let mut cur: BTreeMap<i64, i64> = coeffs
            .iter()
            .map(|(e, c)| (e * (den_all / den) as i64, *c))
            .collect();
        // expand each 1/(1 - u^(w*den_all)) up to maxi
        for &w in &self.weights {
            let step = w as i64 * den_all as i64;
            let mut next: BTreeMap<i64, i64> = BTreeMap::new();
            for (&e, &c) in &cur {
                let mut k = e;
                while k <= maxi {
                    *next.entry(k).or_insert(0) += c;
                    k += step;
                }
            }
            cur = next;
        }
        cur.retain(|_, c| *c != 0);
        cur.into_iter()
            .map(|(e, c)| (Degree::new(e, den_all), c))
            .collect()
    }
}

fn gcd_u(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u(b, a % b)
    }
}

fn lcm_u(a: u64, b: u64) -> u64 {
    a / gcd_u(a, b) * b
}

/// Exact division of a Laurent polynomial by `1 - u^step`; `None` when the
/// quotient is not a polynomial (i.e. the series is not finite).
fn divide_one_minus_power(numer: &BTreeMap<i64, i64>, step: i64) -> Option<BTreeMap<i64, i64>> {
    let mut rem = numer.clone();
    let mut out: BTreeMap<i64, i64> = BTreeMap::new();
    let max = *numer.keys().next_back()?;
    while let Some((&d, &c)) = rem.iter().next() {
        if c == 0 {
            rem.remove(&d);
            continue;
        }
        if d > max {
            return None; // remainder escapes the original support: not exact
        }
        out.insert(d, c);
        *rem.entry(d + step).or_insert(0) += c;
        rem.remove(&d);
    }
    Some(out)
}

/// Numerator of the Hilbert series of `T / (monomial ideal)`, as a map from
/// integer weighted degree to coefficient.
pub fn monomial_ideal_numerator(ring: &PolyRing, gens: &[Monomial]) -> BTreeMap<i64, i64> {
    let mut mins = minimalize(gens.to_vec());
    mins.sort();
    k_numer(ring, &mins)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && h.divides(g) && (h != g || j < i));
        if !redundant {
            out.push(*g);
        }
    }
    out
}

fn k_numer(ring: &PolyRing, gens: &[Monomial]) -> BTreeMap<i64, i64> {
    let mut one = BTreeMap::new();
    one.insert(0i64, 1i64);
    if gens.is_empty() {
        return one;
    }
    if gens.iter().any(|g| g.is_one()) {
        return BTreeMap::new();
    }
    // find two generators sharing a variable
    let nv = ring.nvars();
    let mut pair = None;
    'outer: for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            for v in 0..nv {
                if gens[i].e[v] > 0 && gens[j].e[v] > 0 {
                    pair = Some((i, j));
                    break 'outer;
                }
            }
        }
    }
    match pair {
        None => {
            // pairwise coprime: product of (1 - t^deg g)
            let mut acc = one;
            for g in gens {
                let d = ring.mono_degree(g) as i64;
                let mut next = BTreeMap::new();
                for (&e, &c) in &acc {
                    *next.entry(e).or_insert(0) += c;
                    *next.entry(e + d).or_insert(0) -= c;
                }
                next.retain(|_, c| *c != 0);
                acc = next;
            }
            acc
        }
        Some((i, j)) => {
            // pivot = gcd of the sharing pair: both branches strictly shrink
            let pivot = gens[i].gcd(&gens[j]);
            debug_assert!(!pivot.is_one());
            let mut plus = gens.to_vec();
            plus.push(pivot);
            let plus = minimalize(plus);
            let a = k_numer(ring, &plus);
            let colon: Vec<Monomial> = gens
                .iter()
                .map(|g| g.try_div(&g.gcd(&pivot)).unwrap())
                .collect();
            let colon = minimalize(colon);
            let b = k_numer(ring, &colon);
            let d = ring.mono_degree(&pivot) as i64;
            let mut acc = a;
            for (&e, &c) in &b {
                *acc.entry(e + d).or_insert(0) += c;
            }
            acc.retain(|_, c| *c != 0);
            acc
        }
    }
}

/// Hilbert series of `(free module with gen_degs) / (lead term module)`.
pub fn series_from_leads(
    ring: &PolyRing,
    gen_degs: &[Degree],
    leads_per_comp: &[Vec<Monomial>],
) -> HilbertSeries {
    let mut numer: BTreeMap<Degree, i64> = BTreeMap::new();
    for (j, gdeg) in gen_degs.iter().enumerate() {
        let k = monomial_ideal_numerator(ring, &leads_per_comp[j]);
        for (e, c) in k {
            let key = gdeg.add(&Degree::int(e));
            *numer.entry(key).or_insert(0) += c;
        }
    }
    HilbertSeries::from_numer(numer, ring.weights().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    fn ring(weights: Vec<u32>) -> PolyRing {
        let names: Vec<String> = (0..weights.len()).map(|i| format!("x{i}")).collect();
        PolyRing::new(PrimeField::new(3).unwrap(), names, weights).unwrap()
    }

    #[test]
    fn free_ring_series() {
        // T = F_3[x,y] with weights (1,1): series 1/(1-t)^2
        let r = ring(vec![1, 1]);
        let hs = series_from_leads(&r, &[Degree::zero()], &[vec![]]);
        assert_eq!(hs.dimension(), 2);
        let coeffs = hs.expand_upto(&Degree::int(4));
        for k in 0..=4i64 {
            assert_eq!(coeffs.get(&Degree::int(k)), Some(&(k + 1)));
        }
        assert_eq!(hs.finite_length(), None);
    }

    #[test]
    fn residue_field_series() {
        // k = T/(x,y): series 1
        let r = ring(vec![1, 1]);
        let hs = series_from_leads(
            &r,
            &[Degree::zero()],
            &[vec![Monomial::var(0), Monomial::var(1)]],
        );
        assert_eq!(hs.finite_length(), Some(1));
        let coeffs = hs.expand_upto(&Degree::int(3));
        assert_eq!(coeffs.get(&Degree::zero()), Some(&1));
        assert_eq!(coeffs.get(&Degree::int(1)), None);
    }

    #[test]
    fn cusp_ring_series() {
        // F_3[x,y]/(x^2 - y^3), weights (3,2): (1 - t^6)/((1-t^3)(1-t^2));
        // the expansion counts monomials x^a y^b with a <= 1
        let r = ring(vec![3, 2]);
        let hs = series_from_leads(&r, &[Degree::zero()], &[vec![Monomial::var(0).pow(2)]]);
        assert_eq!(hs.dimension(), 1);
        let coeffs = hs.expand_upto(&Degree::int(12));
        for d in 0..=12i64 {
            let mut count = 0i64;
            for a in 0..=1i64 {
                let rem = d - 3 * a;
                if rem >= 0 && rem % 2 == 0 {
                    count += 1;
                }
            }
            assert_eq!(
                coeffs.get(&Degree::int(d)).copied().unwrap_or(0),
                count,
                "degree {d}"
            );
        }
    }

    #[test]
    fn additivity_and_shift() {
        let r = ring(vec![1, 1]);
        let a = series_from_leads(&r, &[Degree::zero()], &[vec![Monomial::var(0)]]);
        let b = series_from_leads(&r, &[Degree::int(2)], &[vec![Monomial::var(1).pow(2)]]);
        let sum = a.add(&b);
        let c0 = sum.expand_upto(&Degree::int(5));
        let ca = a.expand_upto(&Degree::int(5));
        let cb = b.expand_upto(&Degree::int(5));
        for d in 0..=5i64 {
            let k = Degree::int(d);
            assert_eq!(
                c0.get(&k).copied().unwrap_or(0),
                ca.get(&k).copied().unwrap_or(0) + cb.get(&k).copied().unwrap_or(0)
            );
        }
        let (na, shift) = b.normalized();
        assert_eq!(shift, Degree::int(-2));
        assert_eq!(na.numer.keys().next(), Some(&Degree::zero()));
    }

    #[test]
    fn dimension_of_two_planes() {
        // T/(xz, xu, yz, yu) in 4 variables has dimension 2
        let r = ring(vec![1, 1, 1, 1]);
        let (x, y, z, u) = (
            Monomial::var(0),
            Monomial::var(1),
            Monomial::var(2),
            Monomial::var(3),
        );
        let leads = vec![vec![x.mul(&z), x.mul(&u), y.mul(&z), y.mul(&u)]];
        let hs = series_from_leads(&r, &[Degree::zero()], &leads);
        assert_eq!(hs.dimension(), 2);
    }
}
