//! Sparse multivariate polynomials over a prime field with weighted grading.
//!
//! A [`Polynomial`] is plain data: a term list sorted descending in the owning
//! ring's order (weighted degree first, then reverse-lexicographic
//! tie-break). All arithmetic goes through [`PolyRing`], which carries the
//! field, the variable names and the weights.

use crate::arith::PrimeField;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_VARS};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    /// Term list `(monomial, coefficient)`, sorted descending, no zeros.
    pub terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the ring order the polynomial was built with.
    pub fn lead(&self) -> Option<(&Monomial, u64)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_coeff(&self) -> u64 {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }
}

/// Ambient weighted polynomial ring `F_p[x_1..x_n]`, `deg x_i = w_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    var_names: Vec<String>,
    weights: Vec<u32>,
}

impl PolyRing {
    pub fn new(field: PrimeField, var_names: Vec<String>, weights: Vec<u32>) -> Result<Self> {
        if var_names.len() != weights.len() {
            return Err(Error::Unsupported(
                "variable and weight counts differ".into(),
            ));
        }
        if var_names.len() > MAX_VARS {
            return Err(Error::Unsupported(format!(
                "at most {MAX_VARS} variables supported"
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Unsupported("weights must be positive".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &var_names {
            if !seen.insert(v.clone()) {
                return Err(Error::Unsupported(format!("duplicate variable {v}")));
            }
        }
        Ok(PolyRing {
            field,
            var_names,
            weights,
        })
    }

    /// Unweighted ring with standard grading.
    pub fn standard(field: PrimeField, var_names: &[&str]) -> Result<Self> {
        PolyRing::new(
            field,
            var_names.iter().map(|s| s.to_string()).collect(),
            vec![1; var_names.len()],
        )
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().map(|&w| w as u64).sum()
    }

    /// Weighted graded reverse-lexicographic comparison.
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let da = a.weighted_degree(&self.weights);
        let db = b.weighted_degree(&self.weights);
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // revlex tie-break: last variable where they differ, smaller exponent wins
        for i in (0..self.nvars()).rev() {
            if a.e[i] != b.e[i] {
                return b.e[i].cmp(&a.e[i]);
            }
        }
        Ordering::Equal
    }

    pub fn mono_degree(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.weights)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: u64) -> Polynomial {
        let c = c % self.p();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars());
        Polynomial {
            terms: vec![(Monomial::var(i), 1)],
        }
    }

    pub fn monomial_poly(&self, m: Monomial, c: u64) -> Polynomial {
        let c = c % self.p();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Build a polynomial from arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(&self, terms: Vec<(Monomial, u64)>) -> Polynomial {
        let mut acc: Vec<(Monomial, u64)> = Vec::with_capacity(terms.len());
        let mut sorted = terms;
        sorted.sort_by(|a, b| self.cmp_mono(&b.0, &a.0));
        for (m, c) in sorted {
            let c = c % self.p();
            if c == 0 {
                continue;
            }
            if let Some(last) = acc.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(last.1, c);
                    if last.1 == 0 {
                        acc.pop();
                    }
                    continue;
                }
            }
            acc.push((m, c));
        }
        Polynomial { terms: acc }
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match self.cmp_mono(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(a.terms[i].1, b.terms[j].1);
                    if c != 0 {
                        out.push((a.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (*m, self.field.neg(*c)))
                .collect(),
        }
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add(a, &self.neg(b))
    }

    /// Multiply by a single term; preserves the sort order.
    pub fn mul_term(&self, a: &Polynomial, m: &Monomial, c: u64) -> Polynomial {
        let c = c % self.p();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(am, ac)| (am.mul(m), self.field.mul(*ac, c)))
                .collect(),
        }
    }

    pub fn scale(&self, a: &Polynomial, c: u64) -> Polynomial {
        self.mul_term(a, &Monomial::one(), c)
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        if b.nterms() == 1 {
            let (m, c) = b.lead().unwrap();
            return self.mul_term(a, m, c);
        }
        if a.nterms() == 1 {
            let (m, c) = a.lead().unwrap();
            return self.mul_term(b, m, c);
        }
        let mut acc = Polynomial::zero();
        for (m, c) in &a.terms {
            acc = self.add(&acc, &self.mul_term(b, m, *c));
        }
        acc
    }

    pub fn pow(&self, a: &Polynomial, mut k: u64) -> Polynomial {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `f^q` for `q = p^n`, computed term-wise: in characteristic `p` the
    /// `q`-th power map is additive, so `(sum c_i m_i)^q = sum c_i m_i^q`
    /// (coefficients are fixed by Fermat).
    pub fn frob_power(&self, a: &Polynomial, q: u64) -> Result<Polynomial> {
        let p = self.p();
        let mut qq = q;
        while qq > 1 {
            if qq % p != 0 {
                return Err(Error::NotPowerOfP { q, p });
            }
            qq /= p;
        }
        if qq != 1 {
            return Err(Error::NotPowerOfP { q, p });
        }
        Ok(Polynomial {
            terms: a.terms.iter().map(|(m, c)| (m.pow(q as u32), *c)).collect(),
        })
    }

    /// Weighted degree if homogeneous (`None` for 0; error if mixed).
    pub fn homogeneous_degree(&self, a: &Polynomial) -> Result<Option<u64>> {
        let mut deg = None;
        for (m, _) in &a.terms {
            let d = self.mono_degree(m);
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => {
                    return Err(Error::Inhomogeneous(self.format(a)));
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, a: &Polynomial) -> bool {
        self.homogeneous_degree(a).is_ok()
    }

    pub fn format(&self, a: &Polynomial) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in a.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(format!("{c}"));
            }
            for i in 0..self.nvars() {
                let e = m.exponent(i);
                if e == 1 {
                    factors.push(self.var_names[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.var_names[i], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse the plain-text grammar: terms `c*x^a*y^b` joined by `+`/`-`.
    pub fn parse(&self, input: &str) -> Result<Polynomial> {
        let mut terms: Vec<(Monomial, u64)> = Vec::new();
        let toks = tokenize(input)?;
        let mut pos = 0usize;
        let mut first = true;
        while pos < toks.len() {
            // sign prefix
            let mut sign_neg = false;
            match &toks[pos] {
                Tok::Plus => {
                    pos += 1;
                }
                Tok::Minus => {
                    sign_neg = true;
                    pos += 1;
                }
                _ if first => {
                    sign_neg = false;
                }
                t => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-' before token {t:?}"
                    )));
                }
            }
            first = false;
            // one term: factors joined by '*'
            let mut coeff = 1u64;
            let mut mono = Monomial::one();
            let mut want_factor = true;
            let mut any = false;
            while pos < toks.len() {
                match &toks[pos] {
                    Tok::Int(n) if want_factor => {
                        coeff = self.field.mul(coeff, n % self.p());
                        pos += 1;
                        any = true;
                        want_factor = false;
                    }
                    Tok::Ident(name) if want_factor => {
                        let Some(vi) = self.var_names.iter().position(|v| v == name) else {
                            return Err(Error::Parse(format!("unknown variable '{name}'")));
                        };
                        pos += 1;
                        let mut exp = 1u32;
                        if pos < toks.len() && toks[pos] == Tok::Caret {
                            pos += 1;
                            match toks.get(pos) {
                                Some(Tok::Int(n)) => {
                                    exp = u32::try_from(*n)
                                        .map_err(|_| Error::Parse("exponent overflow".into()))?;
                                    pos += 1;
                                }
                                _ => return Err(Error::Parse("expected exponent after '^'".into())),
                            }
                        }
                        mono = mono.mul(&Monomial::var(vi).pow(exp));
                        any = true;
                        want_factor = false;
                    }
                    Tok::Star if !want_factor => {
                        pos += 1;
                        want_factor = true;
                    }
                    _ => break,
                }
            }
            if !any || want_factor {
                return Err(Error::Parse("empty or dangling term".into()));
            }
            if sign_neg {
                coeff = self.field.neg(coeff);
            }
            if coeff != 0 {
                terms.push((mono, coeff));
            }
        }
        if first {
            return Err(Error::Parse("empty polynomial".into()));
        }
        Ok(self.from_terms(terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(input: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            c if c.is_ascii_digit() => {
                let mut n = 0u64;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(v as u64))
                            .ok_or_else(|| Error::Parse("integer overflow".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(name));
            }
            c => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        }
    }
    Ok(toks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> PolyRing {
        PolyRing::standard(PrimeField::new(3).unwrap(), &["x", "y"]).unwrap()
    }

    #[test]
    fn mul_difference_of_squares() {
        // (x+y)(x-y) = x^2 - y^2 = x^2 + 2y^2 over F_3
        let r = ring3();
        let f = r.parse("x + y").unwrap();
        let g = r.parse("x - y").unwrap();
        let prod = r.mul(&f, &g);
        assert_eq!(prod, r.parse("x^2 + 2*y^2").unwrap());
        assert_eq!(r.format(&prod), "x^2 + 2*y^2");
    }

    #[test]
    fn mul_identity() {
        let r = ring3();
        let f = r.parse("2*x^2*y + x - 1").unwrap();
        assert_eq!(r.mul(&f, &r.one()), f);
    }

    #[test]
    fn square_of_cusp_poly() {
        // (x^2 - y^3)^2 = x^4 - 2 x^2 y^3 + y^6 = x^4 + x^2 y^3 + y^6 over F_3
        let r = ring3();
        let f = r.parse("x^2 - y^3").unwrap();
        let sq = r.mul(&f, &f);
        // independent schoolbook expansion
        let expect = {
            let x4 = r.parse("x^4").unwrap();
            let mid = r.scale(&r.parse("x^2*y^3").unwrap(), r.field().reduce_i64(-2));
            let y6 = r.parse("y^6").unwrap();
            r.add(&r.add(&x4, &mid), &y6)
        };
        assert_eq!(sq, expect);
        assert_eq!(sq, r.parse("x^4 + x^2*y^3 + y^6").unwrap());
    }

    #[test]
    fn frob_power_basics() {
        let r = ring3();
        let f = r.parse("x + y").unwrap();
        assert_eq!(r.frob_power(&f, 3).unwrap(), r.parse("x^3 + y^3").unwrap());
        // constants are fixed
        let c = r.constant(2);
        assert_eq!(r.frob_power(&c, 9).unwrap(), c);
        // q must be a power of p
        assert!(r.frob_power(&f, 2).is_err());
        assert!(r.frob_power(&f, 6).is_err());
        // agreement with repeated multiplication
        let g = r.parse("x^2 - y^3").unwrap();
        assert_eq!(r.frob_power(&g, 3).unwrap(), r.pow(&g, 3));
    }

    #[test]
    fn homogeneity_weighted() {
        let f = PrimeField::new(3).unwrap();
        let r = PolyRing::new(f, vec!["x".into(), "y".into()], vec![3, 2]).unwrap();
        let cusp = r.parse("x^2 - y^3").unwrap();
        assert_eq!(r.homogeneous_degree(&cusp).unwrap(), Some(6));
        let bad = r.parse("x + y").unwrap();
        assert!(r.homogeneous_degree(&bad).is_err());
    }

    #[test]
    fn parse_errors() {
        let r = ring3();
        assert!(r.parse("x + ").is_err());
        assert!(r.parse("z").is_err());
        assert!(r.parse("x^").is_err());
        assert!(r.parse("").is_err());
        assert!(r.parse("x y").is_err());
    }

    #[test]
    fn format_round_trip() {
        let r = ring3();
        for s in ["x^2 + 2*y^2", "2", "x*y + x + 1", "0"] {
            let f = r.parse(s).unwrap();
            assert_eq!(r.parse(&r.format(&f)).unwrap(), f);
        }
    }
}
