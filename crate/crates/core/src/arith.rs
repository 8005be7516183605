//! Prime-field arithmetic, dense matrices over `F_p`, and univariate
//! polynomial factorization (needed for idempotent searches).

use crate::error::{Error, Result};

/// The coefficient field `F_p`, `2 <= p <= 2^31`.
///
/// Elements are `u64` values in `[0, p)`; every operation reduces exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > (1u64 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        // p <= 2^31, so the product of two reduced elements fits in u64.
        (a * b) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Reduce a signed integer into `[0, p)`.
    pub fn reduce_i64(&self, n: i64) -> u64 {
        let p = self.p as i64;
        (((n % p) + p) % p) as u64
    }
}

/// Dense row-major matrix over `F_p` with `u32` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FpMatrix {
            rows,
            cols,
            a: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FpMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.cols + j] as u64
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.a[i * self.cols + j] = v as u32;
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, f: &PrimeField, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = FpMatrix::zero(self.rows, self.cols);
        for k in 0..self.a.len() {
            out.a[k] = f.add(self.a[k] as u64, other.a[k] as u64) as u32;
        }
        out
    }

    pub fn sub(&self, f: &PrimeField, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = FpMatrix::zero(self.rows, self.cols);
        for k in 0..self.a.len() {
            out.a[k] = f.sub(self.a[k] as u64, other.a[k] as u64) as u32;
        }
        out
    }

    pub fn scale(&self, f: &PrimeField, c: u64) -> FpMatrix {
        let mut out = self.clone();
        for x in out.a.iter_mut() {
            *x = f.mul(*x as u64, c) as u32;
        }
        out
    }

    pub fn mul(&self, f: &PrimeField, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = FpMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == 0 {
                    continue;
                }
                let base = k * other.cols;
                let obase = i * out.cols;
                for j in 0..other.cols {
                    let v = f.add(out.a[obase + j] as u64, f.mul(aik, other.a[base + j] as u64));
                    out.a[obase + j] = v as u32;
                }
            }
        }
        out
    }

    /// Row-reduce in place; returns pivot column per pivot row.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut pr = None;
            for i in r..self.rows {
                if self.get(i, c) != 0 {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != r {
                for j in 0..self.cols {
                    self.a.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Basis of the right nullspace `{v : A v = 0}` (column vectors).
    pub fn nullspace(&self, f: &PrimeField) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    pub fn inverse(&self, f: &PrimeField) -> Option<FpMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = FpMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = FpMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Some(out)
    }

    /// Solve `x A = b` for a row vector `x`, if consistent.
    pub fn solve_left(&self, f: &PrimeField, b: &[u64]) -> Option<Vec<u64>> {
        // Transpose to solve A^T x^T = b^T by elimination on augmented matrix.
        let t = self.transpose();
        let mut aug = FpMatrix::zero(t.rows, t.cols + 1);
        for i in 0..t.rows {
            for j in 0..t.cols {
                aug.set(i, j, t.get(i, j));
            }
            aug.set(i, t.cols, b[i]);
        }
        let pivots = aug.rref(f);
        let mut x = vec![0u64; t.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            if pc == t.cols {
                return None; // inconsistent
            }
            x[pc] = aug.get(r, t.cols);
        }
        Some(x)
    }
}

/// Univariate polynomial over `F_p`, coefficients ascending, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    pub c: Vec<u64>,
}

impl FpPoly {
    pub fn zero() -> Self {
        FpPoly { c: vec![] }
    }

    pub fn from_coeffs(mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { c }
    }

    pub fn one() -> Self {
        FpPoly { c: vec![1] }
    }

    pub fn x() -> Self {
        FpPoly { c: vec![0, 1] }
    }

    pub fn constant(v: u64) -> Self {
        FpPoly::from_coeffs(vec![v])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        assert!(!self.is_zero());
        self.c.len() - 1
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap()
    }

    pub fn eval(&self, f: &PrimeField, x: u64) -> u64 {
        let mut acc = 0u64;
        for &ci in self.c.iter().rev() {
            acc = f.add(f.mul(acc, x), ci);
        }
        acc
    }

    pub fn add(&self, f: &PrimeField, other: &FpPoly) -> FpPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = other.c.get(i).copied().unwrap_or(0);
            out[i] = f.add(a, b);
        }
        FpPoly::from_coeffs(out)
    }

    pub fn sub(&self, f: &PrimeField, other: &FpPoly) -> FpPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = other.c.get(i).copied().unwrap_or(0);
            out[i] = f.sub(a, b);
        }
        FpPoly::from_coeffs(out)
    }

    pub fn mul(&self, f: &PrimeField, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero();
        }
        let mut out = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        FpPoly::from_coeffs(out)
    }

    pub fn monic(&self, f: &PrimeField) -> FpPoly {
        if self.is_zero() {
            return FpPoly::zero();
        }
        let inv = f.inv(self.lc());
        FpPoly::from_coeffs(self.c.iter().map(|&x| f.mul(x, inv)).collect())
    }

    pub fn rem(&self, f: &PrimeField, m: &FpPoly) -> FpPoly {
        assert!(!m.is_zero());
        let mut r = self.c.clone();
        let dm = m.deg();
        let inv = f.inv(m.lc());
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let k = r.len() - 1 - dm;
            if lead != 0 {
                let factor = f.mul(lead, inv);
                for (i, &mc) in m.c.iter().enumerate() {
                    r[k + i] = f.sub(r[k + i], f.mul(factor, mc));
                }
            }
            r.pop();
        }
        FpPoly::from_coeffs(r)
    }

    pub fn div_exact(&self, f: &PrimeField, m: &FpPoly) -> FpPoly {
        assert!(!m.is_zero());
        if self.is_zero() {
            return FpPoly::zero();
        }
        let mut r = self.c.clone();
        let dm = m.deg();
        let inv = f.inv(m.lc());
        let mut q = vec![0u64; r.len().saturating_sub(dm)];
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let k = r.len() - 1 - dm;
            if lead != 0 {
                let factor = f.mul(lead, inv);
                q[k] = factor;
                for (i, &mc) in m.c.iter().enumerate() {
                    r[k + i] = f.sub(r[k + i], f.mul(factor, mc));
                }
            }
            r.pop();
        }
        debug_assert!(FpPoly::from_coeffs(r).is_zero(), "division was not exact");
        FpPoly::from_coeffs(q)
    }

    pub fn gcd(&self, f: &PrimeField, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g`.
    pub fn xgcd(&self, f: &PrimeField, other: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (FpPoly::one(), FpPoly::zero());
        let (mut t0, mut t1) = (FpPoly::zero(), FpPoly::one());
        while !r1.is_zero() {
            // quotient of r0 by r1
            let mut q = FpPoly::zero();
            let mut r = r0.clone();
            let d1 = r1.deg();
            let inv = f.inv(r1.lc());
            while !r.is_zero() && r.deg() >= d1 {
                let k = r.deg() - d1;
                let factor = f.mul(r.lc(), inv);
                let mut qc = vec![0u64; k + 1];
                qc[k] = factor;
                let qk = FpPoly::from_coeffs(qc);
                q = q.add(f, &qk);
                r = r.sub(f, &qk.mul(f, &r1));
            }
            let r2 = r;
            let s2 = s0.sub(f, &q.mul(f, &s1));
            let t2 = t0.sub(f, &q.mul(f, &t1));
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (FpPoly::zero(), FpPoly::zero(), FpPoly::zero());
        }
        let lead = f.inv(r0.lc());
        let scale = FpPoly::constant(lead);
        (r0.monic(f), s0.mul(f, &scale), t0.mul(f, &scale))
    }

    pub fn derivative(&self, f: &PrimeField) -> FpPoly {
        if self.c.len() <= 1 {
            return FpPoly::zero();
        }
        let mut out = vec![0u64; self.c.len() - 1];
        for i in 1..self.c.len() {
            out[i - 1] = f.mul(self.c[i], (i as u64) % f.p());
        }
        FpPoly::from_coeffs(out)
    }

    pub fn pow_mod(&self, f: &PrimeField, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(f, m);
        let mut acc = FpPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }
}

/// Squarefree decomposition in characteristic `p`.
fn squarefree_parts(f: &PrimeField, poly: &FpPoly) -> Vec<(FpPoly, usize)> {
    let mut out: Vec<(FpPoly, usize)> = Vec::new();
    let mut stack = vec![(poly.monic(f), 1usize)];
    while let Some((g, mult)) = stack.pop() {
        if g.deg() == 0 {
            continue;
        }
        let dg = g.derivative(f);
        if dg.is_zero() {
            // g = h(x^p); take p-th root (coefficient-wise identity over F_p).
            let p = f.p() as usize;
            let mut hc = Vec::new();
            for (i, &ci) in g.c.iter().enumerate() {
                if i % p == 0 {
                    hc.push(ci);
                } else {
                    debug_assert_eq!(ci, 0);
                }
            }
            stack.push((FpPoly::from_coeffs(hc), mult * p));
            continue;
        }
        let mut c = g.gcd(f, &dg);
        let mut w = g.div_exact(f, &c);
        let mut i = 1usize;
        while !(w.deg() == 0) {
            let y = w.gcd(f, &c);
            let fac = w.div_exact(f, &y);
            if fac.deg() > 0 {
                out.push((fac, i * mult));
            }
            w = y;
            c = c.div_exact(f, &w);
            i += 1;
        }
        if c.deg() > 0 {
            stack.push((c, mult));
        }
    }
    out
}

/// Distinct-degree factorization of a squarefree monic polynomial.
fn distinct_degree(f: &PrimeField, poly: &FpPoly) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut g = poly.clone();
    let mut h = FpPoly::x().rem(f, &g);
    let mut d = 0usize;
    while g.deg() >= 1 {
        d += 1;
        if g.deg() < 2 * d {
            out.push((g.clone(), g.deg()));
            break;
        }
        h = h.pow_mod(f, f.p(), &g);
        let diff = h.sub(f, &FpPoly::x().rem(f, &g));
        let factor = diff.gcd(f, &g);
        if factor.deg() > 0 {
            out.push((factor.clone(), d));
            g = g.div_exact(f, &factor);
            h = h.rem(f, &g);
        }
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus), deterministic seed sweep.
fn equal_degree(f: &PrimeField, poly: &FpPoly, d: usize, out: &mut Vec<FpPoly>) {
    if poly.deg() == d {
        out.push(poly.clone());
        return;
    }
    let p = f.p();
    // Try pseudo-random polynomials from a fixed sweep; for tiny p this
    // enumerates enough of the space to always succeed.
    let mut counter = 1u64;
    loop {
        let mut coeffs = Vec::with_capacity(2 * d);
        let mut state = counter
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        for _ in 0..(2 * d).max(2) {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            coeffs.push((state >> 33) % p);
        }
        counter += 1;
        let r = FpPoly::from_coeffs(coeffs);
        if r.is_zero() {
            continue;
        }
        let split = if p == 2 {
            // trace map T(r) = r + r^2 + ... + r^{2^{d-1}} mod poly
            let mut tr = r.rem(f, poly);
            let mut cur = tr.clone();
            for _ in 1..d {
                cur = cur.mul(f, &cur).rem(f, poly);
                tr = tr.add(f, &cur);
            }
            tr.gcd(f, poly)
        } else {
            let e = (p.pow(d as u32) - 1) / 2;
            let rp = r.pow_mod(f, e, poly);
            rp.sub(f, &FpPoly::one()).gcd(f, poly)
        };
        if split.deg() > 0 && split.deg() < poly.deg() {
            let rest = poly.div_exact(f, &split);
            equal_degree(f, &split.monic(f), d, out);
            equal_degree(f, &rest.monic(f), d, out);
            return;
        }
    }
}

/// Full irreducible factorization of a nonzero univariate polynomial.
/// Returns monic irreducible factors with multiplicities.
pub fn factor_univariate(f: &PrimeField, poly: &FpPoly) -> Vec<(FpPoly, usize)> {
    assert!(!poly.is_zero());
    let mut out = Vec::new();
    for (sq, mult) in squarefree_parts(f, poly) {
        for (prod, d) in distinct_degree(f, &sq) {
            let mut irr = Vec::new();
            equal_degree(f, &prod, d, &mut irr);
            for g in irr {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| a.0.c.cmp(&b.0.c));
    out
}

/// Minimal polynomial of a square matrix: reduce successive powers against an
/// incrementally maintained echelon basis until a dependency appears.
pub fn min_poly_matrix(f: &PrimeField, m: &FpMatrix) -> FpPoly {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return FpPoly::one();
    }
    let dim = n * n;
    // (echelon row, pivot index, expression in terms of original powers)
    let mut ech: Vec<(Vec<u64>, usize, Vec<u64>)> = Vec::new();
    let mut pow = FpMatrix::identity(n);
    for k in 0..=n {
        let mut row: Vec<u64> = pow.a.iter().map(|&x| x as u64).collect();
        let mut comb = vec![0u64; n + 2];
        comb[k] = 1;
        for (erow, piv, ecomb) in &ech {
            let c = row[*piv];
            if c != 0 {
                for i in 0..dim {
                    row[i] = f.sub(row[i], f.mul(c, erow[i]));
                }
                for i in 0..comb.len() {
                    comb[i] = f.sub(comb[i], f.mul(c, ecomb[i]));
                }
            }
        }
        if let Some(piv) = row.iter().position(|&x| x != 0) {
            let inv = f.inv(row[piv]);
            for x in row.iter_mut() {
                *x = f.mul(*x, inv);
            }
            for x in comb.iter_mut() {
                *x = f.mul(*x, inv);
            }
            ech.push((row, piv, comb));
        } else {
            return FpPoly::from_coeffs(comb[..=k].to_vec());
        }
        pow = pow.mul(f, m);
    }
    unreachable!("minimal polynomial has degree at most n");
}
