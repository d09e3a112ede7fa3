//! Monic polynomial arithmetic over a prime field, just enough to read off
//! factorization types: squarefree decomposition (characteristic-aware) and
//! distinct-degree splitting. No factor is ever materialized beyond the
//! products these two decompositions produce.

/// A polynomial over F_p, little-endian coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        assert!(p >= 2);
        for c in &mut coeffs {
            *c %= p;
        }
        let mut out = FpPoly { p, coeffs };
        out.normalize();
        out
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        FpPoly { p, coeffs: vec![1] }
    }

    /// The polynomial `t`.
    pub fn t(p: u64) -> Self {
        FpPoly { p, coeffs: vec![0, 1] }
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // Fermat inverse; p is prime and a ≠ 0.
        assert!(a % self.p != 0);
        let mut result = 1u64;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_mod(result, base);
            }
            base = self.mul_mod(base, base);
            e >>= 1;
        }
        result
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        let mut out = FpPoly { p: self.p, coeffs };
        out.normalize();
        out
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
            .collect();
        let mut out = FpPoly { p: self.p, coeffs };
        out.normalize();
        out
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + self.mul_mod(a, b)) % self.p;
            }
        }
        let mut out = FpPoly { p: self.p, coeffs };
        out.normalize();
        out
    }

    /// Remainder of division by a nonzero polynomial.
    pub fn rem(&self, divisor: &FpPoly) -> FpPoly {
        self.divmod(divisor).1
    }

    pub fn divmod(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        assert_eq!(self.p, divisor.p);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = self.inv_mod(divisor.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = self.mul_mod(rem[k], lead_inv);
            if c != 0 {
                quot[k - dd] = c;
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    let idx = k - dd + i;
                    rem[idx] = (rem[idx] + self.p - self.mul_mod(c, dc)) % self.p;
                }
            }
            rem.pop();
        }
        let mut q = FpPoly { p: self.p, coeffs: quot };
        let mut r = FpPoly { p: self.p, coeffs: rem };
        q.normalize();
        r.normalize();
        (q, r)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &FpPoly) -> FpPoly {
        let (q, r) = self.divmod(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn make_monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.inv_mod(*self.coeffs.last().unwrap());
        FpPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| self.mul_mod(c, inv)).collect(),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> FpPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul_mod(c, (i as u64) % self.p))
            .collect();
        let mut out = FpPoly { p: self.p, coeffs };
        out.normalize();
        out
    }

    /// The unique `h` with `h(t)^p = self`, defined when the derivative
    /// vanishes (all exponents divisible by p; coefficients are fixed by
    /// Frobenius over the prime field).
    pub fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        let coeffs: Vec<u64> = self.coeffs.iter().step_by(p).copied().collect();
        debug_assert!(self
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || i % p == 0));
        let mut out = FpPoly { p: self.p, coeffs };
        out.normalize();
        out
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn powmod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }
}

/// Squarefree decomposition of a monic polynomial: pairs (monic squarefree
/// factor, multiplicity) with distinct multiplicities, valid in any
/// characteristic. Multiplicities divisible by p are reached by recursing on
/// the p-th root of the residual p-th-power part.
pub fn squarefree_decomp(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p as u32;
    if f.deg_or_zero() == 0 {
        return Vec::new();
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        return squarefree_decomp(&f.pth_root())
            .into_iter()
            .map(|(s, m)| (s, m * p))
            .collect();
    }
    let mut out = Vec::new();
    let mut g = f.gcd(&deriv);
    let mut w = f.div_exact(&g).make_monic();
    let mut i = 1u32;
    while w.deg_or_zero() > 0 {
        let y = w.gcd(&g);
        let fac = w.div_exact(&y).make_monic();
        if fac.deg_or_zero() > 0 {
            out.push((fac, i));
        }
        g = g.div_exact(&y).make_monic();
        w = y;
        i += 1;
    }
    if g.deg_or_zero() > 0 {
        for (s, m) in squarefree_decomp(&g.pth_root()) {
            out.push((s, m * p));
        }
    }
    out
}

/// Distinct-degree splitting of a monic squarefree polynomial: pairs
/// (degree d, number of irreducible factors of degree d), found by gcds with
/// t^(q^d) - t computed through modular exponentiation. Factors themselves
/// are never extracted.
pub fn distinct_degree_counts(s: &FpPoly) -> Vec<(u32, u32)> {
    let q = s.p;
    let mut s = s.make_monic();
    let mut out = Vec::new();
    let mut x = FpPoly::t(q).rem(&s);
    let mut d = 0u32;
    while s.deg_or_zero() > 0 {
        d += 1;
        if 2 * d as usize > s.deg_or_zero() {
            out.push((s.deg_or_zero() as u32, 1));
            break;
        }
        x = x.powmod(q, &s);
        let g = s.gcd(&x.sub(&FpPoly::t(q)));
        let gd = g.deg_or_zero();
        if gd > 0 {
            out.push((d, gd as u32 / d));
            s = s.div_exact(&g).make_monic();
            x = x.rem(&s);
        }
    }
    out
}

/// Factorization type of a monic polynomial: (irreducible factor degree,
/// multiplicity), one entry per irreducible factor, canonically sorted.
pub fn factor_type(f: &FpPoly) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for (sq, e) in squarefree_decomp(f) {
        for (d, count) in distinct_degree_counts(&sq) {
            for _ in 0..count {
                out.push((d, e));
            }
        }
    }
    out.sort_unstable();
    out
}
