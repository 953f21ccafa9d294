//! Dense univariate polynomials over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Coefficients lowest degree first. The zero polynomial is the empty list;
/// otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - r`
    pub fn linear_root(r: Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; use where zero is excluded.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in any ring that can absorb rationals.
    pub fn eval_with<T, FAdd, FMul>(&self, x: &T, zero: T, add_const: FAdd, mul: FMul) -> T
    where
        FAdd: Fn(T, &Rational) -> T,
        FMul: Fn(&T, &T) -> T,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(zero, |acc, c| add_const(mul(&acc, x), c))
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &UniPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dl = d.lc().expect("polynomial division by zero").clone();
        let dd = d.deg();
        if self.degree().is_none_or(|n| n < dd) {
            return (Self::zero(), self.clone());
        }
        let inv = dl.recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lc().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// Splits `self = content · primitive` with a primitive integer polynomial
    /// whose leading coefficient is positive.
    pub fn primitive_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.lc().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    /// Resultant `lc(f)^{deg g} · prod g(rho)` over the roots `rho` of `f`,
    /// computed with the subresultant PRS over Z.
    pub fn resultant(&self, other: &UniPoly) -> Result<Rational> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (cf, f) = self.primitive_part();
        let (cg, g) = other.primitive_part();
        let (m, n) = (self.deg() as u32, other.deg() as u32);
        let scale = num_traits::pow(cf, n as usize) * num_traits::pow(cg, m as usize);
        Ok(scale * Rational::from_integer(int_poly::resultant(&f, &g)))
    }
}

/// Integer-coefficient helpers used by the resultant and the factorizer.
pub(crate) mod int_poly {
    use super::*;

    pub fn trim(v: &mut Vec<BigInt>) {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
    }

    pub fn content(f: &[BigInt]) -> BigInt {
        f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    /// Pseudo-remainder: `lc(b)^{deg a - deg b + 1} · a mod b`.
    pub fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let db = b.len() - 1;
        let lb = &b[db];
        let mut r = a.to_vec();
        if r.len() <= db {
            return r;
        }
        let mut steps = r.len() - db;
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= lb;
            }
            for (i, bi) in b.iter().enumerate() {
                r[k + i] -= &lr * bi;
            }
            trim(&mut r);
            steps -= 1;
        }
        let extra = num_traits::pow(lb.clone(), steps);
        r.iter().map(|c| c * &extra).collect()
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_scalar(a: &[BigInt], d: &BigInt) -> Vec<BigInt> {
        a.iter()
            .map(|c| {
                debug_assert!((c % d).is_zero());
                c / d
            })
            .collect()
    }

    /// Subresultant algorithm for the resultant over Z.
    pub fn resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
        if a.is_empty() || b.is_empty() {
            return BigInt::zero();
        }
        let deg = |p: &[BigInt]| p.len() as u64 - 1;
        let ca = content(a);
        let cb = content(b);
        let mut a: Vec<BigInt> = div_scalar(a, &ca);
        let mut b: Vec<BigInt> = div_scalar(b, &cb);
        let t = num_traits::pow(ca, deg(&b) as usize) * num_traits::pow(cb, deg(&a) as usize);
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        let mut s = BigInt::one();
        if deg(&a) < deg(&b) {
            std::mem::swap(&mut a, &mut b);
            if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
                s = -s;
            }
        }
        loop {
            if deg(&b) == 0 {
                let da = deg(&a) as usize;
                // h^{1-da} · lc(b)^{da}
                let num = num_traits::pow(b[0].clone(), da);
                let h_final = if da == 0 {
                    &h * num
                } else {
                    num / num_traits::pow(h.clone(), da - 1)
                };
                return s * t * h_final;
            }
            let delta = deg(&a) - deg(&b);
            if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
                s = -s;
            }
            let r = prem(&a, &b);
            if r.is_empty() {
                return BigInt::zero();
            }
            a = b;
            let div = &g * num_traits::pow(h.clone(), delta as usize);
            b = div_scalar(&r, &div);
            g = a.last().unwrap().clone();
            // h = g^delta / h^{delta-1}
            h = if delta == 0 {
                h
            } else {
                num_traits::pow(g.clone(), delta as usize) / num_traits::pow(h.clone(), delta as usize - 1)
            };
        }
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::serde_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(UniPoly::new(rational::serde_vec::deserialize(d)?))
    }
}

/// Power sums `p_1..p_J` of the roots of a monic polynomial, by Newton's identities.
pub fn power_sums_from_poly(f: &UniPoly, count: usize) -> Result<Vec<Rational>> {
    if !f.is_monic() || f.deg() == 0 {
        return Err(Error::NotMonic);
    }
    let n = f.deg();
    // f = x^n + a_{n-1} x^{n-1} + ... + a_0; e_k = (-1)^k a_{n-k}
    let a = |k: usize| f.coeff(n - k);
    let mut p: Vec<Rational> = Vec::with_capacity(count + 1);
    p.push(Rational::from_integer(BigInt::from(n)));
    for j in 1..=count {
        // p_j + a_{n-1} p_{j-1} + ... + a_{n-j+1} p_1 + j a_{n-j} = 0   (j <= n)
        // p_j + a_{n-1} p_{j-1} + ... + a_0 p_{j-n} = 0                  (j > n)
        let mut s = Rational::zero();
        for k in 1..j.min(n + 1) {
            s += a(k) * &p[j - k];
        }
        if j <= n {
            s += a(j) * Rational::from_integer(BigInt::from(j));
        }
        p.push(-s);
    }
    p.remove(0);
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[4, 0, 2]).gcd(&UniPoly::zero()), p(&[2, 0, 1]));
        assert_eq!(p(&[-2, 0, 1]).gcd(&p(&[-3, 0, 1])), UniPoly::one());
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(p(&[-1, 1]).resultant(&p(&[-2, 1])).unwrap(), int(-1));
        let f = p(&[3, -1, 0, 2]);
        assert_eq!(f.resultant(&f).unwrap(), int(0));
        assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[-3, 0, 1])).unwrap(), int(1));
        assert_eq!(UniPoly::zero().resultant(&f), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn resultant_with_rational_coefficients_and_constants() {
        // Res(2x - 1, x^2 + 1) = 2^2 * ((1/2)^2 + 1) = 5
        let f = UniPoly::new(vec![int(-1), int(2)]);
        assert_eq!(f.resultant(&p(&[1, 0, 1])).unwrap(), int(5));
        // Res(f, c) = c^{deg f}
        assert_eq!(p(&[1, 0, 1]).resultant(&UniPoly::constant(rat(3, 2))).unwrap(), rat(9, 4));
        assert_eq!(UniPoly::constant(int(3)).resultant(&p(&[1, 0, 1])).unwrap(), int(9));
    }

    #[test]
    fn power_sum_examples() {
        let a = rat(3, 7);
        let f = UniPoly::linear_root(a.clone());
        assert_eq!(power_sums_from_poly(&f, 3).unwrap(), vec![a.clone(), &a * &a, &a * &a * &a]);
        assert_eq!(power_sums_from_poly(&p(&[-1, -1, 1]), 3).unwrap(), vec![int(1), int(3), int(4)]);
        assert_eq!(power_sums_from_poly(&p(&[1, 0, 1]), 2).unwrap(), vec![int(0), int(-2)]);
        assert_eq!(power_sums_from_poly(&p(&[1, 2]), 2), Err(Error::NotMonic));
    }

    #[test]
    fn division_and_ext_gcd() {
        let f = p(&[-1, 0, 0, 1]);
        let g = p(&[1, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(&(&q * &g) + &r, f);
        let a = p(&[1, 1]);
        let m = p(&[-2, 0, 1]);
        let (gcd, s, t) = a.ext_gcd(&m);
        assert_eq!(gcd, UniPoly::one());
        assert_eq!(&(&s * &a) + &(&t * &m), UniPoly::one());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(UniPoly::new(vec![rat(1, 2), int(-3)]).to_string(), "-3*x + (1/2)");
    }
}
