//! Certified enclosures of the absolute logarithmic Weil height.
//!
//! `h(x) = log M(F) / deg F` for the primitive integer minimal polynomial `F`.
//! Graeffe root squaring maps `F` to `G_k` with `M(G_k) = M(F)^{2^k}`, and the
//! coefficient bounds
//!
//! ```text
//! max_i |b_i| / C(m, i)  <=  M(G_k)  <=  ||G_k||_2  <=  sqrt(m+1) · max_i |b_i|
//! ```
//!
//! pin `log M(F)` to an interval of width `O(m / 2^k)`. Coefficients are carried
//! as balls `[mid - rad, mid + rad] · 2^exp` with outward rounding, so every
//! bound is rigorous even after truncation.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numfield::NFElement;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightBound {
    #[serde(with = "rational::serde_str")]
    pub lower: Rational,
    #[serde(with = "rational::serde_str")]
    pub upper: Rational,
}

impl HeightBound {
    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, v: f64) -> bool {
        let v = Rational::from_float(v).expect("finite");
        self.lower <= v && v <= self.upper
    }
}

#[derive(Clone, Debug)]
struct Ball {
    mid: BigInt,
    rad: BigUint,
    exp: i64,
}

impl Ball {
    fn exact(v: BigInt) -> Ball {
        Ball { mid: v, rad: BigUint::zero(), exp: 0 }
    }

    fn is_zero(&self) -> bool {
        self.mid.is_zero() && self.rad.is_zero()
    }

    /// Bit length of the largest magnitude in the ball, relative to `exp`.
    fn top(&self) -> i64 {
        let hi = self.mid.magnitude() + &self.rad;
        hi.bits() as i64 + self.exp
    }

    /// Re-expresses the ball at exponent `e`, widening when bits are dropped.
    fn at_exp(&self, e: i64) -> Ball {
        if e <= self.exp {
            let s = (self.exp - e) as usize;
            Ball { mid: &self.mid << s, rad: &self.rad << s, exp: e }
        } else {
            let s = (e - self.exp) as usize;
            let mid = &self.mid >> s;
            let rad = (&self.rad >> s) + BigUint::from(2u32);
            Ball { mid, rad, exp: e }
        }
    }

    fn round(&self, prec: u64) -> Ball {
        let bits = (self.mid.magnitude() + &self.rad).bits();
        if bits <= prec {
            return self.clone();
        }
        self.at_exp(self.exp + (bits - prec) as i64)
    }

    fn mul(&self, other: &Ball) -> Ball {
        let (a, b) = (self.mid.magnitude(), other.mid.magnitude());
        let rad = a * &other.rad + &self.rad * b + &self.rad * &other.rad;
        Ball { mid: &self.mid * &other.mid, rad, exp: self.exp + other.exp }
    }

    /// Lower and upper bounds on `|value|` as `(mantissa, exp)` pairs.
    fn abs_range(&self) -> (BigUint, BigUint, i64) {
        let m = self.mid.magnitude();
        let lo = if m > &self.rad { m - &self.rad } else { BigUint::zero() };
        (lo, m + &self.rad, self.exp)
    }
}

/// Sum of balls, evaluated at a common exponent chosen from the largest term.
fn sum(terms: &[Ball], prec: u64) -> Ball {
    let live: Vec<&Ball> = terms.iter().filter(|b| !b.is_zero()).collect();
    let Some(top) = live.iter().map(|b| b.top()).max() else {
        return Ball::exact(BigInt::zero());
    };
    let e = top - prec as i64 - 8;
    let mut acc = Ball { mid: BigInt::zero(), rad: BigUint::zero(), exp: e };
    for b in live {
        let b = b.at_exp(e);
        acc.mid += b.mid;
        acc.rad += b.rad;
    }
    acc.round(prec)
}

/// One Graeffe step: `G_{k+1}(x^2) = (-1)^m G_k(x) G_k(-x)`.
fn graeffe(g: &[Ball], prec: u64) -> Vec<Ball> {
    let m = g.len() - 1;
    let neg = |i: usize, b: &Ball| {
        if i % 2 == 1 {
            Ball { mid: -b.mid.clone(), rad: b.rad.clone(), exp: b.exp }
        } else {
            b.clone()
        }
    };
    let gm: Vec<Ball> = g.iter().enumerate().map(|(i, b)| neg(i, b)).collect();
    (0..=m)
        .map(|j| {
            let terms: Vec<Ball> = (0..=2 * j)
                .filter(|&i| i <= m && 2 * j - i <= m)
                .map(|i| g[i].mul(&gm[2 * j - i]))
                .collect();
            let s = sum(&terms, prec);
            if m % 2 == 1 {
                Ball { mid: -s.mid, rad: s.rad, exp: s.exp }
            } else {
                s
            }
        })
        .collect()
}

/// Enclosure `[lo, hi]` of `log2(n · 2^e)` for `n > 0`.
fn log2_range(n: &BigUint, e: i64) -> (f64, f64) {
    let bits = n.bits() as i64;
    let shift = (bits - 53).max(0);
    let t = (n >> shift as usize).to_f64().expect("53-bit mantissa");
    let base = (shift + e) as f64;
    let lo = base + t.log2();
    let hi = base + (t + if shift > 0 { 1.0 } else { 0.0 }).log2();
    let slack = (lo.abs() + hi.abs() + 64.0) * f64::EPSILON * 8.0;
    (lo - slack, hi + slack)
}

fn binomial(m: usize, i: usize) -> BigUint {
    let mut c = BigUint::one();
    for j in 0..i {
        c = c * BigUint::from(m - j) / BigUint::from(j + 1);
    }
    c
}

/// Bounds on `log2 M(G)` from the coefficients of `G`.
fn log2_mahler_bounds(g: &[Ball]) -> (f64, f64) {
    let m = g.len() - 1;
    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (i, b) in g.iter().enumerate() {
        let (l, h, e) = b.abs_range();
        if !l.is_zero() {
            let c = log2_range(&binomial(m, i), 0).1;
            lo = lo.max(log2_range(&l, e).0 - c);
        }
        if !h.is_zero() {
            hi = hi.max(log2_range(&h, e).1);
        }
    }
    let extra = 0.5 * ((m + 1) as f64).log2() * (1.0 + 1e-12);
    (lo, hi + extra)
}

/// Two-sided bound on `h(x)`, the absolute logarithmic Weil height.
pub fn log_height_bounds(x: &NFElement, precision_bits: u32) -> Result<HeightBound> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if precision_bits == 0 {
        return Err(Error::InvalidArgument("precision_bits must be positive".into()));
    }
    let minpoly = x.minpoly();
    let m = minpoly.deg();
    let (_, prim) = minpoly.primitive_part();
    let prec = precision_bits as u64 + 2 * m as u64 + 16;
    let steps = (precision_bits / 2).clamp(1, 48);

    let mut g: Vec<Ball> = prim.into_iter().map(Ball::exact).collect();
    let mut best_lo = 0.0f64;
    let mut best_hi = f64::INFINITY;
    for k in 0..=steps {
        if k > 0 {
            g = graeffe(&g, prec);
        }
        let (lo, hi) = log2_mahler_bounds(&g);
        let scale = 2f64.powi(k as i32) * m as f64;
        best_lo = best_lo.max(lo / scale);
        best_hi = best_hi.min(hi / scale);
    }
    let ln2 = std::f64::consts::LN_2;
    let lower = (best_lo * ln2 * (1.0 - 1e-12) - 1e-300).max(0.0);
    let upper = best_hi * ln2 * (1.0 + 1e-12) + 1e-15;
    Ok(HeightBound {
        lower: to_rational(lower),
        upper: to_rational(upper.max(lower)),
    })
}

fn to_rational(v: f64) -> Rational {
    Rational::from_float(v).expect("finite bound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;
    use crate::poly::UniPoly;
    use crate::rational::{int, rat};

    fn width(b: &HeightBound) -> f64 {
        b.width().to_f64().unwrap()
    }

    #[test]
    fn rational_heights() {
        let q = NumberField::rationals();
        let ln2 = std::f64::consts::LN_2;
        let b = log_height_bounds(&q.from_rational(int(2)), 64).unwrap();
        assert!(b.contains(ln2));
        assert!(width(&b) < 1e-6);
        let b = log_height_bounds(&q.from_rational(rat(1, 2)), 64).unwrap();
        assert!(b.contains(ln2));
        assert!(width(&b) < 1e-6);
        let b = log_height_bounds(&q.from_rational(int(1)), 64).unwrap();
        assert!(b.contains(0.0));
    }

    #[test]
    fn sqrt_two_height() {
        let k = NumberField::new(UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let b = log_height_bounds(&k.generator(), 64).unwrap();
        assert!(b.contains(0.5 * std::f64::consts::LN_2));
        assert!(width(&b) < 1e-6);
    }

    #[test]
    fn golden_ratio_height() {
        let k = NumberField::new(UniPoly::from_ints(&[-1, -1, 1])).unwrap();
        let phi: f64 = (1.0 + 5f64.sqrt()) / 2.0;
        let b = log_height_bounds(&k.generator(), 64).unwrap();
        assert!(b.contains(0.5 * phi.ln()), "{b:?}");
    }

    #[test]
    fn width_shrinks_with_precision() {
        let k = NumberField::new(UniPoly::from_ints(&[1, -3, 0, 1])).unwrap();
        let x = k.element(vec![int(1), rat(1, 3), int(2)]).unwrap();
        let coarse = log_height_bounds(&x, 8).unwrap();
        let fine = log_height_bounds(&x, 64).unwrap();
        assert!(width(&fine) < width(&coarse));
    }

    #[test]
    fn zero_is_rejected() {
        let q = NumberField::rationals();
        assert_eq!(log_height_bounds(&q.zero(), 64), Err(Error::ZeroElement));
    }
}
