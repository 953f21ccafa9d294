//! Univariate polynomials with coefficients in a number field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numfield::{Field, NFElement};
use crate::poly::UniPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct NfPoly {
    field: Field,
    coeffs: Vec<NFElement>,
}

impl NfPoly {
    pub fn new(field: &Field, mut coeffs: Vec<NFElement>) -> Result<Self> {
        let probe = field.zero();
        for c in &coeffs {
            c.check_same_field(&probe)?;
        }
        while coeffs.last().is_some_and(NFElement::is_zero) {
            coeffs.pop();
        }
        Ok(NfPoly { field: field.clone(), coeffs })
    }

    fn raw(field: &Field, mut coeffs: Vec<NFElement>) -> Self {
        while coeffs.last().is_some_and(NFElement::is_zero) {
            coeffs.pop();
        }
        NfPoly { field: field.clone(), coeffs }
    }

    /// Lifts a rational polynomial.
    pub fn from_rational(field: &Field, p: &UniPoly) -> Self {
        Self::raw(field, p.coeffs().iter().map(|c| field.from_rational(c.clone())).collect())
    }

    pub fn zero(field: &Field) -> Self {
        Self::raw(field, Vec::new())
    }

    pub fn constant(c: NFElement) -> Self {
        let field = c.field().clone();
        Self::raw(&field, vec![c])
    }

    pub fn x(field: &Field) -> Self {
        Self::raw(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> NFElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&NFElement> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &NFElement) -> Self {
        Self::raw(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = NfPoly::constant(self.field.one());
        let mut base = self.clone();
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

    pub fn div_rem(&self, d: &NfPoly) -> Result<(NfPoly, NfPoly)> {
        let Some(dl) = d.lc() else {
            return Err(Error::DivisionByZero);
        };
        let inv = dl.inv()?;
        let dd = d.deg();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((NfPoly::zero(&self.field), self.clone()));
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&c * di);
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::raw(&self.field, q), Self::raw(&self.field, r)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &NfPoly) -> NfPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &NfPoly) -> Option<NfPoly> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn eval(&self, x: &NFElement) -> NFElement {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Degrees whose coefficients are not algebraic integers.
    pub fn non_integral_degrees(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_algebraic_integer()).collect()
    }
}

impl fmt::Debug for NfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NfPoly{:?}", self.coeffs)
    }
}

impl Add for &NfPoly {
    type Output = NfPoly;
    fn add(self, rhs: &NfPoly) -> NfPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NfPoly::raw(&self.field, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &NfPoly {
    type Output = NfPoly;
    fn sub(self, rhs: &NfPoly) -> NfPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NfPoly::raw(&self.field, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &NfPoly {
    type Output = NfPoly;
    fn mul(self, rhs: &NfPoly) -> NfPoly {
        if self.is_zero() || rhs.is_zero() {
            return NfPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        NfPoly::raw(&self.field, out)
    }
}

impl Neg for &NfPoly {
    type Output = NfPoly;
    fn neg(self) -> NfPoly {
        NfPoly::raw(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}
