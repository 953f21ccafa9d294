//! Multivariate polynomials over a number field and the valuation test for
//! multiplicative independence.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::numfield::{Field, NFElement};
use crate::valuation::{normalized_norm_valuation, prime_support};

/// `Σ c_e X^e` over exponent vectors `e` of a fixed length; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, NFElement>,
}

impl MultiPoly {
    pub fn new(field: &Field, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, NFElement)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, NFElement> = BTreeMap::new();
        let probe = field.zero();
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::LengthMismatch { expected: nvars, got: e.len() });
            }
            c.check_same_field(&probe)?;
            let slot = map.entry(e).or_insert_with(|| field.zero());
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { field: field.clone(), nvars, terms: map })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, NFElement> {
        &self.terms
    }

    pub fn eval(&self, point: &[NFElement]) -> Result<NFElement> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: point.len() });
        }
        Ok(self.terms.iter().fold(self.field.zero(), |acc, (e, c)| {
            let m = e.iter().zip(point).fold(c.clone(), |m, (&k, x)| &m * &x.pow(k as u64));
            &acc + &m
        }))
    }

    /// `P(α_1^n, ..., α_k^n)`.
    pub fn eval_powers(&self, alphas: &[NFElement], n: u64) -> Result<NFElement> {
        let pts: Vec<NFElement> = alphas.iter().map(|a| a.pow(n)).collect();
        self.eval(&pts)
    }
}

/// Whether `P(0, ..., X_m, ..., 0)` is non-constant; `m` is 1-based.
pub fn monomial_condition(p: &MultiPoly, m: usize) -> Result<bool> {
    if m == 0 || m > p.nvars {
        return Err(Error::IndexOutOfRange { index: m, count: p.nvars });
    }
    let axis = m - 1;
    Ok(p.terms.keys().any(|e| e[axis] > 0 && e.iter().enumerate().all(|(i, &k)| i == axis || k == 0)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Independence {
    Independent,
    Inconclusive,
}

/// Full rank of the normalized norm-valuation matrix proves multiplicative
/// independence. Units carry no valuation data, so a deficient rank is never
/// read as dependence.
pub fn mult_indep_sufficient(alphas: &[NFElement]) -> Result<Independence> {
    let mut primes: BTreeSet<BigInt> = BTreeSet::new();
    for a in alphas {
        primes.extend(prime_support(a)?);
    }
    let mut rows = Vec::with_capacity(primes.len());
    for p in &primes {
        rows.push(alphas.iter().map(|a| normalized_norm_valuation(a, p)).collect::<Result<Vec<_>>>()?);
    }
    let rank = if rows.is_empty() { 0 } else { RatMatrix::from_rows(rows)?.rank() };
    Ok(if rank == alphas.len() { Independence::Independent } else { Independence::Inconclusive })
}
