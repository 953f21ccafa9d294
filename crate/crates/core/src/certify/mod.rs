//! Certifiers. Each procedure returns a [`Certificate`] whose canonical JSON
//! form is stable across runs.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::numfield::{Field, NFElement};
use crate::rational::{self, Rational};

mod dio;
mod groupring;
mod k2;
mod powersum;
mod subsum;
mod trace_window;

pub use dio::{dio_certificate, dio_search};
pub use groupring::{groupring_eval, groupring_window};
pub use k2::{k2_certify, k2_constant, K2Constant};
pub use powersum::{powersum_window, ClassReport, ClassStatus, PowerSumReport, ResidueReport, TermReport};
pub use subsum::{subsum_certificate, subsum_nonvanishing, VanishingSubsum, MAX_SUBSUM_TERMS};
pub use trace_window::{default_trace_window, trace_power_window, TraceWindowOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Integral,
    NotIntegral,
    Pass,
    FailWitness,
    VanishingClass,
    Inconclusive,
    Conforms,
}

impl Verdict {
    pub fn is_inconclusive(self) -> bool {
        self == Verdict::Inconclusive
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub index: u64,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
}

impl Witness {
    pub fn new(index: u64, detail: impl Into<String>) -> Self {
        Witness { index, detail: detail.into(), value: None }
    }

    pub fn with_value(mut self, value: Value) -> Self {
        self.value = Some(value);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub start: u64,
    pub end: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub procedure: String,
    pub verdict: Verdict,
    pub window: Window,
    pub witnesses: Vec<Witness>,
    pub bound_used: u64,
    pub notes: Vec<String>,
    pub details: Value,
}

impl Certificate {
    pub fn new(procedure: &str, verdict: Verdict, window: (u64, u64), bound_used: u64) -> Self {
        Certificate {
            procedure: procedure.to_string(),
            verdict,
            window: Window { start: window.0, end: window.1 },
            witnesses: Vec::new(),
            bound_used,
            notes: Vec::new(),
            details: Value::Object(Default::default()),
        }
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    /// Compact JSON with sorted keys.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("certificates are plain data");
        serde_json::to_string(&v).expect("serializable")
    }

    pub fn detail(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.details {
            map.insert(key.to_string(), value);
        }
    }
}

/// JSON value of a rational: its canonical string.
pub fn rational_json(r: &Rational) -> Value {
    Value::String(rational::format_rational(r))
}

/// JSON value of an element: `{"coords": [...]}`.
pub fn element_json(x: &NFElement) -> Value {
    serde_json::json!({ "coords": x.coords().iter().map(rational_json).collect::<Vec<_>>() })
}

/// Generalized power sum data `m_n = Σ λ_i α_i^n` inside one field.
#[derive(Clone, Debug)]
pub struct PowerSumSpec {
    field: Field,
    lambdas: Vec<NFElement>,
    alphas: Vec<NFElement>,
}

impl PowerSumSpec {
    pub fn new(field: &Field, lambdas: Vec<NFElement>, alphas: Vec<NFElement>) -> Result<Self> {
        if lambdas.len() != alphas.len() {
            return Err(Error::LengthMismatch { expected: alphas.len(), got: lambdas.len() });
        }
        let probe = field.zero();
        for x in lambdas.iter().chain(&alphas) {
            x.check_same_field(&probe)?;
            if x.is_zero() {
                return Err(Error::ZeroElement);
            }
        }
        Ok(PowerSumSpec { field: field.clone(), lambdas, alphas })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lambdas(&self) -> &[NFElement] {
        &self.lambdas
    }

    pub fn alphas(&self) -> &[NFElement] {
        &self.alphas
    }

    pub fn k(&self) -> usize {
        self.alphas.len()
    }

    /// `m_n` by direct powering.
    pub fn term(&self, n: u64) -> NFElement {
        self.lambdas
            .iter()
            .zip(&self.alphas)
            .fold(self.field.zero(), |acc, (l, a)| &acc + &(l * &a.pow(n)))
    }
}

/// Window length `d + d·floor(log2(d·|n|·q·|ab|)) + 1`; pass 1 for the
/// factors that do not apply.
pub fn bound_thm_de_smit_general(d: u64, n: &BigInt, q: &BigInt, ab: &BigInt) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::ZeroWeightSum);
    }
    if ab.is_zero() {
        return Err(Error::InvalidArgument("ab must be nonzero".into()));
    }
    if d == 0 || !q.is_positive() {
        return Err(Error::InvalidArgument("d and q must be positive".into()));
    }
    let prod = BigInt::from(d) * n.abs() * q * ab.abs();
    let lg = rational::floor_log2(prod.magnitude());
    Ok(d + d * lg + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(d: u64, n: i64, q: i64, ab: i64) -> Result<u64> {
        bound_thm_de_smit_general(d, &BigInt::from(n), &BigInt::from(q), &BigInt::from(ab))
    }

    #[test]
    fn bound_examples() {
        assert_eq!(b(2, 1, 1, 1).unwrap(), 5);
        assert_eq!(b(1, 1, 1, 1).unwrap(), 2);
        assert_eq!(b(2, 1, 4, 1).unwrap(), 9);
        assert_eq!(b(2, -3, 1, 1).unwrap(), 2 + 2 * 2 + 1);
        assert_eq!(b(2, 0, 1, 1), Err(Error::ZeroWeightSum));
    }

    #[test]
    fn canonical_json_sorts_keys() {
        let c = Certificate::new("demo", Verdict::Pass, (1, 3), 3);
        let s = c.to_canonical_json();
        assert!(s.starts_with(r#"{"bound_used":3,"details":{},"notes":[],"procedure":"demo""#), "{s}");
        assert!(s.contains(r#""verdict":"Pass","window":{"end":3,"start":1},"witnesses":[]"#));
    }
}
