//! The scalar type and its string form.
//!
//! Rationals are `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator. On the wire they are strings `"p/q"` in lowest
//! terms with the sign on the numerator, or `"p"` when the denominator is one.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical string form; `Display` of `BigRational` already prints `p/q` or `p`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Exponent of `p` in the nonzero integer `n`.
pub fn int_valuation(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `v_p(r)`, or `None` for zero.
pub fn valuation(r: &Rational, p: &BigInt) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let up = int_valuation(r.numer(), p) as i64;
    let down = int_valuation(r.denom(), p) as i64;
    Some(up - down)
}

/// Distinct prime divisors of `|n|`; empty for 0 and ±1.
pub fn prime_divisors(n: &BigInt) -> BTreeSet<BigInt> {
    let n = n.magnitude();
    if n <= &BigUint::one() {
        return BTreeSet::new();
    }
    if let Some(small) = n.to_u64() {
        return num_prime::nt_funcs::factorize64(small)
            .into_keys()
            .map(BigInt::from)
            .collect();
    }
    num_prime::nt_funcs::factorize(n.clone())
        .into_keys()
        .map(|p| BigInt::from_biguint(Sign::Plus, p))
        .collect()
}

pub fn is_prime(p: &BigInt) -> bool {
    match p.to_biguint() {
        Some(u) if u > BigUint::one() => num_prime::nt_funcs::is_prime(&u, None).probably(),
        _ => false,
    }
}

/// `floor(log2(n))` for a positive integer.
pub fn floor_log2(n: &BigUint) -> u64 {
    debug_assert!(!n.is_zero());
    n.bits() - 1
}

/// Smallest integer `>= r`.
pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// serde adapters: a rational as its canonical string.
pub mod serde_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let raw = RawRational::deserialize(d)?;
        raw.into_rational().map_err(serde::de::Error::custom)
    }

    /// Accepts `"p/q"` strings and, for convenience, bare JSON integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RawRational {
        Str(String),
        Int(i64),
    }

    impl RawRational {
        pub(crate) fn into_rational(self) -> Result<Rational> {
            match self {
                RawRational::Str(s) => parse_rational(&s),
                RawRational::Int(i) => Ok(int(i)),
            }
        }
    }
}

/// serde adapters for `Vec<Rational>`.
pub mod serde_vec {
    use super::serde_str::RawRational;
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        Vec::<RawRational>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_rational().map_err(serde::de::Error::custom))
            .collect()
    }
}
