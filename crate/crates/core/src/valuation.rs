//! p-adic valuation data read off Newton polygons of minimal polynomials.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numfield::NFElement;
use crate::poly::UniPoly;
use crate::rational::{self, Rational};

pub use crate::height::{log_height_bounds, HeightBound};

/// Root valuations of a polynomial at `p`, normalized so that `v_p(p) = 1`,
/// as `(value, multiplicity)` pairs in nonincreasing order of value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationProfile {
    pub p: BigInt,
    pub slopes: Vec<(Rational, usize)>,
}

impl ValuationProfile {
    pub fn degree(&self) -> usize {
        self.slopes.iter().map(|(_, m)| m).sum()
    }

    /// `Σ value·multiplicity`, the valuation of the constant-term ratio.
    pub fn weighted_sum(&self) -> Rational {
        self.slopes
            .iter()
            .map(|(v, m)| v * Rational::from_integer(BigInt::from(*m)))
            .sum()
    }

    pub fn max_value(&self) -> Option<&Rational> {
        self.slopes.first().map(|(v, _)| v)
    }

    pub fn is_trivial(&self) -> bool {
        self.slopes.iter().all(|(v, _)| v.is_zero())
    }

    /// The multiset with every value negated, again in nonincreasing order.
    pub fn negated(&self) -> ValuationProfile {
        let slopes = self.slopes.iter().rev().map(|(v, m)| (-v, *m)).collect();
        ValuationProfile { p: self.p.clone(), slopes }
    }
}

impl Serialize for ValuationProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Slopes<'a>(&'a [(Rational, usize)]);
        impl Serialize for Slopes<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (v, m) in self.0 {
                    seq.serialize_element(&(rational::format_rational(v), m))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("ValuationProfile", 2)?;
        match self.p.to_u64() {
            Some(p) => st.serialize_field("p", &p)?,
            None => st.serialize_field("p", &self.p.to_string())?,
        }
        st.serialize_field("slopes", &Slopes(&self.slopes))?;
        st.end()
    }
}

/// Newton polygon of `f` at the prime `p`: the negated slopes of the lower
/// convex hull of `(i, v_p(a_i))`, each with its horizontal length.
pub fn newton_polygon(f: &UniPoly, p: &BigInt) -> Result<ValuationProfile> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !rational::is_prime(p) {
        return Err(Error::NotPrime { value: p.to_string() });
    }
    if f.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let points: Vec<(i64, i64)> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| rational::valuation(c, p).map(|v| (i as i64, v)))
        .collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &points {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly below the segment a -> pt
            let cross = (b.0 - a.0) as i128 * (pt.1 - a.1) as i128
                - (b.1 - a.1) as i128 * (pt.0 - a.0) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let slopes = hull
        .windows(2)
        .map(|w| {
            let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            (-Rational::new(BigInt::from(dy), BigInt::from(dx)), dx as usize)
        })
        .collect();
    Ok(ValuationProfile { p: p.clone(), slopes })
}

fn nonzero(x: &NFElement) -> Result<()> {
    if x.is_zero() {
        Err(Error::ZeroElement)
    } else {
        Ok(())
    }
}

/// Valuations of `x` under all extensions of `v_p` to `Q(x)`.
pub fn element_valuations(x: &NFElement, p: &BigInt) -> Result<ValuationProfile> {
    nonzero(x)?;
    newton_polygon(&x.minpoly(), p)
}

/// `v_p(N_{L/Q}(x)) / [L:Q]`, additive in `x`.
pub fn normalized_norm_valuation(x: &NFElement, p: &BigInt) -> Result<Rational> {
    let prof = element_valuations(x, p)?;
    Ok(prof.weighted_sum() / Rational::from_integer(BigInt::from(prof.degree())))
}

/// Primes at which some conjugate of `x` has nonzero valuation.
pub fn prime_support(x: &NFElement) -> Result<BTreeSet<BigInt>> {
    nonzero(x)?;
    let minpoly = x.minpoly();
    let c0 = minpoly.coeff(0);
    let mut candidates = rational::prime_divisors(c0.numer());
    candidates.extend(rational::prime_divisors(c0.denom()));
    candidates.extend(rational::prime_divisors(&crate::numfield::minpoly_denominator(&minpoly)));
    let mut out = BTreeSet::new();
    for p in candidates {
        if !newton_polygon(&minpoly, &p)?.is_trivial() {
            out.insert(p);
        }
    }
    Ok(out)
}

/// `U(x) = max_p ceil(d · max(0, largest root valuation at p))`, with `d` the
/// ambient degree; dominates `v_P(x)` for every prime ideal `P` of ramification
/// index at most `d`.
pub fn max_valuation_upper_bound(x: &NFElement) -> Result<u64> {
    let d = Rational::from_integer(BigInt::from(x.field().degree()));
    let minpoly = x.minpoly();
    let mut best = 0u64;
    for p in prime_support(x)? {
        let prof = newton_polygon(&minpoly, &p)?;
        if let Some(top) = prof.max_value() {
            if top.is_positive() {
                let u = rational::ceil(&(top * &d)).to_u64().expect("small valuation");
                best = best.max(u);
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;
    use crate::rational::{int, rat};

    fn two() -> BigInt {
        BigInt::from(2)
    }

    #[test]
    fn polygon_examples() {
        let f = UniPoly::linear_root(rat(1, 2));
        assert_eq!(newton_polygon(&f, &two()).unwrap().slopes, vec![(int(-1), 1)]);
        let f = UniPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(newton_polygon(&f, &two()).unwrap().slopes, vec![(rat(1, 2), 2)]);
        let f = UniPoly::from_ints(&[-1, -1, 1]);
        assert_eq!(newton_polygon(&f, &BigInt::from(5)).unwrap().slopes, vec![(int(0), 2)]);
    }

    #[test]
    fn polygon_errors() {
        let f = UniPoly::from_ints(&[0, 1]);
        assert_eq!(newton_polygon(&f, &two()), Err(Error::ZeroConstantTerm));
        assert!(matches!(
            newton_polygon(&UniPoly::from_ints(&[1, 1]), &BigInt::from(4)),
            Err(Error::NotPrime { .. })
        ));
    }

    #[test]
    fn polygon_with_two_segments() {
        // x^2 + x/2 + 1 at 2: roots of valuation 1 and -1
        let f = UniPoly::new(vec![int(1), rat(1, 2), int(1)]);
        let prof = newton_polygon(&f, &two()).unwrap();
        assert_eq!(prof.slopes, vec![(int(1), 1), (int(-1), 1)]);
        assert_eq!(prof.negated(), prof);
    }

    #[test]
    fn element_examples() {
        let q = NumberField::rationals();
        let k = NumberField::new(UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let g = NumberField::new(UniPoly::from_ints(&[-1, -1, 1])).unwrap();
        let half = q.from_rational(rat(1, 2));
        assert_eq!(element_valuations(&half, &two()).unwrap().slopes, vec![(int(-1), 1)]);
        assert_eq!(
            element_valuations(&k.generator(), &two()).unwrap().slopes,
            vec![(rat(1, 2), 2)]
        );
        assert_eq!(
            element_valuations(&g.generator(), &BigInt::from(5)).unwrap().slopes,
            vec![(int(0), 2)]
        );
        assert_eq!(element_valuations(&k.zero(), &two()), Err(Error::ZeroElement));
    }

    #[test]
    fn support_examples() {
        let q = NumberField::rationals();
        let k = NumberField::new(UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let g = NumberField::new(UniPoly::from_ints(&[-1, -1, 1])).unwrap();
        let set = |v: &[i64]| v.iter().map(|&p| BigInt::from(p)).collect::<BTreeSet<_>>();
        assert_eq!(prime_support(&q.from_rational(rat(1, 2))).unwrap(), set(&[2]));
        assert_eq!(prime_support(&g.generator()).unwrap(), set(&[]));
        assert_eq!(prime_support(&k.generator()).unwrap(), set(&[2]));
        assert_eq!(prime_support(&q.from_rational(rat(-12, 35))).unwrap(), set(&[2, 3, 5, 7]));
    }

    #[test]
    fn max_valuation_examples() {
        let q = NumberField::rationals();
        let k = NumberField::new(UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let g = NumberField::new(UniPoly::from_ints(&[-1, -1, 1])).unwrap();
        assert_eq!(max_valuation_upper_bound(&q.from_rational(int(4))).unwrap(), 2);
        assert_eq!(max_valuation_upper_bound(&k.generator()).unwrap(), 1);
        assert_eq!(max_valuation_upper_bound(&g.generator()).unwrap(), 0);
        assert_eq!(max_valuation_upper_bound(&q.from_rational(rat(1, 8))).unwrap(), 0);
    }

    #[test]
    fn profile_json() {
        let k = NumberField::new(UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let prof = element_valuations(&k.generator(), &two()).unwrap();
        assert_eq!(serde_json::to_string(&prof).unwrap(), r#"{"p":2,"slopes":[["1/2",2]]}"#);
    }
}
