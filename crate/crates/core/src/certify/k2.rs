use serde::Serialize;
use serde_json::json;

use super::{element_json, Certificate, Verdict, Witness};
use crate::error::{Error, Result};
use crate::numfield::NFElement;
use crate::valuation::max_valuation_upper_bound;

/// The constant for the two-term criterion, with its ingredients.
#[derive(Clone, Debug, Serialize)]
pub struct K2Constant {
    /// `3 + ceil(U(V0)/2) + U(λ1) + U(λ2) + U(λ1λ2)`.
    pub c: u64,
    /// `1 + ceil(U(V0)/2) + max(U(λ1) + U(1/λ1), U(λ2) + U(1/λ2))`: the
    /// uncorrected closing constant, evaluated with the same valuation bounds.
    pub literal: u64,
    pub u_v0: u64,
    pub u_lambda1: u64,
    pub u_lambda2: u64,
    pub u_lambda12: u64,
    #[serde(skip)]
    pub v0: Option<NFElement>,
}

fn check(l1: &NFElement, l2: &NFElement, a1: &NFElement, a2: &NFElement) -> Result<()> {
    for x in [l2, a1, a2] {
        l1.check_same_field(x)?;
    }
    if [l1, l2, a1, a2].iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroElement);
    }
    if a1 == a2 {
        return Err(Error::DegenerateDifference);
    }
    Ok(())
}

/// `V0 = λ1 λ2 (α1 − α2)^2` and the conservative constant derived from it.
pub fn k2_constant(l1: &NFElement, l2: &NFElement, a1: &NFElement, a2: &NFElement) -> Result<K2Constant> {
    check(l1, l2, a1, a2)?;
    let diff = a1 - a2;
    let l12 = l1 * l2;
    let v0 = &l12 * &diff.square();
    let u_v0 = max_valuation_upper_bound(&v0)?;
    let u1 = max_valuation_upper_bound(l1)?;
    let u2 = max_valuation_upper_bound(l2)?;
    let u12 = max_valuation_upper_bound(&l12)?;
    let half = u_v0.div_ceil(2);
    let abs1 = u1 + max_valuation_upper_bound(&l1.inv()?)?;
    let abs2 = u2 + max_valuation_upper_bound(&l2.inv()?)?;
    Ok(K2Constant {
        c: 3 + half + u1 + u2 + u12,
        literal: 1 + half + abs1.max(abs2),
        u_v0,
        u_lambda1: u1,
        u_lambda2: u2,
        u_lambda12: u12,
        v0: Some(v0),
    })
}

/// Checks `m_i = λ1 α1^i + λ2 α2^i` for integrality, `i = 1..=C`.
pub fn k2_certify(l1: &NFElement, l2: &NFElement, a1: &NFElement, a2: &NFElement) -> Result<Certificate> {
    let k = k2_constant(l1, l2, a1, a2)?;
    let mut failure = None;
    let (mut p1, mut p2) = (a1.clone(), a2.clone());
    let mut terms = Vec::new();
    for i in 1..=k.c {
        if i > 1 {
            p1 = &p1 * a1;
            p2 = &p2 * a2;
        }
        let m = &(l1 * &p1) + &(l2 * &p2);
        let integral = m.is_algebraic_integer();
        terms.push(element_json(&m));
        if !integral {
            failure = Some((i, m));
            break;
        }
    }
    let lambdas_integral = l1.is_algebraic_integer() && l2.is_algebraic_integer();
    let mut cert = match &failure {
        None => Certificate::new("k2", Verdict::Pass, (1, k.c), k.c),
        Some((i, m)) => {
            let mut c = Certificate::new("k2", Verdict::FailWitness, (1, *i), k.c);
            c.witnesses.push(
                Witness::new(*i, format!("m_{i} = {m} is not an algebraic integer")).with_value(element_json(m)),
            );
            c
        }
    };
    if let Some((i, _)) = &failure {
        if *i > k.literal {
            cert.notes.push(format!(
                "the uncorrected closing constant C = {} would have accepted this instance; the first failure is at i = {}",
                k.literal, i
            ));
        }
        if !lambdas_integral {
            cert.notes.push(
                "some lambda is not an algebraic integer; the failing m_i does not prove that an alpha is non-integral"
                    .into(),
            );
        }
    }
    cert.detail("constant", serde_json::to_value(&k).expect("plain data"));
    if let Some(v0) = &k.v0 {
        cert.detail("v0", element_json(v0));
    }
    cert.detail("terms", json!(terms));
    Ok(cert)
}
