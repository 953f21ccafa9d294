use serde_json::json;

use super::{element_json, Certificate, Verdict, Witness};
use crate::error::{Error, Result};
use crate::numfield::NFElement;
use crate::unity::GaloisData;

fn conjugates(gd: &GaloisData, coeffs: &[NFElement], alpha: &NFElement) -> Result<Vec<NFElement>> {
    if !(gd.verified() && gd.full_group()) {
        return Err(Error::NotFullGroup);
    }
    if coeffs.len() != gd.len() {
        return Err(Error::LengthMismatch { expected: gd.len(), got: coeffs.len() });
    }
    (0..gd.len()).map(|i| gd.apply(i, alpha)).collect()
}

/// `f(α^n) = Σ_i λ_i σ_i(α)^n` for the group-ring element `f = Σ λ_i σ_i`.
pub fn groupring_eval(gd: &GaloisData, coeffs: &[NFElement], alpha: &NFElement, n: u64) -> Result<NFElement> {
    let conj = conjugates(gd, coeffs, alpha)?;
    Ok(coeffs
        .iter()
        .zip(&conj)
        .fold(gd.field().zero(), |acc, (l, s)| &acc + &(l * &s.pow(n))))
}

/// Evaluates `f(α^n)` for `n = 1..=window` and sets the observations against
/// integrality of `α`.
pub fn groupring_window(gd: &GaloisData, coeffs: &[NFElement], alpha: &NFElement, window: u64) -> Result<Certificate> {
    let conj = conjugates(gd, coeffs, alpha)?;
    if coeffs.iter().all(NFElement::is_zero) {
        return Err(Error::InvalidArgument("the group-ring element must be nonzero".into()));
    }
    let mut powers = conj.clone();
    let mut integral_nonzero = Vec::new();
    let mut values = Vec::new();
    let mut failing = Vec::new();
    for n in 1..=window {
        if n > 1 {
            for (p, s) in powers.iter_mut().zip(&conj) {
                *p = &*p * s;
            }
        }
        let v = coeffs.iter().zip(&powers).fold(gd.field().zero(), |acc, (l, p)| &acc + &(l * p));
        if !v.is_zero() {
            if v.is_algebraic_integer() {
                integral_nonzero.push(n);
            } else {
                failing.push((n, v.clone()));
            }
        }
        values.push(element_json(&v));
    }
    let alpha_integral = alpha.is_algebraic_integer();
    let mut cert;
    if alpha_integral {
        cert = Certificate::new("groupring", Verdict::Integral, (1, window), window);
        cert.notes.push("alpha is an algebraic integer".into());
    } else if integral_nonzero.is_empty() {
        cert = Certificate::new("groupring", Verdict::NotIntegral, (1, window), window);
        for (n, v) in failing.iter().take(8) {
            cert.witnesses
                .push(Witness::new(*n, format!("f(alpha^{n}) is not an algebraic integer")).with_value(element_json(v)));
        }
        cert.notes.push("alpha is not an algebraic integer and no value in the window is a nonzero algebraic integer".into());
    } else {
        cert = Certificate::new("groupring", Verdict::Inconclusive, (1, window), window);
        for n in &integral_nonzero {
            cert.witnesses.push(Witness::new(*n, format!("f(alpha^{n}) is a nonzero algebraic integer")));
        }
        cert.notes.push(
            "alpha is not an algebraic integer, so only finitely many values can be nonzero algebraic integers".into(),
        );
    }
    cert.detail("alpha_integral", json!(alpha_integral));
    cert.detail("integral_nonzero", json!(integral_nonzero));
    cert.detail("values", json!(values));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;
    use crate::poly::UniPoly;
    use crate::rational::{int, rat};
    use crate::unity::verify_galois_data;

    fn setup() -> (crate::numfield::Field, GaloisData) {
        let k = NumberField::new(UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let t = k.generator();
        let gd = verify_galois_data(&k, vec![t.clone(), -&t]).unwrap();
        (k, gd)
    }

    #[test]
    fn eval_examples() {
        let (k, gd) = setup();
        let t = k.generator();
        let tr = vec![k.one(), k.one()];
        assert_eq!(groupring_eval(&gd, &tr, &t, 2).unwrap().as_rational(), Some(&int(4)));
        let diff = vec![-&k.one(), k.one()];
        assert_eq!(groupring_eval(&gd, &diff, &t, 1).unwrap(), k.element_i64(&[0, -2]));
        assert!(groupring_eval(&gd, &diff, &t, 2).unwrap().is_zero());
        assert_eq!(
            groupring_eval(&gd, &[k.one()], &t, 1).unwrap_err(),
            Error::LengthMismatch { expected: 2, got: 1 }
        );
    }

    #[test]
    fn window_verdicts() {
        let (k, gd) = setup();
        let diff = vec![-&k.one(), k.one()];
        let cert = groupring_window(&gd, &diff, &k.generator(), 6).unwrap();
        assert_eq!(cert.verdict, Verdict::Integral);
        let third = k.element(vec![int(0), rat(1, 3)]).unwrap();
        let cert = groupring_window(&gd, &diff, &third, 6).unwrap();
        assert_eq!(cert.verdict, Verdict::NotIntegral);
        assert_eq!(cert.witnesses[0].index, 1);
    }
}
