use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use super::{bound_thm_de_smit_general, rational_json, Certificate, Verdict, Witness};
use crate::error::{Error, Result};
use crate::numfield::NFElement;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct TraceWindowOptions {
    pub q: BigInt,
    /// Degree of the Galois closure the traces are taken over; defaults to the
    /// ambient degree. Must be a multiple of it.
    pub closure_degree: Option<usize>,
}

impl Default for TraceWindowOptions {
    fn default() -> Self {
        TraceWindowOptions { q: BigInt::one(), closure_degree: None }
    }
}

fn closure_scale(x: &NFElement, closure_degree: Option<usize>) -> Result<(usize, Rational)> {
    let d = x.field().degree();
    let big = closure_degree.unwrap_or(d);
    if big == 0 || !big.is_multiple_of(d) {
        return Err(Error::InvalidArgument(format!(
            "closure degree {big} is not a positive multiple of the field degree {d}"
        )));
    }
    Ok((big, Rational::from_integer(BigInt::from(big / d))))
}

/// Window length for `trace_power_window`: the plain-power shape when
/// `lambda = 1`, otherwise the shape driven by `Tr(lambda) = a/b`.
pub fn default_trace_window(lambda: &NFElement, opts: &TraceWindowOptions) -> Result<u64> {
    let (big, scale) = closure_scale(lambda, opts.closure_degree)?;
    let one = BigInt::one();
    if lambda.is_one() {
        return bound_thm_de_smit_general(big as u64, &one, &opts.q, &one);
    }
    let t = lambda.trace() * scale;
    if t.is_zero() {
        return Err(Error::InvalidArgument(
            "the trace of lambda vanishes, so no window bound applies; supply the window explicitly".into(),
        ));
    }
    let ab = t.numer() * t.denom();
    bound_thm_de_smit_general(big as u64, &one, &opts.q, &ab)
}

/// Checks `q·Tr(λ·α^j) ∈ Z` for `j = 1..=window`. The first `d` traces are
/// computed directly; the rest follow the recurrence given by the
/// characteristic polynomial of `α`.
pub fn trace_power_window(
    lambda: &NFElement,
    alpha: &NFElement,
    window: u64,
    opts: &TraceWindowOptions,
) -> Result<Certificate> {
    lambda.check_same_field(alpha)?;
    if lambda.is_zero() || alpha.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !opts.q.is_positive() || window == 0 {
        return Err(Error::InvalidArgument("q and the window must be positive".into()));
    }
    let (big, scale) = closure_scale(alpha, opts.closure_degree)?;
    let d = alpha.field().degree();
    let q = Rational::from_integer(opts.q.clone());
    let cp = alpha.charpoly();
    let c: Vec<Rational> = (0..d).map(|i| cp.coeff(i)).collect();

    let mut traces: Vec<Rational> = Vec::with_capacity(window as usize);
    let mut power = lambda.clone();
    let mut failure = None;
    for j in 1..=window {
        let s = if (j as usize) <= d {
            power = &power * alpha;
            power.trace() * &scale
        } else {
            let base = traces.len() - d;
            -c.iter().zip(&traces[base..]).map(|(ci, s)| ci * s).sum::<Rational>()
        };
        let ok = (&s * &q).is_integer();
        traces.push(s);
        if !ok {
            failure = Some(j);
            break;
        }
    }

    let end = failure.unwrap_or(window);
    let verdict = if failure.is_some() { Verdict::FailWitness } else { Verdict::Integral };
    let mut cert = Certificate::new("trace-window", verdict, (1, end), window);
    if let Some(j) = failure {
        let s = &traces[j as usize - 1];
        cert.witnesses.push(
            Witness::new(j, format!("q*Tr(lambda*alpha^{j}) = {} is not an integer", s * &q))
                .with_value(rational_json(s)),
        );
    }
    if !lambda.is_algebraic_integer() {
        cert.notes.push(
            "lambda is not an algebraic integer, so a failing trace does not by itself show that alpha is non-integral"
                .into(),
        );
    }
    if big != d {
        cert.notes.push(format!("traces scaled by {}/{} to the closure degree", big, d));
    }
    cert.detail("closure_degree", json!(big));
    cert.detail("q", json!(opts.q.to_string()));
    cert.detail("traces", json!(traces.iter().map(rational_json).collect::<Vec<_>>()));
    Ok(cert)
}
