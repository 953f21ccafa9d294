use serde_json::json;

use super::{rational_json, Certificate, PowerSumSpec, Verdict, Witness};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::unity::root_of_unity_order;

/// `Tr(λ α^n)` for `n = 1..=count`, seeded directly and continued with the
/// characteristic-polynomial recurrence of `α`.
fn trace_sequence(lambda: &crate::NFElement, alpha: &crate::NFElement, count: u64) -> Vec<Rational> {
    let d = alpha.field().degree();
    let cp = alpha.charpoly();
    let c: Vec<Rational> = (0..d).map(|i| cp.coeff(i)).collect();
    let mut out: Vec<Rational> = Vec::with_capacity(count as usize);
    let mut power = lambda.clone();
    for j in 1..=count as usize {
        let s = if j <= d {
            power = &power * alpha;
            power.trace()
        } else {
            let base = out.len() - d;
            -c.iter().zip(&out[base..]).map(|(ci, s)| ci * s).sum::<Rational>()
        };
        out.push(s);
    }
    out
}

/// All `n` in `1..=window` with `Tr(Σ λ_i α_i^n) = target`.
pub fn dio_search(spec: &PowerSumSpec, target: &Rational, window: u64) -> Result<Vec<u64>> {
    if num_traits::Zero::is_zero(target) {
        return Err(Error::ZeroTarget);
    }
    for (i, a) in spec.alphas().iter().enumerate() {
        if root_of_unity_order(a)?.is_some() {
            return Err(Error::RootOfUnityInput { index: i + 1 });
        }
    }
    let seqs: Vec<Vec<Rational>> = spec
        .lambdas()
        .iter()
        .zip(spec.alphas())
        .map(|(l, a)| trace_sequence(l, a, window))
        .collect();
    Ok((1..=window)
        .filter(|&n| &seqs.iter().map(|s| &s[n as usize - 1]).sum::<Rational>() == target)
        .collect())
}

pub fn dio_certificate(spec: &PowerSumSpec, target: &Rational, window: u64) -> Result<Certificate> {
    let sols = dio_search(spec, target, window)?;
    let mut cert = Certificate::new("dio", Verdict::Pass, (1, window), window);
    for &n in &sols {
        cert.witnesses.push(Witness::new(n, format!("trace at n = {n} equals the target")));
    }
    cert.notes.push("the search is exhaustive over the window; the solution set is finite".into());
    cert.detail("solutions", json!(sols));
    cert.detail("target", rational_json(target));
    Ok(cert)
}
