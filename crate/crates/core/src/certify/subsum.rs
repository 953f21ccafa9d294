use serde::Serialize;
use serde_json::json;

use super::{Certificate, PowerSumSpec, Verdict, Witness};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub const MAX_SUBSUM_TERMS: usize = 20;

/// A proper subset `P` (1-based indices) and exponent `a` with
/// `Tr(Σ_{i in P} λ_i α_i^a) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingSubsum {
    pub subset: Vec<usize>,
    pub exponent: u64,
}

/// All vanishing traces of nonempty proper subsums for exponents `0..h_star`.
pub fn subsum_nonvanishing(spec: &PowerSumSpec, h_star: u64) -> Result<Vec<VanishingSubsum>> {
    let k = spec.k();
    if k > MAX_SUBSUM_TERMS {
        return Err(Error::TooManyTerms { k });
    }
    if h_star == 0 {
        return Err(Error::InvalidArgument("h_star must be positive".into()));
    }
    let full = (1u32 << k) - 1;
    let mut out = Vec::new();
    for a in 0..h_star {
        // the trace is linear, so subset sums of per-term traces suffice
        let t: Vec<Rational> = spec
            .lambdas()
            .iter()
            .zip(spec.alphas())
            .map(|(l, x)| (l * &x.pow(a)).trace())
            .collect();
        for mask in 1..full {
            let s: Rational = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &t[i]).sum();
            if num_traits::Zero::is_zero(&s) {
                let subset = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                out.push(VanishingSubsum { subset, exponent: a });
            }
        }
    }
    out.sort_by(|x, y| (x.exponent, x.subset.len(), &x.subset).cmp(&(y.exponent, y.subset.len(), &y.subset)));
    Ok(out)
}

pub fn subsum_certificate(spec: &PowerSumSpec, h_star: u64) -> Result<Certificate> {
    let found = subsum_nonvanishing(spec, h_star)?;
    let verdict = if found.is_empty() { Verdict::Pass } else { Verdict::FailWitness };
    let mut cert = Certificate::new("subsum", verdict, (0, h_star - 1), h_star);
    for v in &found {
        cert.witnesses.push(
            Witness::new(v.exponent, format!("trace of the subsum over {:?} vanishes at exponent {}", v.subset, v.exponent))
                .with_value(json!(v.subset)),
        );
    }
    if found.is_empty() {
        cert.notes.push("no proper subsum has vanishing trace for any exponent in the window".into());
    }
    cert.detail("k", json!(spec.k()));
    Ok(cert)
}
