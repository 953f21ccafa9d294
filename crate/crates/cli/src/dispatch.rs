//! Runs a problem instance through the matching certifier.

use algint::certify::{
    default_trace_window, dio_certificate, element_json, groupring_window, k2_certify, powersum_window,
    rational_json, subsum_certificate, trace_power_window, Certificate, PowerSumSpec, TraceWindowOptions, Verdict,
    Witness,
};
use algint::fatou::{default_fatou_nmax, fatou_certify, poly_integral_check, ratfunc_power_combo};
use algint::numfield::Irreducibility;
use algint::unity::{partition_classes, root_of_unity_order, verify_galois_data};
use algint::valuation::{log_height_bounds, prime_support};
use algint::{Error, Field};
use serde_json::json;

use crate::failure::Failure;
use crate::instance::{element, elements, ratfunc, rational, Body, ProblemInstance};

/// Window for scans with no bound of their own.
pub const DEFAULT_SCAN_WINDOW: u64 = 64;
pub const DEFAULT_PRECISION: u32 = 64;

/// Command-line values that take precedence over the instance options.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub window: Option<u64>,
    pub nmax: Option<u64>,
}

fn power_sum_spec(k: &Field, lambdas: &[crate::instance::ElemSpec], alphas: &[crate::instance::ElemSpec]) -> Result<PowerSumSpec, Failure> {
    Ok(PowerSumSpec::new(k, elements(k, lambdas)?, elements(k, alphas)?)?)
}

fn positive(name: &str, v: u64) -> Result<u64, Failure> {
    if v == 0 {
        Err(Failure::schema(format!("{name} must be positive")))
    } else {
        Ok(v)
    }
}

pub fn run(inst: &ProblemInstance, ov: Overrides) -> Result<Certificate, Failure> {
    let k = inst.build_field()?;
    let window = ov.window.or(inst.options.window).map(|w| positive("window", w)).transpose()?;
    let nmax = ov.nmax.or(inst.options.nmax).map(|n| positive("nmax", n)).transpose()?;
    let mut cert = match &inst.body {
        Body::TraceWindow(p) => {
            let lambda = match &p.lambda {
                Some(l) => element(&k, l)?,
                None => k.one(),
            };
            let alpha = element(&k, &p.alpha)?;
            let q = match &p.q {
                Some(q) => {
                    let q = rational(q)?;
                    if !q.is_integer() {
                        return Err(Failure::schema("q must be an integer"));
                    }
                    q.to_integer()
                }
                None => 1.into(),
            };
            let opts = TraceWindowOptions { q, closure_degree: p.closure_degree };
            let w = match window {
                Some(w) => w,
                None => default_trace_window(&lambda, &opts)?,
            };
            trace_power_window(&lambda, &alpha, w, &opts)?
        }
        Body::K2(p) => {
            let spec = power_sum_spec(&k, &p.lambdas, &p.alphas)?;
            if spec.k() != 2 {
                return Err(Error::LengthMismatch { expected: 2, got: spec.k() }.into());
            }
            let (l, a) = (spec.lambdas(), spec.alphas());
            k2_certify(&l[0], &l[1], &a[0], &a[1])?
        }
        Body::Powersum(p) => {
            let spec = power_sum_spec(&k, &p.lambdas, &p.alphas)?;
            let w = window.unwrap_or(DEFAULT_SCAN_WINDOW);
            powersum_window(&spec, w)?.certificate(w)
        }
        Body::Classes(p) => {
            let alphas = elements(&k, &p.alphas)?;
            let part = partition_classes(&alphas)?;
            let mut cert =
                Certificate::new("classes", Verdict::Pass, (1, alphas.len() as u64), part.effective_torsion);
            cert.detail("nondegenerate", json!(part.is_nondegenerate()));
            cert.detail("partition", serde_json::to_value(&part).expect("plain data"));
            cert
        }
        Body::Subsum(p) => {
            let spec = power_sum_spec(&k, &p.lambdas, &p.alphas)?;
            let h = match p.h_star {
                Some(h) => positive("h_star", h)?,
                None => partition_classes(spec.alphas())?.effective_torsion,
            };
            subsum_certificate(&spec, h)?
        }
        Body::Groupring(p) => {
            let gd = verify_galois_data(&k, elements(&k, &p.images)?)?;
            let coeffs = elements(&k, &p.coeffs)?;
            let alpha = element(&k, &p.alpha)?;
            groupring_window(&gd, &coeffs, &alpha, window.unwrap_or(DEFAULT_SCAN_WINDOW))?
        }
        Body::Dio(p) => {
            let spec = power_sum_spec(&k, &p.lambdas, &p.alphas)?;
            dio_certificate(&spec, &rational(&p.target)?, window.unwrap_or(DEFAULT_SCAN_WINDOW))?
        }
        Body::Fatou(p) => {
            let f = ratfunc(&k, p)?;
            let n = nmax.unwrap_or_else(|| default_fatou_nmax(&f));
            fatou_certify(&f, n)?
        }
        Body::Ratfunc(p) => {
            let fs = p.functions.iter().map(|f| ratfunc(&k, f)).collect::<Result<Vec<_>, _>>()?;
            let lambdas = elements(&k, &p.lambdas)?;
            let n = positive("n", p.n)?;
            let combo = ratfunc_power_combo(&fs, &lambdas, n)?;
            ratfunc_cert(&combo, n)
        }
        Body::FieldCheck(p) => field_check(&k, &elements(&k, &p.elements)?, inst.options.precision)?,
    };
    cert.detail("kind", json!(inst.body.kind()));
    cert.detail("defpoly", serde_json::to_value(k.defpoly()).expect("plain data"));
    Ok(cert)
}

fn ratfunc_cert(combo: &algint::fatou::RationalFunction, n: u64) -> Certificate {
    let mut cert;
    if !combo.den().is_constant() {
        cert = Certificate::new("ratfunc", Verdict::FailWitness, (n, n), n);
        cert.witnesses.push(Witness::new(n, format!("the sum of {n}-th powers has a denominator of degree {}", combo.den().deg())));
    } else {
        let inner = poly_integral_check(combo.num());
        cert = Certificate::new("ratfunc", inner.verdict, (n, n), n);
        cert.witnesses = inner.witnesses;
    }
    cert.detail("integral_polynomial", json!(combo.is_integral_polynomial()));
    cert.detail("combination", serde_json::to_value(combo).expect("plain data"));
    cert
}

fn field_check(k: &Field, xs: &[algint::NFElement], precision: Option<u32>) -> Result<Certificate, Failure> {
    let bits = precision.unwrap_or(DEFAULT_PRECISION);
    let mut cert = Certificate::new("field-check", Verdict::Pass, (1, xs.len() as u64), k.degree() as u64);
    cert.detail("degree", json!(k.degree()));
    cert.detail("irreducibility", serde_json::to_value(k.irreducibility()).expect("plain data"));
    if let Irreducibility::VerifiedModP { prime } = k.irreducibility() {
        cert.notes.push(format!("irreducible modulo {prime}"));
    }
    let mut reports = Vec::with_capacity(xs.len());
    for x in xs {
        let mut r = json!({
            "element": element_json(x),
            "integral": x.is_algebraic_integer(),
            "minpoly": serde_json::to_value(x.minpoly()).expect("plain data"),
            "trace": rational_json(&x.trace()),
            "norm": rational_json(&x.norm()),
            "denominator": x.denominator().to_string(),
        });
        if !x.is_zero() {
            let support: Vec<String> = prime_support(x)?.iter().map(|p| p.to_string()).collect();
            r["prime_support"] = json!(support);
            r["root_of_unity_order"] = json!(root_of_unity_order(x)?);
            r["log_height"] = serde_json::to_value(log_height_bounds(x, bits)?).expect("plain data");
        }
        reports.push(r);
    }
    cert.detail("elements", json!(reports));
    cert.detail("precision_bits", json!(bits));
    Ok(cert)
}

/// 0 for a settled verdict, 2 for an inconclusive one.
pub fn exit_code(cert: &Certificate) -> i32 {
    if cert.verdict.is_inconclusive() { 2 } else { 0 }
}
