//! Plain-text narrative for a certificate document.

use std::fmt::Write;

use serde_json::Value;

use crate::failure::Failure;

fn criterion(procedure: &str) -> &'static str {
    match procedure {
        "trace-window" => {
            "An element is an algebraic integer exactly when q*Tr(lambda*alpha^j) is an integer for every j \
             in an explicit window whose length depends on the degree, q and the trace of lambda."
        }
        "k2" => {
            "For a two-term power sum with integral weights, integrality of m_i for i up to a closing constant C \
             forces both roots to be algebraic integers. C comes from the valuations of the Hankel quantity V_0."
        }
        "powersum" => {
            "Roots are grouped into classes whose ratios are roots of unity. Whenever m_n is a nonzero algebraic \
             integer, each class either has a vanishing class sum at the residue of n or consists of algebraic integers."
        }
        "classes" => "Partition of the roots by the relation that the ratio of two roots is a root of unity.",
        "subsum" => {
            "Traces of proper subsums are checked for vanishing at every exponent below the effective torsion order."
        }
        "groupring" => {
            "If the values of a nonzero group-ring element at alpha^n are nonzero algebraic integers infinitely \
             often, alpha is an algebraic integer."
        }
        "dio" => "Exhaustive search for exponents n where the trace of the power sum equals the target value.",
        "fatou" => {
            "A rational function g/h with coprime g and h, h(0) = 1 and integral power-series coefficients has \
             integral g and h; a non-integral series coefficient witnesses the converse failure."
        }
        "ratfunc" => {
            "If a combination of n-th powers of rational functions is an integral polynomial for all n, every \
             function is an integral polynomial. This certificate checks one exponent."
        }
        "poly-integral" => "Every coefficient of the polynomial is checked for integrality.",
        "field-check" => "Validation of the defining polynomial with an arithmetic profile of the listed elements.",
        _ => "Unknown procedure.",
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Failure> {
    v.get(key).ok_or_else(|| Failure::schema(format!("certificate is missing \"{key}\"")))
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn explain(cert: &Value) -> Result<String, Failure> {
    let procedure = field(cert, "procedure")?
        .as_str()
        .ok_or_else(|| Failure::schema("\"procedure\" must be a string"))?;
    let verdict = field(cert, "verdict")?
        .as_str()
        .ok_or_else(|| Failure::schema("\"verdict\" must be a string"))?;
    let window = field(cert, "window")?;
    let bound = field(cert, "bound_used")?;
    let witnesses = field(cert, "witnesses")?
        .as_array()
        .ok_or_else(|| Failure::schema("\"witnesses\" must be an array"))?;

    let mut out = String::new();
    let _ = writeln!(out, "procedure: {procedure}");
    let _ = writeln!(out, "criterion: {}", criterion(procedure));
    let _ = writeln!(out, "verdict: {verdict}");
    let _ = writeln!(out, "window: {}..{}", compact(field(window, "start")?), compact(field(window, "end")?));
    let _ = writeln!(out, "bound used: {}", compact(bound));
    match verdict {
        "Integral" => {
            let _ = writeln!(out, "every observation in the window passed, which is conclusive at this bound");
        }
        "Inconclusive" => {
            let _ = writeln!(out, "the window did not settle the question");
        }
        _ => {}
    }
    if witnesses.is_empty() {
        let _ = writeln!(out, "witnesses: none");
    } else {
        let _ = writeln!(out, "witnesses:");
        for w in witnesses {
            let index = w.get("index").map(compact).unwrap_or_default();
            let detail = w.get("detail").map(compact).unwrap_or_default();
            let _ = write!(out, "  [{index}] {detail}");
            if let Some(v) = w.get("value") {
                let _ = write!(out, " (value {})", compact(v));
            }
            out.push('\n');
        }
    }
    if let Some(notes) = cert.get("notes").and_then(Value::as_array) {
        for n in notes {
            let _ = writeln!(out, "note: {}", compact(n));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn names_witness_and_bound() {
        let c = json!({
            "procedure": "k2", "verdict": "FailWitness", "window": {"start": 1, "end": 2},
            "bound_used": 3, "notes": [], "details": {},
            "witnesses": [{"index": 2, "detail": "m_2 is not integral", "value": {"coords": ["5/2"]}}]
        });
        let t = explain(&c).unwrap();
        assert!(t.contains("verdict: FailWitness"));
        assert!(t.contains("bound used: 3"));
        assert!(t.contains("[2] m_2 is not integral"));
        assert!(t.contains("5/2"));
        assert_eq!(explain(&json!({"verdict": "Pass"})).unwrap_err().kind, "schema error");
    }
}
