//! JSON problem instances.

use algint::fatou::RationalFunction;
use algint::rational::parse_rational;
use algint::{Field, NFElement, NfPoly, NumberField, Rational, UniPoly};
use serde::{Deserialize, Serialize};

use crate::failure::Failure;

/// A rational, written as `"p/q"`, `"p"` or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatSpec {
    Int(i64),
    Str(String),
}

/// A field element: a rational, a coordinate array in the power basis, or
/// `{"coords": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemSpec {
    Rational(RatSpec),
    Coords(Vec<RatSpec>),
    Object { coords: Vec<RatSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    /// Coefficients of the monic defining polynomial, constant term first.
    pub defpoly: Vec<RatSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TracePayload {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<ElemSpec>,
    pub alpha: ElemSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<RatSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerSumPayload {
    pub lambdas: Vec<ElemSpec>,
    pub alphas: Vec<ElemSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassesPayload {
    pub alphas: Vec<ElemSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsumPayload {
    pub lambdas: Vec<ElemSpec>,
    pub alphas: Vec<ElemSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_star: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupringPayload {
    /// Images of the generator under each automorphism.
    pub images: Vec<ElemSpec>,
    pub coeffs: Vec<ElemSpec>,
    pub alpha: ElemSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DioPayload {
    pub lambdas: Vec<ElemSpec>,
    pub alphas: Vec<ElemSpec>,
    pub target: RatSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatFuncSpec {
    pub num: Vec<ElemSpec>,
    pub den: Vec<ElemSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatfuncPayload {
    pub functions: Vec<RatFuncSpec>,
    pub lambdas: Vec<ElemSpec>,
    pub n: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldCheckPayload {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<ElemSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Body {
    TraceWindow(TracePayload),
    K2(PowerSumPayload),
    Powersum(PowerSumPayload),
    Classes(ClassesPayload),
    Subsum(SubsumPayload),
    Groupring(GroupringPayload),
    Dio(DioPayload),
    Fatou(RatFuncSpec),
    Ratfunc(RatfuncPayload),
    FieldCheck(FieldCheckPayload),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::TraceWindow(_) => "trace-window",
            Body::K2(_) => "k2",
            Body::Powersum(_) => "powersum",
            Body::Classes(_) => "classes",
            Body::Subsum(_) => "subsum",
            Body::Groupring(_) => "groupring",
            Body::Dio(_) => "dio",
            Body::Fatou(_) => "fatou",
            Body::Ratfunc(_) => "ratfunc",
            Body::FieldCheck(_) => "field-check",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nmax: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
}

impl Options {
    fn is_empty(&self) -> bool {
        *self == Options::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemInstance {
    pub field: FieldSpec,
    #[serde(flatten)]
    pub body: Body,
    #[serde(default, skip_serializing_if = "Options::is_empty")]
    pub options: Options,
}

impl ProblemInstance {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        serde_json::from_str(text).map_err(|e| {
            if e.is_data() {
                Failure::schema(e.to_string())
            } else {
                Failure::parse(e.to_string())
            }
        })
    }

    pub fn build_field(&self) -> Result<Field, Failure> {
        let coeffs = self.field.defpoly.iter().map(rational).collect::<Result<Vec<_>, _>>()?;
        Ok(NumberField::new(UniPoly::new(coeffs))?)
    }
}

pub fn rational(r: &RatSpec) -> Result<Rational, Failure> {
    match r {
        RatSpec::Int(v) => Ok(Rational::from_integer((*v).into())),
        RatSpec::Str(s) => parse_rational(s).map_err(|e| Failure::schema(e.to_string())),
    }
}

pub fn element(k: &Field, e: &ElemSpec) -> Result<NFElement, Failure> {
    match e {
        ElemSpec::Rational(r) => Ok(k.from_rational(rational(r)?)),
        ElemSpec::Coords(c) | ElemSpec::Object { coords: c } => {
            let coords = c.iter().map(rational).collect::<Result<Vec<_>, _>>()?;
            Ok(k.element(coords)?)
        }
    }
}

pub fn elements(k: &Field, es: &[ElemSpec]) -> Result<Vec<NFElement>, Failure> {
    es.iter().map(|e| element(k, e)).collect()
}

pub fn ratfunc(k: &Field, f: &RatFuncSpec) -> Result<RationalFunction, Failure> {
    let num = NfPoly::new(k, elements(k, &f.num)?)?;
    let den = NfPoly::new(k, elements(k, &f.den)?)?;
    Ok(RationalFunction::new(num, den)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_forms() {
        let i = ProblemInstance::parse(
            r#"{"kind":"dio","field":{"defpoly":["0","1"]},"payload":{"lambdas":["1"],"alphas":[2],"target":"8"},"options":{"window":64}}"#,
        )
        .unwrap();
        assert_eq!(i.body.kind(), "dio");
        assert_eq!(i.options.window, Some(64));
        let k = i.build_field().unwrap();
        assert_eq!(k.degree(), 1);
        let e = element(&k, &ElemSpec::Object { coords: vec![RatSpec::Str("3/2".into())] }).unwrap();
        assert_eq!(e.as_rational(), Some(&algint::rational::rat(3, 2)));
    }

    #[test]
    fn round_trips_every_kind() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
        let mut kinds = std::collections::BTreeSet::new();
        for entry in std::fs::read_dir(dir).unwrap() {
            let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
            let Ok(inst) = ProblemInstance::parse(&text) else { continue };
            let again = ProblemInstance::parse(&serde_json::to_string(&inst).unwrap()).unwrap();
            assert_eq!(again, inst);
            kinds.insert(inst.body.kind());
        }
        assert_eq!(kinds.len(), 10);
    }

    #[test]
    fn malformed_and_mistyped_inputs() {
        assert_eq!(ProblemInstance::parse("{").unwrap_err().kind, "parse error");
        assert_eq!(
            ProblemInstance::parse(r#"{"kind":"nope","field":{"defpoly":["0","1"]},"payload":{}}"#).unwrap_err().kind,
            "schema error"
        );
    }
}
