//! Errors surfaced to the user, each tagged with the failing precondition.

use std::fmt;

use algint::Error;

#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub hypothesis: Option<&'static str>,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure { kind: "parse error", message: message.into(), hypothesis: None }
    }

    pub fn schema(message: impl Into<String>) -> Self {
        Failure { kind: "schema error", message: message.into(), hypothesis: None }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Failure { kind: "io error", message: message.into(), hypothesis: None }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)?;
        if let Some(h) = self.hypothesis {
            write!(f, "\nhypothesis: {h}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Failure {}

/// The mathematical requirement an error shows to be violated.
fn hypothesis(e: &Error) -> Option<&'static str> {
    Some(match e {
        Error::NotMonic | Error::ZeroPolynomial | Error::NotSquarefree => {
            "the defining polynomial must be monic, nonzero and squarefree"
        }
        Error::Reducible { .. } | Error::IrreducibilityUndecided { .. } => {
            "the defining polynomial must be irreducible over Q"
        }
        Error::ZeroElement | Error::DivisionByZero => "the input numbers must be nonzero",
        Error::ImageNotRoot { .. } | Error::DuplicateImage { .. } | Error::NotFullGroup => {
            "the automorphism images must be distinct roots of the defining polynomial and list the whole group"
        }
        Error::DegenerateDifference => "the two roots must be distinct",
        Error::RootOfUnityInput { .. } => "no alpha may be a root of unity",
        Error::ZeroTarget => "the target value must be nonzero",
        Error::ZeroWeightSum => "the trace of the weight must be nonzero",
        Error::DenominatorConstantTermNotOne => "the denominator must have constant term 1",
        Error::NotCoprime => "numerator and denominator must be coprime",
        Error::RatioConstant { .. } => "no ratio of two of the functions may be constant",
        Error::TooManyTerms { .. } => "subset enumeration is limited to 20 terms",
        Error::StabilizerNotClosed => "the stabilizer must be a subgroup",
        _ => return None,
    })
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { kind: "precondition failed", message: e.to_string(), hypothesis: hypothesis(&e) }
    }
}
