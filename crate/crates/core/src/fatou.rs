//! Rational functions over a number field: power-series expansion, the Fatou
//! witness search, polynomial integrality and power combinations.

use serde::Serialize;
use serde_json::{json, Value};

use crate::certify::{element_json, Certificate, Verdict, Witness};
use crate::error::{Error, Result};
use crate::nfpoly::NfPoly;
use crate::numfield::{Field, NFElement};

pub use crate::multipoly::{monomial_condition, mult_indep_sufficient, Independence, MultiPoly};

/// `num / den`, stored exactly as given. Use [`RationalFunction::reduced`]
/// for the canonical coprime form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: NfPoly,
    den: NfPoly,
}

fn coeff_json(p: &NfPoly) -> Value {
    Value::Array(p.coeffs().iter().map(element_json).collect())
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json!({"num": coeff_json(&self.num), "den": coeff_json(&self.den)}).serialize(s)
    }
}

impl RationalFunction {
    pub fn new(num: NfPoly, den: NfPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(p: NfPoly) -> Self {
        let one = NfPoly::constant(p.field().one());
        RationalFunction { num: p, den: one }
    }

    pub fn num(&self) -> &NfPoly {
        &self.num
    }

    pub fn den(&self) -> &NfPoly {
        &self.den
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn is_coprime(&self) -> bool {
        self.num.gcd(&self.den).is_constant()
    }

    /// Removes the common factor, then scales so that `den(0) = 1`; when
    /// `den(0) = 0` the denominator is made monic instead.
    pub fn reduced(&self) -> Self {
        let g = self.num.gcd(&self.den);
        let (mut num, mut den) = if g.is_constant() {
            (self.num.clone(), self.den.clone())
        } else {
            (self.num.exact_div(&g).expect("gcd divides"), self.den.exact_div(&g).expect("gcd divides"))
        };
        let c0 = den.coeff(0);
        let s = if c0.is_zero() { den.lc().expect("nonzero").inv() } else { c0.inv() }.expect("nonzero");
        num = num.scale(&s);
        den = den.scale(&s);
        RationalFunction { num, den }
    }

    pub fn is_polynomial(&self) -> bool {
        self.reduced().den.is_constant()
    }

    /// True when the reduced form is a polynomial with algebraic-integer coefficients.
    pub fn is_integral_polynomial(&self) -> bool {
        let r = self.reduced();
        r.den.is_constant() && r.num.non_integral_degrees().is_empty()
    }

    pub fn pow(&self, n: u64) -> Self {
        RationalFunction { num: self.num.pow(n), den: self.den.pow(n) }
    }

    pub fn scale(&self, c: &NFElement) -> Self {
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Sum in reduced form.
    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        let den = &self.den * &other.den;
        RationalFunction { num, den }.reduced()
    }

    /// True when `self / other` is a constant function.
    pub fn ratio_is_constant(&self, other: &Self) -> bool {
        let p = &self.num * &other.den;
        let q = &other.num * &self.den;
        match (p.lc(), q.lc()) {
            (None, None) => true,
            (Some(a), Some(b)) => p.scale(b) == q.scale(a),
            _ => false,
        }
    }
}

/// Lazy power-series coefficients of `f`; assumes `den(0) = 1`.
fn series_iter(f: &RationalFunction) -> impl Iterator<Item = NFElement> + '_ {
    let mut c: Vec<NFElement> = Vec::new();
    (0usize..).map(move |k| {
        let mut v = f.num.coeff(k);
        for (i, hi) in f.den.coeffs().iter().enumerate().skip(1).take(k) {
            if !hi.is_zero() {
                v = &v - &(hi * &c[k - i]);
            }
        }
        c.push(v.clone());
        v
    })
}

/// The first `n + 1` power-series coefficients of `f`.
pub fn series_prefix(f: &RationalFunction, n: usize) -> Result<Vec<NFElement>> {
    if !f.den.coeff(0).is_one() {
        return Err(Error::DenominatorConstantTermNotOne);
    }
    Ok(series_iter(f).take(n + 1).collect())
}

/// `64 (deg h + 1) (1 + Σ bits of coefficient denominators)`.
pub fn default_fatou_nmax(f: &RationalFunction) -> u64 {
    let bits: u64 = f
        .num
        .coeffs()
        .iter()
        .chain(f.den.coeffs())
        .map(|c| {
            let d = c.denominator();
            if d == 1.into() { 0 } else { d.bits() }
        })
        .sum();
    64 * (f.den.deg() as u64 + 1) * (1 + bits)
}

/// Checks the rational function `g/h` (coprime, `h(0) = 1`) for integral
/// coefficients, or finds a non-integral series coefficient.
pub fn fatou_certify(f: &RationalFunction, n_max: u64) -> Result<Certificate> {
    if !f.den.coeff(0).is_one() {
        return Err(Error::DenominatorConstantTermNotOne);
    }
    if !f.is_coprime() {
        return Err(Error::NotCoprime);
    }
    if n_max == 0 {
        return Err(Error::InvalidArgument("N_max must be positive".into()));
    }
    let bad_num = f.num.non_integral_degrees();
    let bad_den = f.den.non_integral_degrees();
    let first_bad = series_iter(f).take(n_max as usize + 1).enumerate().find(|(_, c)| !c.is_algebraic_integer());
    let mut cert;
    if bad_num.is_empty() && bad_den.is_empty() {
        if let Some((n, _)) = first_bad {
            // integral g and h with h(0) = 1 cannot produce this
            return Err(Error::InvalidArgument(format!("series coefficient {n} of an integral function is not integral")));
        }
        cert = Certificate::new("fatou", Verdict::Conforms, (0, n_max), n_max);
        cert.notes.push(format!("numerator and denominator are integral; series checked integral up to n = {n_max}"));
    } else {
        match first_bad {
            Some((n, c)) => {
                cert = Certificate::new("fatou", Verdict::FailWitness, (0, n as u64), n_max);
                cert.witnesses.push(
                    Witness::new(n as u64, format!("series coefficient c_{n} is not an algebraic integer"))
                        .with_value(element_json(&c)),
                );
            }
            None => {
                cert = Certificate::new("fatou", Verdict::Inconclusive, (0, n_max), n_max);
                cert.notes.push(format!(
                    "numerator or denominator is not integral but c_0..c_{n_max} are all integral; no truncation bound is known"
                ));
            }
        }
    }
    cert.detail("non_integral_num_degrees", json!(bad_num));
    cert.detail("non_integral_den_degrees", json!(bad_den));
    cert.detail("function", serde_json::to_value(f).expect("plain data"));
    Ok(cert)
}

/// Pass when every coefficient is an algebraic integer; otherwise one witness per offending degree.
pub fn poly_integral_check(f: &NfPoly) -> Certificate {
    let bad = f.non_integral_degrees();
    let deg = f.deg() as u64;
    let verdict = if bad.is_empty() { Verdict::Pass } else { Verdict::FailWitness };
    let mut cert = Certificate::new("poly-integral", verdict, (0, deg), deg);
    for &i in &bad {
        cert.witnesses.push(
            Witness::new(i as u64, format!("coefficient of x^{i} is not an algebraic integer"))
                .with_value(element_json(&f.coeffs()[i])),
        );
    }
    cert.detail("coefficients", coeff_json(f));
    cert
}

/// `Σ λ_i f_i^n` in reduced form.
pub fn ratfunc_power_combo(fs: &[RationalFunction], lambdas: &[NFElement], n: u64) -> Result<RationalFunction> {
    if fs.len() != lambdas.len() {
        return Err(Error::LengthMismatch { expected: fs.len(), got: lambdas.len() });
    }
    let Some(first) = fs.first() else {
        return Err(Error::InvalidArgument("at least one function is required".into()));
    };
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let field = first.field();
    for (f, l) in fs.iter().zip(lambdas) {
        if f.field() != field || l.field() != field {
            return Err(Error::FieldMismatch);
        }
        if l.is_zero() {
            return Err(Error::ZeroElement);
        }
    }
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            if fs[i].ratio_is_constant(&fs[j]) {
                return Err(Error::RatioConstant { i: i + 1, j: j + 1 });
            }
        }
    }
    let zero = RationalFunction::polynomial(NfPoly::zero(field));
    Ok(fs.iter().zip(lambdas).fold(zero, |acc, (f, l)| acc.add(&f.reduced().pow(n).scale(l))))
}
