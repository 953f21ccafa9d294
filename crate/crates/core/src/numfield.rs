//! Number fields `Q(θ)` given by a defining polynomial, and their elements in
//! the power basis `1, θ, …, θ^{d-1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::irreducible::{self, Screen};
use crate::matrix::RatMatrix;
use crate::poly::{power_sums_from_poly, UniPoly};
use crate::rational::{self, Rational};

/// How irreducibility of the defining polynomial was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum Irreducibility {
    Verified,
    VerifiedModP { prime: u64 },
    Rejected,
}

pub struct NumberField {
    defpoly: UniPoly,
    degree: usize,
    irreducibility: Irreducibility,
    /// `Tr(θ^i)` for `i < d`.
    basis_traces: Vec<Rational>,
    /// Power-basis coordinates of `θ^{d+k}` for `k < d - 1`.
    high_powers: Vec<Vec<Rational>>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(Q[x]/({}))", self.defpoly)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.defpoly == other.defpoly
    }
}

impl Eq for NumberField {}

pub type Field = Arc<NumberField>;

impl NumberField {
    /// Validates `defpoly` and builds the field.
    pub fn new(defpoly: UniPoly) -> Result<Field> {
        if defpoly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !defpoly.is_monic() {
            return Err(Error::NotMonic);
        }
        if defpoly.deg() == 0 {
            return Err(Error::InvalidArgument("defining polynomial must have degree >= 1".into()));
        }
        if !defpoly.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let irreducibility = match irreducible::screen(&defpoly) {
            Screen::Irreducible => Irreducibility::Verified,
            Screen::IrreducibleModP(p) => Irreducibility::VerifiedModP { prime: p },
            Screen::Reducible(witness) => return Err(Error::Reducible { witness }),
            Screen::Undecided => {
                return Err(Error::IrreducibilityUndecided { degree: defpoly.deg() })
            }
        };
        Ok(Arc::new(Self::build(defpoly, irreducibility)))
    }

    fn build(defpoly: UniPoly, irreducibility: Irreducibility) -> Self {
        let d = defpoly.deg();
        let mut basis_traces = vec![Rational::from_integer(BigInt::from(d))];
        basis_traces.extend(power_sums_from_poly(&defpoly, d - 1).expect("monic"));
        basis_traces.truncate(d);
        // θ^d = -(a_0 + … + a_{d-1} θ^{d-1}); shift repeatedly
        let mut high_powers = Vec::with_capacity(d.saturating_sub(1));
        let mut cur: Vec<Rational> = (0..d).map(|i| -defpoly.coeff(i)).collect();
        for _ in 0..d.saturating_sub(1) {
            high_powers.push(cur.clone());
            let top = cur[d - 1].clone();
            let mut next = vec![Rational::zero(); d];
            for i in (1..d).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for i in 0..d {
                    next[i] -= &top * defpoly.coeff(i);
                }
            }
            cur = next;
        }
        NumberField { defpoly, degree: d, irreducibility, basis_traces, high_powers }
    }

    pub fn defpoly(&self) -> &UniPoly {
        &self.defpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    /// The field Q itself, presented as `Q[x]/(x)`.
    pub fn rationals() -> Field {
        Arc::new(Self::build(UniPoly::x(), Irreducibility::Verified))
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> Result<NFElement> {
        if coords.len() > self.degree {
            return Err(Error::BadCoordinates { got: coords.len(), degree: self.degree });
        }
        let mut coords = coords;
        coords.resize(self.degree, Rational::zero());
        Ok(NFElement { field: Arc::clone(self), coords })
    }

    /// Element with the given integer coordinates; panics if too many are given.
    pub fn element_i64(self: &Arc<Self>, coords: &[i64]) -> NFElement {
        self.element(coords.iter().map(|&c| rational::int(c)).collect())
            .expect("coordinate count exceeds degree")
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> NFElement {
        let mut coords = vec![Rational::zero(); self.degree];
        coords[0] = r;
        NFElement { field: Arc::clone(self), coords }
    }

    pub fn zero(self: &Arc<Self>) -> NFElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(self: &Arc<Self>) -> NFElement {
        self.from_rational(Rational::one())
    }

    /// The class of `x`, i.e. θ.
    pub fn generator(self: &Arc<Self>) -> NFElement {
        self.from_poly(&UniPoly::x())
    }

    /// Reduces an arbitrary polynomial in θ into the power basis.
    pub fn from_poly(self: &Arc<Self>, p: &UniPoly) -> NFElement {
        let r = p.rem(&self.defpoly);
        let mut coords = r.into_coeffs();
        coords.resize(self.degree, Rational::zero());
        NFElement { field: Arc::clone(self), coords }
    }
}

#[derive(Clone)]
pub struct NFElement {
    field: Field,
    coords: Vec<Rational>,
}

impl PartialEq for NFElement {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coords == other.coords
    }
}

impl Eq for NFElement {}

impl std::hash::Hash for NFElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || a.defpoly == b.defpoly
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NFElement({self})")
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.coord_poly().to_string();
        write!(f, "{}", s.replace('x', "θ"))
    }
}

/// Integrality verdict together with the minimal polynomial that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integrality {
    pub integral: bool,
    pub minpoly: UniPoly,
}

impl NFElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord_poly(&self) -> UniPoly {
        UniPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// `Some(r)` if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    pub fn check_same_field(&self, other: &NFElement) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with_coords(&self, coords: Vec<Rational>) -> NFElement {
        NFElement { field: Arc::clone(&self.field), coords }
    }

    pub fn scale(&self, c: &Rational) -> NFElement {
        self.with_coords(self.coords.iter().map(|a| a * c).collect())
    }

    fn mul_impl(&self, rhs: &NFElement) -> NFElement {
        let d = self.field.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<Rational> = prod[..d].to_vec();
        for (k, c) in prod[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, h) in out.iter_mut().zip(&self.field.high_powers[k]) {
                *o += c * h;
            }
        }
        self.with_coords(out)
    }

    pub fn square(&self) -> NFElement {
        self.mul_impl(self)
    }

    pub fn pow(&self, mut n: u64) -> NFElement {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Integer powers; negative exponents need a nonzero base.
    pub fn pow_i64(&self, n: i64) -> Result<NFElement> {
        if n >= 0 {
            Ok(self.pow(n as u64))
        } else {
            Ok(self.inv()?.pow(n.unsigned_abs()))
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the defining polynomial.
    pub fn inv(&self) -> Result<NFElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.coord_poly().ext_gcd(&self.field.defpoly);
        debug_assert_eq!(g, UniPoly::one());
        Ok(self.field.from_poly(&s))
    }

    pub fn div(&self, rhs: &NFElement) -> Result<NFElement> {
        self.check_same_field(rhs)?;
        Ok(self.mul_impl(&rhs.inv()?))
    }

    /// Matrix of `y ↦ x·y` in the power basis (column `j` is `x·θ^j`).
    pub fn mult_matrix(&self) -> RatMatrix {
        let d = self.field.degree;
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.clone();
        let theta = self.field.generator();
        for j in 0..d {
            cols.push(cur.coords.clone());
            if j + 1 < d {
                cur = cur.mul_impl(&theta);
            }
        }
        RatMatrix::from_columns(&cols).expect("square by construction")
    }

    /// `Tr_{L/Q}(x)`, the trace of the multiplication matrix, evaluated through
    /// the precomputed traces of the basis powers.
    pub fn trace(&self) -> Rational {
        self.coords
            .iter()
            .zip(&self.field.basis_traces)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, t)| c * t)
            .sum()
    }

    /// `N_{L/Q}(x)`, the determinant of the multiplication matrix.
    pub fn norm(&self) -> Rational {
        let cp = self.charpoly();
        let c0 = cp.coeff(0);
        if self.field.degree.is_multiple_of(2) {
            c0
        } else {
            -c0
        }
    }

    /// Characteristic polynomial of the multiplication map; degree `d`, monic.
    pub fn charpoly(&self) -> UniPoly {
        self.mult_matrix().charpoly().expect("square")
    }

    /// Least-degree monic annihilator, found as the first linear dependency
    /// among `1, x, x², …`.
    pub fn minpoly(&self) -> UniPoly {
        let d = self.field.degree;
        let mut powers: Vec<Vec<Rational>> = vec![self.field.one().coords];
        let mut cur = self.field.one();
        for m in 1..=d {
            cur = cur.mul_impl(self);
            powers.push(cur.coords.clone());
            let mat = RatMatrix::from_columns(&powers).expect("equal lengths");
            if let Some(v) = mat.kernel_basis().into_iter().next() {
                let lead = v[m].clone();
                debug_assert!(!lead.is_zero());
                return UniPoly::new(v.into_iter().map(|c| c / &lead).collect());
            }
        }
        unreachable!("every element satisfies its characteristic polynomial")
    }

    /// Ground-truth integrality test: the minimal polynomial has integer coefficients.
    pub fn integrality(&self) -> Integrality {
        let minpoly = self.minpoly();
        let integral = minpoly.coeffs().iter().all(Rational::is_integer);
        Integrality { integral, minpoly }
    }

    pub fn is_algebraic_integer(&self) -> bool {
        if let Some(r) = self.as_rational() {
            return r.is_integer();
        }
        // Z[θ] is integral when θ is
        if self.coords.iter().all(Rational::is_integer) && self.field.defpoly.coeffs().iter().all(Rational::is_integer) {
            return true;
        }
        // the characteristic polynomial is a power of the minimal one, so
        // both are integral together
        self.charpoly().coeffs().iter().all(Rational::is_integer)
    }

    /// Smallest positive integer `D` with `D·x` integral, computed prime by
    /// prime from the minimal polynomial.
    pub fn denominator(&self) -> BigInt {
        let minpoly = self.minpoly();
        minpoly_denominator(&minpoly)
    }

    /// Applies the automorphism (or embedding into `L`) sending θ to `image`.
    pub fn substitute(&self, image: &NFElement) -> Result<NFElement> {
        self.check_same_field(image)?;
        let field = &self.field;
        Ok(self.coord_poly().eval_with(
            image,
            field.zero(),
            |acc, c| &acc + &field.from_rational(c.clone()),
            |a, b| a * b,
        ))
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_poly(&self, p: &UniPoly) -> NFElement {
        let field = &self.field;
        p.eval_with(
            self,
            field.zero(),
            |acc, c| &acc + &field.from_rational(c.clone()),
            |a, b| a * b,
        )
    }
}

/// `D` for a monic minimal polynomial `X^m + c_{m-1} X^{m-1} + … + c_0`:
/// `v_p(D) = max_i ceil(-v_p(c_{m-i}) / i)`, clamped at zero.
pub fn minpoly_denominator(minpoly: &UniPoly) -> BigInt {
    let m = minpoly.deg();
    let mut primes = std::collections::BTreeSet::new();
    for c in minpoly.coeffs() {
        primes.extend(rational::prime_divisors(c.denom()));
    }
    let mut d = BigInt::one();
    for p in primes {
        let mut e: i64 = 0;
        for i in 1..=m {
            let c = minpoly.coeff(m - i);
            if let Some(v) = rational::valuation(&c, &p) {
                if v < 0 {
                    let need = (-v + i as i64 - 1) / i as i64;
                    e = e.max(need);
                }
            }
        }
        d *= num_traits::pow(p, e as usize);
    }
    d
}

fn assert_same(a: &NFElement, b: &NFElement) {
    assert!(same_field(&a.field, &b.field), "number field mismatch");
}

impl Add for &NFElement {
    type Output = NFElement;
    fn add(self, rhs: &NFElement) -> NFElement {
        assert_same(self, rhs);
        self.with_coords(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &NFElement {
    type Output = NFElement;
    fn sub(self, rhs: &NFElement) -> NFElement {
        assert_same(self, rhs);
        self.with_coords(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Mul for &NFElement {
    type Output = NFElement;
    fn mul(self, rhs: &NFElement) -> NFElement {
        assert_same(self, rhs);
        self.mul_impl(rhs)
    }
}

impl Neg for &NFElement {
    type Output = NFElement;
    fn neg(self) -> NFElement {
        self.with_coords(self.coords.iter().map(|a| -a).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for NFElement {
            type Output = NFElement;
            fn $m(self, rhs: NFElement) -> NFElement { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for NFElement {
    type Output = NFElement;
    fn neg(self) -> NFElement {
        -&self
    }
}
