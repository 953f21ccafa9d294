//! Roots of unity, the "ratio is a root of unity" partition, and user-supplied
//! automorphism data with unity stabilizers.
//!
//! All indices reported here are 1-based.

use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::cyclotomic::{self, euler_phi, factor_small};
use crate::error::{Error, Result};
use crate::numfield::{Field, NFElement};

/// Smallest `n` with `x^n = 1`, searched over all `n` with `phi(n)` at most
/// the field degree; `None` if `x` is not a root of unity.
pub fn root_of_unity_order(x: &NFElement) -> Result<Option<u64>> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if let Some(r) = x.as_rational() {
        return Ok(if r.is_one() {
            Some(1)
        } else if (-r).is_one() {
            Some(2)
        } else {
            None
        });
    }
    let integrality = x.integrality();
    let minpoly = integrality.minpoly;
    if !integrality.integral || !minpoly.coeff(0).abs().is_one() {
        return Ok(None);
    }
    let m = minpoly.deg() as u64;
    for n in cyclotomic::orders_with_phi_at_most(x.field().degree() as u64) {
        if euler_phi(n) == m && cyclotomic::cyclotomic(n) == minpoly {
            debug_assert!(x.pow(n).is_one());
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Order of `a / b` as a root of unity, if it is one.
pub fn ratio_unity(a: &NFElement, b: &NFElement) -> Result<Option<u64>> {
    a.check_same_field(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroElement);
    }
    root_of_unity_order(&a.div(b)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMember {
    pub index: usize,
    /// Order of `alpha_index / alpha_representative`.
    pub twist_order: u64,
    /// `omega` with `alpha_index / alpha_representative = zeta^omega`, where
    /// `zeta` is a primitive root of unity of order `effective_torsion`.
    pub twist_exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnityClass {
    pub representative: usize,
    pub members: Vec<ClassMember>,
}

impl UnityClass {
    pub fn indices(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.index).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnityClassPartition {
    pub classes: Vec<UnityClass>,
    pub effective_torsion: u64,
}

impl UnityClassPartition {
    pub fn class_of(&self, index: usize) -> Option<&UnityClass> {
        self.classes.iter().find(|c| c.members.iter().any(|m| m.index == index))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.classes.iter().all(|c| c.members.len() == 1)
    }
}

/// Element of order `lcm(na, nb)` in the cyclic group generated by `a` and `b`.
fn combine(a: &NFElement, na: u64, b: &NFElement, nb: u64) -> (NFElement, u64) {
    let l = na.lcm(&nb);
    let mut g = a.field().one();
    for (p, e) in factor_small(l) {
        let pe = p.pow(e);
        let part = if na.is_multiple_of(pe) { a.pow(na / pe) } else { b.pow(nb / pe) };
        g = &g * &part;
    }
    (g, l)
}

/// Groups the inputs by "ratio is a root of unity" and records twist data.
pub fn partition_classes(alphas: &[NFElement]) -> Result<UnityClassPartition> {
    if alphas.iter().any(NFElement::is_zero) {
        return Err(Error::ZeroElement);
    }
    for a in alphas.iter().skip(1) {
        a.check_same_field(&alphas[0])?;
    }
    // (member index, ratio to representative, order)
    let mut raw: Vec<Vec<(usize, NFElement, u64)>> = Vec::new();
    for (i, a) in alphas.iter().enumerate() {
        let mut placed = false;
        for class in raw.iter_mut() {
            let rep = &alphas[class[0].0];
            let ratio = a.div(rep)?;
            if let Some(n) = root_of_unity_order(&ratio)? {
                class.push((i, ratio, n));
                placed = true;
                break;
            }
        }
        if !placed {
            raw.push(vec![(i, a.field().one(), 1)]);
        }
    }
    let mut h = raw
        .iter()
        .flatten()
        .fold(1u64, |acc, (_, _, n)| acc.lcm(n));
    if raw.iter().any(|c| c.len() > 1) {
        h = h.max(2);
    }
    let mut classes = Vec::with_capacity(raw.len());
    for class in &raw {
        let (mut gen, mut order) = (class[0].1.clone(), 1u64);
        for (_, r, n) in class.iter().skip(1) {
            (gen, order) = combine(&gen, order, r, *n);
        }
        let mut members = Vec::with_capacity(class.len());
        for (i, r, n) in class {
            let mut cur = gen.field().one();
            let mut e = 0;
            while &cur != r {
                cur = &cur * &gen;
                e += 1;
                assert!(e < order, "ratio lies in the cyclic group it generates");
            }
            members.push(ClassMember { index: i + 1, twist_order: *n, twist_exponent: e * (h / order) });
        }
        classes.push(UnityClass { representative: class[0].0 + 1, members });
    }
    Ok(UnityClassPartition { classes, effective_torsion: h })
}

/// Candidate automorphisms `theta -> image_i`, verified to be distinct roots of
/// the defining polynomial.
#[derive(Clone, Debug)]
pub struct GaloisData {
    field: Field,
    images: Vec<NFElement>,
    verified: bool,
    full_group: bool,
}

pub fn verify_galois_data(field: &Field, images: Vec<NFElement>) -> Result<GaloisData> {
    for (i, img) in images.iter().enumerate() {
        img.check_same_field(&field.zero())?;
        if !img.eval_poly(field.defpoly()).is_zero() {
            return Err(Error::ImageNotRoot { index: i + 1 });
        }
        if let Some(j) = images[..i].iter().position(|o| o == img) {
            return Err(Error::DuplicateImage { first: j + 1, second: i + 1 });
        }
    }
    let full_group = images.len() == field.degree();
    Ok(GaloisData { field: field.clone(), images, verified: true, full_group })
}

impl GaloisData {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn images(&self) -> &[NFElement] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    pub fn full_group(&self) -> bool {
        self.full_group
    }

    fn require_full(&self) -> Result<()> {
        if self.verified && self.full_group {
            Ok(())
        } else {
            Err(Error::NotFullGroup)
        }
    }

    /// `sigma_i(x)` for the 0-based position `i`.
    pub fn apply(&self, i: usize, x: &NFElement) -> Result<NFElement> {
        x.substitute(&self.images[i])
    }

    /// `table[i][j]` is the 0-based position of `sigma_i ∘ sigma_j`.
    pub fn composition_table(&self) -> Result<Vec<Vec<usize>>> {
        self.require_full()?;
        let n = self.images.len();
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let img = self.images[j].substitute(&self.images[i])?;
                table[i][j] = self
                    .images
                    .iter()
                    .position(|o| o == &img)
                    .ok_or_else(|| Error::InvalidArgument("images are not closed under composition".into()))?;
            }
        }
        Ok(table)
    }

    /// 0-based position of the identity.
    pub fn identity(&self) -> Option<usize> {
        let theta = self.field.generator();
        self.images.iter().position(|o| o == &theta)
    }
}

/// 1-based indices of the automorphisms `sigma` with `sigma(x)/x` a root of
/// unity, checked to form a subgroup.
pub fn unity_stabilizer(gd: &GaloisData, x: &NFElement) -> Result<Vec<usize>> {
    gd.require_full()?;
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    x.check_same_field(&gd.field.zero())?;
    let mut members = Vec::new();
    for i in 0..gd.len() {
        if ratio_unity(&gd.apply(i, x)?, x)?.is_some() {
            members.push(i);
        }
    }
    let table = gd.composition_table()?;
    for &a in &members {
        for &b in &members {
            if !members.contains(&table[a][b]) {
                return Err(Error::StabilizerNotClosed);
            }
        }
    }
    Ok(members.into_iter().map(|i| i + 1).collect())
}
