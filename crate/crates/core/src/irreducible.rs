//! Irreducibility screening for defining polynomials over Q.
//!
//! Policy, in order: degree <= 2 by direct check; irreducible modulo one of
//! the first 25 odd primes of good reduction; for degree <= 8, a complete
//! search over products of Hensel-lifted modular factors bounded by
//! Mignotte's inequality. Anything else is left undecided.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::modp::{Fp, PolyP};
use crate::poly::{int_poly, UniPoly};
use crate::rational::Rational;

const SCREEN_PRIMES: [u64; 25] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
];

const EXHAUSTIVE_MAX_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Screen {
    Irreducible,
    IrreducibleModP(u64),
    /// A nontrivial monic factor over Q.
    Reducible(UniPoly),
    Undecided,
}

/// `f` must be monic and squarefree of degree >= 1.
pub fn screen(f: &UniPoly) -> Screen {
    debug_assert!(f.is_monic());
    match f.deg() {
        0 => Screen::Undecided,
        1 => Screen::Irreducible,
        2 => quadratic(f),
        n => {
            let (scale, g) = integral_monic(f);
            let mut best: Option<(usize, u64, Vec<PolyP>)> = None;
            for &p in &SCREEN_PRIMES {
                let fp = Fp::new(p);
                let gp = reduce(&g, p);
                if gp.len() != g.len() || !fp.is_squarefree(&gp) {
                    continue;
                }
                if fp.is_irreducible(&gp) {
                    return Screen::IrreducibleModP(p);
                }
                if n <= EXHAUSTIVE_MAX_DEGREE {
                    let factors = fp.factor_squarefree(&gp);
                    if best.as_ref().is_none_or(|(r, _, _)| factors.len() < *r) {
                        best = Some((factors.len(), p, factors));
                    }
                }
            }
            if n > EXHAUSTIVE_MAX_DEGREE {
                return Screen::Undecided;
            }
            let (p, factors) = match best {
                Some((_, p, factors)) => (p, factors),
                None => match good_prime_beyond_screen(&g) {
                    Some(p) => (p, Fp::new(p).factor_squarefree(&reduce(&g, p))),
                    None => return Screen::Undecided,
                },
            };
            match zassenhaus(&g, p, factors) {
                None => Screen::Irreducible,
                Some(h) => Screen::Reducible(unscale_factor(&h, &scale)),
            }
        }
    }
}

fn quadratic(f: &UniPoly) -> Screen {
    // x^2 + b x + c has a rational root iff b^2 - 4c is a rational square
    let b = f.coeff(1);
    let c = f.coeff(0);
    let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &c;
    match rational_sqrt(&disc) {
        None => Screen::Irreducible,
        Some(s) => {
            let root = (-b + s) / Rational::from_integer(BigInt::from(2));
            Screen::Reducible(UniPoly::linear_root(root))
        }
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// `g(x) = D^n f(x / D)` is monic with integer coefficients.
fn integral_monic(f: &UniPoly) -> (BigInt, Vec<BigInt>) {
    let n = f.deg();
    let d = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let g = (0..=n)
        .map(|i| {
            let scaled = f.coeff(i) * Rational::from_integer(num_traits::pow(d.clone(), n - i));
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    (d, g)
}

/// Maps a monic factor `h` of `g(x) = D^n f(x/D)` back to the monic factor
/// `D^{-k} h(D x)` of `f`.
fn unscale_factor(h: &[BigInt], d: &BigInt) -> UniPoly {
    let k = h.len() - 1;
    UniPoly::new(
        h.iter()
            .enumerate()
            .map(|(i, c)| Rational::new(c.clone(), num_traits::pow(d.clone(), k - i)))
            .collect(),
    )
}

fn reduce(g: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    let v = g
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    Fp::new(p).trim(v)
}

fn good_prime_beyond_screen(g: &[BigInt]) -> Option<u64> {
    (103u64..100_000)
        .filter(|&p| crate::rational::is_prime(&BigInt::from(p)))
        .find(|&p| {
            let gp = reduce(g, p);
            gp.len() == g.len() && Fp::new(p).is_squarefree(&gp)
        })
}

/// Coefficient bound for any monic integer factor of `g`: `2^n · ||g||_1`.
fn factor_coefficient_bound(g: &[BigInt]) -> BigInt {
    let n = g.len() - 1;
    let norm1: BigInt = g.iter().map(|c| c.abs()).sum();
    (BigInt::one() << n) * norm1
}

fn lift_poly(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn mod_poly(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = v.iter().map(|c| c.mod_floor(m)).collect();
    int_poly::trim(&mut out);
    out
}

fn sub_poly(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    int_poly::trim(&mut out);
    out
}

/// Lifts `g ≡ a·b (mod p)` with monic, coprime `a`, `b` to `mod p^k`.
fn hensel_pair(g: &[BigInt], a: &PolyP, b: &PolyP, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let fp = Fp::new(p);
    let (one, s, t) = fp.ext_gcd(a, b);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let mut a_big = lift_poly(a);
    let mut b_big = lift_poly(b);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = sub_poly(g, &int_poly::mul(&a_big, &b_big));
        let e: Vec<BigInt> = diff
            .iter()
            .map(|c| {
                debug_assert!((c % &pj).is_zero());
                c / &pj
            })
            .collect();
        let e = reduce(&e, p);
        let es = fp.poly_mul(&e, &s);
        let (q, db) = fp.poly_divrem(&es, b);
        let da = fp.poly_add(&fp.poly_mul(&e, &t), &fp.poly_mul(&q, a));
        let add = |base: &mut Vec<BigInt>, delta: &PolyP| {
            for (i, &c) in delta.iter().enumerate() {
                base[i] += &pj * BigInt::from(c);
            }
        };
        add(&mut a_big, &da);
        add(&mut b_big, &db);
        pj *= &pb;
    }
    (a_big, b_big)
}

/// Lifts a full modular factorization of monic `g` to `mod p^k`.
fn hensel_multi(g: &[BigInt], factors: &[PolyP], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![mod_poly(g, &num_traits::pow(BigInt::from(p), k as usize))];
    }
    let fp = Fp::new(p);
    let mid = factors.len() / 2;
    let prod = |fs: &[PolyP]| fs.iter().fold(vec![1u64], |acc, f| fp.poly_mul(&acc, f));
    let (left, right) = (prod(&factors[..mid]), prod(&factors[mid..]));
    let (a, b) = hensel_pair(g, &left, &right, p, k);
    let modulus = num_traits::pow(BigInt::from(p), k as usize);
    let mut out = hensel_multi(&mod_poly(&a, &modulus), &factors[..mid], p, k);
    out.extend(hensel_multi(&mod_poly(&b, &modulus), &factors[mid..], p, k));
    out
}

fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    int_poly::trim(&mut out);
    out
}

/// Exact division of monic integer polynomials.
fn divides(h: &[BigInt], g: &[BigInt]) -> bool {
    let (_, r) = UniPoly::from_bigints(g).div_rem(&UniPoly::from_bigints(h));
    r.is_zero()
}

/// Returns a nontrivial monic integer factor of `g`, or `None` when `g` is
/// irreducible. `factors` is the full factorization of `g` modulo `p`.
fn zassenhaus(g: &[BigInt], p: u64, factors: Vec<PolyP>) -> Option<Vec<BigInt>> {
    let r = factors.len();
    if r <= 1 {
        return None;
    }
    let bound = factor_coefficient_bound(g) * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_multi(g, &factors, p, k);
    for mask in 1u32..(1 << r) - 1 {
        let size = mask.count_ones() as usize;
        // each split is visited twice; only test the smaller side
        if 2 * size > r || (2 * size == r && mask & 1 == 0) {
            continue;
        }
        let prod = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .fold(vec![BigInt::one()], |acc, i| mod_poly(&int_poly::mul(&acc, &lifted[i]), &modulus));
        let cand = symmetric(&prod, &modulus);
        if cand.len() < 2 || cand.last().map(|c| c.sign()) != Some(Sign::Plus) {
            continue;
        }
        if !g[0].is_zero() && !cand[0].is_zero() && !(&g[0] % &cand[0]).is_zero() {
            continue;
        }
        if divides(&cand, g) {
            return Some(cand);
        }
    }
    None
}
