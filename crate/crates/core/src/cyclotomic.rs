//! Cyclotomic polynomials and the orders `n` with small `phi(n)`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::One;

use crate::poly::UniPoly;
use crate::rational::Rational;

fn cache() -> &'static Mutex<HashMap<u64, UniPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, UniPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Phi_n`, computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d` and memoized.
pub fn cyclotomic(n: u64) -> UniPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = UniPoly::monomial(Rational::one(), n as usize);
    num = &num - &UniPoly::one();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        num = num
            .exact_div(&cyclotomic(d))
            .expect("Phi_d divides x^n - 1 for d | n");
    }
    cache().lock().unwrap().insert(n, num.clone());
    num
}

/// Seeds the memo table, e.g. from an on-disk cache. Entries are trusted.
pub fn preload(n: u64, poly: UniPoly) {
    cache().lock().unwrap().insert(n, poly);
}

/// Snapshot of the memo table, sorted by index.
pub fn cached_entries() -> Vec<(u64, UniPoly)> {
    let mut v: Vec<_> = cache().lock().unwrap().iter().map(|(k, p)| (*k, p.clone())).collect();
    v.sort_by_key(|(k, _)| *k);
    v
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization of a machine-size integer by trial division.
pub fn factor_small(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factor_small(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

const TABLE_DEGREE: u64 = 64;

/// `phi` for `n <= 2·64²`, enough to enumerate every `n` with `phi(n) <= 64`.
fn phi_table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let limit = (2 * TABLE_DEGREE * TABLE_DEGREE) as usize;
        let mut phi: Vec<u64> = (0..=limit as u64).collect();
        for i in 2..=limit {
            if phi[i] == i as u64 {
                for j in (i..=limit).step_by(i) {
                    phi[j] -= phi[j] / i as u64;
                }
            }
        }
        phi
    })
}

/// All `n >= 1` with `phi(n) <= d`, ascending. Uses `phi(n) >= sqrt(n/2)`.
pub fn orders_with_phi_at_most(d: u64) -> Vec<u64> {
    let limit = 2 * d.max(1) * d.max(1);
    if d <= TABLE_DEGREE {
        let t = phi_table();
        (1..=limit).filter(|&n| t[n as usize] <= d).collect()
    } else {
        (1..=limit).filter(|&n| euler_phi(n) <= d).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(4), UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), UniPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), UniPoly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn degree_is_phi() {
        for n in 1..=60 {
            assert_eq!(cyclotomic(n).deg() as u64, euler_phi(n), "n = {n}");
        }
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_1() {
        let n = 30;
        let prod = divisors(n)
            .into_iter()
            .fold(UniPoly::one(), |acc, d| &acc * &cyclotomic(d));
        let mut expect = vec![0i64; n as usize + 1];
        expect[0] = -1;
        expect[n as usize] = 1;
        assert_eq!(prod, UniPoly::from_ints(&expect));
    }

    #[test]
    fn orders_for_degree_two() {
        assert_eq!(orders_with_phi_at_most(2), vec![1, 2, 3, 4, 6]);
        let big = orders_with_phi_at_most(70);
        assert!(big.iter().all(|&n| euler_phi(n) <= 70));
        assert!(big.contains(&71) && !big.contains(&73) && !big.contains(&146));
    }
}
