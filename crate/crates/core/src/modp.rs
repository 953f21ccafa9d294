//! Polynomials over a small prime field, just enough to screen and factor
//! defining polynomials. Coefficients are stored low to high in `u64`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

pub type PolyP = Vec<u64>;

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!((2..(1 << 31)).contains(&p));
        Fp { p }
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn trim(&self, mut a: PolyP) -> PolyP {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(out)
    }

    pub fn poly_divrem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        let b = self.trim(b.to_vec());
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let db = b.len() - 1;
        let mut r = self.trim(a.to_vec());
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let inv = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + db], inv);
            if c == 0 {
                continue;
            }
            for (i, &bi) in b.iter().enumerate() {
                r[k + i] = self.sub(r[k + i], self.mul(c, bi));
            }
            q[k] = c;
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn poly_rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.poly_divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = self.inv(lc);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s·a + t·b = g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        let (mut s0, mut s1): (PolyP, PolyP) = (vec![1], Vec::new());
        let (mut t0, mut t1): (PolyP, PolyP) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("gcd of two zero polynomials"));
        let sc = |v: &PolyP| self.trim(v.iter().map(|&c| self.mul(c, inv)).collect());
        (sc(&r0), sc(&s0), sc(&t0))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        let v = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        self.trim(v)
    }

    /// `base^e mod m`
    pub fn powmod(&self, base: &[u64], mut e: u128, m: &[u64]) -> PolyP {
        let mut acc: PolyP = self.poly_rem(&[1], m);
        let mut b = self.poly_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &b), m);
            }
            b = self.poly_rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(d, product of all irreducible factors of degree d)`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(usize, PolyP)> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x: PolyP = vec![0, 1];
        let mut h = x.clone();
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                out.push((rest.len() - 1, rest.clone()));
                break;
            }
            h = self.powmod(&h, self.p as u128, &rest);
            let g = self.gcd(&rest, &self.poly_sub(&h, &x));
            if g.len() > 1 {
                rest = self.poly_divrem(&rest, &g).0;
                h = self.poly_rem(&h, &rest);
                out.push((d, g));
            }
        }
        out
    }

    pub fn is_irreducible(&self, f: &[u64]) -> bool {
        let n = f.len() - 1;
        let dd = self.distinct_degree(f);
        dd.len() == 1 && dd[0].0 == n
    }

    /// Cantor–Zassenhaus split of a product of irreducibles of degree `d`.
    /// Uses a fixed-seed generator, so results are reproducible.
    fn equal_degree(&self, f: &[u64], d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == d {
            return vec![self.monic(f)];
        }
        let e = (u128::from(self.p).pow(d as u32) - 1) / 2;
        loop {
            let a: PolyP = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.poly_sub(&self.powmod(&a, e, f), &[1]);
            let g = self.gcd(f, &b);
            if g.len() > 1 && g.len() < f.len() {
                let other = self.poly_divrem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&other, d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial, for odd `p`.
    pub fn factor_squarefree(&self, f: &[u64]) -> Vec<PolyP> {
        debug_assert!(self.p % 2 == 1);
        let mut rng = ChaCha8Rng::seed_from_u64(0x005e_ed0f_fac7);
        let mut out = Vec::new();
        for (d, g) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, &mut rng));
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_mod_p() {
        let f3 = Fp::new(3);
        assert!(f3.is_irreducible(&[1, 0, 1])); // x^2 + 1 mod 3
        let f5 = Fp::new(5);
        assert!(!f5.is_irreducible(&[1, 0, 1])); // x^2 + 1 = (x - 2)(x + 2) mod 5
    }

    #[test]
    fn factorization_multiplies_back() {
        let fp = Fp::new(7);
        // x^4 - 10x^2 + 1 mod 7 splits into quadratics or linears
        let f: PolyP = vec![1, 0, 4, 0, 1];
        let fs = fp.factor_squarefree(&f);
        let prod = fs.iter().fold(vec![1u64], |acc, g| fp.poly_mul(&acc, g));
        assert_eq!(prod, f);
        assert!(fs.iter().all(|g| fp.is_irreducible(g)));
        assert!(fs.len() >= 2);
    }

    #[test]
    fn ext_gcd_identity() {
        let fp = Fp::new(11);
        let a = vec![3, 0, 1];
        let b = vec![1, 1];
        let (g, s, t) = fp.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        let lhs = fp.poly_add(&fp.poly_mul(&s, &a), &fp.poly_mul(&t, &b));
        assert_eq!(lhs, vec![1]);
    }
}
