//! Exact dense matrices over Q.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch { rows, cols, len: entries.len() });
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch { rows: r, cols: c, len: rows.iter().map(Vec::len).sum() });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
                .collect(),
        )
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Rational>]) -> Result<Self> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        let mut entries = vec![Rational::zero(); r * c];
        for (j, col) in columns.iter().enumerate() {
            if col.len() != r {
                return Err(Error::ShapeMismatch { rows: r, cols: c, len: col.len() * c });
            }
            for (i, v) in col.iter().enumerate() {
                entries[i * c + j] = v.clone();
            }
        }
        Self::new(r, c, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch { rows: rhs.rows, cols: rhs.cols, len: self.cols });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.entries[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::ShapeMismatch { rows: rhs.rows, cols: rhs.cols, len: self.entries.len() });
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    /// Horner evaluation `p(M)` for a square matrix.
    pub fn eval_poly(&self, p: &UniPoly) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let id = Self::identity(self.rows);
        let mut acc = Self::zeros(self.rows, self.rows);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?.add(&id.scale(c))?;
        }
        Ok(acc)
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(p, row);
            let inv = self.get(row, col).recip();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let f = self.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let v = self.get(r, j) - &f * self.get(row, j);
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Basis of the right null space, itself in reduced echelon form
    /// (each vector has a leading 1). Empty iff the matrix is injective.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Vec::new();
        }
        let raw: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, f).clone();
                }
                v
            })
            .collect();
        let mut basis = RatMatrix::from_rows(raw).expect("rectangular by construction");
        let rank = basis.rref().len();
        (0..rank)
            .map(|r| basis.entries[r * basis.cols..(r + 1) * basis.cols].to_vec())
            .collect()
    }

    /// Monic characteristic polynomial `det(xI - M)`, via reduction to
    /// upper Hessenberg form followed by the standard determinant recurrence.
    pub fn charpoly(&self) -> Result<UniPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            h.swap_rows(i, m);
            h.swap_cols(i, m);
            let t = h.get(m, m - 1).recip();
            for i in m + 1..n {
                let u = h.get(i, m - 1) * &t;
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = h.get(i, j) - &u * h.get(m, j);
                    h.set(i, j, v);
                }
                for j in 0..n {
                    let v = h.get(j, m) + &u * h.get(j, i);
                    h.set(j, m, v);
                }
            }
        }
        // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
        let mut p: Vec<UniPoly> = vec![UniPoly::one()];
        for k in 0..n {
            let lin = UniPoly::new(vec![-h.get(k, k).clone(), Rational::one()]);
            let mut next = &lin * &p[k];
            let mut t = Rational::one();
            for i in (0..k).rev() {
                t *= h.get(i + 1, i);
                if t.is_zero() {
                    break;
                }
                let c = h.get(i, k) * &t;
                next = &next - &p[i].scale(&c);
            }
            p.push(next);
        }
        Ok(p.pop().unwrap())
    }
}
