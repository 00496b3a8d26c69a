//! Dense linear algebra over `Q` and `F_p`.

use super::scalar::{Ring, Scalar};
use crate::error::{usage, Error, Result};

/// A dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Result<Matrix> {
        if !ring.is_field() {
            return Err(usage(format!("linear algebra needs a field, got {ring}")));
        }
        Ok(Matrix { ring, rows, cols, data: vec![Scalar::zero(ring); rows * cols] })
    }

    pub fn from_rows(ring: Ring, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let mut m = Matrix::zeros(ring, rows.len(), cols)?;
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(usage(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.ring() != ring {
                    return Err(Error::RingMismatch(ring, v.ring()));
                }
                m.data[i * cols + j] = v;
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.ring(), self.ring, "ring mismatch");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.ring, self.cols, self.rows).expect("field");
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(self.ring), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Gauss-Jordan elimination, scanning columns left to right.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).try_inv().expect("nonzero field element");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &(&factor * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of the right kernel `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let e = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(self.ring); self.cols];
                v[f] = Scalar::one(self.ring);
                for (r, &p) in e.pivots.iter().enumerate() {
                    v[p] = -e.matrix.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Some solution of `A v = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.ring, self.rows, self.cols + 1).expect("field");
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let e = aug.echelon();
        if e.pivots.contains(&self.cols) {
            return None;
        }
        let mut v = vec![Scalar::zero(self.ring); self.cols];
        for (r, &p) in e.pivots.iter().enumerate() {
            v[p] = e.matrix.get(r, self.cols).clone();
        }
        Some(v)
    }
}

impl Echelon {
    /// Reduces `v` modulo the row space; the result has zero entries in
    /// every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let factor = out[p].clone();
                for (j, o) in out.iter_mut().enumerate().skip(p) {
                    *o = &*o - &(&factor * self.matrix.get(r, j));
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            Ring::Rationals,
            cols,
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_i64(Ring::Rationals, x)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let f3 = Ring::Prime(3);
        let m = Matrix::from_rows(f3, 2, vec![vec![Scalar::from_i64(f3, 3), Scalar::zero(f3)]]).unwrap();
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = q(&[&[1, 1], &[1, -1]]);
        let b = [Scalar::from_i64(Ring::Rationals, 3), Scalar::from_i64(Ring::Rationals, 1)];
        let v = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&v), b.to_vec());
        let singular = q(&[&[1, 1], &[2, 2]]);
        assert!(singular.solve(&b).is_none());
    }

    #[test]
    fn integers_are_rejected() {
        assert!(Matrix::zeros(Ring::Integers, 1, 1).is_err());
    }
}
