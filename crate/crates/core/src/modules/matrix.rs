use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::linalg::{self, SparseVec};

/// Small dense square matrix over ℚ, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        Self::identity(n).scale(c)
    }

    /// Builds from rows; `None` unless the rows form a square array.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Matrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[Rational]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.n).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// `[self, other] = self·other − other·self`
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::identity(self.n), |acc, _| &acc * self)
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)].is_zero()))
    }

    /// Smallest `m` such that every nonzero entry `(i, j)` has `j − i ≥ m`
    /// (`None` for the zero matrix, or when an entry lies below the diagonal).
    pub fn upper_level(&self) -> Option<usize> {
        let mut level: Option<usize> = None;
        for i in 0..self.n {
            for j in 0..self.n {
                if !self[(i, j)].is_zero() {
                    if j < i {
                        return None;
                    }
                    level = Some(level.map_or(j - i, |l| l.min(j - i)));
                }
            }
        }
        level
    }

    /// Characteristic polynomial `det(tI − A)` coefficients, lowest degree
    /// first (Faddeev–LeVerrier).
    pub fn characteristic_polynomial(&self) -> Vec<Rational> {
        let n = self.n;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Self::zeros(n);
        for k in 1..=n {
            m = &(self * &m) + &Self::scalar(n, &coeffs[n - k + 1]);
            let am = self * &m;
            coeffs[n - k] = -am.trace() / Rational::from_integer((k as i64).into());
        }
        coeffs
    }

    /// Basis of the kernel, as column vectors in reduced echelon form.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let rows: Vec<SparseVec> = self.rows().iter().map(|r| linalg::sparse(r)).collect();
        linalg::nullspace(rows.iter(), self.n)
            .into_iter()
            .map(|v| (0..self.n).map(|i| v.get(&i).cloned().unwrap_or_else(Rational::zero)).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn products_and_commutators() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let b = m(&[&[2, 0], &[0, 3]]);
        assert_eq!(&a * &b, m(&[&[2, 3], &[0, 3]]));
        assert_eq!(a.commutator(&b), m(&[&[0, 1], &[0, 0]]));
        assert_eq!(a.upper_level(), Some(0));
        assert_eq!(m(&[&[0, 0, 5], &[0, 0, 0], &[0, 0, 0]]).upper_level(), Some(2));
    }

    #[test]
    fn characteristic_polynomial() {
        // (t−1)(t−2) = t² − 3t + 2
        let a = m(&[&[1, 7], &[0, 2]]);
        assert_eq!(a.characteristic_polynomial(), vec![int(2), int(-3), int(1)]);
    }

    #[test]
    fn kernel_of_nilpotent() {
        let a = m(&[&[0, 1], &[0, 0]]);
        assert_eq!(a.kernel(), vec![vec![int(1), int(0)]]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(vec![vec![int(1)], vec![int(1), int(2)]]).is_none());
    }
}
