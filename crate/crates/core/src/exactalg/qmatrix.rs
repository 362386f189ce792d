//! Dense matrices over the rational function field, with exact Gaussian
//! elimination for determinants and inverses.

use super::qpoly::QPoly;
use super::ratfun::RatFun;
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Row-major matrix over `RatFun`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFun>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![RatFun::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = RatFun::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatFun) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Builds from rows of integer constants.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        QMatrix::from_fn(rows.len(), rows.first().map_or(0, Vec::len), |i, j| {
            RatFun::from_poly(QPoly::from_ints(&[rows[i][j]]))
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &RatFun) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    pub fn trace(&self) -> RatFun {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut t = RatFun::zero();
        for i in 0..self.rows {
            t = &t + &self[(i, i)];
        }
        t
    }

    pub fn pow(&self, n: usize) -> QMatrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Determinant by fraction-field Gaussian elimination.
    pub fn det(&self) -> RatFun {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = RatFun::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(pivot) = pivot else {
                return RatFun::zero();
            };
            if pivot != col {
                for j in 0..n {
                    let (a, b) = (m[(pivot, j)].clone(), m[(col, j)].clone());
                    m[(pivot, j)] = b;
                    m[(col, j)] = a;
                }
                det = -&det;
            }
            let p = m[(col, col)].clone();
            det = &det * &p;
            let pinv = p.recip().expect("nonzero pivot");
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] * &pinv;
                for j in col..n {
                    let t = &factor * &m[(col, j)];
                    m[(r, j)] = &m[(r, j)] - &t;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination; errors on singular input.
    pub fn inverse(&self) -> Result<QMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(pivot) = pivot else {
                return Err(Error::SingularMatrix(format!("column {}", col)));
            };
            if pivot != col {
                for j in 0..n {
                    let (a, b) = (m[(pivot, j)].clone(), m[(col, j)].clone());
                    m[(pivot, j)] = b;
                    m[(col, j)] = a;
                    let (a, b) = (inv[(pivot, j)].clone(), inv[(col, j)].clone());
                    inv[(pivot, j)] = b;
                    inv[(col, j)] = a;
                }
            }
            let pinv = m[(col, col)].recip().expect("nonzero pivot");
            for j in 0..n {
                m[(col, j)] = &m[(col, j)] * &pinv;
                inv[(col, j)] = &inv[(col, j)] * &pinv;
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in 0..n {
                    let t = &factor * &m[(col, j)];
                    m[(r, j)] = &m[(r, j)] - &t;
                    let t = &factor * &inv[(col, j)];
                    inv[(r, j)] = &inv[(r, j)] - &t;
                }
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = RatFun;
    fn index(&self, (i, j): (usize, usize)) -> &RatFun {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RatFun {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        QMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = RatFun::zero();
            for k in 0..self.cols {
                if self[(i, k)].is_zero() || rhs[(k, j)].is_zero() {
                    continue;
                }
                let t = &self[(i, k)] * &rhs[(k, j)];
                acc = &acc + &t;
            }
            acc
        })
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qpoly::rat;
    use proptest::prelude::*;

    #[test]
    fn det_of_symmetric_q_matrix() {
        let q = RatFun::q();
        let one = RatFun::one();
        let mut m = QMatrix::zero(2, 2);
        m[(0, 0)] = q.clone();
        m[(0, 1)] = one.clone();
        m[(1, 0)] = one;
        m[(1, 1)] = q;
        let d = m.det();
        assert_eq!(d, RatFun::from_poly(QPoly::from_ints(&[-1, 0, 1])));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = QMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(m.det().is_zero());
        assert!(matches!(m.inverse(), Err(Error::SingularMatrix(_))));
    }

    #[test]
    fn inverse_of_q_shift() {
        let mut m = QMatrix::identity(2);
        m[(0, 1)] = RatFun::q();
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(2));
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
        prop::collection::vec(-5i64..=5, n * n).prop_map(move |vals| {
            QMatrix::from_fn(n, n, |i, j| RatFun::constant(rat(vals[i * n + j])))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn inverse_roundtrip(n in 1usize..=6, seed in any::<u64>()) {
            // Diagonally dominant integer matrices are invertible.
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 11) as i64 - 5
            };
            let mut m = QMatrix::from_fn(n, n, |_, _| RatFun::constant(rat(next())));
            for i in 0..n {
                m[(i, i)] = RatFun::constant(rat(6 * n as i64));
            }
            let inv = m.inverse().unwrap();
            prop_assert_eq!(&m * &inv, QMatrix::identity(n));
            prop_assert_eq!(&inv * &m, QMatrix::identity(n));
        }

        #[test]
        fn det_is_multiplicative(a in arb_matrix(3), b in arb_matrix(3)) {
            let ab = &a * &b;
            prop_assert_eq!(ab.det(), &a.det() * &b.det());
        }

        #[test]
        fn det_detects_singularity(a in arb_matrix(3)) {
            let d = a.det();
            if d.is_zero() {
                prop_assert!(a.inverse().is_err());
            } else {
                let inv = a.inverse().unwrap();
                prop_assert_eq!(&a * &inv, QMatrix::identity(3));
            }
        }
    }
}
