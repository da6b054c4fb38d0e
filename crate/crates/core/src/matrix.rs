//! Dense matrices over `Z[v, v^-1]` with fraction-free elimination.
//!
//! Rank and determinant are computed by Bareiss elimination, whose divisions are
//! exact in `Z[v, v^-1]`. Ranks are therefore ranks over the fraction field `Q(v)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::laurent::{LaurentPoly, RationalV};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, data: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = LaurentPoly::one();
        }
        m
    }

    /// Scalar matrix `p * Id`.
    pub fn scalar(n: usize, p: &LaurentPoly) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = p.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        PolyMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[LaurentPoly] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        PolyMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * p).collect() }
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        PolyMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn eval_at_one(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).iter().map(LaurentPoly::eval_at_one).collect()).collect()
    }

    pub fn trace(&self) -> LaurentPoly {
        (0..self.rows.min(self.cols)).map(|k| self[(k, k)].clone()).sum()
    }

    fn mul_ref(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        let one = BigInt::from(1);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(r, c)].add_scaled_shifted(&prod, &one, 0);
                }
            }
        }
        out
    }

    fn zip_with(&self, other: &PolyMatrix, f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Rank over `Q(v)`.
    pub fn rank(&self) -> usize {
        bareiss(self.clone()).0
    }

    /// Determinant; panics on non-square input.
    pub fn determinant(&self) -> LaurentPoly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return LaurentPoly::one();
        }
        let (rank, m, sign) = bareiss(self.clone());
        if rank < self.rows {
            return LaurentPoly::zero();
        }
        let d = m[(self.rows - 1, self.cols - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> PolyMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != skip_r) {
            for c in (0..self.cols).filter(|&c| c != skip_c) {
                data.push(self[(r, c)].clone());
            }
        }
        PolyMatrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Classical adjugate: `adj(A) * A = det(A) * Id`.
    pub fn adjugate(&self) -> PolyMatrix {
        assert!(self.is_square(), "adjugate of a non-square matrix");
        let n = self.rows;
        if n == 1 {
            return Self::identity(1);
        }
        let mut adj = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let cof = self.minor(r, c).determinant();
                adj[(c, r)] = if (r + c) % 2 == 0 { cof } else { -cof };
            }
        }
        adj
    }

    /// Inverse over `Q(v)` as `adj(A) / det(A)`.
    pub fn inverse(&self) -> Result<Vec<Vec<RationalV>>> {
        let det = self.determinant();
        if det.is_zero() {
            return Err(Error::SingularGram);
        }
        let adj = self.adjugate();
        adj.to_rows().into_iter().map(|row| row.into_iter().map(|p| RationalV::new(p, det.clone())).collect()).collect()
    }

    /// Rows rendered with the canonical polynomial format.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|p| p.to_string()).collect()).collect()
    }
}

/// Fraction-free row echelon form. Returns the rank, the reduced matrix and the
/// sign of the row permutation used.
fn bareiss(mut m: PolyMatrix) -> (usize, PolyMatrix, i32) {
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = LaurentPoly::one();
    let mut rank = 0;
    let mut sign = 1;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[(r, c)].is_zero()) else {
            continue;
        };
        if p != rank {
            for k in 0..cols {
                m.data.swap(p * cols + k, rank * cols + k);
            }
            sign = -sign;
        }
        let pivot = m[(rank, c)].clone();
        for r in rank + 1..rows {
            let factor = m[(r, c)].clone();
            for k in c + 1..cols {
                let num = &pivot * &m[(r, k)] - &factor * &m[(rank, k)];
                m[(r, k)] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[(r, c)] = LaurentPoly::zero();
        }
        // rows above the pivot keep their entries; only the trailing block matters
        prev = pivot;
        rank += 1;
    }
    // the determinant of a full-rank square matrix sits in the last pivot
    (rank, m, sign)
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;

    fn index(&self, (r, c): (usize, usize)) -> &LaurentPoly {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut LaurentPoly {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.mul_ref(rhs)
    }
}

impl Add<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_strings()).finish()
    }
}

/// JSON: array of rows of canonical polynomial strings.
impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for row in self.to_strings() {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
