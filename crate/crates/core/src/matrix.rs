//! Dense exact matrices over `Q(i)` and the row-reduction machinery shared by
//! the graded-basis selection, the stabilizer solve and the span tests.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense row-major matrix of [`Scalar`]s.
///
/// Square matrices play the role of elements of `M_n`; rectangular ones are
/// used for linear systems.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// The elementary matrix `E_ab` with a single one at `(a, b)`.
    pub fn elementary(n: usize, a: usize, b: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(a, b)] = Scalar::one();
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::SizeMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(ScalarMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer convenience constructor, mostly for fixtures and tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    /// Reshapes a row-major vector of length `n*n` into an `n × n` matrix.
    pub fn from_row_major(n: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(ScalarMatrix {
            rows: n,
            cols: n,
            data: entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major flattening `(m11, m12, …, m1n, m21, …)`.
    pub fn as_row_major(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Exact determinant by Gaussian elimination over the field.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::SizeMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &inv;
                let (top, bottom) = a.split_at_mut(r);
                sub_scaled(&mut bottom[0], &top[col], &f);
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::SizeMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut aug, n);
        if pivots.len() < n {
            return Err(Error::SingularMatrix);
        }
        Self::from_rows(aug.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        rref_in_place(&mut a, self.cols).len()
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.to_rows();
        let pivots = rref_in_place(&mut a, self.cols);
        let m = if a.is_empty() {
            Self::zeros(0, self.cols)
        } else {
            Self::from_rows(a).expect("rectangular")
        };
        (m, pivots)
    }

    /// Basis of the right nullspace in canonical form: one vector per free
    /// column, with that free entry equal to one and the other free entries
    /// zero, ordered by free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut a = self.to_rows();
        let pivots = rref_in_place(&mut a, self.cols);
        nullspace_from_rref(&a, &pivots, self.cols)
    }

    /// Multiplies by a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// `row -= f * other`
fn sub_scaled(row: &mut [Scalar], other: &[Scalar], f: &Scalar) {
    for (x, y) in row.iter_mut().zip(other) {
        if !y.is_zero() {
            *x -= &(f * y);
        }
    }
}

/// Gauss-Jordan elimination restricted to the first `ncols` columns.
/// Leaves the nonzero rows first, each with a unit pivot; returns pivots.
pub(crate) fn rref_in_place(a: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][col].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                sub_scaled(row, &pivot_row, &f);
            }
        }
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    pivots
}

pub(crate) fn nullspace_from_rref(
    rref: &[Vec<Scalar>],
    pivots: &[usize],
    ncols: usize,
) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); ncols];
            v[free] = Scalar::one();
            for (row, &p) in rref.iter().zip(pivots) {
                if !row[free].is_zero() {
                    v[p] = -&row[free];
                }
            }
            v
        })
        .collect()
}

/// An incrementally built echelon basis of a subspace of `Q(i)^dim`.
///
/// Stored rows have a unit entry at their pivot and zeros at the pivots of
/// every earlier row, so [`EchelonBasis::reduce`] is a linear projection whose
/// output vanishes exactly on the span.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Residual of `v` modulo the span; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                sub_scaled(&mut v, row, &f);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` if it is independent of the current span; reports whether it
    /// was added.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        self.rows.push((p, r));
        true
    }
}

impl std::ops::Index<(usize, usize)> for ScalarMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ScalarMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ScalarMatrix {
    type Output = ScalarMatrix;
    fn mul(self, rhs: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = ScalarMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &ScalarMatrix {
    type Output = ScalarMatrix;
    fn add(self, rhs: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ScalarMatrix {
    type Output = ScalarMatrix;
    fn sub(self, rhs: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_inverse() {
        let m = ScalarMatrix::from_i64_rows(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), Scalar::one());
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, ScalarMatrix::identity(2));
        let s = ScalarMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.determinant().unwrap(), Scalar::zero());
        assert_eq!(s.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn complex_inverse() {
        let i = Scalar::i();
        let m = ScalarMatrix::from_rows(vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::from_int(-1), Scalar::one()],
            vec![Scalar::zero(), i.clone(), i],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(&inv * &m, ScalarMatrix::identity(3));
    }

    #[test]
    fn nullspace_canonical() {
        // x + 2y - z = 0
        let m = ScalarMatrix::from_i64_rows(&[&[1, 2, -1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        assert_eq!(ns[0], vec![Scalar::from_int(-2), Scalar::one(), Scalar::zero()]);
        assert_eq!(ns[1], vec![Scalar::one(), Scalar::zero(), Scalar::one()]);
        for v in &ns {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn echelon_basis_membership() {
        let mut e = EchelonBasis::new(3);
        let a: Vec<Scalar> = [1, 1, 0].iter().map(|&x| Scalar::from_int(x)).collect();
        let b: Vec<Scalar> = [0, 1, 1].iter().map(|&x| Scalar::from_int(x)).collect();
        let c: Vec<Scalar> = [1, 2, 1].iter().map(|&x| Scalar::from_int(x)).collect();
        assert!(e.insert(&a));
        assert!(e.insert(&b));
        assert!(!e.insert(&c));
        assert!(e.contains(&c));
        assert_eq!(e.rank(), 2);
        let d: Vec<Scalar> = [0, 0, 1].iter().map(|&x| Scalar::from_int(x)).collect();
        assert!(!e.contains(&d));
    }

    #[test]
    fn rank_of_wide_matrix() {
        let m = ScalarMatrix::from_i64_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }
}
