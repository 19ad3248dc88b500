//! Square matrices over `Z` and `Z[t, t^-1]` with exact determinants.
//!
//! Two determinant routes are kept: cofactor expansion along the first row,
//! and fraction-free (Bareiss) elimination with row pivoting. Both only ever
//! multiply, add, and divide exactly, so they agree on every input.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ring::IntegralDomain;

/// Largest size at which [`det_laurent`] uses cofactor expansion.
pub const COFACTOR_CUTOFF: usize = 4;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    size: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type LaurentMatrix = Matrix<LaurentPoly>;

impl<T> Matrix<T> {
    /// Builds a matrix from rows, rejecting ragged or non-square input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != size {
                return Err(Error::NotSquare {
                    row,
                    found: r.len(),
                    expected: size,
                });
            }
            entries.extend(r);
        }
        Ok(Matrix { size, entries })
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let entries = (0..size)
            .flat_map(|i| (0..size).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Matrix { size, entries }
    }

    pub fn empty() -> Self {
        Matrix {
            size: 0,
            entries: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> + '_ {
        // chunks(0) panics, so the empty matrix yields no rows explicitly.
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            size: self.size,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.size, |i, j| self.get(j, i).clone())
    }

    /// The square submatrix on the given (sorted) rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), cols.len());
        Matrix::from_fn(rows.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Block-diagonal sum `(self 0; 0 other)`; off-diagonal blocks are `zero`.
    pub fn block_diag(&self, other: &Self, zero: T) -> Self {
        let n = self.size;
        Matrix::from_fn(n + other.size, |i, j| match (i < n, j < n) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - n, j - n).clone(),
            _ => zero.clone(),
        })
    }
}

impl<T: IntegralDomain> Matrix<T> {
    pub fn identity(size: usize) -> Self {
        Matrix::from_fn(size, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Matrix product. Panics on a size mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        Matrix::from_fn(self.size, |i, j| {
            (0..self.size).fold(T::zero(), |acc, k| {
                acc.add(&self.get(i, k).mul(rhs.get(k, j)))
            })
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        Matrix::from_fn(self.size, |i, j| self.get(i, j).add(rhs.get(i, j)))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }
}

/// Determinant by Laplace expansion along the first row. Exponential in the
/// size; used for small matrices and as a cross-check.
pub fn det_cofactor<T: IntegralDomain>(m: &Matrix<T>) -> T {
    let idx: Vec<usize> = (0..m.size).collect();
    cofactor_rec(m, &idx, &idx)
}

fn cofactor_rec<T: IntegralDomain>(m: &Matrix<T>, rows: &[usize], cols: &[usize]) -> T {
    match rows.len() {
        0 => T::one(),
        1 => m.get(rows[0], cols[0]).clone(),
        2 => {
            let ad = m.get(rows[0], cols[0]).mul(m.get(rows[1], cols[1]));
            let bc = m.get(rows[0], cols[1]).mul(m.get(rows[1], cols[0]));
            ad.sub(&bc)
        }
        _ => {
            let mut acc = T::zero();
            for (j, &c) in cols.iter().enumerate() {
                let entry = m.get(rows[0], c);
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry.mul(&cofactor_rec(m, &rows[1..], &rest));
                acc = if j % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact in
/// an integral domain; a non-exact division panics because it means the
/// ring implementation is broken.
pub fn det_bareiss<T: IntegralDomain>(m: &Matrix<T>) -> T {
    let n = m.size;
    if n == 0 {
        return T::one();
    }
    let mut a: Vec<Vec<T>> = m.rows().map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly in an integral domain");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

pub fn det_int(m: &IntMatrix) -> BigInt {
    det_bareiss(m)
}

/// Cofactor expansion up to [`COFACTOR_CUTOFF`], Bareiss elimination above it.
pub fn det_laurent(m: &LaurentMatrix) -> LaurentPoly {
    if m.size() <= COFACTOR_CUTOFF {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// All `k x k` minors, row subsets in lexicographic order on the outside and
/// column subsets in lexicographic order on the inside.
pub fn minors(m: &LaurentMatrix, k: usize) -> Result<Vec<LaurentPoly>> {
    if k == 0 || k > m.size() {
        return Err(Error::MinorOutOfRange { k, size: m.size() });
    }
    let subsets: Vec<Vec<usize>> = (0..m.size()).combinations(k).collect();
    Ok(subsets
        .iter()
        .cartesian_product(subsets.iter())
        .map(|(rows, cols)| det_laurent(&m.submatrix(rows, cols)))
        .collect())
}

/// Formats as rows separated by `;` and entries by `,`, e.g. `1,1;0,-1`.
impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .rows()
            .map(|r| r.iter().map(|x| x.to_string()).join(","))
            .join(";");
        f.write_str(&s)
    }
}

fn parse_grid<T>(s: &str, parse_entry: impl Fn(&str) -> Result<T>) -> Result<Matrix<T>> {
    if s.trim().is_empty() {
        return Ok(Matrix::empty());
    }
    let rows = s
        .split(';')
        .map(|row| row.split(',').map(&parse_entry).collect::<Result<Vec<T>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

impl FromStr for IntMatrix {
    type Err = Error;

    /// Parses `a,b;c,d`. The empty string is the 0x0 matrix.
    fn from_str(s: &str) -> Result<Self> {
        parse_grid(s, |e| {
            e.trim().parse::<BigInt>().map_err(|_| Error::Parse {
                input: s.to_string(),
                pos: 0,
                msg: format!("bad integer entry {:?}", e.trim()),
            })
        })
    }
}

impl FromStr for LaurentMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_grid(s, |e| e.parse::<LaurentPoly>())
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().copied().map(BigInt::from).collect())
                .collect(),
        )
    }

    pub fn to_laurent(&self) -> LaurentMatrix {
        self.map(|x| LaurentPoly::constant(x.clone()))
    }
}
