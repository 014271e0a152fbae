//! Dense rational matrices.
//!
//! Storage is 0-based row-major; every public accessor takes 1-based
//! `(row, col)` indices so displayed matrices transcribe without shifting.

use std::fmt;
use std::ops::{Index, Neg};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                values[i - 1].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Builds a matrix from a 1-based entry function.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        RMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Rows of rationals; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::Dimension(format!(
                "row {} has {} entries, expected {c}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(RMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer matrix literal. Panics on ragged input; meant for fixtures.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_fn(rows.len(), C, |i, j| Rational::from_int(rows[i - 1][j - 1]))
    }

    /// Column vector.
    pub fn column(values: Vec<Rational>) -> Self {
        RMatrix {
            rows: values.len(),
            cols: 1,
            entries: values,
        }
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

    /// Order of a square matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) out of range for {}x{}",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.entries[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        let start = (i - 1) * self.cols;
        &self.entries[start..start + self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (1..=self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Column `j` as a vector.
    pub fn col(&self, j: usize) -> Vec<Rational> {
        (1..=self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| v * k).collect(),
        }
    }

    /// Exact product `self · rhs`.
    pub fn mul(&self, rhs: &RMatrix) -> Result<RMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 1..=self.cols {
                let (x, y) = (self.get(i, k), rhs.get(k, j));
                if !x.is_zero() && !y.is_zero() {
                    acc += x * y;
                }
            }
            acc
        }))
    }

    pub fn add(&self, rhs: &RMatrix) -> Result<RMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Submatrix keeping the listed 1-based rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i - 1], cols[j - 1]).clone()
        })
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &RMatrix) -> RMatrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(r, c, |i, j| {
            if i <= self.rows && j <= self.cols {
                self.get(i, j).clone()
            } else if i > self.rows && j > self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &RMatrix) -> Result<RMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot stack {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j <= self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Matrix whose columns are `vectors`, each of length `rows`.
    pub fn from_columns(rows: usize, vectors: &[Vec<Rational>]) -> Result<RMatrix> {
        if let Some(v) = vectors.iter().find(|v| v.len() != rows) {
            return Err(Error::Dimension(format!(
                "vector of length {} in a {rows}-row matrix",
                v.len()
            )));
        }
        Ok(Self::from_fn(rows, vectors.len(), |i, j| {
            vectors[j - 1][i - 1].clone()
        }))
    }
}

impl Index<(usize, usize)> for RMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        self.get(i, j)
    }
}

impl Neg for &RMatrix {
    type Output = RMatrix;
    fn neg(self) -> RMatrix {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_vecs()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    m: usize,
    entries: Vec<Vec<Rational>>,
}

/// JSON shape `{"n": rows, "m": cols, "entries": [["p/q", ...], ...]}`.
impl Serialize for RMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            n: self.rows,
            m: self.cols,
            entries: self.row_vecs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.len() != repr.n || repr.entries.iter().any(|r| r.len() != repr.m) {
            return Err(D::Error::custom(format!(
                "entries do not form a {}x{} matrix",
                repr.n, repr.m
            )));
        }
        RMatrix::from_rows(repr.entries)
            .map(|mut a| {
                // from_rows infers 0 columns from an empty row list
                a.cols = repr.m;
                a
            })
            .map_err(D::Error::custom)
    }
}
