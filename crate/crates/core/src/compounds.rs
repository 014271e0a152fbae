//! Compound matrices and their signed complements.
//!
//! Rows and columns of every compound are indexed by `p`-subsets of `[1..n]`
//! in lexicographic order. Each entry is an independent minor; nothing is
//! shared between entries.

use crate::combo::{binomial, combinations, Combo};
use crate::counters::bump_minor;
use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::oracle::{det_bareiss, det_permutation};
use crate::rational::Rational;

/// Beyond this order a minor is evaluated by elimination; below it the
/// permutation sum is cheaper.
const SMALL_MINOR: usize = 4;

/// Determinant of the submatrix on `rowset` x `colset`.
pub fn minor(a: &RMatrix, rowset: &Combo, colset: &Combo) -> Result<Rational> {
    let n = a.order()?;
    if rowset.n() != n || colset.n() != n {
        return Err(Error::Dimension(format!(
            "index sets over 1..={} and 1..={} for a matrix of order {n}",
            rowset.n(),
            colset.n()
        )));
    }
    if rowset.len() != colset.len() {
        return Err(Error::Dimension(format!(
            "{} rows against {} columns",
            rowset.len(),
            colset.len()
        )));
    }
    bump_minor();
    let sub = a.select(rowset.indices(), colset.indices());
    if sub.rows() <= SMALL_MINOR {
        det_permutation(&sub)
    } else {
        det_bareiss(&sub)
    }
}

/// `C(n, p) x C(n, p)` matrix tagged with the order it was built from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompoundMatrix {
    n: usize,
    p: usize,
    body: RMatrix,
}

impl CompoundMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn body(&self) -> &RMatrix {
        &self.body
    }

    pub fn into_body(self) -> RMatrix {
        self.body
    }

    /// Index set labelling row (or column) `r`.
    pub fn label(&self, r: usize) -> Result<Combo> {
        Combo::subset_at(self.n, self.p, r)
    }
}

fn check_order(a: &RMatrix, p: usize) -> Result<usize> {
    let n = a.order()?;
    if p < 1 || p > n {
        return Err(Error::Rank(format!("minor order {p} outside 1..={n}")));
    }
    Ok(n)
}

fn build(
    n: usize,
    p: usize,
    mut entry: impl FnMut(&Combo, &Combo) -> Result<Rational>,
) -> Result<CompoundMatrix> {
    let labels: Vec<Combo> = combinations(n, p).collect();
    let size = labels.len();
    let mut values = Vec::with_capacity(size * size);
    for r in &labels {
        for s in &labels {
            values.push(entry(r, s)?);
        }
    }
    Ok(CompoundMatrix {
        n,
        p,
        body: RMatrix::from_vec(size, size, values)?,
    })
}

/// The `p`-th compound: entry `(R, S)` is the minor on rows `R`, columns `S`.
pub fn compound(a: &RMatrix, p: usize) -> Result<CompoundMatrix> {
    let n = check_order(a, p)?;
    build(n, p, |r, s| minor(a, r, s))
}

/// Entry `(R, S)` is the complementary minor on rows `R̄`, columns `S̄`.
pub fn complementary_compound(a: &RMatrix, p: usize) -> Result<CompoundMatrix> {
    let n = check_order(a, p)?;
    build(n, p, |r, s| minor(a, &r.complement(), &s.complement()))
}

/// Signed complementary compound: entry `(S, R)` is
/// `(-1)^(σ(R)+σ(S)) · M[R̄, S̄]`, so that
/// `compound(a, p) · adjugate_compound(a, p) = det(a) · I`.
pub fn adjugate_compound(a: &RMatrix, p: usize) -> Result<CompoundMatrix> {
    let n = check_order(a, p)?;
    build(n, p, |s, r| {
        let m = minor(a, &r.complement(), &s.complement())?;
        Ok(if r.is_odd() != s.is_odd() { -m } else { m })
    })
}

/// Diagonal of `(-1)^σ(R)` over the lex-ordered `p`-subsets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignDiagonal {
    n: usize,
    p: usize,
    signs: Vec<i8>,
}

impl SignDiagonal {
    pub fn new(n: usize, p: usize) -> Self {
        let signs = combinations(n, p)
            .map(|c| if c.is_odd() { -1 } else { 1 })
            .collect();
        SignDiagonal { n, p, signs }
    }

    /// Strictly alternating `(1, -1, 1, ...)` of the same length.
    pub fn alternating(n: usize, p: usize) -> Self {
        let signs = (0..binomial(n, p))
            .map(|k| if k % 2 == 0 { 1 } else { -1 })
            .collect();
        SignDiagonal { n, p, signs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Same sequence up to one global sign.
    pub fn equivalent(&self, other: &[i8]) -> bool {
        self.signs.len() == other.len()
            && (self.signs == other || self.signs.iter().zip(other).all(|(a, b)| a == &-b))
    }

    pub fn matrix(&self) -> RMatrix {
        RMatrix::diagonal(
            &self
                .signs
                .iter()
                .map(|&s| Rational::from_int(s.into()))
                .collect::<Vec<_>>(),
        )
    }
}

/// Anti-diagonal permutation matrix of order `size`.
pub fn reversal_matrix(size: usize) -> RMatrix {
    RMatrix::from_fn(size, size, |i, j| {
        if i + j == size + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `D · J · m · J · D` for a sign diagonal `D` and the reversal `J`.
pub fn signed_reversal(m: &RMatrix, signs: &RMatrix) -> Result<RMatrix> {
    let j = reversal_matrix(m.order()?);
    signs.mul(&j)?.mul(m)?.mul(&j)?.mul(signs)
}
