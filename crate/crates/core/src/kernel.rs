//! Nullspace bases read off cofactor data.
//!
//! Corank 1: any nonzero column of the adjugate spans the kernel.
//! Corank 2 at order 4: columns of the order-2 cofactor matrix built on a
//! row pair span the kernel.

use std::fmt;

use crate::combo::{combinations, Combo};
use crate::compounds::minor;
use crate::error::{Error, Result};
use crate::laplace::adjugate;
use crate::matrix::RMatrix;
use crate::oracle::{clear_denominators, nullspace_oracle, rank, span_rank};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelSource {
    Adjugate,
    Order2Cofactors(usize, usize),
    EliminationFallback,
}

impl fmt::Display for KernelSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelSource::Adjugate => f.write_str("Adjugate"),
            KernelSource::Order2Cofactors(i, j) => write!(f, "Order2Cofactors({i},{j})"),
            KernelSource::EliminationFallback => f.write_str("EliminationFallback"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelResult {
    pub corank: usize,
    /// Column vectors, each annihilated by the input matrix.
    pub basis: Vec<Vec<Rational>>,
    pub source: KernelSource,
}

fn corank_of(a: &RMatrix) -> Result<usize> {
    Ok(a.order()? - rank(a))
}

fn annihilates(a: &RMatrix, v: &[Rational]) -> bool {
    a.mul(&RMatrix::column(v.to_vec()))
        .map(|p| p.is_zero())
        .unwrap_or(false)
}

/// Kernel of a corank-1 matrix from the first nonzero adjugate column.
pub fn kernel_corank1(a: &RMatrix) -> Result<KernelResult> {
    let n = a.order()?;
    let corank = corank_of(a)?;
    if corank != 1 {
        return Err(Error::CorankMismatch {
            expected: 1,
            actual: corank,
        });
    }
    let v = if n == 1 {
        vec![Rational::one()]
    } else {
        let adj = adjugate(a)?;
        let j = (1..=n)
            .find(|&j| adj.col(j).iter().any(|x| !x.is_zero()))
            .expect("adjugate of a corank-1 matrix is nonzero");
        clear_denominators(adj.col(j))
    };
    debug_assert!(annihilates(a, &v));
    Ok(KernelResult {
        corank: 1,
        basis: vec![v],
        source: KernelSource::Adjugate,
    })
}

fn check_order4(a: &RMatrix) -> Result<()> {
    if a.rows() != 4 || a.cols() != 4 {
        return Err(Error::Dimension(format!(
            "order-2 cofactor matrix needs a 4x4 input, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

/// Order-2 minors on rows `(i1, i2)`, keyed by column pair in lex order
/// `12, 13, 14, 23, 24, 34`.
fn row_pair_minors(a: &RMatrix, i1: usize, i2: usize) -> Result<[Rational; 6]> {
    let rows = Combo::new(4, vec![i1, i2])?;
    let mut out: [Rational; 6] = Default::default();
    for (slot, cols) in out.iter_mut().zip(combinations(4, 2)) {
        *slot = minor(a, &rows, &cols)?;
    }
    Ok(out)
}

/// The order-2 cofactor matrix based on rows `(i1, i2)`:
///
/// ```text
/// [  M23   M24   M34    0  ]
/// [ -M13  -M14    0    M34 ]
/// [  M12    0   -M14  -M24 ]
/// [   0    M12   M13   M23 ]
/// ```
///
/// with every `M^{jk}` taken on rows `i1, i2`. When `a` has rank 2,
/// `a · K = 0`.
pub fn cofactor_matrix_order2(a: &RMatrix, i1: usize, i2: usize) -> Result<RMatrix> {
    check_order4(a)?;
    if !(1 <= i1 && i1 < i2 && i2 <= 4) {
        return Err(Error::Rank(format!(
            "row pair ({i1}, {i2}) is not increasing in 1..=4"
        )));
    }
    let [m12, m13, m14, m23, m24, m34] = row_pair_minors(a, i1, i2)?;
    let z = Rational::zero;
    RMatrix::from_rows(vec![
        vec![m23.clone(), m24.clone(), m34.clone(), z()],
        vec![-&m13, -&m14, z(), m34],
        vec![m12.clone(), z(), -&m14, -&m24],
        vec![z(), m12, m13, m23],
    ])
}

/// Columns of the template holding each minor, in the order `12 .. 34`.
const COLUMNS_HOLDING: [(usize, usize); 6] = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)];

/// Kernel of a rank-2 4x4 matrix from its order-2 cofactor matrix.
///
/// The row pair is the first in lex order with a nonzero order-2 minor; the
/// two columns holding the first nonzero minor form the basis.
pub fn kernel_corank2_4x4(a: &RMatrix) -> Result<KernelResult> {
    check_order4(a)?;
    let corank = corank_of(a)?;
    if corank != 2 {
        return Err(Error::CorankMismatch {
            expected: 2,
            actual: corank,
        });
    }
    for pair in combinations(4, 2) {
        let (i1, i2) = (pair.indices()[0], pair.indices()[1]);
        let minors = row_pair_minors(a, i1, i2)?;
        let Some(first) = minors.iter().position(|m| !m.is_zero()) else {
            continue;
        };
        let k = cofactor_matrix_order2(a, i1, i2)?;
        let (c1, c2) = COLUMNS_HOLDING[first];
        let basis = vec![clear_denominators(k.col(c1)), clear_denominators(k.col(c2))];
        if span_rank(4, &basis)? == 2 && basis.iter().all(|v| annihilates(a, v)) {
            return Ok(KernelResult {
                corank: 2,
                basis,
                source: KernelSource::Order2Cofactors(i1, i2),
            });
        }
        break;
    }
    // unreachable for rank 2, kept as a guarded fallback
    debug_assert!(false, "rank-2 matrix without usable order-2 cofactors");
    Ok(elimination(a, corank))
}

fn elimination(a: &RMatrix, corank: usize) -> KernelResult {
    KernelResult {
        corank,
        basis: nullspace_oracle(a).iter().map(|v| v.col(1)).collect(),
        source: KernelSource::EliminationFallback,
    }
}

/// Dispatches on corank: adjugate for corank 1, order-2 cofactors for a
/// corank-2 4x4 matrix, elimination otherwise (including corank 0).
pub fn extract_kernel(a: &RMatrix) -> Result<KernelResult> {
    let n = a.order()?;
    match corank_of(a)? {
        1 => kernel_corank1(a),
        2 if n == 4 => kernel_corank2_4x4(a),
        c => Ok(elimination(a, c)),
    }
}
