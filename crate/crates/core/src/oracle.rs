//! Reference computations every formula in the crate is checked against:
//! the Leibniz permutation sum, Bareiss fraction-free elimination, exact rank
//! and a reduced-echelon nullspace basis.

use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::rational::Rational;

/// Largest order accepted by [`det_permutation`] (8! = 40320 terms).
pub const PERMUTATION_ORACLE_MAX: usize = 8;

/// Determinant as the signed sum over all permutations.
pub fn det_permutation(a: &RMatrix) -> Result<Rational> {
    let n = a.order()?;
    if n > PERMUTATION_ORACLE_MAX {
        return Err(Error::OracleSize {
            n,
            max: PERMUTATION_ORACLE_MAX,
        });
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    // Heap's algorithm; each generated permutation differs from the previous
    // by one transposition, so the sign alternates.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut positive = true;
    let mut total = leibniz_term(a, &perm, positive);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            positive = !positive;
            if let Some(t) = leibniz_term(a, &perm, positive) {
                total = Some(match total {
                    Some(acc) => acc + t,
                    None => t,
                });
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(total.unwrap_or_else(Rational::zero))
}

fn leibniz_term(a: &RMatrix, perm: &[usize], positive: bool) -> Option<Rational> {
    let mut prod: Option<Rational> = None;
    for (i, &p) in perm.iter().enumerate() {
        let v = a.get(i + 1, p + 1);
        if v.is_zero() {
            return None;
        }
        prod = Some(match prod {
            Some(acc) => acc * v,
            None => v.clone(),
        });
    }
    let prod = prod.unwrap_or_else(Rational::one);
    Some(if positive { prod } else { -prod })
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn det_bareiss(a: &RMatrix) -> Result<Rational> {
    let n = a.order()?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut m = a.row_vecs();
    let mut negate = false;
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Rational::zero()),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[k] = Rational::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Exact rank via fraction-free forward elimination.
pub fn rank(a: &RMatrix) -> usize {
    let mut m = a.row_vecs();
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    let mut prev = Rational::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            for j in c + 1..cols {
                let v = &row[j] * &pivot_row[c] - &row[c] * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = Rational::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form and its pivot columns (1-based).
pub fn rref(a: &RMatrix) -> (RMatrix, Vec<usize>) {
    let mut m = a.row_vecs();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("pivot is nonzero");
        for v in m[r].iter_mut().skip(c) {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            let pivot_row = m[r].clone();
            for (x, y) in m[i][c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &f * y;
            }
        }
        pivots.push(c + 1);
        r += 1;
    }
    let reduced = RMatrix::from_rows(m).unwrap_or_else(|_| RMatrix::zeros(rows, cols));
    (reduced, pivots)
}

/// Basis of the right nullspace `{x : a·x = 0}`, one column vector per free
/// variable of the reduced echelon form, scaled to integer entries.
pub fn nullspace_oracle(a: &RMatrix) -> Vec<RMatrix> {
    let (reduced, pivots) = rref(a);
    let n = a.cols();
    let free: Vec<usize> = (1..=n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f - 1] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p - 1] = -reduced.get(row + 1, f);
            }
            RMatrix::column(clear_denominators(v))
        })
        .collect()
}

/// Scales a vector by the lcm of its denominators.
pub fn clear_denominators(v: Vec<Rational>) -> Vec<Rational> {
    let l = Rational::from_bigint(Rational::common_denominator(&v));
    if l.is_one() {
        v
    } else {
        v.iter().map(|x| x * &l).collect()
    }
}

/// Rank of the matrix whose columns are `vectors` (each of length `dim`).
pub fn span_rank(dim: usize, vectors: &[Vec<Rational>]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    Ok(rank(&RMatrix::from_columns(dim, vectors)?))
}

/// True iff both vector lists span the same subspace of `Q^dim`.
pub fn span_equal(dim: usize, u: &[Vec<Rational>], v: &[Vec<Rational>]) -> Result<bool> {
    let ru = span_rank(dim, u)?;
    let rv = span_rank(dim, v)?;
    if ru != rv {
        return Ok(false);
    }
    let both: Vec<Vec<Rational>> = u.iter().chain(v).cloned().collect();
    Ok(span_rank(dim, &both)? == ru)
}

/// Column vectors of a list of `k x 1` matrices.
pub fn as_vectors(cols: &[RMatrix]) -> Vec<Vec<Rational>> {
    cols.iter().map(|c| c.col(1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::worked_example;
    use crate::random::MatrixSampler;

    fn diag(v: &[i64]) -> RMatrix {
        RMatrix::diagonal(&v.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(
            det_permutation(&RMatrix::identity(3)).unwrap(),
            Rational::one()
        );
        assert_eq!(
            det_permutation(&worked_example()).unwrap(),
            Rational::zero()
        );
        assert_eq!(
            det_permutation(&diag(&[1, 2, 3, 4])).unwrap(),
            Rational::from_int(24)
        );
        assert_eq!(
            det_permutation(&RMatrix::from_ints(&[[1, 2], [3, 4]])).unwrap(),
            Rational::from_int(-2)
        );
    }

    #[test]
    fn permutation_errors() {
        assert!(matches!(
            det_permutation(&RMatrix::identity(9)),
            Err(Error::OracleSize { n: 9, max: 8 })
        ));
        assert!(matches!(
            det_permutation(&RMatrix::zeros(2, 3)),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            det_bareiss(&RMatrix::zeros(3, 2)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(det_bareiss(&RMatrix::identity(6)).unwrap(), Rational::one());
        assert_eq!(
            det_bareiss(&diag(&[1, 2, 3, 4, 5, 6, 7, 8, 9])).unwrap(),
            Rational::from_int(362880)
        );
        // needs a row swap
        let a = RMatrix::from_ints(&[[0, 1, 2], [1, 0, 3], [4, -3, 8]]);
        assert_eq!(det_bareiss(&a).unwrap(), det_permutation(&a).unwrap());
    }

    #[test]
    fn bareiss_matches_permutation_oracle() {
        let mut s = MatrixSampler::new(7);
        for k in 0..220 {
            let n = 1 + k % 8;
            let a = if k % 5 == 0 {
                s.rank_deficient(n, n.saturating_sub(1 + k % 3))
            } else {
                s.rational_matrix(n, n)
            };
            assert_eq!(
                det_bareiss(&a).unwrap(),
                det_permutation(&a).unwrap(),
                "{a:?}"
            );
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RMatrix::zeros(4, 4)), 0);
        assert_eq!(rank(&worked_example()), 2);
        assert_eq!(rank(&RMatrix::identity(5)), 5);
        assert_eq!(rank(&RMatrix::from_ints(&[[1, 2, 3], [2, 4, 6]])), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace_oracle(&RMatrix::identity(3)).is_empty());
        let a = worked_example();
        let basis = nullspace_oracle(&a);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(a.mul(v).unwrap().is_zero());
        }
        let d = diag(&[1, 0]);
        let b = nullspace_oracle(&d);
        assert_eq!(
            b,
            vec![RMatrix::column(vec![Rational::zero(), Rational::one()])]
        );
    }

    #[test]
    fn nullspace_is_integer_and_complements_rank() {
        let mut s = MatrixSampler::new(11);
        for k in 0..60 {
            let n = 2 + k % 5;
            let a = s.rank_deficient(n, k % n);
            let basis = nullspace_oracle(&a);
            assert_eq!(rank(&a) + basis.len(), n);
            assert_eq!(span_rank(n, &as_vectors(&basis)).unwrap(), basis.len());
            for v in &basis {
                assert!(v.entries().iter().all(Rational::is_integer));
                assert!(a.mul(v).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn span_equality() {
        let e = |v: &[i64]| v.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>();
        let u = vec![e(&[1, 0, 0]), e(&[0, 1, 0])];
        let v = vec![e(&[1, 1, 0]), e(&[1, -1, 0])];
        let w = vec![e(&[1, 1, 0]), e(&[0, 0, 1])];
        assert!(span_equal(3, &u, &v).unwrap());
        assert!(!span_equal(3, &u, &w).unwrap());
        assert!(!span_equal(3, &u, &v[..1]).unwrap());
        assert!(span_equal(3, &[], &[]).unwrap());
    }
}
