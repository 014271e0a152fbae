//! Determinant expansions: single-row cofactor, pair-row and general row-set
//! Laplace expansions, and the classical adjugate.

use std::fmt;
use std::str::FromStr;

use crate::combo::{combinations, Combo};
use crate::compounds::minor;
use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::oracle::{det_bareiss, det_permutation};
use crate::rational::Rational;

/// How to evaluate a determinant. Row indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetStrategy {
    Cofactor(usize),
    PairRows(usize, usize),
    GeneralRows(Vec<usize>),
    Bareiss,
    Permutation,
}

impl DetStrategy {
    /// Short tag without row arguments.
    pub fn tag(&self) -> &'static str {
        match self {
            DetStrategy::Cofactor(_) => "cofactor",
            DetStrategy::PairRows(..) => "pair-rows",
            DetStrategy::GeneralRows(_) => "general-rows",
            DetStrategy::Bareiss => "bareiss",
            DetStrategy::Permutation => "permutation",
        }
    }
}

impl fmt::Display for DetStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetStrategy::Cofactor(i) => write!(f, "cofactor:{i}"),
            DetStrategy::PairRows(i, j) => write!(f, "pair-rows:{i},{j}"),
            DetStrategy::GeneralRows(rows) => {
                let parts: Vec<String> = rows.iter().map(ToString::to_string).collect();
                write!(f, "general-rows:{}", parts.join(","))
            }
            DetStrategy::Bareiss => f.write_str("bareiss"),
            DetStrategy::Permutation => f.write_str("permutation"),
        }
    }
}

impl FromStr for DetStrategy {
    type Err = Error;

    /// `bareiss`, `permutation`, `cofactor:i`, `pair-rows:i,j`,
    /// `general-rows:i,j,...`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown determinant strategy {s:?}"));
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a)),
            None => (s.trim(), None),
        };
        let rows = |a: &str| -> Result<Vec<usize>> {
            a.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        match (name, args) {
            ("bareiss", None) => Ok(DetStrategy::Bareiss),
            ("permutation", None) => Ok(DetStrategy::Permutation),
            ("cofactor", None) => Ok(DetStrategy::Cofactor(1)),
            ("cofactor", Some(a)) => match rows(a)?.as_slice() {
                [i] => Ok(DetStrategy::Cofactor(*i)),
                _ => Err(bad()),
            },
            ("pair-rows", None) => Ok(DetStrategy::PairRows(1, 2)),
            ("pair-rows", Some(a)) => match rows(a)?.as_slice() {
                [i, j] => Ok(DetStrategy::PairRows(*i, *j)),
                _ => Err(bad()),
            },
            ("general-rows", Some(a)) => Ok(DetStrategy::GeneralRows(rows(a)?)),
            _ => Err(bad()),
        }
    }
}

/// Evaluates `det(a)` with the chosen strategy.
pub fn determinant(a: &RMatrix, strategy: &DetStrategy) -> Result<Rational> {
    match strategy {
        DetStrategy::Cofactor(i) => det_cofactor(a, *i),
        DetStrategy::PairRows(i, j) => det_laplace_pair(a, *i, *j),
        DetStrategy::GeneralRows(rows) => {
            let n = a.order()?;
            det_laplace_general(a, &Combo::new(n, rows.clone())?)
        }
        DetStrategy::Bareiss => det_bareiss(a),
        DetStrategy::Permutation => det_permutation(a),
    }
}

/// Cofactor expansion along row `i`, recursing along the first row of each
/// minor down to 1x1.
pub fn det_cofactor(a: &RMatrix, i: usize) -> Result<Rational> {
    let n = a.order()?;
    if i < 1 || i > n {
        return Err(Error::Rank(format!("row {i} outside 1..={n}")));
    }
    Ok(cofactor_expand(a, i))
}

fn cofactor_expand(a: &RMatrix, i: usize) -> Rational {
    let n = a.rows();
    match n {
        0 => return Rational::one(),
        1 => return a.get(1, 1).clone(),
        _ => {}
    }
    let keep_rows: Vec<usize> = (1..=n).filter(|&r| r != i).collect();
    let mut total: Option<Rational> = None;
    for j in 1..=n {
        let entry = a.get(i, j);
        if entry.is_zero() {
            continue;
        }
        let keep_cols: Vec<usize> = (1..=n).filter(|&c| c != j).collect();
        let sub = cofactor_expand(&a.select(&keep_rows, &keep_cols), 1);
        let term = entry * &sub;
        let term = if (i + j) % 2 == 1 { -term } else { term };
        total = Some(match total {
            Some(acc) => acc + term,
            None => term,
        });
    }
    total.unwrap_or_else(Rational::zero)
}

/// Transposed cofactor matrix `ᵗA`, `A = ((-1)^(i+j) M_ij)`, so that
/// `a · adjugate(a) = det(a) · I` whether or not `a` is invertible.
pub fn adjugate(a: &RMatrix) -> Result<RMatrix> {
    let n = a.order()?;
    if n < 2 {
        return Err(Error::Dimension(format!(
            "adjugate needs order at least 2, got {n}"
        )));
    }
    let mut out = RMatrix::zeros(n, n);
    for i in 1..=n {
        let rows = Combo::new(n, (1..=n).filter(|&r| r != i).collect())?;
        for j in 1..=n {
            let cols = Combo::new(n, (1..=n).filter(|&c| c != j).collect())?;
            let m = minor(a, &rows, &cols)?;
            out.set(j, i, if (i + j) % 2 == 1 { -m } else { m });
        }
    }
    Ok(out)
}

/// Laplace expansion along the row pair `(i1, i2)`, `i1 < i2`: the sum over
/// all column pairs of `(-1)^(i1+i2+j1+j2)` times the 2x2 minor and its
/// complementary minor.
pub fn det_laplace_pair(a: &RMatrix, i1: usize, i2: usize) -> Result<Rational> {
    let n = a.order()?;
    if n < 2 || i1 >= i2 || i1 < 1 || i2 > n {
        return Err(Error::Rank(format!(
            "row pair ({i1}, {i2}) is not an increasing pair in 1..={n}"
        )));
    }
    det_laplace_general(a, &Combo::new(n, vec![i1, i2])?)
}

/// Generalized Laplace expansion along the row set `rows`:
/// `Σ_S (-1)^(σ(rows)+σ(S)) · M[rows, S] · M[rows̄, S̄]` over all column
/// sets `S` of the same size, in lex order.
pub fn det_laplace_general(a: &RMatrix, rows: &Combo) -> Result<Rational> {
    laplace_with_sign(a, rows, |r, s| (r.sigma() + s.sigma()) % 2 == 1)
}

/// The same expansion along rows `1..=p` but with the sign
/// `(-1)^(j1+...+jp+p-1)`. This agrees with [`det_laplace_general`] only
/// when `p(p+1)/2` and `p-1` have the same parity; otherwise it returns
/// `-det(a)`.
pub fn det_laplace_literal_sign(a: &RMatrix, p: usize) -> Result<Rational> {
    let n = a.order()?;
    let rows = Combo::leading(n, p)?;
    laplace_with_sign(a, &rows, move |_, s| (s.sigma() + p + 1) % 2 == 1)
}

fn laplace_with_sign(
    a: &RMatrix,
    rows: &Combo,
    negative: impl Fn(&Combo, &Combo) -> bool,
) -> Result<Rational> {
    let n = a.order()?;
    if rows.n() != n {
        return Err(Error::Dimension(format!(
            "row set over 1..={} for a matrix of order {n}",
            rows.n()
        )));
    }
    if rows.is_empty() {
        return Err(Error::Rank("row set must be non-empty".into()));
    }
    if rows.len() == n {
        // one column set and an empty complementary minor: no products needed
        let all = Combo::leading(n, n)?;
        let m = minor(a, rows, &all)?;
        return Ok(if negative(rows, &all) { -m } else { m });
    }
    let complement = rows.complement();
    let mut total = Rational::zero();
    for cols in combinations(n, rows.len()) {
        let head = minor(a, rows, &cols)?;
        let tail = minor(a, &complement, &cols.complement())?;
        let term = &head * &tail;
        if negative(rows, &cols) {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::worked_example;
    use crate::oracle::rank;
    use crate::random::MatrixSampler;

    #[test]
    fn cofactor_examples() {
        for i in 1..=4 {
            assert!(det_cofactor(&RMatrix::identity(4), i).unwrap().is_one());
        }
        assert!(det_cofactor(&worked_example(), 3).unwrap().is_zero());
        assert!(matches!(
            det_cofactor(&worked_example(), 5),
            Err(Error::Rank(_))
        ));
        assert!(matches!(
            det_cofactor(&worked_example(), 0),
            Err(Error::Rank(_))
        ));
        let mut s = MatrixSampler::new(1);
        for _ in 0..20 {
            let a = s.rational_matrix(5, 5);
            assert_eq!(det_cofactor(&a, 2).unwrap(), det_permutation(&a).unwrap());
        }
    }

    #[test]
    fn adjugate_examples() {
        assert!(adjugate(&RMatrix::identity(3)).unwrap().is_identity());
        assert!(adjugate(&worked_example()).unwrap().is_zero());
        let a = RMatrix::from_ints(&[[2, 3], [5, 7]]);
        assert_eq!(
            adjugate(&a).unwrap(),
            RMatrix::from_ints(&[[7, -3], [-5, 2]])
        );
        assert!(matches!(
            adjugate(&RMatrix::identity(1)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn pair_examples() {
        assert!(det_laplace_pair(&worked_example(), 1, 2).unwrap().is_zero());
        assert!(det_laplace_pair(&RMatrix::identity(6), 2, 5)
            .unwrap()
            .is_one());
        for (i, j) in [(2, 1), (1, 1), (0, 2), (3, 5)] {
            assert!(matches!(
                det_laplace_pair(&worked_example(), i, j),
                Err(Error::Rank(_))
            ));
        }
    }

    #[test]
    fn pair_expansion_matches_expanded_sum() {
        // six signed products M12^{j1j2} · M34^{complement}
        let mut s = MatrixSampler::new(2);
        let a = s.rational_matrix(4, 4);
        let c = |v: &[usize]| Combo::new(4, v.to_vec()).unwrap();
        let m = |r: &[usize], k: &[usize]| minor(&a, &c(r), &c(k)).unwrap();
        let expected = m(&[1, 2], &[1, 2]) * m(&[3, 4], &[3, 4])
            - m(&[1, 2], &[1, 3]) * m(&[3, 4], &[2, 4])
            + m(&[1, 2], &[1, 4]) * m(&[3, 4], &[2, 3])
            + m(&[1, 2], &[2, 3]) * m(&[3, 4], &[1, 4])
            - m(&[1, 2], &[2, 4]) * m(&[3, 4], &[1, 3])
            + m(&[1, 2], &[3, 4]) * m(&[3, 4], &[1, 2]);
        assert_eq!(det_laplace_pair(&a, 1, 2).unwrap(), expected);
        assert_eq!(expected, det_permutation(&a).unwrap());
    }

    #[test]
    fn general_examples() {
        let id8 = RMatrix::identity(8);
        let rows = Combo::new(8, vec![1, 2, 3, 4]).unwrap();
        assert!(det_laplace_general(&id8, &rows).unwrap().is_one());
        let mut s = MatrixSampler::new(3);
        let a = s.rational_matrix(6, 6);
        let rows = Combo::new(6, vec![1, 2, 3]).unwrap();
        assert_eq!(
            det_laplace_general(&a, &rows).unwrap(),
            det_bareiss(&a).unwrap()
        );
    }

    #[test]
    fn literal_sign_flips_at_four_rows() {
        let mut s = MatrixSampler::new(4);
        let a = s.invertible(8);
        let det = det_bareiss(&a).unwrap();
        let rows = Combo::leading(8, 4).unwrap();
        assert_eq!(det_laplace_general(&a, &rows).unwrap(), det);
        assert_eq!(det_laplace_literal_sign(&a, 4).unwrap(), -det.clone());
        for p in [1, 2, 3, 5, 6] {
            let lit = det_laplace_literal_sign(&a, p).unwrap();
            let agree = (p * (p + 1) / 2 + p - 1) % 2 == 0;
            assert_eq!(lit == det, agree, "p = {p}");
        }
    }

    #[test]
    fn strategies_agree() {
        let mut s = MatrixSampler::new(5);
        for n in 1..=6 {
            for k in 0..8 {
                let a = if k % 3 == 0 {
                    s.rank_deficient(n, n - 1)
                } else {
                    s.rational_matrix(n, n)
                };
                let det = det_permutation(&a).unwrap();
                let mut strategies = vec![DetStrategy::Bareiss];
                strategies.extend((1..=n).map(DetStrategy::Cofactor));
                for c in combinations(n, 2) {
                    strategies.push(DetStrategy::PairRows(c.indices()[0], c.indices()[1]));
                }
                for p in 1..=n {
                    strategies.extend(
                        combinations(n, p).map(|c| DetStrategy::GeneralRows(c.indices().to_vec())),
                    );
                }
                for st in &strategies {
                    assert_eq!(determinant(&a, st).unwrap(), det, "{st} on {a:?}");
                }
            }
        }
    }

    #[test]
    fn adjugate_laws() {
        let mut s = MatrixSampler::new(6);
        for n in 2..=5 {
            for r in 0..=n {
                let a = if r == n {
                    s.rational_matrix(n, n)
                } else {
                    s.rank_deficient(n, r)
                };
                let det = det_bareiss(&a).unwrap();
                let adj = adjugate(&a).unwrap();
                let scaled = RMatrix::identity(n).scale(&det);
                assert_eq!(a.mul(&adj).unwrap(), scaled);
                assert_eq!(adj.mul(&a).unwrap(), scaled);
                if r + 2 <= n {
                    assert!(adj.is_zero());
                }
                if r + 1 == n {
                    assert_eq!(rank(&adj), 1);
                }
            }
        }
    }

    #[test]
    fn strategy_text() {
        for s in [
            "bareiss",
            "permutation",
            "cofactor:3",
            "pair-rows:1,2",
            "general-rows:1,2,3",
        ] {
            assert_eq!(s.parse::<DetStrategy>().unwrap().to_string(), s);
        }
        assert_eq!(
            "pair-rows".parse::<DetStrategy>().unwrap(),
            DetStrategy::PairRows(1, 2)
        );
        for bad in ["", "lu", "pair-rows:1", "cofactor:x", "bareiss:1"] {
            assert!(bad.parse::<DetStrategy>().is_err(), "{bad}");
        }
        let a = RMatrix::identity(3);
        assert!(determinant(&a, &DetStrategy::GeneralRows(vec![2, 1])).is_err());
    }
}
