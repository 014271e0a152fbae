//! Index combinations in lexicographic order.

use std::fmt;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A strictly increasing subset of `[1..n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combo {
    n: usize,
    indices: Vec<usize>,
}

impl Combo {
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        let in_range = indices.iter().all(|&i| (1..=n).contains(&i));
        if !increasing || !in_range {
            return Err(Error::Rank(format!(
                "{indices:?} is not a strictly increasing subset of 1..={n}"
            )));
        }
        Ok(Combo { n, indices })
    }

    /// First `p` indices `(1, ..., p)`.
    pub fn leading(n: usize, p: usize) -> Result<Self> {
        Combo::new(n, (1..=p).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Sorted complement in `[1..n]`.
    pub fn complement(&self) -> Combo {
        let indices = (1..=self.n).filter(|i| !self.indices.contains(i)).collect();
        Combo { n: self.n, indices }
    }

    /// Sum of the indices.
    pub fn sigma(&self) -> usize {
        self.indices.iter().sum()
    }

    /// True when `(-1)^sigma` is negative.
    pub fn is_odd(&self) -> bool {
        self.sigma() % 2 == 1
    }

    /// 1-based position among all `p`-subsets of `[1..n]` in lex order.
    pub fn lex_rank(&self) -> usize {
        let p = self.len();
        let mut rank = 0;
        let mut prev = 0;
        for (k, &c) in self.indices.iter().enumerate() {
            // subsets agreeing on the first k entries whose next entry is smaller
            for v in prev + 1..c {
                rank += binomial(self.n - v, p - k - 1);
            }
            prev = c;
        }
        rank + 1
    }

    /// Inverse of [`Combo::lex_rank`].
    pub fn subset_at(n: usize, p: usize, rank: usize) -> Result<Combo> {
        let total = binomial(n, p);
        if rank < 1 || rank > total {
            return Err(Error::Rank(format!(
                "rank {rank} outside 1..={total} for {p}-subsets of 1..={n}"
            )));
        }
        let mut remaining = rank - 1;
        let mut indices = Vec::with_capacity(p);
        let mut v = 1;
        for k in 0..p {
            loop {
                let block = binomial(n - v, p - k - 1);
                if remaining < block {
                    break;
                }
                remaining -= block;
                v += 1;
            }
            indices.push(v);
            v += 1;
        }
        Ok(Combo { n, indices })
    }
}

impl fmt::Display for Combo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Combo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

/// All `p`-subsets of `[1..n]` in lex order.
pub fn combinations(n: usize, p: usize) -> Combinations {
    Combinations {
        n,
        next: if p <= n {
            Some((1..=p).collect())
        } else {
            None
        },
    }
}

pub struct Combinations {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Combo;

    fn next(&mut self) -> Option<Combo> {
        let current = self.next.take()?;
        let p = current.len();
        let mut succ = current.clone();
        // rightmost position that can still grow
        let mut k = p;
        while k > 0 && succ[k - 1] == self.n - (p - k) {
            k -= 1;
        }
        if k > 0 {
            succ[k - 1] += 1;
            for t in k..p {
                succ[t] = succ[t - 1] + 1;
            }
            self.next = Some(succ);
        }
        Some(Combo {
            n: self.n,
            indices: current,
        })
    }
}
