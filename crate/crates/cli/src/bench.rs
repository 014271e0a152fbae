//! Determinant benchmark: one CSV row per (strategy, size, trial).

use std::time::Instant;

use compoundlab::counters::measure;
use compoundlab::laplace::determinant;
use compoundlab::random::MatrixSampler;
use compoundlab::{DetStrategy, RMatrix};
use serde::Serialize;

use crate::error::CliError;

pub const PERMUTATION_LIMIT: usize = 8;
pub const COFACTOR_LIMIT: usize = 10;

/// A strategy as named on the command line. Bare tags pick default rows
/// for each size; explicit rows are used as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategySpec {
    Tag(String),
    Fixed(DetStrategy),
}

impl StrategySpec {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        match s {
            "cofactor" | "pair-rows" | "general-rows" | "bareiss" | "permutation" => {
                Ok(StrategySpec::Tag(s.to_string()))
            }
            _ => Ok(StrategySpec::Fixed(s.parse()?)),
        }
    }

    /// The concrete strategy used at order `n`.
    pub fn at(&self, n: usize) -> DetStrategy {
        match self {
            StrategySpec::Fixed(s) => s.clone(),
            StrategySpec::Tag(t) => match t.as_str() {
                "cofactor" => DetStrategy::Cofactor(1),
                // a 1x1 matrix has no row pair; the single row plays its part
                "pair-rows" if n < 2 => DetStrategy::GeneralRows(vec![1]),
                "pair-rows" => DetStrategy::PairRows(1, 2),
                "general-rows" => DetStrategy::GeneralRows((1..=(n / 2).max(1)).collect()),
                "permutation" => DetStrategy::Permutation,
                _ => DetStrategy::Bareiss,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub strategy: String,
    pub n: usize,
    pub trial: usize,
    pub det: String,
    pub scalar_ops: u64,
    pub minor_evals: u64,
    pub wall_time_us: u128,
    pub status: String,
}

/// `4..6` (inclusive) or `4,5,6`.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Parse(format!("bad size list {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let sizes: Vec<usize> = if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
        if lo > hi {
            return Err(bad());
        }
        (lo..=hi).collect()
    } else {
        s.split(',').map(num).collect::<Result<_, _>>()?
    };
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(bad());
    }
    Ok(sizes)
}

/// Splits on `;` or on commas that start a new strategy name, so
/// `pair-rows:1,2,bareiss` reads as two strategies.
pub fn parse_strategies(s: &str) -> Result<Vec<StrategySpec>, CliError> {
    let mut items: Vec<String> = Vec::new();
    for piece in s.split([',', ';']) {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let is_number = piece.chars().all(|c| c.is_ascii_digit());
        match items.last_mut() {
            Some(last) if is_number && last.contains(':') => {
                last.push(',');
                last.push_str(piece);
            }
            _ => items.push(piece.to_string()),
        }
    }
    if items.is_empty() {
        return Err(CliError::Parse("no strategies given".into()));
    }
    items.iter().map(|i| StrategySpec::parse(i)).collect()
}

fn bench_matrix(seed: u64, n: usize, trial: usize) -> RMatrix {
    let mixed = seed
        .wrapping_mul(0x2545_F491_4F6C_DD1D)
        .wrapping_add((n as u64) << 32)
        .wrapping_add(trial as u64);
    MatrixSampler::new(mixed).rational_matrix(n, n)
}

fn over_limit(s: &DetStrategy, n: usize) -> bool {
    match s {
        DetStrategy::Permutation => n > PERMUTATION_LIMIT,
        DetStrategy::Cofactor(_) => n > COFACTOR_LIMIT,
        _ => false,
    }
}

/// Every strategy sees the same matrix for a given `(seed, n, trial)`.
pub fn run_bench(
    sizes: &[usize],
    strategies: &[StrategySpec],
    seed: u64,
    trials: usize,
) -> Vec<BenchRecord> {
    let mut out = Vec::new();
    for &n in sizes {
        for trial in 0..trials {
            let a = bench_matrix(seed, n, trial);
            for spec in strategies {
                let strategy = spec.at(n);
                let mut rec = BenchRecord {
                    strategy: strategy.to_string(),
                    n,
                    trial,
                    det: String::new(),
                    scalar_ops: 0,
                    minor_evals: 0,
                    wall_time_us: 0,
                    status: "skipped".into(),
                };
                if !over_limit(&strategy, n) {
                    let start = Instant::now();
                    let (det, counts) = measure(|| determinant(&a, &strategy));
                    rec.wall_time_us = start.elapsed().as_micros();
                    // rows outside 1..=n make the strategy inapplicable here
                    if let Ok(det) = det {
                        rec.det = det.to_string();
                        rec.scalar_ops = counts.scalar_ops;
                        rec.minor_evals = counts.minor_evals;
                        rec.status = "ok".into();
                    }
                }
                out.push(rec);
            }
        }
    }
    out
}

pub fn to_csv(records: &[BenchRecord]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r).map_err(|e| CliError::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_lists() {
        assert_eq!(parse_sizes("4..6").unwrap(), vec![4, 5, 6]);
        assert_eq!(parse_sizes("4,5, 7").unwrap(), vec![4, 5, 7]);
        assert!(parse_sizes("6..4").is_err());
        assert!(parse_sizes("0").is_err());
        assert!(parse_sizes("x").is_err());
    }

    #[test]
    fn strategy_lists() {
        let s = parse_strategies("pair-rows:1,3,bareiss;cofactor:2").unwrap();
        assert_eq!(
            s,
            vec![
                StrategySpec::Fixed(DetStrategy::PairRows(1, 3)),
                StrategySpec::Tag("bareiss".into()),
                StrategySpec::Fixed(DetStrategy::Cofactor(2)),
            ]
        );
        assert!(parse_strategies("nope").is_err());
    }

    #[test]
    fn single_entry() {
        let specs =
            parse_strategies("cofactor,pair-rows,general-rows,bareiss,permutation").unwrap();
        let recs = run_bench(&[1], &specs, 3, 2);
        for r in &recs {
            assert_eq!(r.status, "ok", "{r:?}");
            assert_eq!(r.scalar_ops, 0, "{r:?}");
            assert_eq!(r.det, bench_matrix(3, 1, r.trial)[(1, 1)].to_string());
        }
    }

    #[test]
    fn limits_and_agreement() {
        let specs = parse_strategies("permutation,bareiss,pair-rows").unwrap();
        let recs = run_bench(&[4, 9], &specs, 1, 1);
        assert_eq!(recs.len(), 6);
        assert_eq!(recs[0].det, recs[1].det);
        assert_eq!(recs[1].det, recs[2].det);
        assert_eq!(recs[3].status, "skipped");
        assert_eq!(recs[4].status, "ok");
        // pair rows at n = 4: six 2x2 minors on each side
        assert_eq!(recs[2].minor_evals, 12);
    }
}
