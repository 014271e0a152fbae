//! Subcommand bodies. Each returns the text for stdout so the binary and the
//! tests share one code path.

use std::path::Path;

use compoundlab::homlab::{diagonal_preimage, PreimageOutcome};
use compoundlab::kernel::extract_kernel;
use compoundlab::laplace::determinant;
use compoundlab::{adjugate_compound, compound, DetStrategy, Rational};

use crate::bench::{parse_sizes, parse_strategies, run_bench, to_csv};
use crate::error::CliError;
use crate::io::{render, MatrixFile};
use crate::verify::{exit_status, parse_suite, render_text, run_suite};

pub fn cmd_det(path: &Path, strategy: &str) -> Result<String, CliError> {
    let strategy: DetStrategy = strategy.parse()?;
    let file = MatrixFile::read(path)?;
    Ok(format!("{}\n", determinant(&file.matrix, &strategy)?))
}

pub fn cmd_compound(path: &Path, p: usize, adjugate: bool) -> Result<String, CliError> {
    let file = MatrixFile::read(path)?;
    let m = if adjugate {
        adjugate_compound(&file.matrix, p)?
    } else {
        compound(&file.matrix, p)?
    };
    Ok(render(m.body(), file.format))
}

pub fn cmd_kernel(path: &Path) -> Result<String, CliError> {
    let file = MatrixFile::read(path)?;
    let k = extract_kernel(&file.matrix)?;
    let mut out = format!("corank {}\nsource {}\n", k.corank, k.source);
    for v in &k.basis {
        let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
        out.push_str(&format!("[{}]\n", cells.join(", ")));
    }
    Ok(out)
}

/// Report text and exit status: 1 iff some undocumented counterexample
/// turned up.
pub fn cmd_verify(
    suite: &str,
    seed: u64,
    trials: usize,
    json: bool,
) -> Result<(String, i32), CliError> {
    let reports = run_suite(parse_suite(suite)?, seed, trials)?;
    let mut out = String::new();
    for r in &reports {
        if json {
            out.push_str(&serde_json::to_string(r).map_err(|e| CliError::Parse(e.to_string()))?);
        } else {
            out.push_str(&render_text(r));
        }
        out.push('\n');
    }
    Ok((out, exit_status(&reports)))
}

pub fn cmd_bench(
    sizes: &str,
    strategies: &str,
    seed: u64,
    trials: usize,
) -> Result<String, CliError> {
    let sizes = parse_sizes(sizes)?;
    let strategies = parse_strategies(strategies)?;
    to_csv(&run_bench(&sizes, &strategies, seed, trials))
}

pub fn cmd_preimage(mu: &[String]) -> Result<String, CliError> {
    let values: Vec<Rational> = mu
        .iter()
        .map(|s| s.parse::<Rational>())
        .collect::<Result<_, _>>()?;
    let mu: [Rational; 6] = values.try_into().map_err(|v: Vec<Rational>| {
        CliError::Parse(format!("expected 6 values, got {}", v.len()))
    })?;
    let pre = diagonal_preimage(&mu)?;
    let mut out = String::new();
    for (eq, ok) in &pre.conditions {
        out.push_str(&format!("{eq}: {}\n", if *ok { "holds" } else { "fails" }));
    }
    out.push_str(&match &pre.outcome {
        PreimageOutcome::Rational(a) => {
            let d: Vec<String> = (1..=4).map(|i| a[(i, i)].to_string()).collect();
            format!("preimage diag({}); m_2 re-verified\n", d.join(", "))
        }
        PreimageOutcome::RealOnly(t) => {
            format!("no rational preimage: a11^2 = {t} is not a square\n")
        }
        PreimageOutcome::ComplexOnly(t) => format!("no real preimage: a11^2 = {t} < 0\n"),
        PreimageOutcome::NoPreimage => format!(
            "no preimage: failed {}\n",
            pre.failed_conditions().join("; ")
        ),
    });
    Ok(out)
}
