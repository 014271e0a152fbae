//! Named verification suites over the property checks.
//!
//! Every suite is deterministic in `(seed, trials)` and returns one merged
//! report per `(property, parameters)`, sorted by property then by the
//! order the parameters were visited.

use std::str::FromStr;

#[cfg(test)]
use compoundlab::homlab::Status;
use compoundlab::homlab::{self, Property, PropertyReport};
use compoundlab::random::MatrixSampler;
use compoundlab::{RMatrix, Result};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Multiplicativity,
    SylvesterFranke,
    DoubleCompound,
    GroupPreservation,
    So4Involution,
    Injectivity,
    LaplaceSigns,
    CompoundSigns,
    WorkedExamples,
    All,
}

pub const SUITE_NAMES: [&str; 10] = [
    "multiplicativity",
    "sylvester-franke",
    "double-compound",
    "group-preservation",
    "so4-involution",
    "injectivity",
    "laplace-signs",
    "compound-signs",
    "paper-examples",
    "all",
];

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> std::result::Result<Self, CliError> {
        Ok(match s {
            "multiplicativity" => Suite::Multiplicativity,
            "sylvester-franke" => Suite::SylvesterFranke,
            "double-compound" => Suite::DoubleCompound,
            "group-preservation" => Suite::GroupPreservation,
            "so4-involution" => Suite::So4Involution,
            "injectivity" => Suite::Injectivity,
            "laplace-signs" => Suite::LaplaceSigns,
            "compound-signs" => Suite::CompoundSigns,
            "paper-examples" => Suite::WorkedExamples,
            "all" => Suite::All,
            other => return Err(CliError::UnknownSuite(other.to_string())),
        })
    }
}

/// Seed for one `(suite, n, p)` cell so cells do not share random streams.
fn cell_seed(seed: u64, tag: u64, n: usize, p: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(tag << 16)
        .wrapping_add((n as u64) << 8)
        .wrapping_add(p as u64)
}

/// Folds per-instance reports into one report.
fn merged(
    property: Property,
    parameters: String,
    claim: &str,
    reports: impl IntoIterator<Item = Result<PropertyReport>>,
) -> Result<PropertyReport> {
    let mut agg = PropertyReport::vacuous(property, parameters, claim);
    for r in reports {
        agg.absorb(r?);
    }
    Ok(agg)
}

pub fn run_suite(suite: Suite, seed: u64, trials: usize) -> Result<Vec<PropertyReport>> {
    match suite {
        Suite::Multiplicativity => multiplicativity(seed, trials),
        Suite::SylvesterFranke => sylvester_franke(seed, trials),
        Suite::DoubleCompound => double_compound(seed, trials),
        Suite::GroupPreservation => group_preservation(seed, trials),
        Suite::So4Involution => so4_involution(seed, trials),
        Suite::Injectivity => injectivity(seed, trials),
        Suite::LaplaceSigns => laplace_signs(seed, trials),
        Suite::CompoundSigns => compound_signs(seed, trials),
        Suite::WorkedExamples => homlab::worked_examples(),
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::WorkedExamples,
                Suite::Multiplicativity,
                Suite::SylvesterFranke,
                Suite::DoubleCompound,
                Suite::GroupPreservation,
                Suite::So4Involution,
                Suite::Injectivity,
                Suite::LaplaceSigns,
                Suite::CompoundSigns,
            ] {
                out.extend(run_suite(s, seed, trials)?);
            }
            Ok(out)
        }
    }
}

fn multiplicativity(seed: u64, trials: usize) -> Result<Vec<PropertyReport>> {
    let mut out = Vec::new();
    for n in 2..=5 {
        for p in 1..=n {
            let mut s = MatrixSampler::new(cell_seed(seed, 1, n, p));
            out.push(merged(
                Property::Multiplicativity,
                format!("n={n} p={p}"),
                "m_p(ab) = m_p(a) m_p(b)",
                (0..trials).map(|_| {
                    let (a, b) = (s.rational_matrix(n, n), s.rational_matrix(n, n));
                    homlab::check_multiplicativity(&a, &b, p)
                }),
            )?);
        }
    }
    Ok(out)
}

fn sylvester_franke(seed: u64, trials: usize) -> Result<Vec<PropertyReport>> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for p in 1..=n {
            let mut s = MatrixSampler::new(cell_seed(seed, 2, n, p));
            let claim = homlab::stated_exponent(n, p).1;
            out.push(merged(
                Property::SylvesterFranke,
                format!("n={n} p={p}"),
                &claim,
                (0..trials).map(|_| homlab::check_sylvester_franke(&s.invertible(n), p)),
            )?);
        }
    }
    Ok(out)
}

fn double_compound(seed: u64, trials: usize) -> Result<Vec<PropertyReport>> {
    let mut out = Vec::new();
    for n in 3..=5 {
        let mut s = MatrixSampler::new(cell_seed(seed, 3, n, 0));
        let claim = "derivation: det(a)^(n-2) a; proposition: det(a)^(n-1) a";
        out.push(merged(
            Property::DoubleCompound,
            format!("n={n} GL"),
            claim,
            (0..trials).map(|_| homlab::check_double_compound(&s.invertible(n))),
        )?);
        // det = 1 makes both exponents agree, so anything but Verified is a defect
        out.push(merged(
            Property::DoubleCompound,
            format!("n={n} SL"),
            "phi_(n-1) o phi_(n-1) = Id on SL(n)",
            (0..trials).map(|_| homlab::check_double_compound(&s.special_linear(n))),
        )?);
        out.push(merged(
            Property::DoubleCompoundSingular,
            format!("n={n}"),
            "none (identity derived for invertible a only)",
            (0..trials).map(|k| {
                let r = k % n;
                homlab::probe_double_compound_singular(&s.rank_deficient(n, r))
            }),
        )?);
    }
    Ok(out)
}

fn group_preservation(seed: u64, trials: usize) -> Result<Vec<PropertyReport>> {
    let mut out = Vec::new();
    for n in 2..=5 {
        for p in 1..=n {
            let mut s = MatrixSampler::new(cell_seed(seed, 4, n, p));
            out.push(merged(
                Property::GroupPreservation,
                format!("n={n} p={p}"),
                "a in SL => m_p(a) in SL; a in SO => m_p(a) in SO",
                (0..trials).flat_map(|_| {
                    let sl = s.special_linear(n);
                    let so = s.special_orthogonal(n);
                    [
                        homlab::check_group_preservation(&sl, p),
                        homlab::check_group_preservation(&so, p),
                    ]
                }),
            )?);
        }
    }
    Ok(out)
}

/// `trials` points of SO(4): a few fixed ones first, then sampled ones.
pub fn so4_samples(seed: u64, trials: usize) -> Vec<RMatrix> {
    use compoundlab::random::givens;
    use compoundlab::Rational;
    let r = |c, s, h| {
        givens(
            2,
            1,
            2,
            Rational::new(c, h).unwrap(),
            Rational::new(s, h).unwrap(),
        )
    };
    let mut out = vec![
        RMatrix::identity(4),
        r(3, 4, 5).direct_sum(&r(5, 12, 13)),
        RMatrix::from_ints(&[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    ];
    let mut s = MatrixSampler::new(cell_seed(seed, 5, 4, 3));
    out.extend((0..trials).map(|_| s.special_orthogonal(4)));
    out.truncate(trials);
    out
}

fn so4_involution(seed: u64, trials: usize) -> Result<Vec<PropertyReport>> {
    Ok(vec![merged(
        Property::So4Involution,
        "n=4".into(),
        "m_3(m_3(a)) = a on SO(4)",
        so4_samples(seed, trials)
            .iter()
            .map(homlab::check_so4_involution),
    )?])
}

fn injectivity(seed: u64, trials: usize) -> Result<Vec<PropertyReport>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for p in 1..=n {
            out.push(homlab::probe_injectivity(
                p,
                n,
                trials,
                cell_seed(seed, 6, n, p),
            )?);
        }
    }
    // (4, 2) first: it is the headline counterexample
    out.sort_by_key(|r| r.parameters != "n=4 p=2");
    Ok(out)
}

fn laplace_signs(seed: u64, trials: usize) -> Result<Vec<PropertyReport>> {
    let mut out = Vec::new();
    let mut s8 = MatrixSampler::new(cell_seed(seed, 7, 8, 4));
    out.push(homlab::check_laplace_sign(&s8.invertible(8), 4)?);
    for n in 2..=6 {
        for p in 1..=n {
            let mut s = MatrixSampler::new(cell_seed(seed, 7, n, p));
            out.push(merged(
                Property::LaplaceSign,
                format!("n={n} p={p}"),
                "det(a) = sum (-1)^(j1+...+jp+p-1) M[1..p, J] M[complement]",
                (0..trials).map(|_| homlab::check_laplace_sign(&s.invertible(n), p)),
            )?);
        }
    }
    Ok(out)
}

fn compound_signs(seed: u64, trials: usize) -> Result<Vec<PropertyReport>> {
    let mut out = Vec::new();
    for n in 2..=5 {
        for p in 1..=n {
            let mut s = MatrixSampler::new(cell_seed(seed, 8, n, p));
            out.push(merged(
                Property::CompoundSigns,
                format!("n={n} p={p}"),
                "m~_p = Diag(1,-1,1,...) complement Diag(1,-1,1,...)",
                (0..trials).map(|_| homlab::check_compound_signs(&s.invertible(n), p)),
            )?);
        }
    }
    Ok(out)
}

pub fn render_text(r: &PropertyReport) -> String {
    let mut line = format!(
        "[{}] {} {} instances={}",
        r.status, r.property, r.parameters, r.instances_tested
    );
    if r.documented {
        line.push_str(" (documented)");
    }
    line.push_str(&format!(
        " | claim: {} | computed: {}",
        r.paper_claim, r.computed_claim
    ));
    if let Some(w) = &r.witness {
        let parts: Vec<String> = w
            .matrices
            .iter()
            .map(|m| format!("{}={:?}", m.name, m.matrix))
            .collect();
        line.push_str(&format!(" | witness: {}", parts.join(" ")));
        if let Some(p) = w.p {
            line.push_str(&format!(" p={p}"));
        }
    }
    line
}

/// Exit status for a finished suite: 1 if any report is an undocumented
/// counterexample, else 0.
pub fn exit_status(reports: &[PropertyReport]) -> i32 {
    i32::from(reports.iter().any(PropertyReport::is_failure))
}

pub fn parse_suite(name: &str) -> std::result::Result<Suite, CliError> {
    name.parse()
}
