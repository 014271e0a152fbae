use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use compoundlab::fixtures::{
    worked_example, worked_example_adjugate_compound2, worked_example_compound2,
};
use compoundlab::oracle::{as_vectors, nullspace_oracle, span_equal};
use compoundlab::random::MatrixSampler;
use compoundlab::{RMatrix, Rational};
use compoundlab_cli::io::{parse, render, MatrixFormat};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compoundlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, a: &RMatrix) -> PathBuf {
    let path = dir.path().join(name);
    let format = if name.ends_with(".csv") {
        MatrixFormat::Csv
    } else {
        MatrixFormat::Json
    };
    std::fs::write(&path, render(a, format)).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn det_strategies() {
    let dir = TempDir::new().unwrap();
    let example = write(&dir, "example_a.json", &worked_example());
    let o = run(&["det", "--strategy", "pair-rows:1,2", arg(&example)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0\n");

    let id = write(&dir, "identity4.csv", &RMatrix::identity(4));
    assert_eq!(
        stdout(&run(&["det", "--strategy", "bareiss", arg(&id)])),
        "1\n"
    );

    let a = MatrixSampler::new(6).rational_matrix(6, 6);
    let rand6 = write(&dir, "rand6.json", &a);
    let reference = stdout(&run(&["det", "--strategy", "bareiss", arg(&rand6)]));
    for s in [
        "general-rows:1,2,3",
        "cofactor:4",
        "pair-rows:2,5",
        "permutation",
        "cofactor",
        "pair-rows",
    ] {
        assert_eq!(
            stdout(&run(&["det", "--strategy", s, arg(&rand6)])),
            reference,
            "{s}"
        );
    }
}

#[test]
fn error_exit_codes() {
    let dir = TempDir::new().unwrap();
    let ragged = dir.path().join("ragged.csv");
    std::fs::write(&ragged, "1,2\n3,4,5\n").unwrap();
    assert_eq!(run(&["det", arg(&ragged)]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["det", arg(&missing)]).status.code(), Some(2));

    let rect = dir.path().join("rect.csv");
    std::fs::write(&rect, "1,2,3\n4,5,6\n").unwrap();
    assert_eq!(run(&["det", arg(&rect)]).status.code(), Some(3));
    assert_eq!(run(&["kernel", arg(&rect)]).status.code(), Some(3));

    let id = write(&dir, "id.csv", &RMatrix::identity(3));
    assert_eq!(
        run(&["det", "--strategy", "cofactor:9", arg(&id)])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["det", "--strategy", "sideways", arg(&id)])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["compound", "-p", "4", arg(&id)]).status.code(),
        Some(3)
    );
}

#[test]
fn compounds_keep_input_format() {
    let dir = TempDir::new().unwrap();
    let example = write(&dir, "example_a.json", &worked_example());
    let o = run(&["compound", "-p", "2", arg(&example)]);
    assert!(o.status.success());
    assert_eq!(
        parse(&stdout(&o), MatrixFormat::Json).unwrap(),
        worked_example_compound2()
    );

    let example_csv = write(&dir, "example_a.csv", &worked_example());
    let o = run(&["compound", "-p", "2", "--adjugate", arg(&example_csv)]);
    assert_eq!(
        parse(&stdout(&o), MatrixFormat::Csv).unwrap(),
        worked_example_adjugate_compound2()
    );

    let a = MatrixSampler::new(2).rational_matrix(3, 3);
    for name in ["any.json", "any.csv"] {
        let path = write(&dir, name, &a);
        let echoed = stdout(&run(&["compound", "-p", "1", arg(&path)]));
        assert_eq!(echoed, std::fs::read_to_string(&path).unwrap());
    }
}

fn kernel_vectors(text: &str) -> Vec<Vec<Rational>> {
    text.lines()
        .filter(|l| l.starts_with('['))
        .map(|l| {
            l.trim_matches(|c| c == '[' || c == ']')
                .split(", ")
                .map(|t| t.parse().unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn kernels() {
    let dir = TempDir::new().unwrap();
    let example = write(&dir, "example_a.json", &worked_example());
    let out = stdout(&run(&["kernel", arg(&example)]));
    assert!(
        out.starts_with("corank 2\nsource Order2Cofactors(1,2)\n"),
        "{out}"
    );
    assert_eq!(
        out.lines().skip(2).collect::<Vec<_>>(),
        ["[-2, -1, 1, 0]", "[-1, -1, 0, 1]"]
    );

    let id = write(&dir, "identity4.csv", &RMatrix::identity(4));
    assert_eq!(
        stdout(&run(&["kernel", arg(&id)])),
        "corank 0\nsource EliminationFallback\n"
    );

    let a = MatrixSampler::new(21).rank_deficient(5, 4);
    let path = write(&dir, "rank4_5x5.json", &a);
    let out = stdout(&run(&["kernel", arg(&path)]));
    assert!(out.starts_with("corank 1\nsource Adjugate\n"), "{out}");
    let oracle = as_vectors(&nullspace_oracle(&a));
    assert!(span_equal(5, &kernel_vectors(&out), &oracle).unwrap());

    let b = MatrixSampler::new(22).rank_deficient(5, 3);
    let path = write(&dir, "rank3_5x5.json", &b);
    let out = stdout(&run(&["kernel", arg(&path)]));
    assert!(
        out.starts_with("corank 2\nsource EliminationFallback\n"),
        "{out}"
    );
    let oracle = as_vectors(&nullspace_oracle(&b));
    assert!(span_equal(5, &kernel_vectors(&out), &oracle).unwrap());
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--suite", "paper-examples"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("[Verified]")));

    let o = run(&["verify", "--suite", "injectivity", "--trials", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert!(
        first.starts_with("[CounterexampleFound] injectivity n=4 p=2"),
        "{first}"
    );
    assert!(first.contains("b=[[-1, 0, 0, 0]"), "{first}");

    let o = run(&[
        "verify",
        "--suite",
        "multiplicativity",
        "--trials",
        "0",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "Verified");
        assert_eq!(v["instances_tested"], 0);
    }

    let o = run(&[
        "verify",
        "--suite",
        "sylvester-franke",
        "--trials",
        "2",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let at53 = out
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .find(|v| v["parameters"] == "n=5 p=3")
        .unwrap();
    assert_eq!(at53["status"], "DiscrepancyWithPaper");

    assert_eq!(
        run(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_is_seeded() {
    let a = stdout(&run(&[
        "verify",
        "--suite",
        "laplace-signs",
        "--seed",
        "4",
        "--trials",
        "2",
    ]));
    let b = stdout(&run(&[
        "verify",
        "--suite",
        "laplace-signs",
        "--seed",
        "4",
        "--trials",
        "2",
    ]));
    assert_eq!(a, b);
    assert!(
        a.starts_with("[DiscrepancyWithPaper] laplace-sign n=8 p=4"),
        "{a}"
    );
}

#[test]
fn bench_csv() {
    let o = run(&[
        "bench",
        "--sizes",
        "1",
        "--strategies",
        "cofactor,pair-rows,bareiss",
        "--seed",
        "2",
        "--trials",
        "1",
    ]);
    assert!(o.status.success());
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        [
            "strategy",
            "n",
            "trial",
            "det",
            "scalar_ops",
            "minor_evals",
            "wall_time_us",
            "status"
        ]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    let det = &rows[0][3];
    for r in &rows {
        assert_eq!(&r[3], det);
        assert_eq!(&r[4], "0");
        assert_eq!(&r[7], "ok");
    }

    let o = run(&[
        "bench",
        "--sizes",
        "9,11",
        "--strategies",
        "permutation,cofactor,bareiss",
        "--trials",
        "1",
    ]);
    let text = stdout(&o);
    let status: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(status, ["skipped", "ok", "ok", "skipped", "skipped", "ok"]);
}

#[test]
fn preimage_diag() {
    let o = run(&["preimage-diag", "2", "3", "4", "6", "8", "12"]);
    assert!(stdout(&o).contains("preimage diag(1, 2, 3, 4)"));
    let o = run(&["preimage-diag", "1", "1", "1", "1", "1", "2"]);
    assert!(stdout(&o).contains("no preimage: failed mu1*mu6 = mu2*mu5"));
    let o = run(&["preimage-diag", "-1", "1", "1", "1", "1", "-1"]);
    assert!(stdout(&o).contains("no real preimage"));
    let o = run(&["preimage-diag", "1", "1", "1", "1", "1", "1/2"]);
    assert!(o.status.success());
    assert_eq!(
        run(&["preimage-diag", "1", "x", "1", "1", "1", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["preimage-diag", "0", "1", "1", "1", "1", "1"])
            .status
            .code(),
        Some(3)
    );
}
