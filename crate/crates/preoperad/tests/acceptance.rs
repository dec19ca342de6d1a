//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Everything is exact (zero tolerance). The criteria run serially behind a
//! mutex so the stated wall-clock budgets are meaningful.

mod common;

use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use preoperad::cohomology::CochainComplex;
use preoperad::fixtures;
use preoperad::harness::{
    comp_case, run_axiom_suite, run_gerstenhaber, run_identities, run_identity_suite, MuMode,
    RelationCase, RunConfig,
};
use preoperad::multimap::MultiMap;
use preoperad::ops::OperadContext;
use preoperad::rng::SplitMix64;

static GATE: Mutex<()> = Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

fn fixture_path(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn criterion_1_pre_operad_axioms() {
    let _g = serial();
    let start = Instant::now();
    let cfg = RunConfig {
        samples: 200,
        seed: 0,
        max_arity: 3,
        bound: 3,
    };
    for alg in fixtures::all() {
        let ctx = OperadContext::new(alg.clone());
        let verdicts = run_axiom_suite(&ctx, &cfg).unwrap();
        assert_eq!(verdicts.len(), 5);
        for v in &verdicts {
            assert!(v.pass, "{} fails on fixture {}", v.name, alg.name());
            assert!(v.samples >= 200, "{} ran {} samples", v.name, v.samples);
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "axiom suite took {elapsed:?}, budget is 30 s"
    );
    println!(
        "ACCEPTANCE 1 pre-operad axioms (6 fixtures, 200 samples/case, arities 0-3, exact): \
         PASS in {elapsed:.2?}"
    );
}

#[test]
fn criterion_2_outer_case_equivalence() {
    let _g = serial();
    let cfg = RunConfig {
        samples: 200,
        seed: 0,
        max_arity: 3,
        bound: 3,
    };
    for alg in fixtures::all() {
        let ctx = OperadContext::new(alg.clone());
        let (va, stream_a) = comp_case(&ctx, &cfg, RelationCase::First).unwrap();
        let (vc, stream_c) = comp_case(&ctx, &cfg, RelationCase::Last).unwrap();
        assert!(va.pass && vc.pass, "cases fail on {}", alg.name());
        assert_eq!(
            stream_a,
            stream_c,
            "per-sample verdicts of the outer cases diverge on {}",
            alg.name()
        );
    }
    println!(
        "ACCEPTANCE 2 case-equivalence (outer composition-relation cases agree on identical \
         sample streams, 6 fixtures): PASS"
    );
}

#[test]
fn criterion_3_identity_catalog() {
    let _g = serial();
    let start = Instant::now();
    let cfg = RunConfig {
        samples: 100,
        seed: 0,
        max_arity: 3,
        bound: 3,
    };
    for alg in fixtures::all() {
        let ctx = OperadContext::new(alg.clone());
        let verdicts = run_identity_suite(&ctx, &cfg).unwrap();
        assert_eq!(verdicts.len(), 19);
        for v in &verdicts {
            assert!(v.pass, "{} fails on fixture {}", v.name, alg.name());
        }
    }
    // random (generally non-associative) multiplications must exercise the
    // obstruction identities with a nonzero formal associator
    for (alg, seed) in [(fixtures::dual_numbers(), 0), (fixtures::q_times_q(), 7)] {
        let cfg = RunConfig { seed, ..cfg };
        let report = run_identities(&alg, "inline", &cfg, MuMode::Random).unwrap();
        assert_eq!(report.exit_code(), 0, "random-mu catalog fails");
        assert!(
            report.tables.associator_witness.is_some(),
            "random mu (seed {seed}) failed to produce a nonzero associator"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "identity catalog took {elapsed:?}, budget is 2 min"
    );
    println!(
        "ACCEPTANCE 3 identity catalog (19 checks x 6 fixtures x 100 samples + 2 random-mu \
         runs with nonzero associator, exact): PASS in {elapsed:.2?}"
    );
}

#[test]
fn criterion_4_cohomology_dimensions_vs_oracle() {
    let _g = serial();
    let start = Instant::now();
    let expected: [(preoperad::AlgebraDef, Vec<usize>); 5] = [
        (fixtures::rationals(), vec![1, 0, 0, 0]),
        (fixtures::dual_numbers(), vec![2, 1, 1, 1]),
        (fixtures::q_times_q(), vec![2, 0, 0]),
        (fixtures::m2_rational(), vec![1, 0, 0]),
        (fixtures::upper_triangular(), vec![1, 0, 0]),
    ];
    for (alg, dims) in expected {
        let top = dims.len() - 1;
        let complex = CochainComplex::build(OperadContext::new(alg.clone()), top).unwrap();
        let computed: Vec<usize> = (0..=top)
            .map(|n| complex.cohomology_dim(n).unwrap())
            .collect();
        let oracle = common::oracle_dims(&alg, top);
        assert_eq!(
            computed,
            dims,
            "coboundary-complex dimensions disagree with the frozen table on {}",
            alg.name()
        );
        assert_eq!(
            oracle,
            dims,
            "standard-coboundary oracle disagrees with the frozen table on {}",
            alg.name()
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "cohomology comparison took {elapsed:?}, budget is 2 min"
    );
    println!(
        "ACCEPTANCE 4 cohomology dimensions (operator complex == standard-coboundary oracle \
         == frozen table, degree by degree, 5 fixtures): PASS in {elapsed:.2?}"
    );
}

// Not a numbered criterion: on the endomorphism components the coboundary
// operator agrees with the standard coboundary entry for entry, which is
// why the Betti numbers of criterion 4 must match.
#[test]
fn coboundary_matrix_matches_standard_coboundary() {
    let _g = serial();
    for (alg, top) in [
        (fixtures::dual_numbers(), 3usize),
        (fixtures::m2_rational(), 2),
        (fixtures::upper_triangular(), 2),
    ] {
        let complex = CochainComplex::build(OperadContext::new(alg.clone()), top).unwrap();
        for n in 0..=top {
            let rows = common::standard_coboundary_rows(&alg, n);
            let mat = complex.delta_matrix(n).unwrap();
            for (col, row) in rows.iter().enumerate() {
                for r in 0..mat.rows() {
                    assert_eq!(
                        mat.at(r, col),
                        &row[r],
                        "operator and standard coboundary differ on {} at degree {n}",
                        alg.name()
                    );
                }
            }
        }
    }
}

#[test]
fn criterion_5_gerstenhaber_structure_on_dual_numbers() {
    let _g = serial();
    let report = run_gerstenhaber(&fixtures::dual_numbers(), "inline", 4).unwrap();
    assert_eq!(report.exit_code(), 0);
    let names: Vec<&str> = report.verdicts.iter().map(|v| v.name.as_str()).collect();
    for required in [
        "induced-cup-graded-commutativity",
        "induced-bracket-antisymmetry",
        "induced-cup-associativity",
        "induced-bracket-jacobi",
        "induced-leibniz-rule",
    ] {
        let v = report
            .verdicts
            .iter()
            .find(|v| v.name == required)
            .unwrap_or_else(|| panic!("missing verdict {required} in {names:?}"));
        assert!(v.pass, "{required} fails");
        assert!(v.checks > 0, "{required} checked nothing");
    }
    // all basis-class tuples up to total degree 3 are covered exhaustively:
    // dims are (2,1,1,1), so the ordered class triples with total degree
    // <= 3 number 8 + 12 + 18 + 25 = 63
    let triples = report
        .verdicts
        .iter()
        .find(|v| v.name == "induced-cup-associativity")
        .unwrap()
        .checks;
    assert_eq!(triples, 63);
    println!(
        "ACCEPTANCE 5 Gerstenhaber structure on H (dual numbers, exhaustive basis-class \
         tuples to total degree 3, exact): PASS"
    );
}

#[test]
fn criterion_6_induced_products_well_defined() {
    let _g = serial();
    let complex = CochainComplex::build(OperadContext::new(fixtures::dual_numbers()), 4).unwrap();
    let ctx = complex.ctx().clone();
    let mut rng = SplitMix64::new(2024);
    let mut pairs_checked = 0u64;

    for a in 0..=3usize {
        for b in 0..=3usize.saturating_sub(a) {
            for alpha in complex.cohomology_basis(a).unwrap() {
                for beta in complex.cohomology_basis(b).unwrap() {
                    let cup = complex.induced_cup(&alpha, &beta).unwrap();
                    let bracket = complex.induced_bracket(&alpha, &beta).unwrap();
                    pairs_checked += 1;

                    for _ in 0..5 {
                        // perturb the left representative by a coboundary
                        if a >= 1 {
                            let w = MultiMap::random(a - 1, 2, &mut rng, 3);
                            let dw = ctx.delta(&w).unwrap();
                            let z = alpha.representative.add(&dw).unwrap();
                            let alpha2 = complex.project_to_class(&z).unwrap();
                            assert_eq!(alpha2.coords, alpha.coords);
                            let cup2 = complex.induced_cup(&alpha2, &beta).unwrap();
                            let br2 = complex.induced_bracket(&alpha2, &beta).unwrap();
                            assert_eq!(cup2.coords, cup.coords);
                            assert_eq!(br2.coords, bracket.coords);
                        }
                        // perturb the right representative by a coboundary
                        if b >= 1 {
                            let w = MultiMap::random(b - 1, 2, &mut rng, 3);
                            let dw = ctx.delta(&w).unwrap();
                            let z = beta.representative.add(&dw).unwrap();
                            let beta2 = complex.project_to_class(&z).unwrap();
                            assert_eq!(beta2.coords, beta.coords);
                            let cup2 = complex.induced_cup(&alpha, &beta2).unwrap();
                            let br2 = complex.induced_bracket(&alpha, &beta2).unwrap();
                            assert_eq!(cup2.coords, cup.coords);
                            assert_eq!(br2.coords, bracket.coords);
                        }
                    }
                }
            }
        }
    }
    assert!(pairs_checked > 0);
    println!(
        "ACCEPTANCE 6 well-definedness ({pairs_checked} class pairs, 5 random coboundary \
         perturbations per side, exact coordinate equality): PASS"
    );
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_preoperad"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn strip_timing(json: &str) -> String {
    json.lines()
        .filter(|l| !l.contains("timing_ms"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn criterion_7_cli_contract() {
    let _g = serial();

    // every shipped fixture parses and passes the axiom checks
    for file in [
        "rationals.json",
        "dual_numbers.json",
        "q_times_q.json",
        "m2_rational.json",
        "upper_triangular.json",
        "nonassociative.json",
    ] {
        let (code, _, err) = run_cli(&["axioms", &fixture_path(file), "--samples", "10"]);
        assert_eq!(code, 0, "axioms on {file} exited {code}: {err}");
    }

    // malformed inputs exit 2
    let dir = std::env::temp_dir().join("preoperad-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad_json = dir.join("bad.json");
    std::fs::write(&bad_json, "{ not json").unwrap();
    let bad_index = dir.join("bad_index.json");
    std::fs::write(
        &bad_index,
        r#"{ "name": "x", "dim": 1, "basis": ["e"], "mul": [ { "i": 0, "j": 0, "k": 1, "c": "1" } ] }"#,
    )
    .unwrap();
    let bad_literal = dir.join("bad_literal.json");
    std::fs::write(
        &bad_literal,
        r#"{ "name": "x", "dim": 1, "basis": ["e"], "mul": [ { "i": 0, "j": 0, "k": 0, "c": "1/0" } ] }"#,
    )
    .unwrap();
    for bad in [&bad_json, &bad_index, &bad_literal] {
        let (code, _, _) = run_cli(&["cohomology", bad.to_str().unwrap()]);
        assert_eq!(code, 2, "{bad:?} should exit 2");
    }
    let (code, _, _) = run_cli(&["axioms", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(code, 2, "missing file should exit 2");

    // non-associative input to cohomology: exit 1 with an associator witness
    let (code, stdout, _) = run_cli(&[
        "cohomology",
        &fixture_path("nonassociative.json"),
        "--format",
        "json",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(
        v["tables"]["associator_witness"].is_object(),
        "refusal must carry the witness"
    );

    // identical invocations are byte-identical modulo the timing field
    let args = [
        "identities",
        &fixture_path("dual_numbers.json"),
        "--samples",
        "25",
        "--seed",
        "11",
        "--mu",
        "random",
        "--format",
        "json",
    ];
    let (c1, out1, _) = run_cli(&args);
    let (c2, out2, _) = run_cli(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(strip_timing(&out1), strip_timing(&out2));

    println!(
        "ACCEPTANCE 7 CLI contract (fixtures parse, malformed inputs exit 2, refusal carries \
         witness and exits 1, reports byte-identical modulo timing): PASS"
    );
}
