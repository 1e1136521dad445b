//! Acceptance criteria 1 to 12, one PASS/FAIL line each.
//!
//! Runs as a plain binary (`harness = false`) so every criterion is attempted
//! and reported even when an earlier one fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::One;
use scatalan::bisnomial::{self, absorption_check, bisnomial_row, expand_by_multiplication};
use scatalan::catalan::{self, s_catalan, TriangleRow};
use scatalan::paths::{self, parse_path, Constraint, Enumerator, RuleConfig, Validity};
use scatalan::positivity::{
    catalan_log_convexity, check_lemma41, injection_counting_check, row_log_concavity,
};
use scatalan::Natural;
use scatalan_cli::bfile::parse_bfile;
use scatalan_cli::export::parse_csv;
use scatalan_cli::verify::{self, oeis_check, Bounds, Suite};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn fixture(name: &str) -> String {
    let path = format!("{}/../cli/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn compare_rows(what: &str, expected: &[Vec<Natural>], got: &[Vec<Natural>]) -> Result<(), String> {
    if expected.len() != got.len() {
        return Err(format!(
            "{what}: {} rows, expected {}",
            got.len(),
            expected.len()
        ));
    }
    for (n, (e, g)) in expected.iter().zip(got).enumerate() {
        if e.len() != g.len() {
            return Err(format!(
                "{what}: row {n} has {} entries, expected {}",
                g.len(),
                e.len()
            ));
        }
        if let Some(k) = (0..e.len()).find(|&k| e[k] != g[k]) {
            return Err(format!("{what}: ({n},{k}) is {}, table has {}", g[k], e[k]));
        }
    }
    Ok(())
}

fn golden_table_1() -> Outcome {
    let table = parse_csv(&fixture("table1.csv")).map_err(|e| e.to_string())?;
    let rows: Vec<_> = bisnomial::rows(3)
        .unwrap()
        .take(5)
        .map(bisnomial::SPascalRow::into_coeffs)
        .collect();
    compare_rows("recurrence", &table, &rows)?;
    Ok("rows 0..=4, 35 entries".into())
}

fn golden_table_2() -> Outcome {
    let table = parse_csv(&fixture("table2.csv")).map_err(|e| e.to_string())?;
    let direct: Vec<_> = catalan::triangle_rows(3)
        .unwrap()
        .take(5)
        .map(TriangleRow::into_entries)
        .collect();
    let rec: Vec<_> = catalan::triangle_rows_recurrence()
        .take(5)
        .map(TriangleRow::into_entries)
        .collect();
    let errors: Vec<String> = [
        compare_rows("differences", &table, &direct),
        compare_rows("recurrence", &table, &rec),
    ]
    .into_iter()
    .filter_map(Result::err)
    .collect();
    if errors.is_empty() {
        Ok("rows 0..=4, both constructions".into())
    } else {
        Err(errors.join("; "))
    }
}

fn dual_construction() -> Outcome {
    let pairs = catalan::triangle_rows(3)
        .unwrap()
        .zip(catalan::triangle_rows_recurrence())
        .take(31);
    for (d, r) in pairs {
        if d != r {
            return Err(format!("row {} differs", d.n()));
        }
    }
    Ok("n <= 30".into())
}

fn identity_suite() -> Outcome {
    for s in 1..=4u32 {
        for n in 0..=20u32 {
            let row = bisnomial_row(s, n).unwrap();
            let c = row.coeffs();
            let d = c.len() - 1;
            if (0..=d).any(|k| c[k] != c[d - k]) {
                return Err(format!("symmetry fails at s={s}, n={n}"));
            }
            if c != expand_by_multiplication(s, n).unwrap().as_slice() {
                return Err(format!("recurrence differs from expansion at s={s}, n={n}"));
            }
            if c.iter().sum::<Natural>() != Natural::from(s + 1).pow(n) {
                return Err(format!("row sum fails at s={s}, n={n}"));
            }
            if n >= 1 {
                for k in 0..=i64::from(s * n) {
                    let (l, r) = absorption_check(s, n, k).unwrap();
                    if l != r {
                        return Err(format!(
                            "absorption fails at s={s}, n={n}, k={k}: {l} vs {r}"
                        ));
                    }
                }
            }
        }
    }
    Ok("symmetry, recurrence, absorption, row sum; s <= 4, n <= 20".into())
}

fn path_oracle() -> Outcome {
    let counts = paths::count_rows(7);
    for (n, row) in counts.iter().enumerate() {
        let tri = catalan::triangle_row_direct(n as u32);
        for (k, c) in row.iter().enumerate().take(3 * n + 1) {
            if *c != tri.get(k as i64) {
                return Err(format!("c({n},{k}) = {c}, triangle {}", tri.get(k as i64)));
            }
        }
    }
    let dfs = Enumerator::default();
    for n in 0..=5u32 {
        for k in 0..=3 * i64::from(n) {
            let listed = dfs.count(n, k).map_err(|e| e.to_string())?;
            if Natural::from(listed) != counts[n as usize][k as usize] {
                return Err(format!("enumeration gives {listed} at ({n},{k})"));
            }
        }
    }
    Ok("DP n <= 7; enumeration n <= 5".into())
}

fn rule_calibration() -> Outcome {
    let report = paths::calibration_report(4).map_err(|e| e.to_string())?;
    let survivors = report.iter().filter(|o| o.matches()).count();
    if survivors != 1 {
        return Err(format!("{survivors} readings survive"));
    }
    let rules = paths::calibrate_rules(4).map_err(|e| e.to_string())?;
    let ground = parse_path("NE1 SE1 NE2").unwrap();
    match paths::is_valid(&ground, &rules) {
        Validity::Invalid {
            constraint: Constraint::GroundSteepAscent,
            ..
        } => {}
        other => return Err(format!("NE2 from y = 0 is not excluded: {other:?}")),
    }
    let c20 = paths::count_paths_with(&rules, 2, 0);
    if c20 != Natural::from(4u32) {
        return Err(format!("c(2,0) = {c20}"));
    }
    if rules != RuleConfig::CANONICAL {
        return Err(format!("survivor {rules} is not the frozen configuration"));
    }
    Ok(format!("1 of {} readings; {rules}", report.len()))
}

fn log_convexity() -> Outcome {
    let convex = catalan_log_convexity(3, 200).map_err(|e| e.to_string())?;
    if !convex.passed() {
        return Err(format!(
            "violation at {:?}: {:?}",
            convex.first_violation, convex.witness
        ));
    }
    let injection = injection_counting_check(7).map_err(|e| e.to_string())?;
    if !injection.passed() {
        return Err(format!(
            "injection fails at {:?}",
            injection.first_violation
        ));
    }
    Ok("n <= 200; injection n <= 7".into())
}

fn row_concavity() -> Outcome {
    let report = row_log_concavity(3, 100).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(format!(
            "row {:?}: {:?}",
            report.first_violation, report.witness
        ));
    }
    Ok("rows n <= 100".into())
}

fn operator_lemma() -> Outcome {
    let run = || {
        check_lemma41(1000, 12, 1000, 2025)
            .map_err(|e| e.to_string())
            .and_then(|r| {
                serde_json::to_vec(&r)
                    .map(|b| (r, b))
                    .map_err(|e| e.to_string())
            })
    };
    let (report, first) = run()?;
    if !report.passed() {
        return Err(format!("counterexample: {:?}", report.witness));
    }
    let (_, second) = run()?;
    if first != second {
        return Err("rerun with the same seed differs".into());
    }
    Ok("1000 trials, seed 2025, rerun identical".into())
}

fn classical_reduction() -> Outcome {
    let fact = |m: u32| (1..=m).fold(Natural::one(), |a, i| a * i);
    for n in 0..=20u32 {
        let want = fact(2 * n) / (fact(n + 1) * fact(n));
        let got = s_catalan(1, n).unwrap();
        if got != want {
            return Err(format!("n = {n}: {got} vs {want}"));
        }
    }
    Ok("n <= 20".into())
}

fn oeis_fixture() -> Outcome {
    let bfile = parse_bfile(&fixture("b008287.txt")).map_err(|e| e.to_string())?;
    let terms = bfile.prefix().len();
    if terms < 100 {
        return Err(format!("fixture has only {terms} terms"));
    }
    let bundle = oeis_check(&bfile, 3, None, "acceptance").map_err(|e| e.to_string())?;
    match bundle.first_failure() {
        None => Ok(format!("{terms} terms")),
        Some(check) => Err(format!("{:?}", check.counterexample)),
    }
}

fn open_problems() -> Outcome {
    let bundle = verify::run(
        Suite::Openproblems,
        &Bounds::default(),
        "scatalan verify openproblems",
    )
    .map_err(|e| e.to_string())?;
    let expected = [
        "open-problem-1 s=4",
        "open-problem-2 s=4",
        "open-problem-1 s=5",
        "open-problem-2 s=5",
    ];
    let names: Vec<&str> = bundle.checks.iter().map(|c| c.name.as_str()).collect();
    if names != expected {
        return Err(format!("unexpected checks {names:?}"));
    }
    if bundle.checks.iter().any(|c| c.asserted) {
        return Err("exploratory checks must not be asserted".into());
    }
    let verdicts: Vec<String> = bundle
        .checks
        .iter()
        .map(|c| format!("{}: {}", c.name, c.verdict))
        .collect();
    Ok(format!("reported {}", verdicts.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (
            1,
            "golden s-Pascal rows",
            Duration::from_secs(1),
            golden_table_1,
        ),
        (
            2,
            "golden three-Catalan rows",
            Duration::from_secs(1),
            golden_table_2,
        ),
        (
            3,
            "dual-construction equivalence",
            Duration::from_secs(10),
            dual_construction,
        ),
        (4, "identity suite", Duration::from_secs(30), identity_suite),
        (
            5,
            "path counts equal triangle",
            Duration::from_secs(300),
            path_oracle,
        ),
        (
            6,
            "rule calibration",
            Duration::from_secs(120),
            rule_calibration,
        ),
        (
            7,
            "three-Catalan log-convexity",
            Duration::from_secs(30),
            log_convexity,
        ),
        (
            8,
            "row log-concavity",
            Duration::from_secs(60),
            row_concavity,
        ),
        (
            9,
            "operator lemma property suite",
            Duration::from_secs(30),
            operator_lemma,
        ),
        (
            10,
            "classical Catalan reduction",
            Duration::from_secs(1),
            classical_reduction,
        ),
        (
            11,
            "OEIS A008287 fixture",
            Duration::from_secs(1),
            oeis_fixture,
        ),
        (
            12,
            "open-problem exploration",
            Duration::from_secs(120),
            open_problems,
        ),
    ];
    let mut failed = Vec::new();
    for (id, title, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => {
                Err(format!("{detail}; took {elapsed:?}, limit {limit:?}"))
            }
            other => other,
        };
        let ms = elapsed.as_millis();
        match outcome {
            Ok(detail) => println!("PASS  {id:>2}  {title:<32} {ms:>6} ms  {detail}"),
            Err(reason) => {
                println!("FAIL  {id:>2}  {title:<32} {ms:>6} ms  {reason}");
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("\nall 12 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("\n{} of 12 criteria failed: {failed:?}", failed.len());
        ExitCode::FAILURE
    }
}
