//! Verification suites behind `scatalan verify`.

use std::time::Instant;

use clap::ValueEnum;
use num_traits::One;
use scatalan::bisnomial::{self, expand_by_multiplication};
use scatalan::catalan::{self, catalan_sequence};
use scatalan::paths::{self, Enumerator, RuleConfig};
use scatalan::positivity::{self, Verdict};
use scatalan::Natural;
use serde_json::{json, Value};

use crate::report::{Check, ReportBundle};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Theorem24,
    Logconvex,
    Logconcave,
    Lemma41,
    Openproblems,
    All,
}

impl Suite {
    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Identities,
                Suite::Theorem24,
                Suite::Logconvex,
                Suite::Logconcave,
                Suite::Lemma41,
                Suite::Openproblems,
            ],
            one => vec![one],
        }
    }
}

/// Ranges covered by each suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// Pascal identities for `1 <= s <= 4`, `n <= identities_n`.
    pub identities_n: u32,
    /// Direct vs recurrence three-Catalan rows.
    pub triangle_n: u32,
    /// Path counts vs triangle.
    pub theorem24_n: u32,
    /// DFS vs DP, capped by the enumeration bound.
    pub enumeration_n: u32,
    pub calibration_n: u32,
    pub logconvex_n: u32,
    /// Path-count log-convexity.
    pub injection_n: u32,
    pub logconcave_n: u32,
    pub lemma_trials: u32,
    pub lemma_length_max: usize,
    pub lemma_value_max: u64,
    pub seed: u64,
    pub open_s_max: u32,
    pub open_catalan_n: u32,
    pub open_rows_n: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            identities_n: 20,
            triangle_n: 30,
            theorem24_n: 6,
            enumeration_n: 5,
            calibration_n: 4,
            logconvex_n: 200,
            injection_n: 7,
            logconcave_n: 100,
            lemma_trials: 1000,
            lemma_length_max: 12,
            lemma_value_max: 1000,
            seed: 2025,
            open_s_max: 5,
            open_catalan_n: 60,
            open_rows_n: 40,
        }
    }
}

type Outcome = Result<Option<Value>, CliError>;

fn run_check(
    bundle: &mut ReportBundle,
    name: &str,
    range: String,
    f: impl FnOnce() -> Outcome,
) -> Result<(), CliError> {
    let start = Instant::now();
    let counterexample = f()?;
    bundle.checks.push(Check {
        name: name.to_string(),
        range,
        verdict: if counterexample.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        counterexample,
        millis: start.elapsed().as_millis() as u64,
        asserted: true,
    });
    Ok(())
}

fn run_positivity(
    bundle: &mut ReportBundle,
    name: &str,
    asserted: bool,
    f: impl FnOnce() -> scatalan::Result<positivity::PositivityReport>,
) -> Result<(), CliError> {
    let start = Instant::now();
    let report = f()?;
    let mut check = Check::from_positivity(name, &report, start.elapsed().as_millis() as u64);
    check.asserted = asserted;
    bundle.checks.push(check);
    Ok(())
}

fn mismatch(fields: Value) -> Outcome {
    Ok(Some(fields))
}

fn identities(b: &Bounds, bundle: &mut ReportBundle) -> Result<(), CliError> {
    let n_max = b.identities_n;
    let range = format!("1 <= s <= 4, n <= {n_max}");
    let rows_for = |s: u32| -> Result<Vec<bisnomial::SPascalRow>, CliError> {
        Ok(bisnomial::rows(s)?.take(n_max as usize + 1).collect())
    };

    run_check(bundle, "pascal-symmetry", range.clone(), || {
        for s in 1..=4 {
            for row in rows_for(s)? {
                let c = row.coeffs();
                if let Some(k) = (0..c.len()).find(|&k| c[k] != c[c.len() - 1 - k]) {
                    return mismatch(json!({"s": s, "n": row.n(), "k": k}));
                }
            }
        }
        Ok(None)
    })?;

    run_check(
        bundle,
        "longitudinal-recurrence-vs-expansion",
        range.clone(),
        || {
            for s in 1..=4 {
                for row in rows_for(s)? {
                    let oracle = expand_by_multiplication(s, row.n())?;
                    if row.coeffs() != oracle.as_slice() {
                        return mismatch(json!({"s": s, "n": row.n()}));
                    }
                }
            }
            Ok(None)
        },
    )?;

    run_check(bundle, "absorption-identity", range.clone(), || {
        for s in 1..=4 {
            for n in 1..=n_max {
                for k in 0..=i64::from(s * n) {
                    let (lhs, rhs) = bisnomial::absorption_check(s, n, k)?;
                    if lhs != rhs {
                        return mismatch(json!({
                            "s": s, "n": n, "k": k,
                            "lhs": lhs.to_string(), "rhs": rhs.to_string(),
                        }));
                    }
                }
            }
        }
        Ok(None)
    })?;

    run_check(bundle, "pascal-row-sum", range, || {
        for s in 1..=4 {
            for row in rows_for(s)? {
                let sum: Natural = row.coeffs().iter().sum();
                if sum != Natural::from(s + 1).pow(row.n()) {
                    return mismatch(json!({"s": s, "n": row.n(), "sum": sum.to_string()}));
                }
            }
        }
        Ok(None)
    })?;

    run_check(
        bundle,
        "binomial-reduction",
        format!("s = 1, n <= {n_max}"),
        || {
            let fact = |m: u32| (1..=m).fold(Natural::one(), |a, i| a * i);
            for row in rows_for(1)? {
                let n = row.n();
                for k in 0..=n {
                    let want = fact(n) / (fact(k) * fact(n - k));
                    if row.get(i64::from(k)) != want {
                        return mismatch(json!({"n": n, "k": k}));
                    }
                }
            }
            Ok(None)
        },
    )?;

    run_check(
        bundle,
        "catalan-classical-reduction",
        format!("s = 1, n <= {n_max}"),
        || {
            let fact = |m: u32| (1..=m).fold(Natural::one(), |a, i| a * i);
            let seq = catalan_sequence(1, n_max)?;
            for (n, c) in seq.values.iter().enumerate() {
                let n = n as u32;
                let want = fact(2 * n) / (fact(n + 1) * fact(n));
                if *c != want {
                    return mismatch(
                        json!({"n": n, "got": c.to_string(), "want": want.to_string()}),
                    );
                }
            }
            Ok(None)
        },
    )?;

    let t = b.triangle_n;
    run_check(
        bundle,
        "triangle-direct-vs-recurrence",
        format!("s = 3, n <= {t}"),
        || {
            let direct = catalan::triangle_rows(3)?;
            let rec = catalan::triangle_rows_recurrence();
            for (a, r) in direct.zip(rec).take(t as usize + 1) {
                if let Some(k) = (0..a.entries().len()).find(|&k| a.entries()[k] != r.entries()[k])
                {
                    return mismatch(json!({
                        "n": a.n(), "k": k,
                        "direct": a.entries()[k].to_string(),
                        "recurrence": r.entries()[k].to_string(),
                    }));
                }
            }
            Ok(None)
        },
    )
}

fn theorem24(b: &Bounds, bundle: &mut ReportBundle) -> Result<(), CliError> {
    run_check(
        bundle,
        "rule-calibration",
        format!("64 readings, n <= {}", b.calibration_n),
        || match paths::calibrate_rules(b.calibration_n) {
            Ok(rules) if rules == RuleConfig::CANONICAL => Ok(None),
            Ok(rules) => mismatch(json!({"survivor": rules.to_string()})),
            Err(
                e @ (scatalan::Error::NoMatchingReading { .. }
                | scatalan::Error::AmbiguousReadings { .. }),
            ) => mismatch(json!({"error": e.to_string()})),
            Err(e) => Err(e.into()),
        },
    )?;

    let n_max = b.theorem24_n;
    run_check(
        bundle,
        "path-counts-vs-triangle",
        format!("n <= {n_max}, 0 <= k <= 3n"),
        || {
            let counts = paths::count_rows(n_max);
            for (row, counted) in catalan::triangle_rows(3)?.zip(&counts) {
                for (k, (want, got)) in row.entries().iter().zip(counted).enumerate() {
                    if want != got {
                        return mismatch(json!({
                            "n": row.n(), "k": k,
                            "triangle": want.to_string(), "paths": got.to_string(),
                        }));
                    }
                }
            }
            Ok(None)
        },
    )?;

    let e_max = b.enumeration_n;
    run_check(bundle, "enumeration-vs-dp", format!("n <= {e_max}"), || {
        let enumerator = Enumerator {
            rules: RuleConfig::CANONICAL,
            bound: e_max.max(paths::DEFAULT_ENUMERATION_BOUND),
        };
        let counts = paths::count_rows(e_max);
        for (n, counted) in counts.iter().enumerate() {
            for (k, dp) in counted.iter().enumerate() {
                let walked = enumerator.count(n as u32, k as i64)?;
                if Natural::from(walked) != *dp {
                    return mismatch(json!({"n": n, "k": k, "dfs": walked, "dp": dp.to_string()}));
                }
            }
        }
        Ok(None)
    })
}

fn open_problems(b: &Bounds, bundle: &mut ReportBundle) -> Result<(), CliError> {
    for s in 4..=b.open_s_max {
        run_positivity(bundle, &format!("open-problem-1 s={s}"), false, || {
            positivity::catalan_log_convexity(s, b.open_catalan_n)
        })?;
        run_positivity(bundle, &format!("open-problem-2 s={s}"), false, || {
            positivity::row_log_concavity(s, b.open_rows_n)
        })?;
    }
    Ok(())
}

/// Runs `suite` and collects every check into one bundle.
pub fn run(suite: Suite, bounds: &Bounds, command: &str) -> Result<ReportBundle, CliError> {
    let mut bundle = ReportBundle::new(command);
    for part in suite.expand() {
        match part {
            Suite::Identities => identities(bounds, &mut bundle)?,
            Suite::Theorem24 => theorem24(bounds, &mut bundle)?,
            Suite::Logconvex => {
                run_positivity(&mut bundle, "three-catalan-log-convex", true, || {
                    positivity::catalan_log_convexity(3, bounds.logconvex_n)
                })?;
                run_positivity(&mut bundle, "path-count-log-convex", true, || {
                    positivity::injection_counting_check(bounds.injection_n)
                })?;
            }
            Suite::Logconcave => {
                run_positivity(&mut bundle, "three-catalan-rows-log-concave", true, || {
                    positivity::row_log_concavity(3, bounds.logconcave_n)
                })?;
            }
            Suite::Lemma41 => {
                run_positivity(
                    &mut bundle,
                    "operator-preserves-log-concavity",
                    true,
                    || {
                        positivity::check_lemma41(
                            bounds.lemma_trials,
                            bounds.lemma_length_max,
                            bounds.lemma_value_max,
                            bounds.seed,
                        )
                    },
                )?;
            }
            Suite::Openproblems => open_problems(bounds, &mut bundle)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(bundle)
}

/// Compares the s-Pascal triangle, flattened row by row, with the longest
/// gap-free prefix of `bfile`. Without `n_max`, enough rows are generated to
/// cover the whole prefix.
pub fn oeis_check(
    bfile: &crate::bfile::BFile,
    s: u32,
    n_max: Option<u32>,
    command: &str,
) -> Result<ReportBundle, CliError> {
    let expected = bfile.prefix();
    if expected.is_empty() {
        return Err(CliError::Input("b-file has no entries".into()));
    }
    let offset = bfile.first_index().unwrap_or(0);
    let mut flat: Vec<Natural> = Vec::new();
    let mut rows_used = 0u32;
    for row in bisnomial::rows(s)? {
        let done = match n_max {
            Some(n) => row.n() > n,
            None => flat.len() >= expected.len(),
        };
        if done {
            break;
        }
        rows_used = row.n() + 1;
        flat.extend(row.into_coeffs());
    }
    let compared = flat.len().min(expected.len());
    let name = format!("oeis-{}", bfile.id.as_deref().unwrap_or("bfile"));
    let range = format!(
        "{compared} terms from index {offset}, s = {s}, rows 0..{}",
        rows_used.saturating_sub(1)
    );
    let mut bundle = ReportBundle::new(command);
    run_check(&mut bundle, &name, range, || {
        for (i, (want, got)) in expected.iter().zip(&flat).enumerate() {
            if *want != got {
                return mismatch(json!({
                    "index": offset + i as i64,
                    "bfile": want.to_string(),
                    "computed": got.to_string(),
                }));
            }
        }
        Ok(None)
    })?;
    Ok(bundle)
}
