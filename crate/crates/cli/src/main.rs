use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use scatalan::catalan::{self, catalan_sequence};
use scatalan::paths::{self, Enumerator, RuleConfig, Validity};
use scatalan::{bisnomial, Natural};
use scatalan_cli::bfile::parse_bfile;
use scatalan_cli::export::{render_sequence, render_triangle, Format};
use scatalan_cli::report::ReportBundle;
use scatalan_cli::verify::{self, Bounds, Suite};
use scatalan_cli::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "scatalan",
    version,
    about = "s-Pascal and s-Catalan triangles, constrained paths, positivity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rows 0..=n-max of the s-Pascal triangle
    Pascal {
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(short, long, default_value_t = 4)]
        n_max: u32,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// s-Catalan numbers C_0..=C_{n-max}
    Catalan {
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(short, long, default_value_t = 4)]
        n_max: u32,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Rows of the three-Catalan triangle
    Triangle {
        #[arg(short, long, default_value_t = 4)]
        n_max: u32,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(short, long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Count, list or draw constrained paths to (n, k)
    Paths {
        #[command(subcommand)]
        action: PathAction,
    },
    /// Run verification suites; exit 1 on any counterexample
    Verify(VerifyArgs),
    /// Compare the flattened s-Pascal triangle with an OEIS b-file
    OeisCheck {
        #[arg(long)]
        bfile: String,
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        /// Rows to flatten; defaults to as many as the b-file covers
        #[arg(short, long)]
        n_max: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Score every reading of the path rules against the triangle
    Calibrate {
        #[arg(short, long, default_value_t = 4)]
        n_max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Recurrence,
    Both,
}

#[derive(Debug, Subcommand)]
enum PathAction {
    /// Number of paths, by dynamic programming
    Count { n: u32, k: i64 },
    /// Step strings, one per line, in lexicographic order
    List {
        n: u32,
        k: i64,
        #[command(flatten)]
        enumeration: EnumerationArgs,
    },
    /// ASCII drawings of each path
    Render {
        n: u32,
        k: i64,
        #[command(flatten)]
        enumeration: EnumerationArgs,
    },
    /// Check a step string such as "NE1 U D"
    Check { steps: String },
}

#[derive(Debug, Args)]
struct EnumerationArgs {
    #[arg(long, default_value_t = usize::MAX, hide_default_value = true)]
    limit: usize,
    /// Largest n accepted for exhaustive enumeration
    #[arg(long, default_value_t = paths::DEFAULT_ENUMERATION_BOUND)]
    bound: u32,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write the JSON report here
    #[arg(long)]
    report: Option<String>,
    /// Print the JSON report instead of the text summary
    #[arg(long)]
    json: bool,
    /// Record every timing as 0 ms for byte-identical reruns
    #[arg(long)]
    no_timings: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = Bounds::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = Bounds::default().identities_n)]
    identities_n: u32,
    #[arg(long, default_value_t = Bounds::default().triangle_n)]
    triangle_n: u32,
    #[arg(long, default_value_t = Bounds::default().theorem24_n)]
    theorem24_n: u32,
    #[arg(long, default_value_t = Bounds::default().enumeration_n)]
    enumeration_n: u32,
    #[arg(long, default_value_t = Bounds::default().calibration_n, value_parser = clap::value_parser!(u32).range(4..))]
    calibration_n: u32,
    #[arg(long, default_value_t = Bounds::default().logconvex_n)]
    logconvex_n: u32,
    #[arg(long, default_value_t = Bounds::default().injection_n, value_parser = clap::value_parser!(u32).range(1..))]
    injection_n: u32,
    #[arg(long, default_value_t = Bounds::default().logconcave_n)]
    logconcave_n: u32,
    #[arg(long, default_value_t = Bounds::default().lemma_trials, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,
    #[arg(long, default_value_t = Bounds::default().lemma_length_max)]
    length_max: usize,
    #[arg(long, default_value_t = Bounds::default().lemma_value_max)]
    value_max: u64,
    #[arg(long, default_value_t = Bounds::default().open_s_max)]
    open_s_max: u32,
    #[arg(long, default_value_t = Bounds::default().open_catalan_n)]
    open_catalan_n: u32,
    #[arg(long, default_value_t = Bounds::default().open_rows_n)]
    open_rows_n: u32,
    #[command(flatten)]
    output: OutputArgs,
}

impl VerifyArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            identities_n: self.identities_n,
            triangle_n: self.triangle_n,
            theorem24_n: self.theorem24_n,
            enumeration_n: self.enumeration_n,
            calibration_n: self.calibration_n,
            logconvex_n: self.logconvex_n,
            injection_n: self.injection_n,
            logconcave_n: self.logconcave_n,
            lemma_trials: self.trials,
            lemma_length_max: self.length_max,
            lemma_value_max: self.value_max,
            seed: self.seed,
            open_s_max: self.open_s_max,
            open_catalan_n: self.open_catalan_n,
            open_rows_n: self.open_rows_n,
        }
    }
}

fn command_echo() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!("scatalan {}", args.join(" "))
}

fn emit(bundle: ReportBundle, output: &OutputArgs) -> Result<ExitCode, CliError> {
    let bundle = if output.no_timings {
        bundle.without_timings()
    } else {
        bundle
    };
    if let Some(path) = &output.report {
        fs::write(path, bundle.to_json()).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    if output.json {
        print!("{}", bundle.to_json());
    } else {
        print!("{bundle}");
    }
    if let Some(failed) = bundle.first_failure() {
        eprintln!(
            "check `{}` failed: {}",
            failed.name,
            failed
                .counterexample
                .as_ref()
                .map_or_else(String::new, ToString::to_string)
        );
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Pascal { s, n_max, format } => {
            let rows: Vec<Vec<Natural>> = bisnomial::rows(s)?
                .take(n_max as usize + 1)
                .map(bisnomial::SPascalRow::into_coeffs)
                .collect();
            print!("{}", render_triangle(s, &rows, format));
        }
        Command::Catalan { s, n_max, format } => {
            let seq = catalan_sequence(s, n_max)?;
            print!("{}", render_sequence(s, &seq.values, format));
        }
        Command::Triangle {
            n_max,
            format,
            method,
        } => {
            let take = n_max as usize + 1;
            let direct = || -> Result<Vec<_>, CliError> {
                Ok(catalan::triangle_rows(3)?.take(take).collect())
            };
            let recurrence = || {
                catalan::triangle_rows_recurrence()
                    .take(take)
                    .collect::<Vec<_>>()
            };
            let rows = match method {
                Method::Direct => direct()?,
                Method::Recurrence => recurrence(),
                Method::Both => {
                    let (d, r) = (direct()?, recurrence());
                    for (a, b) in d.iter().zip(&r) {
                        if let Some(k) =
                            (0..a.entries().len()).find(|&k| a.entries()[k] != b.entries()[k])
                        {
                            eprintln!(
                                "constructions disagree at (n={}, k={k}): direct {} vs recurrence {}",
                                a.n(),
                                a.entries()[k],
                                b.entries()[k]
                            );
                            return Ok(ExitCode::from(1));
                        }
                    }
                    d
                }
            };
            let rows: Vec<Vec<Natural>> = rows
                .into_iter()
                .map(catalan::TriangleRow::into_entries)
                .collect();
            print!("{}", render_triangle(3, &rows, format));
        }
        Command::Paths { action } => match action {
            PathAction::Count { n, k } => println!("{}", paths::count_paths(n, k)),
            PathAction::List { n, k, enumeration } => {
                for p in enumerator(&enumeration).paths(n, k, enumeration.limit)? {
                    println!("{p}");
                }
            }
            PathAction::Render { n, k, enumeration } => {
                for p in enumerator(&enumeration).paths(n, k, enumeration.limit)? {
                    println!("{}", paths::render(&p));
                }
            }
            PathAction::Check { steps } => {
                let path = paths::parse_path(&steps)?;
                let (x, y) = path.endpoint();
                match paths::is_valid(&path, &RuleConfig::CANONICAL) {
                    Validity::Valid => println!("valid, ends at ({x}, {y})"),
                    Validity::Invalid { constraint, step } => {
                        println!("invalid at step {}: {constraint}", step + 1);
                        return Ok(ExitCode::from(1));
                    }
                }
            }
        },
        Command::Verify(args) => {
            let bundle = verify::run(args.suite, &args.bounds(), &command_echo())?;
            return emit(bundle, &args.output);
        }
        Command::OeisCheck {
            bfile,
            s,
            n_max,
            output,
        } => {
            let text = fs::read_to_string(&bfile).map_err(|source| CliError::Io {
                path: bfile.clone(),
                source,
            })?;
            let parsed = parse_bfile(&text)?;
            let bundle = verify::oeis_check(&parsed, s, n_max, &command_echo())?;
            return emit(bundle, &output);
        }
        Command::Calibrate { n_max } => {
            let report = paths::calibration_report(n_max)?;
            for outcome in &report {
                match &outcome.first_mismatch {
                    None => println!("match     {}", outcome.rules),
                    Some((n, k, want, got)) => {
                        println!(
                            "mismatch  {}  first at ({n}, {k}): want {want}, got {got}",
                            outcome.rules
                        )
                    }
                }
            }
            return match paths::calibrate_rules(n_max) {
                Ok(rules) => {
                    println!("canonical reading: {rules}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(ExitCode::from(1))
                }
            };
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerator(args: &EnumerationArgs) -> Enumerator {
    Enumerator {
        rules: RuleConfig::CANONICAL,
        bound: args.bound,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
