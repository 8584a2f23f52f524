use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use montesinos::harness::{report_with, ReportOptions};
use montesinos::sweep::{run_sweep, SweepParams};
use montesinos::{Error, Fraction};
use montesinos_cli::{
    parse_knot, render_csv, render_json, render_table, simplified_candidates, svg, verdict, SlopeRecord, EXIT_INCONSISTENT,
    EXIT_OK, EXIT_USAGE,
};

#[derive(Parser)]
#[command(name = "montesinos", version, about = "Boundary slopes and slope bounds of Montesinos knots, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Simplified candidate surfaces and their slopes.
    Slopes {
        /// `K(p/q,...)` or `p/q,...`
        #[arg(allow_hyphen_values = true)]
        knot: String,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Add a decimal slope column.
        #[arg(long)]
        decimal: bool,
        /// Use this twist for the Seifert reference instead of computing it.
        #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
        seifert_twist: Option<String>,
    },
    /// Check the slope bounds for one knot or a sweep of knots.
    Verify {
        #[arg(allow_hyphen_values = true, required_unless_present = "sweep")]
        knot: Option<String>,
        #[arg(long, conflicts_with = "knot")]
        sweep: bool,
        /// Number of tangles in the sweep.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Largest tangle denominator in the sweep.
        #[arg(long, default_value_t = 5)]
        max_den: i64,
        /// Worker threads; all cores when absent.
        #[arg(long)]
        jobs: Option<usize>,
        /// Sweep every ordering instead of one tuple per multiset.
        #[arg(long)]
        no_canonicalize: bool,
        #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
        seifert_twist: Option<String>,
    },
    /// Draw the diagram with the simplified candidates as SVG.
    Diagram {
        #[arg(allow_hyphen_values = true)]
        knot: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_den_vertices: u32,
    },
}

struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Inconsistent(_) | Error::InternalAssumption(_) => EXIT_INCONSISTENT,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn twist_override(s: &Option<String>) -> Result<Option<Fraction>, Failure> {
    s.as_deref()
        .map(|x| x.replace('−', "-").parse::<Fraction>().map_err(|e| usage(format!("--seifert-twist: {e}"))))
        .transpose()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Slopes { knot, json, csv, decimal, seifert_twist } => {
            let t = parse_knot(&knot).map_err(usage)?;
            let tau = twist_override(&seifert_twist)?;
            let records: Vec<SlopeRecord> = simplified_candidates(&t, tau.as_ref())?
                .iter()
                .map(|c| SlopeRecord::from_candidate(c, decimal))
                .collect();
            let out = if json {
                render_json(&records)
            } else if csv {
                render_csv(&records, decimal)
            } else {
                render_table(&t, &records, decimal)
            };
            print!("{out}");
            Ok(EXIT_OK)
        }
        Cmd::Verify { knot, sweep, n, max_den, jobs, no_canonicalize, seifert_twist } => {
            if sweep {
                if n < 3 {
                    return Err(usage("--n must be at least 3"));
                }
                if max_den < 2 {
                    return Err(usage("--max-den must be at least 2"));
                }
                let params = SweepParams { n, max_den, canonicalize: !no_canonicalize };
                let mut pool = rayon::ThreadPoolBuilder::new();
                if let Some(j) = jobs {
                    if j == 0 {
                        return Err(usage("--jobs must be positive"));
                    }
                    pool = pool.num_threads(j);
                }
                let pool = pool.build().map_err(|e| usage(e.to_string()))?;
                let s = pool.install(|| run_sweep(&params));
                println!("{}", serde_json::to_string_pretty(&s).expect("summary serializes"));
                return Ok(verdict(s.violation_count, s.error_count + s.inconsistent_candidates));
            }
            let t = parse_knot(knot.as_deref().expect("clap requires a knot")).map_err(usage)?;
            let opts = ReportOptions { basic: None, seifert_twist: twist_override(&seifert_twist)? };
            let r = report_with(&t, &opts)?;
            println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
            Ok(verdict(r.violations.len(), r.inconsistent.len()))
        }
        Cmd::Diagram { knot, out, max_den_vertices } => {
            let t = parse_knot(&knot).map_err(usage)?;
            let cands = simplified_candidates(&t, None)?;
            let doc = svg::render(&t, &cands, max_den_vertices);
            std::fs::write(&out, doc).map_err(|e| usage(format!("cannot write {}: {e}", out.display())))?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
