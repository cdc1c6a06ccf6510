use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kummer_bn::report::{self, OutputFormat};
use kummer_bn::{
    bundle_invariants, enumerate_examples, format_divisor, parse_divisor, parse_effective,
    theorem_check_with_budget, verify_configuration, Error, ExampleRecord, Family,
    LatticeContext, SearchParams, SubdivisorVerdict,
};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "kummer-bn", version, about = "Kummer surface lattice tools and Brill-Noether certificates")]
struct Cli {
    /// Optional key=value file supplying defaults for the flags below.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format: json, csv or text.
    #[arg(long, global = true)]
    format: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct Tuning {
    /// Cap on subdivisors swept per divisor
    #[arg(long)]
    budget: Option<u64>,
    /// Largest coefficient sum to enumerate
    #[arg(long)]
    max_degree: Option<i64>,
    /// Largest single coefficient to enumerate
    #[arg(long)]
    max_coeff: Option<i64>,
    /// nodes, tropes, mixed_disjoint, prop_ex2_shape or all
    #[arg(long)]
    family: Option<String>,
    /// Also emit divisors that do not pass
    #[arg(long)]
    include_failures: bool,
    /// Drop D when theta(D) is enumerated and sorts first
    #[arg(long)]
    canonicalize: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the three hypotheses for a divisor.
    Check {
        expr: String,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Chern data and dimension counts of the pushforward bundle.
    Invariants { expr: String },
    /// Image of a divisor under the involution.
    Theta { expr: String },
    /// Whether a divisor class is fixed by the involution.
    Invariant { expr: String },
    /// Intersection number of two divisors.
    Pair { a: String, b: String },
    /// Enumerate a family of divisors as JSON Lines (or CSV / text).
    Enumerate {
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Run the configuration self-checks.
    Verify,
    /// Print the Gram matrix as CSV.
    ExportGram,
}

struct Settings {
    format: OutputFormat,
    params: SearchParams,
}

fn settings(cli: &Cli, tuning: Option<&Tuning>) -> Result<Settings, Error> {
    let cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))?;
            report::parse_config(&text)?
        }
        None => Default::default(),
    };
    let get = |k: &str| cfg.get(k).map(String::as_str);
    let num = |k: &str| -> Result<Option<i64>, Error> {
        get(k).map(|v| v.parse().map_err(|_| Error::MalformedInteger(v.to_string()))).transpose()
    };
    let flag = |k: &str| matches!(get(k), Some("true" | "1" | "yes"));

    let mut params = SearchParams {
        include_failures: flag("include-failures"),
        canonicalize: flag("canonicalize"),
        ..SearchParams::default()
    };
    if let Some(v) = num("max-degree")? {
        params.max_degree = v;
    }
    if let Some(v) = num("max-coeff")? {
        params.max_coeff = v;
    }
    if let Some(v) = num("budget")? {
        params.budget = u64::try_from(v).map_err(|_| Error::InvalidParams("budget must be positive".into()))?;
    }
    if let Some(f) = get("family") {
        params.family = f.parse()?;
    }
    let mut format = match get("format") {
        Some(f) => f.parse()?,
        None => OutputFormat::default(),
    };

    if let Some(t) = tuning {
        params.max_degree = t.max_degree.unwrap_or(params.max_degree);
        params.max_coeff = t.max_coeff.unwrap_or(params.max_coeff);
        params.budget = t.budget.unwrap_or(params.budget);
        if let Some(f) = &t.family {
            params.family = f.parse::<Family>()?;
        }
        params.include_failures |= t.include_failures;
        params.canonicalize |= t.canonicalize;
    }
    if let Some(f) = &cli.format {
        format = f.parse()?;
    }
    params.validate()?;
    Ok(Settings { format, params })
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8, Error> {
    let ctx = LatticeContext::global();
    let io_err = |e: io::Error| Error::InvalidParams(format!("write failed: {e}"));
    match &cli.command {
        Command::Check { expr, tuning } => {
            let s = settings(cli, Some(tuning))?;
            let d = parse_effective(expr)?;
            let rec = ExampleRecord {
                divisor: format_divisor(&d),
                report: theorem_check_with_budget(ctx, &d, s.params.budget)?,
                invariants: bundle_invariants(ctx, &d)?,
            };
            match s.format {
                OutputFormat::Json => writeln!(out, "{}", report::json_line(&rec)),
                OutputFormat::Csv => writeln!(out, "{}\n{}", report::CSV_HEADER, report::csv_row(&rec)),
                OutputFormat::Text => write!(out, "{}", report::text_report(ctx, &rec.report, Some(&rec.invariants))),
            }
            .map_err(io_err)?;
            if matches!(rec.report.cond_ii, SubdivisorVerdict::ExhaustedBudget { .. }) {
                return Ok(EXIT_BUDGET);
            }
        }
        Command::Invariants { expr } => {
            let s = settings(cli, None)?;
            let inv = bundle_invariants(ctx, &parse_effective(expr)?)?;
            match s.format {
                OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&inv).expect("serializable")),
                OutputFormat::Csv => {
                    let rec_line = format!(
                        "{},{},{},{},{},{},{},{},{}",
                        inv.d2, inv.c1sq, inv.c2, inv.chi, inv.gap, inv.h0_lower, inv.dim_m_lower, inv.dim_p_upper, inv.rho1
                    );
                    writeln!(out, "d2,c1sq,c2,chi,gap,h0_lower,dim_m_lower,dim_p_upper,rho1\n{rec_line}")
                }
                OutputFormat::Text => write!(out, "{}", report::text_invariants(&inv)),
            }
            .map_err(io_err)?;
        }
        Command::Theta { expr } => {
            writeln!(out, "{}", format_divisor(&ctx.theta(&parse_divisor(expr)?))).map_err(io_err)?;
        }
        Command::Invariant { expr } => {
            writeln!(out, "{}", ctx.is_theta_invariant(&parse_divisor(expr)?)).map_err(io_err)?;
        }
        Command::Pair { a, b } => {
            writeln!(out, "{}", ctx.pair(&parse_divisor(a)?, &parse_divisor(b)?)).map_err(io_err)?;
        }
        Command::Enumerate { tuning } => {
            let s = settings(cli, Some(tuning))?;
            if s.format == OutputFormat::Csv {
                writeln!(out, "{}", report::CSV_HEADER).map_err(io_err)?;
            }
            for rec in enumerate_examples(&s.params)? {
                let rec = rec?;
                match s.format {
                    OutputFormat::Json => writeln!(out, "{}", report::json_line(&rec)),
                    OutputFormat::Csv => writeln!(out, "{}", report::csv_row(&rec)),
                    OutputFormat::Text => writeln!(out, "{}\t{:?}", rec.divisor, rec.report.overall),
                }
                .map_err(io_err)?;
            }
        }
        Command::Verify => {
            let report = verify_configuration();
            for c in &report.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{mark} {} {}", c.name, c.detail).map_err(io_err)?;
            }
            if !report.all_passed() {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::ExportGram => {
            write!(out, "{}", report::gram_csv(ctx)).map_err(io_err)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e @ Error::BudgetExceeded { .. }) => {
            eprintln!("error: {e}");
            EXIT_BUDGET
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
