use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gbgeo::classifier::{classify, Statement, Verdict};
use gbgeo::dimension::{hilbert_dimension, maximal_independent_set};
use gbgeo::error::EngineError;
use gbgeo::geomdsl::{compile, parse_construction};
use gbgeo::groebner::{groebner_basis, Limits};
use gbgeo::monomial::MonomialOrder;
use gbgeo::zerodiv::zero_divisor_test;

use gbgeo_cli::{
    render_report, report_to_file, statement_from_file, statement_to_file, Format, OracleFile,
    StatementFile,
};

const DEFAULT_TIMEOUT_SECS: f64 = 300.0;
const TIMEOUT_ENV: &str = "GBGEO_TIMEOUT";

// Exit codes: 0 verdict, 2 parse/validation, 3 resource cap, 4 internal.
const EXIT_VALIDATION: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "gbgeo",
    version,
    about = "Classify algebraically translated geometric statements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a statement (generally true, generally false, or true on
    /// parts, false on parts)
    Prove(ProveArgs),
    /// Compile a construction script to statement JSON
    Compile(InputArgs),
    /// Print the reduced Groebner basis of the hypothesis ideal
    Gb(GbArgs),
    /// Print the Hilbert dimension and a maximal independent set
    Dim(InputArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file: statement JSON (.json) or construction script (.geo)
    path: Option<PathBuf>,
    /// Input file (alternative to the positional form)
    #[arg(long = "input", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Wall-clock budget in seconds (or set GBGEO_TIMEOUT)
    #[arg(long)]
    timeout: Option<f64>,
}

#[derive(Args)]
struct ProveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Also run the zero-divisor oracle and report agreement
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct GbArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Monomial order for the printed basis
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Failure {
        let code = match &e {
            EngineError::ResourceLimit(_) => EXIT_RESOURCE,
            EngineError::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_VALIDATION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl InputArgs {
    fn resolve_path(&self) -> Result<PathBuf, Failure> {
        match (&self.path, &self.input) {
            (Some(p), None) => Ok(p.clone()),
            (None, Some(p)) => Ok(p.clone()),
            (Some(_), Some(_)) => Err(Failure::validation(
                "give the input either positionally or via --input, not both",
            )),
            (None, None) => Err(Failure::validation("no input file given")),
        }
    }

    fn limits(&self) -> Result<Limits, Failure> {
        let timeout = match self.timeout {
            Some(t) => t,
            None => match std::env::var(TIMEOUT_ENV) {
                Ok(v) => v.parse::<f64>().map_err(|_| {
                    Failure::validation(format!("{TIMEOUT_ENV} must be a number of seconds"))
                })?,
                Err(_) => DEFAULT_TIMEOUT_SECS,
            },
        };
        if !timeout.is_finite() || timeout <= 0.0 {
            return Err(Failure::validation("timeout must be positive"));
        }
        Ok(Limits::with_timeout(Duration::from_secs_f64(timeout)))
    }
}

fn load_statement(path: &Path) -> Result<Statement, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
    let is_script = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("geo"));
    if is_script {
        let construction =
            parse_construction(&text).map_err(|e| Failure::validation(e.to_string()))?;
        let compiled = compile(&construction).map_err(|e| Failure::validation(e.to_string()))?;
        Ok(compiled.statement)
    } else {
        let file: StatementFile = serde_json::from_str(&text)
            .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
        statement_from_file(&file).map_err(Failure::validation)
    }
}

fn run_prove(args: &ProveArgs) -> Result<String, Failure> {
    let path = args.input.resolve_path()?;
    let limits = args.input.limits()?;
    let statement = load_statement(&path)?;
    let report = classify(&statement, &limits)?;

    let oracle = if args.oracle
        && matches!(
            report.verdict,
            Verdict::GenerallyTrue
                | Verdict::GenerallyFalse
                | Verdict::TrueOnPartsFalseOnParts
                | Verdict::DimensionMismatch
        ) {
        let h = statement.hypothesis_ideal();
        let zws = zero_divisor_test(&h, &statement.thesis, report.independent_set, &limits)?;
        let agreement = zws == (report.verdict == Verdict::TrueOnPartsFalseOnParts);
        Some(OracleFile { zws, agreement })
    } else {
        None
    };

    let file = report_to_file(&report, oracle);
    let format = match args.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    Ok(render_report(&file, format))
}

fn run_compile(args: &InputArgs) -> Result<String, Failure> {
    let path = args.resolve_path()?;
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
    let construction = parse_construction(&text).map_err(|e| Failure::validation(e.to_string()))?;
    let compiled = compile(&construction).map_err(|e| Failure::validation(e.to_string()))?;
    let file = statement_to_file(&compiled);
    Ok(serde_json::to_string_pretty(&file).expect("schema serializes"))
}

fn run_gb(args: &GbArgs) -> Result<String, Failure> {
    let path = args.input.resolve_path()?;
    let limits = args.input.limits()?;
    let statement = load_statement(&path)?;
    let order = match args.order {
        OrderArg::Grevlex => MonomialOrder::GrevLex,
        OrderArg::Lex => MonomialOrder::Lex,
    };
    let gb = groebner_basis(&statement.hypothesis_ideal(), &order, &limits)?;
    if gb.elements.is_empty() {
        return Ok("0\n".to_string());
    }
    let mut out = String::new();
    for p in &gb.elements {
        out.push_str(&p.to_string_under(&gb.order));
        out.push('\n');
    }
    Ok(out)
}

fn run_dim(args: &InputArgs) -> Result<String, Failure> {
    let path = args.resolve_path()?;
    let limits = args.limits()?;
    let statement = load_statement(&path)?;
    let h = statement.hypothesis_ideal();
    let cert = hilbert_dimension(&h, &limits)?;
    let mis = maximal_independent_set(&h, &limits)?;
    let names: Vec<&str> = mis.iter().map(|i| statement.ring.name(i)).collect();
    Ok(format!(
        "dimension: {}\nmaximal independent set: {{{}}}\n",
        cert.dimension,
        names.join(", ")
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Prove(args) => run_prove(args),
        Command::Compile(args) => run_compile(args),
        Command::Gb(args) => run_gb(args),
        Command::Dim(args) => run_dim(args),
    };
    match result {
        Ok(output) => {
            if output.ends_with('\n') {
                print!("{output}");
            } else {
                println!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
