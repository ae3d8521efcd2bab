//! `nfree`: construction, checking, and reporting for single-error-correcting
//! constant-weight codes and N-free set families, as reproducible batch
//! commands.
//!
//! Exit codes: 0 = computed, 1 = a checked property is violated (a witness
//! was found, or a claim fails), 2 = usage or input error.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nfree::codes::graham_sloane;
use nfree::construct::{
    build_kt, build_naive_all_extensions, build_three_level, claim_report, ConstructedFamily,
};
use nfree::poset::{find_n_witness, find_v_witness, is_antichain};
use nfree::report::{
    bound_table, outcome_to_csv, outcome_to_json, records_to_csv, records_to_json,
    unimodality_scan, verdict_to_csv, verdict_to_json, OutcomeRecord, ReportMeta, TableMethod,
};
use nfree::solver::{exact_max_code_mode, Budget, SolveOutcome};
use nfree::textio::{code_to_string, family_to_string, read_code, read_family};
use nfree::{ConstantWeightCode, ExecMode, SetFamily, SubsetWord};

#[derive(Parser)]
#[command(name = "nfree", version, about = "Constant-weight codes and N-free families")]
struct Cli {
    /// Worker threads: 1 forces the deterministic sequential path, 0 uses
    /// all cores.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the Graham–Sloane distance-4 code at weight k.
    Gs {
        #[arg(long)]
        n: u32,
        /// Weight; defaults to ⌊n/2⌋.
        #[arg(long)]
        k: Option<u32>,
        /// Write the code file here instead of stdout (atomic).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve A(n,d,k) exactly (within budget) and report the outcome.
    Exact {
        #[arg(long)]
        n: u32,
        /// Weight; defaults to ⌊n/2⌋.
        #[arg(long)]
        k: Option<u32>,
        /// Minimum distance (even).
        #[arg(long, default_value_t = 4)]
        d: u32,
        /// Time budget in milliseconds; 0 means unlimited.
        #[arg(long, default_value_t = 0)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Structured)]
        format: Format,
        /// Write the realizing code file here (atomic); the outcome record
        /// still goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a family: two-level, three-level, or the naive refuter.
    #[command(subcommand)]
    Build(BuildCmd),
    /// Check a family or code file for a property; exit 1 when violated.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Bound table at k = ⌊n/2⌋ for each n.
    Table {
        /// Comma-separated universe sizes, e.g. 4,6,8.
        #[arg(long = "n-list", value_delimiter = ',', required = true)]
        n_list: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Method::Gs)]
        method: Method,
        /// Per-instance solver budget in milliseconds for --method exact;
        /// 0 means unlimited.
        #[arg(long, default_value_t = 0)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Structured)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Unimodality scan of A(n,4,k) over 3 ≤ k ≤ n−3.
    Scan {
        #[arg(long)]
        n: u32,
        /// Per-weight solver budget in milliseconds; 0 means unlimited.
        #[arg(long, default_value_t = 0)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Structured)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BuildCmd {
    /// Level k plus a weight-(k+1) distance-4 code.
    Kt(BuildArgs),
    /// Level k plus both halves of a pivot split of a weight-k code.
    ThreeLevel {
        #[command(flatten)]
        args: BuildArgs,
        #[arg(long, default_value_t = 1)]
        pivot: u32,
    },
    /// Level k plus every one-element extension and removal of a weight-k
    /// code; contains an N (kept as the refuter).
    Naive(BuildArgs),
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    n: u32,
    /// Middle-level weight; defaults to ⌊n/2⌋.
    #[arg(long)]
    k: Option<u32>,
    /// Code file to use instead of constructing one.
    #[arg(long)]
    code: Option<PathBuf>,
    /// How to construct the code when --code is omitted.
    #[arg(long, value_enum, default_value_t = Method::Gs)]
    method: Method,
    /// Solver budget in milliseconds for --method exact; 0 means unlimited.
    #[arg(long, default_value_t = 0)]
    budget: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Is the family N-free?
    N(CheckIn),
    /// Is the family V-free?
    V(CheckIn),
    /// Is the family an antichain?
    Antichain(CheckIn),
    /// Do both halves of the pivot split keep distance 4 with no subset
    /// pair across them?
    Claim1 {
        #[command(flatten)]
        input: CheckIn,
        #[arg(long, default_value_t = 1)]
        pivot: u32,
    },
}

#[derive(Args)]
struct CheckIn {
    /// Family or code file.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Gs,
    Exact,
}

/// Error message ready for stderr; file problems carry the path.
struct CliError(String);

impl From<nfree::Error> for CliError {
    fn from(err: nfree::Error) -> CliError {
        CliError(err.to_string())
    }
}

fn load_family(path: &Path) -> Result<SetFamily, CliError> {
    read_family(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn load_code(path: &Path) -> Result<ConstantWeightCode, CliError> {
    read_code(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    setup_workers(cli.workers);
    // Only a single explicit worker selects the sequential path; 0 (all
    // cores) and N > 1 both go parallel.
    let mode = ExecMode::for_workers(cli.workers);
    match run(cli.command, mode) {
        Ok(code) => code,
        Err(CliError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

#[cfg(feature = "parallel")]
fn setup_workers(workers: usize) {
    if workers > 1 {
        // Ignore the error: the global pool can only be configured once.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn setup_workers(_workers: usize) {}

fn run(command: Command, mode: ExecMode) -> Result<ExitCode, CliError> {
    match command {
        Command::Gs { n, k, out } => {
            let k = k.unwrap_or(n / 2);
            let code = graham_sloane(n, k)?;
            let text = code_to_string(&code, &[String::from("# construction=GS")]);
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Exact {
            n,
            k,
            d,
            budget,
            format,
            out,
        } => {
            let k = k.unwrap_or(n / 2);
            let outcome = exact_max_code_mode(n, d, k, Budget::from_millis(budget), mode)?;
            if let Some(path) = out.as_deref() {
                write_atomic(path, &exact_code_text(&outcome))?;
            }
            let record = OutcomeRecord::new(&outcome);
            let text = match format {
                Format::Csv => outcome_to_csv(&record),
                Format::Structured => outcome_to_json(&record),
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Build(cmd) => run_build(cmd, mode),
        Command::Check(cmd) => run_check(cmd),
        Command::Table {
            n_list,
            method,
            budget,
            format,
            out,
        } => {
            let method = table_method(method, budget);
            let records = bound_table(&n_list, method, mode)?;
            let text = match format {
                Format::Csv => records_to_csv(&records),
                Format::Structured => records_to_json(&records, &ReportMeta::new(&method)),
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            n,
            budget,
            format,
            out,
        } => {
            let budget = Budget::from_millis(budget);
            let verdict = unimodality_scan(n, budget, mode)?;
            let method = TableMethod::Exact(budget);
            let text = match format {
                Format::Csv => verdict_to_csv(&verdict),
                Format::Structured => verdict_to_json(&verdict, &ReportMeta::new(&method)),
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn table_method(method: Method, budget_millis: u64) -> TableMethod {
    match method {
        Method::Gs => TableMethod::Gs,
        Method::Exact => TableMethod::Exact(Budget::from_millis(budget_millis)),
    }
}

/// The code a solved instance realizes, annotated with its status.
fn exact_code_text(outcome: &SolveOutcome) -> String {
    let comments = [
        String::from("# construction=EXACT"),
        format!("# status={}", outcome.status),
    ];
    code_to_string(&outcome.code, &comments)
}

fn run_build(cmd: BuildCmd, mode: ExecMode) -> Result<ExitCode, CliError> {
    let (args, pivot) = match &cmd {
        BuildCmd::Kt(args) | BuildCmd::Naive(args) => (args, None),
        BuildCmd::ThreeLevel { args, pivot } => (args, Some(*pivot)),
    };
    let n = args.n;
    let k = args.k.unwrap_or(n / 2);
    // KT sits a distance-4 code one level above the full level; the other
    // two constructions start from a code at the level itself.
    let code_weight = match cmd {
        BuildCmd::Kt(_) => k + 1,
        _ => k,
    };
    let code = resolve_code(args, n, code_weight, mode)?;
    let built: ConstructedFamily = match &cmd {
        BuildCmd::Kt(_) => build_kt(n, k, &code)?,
        BuildCmd::ThreeLevel { .. } => build_three_level(n, k, &code, pivot.unwrap())?,
        BuildCmd::Naive(_) => build_naive_all_extensions(n, k, &code)?,
    };
    let text = family_to_string(&built.family, &built.comment_lines());
    emit(args.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn resolve_code(
    args: &BuildArgs,
    n: u32,
    weight: u32,
    mode: ExecMode,
) -> Result<ConstantWeightCode, CliError> {
    if let Some(path) = &args.code {
        return load_code(path);
    }
    match args.method {
        Method::Gs => Ok(graham_sloane(n, weight)?),
        Method::Exact => {
            let budget = Budget::from_millis(args.budget);
            Ok(exact_max_code_mode(n, 4, weight, budget, mode)?.code)
        }
    }
}

fn run_check(cmd: CheckCmd) -> Result<ExitCode, CliError> {
    match cmd {
        CheckCmd::N(input) => {
            let family = load_family(&input.input)?;
            match find_n_witness(&family) {
                None => {
                    println!("N-free: true");
                    Ok(ExitCode::SUCCESS)
                }
                Some(w) => {
                    println!("N-free: false");
                    println!("W: {}", w.w);
                    println!("X: {}", w.x);
                    println!("Y: {}", w.y);
                    println!("Z: {}", w.z);
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        CheckCmd::V(input) => {
            let family = load_family(&input.input)?;
            match find_v_witness(&family) {
                None => {
                    println!("V-free: true");
                    Ok(ExitCode::SUCCESS)
                }
                Some(v) => {
                    println!("V-free: false");
                    println!("X: {}", v.x);
                    println!("Y: {}", v.y);
                    println!("Z: {}", v.z);
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        CheckCmd::Antichain(input) => {
            let family = load_family(&input.input)?;
            if is_antichain(&family) {
                println!("antichain: true");
                Ok(ExitCode::SUCCESS)
            } else {
                let (sub, sup) = comparable_pair(&family)
                    .expect("a non-antichain always has a comparable pair");
                println!("antichain: false");
                println!("Y: {sub}");
                println!("X: {sup}");
                Ok(ExitCode::FAILURE)
            }
        }
        CheckCmd::Claim1 { input, pivot } => {
            let code = load_code(&input.input)?;
            let report = claim_report(&code, pivot)?;
            println!("claim1: {}", report.holds());
            println!("pivot: {}", report.pivot);
            println!("source_size: {}", report.source_size);
            println!("up_size: {}", report.up_size);
            println!("down_size: {}", report.down_size);
            if let Some((a, b, got)) = &report.up_violation {
                println!("up_violation: d({{{a}}}, {{{b}}}) = {got} < 4");
            }
            if let Some((a, b, got)) = &report.down_violation {
                println!("down_violation: d({{{a}}}, {{{b}}}) = {got} < 4");
            }
            if let Some((down, up)) = &report.subset_violation {
                println!("subset_violation: {{{down}}} < {{{up}}}");
            }
            if report.holds() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

/// First comparable pair (subset, superset) in colex scan order. A strict
/// subset always precedes its superset in colex, so scanning i < j suffices.
fn comparable_pair(family: &SetFamily) -> Option<(SubsetWord, SubsetWord)> {
    let members = family.members();
    for j in 0..members.len() {
        for i in 0..j {
            if members[i].is_strict_subset_of(&members[j]) {
                return Some((members[i], members[j]));
            }
        }
    }
    None
}

/// Prints to stdout, or writes the whole payload to `path` atomically
/// (temp file + rename, so a failed run never leaves a partial file).
fn emit(path: Option<&Path>, payload: &str) -> Result<(), CliError> {
    match path {
        None => {
            print!("{payload}");
            Ok(())
        }
        Some(path) => write_atomic(path, payload),
    }
}

fn write_atomic(path: &Path, payload: &str) -> Result<(), CliError> {
    let annotate = |e: std::io::Error| CliError(format!("{}: io: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(annotate)?;
    tmp.write_all(payload.as_bytes()).map_err(annotate)?;
    tmp.as_file().sync_all().map_err(annotate)?;
    tmp.persist(path).map_err(|persist| annotate(persist.error))?;
    Ok(())
}
