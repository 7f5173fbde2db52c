//! The `torsq` command line.
//!
//! Exit codes: 0 success, 1 invalid coloring, 2 usage or parse error,
//! 3 internal error, 4 search budget exhausted. Data goes to stdout or the
//! requested files; timings go to stderr.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalogue::PatternLibrary;
use crate::construct::construct;
use crate::error::Error;
use crate::format::{read_coloring, to_json, to_text, write_atomic};
use crate::graph::{verify_coloring, Coloring, TorusDims};
use crate::solver::{chromatic_number, max_independent_set, packing_bound, ceil_lower_bound, SearchBudget, CLIQUE_LOWER_BOUND};
use crate::survey::{
    dump_violation, reproduce_table1, run_survey, six_color_summary, table1_report, to_jsonl, to_table, Conjecture1,
    RowStatus,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "torsq", version, about = "Distance-2 colorings of toroidal grids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Args)]
pub struct BudgetArgs {
    /// Seconds per search call; 0 disables the limit.
    #[arg(long, value_name = "SECONDS", default_value_t = 60.0)]
    pub time_limit: f64,
    /// Search nodes per search call.
    #[arg(long, value_name = "COUNT")]
    pub node_limit: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, Error> {
        if !self.time_limit.is_finite() || self.time_limit < 0.0 {
            return Err(Error::Usage(format!("--time-limit must be non-negative, got {}", self.time_limit)));
        }
        Ok(SearchBudget {
            time_limit: (self.time_limit > 0.0).then(|| Duration::from_secs_f64(self.time_limit)),
            node_limit: self.node_limit,
        })
    }
}

#[derive(Clone, Copy, Debug, Args)]
pub struct DimsArgs {
    /// Number of rows (length of the first cycle).
    #[arg(short = 'm', value_name = "M")]
    pub m: usize,
    /// Number of columns (length of the second cycle).
    #[arg(short = 'n', value_name = "N")]
    pub n: usize,
}

impl DimsArgs {
    fn dims(&self) -> Result<TorusDims, Error> {
        TorusDims::new(self.m, self.n)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a coloring from the pattern catalogue.
    Color {
        #[command(flatten)]
        dims: DimsArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write the coloring here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file (text or JSON).
    Verify { path: PathBuf },
    /// Maximum independent set of the square.
    Alpha {
        #[command(flatten)]
        dims: DimsArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the independent set as `row col` lines.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Bounds on the chromatic number of the square.
    Chi {
        #[command(flatten)]
        dims: DimsArgs,
        /// Run exact searches instead of reporting construction and counting
        /// bounds only.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the best coloring found.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Survey all sizes 3 <= m <= n within the given limits.
    Survey {
        #[arg(long, default_value_t = 10)]
        max_m: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Exact searches only for instances with at most this many vertices.
        #[arg(long, default_value_t = crate::survey::DEFAULT_EXACT_VERTEX_LIMIT)]
        exact_vertex_limit: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Directory for report files.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Also certify the summary table of known values.
        #[arg(long)]
        table1: bool,
        /// Per-search seconds for the computer-search rows of the summary
        /// table; they are deferred when absent.
        #[arg(long, value_name = "SECONDS")]
        extended_time_limit: Option<f64>,
    },
    /// Inspect the pattern catalogue.
    Patterns {
        #[command(subcommand)]
        action: PatternsAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum PatternsAction {
    /// Names, sizes, color counts and checksums.
    List,
    /// Re-verify every entry and its checksum.
    Check,
    /// Print one entry.
    Dump {
        name: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::RecipeFailed { .. } | Error::NoRecipe { .. } | Error::Catalogue { .. } => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn render(c: &Coloring, format: Format) -> String {
    match format {
        Format::Text => to_text(c),
        Format::Json => to_json(c),
    }
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let start = Instant::now();
    let code = match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    code
}

fn dispatch(command: Command) -> Result<i32, Error> {
    match command {
        Command::Color { dims, format, output } => {
            dims.dims()?;
            let r = construct(dims.m, dims.n)?;
            let data = render(&r.coloring, format);
            let summary = format!("k={} method={} layout={}", r.k, r.method, r.layout);
            match output {
                Some(path) => {
                    write_atomic(&path, &data)?;
                    println!("{summary}");
                }
                None => {
                    print!("{data}");
                    eprintln!("{summary}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { path } => {
            let c = read_coloring(&path).map_err(|e| match e {
                Error::Io(io) => Error::Usage(format!("cannot read {}: {io}", path.display())),
                other => other,
            })?;
            let report = verify_coloring(&c);
            if report.is_valid() {
                println!("valid: {} colors on {}", c.k(), c.dims());
                Ok(EXIT_OK)
            } else {
                for v in &report.violations {
                    println!("{v}");
                }
                println!("invalid: {} violations", report.violations.len());
                Ok(EXIT_INVALID)
            }
        }
        Command::Alpha { dims, budget, witness } => {
            let (dims, budget) = (dims.dims()?, budget.budget()?);
            let a = max_independent_set(dims, budget);
            if let Some(path) = witness {
                let lines: String = a.witness.iter().map(|c| format!("{} {}\n", c.row, c.col)).collect();
                write_atomic(&path, &lines)?;
            }
            eprintln!("nodes: {}", a.nodes);
            if a.certified {
                println!("alpha({dims}) = {} (certified)", a.alpha);
                Ok(EXIT_OK)
            } else {
                println!("alpha({dims}) in [{}, {}] (budget exhausted)", a.alpha, a.upper_bound);
                Ok(EXIT_BUDGET)
            }
        }
        Command::Chi {
            dims,
            exact,
            budget,
            witness,
            format,
        } => {
            let (dims, budget) = (dims.dims()?, budget.budget()?);
            let (lower, upper, coloring, certified) = if exact {
                let r = chromatic_number(dims, budget)?;
                println!("lower bound source: {}", serde_json::to_value(r.lower_source)?.as_str().unwrap_or_default());
                (r.lower, r.upper, r.witness, r.certified)
            } else {
                let r = construct(dims.m(), dims.n())?;
                let lower = CLIQUE_LOWER_BOUND.max(ceil_lower_bound(dims, packing_bound(dims))?);
                println!("method: {}", r.method);
                (lower, r.k, Some(r.coloring), lower == r.k)
            };
            if let (Some(path), Some(c)) = (witness, coloring.as_ref()) {
                write_atomic(&path, &render(c, format))?;
            }
            if certified {
                println!("chi({dims}) = {upper} (certified)");
                Ok(EXIT_OK)
            } else if exact {
                println!("chi({dims}) in [{lower}, {upper}] (budget exhausted)");
                Ok(EXIT_BUDGET)
            } else {
                println!("chi({dims}) in [{lower}, {upper}] (run with --exact to search)");
                Ok(EXIT_OK)
            }
        }
        Command::Survey {
            max_m,
            max_n,
            exact_vertex_limit,
            budget,
            out_dir,
            table1,
            extended_time_limit,
        } => {
            if max_m < 3 || max_n < 3 {
                return Err(Error::Usage("--max-m and --max-n must be at least 3".into()));
            }
            let budget = budget.budget()?;
            let extended = extended_time_limit
                .map(|t| {
                    BudgetArgs {
                        time_limit: t,
                        node_limit: None,
                    }
                    .budget()
                })
                .transpose()?;
            std::fs::create_dir_all(&out_dir)?;
            let rows = run_survey(max_m, max_n, exact_vertex_limit, budget)?;
            let mut text = to_table(&rows);
            text.push_str("\nsmallest n with a known 6-coloring, per m:\n");
            for s in six_color_summary(&rows) {
                let show = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
                text.push_str(&format!(
                    "m={:<3} first n={:<4} all n from {}\n",
                    s.m,
                    show(s.first_n),
                    show(s.from_n)
                ));
            }
            write_atomic(&out_dir.join("survey.jsonl"), &to_jsonl(&rows))?;
            write_atomic(&out_dir.join("survey.txt"), &text)?;
            print!("{text}");

            let mut code = EXIT_OK;
            for row in rows.iter().filter(|r| r.conjecture1 == Conjecture1::Violated) {
                let path = dump_violation(row, budget, &out_dir)?;
                eprintln!(
                    "CONJECTURE VIOLATION at {}x{}: chi={:?}, alpha={}; record written to {}",
                    row.m,
                    row.n,
                    row.chi,
                    row.alpha.value,
                    path.display()
                );
                code = EXIT_INTERNAL;
            }
            if table1 {
                let checks = reproduce_table1(exact_vertex_limit, budget, extended)?;
                let report = table1_report(&checks);
                write_atomic(&out_dir.join("table1.txt"), &report)?;
                print!("\n{report}");
                if checks.iter().any(|c| c.status == RowStatus::Fail) {
                    code = code.max(EXIT_INVALID);
                }
            }
            Ok(code)
        }
        Command::Patterns { action } => {
            let lib = PatternLibrary::embedded()?;
            match action {
                PatternsAction::List => {
                    for e in lib.entries() {
                        let p = &e.pattern;
                        let colors = p.to_coloring().map(|c| c.k()).unwrap_or(0);
                        println!("{:<6} {:>2}x{:<2} {} colors  {}", p.name(), p.rows(), p.cols(), colors, e.checksum);
                    }
                    Ok(EXIT_OK)
                }
                PatternsAction::Check => {
                    let mut code = EXIT_OK;
                    for c in lib.check() {
                        let status = if c.ok() { "ok" } else { "FAIL" };
                        println!(
                            "{status:<4} {:<6} {}x{} {} colors, checksum {}, {} violations",
                            c.name,
                            c.rows,
                            c.cols,
                            c.colors,
                            if c.checksum_ok { "ok" } else { "MISMATCH" },
                            c.violations.len()
                        );
                        if !c.ok() {
                            code = EXIT_INVALID;
                        }
                    }
                    Ok(code)
                }
                PatternsAction::Dump { name, format } => {
                    let p = lib.get(&name)?;
                    match format {
                        Format::Text => print!("{}", p.to_text()),
                        Format::Json => print!("{}", to_json(&p.to_coloring()?)),
                    }
                    Ok(EXIT_OK)
                }
            }
        }
    }
}
