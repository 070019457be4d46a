//! `fibcube` — compute, cross-validate, tabulate and dump Fibonacci/Lucas
//! cube indices.
//!
//! Exit codes: 0 on success, 1 when `check` finds a mathematical mismatch,
//! 2 on usage errors (bad flags, invalid method/family/quantity combination,
//! out-of-range n, or a refused oversized build).
//!
//! Primary output goes to stdout and is byte-for-byte deterministic; timings
//! go to stderr (or live in the explicitly nondeterministic `elapsed_ns`
//! JSON field and the `bench` report).

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fibcube::check;
use fibcube::formula::{
    mn_recursion, mostar_gamma_alt, mostar_gamma_closed, mostar_gamma_sum, mostar_lambda,
    wiener_gamma_closed_cited, wiener_gamma_closed_new, wiener_gamma_sum,
};
use fibcube::oracle::{mostar_brute, wiener_brute};
use fibcube::series::{builtin, NamedGf};
use fibcube::{BigInt, CubeGraph, CubeKind};

#[derive(Parser)]
#[command(
    name = "fibcube",
    version,
    about = "Exact Mostar and Wiener indices of Fibonacci and Lucas cubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one index value by one method, or by every applicable method.
    ///
    /// `--method all` includes the brute-force graph oracle, so it is subject
    /// to the n <= 30 build guard; pick an explicit formula method for larger n.
    Compute {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        quantity: Quantity,
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value = "all")]
        method: Method,
        /// Lift the n <= 30 guard on brute-force graph builds.
        #[arg(long)]
        force: bool,
        /// Emit records as a JSON array (includes the nondeterministic
        /// elapsed_ns field) instead of plain text lines.
        #[arg(long)]
        json: bool,
    },
    /// Run the full cross-validation suite and report pass/fail per identity.
    Check {
        /// Upper bound for formula-level identities and series coefficients.
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        /// Upper bound for checks that materialize a graph (exponential).
        #[arg(long, default_value_t = 10)]
        oracle_max_n: usize,
    },
    /// Tabulate indices and partition coefficients for n = 2..=max_n.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
        /// Comma-separated column subset (default: all).
        #[arg(long, value_delimiter = ',')]
        quantities: Option<Vec<Column>>,
    },
    /// Print a graph: one vertex word per line, then one edge per line as
    /// "u-index v-index k" (0-based vertex ordinals, 1-based coordinate).
    Dump {
        #[arg(long)]
        family: Family,
        #[arg(short, long)]
        n: usize,
        /// Lift the n <= 30 guard.
        #[arg(long)]
        force: bool,
    },
    /// Time the brute-force oracle against the closed forms.
    Bench {
        #[arg(long, default_value_t = 12)]
        max_oracle_n: usize,
        #[arg(long, default_value_t = 1000)]
        max_closed_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Gamma,
    Lambda,
}

impl Family {
    fn kind(self) -> CubeKind {
        match self {
            Family::Gamma => CubeKind::Gamma,
            Family::Lambda => CubeKind::Lambda,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Family::Gamma => "gamma",
            Family::Lambda => "lambda",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Mostar,
    Wiener,
}

impl Quantity {
    fn label(self) -> &'static str {
        match self {
            Quantity::Mostar => "mostar",
            Quantity::Wiener => "wiener",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Brute force on the materialized graph.
    Brute,
    /// Coordinate-cut summation.
    Sum,
    /// Alternate summation (Mostar) or the quadratic closed form (Wiener).
    Alt,
    /// Closed form.
    Closed,
    /// Edge-partition coefficient recursion (Mostar on gamma only).
    Recursion,
    /// Generating function coefficient extraction.
    Gf,
    /// Every method applicable to the family/quantity pair.
    All,
}

impl Method {
    fn label(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Sum => "sum",
            Method::Alt => "alt",
            Method::Closed => "closed",
            Method::Recursion => "recursion",
            Method::Gf => "gf",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Column {
    #[value(name = "mo_gamma")]
    MoGamma,
    #[value(name = "mo_lambda")]
    MoLambda,
    #[value(name = "w_gamma")]
    WGamma,
    #[value(name = "a")]
    A,
    #[value(name = "b")]
    B,
    #[value(name = "c")]
    C,
}

impl Column {
    const ALL: [Column; 6] = [
        Column::MoGamma,
        Column::MoLambda,
        Column::WGamma,
        Column::A,
        Column::B,
        Column::C,
    ];

    fn header(self) -> &'static str {
        match self {
            Column::MoGamma => "mo_gamma",
            Column::MoLambda => "mo_lambda",
            Column::WGamma => "w_gamma",
            Column::A => "a",
            Column::B => "b",
            Column::C => "c",
        }
    }
}

#[derive(Serialize)]
struct OutputRecord {
    family: String,
    quantity: String,
    n: usize,
    method: String,
    value: String,
    /// Wall time; excluded from the determinism contract.
    elapsed_ns: u128,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Writes a line to stdout, treating a closed pipe (`fibcube ... | head`) as
/// a clean early exit rather than a panic.
fn emit(line: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

macro_rules! emit {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Compute {
            family,
            quantity,
            n,
            method,
            force,
            json,
        } => cmd_compute(family, quantity, n, method, force, json),
        Command::Check {
            max_n,
            oracle_max_n,
        } => cmd_check(max_n, oracle_max_n),
        Command::Table {
            max_n,
            format,
            quantities,
        } => cmd_table(max_n, format, quantities),
        Command::Dump { family, n, force } => cmd_dump(family, n, force),
        Command::Bench {
            max_oracle_n,
            max_closed_n,
        } => cmd_bench(max_oracle_n, max_closed_n),
    }
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

fn applicable_methods(family: Family, quantity: Quantity) -> &'static [Method] {
    match (family, quantity) {
        (Family::Gamma, Quantity::Mostar) => &[
            Method::Brute,
            Method::Sum,
            Method::Alt,
            Method::Closed,
            Method::Recursion,
            Method::Gf,
        ],
        (Family::Gamma, Quantity::Wiener) => &[
            Method::Brute,
            Method::Sum,
            Method::Alt,
            Method::Closed,
            Method::Gf,
        ],
        (Family::Lambda, Quantity::Mostar) => &[Method::Brute, Method::Closed],
        (Family::Lambda, Quantity::Wiener) => &[Method::Brute],
    }
}

fn build(family: Family, n: usize, force: bool) -> Result<CubeGraph, String> {
    let result = if force {
        CubeGraph::build_forced(family.kind(), n)
    } else {
        CubeGraph::build(family.kind(), n)
    };
    result.map_err(|e| e.to_string())
}

fn series_value(name: NamedGf, n: usize) -> Result<BigInt, String> {
    let coefficients = builtin(name)
        .coefficients(n + 1)
        .map_err(|e| e.to_string())?;
    Ok(coefficients
        .into_iter()
        .nth(n)
        .expect("requested coefficient present"))
}

fn evaluate(
    family: Family,
    quantity: Quantity,
    n: usize,
    method: Method,
    force: bool,
) -> Result<BigInt, String> {
    let value = match (family, quantity, method) {
        (_, Quantity::Mostar, Method::Brute) => mostar_brute(&build(family, n, force)?),
        (_, Quantity::Wiener, Method::Brute) => wiener_brute(&build(family, n, force)?),
        (Family::Gamma, Quantity::Mostar, Method::Sum) => {
            mostar_gamma_sum(n).map_err(|e| e.to_string())?
        }
        (Family::Gamma, Quantity::Mostar, Method::Alt) => {
            mostar_gamma_alt(n).map_err(|e| e.to_string())?
        }
        (Family::Gamma, Quantity::Mostar, Method::Closed) => {
            mostar_gamma_closed(n).map_err(|e| e.to_string())?
        }
        (Family::Gamma, Quantity::Mostar, Method::Recursion) => {
            if n < 2 {
                return Err(format!(
                    "the partition recursion is not defined for n = {n} (smallest valid n is 2)"
                ));
            }
            mn_recursion(n).total()
        }
        (Family::Gamma, Quantity::Mostar, Method::Gf) => {
            if n < 2 {
                return Err(format!("the Mostar series starts at n = 2 (got {n})"));
            }
            series_value(NamedGf::MostarGamma, n)?
        }
        (Family::Gamma, Quantity::Wiener, Method::Sum) => {
            wiener_gamma_sum(n).map_err(|e| e.to_string())?
        }
        (Family::Gamma, Quantity::Wiener, Method::Alt) => {
            wiener_gamma_closed_cited(n).map_err(|e| e.to_string())?
        }
        (Family::Gamma, Quantity::Wiener, Method::Closed) => {
            wiener_gamma_closed_new(n).map_err(|e| e.to_string())?
        }
        (Family::Gamma, Quantity::Wiener, Method::Gf) => {
            if n < 1 {
                return Err("the Wiener series starts at n = 1".to_string());
            }
            series_value(NamedGf::WienerGamma, n)?
        }
        (Family::Lambda, Quantity::Mostar, Method::Closed) => {
            mostar_lambda(n).map_err(|e| e.to_string())?
        }
        _ => {
            return Err(format!(
                "method {} is not applicable to {} {}",
                method.label(),
                family.label(),
                quantity.label(),
            ))
        }
    };
    Ok(value)
}

fn cmd_compute(
    family: Family,
    quantity: Quantity,
    n: usize,
    method: Method,
    force: bool,
    json: bool,
) -> Result<ExitCode, String> {
    let methods: Vec<Method> = match method {
        Method::All => applicable_methods(family, quantity).to_vec(),
        single => {
            if !applicable_methods(family, quantity).contains(&single) {
                return Err(format!(
                    "method {} is not applicable to {} {}",
                    single.label(),
                    family.label(),
                    quantity.label(),
                ));
            }
            vec![single]
        }
    };

    let mut records = Vec::with_capacity(methods.len());
    for m in methods {
        let start = Instant::now();
        let value = evaluate(family, quantity, n, m, force)?;
        let elapsed_ns = start.elapsed().as_nanos();
        records.push(OutputRecord {
            family: family.label().to_string(),
            quantity: quantity.label().to_string(),
            n,
            method: m.label().to_string(),
            value: value.to_string(),
            elapsed_ns,
        });
    }

    if json {
        emit!(
            "{}",
            serde_json::to_string_pretty(&records).expect("serializable records")
        );
    } else {
        for r in &records {
            emit!(
                "{} {} {} {} {}",
                r.family,
                r.quantity,
                r.n,
                r.method,
                r.value
            );
            eprintln!(
                "# elapsed_ns {} {} {} {} {}",
                r.family, r.quantity, r.n, r.method, r.elapsed_ns
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn cmd_check(max_n: usize, oracle_max_n: usize) -> Result<ExitCode, String> {
    if oracle_max_n < 2 || oracle_max_n > max_n {
        return Err(format!(
            "require 2 <= oracle_max_n <= max_n (got oracle_max_n = {oracle_max_n}, max_n = {max_n})"
        ));
    }
    let outcomes = check::run_all(max_n, oracle_max_n);
    let mut failures = 0usize;
    for outcome in &outcomes {
        match &outcome.result {
            Ok(()) => emit!("PASS {}", outcome.name),
            Err(detail) => {
                failures += 1;
                emit!("FAIL {}: {detail}", outcome.name);
            }
        }
    }
    emit!(
        "{}/{} checks passed",
        outcomes.len() - failures,
        outcomes.len()
    );
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn table_value(column: Column, n: usize) -> Result<BigInt, String> {
    let value = match column {
        Column::MoGamma => mostar_gamma_closed(n).map_err(|e| e.to_string())?,
        Column::MoLambda => mostar_lambda(n).map_err(|e| e.to_string())?,
        Column::WGamma => wiener_gamma_sum(n).map_err(|e| e.to_string())?,
        Column::A => mn_recursion(n).a,
        Column::B => mn_recursion(n).b,
        Column::C => mn_recursion(n).c,
    };
    Ok(value)
}

fn cmd_table(
    max_n: usize,
    format: Format,
    quantities: Option<Vec<Column>>,
) -> Result<ExitCode, String> {
    if max_n < 2 {
        return Err(format!("table requires max_n >= 2 (got {max_n})"));
    }
    let columns = match quantities {
        None => Column::ALL.to_vec(),
        Some(list) if list.is_empty() => return Err("empty column list".to_string()),
        Some(list) => {
            // Keep canonical order and drop duplicates.
            Column::ALL
                .into_iter()
                .filter(|c| list.contains(c))
                .collect()
        }
    };

    match format {
        Format::Csv => {
            let mut header = vec!["n".to_string()];
            header.extend(columns.iter().map(|c| c.header().to_string()));
            emit!("{}", header.join(","));
            for n in 2..=max_n {
                let mut row = vec![n.to_string()];
                for c in &columns {
                    row.push(table_value(*c, n)?.to_string());
                }
                emit!("{}", row.join(","));
            }
        }
        Format::Json => {
            let mut rows = Vec::with_capacity(max_n - 1);
            for n in 2..=max_n {
                let mut row = serde_json::Map::new();
                row.insert("n".to_string(), serde_json::Value::from(n));
                for c in &columns {
                    row.insert(
                        c.header().to_string(),
                        serde_json::Value::from(table_value(*c, n)?.to_string()),
                    );
                }
                rows.push(serde_json::Value::Object(row));
            }
            emit!(
                "{}",
                serde_json::to_string_pretty(&rows).expect("serializable rows")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// dump
// ---------------------------------------------------------------------------

fn cmd_dump(family: Family, n: usize, force: bool) -> Result<ExitCode, String> {
    let g = build(family, n, force)?;
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    for e in g.edges() {
        let ui = g.index_of(&e.u).expect("endpoint is a vertex");
        let vi = g.index_of(&e.v).expect("endpoint is a vertex");
        out.push_str(&format!("{ui} {vi} {}\n", e.coord));
    }
    emit!("{}", out.trim_end_matches('\n'));
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

fn time_it(f: impl FnOnce() -> BigInt) -> (BigInt, u128) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_nanos())
}

fn bench_line(quantity: &str, n: usize, method: &str, elapsed_ns: u128) {
    emit!("{quantity} gamma {n} {method} elapsed_ns={elapsed_ns}");
}

fn cmd_bench(max_oracle_n: usize, max_closed_n: usize) -> Result<ExitCode, String> {
    emit!("# quantity family n method timing");
    for n in 2..=max_oracle_n {
        let g = build(Family::Gamma, n, false)?;
        let (_, t) = time_it(|| mostar_brute(&g));
        bench_line("mostar", n, "brute", t);
        let (_, t) = time_it(|| mostar_gamma_closed(n).expect("n >= 2"));
        bench_line("mostar", n, "closed", t);
        let (_, t) = time_it(|| wiener_brute(&g));
        bench_line("wiener", n, "brute", t);
        let (_, t) = time_it(|| wiener_gamma_closed_new(n).expect("n >= 2"));
        bench_line("wiener", n, "closed", t);
    }
    // Closed forms keep going long after the oracle has left desk scale.
    let mut n = max_oracle_n.max(2);
    while n < max_closed_n {
        n = (n * 4).min(max_closed_n);
        let (_, t) = time_it(|| mostar_gamma_closed(n).expect("n >= 2"));
        bench_line("mostar", n, "closed", t);
        let (_, t) = time_it(|| wiener_gamma_closed_new(n).expect("n >= 2"));
        bench_line("wiener", n, "closed", t);
    }
    Ok(ExitCode::SUCCESS)
}
