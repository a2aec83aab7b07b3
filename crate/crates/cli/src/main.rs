mod config;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use stieltjes_core::dirichlet::{self, CharacterTable};
use stieltjes_core::fracpart::{self, FracIntegralResult, MAX_REDUCED_ORDER};
use stieltjes_core::identities::{self, IdentityReport, Selection};
use stieltjes_core::stieltjes::{self, Argument, Method, StieltjesValue};
use stieltjes_core::{Error, QuadratureSpec};

use config::{CliConfig, OutputFormat, Overrides};

const MAX_GRID_K: u32 = 12;
const MAX_GRID_Q: i64 = 64;

#[derive(Parser, Debug)]
#[command(name = "stieltjes", version, about = "Stieltjes constants, Hurwitz zeta and Dirichlet L-function identities")]
struct Cli {
    /// Flat key = value config file; STIELTJES_CONFIG is read when absent.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    #[arg(long, global = true)]
    max_refinements: Option<u32>,
    /// Seed for Monte Carlo estimates.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// json, csv or text.
    #[arg(long, global = true)]
    format: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute γ_k(a).
    ///
    /// `a` may be a fraction p/q, which is kept exact, or a decimal, which is
    /// used as a float.
    Stieltjes {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// integral, euler-maclaurin, harmonic-series, half-shift-series,
        /// stirling-zeta-series, limit-oracle or periodic-integral.
        #[arg(long)]
        method: Option<String>,
        /// Evaluate every applicable method and report the spread.
        #[arg(long, conflicts_with = "method")]
        all_methods: bool,
    },
    /// Run an identity suite: core, dirichlet, fracpart, integrals or all.
    Verify {
        suite: String,
        /// Worker threads.
        #[arg(long)]
        parallel: Option<usize>,
        /// Keep measured runtimes in the output; otherwise they are zero.
        #[arg(long)]
        timings: bool,
    },
    /// Emit a table of values.
    Table {
        #[command(subcommand)]
        kind: Table,
    },
}

#[derive(Subcommand, Debug)]
enum Table {
    /// γ_k(r/q) for k ≤ kmax and reduced r/q with q ≤ qmax.
    #[command(name = "stieltjes-grid")]
    StieltjesGrid {
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[arg(long, default_value_t = 4)]
        qmax: i64,
    },
    /// I_1..I_nmax by reduced quadrature and by the closed form.
    #[command(name = "frac-integrals")]
    FracIntegrals {
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        /// Add a Monte Carlo estimate of I_2 with this many samples.
        #[arg(long)]
        mc_samples: Option<u64>,
    },
    /// L(1), L'(1) and L''(1) for the real character of each modulus.
    #[command(name = "L-derivatives")]
    LDerivatives {
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u32>,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) => 1,
            _ if e.is_convergence_failure() => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let overrides = Overrides {
        abs_tol: cli.abs_tol,
        rel_tol: cli.rel_tol,
        max_refinements: cli.max_refinements,
        output_format: cli.format,
        parallelism: match &cli.command {
            Command::Verify { parallel, .. } => *parallel,
            _ => None,
        },
        seed: cli.seed,
    };
    let config = CliConfig::load(cli.config.as_deref(), std::env::var("STIELTJES_CONFIG").ok())
        .and_then(|c| c.apply(&overrides))
        .map_err(Failure::usage);
    let out = io::stdout();
    let mut w = BufWriter::new(out.lock());
    let result = config.and_then(|cfg| run(&cli.command, &cfg, &mut w));
    let flushed = w.flush();
    match result {
        Ok(code) => {
            if let Err(e) = flushed {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: &Command, cfg: &CliConfig, w: &mut impl Write) -> CmdResult {
    let spec = cfg.spec().map_err(Failure::usage)?;
    match cmd {
        Command::Stieltjes { k, a, method, all_methods } => {
            let a: Argument = a.parse()?;
            let format = cfg.output_format.unwrap_or(OutputFormat::Text);
            if *all_methods {
                cmd_all_methods(*k, a, &spec, format, w)
            } else {
                let method = method.as_deref().map(str::parse::<Method>).transpose()?;
                let v = stieltjes::gamma_k(*k, a, method, &spec)?;
                write_value(&v, format, w)?;
                Ok(0)
            }
        }
        Command::Verify { suite, timings, .. } => cmd_verify(suite, cfg, *timings, w),
        Command::Table { kind } => {
            let format = cfg.output_format.unwrap_or(OutputFormat::Csv);
            cmd_table(kind, cfg, &spec, format, w)
        }
    }
}

fn fmt_value(x: f64) -> String {
    if x.is_finite() && x != 0.0 && (x.abs() >= 1e4 || x.abs() < 1e-3) {
        format!("{x:.15e}")
    } else {
        format!("{x:.16}")
    }
}

fn write_value(v: &StieltjesValue, format: OutputFormat, w: &mut impl Write) -> Result<(), Failure> {
    let a = v.a_exact.map(|r| r.to_string()).unwrap_or_else(|| v.a.to_string());
    match format {
        OutputFormat::Text => {
            writeln!(w, "gamma_{}({}) = {}", v.k, a, fmt_value(v.value))?;
            writeln!(w, "err_est = {:.2e}", v.err_est)?;
            writeln!(w, "method = {}", v.method)?;
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *w, v).map_err(|e| Failure::usage(e.to_string()))?;
            writeln!(w)?;
        }
        OutputFormat::Csv => {
            let mut c = csv::Writer::from_writer(&mut *w);
            c.write_record(["k", "a", "value", "err_est", "method"]).map_err(csv_err)?;
            c.write_record([v.k.to_string(), a, v.value.to_string(), v.err_est.to_string(), v.method.to_string()])
                .map_err(csv_err)?;
            c.flush()?;
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

#[derive(Serialize)]
struct MethodRow {
    method: Method,
    value: Option<f64>,
    err_est: Option<f64>,
    error: Option<String>,
}

#[derive(Serialize)]
struct MethodTable {
    k: u32,
    a: String,
    methods: Vec<MethodRow>,
    max_pairwise_deviation: f64,
}

fn cmd_all_methods(k: u32, a: Argument, spec: &QuadratureSpec, format: OutputFormat, w: &mut impl Write) -> CmdResult {
    if !(a.value() > 0.0) {
        return Err(Failure::usage(format!("Stieltjes constants need a > 0, got {a}")));
    }
    let results = stieltjes::gamma_k_all_methods(k, a, spec);
    let rows: Vec<MethodRow> = results
        .into_iter()
        .map(|(method, r)| match r {
            Ok(v) => MethodRow { method, value: Some(v.value), err_est: Some(v.err_est), error: None },
            Err(e) => MethodRow { method, value: None, err_est: None, error: Some(e.to_string()) },
        })
        .collect();
    let values: Vec<f64> = rows.iter().filter_map(|r| r.value).collect();
    if values.is_empty() {
        let msg = rows.iter().filter_map(|r| r.error.clone()).collect::<Vec<_>>().join("; ");
        return Err(Failure { code: 3, message: msg });
    }
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let table = MethodTable { k, a: a.to_string(), methods: rows, max_pairwise_deviation: max - min };
    match format {
        OutputFormat::Text => {
            writeln!(w, "gamma_{}({})", table.k, table.a)?;
            for r in &table.methods {
                match (r.value, r.err_est, &r.error) {
                    (Some(v), Some(e), _) => writeln!(w, "  {:<22} {:>24}  err {:.2e}", r.method.as_str(), fmt_value(v), e)?,
                    (_, _, Some(msg)) => writeln!(w, "  {:<22} failed: {msg}", r.method.as_str())?,
                    _ => {}
                }
            }
            writeln!(w, "max pairwise deviation = {:.3e}", table.max_pairwise_deviation)?;
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *w, &table).map_err(|e| Failure::usage(e.to_string()))?;
            writeln!(w)?;
        }
        OutputFormat::Csv => {
            let mut c = csv::Writer::from_writer(&mut *w);
            for r in &table.methods {
                c.serialize(r).map_err(csv_err)?;
            }
            c.flush()?;
        }
    }
    Ok(0)
}

fn cmd_verify(suite: &str, cfg: &CliConfig, timings: bool, w: &mut impl Write) -> CmdResult {
    suite.parse::<Selection>()?;
    let mut reports: Vec<IdentityReport> =
        identities::run_suite_with(suite, cfg.parallelism, &identities::suite_spec())?;
    if !timings {
        for r in &mut reports {
            r.runtime_ms = 0.0;
        }
    }
    match cfg.output_format.unwrap_or(OutputFormat::Text) {
        OutputFormat::Json => identities::write_json(&reports, &mut *w)?,
        OutputFormat::Csv => identities::write_csv(&reports, &mut *w)?,
        OutputFormat::Text => identities::write_text(&reports, &mut *w)?,
    }
    let failures = identities::gold_failures(&reports);
    for f in &failures {
        eprintln!("GOLD failure: {} (diff {:.3e} > tol {:.1e})", f.id, f.abs_diff, f.tol);
    }
    Ok(if failures.is_empty() { 0 } else { 1 })
}

fn write_rows<T: Serialize>(rows: &[T], format: OutputFormat, w: &mut impl Write) -> Result<(), Failure> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *w, rows).map_err(|e| Failure::usage(e.to_string()))?;
            writeln!(w)?;
        }
        // text tables are the CSV rows, which read fine in a terminal
        OutputFormat::Csv | OutputFormat::Text => {
            let mut c = csv::Writer::from_writer(&mut *w);
            for r in rows {
                c.serialize(r).map_err(csv_err)?;
            }
            c.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct GridRow {
    k: u32,
    a: String,
    value: f64,
    err_est: f64,
}

#[derive(Serialize)]
struct FracRow {
    n: u32,
    route: String,
    value: f64,
    err_est: f64,
}

#[derive(Serialize)]
struct LRow {
    k: String,
    parity: i8,
    primitive: bool,
    l1: f64,
    l1_prime: f64,
    l1_prime_closed: f64,
    l1_second: f64,
}

fn frac_row(r: FracIntegralResult) -> FracRow {
    FracRow { n: r.n, route: r.route.to_string(), value: r.value, err_est: r.err_est }
}

fn character_row(c: &CharacterTable, spec: &QuadratureSpec) -> Result<LRow, Failure> {
    Ok(LRow {
        k: c.label(),
        parity: c.parity,
        primitive: c.is_primitive(),
        l1: dirichlet::l_function(c, 1.0, spec)?,
        l1_prime: dirichlet::l_derivative_at_one_integral(c, 1, spec)?,
        l1_prime_closed: dirichlet::l_prime_one(c, spec)?,
        l1_second: dirichlet::l_derivative_at_one_integral(c, 2, spec)?,
    })
}

fn cmd_table(kind: &Table, cfg: &CliConfig, spec: &QuadratureSpec, format: OutputFormat, w: &mut impl Write) -> CmdResult {
    match kind {
        Table::StieltjesGrid { kmax, qmax } => {
            if *kmax > MAX_GRID_K || !(1..=MAX_GRID_Q).contains(qmax) {
                return Err(Failure::usage(format!(
                    "need kmax ≤ {MAX_GRID_K} and 1 ≤ qmax ≤ {MAX_GRID_Q}, got kmax={kmax}, qmax={qmax}"
                )));
            }
            let rows: Vec<GridRow> = stieltjes::stieltjes_grid(*kmax, *qmax, spec)?
                .into_iter()
                .map(|v| GridRow {
                    k: v.k,
                    a: v.a_exact.map(|r| r.to_string()).unwrap_or_else(|| v.a.to_string()),
                    value: v.value,
                    err_est: v.err_est,
                })
                .collect();
            write_rows(&rows, format, w)?;
        }
        Table::FracIntegrals { nmax, mc_samples } => {
            if !(1..=MAX_REDUCED_ORDER).contains(nmax) {
                return Err(Failure::usage(format!("need 1 ≤ nmax ≤ {MAX_REDUCED_ORDER}, got {nmax}")));
            }
            let mut rows = Vec::new();
            for n in 1..=*nmax {
                rows.push(frac_row(fracpart::i_n_reduced(n, spec)?));
                rows.push(frac_row(fracpart::i_n_closed(n, spec)?));
            }
            if let Some(samples) = mc_samples {
                if *samples == 0 {
                    return Err(Failure::usage("mc-samples must be positive"));
                }
                rows.push(frac_row(fracpart::i2_montecarlo(*samples, cfg.seed)?));
            }
            write_rows(&rows, format, w)?;
        }
        Table::LDerivatives { k } => {
            let chars = k
                .iter()
                .map(|&m| dirichlet::real_character(m).map_err(|e| Failure::usage(format!("modulus {m}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = chars.iter().map(|c| character_row(c, spec)).collect::<Result<Vec<_>, _>>()?;
            write_rows(&rows, format, w)?;
        }
    }
    Ok(0)
}
