use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use polynet::enumeration::{enumerate_with, read_csv, CsvSeries, Ensemble, EnsembleKind, Execution, Lattice, PolygonWeighting};
use polynet::fitting::{
    fit_cross_checked, fit_entropic_series, fit_nu_series, fit_power_series, FitMethod, FitResult, CSV_HEADER,
};
use polynet::lab::run_lab;
use polynet::network::{census, gamma_exponent_with, parse_network, Dispersity, NetworkError};
use polynet::sle::{delta_lj, kpz_u, kpz_u_inverse, kpz_v, x_bulk_lj, x_surface_lj, Kappa};
use polynet::tables::{x_bulk, x_surface, BoundaryCondition, DimensionSetting, UniversalityClass};
use polynet::verify::{find_suite, SuiteReport, SUITES};
use polynet::ExactScalar;

/// Exact exponents of confined polymer networks, lattice walk enumeration
/// and series fits.
#[derive(Parser)]
#[command(name = "polynet", version)]
struct Cli {
    /// Suppress '#' metadata lines.
    #[arg(long, global = true)]
    no_meta: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bulk and surface L-leg exponents, one `x_L|x_L^S` row per L.
    Exponent(ExponentArgs),
    /// Configuration exponent of a network file.
    Gamma(GammaArgs),
    /// KPZ maps and multiple-SLE exponent tables.
    Kpz(KpzArgs),
    /// Exact enumeration of lattice walks and polygons, as CSV.
    Enumerate(EnumerateArgs),
    /// Fit exponents to an enumeration CSV, or run the acceptance lab.
    Fit(FitArgs),
    /// Run the exact-identity suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ExponentArgs {
    /// saw, theta, brownian or maw.
    #[arg(long)]
    class: UniversalityClass,
    /// ordinary, special or mixed.
    #[arg(long, default_value = "ordinary")]
    bc: BoundaryCondition,
    /// 2d, eps1, eps2 or d=<rational>.
    #[arg(long, default_value = "2d")]
    setting: DimensionSetting,
    #[arg(long = "L-max", default_value_t = 5)]
    l_max: usize,
}

#[derive(Args)]
struct GammaArgs {
    network: PathBuf,
    #[arg(long, default_value = "saw")]
    class: UniversalityClass,
    /// Boundary condition given to plain `surface` vertices.
    #[arg(long, default_value = "ordinary")]
    bc_default: BoundaryCondition,
    #[arg(long, default_value = "2d")]
    setting: DimensionSetting,
    /// Fix only the total length instead of every chain length.
    #[arg(long)]
    total_length: bool,
}

#[derive(Args)]
struct KpzArgs {
    /// Positive rational SLE parameter.
    #[arg(long)]
    kappa: Kappa,
    /// Print U and V of this quantum dimension.
    #[arg(long, conflicts_with = "x")]
    delta: Option<ExactScalar>,
    /// Print the positive inverse of U at this rational x.
    #[arg(long)]
    x: Option<ExactScalar>,
    #[arg(long = "L-max", default_value_t = 5)]
    l_max: u32,
    /// Number of non-intersection conditionings.
    #[arg(long, default_value_t = 0)]
    j: u32,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value = "square")]
    lattice: Lattice,
    /// free, taw, arch, bridge or polygon.
    #[arg(long, default_value = "free")]
    ensemble: EnsembleKind,
    #[arg(long, default_value_t = 20)]
    n_max: usize,
    /// Surface fugacity `a`, e.g. 1, 4439/2500 or 1+sqrt(2).
    #[arg(long, default_value = "1")]
    fugacity: ExactScalar,
    /// Polygon weighting: unit or contact-count.
    #[arg(long, default_value = "unit")]
    weighting: PolygonWeighting,
    #[command(flatten)]
    threads: Threads,
    /// Write the CSV here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Threads {
    /// Worker threads [default: POLYNET_THREADS, else all cores].
    #[arg(long, env = "POLYNET_THREADS")]
    threads: Option<usize>,
    /// Run the search without a thread pool.
    #[arg(long)]
    sequential: bool,
}

impl Threads {
    fn execution(&self) -> Result<Execution, Failure> {
        if self.sequential {
            return Ok(Execution::Sequential);
        }
        let threads = match self.threads {
            Some(0) => return Err(Failure::Usage("--threads must be at least 1".into())),
            Some(t) => t,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(Execution::Parallel { threads })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    ThreePoint,
    Ratio,
    /// Both entropic methods and their agreement.
    Both,
}

#[derive(Args)]
struct FitArgs {
    /// Enumeration CSV (`N,count[,r2_sum]`).
    #[arg(required_unless_present = "acceptance")]
    census: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "three-point")]
    method: MethodArg,
    /// Fit nu from the r2_sum column instead of an entropic exponent.
    #[arg(long, conflicts_with = "weighted")]
    nu: bool,
    /// Second census of the same configurations under another weighting;
    /// fits the power of N in the ratio of the two.
    #[arg(long)]
    weighted: Option<PathBuf>,
    /// Label for the quantity column [default: from the ensemble metadata].
    #[arg(long)]
    quantity: Option<String>,
    /// Enumerate and fit every lab quantity against the frozen tolerances.
    #[arg(long, conflicts_with_all = ["census", "nu", "weighted"])]
    acceptance: bool,
    #[command(flatten)]
    threads: Threads,
}

#[derive(Args)]
struct VerifyArgs {
    /// Print the suite names and exit.
    #[arg(long)]
    list: bool,
    /// Run only these suites.
    #[arg(long)]
    suite: Vec<String>,
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Check(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

struct Out {
    meta: bool,
    text: String,
}

impl Out {
    fn new(meta: bool) -> Self {
        Out { meta, text: String::new() }
    }

    fn meta(&mut self, line: impl AsRef<str>) {
        if self.meta {
            self.text.push_str("# ");
            self.text.push_str(line.as_ref());
            self.text.push('\n');
        }
    }

    fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_exponent(args: &ExponentArgs, out: &mut Out) -> Result<(), Failure> {
    out.meta(format!("x_L|x_L^S class={} bc={} setting={}", args.class, args.bc, args.setting));
    for l in 1..=args.l_max {
        let bulk = x_bulk(l, args.class, &args.setting).map_err(usage)?;
        let surface = x_surface(l, args.class, args.bc, &args.setting).map_err(usage)?;
        out.line(format!("{bulk}|{surface}"));
    }
    Ok(())
}

fn cmd_gamma(args: &GammaArgs, out: &mut Out) -> Result<(), Failure> {
    let text = read_file(&args.network)?;
    let net = parse_network(&text).map_err(|e| Failure::Input(format!("{}: {e}", args.network.display())))?;
    let net = net.with_surface_bc(args.bc_default);
    let dispersity = if args.total_length { Dispersity::FixedTotalLength } else { Dispersity::Monodisperse };
    let gamma = gamma_exponent_with(&net, args.class, &args.setting, dispersity).map_err(|e| match e {
        NetworkError::Exponent(_) => usage(e),
        other => Failure::Input(format!("{}: {other}", args.network.display())),
    })?;
    out.meta(format!("network: {}", args.network.display()));
    out.meta(format!(
        "class={} bc_default={} setting={} lengths={}",
        args.class,
        args.bc_default,
        args.setting,
        if args.total_length { "fixed-total" } else { "monodisperse" }
    ));
    out.line(census(&net).to_string());
    out.line(format!("gamma = {gamma}"));
    Ok(())
}

fn cmd_kpz(args: &KpzArgs, out: &mut Out) -> Result<(), Failure> {
    let k = &args.kappa;
    out.meta(format!("kappa={k} phase={:?}", k.phase()));
    if let Some(delta) = &args.delta {
        out.line(format!("U = {}", kpz_u(k, delta)));
        out.line(format!("V = {}", kpz_v(k, delta)));
        return Ok(());
    }
    if let Some(x) = &args.x {
        out.line(format!("U^-1 = {}", kpz_u_inverse(k, x).map_err(usage)?));
        return Ok(());
    }
    out.meta("L|j|Delta_{L,j}|x^S_{L,j}|x_{L,j}");
    for l in 1..=args.l_max {
        if args.j > l + 1 {
            continue;
        }
        let surface = x_surface_lj(k, l, args.j).map_err(usage)?;
        let bulk = if args.j <= l { x_bulk_lj(k, l, args.j).map_err(usage)?.to_string() } else { "-".into() };
        out.line(format!("{l}|{}|{}|{surface}|{bulk}", args.j, delta_lj(k, l, args.j).value));
    }
    Ok(())
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut Out) -> Result<(), Failure> {
    let ensemble = Ensemble::new(args.ensemble)
        .with_fugacity(args.fugacity.clone())
        .map_err(usage)?
        .with_weighting(args.weighting);
    let exec = args.threads.execution()?;
    let start = Instant::now();
    let census = enumerate_with(args.lattice, &ensemble, args.n_max, exec).map_err(usage)?;
    let extra = [format!("execution: {exec:?}"), format!("wall_time_s: {:.3}", start.elapsed().as_secs_f64())];
    let csv = census.to_csv(out.meta, &extra);
    match &args.output {
        Some(path) => fs::write(path, csv).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => out.text.push_str(&csv),
    }
    Ok(())
}

fn read_series(path: &Path) -> Result<CsvSeries, Failure> {
    read_csv(&read_file(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn default_quantity(series: &CsvSeries) -> &'static str {
    let ensemble = series.metadata.iter().find_map(|m| m.strip_prefix("ensemble: "));
    match ensemble {
        Some("free") => "gamma",
        Some("taw") => "gamma_1",
        Some("arch") => "gamma_11",
        Some("bridge") => "gamma_b",
        Some("polygon") => "gamma_p",
        _ => "exponent",
    }
}

fn cmd_fit(args: &FitArgs, out: &mut Out) -> Result<(), Failure> {
    if args.acceptance {
        return fit_acceptance(args, out);
    }
    let path = args.census.as_deref().expect("clap requires a census");
    let series = read_series(path)?;
    let counts: Vec<(usize, f64)> = series.rows.iter().map(|r| (r.0, r.1)).collect();
    let fit_failed = |e: polynet::fitting::FitError| Failure::Check(format!("{}: {e}", path.display()));
    let mut rows: Vec<(String, FitResult)> = Vec::new();
    if args.nu {
        let moments = series
            .rows
            .iter()
            .map(|&(n, c, r2)| r2.map(|r2| (n, r2 / c)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Failure::Input(format!("{}: no r2_sum column", path.display())))?;
        rows.push((args.quantity.clone().unwrap_or("nu".into()), fit_nu_series(&moments).map_err(fit_failed)?));
    } else if let Some(weighted) = &args.weighted {
        let other = read_series(weighted)?;
        let ratio: Vec<(usize, f64)> = counts
            .iter()
            .filter_map(|&(n, c)| other.rows.iter().find(|r| r.0 == n).map(|r| (n, r.1 / c)))
            .collect();
        rows.push((args.quantity.clone().unwrap_or("weighting_shift".into()), fit_power_series(&ratio).map_err(fit_failed)?));
    } else {
        let q = args.quantity.clone().unwrap_or(default_quantity(&series).into());
        match args.method {
            MethodArg::ThreePoint => rows.push((q, fit_entropic_series(&counts, FitMethod::ThreePointSolve).map_err(fit_failed)?)),
            MethodArg::Ratio => rows.push((q, fit_entropic_series(&counts, FitMethod::RatioExtrapolation).map_err(fit_failed)?)),
            MethodArg::Both => {
                let both = fit_cross_checked(&counts).map_err(fit_failed)?;
                out.meta(format!("methods {}", if both.stable() { "agree within their spreads (stable)" } else { "disagree" }));
                rows.push((q.clone(), both.three_point));
                rows.push((q, both.ratio));
            }
        }
    }
    out.meta(format!("census: {}", path.display()));
    if !args.nu && args.weighted.is_none() {
        for (q, fit) in &rows {
            out.meta(format!("{q} {}: mu = {:.6}", fit.method, fit.mu_estimate));
        }
    }
    out.line(CSV_HEADER);
    for (q, fit) in &rows {
        out.line(fit.csv_row(q));
    }
    Ok(())
}

fn fit_acceptance(args: &FitArgs, out: &mut Out) -> Result<(), Failure> {
    let exec = args.threads.execution()?;
    let start = Instant::now();
    let report = run_lab(exec).map_err(|e| Failure::Check(e.to_string()))?;
    for check in &report.checks {
        out.meta(format!("criterion {}: {check}", check.criterion));
    }
    out.meta(format!("wall_time_s: {:.3}", start.elapsed().as_secs_f64()));
    out.line(CSV_HEADER);
    for check in &report.checks {
        out.line(check.fit_result().csv_row(&check.quantity));
    }
    if report.passed() {
        Ok(())
    } else {
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed()).map(|c| c.quantity.as_str()).collect();
        Err(Failure::Check(format!("outside tolerance: {}", failed.join(", "))))
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut Out) -> Result<(), Failure> {
    if args.list {
        for s in SUITES {
            out.line(s.name);
        }
        return Ok(());
    }
    let suites = if args.suite.is_empty() {
        SUITES.iter().collect::<Vec<_>>()
    } else {
        args.suite
            .iter()
            .map(|name| find_suite(name).ok_or_else(|| usage(format!("unknown suite {name:?}; see verify --list"))))
            .collect::<Result<Vec<_>, _>>()?
    };
    let start = Instant::now();
    let reports: Vec<SuiteReport> = suites.iter().map(|s| s.run()).collect();
    for r in &reports {
        out.line(r.summary_line());
        for f in r.failures.iter().take(10) {
            out.line(format!("    {f}"));
        }
    }
    out.meta(format!("wall_time_s: {:.3}", start.elapsed().as_secs_f64()));
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        out.line(format!("all {} suites passed", reports.len()));
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} of {} suites failed", reports.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(!cli.no_meta);
    let result = match &cli.command {
        Command::Exponent(a) => cmd_exponent(a, &mut out),
        Command::Gamma(a) => cmd_gamma(a, &mut out),
        Command::Kpz(a) => cmd_kpz(a, &mut out),
        Command::Enumerate(a) => cmd_enumerate(a, &mut out),
        Command::Fit(a) => cmd_fit(a, &mut out),
        Command::Verify(a) => cmd_verify(a, &mut out),
    };
    print!("{}", out.text);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("polynet: {e}");
            ExitCode::from(e.code())
        }
    }
}
