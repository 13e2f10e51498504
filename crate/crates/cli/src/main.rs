//! `alpha-spectral`: compute alpha-spectral radii, densities and extremal graphs.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 numeric non-convergence
//! or failed verification, 3 infeasible instance.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use alpha_spectral::experiments::{experiment_names, run_experiment, RunReport, DEFAULT_SEED};
use alpha_spectral::extremal::{ex_col, spectral_extremal, spex_col, turan_number, ExtremalReport};
use alpha_spectral::io::{
    builtin_graph, builtin_pattern, parse_alpha_grid, parse_hypergraph, parse_pattern, sweep_csv, to_json,
    write_hypergraph, SpectralRecord,
};
use alpha_spectral::pattern::{pattern_density, DensityConfig, DensityMethod, Pattern};
use alpha_spectral::spectral::{alpha_spectral_radius, alpha_sweep, Method, SolverConfig};
use alpha_spectral::{Error, Hypergraph};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// `print!` that ends the process quietly when stdout is a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {
        stdout_result(write!(std::io::stdout(), $($t)*))
    };
}

macro_rules! outln {
    ($($t:tt)*) => {
        stdout_result(writeln!(std::io::stdout(), $($t)*))
    };
}

#[derive(Parser)]
#[command(
    name = "alpha-spectral",
    version,
    about = "Alpha-spectral radii and Turán-type extremal problems for uniform hypergraphs"
)]
struct Cli {
    /// Worker threads for restarts and searches (1 = sequential).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Seed for randomized restarts and experiments.
    #[arg(long, global = true, env = "ALPHA_SPECTRAL_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute lambda^(alpha) of one hypergraph.
    Spectral {
        #[command(flatten)]
        graph: GraphSource,
        /// Norm exponent, at least 1.
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        solver: SolverArgs,
        /// Print the JSON record instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Run a registered experiment, or `all`.
    Verify {
        name: String,
        /// Write the JSON report(s) here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write a builtin construction in the hypergraph text format.
    Construct {
        /// Builder: edge, complete, turan, chromatic, kab, cycle, path, frl.
        builder: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Edge density of a pattern-colorable family.
    Density {
        /// Pattern file or builtin such as `chromatic:k=2,r=3`.
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value_t = DensityChoice::Simplex)]
        method: DensityChoice,
        /// Largest order for the finite-n method.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Edge (`ex`) or spectral (`spex`) extremal graphs.
    Extremal {
        /// Forbidden graph (file or builtin); repeatable.
        #[arg(long = "forbid", conflicts_with = "pattern")]
        forbid: Vec<String>,
        /// Search `Col(P)` instead (file or builtin).
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Spex)]
        mode: Mode,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Uniformity; inferred from the forbidden graphs or pattern when omitted.
        #[arg(long)]
        r: Option<usize>,
        /// Norm exponent used in `spex` mode.
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        json: bool,
    },
    /// CSV of lambda^(alpha) over an alpha grid.
    Sweep {
        #[command(flatten)]
        graph: GraphSource,
        /// `a,b,c`, `start:stop:log[:count]` or `start:stop:lin[:count]`.
        #[arg(long)]
        alphas: String,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Hypergraph text file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Builtin such as `K_3`, `edge:r=3` or `turan:n=6,l=3,r=2`.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
struct SolverArgs {
    /// `auto`, `power`, `projected-gradient` or `simplex`.
    #[arg(long, default_value_t = Method::Auto)]
    method: Method,
    /// Starts for the multi-start methods, the uniform vector included [default: 32].
    #[arg(long)]
    restarts: Option<usize>,
    /// Target for the eigen-equation residual [default: 1e-10].
    #[arg(long)]
    tolerance: Option<f64>,
    /// Iteration cap per start [default: 100000].
    #[arg(long)]
    max_iterations: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DensityChoice {
    Simplex,
    FiniteN,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Ex,
    Spex,
}

/// Error carrying the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SolverFailure(_) => 2,
            Error::NotColorable | Error::TooLarge(_) | Error::SearchBudget(_) | Error::EmptyClass(_) => 3,
            _ => 1,
        };
        Self { code, message: e.to_string() }
    }
}

fn stdout_result(r: std::io::Result<()>) {
    if let Err(e) = r {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn load_graph(src: &GraphSource) -> Result<Hypergraph, Failure> {
    match (&src.file, &src.builtin) {
        (Some(path), _) => {
            let text = read_file(path)?;
            parse_hypergraph(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
        (None, Some(spec)) => Ok(builtin_graph(spec)?),
        (None, None) => Err(usage("give --file or --builtin")),
    }
}

/// A path when such a file exists, a builtin spec otherwise.
fn graph_arg(arg: &str) -> Result<Hypergraph, Failure> {
    if Path::new(arg).is_file() {
        load_graph(&GraphSource { file: Some(arg.into()), builtin: None })
    } else {
        Ok(builtin_graph(arg)?)
    }
}

fn pattern_arg(arg: &str) -> Result<Pattern, Failure> {
    if Path::new(arg).is_file() {
        let text = read_file(Path::new(arg))?;
        parse_pattern(&text).map_err(|e| usage(format!("{arg}: {e}")))
    } else {
        Ok(builtin_pattern(arg)?)
    }
}

fn solver_config(args: &SolverArgs, seed: u64) -> SolverConfig {
    let mut cfg = SolverConfig::default().with_seed(seed).with_method(args.method);
    if let Some(r) = args.restarts {
        cfg = cfg.with_restarts(r);
    }
    if let Some(t) = args.tolerance {
        cfg.tolerance = t;
    }
    if let Some(m) = args.max_iterations {
        cfg.max_iterations = m;
    }
    cfg
}

fn json(report: &str, value: &impl serde::Serialize) -> Result<String, Failure> {
    Ok(to_json(report, value)? + "\n")
}

fn cmd_spectral(g: &GraphSource, alpha: f64, solver: &SolverArgs, as_json: bool, seed: u64) -> Result<(), Failure> {
    let h = load_graph(g)?;
    let est = alpha_spectral_radius(&h, alpha, &solver_config(solver, seed))?;
    let record = SpectralRecord::from(&est);
    if as_json {
        out!("{}", json("spectral", &record)?);
    } else {
        outln!("lambda          {:.12}", record.lambda);
        outln!("residual        {:.3e}", record.residual);
        outln!("x_min           {:.12}", record.x_min);
        match record.principal_ratio {
            Some(g) => outln!("principal ratio {g:.12}"),
            None => outln!("principal ratio inf"),
        }
        outln!("method          {}", record.method);
        outln!("iterations      {}", record.iterations);
        outln!("converged       {}", record.converged);
    }
    if est.converged {
        Ok(())
    } else {
        Err(Failure { code: 2, message: format!("did not converge (residual {:.3e})", est.residual) })
    }
}

fn cmd_verify(name: &str, out: Option<&Path>, seed: u64) -> Result<(), Failure> {
    let names: Vec<&str> = if name == "all" {
        experiment_names()
    } else if experiment_names().contains(&name) {
        vec![name]
    } else {
        return Err(usage(format!("unknown experiment `{name}`; registered: all, {}", experiment_names().join(", "))));
    };
    let mut reports: Vec<RunReport> = Vec::new();
    for n in names {
        let report = run_experiment(n, seed)?;
        outln!("{}", report.markdown());
        reports.push(report);
    }
    if let Some(path) = out {
        let text = if reports.len() == 1 { json("run-report", &reports[0])? } else { json("run-reports", &reports)? };
        emit(Some(path), &text)?;
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.experiment.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure { code: 2, message: format!("checks failed in: {}", failed.join(", ")) })
    }
}

fn cmd_construct(builder: &str, params: [(&str, Option<usize>); 6], output: Option<&Path>) -> Result<(), Failure> {
    let kv: Vec<String> = params.iter().filter_map(|(k, v)| v.map(|v| format!("{k}={v}"))).collect();
    let spec = if kv.is_empty() { builder.to_string() } else { format!("{builder}:{}", kv.join(",")) };
    let h = builtin_graph(&spec)?;
    emit(output, &write_hypergraph(&h))
}

fn cmd_density(
    pattern: &str,
    method: DensityChoice,
    n_max: Option<usize>,
    as_json: bool,
    seed: u64,
) -> Result<(), Failure> {
    let p = pattern_arg(pattern)?;
    let cfg = DensityConfig { solver: DensityConfig::default().solver.with_seed(seed), n_max };
    let methods: &[DensityMethod] = match method {
        DensityChoice::Simplex => &[DensityMethod::SimplexOptimization],
        DensityChoice::FiniteN => &[DensityMethod::FiniteNRatio],
        DensityChoice::Both => &[DensityMethod::SimplexOptimization, DensityMethod::FiniteNRatio],
    };
    let estimates = methods.iter().map(|&m| pattern_density(&p, m, &cfg)).collect::<Result<Vec<_>, _>>()?;
    if as_json {
        out!("{}", json("density", &estimates)?);
    } else {
        for e in &estimates {
            let label = match e.method {
                DensityMethod::SimplexOptimization => "simplex",
                DensityMethod::FiniteNRatio => "finite-n",
            };
            outln!("{label:<9} {:.12}", e.value);
        }
    }
    Ok(())
}

struct ExtremalArgs<'a> {
    forbid: &'a [String],
    pattern: Option<&'a str>,
    mode: Mode,
    n: usize,
    r: Option<usize>,
    alpha: f64,
    as_json: bool,
}

fn cmd_extremal(a: ExtremalArgs<'_>, cfg: &SolverConfig) -> Result<(), Failure> {
    let report: ExtremalReport = if let Some(spec) = a.pattern {
        let p = pattern_arg(spec)?;
        if a.r.is_some_and(|r| r != p.uniformity()) {
            return Err(usage("--r disagrees with the pattern's uniformity"));
        }
        match a.mode {
            Mode::Ex => ex_col(&p, a.n)?,
            Mode::Spex => spex_col(&p, a.n, a.alpha, cfg)?,
        }
    } else {
        let family = a.forbid.iter().map(|s| graph_arg(s)).collect::<Result<Vec<_>, _>>()?;
        let r = match (a.r, family.first()) {
            (Some(r), _) => r,
            (None, Some(f)) => f.uniformity(),
            (None, None) => return Err(usage("give --forbid, --pattern, or --r for the unrestricted family")),
        };
        match a.mode {
            Mode::Ex => turan_number(&family, a.n, r)?,
            Mode::Spex => spectral_extremal(&family, a.n, r, a.alpha, cfg)?,
        }
    };
    if a.as_json {
        out!("{}", json("extremal", &report)?);
    } else {
        let what = if a.mode == Mode::Ex { "ex" } else { "spex" };
        outln!("{what}(n = {}, r = {}) = {:.12}", report.n, report.r, report.optimum);
        outln!("search: {:?}, {} candidates, {} witness(es)", report.mode, report.candidates, report.witnesses.len());
        for w in &report.witnesses {
            out!("{}", write_hypergraph(&w.graph));
        }
        for audit in report.audits.iter().filter(|x| !x.held) {
            outln!("audit failed: {}", audit.name);
        }
    }
    Ok(())
}

fn cmd_sweep(
    g: &GraphSource,
    alphas: &str,
    solver: &SolverArgs,
    output: Option<&Path>,
    seed: u64,
) -> Result<(), Failure> {
    let h = load_graph(g)?;
    let grid = parse_alpha_grid(alphas)?;
    let estimates = alpha_sweep(&h, &grid, &solver_config(solver, seed))?;
    emit(output, &sweep_csv(&estimates))?;
    match estimates.iter().find(|e| !e.converged) {
        Some(e) => Err(Failure { code: 2, message: format!("alpha = {} did not converge", e.vector.alpha) }),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if cli.threads == 0 {
        return Err(usage("--threads must be positive"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .map_err(|e| usage(format!("thread pool: {e}")))?;
    let seed = cli.seed;
    match &cli.command {
        Command::Spectral { graph, alpha, solver, json } => cmd_spectral(graph, *alpha, solver, *json, seed),
        Command::Verify { name, json } => cmd_verify(name, json.as_deref(), seed),
        Command::Construct { builder, n, l, r, k, a, b, output } => cmd_construct(
            builder,
            [("n", *n), ("l", *l), ("k", *k), ("r", *r), ("a", *a), ("b", *b)],
            output.as_deref(),
        ),
        Command::Density { pattern, method, n_max, json } => cmd_density(pattern, *method, *n_max, *json, seed),
        Command::Extremal { forbid, pattern, mode, n, r, alpha, solver, json } => cmd_extremal(
            ExtremalArgs {
                forbid,
                pattern: pattern.as_deref(),
                mode: *mode,
                n: *n,
                r: *r,
                alpha: *alpha,
                as_json: *json,
            },
            &solver_config(solver, seed),
        ),
        Command::Sweep { graph, alphas, solver, output } => cmd_sweep(graph, alphas, solver, output.as_deref(), seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
