//! Thin command-line front end. Every subcommand maps onto one library
//! operation and formats its report; no algebra lives here.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use iterants::calculus::{brownian_path, verify_commutator_identity, TemporalFunction, TimeGrid};
use iterants::eigenform::{detect_orbit, iterate_boxes, reentry_eigenform, unfold, OrbitStatus};
use iterants::iterant::{i_squared_trace, IterantElement};
use iterants::quantum::{
    derive_heisenberg, euclidean_q, minkowski_q, nexus_substitute, wave_convergence_order,
    FourPoint, PhysicalConstants, PlaneWaveParams,
};
use iterants::rng::SplitMix64;
use iterants::scalar::{Backend, Scalar};
use iterants::selftest;

#[derive(Parser)]
#[command(
    name = "iterants",
    version,
    about = "Iterant algebra, eigenforms and discrete calculus demos"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate i*i step by step down to [-1,-1] = -1
    IterantDemo(FormatArgs),
    /// Nested boxes, reentry unfolding and orbits of x -> -1/x
    Eigenform(EigenformArgs),
    /// Seeded random walk with increments ±sqrt(K dt)
    Brownian(BrownianArgs),
    /// Check [x, Dx] = J (dx)^2 / dt on a random rational series
    CommutatorVerify(CommutatorArgs),
    /// Replace t by it in the Euclidean quadratic form
    Minkowski(MinkowskiArgs),
    /// Derive [p,q] = i hbar through the checked substitution chain
    Heisenberg(HeisenbergArgs),
    /// Measure forward-difference convergence against ik psi
    WaveCheck(WaveArgs),
    /// Run the full invariant suite and print a pass/fail table
    Selftest(FormatArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct FormatArgs {
    /// Output format
    #[arg(long = "output-format", value_enum, default_value = "text")]
    output_format: OutputFormat,
    /// Write the artifact to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EigenformArgs {
    #[command(flatten)]
    format: FormatArgs,
    /// Unfolding depth for the reentry eigenform
    #[arg(long, default_value_t = 4)]
    steps: usize,
}

#[derive(Args)]
struct BrownianArgs {
    #[command(flatten)]
    format: FormatArgs,
    /// Diffusion constant K
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Time step
    #[arg(long, default_value_t = 0.01)]
    dt: f64,
    /// Number of increments
    #[arg(long, default_value_t = 1000)]
    steps: usize,
    /// Seed for the sign stream
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct CommutatorArgs {
    #[command(flatten)]
    format: FormatArgs,
    /// Grid increments (the series has steps + 1 samples)
    #[arg(long, default_value_t = 64)]
    steps: usize,
    /// Time step as exact decimal or ratio text
    #[arg(long, default_value = "1")]
    dt: String,
    /// Seed for the sampled series
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct MinkowskiArgs {
    #[command(flatten)]
    format: FormatArgs,
    /// Number of random four-points to verify
    #[arg(long, default_value_t = 8)]
    steps: usize,
    /// Seed for the sampled points
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct HeisenbergArgs {
    #[command(flatten)]
    format: FormatArgs,
    /// Planck constant as rational text, e.g. 3/2
    #[arg(long, default_value = "1")]
    hbar: String,
    /// Mass as rational text
    #[arg(long, default_value = "1")]
    mass: String,
}

#[derive(Args)]
struct WaveArgs {
    #[command(flatten)]
    format: FormatArgs,
    /// Wave number k
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Base spatial step; the check also runs at dt/10 and dt/100
    #[arg(long, default_value_t = 0.1)]
    dt: f64,
    /// Grid increments per step size
    #[arg(long, default_value_t = 32)]
    steps: usize,
}

enum CliError {
    /// Bad flag values or an unsupported format for the command.
    Usage(String),
    Io(std::io::Error),
}

impl From<iterants::Error> for CliError {
    fn from(e: iterants::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

type CliResult = Result<bool, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            eprintln!("run `iterants --help` for usage");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::IterantDemo(format) => iterant_demo(format),
        Command::Eigenform(args) => eigenform_demo(args),
        Command::Brownian(args) => brownian(args),
        Command::CommutatorVerify(args) => commutator_verify(args),
        Command::Minkowski(args) => minkowski(args),
        Command::Heisenberg(args) => heisenberg(args),
        Command::WaveCheck(args) => wave_check(args),
        Command::Selftest(format) => run_selftest(format),
    }
}

fn emit(format: &FormatArgs, content: &str) -> Result<(), CliError> {
    match &format.out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn no_csv(format: &FormatArgs, command: &str) -> Result<(), CliError> {
    if format.output_format == OutputFormat::Csv {
        return Err(CliError::Usage(format!("{command} has no csv output")));
    }
    Ok(())
}

fn json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("valid json");
    text.push('\n');
    text
}

fn iterant_demo(format: FormatArgs) -> CliResult {
    no_csv(&format, "iterant-demo")?;
    let (lines, result) = i_squared_trace()?;
    let content = match format.output_format {
        OutputFormat::Text => {
            let mut out = String::new();
            for line in &lines {
                writeln!(out, "{line}").expect("string write");
            }
            out
        }
        OutputFormat::Json => json_text(&json!({
            "trace": lines,
            "result": result.to_text(),
        })),
        OutputFormat::Csv => unreachable!(),
    };
    emit(&format, &content)?;
    Ok(result == IterantElement::from_real(Scalar::from_int(-1)))
}

fn eigenform_demo(args: EigenformArgs) -> CliResult {
    no_csv(&args.format, "eigenform")?;
    let depth = args.steps;

    let nests: Vec<String> = (0..=depth.min(8))
        .map(|n| iterate_boxes(n).render())
        .collect();
    let eigenform = reentry_eigenform();
    let unfoldings: Vec<String> = (0..=depth)
        .map(|k| unfold(&eigenform, k).map(|e| e.render()))
        .collect::<iterants::Result<_>>()?;

    let rational_orbit = detect_orbit(
        |x: &Scalar| Scalar::from_int(-1).div(x),
        Scalar::from_int(1),
        16,
        |a, b| a == b,
    )?;
    let iterant_orbit = detect_orbit(
        |z: &IterantElement| z.inverse().map(|inv| inv.neg()),
        IterantElement::i(Backend::Exact),
        16,
        |a, b| a == b,
    )?;

    let rational_ok = rational_orbit.status
        == (OrbitStatus::Cycle {
            start: 0,
            period: 2,
        });
    let iterant_ok = iterant_orbit.status == (OrbitStatus::FixedPoint { index: 0 });

    let content = match args.format.output_format {
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "box recursion from the empty form:").expect("string write");
            for (n, text) in nests.iter().enumerate() {
                writeln!(out, "  step {n}: {text}").expect("string write");
            }
            writeln!(out, "reentry eigenform [*] unfolded:").expect("string write");
            for (k, text) in unfoldings.iter().enumerate() {
                writeln!(out, "  unfold {k}: {text}").expect("string write");
            }
            writeln!(out, "orbit of x -> -1/x from 1 over the rationals:").expect("string write");
            let states: Vec<String> = rational_orbit
                .trajectory
                .iter()
                .map(Scalar::to_string)
                .collect();
            writeln!(out, "  {} ({:?})", states.join(", "), rational_orbit.status)
                .expect("string write");
            writeln!(out, "orbit of x -> -1/x from i over the iterants:").expect("string write");
            let states: Vec<String> = iterant_orbit
                .trajectory
                .iter()
                .map(|e| e.to_text())
                .collect();
            writeln!(out, "  {} ({:?})", states.join(", "), iterant_orbit.status)
                .expect("string write");
            out
        }
        OutputFormat::Json => json_text(&json!({
            "nests": nests,
            "unfoldings": unfoldings,
            "rational_orbit": {
                "trajectory": rational_orbit.trajectory.iter().map(Scalar::to_string).collect::<Vec<_>>(),
                "period_two_cycle": rational_ok,
            },
            "iterant_orbit": {
                "trajectory": iterant_orbit.trajectory.iter().map(|e| e.to_text()).collect::<Vec<_>>(),
                "fixed_point": iterant_ok,
            },
        })),
        OutputFormat::Csv => unreachable!(),
    };
    emit(&args.format, &content)?;
    Ok(rational_ok && iterant_ok)
}

fn brownian(args: BrownianArgs) -> CliResult {
    let grid = TimeGrid::new(Scalar::from_f64(args.dt), args.steps)?;
    let k = Scalar::from_f64(args.k);
    let path = brownian_path(&k, &grid, args.seed)?;

    // every step must realize (dx)^2 / dt = K
    let mut constant = true;
    for i in 0..grid.n_steps() {
        let dx = path.get(i + 1).expect("valid").to_f64() - path.get(i).expect("valid").to_f64();
        if ((dx * dx / args.dt) - args.k).abs() / args.k > 2f64.powi(-45) {
            constant = false;
        }
    }

    let content = match args.format.output_format {
        OutputFormat::Csv => path.to_csv(),
        OutputFormat::Json => {
            let samples: Vec<Value> = path
                .samples()
                .iter()
                .map(|s| {
                    s.as_ref()
                        .and_then(|v| serde_json::Number::from_f64(v.to_f64()))
                        .map_or(Value::Null, Value::Number)
                })
                .collect();
            json_text(&json!({
                "k": args.k,
                "dt": args.dt,
                "seed": args.seed,
                "samples": samples,
            }))
        }
        OutputFormat::Text => {
            let endpoint = path.get(grid.n_steps()).expect("valid");
            format!(
                "random walk: K = {}, dt = {}, {} steps, seed {}\n\
                 endpoint x({}) = {}\n\
                 (dx)^2/dt constant at K: {}\n",
                args.k,
                args.dt,
                args.steps,
                args.seed,
                grid.time_at(grid.n_steps()),
                endpoint,
                if constant { "yes" } else { "no" },
            )
        }
    };
    emit(&args.format, &content)?;
    Ok(constant)
}

fn commutator_verify(args: CommutatorArgs) -> CliResult {
    let dt = Scalar::parse(&args.dt, Backend::Exact)?;
    let grid = TimeGrid::new(dt, args.steps)?;
    let mut rng = SplitMix64::new(args.seed);
    let samples = (0..grid.len())
        .map(|_| {
            let p = rng.next_small_int(9);
            let q = 1 + rng.next_below(9) as i64;
            Scalar::from_ratio(p, q)
        })
        .collect::<iterants::Result<Vec<_>>>()?;
    let x = TemporalFunction::new(grid, samples)?;
    let report = verify_commutator_identity(&x)?;
    let exact = report.is_exact();

    let content = match args.format.output_format {
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "t": r.t.to_string(),
                        "lhs": r.lhs.to_string(),
                        "rhs": r.rhs.to_string(),
                        "abs_dev": r.abs_dev.to_string(),
                    })
                })
                .collect();
            json_text(&json!({
                "dt": args.dt,
                "seed": args.seed,
                "samples_compared": report.rows.len(),
                "max_abs_dev": report.max_abs_dev.to_string(),
                "rows": rows,
            }))
        }
        OutputFormat::Text => format!(
            "commutator check on a random rational series (seed {}, {} increments)\n\
             samples compared: {}\n\
             max |[x,Dx] - J(dx)^2/dt|: {}\n\
             identity holds sample-exactly: {}\n",
            args.seed,
            args.steps,
            report.rows.len(),
            report.max_abs_dev,
            if exact { "yes" } else { "no" },
        ),
    };
    emit(&args.format, &content)?;
    Ok(exact)
}

fn minkowski(args: MinkowskiArgs) -> CliResult {
    no_csv(&args.format, "minkowski")?;
    let mut rng = SplitMix64::new(args.seed);
    let mut points = vec![
        FourPoint::from_ints(0, 0, 0, 1),
        FourPoint::from_ints(1, 0, 0, 1),
        FourPoint::from_ints(3, 4, 0, 0),
    ];
    for _ in 0..args.steps {
        let coord = |rng: &mut SplitMix64| {
            Scalar::from_ratio(rng.next_small_int(9), 1 + rng.next_below(9) as i64)
        };
        points.push(FourPoint::new(
            coord(&mut rng)?,
            coord(&mut rng)?,
            coord(&mut rng)?,
            coord(&mut rng)?,
        )?);
    }

    let mut all_match = true;
    let mut rows = Vec::new();
    for p in &points {
        let substituted = nexus_substitute(p)?;
        let direct = minkowski_q(p);
        let matches = substituted == IterantElement::from_real(direct.clone());
        all_match &= matches;
        rows.push((p.clone(), euclidean_q(p), direct, substituted, matches));
    }

    let content = match args.format.output_format {
        OutputFormat::Text => {
            let mut out = String::from("t -> it turns x^2+y^2+z^2+t^2 into x^2+y^2+z^2-t^2\n");
            for (p, euclid, direct, substituted, matches) in &rows {
                writeln!(
                    out,
                    "  ({},{},{},{}): euclidean {}, substituted {}, direct {} [{}]",
                    p.x,
                    p.y,
                    p.z,
                    p.t,
                    euclid,
                    substituted.to_text(),
                    direct,
                    if *matches { "ok" } else { "MISMATCH" },
                )
                .expect("string write");
            }
            out
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(p, euclid, direct, substituted, matches)| {
                    json!({
                        "point": [p.x.to_string(), p.y.to_string(), p.z.to_string(), p.t.to_string()],
                        "euclidean": euclid.to_string(),
                        "hyperbolic": direct.to_string(),
                        "substituted": substituted.to_text(),
                        "match": matches,
                    })
                })
                .collect();
            json_text(&json!({ "points": rows, "all_match": all_match }))
        }
        OutputFormat::Csv => unreachable!(),
    };
    emit(&args.format, &content)?;
    Ok(all_match)
}

fn heisenberg(args: HeisenbergArgs) -> CliResult {
    no_csv(&args.format, "heisenberg")?;
    let hbar = Scalar::parse(&args.hbar, Backend::Exact)?;
    let mass = Scalar::parse(&args.mass, Backend::Exact)?;
    let constants = PhysicalConstants::new(hbar.clone(), mass)?;
    let derivation = derive_heisenberg(&constants)?;
    let expected = IterantElement::i(Backend::Exact).scale(&hbar)?;
    let ok = derivation.result == expected;

    let content = match args.format.output_format {
        OutputFormat::Text => {
            let mut out = String::from("commutator substitution chain:\n");
            for step in &derivation.steps {
                writeln!(
                    out,
                    "  {} = {}   ({})",
                    step.lhs,
                    step.rhs,
                    step.rule.as_str()
                )
                .expect("string write");
            }
            writeln!(out, "result: [p, q] = {}", derivation.result.to_text())
                .expect("string write");
            out
        }
        OutputFormat::Json => json_text(&derivation.to_json()),
        OutputFormat::Csv => unreachable!(),
    };
    emit(&args.format, &content)?;
    Ok(ok)
}

fn wave_check(args: WaveArgs) -> CliResult {
    no_csv(&args.format, "wave-check")?;
    let params = PlaneWaveParams {
        k: Scalar::from_f64(args.k),
        omega: Scalar::from_f64(1.0),
    };
    let step_sizes = [args.dt, args.dt / 10.0, args.dt / 100.0];
    let (reports, order) = wave_convergence_order(&params, &step_sizes, args.steps)?;
    let ok = (0.8..=1.2).contains(&order);

    let content = match args.format.output_format {
        OutputFormat::Text => {
            let mut out = format!(
                "forward difference of exp(ikx) against ik psi, k = {}\n",
                args.k
            );
            for report in &reports {
                writeln!(
                    out,
                    "  dx = {:e}: max relative deviation {:e} over {} samples",
                    report.dx, report.max_rel_dev, report.samples_compared
                )
                .expect("string write");
            }
            writeln!(
                out,
                "measured order: {order:.4} (expected within [0.8, 1.2])"
            )
            .expect("string write");
            out
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "dx": r.dx,
                        "max_rel_dev": r.max_rel_dev,
                        "samples_compared": r.samples_compared,
                    })
                })
                .collect();
            json_text(&json!({ "k": args.k, "reports": rows, "order": order }))
        }
        OutputFormat::Csv => unreachable!(),
    };
    emit(&args.format, &content)?;
    Ok(ok)
}

fn run_selftest(format: FormatArgs) -> CliResult {
    no_csv(&format, "selftest")?;
    let results = selftest::run_all();
    let all_passed = results.iter().all(|r| r.passed);

    let content = match format.output_format {
        OutputFormat::Text => {
            let mut out = String::new();
            for r in &results {
                writeln!(
                    out,
                    "{:<42} {}  {}",
                    r.name,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.detail
                )
                .expect("string write");
            }
            writeln!(out, "overall: {}", if all_passed { "PASS" } else { "FAIL" })
                .expect("string write");
            out
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = results
                .iter()
                .map(|r| json!({ "suite": r.name, "passed": r.passed, "detail": r.detail }))
                .collect();
            json_text(&json!({ "suites": rows, "passed": all_passed }))
        }
        OutputFormat::Csv => unreachable!(),
    };
    emit(&format, &content)?;
    Ok(all_passed)
}
