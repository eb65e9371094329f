//! Command-line front end: orbit iteration with CSV export, the identity
//! verification suite, integral tables, Poisson rank reports, and exact
//! state-file conversion.
//!
//! Exit codes: 0 success, 1 identity/orbit failure, 2 input error.

use clap::{Args, Parser, Subcommand};
use pentagram_maps::dynamics::{
    corner_to_xy, map_Tbar, map_T, pentagram_corner, MapShape, PQState, XYState,
};
use pentagram_maps::geometry::{map_F, polygon_from_xy, xy_from_polygon, LiftedPolygon};
use pentagram_maps::io::{parse_state, state_to_json, State};
use pentagram_maps::kernel::Rational;
use pentagram_maps::lax;
use pentagram_maps::leapfrog::{leapfrog_coords, leapfrog_step, LeapfrogState};
use pentagram_maps::poisson;
use pentagram_maps::report::{self, CheckResult, Status, SuiteConfig};
use pentagram_maps::sample;
use pentagram_maps::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pentagram", version, about = "Exact higher pentagram maps T_k")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
enum Mode {
    Xy,
    Pq,
    Corner,
    Polygon,
    Leapfrog,
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    steps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Mode::Xy)]
    mode: Mode,
    /// level c of the (p, q) orbit (pq mode only)
    #[arg(long, default_value = "1")]
    level: String,
    /// read the initial state from a JSON file instead of sampling
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// write the CSV here (stdout otherwise)
    #[arg(long = "out")]
    output: Option<PathBuf>,
    /// append exact p/q columns next to the decimal ones
    #[arg(long)]
    exact_csv: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// restrict every grid to one cell
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0xC0FFEE)]
    seed: u64,
    /// states per cell for the conservation sweep
    #[arg(long, default_value_t = 20)]
    states: usize,
    #[arg(long, default_value_t = 10)]
    iterations: usize,
    #[arg(long, default_value_t = 4)]
    trials: usize,
    #[arg(long, default_value_t = 20)]
    newton_states: usize,
    #[arg(long, default_value_t = 100)]
    pentagram_trials: usize,
    /// write the machine-readable JSON report here
    #[arg(long = "out")]
    output: Option<PathBuf>,
    /// test fixture: inject a sign error into the duality identity to prove
    /// the suite can fail
    #[arg(long, hide = true)]
    negative_control: bool,
}

#[derive(Args)]
struct CellArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum StateCommand {
    /// Parse a state file and reprint it canonically (lossless)
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Command {
    /// Iterate a map and export the orbit as CSV (integrals included where
    /// the mode reduces exactly to (x, y))
    Orbit(OrbitArgs),
    /// Run the identity-verification suite and emit a JSON report
    Verify(VerifyArgs),
    /// Print the spectral-invariant table I_ij of a state
    Integrals {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
    /// Poisson rank, Casimirs and the independence count for one (k, n)
    Rank {
        #[command(flatten)]
        cell: CellArgs,
    },
    /// Corrugated-polygon identity checks for one (k, n)
    GeometryCheck {
        #[command(flatten)]
        cell: CellArgs,
    },
    /// Leapfrog identity checks for one n
    LeapfrogCheck {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Exact state-file operations
    State {
        #[command(subcommand)]
        command: StateCommand,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Orbit(args) => cmd_orbit(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Integrals { cell, input, output } => cmd_integrals(cell, input, output),
        Command::Rank { cell } => cmd_rank(cell),
        Command::GeometryCheck { cell } => cmd_geometry_check(cell),
        Command::LeapfrogCheck { n, seed, trials } => cmd_leapfrog_check(n, seed, trials),
        Command::State { command: StateCommand::Convert { input, output } } => {
            cmd_state_convert(input, output)
        }
    };
    match code {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_to_string(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn write_output(path: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn dec(r: &Rational) -> String {
    format!("{:.16e}", r.to_f64())
}

// ---------------------------------------------------------------------------
// orbit
// ---------------------------------------------------------------------------

/// Orbit step plus the flat coordinate row for CSV; `xy` is the exact (x, y)
/// reduction carrying the integrals, where one exists.
enum OrbitState {
    Xy(XYState),
    Pq(PQState),
    Corner(pentagram_maps::CornerState),
    Polygon(LiftedPolygon),
    Leapfrog(LeapfrogState),
}

impl OrbitState {
    fn step(&self) -> Result<OrbitState, Error> {
        Ok(match self {
            OrbitState::Xy(s) => OrbitState::Xy(map_T(s)?),
            OrbitState::Pq(s) => OrbitState::Pq(map_Tbar(s)?),
            OrbitState::Corner(s) => OrbitState::Corner(pentagram_corner(s)?),
            OrbitState::Polygon(p) => OrbitState::Polygon(map_F(p)?),
            OrbitState::Leapfrog(s) => OrbitState::Leapfrog(leapfrog_step(s)?),
        })
    }

    fn coordinate_names(&self) -> Vec<String> {
        let pair = |a: &str, b: &str, n: usize| {
            (1..=n)
                .map(|i| format!("{a}{i}"))
                .chain((1..=n).map(|i| format!("{b}{i}")))
                .collect::<Vec<_>>()
        };
        match self {
            OrbitState::Xy(s) => pair("x", "y", s.shape().n()),
            OrbitState::Pq(s) => pair("p", "q", s.shape().n()),
            OrbitState::Corner(s) => pair("X", "Y", s.n()),
            OrbitState::Polygon(p) => pair("x", "y", p.shape().n()),
            OrbitState::Leapfrog(s) => pair("sminus", "s", s.n()),
        }
    }

    fn coordinates(&self) -> Result<Vec<Rational>, Error> {
        Ok(match self {
            OrbitState::Xy(s) => s.x().iter().chain(s.y()).cloned().collect(),
            OrbitState::Pq(s) => s.p().iter().chain(s.q()).cloned().collect(),
            OrbitState::Corner(s) => s.x().iter().chain(s.y()).cloned().collect(),
            OrbitState::Polygon(p) => {
                let s = xy_from_polygon(p)?;
                s.x().iter().chain(s.y()).cloned().collect()
            }
            OrbitState::Leapfrog(s) => {
                let mut out = Vec::with_capacity(2 * s.n());
                for p in s.s_minus().iter().chain(s.s()) {
                    out.push(p.to_affine().map_err(|_| {
                        Error::InvalidInput("CSV export needs affine-finite points".into())
                    })?);
                }
                out
            }
        })
    }

    /// The exact (x, y) reduction whose I_ij are conserved; pq orbits have no
    /// lift (the projection forces level 1), so they export none.
    fn xy(&self) -> Result<Option<XYState>, Error> {
        Ok(match self {
            OrbitState::Xy(s) => Some(s.clone()),
            OrbitState::Pq(_) => None,
            OrbitState::Corner(s) => Some(corner_to_xy(s)?),
            OrbitState::Polygon(p) => Some(xy_from_polygon(p)?),
            OrbitState::Leapfrog(s) => Some(leapfrog_coords(s)?),
        })
    }
}

fn initial_state(args: &OrbitArgs) -> Result<OrbitState, Error> {
    if let Some(path) = &args.input {
        let state = parse_state(&read_to_string(path)?)?;
        return Ok(match state {
            State::Xy(s) => OrbitState::Xy(s),
            State::Pq(s) => OrbitState::Pq(s),
            State::Corner(s) => OrbitState::Corner(s),
            State::Polygon(p) => OrbitState::Polygon(p),
            State::Leapfrog(s) => OrbitState::Leapfrog(s),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let shape = MapShape::new(args.k, args.n)?;
    Ok(match args.mode {
        Mode::Xy => OrbitState::Xy(sample::orbit_safe_xy_state(shape, args.steps, &mut rng)),
        Mode::Pq => {
            let level: Rational = args
                .level
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad level {:?}", args.level)))?;
            OrbitState::Pq(sample::level_pq_state(shape, &level, &mut rng))
        }
        Mode::Corner => OrbitState::Corner(sample::regular_corner_state(args.n, &mut rng)),
        Mode::Polygon => {
            OrbitState::Polygon(polygon_from_xy(&sample::biregular_xy_state(shape, &mut rng))?)
        }
        Mode::Leapfrog => OrbitState::Leapfrog(sample::leapfrog_state(args.n, false, &mut rng)),
    })
}

fn cmd_orbit(args: OrbitArgs) -> Result<ExitCode, Error> {
    let mut state = initial_state(&args)?;
    let names = state.coordinate_names();
    // integral columns come from the initial support and stay fixed
    let integral_support: Vec<(u32, u32)> = match state.xy() {
        Ok(Some(s)) => lax::spectral(&s)?.support(),
        _ => Vec::new(),
    };
    let mut csv = String::new();
    csv.push_str("step");
    for c in &names {
        write!(csv, ",{c}").unwrap();
        if args.exact_csv {
            write!(csv, ",{c}_exact").unwrap();
        }
    }
    for (i, j) in &integral_support {
        write!(csv, ",I_{i}_{j}").unwrap();
        if args.exact_csv {
            write!(csv, ",I_{i}_{j}_exact").unwrap();
        }
    }
    csv.push('\n');

    for step in 0..=args.steps {
        if step > 0 {
            state = match state.step() {
                Ok(s) => s,
                Err(e) => {
                    // flush what was computed, then report the failing step
                    write_output(&args.output, &csv)?;
                    eprintln!("orbit aborted at step {step}: {e}");
                    return Ok(ExitCode::from(1));
                }
            };
        }
        write!(csv, "{step}").unwrap();
        for v in state.coordinates()? {
            write!(csv, ",{}", dec(&v)).unwrap();
            if args.exact_csv {
                write!(csv, ",{v}").unwrap();
            }
        }
        if !integral_support.is_empty() {
            let table = lax::spectral(&state.xy()?.expect("integral support implies xy"))?;
            for &(i, j) in &integral_support {
                let v = table.coeff(i, j);
                write!(csv, ",{}", dec(&v)).unwrap();
                if args.exact_csv {
                    write!(csv, ",{v}").unwrap();
                }
            }
        }
        csv.push('\n');
    }
    write_output(&args.output, &csv)?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct VerifyReport<'a> {
    passed: bool,
    results: &'a [CheckResult],
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let only_cell = match (args.k, args.n) {
        (Some(k), Some(n)) => {
            MapShape::new(k, n)?;
            Some((k, n))
        }
        (None, None) => None,
        _ => return Err(Error::InvalidInput("--k and --n go together".into())),
    };
    let cfg = SuiteConfig {
        seed: args.seed,
        conservation_states: args.states,
        conservation_iterations: args.iterations,
        involution_states: args.trials.max(1),
        invariance_trials: args.trials,
        algebra_trials: args.trials.max(1),
        pentagram_trials: args.pentagram_trials,
        leapfrog_trials: args.trials.max(2),
        newton_states: args.newton_states,
        duality_sign_flip: args.negative_control,
        only_cell,
    };
    let results = report::full_suite(&cfg);
    let mut passed = true;
    for r in &results {
        let tag = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        };
        let cell = r
            .cell
            .map(|(k, n)| format!(" (k={k},n={n})"))
            .unwrap_or_default();
        println!("{tag} {}{cell}{}", r.name, if r.detail.is_empty() {
            String::new()
        } else {
            format!(": {}", r.detail)
        });
        passed &= r.ok();
    }
    let json = serde_json::to_string_pretty(&VerifyReport { passed, results: &results })
        .expect("report serialization");
    if let Some(path) = &args.output {
        fs::write(path, json)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    }
    println!("verify: {}", if passed { "all identities hold" } else { "FAILURES present" });
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ---------------------------------------------------------------------------
// integrals / rank / checks / state convert
// ---------------------------------------------------------------------------

fn cmd_integrals(
    cell: CellArgs,
    input: Option<PathBuf>,
    output: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let state = match input {
        Some(path) => match parse_state(&read_to_string(&path)?)? {
            State::Xy(s) => s,
            other => {
                return Err(Error::InvalidInput(format!(
                    "integrals need an xy state, got {}",
                    other.kind()
                )))
            }
        },
        None => {
            let shape = MapShape::new(cell.k, cell.n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cell.seed);
            sample::regular_xy_state(shape, &mut rng)
        }
    };
    let table = lax::spectral(&state)?;
    let mut text = String::new();
    writeln!(
        text,
        "spectral polynomial for k={}, n={} ({} terms):",
        state.shape().k(),
        state.shape().n(),
        table.support().len()
    )
    .unwrap();
    for (i, j) in table.support() {
        let v = table.coeff(i, j);
        writeln!(text, "I[{i}][{j}] = {v} ({})", dec(&v)).unwrap();
    }
    write_output(&output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_rank(cell: CellArgs) -> Result<ExitCode, Error> {
    let shape = MapShape::new(cell.k, cell.n)?;
    let rank = poisson::poisson_rank(shape)?;
    let d = shape.d();
    let expected = 2 * (shape.n() - d);
    println!("Omega rank = {rank}, formula 2(n - gcd(k-1,n)) = {expected}");
    let cas = poisson::casimirs(shape)?;
    for (idx, v) in cas.iter().enumerate() {
        let mut mono = String::new();
        for (pos, &e) in v.iter().enumerate() {
            if e != 0 {
                let var = if pos < shape.n() {
                    format!("x{}", pos + 1)
                } else {
                    format!("y{}", pos + 1 - shape.n())
                };
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&var);
                if e != 1 {
                    write!(mono, "^{e}").unwrap();
                }
            }
        }
        println!("casimir {}: {mono}", idx + 1);
    }
    if rank != expected {
        println!("rank formula VIOLATED");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn print_results(results: &[CheckResult]) -> ExitCode {
    let mut passed = true;
    for r in results {
        let cell = r
            .cell
            .map(|(k, n)| format!(" (k={k},n={n})"))
            .unwrap_or_default();
        println!(
            "{} {}{cell}{}",
            match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            },
            r.name,
            if r.detail.is_empty() { String::new() } else { format!(": {}", r.detail) }
        );
        passed &= r.ok();
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_geometry_check(cell: CellArgs) -> Result<ExitCode, Error> {
    MapShape::new(cell.k, cell.n)?;
    let results = report::geometry_checks(&[(cell.k, cell.n)], cell.seed, false);
    Ok(print_results(&results))
}

fn cmd_leapfrog_check(n: usize, seed: u64, trials: usize) -> Result<ExitCode, Error> {
    if n < 3 {
        return Err(Error::InvalidInput("need n >= 3".into()));
    }
    let results = report::leapfrog_checks(n, trials, seed);
    Ok(print_results(&results))
}

fn cmd_state_convert(input: PathBuf, output: Option<PathBuf>) -> Result<ExitCode, Error> {
    let state = parse_state(&read_to_string(&input)?)?;
    let json = state_to_json(&state);
    write_output(&output, &format!("{json}\n"))?;
    Ok(ExitCode::SUCCESS)
}
