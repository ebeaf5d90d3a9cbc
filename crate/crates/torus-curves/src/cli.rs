//! Command-line front end: sampling, locating, scanning, projection
//! plotting and the one-shot verification battery.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 for
//! usage, configuration or I/O errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::curve::{TorusCurveSpec, TubeRadius};
use crate::invariants::invariant_sample;
use crate::output;
use crate::projection::{higher_inflection_points, DEFAULT_RANK_TOLERANCE};
use crate::vanishing::{critical_radius, scan_over_b, torsion_window, zero_curvature_points};
use crate::verify::run_battery;

#[derive(Debug, Parser)]
#[command(
    name = "torus-curves",
    version,
    about = "Curvature, torsion and inflection analysis for (p,q) torus curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample speed, curvature, torsion and the geodesic/normal split over a
    /// parameter grid
    Invariants(InvariantsArgs),
    /// Report the critical tube radius and any zero-curvature points
    Locate(LocateArgs),
    /// Scan tube radii for the minimum curvature and |torsion| over the curve
    ScanB(ScanArgs),
    /// Render the planar projection as SVG, marking order >= 2 inflections
    Project(ProjectArgs),
    /// Run the verification battery for a winding pair
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

fn parse_radius(s: &str) -> Result<TubeRadius, String> {
    s.parse::<TubeRadius>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct InvariantsArgs {
    /// Windings around the axis of revolution
    #[arg(short)]
    p: i64,
    /// Windings around the tube
    #[arg(short)]
    q: i64,
    /// Tube radius: a decimal or an exact fraction like 4/13
    #[arg(short, value_parser = parse_radius)]
    b: TubeRadius,
    /// Number of grid samples t_i = 2*pi*i/n, i = 0..n-1
    #[arg(short = 'n', long, default_value_t = 1024)]
    resolution: usize,
    /// Output file; stdout when omitted
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
struct LocateArgs {
    #[arg(short)]
    p: i64,
    #[arg(short)]
    q: i64,
    /// Tube radius; use a fraction for exact critical detection
    #[arg(short, value_parser = parse_radius)]
    b: TubeRadius,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(short)]
    p: i64,
    #[arg(short)]
    q: i64,
    /// Smallest tube radius in the grid
    #[arg(long, default_value_t = 0.05)]
    b_min: f64,
    /// Largest tube radius in the grid
    #[arg(long, default_value_t = 0.95)]
    b_max: f64,
    /// Number of grid radii
    #[arg(long, default_value_t = 91)]
    b_steps: usize,
    /// Replace the nearest grid radius with the exact critical value
    #[arg(long)]
    include_critical: bool,
    /// Parameter-grid resolution per radius
    #[arg(short = 'n', long, default_value_t = 4096)]
    resolution: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
struct ProjectArgs {
    #[arg(short)]
    p: i64,
    #[arg(short)]
    q: i64,
    #[arg(short, value_parser = parse_radius)]
    b: TubeRadius,
    /// Number of polyline samples
    #[arg(short = 'n', long, default_value_t = 2048)]
    resolution: usize,
    /// Relative singular-value cutoff for the inflection certification
    #[arg(long, default_value_t = DEFAULT_RANK_TOLERANCE)]
    tolerance: f64,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(short)]
    p: i64,
    #[arg(short)]
    q: i64,
}

#[derive(Debug)]
enum CliError {
    Config(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "{msg}"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(err: crate::Error) -> Self {
        CliError::Config(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

/// Parses the command line, runs the command, maps failures to exit codes.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => err.exit(), // clap prints and exits 0 for help, 2 for errors
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Invariants(args) => cmd_invariants(args),
        Command::Locate(args) => cmd_locate(args),
        Command::ScanB(args) => cmd_scan_b(args),
        Command::Project(args) => cmd_project(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn write_output(path: &Option<PathBuf>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, contents)?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(contents.as_bytes())?;
        }
    }
    Ok(())
}

fn require_format(got: Format, allowed: &[Format], command: &str) -> Result<(), CliError> {
    if allowed.contains(&got) {
        Ok(())
    } else {
        Err(CliError::Config(format!(
            "format {got:?} is not supported by `{command}`"
        )))
    }
}

fn cmd_invariants(args: InvariantsArgs) -> Result<ExitCode, CliError> {
    require_format(args.format, &[Format::Csv, Format::Json], "invariants")?;
    if args.resolution < 2 {
        return Err(CliError::Config(format!(
            "resolution must be at least 2, got {}",
            args.resolution
        )));
    }
    let spec = TorusCurveSpec::new(args.p, args.q, args.b)?;
    let samples: Vec<_> = (0..args.resolution)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / args.resolution as f64;
            invariant_sample(&spec, t)
        })
        .collect();

    let contents = match args.format {
        Format::Csv => {
            let mut out = String::from(output::INVARIANTS_CSV_HEADER);
            out.push('\n');
            for sample in &samples {
                out.push_str(&output::invariant_csv_row(sample));
                out.push('\n');
            }
            out
        }
        _ => {
            let value = serde_json::json!({
                "resolution": args.resolution,
                "samples": samples.iter().map(output::invariant_json).collect::<Vec<_>>(),
                "spec": {
                    "b": args.b.value(),
                    "p": spec.p(),
                    "q": spec.q(),
                    "winding_gcd": spec.winding_gcd(),
                },
            });
            let mut s = output::json_to_string(&value);
            s.push('\n');
            s
        }
    };
    write_output(&args.output, &contents)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_locate(args: LocateArgs) -> Result<ExitCode, CliError> {
    require_format(args.format, &[Format::Json], "locate")?;
    let spec = TorusCurveSpec::new(args.p, args.q, args.b)?;
    let set = zero_curvature_points(&spec);
    let mut contents = output::json_to_string(&output::locate_json(&set));
    contents.push('\n');
    write_output(&args.output, &contents)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan_b(args: ScanArgs) -> Result<ExitCode, CliError> {
    require_format(args.format, &[Format::Csv, Format::Json], "scan-b")?;
    if args.b_steps == 0 {
        return Err(CliError::Config("b-steps must be at least 1".into()));
    }
    if !(args.b_min > 0.0 && args.b_min <= args.b_max && args.b_max < 1.0) {
        return Err(CliError::Config(format!(
            "tube-radius grid [{}, {}] must sit inside (0, 1)",
            args.b_min, args.b_max
        )));
    }
    let spec = TorusCurveSpec::from_float(args.p, args.q, 0.5)?; // validates windings
    let (p, q) = (spec.p(), spec.q());

    let mut grid: Vec<f64> = if args.b_steps == 1 {
        vec![args.b_min]
    } else {
        (0..args.b_steps)
            .map(|i| {
                args.b_min
                    + (args.b_max - args.b_min) * i as f64 / (args.b_steps - 1) as f64
            })
            .collect()
    };
    if args.include_critical {
        let critical = critical_radius(p, q).value();
        if critical >= args.b_min && critical <= args.b_max {
            let nearest = (0..grid.len())
                .min_by(|&i, &j| {
                    (grid[i] - critical)
                        .abs()
                        .partial_cmp(&(grid[j] - critical).abs())
                        .unwrap()
                })
                .unwrap();
            grid[nearest] = critical;
        }
    }

    let result = scan_over_b(p, q, &grid, args.resolution)?;
    let contents = match args.format {
        Format::Csv => output::scan_csv(&result),
        _ => {
            let window = torsion_window(p, q);
            let mut s = output::json_to_string(&output::scan_json(&result, &window));
            s.push('\n');
            s
        }
    };
    write_output(&args.output, &contents)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_project(args: ProjectArgs) -> Result<ExitCode, CliError> {
    require_format(args.format, &[Format::Svg], "project")?;
    if args.resolution < 8 {
        return Err(CliError::Config(format!(
            "resolution must be at least 8, got {}",
            args.resolution
        )));
    }
    if !(args.tolerance > 0.0 && args.tolerance < 1.0) {
        return Err(CliError::Config(format!(
            "tolerance must lie in (0, 1), got {}",
            args.tolerance
        )));
    }
    let spec = TorusCurveSpec::new(args.p, args.q, args.b)?;
    // Marker detection runs on its own fixed grid so that the drawing
    // resolution does not change which markers appear.
    let markers = higher_inflection_points(&spec, 4096, args.tolerance);
    let svg = output::render_projection_svg(&spec, args.resolution, &markers);
    write_output(&args.output, &svg)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let report = run_battery(args.p, args.q)?;
    print!("{}", report.render());
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
