//! The `negentropy-ur` command-line front end.
//!
//! Subcommands:
//!
//! - `report` — one uncertainty report for a single state, as text, JSON or CSV;
//! - `sweep`  — reports along a parameter grid, written as CSV;
//! - `random` — seeded random-state scatter rows, written as CSV;
//! - `verify` — the built-in closed-form regression suite.
//!
//! Every data command writes a `<out>.manifest` key=value file capturing the
//! exact command line, config and seed, so any CSV can be reproduced
//! byte-for-byte from its manifest alone. `NEGENTROPY_UR_THREADS` caps worker
//! parallelism (0 or unset = automatic).

mod output;
mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::error::Error;
use crate::explorer::{self, CatReferenceCurve, SweepFamily};
use crate::measures::uncertainty_report;
use crate::quadrature::IntegrationConfig;
use crate::special;
use crate::states::{FamilyKind, StateSpec};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REGRESSION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CONVERGENCE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "negentropy-ur",
    version,
    about = "Quadrature entropies, negentropies and uncertainty bounds for single-mode states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Uncertainty report for one state.
    Report(ReportArgs),
    /// Uncertainty reports along a parameter grid, written as CSV.
    Sweep(SweepArgs),
    /// Seeded random-state scatter, written as CSV.
    Random(RandomArgs),
    /// Run the closed-form regression suite and print one line per check.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct ConfigArgs {
    /// Quadrature node budget for the core window.
    #[arg(long, default_value_t = 2000)]
    nodes: usize,
    /// Core half-width in units of the density scale.
    #[arg(long, default_value_t = 12.0)]
    range_multiplier: f64,
    /// Stop widening once a wing contributes less than this.
    #[arg(long, default_value_t = 1e-9)]
    doubling_tolerance: f64,
    /// Maximum number of window doublings.
    #[arg(long, default_value_t = 8)]
    max_doublings: u32,
}

impl ConfigArgs {
    fn to_config(&self) -> IntegrationConfig {
        IntegrationConfig {
            base_nodes: self.nodes,
            range_multiplier: self.range_multiplier,
            doubling_tolerance: self.doubling_tolerance,
            max_doublings: self.max_doublings,
        }
    }
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// One of: fock, laplace, photon-added-coherent, photon-added-squeezed,
    /// cat, photon-added-thermal, fock-superposition.
    #[arg(long)]
    family: String,
    /// Photon number (fock).
    #[arg(long)]
    n: Option<usize>,
    /// Decay rate (laplace).
    #[arg(long)]
    lambda: Option<f64>,
    /// Coherent amplitude (photon-added-coherent, cat).
    #[arg(long)]
    alpha: Option<f64>,
    /// Squeezing length scale (photon-added-squeezed).
    #[arg(long)]
    xi: Option<f64>,
    /// Relative phase (cat); defaults to 0.
    #[arg(long)]
    theta: Option<f64>,
    /// Mean thermal photon number (photon-added-thermal).
    #[arg(long)]
    nbar: Option<f64>,
    /// Comma-separated complex coefficients `re` or `re:im`
    /// (fock-superposition), e.g. "1,0:1,0.5".
    #[arg(long)]
    coeffs: Option<String>,
}

impl FamilyArgs {
    fn kind(&self) -> Result<FamilyKind, Error> {
        self.family.parse()
    }

    fn state(&self) -> Result<StateSpec, Error> {
        let missing =
            |flag: &str| Error::Domain(format!("family '{}' requires --{flag}", self.family));
        match self.kind()? {
            FamilyKind::Fock => Ok(StateSpec::fock(self.n.ok_or_else(|| missing("n"))?)),
            FamilyKind::Laplace => {
                StateSpec::laplace(self.lambda.ok_or_else(|| missing("lambda"))?)
            }
            FamilyKind::PhotonAddedCoherent => {
                StateSpec::photon_added_coherent(self.alpha.ok_or_else(|| missing("alpha"))?)
            }
            FamilyKind::PhotonAddedSqueezed => {
                StateSpec::photon_added_squeezed(self.xi.ok_or_else(|| missing("xi"))?)
            }
            FamilyKind::Cat => StateSpec::cat(
                self.alpha.ok_or_else(|| missing("alpha"))?,
                self.theta.unwrap_or(0.0),
            ),
            FamilyKind::PhotonAddedThermal => {
                StateSpec::photon_added_thermal(self.nbar.ok_or_else(|| missing("nbar"))?)
            }
            FamilyKind::FockSuperposition => {
                let raw = self.coeffs.as_deref().ok_or_else(|| missing("coeffs"))?;
                StateSpec::fock_superposition(parse_coefficients(raw)?)
            }
        }
    }

    /// The scalar parameter for CSV output, when the family has one.
    fn param(&self) -> Option<f64> {
        match self.kind().ok()? {
            FamilyKind::Fock => self.n.map(|n| n as f64),
            FamilyKind::Laplace => self.lambda,
            FamilyKind::PhotonAddedCoherent | FamilyKind::Cat => self.alpha,
            FamilyKind::PhotonAddedSqueezed => self.xi,
            FamilyKind::PhotonAddedThermal => self.nbar,
            FamilyKind::FockSuperposition => None,
        }
    }
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Emit the report as a JSON object.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit the report as a one-row CSV.
    #[arg(long)]
    csv: bool,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Family to sweep (fock-superposition has no scalar parameter).
    #[arg(long)]
    family: String,
    /// Grid spec `start:stop:count` (inclusive, linear) or
    /// `log:start:stop:count` (logarithmic).
    #[arg(long)]
    param: String,
    /// Fixed relative phase for cat sweeps.
    #[arg(long)]
    theta: Option<f64>,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
    /// Also write a plain-text plotting recipe next to the CSV.
    #[arg(long)]
    plotscript: bool,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Args, Debug)]
struct RandomArgs {
    /// Number of random states.
    #[arg(long)]
    count: u64,
    /// Master seed; every row derives its own stream from (seed, index).
    #[arg(long)]
    seed: u64,
    /// Superposition dimension (number of Fock coefficients).
    #[arg(long)]
    dim: usize,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
    /// Also write the cat reference curve used for the frontier flags.
    #[arg(long)]
    cat_curve: Option<PathBuf>,
    /// Also write a plain-text plotting recipe next to the CSV.
    #[arg(long)]
    plotscript: bool,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    config: ConfigArgs,
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Convergence { .. }) => EXIT_CONVERGENCE,
            _ => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn parse_coefficients(raw: &str) -> Result<Vec<Complex64>, Error> {
    raw.split(',')
        .map(|item| {
            let item = item.trim();
            let mut parts = item.splitn(2, ':');
            let re = parts
                .next()
                .unwrap_or("")
                .trim()
                .parse::<f64>()
                .map_err(|_| Error::Domain(format!("bad coefficient '{item}'")))?;
            let im = match parts.next() {
                Some(s) => s
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Domain(format!("bad coefficient '{item}'")))?,
                None => 0.0,
            };
            Ok(Complex64::new(re, im))
        })
        .collect()
}

/// Parse `start:stop:count` (linear) or `log:start:stop:count` grids.
fn parse_grid(spec: &str) -> Result<Vec<f64>, Error> {
    let (logarithmic, body) = match spec.strip_prefix("log:") {
        Some(rest) => (true, rest),
        None => (false, spec),
    };
    let parts: Vec<&str> = body.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Domain(format!(
            "grid spec must be start:stop:count, got '{spec}'"
        )));
    }
    let bad = || Error::Domain(format!("malformed grid spec '{spec}'"));
    let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let stop: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if count == 0 {
        return Err(bad());
    }
    if count == 1 {
        if start != stop {
            return Err(Error::Domain(format!(
                "single-point grid needs start == stop, got '{spec}'"
            )));
        }
        return Ok(vec![start]);
    }
    if stop.partial_cmp(&start) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::Domain(format!(
            "grid must be increasing, got '{spec}'"
        )));
    }
    if logarithmic && start <= 0.0 {
        return Err(Error::Domain(format!(
            "logarithmic grid needs a positive start, got '{spec}'"
        )));
    }
    let values = (0..count)
        .map(|i| {
            let t = i as f64 / (count - 1) as f64;
            if logarithmic {
                (start.ln() + t * (stop.ln() - start.ln())).exp()
            } else {
                start + t * (stop - start)
            }
        })
        .collect();
    Ok(values)
}

fn init_thread_pool() {
    let threads = std::env::var("NEGENTROPY_UR_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(0);
    // 0 lets rayon pick; a second initialization (tests call run() twice) is
    // harmless and ignored.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
}

/// Entry point shared by `main` and the integration tests. `args` excludes
/// the binary name.
pub fn run(args: &[String]) -> u8 {
    assert!(special::constants_consistent());
    init_thread_pool();
    let parsed = Cli::try_parse_from(
        std::iter::once("negentropy-ur".to_string()).chain(args.iter().cloned()),
    );
    let cli = match parsed {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let first_line = rendered.lines().next().unwrap_or("bad arguments");
            eprintln!("{first_line}");
            return EXIT_USAGE;
        }
    };
    let command_line = args.join(" ");
    let result = match cli.command {
        Command::Report(args) => run_report(&args),
        Command::Sweep(args) => run_sweep(&args, &command_line),
        Command::Random(args) => run_random(&args, &command_line),
        Command::Verify(args) => return verify::run_verify(&args.config.to_config()),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {failure}");
            failure.exit_code()
        }
    }
}

fn run_report(args: &ReportArgs) -> Result<u8, Failure> {
    let config = args.config.to_config();
    let state = args.family.state()?;
    let report = uncertainty_report(&state, &config)?;
    if args.json {
        println!("{}", output::report_json(&report)?);
    } else if args.csv {
        print!("{}", output::report_csv(&report, args.family.param()));
    } else {
        print!("{}", output::report_text(&state, &report));
    }
    Ok(EXIT_OK)
}

fn run_sweep(args: &SweepArgs, command_line: &str) -> Result<u8, Failure> {
    let config = args.config.to_config();
    let kind: FamilyKind = args.family.parse()?;
    let grid = parse_grid(&args.param)?;
    let family = match args.theta {
        Some(theta) => SweepFamily::with_theta(kind, theta),
        None => SweepFamily::new(kind),
    };
    let rows = explorer::family_sweep(family, &grid, &config)?;
    let csv = output::sweep_csv(&rows);
    write_file(&args.out, &csv)?;
    output::write_manifest(&args.out, command_line, &config, None)
        .map_err(|e| Failure::Io(args.out.clone(), e))?;
    if args.plotscript {
        let path = output::sibling(&args.out, ".plt");
        write_file(&path, &output::sweep_plotscript(&args.out, kind))?;
    }
    exit_code_for_rows(rows.iter().map(|r| r.outcome.as_ref().err()))
}

fn run_random(args: &RandomArgs, command_line: &str) -> Result<u8, Failure> {
    let config = args.config.to_config();
    let rows = explorer::scatter(args.seed, args.count, args.dim, &config)?;
    let csv = output::scatter_csv(&rows);
    write_file(&args.out, &csv)?;
    output::write_manifest(&args.out, command_line, &config, Some(args.seed))
        .map_err(|e| Failure::Io(args.out.clone(), e))?;
    if let Some(curve_path) = &args.cat_curve {
        let curve = CatReferenceCurve::standard(&config)?;
        write_file(curve_path, &output::curve_csv(&curve))?;
    }
    if args.plotscript {
        let path = output::sibling(&args.out, ".plt");
        write_file(&path, &output::scatter_plotscript(&args.out))?;
    }
    exit_code_for_rows(rows.iter().map(|r| r.outcome.as_ref().err()))
}

/// Batch outputs are written even when some rows failed; the exit code then
/// reflects the first row failure.
fn exit_code_for_rows<'a>(
    mut errors: impl Iterator<Item = Option<&'a Error>>,
) -> Result<u8, Failure> {
    match errors.find_map(|e| e) {
        None => Ok(EXIT_OK),
        Some(Error::Convergence { .. }) => Ok(EXIT_CONVERGENCE),
        Some(_) => Ok(EXIT_USAGE),
    }
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Io(path.clone(), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(
            parse_grid("0:10:11").unwrap(),
            (0..=10).map(|i| i as f64).collect::<Vec<_>>()
        );
        let g = parse_grid("log:0.1:10:3").unwrap();
        assert!((g[0] - 0.1).abs() < 1e-12);
        assert!((g[1] - 1.0).abs() < 1e-12);
        assert!((g[2] - 10.0).abs() < 1e-12);
        assert_eq!(parse_grid("2:2:1").unwrap(), vec![2.0]);
        assert!(parse_grid("1:2").is_err());
        assert!(parse_grid("2:1:5").is_err());
        assert!(parse_grid("log:-1:1:5").is_err());
        assert!(parse_grid("a:b:c").is_err());
        assert!(parse_grid("1:2:0").is_err());
    }

    #[test]
    fn coefficient_parsing() {
        let c = parse_coefficients("1, 0:1, -0.5:0.25").unwrap();
        assert_eq!(c[0], Complex64::new(1.0, 0.0));
        assert_eq!(c[1], Complex64::new(0.0, 1.0));
        assert_eq!(c[2], Complex64::new(-0.5, 0.25));
        assert!(parse_coefficients("1,x").is_err());
    }

    #[test]
    fn family_args_dispatch() {
        let args = FamilyArgs {
            family: "fock".into(),
            n: Some(2),
            lambda: None,
            alpha: None,
            xi: None,
            theta: None,
            nbar: None,
            coeffs: None,
        };
        assert_eq!(args.state().unwrap(), StateSpec::fock(2));
        assert_eq!(args.param(), Some(2.0));

        let missing = FamilyArgs {
            family: "laplace".into(),
            n: None,
            lambda: None,
            alpha: None,
            xi: None,
            theta: None,
            nbar: None,
            coeffs: None,
        };
        assert!(missing.state().is_err());

        let unknown = FamilyArgs {
            family: "bogus".into(),
            n: None,
            lambda: None,
            alpha: None,
            xi: None,
            theta: None,
            nbar: None,
            coeffs: None,
        };
        assert!(unknown.state().is_err());
    }
}
