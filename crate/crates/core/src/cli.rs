//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or
//! configuration error (also used for I/O failures writing outputs).

use std::ffi::OsString;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::config::RunConfig;
use crate::differential::{self, StencilMode, StencilSpec};
use crate::error::{Error, Result};
use crate::fields::{self, paper_params, SolitonParams};
use crate::observables;
use crate::verify::{self, ReportSettings};

#[derive(Debug, Parser)]
#[command(name = "emsoliton", version, about = "Soliton field verification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every check and write report.json.
    Verify(CommonArgs),
    /// Write fields.csv and density.csv on an (r, θ) grid.
    SampleFields(CommonArgs),
    /// Solve for (r0, c2) and write calibration.json.
    Calibrate(CommonArgs),
    /// Write residuals.csv and convergence.csv for the free-field residual.
    Residuals(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Flat key=value config file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// dimensionless | physical
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    e: Option<f64>,
    #[arg(long)]
    m: Option<f64>,
    #[arg(long)]
    hbar: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<f64>,
    #[arg(long)]
    r0: Option<f64>,
    #[arg(long)]
    theta0: Option<f64>,
    /// Dipole axis as x,y,z.
    #[arg(long, allow_hyphen_values = true)]
    axis: Option<String>,
    #[arg(long)]
    n_radial: Option<usize>,
    #[arg(long)]
    n_polar: Option<usize>,
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Finite-difference step (default r0/100).
    #[arg(long)]
    h: Option<f64>,
    /// Stencil order, 2 or 4.
    #[arg(long)]
    order: Option<u32>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    constraint_points: Option<usize>,
    /// Smallest grid radius, in units of r0.
    #[arg(long)]
    r_min: Option<f64>,
    /// Largest grid radius, in units of r0.
    #[arg(long)]
    r_max: Option<f64>,
    #[arg(long)]
    n_r: Option<usize>,
    #[arg(long)]
    n_theta: Option<usize>,
}

impl CommonArgs {
    fn to_config(&self) -> Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                RunConfig::parse(&text)?
            }
            None => RunConfig::default(),
        };
        let mut flags = RunConfig::default();
        if let Some(p) = &self.preset {
            flags.set("preset", p)?;
        }
        if let Some(a) = &self.axis {
            flags.set("axis", a)?;
        }
        flags.e = self.e;
        flags.m = self.m;
        flags.hbar = self.hbar;
        flags.c = self.c;
        flags.c1 = self.c1;
        flags.c2 = self.c2;
        flags.r0 = self.r0;
        flags.theta0 = self.theta0;
        flags.n_radial = self.n_radial;
        flags.n_polar = self.n_polar;
        flags.rel_tol = self.rel_tol;
        flags.h = self.h;
        flags.order = self.order;
        flags.out = self.out.clone();
        flags.seed = self.seed;
        flags.constraint_points = self.constraint_points;
        flags.r_min = self.r_min;
        flags.r_max = self.r_max;
        flags.n_r = self.n_r;
        flags.n_theta = self.n_theta;
        cfg.overlay(&flags);
        Ok(cfg)
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("I/O error: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Verify(a) => a.to_config().map_err(Failure::from).and_then(|c| cmd_verify(&c)),
        Command::SampleFields(a) => a.to_config().map_err(Failure::from).and_then(|c| cmd_sample_fields(&c)),
        Command::Calibrate(a) => a.to_config().map_err(Failure::from).and_then(|c| cmd_calibrate(&c)),
        Command::Residuals(a) => a.to_config().map_err(Failure::from).and_then(|c| cmd_residuals(&c)),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            1
        }
    }
}

fn create(dir: &Path, name: &str) -> std::result::Result<BufWriter<fs::File>, Failure> {
    fs::create_dir_all(dir)?;
    Ok(BufWriter::new(fs::File::create(dir.join(name))?))
}

fn primary_params(cfg: &RunConfig) -> Result<SolitonParams> {
    let k = cfg.constants()?;
    Ok(cfg.custom_params(&k)?.unwrap_or_else(|| paper_params(&k)))
}

fn stencil(cfg: &RunConfig, p: &SolitonParams) -> Result<StencilSpec> {
    StencilSpec::new(cfg.h.unwrap_or(0.01 * p.r0), cfg.order.unwrap_or(2), StencilMode::Spatial)
}

fn cmd_verify(cfg: &RunConfig) -> std::result::Result<(), Failure> {
    let k = cfg.constants()?;
    let q = cfg.quadrature()?;
    let custom = cfg.custom_params(&k)?;
    let primary = custom.unwrap_or_else(|| paper_params(&k));
    let s = stencil(cfg, &primary)?;
    let defaults = ReportSettings::default();
    let settings = ReportSettings {
        seed: cfg.seed.unwrap_or(defaults.seed),
        h_over_r0: s.h / primary.r0,
        order: s.order,
        constraint_points: cfg.constraint_points.unwrap_or(defaults.constraint_points),
        ..defaults
    };
    let report = verify::run_report(&k, &q, &settings, custom)?;
    let mut out = create(&cfg.out_dir(), "report.json")?;
    writeln!(out, "{}", report.to_json())?;
    out.flush()?;

    let cal = &report.calibration;
    println!("energy_ratio_paper = {:.10}", cal.energy_ratio_paper);
    println!("lz_ratio_paper = {:.10}", cal.lz_ratio_paper);
    println!("energy_ratio_calibrated = {:.10}", cal.energy_ratio_calibrated);
    let failed: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    for c in &report.checks {
        println!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed checks: {}", failed.join(", "))))
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}

fn cmd_sample_fields(cfg: &RunConfig) -> std::result::Result<(), Failure> {
    let p = primary_params(cfg)?;
    let r_min = cfg.r_min.unwrap_or(0.5);
    let r_max = cfg.r_max.unwrap_or(5.0);
    let n_r = cfg.n_r.unwrap_or(10);
    let n_theta = cfg.n_theta.unwrap_or(7);
    if !(r_min > 0.0 && r_max >= r_min && r_max.is_finite()) {
        return Err(Failure::Usage(format!("grid must satisfy 0 < r_min <= r_max, got {r_min}..{r_max}")));
    }
    if n_r == 0 || n_theta == 0 {
        return Err(Failure::Usage("grid needs n_r > 0 and n_theta > 0".into()));
    }
    let radii: Vec<f64> = linspace(r_min, r_max, n_r).into_iter().map(|u| u * p.r0).collect();
    let thetas = linspace(0.0, std::f64::consts::PI, n_theta);

    let mut out = create(&cfg.out_dir(), "fields.csv")?;
    writeln!(out, "r,theta,E_r,H_r,H_theta,U,l_z")?;
    let e1 = crate::vec3::orthogonal_unit(p.axis);
    for &r in &radii {
        for &theta in &thetas {
            let x = differential::point_about_axis(&p, r, theta, 0.0);
            let rhat = crate::vec3::scale(x, 1.0 / r);
            let (st, ct) = theta.sin_cos();
            let theta_hat = crate::vec3::sub(crate::vec3::scale(e1, ct), crate::vec3::scale(p.axis, st));
            let e = fields::field_e(x, &p)?;
            let h = fields::field_h(x, &p)?;
            let u = observables::energy_density(x, &p)?;
            let l = observables::angular_momentum_density(x, &p)?;
            let lz = crate::vec3::dot(l, p.axis);
            let e_r = crate::vec3::dot(e, rhat);
            let h_r = crate::vec3::dot(h, rhat);
            let h_t = crate::vec3::dot(h, theta_hat);
            writeln!(out, "{r:e},{theta:e},{e_r:e},{h_r:e},{h_t:e},{u:e},{lz:e}")?;
        }
    }
    out.flush()?;

    let rows = observables::density_profile(&p, &radii, &thetas)?;
    let mut dens = create(&cfg.out_dir(), "density.csv")?;
    observables::write_density_csv(&rows, &mut dens)?;
    dens.flush()?;
    println!("wrote {} rows", radii.len() * thetas.len());
    Ok(())
}

fn cmd_calibrate(cfg: &RunConfig) -> std::result::Result<(), Failure> {
    let k = cfg.constants()?;
    let result = verify::calibration_result(&k)?;
    let mut out = create(&cfg.out_dir(), "calibration.json")?;
    writeln!(out, "{}", serde_json::to_string_pretty(&result).expect("calibration serializes"))?;
    out.flush()?;
    println!("r0 = {}", result.params_calibrated.r0);
    println!("c2 = {}", result.params_calibrated.c2);
    println!("bracket = {}", result.bracket_calibrated);
    Ok(())
}

/// Sample points for the residual sweep, radii in units of `r0`.
const RESIDUAL_POINTS: [(f64, f64); 8] =
    [(0.5, 0.7), (0.8, 2.0), (1.5, 0.4), (1.5, 1.3), (2.0, 2.2), (3.0, 0.9), (5.0, 1.7), (8.0, 2.8)];

fn cmd_residuals(cfg: &RunConfig) -> std::result::Result<(), Failure> {
    let p = primary_params(cfg)?;
    let s = stencil(cfg, &p)?;
    let points: Vec<(f64, f64)> = RESIDUAL_POINTS.iter().map(|&(r, t)| (r * p.r0, t)).collect();
    let (rows, conv) = differential::residual_sweep(&p, &points, &s)?;
    let dir = cfg.out_dir();
    let mut out = create(&dir, "residuals.csv")?;
    differential::write_residuals_csv(&rows, &mut out)?;
    out.flush()?;
    let mut out = create(&dir, "convergence.csv")?;
    differential::write_convergence_csv(&conv, &mut out)?;
    out.flush()?;
    for row in &conv {
        match row.measured_order {
            Some(o) => println!("r = {:e}  theta = {:.3}  order = {o:.4}", row.r, row.theta),
            None => println!("r = {:e}  theta = {:.3}  residual = {:e}", row.r, row.theta, row.residual_h),
        }
    }
    Ok(())
}
