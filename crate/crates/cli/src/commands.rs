//! Subcommand definitions and their implementations.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use maxsurf_core::bjorling::{self, boundary_gauss, circle_identities};
use maxsurf_core::interpolation::{
    build_surface_through, modified_coeffs, scalar_residual, search_r0_detailed, series_residuals, SpacelikeCurve,
};
use maxsurf_core::surface::degeneracy;
use maxsurf_core::{Complex64, MaximalSurface, SearchOptions, SpacePoint, VerificationGrid};
use serde_json::json;

use crate::config::{parse_grid, parse_pair, Config};
use crate::mesh::{self, PolarGrid};
use crate::report::{radius, Report, Verdict};
use crate::spec::{self, Parsed};
use crate::{coeffs, exit, CliError};

#[derive(Debug, Parser)]
#[command(name = "maxsurf", version, about = "Generalized maximal surfaces in Lorentz-Minkowski space")]
pub struct Cli {
    /// TOML configuration file (default: $MAXSURF_CONFIG, if set).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check Björling constraints or curve spacelikeness.
    Validate {
        #[arg(long)]
        spec: PathBuf,
        /// Report path (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the singular Björling problem; writes OUT.coeffs and OUT.report.json.
    SolveBjorling {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Find surfaces through a spacelike curve with a special singularity;
    /// writes OUT.root<i>.coeffs per root and OUT.report.json.
    Interpolate {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Search range for r0, as lo,hi.
        #[arg(long, value_parser = parse_pair)]
        bracket: Option<[f64; 2]>,
        /// Build at this r0 instead of searching.
        #[arg(long)]
        r0: Option<f64>,
        /// Location of the singularity, as x,y,t (default: the origin).
        #[arg(long, value_parser = parse_point)]
        singularity: Option<[f64; 3]>,
    },
    /// Sample a surface on a (rho, theta) grid.
    Sample {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// NRHOxNTHETA, e.g. 64x32.
        #[arg(long, value_parser = parse_grid)]
        grid: Option<[usize; 2]>,
        #[arg(long, value_parser = parse_pair)]
        rho: Option<[f64; 2]>,
        #[arg(long, value_enum, default_value_t = Format::Mesh)]
        format: Format,
        /// Also write the singular set to OUT.singular.csv.
        #[arg(long)]
        singular: bool,
    },
    /// Singular points along the grid's rays, as CSV.
    SingularSet {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_parser = parse_grid)]
        grid: Option<[usize; 2]>,
        #[arg(long, value_parser = parse_pair)]
        rho: Option<[f64; 2]>,
    },
    /// Gauss map on the grid, as CSV.
    GaussMap {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_parser = parse_grid)]
        grid: Option<[usize; 2]>,
        #[arg(long, value_parser = parse_pair)]
        rho: Option<[f64; 2]>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Mesh,
    Csv,
}

fn parse_point(text: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = text.split(',').collect();
    let [x, y, t] = parts.as_slice() else {
        return Err(format!("expected x,y,t, got {text:?}"));
    };
    let num = |s: &str| s.trim().parse::<f64>().map_err(|e| format!("{s:?}: {e}"));
    Ok([num(x)?, num(y)?, num(t)?])
}

/// Runs a parsed command line; the `Ok` value is the exit code.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    let config = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Validate { spec, out } => validate(&config, &spec, out.as_deref()),
        Command::SolveBjorling { spec, out } => solve_bjorling(&config, &spec, &out),
        Command::Interpolate {
            spec,
            out,
            bracket,
            r0,
            singularity,
        } => {
            let mut config = config;
            if let Some(b) = bracket {
                config.bracket = b;
            }
            let p = singularity.map_or(SpacePoint::origin(), |[x, y, t]| SpacePoint::new(Complex64::new(x, y), t));
            interpolate(&config, &spec, &out, r0, &p)
        }
        Command::Sample {
            surface,
            out,
            grid,
            rho,
            format,
            singular,
        } => {
            let s = load_surface(&surface)?;
            let grid = polar_grid(&config, &s, grid, rho);
            let points = mesh::sample(&s, &grid)?;
            let text = match format {
                Format::Mesh => mesh::to_obj(&points, &grid),
                Format::Csv => mesh::to_csv(&points),
            };
            crate::write(&out, &text)?;
            if singular {
                let sidecar = PathBuf::from(format!("{}.singular.csv", out.display()));
                crate::write(&sidecar, &mesh::singular_csv(&s, &grid, config.singular_subdivisions)?)?;
            }
            Ok(exit::OK)
        }
        Command::SingularSet { surface, out, grid, rho } => {
            let s = load_surface(&surface)?;
            let grid = polar_grid(&config, &s, grid, rho);
            emit(out.as_deref(), &mesh::singular_csv(&s, &grid, config.singular_subdivisions)?)
        }
        Command::GaussMap { surface, out, grid, rho } => {
            let s = load_surface(&surface)?;
            let grid = polar_grid(&config, &s, grid, rho);
            emit(out.as_deref(), &mesh::gauss_csv(&s, &grid)?)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<i32, CliError> {
    match out {
        Some(p) => crate::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(exit::OK)
}

fn load_surface(path: &Path) -> Result<MaximalSurface, CliError> {
    coeffs::from_text(&crate::read(path)?).map_err(|e| CliError::parse(path, e))
}

fn polar_grid(config: &Config, surface: &MaximalSurface, grid: Option<[usize; 2]>, rho: Option<[f64; 2]>) -> PolarGrid {
    let [n_rho, n_theta] = grid.unwrap_or(config.grid);
    let annulus = surface.annulus();
    let rho = rho
        .or(config.rho)
        .unwrap_or([annulus.sampling_inner(), annulus.sampling_outer()]);
    PolarGrid { n_rho, n_theta, rho }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    PathBuf::from(format!("{}{suffix}", prefix.display()))
}

fn input_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

/// Writes the report, then reports `err` (if any) as the command's outcome.
fn finish(report: &mut Report, out: Option<&Path>, err: Option<CliError>) -> Result<i32, CliError> {
    if let Some(e) = &err {
        if report.error.is_none() {
            let verdict = if matches!(e, CliError::NoRoot { .. }) {
                Verdict::NoRoot
            } else {
                Verdict::Fail
            };
            report.fail(verdict, e);
        }
    }
    emit(out, &report.to_json())?;
    match err {
        Some(e) => Err(e),
        None => Ok(exit::OK),
    }
}

fn validate(config: &Config, spec_path: &Path, out: Option<&Path>) -> Result<i32, CliError> {
    let parsed = spec::load(spec_path, config.truncation)?;
    let mut report = Report::new("validate", &input_name(spec_path), config);
    let err = match parsed {
        Parsed::Bjorling(data) => {
            let v = bjorling::validate(&data);
            report.section(
                "bjorling",
                json!({
                    "gamma_nullity": v.gamma_nullity,
                    "l_nullity": v.l_nullity,
                    "orthogonality": v.orthogonality,
                    "gamma_prime_max": v.gamma_prime_max,
                    "l_max": v.l_max,
                    "max_mode": v.max_mode,
                    "failures": v.failures,
                }),
            );
            if v.passed() {
                if let Ok(g) = boundary_gauss(&data) {
                    report.section("boundary_gauss", json!({ "consistency": g.consistency }));
                }
                None
            } else {
                Some(CliError::Failure(v.failures.join("; ")))
            }
        }
        Parsed::Curve { planar, height, .. } => {
            let margin = spacelike_margin(&planar, &height);
            report.section("curve", curve_section(&planar, &height, margin));
            if margin > maxsurf_core::interpolation::SPACELIKE_MARGIN {
                None
            } else {
                Some(maxsurf_core::Error::NotSpacelike(margin).into())
            }
        }
    };
    finish(&mut report, out, err)
}

fn spacelike_margin(planar: &maxsurf_core::FourierSeries, height: &maxsurf_core::FourierSeries) -> f64 {
    let df = planar.derivative();
    let dg = height.derivative();
    (0..maxsurf_core::CIRCLE_SAMPLES)
        .map(|j| {
            let t = maxsurf_core::fourier::angle(j, maxsurf_core::CIRCLE_SAMPLES);
            df.eval(t).norm_sqr() - dg.eval(t).re.powi(2)
        })
        .fold(f64::INFINITY, f64::min)
}

fn curve_section(planar: &maxsurf_core::FourierSeries, height: &maxsurf_core::FourierSeries, margin: f64) -> serde_json::Value {
    json!({
        "spacelike_margin": margin,
        "planar_max_mode": planar.effective_max_mode(0.0),
        "height_max_mode": height.effective_max_mode(0.0),
        "planar_tail": planar.tail_beyond(planar.max_mode().saturating_sub(1)),
        "height_tail": height.tail_beyond(height.max_mode().saturating_sub(1)),
    })
}

fn surface_section(surface: &MaximalSurface) -> serde_json::Value {
    let grid = VerificationGrid::standard(&surface.annulus());
    let certificate = surface.certify(&grid);
    json!({
        "annulus": [radius(surface.annulus().inner()), radius(surface.annulus().outer())],
        "h_max_mode": surface.h().max_mode(),
        "w_max_mode": surface.w().max_mode(),
        "conformality_residual": certificate.max_conformality_residual,
        "height_imaginary": certificate.max_height_imaginary,
        "degeneracy_gap": degeneracy(surface.h(), &grid).max_gap,
        "unit_circle_special_singularity": surface.special_singularity_check(1.0, maxsurf_core::surface::SINGULAR_TOL),
    })
}

fn solve_bjorling(config: &Config, spec_path: &Path, out: &Path) -> Result<i32, CliError> {
    let parsed = spec::load(spec_path, config.truncation)?;
    let mut report = Report::new("solve-bjorling", &input_name(spec_path), config);
    let report_path = with_suffix(out, ".report.json");
    let Parsed::Bjorling(data) = parsed else {
        return Err(CliError::parse(spec_path, "solve-bjorling needs a \"bjorling\" spec"));
    };
    let v = bjorling::validate(&data);
    report.section(
        "validation",
        json!({
            "gamma_nullity": v.gamma_nullity,
            "l_nullity": v.l_nullity,
            "orthogonality": v.orthogonality,
            "failures": v.failures,
        }),
    );
    let surface = match bjorling::solve(&data) {
        Ok(s) => s,
        Err(e) => return finish(&mut report, Some(&report_path), Some(e.into())),
    };
    report.section("surface", surface_section(&surface));
    match circle_identities(&surface, &data) {
        Ok(c) => report.section(
            "circle_identities",
            json!({
                "product": c.product,
                "height_square": c.height_square,
                "jacobian": c.jacobian,
                "singular_gap": c.singular_gap,
            }),
        ),
        Err(e) => return finish(&mut report, Some(&report_path), Some(e.into())),
    }
    crate::write(&with_suffix(out, ".coeffs"), &coeffs::to_text(&surface))?;
    finish(&mut report, Some(&report_path), None)
}

fn interpolate(config: &Config, spec_path: &Path, out: &Path, r0: Option<f64>, p: &SpacePoint) -> Result<i32, CliError> {
    let parsed = spec::load(spec_path, config.truncation)?;
    let mut report = Report::new("interpolate", &input_name(spec_path), config);
    let report_path = with_suffix(out, ".report.json");
    let Parsed::Curve {
        planar,
        height,
        expected_r0,
    } = parsed
    else {
        return Err(CliError::parse(spec_path, "interpolate needs a \"curve\" spec"));
    };
    let margin = spacelike_margin(&planar, &height);
    report.section("curve", curve_section(&planar, &height, margin));
    report.section(
        "singularity",
        json!({ "x": p.planar.re, "y": p.planar.im, "t": p.height }),
    );
    let curve = match SpacelikeCurve::new(planar, height) {
        Ok(c) => c,
        Err(e) => return finish(&mut report, Some(&report_path), Some(e.into())),
    };
    let shifted = curve.translated(p);
    let [lo, hi] = config.bracket;
    let roots = match r0 {
        Some(r) => vec![r],
        None => {
            let options = SearchOptions {
                scan_points: config.scan_points,
                k_max: config.k_max,
                ..Default::default()
            };
            match search_r0_detailed(&shifted, (lo, hi), &options) {
                Ok(outcome) => {
                    let min = outcome.scan.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
                    report.section(
                        "search",
                        json!({ "bracket": [lo, hi], "scan_points": outcome.scan.len(), "min_scan_residual": min }),
                    );
                    outcome.roots
                }
                Err(e) => return finish(&mut report, Some(&report_path), Some(e.into())),
            }
        }
    };
    if roots.is_empty() {
        return finish(&mut report, Some(&report_path), Some(CliError::NoRoot { lo, hi }));
    }

    let mut entries = Vec::new();
    let mut failure = None;
    for (i, &r) in roots.iter().enumerate() {
        let mut entry = serde_json::Map::new();
        entry.insert("r0".into(), r.into());
        if let Some(e) = expected_r0 {
            entry.insert("expected_r0_distance".into(), (r - e).abs().into());
        }
        match modified_coeffs(&shifted, r) {
            Ok(mc) => {
                let k_max = config.k_max.unwrap_or(2 * mc.max_mode());
                let res = series_residuals(&mc, k_max);
                entry.insert("residual_k0".into(), res.zeroth().into());
                entry.insert("residual_max".into(), res.max_abs().into());
            }
            Err(e) => {
                failure.get_or_insert(CliError::from(e));
                entries.push(serde_json::Value::Object(entry));
                continue;
            }
        }
        entry.insert(
            "scalar_residual".into(),
            scalar_residual(&shifted, r, config.k_max).map_or(serde_json::Value::Null, Into::into),
        );
        match build_surface_through(&curve, r, p) {
            Ok(surface) => {
                let file = with_suffix(out, &format!(".root{}.coeffs", i + 1));
                crate::write(&file, &coeffs::to_text(&surface))?;
                entry.insert("file".into(), input_name(&file).into());
                entry.insert("surface".into(), surface_section(&surface));
            }
            Err(e) => {
                entry.insert("error".into(), e.to_string().into());
                failure.get_or_insert(CliError::from(e));
            }
        }
        entries.push(serde_json::Value::Object(entry));
    }
    report.section("roots", serde_json::Value::Array(entries));
    finish(&mut report, Some(&report_path), failure)
}
