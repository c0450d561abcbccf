//! Command-line front end. Every subcommand produces a [`ScanResult`] and
//! writes it as CSV or JSON on standard output.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 numerical failure
//! (quadrature or search did not converge).

use std::f64::consts::PI;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::analysis::{
    asymptotic_max_angle, crossover_beta, effective_angle, max_angle, ratio_row, table1,
};
use crate::boson::BosonDistribution;
use crate::electron::{self, DensityValue, ElectronDistribution};
use crate::error::{domain, Error, Result};
use crate::kinematics::{
    photon_frequency, state_from_beta, ParticleKind, ParticleSpec, PhotonRequest, Spin,
};
use crate::polarization::PolarizationLabel;
use crate::quadrature::QuadratureConfig;
use crate::scan::{Cell, ScanResult};

#[derive(Debug, Parser)]
#[command(
    name = "synrad",
    version,
    about = "Synchrotron radiation from the first excited Landau level"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// f^b, f^e and k(zeta; beta) for beta = 0.0, 0.1, ..., 1.0
    Table1(Common),
    /// Speed at which k(+1; beta) crosses 1
    Crossover(Common),
    /// General grid evaluation of any quantity
    Scan(ScanArgs),
    /// Emitted photon energy over (beta, theta)
    Freq(PointArgs),
    /// Interior maxima of the angular densities
    Maxima(PointArgs),
    /// Local (with --theta) or half-plane (without) polarization fractions
    Polarization(PointArgs),
    /// beta -> 1 electron densities
    Limits(PointArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AngleUnit {
    Rad,
    Deg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Quantity {
    Freq,
    P,
    QLocal,
    QHalfplane,
    Power,
    Ratio,
    MaxAngle,
    EffAngle,
    Table1,
    Limits,
}

impl Quantity {
    fn name(self) -> &'static str {
        match self {
            Quantity::Freq => "freq",
            Quantity::P => "p",
            Quantity::QLocal => "q_local",
            Quantity::QHalfplane => "q_halfplane",
            Quantity::Power => "power",
            Quantity::Ratio => "ratio",
            Quantity::MaxAngle => "max_angle",
            Quantity::EffAngle => "eff_angle",
            Quantity::Table1 => "table1",
            Quantity::Limits => "limits",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Particle {
    Boson,
    Electron,
}

#[derive(Debug, Clone, Args)]
struct Common {
    /// Output encoding (default: csv, json for crossover)
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Unit for angles on input and output
    #[arg(long, value_enum, default_value = "rad")]
    unit: AngleUnit,
    #[arg(long, default_value_t = 1e-10)]
    abs_tol: f64,
    #[arg(long, default_value_t = 1e-10)]
    rel_tol: f64,
    #[arg(long, default_value_t = 60)]
    max_depth: u32,
}

#[derive(Debug, Clone, Args)]
struct PointArgs {
    #[arg(long, value_enum, default_value = "electron")]
    particle: Particle,
    /// Electron spin quantum number, +1 or -1
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    zeta: i32,
    /// Polarization label: 0, 1, -1, 2, 3 (or total, right, left, sigma, pi)
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    s: String,
    /// Speed: a value, a list `a,b,c`, or a range `start:stop:count`
    #[arg(long)]
    beta: Option<String>,
    /// Lorentz factor, same syntax as --beta; converted to beta
    #[arg(long, conflicts_with = "beta")]
    gamma: Option<String>,
    /// Angle grid `start:stop:count`, a value or a list; accepts `pi`, `pi/2`
    #[arg(long)]
    theta: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    quantity: Quantity,
    #[command(flatten)]
    point: PointArgs,
}

/// Parse `argv` (including the program name), run, and write the result to
/// `out`. Diagnostics go to `err`. Returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    let (result, format) = match execute(cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "synrad: {e}");
            return exit_code(&e);
        }
    };
    let text = match format {
        Format::Csv => result.to_csv(),
        Format::Json => result.to_json(),
    };
    match out.write_all(text.as_bytes()) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "synrad: {e}");
            1
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::AmbiguousLimit(_) => 1,
        Error::Convergence { .. } | Error::Search(_) => 2,
    }
}

fn execute(cmd: Command) -> Result<(ScanResult, Format)> {
    match cmd {
        Command::Table1(c) => Ok((run_table1(&c)?, c.format.unwrap_or(Format::Csv))),
        Command::Crossover(c) => Ok((run_crossover(&c)?, c.format.unwrap_or(Format::Json))),
        Command::Scan(a) => {
            let f = a.point.common.format.unwrap_or(Format::Csv);
            Ok((run_quantity(a.quantity, &a.point)?, f))
        }
        Command::Freq(p) => Ok((run_quantity(Quantity::Freq, &p)?, fmt(&p))),
        Command::Maxima(p) => Ok((run_quantity(Quantity::MaxAngle, &p)?, fmt(&p))),
        Command::Polarization(p) => {
            let q = if p.theta.is_some() {
                Quantity::QLocal
            } else {
                Quantity::QHalfplane
            };
            Ok((run_quantity(q, &p)?, fmt(&p)))
        }
        Command::Limits(p) => Ok((run_quantity(Quantity::Limits, &p)?, fmt(&p))),
    }
}

fn fmt(p: &PointArgs) -> Format {
    p.common.format.unwrap_or(Format::Csv)
}

impl Common {
    fn quadrature(&self) -> Result<QuadratureConfig> {
        QuadratureConfig::new(self.abs_tol, self.rel_tol, self.max_depth)
    }

    fn angle_out(&self, rad: f64) -> f64 {
        match self.unit {
            AngleUnit::Rad => rad,
            AngleUnit::Deg => rad.to_degrees(),
        }
    }

    fn base_result<S: Into<String>>(
        &self,
        quantity: &str,
        columns: impl IntoIterator<Item = S>,
    ) -> Result<ScanResult> {
        let q = self.quadrature()?;
        Ok(ScanResult::new(columns)
            .with_meta("quantity", quantity)
            .with_meta(
                "angle_unit",
                match self.unit {
                    AngleUnit::Rad => "rad",
                    AngleUnit::Deg => "deg",
                },
            )
            .with_meta(
                "quadrature",
                format!(
                    "abs_tol={:e};rel_tol={:e};max_depth={}",
                    q.abs_tol, q.rel_tol, q.max_depth
                ),
            )
            .with_meta("version", env!("CARGO_PKG_VERSION")))
    }
}

/// Evaluate a product expression such as `pi/2`, `3*pi/4`, `0.25`.
/// `pi` stands for the half-turn in whichever unit is active.
fn parse_angle_expr(s: &str, half_turn: f64) -> Result<f64> {
    let s = s.trim();
    if s.is_empty() {
        return Err(domain("empty number"));
    }
    let mut value = 1.0;
    let mut op = '*';
    let mut token = String::new();
    let apply = |value: f64, op: char, token: &str| -> Result<f64> {
        let t = token.trim();
        let factor = if t.eq_ignore_ascii_case("pi") {
            half_turn
        } else {
            t.parse::<f64>()
                .map_err(|_| domain(format!("cannot parse {t:?} as a number")))?
        };
        Ok(if op == '*' {
            value * factor
        } else {
            value / factor
        })
    };
    for ch in s.chars() {
        if ch == '*' || ch == '/' {
            value = apply(value, op, &token)?;
            token.clear();
            op = ch;
        } else {
            token.push(ch);
        }
    }
    apply(value, op, &token)
}

/// Grid specification: `x`, `a,b,c` or `start:stop:count`.
fn parse_grid(spec: &str, half_turn: f64) -> Result<Vec<f64>> {
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(domain(format!("range {spec:?} must be start:stop:count")));
        }
        let start = parse_angle_expr(parts[0], half_turn)?;
        let stop = parse_angle_expr(parts[1], half_turn)?;
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| domain(format!("grid size {:?} is not an integer", parts[2])))?;
        if count < 2 {
            return Err(domain(format!("grid size must be at least 2, got {count}")));
        }
        let last = (count - 1) as f64;
        Ok((0..count)
            .map(|i| {
                if i == count - 1 {
                    stop
                } else {
                    start + (stop - start) * (i as f64 / last)
                }
            })
            .collect())
    } else {
        spec.split(',')
            .map(|p| parse_angle_expr(p, half_turn))
            .collect()
    }
}

impl PointArgs {
    fn label(&self) -> Result<PolarizationLabel> {
        self.s.parse()
    }

    fn spin(&self) -> Result<Spin> {
        Spin::from_zeta(self.zeta)
    }

    fn kind(&self) -> ParticleKind {
        match self.particle {
            Particle::Boson => ParticleKind::Boson,
            Particle::Electron => ParticleKind::Electron,
        }
    }

    fn spec(&self) -> Result<ParticleSpec> {
        Ok(match self.particle {
            Particle::Boson => ParticleSpec::Boson,
            Particle::Electron => ParticleSpec::Electron(self.spin()?),
        })
    }

    fn betas(&self, default: Option<&str>) -> Result<Vec<f64>> {
        let betas = if let Some(g) = &self.gamma {
            parse_grid(g, PI)?
                .into_iter()
                .map(crate::kinematics::beta_from_gamma)
                .collect::<Result<Vec<_>>>()?
        } else {
            let spec = self
                .beta
                .as_deref()
                .or(default)
                .ok_or_else(|| domain("this quantity needs --beta or --gamma"))?;
            parse_grid(spec, PI)?
        };
        for &b in &betas {
            crate::error::check_beta(b)?;
        }
        Ok(betas)
    }

    fn thetas(&self) -> Result<Vec<f64>> {
        let spec = self
            .theta
            .as_deref()
            .ok_or_else(|| domain("this quantity needs --theta"))?;
        let grid = match self.common.unit {
            AngleUnit::Rad => parse_grid(spec, PI)?,
            AngleUnit::Deg => parse_grid(spec, 180.0)?
                .into_iter()
                .map(f64::to_radians)
                .collect(),
        };
        // Snap values within rounding of the domain ends onto them.
        grid.into_iter()
            .map(|t| {
                let t = if (t - PI).abs() < 1e-12 { PI } else { t };
                let t = if t.abs() < 1e-15 { 0.0 } else { t };
                crate::error::check_theta(t).map(|_| t)
            })
            .collect()
    }

    fn describe(&self, r: &mut ScanResult, with_spin: bool, with_s: bool) -> Result<()> {
        r.push_meta("particle", self.kind());
        if with_spin && self.particle == Particle::Electron {
            r.push_meta("zeta", self.spin()?);
        }
        if with_s {
            r.push_meta("s", self.label()?);
        }
        Ok(())
    }
}

fn run_table1(c: &Common) -> Result<ScanResult> {
    let cfg = c.quadrature()?;
    let mut r = c.base_result("table1", ["beta", "f_b", "f_e", "k_minus", "k_plus"])?;
    r.push_meta("units", "dimensionless");
    for row in table1(&cfg)? {
        r.push_row(vec![
            row.beta.into(),
            row.f_b.into(),
            row.f_e.into(),
            row.k_minus.into(),
            row.k_plus.into(),
        ]);
    }
    Ok(r)
}

fn run_crossover(c: &Common) -> Result<ScanResult> {
    let cfg = c.quadrature()?;
    let x = crossover_beta(&cfg)?;
    let mut r = c.base_result("crossover", ["beta0", "gamma0"])?;
    r.push_meta("units", "dimensionless");
    r.push_row(vec![x.beta0.into(), x.gamma0.into()]);
    Ok(r)
}

/// Per-beta distribution for either particle.
enum Dist {
    Boson(BosonDistribution),
    Electron(ElectronDistribution),
}

impl Dist {
    fn new(kind: ParticleKind, beta: f64, cfg: &QuadratureConfig) -> Result<Self> {
        Ok(match kind {
            ParticleKind::Boson => Dist::Boson(BosonDistribution::new(beta, cfg)?),
            ParticleKind::Electron => Dist::Electron(ElectronDistribution::new(beta, cfg)?),
        })
    }

    fn density(&self, s: PolarizationLabel, spin: Spin, theta: f64) -> Result<Cell> {
        match self {
            Dist::Boson(d) => d.density(s, theta).map(Cell::Num),
            Dist::Electron(d) => Ok(match d.density_value(s, spin, theta)? {
                DensityValue::Regular(v) => Cell::Num(v),
                DensityValue::Ambiguous { .. } => Cell::Ambiguous,
            }),
        }
    }
}

fn run_quantity(q: Quantity, p: &PointArgs) -> Result<ScanResult> {
    let cfg = p.common.quadrature()?;
    let c = &p.common;
    match q {
        Quantity::Table1 => run_table1(c),
        Quantity::Freq => {
            let spec = p.spec()?;
            let mut r = c.base_result(q.name(), ["beta", "theta", "omega"])?;
            p.describe(&mut r, false, false)?;
            r.push_meta("units", "omega in m0*c^2/hbar; n=nu=1");
            let (betas, thetas) = (p.betas(None)?, p.thetas()?);
            let rows = grid_rows(&betas, &thetas, |b, t| {
                let state = state_from_beta(spec, 1, b)?;
                let w = photon_frequency(spec, &state, PhotonRequest::new(1, t)?)?;
                Ok(vec![b.into(), c.angle_out(t).into(), w.into()])
            })?;
            r.rows = rows;
            Ok(r)
        }
        Quantity::P | Quantity::QLocal => {
            let (s, spin, kind) = (p.label()?, p.spin()?, p.kind());
            let col = if q == Quantity::P { "p" } else { "q" };
            let mut r = c.base_result(q.name(), ["beta", "theta", col])?;
            p.describe(&mut r, true, true)?;
            r.push_meta(
                "units",
                if q == Quantity::P {
                    "1/sr"
                } else {
                    "dimensionless"
                },
            );
            let (betas, thetas) = (p.betas(None)?, p.thetas()?);
            let dists: Vec<Option<Dist>> = betas
                .par_iter()
                .map(|&b| {
                    if q == Quantity::P {
                        Dist::new(kind, b, &cfg).map(Some)
                    } else {
                        Ok(None)
                    }
                })
                .collect::<Result<_>>()?;
            let mut rows = Vec::with_capacity(betas.len() * thetas.len());
            for (b, dist) in betas.iter().zip(&dists) {
                let chunk: Vec<Vec<Cell>> = thetas
                    .par_iter()
                    .map(|&t| {
                        let v = match (q, dist) {
                            (Quantity::P, Some(d)) => d.density(s, spin, t)?,
                            _ => local_q(kind, s, spin, *b, t)?,
                        };
                        Ok(vec![(*b).into(), c.angle_out(t).into(), v])
                    })
                    .collect::<Result<_>>()?;
                rows.extend(chunk);
            }
            r.rows = rows;
            Ok(r)
        }
        Quantity::QHalfplane => {
            let (s, spin, kind) = (p.label()?, p.spin()?, p.kind());
            let mut r = c.base_result(q.name(), ["beta", "q_upper", "q_lower"])?;
            p.describe(&mut r, true, true)?;
            r.push_meta("units", "dimensionless");
            r.rows = beta_rows(&p.betas(Some("0:1:11"))?, |b| {
                let (up, down) = match Dist::new(kind, b, &cfg)? {
                    Dist::Boson(d) => (
                        d.half_plane_fraction(s),
                        d.half_plane_fraction(s.mirrored()),
                    ),
                    Dist::Electron(d) => (
                        d.half_plane_fraction(s, spin),
                        d.half_plane_fraction(s.mirrored(), spin),
                    ),
                };
                Ok(vec![b.into(), up.into(), down.into()])
            })?;
            Ok(r)
        }
        Quantity::Power => {
            let (spin, kind) = (p.spin()?, p.kind());
            let mut r = c.base_result(q.name(), ["beta", "power", "f"])?;
            p.describe(&mut r, true, false)?;
            r.push_meta("units", "power in Q0=e^2*m0^2*c^3/hbar^2; f dimensionless");
            r.rows = beta_rows(&p.betas(Some("0:1:11"))?, |b| {
                let rep = match Dist::new(kind, b, &cfg)? {
                    Dist::Boson(d) => d.total_power(),
                    Dist::Electron(d) => d.total_power(spin),
                };
                Ok(vec![b.into(), rep.power.into(), rep.shape_factor.into()])
            })?;
            Ok(r)
        }
        Quantity::Ratio => {
            let mut r = c.base_result(q.name(), ["beta", "k_minus", "k_plus"])?;
            r.push_meta("units", "dimensionless");
            r.rows = beta_rows(&p.betas(Some("0:1:11"))?, |b| {
                let row = ratio_row(b, &cfg)?;
                Ok(vec![b.into(), row.k_minus.into(), row.k_plus.into()])
            })?;
            Ok(r)
        }
        Quantity::MaxAngle => {
            let (s, spin, kind) = (p.label()?, p.spin()?, p.kind());
            let mut r = c.base_result(
                q.name(),
                [
                    "beta",
                    "gamma",
                    "theta_max",
                    "p_max",
                    "exists",
                    "theta_asymptotic",
                ],
            )?;
            p.describe(&mut r, true, true)?;
            r.push_meta("units", "angles in angle_unit; p in 1/sr");
            r.rows = beta_rows(&p.betas(None)?, |b| {
                let rep = max_angle(kind, s, Some(spin), b, &cfg)?;
                let gamma = crate::kinematics::gamma_from_beta(b)?;
                let asym = match asymptotic_max_angle(s, gamma) {
                    Ok(a) if kind == ParticleKind::Electron => Cell::Num(c.angle_out(a)),
                    _ => Cell::None,
                };
                Ok(vec![
                    b.into(),
                    gamma.into(),
                    rep.theta_max
                        .map_or(Cell::None, |t| Cell::Num(c.angle_out(t))),
                    rep.p_max.into(),
                    Cell::Num(if rep.exists { 1.0 } else { 0.0 }),
                    asym,
                ])
            })?;
            Ok(r)
        }
        Quantity::EffAngle => {
            let (s, spin, kind) = (p.label()?, p.spin()?, p.kind());
            let mut r = c.base_result(q.name(), ["beta", "delta"])?;
            p.describe(&mut r, true, true)?;
            r.push_meta("units", "delta in angle_unit");
            r.push_meta("definition", crate::analysis::RMS_DEFINITION);
            r.rows = beta_rows(&p.betas(None)?, |b| {
                let rep = effective_angle(kind, s, Some(spin), b, &cfg)?;
                Ok(vec![b.into(), c.angle_out(rep.delta).into()])
            })?;
            Ok(r)
        }
        Quantity::Limits => {
            let (s, spin) = (p.label()?, p.spin()?);
            let mut r = c.base_result(q.name(), ["theta", "p_bar", "profile"])?;
            r.push_meta("particle", ParticleKind::Electron);
            r.push_meta("s", s);
            r.push_meta("units", "p_bar in 1/sr; profile dimensionless");
            let thetas = p.thetas()?;
            r.rows = thetas
                .iter()
                .map(|&t| {
                    Ok(vec![
                        c.angle_out(t).into(),
                        electron::ultrarelativistic_density(s, spin, t)?.into(),
                        electron::ultrarelativistic_profile(t).into(),
                    ])
                })
                .collect::<Result<_>>()?;
            Ok(r)
        }
    }
}

fn local_q(
    kind: ParticleKind,
    s: PolarizationLabel,
    spin: Spin,
    beta: f64,
    theta: f64,
) -> Result<Cell> {
    match kind {
        ParticleKind::Boson => crate::boson::local_polarization_b(s, beta, theta).map(Cell::Num),
        ParticleKind::Electron => match electron::local_polarization_e(s, spin, beta, theta) {
            Ok(v) => Ok(Cell::Num(v)),
            Err(Error::AmbiguousLimit(_)) => Ok(Cell::Ambiguous),
            Err(e) => Err(e),
        },
    }
}

fn beta_rows<F>(betas: &[f64], f: F) -> Result<Vec<Vec<Cell>>>
where
    F: Fn(f64) -> Result<Vec<Cell>> + Sync,
{
    betas.par_iter().map(|&b| f(b)).collect()
}

fn grid_rows<F>(betas: &[f64], thetas: &[f64], f: F) -> Result<Vec<Vec<Cell>>>
where
    F: Fn(f64, f64) -> Result<Vec<Cell>> + Sync,
{
    let points: Vec<(f64, f64)> = betas
        .iter()
        .flat_map(|&b| thetas.iter().map(move |&t| (b, t)))
        .collect();
    points.par_iter().map(|&(b, t)| f(b, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_expressions() {
        assert_eq!(parse_angle_expr("pi", PI).unwrap(), PI);
        assert_eq!(parse_angle_expr("pi/2", PI).unwrap(), PI / 2.0);
        assert_eq!(parse_angle_expr("3*pi/4", PI).unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_angle_expr("0.25", PI).unwrap(), 0.25);
        assert_eq!(parse_angle_expr("pi/2", 180.0).unwrap(), 90.0);
        assert!(parse_angle_expr("abc", PI).is_err());
        assert!(parse_angle_expr("", PI).is_err());
    }

    #[test]
    fn grids() {
        let g = parse_grid("0:pi:181", PI).unwrap();
        assert_eq!(g.len(), 181);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[180], PI);
        assert!((g[90] - PI / 2.0).abs() < 1e-15);
        assert_eq!(parse_grid("0.1,0.5", PI).unwrap(), vec![0.1, 0.5]);
        assert!(parse_grid("0:1:1", PI).is_err());
        assert!(parse_grid("0:1", PI).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&domain("x")), 1);
        assert_eq!(
            exit_code(&Error::Convergence {
                estimate: 0.0,
                error_bound: 1.0
            }),
            2
        );
    }
}
