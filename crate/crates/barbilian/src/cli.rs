//! Command-line front end.
//!
//! Subcommands: `dist`, `axioms`, `field`, `curvature`, `tangent`,
//! `lagrange-check`. The domain comes from `--domain` (a name or inline
//! JSON) or from a `--config` JSON file; explicit flags always win over the
//! file. JSON results print every float with 17 significant digits so runs
//! are reproducible bit for bit.
//!
//! Exit codes: 0 success, 1 usage error, 2 violated precondition or invalid
//! input, 3 convergence failure.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::distance::{barbilian_distance, check_axioms};
use crate::domain::{Domain, DomainKind};
use crate::error::{Error, Result};
use crate::extremum::SearchOptions;
use crate::geom::{Point, Point2, Slope};
use crate::influence::InfluenceSpec;
use crate::lagrange;
use crate::metric::{gaussian_curvature, metric_tensor};
use crate::sample::DomainSampler;
use crate::tangent::tangent_circles;

#[derive(Parser, Debug)]
#[command(
    name = "barbilian",
    version,
    about = "Distances, tangent circles and induced metrics from boundary influence ratios"
)]
struct Cli {
    /// JSON config file ({"domain": ..., "influence": ..., "seed": ...});
    /// explicit flags override it
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Domain name (halfplane, quadrant) or inline JSON
    /// (e.g. '{"kind":"disk","rho":1.0}'); default: halfplane
    #[arg(long, global = true, value_name = "DOMAIN")]
    domain: Option<String>,

    /// Influence name: euclidean, exp_projected or exp_spherical;
    /// default: the domain's usual pairing
    #[arg(long, global = true, value_name = "NAME")]
    influence: Option<String>,

    /// Seed for sampling commands (default: $BARBILIAN_SEED, then 0)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Grid points per boundary chart for the extremum search
    #[arg(long, global = true, value_name = "N")]
    grid: Option<usize>,

    /// Refinement tolerance of the extremum search
    #[arg(long, global = true, value_name = "TOL")]
    tol: Option<f64>,

    /// Iteration budget per refinement
    #[arg(long = "max-iters", global = true, value_name = "N")]
    max_iters: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance between two points, with both extremal boundary ratios
    Dist {
        /// First point, "x,y" (or "x,y,z" on spatial domains)
        #[arg(long, value_parser = parse_point_arg, allow_hyphen_values = true)]
        a: Point,
        /// Second point
        #[arg(long, value_parser = parse_point_arg, allow_hyphen_values = true)]
        b: Point,
    },
    /// Sample point triples and report the worst metric-axiom defects
    Axioms {
        /// Number of sampled triples
        #[arg(long, default_value_t = 100)]
        triples: usize,
    },
    /// CSV of tangent radii and tensor entries over a rectangular grid
    Field {
        #[arg(long, allow_hyphen_values = true)]
        xmin: f64,
        #[arg(long, allow_hyphen_values = true)]
        xmax: f64,
        #[arg(long, allow_hyphen_values = true)]
        ymin: f64,
        #[arg(long, allow_hyphen_values = true)]
        ymax: f64,
        /// Grid nodes along x
        #[arg(long, default_value_t = 10)]
        nx: usize,
        /// Grid nodes along y
        #[arg(long, default_value_t = 10)]
        ny: usize,
        /// Slope of the probed line elements; "inf" for vertical
        #[arg(long, value_parser = parse_slope_arg, default_value = "0", allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Gaussian curvature of an isotropic domain at a point
    Curvature {
        /// Point, "x,y"
        #[arg(long, value_parser = parse_point2_arg, allow_hyphen_values = true)]
        p: Point2,
        /// Stencil step (default: a thousandth of the boundary distance)
        #[arg(long)]
        step: Option<f64>,
    },
    /// Radii of the two boundary-tangent circles at a line element
    Tangent {
        /// Point, "x,y"
        #[arg(long, value_parser = parse_point2_arg, allow_hyphen_values = true)]
        p: Point2,
        /// Slope of the line element; "inf" for vertical
        #[arg(long, value_parser = parse_slope_arg, allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Velocity-derivative checks of the quadrant tensor
    #[command(name = "lagrange-check")]
    LagrangeCheck {
        /// Point, "x,y"
        #[arg(long, value_parser = parse_point2_arg, allow_hyphen_values = true)]
        p: Point2,
        /// Velocity, "vx,vy" (vx must stay positive across the probe step)
        #[arg(long, value_parser = parse_vec2_arg, allow_hyphen_values = true)]
        v: (f64, f64),
    },
}

fn parse_components(s: &str) -> std::result::Result<Vec<f64>, String> {
    s.split(',')
        .map(|part| {
            let v: f64 =
                part.trim().parse().map_err(|_| format!("'{part}' is not a number"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("'{part}' must be finite"))
            }
        })
        .collect()
}

fn parse_point_arg(s: &str) -> std::result::Result<Point, String> {
    match parse_components(s)?.as_slice() {
        [x, y] => Ok(Point::from((*x, *y))),
        [x, y, z] => Ok(Point::from((*x, *y, *z))),
        other => Err(format!("expected 2 or 3 coordinates, got {}", other.len())),
    }
}

fn parse_point2_arg(s: &str) -> std::result::Result<Point2, String> {
    match parse_components(s)?.as_slice() {
        [x, y] => Ok(Point2::new(*x, *y)),
        other => Err(format!("expected 2 coordinates, got {}", other.len())),
    }
}

fn parse_vec2_arg(s: &str) -> std::result::Result<(f64, f64), String> {
    match parse_components(s)?.as_slice() {
        [x, y] => Ok((*x, *y)),
        other => Err(format!("expected 2 components, got {}", other.len())),
    }
}

fn parse_slope_arg(s: &str) -> std::result::Result<Slope, String> {
    match s.trim() {
        "inf" | "vertical" => Ok(Slope::Vertical),
        t => {
            let m: f64 = t.parse().map_err(|_| format!("'{t}' is not a slope"))?;
            if m.is_finite() {
                Ok(Slope::Finite(m))
            } else {
                Err("non-finite slopes are written 'inf'".into())
            }
        }
    }
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    domain: Option<serde_json::Value>,
    influence: Option<String>,
    seed: Option<u64>,
    grid: Option<usize>,
    tol: Option<f64>,
    max_iters: Option<usize>,
}

fn load_config(path: Option<&Path>) -> Result<ConfigFile> {
    let Some(path) = path else {
        return Ok(ConfigFile::default());
    };
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidParameter(format!("config {}: {e}", path.display())))
}

fn parse_domain(s: &str) -> Result<Domain> {
    match s.trim() {
        "halfplane" => Ok(Domain::half_plane()),
        "quadrant" => Ok(Domain::quadrant()),
        t if t.starts_with('{') => Domain::from_json(t),
        other => Err(Error::InvalidParameter(format!(
            "unknown domain '{other}'; use a name (halfplane, quadrant) or inline JSON"
        ))),
    }
}

fn seed_from_env() -> Result<Option<u64>> {
    match std::env::var("BARBILIAN_SEED") {
        Ok(s) if s.is_empty() => Ok(None),
        Ok(s) => s
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidParameter(format!("BARBILIAN_SEED '{s}' is not a u64"))),
        Err(_) => Ok(None),
    }
}

struct Effective {
    domain: Domain,
    spec: InfluenceSpec,
    seed: u64,
    opts: SearchOptions,
}

fn resolve(cli: &Cli) -> Result<Effective> {
    let cfg = load_config(cli.config.as_deref())?;
    let domain = match (&cli.domain, &cfg.domain) {
        (Some(s), _) => parse_domain(s)?,
        (None, Some(serde_json::Value::String(name))) => parse_domain(name)?,
        (None, Some(v)) => Domain::from_json(&v.to_string())?,
        (None, None) => Domain::half_plane(),
    };
    let spec = match cli.influence.as_deref().or(cfg.influence.as_deref()) {
        Some(name) => InfluenceSpec::from_name(name)?,
        None => InfluenceSpec::default_for(&domain),
    };
    spec.validate_for(&domain)?;
    let seed = match cli.seed.or(cfg.seed) {
        Some(s) => s,
        None => seed_from_env()?.unwrap_or(0),
    };
    let mut opts = SearchOptions::default();
    if let Some(g) = cli.grid.or(cfg.grid) {
        opts.grid_points_per_chart = g;
    }
    if let Some(t) = cli.tol.or(cfg.tol) {
        opts.refine_tol = t;
    }
    if let Some(n) = cli.max_iters.or(cfg.max_iters) {
        opts.max_refine_iters = n;
    }
    opts.validate()?;
    Ok(Effective { domain, spec, seed, opts })
}

/// Prints every f64 with 17 significant digits ("d.dddddddddddddddde±x").
struct Float17Formatter;

impl serde_json::ser::Formatter for Float17Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Float17Formatter);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::InvalidParameter(format!("cannot serialize result: {e}")))?;
    buf.push(b'\n');
    std::io::stdout().write_all(&buf)?;
    Ok(())
}

fn fmt17(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "inf".to_string()
    }
}

/// A radius that may be infinite; infinite values print as the string "inf".
struct Radius(f64);

impl Serialize for Radius {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            s.serialize_f64(self.0)
        } else {
            s.serialize_str("inf")
        }
    }
}

#[derive(Serialize)]
struct ArgOut {
    chart: usize,
    t: f64,
}

#[derive(Serialize)]
struct DistOut {
    distance: f64,
    sup: f64,
    inf: f64,
    sup_attained: bool,
    inf_attained: bool,
    argmax: Option<ArgOut>,
    argmin: Option<ArgOut>,
}

#[derive(Serialize)]
struct CurvatureOut {
    kappa: f64,
}

#[derive(Serialize)]
struct TangentOut {
    #[serde(rename = "R_plus")]
    r_plus: Radius,
    #[serde(rename = "R_minus")]
    r_minus: Radius,
    lambda: f64,
}

#[derive(Serialize)]
struct LagrangeOut {
    dg11_dydot: f64,
    dg12_dxdot: f64,
    symmetric: bool,
    homogeneity_deviation: f64,
    positive_definite: bool,
}

fn linspace(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    if n <= 1 {
        lo
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

fn execute(cli: &Cli) -> Result<()> {
    let eff = resolve(cli)?;
    match &cli.command {
        Command::Dist { a, b } => {
            let r = barbilian_distance(eff.spec, &eff.domain, *a, *b, &eff.opts)?;
            print_json(&DistOut {
                distance: r.distance,
                sup: r.sup.value,
                inf: r.inf.value,
                sup_attained: r.sup.attained,
                inf_attained: r.inf.attained,
                argmax: r.sup.chart_index.zip(r.sup.arg_t).map(|(chart, t)| ArgOut { chart, t }),
                argmin: r.inf.chart_index.zip(r.inf.arg_t).map(|(chart, t)| ArgOut { chart, t }),
            })
        }
        Command::Axioms { triples } => {
            let mut sampler = DomainSampler::new(&eff.domain, eff.seed);
            let report = check_axioms(eff.spec, &eff.domain, &mut sampler, *triples, &eff.opts)?;
            print_json(&report)
        }
        Command::Field { xmin, xmax, ymin, ymax, nx, ny, slope } => {
            field_csv(&eff.domain, (*xmin, *xmax), (*ymin, *ymax), (*nx, *ny), *slope)
        }
        Command::Curvature { p, step } => {
            let kappa = gaussian_curvature(&eff.domain, *p, *step)?;
            print_json(&CurvatureOut { kappa })
        }
        Command::Tangent { p, slope } => {
            let tc = tangent_circles(&eff.domain, *p, *slope)?;
            print_json(&TangentOut {
                r_plus: Radius(tc.r_plus()),
                r_minus: Radius(tc.r_minus()),
                lambda: tc.lambda(),
            })
        }
        Command::LagrangeCheck { p, v } => {
            if !matches!(eff.domain.kind(), DomainKind::Quadrant) {
                return Err(Error::DomainMismatch(
                    "lagrange-check applies to the quadrant domain".into(),
                ));
            }
            let rep = lagrange::cartan_asymmetry(*p, *v)?;
            print_json(&LagrangeOut {
                dg11_dydot: rep.dg11_dydot,
                dg12_dxdot: rep.dg12_dxdot,
                symmetric: rep.symmetric,
                homogeneity_deviation: lagrange::check_homogeneity(*p, *v)?,
                positive_definite: lagrange::positive_definite(*p, *v)?,
            })
        }
    }
}

fn field_csv(
    domain: &Domain,
    (xmin, xmax): (f64, f64),
    (ymin, ymax): (f64, f64),
    (nx, ny): (usize, usize),
    slope: Slope,
) -> Result<()> {
    if !(xmin <= xmax && ymin <= ymax) {
        return Err(Error::InvalidParameter("field box bounds are reversed".into()));
    }
    if nx == 0 || ny == 0 {
        return Err(Error::InvalidParameter("field grid needs at least one node per axis".into()));
    }
    if !domain.is_planar() {
        return Err(Error::DomainMismatch("field applies to the planar domains".into()));
    }
    let v = match slope {
        Slope::Finite(m) => (1.0, m),
        Slope::Vertical => (0.0, 1.0),
    };
    let m_col = match slope {
        Slope::Finite(m) => fmt17(m),
        Slope::Vertical => "inf".to_string(),
    };
    let mut out = String::from("x,y,m,R_plus,R_minus,lambda,g11,g12,g22\n");
    for i in 0..nx {
        let x = linspace(xmin, xmax, nx, i);
        for j in 0..ny {
            let y = linspace(ymin, ymax, ny, j);
            let p = Point2::new(x, y);
            if !domain.contains(Point::Planar(p)) {
                out.push_str(&format!("# skipped {},{}\n", fmt17(x), fmt17(y)));
                continue;
            }
            let tc = match tangent_circles(domain, p, slope) {
                Ok(tc) => tc,
                Err(Error::ConfigurationInvalid(_)) => {
                    out.push_str(&format!("# skipped {},{}\n", fmt17(x), fmt17(y)));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let g = metric_tensor(domain, p, v)?;
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                fmt17(x),
                fmt17(y),
                m_col,
                fmt17(tc.r_plus()),
                fmt17(tc.r_minus()),
                fmt17(tc.lambda()),
                fmt17(g.g11),
                fmt17(g.g12),
                fmt17(g.g22),
            ));
        }
    }
    std::io::stdout().write_all(out.as_bytes())?;
    Ok(())
}

/// Parses the process arguments, runs the selected command and returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Convergence(_) => 3,
                _ => 2,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_and_slope_parsing() {
        assert!(matches!(parse_point_arg("1,2").unwrap(), Point::Planar(_)));
        assert!(matches!(parse_point_arg("1,2,3").unwrap(), Point::Spatial(_)));
        assert!(parse_point_arg("1").is_err());
        assert!(parse_point_arg("1,x").is_err());
        assert!(parse_point_arg("1,inf").is_err());
        assert!(matches!(parse_slope_arg("inf").unwrap(), Slope::Vertical));
        assert!(matches!(parse_slope_arg("-2.5").unwrap(), Slope::Finite(_)));
        assert!(parse_slope_arg("nan").is_err());
    }

    #[test]
    fn domain_names_and_json_both_resolve() {
        assert!(matches!(parse_domain("halfplane").unwrap().kind(), DomainKind::HalfPlane));
        assert!(matches!(parse_domain("quadrant").unwrap().kind(), DomainKind::Quadrant));
        let d = parse_domain(r#"{"kind":"disk","rho":2.0}"#).unwrap();
        assert!(matches!(d.kind(), DomainKind::Disk { .. }));
        assert!(parse_domain("pentagon").is_err());
    }

    #[test]
    fn seventeen_digit_float_format() {
        assert_eq!(fmt17(2.25), "2.2500000000000000e0");
        assert_eq!(fmt17(std::f64::consts::LN_2), "6.9314718055994529e-1");
        assert_eq!(fmt17(f64::INFINITY), "inf");
        let mut buf = Vec::new();
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, Float17Formatter);
        serde::Serialize::serialize(&0.5f64, &mut ser).unwrap();
        assert_eq!(buf, b"5.0000000000000000e-1");
    }

    #[test]
    fn flags_override_config_file() {
        let dir = std::env::temp_dir().join("barbilian-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("config.json");
        std::fs::write(
            &path,
            r#"{"domain": {"kind": "disk", "rho": 1.0}, "seed": 9, "grid": 512}"#,
        )
        .unwrap();
        let cli = Cli::try_parse_from([
            "barbilian",
            "dist",
            "--a",
            "0,1",
            "--b",
            "0,2",
            "--config",
            path.to_str().unwrap(),
            "--domain",
            "halfplane",
            "--grid",
            "1024",
        ])
        .unwrap();
        let eff = resolve(&cli).unwrap();
        assert!(matches!(eff.domain.kind(), DomainKind::HalfPlane));
        assert_eq!(eff.seed, 9);
        assert_eq!(eff.opts.grid_points_per_chart, 1024);
    }

    #[test]
    fn config_rejects_unknown_keys() {
        let dir = std::env::temp_dir().join("barbilian-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.json");
        std::fs::write(&path, r#"{"sede": 9}"#).unwrap();
        assert!(load_config(Some(&path)).is_err());
    }
}
