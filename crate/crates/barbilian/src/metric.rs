//! Metric structures induced by the tangent-circle construction.
//!
//! On the half plane and the disk the factor λ = (1/R₊ + 1/R₋)/2 does not
//! depend on the slope of the line element, so ds = λ |dP| is Riemannian and
//! its Gaussian curvature can be checked numerically. On the quadrant λ keeps
//! a genuine direction dependence and the induced object is a generalized
//! Lagrange tensor, handled in closed form here and probed further in
//! [`crate::lagrange`].

use crate::distance::barbilian_distance;
use crate::domain::{Domain, DomainKind};
use crate::error::{Error, Result};
use crate::extremum::SearchOptions;
use crate::geom::{Direction2, Point, Point2};
use crate::influence::InfluenceSpec;
use crate::tangent::tangent_circles;

/// Components of the induced metric tensor at a point (and direction, where
/// the direction matters). Conformal throughout: g11 = g22 and g12 = 0.
#[derive(Clone, Copy, Debug)]
pub struct MetricTensor {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
}

impl MetricTensor {
    pub fn lambda(&self) -> f64 {
        self.g11.sqrt()
    }

    fn conformal(lambda: f64) -> Self {
        MetricTensor { g11: lambda * lambda, g12: 0.0, g22: lambda * lambda }
    }
}

const PROBE_SLOPES: [f64; 7] = [-4.0, -1.0, -0.3, 0.0, 0.5, 1.0, 6.0];

/// The slope-independent conformal factor of an isotropic domain (half
/// plane, disk, punctured circle). Probes eight line elements and insists
/// they agree before returning their value.
pub fn conformal_factor(domain: &Domain, p: Point2) -> Result<f64> {
    match domain.kind() {
        DomainKind::HalfPlane | DomainKind::Disk { .. } | DomainKind::CircleMinusPoint { .. } => {}
        other => {
            return Err(Error::DomainMismatch(format!(
                "the conformal factor of {other:?} depends on direction; use metric_tensor"
            )))
        }
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut sum = 0.0;
    let mut count = 0.0;
    let mut probe = |slope| -> Result<()> {
        let l = tangent_circles(domain, p, slope)?.lambda();
        lo = lo.min(l);
        hi = hi.max(l);
        sum += l;
        count += 1.0;
        Ok(())
    };
    for m in PROBE_SLOPES {
        probe(crate::geom::Slope::Finite(m))?;
    }
    probe(crate::geom::Slope::Vertical)?;
    let mean = sum / count;
    assert!(
        hi - lo <= 1e-10 * mean.max(1.0),
        "direction spread {:.3e} at {p:?} breaks isotropy",
        hi - lo
    );
    Ok(mean)
}

/// The induced tensor at `p` in the direction `v`.
pub fn metric_tensor(domain: &Domain, p: Point2, v: (f64, f64)) -> Result<MetricTensor> {
    let dir = Direction2::new(v.0, v.1)?;
    if !domain.contains(Point::Planar(p)) {
        return Err(Error::OutsideDomain(format!("{p:?} is not in the admissible region")));
    }
    match domain.kind() {
        DomainKind::HalfPlane | DomainKind::Disk { .. } | DomainKind::CircleMinusPoint { .. } => {
            Ok(MetricTensor::conformal(conformal_factor(domain, p)?))
        }
        DomainKind::Quadrant => Ok(MetricTensor::conformal(quadrant_lambda(p, v))),
        DomainKind::Polyline { .. } => {
            Ok(MetricTensor::conformal(tangent_circles(domain, p, dir.slope())?.lambda()))
        }
        other => Err(Error::DomainMismatch(format!("{other:?} has no planar induced tensor"))),
    }
}

/// λ(x, y, v) = (x ẋ + y ẏ + (x + y) |v|) / (2 x y |v|) on the quadrant,
/// with v canonicalized to point into the right half (the factor belongs to
/// the undirected line element).
pub(crate) fn quadrant_lambda(p: Point2, v: (f64, f64)) -> f64 {
    let (mut vx, mut vy) = v;
    if vx < 0.0 || (vx == 0.0 && vy < 0.0) {
        vx = -vx;
        vy = -vy;
    }
    let speed = vx.hypot(vy);
    (p.x * vx + p.y * vy + (p.x + p.y) * speed) / (2.0 * p.x * p.y * speed)
}

/// Gaussian curvature κ = -Δ(ln λ) / λ² of an isotropic domain, with the
/// Laplacian taken by five-point central differences of step `h` (default:
/// a thousandth of the boundary distance). The stencil must stay well inside
/// the domain, so `h` may not exceed a tenth of the boundary distance.
pub fn gaussian_curvature(domain: &Domain, p: Point2, h: Option<f64>) -> Result<f64> {
    if !domain.contains(Point::Planar(p)) {
        return Err(Error::OutsideDomain(format!("{p:?} is not in the admissible region")));
    }
    let dist = domain.distance_to_boundary(Point::Planar(p));
    let h = h.unwrap_or(1e-3 * dist);
    if !(h > 0.0) || h > dist / 10.0 {
        return Err(Error::InvalidParameter(format!(
            "stencil step {h:.3e} must lie in (0, {:.3e}]",
            dist / 10.0
        )));
    }
    let log_lambda = |x: f64, y: f64| -> Result<f64> {
        Ok(conformal_factor(domain, Point2::new(x, y))?.ln())
    };
    let center = log_lambda(p.x, p.y)?;
    let mut laplacian = 0.0;
    for axis in 0..2 {
        let at = |k: f64| -> Result<f64> {
            if axis == 0 {
                log_lambda(p.x + k * h, p.y)
            } else {
                log_lambda(p.x, p.y + k * h)
            }
        };
        laplacian += (-at(2.0)? + 16.0 * at(1.0)? - 30.0 * center + 16.0 * at(-1.0)?
            - at(-2.0)?)
            / (12.0 * h * h);
    }
    let lambda = conformal_factor(domain, p)?;
    Ok(-laplacian / (lambda * lambda))
}

/// Length of a polygonal path under the induced metric, midpoint rule per
/// segment. Exact segment directions are used, so this is meaningful on the
/// quadrant as well.
pub fn path_length(domain: &Domain, path: &[Point2]) -> Result<f64> {
    if path.len() < 2 {
        return Err(Error::InvalidParameter("a path needs at least two points".into()));
    }
    let mut total = 0.0;
    for w in path.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (dx, dy) = (b.x - a.x, b.y - a.y);
        let step = dx.hypot(dy);
        if step == 0.0 {
            continue;
        }
        let mid = Point2::new(0.5 * (a.x + b.x), 0.5 * (a.y + b.y));
        let g = metric_tensor(domain, mid, (dx, dy))?;
        total += (g.g11 * dx * dx + 2.0 * g.g12 * dx * dy + g.g22 * dy * dy).sqrt();
    }
    Ok(total)
}

/// Step ladder used by [`metric_derivative`]; polynomial extrapolation on
/// these nodes removes the first- and second-order error terms.
pub const DERIVATIVE_EPS_LADDER: [f64; 3] = [1e-2, 5e-3, 2.5e-3];

/// The limit of d(P, P + ε v̂) / ε as ε goes to zero, extrapolated from the
/// ladder of step sizes. On the isotropic domains this recovers the
/// conformal factor for every direction. On the quadrant the first-order
/// behaviour of the ratio field is carried by its level circles, which are
/// tangent to the perpendicular of `v`, so the limit equals the
/// tangent-circle factor of that perpendicular element; it matches the
/// velocity-form tensor only where the two elements carry the same factor,
/// e.g. at (1, 1) with direction (1, 0). The point must sit at least twice
/// the largest step away from the boundary.
pub fn metric_derivative(
    spec: InfluenceSpec,
    domain: &Domain,
    p: Point2,
    v: (f64, f64),
    opts: &SearchOptions,
) -> Result<f64> {
    let dir = Direction2::new(v.0, v.1)?;
    if !domain.contains(Point::Planar(p)) {
        return Err(Error::OutsideDomain(format!("{p:?} is not in the admissible region")));
    }
    let max_eps = DERIVATIVE_EPS_LADDER[0];
    if domain.distance_to_boundary(Point::Planar(p)) <= 2.0 * max_eps {
        return Err(Error::InvalidParameter(format!(
            "{p:?} is too close to the boundary for the step ladder"
        )));
    }
    let (ux, uy) = dir.unit();
    let mut quotients = [0.0; DERIVATIVE_EPS_LADDER.len()];
    for (q, &eps) in quotients.iter_mut().zip(DERIVATIVE_EPS_LADDER.iter()) {
        let b = Point2::new(p.x + eps * ux, p.y + eps * uy);
        let d = barbilian_distance(spec, domain, Point::Planar(p), Point::Planar(b), opts)?;
        *q = d.distance / eps;
    }
    Ok(neville_at_zero(&DERIVATIVE_EPS_LADDER, &quotients))
}

fn neville_at_zero(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len();
    let mut q = ys.to_vec();
    for k in 1..n {
        for i in 0..n - k {
            q[i] = (-xs[i + k] * q[i] + xs[i] * q[i + 1]) / (xs[i] - xs[i + k]);
        }
    }
    q[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_plane_factor_is_reciprocal_height() {
        let hp = Domain::half_plane();
        for &(x, y) in &[(0.0, 1.0), (-3.2, 0.4), (10.0, 7.5)] {
            let l = conformal_factor(&hp, Point2::new(x, y)).unwrap();
            assert!((l - 1.0 / y).abs() <= 1e-12 / y);
        }
    }

    #[test]
    fn disk_factor_matches_the_poincare_form() {
        let disk = Domain::disk(2.0).unwrap();
        let p = Point2::new(0.7, -0.9);
        let expect = 2.0 * 2.0 / (4.0 - (p.x * p.x + p.y * p.y));
        let l = conformal_factor(&disk, p).unwrap();
        assert!((l - expect).abs() <= 1e-12 * expect);
    }

    #[test]
    fn isotropic_domains_have_curvature_minus_one() {
        let hp = Domain::half_plane();
        let k = gaussian_curvature(&hp, Point2::new(0.3, 1.7), None).unwrap();
        assert!((k + 1.0).abs() <= 1e-4, "half-plane curvature {k}");

        let disk = Domain::disk(1.0).unwrap();
        let k = gaussian_curvature(&disk, Point2::new(0.25, -0.4), None).unwrap();
        assert!((k + 1.0).abs() <= 1e-4, "disk curvature {k}");
    }

    #[test]
    fn curvature_rejects_oversized_stencils() {
        let hp = Domain::half_plane();
        let r = gaussian_curvature(&hp, Point2::new(0.0, 1.0), Some(0.2));
        assert!(matches!(r, Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn quadrant_tensor_closed_form() {
        let q = Domain::quadrant();
        let g = metric_tensor(&q, Point2::new(1.0, 1.0), (1.0, 0.0)).unwrap();
        assert!((g.g11 - 2.25).abs() <= 1e-14);
        assert_eq!(g.g12, 0.0);
        assert_eq!(g.g11, g.g22);
        // The element is undirected: the opposite velocity gives the same
        // tensor.
        let g2 = metric_tensor(&q, Point2::new(1.0, 1.0), (-1.0, 0.0)).unwrap();
        assert_eq!(g.g11, g2.g11);
        // Direction dependence is real: the diagonal direction differs.
        let gd = metric_tensor(&q, Point2::new(1.0, 2.0), (1.0, 1.0)).unwrap();
        assert!((gd.g11 - g.g11).abs() > 1e-3);
    }

    #[test]
    fn quadrant_tensor_agrees_with_tangent_circles() {
        let q = Domain::quadrant();
        let p = Point2::new(1.3, 0.8);
        for &(vx, vy) in &[(1.0, 1.0), (1.0, -0.5), (2.0, 0.1), (0.0, 1.0)] {
            let g = metric_tensor(&q, p, (vx, vy)).unwrap();
            let slope = Direction2::new(vx, vy).unwrap().slope();
            if let Ok(tc) = tangent_circles(&q, p, slope) {
                assert!((g.lambda() - tc.lambda()).abs() <= 1e-12 * tc.lambda());
            }
        }
    }

    #[test]
    fn vertical_path_in_the_half_plane_has_logarithmic_length() {
        let hp = Domain::half_plane();
        let n = 2000;
        let path: Vec<Point2> = (0..=n)
            .map(|i| Point2::new(0.0, 1.0 + i as f64 / n as f64))
            .collect();
        let len = path_length(&hp, &path).unwrap();
        assert!((len - std::f64::consts::LN_2).abs() <= 1e-6);
    }

    #[test]
    fn distance_never_exceeds_any_path_length_on_isotropic_domains() {
        // On the isotropic domains the distance is the geodesic distance of
        // the conformal metric, so every discretized path must be at least
        // as long. Wavy paths between fixed endpoints probe that bound.
        let opts = SearchOptions::default();
        let spec = InfluenceSpec::euclidean();
        let cases = [
            (Domain::half_plane(), Point2::new(-1.0, 0.8), Point2::new(1.5, 2.0)),
            (Domain::disk(1.0).unwrap(), Point2::new(-0.4, 0.1), Point2::new(0.5, 0.3)),
        ];
        for (domain, a, b) in cases {
            let d = barbilian_distance(spec, &domain, a.into(), b.into(), &opts)
                .unwrap()
                .distance;
            for wobble in [0.0, 0.1, 0.25] {
                let n = 600;
                let path: Vec<Point2> = (0..=n)
                    .map(|i| {
                        let t = i as f64 / n as f64;
                        let s = wobble * (std::f64::consts::PI * t).sin();
                        Point2::new(
                            a.x + t * (b.x - a.x) - s * (b.y - a.y),
                            a.y + t * (b.y - a.y) + s * (b.x - a.x),
                        )
                    })
                    .collect();
                let len = path_length(&domain, &path).unwrap();
                assert!(d <= len + 1e-9, "wobble {wobble}: d {d} > length {len}");
            }
        }
    }

    #[test]
    fn derivative_of_distance_recovers_the_factor() {
        let opts = SearchOptions::default();
        let spec = InfluenceSpec::euclidean();

        let hp = Domain::half_plane();
        let l = metric_derivative(spec, &hp, Point2::new(0.0, 1.0), (0.0, 1.0), &opts).unwrap();
        assert!((l - 1.0).abs() <= 1e-4, "half-plane derivative {l}");

        let q = Domain::quadrant();
        let l = metric_derivative(spec, &q, Point2::new(1.0, 1.0), (1.0, 0.0), &opts).unwrap();
        assert!((l - 1.5).abs() <= 1e-3, "quadrant derivative {l}");
    }

    #[test]
    fn derivative_needs_room_around_the_point() {
        let hp = Domain::half_plane();
        let r = metric_derivative(
            InfluenceSpec::euclidean(),
            &hp,
            Point2::new(0.0, 0.015),
            (1.0, 0.0),
            &SearchOptions::default(),
        );
        assert!(matches!(r, Err(Error::InvalidParameter(_))));
    }
}
