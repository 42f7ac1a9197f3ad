//! Circles tangent to a line element (P, slope) and to the boundary K.
//!
//! Through an interior point P with a chosen line direction there are two
//! circles tangent to that line at P and tangent to the boundary, one on
//! each side of the line. Their radii induce the conformal factor
//! λ = (1/R₊ + 1/R₋) / 2, which is how the tangent-circle construction
//! recovers a Riemannian (or generalized Lagrange) metric from the distance.
//!
//! Half plane, disk and quadrant use closed forms; the punctured circle
//! shares the disk's boundary circle and reuses its forms; polyline domains
//! fall back to a monotone bisection on the signed clearance.

use crate::domain::{Domain, DomainKind};
use crate::error::{Error, Result};
use crate::geom::{Point, Point2, Slope};

/// One tangent circle. An infinite radius means the circle degenerates to a
/// boundary-parallel line; it contributes zero to 1/R sums.
#[derive(Clone, Copy, Debug)]
pub struct TangentCircle {
    pub radius: f64,
    /// Center, absent for the degenerate infinite circle.
    pub center: Option<Point2>,
    /// Touch point on the boundary, absent for the degenerate circle.
    pub tangency: Option<Point2>,
}

impl TangentCircle {
    fn finite(radius: f64, center: Point2, tangency: Point2) -> Self {
        TangentCircle { radius, center: Some(center), tangency: Some(tangency) }
    }

    fn infinite() -> Self {
        TangentCircle { radius: f64::INFINITY, center: None, tangency: None }
    }
}

/// The pair of boundary-tangent circles through a line element. `plus` lies
/// on the side of the left normal of the canonical line direction (rightward
/// tangent, or upward for vertical lines), `minus` on the opposite side.
#[derive(Clone, Copy, Debug)]
pub struct TangentCircles {
    pub plus: TangentCircle,
    pub minus: TangentCircle,
}

impl TangentCircles {
    pub fn r_plus(&self) -> f64 {
        self.plus.radius
    }

    pub fn r_minus(&self) -> f64 {
        self.minus.radius
    }

    /// Conformal factor λ = (1/R₊ + 1/R₋) / 2. Infinite radii contribute 0.
    pub fn lambda(&self) -> f64 {
        0.5 * (self.plus.radius.recip() + self.minus.radius.recip())
    }
}

/// The two circles tangent at P to the line of the given slope and tangent
/// to the boundary of `domain`.
pub fn tangent_circles(domain: &Domain, p: Point2, slope: Slope) -> Result<TangentCircles> {
    if !domain.is_planar() {
        return Err(Error::DomainMismatch(
            "tangent circles are defined for the planar domains".into(),
        ));
    }
    if !domain.contains(Point::Planar(p)) {
        return Err(Error::OutsideDomain(format!("{p:?} is not in the admissible region")));
    }
    match domain.kind() {
        DomainKind::HalfPlane => Ok(half_plane_circles(p, slope)),
        DomainKind::Disk { rho } | DomainKind::CircleMinusPoint { rho, .. } => {
            Ok(disk_circles(*rho, p, slope))
        }
        DomainKind::Quadrant => quadrant_circles(p, slope),
        DomainKind::Polyline { .. } => {
            let (_, n) = slope.frame();
            Ok(TangentCircles {
                plus: numeric_circle(domain, p, n, 1.0)?,
                minus: numeric_circle(domain, p, n, -1.0)?,
            })
        }
        _ => unreachable!("planar kinds are covered"),
    }
}

fn half_plane_circles(p: Point2, slope: Slope) -> TangentCircles {
    match slope {
        Slope::Vertical => {
            // Centers sit level with P on both sides; both circles touch the
            // axis directly below their centers.
            let r = p.y;
            TangentCircles {
                plus: TangentCircle::finite(
                    r,
                    Point2::new(p.x - r, p.y),
                    Point2::new(p.x - r, 0.0),
                ),
                minus: TangentCircle::finite(
                    r,
                    Point2::new(p.x + r, p.y),
                    Point2::new(p.x + r, 0.0),
                ),
            }
        }
        Slope::Finite(m) => {
            let h = m.hypot(1.0);
            let (_, n) = slope.frame();
            // Larger circle above the line: R = y h / (h - 1), infinite for
            // a horizontal line element.
            let r_plus = p.y * h / (h - 1.0);
            let plus = if r_plus.is_finite() {
                let c = Point2::new(p.x + r_plus * n.0, p.y + r_plus * n.1);
                TangentCircle::finite(r_plus, c, Point2::new(c.x, 0.0))
            } else {
                TangentCircle::infinite()
            };
            let r_minus = p.y * h / (h + 1.0);
            let c = Point2::new(p.x - r_minus * n.0, p.y - r_minus * n.1);
            let minus = TangentCircle::finite(r_minus, c, Point2::new(c.x, 0.0));
            TangentCircles { plus, minus }
        }
    }
}

fn disk_circles(rho: f64, p: Point2, slope: Slope) -> TangentCircles {
    let (_, n) = slope.frame();
    let w = rho * rho - (p.x * p.x + p.y * p.y);
    let side = |sigma: f64| -> TangentCircle {
        let pn = p.x * n.0 + p.y * n.1;
        let r = w / (2.0 * (rho + sigma * pn));
        let c = Point2::new(p.x + sigma * r * n.0, p.y + sigma * r * n.1);
        let cn = (c.x * c.x + c.y * c.y).sqrt();
        let tangency = if cn > 0.0 {
            Point2::new(c.x * rho / cn, c.y * rho / cn)
        } else {
            // Concentric case: the touch direction is the normal itself.
            Point2::new(sigma * n.0 * rho, sigma * n.1 * rho)
        };
        TangentCircle::finite(r, c, tangency)
    };
    TangentCircles { plus: side(1.0), minus: side(-1.0) }
}

/// True when `a` reaches at least `b` up to rounding slack.
fn clears(a: f64, b: f64) -> bool {
    a >= b - 1e-12 * b.abs().max(1.0)
}

fn quadrant_circles(p: Point2, slope: Slope) -> Result<TangentCircles> {
    let invalid = |which: &str| {
        Err(Error::ConfigurationInvalid(format!(
            "the {which} tangent circle at {p:?} crosses the other boundary ray"
        )))
    };
    match slope {
        Slope::Vertical => {
            // Plus side: tangent to the vertical axis, center halfway.
            let r1 = 0.5 * p.x;
            if !clears(p.y, r1) {
                return invalid("plus");
            }
            let plus =
                TangentCircle::finite(r1, Point2::new(r1, p.y), Point2::new(0.0, p.y));
            // Minus side: tangent to the horizontal axis, always valid.
            let r2 = p.y;
            let minus = TangentCircle::finite(
                r2,
                Point2::new(p.x + r2, p.y),
                Point2::new(p.x + r2, 0.0),
            );
            Ok(TangentCircles { plus, minus })
        }
        Slope::Finite(m) => {
            let h = m.hypot(1.0);
            let (_, n) = slope.frame();
            // Plus side touches the vertical axis.
            let r1 = p.x * h / (h + m);
            let c1 = Point2::new(p.x + r1 * n.0, p.y + r1 * n.1);
            if !clears(c1.y, r1) {
                return invalid("plus");
            }
            // Minus side touches the horizontal axis.
            let r2 = p.y * h / (h + 1.0);
            let c2 = Point2::new(p.x - r2 * n.0, p.y - r2 * n.1);
            if !clears(c2.x, r2) {
                return invalid("minus");
            }
            Ok(TangentCircles {
                plus: TangentCircle::finite(r1, c1, Point2::new(0.0, c1.y)),
                minus: TangentCircle::finite(r2, c2, Point2::new(c2.x, 0.0)),
            })
        }
    }
}

/// Root of dist(P + σ s n, K) = s by bracket doubling and bisection; the
/// clearance dist(C(s), K) - s never increases in s, so the root is unique
/// when it exists. No crossing beyond the cap means the circle degenerates.
fn numeric_circle(domain: &Domain, p: Point2, n: (f64, f64), sigma: f64) -> Result<TangentCircle> {
    let at = |s: f64| Point2::new(p.x + sigma * s * n.0, p.y + sigma * s * n.1);
    let clearance = |s: f64| domain.closest_boundary_point(at(s)).0 - s;
    let d0 = domain.closest_boundary_point(p).0;
    debug_assert!(d0 > 0.0);
    let cap = 1e6 * d0;
    let mut lo = 0.0;
    let mut hi = d0;
    while clearance(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > cap {
            return Ok(TangentCircle::infinite());
        }
    }
    for _ in 0..200 {
        if hi - lo <= 1e-13 * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if clearance(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = 0.5 * (lo + hi);
    let c = at(r);
    let (_, tangency) = domain.closest_boundary_point(c);
    Ok(TangentCircle::finite(r, c, tangency))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_plane_radii_follow_the_slope_form() {
        // At height 2/3 with slope 2√2 the radii come out 1 and 1/2.
        let hp = Domain::half_plane();
        let tc = tangent_circles(&hp, Point2::new(0.3, 2.0 / 3.0), Slope::Finite(8.0f64.sqrt()))
            .unwrap();
        assert!((tc.r_plus() - 1.0).abs() <= 1e-14);
        assert!((tc.r_minus() - 0.5).abs() <= 1e-14);
        assert!((tc.lambda() - 1.5).abs() <= 1e-14);
    }

    #[test]
    fn half_plane_radius_identity() {
        // (1/R + 1/r)² / 4 = 1 / y² independently of the slope.
        let hp = Domain::half_plane();
        for &m in &[-3.0, -0.7, 0.0, 0.2, 1.0, 12.5] {
            for &y in &[0.1, 1.0, 7.3] {
                let tc = tangent_circles(&hp, Point2::new(-2.0, y), Slope::Finite(m)).unwrap();
                let lhs = 0.25 * (tc.r_plus().recip() + tc.r_minus().recip()).powi(2);
                assert!((lhs - 1.0 / (y * y)).abs() <= 1e-13 / (y * y));
            }
            let tc = tangent_circles(&hp, Point2::new(-2.0, 2.0), Slope::Vertical).unwrap();
            assert_eq!(tc.r_plus(), 2.0);
            assert_eq!(tc.r_minus(), 2.0);
        }
    }

    #[test]
    fn horizontal_element_in_the_half_plane_degenerates_upward() {
        let hp = Domain::half_plane();
        let tc = tangent_circles(&hp, Point2::new(1.0, 2.0), Slope::Finite(0.0)).unwrap();
        assert!(tc.r_plus().is_infinite());
        assert!(tc.plus.center.is_none() && tc.plus.tangency.is_none());
        assert_eq!(tc.r_minus(), 1.0);
        assert!((tc.lambda() - 0.5).abs() <= 1e-15);
    }

    #[test]
    fn disk_factor_is_slope_free_and_hyperbolic() {
        let disk = Domain::disk(1.0).unwrap();
        let p = Point2::new(0.3, -0.2);
        let expect = 2.0 / (1.0 - (p.x * p.x + p.y * p.y));
        for slope in [Slope::Finite(-2.0), Slope::Finite(0.0), Slope::Finite(0.9), Slope::Vertical]
        {
            let tc = tangent_circles(&disk, p, slope).unwrap();
            assert!((tc.lambda() - expect).abs() <= 1e-12 * expect);
            // Both circles touch the unit circle from inside.
            for c in [tc.plus, tc.minus] {
                let t = c.tangency.unwrap();
                assert!((t.x * t.x + t.y * t.y - 1.0).abs() <= 1e-12);
                let ctr = c.center.unwrap();
                let cn = (ctr.x * ctr.x + ctr.y * ctr.y).sqrt();
                assert!((cn + c.radius - 1.0).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn quadrant_radii_touch_their_own_axes() {
        let q = Domain::quadrant();
        let tc = tangent_circles(&q, Point2::new(1.0, 1.0), Slope::Finite(1.0)).unwrap();
        let expect = 2.0 - std::f64::consts::SQRT_2;
        assert!((tc.r_plus() - expect).abs() <= 1e-14);
        assert!((tc.r_minus() - expect).abs() <= 1e-14);
        assert_eq!(tc.plus.tangency.unwrap().x, 0.0);
        assert_eq!(tc.minus.tangency.unwrap().y, 0.0);
        // λ equals the square root of the direction-dependent tensor entry
        // ((x ẋ + y ẏ + (x+y)|v|) / (2 x y |v|))² for v = (1, 1).
        let lambda_expect = (1.5 + std::f64::consts::SQRT_2).sqrt();
        assert!((tc.lambda() - lambda_expect).abs() <= 1e-13);
    }

    #[test]
    fn quadrant_rejects_circles_that_cross_the_far_ray() {
        let q = Domain::quadrant();
        // Horizontal element high above a thin strip of x: the minus circle
        // (radius y/2) would cross the vertical axis.
        let r = tangent_circles(&q, Point2::new(0.2, 3.0), Slope::Finite(0.0));
        assert!(matches!(r, Err(Error::ConfigurationInvalid(_))));
        // Vertical element close to the horizontal axis: the plus circle
        // (radius x/2) would cross it.
        let r = tangent_circles(&q, Point2::new(2.0, 0.5), Slope::Vertical);
        assert!(matches!(r, Err(Error::ConfigurationInvalid(_))));
        // Same elements placed safely are fine.
        assert!(tangent_circles(&q, Point2::new(2.0, 3.0), Slope::Vertical).is_ok());
    }

    #[test]
    fn punctured_circle_shares_the_disk_forms() {
        let disk = Domain::disk(1.0).unwrap();
        let cmp = Domain::circle_minus_point(1.0, 0.7).unwrap();
        let p = Point2::new(-0.4, 0.1);
        let a = tangent_circles(&disk, p, Slope::Finite(0.3)).unwrap();
        let b = tangent_circles(&cmp, p, Slope::Finite(0.3)).unwrap();
        assert_eq!(a.r_plus(), b.r_plus());
        assert_eq!(a.r_minus(), b.r_minus());
    }

    #[test]
    fn polyline_solver_matches_the_half_plane_forms() {
        use crate::domain::Segment;
        // A long horizontal segment behaves like the half-plane boundary for
        // points near its middle.
        let seg = Segment::Line { from: Point2::new(-1e3, 0.0), to: Point2::new(1e3, 0.0) };
        let poly = Domain::polyline(vec![seg], true).unwrap();
        let hp = Domain::half_plane();
        let p = Point2::new(0.0, 1.0);
        for slope in [Slope::Finite(1.0), Slope::Finite(-0.4), Slope::Vertical] {
            let num = tangent_circles(&poly, p, slope).unwrap();
            let exact = tangent_circles(&hp, p, slope).unwrap();
            assert!((num.r_plus() - exact.r_plus()).abs() <= 1e-9 * exact.r_plus());
            assert!((num.r_minus() - exact.r_minus()).abs() <= 1e-9 * exact.r_minus());
        }
        // A horizontal element degenerates on the plus side, and the solver
        // reports that rather than diverging.
        let num = tangent_circles(&poly, p, Slope::Finite(0.0)).unwrap();
        assert!(num.r_plus().is_infinite());
    }

    #[test]
    fn spatial_domains_are_rejected() {
        let planes = Domain::parallel_planes(1.0).unwrap();
        let r = tangent_circles(&planes, Point2::new(0.0, 0.0), Slope::Vertical);
        assert!(matches!(r, Err(Error::DomainMismatch(_))));
    }
}
