//! Boundary sets K, admissible regions J and their parametrized charts.
//!
//! A domain is a pair (K, J): the boundary K carries the influence sources,
//! J is the open set of points the induced distance lives on. Planar domains
//! expose one-parameter boundary charts; the two 3-D domains (parallel
//! planes, concentric spheres) expose a two-parameter surface and build their
//! symmetry-reduced one-parameter search locus per query in the extremum
//! module.

use crate::error::{Error, Result};
use crate::geom::{Point, Point2, Point3};

/// Structural description of a built-in domain.
#[derive(Clone, Debug, PartialEq)]
pub enum DomainKind {
    /// K = x-axis, J = open upper half-plane.
    HalfPlane,
    /// K = circle of radius `rho` centred at the origin, J = open disk.
    Disk { rho: f64 },
    /// K = the two open positive coordinate half-axes, J = open first quadrant.
    Quadrant,
    /// K = circle of radius `rho` with the point at angle `l_angle` removed,
    /// J = open disk. The boundary is not compact, so extrema may be
    /// suprema/infima approached at the removed point.
    CircleMinusPoint { rho: f64, l_angle: f64 },
    /// K = plane z = `h`, J = plane z = 0 (orthogonal projection influence).
    ParallelPlanes { h: f64 },
    /// K = sphere of radius `r_k`, J = sphere of radius `r_j`, same centre
    /// (radial projection influence).
    ConcentricSpheres { r_k: f64, r_j: f64 },
    /// K = a user-supplied union of segments and arcs, J = its complement.
    Polyline { segments: Vec<Segment>, compact: bool },
}

/// One piece of a custom polyline boundary.
#[derive(Clone, Debug, PartialEq)]
pub enum Segment {
    Line { from: Point2, to: Point2 },
    Arc { center: Point2, radius: f64, from_angle: f64, to_angle: f64 },
}

/// Value the ratio g_AB tends to as the chart parameter approaches an open
/// end. `UnitRatio` covers boundaries escaping to infinity under the
/// Euclidean influence; `AtPoint` covers ends accumulating at a finite point
/// excluded from K (the removed circle point, the quadrant corner), where the
/// limit is the continuous continuation of g at that point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LimitCandidate {
    UnitRatio,
    AtPoint(Point2),
}

/// Geometry of a one-parameter boundary chart. The public parameter `t` is
/// the natural one: a signed coordinate along lines and rays, arclength on
/// segments, the angle on arcs.
#[derive(Clone, Debug)]
pub enum ChartCurve {
    /// t ∈ (-inf, inf): origin + t * dir.
    Line { origin: Point2, dir: (f64, f64) },
    /// t ∈ (0, inf): origin + t * dir.
    Ray { origin: Point2, dir: (f64, f64) },
    /// t ∈ [0, len]: a + t * unit(b - a).
    Segment { a: Point2, b: Point2, len: f64 },
    /// t ∈ [lo, hi] (or [lo, hi) when periodic): center + radius * e(t).
    Arc { center: Point2, radius: f64, lo: f64, hi: f64, periodic: bool },
}

/// A boundary chart: curve geometry, compactness flag and the limit
/// candidates attached to open ends (index 0 = lower end, 1 = upper end).
#[derive(Clone, Debug)]
pub struct BoundaryChart {
    pub curve: ChartCurve,
    pub compact: bool,
    pub end_limits: [Option<LimitCandidate>; 2],
}

impl BoundaryChart {
    /// Point of K at chart parameter `t`; errors when `t` leaves the range.
    pub fn point_at(&self, t: f64) -> Result<Point2> {
        if !t.is_finite() {
            return Err(Error::OutsideDomain("chart parameter must be finite".into()));
        }
        match &self.curve {
            ChartCurve::Line { origin, dir } => {
                Ok(Point2::new(origin.x + t * dir.0, origin.y + t * dir.1))
            }
            ChartCurve::Ray { origin, dir } => {
                if t <= 0.0 {
                    return Err(Error::OutsideDomain(format!(
                        "ray parameter {t} must be positive"
                    )));
                }
                Ok(Point2::new(origin.x + t * dir.0, origin.y + t * dir.1))
            }
            ChartCurve::Segment { a, b, len } => {
                if !(0.0..=*len).contains(&t) {
                    return Err(Error::OutsideDomain(format!(
                        "segment parameter {t} outside [0, {len}]"
                    )));
                }
                let u = ((b.x - a.x) / len, (b.y - a.y) / len);
                Ok(Point2::new(a.x + t * u.0, a.y + t * u.1))
            }
            ChartCurve::Arc { center, radius, lo, hi, periodic } => {
                let in_range = if *periodic { t >= *lo && t < *hi } else { t >= *lo && t <= *hi };
                // Open arcs (non-compact charts) exclude both ends.
                let in_range = if self.compact || *periodic {
                    in_range
                } else {
                    t > *lo && t < *hi
                };
                if !in_range {
                    return Err(Error::OutsideDomain(format!(
                        "arc parameter {t} outside ({lo}, {hi})"
                    )));
                }
                Ok(Point2::new(center.x + radius * t.cos(), center.y + radius * t.sin()))
            }
        }
    }

    /// Raw evaluation without range checks; used by the search grids, whose
    /// construction keeps parameters in range by design.
    pub(crate) fn point_unchecked(&self, t: f64) -> Point2 {
        match &self.curve {
            ChartCurve::Line { origin, dir } | ChartCurve::Ray { origin, dir } => {
                Point2::new(origin.x + t * dir.0, origin.y + t * dir.1)
            }
            ChartCurve::Segment { a, b, len } => {
                if *len == 0.0 {
                    return *a;
                }
                let u = ((b.x - a.x) / len, (b.y - a.y) / len);
                Point2::new(a.x + t * u.0, a.y + t * u.1)
            }
            ChartCurve::Arc { center, radius, .. } => {
                Point2::new(center.x + radius * t.cos(), center.y + radius * t.sin())
            }
        }
    }

    /// Midpoint of the parameter range (used by the trivial A = B result).
    pub(crate) fn midpoint_t(&self) -> f64 {
        match &self.curve {
            ChartCurve::Line { .. } => 0.0,
            ChartCurve::Ray { .. } => 1.0,
            ChartCurve::Segment { len, .. } => 0.5 * len,
            ChartCurve::Arc { lo, hi, .. } => 0.5 * (lo + hi),
        }
    }
}

/// A boundary/admissible-region pair with its boundary charts.
#[derive(Clone, Debug)]
pub struct Domain {
    kind: DomainKind,
    charts: Vec<BoundaryChart>,
}

fn require_positive(name: &str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")));
    }
    Ok(())
}

impl Domain {
    pub fn half_plane() -> Domain {
        let chart = BoundaryChart {
            curve: ChartCurve::Line { origin: Point2::new(0.0, 0.0), dir: (1.0, 0.0) },
            compact: false,
            end_limits: [Some(LimitCandidate::UnitRatio), Some(LimitCandidate::UnitRatio)],
        };
        Domain { kind: DomainKind::HalfPlane, charts: vec![chart] }
    }

    pub fn disk(rho: f64) -> Result<Domain> {
        require_positive("disk radius", rho)?;
        let chart = BoundaryChart {
            curve: ChartCurve::Arc {
                center: Point2::new(0.0, 0.0),
                radius: rho,
                lo: 0.0,
                hi: 2.0 * std::f64::consts::PI,
                periodic: true,
            },
            compact: true,
            end_limits: [None, None],
        };
        Ok(Domain { kind: DomainKind::Disk { rho }, charts: vec![chart] })
    }

    pub fn quadrant() -> Domain {
        let origin = Point2::new(0.0, 0.0);
        let mk = |dir: (f64, f64)| BoundaryChart {
            curve: ChartCurve::Ray { origin, dir },
            compact: false,
            end_limits: [
                Some(LimitCandidate::AtPoint(origin)),
                Some(LimitCandidate::UnitRatio),
            ],
        };
        Domain { kind: DomainKind::Quadrant, charts: vec![mk((1.0, 0.0)), mk((0.0, 1.0))] }
    }

    pub fn circle_minus_point(rho: f64, l_angle: f64) -> Result<Domain> {
        require_positive("circle radius", rho)?;
        if !l_angle.is_finite() {
            return Err(Error::InvalidParameter("l_angle must be finite".into()));
        }
        let l = Point2::new(rho * l_angle.cos(), rho * l_angle.sin());
        let chart = BoundaryChart {
            curve: ChartCurve::Arc {
                center: Point2::new(0.0, 0.0),
                radius: rho,
                lo: l_angle,
                hi: l_angle + 2.0 * std::f64::consts::PI,
                periodic: false,
            },
            compact: false,
            end_limits: [
                Some(LimitCandidate::AtPoint(l)),
                Some(LimitCandidate::AtPoint(l)),
            ],
        };
        Ok(Domain { kind: DomainKind::CircleMinusPoint { rho, l_angle }, charts: vec![chart] })
    }

    pub fn parallel_planes(h: f64) -> Result<Domain> {
        require_positive("plane separation h", h)?;
        Ok(Domain { kind: DomainKind::ParallelPlanes { h }, charts: Vec::new() })
    }

    /// Concentric spheres; equal radii are accepted because the exponential
    /// influence stays positive even where K meets J.
    pub fn concentric_spheres(r_k: f64, r_j: f64) -> Result<Domain> {
        require_positive("boundary sphere radius r_k", r_k)?;
        require_positive("admissible sphere radius r_j", r_j)?;
        Ok(Domain { kind: DomainKind::ConcentricSpheres { r_k, r_j }, charts: Vec::new() })
    }

    pub fn polyline(segments: Vec<Segment>, compact: bool) -> Result<Domain> {
        if segments.is_empty() {
            return Err(Error::InvalidParameter("polyline needs at least one segment".into()));
        }
        let mut charts = Vec::with_capacity(segments.len());
        for seg in &segments {
            charts.push(polyline_chart(seg, compact)?);
        }
        Ok(Domain { kind: DomainKind::Polyline { segments, compact }, charts })
    }

    /// Degenerate single-point boundary. The ratio of distances to a single
    /// source is constant along nothing but still well defined; this exists
    /// so effectiveness tests can exhibit a non-effective influence.
    #[cfg(test)]
    pub(crate) fn single_point(p: Point2) -> Domain {
        let chart = BoundaryChart {
            curve: ChartCurve::Segment { a: p, b: p, len: 0.0 },
            compact: true,
            end_limits: [None, None],
        };
        Domain {
            kind: DomainKind::Polyline {
                segments: vec![Segment::Line { from: p, to: p }],
                compact: true,
            },
            charts: vec![chart],
        }
    }

    /// Strict JSON constructor. The object must carry a `kind` tag and
    /// exactly the keys that kind uses; anything else is rejected.
    pub fn from_json(text: &str) -> Result<Domain> {
        json::domain_from_json(text)
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    /// One-parameter boundary charts (empty for the 3-D domains).
    pub fn charts(&self) -> &[BoundaryChart] {
        &self.charts
    }

    pub fn is_planar(&self) -> bool {
        !matches!(
            self.kind,
            DomainKind::ParallelPlanes { .. } | DomainKind::ConcentricSpheres { .. }
        )
    }

    /// Membership in the admissible region J.
    pub fn contains(&self, p: Point) -> bool {
        match (&self.kind, p) {
            (DomainKind::HalfPlane, Point::Planar(p)) => p.y > 0.0,
            (DomainKind::Disk { rho }, Point::Planar(p))
            | (DomainKind::CircleMinusPoint { rho, .. }, Point::Planar(p)) => p.norm() < *rho,
            (DomainKind::Quadrant, Point::Planar(p)) => p.x > 0.0 && p.y > 0.0,
            (DomainKind::Polyline { .. }, Point::Planar(p)) => {
                self.distance_to_boundary(Point::Planar(p)) > 0.0
            }
            (DomainKind::ParallelPlanes { .. }, Point::Spatial(p)) => p.z == 0.0,
            (DomainKind::ConcentricSpheres { r_j, .. }, Point::Spatial(p)) => {
                (p.norm() - r_j).abs() <= 1e-9 * r_j.max(1.0)
            }
            _ => false,
        }
    }

    /// Point of K for a one-parameter chart. Errors for 3-D domains (their
    /// boundary is two-parameter; see [`Domain::boundary_point3`]).
    pub fn boundary_point(&self, chart_index: usize, t: f64) -> Result<Point> {
        let chart = self.charts.get(chart_index).ok_or_else(|| {
            Error::OutsideDomain(format!(
                "chart index {chart_index} out of range ({} charts)",
                self.charts.len()
            ))
        })?;
        Ok(Point::Planar(chart.point_at(t)?))
    }

    /// Point of the two-parameter boundary surface of a 3-D domain.
    /// Planes: (u, v) ↦ (tan u, tan v, h) with u, v ∈ (-π/2, π/2).
    /// Spheres: longitude u ∈ [0, 2π), latitude v ∈ (-π/2, π/2).
    pub fn boundary_point3(&self, u: f64, v: f64) -> Result<Point3> {
        match self.kind {
            DomainKind::ParallelPlanes { h } => Ok(Point3::new(u.tan(), v.tan(), h)),
            DomainKind::ConcentricSpheres { r_k, .. } => Ok(Point3::new(
                r_k * v.cos() * u.cos(),
                r_k * v.cos() * u.sin(),
                r_k * v.sin(),
            )),
            _ => Err(Error::OutsideDomain(
                "boundary_point3 applies to the 3-D domains only".into(),
            )),
        }
    }

    /// Distance from `p` to the closure of K.
    pub fn distance_to_boundary(&self, p: Point) -> f64 {
        match (&self.kind, p) {
            (DomainKind::ParallelPlanes { h }, Point::Spatial(p)) => (p.z - h).abs(),
            (DomainKind::ConcentricSpheres { r_k, .. }, Point::Spatial(p)) => {
                (p.norm() - r_k).abs()
            }
            (_, Point::Planar(p)) => self.closest_boundary_point(p).0,
            _ => f64::INFINITY,
        }
    }

    /// Distance to the closure of K together with a closest point, for planar
    /// domains. Used by the numeric tangent solver and the samplers.
    pub fn closest_boundary_point(&self, p: Point2) -> (f64, Point2) {
        let mut best = (f64::INFINITY, p);
        for chart in &self.charts {
            let cand = closest_on_curve(&chart.curve, p);
            if cand.0 < best.0 {
                best = cand;
            }
        }
        best
    }

    /// Roughly uniform sample of boundary points across all charts
    /// (effectiveness checks). Non-compact directions are compactified first,
    /// so the samples also populate the far tails.
    pub(crate) fn boundary_samples(&self, n: usize) -> Vec<Point> {
        let n = n.max(4);
        let mut out = Vec::with_capacity(n);
        if self.is_planar() {
            let per = (n / self.charts.len().max(1)).max(2);
            for chart in &self.charts {
                let iv = crate::extremum::chart_interval(chart);
                for i in 0..per {
                    let th = iv.sample_theta(i, per);
                    out.push(Point::Planar(chart.point_unchecked(iv.to_t(th))));
                }
            }
        } else {
            let side = (n as f64).sqrt().ceil() as usize;
            let (ulo, uhi, vlo, vhi) = match self.kind {
                DomainKind::ParallelPlanes { .. } => {
                    let h = std::f64::consts::FRAC_PI_2;
                    (-h, h, -h, h)
                }
                _ => (0.0, 2.0 * std::f64::consts::PI, -std::f64::consts::FRAC_PI_2,
                    std::f64::consts::FRAC_PI_2),
            };
            for i in 0..side {
                for j in 0..side {
                    let u = ulo + (i as f64 + 0.5) * (uhi - ulo) / side as f64;
                    let v = vlo + (j as f64 + 0.5) * (vhi - vlo) / side as f64;
                    out.push(Point::Spatial(self.boundary_point3(u, v).unwrap()));
                }
            }
        }
        out
    }
}

fn polyline_chart(seg: &Segment, compact: bool) -> Result<BoundaryChart> {
    match *seg {
        Segment::Line { from, to } => {
            let len = from.dist(to);
            if len <= 0.0 {
                return Err(Error::InvalidParameter(
                    "polyline segment endpoints must be distinct".into(),
                ));
            }
            let end_limits = if compact {
                [None, None]
            } else {
                [Some(LimitCandidate::AtPoint(from)), Some(LimitCandidate::AtPoint(to))]
            };
            Ok(BoundaryChart { curve: ChartCurve::Segment { a: from, b: to, len }, compact, end_limits })
        }
        Segment::Arc { center, radius, from_angle, to_angle } => {
            require_positive("arc radius", radius)?;
            if !(to_angle > from_angle) || to_angle - from_angle > 2.0 * std::f64::consts::PI + 1e-12 {
                return Err(Error::InvalidParameter(
                    "arc needs from_angle < to_angle spanning at most a full turn".into(),
                ));
            }
            let full = (to_angle - from_angle - 2.0 * std::f64::consts::PI).abs() <= 1e-12;
            let ends = |a: f64| {
                Some(LimitCandidate::AtPoint(Point2::new(
                    center.x + radius * a.cos(),
                    center.y + radius * a.sin(),
                )))
            };
            let end_limits = if compact || full { [None, None] } else { [ends(from_angle), ends(to_angle)] };
            Ok(BoundaryChart {
                curve: ChartCurve::Arc { center, radius, lo: from_angle, hi: to_angle, periodic: full },
                compact,
                end_limits,
            })
        }
    }
}

fn closest_on_curve(curve: &ChartCurve, p: Point2) -> (f64, Point2) {
    match curve {
        ChartCurve::Line { origin, dir } => {
            let t = (p.x - origin.x) * dir.0 + (p.y - origin.y) * dir.1;
            let q = Point2::new(origin.x + t * dir.0, origin.y + t * dir.1);
            (p.dist(q), q)
        }
        ChartCurve::Ray { origin, dir } => {
            let t = ((p.x - origin.x) * dir.0 + (p.y - origin.y) * dir.1).max(0.0);
            let q = Point2::new(origin.x + t * dir.0, origin.y + t * dir.1);
            (p.dist(q), q)
        }
        ChartCurve::Segment { a, b, len } => {
            if *len == 0.0 {
                return (p.dist(*a), *a);
            }
            let u = ((b.x - a.x) / len, (b.y - a.y) / len);
            let t = ((p.x - a.x) * u.0 + (p.y - a.y) * u.1).clamp(0.0, *len);
            let q = Point2::new(a.x + t * u.0, a.y + t * u.1);
            (p.dist(q), q)
        }
        ChartCurve::Arc { center, radius, lo, hi, periodic } => {
            let vx = p.x - center.x;
            let vy = p.y - center.y;
            let r = vx.hypot(vy);
            if r == 0.0 {
                let q = Point2::new(center.x + radius * lo.cos(), center.y + radius * lo.sin());
                return (*radius, q);
            }
            let ang = vy.atan2(vx);
            let clamped = if *periodic {
                ang
            } else {
                // Shift ang into [lo, lo + 2π) then clamp to [lo, hi].
                let two_pi = 2.0 * std::f64::consts::PI;
                let mut a = ang;
                while a < *lo {
                    a += two_pi;
                }
                while a >= lo + two_pi {
                    a -= two_pi;
                }
                if a <= *hi {
                    a
                } else {
                    // Outside the arc span: nearer of the two endpoints.
                    let d_lo = angle_gap(a, *lo);
                    let d_hi = angle_gap(a, *hi);
                    if d_lo < d_hi {
                        *lo
                    } else {
                        *hi
                    }
                }
            };
            let q = Point2::new(center.x + radius * clamped.cos(), center.y + radius * clamped.sin());
            (p.dist(q), q)
        }
    }
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut d = (a - b) % two_pi;
    if d < 0.0 {
        d += two_pi;
    }
    d.min(two_pi - d)
}

mod json {
    use super::*;
    use serde::Deserialize;

    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct RawDomain {
        kind: String,
        rho: Option<f64>,
        l_angle: Option<f64>,
        h: Option<f64>,
        r_k: Option<f64>,
        r_j: Option<f64>,
        segments: Option<Vec<RawSegment>>,
        compact: Option<bool>,
    }

    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct RawSegment {
        #[serde(rename = "type")]
        kind: String,
        from: Option<[f64; 2]>,
        to: Option<[f64; 2]>,
        center: Option<[f64; 2]>,
        radius: Option<f64>,
        from_angle: Option<f64>,
        to_angle: Option<f64>,
    }

    fn bad(msg: String) -> Error {
        Error::InvalidParameter(msg)
    }

    fn need<T>(v: Option<T>, key: &str, kind: &str) -> Result<T> {
        v.ok_or_else(|| bad(format!("domain kind '{kind}' requires key '{key}'")))
    }

    fn forbid<T>(v: &Option<T>, key: &str, kind: &str) -> Result<()> {
        if v.is_some() {
            return Err(bad(format!("domain kind '{kind}' does not accept key '{key}'")));
        }
        Ok(())
    }

    pub(super) fn domain_from_json(text: &str) -> Result<Domain> {
        let raw: RawDomain =
            serde_json::from_str(text).map_err(|e| bad(format!("domain JSON: {e}")))?;
        let k = raw.kind.as_str();
        let allow = |keys: &[&str]| -> Result<()> {
            if !keys.contains(&"rho") {
                forbid(&raw.rho, "rho", k)?;
            }
            if !keys.contains(&"l_angle") {
                forbid(&raw.l_angle, "l_angle", k)?;
            }
            if !keys.contains(&"h") {
                forbid(&raw.h, "h", k)?;
            }
            if !keys.contains(&"r_k") {
                forbid(&raw.r_k, "r_k", k)?;
            }
            if !keys.contains(&"r_j") {
                forbid(&raw.r_j, "r_j", k)?;
            }
            if !keys.contains(&"segments") {
                forbid(&raw.segments, "segments", k)?;
            }
            if !keys.contains(&"compact") {
                forbid(&raw.compact, "compact", k)?;
            }
            Ok(())
        };
        match k {
            "halfplane" => {
                allow(&[])?;
                Ok(Domain::half_plane())
            }
            "disk" => {
                allow(&["rho"])?;
                Domain::disk(need(raw.rho, "rho", k)?)
            }
            "quadrant" => {
                allow(&[])?;
                Ok(Domain::quadrant())
            }
            "circle_minus_point" => {
                allow(&["rho", "l_angle"])?;
                Domain::circle_minus_point(
                    need(raw.rho, "rho", k)?,
                    need(raw.l_angle, "l_angle", k)?,
                )
            }
            "parallel_planes" => {
                allow(&["h"])?;
                Domain::parallel_planes(need(raw.h, "h", k)?)
            }
            "concentric_spheres" => {
                allow(&["r_k", "r_j"])?;
                Domain::concentric_spheres(
                    need(raw.r_k, "r_k", k)?,
                    need(raw.r_j, "r_j", k)?,
                )
            }
            "polyline" => {
                allow(&["segments", "compact"])?;
                let segs = need(raw.segments, "segments", k)?;
                let compact = raw.compact.unwrap_or(true);
                let mut out = Vec::with_capacity(segs.len());
                for s in segs {
                    out.push(segment_from_raw(s)?);
                }
                Domain::polyline(out, compact)
            }
            other => Err(bad(format!("unknown domain kind '{other}'"))),
        }
    }

    fn segment_from_raw(s: RawSegment) -> Result<Segment> {
        match s.kind.as_str() {
            "line" => {
                forbid(&s.center, "center", "line")?;
                forbid(&s.radius, "radius", "line")?;
                forbid(&s.from_angle, "from_angle", "line")?;
                forbid(&s.to_angle, "to_angle", "line")?;
                let f = need(s.from, "from", "line")?;
                let t = need(s.to, "to", "line")?;
                Ok(Segment::Line { from: Point2::new(f[0], f[1]), to: Point2::new(t[0], t[1]) })
            }
            "arc" => {
                forbid(&s.from, "from", "arc")?;
                forbid(&s.to, "to", "arc")?;
                let c = need(s.center, "center", "arc")?;
                Ok(Segment::Arc {
                    center: Point2::new(c[0], c[1]),
                    radius: need(s.radius, "radius", "arc")?,
                    from_angle: need(s.from_angle, "from_angle", "arc")?,
                    to_angle: need(s.to_angle, "to_angle", "arc")?,
                })
            }
            other => Err(bad(format!("unknown segment type '{other}'"))),
        }
    }
}
