//! Influence functions f(P, A) > 0 and the boundary ratio g_AB.
//!
//! Every built-in influence is evaluated in log space: the extremum search
//! maximizes ln g = ln f(P, A) - ln f(P, B), which keeps huge and tiny ratios
//! well conditioned and makes the distance symmetric by construction.

use serde::Deserialize;

use crate::domain::{Domain, DomainKind};
use crate::error::{Error, Result};
use crate::geom::{great_circle_distance, Point, Point2, Point3};
use crate::sample::DomainSampler;

/// Built-in influence kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfluenceKind {
    /// f(P, A) = |PA|, for planar domains.
    EuclideanDistance,
    /// f(M, A) = exp(|M'A| / 2) with M' the orthogonal projection of the
    /// boundary plane onto the admissible plane.
    ExpHalfProjected,
    /// f(M, A) = exp(d(M', A) / 2) with M' the radial projection onto the
    /// admissible sphere and d the great-circle distance there.
    ExpHalfSpherical,
}

/// An influence choice, constructed directly or from the JSON form
/// `{"influence": "euclidean" | "exp_projected" | "exp_spherical"}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InfluenceSpec {
    kind: InfluenceKind,
}

impl InfluenceSpec {
    pub fn euclidean() -> Self {
        InfluenceSpec { kind: InfluenceKind::EuclideanDistance }
    }

    pub fn exp_projected() -> Self {
        InfluenceSpec { kind: InfluenceKind::ExpHalfProjected }
    }

    pub fn exp_spherical() -> Self {
        InfluenceSpec { kind: InfluenceKind::ExpHalfSpherical }
    }

    pub fn kind(self) -> InfluenceKind {
        self.kind
    }

    /// The influence each built-in domain is normally paired with.
    pub fn default_for(domain: &Domain) -> Self {
        match domain.kind() {
            DomainKind::ParallelPlanes { .. } => Self::exp_projected(),
            DomainKind::ConcentricSpheres { .. } => Self::exp_spherical(),
            _ => Self::euclidean(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            influence: String,
        }
        let raw: Raw = serde_json::from_str(text)
            .map_err(|e| Error::InvalidParameter(format!("influence JSON: {e}")))?;
        Self::from_name(&raw.influence)
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "euclidean" => Ok(Self::euclidean()),
            "exp_projected" => Ok(Self::exp_projected()),
            "exp_spherical" => Ok(Self::exp_spherical()),
            other => Err(Error::InvalidParameter(format!("unknown influence '{other}'"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self.kind {
            InfluenceKind::EuclideanDistance => "euclidean",
            InfluenceKind::ExpHalfProjected => "exp_projected",
            InfluenceKind::ExpHalfSpherical => "exp_spherical",
        }
    }

    /// Checks that this influence can be evaluated on `domain`.
    pub fn validate_for(self, domain: &Domain) -> Result<()> {
        let ok = match self.kind {
            InfluenceKind::EuclideanDistance => domain.is_planar(),
            InfluenceKind::ExpHalfProjected => {
                matches!(domain.kind(), DomainKind::ParallelPlanes { .. })
            }
            InfluenceKind::ExpHalfSpherical => {
                matches!(domain.kind(), DomainKind::ConcentricSpheres { .. })
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!(
                "influence '{}' does not apply to domain {:?}",
                self.name(),
                domain.kind()
            )))
        }
    }
}

pub(crate) fn log_euclid_ratio(p: Point2, a: Point2, b: Point2) -> f64 {
    p.dist(a).ln() - p.dist(b).ln()
}

pub(crate) fn log_projected_ratio(m: Point2, a: Point2, b: Point2) -> f64 {
    0.5 * (m.dist(a) - m.dist(b))
}

pub(crate) fn log_spherical_ratio(m: Point3, a: Point3, b: Point3, r_j: f64) -> f64 {
    0.5 * (great_circle_distance(m, a, r_j) - great_circle_distance(m, b, r_j))
}

fn log_influence_unchecked(spec: InfluenceSpec, domain: &Domain, p: Point, a: Point) -> Result<f64> {
    match spec.kind {
        InfluenceKind::EuclideanDistance => {
            let (p, a) = (p.planar()?, a.planar()?);
            Ok(p.dist(a).ln())
        }
        InfluenceKind::ExpHalfProjected => {
            let (p, a) = (p.spatial()?, a.spatial()?);
            Ok(0.5 * p.xy().dist(a.xy()))
        }
        InfluenceKind::ExpHalfSpherical => {
            let (p, a) = (p.spatial()?, a.spatial()?);
            let r_j = match domain.kind() {
                DomainKind::ConcentricSpheres { r_j, .. } => *r_j,
                _ => unreachable!("validated earlier"),
            };
            Ok(0.5 * great_circle_distance(p, a, r_j))
        }
    }
}

/// ln f(P, A) for a boundary point P and an admissible point A.
pub fn log_influence(spec: InfluenceSpec, domain: &Domain, p: Point, a: Point) -> Result<f64> {
    spec.validate_for(domain)?;
    if !domain.contains(a) {
        return Err(Error::OutsideDomain(format!("{a:?} is not in the admissible region")));
    }
    log_influence_unchecked(spec, domain, p, a)
}

/// The influence value f(P, A). Strictly positive for all valid inputs; this
/// is asserted on every evaluation. The Euclidean influence is returned as
/// the distance itself rather than exp(ln d), so it carries no roundoff.
pub fn influence_eval(spec: InfluenceSpec, domain: &Domain, p: Point, a: Point) -> Result<f64> {
    spec.validate_for(domain)?;
    if !domain.contains(a) {
        return Err(Error::OutsideDomain(format!("{a:?} is not in the admissible region")));
    }
    let v = match spec.kind {
        InfluenceKind::EuclideanDistance => p.planar()?.dist(a.planar()?),
        _ => log_influence_unchecked(spec, domain, p, a)?.exp(),
    };
    assert!(v > 0.0, "influence must be strictly positive, got {v}");
    Ok(v)
}

/// The boundary ratio g_AB(P) = f(P, A) / f(P, B).
///
/// Computed as a single division (Euclidean) or a single exponential of a log
/// difference (exponential influences), so `ratio_g(P, A, B) * ratio_g(P, B, A)`
/// differs from 1 by at most a couple of ulps.
pub fn ratio_g(spec: InfluenceSpec, domain: &Domain, p: Point, a: Point, b: Point) -> Result<f64> {
    spec.validate_for(domain)?;
    for q in [a, b] {
        if !domain.contains(q) {
            return Err(Error::OutsideDomain(format!("{q:?} is not in the admissible region")));
        }
    }
    let v = match spec.kind {
        InfluenceKind::EuclideanDistance => {
            let (p, a, b) = (p.planar()?, a.planar()?, b.planar()?);
            p.dist(a) / p.dist(b)
        }
        _ => {
            let la = log_influence_unchecked(spec, domain, p, a)?;
            let lb = log_influence_unchecked(spec, domain, p, b)?;
            (la - lb).exp()
        }
    };
    assert!(v > 0.0 && v.is_finite(), "ratio must be positive and finite, got {v}");
    Ok(v)
}

/// Result of an effectiveness scan: `effective` is false when some sampled
/// pair of distinct admissible points produced a ratio that is constant (to
/// within `tol`) across all boundary samples, in which case `witness` holds
/// that pair.
#[derive(Clone, Debug)]
pub struct EffectivenessReport {
    pub effective: bool,
    pub witness: Option<(Point, Point)>,
    /// Smallest max-min ratio variation observed over the sampled pairs.
    pub smallest_variation: f64,
    pub pairs_checked: usize,
}

/// Scans seeded pairs (A, B) and boundary samples P, measuring the variation
/// of g_AB over K. An influence that yields a constant ratio for some pair
/// induces only a semidistance, never a distance.
pub fn is_effective(
    spec: InfluenceSpec,
    domain: &Domain,
    sampler: &mut DomainSampler,
    n_pairs: usize,
    n_boundary_samples: usize,
    tol: f64,
) -> Result<EffectivenessReport> {
    spec.validate_for(domain)?;
    if n_pairs == 0 || n_boundary_samples < 2 {
        return Err(Error::InvalidParameter(
            "effectiveness scan needs at least one pair and two boundary samples".into(),
        ));
    }
    let boundary = domain.boundary_samples(n_boundary_samples);
    let mut smallest = f64::INFINITY;
    for _ in 0..n_pairs {
        let (a, b) = sampler.pair(0.0)?;
        if a == b {
            continue;
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &p in &boundary {
            let g = ratio_g(spec, domain, p, a, b)?;
            lo = lo.min(g);
            hi = hi.max(g);
        }
        let variation = hi - lo;
        smallest = smallest.min(variation);
        if variation < tol {
            return Ok(EffectivenessReport {
                effective: false,
                witness: Some((a, b)),
                smallest_variation: variation,
                pairs_checked: n_pairs,
            });
        }
    }
    Ok(EffectivenessReport {
        effective: true,
        witness: None,
        smallest_variation: smallest,
        pairs_checked: n_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_influence_is_the_distance() {
        let hp = Domain::half_plane();
        let spec = InfluenceSpec::euclidean();
        let f = influence_eval(spec, &hp, (0.0, 0.0).into(), (3.0, 4.0).into()).unwrap();
        assert_eq!(f, 5.0);
    }

    #[test]
    fn projected_influence_exponentiates_half_the_planar_distance() {
        let planes = Domain::parallel_planes(1.0).unwrap();
        let spec = InfluenceSpec::exp_projected();
        let f =
            influence_eval(spec, &planes, (3.0, 4.0, 1.0).into(), (0.0, 0.0, 0.0).into()).unwrap();
        assert!((f - 2.5_f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn spherical_influence_exponentiates_half_the_great_circle_distance() {
        let spheres = Domain::concentric_spheres(1.0, 1.0).unwrap();
        let spec = InfluenceSpec::exp_spherical();
        let f =
            influence_eval(spec, &spheres, (1.0, 0.0, 0.0).into(), (0.0, 1.0, 0.0).into()).unwrap();
        assert!((f - (std::f64::consts::FRAC_PI_4).exp()).abs() < 1e-12);
    }

    #[test]
    fn ratio_example_on_the_disk() {
        let disk = Domain::disk(1.0).unwrap();
        let spec = InfluenceSpec::euclidean();
        let g = ratio_g(spec, &disk, (1.0, 0.0).into(), (0.0, 0.0).into(), (0.5, 0.0).into())
            .unwrap();
        assert_eq!(g, 2.0);
    }

    #[test]
    fn ratio_antisymmetry_is_tight() {
        let hp = Domain::half_plane();
        let spec = InfluenceSpec::euclidean();
        let a: Point = (0.3, 1.7).into();
        let b: Point = (-2.0, 0.4).into();
        for i in 0..50 {
            let p: Point = (i as f64 * 0.37 - 9.0, 0.0).into();
            let ab = ratio_g(spec, &hp, p, a, b).unwrap();
            let ba = ratio_g(spec, &hp, p, b, a).unwrap();
            assert!((ab * ba - 1.0).abs() <= 1e-15);
        }
    }

    #[test]
    fn mismatched_influence_is_rejected() {
        let disk = Domain::disk(1.0).unwrap();
        assert!(matches!(
            influence_eval(InfluenceSpec::exp_projected(), &disk, (1.0, 0.0).into(), (0.0, 0.0).into()),
            Err(Error::DomainMismatch(_))
        ));
        let planes = Domain::parallel_planes(1.0).unwrap();
        assert!(InfluenceSpec::euclidean().validate_for(&planes).is_err());
    }

    #[test]
    fn effectiveness_holds_on_the_disk() {
        let disk = Domain::disk(1.0).unwrap();
        let mut sampler = DomainSampler::new(&disk, 42);
        let report =
            is_effective(InfluenceSpec::euclidean(), &disk, &mut sampler, 50, 256, 1e-9).unwrap();
        assert!(report.effective);
        assert!(report.witness.is_none());
    }

    #[test]
    fn single_source_boundary_is_not_effective() {
        let dom = Domain::single_point(Point2::new(0.0, 0.0));
        let mut sampler = DomainSampler::new(&dom, 7);
        let report =
            is_effective(InfluenceSpec::euclidean(), &dom, &mut sampler, 5, 16, 1e-9).unwrap();
        assert!(!report.effective);
        assert!(report.witness.is_some());
    }

    #[test]
    fn influence_json_names() {
        assert_eq!(
            InfluenceSpec::from_json(r#"{"influence": "euclidean"}"#).unwrap(),
            InfluenceSpec::euclidean()
        );
        assert!(InfluenceSpec::from_json(r#"{"influence": "nope"}"#).is_err());
        assert!(InfluenceSpec::from_json(r#"{"influence": "euclidean", "x": 1}"#).is_err());
    }
}
