//! The Barbilian distance and its metric-axiom checks.
//!
//! d(A, B) = ln( sup_P g_AB / inf_P g_AB ) over boundary points P. It is
//! evaluated as ln sup g_AB + ln sup g_BA, which makes the result exactly
//! symmetric in A and B (the two addends swap) and exactly nonnegative (both
//! searches scan the same points, and ln g_BA is the pointwise negation of
//! ln g_AB).

use crate::domain::Domain;
use crate::error::Result;
use crate::extremum::{sup_ratio_log, ExtremumResult, SearchOptions};
use crate::geom::Point;
use crate::influence::InfluenceSpec;
use crate::sample::DomainSampler;
use serde::Serialize;

/// A distance value together with the two one-sided searches behind it.
#[derive(Clone, Copy, Debug)]
pub struct DistanceResult {
    pub distance: f64,
    /// Search result for sup g_AB.
    pub sup: ExtremumResult,
    /// Search result for inf g_AB (the reciprocal of sup g_BA, attained at
    /// the same boundary point).
    pub inf: ExtremumResult,
}

/// The Barbilian distance between two points of the admissible region.
pub fn barbilian_distance(
    spec: InfluenceSpec,
    domain: &Domain,
    a: Point,
    b: Point,
    opts: &SearchOptions,
) -> Result<DistanceResult> {
    let (log_sup_ab, sup) = sup_ratio_log(spec, domain, a, b, opts)?;
    let (log_sup_ba, rev) = sup_ratio_log(spec, domain, b, a, opts)?;
    let inf = ExtremumResult { value: 1.0 / rev.value, ..rev };
    Ok(DistanceResult { distance: log_sup_ab + log_sup_ba, sup, inf })
}

/// Worst observed metric-axiom violations over randomly sampled triples.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub n_samples: usize,
    /// max |d(A,B) - d(B,A)|.
    pub max_symmetry_violation: f64,
    /// max of d(A,C) - d(A,B) - d(B,C), clamped at zero.
    pub max_triangle_violation: f64,
    /// max |d(A,A)|.
    pub max_identity_violation: f64,
    /// The triple with the worst triangle defect.
    pub worst_triple: Option<[Point; 3]>,
}

/// Samples `n_triples` point triples and measures symmetry, triangle and
/// identity defects of the computed distance.
pub fn check_axioms(
    spec: InfluenceSpec,
    domain: &Domain,
    sampler: &mut DomainSampler<'_>,
    n_triples: usize,
    opts: &SearchOptions,
) -> Result<AxiomReport> {
    let mut report = AxiomReport {
        n_samples: n_triples,
        max_symmetry_violation: 0.0,
        max_triangle_violation: 0.0,
        max_identity_violation: 0.0,
        worst_triple: None,
    };
    for _ in 0..n_triples {
        let (a, b, c) = sampler.triple()?;
        let d_ab = barbilian_distance(spec, domain, a, b, opts)?.distance;
        let d_ba = barbilian_distance(spec, domain, b, a, opts)?.distance;
        let d_bc = barbilian_distance(spec, domain, b, c, opts)?.distance;
        let d_ac = barbilian_distance(spec, domain, a, c, opts)?.distance;
        let d_aa = barbilian_distance(spec, domain, a, a, opts)?.distance;

        let sym = (d_ab - d_ba).abs();
        if sym > report.max_symmetry_violation {
            report.max_symmetry_violation = sym;
        }
        let tri = d_ac - d_ab - d_bc;
        if tri > report.max_triangle_violation {
            report.max_triangle_violation = tri;
            report.worst_triple = Some([a, b, c]);
        }
        let idm = d_aa.abs();
        if idm > report.max_identity_violation {
            report.max_identity_violation = idm;
        }
    }
    Ok(report)
}

/// Minimum separation used by [`positivity_check`] when drawing pairs; close
/// pairs have tiny but still positive distances, and this keeps the reported
/// minimum meaningfully far from the rounding floor.
pub const POSITIVITY_MIN_SEPARATION: f64 = 0.1;

/// Draws `n_pairs` pairs at least [`POSITIVITY_MIN_SEPARATION`] apart and
/// returns the smallest distance found. The caller checks it is positive.
pub fn positivity_check(
    spec: InfluenceSpec,
    domain: &Domain,
    sampler: &mut DomainSampler<'_>,
    n_pairs: usize,
    opts: &SearchOptions,
) -> Result<f64> {
    let mut min = f64::INFINITY;
    for _ in 0..n_pairs {
        let (a, b) = sampler.pair(POSITIVITY_MIN_SEPARATION)?;
        let d = barbilian_distance(spec, domain, a, b, opts)?.distance;
        if d < min {
            min = d;
        }
    }
    Ok(min)
}
