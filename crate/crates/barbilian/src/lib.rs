//! Metrics from boundary influence ratios.
//!
//! Pick a region J (half plane, disk, quadrant, ...) whose boundary K acts
//! as a set of "observers", and an influence f(P, A) > 0 measuring how
//! strongly a boundary point P sees an interior point A. Every pair A, B
//! then gets the ratio field g_AB(P) = f(P, A) / f(P, B) over K, and
//!
//! d(A, B) = ln( sup g_AB / inf g_AB )
//!
//! is a distance on J. With the Euclidean influence on the half plane or
//! the disk this reproduces hyperbolic geometry, a claim the crate verifies
//! numerically rather than assumes; on the positive quadrant it produces a
//! direction-dependent (generalized Lagrange) structure instead.
//!
//! What the crate provides:
//!
//! * [`domain`]: admissible regions with parametrized boundary charts, plus
//!   two spatial examples (parallel planes, concentric spheres) where
//!   exponential influences recover Euclidean and spherical geometry.
//! * [`influence`]: the influence functions and ratio evaluations.
//! * [`extremum`]: global sup/inf of the ratio over the boundary, with
//!   compactified charts, refinement, and endpoint limit bookkeeping for
//!   suprema that are approached but not attained.
//! * [`distance`]: the distance itself and metric-axiom spot checks.
//! * [`tangent`]: the two circles tangent to a line element and to the
//!   boundary; their radii induce the conformal factor λ = (1/R₊+1/R₋)/2.
//! * [`metric`]: conformal factors, Gaussian curvature checks, path lengths
//!   and the recovery of λ from the distance derivative.
//! * [`lagrange`]: the quadrant's velocity-dependent tensor, its
//!   zero-homogeneity, positive definiteness and Cartan asymmetry.
//! * [`cli`]: the `barbilian` command-line tool over all of the above.
//!
//! The runnable examples in `examples/` walk through each capability; start
//! with `half_plane_poincare`.

pub mod cli;
pub mod distance;
pub mod domain;
pub mod error;
pub mod extremum;
pub mod geom;
pub mod influence;
pub mod lagrange;
pub mod metric;
pub mod sample;
pub mod tangent;

pub use distance::{
    barbilian_distance, check_axioms, positivity_check, AxiomReport, DistanceResult,
    POSITIVITY_MIN_SEPARATION,
};
pub use domain::{Domain, DomainKind, Segment};
pub use error::{Error, Result};
pub use extremum::{
    brute_force_extrema, inf_ratio, sup_ratio, sup_ratio_grid2d, BruteExtrema, ExtremumResult,
    SearchOptions,
};
pub use geom::{great_circle_distance, Direction2, Point, Point2, Point3, Slope};
pub use influence::{
    influence_eval, is_effective, log_influence, ratio_g, EffectivenessReport, InfluenceKind,
    InfluenceSpec,
};
pub use lagrange::{cartan_asymmetry, check_homogeneity, positive_definite, CartanReport};
pub use metric::{
    conformal_factor, gaussian_curvature, metric_derivative, metric_tensor, path_length,
    MetricTensor,
};
pub use sample::{DomainSampler, SplitMix64};
pub use tangent::{tangent_circles, TangentCircle, TangentCircles};

/// Crate version, mirrored from the package manifest.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
