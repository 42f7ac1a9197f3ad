//! Spot-checks the metric axioms on random triples and measures a path length
//! against the known geodesic distance.
//!
//! Run with: cargo run --example axioms_and_paths

use barbilian::{
    check_axioms, path_length, positivity_check, Domain, DomainSampler, InfluenceSpec, Point2,
    SearchOptions,
};

fn main() -> barbilian::Result<()> {
    let disk = Domain::disk(1.0)?;
    let spec = InfluenceSpec::euclidean();
    let opts = SearchOptions::default();

    let mut sampler = DomainSampler::new(&disk, 42);
    let report = check_axioms(spec, &disk, &mut sampler, 60, &opts)?;
    println!("axiom spot check on the unit disk, {} random triples:", report.n_samples);
    println!("  max |d(A,B) - d(B,A)|    = {:.3e}", report.max_symmetry_violation);
    println!("  max triangle defect      = {:.3e}", report.max_triangle_violation);
    println!("  max |d(A,A)|             = {:.3e}", report.max_identity_violation);

    let mut sampler = DomainSampler::new(&disk, 7);
    let min_d = positivity_check(spec, &disk, &mut sampler, 40, &opts)?;
    println!("  min d over 40 separated pairs = {min_d:.6} (> 0)");

    // Length of the vertical segment x = 0 in the half plane from y=1 to
    // y=2. That segment is a geodesic there, so the length must match the
    // distance ln 2.
    let hp = Domain::half_plane();
    let n = 400;
    let path: Vec<Point2> = (0..=n)
        .map(|i| Point2::new(0.0, 1.0 + i as f64 / n as f64))
        .collect();
    let len = path_length(&hp, &path)?;
    println!("\nhalf-plane segment (0,1) -> (0,2):");
    println!("  path length = {len:.10}   ln 2 = {:.10}", std::f64::consts::LN_2);

    // A detour through (0.4, 1.5) must be strictly longer.
    let mut detour: Vec<Point2> = (0..=n)
        .map(|i| {
            let t = i as f64 / n as f64;
            Point2::new(0.4 * (std::f64::consts::PI * t).sin(), 1.0 + t)
        })
        .collect();
    detour[0] = Point2::new(0.0, 1.0);
    let len2 = path_length(&hp, &detour)?;
    println!("  detour length = {len2:.10} (longer, as a non-geodesic must be)");
    Ok(())
}
