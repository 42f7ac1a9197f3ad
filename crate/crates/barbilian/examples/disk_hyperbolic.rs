//! The disk with the Euclidean influence carries the hyperbolic disk metric.
//!
//! Run with: cargo run --example disk_hyperbolic

use barbilian::{
    barbilian_distance, gaussian_curvature, sup_ratio, Domain, InfluenceSpec, Point2,
    SearchOptions,
};

fn main() -> barbilian::Result<()> {
    let disk = Domain::disk(1.0)?;
    let spec = InfluenceSpec::euclidean();
    let opts = SearchOptions::default();

    println!("radial distances vs ln((1+s)/(1-s)):");
    for s in [0.1, 0.5, 0.9] {
        let center = Point2::new(0.0, 0.0);
        let edge = Point2::new(s, 0.0);
        let d = barbilian_distance(spec, &disk, center.into(), edge.into(), &opts)?.distance;
        let closed = ((1.0 + s) / (1.0 - s)).ln();
        println!("  s={s:.1}   d={d:.12}   closed form={closed:.12}   diff={:.2e}",
            (d - closed).abs());
    }

    println!("\nwhere the extremal ratio lives for A=(0,0), B=(0.5,0):");
    let sup = sup_ratio(spec, &disk, (0.0, 0.0).into(), (0.5, 0.0).into(), &opts)?;
    println!(
        "  sup g = {:.9} attained at boundary angle t = {:.6} rad ({} evaluations)",
        sup.value,
        sup.arg_t.unwrap(),
        sup.evaluations
    );

    for p in [Point2::new(0.0, 0.0), Point2::new(0.3, -0.5), Point2::new(-0.7, 0.1)] {
        let k = gaussian_curvature(&disk, p, None)?;
        println!("curvature at ({:4.1},{:4.1}): {k:.9}", p.x, p.y);
    }
    Ok(())
}
