//! The half plane with the Euclidean influence carries the Poincaré metric.
//!
//! Run with: cargo run --example half_plane_poincare

use barbilian::{
    barbilian_distance, conformal_factor, gaussian_curvature, Domain, InfluenceSpec, Point2,
    SearchOptions,
};

fn hyperbolic_distance(a: Point2, b: Point2) -> f64 {
    let d2 = (a.x - b.x).powi(2) + (a.y - b.y).powi(2);
    (1.0 + d2 / (2.0 * a.y * b.y)).acosh()
}

fn main() -> barbilian::Result<()> {
    let hp = Domain::half_plane();
    let spec = InfluenceSpec::euclidean();
    let opts = SearchOptions::default();

    println!("distance from the boundary ratio vs the closed hyperbolic form:");
    let pairs = [
        (Point2::new(0.0, 1.0), Point2::new(0.0, 2.0)),
        (Point2::new(-1.0, 0.5), Point2::new(2.0, 1.5)),
        (Point2::new(3.0, 4.0), Point2::new(3.5, 0.2)),
    ];
    for (a, b) in pairs {
        let d = barbilian_distance(spec, &hp, a.into(), b.into(), &opts)?.distance;
        let h = hyperbolic_distance(a, b);
        println!("  A=({:5.2},{:5.2})  B=({:5.2},{:5.2})   d={d:.12}   acosh form={h:.12}   diff={:.2e}",
            a.x, a.y, b.x, b.y, (d - h).abs());
    }

    println!("\nconformal factor from tangent circles vs 1/y:");
    for y in [0.25, 1.0, 4.0] {
        let l = conformal_factor(&hp, Point2::new(0.7, y))?;
        println!("  y={y:5.2}   lambda={l:.12}   1/y={:.12}", 1.0 / y);
    }

    let k = gaussian_curvature(&hp, Point2::new(0.3, 1.7), None)?;
    println!("\nGaussian curvature at (0.3, 1.7): {k:.9}  (constant -1 expected)");
    Ok(())
}
