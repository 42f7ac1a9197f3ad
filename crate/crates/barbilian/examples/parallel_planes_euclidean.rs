//! Two parallel planes: points live on z = 0, observers on z = h, and the
//! projected-exponential influence reproduces plain Euclidean distance.
//!
//! Run with: cargo run --example parallel_planes_euclidean

use barbilian::{barbilian_distance, sup_ratio, Domain, InfluenceSpec, Point3, SearchOptions};

fn main() -> barbilian::Result<()> {
    let planes = Domain::parallel_planes(1.0)?;
    let spec = InfluenceSpec::exp_projected();
    let opts = SearchOptions::default();

    println!("observers on z = 1, points on z = 0, f(P, A) = exp(|proj P - A| / 2):");
    let pairs = [
        (Point3::new(0.0, 0.0, 0.0), Point3::new(3.0, 4.0, 0.0)),
        (Point3::new(-1.0, 2.0, 0.0), Point3::new(0.5, -0.7, 0.0)),
        (Point3::new(0.0, 0.0, 0.0), Point3::new(0.01, 0.0, 0.0)),
    ];
    for (a, b) in pairs {
        let d = barbilian_distance(spec, &planes, a.into(), b.into(), &opts)?;
        let euclid = ((a.x - b.x).powi(2) + (a.y - b.y).powi(2)).sqrt();
        println!(
            "  A=({:5.2},{:5.2})  B=({:5.2},{:5.2})   d = {:.12}   |AB| = {:.12}",
            a.x, a.y, b.x, b.y, d.distance, euclid
        );
    }
    println!("  (the plane separation h never enters: only the projection of the");
    println!("   observer onto the point plane matters, so d is exactly Euclidean)");

    // The ratio field attains its supremum on the far side of the segment:
    // every projected observer at distance >= |AB| beyond B along the A-B
    // axis gives the same exp(|AB|/2), an attained plateau rather than a
    // limit at infinity.
    let a = Point3::new(0.0, 0.0, 0.0);
    let b = Point3::new(2.0, 0.0, 0.0);
    let sup = sup_ratio(spec, &planes, a.into(), b.into(), &opts)?;
    println!(
        "\nsup over the observer plane for |AB| = 2: {:.12} (e = {:.12}), attained: {}",
        sup.value,
        std::f64::consts::E,
        sup.attained
    );
    Ok(())
}
