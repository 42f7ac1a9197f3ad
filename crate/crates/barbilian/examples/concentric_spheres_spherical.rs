//! Concentric spheres with the spherical-exponential influence reproduce
//! great-circle distance on the outer sphere.
//!
//! Run with: cargo run --example concentric_spheres_spherical

use barbilian::{
    barbilian_distance, great_circle_distance, sup_ratio, Domain, InfluenceSpec, Point3,
    SearchOptions,
};

fn on_sphere(r: f64, theta: f64, phi: f64) -> Point3 {
    Point3::new(r * phi.cos() * theta.sin(), r * phi.sin() * theta.sin(), r * theta.cos())
}

fn main() -> barbilian::Result<()> {
    let r = 2.0;
    let shell = Domain::concentric_spheres(1.0, r)?;
    let spec = InfluenceSpec::exp_spherical();
    let opts = SearchOptions::default();

    println!("points on the sphere of radius {r}, inner observer sphere of radius 1:");
    let pairs = [
        (on_sphere(r, 0.3, 0.0), on_sphere(r, 1.1, 0.0)),
        (on_sphere(r, 1.5708, 0.2), on_sphere(r, 1.5708, 1.4)),
        (on_sphere(r, 0.4, 0.7), on_sphere(r, 2.2, 2.9)),
    ];
    for (a, b) in pairs {
        let d = barbilian_distance(spec, &shell, a.into(), b.into(), &opts)?;
        let arc = great_circle_distance(a, b, r);
        println!(
            "  d = {:.12}   great-circle = {:.12}   diff = {:.2e}",
            d.distance,
            arc,
            (d.distance - arc).abs()
        );
    }

    // The supremum sits on the whole cap of the observer sphere farther from
    // A than from B along the great circle, so it is attained.
    let a = on_sphere(r, 0.3, 0.0);
    let b = on_sphere(r, 1.1, 0.0);
    let sup = sup_ratio(spec, &shell, a.into(), b.into(), &opts)?;
    let sigma = great_circle_distance(a, b, r);
    println!(
        "\nsup of the ratio field: {:.12} (exp(sigma/2) = {:.12}), attained: {}",
        sup.value,
        (0.5 * sigma).exp(),
        sup.attained
    );
    Ok(())
}
