//! On the positive quadrant the induced tensor depends on direction: it is a
//! generalized Lagrange metric, not a Riemannian or Finsler one.
//!
//! Run with: cargo run --example quadrant_generalized_lagrange

use barbilian::{
    cartan_asymmetry, check_homogeneity, metric_derivative, metric_tensor, positive_definite,
    Domain, InfluenceSpec, Point2, SearchOptions,
};

fn main() -> barbilian::Result<()> {
    let q = Domain::quadrant();
    let p = Point2::new(1.0, 1.0);

    println!("tensor entry g11 at (1,1) for several directions:");
    for (vx, vy) in [(1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (1.0, -1.0)] {
        let g = metric_tensor(&q, p, (vx, vy))?;
        println!("  v=({vx:4.1},{vy:4.1})   g11={:.12}", g.g11);
    }

    println!("\nzero-homogeneity in the velocity (largest relative change):");
    for v in [(1.0, 0.3), (0.4, -1.0)] {
        println!("  v={v:?}: {:.2e}", check_homogeneity(p, v)?);
    }

    println!("\nCartan symmetry test at (1,1):");
    for v in [(1.0, 0.0), (1.0, 1.0)] {
        let rep = cartan_asymmetry(p, v)?;
        println!(
            "  v={v:?}   dg11/dydot={:+.6e}   dg12/dxdot={:+.6e}   symmetric={}",
            rep.dg11_dydot, rep.dg12_dxdot, rep.symmetric
        );
    }
    println!("  (radial directions are the degenerate ones; generic directions break");
    println!("   the symmetry, which rules out a Finsler origin for this tensor)");

    println!("\npositive definite at (1,1), v=(1,0): {}", positive_definite(p, (1.0, 0.0))?);

    // At (1,1) toward (1,0) the two-point limit of d(P, P+eps v)/eps carries
    // the same factor as the velocity-form tensor, so the distance itself
    // reproduces sqrt(g11) = 3/2 here.
    let spec = InfluenceSpec::euclidean();
    let opts = SearchOptions::default();
    let slope = metric_derivative(spec, &q, p, (1.0, 0.0), &opts)?;
    let g = metric_tensor(&q, p, (1.0, 0.0))?;
    println!(
        "\ndistance derivative at (1,1) toward (1,0): {slope:.9} (sqrt(g11) = {:.9})",
        g.g11.sqrt()
    );
    Ok(())
}
