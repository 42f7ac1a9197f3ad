//! The two circles tangent to a line element and to the boundary, across all
//! planar domains, including the degenerate infinite-radius case and the
//! numeric fallback for custom polyline boundaries.
//!
//! Run with: cargo run --example tangent_circle_gallery

use barbilian::{tangent_circles, Domain, Point2, Segment, Slope};

fn show(label: &str, domain: &Domain, p: Point2, slope: Slope) {
    match tangent_circles(domain, p, slope) {
        Ok(tc) => {
            println!(
                "  {label:28} R+={:<12.8} R-={:<12.8} lambda={:.8}",
                tc.r_plus(),
                tc.r_minus(),
                tc.lambda()
            );
            if let Some(t) = tc.plus.tangency {
                println!("  {:28} touch+ = ({:.6}, {:.6})", "", t.x, t.y);
            }
        }
        Err(e) => println!("  {label:28} {e}"),
    }
}

fn main() {
    let hp = Domain::half_plane();
    let p = Point2::new(0.0, 1.0);
    println!("half plane, P = (0, 1):");
    show("horizontal element", &hp, p, Slope::Finite(0.0));
    show("slope 1", &hp, p, Slope::Finite(1.0));
    show("vertical element", &hp, p, Slope::Vertical);
    println!("  (a horizontal element admits no circle above it that ever reaches");
    println!("   the x-axis, hence the infinite R+; lambda = 1/y still comes out)");

    let disk = Domain::disk(1.0).unwrap();
    println!("\nunit disk, P = (0.5, 0):");
    show("horizontal element", &disk, Point2::new(0.5, 0.0), Slope::Finite(0.0));
    show("vertical element", &disk, Point2::new(0.5, 0.0), Slope::Vertical);
    show("center, any slope", &disk, Point2::new(0.0, 0.0), Slope::Finite(3.0));

    let q = Domain::quadrant();
    println!("\npositive quadrant, P = (1, 1):");
    show("slope 1 (radial)", &q, Point2::new(1.0, 1.0), Slope::Finite(1.0));
    show("horizontal element", &q, Point2::new(1.0, 1.0), Slope::Finite(0.0));
    show("vertical element", &q, Point2::new(1.0, 1.0), Slope::Vertical);
    println!("  at (3, 0.2) a steep element would need a circle crossing the x-axis:");
    show("slope 5 near the x-axis", &q, Point2::new(3.0, 0.2), Slope::Finite(5.0));

    // A polyline copy of the half-plane boundary: one long segment. The
    // numeric bisection should land on the closed forms above.
    let seg = Segment::Line { from: Point2::new(-500.0, 0.0), to: Point2::new(500.0, 0.0) };
    let poly = Domain::polyline(vec![seg], true).unwrap();
    println!("\npolyline (segment y=0), P = (0, 1), numeric construction:");
    show("slope 1", &poly, Point2::new(0.0, 1.0), Slope::Finite(1.0));
    show("horizontal element", &poly, Point2::new(0.0, 1.0), Slope::Finite(0.0));
}
