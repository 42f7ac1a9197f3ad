//! Tabulates tangent-circle radii and tensor entries over a grid and writes
//! them as CSV, the same format the `barbilian field` subcommand emits.
//!
//! Run with: cargo run --example metric_field_csv [output.csv]

use std::io::Write;

use barbilian::{metric_tensor, tangent_circles, Domain, Point2, Slope};

fn main() -> barbilian::Result<()> {
    let domain = Domain::quadrant();
    let slope = 0.5;
    let nx = 6;
    let ny = 6;
    let (x0, x1) = (0.25, 2.0);
    let (y0, y1) = (0.25, 2.0);

    let mut csv = String::from("x,y,m,R_plus,R_minus,lambda,g11,g12,g22\n");
    let mut skipped = 0usize;
    for i in 0..nx {
        let x = x0 + (x1 - x0) * i as f64 / (nx - 1) as f64;
        for j in 0..ny {
            let y = y0 + (y1 - y0) * j as f64 / (ny - 1) as f64;
            let p = Point2::new(x, y);
            let tc = match tangent_circles(&domain, p, Slope::Finite(slope)) {
                Ok(tc) => tc,
                Err(barbilian::Error::ConfigurationInvalid(_)) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let g = metric_tensor(&domain, p, (1.0, slope))?;
            csv.push_str(&format!(
                "{x},{y},{slope},{},{},{},{},{},{}\n",
                tc.r_plus(),
                tc.r_minus(),
                tc.lambda(),
                g.g11,
                g.g12,
                g.g22
            ));
        }
    }

    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &csv).map_err(barbilian::Error::from)?;
            println!("wrote {} ({} rows, {skipped} skipped)", path, csv.lines().count() - 1);
        }
        None => {
            std::io::stdout().write_all(csv.as_bytes()).map_err(barbilian::Error::from)?;
            if skipped > 0 {
                eprintln!("# {skipped} grid nodes had no valid tangent construction");
            }
        }
    }
    Ok(())
}
