//! Removing one point from the boundary circle changes nothing about the
//! distance: the supremum that used to be attained there survives as a limit,
//! and the search reports it as unattained.
//!
//! Run with: cargo run --example punctured_circle_extension

use barbilian::{
    barbilian_distance, sup_ratio, Domain, InfluenceSpec, Point2, SearchOptions,
};

fn main() -> barbilian::Result<()> {
    let disk = Domain::disk(1.0)?;
    let punctured = Domain::circle_minus_point(1.0, 0.0)?; // removes L = (1, 0)
    let spec = InfluenceSpec::euclidean();
    let opts = SearchOptions::default();

    println!("distance agreement, full circle vs circle minus (1, 0):");
    let pairs = [
        (Point2::new(0.3, 0.0), Point2::new(0.6, 0.0)),
        (Point2::new(-0.4, 0.2), Point2::new(0.1, -0.5)),
        (Point2::new(0.0, 0.8), Point2::new(0.0, -0.3)),
    ];
    for (a, b) in pairs {
        let full = barbilian_distance(spec, &disk, a.into(), b.into(), &opts)?;
        let punct = barbilian_distance(spec, &punctured, a.into(), b.into(), &opts)?;
        println!(
            "  A=({:4.1},{:4.1}) B=({:4.1},{:4.1})   d_full = {:.12}   d_punctured = {:.12}",
            a.x, a.y, b.x, b.y, full.distance, punct.distance
        );
    }

    // For points on the positive x-axis the ratio peaks exactly at the removed
    // point, so the full circle attains its sup there while the punctured one
    // only approaches it.
    let a = Point2::new(0.3, 0.0);
    let b = Point2::new(0.6, 0.0);
    let s_full = sup_ratio(spec, &disk, a.into(), b.into(), &opts)?;
    let s_punct = sup_ratio(spec, &punctured, a.into(), b.into(), &opts)?;
    println!("\nsup of g_AB for A=(0.3,0), B=(0.6,0), peak at the removed point:");
    println!("  full circle:     sup = {:.12}   attained = {}", s_full.value, s_full.attained);
    println!("  punctured:       sup = {:.12}   attained = {}", s_punct.value, s_punct.attained);
    println!("  exact limit:     0.7 / 0.4 = {:.12}", 0.7 / 0.4);
    Ok(())
}
