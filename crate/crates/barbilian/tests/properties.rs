//! Randomized invariants. These are structural facts that must hold for any
//! admissible input, so they get generated inputs instead of fixed cases.

use proptest::prelude::*;

use barbilian::{
    barbilian_distance, inf_ratio, log_influence, metric_tensor, ratio_g, sup_ratio,
    tangent_circles, Domain, InfluenceSpec, Point, Point2, SearchOptions, Slope,
};

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn disk_point() -> impl Strategy<Value = Point2> {
    // Polar sampling keeps a 0.2 margin to the boundary circle.
    (0.0..0.8f64, 0.0..std::f64::consts::TAU)
        .prop_map(|(r, t)| Point2::new(r * t.cos(), r * t.sin()))
}

fn half_plane_point() -> impl Strategy<Value = Point2> {
    (-5.0..5.0f64, 0.2..5.0f64).prop_map(|(x, y)| Point2::new(x, y))
}

fn quadrant_point() -> impl Strategy<Value = Point2> {
    (0.2..5.0f64, 0.2..5.0f64).prop_map(|(x, y)| Point2::new(x, y))
}

proptest! {
    // The log ratio of A over B is the exact negation of B over A: both are
    // the same two influence logs subtracted in opposite orders.
    #[test]
    fn log_ratio_is_antisymmetric(
        a in half_plane_point(),
        b in half_plane_point(),
        t in -50.0..50.0f64,
    ) {
        let hp = Domain::half_plane();
        let spec = InfluenceSpec::euclidean();
        let p = hp.boundary_point(0, t).unwrap();
        let la = log_influence(spec, &hp, p, Point::Planar(a)).unwrap();
        let lb = log_influence(spec, &hp, p, Point::Planar(b)).unwrap();
        prop_assert_eq!(la - lb, -(lb - la));
        let g_ab = ratio_g(spec, &hp, p, Point::Planar(a), Point::Planar(b)).unwrap();
        let g_ba = ratio_g(spec, &hp, p, Point::Planar(b), Point::Planar(a)).unwrap();
        prop_assert!((g_ab * g_ba - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn sup_and_inf_are_exact_reciprocals_across_the_swap(
        a in disk_point(),
        b in disk_point(),
    ) {
        prop_assume!(a.dist(b) > 1e-3);
        let disk = Domain::disk(1.0).unwrap();
        let spec = InfluenceSpec::euclidean();
        let sup = sup_ratio(spec, &disk, b.into(), a.into(), &opts()).unwrap();
        let inf = inf_ratio(spec, &disk, a.into(), b.into(), &opts()).unwrap();
        prop_assert!((sup.value * inf.value - 1.0).abs() <= 1e-15);
        prop_assert_eq!(sup.attained, inf.attained);
    }

    // No sampled boundary ratio may beat the reported extrema.
    #[test]
    fn extrema_bound_every_boundary_sample(
        a in disk_point(),
        b in disk_point(),
        probes in proptest::collection::vec(0.0..std::f64::consts::TAU, 32),
    ) {
        prop_assume!(a.dist(b) > 1e-3);
        let disk = Domain::disk(1.0).unwrap();
        let spec = InfluenceSpec::euclidean();
        let sup = sup_ratio(spec, &disk, a.into(), b.into(), &opts()).unwrap();
        let inf = inf_ratio(spec, &disk, a.into(), b.into(), &opts()).unwrap();
        for t in probes {
            let p = disk.boundary_point(0, t).unwrap();
            let g = ratio_g(spec, &disk, p, a.into(), b.into()).unwrap();
            prop_assert!(g <= sup.value * (1.0 + 1e-12), "g={g} sup={}", sup.value);
            prop_assert!(g >= inf.value * (1.0 - 1e-12), "g={g} inf={}", inf.value);
        }
    }

    // When the supremum is attained, re-evaluating the ratio at the reported
    // chart point reproduces it.
    #[test]
    fn attained_argmax_reproduces_the_sup(
        a in disk_point(),
        b in disk_point(),
    ) {
        prop_assume!(a.dist(b) > 1e-3);
        let disk = Domain::disk(1.0).unwrap();
        let spec = InfluenceSpec::euclidean();
        let sup = sup_ratio(spec, &disk, a.into(), b.into(), &opts()).unwrap();
        prop_assert!(sup.attained);
        let (chart, t) = (sup.chart_index.unwrap(), sup.arg_t.unwrap());
        let p = disk.boundary_point(chart, t).unwrap();
        let g = ratio_g(spec, &disk, p, a.into(), b.into()).unwrap();
        prop_assert!((g - sup.value).abs() <= 1e-12 * sup.value);
    }

    #[test]
    fn distance_is_symmetric_nonnegative_and_zero_on_the_diagonal(
        a in quadrant_point(),
        b in quadrant_point(),
    ) {
        let q = Domain::quadrant();
        let spec = InfluenceSpec::euclidean();
        let ab = barbilian_distance(spec, &q, a.into(), b.into(), &opts()).unwrap();
        let ba = barbilian_distance(spec, &q, b.into(), a.into(), &opts()).unwrap();
        prop_assert_eq!(ab.distance, ba.distance);
        prop_assert!(ab.distance >= 0.0);
        let aa = barbilian_distance(spec, &q, a.into(), a.into(), &opts()).unwrap();
        prop_assert_eq!(aa.distance, 0.0);
    }

    // Both tangent circles really touch the line element at P and the
    // boundary: |C - P| = R, C - P is normal to the element, and the distance
    // from C to the boundary equals R.
    #[test]
    fn tangent_circles_touch_line_and_boundary(
        p in half_plane_point(),
        m in -8.0..8.0f64,
    ) {
        let hp = Domain::half_plane();
        let tc = tangent_circles(&hp, p, Slope::Finite(m)).unwrap();
        for circle in [tc.plus, tc.minus] {
            if !circle.radius.is_finite() {
                continue;
            }
            let c = circle.center.unwrap();
            let r = circle.radius;
            prop_assert!((c.dist(p) - r).abs() <= 1e-9 * r.max(1.0));
            let (tx, ty) = (1.0, m);
            let dot = (c.x - p.x) * tx + (c.y - p.y) * ty;
            prop_assert!(dot.abs() <= 1e-9 * r.max(1.0) * (1.0 + m.abs()));
            prop_assert!((c.y.abs() - r).abs() <= 1e-9 * r.max(1.0));
            let touch = circle.tangency.unwrap();
            prop_assert!((touch.dist(c) - r).abs() <= 1e-9 * r.max(1.0));
        }
    }

    #[test]
    fn quadrant_tensor_is_invariant_under_velocity_scaling(
        p in quadrant_point(),
        angle in 0.0..std::f64::consts::TAU,
        scale in 0.05..20.0f64,
    ) {
        let q = Domain::quadrant();
        let v = (angle.cos(), angle.sin());
        let g1 = metric_tensor(&q, p, v).unwrap();
        let g2 = metric_tensor(&q, p, (scale * v.0, scale * v.1)).unwrap();
        prop_assert!((g1.g11 - g2.g11).abs() <= 1e-12 * g1.g11);
        prop_assert_eq!(g1.g12, 0.0);
        prop_assert_eq!(g2.g12, 0.0);
    }

    // Distances on the punctured circle match the full disk even when the
    // generated pair happens to peak at the removed point.
    #[test]
    fn punctured_circle_distances_match_the_disk(
        a in disk_point(),
        b in disk_point(),
        l_angle in 0.0..std::f64::consts::TAU,
    ) {
        prop_assume!(a.dist(b) > 1e-3);
        let disk = Domain::disk(1.0).unwrap();
        let punctured = Domain::circle_minus_point(1.0, l_angle).unwrap();
        let spec = InfluenceSpec::euclidean();
        let full = barbilian_distance(spec, &disk, a.into(), b.into(), &opts()).unwrap();
        let punct = barbilian_distance(spec, &punctured, a.into(), b.into(), &opts()).unwrap();
        prop_assert!((full.distance - punct.distance).abs() <= 1e-9);
    }
}
