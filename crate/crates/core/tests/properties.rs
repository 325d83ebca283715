use bendlab_core::bending::{bending_cocycle, BendingContext};
use bendlab_core::fuchsian::genus2_octagon;
use bendlab_core::hypcore::{
    axis_isometry, complex_displacement, cross, distance_to_geodesic, BoundaryPoint, Geodesic,
    GeodesicSegment, H2Point, H3Point, HyperbolicPoint, Intersection, OrientedGeodesic,
    UnimodularMatrix,
};
use bendlab_core::laminations::{integral_prime, weak_eval, FiniteLamination, Leaf, TestFunction};
use bendlab_core::Complex64 as C64;
use proptest::prelude::*;

fn c64() -> impl Strategy<Value = C64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| C64::new(re, im))
}

fn sl2c() -> impl Strategy<Value = UnimodularMatrix> {
    (c64(), c64(), c64(), c64())
        .prop_filter_map("singular", |(a, b, c, d)| {
            let det = a * d - b * c;
            (det.norm() > 0.1).then(|| UnimodularMatrix::new(a, b, c, d).ok()).flatten()
        })
}

fn sl2r() -> impl Strategy<Value = UnimodularMatrix> {
    (0.3..3.0f64, -2.0..2.0f64, -2.0..2.0f64)
        .prop_map(|(a, b, c)| UnimodularMatrix::from_real(a, b, c, (1.0 + b * c) / a).unwrap())
}

fn h2() -> impl Strategy<Value = H2Point> {
    (-3.0..3.0f64, 0.2..4.0f64).prop_map(|(x, y)| H2Point::from_xy(x, y).unwrap())
}

fn h3() -> impl Strategy<Value = H3Point> {
    (c64(), 0.2..4.0f64).prop_map(|(z, h)| H3Point::new(z, h).unwrap())
}

fn real_geodesic() -> impl Strategy<Value = Geodesic> {
    (-5.0..5.0f64, 0.1..6.0f64).prop_map(|(u, gap)| Geodesic::new(u, u + gap).unwrap())
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mobius_round_trip(g in sl2c(), z in c64(), q in h3()) {
        let p = BoundaryPoint::Finite(z);
        let back = g.inverse().apply(g.apply(p));
        prop_assert!(back.approx_eq(&p, 1e-9));
        let q2 = g.inverse().apply_h3(g.apply_h3(q));
        prop_assert!(q2.distance(&q) < 1e-7);
    }

    #[test]
    fn isometries_preserve_distance(g in sl2r(), p in h2(), q in h2(), k in sl2c(), a in h3(), b in h3()) {
        prop_assert!(rel_close(g.apply_h2(p).distance(&g.apply_h2(q)), p.distance(&q), 1e-8));
        prop_assert!(rel_close(k.apply_h3(a).distance(&k.apply_h3(b)), a.distance(&b), 1e-7));
        // H² sits in H³ isometrically
        prop_assert!(rel_close(p.to_h3().distance(&q.to_h3()), p.distance(&q), 1e-10));
    }

    #[test]
    fn norm_is_submultiplicative(a in sl2c(), b in sl2c()) {
        prop_assert!((a * b).norm() <= a.norm() * b.norm() * (1.0 + 1e-12));
        prop_assert!(a.projective_distance(&b) <= a.difference_norm(&b) + 1e-15);
    }

    #[test]
    fn axis_isometry_is_conjugation_equivariant(g in sl2c(), u in c64(), v in c64(), z in c64()) {
        prop_assume!((u - v).norm() > 0.2);
        let axis = OrientedGeodesic::new(u, v).unwrap();
        let lhs = axis_isometry(&axis, z).conjugate_by(&g);
        let rhs = axis_isometry(&axis.image(&g), z);
        let scale = lhs.norm().max(1.0);
        prop_assert!(lhs.projective_distance(&rhs) < 1e-8 * scale * scale);
    }

    #[test]
    fn displacement_round_trip(u in c64(), v in c64(), re in 0.05..3.0f64, im in -3.0..3.0f64) {
        prop_assume!((u - v).norm() > 0.2);
        let axis = OrientedGeodesic::new(u, v).unwrap();
        let z = C64::new(re, im);
        let (found, w) = complex_displacement(&axis_isometry(&axis, z)).unwrap();
        prop_assert!(found.approx_eq(&axis, 1e-7));
        prop_assert!((w.re - z.re).abs() < 1e-8);
        // the imaginary part is a rotation angle, defined modulo 2π
        let turn = (w.im - z.im) / core::f64::consts::TAU;
        prop_assert!((turn - turn.round()).abs() < 1e-8);
    }

    #[test]
    fn crossing_point_lies_on_both(g1 in real_geodesic(), g2 in real_geodesic()) {
        match (cross(&g1, &g2), cross(&g2, &g1)) {
            (Intersection::Transverse { point, angle }, Intersection::Transverse { point: p2, angle: a2 }) => {
                prop_assert!(distance_to_geodesic(&point, &g1) < 1e-8);
                prop_assert!(distance_to_geodesic(&point, &g2) < 1e-8);
                prop_assert!(point.distance(&p2) < 1e-8);
                prop_assert!((angle - a2).abs() < 1e-8);
            }
            (Intersection::None, Intersection::None) | (Intersection::Equal, Intersection::Equal) => {}
            _ => prop_assert!(false, "asymmetric intersection"),
        }
    }

    #[test]
    fn integral_is_additive(p in h2(), q in h2(), s in 0.05..0.95f64, lam in lamination()) {
        prop_assume!(p.distance(&q) > 0.1);
        let whole = GeodesicSegment::new(p, q).unwrap();
        let mid = whole.point_at(s);
        let left = GeodesicSegment::new(p, mid).unwrap();
        let right = GeodesicSegment::new(mid, q).unwrap();
        let sum = integral_prime(&lam, &left, None).unwrap() + integral_prime(&lam, &right, None).unwrap();
        let total = integral_prime(&lam, &whole, None).unwrap();
        prop_assert!((sum - total).norm() < 1e-9);
    }

    #[test]
    fn weak_evaluation_is_linear(l1 in lamination(), c in c64()) {
        let f = TestFunction::Constant(1.5);
        let lhs = weak_eval(&l1.scaled(c), &f).unwrap();
        let rhs = weak_eval(&l1, &f).unwrap() * c;
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }
}

/// Pairwise disjoint leaves: perpendiculars to a common geodesic, the unit
/// semicircle, at distinct heights.
fn lamination() -> impl Strategy<Value = FiniteLamination> {
    prop::collection::vec((-2.5..2.5f64, c64()), 0..8).prop_map(|spots| {
        let leaves = spots
            .into_iter()
            .map(|(t, w)| {
                let g = if t.abs() < 1e-9 {
                    Geodesic::imaginary_axis()
                } else {
                    Geodesic::new((t / 2.0).tanh(), 1.0 / (t / 2.0).tanh()).unwrap()
                };
                Leaf::new(g, w)
            })
            .collect();
        FiniteLamination::new(leaves, None).unwrap()
    })
}

fn context() -> BendingContext {
    BendingContext::fuchsian(genus2_octagon(), H2Point::from_xy(0.0540302, 1.0841471).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cocycle_is_multiplicative(s in 0.05..0.95f64, lam in lamination(), t in c64()) {
        let ctx = context();
        // the unit semicircle crosses every leaf of `lamination()`
        let x = H2Point::new(C64::from_polar(1.0, 2.9)).unwrap();
        let z = H2Point::new(C64::from_polar(1.0, 0.25)).unwrap();
        let y = GeodesicSegment::new(x, z).unwrap().point_at(s);
        let t = t * 0.3;
        let lhs = bending_cocycle(&ctx, &lam, x, y, t).unwrap() * bending_cocycle(&ctx, &lam, y, z, t).unwrap();
        let rhs = bending_cocycle(&ctx, &lam, x, z, t).unwrap();
        prop_assert!(lhs.projective_distance(&rhs) < 1e-10 * rhs.norm().max(1.0));
    }

    #[test]
    fn cocycle_is_natural(g in sl2r(), lam in lamination(), x in h2(), y in h2()) {
        let ctx = context();
        let moved = FiniteLamination::new(
            lam.leaves().iter().map(|l| Leaf::new(l.geodesic.image(&g), l.weight)).collect(),
            None,
        ).unwrap();
        let t = C64::new(0.1, 0.2);
        let lhs = bending_cocycle(&ctx, &moved, g.apply_h2(x), g.apply_h2(y), t).unwrap();
        let rhs = bending_cocycle(&ctx, &lam, x, y, t).unwrap().conjugate_by(&g);
        prop_assert!(lhs.projective_distance(&rhs) < 1e-8 * rhs.norm().max(1.0) * g.norm() * g.norm());
    }
}
