use bendlab_core::bending::{
    approx_bundle, approx_sweep, bend, bending_cocycle, bending_vector_field, conjugated_distance,
    holomorphy_residual, rep_class_distance, trace_derivative, BendingContext, DifferenceOptions,
};
use bendlab_core::fuchsian::{genus2_octagon, Representation, Word};
use bendlab_core::hypcore::{complex_displacement, Geodesic, H2Point, Side, UnimodularMatrix};
use bendlab_core::laminations::{FiniteLamination, Leaf, OrbitSpec, OrbitTarget};
use bendlab_core::Complex64 as C64;

fn basepoint() -> H2Point {
    H2Point::from_xy(0.1 * 1f64.cos(), 1.0 + 0.1 * 1f64.sin()).unwrap()
}

fn context() -> BendingContext {
    BendingContext::fuchsian(genus2_octagon(), basepoint()).unwrap()
}

fn flagship(ctx: &BendingContext) -> FiniteLamination {
    let rho = ctx.surface();
    let (axis, _) = complex_displacement(&rho.image(0)).unwrap();
    let spec = OrbitSpec::new(vec![Leaf::new(axis.unoriented(), C64::new(1.0, 0.0))], rho.clone(), 6).unwrap();
    ctx.instantiate(&spec).unwrap()
}

fn words(rho: &Representation) -> Vec<Word> {
    ["a", "b", "ab", "cD"].iter().map(|w| rho.presentation().parse_word(w).unwrap()).collect()
}

#[test]
fn counterexample_cocycle_is_unit_translation() {
    let ctx = context();
    let x = H2Point::new(C64::from_polar(1.0, core::f64::consts::FRAC_PI_4)).unwrap();
    let y = H2Point::from_xy(0.0, 1.0).unwrap();
    for n in [10.0, 100.0, 1000.0] {
        let lam = FiniteLamination::new(
            vec![
                Leaf::new(Geodesic::new(1.0 / n, n).unwrap(), C64::new(1.0, 0.0)),
                Leaf::new(Geodesic::new(-1.0 / n, -n).unwrap(), C64::new(-1.0, 0.0)),
            ],
            None,
        )
        .unwrap();
        let c = bending_cocycle(&ctx, &lam, x, y, C64::new(1.0, 0.0)).unwrap();
        let (_, z) = complex_displacement(&c).unwrap();
        assert!((z.re - 1.0).abs() < 1e-12);
        let target = UnimodularMatrix::diagonal(C64::new(0.5f64.exp(), 0.0));
        assert!(c.difference_norm(&target) <= 2.0 / n);
    }
}

#[test]
fn bending_axis_has_target_on_the_right() {
    // the leaf (1/n, n) crosses [e^{iπ/4}, i] with n on the right
    let seg = bendlab_core::hypcore::GeodesicSegment::new(
        H2Point::new(C64::from_polar(1.0, core::f64::consts::FRAC_PI_4)).unwrap(),
        H2Point::from_xy(0.0, 1.0).unwrap(),
    )
    .unwrap();
    let leaf = Geodesic::new(0.1, 10.0).unwrap();
    let c = seg.crossing(&leaf, &Default::default()).unwrap().unwrap();
    let axis = c.orient_toward(&leaf, Side::Right);
    assert!((axis.target().finite().unwrap().re - 10.0).abs() < 1e-12);
}

#[test]
fn invariant_lamination_cocycle_is_equivariant() {
    let ctx = context();
    let rho = ctx.surface().clone();
    let (axis, _) = complex_displacement(&rho.image(0)).unwrap();
    let spec = OrbitSpec::new(vec![Leaf::new(axis.unoriented(), C64::new(0.7, 0.3))], rho.clone(), 6).unwrap();
    let x = basepoint();
    let y = H2Point::from_xy(0.6, 1.7).unwrap();
    for w in ["a", "B", "cd"] {
        let g = rho.parse_and_evaluate(w).unwrap();
        let (gx, gy) = (g.apply_h2(x), g.apply_h2(y));
        let target = OrbitTarget::Segments(vec![
            bendlab_core::hypcore::GeodesicSegment::new(x, y).unwrap(),
            bendlab_core::hypcore::GeodesicSegment::new(gx, gy).unwrap(),
        ]);
        let lam = bendlab_core::laminations::orbit_instantiate(&spec, &target).unwrap();
        let t = C64::new(0.2, -0.1);
        let lhs = bending_cocycle(&ctx, &lam, gx, gy, t).unwrap();
        let rhs = bending_cocycle(&ctx, &lam, x, y, t).unwrap().conjugate_by(&g);
        assert!(lhs.projective_distance(&rhs) < 1e-9, "{w}: {}", lhs.projective_distance(&rhs));
    }
}

#[test]
fn bent_flagship_is_a_representation() {
    let ctx = context();
    let lam = flagship(&ctx);
    for (re, im) in [(0.0, 0.1), (0.15, -0.1), (-0.2, 0.0)] {
        let rho = bend(&ctx, &lam, C64::new(re, im)).unwrap();
        assert!(rho.relator_residual() <= 1e-8);
    }
    let real = bend(&ctx, &lam, C64::new(0.1, 0.0)).unwrap();
    for w in words(&real) {
        assert!(real.evaluate(&w).trace().im.abs() < 1e-12);
    }
}

#[test]
fn difference_quotient_is_second_order() {
    let ctx = context();
    let lam = flagship(&ctx);
    let w = ctx.surface().presentation().parse_word("ab").unwrap();
    let reference = trace_derivative(&ctx, &lam, &w, &DifferenceOptions::default()).unwrap();
    let e1 = (trace_derivative(&ctx, &lam, &w, &DifferenceOptions::plain(0.02)).unwrap() - reference).norm();
    let e2 = (trace_derivative(&ctx, &lam, &w, &DifferenceOptions::plain(0.01)).unwrap() - reference).norm();
    let ratio = e1 / e2;
    assert!((3.0..=5.0).contains(&ratio), "ratio {ratio}");
}

#[test]
fn vector_field_is_complex_linear() {
    let ctx = context();
    let lam = flagship(&ctx);
    let ws = words(ctx.surface());
    let base = bending_vector_field(&ctx, &lam, &ws).unwrap();
    let c = C64::new(0.4, -1.3);
    let scaled = bending_vector_field(&ctx, &lam.scaled(c), &ws).unwrap();
    for (a, b) in base.iter().zip(&scaled) {
        assert!((a * c - b).norm() < 1e-8, "{} vs {}", a * c, b);
    }
}

#[test]
fn class_distance_is_first_order_in_t() {
    let ctx = context();
    let lam = flagship(&ctx);
    let ws = words(ctx.surface());
    let d: Vec<f64> = [0.01, 0.02, 0.04]
        .iter()
        .map(|&t| rep_class_distance(ctx.target(), &bend(&ctx, &lam, C64::new(0.0, t)).unwrap(), &ws).unwrap())
        .collect();
    for k in 0..2 {
        let r = d[k + 1] / d[k];
        assert!((r - 2.0).abs() <= 0.4, "ratio {r}");
    }
}

#[test]
fn holomorphy_residual_ignores_conjugation() {
    let ctx = context();
    let lam = flagship(&ctx);
    let ws = words(ctx.surface());
    let t0 = C64::new(0.05, 0.05);
    let r1 = holomorphy_residual(&ctx, &lam, &ws, t0, 1e-4).unwrap();
    assert!(r1 <= 1e-6, "{r1}");
    let g = UnimodularMatrix::from_real(1.2, 0.3, -0.4, (1.0 - 0.12) / 1.2).unwrap();
    // conjugating the target and carrying the leaves along gives g ρ_t g⁻¹
    let target = ctx
        .target()
        .conjugated(&g)
        .with_transfer(bendlab_core::hypcore::GeodesicTransfer::Mobius(g));
    let conj = BendingContext::new(ctx.surface().clone(), target, basepoint()).unwrap();
    let r2 = holomorphy_residual(&conj, &lam, &ws, t0, 1e-4).unwrap();
    assert!((r1 - r2).abs() < 1e-8, "{r1} vs {r2}");
}

#[test]
fn bundles_of_equal_laminations_are_at_distance_zero() {
    let ctx = context();
    let lam = flagship(&ctx).scaled(C64::new(0.0, 0.1));
    let bundles: Vec<_> = (0..4).map(|j| approx_bundle(&ctx, &lam, j, 8).unwrap()).collect();
    let (h, d) = conjugated_distance(&bundles, &bundles, ctx.target()).unwrap();
    assert_eq!(h, UnimodularMatrix::IDENTITY);
    assert_eq!(d, 0.0);
}

#[test]
fn weight_scaled_sweep_converges() {
    let ctx = context();
    let lam = flagship(&ctx).scaled(C64::new(0.0, 0.1));
    let seq: Vec<_> = [0usize, 2, 4, 8, 16, 32]
        .iter()
        .map(|&n| {
            let c = if n == 0 { 1.0 } else { 1.0 + 1.0 / n as f64 };
            (n, lam.scaled(C64::new(c, 0.0)))
        })
        .collect();
    let sweep = approx_sweep(&ctx, &seq, &[4, 8]).unwrap();
    for row in &sweep.distance {
        assert_eq!(row[0], 0.0);
        for k in 1..row.len() - 1 {
            assert!(row[k + 1] <= row[k] * (1.0 + 1e-9));
        }
    }
    assert!(sweep.radius_envelope.windows(2).all(|w| w[0] >= w[1]));
}
