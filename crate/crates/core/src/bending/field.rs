use super::approx::ApproxBundle;
use super::cocycle::bend;
use super::context::BendingContext;
use crate::fuchsian::{Representation, Word};
use crate::hypcore::UnimodularMatrix;
use crate::laminations::FiniteLamination;
use crate::prelude::*;

/// `H = P_{0,1} P_{n,1}⁻¹` and `max_j ‖H E_{n,j} ρ(g_j) H⁻¹ − E_{0,j} ρ(g_j)‖`.
///
/// Both slices hold one bundle per generator, in generator order, built on
/// the same context and `m`; `rho` supplies the generator images.
pub fn conjugated_distance(
    bundles_n: &[ApproxBundle],
    bundles_0: &[ApproxBundle],
    rho: &Representation,
) -> Result<(UnimodularMatrix, f64)> {
    if bundles_n.is_empty() || bundles_n.len() != bundles_0.len() || bundles_n.len() != rho.rank() {
        return Err(Error::MismatchedContexts);
    }
    for (j, (bn, b0)) in bundles_n.iter().zip(bundles_0).enumerate() {
        if bn.generator != j || b0.generator != j || bn.m != b0.m || bn.basepoint != b0.basepoint {
            return Err(Error::MismatchedContexts);
        }
    }
    let h = if bundles_0[0].p == bundles_n[0].p {
        UnimodularMatrix::IDENTITY
    } else {
        bundles_0[0].p * bundles_n[0].p.inverse()
    };
    let h_inv = h.inverse();
    let mut dist: f64 = 0.0;
    for (j, (bn, b0)) in bundles_n.iter().zip(bundles_0).enumerate() {
        let g = rho.image(j);
        let lhs = ((h * bn.product_e) * g) * h_inv;
        let rhs = b0.product_e * g;
        dist = dist.max(lhs.projective_distance(&rhs));
    }
    Ok((h, dist))
}

/// `max_w |tr ρ1(w) − tr ρ2(w)|`, traces taken on the normalized lifts.
pub fn rep_class_distance(rho1: &Representation, rho2: &Representation, words: &[Word]) -> Result<f64> {
    if rho1.presentation() != rho2.presentation() {
        return Err(Error::MismatchedContexts);
    }
    Ok(words
        .iter()
        .map(|w| (rho1.evaluate(w).trace() - rho2.evaluate(w).trace()).norm())
        .fold(0.0, f64::max))
}

/// Step and acceptance threshold for central differences.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DifferenceOptions {
    pub step: f64,
    /// Largest accepted gap between the estimates at `h` and `h/2`, relative
    /// to `max(1, |estimate|)`.
    pub tolerance: f64,
    /// Return the extrapolated value instead of the plain estimate at `h`.
    pub richardson: bool,
}

impl Default for DifferenceOptions {
    fn default() -> Self {
        DifferenceOptions {
            step: 1e-3,
            tolerance: 1e-4,
            richardson: true,
        }
    }
}

impl DifferenceOptions {
    /// Plain central difference with step `h`, no refinement or check.
    pub fn plain(step: f64) -> Self {
        DifferenceOptions {
            step,
            tolerance: f64::INFINITY,
            richardson: false,
        }
    }
}

/// Central difference of `f` at `t0` along `direction`. With `richardson`
/// set, the estimates at `h` and `h/2` are checked against each other and
/// combined into a fourth-order value.
pub fn central_difference<F>(mut f: F, t0: C64, direction: C64, opts: &DifferenceOptions) -> Result<C64>
where
    F: FnMut(C64) -> Result<C64>,
{
    let h = opts.step;
    if !(h > 0.0) {
        return Err(Error::InvalidParameter("difference step must be positive"));
    }
    let mut diff = |h: f64| -> Result<C64> {
        let dt = direction * h;
        Ok((f(t0 + dt)? - f(t0 - dt)?) / (2.0 * h))
    };
    let coarse = diff(h)?;
    if !opts.richardson {
        return Ok(coarse);
    }
    let fine = diff(h / 2.0)?;
    let gap = (fine - coarse).norm() / fine.norm().max(1.0);
    if !(gap <= opts.tolerance) {
        return Err(Error::NonConvergentDifference { estimate_gap: gap });
    }
    Ok((fine * 4.0 - coarse) / 3.0)
}

fn trace_along(ctx: &BendingContext, lam: &FiniteLamination, w: &Word, t: C64) -> Result<C64> {
    Ok(bend(ctx, lam, t)?.evaluate(w).trace())
}

/// `d/dt tr ρ_{tλ}(w)` at `t = 0` with the given difference options.
pub fn trace_derivative(
    ctx: &BendingContext,
    lam: &FiniteLamination,
    w: &Word,
    opts: &DifferenceOptions,
) -> Result<C64> {
    central_difference(|t| trace_along(ctx, lam, w, t), C64::new(0.0, 0.0), C64::new(1.0, 0.0), opts)
}

/// The bending vector field `T_λ` at the target representation, in trace
/// coordinates given by `words`.
pub fn bending_vector_field(ctx: &BendingContext, lam: &FiniteLamination, words: &[Word]) -> Result<Vec<C64>> {
    let opts = DifferenceOptions::default();
    words.iter().map(|w| trace_derivative(ctx, lam, w, &opts)).collect()
}

/// Largest Cauchy–Riemann defect `|∂_x f + i ∂_y f| / |∂_x f|` of
/// `f(t) = tr ρ_{tλ}(w)` at `t0`, using plain central differences with step `h`.
/// Words whose trace is stationary at `t0` (both partials at rounding level)
/// contribute `0`.
pub fn holomorphy_residual(
    ctx: &BendingContext,
    lam: &FiniteLamination,
    words: &[Word],
    t0: C64,
    h: f64,
) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::InvalidParameter("difference step must be positive"));
    }
    let steps = [C64::new(h, 0.0), C64::new(0.0, h)];
    let mut reps = Vec::with_capacity(5);
    for s in steps {
        reps.push(bend(ctx, lam, t0 + s)?);
        reps.push(bend(ctx, lam, t0 - s)?);
    }
    reps.push(bend(ctx, lam, t0)?);
    let mut worst: f64 = 0.0;
    for w in words {
        let tr: Vec<C64> = reps.iter().map(|r| r.evaluate(w).trace()).collect();
        let fx = (tr[0] - tr[1]) / (2.0 * h);
        let fy = (tr[2] - tr[3]) / (2.0 * h);
        let noise = 64.0 * f64::EPSILON * tr[4].norm().max(1.0) / h;
        if fx.norm().max(fy.norm()) <= noise {
            continue;
        }
        worst = worst.max((fx + C64::i() * fy).norm() / fx.norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuchsian::genus2_octagon;
    use crate::hypcore::{Geodesic, H2Point};
    use crate::laminations::Leaf;

    fn ctx() -> BendingContext {
        BendingContext::fuchsian(genus2_octagon(), H2Point::from_xy(0.1, 1.0).unwrap()).unwrap()
    }

    #[test]
    fn conjugation_leaves_traces() {
        let rho = genus2_octagon();
        let g = UnimodularMatrix::new(C64::new(1.0, 0.5), C64::new(0.3, 0.0), C64::new(0.2, -0.1), C64::new(1.0, 0.0))
            .unwrap_or(UnimodularMatrix::IDENTITY);
        let words: Vec<Word> = ["a", "b", "aB", "abcd"]
            .iter()
            .map(|s| rho.presentation().parse_word(s).unwrap())
            .collect();
        let d = rep_class_distance(&rho, &rho.conjugated(&g), &words).unwrap();
        assert!(d < 1e-10);
    }

    #[test]
    fn empty_field_vanishes() {
        let c = ctx();
        let w = alloc::vec![Word::generator(0), Word::generator(1)];
        let v = bending_vector_field(&c, &FiniteLamination::empty(), &w).unwrap();
        assert!(v.iter().all(|z| z.norm() == 0.0));
        assert_eq!(holomorphy_residual(&c, &FiniteLamination::empty(), &w, C64::new(0.05, 0.05), 1e-4).unwrap(), 0.0);
    }

    #[test]
    fn single_leaf_derivative_matches_closed_form() {
        let c = ctx();
        let seg = c.segment(1);
        let p = seg.point_at(0.4);
        // a leaf through p, transverse to the segment
        let leaf = Geodesic::new(p.re() - 2.0 * p.im(), p.re() + 0.5 * p.im()).unwrap();
        let z = C64::new(0.7, -0.4);
        let lam = FiniteLamination::new(alloc::vec![Leaf::new(leaf, z)], None).unwrap();
        let cr = seg.crossing(&leaf, c.tolerances()).unwrap().unwrap();
        let axis = cr.orient_toward(&leaf, crate::hypcore::Side::Right);
        let m = axis.standardizer();
        let g = c.target().image(1);
        // d/dt A(γ, tz) at 0 = M diag(z/2, −z/2) M⁻¹
        let mi = m.inverse();
        let [a, b, cc, d] = m.entries();
        let [ia, ib, ic, id] = mi.entries();
        let half = z / 2.0;
        // M diag(half, -half) M⁻¹
        let k = [
            a * half * ia - b * half * ic,
            a * half * ib - b * half * id,
            cc * half * ia - d * half * ic,
            cc * half * ib - d * half * id,
        ];
        let [ga, gb, gc, gd] = g.entries();
        let oracle = k[0] * ga + k[1] * gc + k[2] * gb + k[3] * gd;
        let w = alloc::vec![Word::generator(1)];
        let v = bending_vector_field(&c, &lam, &w).unwrap();
        assert!((v[0] - oracle).norm() < 1e-7, "{} vs {}", v[0], oracle);
    }
}
