//! Partition approximation of a bending cocycle along `[x, g_j(x)]`.
//!
//! The segment is cut into `m` equal pieces. `E` is the product of one axis
//! isometry per piece (the consolidated mass `μ̃_i`), `B` the product of one
//! per partition point (the hat-weighted mass `μ′_i`). The first and last
//! factors of `B` are further split by the cut-off `χ` around `x`.

use super::cocycle::oriented_crossing_leaves;
use super::context::BendingContext;
use crate::hypcore::{
    axis_isometry, cross, distance_to_geodesic, BoundaryPoint, Geodesic, H2Point, H3Point, HyperbolicPoint,
    OrientedGeodesic, SolidCylinder, UnimodularMatrix,
};
use crate::laminations::FiniteLamination;
use crate::prelude::*;

/// The clamped hat functions `λ_1, …, λ_{m−1}` in the partition coordinate
/// `u ∈ [0, m]` (arc length rescaled so that `x_i` sits at `u = i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HatFunctions {
    m: usize,
}

impl HatFunctions {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::EmptySubsegmentFamily);
        }
        Ok(HatFunctions { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `λ_i(u)` for `1 ≤ i ≤ m − 1`.
    pub fn eval(&self, i: usize, u: f64) -> f64 {
        debug_assert!(i >= 1 && i < self.m);
        if i == 1 && u <= 1.0 {
            return 1.0;
        }
        if i == self.m - 1 && u >= (self.m - 1) as f64 {
            return 1.0;
        }
        (1.0 - (u - i as f64).abs()).max(0.0)
    }
}

/// Overrides for the partition construction.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PartitionOptions {
    /// Radius of the cut-off around `x`; computed from the lamination when
    /// absent. Sequences compared through [`epsilon_between`] should share it.
    pub chi_radius: Option<f64>,
}

/// All intermediate objects of the partition scheme for one generator.
///
/// Vectors are 0-based: `tilde_weights[k]` is `μ̃(γ̃_{k+1})`, and
/// `prime_weights[i]`, `a[i]`, `b[i]`, `d[i]` belong to the partition point
/// `x_{i+1}`. Axes are stored after transfer to H³; `None` marks a piece or
/// point without leaves, whose factor is the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxBundle {
    pub generator: usize,
    pub m: usize,
    pub basepoint: H2Point,
    pub points: Vec<H2Point>,
    pub tilde_axes: Vec<Option<OrientedGeodesic>>,
    pub tilde_weights: Vec<C64>,
    pub prime_axes: Vec<Option<OrientedGeodesic>>,
    pub prime_weights: Vec<C64>,
    pub a: Vec<C64>,
    pub b: Vec<C64>,
    pub a_prime: C64,
    pub a_second: C64,
    pub b_prime: C64,
    pub b_second: C64,
    pub c: Vec<UnimodularMatrix>,
    pub d: Vec<UnimodularMatrix>,
    pub d_left: Vec<UnimodularMatrix>,
    pub d_right: Vec<UnimodularMatrix>,
    pub p: UnimodularMatrix,
    pub q: UnimodularMatrix,
    pub r: UnimodularMatrix,
    pub s: UnimodularMatrix,
    /// `B = D_1 ⋯ D_{m−1}`.
    pub product_b: UnimodularMatrix,
    /// `E = C_1 ⋯ C_m`.
    pub product_e: UnimodularMatrix,
    pub chi_radius: f64,
    /// `χμ(G)`: total mass of the lamination weighted by the cut-off.
    pub chi_mass: C64,
    /// Largest cylinder radius needed over the pieces.
    pub radius: f64,
    /// Projective `‖E − B‖`.
    pub product_gap: f64,
}

impl ApproxBundle {
    /// Weights of the factors of `B` strictly between `P` and `S`, whose
    /// differences enter `ε(m, n)`.
    pub fn middle_weights(&self) -> Vec<C64> {
        let m = self.m;
        if m == 2 {
            return alloc::vec![self.a_second + self.b_second];
        }
        let mut out = Vec::with_capacity(m - 1);
        out.push(self.a_second + self.b[0]);
        out.extend_from_slice(&self.prime_weights[1..m - 2]);
        out.push(self.a[m - 2] + self.b_second);
        out
    }
}

/// One leaf's share of a piece.
#[derive(Clone, Copy, Debug)]
struct Share {
    crossing: usize,
    piece: usize,
    factor: f64,
}

struct Placed {
    u: f64,
    weight: C64,
    leaf: Geodesic,
    axis: OrientedGeodesic,
}

pub fn approx_bundle(ctx: &BendingContext, lam: &FiniteLamination, j: usize, m: usize) -> Result<ApproxBundle> {
    approx_bundle_with(ctx, lam, j, m, &PartitionOptions::default())
}

pub fn approx_bundle_with(
    ctx: &BendingContext,
    lam: &FiniteLamination,
    j: usize,
    m: usize,
    opts: &PartitionOptions,
) -> Result<ApproxBundle> {
    let hats = HatFunctions::new(m)?;
    if j >= ctx.rank() {
        return Err(Error::InvalidParameter("generator index out of range"));
    }
    let seg = ctx.segment(j);
    let len = seg.length();
    let mf = m as f64;
    let eta = ctx.tolerances().endpoint * mf / len;
    let points: Vec<H2Point> = (0..=m).map(|i| seg.point_at(i as f64 / mf)).collect();

    let placed: Vec<Placed> = oriented_crossing_leaves(ctx.target().transfer(), lam, seg, ctx.tolerances())?
        .into_iter()
        .map(|(c, axis)| {
            let leaf = &lam.leaves()[c.leaf];
            Placed {
                u: (c.crossing.distance / len * mf).clamp(0.0, mf),
                weight: leaf.weight,
                leaf: leaf.geodesic,
                axis,
            }
        })
        .collect();

    // split crossings sitting on partition points between the adjacent pieces
    let mut shares: Vec<Share> = Vec::new();
    for (k, p) in placed.iter().enumerate() {
        let nearest = p.u.round();
        if (p.u - nearest).abs() <= eta {
            let i = nearest as usize;
            if i >= 1 {
                shares.push(Share { crossing: k, piece: i - 1, factor: 0.5 });
            }
            if i < m {
                shares.push(Share { crossing: k, piece: i, factor: 0.5 });
            }
        } else {
            let piece = (p.u.floor() as usize).min(m - 1);
            shares.push(Share { crossing: k, piece, factor: 1.0 });
        }
    }
    let snapped = |k: usize| {
        let u = placed[k].u;
        if (u - u.round()).abs() <= eta {
            u.round()
        } else {
            u
        }
    };

    let zero = C64::new(0.0, 0.0);
    let mut tilde_weights = alloc::vec![zero; m];
    for s in &shares {
        tilde_weights[s.piece] += placed[s.crossing].weight * s.factor;
    }
    let mut a = alloc::vec![zero; m - 1];
    let mut b = alloc::vec![zero; m - 1];
    for s in &shares {
        let u = snapped(s.crossing);
        let w = placed[s.crossing].weight * s.factor;
        // piece k is [x_k, x_{k+1}]; it feeds a_{k+1} (left of x_{k+1}) and b_k (right of x_k)
        if s.piece < m - 1 {
            a[s.piece] += w * hats.eval(s.piece + 1, u);
        }
        if s.piece >= 1 {
            b[s.piece - 1] += w * hats.eval(s.piece, u);
        }
    }
    let prime_weights: Vec<C64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();

    // γ̃: leaf of the piece nearest its midpoint
    let tilde_idx: Vec<Option<usize>> = (0..m)
        .map(|k| {
            let mid = k as f64 + 0.5;
            nearest(shares.iter().filter(|s| s.piece == k).map(|s| s.crossing), &placed, mid)
        })
        .collect();
    // γ′: leaf crossing (x_{i−1}, x_{i+1}) nearest x_i, closed interval as fallback
    let prime_idx: Vec<Option<usize>> = (1..m)
        .map(|i| {
            let c = i as f64;
            let open = (0..placed.len()).filter(|&k| (snapped(k) - c).abs() < 1.0);
            nearest(open, &placed, c).or_else(|| {
                nearest((0..placed.len()).filter(|&k| (snapped(k) - c).abs() <= 1.0), &placed, c)
            })
        })
        .collect();
    let axis_of = |idx: Option<usize>| idx.map(|k| placed[k].axis);
    let iso = |idx: Option<usize>, z: C64| match idx {
        Some(k) => axis_isometry(&placed[k].axis, z),
        None => UnimodularMatrix::IDENTITY,
    };

    let chi_r = match opts.chi_radius {
        Some(r) => r,
        None => chi_radius(ctx, lam, j, m),
    };
    let x = ctx.basepoint();
    let gx = seg.end();
    let chi_at = |leaf: &Geodesic, center: &H2Point| bump(distance_to_geodesic(center, leaf), chi_r);
    let (mut a_prime, mut a_second, mut b_prime, mut b_second) = (zero, zero, zero, zero);
    for s in &shares {
        let p = &placed[s.crossing];
        let w = p.weight * s.factor;
        if s.piece == 0 {
            let chi = chi_at(&p.leaf, &x);
            a_prime += w * chi;
            a_second += w * (1.0 - chi);
        }
        if s.piece == m - 1 {
            let chi = chi_at(&p.leaf, &gx);
            b_prime += w * chi;
            b_second += w * (1.0 - chi);
        }
    }
    let chi_mass = lam
        .leaves()
        .iter()
        .fold(zero, |acc, l| acc + l.weight * chi_at(&l.geodesic, &x));

    let c: Vec<UnimodularMatrix> = (0..m).map(|k| iso(tilde_idx[k], tilde_weights[k])).collect();
    let d: Vec<UnimodularMatrix> = (0..m - 1).map(|i| iso(prime_idx[i], prime_weights[i])).collect();
    let d_left: Vec<UnimodularMatrix> = (0..m - 1).map(|i| iso(prime_idx[i], a[i])).collect();
    let d_right: Vec<UnimodularMatrix> = (0..m - 1).map(|i| iso(prime_idx[i], b[i])).collect();
    let p = iso(prime_idx[0], a_prime);
    let q = iso(prime_idx[0], a_second);
    let r = iso(prime_idx[m - 2], b_second);
    let s = iso(prime_idx[m - 2], b_prime);
    let product_b = d.iter().fold(UnimodularMatrix::IDENTITY, |acc, x| &acc * x);
    let product_e = c.iter().fold(UnimodularMatrix::IDENTITY, |acc, x| &acc * x);

    // cylinder radius per piece: the piece's leaves and the γ′ carrying mass into it
    let mut radius: f64 = 0.0;
    for k in 0..m {
        let Some(core_idx) = tilde_idx[k] else { continue };
        let core = placed[core_idx].axis;
        let mut family: Vec<usize> = shares.iter().filter(|s| s.piece == k).map(|s| s.crossing).collect();
        if k >= 1 && b[k - 1] != zero {
            family.extend(prime_idx[k - 1]);
        }
        if k < m - 1 && a[k] != zero {
            family.extend(prime_idx[k]);
        }
        let mid = seg.point_at((k as f64 + 0.5) / mf);
        let base = cylinder_base(ctx, &core, seg.carrier(), mid)?;
        for f in family {
            let g = placed[f].axis.unoriented();
            let need = SolidCylinder::required_radius(&core, &base, &g)?.unwrap_or(f64::INFINITY);
            radius = radius.max(need);
        }
    }

    Ok(ApproxBundle {
        generator: j,
        m,
        basepoint: x,
        points,
        tilde_axes: tilde_idx.iter().map(|&i| axis_of(i)).collect(),
        tilde_weights,
        prime_axes: prime_idx.iter().map(|&i| axis_of(i)).collect(),
        prime_weights,
        a,
        b,
        a_prime,
        a_second,
        b_prime,
        b_second,
        c,
        d,
        d_left,
        d_right,
        p,
        q,
        r,
        s,
        product_gap: product_e.projective_distance(&product_b),
        product_b,
        product_e,
        chi_radius: chi_r,
        chi_mass,
        radius,
    })
}

fn nearest(cands: impl Iterator<Item = usize>, placed: &[Placed], target: f64) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for k in cands {
        let dist = (placed[k].u - target).abs();
        // candidates arrive ordered from x, so strict comparison breaks ties toward x
        if best.is_none_or(|(_, bd)| dist < bd) {
            best = Some((k, dist));
        }
    }
    best.map(|(k, _)| k)
}

fn bump(distance: f64, radius: f64) -> f64 {
    if radius <= 0.0 {
        return if distance == 0.0 { 1.0 } else { 0.0 };
    }
    (1.0 - distance / radius).max(0.0)
}

/// Base point of the cylinder around `core`: the foot of the common
/// perpendicular from `core` to the transferred perpendicular of the carrier
/// at `mid`, or to the transferred carrier when that perpendicular is the
/// core itself.
fn cylinder_base(
    ctx: &BendingContext,
    core: &OrientedGeodesic,
    carrier: Geodesic,
    mid: H2Point,
) -> Result<H3Point> {
    let transfer = ctx.target().transfer();
    let std = core.standardizer();
    let to_std = std.inverse();
    let foot_height = |g: &Geodesic| -> Option<f64> {
        let (p, q) = g.endpoints();
        let (p, q) = (to_std.apply(p).finite()?, to_std.apply(q).finite()?);
        let h = (p.norm() * q.norm()).sqrt();
        (h > 1e-12 && h < 1e12).then_some(h)
    };
    let perp = transfer.apply(&perpendicular_at(&carrier, mid)?)?;
    let height = match foot_height(&perp) {
        Some(h) if !perp.shares_endpoint(&core.unoriented(), 1e-8) => h,
        _ => foot_height(&transfer.apply(&carrier)?).ok_or(Error::DegenerateLeaf)?,
    };
    Ok(std.apply_h3(H3Point::new(C64::new(0.0, 0.0), height)?))
}

/// Geodesic through `p` perpendicular to `g`.
fn perpendicular_at(g: &Geodesic, p: H2Point) -> Result<Geodesic> {
    // in the frame sending g to the imaginary axis and p to i, the
    // perpendicular is the unit circle
    let frame = g.oriented().real_standardizer();
    let inv = frame.inverse();
    let local = inv.apply_h2(p);
    let r = local.z().norm();
    Geodesic::new(frame.apply(BoundaryPoint::real(-r)), frame.apply(BoundaryPoint::real(r)))
}

/// Radius of the cut-off around `x` for the pair of carriers through `x`:
/// halved from `d′/m` until every leaf within that distance of `x` crosses
/// both the carrier of `[x, g_j(x)]` and that of `[g_j⁻¹(x), x]` within
/// `d′/m` of `x`.
pub fn chi_radius(ctx: &BendingContext, lam: &FiniteLamination, j: usize, m: usize) -> f64 {
    let x = ctx.basepoint();
    let reach = ctx.d_min() / m as f64;
    let carriers = [ctx.segment(j).carrier(), ctx.backward_segment(j).carrier()];
    let good = |g: &Geodesic| {
        carriers.iter().all(|c| match cross(c, g) {
            crate::hypcore::Intersection::Transverse { point, .. } => point.distance(&x) < reach,
            crate::hypcore::Intersection::Equal => true,
            crate::hypcore::Intersection::None => false,
        })
    };
    let dists: Vec<(f64, bool)> = lam
        .leaves()
        .iter()
        .map(|l| (distance_to_geodesic(&x, &l.geodesic), good(&l.geodesic)))
        .collect();
    let mut r = reach;
    for _ in 0..64 {
        if dists.iter().all(|&(d, ok)| ok || d >= r) {
            return r;
        }
        r /= 2.0;
    }
    0.0
}

/// `|χμ_n(G) − χμ_0(G)|` plus the differences of the middle weights of `B`.
pub fn epsilon_between(bn: &ApproxBundle, b0: &ApproxBundle) -> Result<f64> {
    if bn.m != b0.m || bn.generator != b0.generator || bn.basepoint != b0.basepoint {
        return Err(Error::MismatchedContexts);
    }
    let mut e = (bn.chi_mass - b0.chi_mass).norm();
    for (x, y) in bn.middle_weights().iter().zip(b0.middle_weights()) {
        e += (x - y).norm();
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuchsian::genus2_octagon;
    use crate::laminations::Leaf;

    fn ctx() -> BendingContext {
        BendingContext::fuchsian(genus2_octagon(), H2Point::from_xy(0.1, 1.0).unwrap()).unwrap()
    }

    #[test]
    fn hats_sum_to_one() {
        for m in 2..7 {
            let h = HatFunctions::new(m).unwrap();
            for k in 0..=100 {
                let u = m as f64 * k as f64 / 100.0;
                let s: f64 = (1..m).map(|i| h.eval(i, u)).sum();
                assert!((s - 1.0).abs() < 1e-14);
            }
            assert_eq!(h.eval(1, 0.3), 1.0);
            assert_eq!(h.eval(m - 1, m as f64 - 0.3), 1.0);
        }
        assert!(HatFunctions::new(1).is_err());
    }

    #[test]
    fn empty_lamination_gives_identities() {
        let b = approx_bundle(&ctx(), &FiniteLamination::empty(), 1, 4).unwrap();
        assert_eq!(b.product_b, UnimodularMatrix::IDENTITY);
        assert_eq!(b.product_e, UnimodularMatrix::IDENTITY);
        assert_eq!(b.radius, 0.0);
    }

    #[test]
    fn single_leaf_has_no_gap() {
        let c = ctx();
        let seg = c.segment(1);
        let leaf = perpendicular_at(&seg.carrier(), seg.point_at(0.37)).unwrap();
        let lam = FiniteLamination::new(alloc::vec![Leaf::new(leaf, C64::new(0.3, 0.2))], None).unwrap();
        for m in [2, 3, 4, 8] {
            let b = approx_bundle(&c, &lam, 1, m).unwrap();
            assert!(b.product_gap < 1e-12, "m = {m}: {}", b.product_gap);
            assert!(b.radius < 1e-9);
        }
    }

    #[test]
    fn weight_identities() {
        let c = ctx();
        let seg = c.segment(2);
        let leaves = [0.0, 0.1, 0.25, 0.5, 0.52, 0.9, 1.0]
            .iter()
            .enumerate()
            .map(|(k, &s)| {
                let g = perpendicular_at(&seg.carrier(), seg.point_at(s)).unwrap();
                Leaf::new(g, C64::new(0.1 * (1.0 + k as f64), -0.05 * k as f64))
            })
            .collect();
        let lam = FiniteLamination::new(leaves, None).unwrap();
        for m in [2, 3, 4, 5, 8] {
            let b = approx_bundle(&c, &lam, 2, m).unwrap();
            for i in 0..m - 1 {
                assert_eq!(b.prime_weights[i], b.a[i] + b.b[i]);
            }
            assert!((b.tilde_weights[0] - b.a[0]).norm() < 1e-14);
            assert!((b.tilde_weights[m - 1] - b.b[m - 2]).norm() < 1e-14);
            for k in 1..m - 1 {
                assert!((b.tilde_weights[k] - b.b[k - 1] - b.a[k]).norm() < 1e-14);
            }
            let pq = (b.p * b.q) * b.d_right[0];
            assert!(pq.difference_norm(&b.d[0]) < 1e-10);
            let rs = (b.d_left[m - 2] * b.r) * b.s;
            let bsum = b.b_prime + b.b_second;
            assert!(rs.difference_norm(&b.d[m - 2]) < 1e-10, "m={m} {} {} {:?} {:?}", bsum, b.b[m - 2], b.a_prime + b.a_second, b.a[0]);
            // leaves through x and g(x) count half, as in the cocycle
            let total: C64 = b.tilde_weights.iter().sum();
            let expected = C64::new(2.4, -0.9);
            assert!((total - expected).norm() < 1e-12, "{total} vs {expected}");
        }
    }
}
