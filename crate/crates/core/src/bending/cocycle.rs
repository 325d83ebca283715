use super::context::BendingContext;
use crate::fuchsian::Representation;
use crate::hypcore::{axis_isometry, GeodesicSegment, GeodesicTransfer, H2Point, OrientedGeodesic, Side, UnimodularMatrix};
use crate::laminations::{crossings_with, Crossing, FiniteLamination, OrbitSpec};
use crate::prelude::*;
use crate::Tolerances;

/// Side of the oriented segment on which bending axes put their target.
pub(crate) const BENDING_SIDE: Side = Side::Right;

/// Crossings of `seg` ordered from its start, each with its leaf oriented
/// for bending and carried to H³ by the transfer.
pub fn oriented_crossing_leaves(
    transfer: &GeodesicTransfer,
    lam: &FiniteLamination,
    seg: &GeodesicSegment,
    tol: &Tolerances,
) -> Result<Vec<(Crossing, OrientedGeodesic)>> {
    let mut out = Vec::new();
    for c in crossings_with(lam, seg, tol)? {
        let leaf = &lam.leaves()[c.leaf].geodesic;
        let oriented = c.crossing.orient_toward(leaf, BENDING_SIDE);
        out.push((c, transfer.apply_oriented(&oriented)?));
    }
    Ok(out)
}

pub(crate) fn cocycle_on_segment(
    transfer: &GeodesicTransfer,
    lam: &FiniteLamination,
    seg: &GeodesicSegment,
    t: C64,
    tol: &Tolerances,
) -> Result<UnimodularMatrix> {
    let mut out = UnimodularMatrix::IDENTITY;
    for (c, axis) in oriented_crossing_leaves(transfer, lam, seg, tol)? {
        let w = lam.leaves()[c.leaf].weight * c.endpoint_factor();
        out = out * axis_isometry(&axis, t * w);
    }
    Ok(out)
}

/// `C_{tλ}(x, y)`: product of the axis isometries of the leaves crossing
/// `[x, y]`, in order from `x`, with half weight on leaves through `x` or `y`.
/// `x = y` gives the identity.
pub fn bending_cocycle(
    ctx: &BendingContext,
    lam: &FiniteLamination,
    x: H2Point,
    y: H2Point,
    t: C64,
) -> Result<UnimodularMatrix> {
    let seg = match GeodesicSegment::new(x, y) {
        Ok(s) => s,
        Err(Error::DegenerateGeodesic) => return Ok(UnimodularMatrix::IDENTITY),
        Err(e) => return Err(e),
    };
    cocycle_on_segment(ctx.target().transfer(), lam, &seg, t, ctx.tolerances())
}

/// Source of leaves for [`bend`].
#[derive(Clone, Copy, Debug)]
pub enum BendSource<'a> {
    Finite(&'a FiniteLamination),
    Orbit(&'a OrbitSpec),
}

impl<'a> From<&'a FiniteLamination> for BendSource<'a> {
    fn from(l: &'a FiniteLamination) -> Self {
        BendSource::Finite(l)
    }
}

impl<'a> From<&'a OrbitSpec> for BendSource<'a> {
    fn from(s: &'a OrbitSpec) -> Self {
        BendSource::Orbit(s)
    }
}

/// `ρ_{tλ}(g_j) = C_{tλ}(x, g_j(x)) ρ(g_j)`.
///
/// Orbit specs are instantiated over the context segments first; callers
/// bending the same orbit repeatedly should instantiate once with
/// [`BendingContext::instantiate`] and pass the finite lamination.
pub fn bend<'a>(ctx: &BendingContext, lam: impl Into<BendSource<'a>>, t: C64) -> Result<Representation> {
    let owned;
    let lam = match lam.into() {
        BendSource::Finite(l) => l,
        BendSource::Orbit(spec) => {
            owned = ctx.instantiate(spec)?;
            &owned
        }
    };
    let target = ctx.target();
    let mut images = Vec::with_capacity(ctx.rank());
    for (j, seg) in ctx.segments().iter().enumerate() {
        let c = cocycle_on_segment(target.transfer(), lam, seg, t, ctx.tolerances())?;
        images.push(c * target.image(j));
    }
    target.with_images(images)
}
