//! Solid cylinders `C(γ, x, r)`: the set of points within distance `r` of the
//! orthogonal disc through `x`, in the sense of geodesics.
//!
//! In standardized coordinates (core on `(0, ∞)`, basepoint at `c = (0,0,1)`)
//! a geodesic with endpoints `ζ1, ζ2` passes through the orthogonal hyperplane
//! at height 1 at distance `r` from `c` exactly when its endpoints lie in
//! `|ζ| ≤ tanh(r/2)` and `|ζ| ≥ coth(r/2)`. The boundary circle of the first
//! disc is the set of endpoints of geodesics orthogonal to the hyperplane
//! `|ζ|² + h² = 1` passing at distance `r` from `c`; by symmetry under
//! `ζ ↦ 1/ζ̄` the second disc is its inversion.

use super::geodesic::{Geodesic, OrientedGeodesic};
use super::matrix::UnimodularMatrix;
use super::point::{BoundaryPoint, H3Point};
use crate::prelude::*;

/// Which side of the standardized circle `|ζ| = ρ` the disc occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscKind {
    /// `|ζ| ≤ ρ`, around the source of the core.
    Inner,
    /// `|ζ| ≥ ρ`, around the target of the core.
    Outer,
}

/// Closed round disc on the sphere at infinity, stored in the cylinder's
/// standardized coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryDisc {
    kind: DiscKind,
    radius: f64,
    to_standard: UnimodularMatrix,
}

impl BoundaryDisc {
    pub fn kind(&self) -> DiscKind {
        self.kind
    }

    /// Euclidean radius of the standardized circle.
    pub fn standard_radius(&self) -> f64 {
        self.radius
    }

    pub fn contains(&self, p: BoundaryPoint) -> bool {
        let slack = 1e-12;
        match (self.kind, self.to_standard.apply(p)) {
            (DiscKind::Inner, BoundaryPoint::Infinity) => false,
            (DiscKind::Outer, BoundaryPoint::Infinity) => true,
            (DiscKind::Inner, BoundaryPoint::Finite(z)) => z.norm() <= self.radius * (1.0 + slack),
            (DiscKind::Outer, BoundaryPoint::Finite(z)) => {
                self.radius.is_finite() && z.norm() >= self.radius * (1.0 - slack)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolidCylinder {
    core: OrientedGeodesic,
    basepoint: H3Point,
    radius: f64,
    to_standard: UnimodularMatrix,
}

impl SolidCylinder {
    pub fn new(core: OrientedGeodesic, basepoint: H3Point, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) {
            return Err(Error::InvalidParameter("cylinder radius must be nonnegative"));
        }
        let to_standard = standard_frame(&core, &basepoint)?;
        Ok(SolidCylinder {
            core,
            basepoint,
            radius,
            to_standard,
        })
    }

    pub fn core(&self) -> OrientedGeodesic {
        self.core
    }

    pub fn basepoint(&self) -> H3Point {
        self.basepoint
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Isometry sending the core to `(0, ∞)` and the basepoint to `c`.
    pub fn to_standard(&self) -> UnimodularMatrix {
        self.to_standard
    }

    /// The supporting discs `D1` (around the source) and `D2` (around the target).
    pub fn supporting_discs(&self) -> (BoundaryDisc, BoundaryDisc) {
        let half = self.radius / 2.0;
        (
            BoundaryDisc {
                kind: DiscKind::Inner,
                radius: half.tanh(),
                to_standard: self.to_standard,
            },
            BoundaryDisc {
                kind: DiscKind::Outer,
                radius: 1.0 / half.tanh(),
                to_standard: self.to_standard,
            },
        )
    }

    /// One endpoint in `D1` and the other in `D2`.
    pub fn contains(&self, g: &Geodesic) -> bool {
        let (d1, d2) = self.supporting_discs();
        let (p, q) = g.endpoints();
        (d1.contains(p) && d2.contains(q)) || (d1.contains(q) && d2.contains(p))
    }

    /// Smallest radius of a cylinder with this core and basepoint containing
    /// `g`, or `None` if no finite radius works.
    pub fn required_radius(core: &OrientedGeodesic, basepoint: &H3Point, g: &Geodesic) -> Result<Option<f64>> {
        let frame = standard_frame(core, basepoint)?;
        let (p, q) = g.endpoints();
        let (zp, zq) = (frame.apply(p), frame.apply(q));
        let inner = |z: BoundaryPoint| z.finite().map_or(f64::INFINITY, |z| z.norm());
        let outer = |z: BoundaryPoint| z.finite().map_or(0.0, |z| 1.0 / z.norm());
        let t = inner(zp).max(outer(zq)).min(inner(zq).max(outer(zp)));
        Ok((t < 1.0).then(|| 2.0 * t.atanh()))
    }
}

fn standard_frame(core: &OrientedGeodesic, basepoint: &H3Point) -> Result<UnimodularMatrix> {
    let m = core.standardizer().inverse();
    let q = m.apply_h3(*basepoint);
    if q.horizontal().norm() > 1e-8 * q.height().max(1.0) {
        return Err(Error::InvalidParameter("cylinder basepoint is off the core"));
    }
    let k = q.height().sqrt();
    let scale = UnimodularMatrix::from_entries(
        C64::new(1.0 / k, 0.0),
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(k, 0.0),
    );
    Ok(scale * m)
}
