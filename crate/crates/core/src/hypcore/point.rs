use core::cmp::Ordering;

use crate::prelude::*;

/// A point of the Riemann sphere, with infinity kept exact.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryPoint {
    Finite(C64),
    Infinity,
}

impl BoundaryPoint {
    pub fn real(x: f64) -> Self {
        BoundaryPoint::Finite(C64::new(x, 0.0))
    }

    pub fn finite(&self) -> Option<C64> {
        match self {
            BoundaryPoint::Finite(z) => Some(*z),
            BoundaryPoint::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    /// Point `p/q` of the projective line.
    pub fn from_homogeneous(p: C64, q: C64) -> Self {
        if q == C64::new(0.0, 0.0) {
            BoundaryPoint::Infinity
        } else {
            BoundaryPoint::Finite(p / q)
        }
    }

    /// Chordal distance on the Riemann sphere (unit-diameter normalization):
    /// `|a − b| / (√(1+|a|²)·√(1+|b|²))`, and `1/√(1+|a|²)` to infinity.
    ///
    /// It behaves like an absolute distance near 0 and like a distance between
    /// reciprocals near infinity, so `1e14` and `∞` are close.
    pub fn chordal_distance(&self, other: &BoundaryPoint) -> f64 {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => 0.0,
            (BoundaryPoint::Finite(a), BoundaryPoint::Infinity)
            | (BoundaryPoint::Infinity, BoundaryPoint::Finite(a)) => 1.0 / 1f64.hypot(a.norm()),
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => {
                (a - b).norm() / (1f64.hypot(a.norm()) * 1f64.hypot(b.norm()))
            }
        }
    }

    /// Equality up to `tol` in the chordal metric.
    pub fn approx_eq(&self, other: &BoundaryPoint, tol: f64) -> bool {
        self.chordal_distance(other) <= tol
    }

    pub fn is_real(&self, tol: f64) -> bool {
        match self {
            BoundaryPoint::Infinity => true,
            BoundaryPoint::Finite(z) => z.im.abs() <= tol * 1f64.max(z.re.abs()),
        }
    }

    /// Real coordinate on R̂; `None` encodes infinity.
    pub(crate) fn real_coord(&self) -> Option<f64> {
        self.finite().map(|z| z.re)
    }

    /// Total order: finite values by (re, im), infinity last.
    pub fn canonical_cmp(&self, other: &BoundaryPoint) -> Ordering {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => Ordering::Equal,
            (BoundaryPoint::Infinity, _) => Ordering::Greater,
            (_, BoundaryPoint::Infinity) => Ordering::Less,
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => a
                .re
                .total_cmp(&b.re)
                .then_with(|| a.im.total_cmp(&b.im)),
        }
    }
}

impl From<f64> for BoundaryPoint {
    fn from(x: f64) -> Self {
        BoundaryPoint::real(x)
    }
}

impl From<C64> for BoundaryPoint {
    fn from(z: C64) -> Self {
        BoundaryPoint::Finite(z)
    }
}

/// A point of the upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct H2Point(C64);

impl H2Point {
    pub const I: H2Point = H2Point(C64::new(0.0, 1.0));

    pub fn new(z: C64) -> Result<Self> {
        if z.im > 0.0 && z.re.is_finite() && z.im.is_finite() {
            Ok(H2Point(z))
        } else {
            Err(Error::NotInterior)
        }
    }

    pub fn from_xy(x: f64, y: f64) -> Result<Self> {
        Self::new(C64::new(x, y))
    }

    pub(crate) fn new_unchecked(z: C64) -> Self {
        debug_assert!(z.im > 0.0, "point left the upper half-plane: {z}");
        H2Point(z)
    }

    pub fn z(&self) -> C64 {
        self.0
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    /// The same point viewed in the vertical half-plane of H³.
    pub fn to_h3(&self) -> H3Point {
        H3Point {
            horizontal: C64::new(self.0.re, 0.0),
            height: self.0.im,
        }
    }
}

/// A point `(ζ, h)` of the upper half-space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct H3Point {
    horizontal: C64,
    height: f64,
}

impl H3Point {
    /// The point `c = (0, 0, 1)`.
    pub const C: H3Point = H3Point {
        horizontal: C64::new(0.0, 0.0),
        height: 1.0,
    };

    pub fn new(horizontal: C64, height: f64) -> Result<Self> {
        if height > 0.0 && height.is_finite() {
            Ok(H3Point { horizontal, height })
        } else {
            Err(Error::NotInterior)
        }
    }

    pub(crate) fn new_unchecked(horizontal: C64, height: f64) -> Self {
        H3Point { horizontal, height }
    }

    pub fn horizontal(&self) -> C64 {
        self.horizontal
    }

    pub fn height(&self) -> f64 {
        self.height
    }
}

/// Points of a model carrying the hyperbolic metric.
pub trait HyperbolicPoint {
    fn distance(&self, other: &Self) -> f64;
}

impl HyperbolicPoint for H2Point {
    fn distance(&self, other: &Self) -> f64 {
        let chord = (self.0 - other.0).norm();
        2.0 * (chord / (2.0 * (self.0.im * other.0.im).sqrt())).asinh()
    }
}

impl HyperbolicPoint for H3Point {
    fn distance(&self, other: &Self) -> f64 {
        let dz = (self.horizontal - other.horizontal).norm();
        let dh = self.height - other.height;
        let chord = dz.hypot(dh);
        2.0 * (chord / (2.0 * (self.height * other.height).sqrt())).asinh()
    }
}

pub fn hyp_distance<P: HyperbolicPoint>(p: &P, q: &P) -> f64 {
    p.distance(q)
}
