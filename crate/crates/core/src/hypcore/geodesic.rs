use core::cmp::Ordering;
use core::f64::consts::PI;

use super::matrix::UnimodularMatrix;
use super::point::{BoundaryPoint, H2Point};
use crate::prelude::*;
use crate::Tolerances;

/// Unoriented geodesic, stored with endpoints in canonical order
/// (finite values ascending, infinity last).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Geodesic {
    first: BoundaryPoint,
    second: BoundaryPoint,
}

impl Geodesic {
    pub fn new(u: impl Into<BoundaryPoint>, v: impl Into<BoundaryPoint>) -> Result<Self> {
        let (u, v) = (u.into(), v.into());
        if u.approx_eq(&v, Tolerances::DEFAULT.boundary) {
            return Err(Error::DegenerateGeodesic);
        }
        Ok(Self::sorted(u, v))
    }

    fn sorted(u: BoundaryPoint, v: BoundaryPoint) -> Self {
        if u.canonical_cmp(&v) == Ordering::Greater {
            Geodesic { first: v, second: u }
        } else {
            Geodesic { first: u, second: v }
        }
    }

    /// The vertical geodesic `(0, ∞)`.
    pub fn imaginary_axis() -> Self {
        Geodesic {
            first: BoundaryPoint::real(0.0),
            second: BoundaryPoint::Infinity,
        }
    }

    pub fn endpoints(&self) -> (BoundaryPoint, BoundaryPoint) {
        (self.first, self.second)
    }

    pub fn first(&self) -> BoundaryPoint {
        self.first
    }

    pub fn second(&self) -> BoundaryPoint {
        self.second
    }

    /// Oriented from the first canonical endpoint to the second.
    pub fn oriented(&self) -> OrientedGeodesic {
        OrientedGeodesic {
            source: self.first,
            target: self.second,
        }
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.first.is_real(tol) && self.second.is_real(tol)
    }

    pub fn approx_eq(&self, other: &Geodesic, tol: f64) -> bool {
        (self.first.approx_eq(&other.first, tol) && self.second.approx_eq(&other.second, tol))
            || (self.first.approx_eq(&other.second, tol) && self.second.approx_eq(&other.first, tol))
    }

    pub fn shares_endpoint(&self, other: &Geodesic, tol: f64) -> bool {
        [self.first, self.second]
            .iter()
            .any(|p| p.approx_eq(&other.first, tol) || p.approx_eq(&other.second, tol))
    }

    pub fn image(&self, g: &UnimodularMatrix) -> Geodesic {
        Self::sorted(g.apply(self.first), g.apply(self.second))
    }
}

/// Geodesic with a chosen direction of travel, `source → target`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientedGeodesic {
    source: BoundaryPoint,
    target: BoundaryPoint,
}

impl OrientedGeodesic {
    pub fn new(source: impl Into<BoundaryPoint>, target: impl Into<BoundaryPoint>) -> Result<Self> {
        let (source, target) = (source.into(), target.into());
        if source.approx_eq(&target, Tolerances::DEFAULT.boundary) {
            return Err(Error::DegenerateGeodesic);
        }
        Ok(OrientedGeodesic { source, target })
    }

    pub(crate) fn new_unchecked(source: BoundaryPoint, target: BoundaryPoint) -> Self {
        OrientedGeodesic { source, target }
    }

    pub fn source(&self) -> BoundaryPoint {
        self.source
    }

    pub fn target(&self) -> BoundaryPoint {
        self.target
    }

    pub fn reversed(&self) -> Self {
        OrientedGeodesic {
            source: self.target,
            target: self.source,
        }
    }

    pub fn unoriented(&self) -> Geodesic {
        Geodesic::sorted(self.source, self.target)
    }

    pub fn image(&self, g: &UnimodularMatrix) -> OrientedGeodesic {
        OrientedGeodesic {
            source: g.apply(self.source),
            target: g.apply(self.target),
        }
    }

    pub fn approx_eq(&self, other: &OrientedGeodesic, tol: f64) -> bool {
        self.source.approx_eq(&other.source, tol) && self.target.approx_eq(&other.target, tol)
    }

    /// A unimodular matrix sending `0 ↦ source` and `∞ ↦ target`.
    pub fn standardizer(&self) -> UnimodularMatrix {
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        match (self.source, self.target) {
            (BoundaryPoint::Finite(u), BoundaryPoint::Finite(v)) => {
                let s = (v - u).sqrt();
                UnimodularMatrix::from_entries(v / s, u / s, one / s, one / s)
            }
            (BoundaryPoint::Finite(u), BoundaryPoint::Infinity) => {
                UnimodularMatrix::from_entries(one, u, zero, one)
            }
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(v)) => {
                UnimodularMatrix::from_entries(v, -one, one, zero)
            }
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => {
                unreachable!("oriented geodesic with coincident endpoints")
            }
        }
    }

    /// Real matrix with positive determinant sending `0 ↦ source`, `∞ ↦ target`.
    /// Requires real endpoints; it preserves the upper half-plane.
    pub(crate) fn real_standardizer(&self) -> UnimodularMatrix {
        let r = |x: f64| C64::new(x, 0.0);
        match (self.source.real_coord(), self.target.real_coord()) {
            (Some(u), Some(v)) => {
                let s = (v - u).signum();
                let k = (v - u).abs().sqrt();
                UnimodularMatrix::from_entries(r(v * s / k), r(u / k), r(s / k), r(1.0 / k))
            }
            (Some(u), None) => UnimodularMatrix::from_entries(r(1.0), r(u), r(0.0), r(1.0)),
            (None, Some(v)) => UnimodularMatrix::from_entries(r(v), r(-1.0), r(1.0), r(0.0)),
            (None, None) => unreachable!("oriented geodesic with coincident endpoints"),
        }
    }
}

/// The isometry with oriented axis `axis` and complex displacement `z`:
/// translation by `Re z` toward the target composed with rotation by `Im z`.
pub fn axis_isometry(axis: &OrientedGeodesic, z: C64) -> UnimodularMatrix {
    let half = z / 2.0;
    let ep = half.exp();
    let em = (-half).exp();
    match (axis.source, axis.target) {
        (BoundaryPoint::Finite(u), BoundaryPoint::Finite(v)) => {
            let w = v - u;
            UnimodularMatrix::from_entries(
                (v * ep - u * em) / w,
                (u * v) * (em - ep) / w,
                (ep - em) / w,
                (v * em - u * ep) / w,
            )
        }
        (BoundaryPoint::Finite(u), BoundaryPoint::Infinity) => {
            UnimodularMatrix::from_entries(ep, u * (em - ep), C64::new(0.0, 0.0), em)
        }
        (BoundaryPoint::Infinity, BoundaryPoint::Finite(v)) => {
            UnimodularMatrix::from_entries(em, v * (ep - em), C64::new(0.0, 0.0), ep)
        }
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => UnimodularMatrix::IDENTITY,
    }
}

/// Inverse of [`axis_isometry`] on loxodromic elements.
///
/// The displacement is reduced to `Re z > 0`, `Im z ∈ (−π, π]`, and the axis
/// is oriented toward the attracting fixed point.
pub fn complex_displacement(m: &UnimodularMatrix) -> Result<(OrientedGeodesic, C64)> {
    let tr = m.trace();
    let disc = (tr * tr - 4.0).sqrt();
    let r1 = (tr + disc) / 2.0;
    let r2 = (tr - disc) / 2.0;
    let (lambda, mu) = if r1.norm() >= r2.norm() { (r1, r2) } else { (r2, r1) };
    if !(lambda.norm() > 1.0 + 1e-9) {
        return Err(Error::NotLoxodromic);
    }
    let target = fixed_point(m, lambda);
    let source = fixed_point(m, mu);
    if source.approx_eq(&target, Tolerances::DEFAULT.boundary) {
        return Err(Error::NotLoxodromic);
    }
    let mut z = lambda.ln() * 2.0;
    while z.im > PI {
        z.im -= 2.0 * PI;
    }
    while z.im <= -PI {
        z.im += 2.0 * PI;
    }
    Ok((OrientedGeodesic { source, target }, z))
}

/// Fixed point belonging to eigenvalue `ev`, from the better-conditioned row.
fn fixed_point(m: &UnimodularMatrix, ev: C64) -> BoundaryPoint {
    let (p1, q1) = (m.b(), ev - m.a());
    let (p2, q2) = (ev - m.d(), m.c());
    let n1 = p1.norm() + q1.norm();
    let n2 = p2.norm() + q2.norm();
    if n1 >= n2 {
        BoundaryPoint::from_homogeneous(p1, q1)
    } else {
        BoundaryPoint::from_homogeneous(p2, q2)
    }
}

/// How two geodesics of H² meet.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Intersection {
    /// A single transverse crossing, with the unoriented angle in `[0, π/2]`.
    Transverse { point: H2Point, angle: f64 },
    /// Disjoint or asymptotic.
    None,
    /// The two geodesics coincide.
    Equal,
}

impl Intersection {
    pub fn transverse(&self) -> Option<(H2Point, f64)> {
        match self {
            Intersection::Transverse { point, angle } => Some((*point, *angle)),
            _ => None,
        }
    }

    pub fn is_transverse(&self) -> bool {
        matches!(self, Intersection::Transverse { .. })
    }
}

/// Intersection of two real geodesics in H².
///
/// Existence is decided by interleaving of endpoints on R̂. The crossing point
/// and angle come from the two half-circles (or half-circle and vertical
/// line); for circles with centres at distance `d` and radii `r1, r2` the
/// unoriented angle satisfies `cos θ = |d² − r1² − r2²| / (2 r1 r2)`.
pub fn cross(g1: &Geodesic, g2: &Geodesic) -> Intersection {
    let tol = Tolerances::DEFAULT.boundary;
    if g1.approx_eq(g2, tol) {
        return Intersection::Equal;
    }
    if g1.shares_endpoint(g2, tol) {
        return Intersection::None;
    }
    let (a, b) = (g1.first.real_coord(), g1.second.real_coord());
    let (c, d) = (g2.first.real_coord(), g2.second.real_coord());
    let a = a.expect("canonical order keeps infinity second");
    let c = c.expect("canonical order keeps infinity second");
    match (b, d) {
        (None, None) => Intersection::None,
        (None, Some(d)) => vertical_meets_circle(a, c, d),
        (Some(b), None) => vertical_meets_circle(c, a, b),
        (Some(b), Some(d)) => {
            let interleaved = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if !interleaved {
                return Intersection::None;
            }
            let (c1, r1) = ((a + b) / 2.0, (b - a) / 2.0);
            let (c2, r2) = ((c + d) / 2.0, (d - c) / 2.0);
            // radical line of the two circles
            let x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2.0 * (c2 - c1));
            let y = (r1 * r1 - (x - c1) * (x - c1)).max(0.0).sqrt();
            let dist = c1 - c2;
            let cos = ((dist * dist - r1 * r1 - r2 * r2).abs() / (2.0 * r1 * r2)).min(1.0);
            transverse(x, y, cos)
        }
    }
}

fn vertical_meets_circle(x: f64, lo: f64, hi: f64) -> Intersection {
    if !(lo < x && x < hi) {
        return Intersection::None;
    }
    let (c, r) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
    let y = ((x - lo) * (hi - x)).max(0.0).sqrt();
    let cos = ((x - c).abs() / r).min(1.0);
    transverse(x, y, cos)
}

fn transverse(x: f64, y: f64, cos: f64) -> Intersection {
    match H2Point::from_xy(x, y) {
        Ok(point) => Intersection::Transverse {
            point,
            angle: cos.acos(),
        },
        // tangency at the boundary: numerically asymptotic
        Err(_) => Intersection::None,
    }
}

/// Hyperbolic distance from a point of H² to a real geodesic.
pub fn distance_to_geodesic(p: &H2Point, g: &Geodesic) -> f64 {
    let w = g.oriented().real_standardizer().inverse().apply_h2(*p).z();
    (w.re.abs() / w.im).asinh()
}
