use core::ops::Mul;

use super::point::{BoundaryPoint, H2Point, H3Point};
use crate::prelude::*;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// An element of SL(2, C), stored as its canonical lift in PSL(2, C).
///
/// The lift is chosen so that the trace has non-negative real part, with a
/// purely imaginary trace broken toward non-negative imaginary part. Products
/// are re-canonicalised, so two matrices representing the same isometry
/// compare entry-wise whenever their traces are away from the imaginary axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnimodularMatrix {
    a: C64,
    b: C64,
    c: C64,
    d: C64,
}

impl UnimodularMatrix {
    pub const IDENTITY: UnimodularMatrix = UnimodularMatrix {
        a: ONE,
        b: ZERO,
        c: ZERO,
        d: ONE,
    };

    /// Builds a matrix, rescaling by `sqrt(det)` so the determinant is one.
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<Self> {
        let det = a * d - b * c;
        let scale = 1f64.max(a.norm().max(b.norm()).max(c.norm().max(d.norm())));
        if !(det.norm() > 1e-14 * scale * scale) || !det.re.is_finite() || !det.im.is_finite() {
            return Err(Error::Singular);
        }
        let s = det.sqrt();
        Ok(Self::from_entries(a / s, b / s, c / s, d / s))
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if det > 0.0 {
            let s = det.sqrt();
            Ok(Self::from_entries(
                C64::new(a / s, 0.0),
                C64::new(b / s, 0.0),
                C64::new(c / s, 0.0),
                C64::new(d / s, 0.0),
            ))
        } else {
            // A negative determinant forces complex entries; the general path handles it.
            Self::new(a.into(), b.into(), c.into(), d.into())
        }
    }

    /// `diag(λ, 1/λ)`.
    pub fn diagonal(lambda: C64) -> Self {
        Self::from_entries(lambda, ZERO, ZERO, lambda.inv())
    }

    /// Entries are trusted to have determinant one; only the lift is fixed.
    pub(crate) fn from_entries(a: C64, b: C64, c: C64, d: C64) -> Self {
        let tr = a + d;
        let flip = tr.re < 0.0 || (tr.re == 0.0 && tr.im < 0.0);
        if flip {
            UnimodularMatrix { a: -a, b: -b, c: -c, d: -d }
        } else {
            UnimodularMatrix { a, b, c, d }
        }
    }

    pub fn a(&self) -> C64 {
        self.a
    }
    pub fn b(&self) -> C64 {
        self.b
    }
    pub fn c(&self) -> C64 {
        self.c
    }
    pub fn d(&self) -> C64 {
        self.d
    }

    pub fn entries(&self) -> [C64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn trace(&self) -> C64 {
        self.a + self.d
    }

    pub fn det(&self) -> C64 {
        self.a * self.d - self.b * self.c
    }

    pub fn inverse(&self) -> Self {
        Self::from_entries(self.d, -self.b, -self.c, self.a)
    }

    /// Entry-wise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_entries(self.a.conj(), self.b.conj(), self.c.conj(), self.d.conj())
    }

    /// `max{|a|+|b|, |c|+|d|}`: the operator norm for the max-norm on C².
    pub fn norm(&self) -> f64 {
        (self.a.norm() + self.b.norm()).max(self.c.norm() + self.d.norm())
    }

    /// Norm of the entry-wise difference of the canonical lifts.
    pub fn difference_norm(&self, other: &Self) -> f64 {
        raw_norm([self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d])
    }

    /// Distance in PSL(2, C): the smaller of `‖A − B‖` and `‖A + B‖`.
    pub fn projective_distance(&self, other: &Self) -> f64 {
        let plus = raw_norm([self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d]);
        self.difference_norm(other).min(plus)
    }

    /// `‖A − I‖` up to sign.
    pub fn distance_to_identity(&self) -> f64 {
        self.projective_distance(&Self::IDENTITY)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.entries().iter().all(|z| z.im.abs() <= tol)
    }

    /// Drops imaginary parts; used once a matrix is known to be real up to rounding.
    pub fn real_part(&self) -> Self {
        let r = |z: C64| C64::new(z.re, 0.0);
        Self::from_entries(r(self.a), r(self.b), r(self.c), r(self.d))
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        *g * *self * g.inverse()
    }

    /// Möbius action on the Riemann sphere.
    pub fn apply(&self, p: BoundaryPoint) -> BoundaryPoint {
        match p {
            BoundaryPoint::Infinity => BoundaryPoint::from_homogeneous(self.a, self.c),
            BoundaryPoint::Finite(z) => {
                BoundaryPoint::from_homogeneous(self.a * z + self.b, self.c * z + self.d)
            }
        }
    }

    /// Möbius action on H²; meaningful for real matrices.
    pub fn apply_h2(&self, p: H2Point) -> H2Point {
        let z = p.z();
        let w = (self.a * z + self.b) / (self.c * z + self.d);
        H2Point::new_unchecked(w)
    }

    /// Poincaré extension of the Möbius action to H³.
    pub fn apply_h3(&self, q: H3Point) -> H3Point {
        let zeta = q.horizontal();
        let h = q.height();
        let num = self.a * zeta + self.b;
        let den = self.c * zeta + self.d;
        let denom = den.norm_sqr() + self.c.norm_sqr() * h * h;
        let horizontal = (num * den.conj() + self.a * self.c.conj() * h * h) / denom;
        H3Point::new_unchecked(horizontal, h / denom)
    }
}

fn raw_norm(e: [C64; 4]) -> f64 {
    (e[0].norm() + e[1].norm()).max(e[2].norm() + e[3].norm())
}

impl Mul for UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, o: UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix::from_entries(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl<'a> Mul<&'a UnimodularMatrix> for &'a UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, o: &UnimodularMatrix) -> UnimodularMatrix {
        *self * *o
    }
}

impl Default for UnimodularMatrix {
    fn default() -> Self {
        Self::IDENTITY
    }
}
