use super::geodesic::{Geodesic, OrientedGeodesic};
use super::matrix::UnimodularMatrix;
use super::point::{BoundaryPoint, H2Point, HyperbolicPoint};
use crate::prelude::*;
use crate::Tolerances;

/// Compact geodesic segment `[start, end]` in H².
///
/// Stores a real frame `T` with `T(start) = i`, `T(end) = i·e^L`, so the
/// carrier is sent to the imaginary axis traversed upward.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicSegment {
    start: H2Point,
    end: H2Point,
    length: f64,
    frame: UnimodularMatrix,
}

/// Whether a crossing sits at an endpoint of the segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EndpointFlag {
    None,
    Start,
    End,
}

/// Side of an oriented segment, looking along its direction of travel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A transverse crossing of a geodesic with a segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SegmentCrossing {
    /// Normalized arc-length parameter in `[0, 1]`.
    pub s: f64,
    /// Hyperbolic distance from the start to the crossing (may overshoot
    /// `[0, L]` by the endpoint tolerance).
    pub distance: f64,
    pub point: H2Point,
    /// Unoriented angle in `[0, π/2]`.
    pub angle: f64,
    pub flag: EndpointFlag,
    /// Side of the segment on which the first canonical endpoint of the
    /// crossing geodesic lies.
    pub side: Side,
}

impl SegmentCrossing {
    /// Orientation of the crossing geodesic whose target lies on `side`.
    pub fn orient_toward(&self, leaf: &Geodesic, side: Side) -> OrientedGeodesic {
        let (p, q) = leaf.endpoints();
        if self.side == side {
            OrientedGeodesic::new_unchecked(q, p)
        } else {
            OrientedGeodesic::new_unchecked(p, q)
        }
    }
}

impl GeodesicSegment {
    pub fn new(start: H2Point, end: H2Point) -> Result<Self> {
        // move start to i by a real affine map
        let (x1, y1) = (start.re(), start.im());
        let k = y1.sqrt();
        let affine =
            UnimodularMatrix::from_entries((1.0 / k).into(), (-x1 / k).into(), 0.0.into(), k.into());
        let w = affine.apply_h2(end).z();
        let cayley = (w - C64::i()) / (w + C64::i());
        if cayley.norm() < 1e-14 {
            return Err(Error::DegenerateGeodesic);
        }
        // the rotation about i by 2θ sends the initial direction to vertical
        let theta = -cayley.arg() / 2.0;
        let (c, s) = (theta.cos(), theta.sin());
        let rot = UnimodularMatrix::from_entries(c.into(), s.into(), (-s).into(), c.into());
        let frame = rot * affine;
        let length = start.distance(&end);
        Ok(GeodesicSegment {
            start,
            end,
            length,
            frame,
        })
    }

    pub fn start(&self) -> H2Point {
        self.start
    }

    pub fn end(&self) -> H2Point {
        self.end
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Real isometry sending the segment to `[i, i·e^L]`.
    pub fn frame(&self) -> UnimodularMatrix {
        self.frame
    }

    /// Carrier oriented from behind `start` toward `end`.
    pub fn oriented_carrier(&self) -> OrientedGeodesic {
        let inv = self.frame.inverse();
        OrientedGeodesic::new_unchecked(
            inv.apply(BoundaryPoint::real(0.0)),
            inv.apply(BoundaryPoint::Infinity),
        )
    }

    pub fn carrier(&self) -> Geodesic {
        self.oriented_carrier().unoriented()
    }

    /// Point at normalized arc-length parameter `s`.
    pub fn point_at(&self, s: f64) -> H2Point {
        let top = H2Point::new_unchecked(C64::new(0.0, (s * self.length).exp()));
        self.frame.inverse().apply_h2(top)
    }

    /// Subsegment between parameters `s0 < s1`.
    pub fn subsegment(&self, s0: f64, s1: f64) -> Result<GeodesicSegment> {
        GeodesicSegment::new(self.point_at(s0), self.point_at(s1))
    }

    pub fn image(&self, g: &UnimodularMatrix) -> Result<GeodesicSegment> {
        GeodesicSegment::new(g.apply_h2(self.start), g.apply_h2(self.end))
    }

    pub fn crossing(&self, delta: &Geodesic, tol: &Tolerances) -> Result<Option<SegmentCrossing>> {
        if delta.approx_eq(&self.carrier(), tol.boundary) {
            return Err(Error::DegenerateLeaf);
        }
        let (p, q) = delta.endpoints();
        let (Some(alpha), Some(beta)) = (
            self.frame.apply(p).real_coord(),
            self.frame.apply(q).real_coord(),
        ) else {
            // an endpoint went to ∞: it shares the carrier's forward end
            return Ok(None);
        };
        let scale = 1.0 + alpha.abs().max(beta.abs());
        if alpha.abs() <= tol.boundary * scale || beta.abs() <= tol.boundary * scale {
            return Ok(None);
        }
        let product = alpha * beta;
        if product >= 0.0 {
            return Ok(None);
        }
        let sigma = 0.5 * (-product).ln();
        let len = self.length;
        if sigma < -tol.endpoint || sigma > len + tol.endpoint {
            return Ok(None);
        }
        let flag = if sigma.abs() <= tol.endpoint {
            EndpointFlag::Start
        } else if (sigma - len).abs() <= tol.endpoint {
            EndpointFlag::End
        } else {
            EndpointFlag::None
        };
        let cos = ((alpha + beta).abs() / (beta - alpha).abs()).min(1.0);
        let side = if alpha < 0.0 { Side::Left } else { Side::Right };
        let point = match flag {
            EndpointFlag::Start => self.start,
            EndpointFlag::End => self.end,
            EndpointFlag::None => self.point_at(sigma / len),
        };
        Ok(Some(SegmentCrossing {
            s: (sigma / len).clamp(0.0, 1.0),
            distance: sigma,
            point,
            angle: cos.acos(),
            flag,
            side,
        }))
    }
}

/// Crossing of `delta` with `seg` under default tolerances.
pub fn segment_crossing(delta: &Geodesic, seg: &GeodesicSegment) -> Result<Option<SegmentCrossing>> {
    seg.crossing(delta, &Tolerances::DEFAULT)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(x: f64, y: f64) -> H2Point {
        H2Point::from_xy(x, y).unwrap()
    }

    #[test]
    fn frame_normalizes_endpoints() {
        let seg = GeodesicSegment::new(h(0.3, 0.7), h(-1.2, 2.1)).unwrap();
        let a = seg.frame().apply_h2(seg.start()).z();
        let b = seg.frame().apply_h2(seg.end()).z();
        assert!((a - C64::i()).norm() < 1e-13);
        assert!(b.re.abs() < 1e-12);
        assert!((b.im.ln() - seg.length()).abs() < 1e-12);
    }

    #[test]
    fn crossing_examples() {
        let seg = GeodesicSegment::new(h(0.0, 0.5), h(0.0, 2.0)).unwrap();
        let c = segment_crossing(&Geodesic::new(-1.0, 1.0).unwrap(), &seg).unwrap().unwrap();
        assert!((c.s - 0.5).abs() < 1e-14);
        assert_eq!(c.flag, EndpointFlag::None);
        assert!((c.angle - core::f64::consts::FRAC_PI_2).abs() < 1e-14);
        // upward travel: −1 is on the left
        assert_eq!(c.side, Side::Left);

        assert_eq!(segment_crossing(&Geodesic::new(3.0, 5.0).unwrap(), &seg).unwrap(), None);
        assert_eq!(
            segment_crossing(&Geodesic::imaginary_axis(), &seg),
            Err(Error::DegenerateLeaf)
        );
    }

    #[test]
    fn endpoint_crossings_are_flagged() {
        let seg = GeodesicSegment::new(h(0.0, 1.0), h(0.0, 2.0)).unwrap();
        let c = segment_crossing(&Geodesic::new(-1.0, 1.0).unwrap(), &seg).unwrap().unwrap();
        assert_eq!(c.flag, EndpointFlag::Start);
        assert_eq!(c.s, 0.0);
        let c = segment_crossing(&Geodesic::new(-2.0, 2.0).unwrap(), &seg).unwrap().unwrap();
        assert_eq!(c.flag, EndpointFlag::End);
        assert_eq!(c.s, 1.0);
        assert!(segment_crossing(&Geodesic::new(-3.0, 3.0).unwrap(), &seg).unwrap().is_none());
    }

    #[test]
    fn orientation_puts_target_on_requested_side() {
        let x = H2Point::new(C64::from_polar(1.0, core::f64::consts::FRAC_PI_4)).unwrap();
        let seg = GeodesicSegment::new(x, H2Point::I).unwrap();
        let leaf = Geodesic::new(1e-3, 1e3).unwrap();
        let c = segment_crossing(&leaf, &seg).unwrap().unwrap();
        // moving counterclockwise along the unit circle, the inside is on the left
        assert_eq!(c.side, Side::Left);
        let o = c.orient_toward(&leaf, Side::Right);
        assert_eq!(o.target(), BoundaryPoint::real(1e3));
    }

    #[test]
    fn point_at_interpolates() {
        let seg = GeodesicSegment::new(h(1.0, 1.0), h(-2.0, 0.5)).unwrap();
        let mid = seg.point_at(0.5);
        assert!((mid.distance(&seg.start()) - seg.length() / 2.0).abs() < 1e-12);
        assert!((mid.distance(&seg.end()) - seg.length() / 2.0).abs() < 1e-12);
        assert!((seg.point_at(1.0).z() - seg.end().z()).norm() < 1e-12);
    }
}
