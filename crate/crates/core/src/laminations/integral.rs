use super::finite::FiniteLamination;
use crate::hypcore::{EndpointFlag, GeodesicSegment, SegmentCrossing};
use crate::prelude::*;
use crate::Tolerances;

/// A leaf of a lamination crossing a segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Crossing {
    pub leaf: usize,
    pub crossing: SegmentCrossing,
}

impl Crossing {
    /// `½` at an endpoint of the segment, `1` in its interior.
    pub fn endpoint_factor(&self) -> f64 {
        match self.crossing.flag {
            EndpointFlag::None => 1.0,
            _ => 0.5,
        }
    }
}

/// Leaves crossing the closed segment, ordered from start to end.
pub fn crossings(lam: &FiniteLamination, seg: &GeodesicSegment) -> Result<Vec<Crossing>> {
    crossings_with(lam, seg, &Tolerances::DEFAULT)
}

pub(crate) fn crossings_with(
    lam: &FiniteLamination,
    seg: &GeodesicSegment,
    tol: &Tolerances,
) -> Result<Vec<Crossing>> {
    let mut out = Vec::new();
    for (i, leaf) in lam.leaves().iter().enumerate() {
        if let Some(c) = seg.crossing(&leaf.geodesic, tol)? {
            out.push(Crossing { leaf: i, crossing: c });
        }
    }
    out.sort_by(|a, b| a.crossing.distance.total_cmp(&b.crossing.distance));
    Ok(out)
}

/// Piecewise-linear function through `(x_k, y_k)`, constant outside the knots.
#[derive(Clone, Debug, PartialEq)]
pub struct Profile {
    knots: Vec<(f64, f64)>,
}

impl Profile {
    pub fn new(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::InvalidParameter("profile needs at least one knot"));
        }
        if knots.windows(2).any(|w| !(w[0].0 < w[1].0)) {
            return Err(Error::InvalidParameter("profile knots must increase"));
        }
        if knots.iter().any(|k| !k.1.is_finite() || !k.0.is_finite()) {
            return Err(Error::InvalidParameter("profile values must be finite"));
        }
        Ok(Profile { knots })
    }

    pub fn constant(c: f64) -> Self {
        Profile {
            knots: alloc::vec![(0.0, c)],
        }
    }

    /// Tent rising from 0 at `a` to 1 at `b` and back to 0 at `c`.
    pub fn tent(a: f64, b: f64, c: f64) -> Result<Self> {
        Profile::new(alloc::vec![(a, 0.0), (b, 1.0), (c, 0.0)])
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn eval(&self, x: f64) -> f64 {
        let k = &self.knots;
        if x <= k[0].0 {
            return k[0].1;
        }
        if x >= k[k.len() - 1].0 {
            return k[k.len() - 1].1;
        }
        let i = k.partition_point(|p| p.0 <= x) - 1;
        let (x0, y0) = k[i];
        let (x1, y1) = k[i + 1];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }
}

/// A function of the crossing parameter `s` along a segment, optionally
/// multiplied by a function of the crossing angle.
#[derive(Clone, Debug, PartialEq)]
pub struct SegmentProfile {
    pub along: Profile,
    pub angle: Option<Profile>,
}

impl SegmentProfile {
    pub fn new(along: Profile) -> Self {
        SegmentProfile { along, angle: None }
    }

    pub fn with_angle(mut self, angle: Profile) -> Self {
        self.angle = Some(angle);
        self
    }

    pub fn eval(&self, c: &SegmentCrossing) -> f64 {
        let a = self.along.eval(c.s);
        match &self.angle {
            Some(p) => a * p.eval(c.angle),
            None => a,
        }
    }
}

/// Test function on the space of geodesics.
#[derive(Clone, Debug, PartialEq)]
pub enum TestFunction {
    /// The same value on every geodesic.
    Constant(f64),
    /// Supported on geodesics crossing `segment`, zero elsewhere.
    OnSegment {
        segment: GeodesicSegment,
        profile: SegmentProfile,
    },
}

/// `∫′_seg f μ`: weighted sum over crossings, with half weight at the
/// endpoints of the segment. `f` defaults to `1`.
pub fn integral_prime(
    lam: &FiniteLamination,
    seg: &GeodesicSegment,
    f: Option<&SegmentProfile>,
) -> Result<C64> {
    let mut total = C64::new(0.0, 0.0);
    for c in crossings(lam, seg)? {
        let value = f.map_or(1.0, |p| p.eval(&c.crossing));
        total += lam.leaves()[c.leaf].weight * (value * c.endpoint_factor());
    }
    Ok(total)
}

/// Total variation `Σ|w|`.
pub fn lamination_norm(lam: &FiniteLamination) -> f64 {
    lam.leaves().iter().map(|l| l.weight.norm()).sum()
}

/// `∫ f μ` for a test function.
pub fn weak_eval(lam: &FiniteLamination, f: &TestFunction) -> Result<C64> {
    match f {
        TestFunction::Constant(c) => Ok(lam.leaves().iter().fold(C64::new(0.0, 0.0), |acc, l| acc + l.weight * *c)),
        TestFunction::OnSegment { segment, profile } => integral_prime(lam, segment, Some(profile)),
    }
}

/// Smallest crossing angle of a leaf with the segment.
pub fn min_crossing_angle(lam: &FiniteLamination, seg: &GeodesicSegment) -> Result<Option<f64>> {
    Ok(crossings(lam, seg)?
        .iter()
        .map(|c| c.crossing.angle)
        .reduce(f64::min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypcore::{Geodesic, H2Point};
    use crate::laminations::Leaf;
    use core::f64::consts::FRAC_PI_2;

    fn leaf(u: f64, v: f64, w: C64) -> Leaf {
        Leaf::new(Geodesic::new(u, v).unwrap(), w)
    }

    fn vertical(lo: f64, hi: f64) -> GeodesicSegment {
        GeodesicSegment::new(H2Point::from_xy(0.0, lo).unwrap(), H2Point::from_xy(0.0, hi).unwrap())
            .unwrap()
    }

    #[test]
    fn ordered_crossings() {
        let one = C64::new(1.0, 0.0);
        let lam = FiniteLamination::new(
            alloc::vec![leaf(-3.0, 3.0, one), leaf(-1.0, 1.0, one), leaf(-2.0, 2.0, one)],
            None,
        )
        .unwrap();
        let cs = crossings(&lam, &vertical(0.25, 4.0)).unwrap();
        let radii: Vec<f64> = cs
            .iter()
            .map(|c| lam.leaves()[c.leaf].geodesic.second().finite().unwrap().re)
            .collect();
        assert_eq!(radii, [1.0, 2.0, 3.0]);
        let cs = crossings(&lam, &vertical(0.5, 2.0)).unwrap();
        assert!((cs[0].crossing.s - 0.5).abs() < 1e-14);
    }

    #[test]
    fn half_weight_at_endpoints() {
        let z = C64::new(0.3, 0.7);
        let lam = FiniteLamination::new(alloc::vec![leaf(-1.0, 1.0, z)], None).unwrap();
        assert_eq!(integral_prime(&lam, &vertical(1.0, 2.0), None).unwrap(), z / 2.0);
        assert_eq!(integral_prime(&lam, &vertical(2.0, 3.0), None).unwrap(), C64::new(0.0, 0.0));
        let lam = FiniteLamination::new(
            alloc::vec![leaf(-1.0, 1.0, z), leaf(-2.0, 2.0, C64::new(1.0, 0.0))],
            None,
        )
        .unwrap();
        assert_eq!(integral_prime(&lam, &vertical(0.5, 3.0), None).unwrap(), z + 1.0);
    }

    #[test]
    fn norms() {
        let lam = FiniteLamination::new(
            alloc::vec![leaf(-1.0, 1.0, C64::new(1.0, 0.0)), leaf(2.0, 3.0, C64::new(-1.0, 0.0))],
            None,
        )
        .unwrap();
        assert_eq!(lamination_norm(&lam), 2.0);
        assert_eq!(lamination_norm(&FiniteLamination::empty()), 0.0);
        let lam = FiniteLamination::new(alloc::vec![leaf(-1.0, 1.0, C64::new(3.0, 4.0))], None).unwrap();
        assert_eq!(lamination_norm(&lam), 5.0);
    }

    #[test]
    fn min_angle() {
        let lam = FiniteLamination::new(alloc::vec![leaf(-1.0, 1.0, C64::new(1.0, 0.0))], None).unwrap();
        assert!((min_crossing_angle(&lam, &vertical(0.5, 2.0)).unwrap().unwrap() - FRAC_PI_2).abs() < 1e-14);
        assert_eq!(min_crossing_angle(&lam, &vertical(2.0, 3.0)).unwrap(), None);
    }

    #[test]
    fn profiles() {
        let p = Profile::tent(0.0, 0.5, 1.0).unwrap();
        assert_eq!(p.eval(0.25), 0.5);
        assert_eq!(p.eval(-1.0), 0.0);
        assert_eq!(p.eval(0.5), 1.0);
        assert_eq!(Profile::constant(0.3).eval(7.0), 0.3);
        assert!(Profile::new(alloc::vec![(1.0, 0.0), (0.0, 1.0)]).is_err());
    }

    #[test]
    fn point_mass_evaluation() {
        let w = C64::new(2.0, -1.0);
        let lam = FiniteLamination::new(alloc::vec![leaf(-1.0, 1.0, w)], None).unwrap();
        let f = TestFunction::OnSegment {
            segment: vertical(0.5, 4.0),
            profile: SegmentProfile::new(Profile::tent(0.0, 0.8, 1.0).unwrap()),
        };
        let s0 = 2f64.ln() / 8f64.ln();
        assert!((weak_eval(&lam, &f).unwrap() - w * (s0 / 0.8)).norm() < 1e-14);
    }
}
