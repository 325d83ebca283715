use core::cmp::Ordering;

use crate::hypcore::{cross, distance_to_geodesic, Geodesic, H2Point, Intersection};
use crate::prelude::*;
use crate::Tolerances;

/// A geodesic of H² carrying a complex transverse mass.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Leaf {
    pub geodesic: Geodesic,
    pub weight: C64,
}

impl Leaf {
    pub fn new(geodesic: Geodesic, weight: C64) -> Self {
        Leaf { geodesic, weight }
    }
}

/// Closed hyperbolic disc `K` restricting the lamination.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub center: H2Point,
    pub radius: f64,
}

impl Window {
    pub fn new(center: H2Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidParameter("window radius must be positive"));
        }
        Ok(Window { center, radius })
    }

    pub fn meets(&self, g: &Geodesic) -> bool {
        distance_to_geodesic(&self.center, g) <= self.radius
    }

    pub fn contains(&self, p: &H2Point) -> bool {
        use crate::hypcore::HyperbolicPoint;
        self.center.distance(p) <= self.radius
    }
}

/// Finitely many pairwise disjoint weighted leaves.
///
/// Construction merges coincident geodesics by adding weights, drops leaves
/// whose weight vanishes and sorts leaves by their endpoints.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FiniteLamination {
    leaves: Vec<Leaf>,
    window: Option<Window>,
}

impl FiniteLamination {
    pub fn empty() -> Self {
        FiniteLamination::default()
    }

    pub fn new(leaves: Vec<Leaf>, window: Option<Window>) -> Result<Self> {
        let leaves = merge(leaves);
        for (i, a) in leaves.iter().enumerate() {
            if let Some(w) = &window {
                if !w.meets(&a.geodesic) {
                    return Err(Error::LeafOutsideWindow { leaf: i });
                }
            }
        }
        check_disjoint(&leaves)?;
        Ok(FiniteLamination { leaves, window })
    }

    /// Skips the pairwise disjointness check; callers guarantee it.
    pub(crate) fn from_disjoint(leaves: Vec<Leaf>, window: Option<Window>) -> Self {
        FiniteLamination {
            leaves: merge(leaves),
            window,
        }
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }

    pub fn window(&self) -> Option<&Window> {
        self.window.as_ref()
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    /// Every weight multiplied by `c`.
    pub fn scaled(&self, c: C64) -> Self {
        FiniteLamination::from_disjoint(
            self.leaves.iter().map(|l| Leaf::new(l.geodesic, l.weight * c)).collect(),
            self.window,
        )
    }

    /// Measure sum `self + other`; fails if the supports cross.
    pub fn sum(&self, other: &FiniteLamination) -> Result<Self> {
        let mut leaves = self.leaves.clone();
        leaves.extend_from_slice(&other.leaves);
        FiniteLamination::new(leaves, self.window.or(other.window))
    }

    /// Measure difference `self − other`; fails if the supports cross.
    pub fn difference(&self, other: &FiniteLamination) -> Result<Self> {
        self.sum(&other.scaled(C64::new(-1.0, 0.0)))
    }
}

fn merge(mut leaves: Vec<Leaf>) -> Vec<Leaf> {
    let tol = Tolerances::DEFAULT.boundary;
    leaves.sort_by(|a, b| geodesic_cmp(&a.geodesic, &b.geodesic));
    let mut out: Vec<Leaf> = Vec::with_capacity(leaves.len());
    for l in leaves {
        // coincident geodesics are adjacent after sorting, up to rounding
        match out.iter_mut().rev().take(4).find(|o| o.geodesic.approx_eq(&l.geodesic, tol)) {
            Some(o) => o.weight += l.weight,
            None => out.push(l),
        }
    }
    out.retain(|l| l.weight != C64::new(0.0, 0.0));
    out
}

pub(crate) fn geodesic_cmp(a: &Geodesic, b: &Geodesic) -> Ordering {
    a.first()
        .canonical_cmp(&b.first())
        .then_with(|| a.second().canonical_cmp(&b.second()))
}

fn check_disjoint(leaves: &[Leaf]) -> Result<()> {
    for i in 0..leaves.len() {
        for j in i + 1..leaves.len() {
            if let Intersection::Transverse { .. } = cross(&leaves[i].geodesic, &leaves[j].geodesic) {
                return Err(Error::CrossingLeaves { first: i, second: j });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(u: f64, v: f64, w: f64) -> Leaf {
        Leaf::new(Geodesic::new(u, v).unwrap(), C64::new(w, 0.0))
    }

    #[test]
    fn merging_and_zero_weights() {
        let lam = FiniteLamination::new(
            alloc::vec![leaf(-1.0, 1.0, 1.0), leaf(1.0, -1.0, 2.0), leaf(2.0, 3.0, 0.0)],
            None,
        )
        .unwrap();
        assert_eq!(lam.len(), 1);
        assert_eq!(lam.leaves()[0].weight, C64::new(3.0, 0.0));
    }

    #[test]
    fn crossing_leaves_are_rejected() {
        let err = FiniteLamination::new(alloc::vec![leaf(-1.0, 1.0, 1.0), leaf(0.0, 2.0, 1.0)], None);
        assert!(matches!(err, Err(Error::CrossingLeaves { .. })));
    }

    #[test]
    fn window_membership() {
        let w = Window::new(H2Point::I, 0.5).unwrap();
        assert!(FiniteLamination::new(alloc::vec![leaf(-1.0, 1.0, 1.0)], Some(w)).is_ok());
        assert_eq!(
            FiniteLamination::new(alloc::vec![leaf(5.0, 6.0, 1.0)], Some(w)),
            Err(Error::LeafOutsideWindow { leaf: 0 })
        );
    }

    #[test]
    fn cancelling_sum_is_empty() {
        let a = FiniteLamination::new(alloc::vec![leaf(-1.0, 1.0, 1.0)], None).unwrap();
        assert!(a.difference(&a).unwrap().is_empty());
    }
}
