use super::geodesic::{Geodesic, OrientedGeodesic};
use super::matrix::UnimodularMatrix;
use super::point::BoundaryPoint;
use crate::prelude::*;
use crate::Tolerances;

/// Boundary map sampled on a grid of the real line.
///
/// Between nodes the map is interpolated linearly in the real coordinate.
/// Past the last node on either side it extrapolates with the end slopes when
/// `∞` is sent to `∞`; otherwise points outside the grid are rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryTable {
    nodes: Vec<f64>,
    values: Vec<C64>,
    at_infinity: BoundaryPoint,
}

impl BoundaryTable {
    pub fn new(nodes: Vec<f64>, values: Vec<C64>, at_infinity: BoundaryPoint) -> Result<Self> {
        if nodes.len() < 2 || nodes.len() != values.len() {
            return Err(Error::InvalidParameter("transfer table needs matching nodes and values"));
        }
        if nodes.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidParameter("transfer table nodes must increase"));
        }
        let all_real = values.iter().all(|v| v.im == 0.0);
        if all_real {
            let up = values.windows(2).all(|w| w[0].re < w[1].re);
            let down = values.windows(2).all(|w| w[0].re > w[1].re);
            if !(up || down) {
                return Err(Error::InvalidParameter("real transfer table must be monotone"));
            }
        }
        Ok(BoundaryTable {
            nodes,
            values,
            at_infinity,
        })
    }

    pub fn apply(&self, p: BoundaryPoint) -> Result<BoundaryPoint> {
        let x = match p {
            BoundaryPoint::Infinity => return Ok(self.at_infinity),
            BoundaryPoint::Finite(z) if z.im == 0.0 => z.re,
            BoundaryPoint::Finite(_) => return Err(Error::NotReal),
        };
        let n = self.nodes.len();
        let i = match self.nodes.partition_point(|&t| t <= x) {
            0 | 1 => 0,
            k if k >= n => n - 2,
            k => k - 1,
        };
        let inside = x >= self.nodes[0] && x <= self.nodes[n - 1];
        if !inside && !self.at_infinity.is_infinite() {
            return Err(Error::InvalidParameter("point outside transfer table"));
        }
        let (x0, x1) = (self.nodes[i], self.nodes[i + 1]);
        let t = (x - x0) / (x1 - x0);
        Ok(BoundaryPoint::Finite(self.values[i] + (self.values[i + 1] - self.values[i]) * t))
    }
}

/// The boundary map `φ` used to carry leaves from H² into H³.
#[derive(Clone, Debug, PartialEq, Default)]
pub enum GeodesicTransfer {
    #[default]
    Identity,
    Mobius(UnimodularMatrix),
    Table(BoundaryTable),
}

impl GeodesicTransfer {
    pub fn is_identity(&self) -> bool {
        matches!(self, GeodesicTransfer::Identity)
    }

    pub fn apply_point(&self, p: BoundaryPoint) -> Result<BoundaryPoint> {
        match self {
            GeodesicTransfer::Identity => Ok(p),
            GeodesicTransfer::Mobius(g) => Ok(g.apply(p)),
            GeodesicTransfer::Table(t) => t.apply(p),
        }
    }

    pub fn apply_oriented(&self, g: &OrientedGeodesic) -> Result<OrientedGeodesic> {
        if self.is_identity() {
            return Ok(*g);
        }
        let u = self.apply_point(g.source())?;
        let v = self.apply_point(g.target())?;
        if u.approx_eq(&v, Tolerances::DEFAULT.boundary) {
            return Err(Error::DegenerateImage);
        }
        Ok(OrientedGeodesic::new_unchecked(u, v))
    }

    /// `φ_*(γ)`: the geodesic joining the images of the endpoints.
    pub fn apply(&self, g: &Geodesic) -> Result<Geodesic> {
        Ok(self.apply_oriented(&g.oriented())?.unoriented())
    }
}
