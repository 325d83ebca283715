use crate::fuchsian::{for_each_in_ball, Representation};
use crate::hypcore::{
    complex_displacement, cross, distance_to_geodesic, GeodesicSegment, H2Point, HyperbolicPoint,
    Intersection,
};
use crate::laminations::{orbit_instantiate, FiniteLamination, OrbitSpec, OrbitTarget, Window};
use crate::prelude::*;
use crate::Tolerances;

/// Word length up to which the basepoint is checked against axes.
const AXIS_CHECK_CAP: usize = 3;

/// Everything fixed by the choice of Fuchsian surface group, target
/// representation and basepoint `x`.
///
/// The Fuchsian group acts on H² and supplies the segments `[x, g_j(x)]`;
/// the target representation supplies the matrices that get bent, and its
/// transfer carries leaves to H³.
#[derive(Clone, Debug)]
pub struct BendingContext {
    surface: Representation,
    target: Representation,
    x: H2Point,
    segments: Vec<GeodesicSegment>,
    backward: Vec<GeodesicSegment>,
    theta: f64,
    d_max: f64,
    d_min: f64,
    tol: Tolerances,
}

impl BendingContext {
    /// Context bending the Fuchsian group itself.
    pub fn fuchsian(surface: Representation, x: H2Point) -> Result<Self> {
        let target = surface.clone();
        Self::new(surface, target, x)
    }

    pub fn new(surface: Representation, target: Representation, x: H2Point) -> Result<Self> {
        if !surface.is_real(1e-10) {
            return Err(Error::NotReal);
        }
        if surface.presentation() != target.presentation() {
            return Err(Error::MismatchedContexts);
        }
        check_off_axes(&surface, &x, AXIS_CHECK_CAP)?;
        let mut segments = Vec::new();
        let mut backward = Vec::new();
        let mut theta = f64::INFINITY;
        for g in surface.images() {
            let fwd = GeodesicSegment::new(x, g.apply_h2(x))?;
            let back = GeodesicSegment::new(g.inverse().apply_h2(x), x)?;
            let angle = match cross(&back.carrier(), &fwd.carrier()) {
                Intersection::Transverse { angle, .. } => angle,
                _ => 0.0,
            };
            theta = theta.min(angle);
            segments.push(fwd);
            backward.push(back);
        }
        if !(theta > 0.0) {
            return Err(Error::InvalidContext("basepoint lies on a generator axis"));
        }
        let lengths = segments.iter().map(|s| s.length());
        let d_max = lengths.clone().fold(0.0, f64::max);
        let d_min = lengths.fold(f64::INFINITY, f64::min);
        Ok(BendingContext {
            surface,
            target,
            x,
            segments,
            backward,
            theta,
            d_max,
            d_min,
            tol: Tolerances::DEFAULT,
        })
    }

    pub fn with_tolerances(mut self, tol: Tolerances) -> Self {
        self.tol = tol;
        self
    }

    pub fn surface(&self) -> &Representation {
        &self.surface
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn basepoint(&self) -> H2Point {
        self.x
    }

    pub fn rank(&self) -> usize {
        self.segments.len()
    }

    /// `[x, g_j(x)]`.
    pub fn segment(&self, j: usize) -> &GeodesicSegment {
        &self.segments[j]
    }

    /// `[g_j⁻¹(x), x]`.
    pub fn backward_segment(&self, j: usize) -> &GeodesicSegment {
        &self.backward[j]
    }

    pub fn segments(&self) -> &[GeodesicSegment] {
        &self.segments
    }

    /// Smallest angle between the carriers of `[g_j⁻¹(x), x]` and `[x, g_j(x)]`.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Largest `d(x, g_j(x))`.
    pub fn d_max(&self) -> f64 {
        self.d_max
    }

    /// Smallest `d(x, g_j(x))`.
    pub fn d_min(&self) -> f64 {
        self.d_min
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    /// Window around `x` used for the cut-off function near the basepoint.
    pub fn local_window(&self) -> Window {
        Window {
            center: self.x,
            radius: self.d_min / 2.0,
        }
    }

    /// Orbit leaves meeting any of the segments `[x, g_j(x)]`, `[g_j⁻¹(x), x]`
    /// or the local window around `x`.
    pub fn instantiate(&self, spec: &OrbitSpec) -> Result<FiniteLamination> {
        let mut targets: Vec<OrbitTarget> = Vec::new();
        let mut segs = self.segments.clone();
        segs.extend_from_slice(&self.backward);
        targets.push(OrbitTarget::Segments(segs));
        targets.push(OrbitTarget::Window(self.local_window()));
        orbit_instantiate(spec, &OrbitTarget::Union(targets))
    }

    /// Distance from the basepoint to `g_j(x)`.
    pub fn displacement(&self, j: usize) -> f64 {
        self.x.distance(&self.segments[j].end())
    }
}

fn check_off_axes(rho: &Representation, x: &H2Point, cap: usize) -> Result<()> {
    let mut on_axis = false;
    for_each_in_ball(rho, cap, cap, |letters, m| {
        if on_axis {
            return false;
        }
        if !letters.is_empty() {
            if let Ok((axis, _)) = complex_displacement(m) {
                if distance_to_geodesic(x, &axis.unoriented()) < 1e-9 {
                    on_axis = true;
                    return false;
                }
            }
        }
        true
    })?;
    if on_axis {
        Err(Error::InvalidContext("basepoint lies on the axis of a group element"))
    } else {
        Ok(())
    }
}
