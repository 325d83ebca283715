//! Models of the hyperbolic plane and space.
//!
//! H² is the upper half-plane `{z : Im z > 0}`; H³ is the upper half-space
//! `{(ζ, h) : h > 0}` with H² sitting inside it as the vertical half-plane
//! over the real axis. Isometries are unimodular 2×2 complex matrices acting
//! by Möbius transformations on the boundary and by the Poincaré extension in
//! the interior.

mod cylinder;
mod geodesic;
mod matrix;
mod point;
mod segment;
mod transfer;

pub use cylinder::{BoundaryDisc, DiscKind, SolidCylinder};
pub use geodesic::{
    axis_isometry, complex_displacement, cross, distance_to_geodesic, Geodesic, Intersection,
    OrientedGeodesic,
};
pub use matrix::UnimodularMatrix;
pub use point::{hyp_distance, BoundaryPoint, H2Point, H3Point, HyperbolicPoint};
pub use segment::{segment_crossing, EndpointFlag, GeodesicSegment, SegmentCrossing, Side};
pub use transfer::{BoundaryTable, GeodesicTransfer};
