//! Finite complex measured laminations: leaves with complex weights,
//! transverse integrals along segments, test functions and group orbits.

mod finite;
mod integral;
mod orbit;

pub use finite::{FiniteLamination, Leaf, Window};
pub(crate) use integral::crossings_with;
pub use integral::{
    crossings, integral_prime, lamination_norm, min_crossing_angle, weak_eval, Crossing, Profile,
    SegmentProfile, TestFunction,
};
pub use orbit::{
    g_prime_member, ml_pp_valid, orbits_disjoint, orbit_instantiate, orbit_instantiate_with_words, OrbitLeaf,
    OrbitSpec, OrbitTarget,
};
