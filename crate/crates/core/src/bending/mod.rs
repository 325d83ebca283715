//! Bending cocycles and bent representations, the partition approximation of
//! a cocycle by few axes, and derivatives in the bending parameter.

mod approx;
mod cocycle;
mod context;
mod field;
mod sweep;

pub use approx::{
    approx_bundle, approx_bundle_with, chi_radius, epsilon_between, HatFunctions, ApproxBundle,
    PartitionOptions,
};
pub use cocycle::{bend, bending_cocycle, oriented_crossing_leaves, BendSource};
pub use context::BendingContext;
pub use sweep::{approx_sweep, SweepResult};
pub use field::{
    bending_vector_field, central_difference, conjugated_distance, holomorphy_residual,
    rep_class_distance, trace_derivative, DifferenceOptions,
};
