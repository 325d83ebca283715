//! Bending deformations of surface-group representations along complex
//! measured laminations.
//!
//! The crate is split along the geometry it models:
//!
//! * [`hypcore`]: upper half-plane and half-space models, unimodular matrices,
//!   geodesics, segments and solid cylinders.
//! * [`fuchsian`]: presentations, representations and word balls, including the
//!   regular-octagon genus-2 group.
//! * [`laminations`]: finite measured laminations, transverse integrals, test
//!   functions and orbit instantiation.
//! * [`bending`]: the bending cocycle, bent representations, the partition
//!   approximation scheme and the bending vector field.
//!
//! The crate is `no_std` compatible (it needs `alloc`); disable the default
//! `std` feature to build without the standard library.

#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod bending;
mod error;
pub mod fuchsian;
pub mod hypcore;
pub mod laminations;
mod tolerance;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use tolerance::Tolerances;

pub(crate) mod prelude {
    pub(crate) use alloc::vec::Vec;
    pub(crate) use num_complex::Complex64 as C64;
    #[allow(unused_imports)]
    pub(crate) use num_traits::Float;

    pub(crate) use crate::error::{Error, Result};
}
