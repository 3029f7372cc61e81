//! Geometry of quantum states around the maximally mixed state.
//!
//! The crate builds the state families that sit on or just outside the
//! largest separable ball, measures Hilbert–Schmidt distances, and certifies
//! separability, PPT-ness and distillability with explicit or searched
//! Schmidt-rank-two witnesses.

#![forbid(unsafe_code)]

pub mod distillability;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod random;
pub mod states;
pub mod tensor;
pub mod tolerance;

pub use error::{Error, Result};
