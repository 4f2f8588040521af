//! Synthesis of symmetric α-stable moving averages and multistable paths,
//! with α-norm error bounds and localisability diagnostics.

pub mod acceptance;
pub mod analysis;
pub mod bounds;
pub mod error;
pub mod kernels;
pub mod multistable;
mod quad;
pub mod rng;
pub mod series;
pub mod synthesis;

pub use error::{Error, Result};
