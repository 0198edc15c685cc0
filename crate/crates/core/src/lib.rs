//! Densities, tail probabilities, asymptotic expansions and moments of the
//! areas under Brownian excursion, bridge, motion, meander, double meander
//! and the positive parts of bridge and motion.

pub mod airy;
pub mod dd;
pub mod error;
pub mod exact;
pub mod expansion;
pub mod inversion;
pub mod kernels;
pub mod moments;
pub mod quadrature;
pub mod reference;
pub mod scalar;
pub mod zeros;

pub use error::{Error, Result};
