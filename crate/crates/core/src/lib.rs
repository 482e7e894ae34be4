//! Drinfeld centre of Rep(G) for a finite group G, with the convolution and
//! symmetric tensor products, their compatibility morphisms and a coherence
//! checker. Morphisms are dense complex matrices.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bilax;
pub mod centre;
pub mod error;
pub mod group;
pub mod irrep;
pub mod linalg;
pub mod rep;
pub mod rng;

pub use error::{Error, Result};
