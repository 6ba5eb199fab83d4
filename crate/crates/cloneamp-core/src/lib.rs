//! Numerical core for optimal cloning and amplification of displaced
//! thermal oscillator states.
//!
//! The crate is split along the two natural representations of the
//! problem:
//!
//! * photon-number space — truncated diagonal distributions
//!   ([`fock`]), the covariant amplifier channel and its exact
//!   two-mode-squeezer oracle ([`amplifier`]), and the figures of merit
//!   with an LP-based optimality check ([`merit`]);
//! * phase space — mean vectors and covariance matrices under
//!   symplectic maps, including the full n-to-m cloning pipeline
//!   ([`gaussian`]).
//!
//! Everything is `no_std` + `alloc`; IO, file formats and the CLI live
//! in the companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod amplifier;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod merit;
pub mod simplex;

mod math;
mod squeezer;

pub use error::Error;
