//! Boundary slopes of Montesinos knots by exhaustive enumeration of
//! Hatcher–Oertel candidate surfaces, in exact rational arithmetic.
//!
//! The pipeline runs bottom-up through the modules: [`arith`] supplies
//! fractions and Farey queries, [`diagram`] the plane diagram, [`edgepath`]
//! basic edgepaths, [`candidates`] the type I/II/III systems, [`invariants`]
//! twist, Euler characteristic and slope, and [`harness`] checks the slope
//! bounds over single knots and sweeps.

pub mod arith;
pub mod candidates;
pub mod diagram;
pub mod edgepath;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod seifert;
pub mod sweep;

pub use arith::{Fraction, TangleList};
pub use error::{Error, Result};
