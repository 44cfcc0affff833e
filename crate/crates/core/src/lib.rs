//! Euclid's algorithm and the number theory around it.
//!
//! The crate covers the subtractive, remainder and extended (Bezout) forms
//! of the algorithm with full step traces, the reconstruction of the
//! division algorithm from a Bezout identity, Euclid's propositions on
//! primes and perfect numbers, continued fractions and the subtractive
//! dynamical map, exact Dedekind sums, and W sequences with Grimm
//! assignments. The [`cli`] module exposes all of it as a command-line
//! tool with a line-oriented report format.

pub mod cf_dynamics;
pub mod cli;
pub mod dedekind;
mod error;
pub mod euclid;
pub mod integers;
mod limits;
pub mod propositions;
pub mod sequences;

pub use error::{Error, Result};
pub use integers::{ExactRational, Integer, Natural};
pub use limits::Limits;
