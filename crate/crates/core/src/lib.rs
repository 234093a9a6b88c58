//! Exact computer algebra for colored braid representations built on the
//! two-dimensional modules of quantized gl(1|1).
//!
//! The crate has two computation routes for the same Markov-trace scalar:
//! a full tensor route on the 2^N bitstring basis ([`tensorrep`]) and a
//! polynomial multiplicity-space route through reduced Burau/Gassner
//! matrices ([`schurweyl`]). Cross-validating the two and extracting the
//! multivariable Alexander-Conway polynomial ([`invariant`]) is the point
//! of the library. All arithmetic is exact over `Z[z_i^{+-1}]` ([`ring`]).
//!
//! Everything is a plain immutable value; all operations are pure, so
//! values can be shared or sent across threads freely.

pub mod braid;
pub mod decomp;
pub mod invariant;
pub mod matrix;
pub mod ring;
pub mod schurweyl;
pub mod tensorrep;
pub mod verify;

pub use braid::{Color, ColoredBraid};
pub use ring::{Fraction, LaurentPoly, RingError};
