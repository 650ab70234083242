//! Exact computer algebra for the 1+1 dimensional TQFT that governs the
//! local Gromov-Witten invariants of curves.
//!
//! The crate is organized bottom-up:
//!
//! * [`series`] — truncated power series over Q with exact rationals.
//! * [`partitions`] — integer partitions, centralizer orders, hook-length
//!   dimensions.
//! * [`symchar`] — characters of symmetric groups and class-algebra
//!   structure constants.
//! * [`frobenius`] — commutative Frobenius algebras over the series ring,
//!   central idempotents and their t-adic lifting.
//! * [`tqft`] — relative invariants, gluing laws and a brute-force Hurwitz
//!   oracle.
//! * [`closedforms`] — the sine closed formulas (caps, genus-0 free
//!   energy, the degree-1 and degree-2 theories).
//! * [`transforms`] — the exp/log transform between connected and
//!   disconnected generating functions.
//! * [`verify`] — machine-checkable identity suites tying all of the
//!   above together.

pub mod closedforms;
pub mod error;
pub mod frobenius;
pub mod partitions;
mod perm;
pub mod series;
pub mod symchar;
pub mod tqft;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use num_rational::BigRational;
pub use series::{rat, rat_int, TruncatedSeries};
