//! Exact-arithmetic computational algebra: truncated big Witt vectors, the
//! characteristic-polynomial embedding of endomorphism classes, twisted
//! Nil-object operators, finite-group induction theory, and the calculus of
//! covirtually cyclic groups and their finite quotients.
//!
//! Everything here is exact: integers are arbitrary precision, localized
//! integers are reduced fractions, and there is no floating point anywhere.

pub mod covc;
pub mod endk;
pub mod error;
pub mod fingroup;
pub mod gcat;
pub mod intlin;
pub mod mackey;
pub mod nilcat;
pub mod ring;
pub mod witt;

pub use error::{Error, Result};
