//! Finite-field and elliptic-curve toolkit for the Legendre family
//! `y^2 = x(x-1)(x-lambda)` and its characteristic-2 analogue.
//!
//! Everything here is exhaustive and desk scale: fields are enumerated,
//! points are counted with the quadratic character and statements about
//! isogeny classes are checked by brute-force sweeps. The sweeps run on
//! rayon when the `parallel` feature is enabled (the default) and fall
//! back to plain iterators otherwise; results are identical either way.

pub mod char2;
pub mod classify;
pub mod curve;
pub mod error;
pub mod export;
pub mod field;
pub mod par;
pub mod poly;
pub mod stats;
pub mod supersingular;
pub mod verify;

pub use error::{Error, Result};
pub use field::{make_field, Fe, Field};
pub use poly::Poly;
