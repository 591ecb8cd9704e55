//! Exact symmetrizing operators, freeness tests and the coordinate ring of
//! the punctual Hilbert scheme of the affine line.

pub mod error;
pub mod freeness;
pub mod hilbert;
pub mod norms;
pub mod rings;
pub mod sample;
pub mod sympoly;

pub use error::{Error, Result};
pub use rings::{Domain, Elem, MultiPoly, UniPoly};
