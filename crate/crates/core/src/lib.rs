//! Exact G2 linear algebra and the algebraic deformation theory of nearly
//! parallel G2-structures on naturally reductive homogeneous spaces.
#![allow(clippy::needless_range_loop)]

pub mod deform;
pub mod error;
pub mod exterior;
pub mod field;
pub mod g2;
pub mod homogeneous;
pub mod par;
pub mod rep;

pub use error::{Error, Result};
pub use field::{FieldElem, FieldMatrix, Rational};
