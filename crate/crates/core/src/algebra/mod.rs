//! Exact scalars and polynomials.

pub mod bipoly;
pub mod cyclo;
pub mod grading;
pub mod linalg;
mod modular;
pub mod parse;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use cyclo::{cyclo_make, eq_power, CycloNum};
pub use grading::{grade_decompose, in_grading_class, GradedParts};
pub use parse::{parse_bipoly, parse_scalar, parse_unipoly, DEFAULT_MAX_ORDER};
pub use unipoly::UniPoly;
