//! Exact computations with plane polynomial automorphisms, de Jonquières
//! groups, cyclic quotient surfaces and embedded lines.

pub mod algebra;
pub mod curves;
pub mod error;
pub mod jonq;
pub mod planeaut;
pub mod smallgrp;
pub mod toric;

pub use error::{Error, Result};
