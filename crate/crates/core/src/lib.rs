//! Exact arithmetic and algorithms for Stern-type diatomic sequences and the
//! enumerations of the positive rationals built from them.

pub mod analysis;
pub mod arith;
pub mod closed_forms;
pub mod enumeration;
pub mod error;
pub mod geometry;
pub mod mcf;
pub mod mobius;
pub mod stern;

pub use arith::{QuadElem, Radicand};
pub use enumeration::{Contraction, EnumTag, Enumeration};
pub use error::{Error, Result};
pub use stern::{FamilyTag, SternFamily};
