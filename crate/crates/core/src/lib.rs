//! Exact `(q, t)` symmetric-function calculus for the equivariant K-theory of
//! Hilbert schemes of points in the plane.

pub mod cli;
pub mod config;
pub mod error;
pub mod field;
pub mod fock;
pub mod gcd;
pub mod localization;
pub mod macdonald;
pub mod mmc;
pub mod partition;
pub mod poly;
pub mod report;
pub mod symfunc;
pub mod zfun;

pub use error::{Error, Result};
pub use field::{fe, FieldElem};
pub use partition::{partition, partitions_of, partitions_up_to, Partition};
pub use symfunc::{AlphabetPoint, Basis, SymFunc};
