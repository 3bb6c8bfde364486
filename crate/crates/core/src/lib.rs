//! Branching rules for the general linear Lie superalgebra gl(p|q):
//! tableau combinatorics, multiplicity formulas, the supersymmetric algebra
//! on `ℂⁿ ⊗ ℂ^{p|q}` and explicit highest weight vectors inside it.

pub mod error;
pub mod hwv;
pub mod lie_action;
pub mod multiplicities;
pub mod par;
pub mod partitions;
pub mod superalgebra;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{Partition, SkewShape};
pub use tableaux::{Content, Tableau, TableauPair};
