//! Exact computation in the partition algebra `P_r(x)` and the multiset
//! partition algebra `MP_{r,k}(x)`.
//!
//! Scalars are rational functions of the parameter `x` with rational
//! coefficients (or exact rationals after specialization). The crate
//! provides the diagram, orbit and the three multiset bases with their
//! products and changes of basis, a generating set and span checks, the
//! tableau models of the irreducible modules, and tensor-space realizations.

pub mod cli;
pub mod error;
pub mod limits;
pub mod linalg;
pub mod lincomb;
pub mod msp_algebra;
pub mod partition_algebra;
pub mod partitions;
pub mod realization;
pub mod scalars;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
