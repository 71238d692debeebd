//! Size guards for exponential enumerations.
//!
//! Every enumeration that can blow up checks one of these limits first and
//! returns [`Error::Bound`] naming the knob that raises it.

use crate::error::{Error, Result};

/// Environment variable overriding [`DEFAULT_MAX_VERTICES`].
pub const MAX_VERTICES_ENV: &str = "MPDIAG_MAX_VERTICES";

/// Default bound on the number of vertices `2r` of enumerated partitions.
/// `Bell(10) = 115975` keeps exhaustive sweeps in seconds.
pub const DEFAULT_MAX_VERTICES: usize = 10;

/// Default bound on `n^r` for tensor-space realizations.
pub const DEFAULT_MAX_TENSOR_DIM: usize = 4096;

/// Bound on the order of enumerated permutation groups.
pub const MAX_GROUP_ORDER: usize = 40320;

/// The active vertex bound: the environment override if set and valid,
/// otherwise the default.
pub fn max_vertices() -> usize {
    std::env::var(MAX_VERTICES_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_VERTICES)
}

/// Errors unless `vertices` is within [`max_vertices`].
pub fn check_vertices(vertices: usize) -> Result<()> {
    let limit = max_vertices();
    if vertices > limit {
        return Err(Error::Bound {
            what: format!("enumeration over {vertices} vertices"),
            limit,
            flag: MAX_VERTICES_ENV,
        });
    }
    Ok(())
}

/// Errors unless a permutation group of the given order may be enumerated.
pub fn check_group_order(order: usize) -> Result<()> {
    if order > MAX_GROUP_ORDER {
        return Err(Error::Bound {
            what: format!("permutation group of order {order}"),
            limit: MAX_GROUP_ORDER,
            flag: "a smaller composition",
        });
    }
    Ok(())
}

/// Errors unless `n^r` is within the tensor-dimension bound.
pub fn check_tensor_dim(n: usize, r: usize) -> Result<()> {
    let dim = (n as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if dim > DEFAULT_MAX_TENSOR_DIM as u128 {
        return Err(Error::Bound {
            what: format!("tensor space of dimension {n}^{r}"),
            limit: DEFAULT_MAX_TENSOR_DIM,
            flag: "smaller n or r",
        });
    }
    Ok(())
}
