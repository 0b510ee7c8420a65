//! Exact cochain algebra on ordered simplicial complexes and the compact
//! abelian group G(X) dual to three-dimensional Spin bordism.
//!
//! Everything is exact: integers are unbounded, ℝ/ℤ is modelled by ℚ/ℤ,
//! and mod-2 linear algebra runs on packed bit vectors.

pub mod arf;
pub mod builtin;
pub mod cochain;
pub mod error;
pub mod group;
pub mod homology;
pub mod laws;
pub mod linalg;
pub mod simplicial;

pub use error::{Error, Result};

/// A size cap, overridable through the `GX_MAX_DIM` environment variable.
pub(crate) fn dim_cap(default: usize) -> usize {
    std::env::var("GX_MAX_DIM").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(default)
}
