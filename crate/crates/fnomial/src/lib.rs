//! Exact combinatorics of tiling sequences and their F-nomial coefficients.
//!
//! The sequences handled here come from the generating function
//! `F(x) = 1_F·x / ((1 − αx)(1 − βx))` with integer parameters; the diagonal
//! case `α = β`, `1_F = 1` is written `N(α)` and has terms `n_F = n·α^{n−1}`.
//! Building the generalized binomial coefficient `⟨n k⟩ = n_F!/(k_F!(n−k)_F!)`
//! on `N(α)` gives integers with a graph-counting meaning:
//!
//! * `⟨n k⟩` counts labeled bipartite α-multigraphs on `n` vertices with a
//!   distinguished side of size `k` ([`fnomial`]),
//! * the multi-index form `⟨n | b₁,…,b_k⟩` counts labeled k-colored
//!   α-multigraphs with prescribed color-class sizes ([`multi_fnomial`]),
//! * the first column of the inverse coefficient matrix counts labeled
//!   acyclic α-multi digraphs up to sign ([`inverse_corner`], [`dag_count`]).
//!
//! All arithmetic is arbitrary-precision and exact. The [`oracle`] module
//! enumerates the graph families instance by instance, so every closed form
//! can be replayed against ground truth on small inputs; [`verify`] packages
//! those comparisons together with the algebraic identities as a check suite.

use std::fmt;
use std::str::FromStr;

pub mod compositions;
pub mod oracle;
pub mod verify;

mod arith;
mod coefficients;
mod dag;
mod inversion;
mod tiling;

pub use coefficients::{
    colored_total, fnomial, fnomial_by_factorials, fnomial_by_recurrence, multi_fnomial, row_sum,
    triangle, ColorComposition, FNomialTriangle,
};
pub use dag::{dag_count, dag_count_via_inverse, dag_table, DagCountTable};
pub use inversion::{inverse_corner, inverse_entry, inverse_triangle, InverseTriangle};
pub use tiling::{
    coefficient, f_factorial, falling_f_factorial, n_alpha, FSequence, SequenceParams,
};

/// Arbitrary-precision count. Inverse-matrix entries are the only negative
/// values the crate produces.
pub type Count = num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alpha must be a positive integer")]
    InvalidAlpha,
    #[error("one_f must be a positive integer")]
    InvalidOneF,
    #[error("k = {k} exceeds n = {n}")]
    KExceedsN { n: u64, k: u64 },
    #[error("refusing exhaustive enumeration: instance space exceeds the budget of {limit}")]
    BudgetExceeded { limit: u64 },
}

/// The multiplicity parameter α. Any two vertices of an α-multigraph are
/// joined by between 0 and α−1 (parallel) edges, so α = 1 means edgeless
/// graphs and α = 2 means simple graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alpha(u64);

impl Alpha {
    pub fn new(value: u64) -> Result<Self, Error> {
        if value == 0 {
            return Err(Error::InvalidAlpha);
        }
        Ok(Self(value))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let value: u64 = s.parse().map_err(|_| Error::InvalidAlpha)?;
        Alpha::new(value)
    }
}
