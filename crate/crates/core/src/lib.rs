//! Partial optimality for the maximum-value preordering problem.
//!
//! Given values `c_pq` on the ordered pairs of a finite set, the problem asks
//! for a transitive relation `x` maximizing `Σ c_pq x_pq`. This crate decides
//! sufficient conditions under which single variables can be fixed to a value
//! that some optimal solution shares, and iterates them jointly.
//!
//! The layers, bottom up:
//!
//! - [`instance`]: value matrices, synthetic generation, ego-network ingestion, CSV I/O.
//! - [`preorder`]: relations, partial assignments, closure, class merging.
//! - [`maps`]: the self-maps behind every condition and their change sets.
//! - [`graph`]: push-relabel min cut, reachability, triple packing.
//! - [`bounds`]: local search, induced values, packing bounds, exact special cases.
//! - [`conditions`]: the fixation deciders and the joint fixpoint driver.
//! - [`oracle`]: exhaustive enumeration for small instances.

pub mod bits;
pub mod bounds;
pub mod conditions;
pub mod error;
pub mod exec;
pub mod graph;
pub mod instance;
pub mod maps;
pub mod oracle;
pub mod preorder;

pub use error::{Error, Result};

/// An ordered pair `(p, q)` of element indices.
pub type Pair = (usize, usize);
