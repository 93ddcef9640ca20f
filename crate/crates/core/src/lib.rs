//! Exact dynamic counting of triangles and the connected four-vertex
//! patterns under edge insertions and deletions.
//!
//! ```
//! use subgraph_dyn::{Pattern, SubgraphCounter};
//!
//! let mut c = SubgraphCounter::with_all_patterns();
//! for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
//!     c.insert_edge(a, b).unwrap();
//! }
//! assert_eq!(c.total(Pattern::Diamond).unwrap(), 6);
//! assert_eq!(c.induced(Pattern::Clique4).unwrap(), 1);
//! ```

pub mod aux_store;
pub mod count;
pub mod counters;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod ops;
pub mod oracle;
pub mod partition;
pub mod s_counters;
pub mod stream;

pub use counters::{CounterConfig, DynamicCounter, Pattern, PatternCounts};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexId};

/// Counter with 64-bit counts.
pub type SubgraphCounter = DynamicCounter<u64>;

/// Counter with 128-bit counts, for graphs whose four-vertex counts exceed `u64`.
pub type WideSubgraphCounter = DynamicCounter<u128>;
