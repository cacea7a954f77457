//! Approximate single-source distance oracle for one vertex failure.
//!
//! [`Vsdo::build`] preprocesses a directed graph with positive integer
//! weights and a source `s`. Afterwards [`Vsdo::query`] returns, for any
//! failed vertex `x != s` and target `t`, a value `d` with
//! `dist_{G-x}(s, t) <= d <= (1 + eps) * dist_{G-x}(s, t)`.
//!
//! ```
//! use vsdo_core::{Digraph, Distance, SzProvider, Vsdo};
//!
//! let g = Digraph::new(3, [(0, 1, 1), (1, 2, 1), (0, 2, 5)]).unwrap();
//! let oracle = Vsdo::build(&g, 0, 0.5, SzProvider::Exact).unwrap();
//! assert_eq!(oracle.query(1, 2).unwrap(), Distance::Finite(5));
//! ```

pub mod baseline;
pub mod dimacs;
pub mod distance;
pub mod error;
pub mod generate;
pub mod graphcore;
pub mod pathfault;
pub mod progdijk;
pub mod vsdo;

pub use distance::Distance;
pub use error::{Error, Result};
pub use graphcore::{Digraph, Edge, VertexId, Weight};
pub use pathfault::SzProvider;
pub use vsdo::{BuildConfig, QueryTrace, Vsdo, VsdoStats};
