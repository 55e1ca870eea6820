//! Wiener and Szeged indices of partial cubes.
//!
//! A partial cube is a connected graph that embeds isometrically into a
//! hypercube. For such graphs both indices decompose over the classes of the
//! Djoković–Winkler relation, and further over any grouping of those classes
//! into weighted quotient graphs. This crate provides:
//!
//! - [`graph`]: the simple undirected graph type, BFS distances, bipartiteness
//!   and edge-removal components;
//! - [`theta`]: the relation Θ, its transitive closure, partial-cube
//!   recognition and the hypercube labelling;
//! - [`quotient`]: coarser partitions and weighted quotient graphs;
//! - [`indices`]: brute-force, weighted, cut-method and partition-based
//!   index evaluators;
//! - [`treelin`]: linear-time weighted Wiener and Szeged indices of trees;
//! - [`chem`]: C4C8 and benzenoid system generators together with the
//!   linear-time direction-partition pipeline.
//!
//! ```
//! use pcube::{generators, indices, theta};
//!
//! let q3 = generators::hypercube(3);
//! let pc = theta::recognize_partial_cube(&q3).unwrap().into_result().unwrap();
//! assert_eq!(indices::wiener_cut(&pc).unwrap(), 48);
//! assert_eq!(indices::szeged_cut(&pc).unwrap(), 192);
//! ```

pub mod chem;
mod error;
pub mod generators;
pub mod graph;
pub mod indices;
pub mod quotient;
pub mod theta;
pub mod treelin;
mod union_find;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
pub use theta::{PartialCube, Recognition, ThetaPartition, Witness};
