//! Construction, verification and size bounds for `(k,l)`-edge-maximal
//! r-uniform hypergraphs.

pub mod binomial;
pub mod connectivity;
pub mod constructions;
mod flow;
pub mod format;
pub mod hypergraph;
pub mod maximality;
pub mod normalize;
pub mod params;
pub mod sweep;

pub use connectivity::{high_components, kappa_flow, kappa_oracle, ConnectivityResult};
pub use hypergraph::{CutWitness, Edge, Hypergraph, HypergraphError};
