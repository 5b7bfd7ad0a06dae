pub mod bitgraph;
pub mod bounds;
pub mod cli;
pub mod connectivity;
pub mod error;
pub mod experiment;
pub mod extract;
pub mod extremal;
pub mod fixtures;
pub mod graph;
pub mod numeric;
pub mod verdict;
