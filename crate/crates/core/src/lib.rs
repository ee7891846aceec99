//! Robust geometric graph algorithms.
//!
//! The algorithms in [`udg`] and [`tg`] never trust their input: each one
//! either returns an answer that is correct for the given graph, or returns
//! a compact witness proving the graph cannot be a unit disk graph (resp.
//! transmission graph). On graphs that really are in the promised class the
//! witness branch is never taken and the answer comes back in linear time.

pub mod geometry;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod tg;
pub mod udg;
pub mod witness;

pub use graph::{DirectedGraph, GraphError, UndirectedGraph, Vertex};
