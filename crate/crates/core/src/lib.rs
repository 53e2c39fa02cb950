//! Edge-intersection graphs of paths on a triangular grid.

pub mod classify;
pub mod coloring;
pub mod constructions;
pub mod epgt;
pub mod format;
pub mod graph;
pub mod helly;
pub mod lattice;
pub mod render;
pub mod search;
