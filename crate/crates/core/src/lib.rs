//! Edge-girth-regular graphs from finite geometry.
//!
//! The crate builds incidence graphs of projective planes and spaces with
//! well-chosen substructures deleted, biaffine planes extended by cycles or
//! matchings, counts the girth cycles through every edge exactly, and
//! evaluates the known lower bounds on the order of (edge-)girth-regular
//! graphs.

pub mod field;
pub mod geometry;
pub mod constructions;
pub mod bounds;
pub mod graph;
