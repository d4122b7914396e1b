//! Critical sets and critical independent sets of simple undirected graphs.
//!
//! The polynomial side (`d_c`, `ker`, critical independent sets, König–Egerváry
//! and quasi-regularity tests) scales to large sparse graphs. The exponential
//! side (`α`, `core`, `corona`, brute-force oracles) is guarded and reports
//! when it gives up.

pub mod critical;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod matching;
pub mod mis;
pub mod oracle;
pub mod generate;
pub mod verify;
pub mod report;
