//! Command line layer for the eternal vertex cover toolkit: graph file
//! formats, seeded generators, verification corpora, and the JSON report
//! schema used by the `evc` binary.

pub mod commands;
pub mod corpus;
pub mod formats;
pub mod generate;
pub mod report;
