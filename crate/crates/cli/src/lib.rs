//! Report assembly and rendering for the `prymcert` binary, kept in a
//! library so integration tests can exercise the exact same paths.

pub mod report;
