//! Library surface of the harness: the instance file format, the generators,
//! and the reduction/verification engine behind the `strred` binary.

pub mod edges;
pub mod file;
pub mod gen;
