//! Document format and surface shared by the `cga` binary and its tests.

pub mod doc;
