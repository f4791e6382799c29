//! Library surface of the command-line front end, reused by the integration
//! and acceptance tests.

pub mod bench;
pub mod commands;
pub mod io;
pub mod svg;
