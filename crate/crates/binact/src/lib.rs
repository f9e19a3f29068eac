//! Command implementations and file formats behind the `binact` binary,
//! exposed as a library so integration tests can drive them directly.

pub mod battery;
pub mod commands;
pub mod formats;
pub mod report;
