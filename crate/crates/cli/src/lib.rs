//! Support library for the `refmon` binary: file formats and the
//! verification suite. Kept as a library so the acceptance test target and
//! the `selftest` subcommand run exactly the same checks.

pub mod formats;
pub mod selftest;
