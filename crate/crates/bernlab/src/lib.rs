//! Verification harness and command-line tool around `bernlab-core`.
//!
//! Adds the floating-point checks ([`analytic`]), output formats
//! ([`format`]), the cross-method [`verify`] runner, timings ([`bench`]) and
//! the [`cli`] front end.

pub mod analytic;
pub mod bench;
mod cache;
pub mod cli;
pub mod format;
pub mod verify;
