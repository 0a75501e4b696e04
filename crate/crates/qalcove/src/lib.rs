//! Files, sampling and verification drivers on top of `qalcove-core`.

pub mod formats;
pub mod golden;
pub mod parse;
pub mod sample;
pub mod suite;

pub use qalcove_core as core;
