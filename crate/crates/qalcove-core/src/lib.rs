//! Exact combinatorics of the quantum alcove model.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is integer or
//! rational arithmetic; there is no floating point anywhere.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod alcove;
pub mod charident;
pub mod error;
pub mod genfun;
pub mod poly;
pub mod qbg;
pub mod qbops;
pub mod rootsys;
pub mod ybmoves;

pub use error::{Error, Result};
pub use rootsys::{Coroot, RationalPoint, Root, RootSystem, Weight, Weyl};
