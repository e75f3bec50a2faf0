//! Rooted maximum leaf outbranching: kernelization, r-r numberings,
//! constructive leaf bounds, a constant-factor approximation and an exact
//! oracle for small instances.
#![no_std]

extern crate alloc;

pub mod approx;
pub mod bounds;
pub mod digraph;
pub mod error;
pub mod exact;
pub mod flow;
pub mod gen;
pub mod outbranching;
pub mod reduce;
pub mod stnum;

pub use digraph::{Arc, NormalizationNote, RootedDigraph, Vertex};
pub use error::Error;
pub use outbranching::{Outbranching, TreeDefect};

pub type Result<T> = core::result::Result<T, Error>;
