//! Exact computations with operad presentations: free operad bases, the
//! relation module map `π`, coherence constraints, quadratic duals,
//! Tel-A-graphs and the word equations of quantized coherence.

#![no_std]
extern crate alloc;

pub mod algebra;
pub mod coherence;
pub mod duality;
pub mod error;
pub mod graphs;
pub mod presentation;
pub mod trees;
pub mod words;

pub use error::{Error, Result};
