//! Exact machinery for covering numbers and generating-graph cliques of the
//! groups `G(n, m) = A_n^m ⋊ <γ>`, where `γ = (1, …, 1, τ)δ`, `τ = (1 2)` and
//! `δ` cycles the `m` coordinates.
//!
//! Composition is left to right throughout: `p * q` applies `p` first, and
//! `x^g = g⁻¹ x g`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, caching and the
//! command line live in the `wreathcov` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod covering;
pub mod error;
pub mod interval;
pub mod lll;
pub mod perm;
pub mod pi;
pub mod report;
pub mod small;
pub mod subgroups;
pub mod wreath;

pub use error::{Error, Result};
pub use interval::IntervalRational;
pub use perm::{CycleType, Parity, Permutation};

pub use pi::PiDescriptor;
pub use subgroups::StabilizerDescriptor;
pub use wreath::{GroupParams, WreathElement};

