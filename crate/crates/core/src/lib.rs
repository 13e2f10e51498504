//! Alpha-spectral radii of uniform hypergraphs and the Turán-type extremal
//! problems built on them. The guide in `book/` walks through the modules.

// `!(x >= y)` comparisons are deliberate: they reject NaN along with small values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod experiments;
pub mod extremal;
pub mod hypergraph;
pub mod io;
pub mod pattern;
pub mod spectral;

pub use error::{Error, Result};
pub use hypergraph::Hypergraph;

/// The guide's code samples, compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
    #[doc = include_str!("../../../book/src/spectral.md")]
    mod spectral {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/extremal.md")]
    mod extremal {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
