pub mod catalan;
pub mod cellgraph;
pub mod eco;
pub mod error;
pub mod frobenius;
pub mod linalg;
pub mod scalar;
pub mod series;
pub mod toprec;
pub mod zoo;

pub use error::{Error, Result};
pub use scalar::Scalar;

// The guide's chapters, compiled so their snippets run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/frobenius.md")]
    mod frobenius {}
    #[doc = include_str!("../../../book/src/cell-graphs.md")]
    mod cell_graphs {}
    #[doc = include_str!("../../../book/src/recursion.md")]
    mod recursion {}
    #[doc = include_str!("../../../book/src/catalan.md")]
    mod catalan {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
