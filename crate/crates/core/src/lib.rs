//! Random Young diagrams from the Schur–Weyl distribution.
//!
//! A word of `n` i.i.d. letters drawn from a sorted distribution `α` is fed
//! through RSK row insertion; the shape `λ` of the resulting tableau,
//! normalized by `n`, estimates `α`. This crate provides:
//!
//! - [`partitions`]: Young diagrams, sorted distributions, dominance order.
//! - [`rsk`]: row insertion, bump streams, standardization, restrictions.
//! - [`greene`]: independent LIS and Greene-invariant oracles.
//! - [`sampling`]: seeded samplers and exact enumeration of the shape law.
//! - [`metrics`]: distances between probability vectors.
//! - [`bounds`]: closed-form expectation bounds and checkers for them.
//! - [`viennot`]: the shadow-line construction of RSK.
//!
//! ```
//! use schur_weyl::{rsk::{sh_rsk, Word}, greene::lis};
//!
//! let w = Word::new(vec![2, 3, 2, 1, 2, 2], 3).unwrap();
//! assert_eq!(sh_rsk(&w).rows(), &[4, 1, 1]);
//! assert_eq!(lis(&w), 4);
//! ```

pub mod bounds;
pub mod error;
pub mod greene;
pub mod metrics;
pub mod partitions;
pub mod rsk;
pub mod sampling;
pub mod viennot;

pub use error::{Error, Result};
pub use partitions::{SortedDist, YoungDiagram};
pub use rsk::{rsk, sh_rsk, Word};

// The guide's code blocks run as doc-tests through these modules.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rsk.md")]
    mod rsk {}
    #[doc = include_str!("../../../book/src/greene.md")]
    mod greene {}
    #[doc = include_str!("../../../book/src/sampling.md")]
    mod sampling {}
    #[doc = include_str!("../../../book/src/excess.md")]
    mod excess {}
    #[doc = include_str!("../../../book/src/row-bounds.md")]
    mod row_bounds {}
    #[doc = include_str!("../../../book/src/distances.md")]
    mod distances {}
    #[doc = include_str!("../../../book/src/inequalities.md")]
    mod inequalities {}
    #[doc = include_str!("../../../book/src/viennot.md")]
    mod viennot {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
}
