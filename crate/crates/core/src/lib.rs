pub mod cfk;
pub mod dfset;
pub mod error;
pub mod exact_arith;
pub mod markov_oracle;
pub mod order;
pub mod symbolic;

pub use error::{Error, Result};
pub use order::Comparison;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/expansions.md")]
    mod expansions {}
    #[doc = include_str!("../../../book/src/itineraries.md")]
    mod itineraries {}
    #[doc = include_str!("../../../book/src/polytopes.md")]
    mod polytopes {}
    #[doc = include_str!("../../../book/src/locking.md")]
    mod locking {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
