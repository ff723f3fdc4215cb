//! Tamari intervals, meandering trees and bicolored blossoming trees.
//!
//! ```
//! use tamari::blossoming::{blossoming_to_interval, interval_to_blossoming};
//! use tamari::TamariInterval;
//!
//! let i: TamariInterval = "UDUD|UUDD".parse()?;
//! let b = interval_to_blossoming(&i);
//! assert_eq!(blossoming_to_interval(&b)?, i);
//! # Ok::<(), tamari::Error>(())
//! ```

pub mod blossoming;
pub mod counting;
pub mod error;
pub mod intervals;
pub mod meandering;
pub mod render;
pub mod sampler;
pub mod trees;
pub mod verify;

pub use blossoming::{BlossomingTree, Color, Slot};
pub use counting::Family;
pub use error::{Error, Result};
pub use intervals::{CanopyType, NonCrossingPartition, TamariInterval};
pub use meandering::MeanderingDiagram;
pub use sampler::{MarkedSequence, RandomSource};
pub use trees::{BinaryTree, DyckWalk, Step};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/intervals.md")]
    mod intervals {}
    #[doc = include_str!("../../../book/src/meandering.md")]
    mod meandering {}
    #[doc = include_str!("../../../book/src/blossoming.md")]
    mod blossoming {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/sampling.md")]
    mod sampling {}
    #[doc = include_str!("../../../book/src/rendering.md")]
    mod rendering {}
}
