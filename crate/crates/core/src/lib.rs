//! Connected straight-line matchings for planar point sets in general
//! position.
//!
//! A matching of a point set is *connected* when the union of its segments
//! is a connected set, equivalently when the intersection graph of the
//! segments is connected. This crate builds connected matchings with proven
//! size guarantees — at least (5n+1)/27 edges uncolored, with polychromatic
//! variants for balanced colorings — together with the extremal windmill
//! instances that cap the achievable size, an exhaustive small-n oracle, and
//! independent verifiers for all guarantees.
//!
//! Everything is exact: coordinates are bounded integers and every geometric
//! decision is the sign of an `i128` expression.

pub mod crossing;
pub mod error;
pub mod geom;
pub mod instances;
pub mod matching;
pub mod pointset;
pub mod report;
pub mod separator;
pub mod verify;

pub use error::{Error, Result};
pub use geom::{Orientation, Point};
pub use matching::Matching;
pub use pointset::{PointSet, Segment};
pub use report::{BoundReport, Rat, TheoremTag};
pub use separator::Separator;
