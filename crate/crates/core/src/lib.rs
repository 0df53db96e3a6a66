//! Exact intersection theory on P^2 and P^3 for numerical invariants of
//! sheaves: Chern characters and Riemann-Roch, splitting-type constraints,
//! explicit cohomology bounds and the `ch_3` bound for mu-semistable reflexive
//! sheaves on P^3, resolution shapes of rank-two reflexive sheaves, and linear
//! monad bookkeeping on P^2.
//!
//! All arithmetic is exact over [`Rational`].

pub mod bounds;
pub mod chow;
pub mod error;
pub mod monad;
pub mod rational;
pub mod resolution;
pub mod shape;
pub mod splitting;

pub use bounds::{BoundReport, C3Interval, Mode};
pub use chow::{Ambient, ChernCharacter, ChernClasses, ToddClass};
pub use error::{Error, Result};
pub use monad::{MonadShape, PartitionType};
pub use rational::Rational;
pub use resolution::{PresentationReport, ResolutionParams};
pub use shape::ShapeDescriptor;
pub use splitting::SplittingType;
