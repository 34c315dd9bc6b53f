//! Square complexes, generalized simplicial complexes and the checks that
//! relate them: vertex links, nonpositive curvature, VH structure, local
//! 6-largeness, the simplexification of a VH complex, integral homology and
//! fundamental-group presentations.

pub mod curvature;
pub mod delta;
pub mod corpus;
pub mod error;
pub mod fundamental;
pub mod homology;
pub mod simplexify;
pub mod skeleton;
pub mod square;

pub use delta::{Cell, DeltaComplex, LinkComplex, RawDeltaComplex};
pub use error::{Error, Result};
pub use skeleton::CellComplex;
pub use square::{End, LinkGraph, RawSquareComplex, Sign, SquareComplex};
