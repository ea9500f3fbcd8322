//! Finite matroids, the relation their circuits induce, rough-set
//! approximations under that relation, and matroid connectivity.

pub mod connectivity;
mod dsu;
mod error;
pub mod fixtures;
mod induced;
pub mod io;
mod linalg;
mod matroid;
pub mod oracle;
mod rough;
mod set;

pub use error::{Error, Result};
pub use induced::*;
pub use linalg::{parse_rational, RationalMatrix};
pub use matroid::*;
pub use rough::{BinaryRelation, RelationProperties};
pub use set::{
    canonical_masks, com_of, max_of, min_of, opp_of, ElementId, GroundSet, SetFamily, Subset,
    ENUMERATION_BOUND,
};
