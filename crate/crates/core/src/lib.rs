//! Subgroup perfect codes in finite groups given by multiplication tables.
//!
//! A subgroup `H` of `G` is a perfect code when some Cayley graph of `G`
//! has `H` as a perfect code, equivalently when `H` has an inverse-closed
//! transversal. [`decide`] answers this through structural criteria and
//! certifies the answer; [`find_cayley_transversal`] is the exhaustive
//! reference; [`run_catalog`] checks both against each other over whole
//! families of groups.

pub mod builders;
pub mod cayley;
pub mod classify;
pub mod decider;
pub mod error;
pub mod group;
pub mod harness;
pub mod lattice;
pub mod mask;
pub mod subgroup;
pub mod transversal;

pub use builders::{BuiltGroup, GroupSpec};
pub use cayley::{build_cayley, CayleyGraph};
pub use classify::{classify, GroupClass};
pub use decider::{decide, Decider, Decision, Verdict, Witness};
pub use error::{Error, Result, TableError};
pub use group::{ElementId, Group};
pub use harness::{run_catalog, CatalogConfig, CatalogReport, PropertyId};
pub use lattice::enumerate_subgroups;
pub use mask::SubsetMask;
pub use subgroup::Subgroup;
pub use transversal::{find_cayley_transversal, find_total_transversal, Transversal};
