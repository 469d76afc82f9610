//! Finite algebraic hyperstructures.
//!
//! Carriers are small ordered sets addressed by index; hyperoperations are
//! tables of non-empty subsets ([`HyperTable`]). On top of that the crate
//! provides axiom checkers for hypergroups, Krasner hyperfields and
//! hypervector spaces ([`axioms`]), hyper-linear algebra ([`hlinalg`]),
//! built-in exemplars and an exhaustive small-order census
//! ([`constructions`]), an executable theorem harness ([`theorems`]) and the
//! `.hyp` structure-file format ([`format`]).

pub mod axioms;
pub mod constructions;
pub mod hlinalg;
pub mod error;
pub mod format;
pub mod set;
pub mod table;
pub mod theorems;

pub use axioms::{
    check_hyperfield, check_hypergroup, check_hypergroupoid, hyperfield_report, check_hyperring, check_hypervectorspace,
    check_semihypergroup, check_subspace, ActionTable, Distributivity, HyperVectorSpace, Hyperfield,
    HypergroupReport, Report, SpaceClass,
};
pub use error::{Error, Result};
pub use set::IndexSet;
pub use table::{Carrier, HyperTable, MulTable};
