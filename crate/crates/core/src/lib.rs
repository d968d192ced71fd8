//! Exhaustive checkers, witness searches and witness lifts for combinatorial
//! largeness notions (syndetic, thick, piecewise syndetic, J, CR, k-CR, SCR,
//! k-SCR) on finite semigroups given by Cayley tables.

pub mod bitset;
pub mod catalog;
mod engine;
pub mod error;
pub mod experiment;
pub mod family;
pub mod largeness;
pub mod lift;
pub mod oracle;
pub mod par;
pub mod property;
pub mod report;
pub mod richness;
pub mod search;
pub mod semigroup;
pub mod subset;
pub mod survey;

pub use catalog::{make_catalog, SemigroupSpec};
pub use error::{Error, Result};
pub use family::{enumerate_families, FunctionFamily};
pub use richness::{CheckOutcome, CrWitness, JWitness, Limits, ScrWitness, Verdict};
pub use semigroup::{Elem, Semigroup, Side};
pub use subset::SubsetMask;
pub use property::{evaluate, Property, Query};
