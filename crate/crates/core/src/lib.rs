//! Finite semigroups, principal filters, and the largeness notions built on them.
//!
//! Every filter on a finite semigroup is principal, so the Stone-Čech
//! compactification collapses to the semigroup itself and a filter is
//! represented by its generating set.

pub mod dynamics;
pub mod error;
pub mod filter;
pub mod ideals;
pub mod largeness;
pub mod products;
pub mod report;
pub mod semigroup;
pub mod set;
pub mod verify;

pub use error::{Error, Result};
pub use filter::Filter;
pub use ideals::IdealCatalog;
pub use semigroup::{FamilySpec, FiniteSemigroup, PairCodec};
pub use set::ElementSet;
