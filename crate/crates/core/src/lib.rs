//! Inclusion ideals of uniformly increasing hypergraphs.
//!
//! The pipeline runs hypergraph → containment vector → inclusion ideal →
//! Alexander dual with respect to the containment vector, then checks the
//! dual's truncation stability and compares its exact Castelnuovo–Mumford
//! regularity against the combinatorial bound `t` and the bound `q`.

pub mod error;
pub mod format;
pub mod hypergraph;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod report;
pub mod stability;

pub use error::{Error, Result};
pub use hypergraph::{ContainmentVector, IncreasingHypergraph, SpecialDual};
pub use ideal::{IrreducibleComponent, MonomialIdeal};
pub use linalg::Field;
pub use monomial::Monomial;
pub use oracle::BettiTable;
pub use stability::StabilityReport;
