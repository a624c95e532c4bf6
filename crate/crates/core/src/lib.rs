//! Finite left semi-trusses, brace-like left semi-trusses, skew left trusses,
//! left semi-braces and almost left semi-braces on explicit Cayley tables,
//! together with their set-theoretic Yang-Baxter solutions and an exhaustive
//! enumerator for small orders.

pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod report;
pub mod semibrace;
pub mod suite;
pub mod table;
pub mod truss;
pub mod ybe;

pub use error::{AlgebraError, Operation, Result};
pub use report::{CheckRecord, VerificationReport};
pub use table::{BinOpTable, Element, ElementSet, FiniteGroup, FiniteSemigroup, SelfMap, Verdict};
