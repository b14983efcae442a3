//! Commutative algebra over prime fields: Groebner bases, grade
//! certificates and Cohen-Macaulay tests for tensor products of finitely
//! generated algebras, plus a small session language to drive them.

pub mod algebra;
pub mod error;
pub mod frontend;
pub mod groebner;
pub mod invariants;
pub mod polyring;
pub mod theorems;

pub use algebra::{tensor, AlgebraIdeal, AlgebraPresentation, Side};
pub use error::{Error, Result};
pub use frontend::{execute, parse_session, RunConfig, RunReport};
pub use groebner::IdealPresentation;
pub use invariants::{grade, is_cohen_macaulay, krull_dim, GradeCertificate};
pub use polyring::{Ambient, Limits, Monomial, MonomialOrder, Polynomial, PrimeField};
pub use theorems::{CheckId, Status, TheoremReport, Value};
