//! Sparse multivariate polynomials over a prime field.

mod field;
mod monomial;
mod order;
mod poly;

pub use field::{FieldElement, PrimeField, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use order::{BaseOrder, MonomialOrder};
pub use poly::{Ambient, Limits, Polynomial, Term};

use std::cmp::Ordering;

use crate::error::Result;

pub fn mono_compare(m1: &Monomial, m2: &Monomial, ord: &MonomialOrder) -> Result<Ordering> {
    ord.compare(m1, m2)
}

pub fn poly_add(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.add(g)
}

pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.mul(g)
}

pub fn leading_term(f: &Polynomial, ord: &MonomialOrder) -> Result<(Monomial, FieldElement)> {
    f.leading_term(ord)
}
