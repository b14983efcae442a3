//! Reduced Groebner bases and the ideal calculus built on them.

mod engine;
mod ideal;

pub use ideal::IdealPresentation;

use engine::{Engine, WPoly};

use crate::error::Result;
use crate::polyring::{MonomialOrder, Polynomial};

/// Remainder of multivariate division of `f` by `basis` (in sequence order).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Result<Polynomial> {
    let amb = f.ambient();
    for g in basis {
        amb.check_same(g.ambient())?;
    }
    let work: Vec<WPoly> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.terms_in_order(ord)).collect();
    let refs: Vec<&WPoly> = work.iter().collect();
    let mut engine = Engine::new(ord, amb.field(), amb.limits().gb_step_budget);
    let r = engine.reduce(&f.terms_in_order(ord), &refs)?;
    Ok(Polynomial::from_sorted_or_not(amb, r))
}

/// Reduced Groebner basis of the ideal generated by `gens`. The zero ideal
/// has the empty basis.
pub fn buchberger(gens: &[Polynomial], ord: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let ideal = IdealPresentation::with_order(first.ambient(), gens.to_vec(), ord.clone())?;
    Ok(ideal.reduced_basis()?.to_vec())
}

pub fn ideal_membership(f: &Polynomial, ideal: &IdealPresentation) -> Result<bool> {
    ideal.contains(f)
}

pub fn ideal_equal(a: &IdealPresentation, b: &IdealPresentation) -> Result<bool> {
    a.equals(b)
}

pub fn ideal_sum(a: &IdealPresentation, b: &IdealPresentation) -> Result<IdealPresentation> {
    a.sum(b)
}

pub fn ideal_product(a: &IdealPresentation, b: &IdealPresentation) -> Result<IdealPresentation> {
    a.product(b)
}

pub fn ideal_intersection(a: &IdealPresentation, b: &IdealPresentation) -> Result<IdealPresentation> {
    a.intersection(b)
}

pub fn ideal_quotient(a: &IdealPresentation, b: &IdealPresentation) -> Result<IdealPresentation> {
    a.quotient(b)
}

pub fn eliminate(ideal: &IdealPresentation, front: &[usize]) -> Result<IdealPresentation> {
    ideal.eliminate(front)
}
