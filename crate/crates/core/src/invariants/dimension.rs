use crate::algebra::{AlgebraIdeal, AlgebraPresentation};
use crate::error::Result;

/// Krull dimension: the largest set `S` of variables such that no leading
/// monomial of the reduced basis of the relations is supported inside `S`.
pub fn krull_dim(a: &AlgebraPresentation) -> Result<usize> {
    let lms = a.relations().leading_monomials()?;
    let masks: Vec<u64> = lms.iter().map(|m| m.support_mask()).collect();
    Ok(max_independent(a.nvars(), &masks))
}

/// Size of the largest subset of `0..n` containing none of `masks`.
pub(crate) fn max_independent(n: usize, masks: &[u64]) -> usize {
    fn go(i: usize, n: usize, chosen: u64, size: usize, masks: &[u64], best: &mut usize) {
        if size + (n - i) <= *best {
            return;
        }
        if i == n {
            *best = size;
            return;
        }
        let with = chosen | (1 << i);
        if !masks.iter().any(|&m| m & with == m) {
            go(i + 1, n, with, size + 1, masks, best);
        }
        go(i + 1, n, chosen, size, masks, best);
    }
    let mut best = 0;
    go(0, n, 0, 0, masks, &mut best);
    best
}

/// `dim A/I`.
pub fn dim_quotient(a: &AlgebraPresentation, ideal: &AlgebraIdeal) -> Result<usize> {
    krull_dim(&a.quotient(ideal)?)
}

/// `dim A − dim A/P`; valid when `A` is equidimensional and catenary, which
/// holds for the domains, complete intersections and their tensor
/// products this is applied to.
pub fn height(a: &AlgebraPresentation, p: &AlgebraIdeal) -> Result<usize> {
    let d = krull_dim(a)?;
    let q = dim_quotient(a, p)?;
    Ok(d - q)
}
