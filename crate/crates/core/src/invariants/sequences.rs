use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraIdeal, AlgebraPresentation};
use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;
use crate::polyring::Polynomial;

/// `f` is a nonzerodivisor on `R/stage`, i.e. `(stage : f) = stage`.
pub(crate) fn is_nzd_modulo(stage: &IdealPresentation, f: &Polynomial) -> Result<bool> {
    if stage.contains(f)? {
        // f ≡ 0 is a zerodivisor unless the quotient is the zero ring
        return Ok(!stage.is_proper()?);
    }
    let q = stage.quotient_by(f)?;
    stage.contains_ideal(&q)
}

/// Picks a witness among the generators of `quotient ⊋ stage`: reduced
/// modulo `stage`, lowest leading monomial first.
fn pick_witness(stage: &IdealPresentation, quotient: &IdealPresentation) -> Result<Option<Polynomial>> {
    let ord = stage.order().clone();
    let mut candidates = Vec::new();
    for g in quotient.reduced_basis()? {
        let r = stage.normal_form(g)?;
        if !r.is_zero() {
            let lm = r.leading_term(&ord)?.0;
            candidates.push((lm, r));
        }
    }
    Ok(candidates
        .into_iter()
        .min_by(|(la, a), (lb, b)| ord.cmp(la, lb).then(a.terms().len().cmp(&b.terms().len())))
        .map(|(_, r)| r))
}

/// Annihilator test for `I = (gens) + stage` on `R/stage`: returns `a ∉ stage`
/// with `a·I ⊆ stage` when one exists (exactly when `(stage : I) ≠ stage`).
pub(crate) fn annihilator_witness(stage: &IdealPresentation, gens: &[Polynomial]) -> Result<Option<Polynomial>> {
    let mut acc: Option<IdealPresentation> = None;
    for g in gens {
        if stage.contains(g)? {
            continue;
        }
        let q = stage.quotient_by(g)?;
        let next = match acc {
            None => q,
            Some(a) => a.intersection(&q)?,
        };
        if stage.contains_ideal(&next)? {
            return Ok(None);
        }
        acc = Some(next);
    }
    match acc {
        None if stage.is_proper()? => Ok(Some(Polynomial::one(stage.ambient()))),
        None => Ok(None),
        Some(q) => pick_witness(stage, &q),
    }
}

/// Zerodivisor test in `A`; returns a witness `g ∉ J` with `f·g ∈ J`.
pub fn is_zerodivisor(a: &AlgebraPresentation, f: &Polynomial) -> Result<Option<Polynomial>> {
    a.ambient().check_same(f.ambient())?;
    annihilator_witness(a.relations(), std::slice::from_ref(f))
}

/// `I ⊆ Z(A)`; returns `a ∉ J` with `I·a ⊆ J`.
pub fn ideal_in_zerodivisors(a: &AlgebraPresentation, ideal: &AlgebraIdeal) -> Result<Option<Polynomial>> {
    if !ideal.owner().same_as(a) {
        return Err(Error::OwnerMismatch);
    }
    ideal.require_proper()?;
    annihilator_witness(a.relations(), ideal.generators())
}

/// Each element is a nonzerodivisor modulo the relations and the earlier
/// elements, and the final quotient is nonzero.
pub fn is_regular_sequence(a: &AlgebraPresentation, seq: &[Polynomial]) -> Result<bool> {
    let mut stage = a.relations().clone();
    for f in seq {
        a.ambient().check_same(f.ambient())?;
        if !is_nzd_modulo(&stage, f)? {
            return Ok(false);
        }
        stage = stage.sum(&IdealPresentation::new(a.ambient(), vec![f.clone()])?)?;
    }
    stage.is_proper()
}

/// Regular in every order. A permutation is regular iff each element is a
/// nonzerodivisor modulo the relations plus the set of elements before it,
/// so it suffices to test every (subset, element outside it) pair once
/// instead of walking all `n!` orders.
pub fn is_permutable_regular_sequence(a: &AlgebraPresentation, seq: &[Polynomial]) -> Result<bool> {
    let bound = a.ambient().limits().permutation_bound;
    if seq.len() > bound {
        return Err(Error::PermutationBound { len: seq.len(), bound });
    }
    for f in seq {
        a.ambient().check_same(f.ambient())?;
    }
    let n = seq.len();
    let stage_of = |mask: usize| -> Result<IdealPresentation> {
        let extra = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| seq[i].clone()).collect();
        a.relations().sum(&IdealPresentation::new(a.ambient(), extra)?)
    };
    if !stage_of((1 << n) - 1)?.is_proper()? {
        return Ok(false);
    }
    for mask in 0..(1usize << n) {
        let stage = stage_of(mask)?;
        for (i, f) in seq.iter().enumerate() {
            if mask & (1 << i) == 0 && !is_nzd_modulo(&stage, f)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Finds an element of `(gens)` regular on `R/stage`: the generators in
/// order, then random `F_p`-combinations of them.
pub(crate) fn find_nzd(
    stage: &IdealPresentation,
    gens: &[Polynomial],
    rng: &mut ChaCha8Rng,
) -> Result<Polynomial> {
    for g in gens {
        if !stage.contains(g)? && is_nzd_modulo(stage, g)? {
            return Ok(g.clone());
        }
    }
    let amb = stage.ambient();
    let p = amb.field().modulus();
    let retries = amb.limits().nzd_retries;
    for _ in 0..retries {
        let mut f = Polynomial::zero(amb);
        for g in gens {
            let c: u32 = rng.gen_range(1..p);
            f = f.add(&g.scale(c))?;
        }
        if !f.is_zero() && is_nzd_modulo(stage, &f)? {
            return Ok(f);
        }
    }
    Err(Error::NzdSearchExhausted { retries })
}
