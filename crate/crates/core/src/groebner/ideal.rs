use std::fmt;
use std::sync::{Arc, OnceLock};

use super::engine::{Engine, WPoly};
use crate::error::Result;
use crate::polyring::{Ambient, MonomialOrder, Polynomial};

/// An ideal given by generators, with a write-once cache of its reduced
/// Groebner basis under `order`.
#[derive(Clone)]
pub struct IdealPresentation {
    ambient: Arc<Ambient>,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    cache: OnceLock<Arc<ReducedBasis>>,
}

pub(crate) struct ReducedBasis {
    polys: Vec<Polynomial>,
    work: Vec<WPoly>,
}

impl fmt::Debug for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealPresentation({self})")
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl IdealPresentation {
    pub fn new(ambient: &Arc<Ambient>, generators: Vec<Polynomial>) -> Result<Self> {
        Self::with_order(ambient, generators, MonomialOrder::GrevLex)
    }

    pub fn with_order(ambient: &Arc<Ambient>, generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        for g in &generators {
            ambient.check_same(g.ambient())?;
        }
        Ok(IdealPresentation { ambient: ambient.clone(), generators, order, cache: OnceLock::new() })
    }

    pub fn zero(ambient: &Arc<Ambient>) -> Self {
        IdealPresentation {
            ambient: ambient.clone(),
            generators: Vec::new(),
            order: MonomialOrder::GrevLex,
            cache: OnceLock::new(),
        }
    }

    pub fn unit(ambient: &Arc<Ambient>) -> Self {
        Self::new(ambient, vec![Polynomial::one(ambient)]).expect("same ambient")
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Same generators under another order (fresh cache).
    pub fn reordered(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        IdealPresentation {
            ambient: self.ambient.clone(),
            generators: self.generators.clone(),
            order,
            cache: OnceLock::new(),
        }
    }

    fn engine(&self) -> Engine<'_> {
        Engine::new(&self.order, self.ambient.field(), self.ambient.limits().gb_step_budget)
    }

    pub(crate) fn basis(&self) -> Result<&ReducedBasis> {
        if let Some(b) = self.cache.get() {
            return Ok(b);
        }
        let gens = self.generators.iter().map(|g| g.terms_in_order(&self.order)).collect();
        let work = self.engine().reduced_groebner(gens)?;
        let polys = work
            .iter()
            .map(|w| Polynomial::from_sorted_or_not(&self.ambient, w.clone()))
            .collect();
        // A racing fill computed the same unique basis; either value is fine.
        let _ = self.cache.set(Arc::new(ReducedBasis { polys, work }));
        Ok(self.cache.get().expect("cache filled"))
    }

    /// The reduced Groebner basis under [`IdealPresentation::order`].
    pub fn reduced_basis(&self) -> Result<&[Polynomial]> {
        Ok(&self.basis()?.polys)
    }

    /// Leading monomials of the reduced basis.
    pub fn leading_monomials(&self) -> Result<Vec<crate::polyring::Monomial>> {
        Ok(self.basis()?.work.iter().map(|w| w[0].mono.clone()).collect())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ambient.check_same(f.ambient())?;
        let b = self.basis()?;
        let refs: Vec<&WPoly> = b.work.iter().collect();
        let r = self.engine().reduce(&f.terms_in_order(&self.order), &refs)?;
        Ok(Polynomial::from_sorted_or_not(&self.ambient, r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &IdealPresentation) -> Result<bool> {
        self.ambient.check_same(&other.ambient)?;
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    pub fn is_proper(&self) -> Result<bool> {
        Ok(!self.basis()?.polys.iter().any(Polynomial::is_unit))
    }

    pub fn equals(&self, other: &IdealPresentation) -> Result<bool> {
        self.ambient.check_same(&other.ambient)?;
        let a = self.reordered(MonomialOrder::GrevLex);
        let b = other.reordered(MonomialOrder::GrevLex);
        Ok(a.reduced_basis()? == b.reduced_basis()?)
    }

    pub fn sum(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        self.ambient.check_same(&other.ambient)?;
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Self::with_order(&self.ambient, gens, self.order.clone())
    }

    pub fn product(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        self.ambient.check_same(&other.ambient)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.mul(g)?);
            }
        }
        Self::with_order(&self.ambient, gens, self.order.clone())
    }

    /// `I ∩ J` from `t·I + (1 − t)·J` with the tag variable `t` eliminated.
    pub fn intersection(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        self.ambient.check_same(&other.ambient)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Self::zero(&self.ambient).reordered(self.order.clone()));
        }
        let n = self.ambient.nvars();
        let ext = self.ambient.with_fresh_var("_t");
        let map: Vec<usize> = (0..n).collect();
        let t = Polynomial::var(&ext, n);
        let one_minus_t = Polynomial::one(&ext).sub(&t)?;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(f.remap(&ext, &map).mul(&t)?);
        }
        for g in &other.generators {
            gens.push(g.remap(&ext, &map).mul(&one_minus_t)?);
        }
        let tagged = IdealPresentation::with_order(&ext, gens, MonomialOrder::elimination(&[n]))?;
        let kept = tagged
            .reduced_basis()?
            .iter()
            .filter(|g| g.support_mask() & (1 << n) == 0)
            .map(|g| g.restrict(&self.ambient, &map))
            .collect();
        Self::with_order(&self.ambient, kept, self.order.clone())
    }

    /// `(I : (g))`, computed as `(I ∩ (g)) / g`.
    pub fn quotient_by(&self, g: &Polynomial) -> Result<IdealPresentation> {
        self.ambient.check_same(g.ambient())?;
        if g.is_zero() || self.contains(g)? {
            return Ok(Self::unit(&self.ambient).reordered(self.order.clone()));
        }
        if self.is_zero_ideal() {
            return Ok(self.clone());
        }
        let principal = IdealPresentation::new(&self.ambient, vec![g.clone()])?;
        let meet = self.intersection(&principal)?;
        let divisor = g.terms_in_order(&MonomialOrder::GrevLex);
        let mut engine =
            Engine::new(&MonomialOrder::GrevLex, self.ambient.field(), self.ambient.limits().gb_step_budget);
        let mut gens = Vec::with_capacity(meet.generators.len());
        for h in &meet.generators {
            let q = engine
                .divide_exact(&h.terms_in_order(&MonomialOrder::GrevLex), &divisor)?
                .expect("generators of I ∩ (g) are multiples of g");
            gens.push(Polynomial::from_sorted_or_not(&self.ambient, q));
        }
        Self::with_order(&self.ambient, gens, self.order.clone())
    }

    /// `(I : J) = ⋂_g (I : g)` over the generators of `J`; `(I : 0)` is the unit ideal.
    pub fn quotient(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        self.ambient.check_same(&other.ambient)?;
        let mut acc: Option<IdealPresentation> = None;
        for g in &other.generators {
            if g.is_zero() || self.contains(g)? {
                continue;
            }
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::unit(&self.ambient).reordered(self.order.clone())))
    }

    /// Generators of `I ∩ F_p[remaining variables]`, from the reduced basis
    /// under the block order eliminating `front`.
    pub fn eliminate(&self, front: &[usize]) -> Result<IdealPresentation> {
        if front.is_empty() {
            return Ok(self.clone());
        }
        let mask = front.iter().fold(0u64, |m, &i| m | (1 << i));
        let elim = self.reordered(MonomialOrder::elimination(front));
        let kept = elim.reduced_basis()?.iter().filter(|g| g.support_mask() & mask == 0).cloned().collect();
        Self::with_order(&self.ambient, kept, self.order.clone())
    }
}

