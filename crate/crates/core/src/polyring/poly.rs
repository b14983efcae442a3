use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::field::{FieldElement, PrimeField};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Computation budgets shared by every ideal living over an ambient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Reduction steps allowed in a single Groebner basis or normal form run.
    pub gb_step_budget: u64,
    /// Random linear combinations tried when searching a nonzerodivisor.
    pub nzd_retries: u32,
    /// Longest sequence accepted by the all-permutations regularity test.
    pub permutation_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { gb_step_budget: 1_000_000, nzd_retries: 64, permutation_bound: 5 }
    }
}

/// A named, ordered set of variables over a prime field. Two ambients are
/// the same ambient iff they have the same variable names and prime.
#[derive(Clone, Debug)]
pub struct Ambient {
    names: Vec<String>,
    field: PrimeField,
    limits: Limits,
}

impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.names == other.names
    }
}

impl Eq for Ambient {}

impl Ambient {
    pub const MAX_VARS: usize = 64;

    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        field: PrimeField,
        limits: Limits,
    ) -> Result<Arc<Ambient>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        assert!(names.len() <= Self::MAX_VARS, "at most {} variables", Self::MAX_VARS);
        Ok(Arc::new(Ambient { names, field, limits }))
    }

    /// Ambient with the default prime and limits; for tests and examples.
    pub fn with_vars(names: &[&str]) -> Arc<Ambient> {
        Self::new(names.iter().copied(), PrimeField::default(), Limits::default())
            .expect("distinct variable names")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The same ambient with one fresh variable appended. Returns the new
    /// ambient; the fresh variable is its last slot.
    pub fn with_fresh_var(&self, stem: &str) -> Arc<Ambient> {
        let mut name = stem.to_string();
        let mut k = 0;
        while self.names.contains(&name) {
            k += 1;
            name = format!("{stem}{k}");
        }
        let mut names = self.names.clone();
        names.push(name);
        Arc::new(Ambient { names, field: self.field, limits: self.limits })
    }

    pub fn describe(&self) -> String {
        format!("F_{}[{}]", self.field.modulus(), self.names.join(","))
    }

    pub(crate) fn check_same(self: &Arc<Self>, other: &Arc<Ambient>) -> Result<()> {
        if Arc::ptr_eq(self, other) || **self == **other {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { left: self.describe(), right: other.describe() })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: u32,
}

/// Sparse polynomial over the field of its ambient. Terms are kept with
/// nonzero coefficients, sorted decreasingly in grevlex (the canonical
/// display order).
#[derive(Clone, Debug)]
pub struct Polynomial {
    ambient: Arc<Ambient>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.ambient == *other.ambient
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ambient: &Arc<Ambient>) -> Self {
        Polynomial { ambient: ambient.clone(), terms: Vec::new() }
    }

    pub fn constant(ambient: &Arc<Ambient>, c: i64) -> Self {
        let c = ambient.field.from_i64(c);
        Self::from_terms(ambient, [(Monomial::one(ambient.nvars()), c)])
    }

    pub fn one(ambient: &Arc<Ambient>) -> Self {
        Self::constant(ambient, 1)
    }

    pub fn var(ambient: &Arc<Ambient>, index: usize) -> Self {
        Self::from_terms(ambient, [(Monomial::var(ambient.nvars(), index), 1)])
    }

    pub fn var_named(ambient: &Arc<Ambient>, name: &str) -> Result<Self> {
        Ok(Self::var(ambient, ambient.index_of(name)?))
    }

    /// Builds a polynomial from arbitrary terms: coefficients are reduced,
    /// like terms combined and zeros dropped.
    pub fn from_terms(ambient: &Arc<Ambient>, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let f = ambient.field;
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ambient.nvars());
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, c % f.modulus());
        }
        let terms = acc.into_iter().filter(|(_, c)| *c != 0).map(|(mono, coeff)| Term { mono, coeff });
        Self::from_sorted_or_not(ambient, terms.collect())
    }

    /// Terms must have distinct monomials and nonzero coefficients.
    pub(crate) fn from_sorted_or_not(ambient: &Arc<Ambient>, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(&b.mono, &a.mono));
        Polynomial { ambient: ambient.clone(), terms }
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn field(&self) -> PrimeField {
        self.ambient.field
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mono.degree();
                self.terms.iter().all(|t| t.mono.degree() == d)
            }
        }
    }

    /// Bitmask of the variables occurring in the polynomial.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |m, t| m | t.mono.support_mask())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ambient.check_same(&other.ambient)?;
        Ok(self.add_scaled(other, 1))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ambient.check_same(&other.ambient)?;
        Ok(self.add_scaled(other, self.field().neg(1)))
    }

    /// `self + c * other` by merging the sorted term lists.
    fn add_scaled(&self, other: &Polynomial, c: u32) -> Polynomial {
        let f = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match MonomialOrder::GrevLex.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { mono: b[j].mono.clone(), coeff: f.mul(c, b[j].coeff) });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(a[i].coeff, f.mul(c, b[j].coeff));
                    if s != 0 {
                        out.push(Term { mono: a[i].mono.clone(), coeff: s });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| Term { mono: t.mono.clone(), coeff: f.mul(c, t.coeff) }));
        out.retain(|t| t.coeff != 0);
        Polynomial { ambient: self.ambient.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field().neg(1))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.field();
        let c = c % f.modulus();
        if c == 0 {
            return Polynomial::zero(&self.ambient);
        }
        let terms = self.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: f.mul(c, t.coeff) });
        Polynomial { ambient: self.ambient.clone(), terms: terms.collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ambient.check_same(&other.ambient)?;
        let f = self.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                let m = s.mono.checked_mul(&t.mono)?;
                let e = acc.entry(m).or_insert(0);
                *e = f.add(*e, f.mul(s.coeff, t.coeff));
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| *c != 0).map(|(mono, coeff)| Term { mono, coeff });
        Ok(Self::from_sorted_or_not(&self.ambient, terms.collect()))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32) -> Polynomial {
        let f = self.field();
        let terms = self.terms.iter().map(|t| Term { mono: t.mono.mul(m), coeff: f.mul(c, t.coeff) });
        let mut p = Polynomial { ambient: self.ambient.clone(), terms: terms.collect() };
        p.terms.retain(|t| t.coeff != 0);
        p
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ambient);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Monomial, FieldElement)> {
        let t = self
            .terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.mono, &b.mono))
            .ok_or(Error::ZeroPolynomial)?;
        Ok((t.mono.clone(), self.field().element(t.coeff)))
    }

    /// Scales so that the leading coefficient under `ord` is one.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            Ok((_, c)) => self.scale(self.field().inv(c.value)),
            Err(_) => self.clone(),
        }
    }

    /// Terms sorted decreasingly under `ord`.
    pub fn terms_in_order(&self, ord: &MonomialOrder) -> Vec<Term> {
        let mut t = self.terms.clone();
        if *ord != MonomialOrder::GrevLex {
            t.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
        }
        t
    }

    /// Transports into `target`; variable `i` goes to slot `map[i]`.
    pub fn remap(&self, target: &Arc<Ambient>, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self.terms.iter().map(|t| Term { mono: t.mono.remap(map, n), coeff: t.coeff });
        Self::from_sorted_or_not(target, terms.collect())
    }

    /// Drops variables; every dropped variable must be absent from `self`.
    /// `keep[j]` is the source slot of target variable `j`.
    pub(crate) fn restrict(&self, target: &Arc<Ambient>, keep: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|t| {
            let e = t.mono.exponents();
            debug_assert_eq!(t.mono.degree(), keep.iter().map(|&i| e[i] as u32).sum::<u32>());
            Term { mono: Monomial::from_exponents(keep.iter().map(|&i| e[i])), coeff: t.coeff }
        });
        Self::from_sorted_or_not(target, terms.collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.field();
        for (k, t) in self.terms.iter().enumerate() {
            let c = field.signed(t.coeff);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", t.mono.display_with(&self.ambient.names))?;
            } else {
                write!(f, "{abs}*{}", t.mono.display_with(&self.ambient.names))?;
            }
        }
        Ok(())
    }
}
