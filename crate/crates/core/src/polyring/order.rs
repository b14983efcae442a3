use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseOrder {
    Lex,
    GrevLex,
}

/// A monomial order. Variable `0` is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order: monomials are compared on the `front` variables
    /// first, then on the remaining ones, each time with `inner`.
    Block { front: Vec<usize>, inner: BaseOrder },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

impl MonomialOrder {
    /// Block order eliminating `front`, grevlex inside both blocks.
    pub fn elimination(front: &[usize]) -> Self {
        let mut front = front.to_vec();
        front.sort_unstable();
        front.dedup();
        MonomialOrder::Block { front, inner: BaseOrder::GrevLex }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch { left: a.nvars(), right: b.nvars() });
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison without the length check.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => lex(ea, eb, 0..ea.len()),
            MonomialOrder::GrevLex => grevlex(ea, eb, 0..ea.len()),
            MonomialOrder::Block { front, inner } => {
                let n = ea.len();
                let in_front = |i: &usize| front.binary_search(i).is_ok();
                let front_idx = (0..n).filter(in_front);
                let rest_idx = (0..n).filter(|i| !in_front(i));
                match inner {
                    BaseOrder::Lex => lex(ea, eb, front_idx).then_with(|| lex(ea, eb, rest_idx)),
                    BaseOrder::GrevLex => {
                        grevlex(ea, eb, front_idx).then_with(|| grevlex(ea, eb, rest_idx))
                    }
                }
            }
        }
    }
}

#[inline]
fn lex(a: &[u16], b: &[u16], idx: impl Iterator<Item = usize>) -> Ordering {
    for i in idx {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex(a: &[u16], b: &[u16], idx: impl DoubleEndedIterator<Item = usize> + Clone) -> Ordering {
    let (da, db) = idx.clone().fold((0u32, 0u32), |(x, y), i| (x + a[i] as u32, y + b[i] as u32));
    if da != db {
        return da.cmp(&db);
    }
    for i in idx.rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}
