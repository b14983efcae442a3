use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 10]>;

/// Exponent vector with one slot per ambient variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents<I: IntoIterator<Item = u16>>(exps: I) -> Self {
        Monomial { exps: exps.into_iter().collect() }
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product; panics on `u16` exponent overflow (see [`Monomial::checked_mul`]).
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Exponents::with_capacity(self.nvars());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial { exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Bitmask of [`Monomial::support`]; ambients are limited to 64 variables.
    pub fn support_mask(&self) -> u64 {
        self.support().fold(0, |m, i| m | (1 << i))
    }

    pub fn pow(&self, k: u16) -> Result<Monomial> {
        let mut exps = Exponents::with_capacity(self.nvars());
        for e in &self.exps {
            exps.push(e.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    /// Reindexes into an ambient of `nvars` variables; slot `i` moves to `map[i]`.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            m.exps[map[i]] = e;
        }
        m
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayMonomial { mono: self, names }
    }
}

struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
