use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 32003;

/// The prime field F_p. Residues are stored as `u32` in `[0, p)`; products
/// are formed in `u64`, so `p` must stay below 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(a != 0, "inverse of zero");
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        t0.rem_euclid(self.p as i64) as u32
    }

    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn from_u64(self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for display.
    pub fn signed(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn element(self, value: u32) -> FieldElement {
        FieldElement { value: value % self.p, modulus: self.p }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElement {
    pub value: u32,
    pub modulus: u32,
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(32003).is_ok());
        assert_eq!(PrimeField::new(32004), Err(Error::NotPrime(32004)));
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::default();
        for a in [1u32, 2, 3, 17, 16001, 32002] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.inv(2), 2);
        assert_eq!(f3.from_i64(-1), 2);
        assert_eq!(f3.signed(2), -1);
    }
}
