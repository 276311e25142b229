//! Arithmetic in small prime fields GF(q).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Primes supported by the field layer.
pub const SUPPORTED_PRIMES: [u8; 6] = [2, 3, 5, 7, 11, 13];

/// A field element, always held as its canonical residue in `[0, q)`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Fe(pub u8);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The prime field GF(q). All arithmetic on [`Fe`] goes through this.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    q: u8,
}

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        match u8::try_from(q) {
            Ok(q) if SUPPORTED_PRIMES.contains(&q) => Ok(Field { q }),
            _ => Err(Error::domain(format!(
                "field order {q} is not a supported prime (expected one of {SUPPORTED_PRIMES:?})"
            ))),
        }
    }

    #[inline]
    pub fn q(self) -> u8 {
        self.q
    }

    #[inline]
    pub fn order(self) -> usize {
        self.q as usize
    }

    /// Reduce an arbitrary integer to its canonical residue.
    #[inline]
    pub fn elem(self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.q as i64) as u8)
    }

    pub fn elements(self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    #[inline]
    pub fn add(self, a: Fe, b: Fe) -> Fe {
        let s = a.0 as u16 + b.0 as u16;
        Fe((s % self.q as u16) as u8)
    }

    #[inline]
    pub fn sub(self, a: Fe, b: Fe) -> Fe {
        let s = a.0 as u16 + self.q as u16 - b.0 as u16;
        Fe((s % self.q as u16) as u8)
    }

    #[inline]
    pub fn neg(self, a: Fe) -> Fe {
        self.sub(Fe::ZERO, a)
    }

    #[inline]
    pub fn mul(self, a: Fe, b: Fe) -> Fe {
        Fe(((a.0 as u16 * b.0 as u16) % self.q as u16) as u8)
    }

    pub fn pow(self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat: a^(q-2).
    pub fn inv(self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        for q in [0, 1, 4, 6, 9, 17, 256] {
            assert!(Field::new(q).is_err(), "q={q}");
        }
        for q in SUPPORTED_PRIMES {
            assert!(Field::new(q as u32).is_ok());
        }
    }

    #[test]
    fn small_examples() {
        let f2 = Field::new(2).unwrap();
        assert_eq!(f2.add(Fe(1), Fe(1)), Fe(0));
        let f3 = Field::new(3).unwrap();
        assert_eq!(f3.inv(Fe(2)).unwrap(), Fe(2));
        let f5 = Field::new(5).unwrap();
        assert_eq!(f5.pow(Fe(2), 4), Fe(1));
        assert!(f5.inv(Fe(0)).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in SUPPORTED_PRIMES {
            let f = Field::new(q as u32).unwrap();
            for a in f.elements() {
                assert_eq!(f.pow(a, q as u64), a);
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(f.sub(a, b), b), a);
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
