use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `p + q·σ` where σ is a primitive sixth root of unity, `σ² = σ − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicSigma {
    pub p: BigInt,
    pub q: BigInt,
}

impl CyclotomicSigma {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        CyclotomicSigma {
            p: p.into(),
            q: q.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn sigma() -> Self {
        Self::new(0, 1)
    }

    /// `σ̄ = 1 − σ`.
    pub fn sigma_bar() -> Self {
        Self::new(1, -1)
    }

    /// Complex conjugate: `p + q·σ̄ = (p + q) − q·σ`.
    pub fn conj(&self) -> Self {
        CyclotomicSigma {
            p: &self.p + &self.q,
            q: -&self.q,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The integer value when the σ-component vanishes.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.q.is_zero().then_some(&self.p)
    }

    pub fn is_one(&self) -> bool {
        self.p.is_one() && self.q.is_zero()
    }
}

impl Add for &CyclotomicSigma {
    type Output = CyclotomicSigma;
    fn add(self, rhs: &CyclotomicSigma) -> CyclotomicSigma {
        CyclotomicSigma {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }
}

impl Mul for &CyclotomicSigma {
    type Output = CyclotomicSigma;
    fn mul(self, rhs: &CyclotomicSigma) -> CyclotomicSigma {
        // (a + bσ)(c + dσ) = ac + (ad + bc)σ + bd(σ − 1)
        let bd = &self.q * &rhs.q;
        CyclotomicSigma {
            p: &self.p * &rhs.p - &bd,
            q: &self.p * &rhs.q + &self.q * &rhs.p + bd,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sigma_identities() {
        let s = CyclotomicSigma::sigma();
        let sb = CyclotomicSigma::sigma_bar();
        assert!((&s * &sb).is_one());
        assert!((&s + &sb).is_one());
        assert_eq!(s.conj(), sb);
        assert!(s.pow(6).is_one());
        assert!(!s.pow(3).is_one());
        assert!(!s.pow(2).is_one());
    }

    fn elem() -> impl Strategy<Value = CyclotomicSigma> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(p, q)| CyclotomicSigma::new(p, q))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in elem(), y in elem(), z in elem()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        }
    }
}
