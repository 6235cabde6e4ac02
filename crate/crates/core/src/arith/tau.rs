use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::quad::{QuadElem, Radicand};

/// `(u + v√2) + (w + z√2)·τ` where `τ² = √2·τ + 1`.
///
/// τ and τ̄ = √2 − τ are the roots of `x² − √2·x − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TauElem {
    pub u: BigInt,
    pub v: BigInt,
    pub w: BigInt,
    pub z: BigInt,
}

/// Multiplication in ℤ[√2] on coefficient pairs.
fn mul_root2(a: (&BigInt, &BigInt), b: (&BigInt, &BigInt)) -> (BigInt, BigInt) {
    (a.0 * b.0 + a.1 * b.1 * 2, a.0 * b.1 + a.1 * b.0)
}

impl TauElem {
    pub fn new(
        u: impl Into<BigInt>,
        v: impl Into<BigInt>,
        w: impl Into<BigInt>,
        z: impl Into<BigInt>,
    ) -> Self {
        TauElem {
            u: u.into(),
            v: v.into(),
            w: w.into(),
            z: z.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0, 0, 0)
    }

    pub fn tau() -> Self {
        Self::new(0, 0, 1, 0)
    }

    pub fn tau_bar() -> Self {
        Self::new(0, 1, -1, 0)
    }

    pub fn is_root2_pure(&self) -> bool {
        self.w.is_zero() && self.z.is_zero()
    }

    /// The ℤ[√2] value when the τ-component vanishes.
    pub fn to_quad(&self) -> Option<QuadElem> {
        self.is_root2_pure().then(|| {
            QuadElem::new(Radicand::Two, self.u.clone(), self.v.clone(), BigInt::one())
                .expect("unit denominator")
        })
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
}

impl Add for &TauElem {
    type Output = TauElem;
    fn add(self, rhs: &TauElem) -> TauElem {
        TauElem {
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
            w: &self.w + &rhs.w,
            z: &self.z + &rhs.z,
        }
    }
}

impl Mul for &TauElem {
    type Output = TauElem;
    fn mul(self, rhs: &TauElem) -> TauElem {
        // (A + Bτ)(C + Dτ) = (AC + BD) + (AD + BC + √2·BD)τ
        let a = (&self.u, &self.v);
        let b = (&self.w, &self.z);
        let c = (&rhs.u, &rhs.v);
        let d = (&rhs.w, &rhs.z);
        let ac = mul_root2(a, c);
        let bd = mul_root2(b, d);
        let ad = mul_root2(a, d);
        let bc = mul_root2(b, c);
        // √2·(x + y√2) = 2y + x√2
        TauElem {
            u: ac.0 + &bd.0,
            v: ac.1 + &bd.1,
            w: ad.0 + bc.0 + &bd.1 * 2,
            z: ad.1 + bc.1 + bd.0,
        }
    }
}
