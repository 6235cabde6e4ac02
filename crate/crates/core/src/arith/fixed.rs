//! Binary fixed-point reals and complex numbers with 320 fractional bits
//! (about 96 decimal digits). Used where a quantity is irrational beyond
//! what the quadratic fields cover: roots of unity and `2·cos(π/(k+1))`
//! for `k > 5`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::quad::QuadElem;

pub const FRAC_BITS: u32 = 320;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Real {
    mant: BigInt,
}

impl Real {
    fn from_mant(mant: BigInt) -> Self {
        Real { mant }
    }

    pub fn zero() -> Self {
        Real::from_mant(BigInt::zero())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Real::from_mant(n.into() << FRAC_BITS)
    }

    pub fn from_rational(x: &BigRational) -> Self {
        Real::from_mant((x.numer() << FRAC_BITS) / x.denom())
    }

    pub fn from_quad(x: &QuadElem) -> Self {
        let root = Real::sqrt_int(x.radicand().value());
        let num = &Real::from_int(x.p().clone()) + &(&Real::from_int(x.q().clone()) * &root);
        &num / &Real::from_int(x.r().clone())
    }

    /// `√n` for a non-negative integer.
    pub fn sqrt_int(n: u32) -> Self {
        Real::from_mant((BigInt::from(n) << (2 * FRAC_BITS)).sqrt())
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.mant.is_negative(), "square root of a negative number");
        Real::from_mant((&self.mant << FRAC_BITS).sqrt())
    }

    /// π by Machin's formula.
    pub fn pi() -> Self {
        let atan_inv = |x: u32| {
            // atan(1/x) = Σ (−1)^k / ((2k+1) x^{2k+1})
            let x2 = BigInt::from(x) * x;
            let mut power = (BigInt::from(1) << FRAC_BITS) / x;
            let mut sum = BigInt::zero();
            let mut k = 0u32;
            while !power.is_zero() {
                let term = &power / (2 * k + 1);
                if k.is_multiple_of(2) {
                    sum += term;
                } else {
                    sum -= term;
                }
                power /= &x2;
                k += 1;
            }
            sum
        };
        Real::from_mant(atan_inv(5) * 16 - atan_inv(239) * 4)
    }

    /// `(cos x, sin x)` by Taylor series after reduction into `[−π, π]`.
    pub fn cos_sin(&self) -> (Real, Real) {
        let pi = Real::pi();
        let two_pi = &pi + &pi;
        let turns = (&(self + &pi) / &two_pi).floor();
        let x = self - &(&two_pi * &Real::from_int(turns));
        let mut cos = Real::zero();
        let mut sin = Real::zero();
        // term_k = x^k / k!
        let mut term = Real::from_int(1);
        let mut k = 0u32;
        while !term.mant.is_zero() {
            match k % 4 {
                0 => cos = &cos + &term,
                1 => sin = &sin + &term,
                2 => cos = &cos - &term,
                _ => sin = &sin - &term,
            }
            k += 1;
            term = Real::from_mant((&term * &x).mant / k);
            if k > 4 * FRAC_BITS {
                break;
            }
        }
        (cos, sin)
    }

    pub fn floor(&self) -> BigInt {
        &self.mant >> FRAC_BITS
    }

    pub fn abs(&self) -> Self {
        Real::from_mant(self.mant.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        // keep 64 significant bits before converting
        let shift = self.mant.bits().saturating_sub(64);
        let top = (&self.mant >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(shift as i32 - FRAC_BITS as i32)
    }

    /// `|self| < 10^(-exp)`.
    pub fn below_pow10(&self, exp: u32) -> bool {
        let bound = (BigInt::from(1) << FRAC_BITS) / BigInt::from(10u32).pow(exp);
        self.mant.abs() < bound
    }

    /// Round to `digits` decimal places and return the scaled integer.
    pub fn round_decimal(&self, digits: u32) -> BigInt {
        let scaled = &self.mant * BigInt::from(10u32).pow(digits);
        let half = BigInt::from(1) << (FRAC_BITS - 1);
        (scaled + half) >> FRAC_BITS
    }
}

impl Add for &Real {
    type Output = Real;
    fn add(self, rhs: &Real) -> Real {
        Real::from_mant(&self.mant + &rhs.mant)
    }
}

impl Sub for &Real {
    type Output = Real;
    fn sub(self, rhs: &Real) -> Real {
        Real::from_mant(&self.mant - &rhs.mant)
    }
}

impl Mul for &Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        Real::from_mant((&self.mant * &rhs.mant) >> FRAC_BITS)
    }
}

impl Div for &Real {
    type Output = Real;
    /// Panics on division by zero.
    fn div(self, rhs: &Real) -> Real {
        Real::from_mant((&self.mant << FRAC_BITS) / &rhs.mant)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::from_mant(-&self.mant)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        Complex {
            re,
            im: Real::zero(),
        }
    }

    /// `e^{iθ}`.
    pub fn expi(theta: &Real) -> Self {
        let (c, s) = theta.cos_sin();
        Complex::new(c, s)
    }

    pub fn abs(&self) -> Real {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }

    /// Horner evaluation of `Σ coeffs[i]·z^i`.
    pub fn eval_poly(coeffs: &[Real], z: &Complex) -> Complex {
        coeffs
            .iter()
            .rev()
            .fold(Complex::from_real(Real::zero()), |acc, c| {
                &(&acc * z) + &Complex::from_real(c.clone())
            })
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}
