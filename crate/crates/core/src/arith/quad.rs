//! Exact elements of the real quadratic fields Q(√2), Q(√3) and Q(√5).
//!
//! An element is stored as `(p + q·√d) / r` with `r > 0` and
//! `gcd(p, q, r) = 1`. Ordering follows the real embedding and is decided
//! with integer arithmetic only.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// The square-free radicand of the ambient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radicand {
    Two,
    Three,
    Five,
}

impl Radicand {
    pub fn value(self) -> u32 {
        match self {
            Radicand::Two => 2,
            Radicand::Three => 3,
            Radicand::Five => 5,
        }
    }

    pub fn from_value(d: u32) -> Result<Self> {
        match d {
            2 => Ok(Radicand::Two),
            3 => Ok(Radicand::Three),
            5 => Ok(Radicand::Five),
            _ => Err(domain(format!(
                "unsupported radicand {d}; expected 2, 3 or 5"
            ))),
        }
    }

    fn big(self) -> BigInt {
        BigInt::from(self.value())
    }
}

/// `(p + q·√d) / r`, normalized.
///
/// Elements with `q = 0` are rationals; they combine with elements of any
/// radicand. Two irrational elements of different radicands never combine:
/// the `try_*` methods return [`Error::MixedRadicand`] and the operator
/// impls panic.
#[derive(Clone, Debug)]
pub struct QuadElem {
    d: Radicand,
    p: BigInt,
    q: BigInt,
    r: BigInt,
}

impl QuadElem {
    pub fn new(d: Radicand, p: BigInt, q: BigInt, r: BigInt) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(d, p, q, r))
    }

    fn normalized(d: Radicand, mut p: BigInt, mut q: BigInt, mut r: BigInt) -> Self {
        debug_assert!(!r.is_zero());
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        if !r.is_one() {
            let g = p.gcd(&q).gcd(&r);
            if !g.is_one() {
                p /= &g;
                q /= &g;
                r /= &g;
            }
        }
        QuadElem { d, p, q, r }
    }

    pub fn zero(d: Radicand) -> Self {
        Self::integer(d, 0)
    }

    pub fn one(d: Radicand) -> Self {
        Self::integer(d, 1)
    }

    pub fn integer(d: Radicand, n: impl Into<BigInt>) -> Self {
        QuadElem {
            d,
            p: n.into(),
            q: BigInt::zero(),
            r: BigInt::one(),
        }
    }

    pub fn rational(d: Radicand, x: &BigRational) -> Self {
        Self::normalized(d, x.numer().clone(), BigInt::zero(), x.denom().clone())
    }

    pub fn from_ratio(d: Radicand, num: i64, den: i64) -> Result<Self> {
        Self::new(d, num.into(), BigInt::zero(), den.into())
    }

    /// `√d`.
    pub fn sqrt(d: Radicand) -> Self {
        QuadElem {
            d,
            p: BigInt::zero(),
            q: BigInt::one(),
            r: BigInt::one(),
        }
    }

    /// The golden ratio `(1 + √5) / 2`.
    pub fn phi() -> Self {
        QuadElem {
            d: Radicand::Five,
            p: BigInt::one(),
            q: BigInt::one(),
            r: BigInt::from(2),
        }
    }

    /// `a + b·φ` with rational `a`, `b`.
    pub fn from_phi_basis(a: &BigRational, b: &BigRational) -> Self {
        let a = Self::rational(Radicand::Five, a);
        let b = Self::rational(Radicand::Five, b);
        &a + &(&b * &Self::phi())
    }

    /// Coordinates `(a, b)` with `self = a + b·φ`. Only meaningful in Q(√5)
    /// (or for rationals, where `b = 0`).
    pub fn to_phi_basis(&self) -> Result<(BigRational, BigRational)> {
        if !self.q.is_zero() && self.d != Radicand::Five {
            return Err(Error::MixedRadicand {
                left: self.d.value(),
                right: 5,
            });
        }
        // (p + q√5)/r with √5 = 2φ − 1
        let a = BigRational::new(&self.p - &self.q, self.r.clone());
        let b = BigRational::new(&self.q * 2, self.r.clone());
        Ok((a, b))
    }

    pub fn radicand(&self) -> Radicand {
        self.d
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.q.is_zero() && self.r.is_one()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.p.clone(), self.r.clone()))
    }

    /// Re-tag a rational element with another radicand. Fails for
    /// irrational elements of a different field.
    pub fn with_radicand(mut self, d: Radicand) -> Result<Self> {
        if self.d != d && !self.q.is_zero() {
            return Err(Error::MixedRadicand {
                left: self.d.value(),
                right: d.value(),
            });
        }
        self.d = d;
        Ok(self)
    }

    fn common(&self, other: &Self) -> Result<Radicand> {
        if self.d == other.d || other.q.is_zero() {
            Ok(self.d)
        } else if self.q.is_zero() {
            Ok(other.d)
        } else {
            Err(Error::MixedRadicand {
                left: self.d.value(),
                right: other.d.value(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.common(other)?;
        if self.r == other.r {
            return Ok(Self::normalized(
                d,
                &self.p + &other.p,
                &self.q + &other.q,
                self.r.clone(),
            ));
        }
        Ok(Self::normalized(
            d,
            &self.p * &other.r + &other.p * &self.r,
            &self.q * &other.r + &other.q * &self.r,
            &self.r * &other.r,
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common(other)?;
        if other.q.is_zero() && other.r.is_one() {
            return Ok(Self::normalized(
                d,
                &self.p * &other.p,
                &self.q * &other.p,
                self.r.clone(),
            ));
        }
        let p = &self.p * &other.p + &self.q * &other.q * d.big();
        let q = &self.p * &other.q + &self.q * &other.p;
        Ok(Self::normalized(d, p, q, &self.r * &other.r))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.recip()?)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // r / (p + q√d) = r(p − q√d) / (p² − d q²)
        let den = &self.p * &self.p - &self.q * &self.q * self.d.big();
        Ok(Self::normalized(
            self.d,
            &self.r * &self.p,
            -(&self.r * &self.q),
            den,
        ))
    }

    /// Galois conjugate `(p − q√d) / r`.
    pub fn conj(&self) -> Self {
        QuadElem {
            d: self.d,
            p: self.p.clone(),
            q: -&self.q,
            r: self.r.clone(),
        }
    }

    /// Field norm `x · x̄`.
    pub fn norm(&self) -> BigRational {
        let num = &self.p * &self.p - &self.q * &self.q * self.d.big();
        BigRational::new(num, &self.r * &self.r)
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Sign of the real embedding: −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        sign_of_surd(&self.p, &self.q, self.d)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// The unique integer `m` with `m ≤ x < m + 1`.
    pub fn floor(&self) -> BigInt {
        // s = ⌊q√d⌋, so p + q√d lies in [p + s, p + s + 1).
        let s = if self.q.is_zero() {
            BigInt::zero()
        } else {
            let root = (&self.q * &self.q * self.d.big()).sqrt();
            if self.q.is_positive() {
                root
            } else {
                -root - 1
            }
        };
        let lo = (&self.p + &s).div_floor(&self.r);
        let mut m = (&self.p + &s + BigInt::one()).div_floor(&self.r);
        while sign_of_surd(&(&self.p - &m * &self.r), &self.q, self.d) < 0 {
            m -= 1;
            debug_assert!(m >= lo);
        }
        m
    }

    /// `x mod y := x − y·⌊x/y⌋`, in `[0, y)` for `y > 0`.
    pub fn modulo(&self, y: &Self) -> Result<Self> {
        if y.signum() <= 0 {
            return Err(domain("modulus must be positive"));
        }
        let quot = self.try_div(y)?.floor();
        let d = self.common(y)?;
        self.try_sub(&y.try_mul(&QuadElem::integer(d, quot))?)
    }

    /// Fractional part `x − ⌊x⌋`.
    pub fn fract(&self) -> Self {
        self - &QuadElem::integer(self.d, self.floor())
    }

    /// Correctly rounded decimal expansion with `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = QuadElem::integer(self.d, BigInt::from(10u32).pow(digits as u32));
        let half = QuadElem::from_ratio(self.d, 1, 2).expect("nonzero denominator");
        let scaled = &(&self.abs() * &scale) + &half;
        let m = scaled.floor().to_string();
        let neg = self.signum() < 0 && m.chars().any(|c| c != '0');
        let padded = if m.len() <= digits {
            format!("{}{}", "0".repeat(digits + 1 - m.len()), m)
        } else {
            m
        };
        let (int, frac) = padded.split_at(padded.len() - digits);
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(int);
        if digits > 0 {
            out.push('.');
            out.push_str(frac);
        }
        out
    }

    /// Floating-point approximation of the real embedding.
    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        (p + q * f64::from(self.d.value()).sqrt()) / r
    }

    /// Exact comparison with a cheap floating-point prefilter. Only falls back
    /// to integer arithmetic when the approximations are too close to call.
    pub fn fast_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.to_f64(), other.to_f64());
        if a.is_finite() && b.is_finite() && (a - b).abs() > 1e-9 * (a.abs() + b.abs()) {
            return a.partial_cmp(&b).expect("finite");
        }
        self.cmp(other)
    }
}

/// Sign of `a + b·√d` for square-free `d`.
fn sign_of_surd(a: &BigInt, b: &BigInt, d: Radicand) -> i32 {
    let sa = sign_i32(a);
    let sb = sign_i32(b);
    if sa >= 0 && sb >= 0 {
        return (sa | sb).signum();
    }
    if sa <= 0 && sb <= 0 {
        return -1;
    }
    let a2 = a * a;
    let b2d = b * b * d.big();
    match a2.cmp(&b2d) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

fn sign_i32(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl PartialEq for QuadElem {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.q == other.q
            && self.r == other.r
            && (self.q.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadElem {}

impl Hash for QuadElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.q.hash(state);
        self.r.hash(state);
        if !self.q.is_zero() {
            self.d.hash(state);
        }
    }
}

impl Ord for QuadElem {
    /// Panics when comparing irrational elements of different fields.
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let diff = self.try_sub(other).unwrap_or_else(|e| panic!("{e}"));
        diff.signum().cmp(&0)
    }
}

impl PartialOrd for QuadElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            d: self.d,
            p: -&self.p,
            q: -&self.q,
            r: self.r.clone(),
        }
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            d: self.d,
            p: -self.p,
            q: -self.q,
            r: self.r,
        }
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $try:ident) => {
        impl $Trait<&QuadElem> for &QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &QuadElem) -> QuadElem {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $Trait<QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &QuadElem) -> QuadElem {
                (&self).$method(rhs)
            }
        }
        impl $Trait<QuadElem> for &QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

fn fmt_rational(f: &mut fmt::Formatter<'_>, x: &BigRational) -> fmt::Result {
    if x.is_integer() {
        write!(f, "{}", x.numer())
    } else {
        write!(f, "{}/{}", x.numer(), x.denom())
    }
}

/// Writes `a + b·name`, dropping zero parts and unit coefficients.
fn fmt_basis(
    f: &mut fmt::Formatter<'_>,
    a: &BigRational,
    b: &BigRational,
    name: &str,
) -> fmt::Result {
    if b.is_zero() {
        return fmt_rational(f, a);
    }
    if !a.is_zero() {
        fmt_rational(f, a)?;
        f.write_str(if b.is_negative() { "-" } else { "+" })?;
    } else if b.is_negative() {
        f.write_str("-")?;
    }
    let mag = b.abs();
    if !mag.is_one() {
        fmt_rational(f, &mag)?;
        f.write_str("*")?;
    }
    f.write_str(name)
}

impl fmt::Display for QuadElem {
    /// Rationals print as `p` or `p/r`; Q(√5) elements in the φ-basis
    /// (`1/2+phi`); Q(√2), Q(√3) elements as `(p+q*sqrt2)/r`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return fmt_rational(f, &BigRational::new(self.p.clone(), self.r.clone()));
        }
        match self.d {
            Radicand::Five => {
                let (a, b) = self.to_phi_basis().map_err(|_| fmt::Error)?;
                fmt_basis(f, &a, &b, "phi")
            }
            d => {
                let name = format!("sqrt{}", d.value());
                if self.r.is_one() {
                    fmt_basis(f, &self.p.clone().into(), &self.q.clone().into(), &name)
                } else {
                    f.write_str("(")?;
                    fmt_basis(f, &self.p.clone().into(), &self.q.clone().into(), &name)?;
                    write!(f, ")/{}", self.r)
                }
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QuadJson {
    d: u32,
    p: String,
    q: String,
    r: String,
}

impl Serialize for QuadElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuadJson {
            d: self.d.value(),
            p: self.p.to_string(),
            q: self.q.to_string(),
            r: self.r.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadElem {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = QuadJson::deserialize(de)?;
        let d = Radicand::from_value(raw.d).map_err(D::Error::custom)?;
        let int = |s: &str| s.parse::<BigInt>().map_err(D::Error::custom);
        QuadElem::new(d, int(&raw.p)?, int(&raw.q)?, int(&raw.r)?).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qe(d: Radicand, p: i64, q: i64, r: i64) -> QuadElem {
        QuadElem::new(d, p.into(), q.into(), r.into()).unwrap()
    }

    /// Interval oracle: bracket √d between two rationals with denominator
    /// 10^12 and evaluate x on both ends.
    fn interval_sign(x: &QuadElem) -> Option<i32> {
        let scale = BigInt::from(10u64).pow(12);
        let lo_root = (BigInt::from(x.radicand().value()) * &scale * &scale).sqrt();
        let hi_root = &lo_root + 1;
        let eval = |root: &BigInt| x.p() * &scale + x.q() * root;
        let (a, b) = (eval(&lo_root), eval(&hi_root));
        let (sa, sb) = (sign_i32(&a), sign_i32(&b));
        (sa == sb).then_some(sa)
    }

    #[test]
    fn sign_examples() {
        assert_eq!(qe(Radicand::Two, 1, 1, 1).signum(), 1);
        assert_eq!(qe(Radicand::Two, -3, 2, 1).signum(), -1);
        assert_eq!(qe(Radicand::Three, 0, 0, 1).signum(), 0);
        assert_eq!(interval_sign(&qe(Radicand::Two, -3, 2, 1)), Some(-1));
    }

    #[test]
    fn floor_examples() {
        assert_eq!(QuadElem::phi().floor(), BigInt::from(1));
        assert_eq!(QuadElem::sqrt(Radicand::Three).floor(), BigInt::from(1));
        assert_eq!(qe(Radicand::Two, 7, -2, 3).floor(), BigInt::from(1));
        assert_eq!(qe(Radicand::Two, -7, 2, 3).floor(), BigInt::from(-2));
        assert_eq!(qe(Radicand::Five, -4, 0, 2).floor(), BigInt::from(-2));
    }

    #[test]
    fn modulo_examples() {
        let one = QuadElem::one(Radicand::Two);
        let two = QuadElem::integer(Radicand::Two, 2);
        assert_eq!(one.modulo(&two).unwrap(), one);
        let s2 = QuadElem::sqrt(Radicand::Two);
        assert_eq!(one.modulo(&(&s2 * &s2)).unwrap(), one);
        let three_s2 = qe(Radicand::Two, 0, 3, 1);
        assert!(three_s2.modulo(&s2).unwrap().is_zero());
        assert!(one.modulo(&-&s2).is_err());
        assert!(one.modulo(&QuadElem::zero(Radicand::Two)).is_err());
    }

    #[test]
    fn decimal_examples() {
        assert_eq!(QuadElem::sqrt(Radicand::Two).to_decimal(5), "1.41421");
        assert_eq!(QuadElem::phi().to_decimal(5), "1.61803");
        assert_eq!(QuadElem::zero(Radicand::Three).to_decimal(5), "0.00000");
        assert_eq!((-QuadElem::sqrt(Radicand::Three)).to_decimal(3), "-1.732");
        assert_eq!(
            QuadElem::from_ratio(Radicand::Two, 1, 8)
                .unwrap()
                .to_decimal(2),
            "0.13"
        );
        assert_eq!(
            QuadElem::from_ratio(Radicand::Two, -1, 1000)
                .unwrap()
                .to_decimal(2),
            "0.00"
        );
    }

    #[test]
    fn phi_basis_round_trip() {
        let phi = QuadElem::phi();
        assert_eq!(&phi * &phi, &phi + &QuadElem::one(Radicand::Five));
        let (a, b) = phi.to_phi_basis().unwrap();
        assert!(a.is_zero() && b.is_one());
        let x =
            QuadElem::from_phi_basis(&BigRational::new(1.into(), 2.into()), &BigRational::one());
        assert_eq!(x.to_string(), "1/2+phi");
        assert_eq!(
            (QuadElem::integer(Radicand::Five, 3) - &phi).to_string(),
            "3-phi"
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(qe(Radicand::Two, 0, 3, 1).to_string(), "3*sqrt2");
        assert_eq!(qe(Radicand::Three, 1, -1, 2).to_string(), "(1-sqrt3)/2");
        assert_eq!(qe(Radicand::Two, 4, 0, 6).to_string(), "2/3");
    }

    #[test]
    fn mixed_radicands_rejected() {
        let a = QuadElem::sqrt(Radicand::Two);
        let b = QuadElem::sqrt(Radicand::Three);
        assert!(matches!(a.try_add(&b), Err(Error::MixedRadicand { .. })));
        let half = QuadElem::from_ratio(Radicand::Three, 1, 2).unwrap();
        assert_eq!(a.try_mul(&half).unwrap(), qe(Radicand::Two, 0, 1, 2));
    }

    #[test]
    fn normalization_and_equality() {
        assert_eq!(qe(Radicand::Two, 2, 4, 6), qe(Radicand::Two, 1, 2, 3));
        assert_eq!(qe(Radicand::Two, 1, 1, -1), qe(Radicand::Two, -1, -1, 1));
        assert_eq!(QuadElem::one(Radicand::Two), QuadElem::one(Radicand::Five));
        assert_ne!(
            QuadElem::sqrt(Radicand::Two),
            QuadElem::sqrt(Radicand::Three)
        );
    }

    #[test]
    fn json_schema() {
        let x = qe(Radicand::Five, 1, 1, 2);
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v, serde_json::json!({"d": 5, "p": "1", "q": "1", "r": "2"}));
        let back: QuadElem = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
        let bad = serde_json::json!({"d": 7, "p": "1", "q": "1", "r": "2"});
        assert!(serde_json::from_value::<QuadElem>(bad).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn radicand() -> impl Strategy<Value = Radicand> {
            prop_oneof![
                Just(Radicand::Two),
                Just(Radicand::Three),
                Just(Radicand::Five)
            ]
        }

        fn elem(d: Radicand) -> impl Strategy<Value = QuadElem> {
            (-10_000i64..10_000, -10_000i64..10_000, 1i64..500)
                .prop_map(move |(p, q, r)| qe(d, p, q, r))
        }

        fn triple() -> impl Strategy<Value = (QuadElem, QuadElem, QuadElem)> {
            radicand().prop_flat_map(|d| (elem(d), elem(d), elem(d)))
        }

        proptest! {
            #[test]
            fn field_axioms((x, y, z) in triple()) {
                prop_assert_eq!(&x + &y, &y + &x);
                prop_assert_eq!(&x * &y, &y * &x);
                prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
                prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
                if !x.is_zero() {
                    prop_assert!((&x * &x.recip().unwrap()).is_integer());
                    prop_assert_eq!(&x * &x.recip().unwrap(), QuadElem::one(x.radicand()));
                }
            }

            #[test]
            fn order_compatibility((x, y, z) in triple()) {
                if x < y {
                    prop_assert!(&x + &z < &y + &z);
                }
                if x.is_positive() && y.is_positive() {
                    prop_assert!((&x * &y).is_positive());
                }
            }

            #[test]
            fn floor_mod_contract((x, y, _z) in triple()) {
                let y = y.abs();
                prop_assume!(!y.is_zero());
                let m = x.modulo(&y).unwrap();
                prop_assert!(m.signum() >= 0);
                prop_assert!(m < y);
                let q = (&x / &y).floor();
                prop_assert_eq!(&(&y * &QuadElem::integer(x.radicand(), q)) + &m, x.clone());
                let f = x.floor();
                let fe = QuadElem::integer(x.radicand(), f.clone());
                prop_assert!(fe <= x && x < &fe + &QuadElem::one(x.radicand()));
            }

            #[test]
            fn conjugation_is_homomorphism((x, y, _z) in triple()) {
                prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
                prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
                let n = &x * &x.conj();
                prop_assert!(n.is_rational());
                prop_assert_eq!(n.to_rational().unwrap(), x.norm());
            }

            #[test]
            fn json_round_trip((x, _y, _z) in triple()) {
                let s = serde_json::to_string(&x).unwrap();
                prop_assert_eq!(serde_json::from_str::<QuadElem>(&s).unwrap(), x);
            }
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(10_000))]

            #[test]
            fn sign_matches_interval_oracle(d in radicand(), p in -1_000_000i64..1_000_000, q in -1_000_000i64..1_000_000) {
                let x = qe(d, p, q, 1);
                if let Some(s) = interval_sign(&x) {
                    prop_assert_eq!(x.signum(), s);
                }
            }
        }
    }
}
