//! Circle packings built from necklaces of mutually tangent circles.
//!
//! `C_{x,y}` is the circle tangent to the real axis at `x/y` with radius
//! `1/(2y²)`; `C_{1,0}` stands for the axis itself. Two circles are tangent
//! exactly when `|x₁y₂ − y₁x₂| = 1`.

use std::fmt;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{QuadElem, Radicand, Real};
use crate::error::{domain, Error, Result};
use crate::mobius::Mobius;
use crate::stern::{FamilyTag, SternFamily};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circle {
    pub x: QuadElem,
    pub y: QuadElem,
}

impl Circle {
    pub fn new(x: QuadElem, y: QuadElem) -> Self {
        Circle { x, y }
    }

    /// The axis `C_{1,0}`.
    pub fn is_line(&self) -> bool {
        self.y.is_zero()
    }

    /// Point of contact with the axis, `x/y`.
    pub fn tangency_point(&self) -> Option<QuadElem> {
        (!self.is_line()).then(|| &self.x / &self.y)
    }

    /// `1/(2y²)`.
    pub fn radius(&self) -> Option<QuadElem> {
        (!self.is_line()).then(|| {
            let two = QuadElem::integer(self.y.radicand(), 2);
            (&two * &(&self.y * &self.y)).recip().expect("y is nonzero")
        })
    }
}

impl fmt::Display for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C[{}, {}]", self.x, self.y)
    }
}

/// `|x₁y₂ − y₁x₂| = 1`, tested exactly.
pub fn tangent(c1: &Circle, c2: &Circle) -> bool {
    let det = &(&c1.x * &c2.y) - &(&c1.y * &c2.x);
    det.abs() == QuadElem::one(det.radicand())
}

/// `C_{ax+by, cx+dy}` for a matrix of determinant 1.
pub fn mobius_apply(m: &Mobius, c: &Circle) -> Result<Circle> {
    if m.det() != QuadElem::one(m.a.radicand()) {
        return Err(domain("Möbius action on circles needs determinant 1"));
    }
    let (x, y) = m.apply_vector(&c.x, &c.y);
    Ok(Circle::new(x, y))
}

/// The four packings, named after their necklaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PackingKind {
    /// Ford circles (necklace of 3, family `a`).
    Ford,
    /// Guettler–Mallows packing (necklace of 4, family `b`).
    GuettlerMallows,
    /// Necklace of 6, family `c`.
    Hex,
    /// Necklace of 5 over ℚ(φ), family `d`.
    Golden,
}

impl PackingKind {
    pub fn family_tag(self) -> FamilyTag {
        match self {
            PackingKind::Ford => FamilyTag::A,
            PackingKind::GuettlerMallows => FamilyTag::B,
            PackingKind::Hex => FamilyTag::C,
            PackingKind::Golden => FamilyTag::D,
        }
    }

    pub fn from_family(tag: FamilyTag) -> Self {
        match tag {
            FamilyTag::A => PackingKind::Ford,
            FamilyTag::B => PackingKind::GuettlerMallows,
            FamilyTag::C => PackingKind::Hex,
            FamilyTag::D => PackingKind::Golden,
        }
    }
}

/// Integer polynomial `p_n(x) = U_n(x/2)`, coefficients from degree 0 up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebPoly {
    pub coeffs: Vec<BigInt>,
}

impl ChebPoly {
    pub fn eval(&self, x: &QuadElem) -> QuadElem {
        let d = x.radicand();
        self.coeffs.iter().rev().fold(QuadElem::zero(d), |acc, c| {
            &(&acc * x) + &QuadElem::integer(d, c.clone())
        })
    }
}

impl fmt::Display for ChebPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let show_mag = !mag.is_one() || deg == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `p_0 = 1`, `p_1 = x`, `p_{n+1} = x·p_n − p_{n−1}`.
pub fn cheb_poly(n: usize) -> ChebPoly {
    let mut prev: Vec<BigInt> = vec![];
    let mut cur: Vec<BigInt> = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    ChebPoly { coeffs: cur }
}

/// A chain `C(p_{n−1}(α), p_n(α))`, `n = 0, 1, …`, ending at `C_{1,0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Necklace {
    pub alpha: QuadElem,
    pub chain: Vec<Circle>,
}

impl Necklace {
    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }
}

/// Follows the Chebyshev chain at `α` until it reaches the axis, or fails
/// with `NoTermination(max_len)`.
pub fn cheb_chain(alpha: &QuadElem, max_len: usize) -> Result<Necklace> {
    if max_len < 2 {
        return Err(domain("chain length bound must be at least 2"));
    }
    let d = alpha.radicand();
    let (mut prev, mut cur) = (QuadElem::zero(d), QuadElem::one(d));
    let mut chain = vec![Circle::new(prev.clone(), cur.clone())];
    while !cur.is_zero() {
        if chain.len() >= max_len {
            return Err(Error::NoTermination(max_len));
        }
        let next = &(alpha * &cur) - &prev;
        prev = cur;
        cur = next;
        chain.push(Circle::new(prev.clone(), cur.clone()));
    }
    Ok(Necklace {
        alpha: alpha.clone(),
        chain,
    })
}

/// Length of the Chebyshev chain at a fixed-point `α`, treating
/// `|p_n(α)| < 10^{-60}` as reaching the axis.
pub fn cheb_chain_len_real(alpha: &Real, max_len: usize) -> Result<usize> {
    let (mut prev, mut cur) = (Real::zero(), Real::from_int(1));
    let mut len = 1;
    while !cur.below_pow10(60) {
        if len >= max_len {
            return Err(Error::NoTermination(max_len));
        }
        let next = &(alpha * &cur) - &prev;
        prev = cur;
        cur = next;
        len += 1;
    }
    Ok(len)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `φ(2n+2)/2`, the degree of the largest irreducible factor of `U_n`.
pub fn totient_halved(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(domain("totient sequence starts at n = 1"));
    }
    Ok(totient(2 * n + 2) / 2)
}

/// The seed necklace of a family.
pub fn seed_chain(family: &SternFamily) -> Vec<Circle> {
    cheb_chain(&family.alpha, family.base as usize + 2)
        .expect("family scales are largest Chebyshev roots")
        .chain
}

/// `depth` rounds of inserting the family's circles
/// `C_{c_j a + e_j c, c_j b + e_j d}`, `j = 1, …, k−1`, between every
/// adjacent pair `C_{a,b}`, `C_{c,d}`.
pub fn packing(kind: PackingKind, depth: u32) -> Vec<Circle> {
    let family = kind.family_tag().family();
    let mut chain = seed_chain(&family);
    for _ in 0..depth {
        let mut next = Vec::with_capacity((chain.len() - 1) * family.base as usize + 1);
        for w in chain.windows(2) {
            let (p, q) = (&w[0], &w[1]);
            next.push(p.clone());
            for rule in &family.rules[1..] {
                next.push(Circle::new(rule.apply(&p.x, &q.x), rule.apply(&p.y, &q.y)));
            }
        }
        next.push(chain.last().expect("nonempty chain").clone());
        chain = next;
    }
    chain
}

/// Horizontal window `[x0, x1]` and pixels per unit length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Viewport {
    pub x0: BigRational,
    pub x1: BigRational,
    pub scale: u32,
}

impl Viewport {
    pub fn new(x0: BigRational, x1: BigRational, scale: u32) -> Result<Self> {
        if x0 >= x1 || scale == 0 {
            return Err(domain("viewport needs x0 < x1 and a positive scale"));
        }
        Ok(Viewport { x0, x1, scale })
    }

    pub fn unit() -> Self {
        Viewport::new(BigRational::zero(), BigRational::one(), 800).expect("valid")
    }
}

/// Writes an SVG 1.1 document with the axis and every circle whose point of
/// contact lies in the viewport. Returns the number of circles drawn.
pub fn render_svg<W: Write>(circles: &[Circle], view: &Viewport, out: &mut W) -> io::Result<usize> {
    const DIGITS: usize = 12;
    let d = circles.first().map_or(Radicand::Two, |c| c.y.radicand());
    let scale = QuadElem::integer(d, view.scale);
    let x0 = QuadElem::rational(d, &view.x0);
    let x1 = QuadElem::rational(d, &view.x1);
    let width = &(&x1 - &x0) * &scale;
    let height = scale.clone();
    let (w, h) = (width.to_decimal(DIGITS), height.to_decimal(DIGITS));
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )?;
    writeln!(
        out,
        r#"<line x1="0" y1="{h}" x2="{w}" y2="{h}" stroke="black" stroke-width="1"/>"#
    )?;
    let mut drawn = 0;
    for c in circles {
        let (Some(t), Some(r)) = (c.tangency_point(), c.radius()) else {
            continue;
        };
        let t = t.with_radicand(d).expect("one ring per packing");
        if t < x0 || t > x1 {
            continue;
        }
        let cx = &(&t - &x0) * &scale;
        let rr = &r * &scale;
        let cy = &height - &rr;
        writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="0.5"/>"#,
            cx.to_decimal(DIGITS),
            cy.to_decimal(DIGITS),
            rr.to_decimal(DIGITS)
        )?;
        drawn += 1;
    }
    writeln!(out, "</svg>")?;
    Ok(drawn)
}
