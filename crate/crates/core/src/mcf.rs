//! Minus continued fractions `(a_1, a_2, …, a_m) = a_1 − 1/(a_2 − 1/(… − 1/a_m))`
//! and the two ways of writing enumeration terms with them.

use crate::arith::{QuadElem, Real};
use crate::enumeration::{EnumTag, Enumeration};
use crate::error::{domain, Error, Result};
use crate::stern::valuation;

/// A minus continued fraction `(a_1, …, a_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McfExpr {
    pub terms: Vec<QuadElem>,
}

impl McfExpr {
    pub fn new(terms: Vec<QuadElem>) -> Self {
        McfExpr { terms }
    }

    pub fn eval(&self) -> Result<QuadElem> {
        mcf_eval(&self.terms)
    }
}

/// Right-to-left fold `v ← a_i − 1/v` starting from `v = a_m`.
/// `ZeroDenominator { position }` names the 1-based term whose tail
/// evaluated to zero.
pub fn mcf_eval(terms: &[QuadElem]) -> Result<QuadElem> {
    let (last, rest) = terms
        .split_last()
        .ok_or_else(|| domain("empty continued fraction"))?;
    let mut v = last.clone();
    for (i, a) in rest.iter().enumerate().rev() {
        if v.is_zero() {
            return Err(Error::ZeroDenominator { position: i + 2 });
        }
        v = a.try_sub(&v.recip()?)?;
    }
    Ok(v)
}

/// The same fold over fixed-point reals.
pub fn mcf_eval_real(terms: &[Real]) -> Result<Real> {
    let (last, rest) = terms
        .split_last()
        .ok_or_else(|| domain("empty continued fraction"))?;
    let mut v = last.clone();
    for (i, a) in rest.iter().enumerate().rev() {
        if v.is_zero() {
            return Err(Error::ZeroDenominator { position: i + 2 });
        }
        v = a - &(&Real::from_int(1) / &v);
    }
    Ok(v)
}

/// `(α²v_n, v_{n−1}, α²v_{n−2}, …)` with `v_j = 2ν_N(j) + 1`; the scale
/// alternates starting with `α²` at `j = n`, so the last entry carries `α²`
/// when `n` is odd and `1` when `n` is even.
pub fn encode_valuation(e: &Enumeration, n: u64) -> Result<McfExpr> {
    if !e.tag.is_rational() {
        return Err(domain("valuation encoding is defined for r, s and t"));
    }
    if n == 0 {
        return Err(domain("enumeration indices start at 1"));
    }
    let terms = (1..=n)
        .rev()
        .enumerate()
        .map(|(pos, j)| {
            let v = e.embed_int(2 * i64::from(valuation(e.base(), j)?) + 1);
            Ok(if pos % 2 == 0 { &e.alpha_sq * &v } else { v })
        })
        .collect::<Result<_>>()?;
    Ok(McfExpr::new(terms))
}

/// Values of [`encode_valuation`] for `n = 1..=count`. The fold for `n`
/// consumes `j = 1, 2, …, n` and scales `v_j` by `α²` iff `j ≡ n (mod 2)`,
/// so one pass per parity class serves every `n`.
pub fn valuation_prefix(e: &Enumeration, count: usize) -> Result<Vec<QuadElem>> {
    if !e.tag.is_rational() {
        return Err(domain("valuation encoding is defined for r, s and t"));
    }
    let mut folds: [Option<QuadElem>; 2] = [None, None];
    let mut out = Vec::with_capacity(count);
    for j in 1..=count as u64 {
        let v = e.embed_int(2 * i64::from(valuation(e.base(), j)?) + 1);
        for (parity, fold) in folds.iter_mut().enumerate() {
            let a = if j % 2 == parity as u64 {
                &e.alpha_sq * &v
            } else {
                v.clone()
            };
            *fold = Some(match fold.take() {
                None => a,
                Some(prev) => a.try_sub(&prev.recip()?)?,
            });
        }
        out.push(folds[(j % 2) as usize].clone().expect("fold is seeded"));
    }
    Ok(out)
}

/// `ℓ_n` from `ℓ_0 = []`, `ℓ_{km} = 1+ℓ_m` (increment the head) and
/// `ℓ_{km+j} = 1*ℓ_{km+j−1}` (prepend 1).
pub fn digit_list(k: u64, n: u64) -> Result<Vec<u64>> {
    if k < 2 {
        return Err(domain("digit list base must be at least 2"));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let (m, j) = (n / k, n % k);
    let mut list = if m == 0 {
        Vec::new()
    } else {
        let mut head = digit_list(k, m)?;
        assert!(!head.is_empty(), "ℓ_m is nonempty for m ≥ 1");
        head[0] += 1;
        head
    };
    list.splice(0..0, std::iter::repeat_n(1, j as usize));
    Ok(list)
}

/// `α·(αℓ_{n,0}, αℓ_{n,1}, …)` in the exact ring of the enumeration with
/// base `k ∈ {2, 3, 4, 5}`.
pub fn term_from_list(k: u64, n: u64) -> Result<QuadElem> {
    let tag = match k {
        2 => EnumTag::R,
        3 => EnumTag::S,
        5 => EnumTag::T,
        4 => EnumTag::U,
        _ => return Err(domain("exact list terms need k in {2, 3, 4, 5}")),
    };
    let e = Enumeration::new(tag);
    let alpha = &e.family.alpha;
    let terms: Vec<QuadElem> = digit_list(k, n)?
        .iter()
        .map(|&l| alpha * &e.embed_int(l as i64))
        .collect();
    alpha.try_mul(&mcf_eval(&terms)?)
}

/// `2·cos(π/(k+1))` in fixed point.
pub fn chebyshev_scale(k: u64) -> Real {
    let theta = &Real::pi() / &Real::from_int(k + 1);
    let (c, _) = theta.cos_sin();
    &c + &c
}

/// The list construction over fixed-point reals, for any `k ≥ 2`.
pub fn term_from_list_real(k: u64, n: u64, alpha: &Real) -> Result<Real> {
    let terms: Vec<Real> = digit_list(k, n)?
        .iter()
        .map(|&l| alpha * &Real::from_int(l))
        .collect();
    Ok(alpha * &mcf_eval_real(&terms)?)
}
