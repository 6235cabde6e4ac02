//! The four diatomic sequences `a`, `b`, `c`, `d` and their arrays.
//!
//! Every family satisfies `x_0 = 0`, `x_1 = 1` and a base-`k` digit recursion
//!
//! ```text
//! x_{kn+j} = c_j · x_n + e_j · x_{n+1},   j = 0, …, k−1
//! ```
//!
//! with `(c_0, e_0) = (1, 0)`. The same values also follow from the
//! three-term recurrence `x_{n+1} = α·x_n + x_{n−1} − 2·(x_{n−1} mod α·x_n)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{QuadElem, Radicand};
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    A,
    B,
    C,
    D,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 4] = [FamilyTag::A, FamilyTag::B, FamilyTag::C, FamilyTag::D];

    pub fn family(self) -> SternFamily {
        SternFamily::new(self)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::A => "a",
            FamilyTag::B => "b",
            FamilyTag::C => "c",
            FamilyTag::D => "d",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(FamilyTag::A),
            "b" => Ok(FamilyTag::B),
            "c" => Ok(FamilyTag::C),
            "d" => Ok(FamilyTag::D),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

/// One linear digit rule `x_{kn+j} = coef_n · x_n + coef_next · x_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitRule {
    pub coef_n: QuadElem,
    pub coef_next: QuadElem,
}

impl DigitRule {
    pub fn apply(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        &(&self.coef_n * x) + &(&self.coef_next * y)
    }
}

/// Descriptor of one diatomic family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SternFamily {
    pub tag: FamilyTag,
    /// Digit base `k` (2, 3, 5, 4 for A, B, C, D); also the valuation base.
    pub base: u64,
    pub radicand: Radicand,
    /// `α = 2·cos(π/(k+1))`: 1, √2, √3, φ.
    pub alpha: QuadElem,
    pub rules: Vec<DigitRule>,
    /// Coefficients of the generating factor `P` with `X(x) = P(x)·X(x^k)`.
    pub weights: Vec<QuadElem>,
}

impl SternFamily {
    pub fn new(tag: FamilyTag) -> Self {
        let (base, radicand, alpha) = match tag {
            FamilyTag::A => (2, Radicand::Two, QuadElem::one(Radicand::Two)),
            FamilyTag::B => (3, Radicand::Two, QuadElem::sqrt(Radicand::Two)),
            FamilyTag::C => (5, Radicand::Three, QuadElem::sqrt(Radicand::Three)),
            FamilyTag::D => (4, Radicand::Five, QuadElem::phi()),
        };
        let int = |n: i64| QuadElem::integer(radicand, n);
        let a = alpha.clone();
        let pairs: Vec<(QuadElem, QuadElem)> = match tag {
            FamilyTag::A => vec![(int(1), int(0)), (int(1), int(1))],
            FamilyTag::B => vec![(int(1), int(0)), (a.clone(), int(1)), (int(1), a.clone())],
            FamilyTag::C => vec![
                (int(1), int(0)),
                (a.clone(), int(1)),
                (int(2), a.clone()),
                (a.clone(), int(2)),
                (int(1), a.clone()),
            ],
            FamilyTag::D => vec![
                (int(1), int(0)),
                (a.clone(), int(1)),
                (a.clone(), a.clone()),
                (int(1), a.clone()),
            ],
        };
        let weights = match tag {
            FamilyTag::A => vec![int(1), int(1), int(1)],
            FamilyTag::B => vec![int(1), a.clone(), int(1), a.clone(), int(1)],
            FamilyTag::C => vec![
                int(1),
                a.clone(),
                int(2),
                a.clone(),
                int(1),
                a.clone(),
                int(2),
                a.clone(),
                int(1),
            ],
            FamilyTag::D => vec![
                int(1),
                a.clone(),
                a.clone(),
                int(1),
                a.clone(),
                a.clone(),
                int(1),
            ],
        };
        SternFamily {
            tag,
            base,
            radicand,
            alpha,
            rules: pairs
                .into_iter()
                .map(|(coef_n, coef_next)| DigitRule { coef_n, coef_next })
                .collect(),
            weights,
        }
    }

    pub fn zero(&self) -> QuadElem {
        QuadElem::zero(self.radicand)
    }

    pub fn one(&self) -> QuadElem {
        QuadElem::one(self.radicand)
    }

    /// The `k+1` values `rule_0(x, y), …, rule_{k−1}(x, y), y`, i.e. the
    /// children of the pair `(x_n, x_{n+1})` laid out consecutively.
    fn expand_pair(&self, x: &QuadElem, y: &QuadElem) -> Vec<QuadElem> {
        let mut out: Vec<QuadElem> = self.rules.iter().map(|r| r.apply(x, y)).collect();
        out.push(y.clone());
        out
    }

    /// `(x_n, x_{n+1})` by walking the base-`k` digits of `n` from the top.
    pub fn pair(&self, n: u64) -> (QuadElem, QuadElem) {
        let mut digits = Vec::new();
        let mut m = n;
        while m > 0 {
            digits.push((m % self.base) as usize);
            m /= self.base;
        }
        let mut x = self.zero();
        let mut y = self.one();
        for &j in digits.iter().rev() {
            let nx = self.rules[j].apply(&x, &y);
            let ny = if j + 1 < self.rules.len() {
                self.rules[j + 1].apply(&x, &y)
            } else {
                y
            };
            x = nx;
            y = ny;
        }
        (x, y)
    }

    /// `x_n`.
    pub fn term(&self, n: u64) -> QuadElem {
        self.pair(n).0
    }

    /// `x_0, …, x_count` by the three-term recurrence.
    pub fn prefix(&self, count: usize) -> Vec<QuadElem> {
        let mut out = Vec::with_capacity(count + 1);
        out.push(self.zero());
        if count == 0 {
            return out;
        }
        out.push(self.one());
        while out.len() <= count {
            let i = out.len();
            let next = self
                .three_term_next(&out[i - 2], &out[i - 1])
                .expect("terms x_n with n >= 1 are positive");
            out.push(next);
        }
        out
    }

    /// `x_0, …, x_count` by the digit rules, bottom-up.
    pub fn prefix_by_digits(&self, count: usize) -> Vec<QuadElem> {
        let k = self.base as usize;
        let mut out = Vec::with_capacity(count + 1);
        out.push(self.zero());
        if count >= 1 {
            out.push(self.one());
        }
        for n in 2..=count {
            let (m, j) = (n / k, n % k);
            let v = if j == 0 {
                out[m].clone()
            } else {
                self.rules[j].apply(&out[m], &out[m + 1])
            };
            out.push(v);
        }
        out
    }

    /// `α·cur + prev − 2·(prev mod α·cur)`.
    pub fn three_term_next(&self, prev: &QuadElem, cur: &QuadElem) -> Result<QuadElem> {
        if cur.signum() <= 0 {
            return Err(domain("three-term step needs a positive current term"));
        }
        let scaled = self.alpha.try_mul(cur)?;
        let rem = prev.modulo(&scaled)?;
        Ok(&(&scaled + prev) - &(&rem + &rem))
    }

    /// Row `k` of the diatomic array: `x_n` for `n ∈ [base^k, base^{k+1}]`.
    ///
    /// For `a` this is the classical Stern array with row 0 equal to `1 1`.
    /// For the other families the printed arrays start with an extra seed
    /// row `1 1`, so their row `k+1` is this row `k`.
    pub fn row(&self, k: u32) -> DiatomicRow {
        let lo = self.base.pow(k);
        let hi = lo * self.base;
        let start = self.pair(lo);
        // Walk the row with the digit recursion on the fly: the entries of
        // row k are the expansions of the consecutive pairs of row k−1.
        let values = if k == 0 {
            let mut v = vec![start.0, start.1];
            for n in (lo + 2)..=hi {
                v.push(self.term(n));
            }
            v
        } else {
            let prev = self.row(k - 1).values;
            let mut v = Vec::with_capacity((hi - lo + 1) as usize);
            for w in prev.windows(2) {
                let mut kids = self.expand_pair(&w[0], &w[1]);
                kids.pop();
                v.extend(kids);
            }
            v.push(prev.last().expect("rows are nonempty").clone());
            v
        };
        DiatomicRow {
            family: self.tag,
            k,
            values,
        }
    }

    /// `max { x_n : base^k ≤ n < base^{k+1} }`.
    pub fn row_max(&self, k: u32) -> QuadElem {
        self.row_maxima(k).pop().expect("at least one row")
    }

    /// Row maxima for rows `0..=k_max` (row `k` is `base^k ≤ n < base^{k+1}`),
    /// by a depth-first walk over the pairs `(x_n, x_{n+1})`; the children
    /// of `n` are `base·n + j`. Values are kept as `u + v·α` with machine
    /// integers, which is exact for every row that can be walked in practice.
    pub fn row_maxima(&self, k_max: u32) -> Vec<QuadElem> {
        let ring = AlphaRing::new(self);
        let rules: Vec<(AlphaInt, AlphaInt)> = self
            .rules
            .iter()
            .map(|r| (ring.coefficient(&r.coef_n), ring.coefficient(&r.coef_next)))
            .collect();
        let k = rules.len();
        let expand = |x: &AlphaInt, y: &AlphaInt, out: &mut Vec<AlphaInt>| {
            out.clear();
            for (c, e) in &rules {
                out.push(ring.add(&ring.mul(c, x), &ring.mul(e, y)));
            }
            out.push(*y);
        };
        let mut maxima: Vec<Option<AlphaInt>> = vec![None; k_max as usize + 1];
        let mut kids = Vec::with_capacity(k + 1);
        // Row 0 holds n = 1, …, base−1: the nonzero children of n = 0.
        expand(&AlphaInt(0, 0), &AlphaInt(1, 0), &mut kids);
        let mut stack: Vec<(u32, AlphaInt, AlphaInt)> =
            kids.windows(2).skip(1).map(|w| (0, w[0], w[1])).collect();
        while let Some((depth, x, y)) = stack.pop() {
            let slot = &mut maxima[depth as usize];
            match slot {
                Some(m) if ring.cmp(m, &x) != Ordering::Less => {}
                _ => *slot = Some(x),
            }
            if depth < k_max {
                expand(&x, &y, &mut kids);
                for w in kids.windows(2) {
                    stack.push((depth + 1, w[0], w[1]));
                }
            }
        }
        maxima
            .into_iter()
            .map(|m| ring.to_quad(&m.expect("every row is visited")))
            .collect()
    }
}

/// `u + v·α` with `α² = s + t·α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct AlphaInt(i128, i128);

struct AlphaRing {
    s: i128,
    t: i128,
    alpha: QuadElem,
    alpha_f: f64,
}

impl AlphaRing {
    fn new(fam: &SternFamily) -> Self {
        let (s, t) = match fam.tag {
            FamilyTag::A => (1, 0),
            FamilyTag::B => (2, 0),
            FamilyTag::C => (3, 0),
            FamilyTag::D => (1, 1),
        };
        AlphaRing {
            s,
            t,
            alpha: fam.alpha.clone(),
            alpha_f: fam.alpha.to_f64(),
        }
    }

    /// Coefficients are integers or integer multiples of `α`.
    fn coefficient(&self, x: &QuadElem) -> AlphaInt {
        let to_int = |v: &QuadElem| i128::try_from(v.p().clone()).expect("small coefficient");
        if x.is_integer() {
            return AlphaInt(to_int(x), 0);
        }
        let v = x.try_div(&self.alpha).expect("α is invertible");
        assert!(
            v.is_integer(),
            "digit coefficients are integers or multiples of α"
        );
        AlphaInt(0, to_int(&v))
    }

    fn to_quad(&self, x: &AlphaInt) -> QuadElem {
        let d = self.alpha.radicand();
        &QuadElem::integer(d, x.0) + &(&self.alpha * &QuadElem::integer(d, x.1))
    }

    fn add(&self, x: &AlphaInt, y: &AlphaInt) -> AlphaInt {
        AlphaInt(x.0 + y.0, x.1 + y.1)
    }

    fn mul(&self, x: &AlphaInt, y: &AlphaInt) -> AlphaInt {
        let bd = x.1 * y.1;
        AlphaInt(x.0 * y.0 + bd * self.s, x.0 * y.1 + x.1 * y.0 + bd * self.t)
    }

    fn cmp(&self, x: &AlphaInt, y: &AlphaInt) -> Ordering {
        if x == y {
            return Ordering::Equal;
        }
        let fx = x.0 as f64 + x.1 as f64 * self.alpha_f;
        let fy = y.0 as f64 + y.1 as f64 * self.alpha_f;
        if (fx - fy).abs() > 1e-9 * fx.abs().max(fy.abs()).max(1.0) {
            return fx.partial_cmp(&fy).expect("finite");
        }
        self.to_quad(x).cmp(&self.to_quad(y))
    }
}

/// One row of a diatomic array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiatomicRow {
    pub family: FamilyTag,
    pub k: u32,
    pub values: Vec<QuadElem>,
}

/// `ν_N(n) = max { j : N^j | n }`.
pub fn valuation(base: u64, n: u64) -> Result<u32> {
    if n == 0 {
        return Err(domain("valuation of zero is undefined"));
    }
    if base < 2 {
        return Err(domain("valuation base must be at least 2"));
    }
    let mut n = n;
    let mut j = 0;
    while n.is_multiple_of(base) {
        n /= base;
        j += 1;
    }
    Ok(j)
}

/// Integer value of a ring element known to be an integer (family `a`).
pub fn as_integer(x: &QuadElem) -> Option<BigInt> {
    x.is_integer().then(|| x.p().clone())
}
