//! The enumerations `r`, `s`, `t` (of the positive rationals) and `u`
//! (conjecturally of the positive elements of ℚ(φ)).
//!
//! Each is produced five ways: as scaled ratios of a diatomic sequence, by
//! the recurrence `x ↦ α²(2⌊1/x⌋ + 1 − 1/x)`, by the semi-recursive formula
//! with the valuation `ν_N`, by descending the tree of the contraction `F`,
//! and by the greedy rule.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{QuadElem, Radicand};
use crate::error::{domain, Error, Result};
use crate::mobius::Mobius;
use crate::stern::{valuation, FamilyTag, SternFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EnumTag {
    R,
    S,
    T,
    U,
}

impl EnumTag {
    pub const ALL: [EnumTag; 4] = [EnumTag::R, EnumTag::S, EnumTag::T, EnumTag::U];

    pub fn family_tag(self) -> FamilyTag {
        match self {
            EnumTag::R => FamilyTag::A,
            EnumTag::S => FamilyTag::B,
            EnumTag::T => FamilyTag::C,
            EnumTag::U => FamilyTag::D,
        }
    }

    /// `r`, `s`, `t` take rational values.
    pub fn is_rational(self) -> bool {
        self != EnumTag::U
    }

    pub fn enumeration(self) -> Enumeration {
        Enumeration::new(self)
    }
}

impl fmt::Display for EnumTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EnumTag::R => "r",
            EnumTag::S => "s",
            EnumTag::T => "t",
            EnumTag::U => "u",
        };
        f.write_str(s)
    }
}

impl FromStr for EnumTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r" => Ok(EnumTag::R),
            "s" => Ok(EnumTag::S),
            "t" => Ok(EnumTag::T),
            "u" => Ok(EnumTag::U),
            other => Err(Error::Parse(format!("unknown enumeration `{other}`"))),
        }
    }
}

/// The piecewise-Möbius parent map `F`.
///
/// Breakpoints `0 = a_0 < a_1 < … < a_{k−1} = α²`; on `(a_{j−1}, a_j)` the
/// branch is `x ↦ a_j(x − a_{j−1})/(a_j − x)` and on `(α², ∞)` it is
/// `x ↦ x − α²`. The fixed points are `a_1, …, a_{k−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub breakpoints: Vec<QuadElem>,
    /// `branches[j−1]` acts on the `j`-th interval, `j = 1, …, k`.
    pub branches: Vec<Mobius>,
}

impl Contraction {
    /// Builds `F` from `α` with breakpoints `α·M^n(0)`, `M(x) = 1/(α − x)`,
    /// iterated until the orbit reaches `∞`.
    pub fn build(alpha: &QuadElem, base: usize) -> Result<Contraction> {
        let d = alpha.radicand();
        let zero = QuadElem::zero(d);
        let one = QuadElem::one(d);
        // projective orbit (num : den) of 0 under (0 1; −1 α)
        let step = Mobius::new(zero.clone(), one.clone(), -&one, alpha.clone());
        let (mut num, mut den) = (zero.clone(), one.clone());
        let mut breakpoints = Vec::new();
        while !den.is_zero() {
            if breakpoints.len() > base {
                return Err(Error::Internal(format!(
                    "breakpoint orbit did not reach infinity within {} steps",
                    base + 1
                )));
            }
            breakpoints.push(alpha * &num.try_div(&den)?);
            (num, den) = step.apply_vector(&num, &den);
        }
        if breakpoints.len() != base {
            return Err(Error::Internal(format!(
                "expected {base} breakpoints, found {}",
                breakpoints.len()
            )));
        }
        let alpha_sq = alpha * alpha;
        if breakpoints.last() != Some(&alpha_sq) {
            return Err(Error::Internal("last breakpoint differs from α²".into()));
        }
        let mut branches = Vec::with_capacity(base);
        for j in 1..base {
            let (lo, hi) = (&breakpoints[j - 1], &breakpoints[j]);
            branches.push(Mobius::new(hi.clone(), -&(hi * lo), -&one, hi.clone()));
        }
        branches.push(Mobius::new(one.clone(), -&alpha_sq, zero, one));
        Ok(Contraction {
            breakpoints,
            branches,
        })
    }

    pub fn base(&self) -> usize {
        self.breakpoints.len()
    }

    pub fn fixed_set(&self) -> &[QuadElem] {
        &self.breakpoints[1..]
    }

    /// `F(x)`.
    pub fn apply(&self, x: &QuadElem) -> Result<QuadElem> {
        match self.parent(x) {
            Ok((y, _)) => Ok(y),
            Err(Error::IsRoot(_)) => Ok(x.clone()),
            Err(e) => Err(e),
        }
    }

    /// `(F(x), digit)` where digit `0` is the branch on `(α², ∞)` and digit
    /// `k−1` the branch on `(0, 1)`.
    pub fn parent(&self, x: &QuadElem) -> Result<(QuadElem, usize)> {
        if x.signum() <= 0 {
            return Err(domain("parent needs a positive argument"));
        }
        let k = self.base();
        // first breakpoint that is >= x
        let pos = self.breakpoints.partition_point(|a| a < x);
        if pos < k && &self.breakpoints[pos] == x {
            return Err(Error::IsRoot(k - pos));
        }
        // x lies in interval j = pos (1-based), digit k − j
        let y = self.branches[pos - 1].apply(x)?;
        Ok((y, k - pos))
    }

    /// The `k` values whose parent is `x`, in digit order.
    pub fn children(&self, x: &QuadElem) -> Result<Vec<QuadElem>> {
        if x.signum() <= 0 {
            return Err(domain("children need a positive argument"));
        }
        let k = self.base();
        (0..k).map(|digit| self.child(x, digit)).collect()
    }

    pub fn child(&self, x: &QuadElem, digit: usize) -> Result<QuadElem> {
        let j = self.base() - digit;
        self.branches[j - 1].inverse().apply(x)
    }
}

/// `Φ(a/b) = a + b` for a positive rational in lowest terms.
pub fn phi_measure(x: &BigRational) -> Result<BigInt> {
    if !x.is_positive() {
        return Err(Error::NotPositive);
    }
    Ok(x.numer() + x.denom())
}

/// One of the four enumerations together with its sequence and tree.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub tag: EnumTag,
    pub family: SternFamily,
    pub alpha_sq: QuadElem,
    pub contraction: Contraction,
}

impl Enumeration {
    pub fn new(tag: EnumTag) -> Self {
        let family = tag.family_tag().family();
        let alpha_sq = &family.alpha * &family.alpha;
        let contraction = Contraction::build(&family.alpha, family.base as usize)
            .expect("the four scales give terminating breakpoint orbits");
        Enumeration {
            tag,
            family,
            alpha_sq,
            contraction,
        }
    }

    pub fn base(&self) -> u64 {
        self.family.base
    }

    pub fn radicand(&self) -> Radicand {
        self.family.radicand
    }

    /// `roots[i−1]` is the value at index `i`, `1 ≤ i < k`.
    pub fn roots(&self) -> Vec<QuadElem> {
        self.contraction.breakpoints[1..]
            .iter()
            .rev()
            .cloned()
            .collect()
    }

    fn check_value(&self, x: QuadElem) -> Result<QuadElem> {
        if self.tag.is_rational() && !x.is_rational() {
            return Err(Error::Internal(format!(
                "{} produced an irrational value {x}",
                self.tag
            )));
        }
        Ok(x)
    }

    fn require_index(n: u64) -> Result<()> {
        if n == 0 {
            return Err(domain("enumeration indices start at 1"));
        }
        Ok(())
    }

    /// `α·x_{n+1}/x_n`.
    pub fn term_by_ratio(&self, n: u64) -> Result<QuadElem> {
        Self::require_index(n)?;
        let (x, y) = self.family.pair(n);
        self.check_value(self.family.alpha.try_mul(&y)?.try_div(&x)?)
    }

    /// Terms `1..=count` as ratios of a sequence prefix.
    pub fn ratio_prefix(&self, count: usize) -> Result<Vec<QuadElem>> {
        let seq = self.family.prefix(count + 1);
        seq.windows(2)
            .skip(1)
            .map(|w| self.check_value(self.family.alpha.try_mul(&w[1])?.try_div(&w[0])?))
            .collect()
    }

    /// `α²(2⌊1/x⌋ + 1 − 1/x)`.
    pub fn recurrence_step(&self, x: &QuadElem) -> Result<QuadElem> {
        let inv = x.recip()?;
        let fl = QuadElem::integer(self.radicand(), inv.floor() * 2 + 1);
        self.alpha_sq.try_mul(&fl.try_sub(&inv)?)
    }

    pub fn term_by_recurrence(&self, n: u64) -> Result<QuadElem> {
        Self::require_index(n)?;
        let mut x = self.alpha_sq.clone();
        for _ in 1..n {
            x = self.recurrence_step(&x)?;
        }
        Ok(x)
    }

    pub fn recurrence_prefix(&self, count: usize) -> Result<Vec<QuadElem>> {
        let mut out = Vec::with_capacity(count);
        let mut x = self.alpha_sq.clone();
        for i in 0..count {
            if i > 0 {
                x = self.recurrence_step(&x)?;
            }
            out.push(x.clone());
        }
        Ok(out)
    }

    /// `α²(2ν_N(n) + 1 − 1/x_{n−1})` with `1/x_0 = 0`.
    fn semirecursive_step(&self, n: u64, prev: Option<&QuadElem>) -> Result<QuadElem> {
        let nu = valuation(self.base(), n)?;
        let mut v = QuadElem::integer(self.radicand(), 2 * nu + 1);
        if let Some(p) = prev {
            v = v.try_sub(&p.recip()?)?;
        }
        self.alpha_sq.try_mul(&v)
    }

    pub fn term_by_semirecursive(&self, n: u64) -> Result<QuadElem> {
        Self::require_index(n)?;
        Ok(self
            .semirecursive_prefix(n as usize)?
            .pop()
            .expect("n >= 1"))
    }

    pub fn semirecursive_prefix(&self, count: usize) -> Result<Vec<QuadElem>> {
        let mut out: Vec<QuadElem> = Vec::with_capacity(count);
        for n in 1..=count as u64 {
            let next = self.semirecursive_step(n, out.last())?;
            out.push(next);
        }
        Ok(out)
    }

    /// A rational as an element of this enumeration's ring.
    pub fn embed_rational(&self, x: &BigRational) -> QuadElem {
        QuadElem::rational(self.radicand(), x)
    }

    pub fn embed_int(&self, n: i64) -> QuadElem {
        QuadElem::integer(self.radicand(), n)
    }

    /// The rational value of a term of `r`, `s` or `t`.
    pub fn rational_value(x: &QuadElem) -> Result<BigRational> {
        x.to_rational()
            .ok_or_else(|| Error::Internal(format!("{x} is irrational")))
    }

    pub fn parent(&self, x: &QuadElem) -> Result<(QuadElem, usize)> {
        self.contraction.parent(x)
    }

    pub fn children(&self, x: &QuadElem) -> Result<Vec<QuadElem>> {
        self.contraction.children(x)
    }

    /// The value at index `n` by descending the tree along the base-`k`
    /// digits of `n`.
    pub fn value_at_index(&self, n: &BigUint) -> Result<QuadElem> {
        if n.is_zero() {
            return Err(domain("enumeration indices start at 1"));
        }
        let k = BigUint::from(self.base());
        let mut digits = Vec::new();
        let mut m = n.clone();
        while m >= k {
            let (q, r) = m.div_rem(&k);
            digits.push(r.to_usize().expect("digit below base"));
            m = q;
        }
        let root = m.to_usize().expect("root index below base");
        let mut x = self.roots()[root - 1].clone();
        for &d in digits.iter().rev() {
            x = self.contraction.child(&x, d)?;
        }
        Ok(x)
    }

    pub fn value_at(&self, n: u64) -> Result<QuadElem> {
        self.value_at_index(&BigUint::from(n))
    }

    /// Terms `1..=count` read off the tree level by level.
    pub fn tree_prefix(&self, count: usize) -> Result<Vec<QuadElem>> {
        let k = self.base() as usize;
        let mut out = self.roots();
        out.truncate(count);
        let mut parent_idx = 1;
        while out.len() < count {
            let kids = self.children(&out[parent_idx - 1])?;
            for (d, kid) in kids.into_iter().enumerate() {
                if parent_idx * k + d > count {
                    break;
                }
                out.push(kid);
            }
            parent_idx += 1;
        }
        Ok(out)
    }

    /// The index of `x`, found by following `F` up to a root. `max_steps`
    /// bounds the number of parent steps when given.
    pub fn index_of(&self, x: &QuadElem, max_steps: Option<usize>) -> Result<BigUint> {
        if x.signum() <= 0 {
            return Err(Error::NotPositive);
        }
        let x = x.clone().with_radicand(self.radicand())?;
        let mut digits = Vec::new();
        let mut cur = x;
        let root = loop {
            match self.parent(&cur) {
                Err(Error::IsRoot(i)) => break i,
                Err(e) => return Err(e),
                Ok((y, d)) => {
                    digits.push(d);
                    if max_steps.is_some_and(|m| digits.len() > m) {
                        return Err(Error::BoundExceeded(digits.len() - 1));
                    }
                    cur = y;
                }
            }
        };
        let k = BigUint::from(self.base());
        let mut n = BigUint::from(root);
        for &d in digits.iter().rev() {
            n = n * &k + BigUint::from(d);
        }
        Ok(n)
    }

    /// Greedy construction: append `α²(m − 1/last)` for the least positive
    /// integer `m` giving a positive value not yet listed.
    pub fn greedy_prefix(&self, count: usize) -> Result<Vec<QuadElem>> {
        let mut out = Vec::with_capacity(count);
        let mut seen = HashSet::with_capacity(count);
        if count == 0 {
            return Ok(out);
        }
        out.push(self.alpha_sq.clone());
        seen.insert(self.alpha_sq.clone());
        while out.len() < count {
            let inv = out.last().expect("nonempty").recip()?;
            let mut m: BigInt = inv.floor() + 1;
            let next = loop {
                let cand = self
                    .alpha_sq
                    .try_mul(&QuadElem::integer(self.radicand(), m.clone()).try_sub(&inv)?)?;
                if cand.signum() > 0 && !seen.contains(&cand) {
                    break cand;
                }
                m += 1;
            };
            seen.insert(next.clone());
            out.push(next);
        }
        Ok(out)
    }
}

/// Outcome of an exhaustive index check over all reduced `a/b` with
/// `a + b ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub tag: EnumTag,
    pub bound: u64,
    pub checked: usize,
    #[serde(serialize_with = "ser_biguint")]
    pub max_index: BigUint,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn ser_biguint<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

/// All reduced `a/b` with `a, b ≥ 1` and `a + b ≤ bound`, ordered by `a + b`
/// then `a`.
pub fn reduced_rationals(bound: u64) -> Vec<BigRational> {
    let mut out = Vec::new();
    for total in 2..=bound {
        for a in 1..total {
            let b = total - a;
            if a.gcd(&b) == 1 {
                out.push(BigRational::new(a.into(), b.into()));
            }
        }
    }
    out
}

/// Checks that every reduced `a/b` with `a + b ≤ bound` has an index, that
/// the indices are distinct, and that each index maps back to its value.
/// The grid is split across `jobs` threads; the report does not depend on
/// `jobs`.
pub fn verify_bijection(tag: EnumTag, bound: u64, jobs: usize) -> Result<BijectionReport> {
    if !tag.is_rational() {
        return Err(domain("bijection check applies to r, s and t"));
    }
    if bound < 2 {
        return Err(domain("bound must be at least 2"));
    }
    let e = Enumeration::new(tag);
    let grid = reduced_rationals(bound);
    let jobs = jobs.max(1);
    let chunk = grid.len().div_ceil(jobs).max(1);
    let results: Vec<Vec<(BigRational, std::result::Result<BigUint, String>)>> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = grid
                .chunks(chunk)
                .map(|part| {
                    let e = &e;
                    scope.spawn(move || {
                        part.iter()
                            .map(|x| {
                                let q = e.embed_rational(x);
                                let res = e
                                    .index_of(&q, None)
                                    .map_err(|err| err.to_string())
                                    .and_then(|n| match e.value_at_index(&n) {
                                        Ok(v) if v == q => Ok(n),
                                        Ok(v) => Err(format!("index {n} maps back to {v}")),
                                        Err(err) => Err(err.to_string()),
                                    });
                                (x.clone(), res)
                            })
                            .collect()
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
    let mut failures = Vec::new();
    let mut seen = HashSet::new();
    let mut max_index = BigUint::zero();
    let mut checked = 0;
    for (x, res) in results.into_iter().flatten() {
        checked += 1;
        match res {
            Ok(n) => {
                if !seen.insert(n.clone()) {
                    failures.push(format!("{x}: duplicate index {n}"));
                }
                if n > max_index {
                    max_index = n;
                }
            }
            Err(msg) => failures.push(format!("{x}: {msg}")),
        }
    }
    Ok(BijectionReport {
        tag,
        bound,
        checked,
        max_index,
        failures,
    })
}

/// Evidence that `F` carries positive elements of ℚ(φ) to its fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub height: i64,
    pub max_steps: usize,
    pub elements: usize,
    pub reached_root: usize,
    pub longest_path: usize,
    /// Elements that did not reach a root within `max_steps`, in φ-basis.
    pub witnesses: Vec<String>,
}

impl ConjectureReport {
    pub fn fraction_reached(&self) -> f64 {
        if self.elements == 0 {
            1.0
        } else {
            self.reached_root as f64 / self.elements as f64
        }
    }
}

/// All distinct positive `(p + qφ)/(r + sφ)` with `|p|, |q|, |r|, |s| ≤ height`.
pub fn golden_grid(height: i64) -> Vec<QuadElem> {
    let phi = QuadElem::phi();
    let elem = |a: i64, b: i64| {
        &QuadElem::integer(Radicand::Five, a) + &(&phi * &QuadElem::integer(Radicand::Five, b))
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in -height..=height {
        for s in -height..=height {
            let den = elem(r, s);
            if den.is_zero() {
                continue;
            }
            for p in -height..=height {
                for q in -height..=height {
                    let x = elem(p, q).try_div(&den).expect("nonzero denominator");
                    if x.signum() > 0 && seen.insert(x.clone()) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}

/// Default parent-step bound for [`u_conjecture_experiment`].
pub fn default_max_steps(height: i64) -> usize {
    100 * height.max(1) as usize
}

/// Iterates `F` for `u` on every element of [`golden_grid`].
pub fn u_conjecture_experiment(height: i64, max_steps: usize) -> ConjectureReport {
    let e = Enumeration::new(EnumTag::U);
    let grid = golden_grid(height);
    let mut reached = 0;
    let mut longest = 0;
    let mut witnesses = Vec::new();
    for x in &grid {
        match e.index_of(x, Some(max_steps)) {
            Ok(n) => {
                reached += 1;
                longest = longest.max(tree_depth(&n, e.base()));
            }
            Err(_) => witnesses.push(x.to_string()),
        }
    }
    ConjectureReport {
        height,
        max_steps,
        elements: grid.len(),
        reached_root: reached,
        longest_path: longest,
        witnesses,
    }
}

/// Result of checking that the orbit of `2` under
/// `f(x) = 2 + 2/x − 4{1/x}` passes through every reduced `a/b` with
/// `a + b ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub bound: u64,
    pub targets: usize,
    /// Orbit steps taken literally.
    pub literal_steps: usize,
    /// Targets met during the literal walk.
    pub visited: usize,
    /// Targets beyond the walk, certified by `f(s_{n−1}) = s_n` at their index.
    pub certified: usize,
    pub failures: Vec<String>,
}

impl OrbitReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.visited + self.certified == self.targets
    }
}

/// Walks the orbit of `2` for `literal_steps` steps, checking each iterate
/// against the tree value `s_n`, then certifies targets whose index lies
/// beyond the walk by the single step into their index.
pub fn orbit_check(bound: u64, literal_steps: usize) -> Result<OrbitReport> {
    let e = Enumeration::new(EnumTag::S);
    let mut failures = Vec::new();
    let targets: Vec<(QuadElem, BigUint)> = reduced_rationals(bound)
        .iter()
        .map(|x| {
            let v = e.embed_rational(x);
            e.index_of(&v, None).map(|n| (v, n))
        })
        .collect::<Result<_>>()?;
    let tree = e.tree_prefix(literal_steps)?;
    let mut orbit = HashSet::with_capacity(literal_steps);
    let mut x = e.embed_int(2);
    for (i, want) in tree.iter().enumerate() {
        if i > 0 {
            x = e.recurrence_step(&x)?;
        }
        if &x != want {
            failures.push(format!("orbit step {} gives {x}, tree gives {want}", i + 1));
            break;
        }
        orbit.insert(x.clone());
    }
    let window = BigUint::from(literal_steps);
    let (mut visited, mut certified) = (0, 0);
    for (v, n) in &targets {
        if n <= &window {
            if orbit.contains(v) {
                visited += 1;
            } else {
                failures.push(format!("{v} (index {n}) missing from the orbit"));
            }
            continue;
        }
        let prev = e.value_at_index(&(n - 1u32))?;
        if &e.recurrence_step(&prev)? == v {
            certified += 1;
        } else {
            failures.push(format!("f(s_{{{}}}) differs from {v}", n - 1u32));
        }
    }
    Ok(OrbitReport {
        bound,
        targets: targets.len(),
        literal_steps,
        visited,
        certified,
        failures,
    })
}

/// Number of parent steps from index `n` to its root: the number of
/// base-`k` digits of `n` minus one.
pub fn tree_depth(n: &BigUint, base: u64) -> usize {
    let k = BigUint::from(base);
    let mut m = n.clone();
    let mut depth = 0;
    while m >= k {
        m /= &k;
        depth += 1;
    }
    depth
}
