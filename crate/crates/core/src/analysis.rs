//! Growth degrees, generating-function factors, their roots, and the
//! singular functions linking the packings to dyadic-type rationals.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{Complex, QuadElem, Real};
use crate::error::{domain, Error, Result};
use crate::stern::{FamilyTag, SternFamily};

/// Degree targets: `log_2 φ`, `log_3(1+√2)`, `log_5(2+√3)` and
/// `log_4((φ² + √(4+φ⁴))/2)`, as printed to the digits available.
pub fn degree_target(tag: FamilyTag) -> f64 {
    match tag {
        FamilyTag::A => 0.694241914,
        FamilyTag::B => 0.802260812,
        FamilyTag::C => 0.818271949,
        FamilyTag::D => 0.7818951685,
    }
}

/// The growth constant `λ` whose `log_base` is the degree.
pub fn growth_constant(tag: FamilyTag) -> f64 {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    match tag {
        FamilyTag::A => phi,
        FamilyTag::B => 1.0 + 2f64.sqrt(),
        FamilyTag::C => 2.0 + 3f64.sqrt(),
        FamilyTag::D => (phi * phi + (4.0 + phi.powi(4)).sqrt()) / 2.0,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeEstimate {
    pub family: FamilyTag,
    pub k_max: u32,
    /// `log(M_k / M_{k−1}) / log(base)` for `k = 1..=k_max`.
    pub history: Vec<f64>,
    pub estimate: f64,
    pub target: f64,
    pub abs_error: f64,
    /// The `d` constant is only conjectured.
    pub conjectural: bool,
}

/// Ratio estimator over consecutive row maxima.
pub fn degree_estimate(family: &SternFamily, k_max: u32) -> Result<DegreeEstimate> {
    if k_max < 4 {
        return Err(domain("degree estimation needs k_max ≥ 4"));
    }
    let maxima: Vec<f64> = family
        .row_maxima(k_max)
        .iter()
        .map(QuadElem::to_f64)
        .collect();
    let log_base = (family.base as f64).ln();
    let history: Vec<f64> = maxima
        .windows(2)
        .map(|w| (w[1] / w[0]).ln() / log_base)
        .collect();
    let estimate = *history.last().expect("k_max ≥ 4");
    let target = degree_target(family.tag);
    Ok(DegreeEstimate {
        family: family.tag,
        k_max,
        history,
        estimate,
        target,
        abs_error: (estimate - target).abs(),
        conjectural: family.tag == FamilyTag::D,
    })
}

/// Checks `S(x) = P(x)·S(x^base)` through degree `degree`, where
/// `S(x) = Σ x_{n+1} xⁿ` and `P` has the family's weights. Returns the first
/// failing coefficient, if any.
pub fn genfun_verify(family: &SternFamily, degree: usize) -> Result<Option<usize>> {
    if degree < 1 {
        return Err(domain("degree must be at least 1"));
    }
    let seq = family.prefix(degree + 1);
    let coeff = |n: usize| &seq[n + 1];
    let base = family.base as usize;
    for n in 0..=degree {
        let mut sum = family.zero();
        for (e, w) in family.weights.iter().enumerate() {
            if e <= n && (n - e) % base == 0 {
                sum = &sum + &(w * coeff((n - e) / base));
            }
        }
        if &sum != coeff(n) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Roots `e^{iπ·n/m}` of the factor `P`: returns `(m, [n, …])`.
pub fn primary_roots(tag: FamilyTag) -> (u64, Vec<u64>) {
    match tag {
        FamilyTag::A => (6, vec![4, 8]),
        FamilyTag::B => (12, vec![5, 11, 13, 19]),
        FamilyTag::C => (30, vec![7, 17, 19, 29, 31, 41, 43, 53]),
        FamilyTag::D => (20, vec![6, 14, 16, 24, 26, 34]),
    }
}

/// The exponents `2j/k ± 1/(k+1)`, `j = 1, …, k−1`, as reduced rationals in
/// increasing order.
pub fn root_exponents_closed_form(k: u64) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = (1..k)
        .flat_map(|j| {
            let centre = BigRational::new(BigInt::from(2 * j), BigInt::from(k));
            let off = BigRational::new(BigInt::one(), BigInt::from(k + 1));
            [&centre - &off, &centre + off]
        })
        .collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootCheck {
    pub family: FamilyTag,
    /// `(n, |P(e^{iπn/m})|)` with the modulus as a decimal string.
    pub values: Vec<(u64, String)>,
    pub all_below_tolerance: bool,
    pub matches_closed_form: bool,
}

impl RootCheck {
    pub fn passed(&self) -> bool {
        self.all_below_tolerance && self.matches_closed_form
    }
}

/// Evaluates `P` at each listed root in fixed point and compares against
/// `10^{-tol_exp}`; also compares the exponent list with the closed form.
pub fn primary_roots_check(family: &SternFamily, tol_exp: u32) -> RootCheck {
    let (m, ns) = primary_roots(family.tag);
    let coeffs: Vec<Real> = family.weights.iter().map(Real::from_quad).collect();
    let pi = Real::pi();
    let mut all_below = true;
    let mut values = Vec::new();
    for &n in &ns {
        let theta = &(&pi * &Real::from_int(n)) / &Real::from_int(m);
        let z = Complex::expi(&theta);
        let modulus = Complex::eval_poly(&coeffs, &z).abs();
        all_below &= modulus.below_pow10(tol_exp);
        values.push((n, format!("{:e}", modulus.to_f64())));
    }
    let listed: Vec<BigRational> = ns
        .iter()
        .map(|&n| BigRational::new(BigInt::from(n), BigInt::from(m)))
        .collect();
    RootCheck {
        family: family.tag,
        values,
        all_below_tolerance: all_below,
        matches_closed_form: listed == root_exponents_closed_form(family.base),
    }
}

/// Partial quotients `[c_1, c_2, …]` of `x = [0; c_1, c_2, …]`, `0 < x ≤ 1`.
fn regular_cf(x: &BigRational) -> Vec<BigInt> {
    let mut out = Vec::new();
    let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
    // x = p/q < 1 except x = 1 = [0; 1]
    while !p.is_zero() {
        let (c, r) = q.div_rem(&p);
        out.push(c);
        q = p;
        p = r;
    }
    out
}

/// Minkowski's `?(x)` for rational `x ∈ [0, 1]` via
/// `Σ (−1)^{k+1} / 2^{c_1+…+c_k − 1}`.
pub fn question_mark(x: &BigRational) -> Result<BigRational> {
    if x.is_negative() || x > &BigRational::one() {
        return Err(domain("question mark function is evaluated on [0, 1]"));
    }
    alternating_sum(&regular_cf(x), 2)
}

/// `Σ (−1)^{k+1} / m^{c_1+…+c_k − 1}`.
fn alternating_sum(quotients: &[BigInt], m: u32) -> Result<BigRational> {
    let mut total = BigRational::zero();
    let mut exp = BigInt::zero();
    for (i, c) in quotients.iter().enumerate() {
        exp += c;
        let e = (&exp - 1u32)
            .to_u32()
            .ok_or_else(|| domain("partial quotient sum too large"))?;
        let term = BigRational::new(BigInt::one(), BigInt::from(m).pow(e));
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Conway's box function at `n/2^k`: `a_n / a_{2^k + n}`.
pub fn box_fn(n: u64, k: u32) -> Result<BigRational> {
    if n > 1u64 << k {
        return Err(domain("box function argument must lie in [0, 1]"));
    }
    let a = FamilyTag::A.family();
    let num = a.term(n).to_rational().expect("integer");
    let den = a.term((1u64 << k) + n).to_rational().expect("integer");
    Ok(num / den)
}

/// Greedy expansion `y = [0; c_1β, c_2β, …]` with positive integers `c_i`.
pub fn beta_cf(y: &QuadElem, beta: &QuadElem, max_depth: usize) -> Result<Vec<BigInt>> {
    let mut out = Vec::new();
    if y.is_zero() {
        return Ok(out);
    }
    if y.signum() < 0 {
        return Err(Error::ExpansionFailed(format!("{y} is negative")));
    }
    let mut rem = y.clone();
    while !rem.is_zero() {
        if out.len() >= max_depth {
            return Err(Error::ExpansionFailed(format!(
                "no finite expansion within {max_depth} terms"
            )));
        }
        let z = rem.recip()?;
        let c = z.try_div(beta)?.floor();
        if c.is_zero() {
            return Err(Error::ExpansionFailed(format!("{z} is below β")));
        }
        rem = z.try_sub(&beta.try_mul(&QuadElem::integer(beta.radicand(), c.clone()))?)?;
        out.push(c);
    }
    Ok(out)
}

/// Round trip `n/m^k → x_n/x_{m^k+n} → β-expansion → alternating sum`.
pub fn singular_roundtrip(family: &SternFamily, k: u32, n: u64) -> Result<bool> {
    let mk = family.base.pow(k);
    if n > mk {
        return Err(domain("n must lie in [0, base^k]"));
    }
    let y = family.term(n).try_div(&family.term(mk + n))?;
    let quotients = beta_cf(&y, &family.alpha, 64)?;
    let value = alternating_sum(&quotients, family.base as u32)?;
    Ok(value == BigRational::new(BigInt::from(n), BigInt::from(mk)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularReport {
    pub family: FamilyTag,
    pub k: u32,
    pub checked: usize,
    pub passed: usize,
    /// Expansion existed but the sum differed from `n/m^k`.
    pub wrong_sums: usize,
    /// No finite greedy expansion.
    pub unexpandable: usize,
    pub failures: Vec<String>,
}

impl SingularReport {
    pub fn pass_rate(&self) -> f64 {
        self.passed as f64 / self.checked.max(1) as f64
    }
}

/// Runs [`singular_roundtrip`] for every `n ∈ [0, base^k]`.
pub fn singular_report(family: &SternFamily, k: u32) -> SingularReport {
    let mk = family.base.pow(k);
    let (mut passed, mut wrong_sums, mut unexpandable) = (0, 0, 0);
    let mut failures = Vec::new();
    for n in 0..=mk {
        match singular_roundtrip(family, k, n) {
            Ok(true) => passed += 1,
            Ok(false) => {
                wrong_sums += 1;
                failures.push(format!("n = {n}: sum differs"));
            }
            Err(e) => {
                unexpandable += 1;
                failures.push(format!("n = {n}: {e}"));
            }
        }
    }
    SingularReport {
        family: family.tag,
        k,
        checked: mk as usize + 1,
        passed,
        wrong_sums,
        unexpandable,
        failures,
    }
}

/// `?(a_n / a_{2^k+n}) = n/2^k` for all `n ∈ [0, 2^k]`.
pub fn question_mark_roundtrip(k: u32) -> Result<Vec<u64>> {
    let mut bad = Vec::new();
    for n in 0..=(1u64 << k) {
        let x = box_fn(n, k)?;
        let want = BigRational::new(BigInt::from(n), BigInt::from(BigUint::one() << k));
        if question_mark(&x)? != want {
            bad.push(n);
        }
    }
    Ok(bad)
}
