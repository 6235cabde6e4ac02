//! Closed formulas for the diatomic sequences.
//!
//! `x_{n+1}` is a weighted count of representations `n = Σ e_j·m^j` with
//! digits `0 ≤ e_j ≤ e_max`; for `a` this is the number of hyperbinary
//! representations. The sequences `a` and `b` also have Binet-type sums over
//! the rings ℤ[σ] and ℤ[√2][τ].

use num_bigint::BigInt;

use crate::arith::{CyclotomicSigma, QuadElem, TauElem};
use crate::error::{domain, Error, Result};
use crate::stern::{FamilyTag, SternFamily};

/// Digit weights `w_0, …, w_{e_max}` in base `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigitScheme {
    pub base: u64,
    pub weights: Vec<QuadElem>,
}

impl WeightedDigitScheme {
    pub fn new(base: u64, weights: Vec<QuadElem>) -> Result<Self> {
        if base < 2 || weights.is_empty() {
            return Err(domain("scheme needs base ≥ 2 and at least one weight"));
        }
        if weights.len() as u64 > 2 * base {
            return Err(domain("maximum digit must be below twice the base"));
        }
        Ok(WeightedDigitScheme { base, weights })
    }

    pub fn for_family(family: &SternFamily) -> Self {
        Self::new(family.base, family.weights.clone()).expect("family weights fit the carry bound")
    }

    pub fn for_tag(tag: FamilyTag) -> Self {
        Self::for_family(&tag.family())
    }

    pub fn max_digit(&self) -> u64 {
        self.weights.len() as u64 - 1
    }

    /// `Σ Π w_{e_j}` over all digit strings with `Σ e_j·m^j = n`.
    ///
    /// Digits of `n` are consumed from the bottom; the state is the excess
    /// `c ∈ {0, 1}` of the chosen digits over `n` at the current position.
    pub fn rep_sum(&self, n: u64) -> QuadElem {
        let d = self.weights[0].radicand();
        let m = self.base;
        let mut dp = [QuadElem::one(d), QuadElem::zero(d)];
        let mut rest = n;
        while rest > 0 {
            let digit = rest % m;
            rest /= m;
            let mut next = [QuadElem::zero(d), QuadElem::zero(d)];
            for (c_in, acc) in dp.iter().enumerate() {
                if acc.is_zero() {
                    continue;
                }
                for (e, w) in self.weights.iter().enumerate() {
                    let total = e as u64 + c_in as u64;
                    if total < digit || !(total - digit).is_multiple_of(m) {
                        continue;
                    }
                    let c_out = ((total - digit) / m) as usize;
                    assert!(c_out <= 1, "excess stays below 2 when e_max < 2m");
                    next[c_out] = &next[c_out] + &(acc * w);
                }
            }
            dp = next;
        }
        let [done, _] = dp;
        done
    }
}

/// `x_{n+1}` as a weighted digit-representation sum.
pub fn weighted_rep_sum(scheme: &WeightedDigitScheme, n: u64) -> QuadElem {
    scheme.rep_sum(n)
}

/// Base-`k` digits of `n`, least significant first.
fn digits(mut n: u64, k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % k);
        n /= k;
    }
    out
}

/// `true` iff no base-`k` position carries a nonzero digit in two of `xs`.
pub fn digit_disjoint(xs: &[u64], k: u64) -> bool {
    let expansions: Vec<Vec<u64>> = xs.iter().map(|&x| digits(x, k)).collect();
    let len = expansions.iter().map(Vec::len).max().unwrap_or(0);
    (0..len).all(|pos| {
        expansions
            .iter()
            .filter(|ds| ds.get(pos).is_some_and(|&d| d != 0))
            .count()
            <= 1
    })
}

/// `C(a+b, b) mod 2`, which is 1 exactly when `a` and `b` share no binary 1.
pub fn binom_mod2(a: u64, b: u64) -> u8 {
    u8::from(a & b == 0)
}

/// Number of 1-digits of `n` in base `k`.
pub fn count_ones(n: u64, k: u64) -> u32 {
    digits(n, k).iter().filter(|&&d| d == 1).count() as u32
}

/// `Σ_{j=0}^{n} σ^{s₂(j)} σ̄^{s₂(n−j)}`, which equals `a_{n+1}`.
pub fn binet_a(n: u64) -> Result<BigInt> {
    let max = 64;
    let mut counts = vec![vec![0u64; max + 1]; max + 1];
    for j in 0..=n {
        counts[count_ones(j, 2) as usize][count_ones(n - j, 2) as usize] += 1;
    }
    let sigma = CyclotomicSigma::sigma();
    let bar = CyclotomicSigma::sigma_bar();
    let mut total = CyclotomicSigma::zero();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                let term = &sigma.pow(i as u32) * &bar.pow(j as u32);
                total = &total + &(&term * &CyclotomicSigma::new(c, 0));
            }
        }
    }
    total
        .as_integer()
        .cloned()
        .ok_or_else(|| Error::NonRealResult(format!("σ-component {} left over", total.q)))
}

/// `Σ_{j=0}^{n} τ^{s(j)} τ̄^{s(n−j)}` with `s` the number of ternary 1-digits,
/// which equals `b_{n+1}`.
pub fn binet_b(n: u64) -> Result<QuadElem> {
    let max = 41;
    let mut counts = vec![vec![0u64; max + 1]; max + 1];
    for j in 0..=n {
        counts[count_ones(j, 3) as usize][count_ones(n - j, 3) as usize] += 1;
    }
    let tau = TauElem::tau();
    let bar = TauElem::tau_bar();
    let mut total = TauElem::zero();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                let term = &tau.pow(i as u32) * &bar.pow(j as u32);
                total = &total + &(&term * &TauElem::new(c, 0, 0, 0));
            }
        }
    }
    total.to_quad().ok_or_else(|| {
        Error::NonRealResult(format!("τ-component {}+{}√2 left over", total.w, total.z))
    })
}

/// Brute-force evaluation of the multi-variable form: tuples
/// `(x_1, …, x_{e_max})` of numbers with 0/1 base-`m` digits, pairwise
/// digit-disjoint, with `Σ i·x_i = n`, each weighted by
/// `Π w_i^{(number of 1-digits of x_i)}`. Meant for small `n`.
pub fn tuple_rep_sum(scheme: &WeightedDigitScheme, n: u64) -> QuadElem {
    let m = scheme.base;
    let d = scheme.weights[0].radicand();
    let zero_one: Vec<u64> = (0..=n)
        .filter(|&x| digits(x, m).iter().all(|&g| g <= 1))
        .collect();
    let mut total = QuadElem::zero(d);
    let mut chosen = Vec::new();
    tuple_search(scheme, &zero_one, 1, n, &mut chosen, &mut total);
    total
}

fn tuple_search(
    scheme: &WeightedDigitScheme,
    zero_one: &[u64],
    i: u64,
    remaining: u64,
    chosen: &mut Vec<u64>,
    total: &mut QuadElem,
) {
    let m = scheme.base;
    if i > scheme.max_digit() {
        if remaining == 0 && digit_disjoint(chosen, m) {
            let mut w = QuadElem::one(total.radicand());
            for (idx, &x) in chosen.iter().enumerate() {
                for _ in 0..count_ones(x, m) {
                    w = &w * &scheme.weights[idx + 1];
                }
            }
            *total = &*total + &w;
        }
        return;
    }
    for &x in zero_one {
        if i * x > remaining {
            break;
        }
        chosen.push(x);
        tuple_search(scheme, zero_one, i + 1, remaining - i * x, chosen, total);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Radicand;

    #[test]
    fn rep_sum_examples() {
        let a = WeightedDigitScheme::for_tag(FamilyTag::A);
        assert_eq!(a.rep_sum(4), QuadElem::integer(Radicand::Two, 3));
        let b = WeightedDigitScheme::for_tag(FamilyTag::B);
        assert_eq!(b.rep_sum(4), QuadElem::integer(Radicand::Two, 3));
        for tag in FamilyTag::ALL {
            let s = WeightedDigitScheme::for_tag(tag);
            assert_eq!(s.rep_sum(0), QuadElem::one(s.weights[0].radicand()));
        }
        assert_eq!(WeightedDigitScheme::for_tag(FamilyTag::C).max_digit(), 8);
        assert_eq!(WeightedDigitScheme::for_tag(FamilyTag::D).max_digit(), 6);
    }

    #[test]
    fn scheme_rejects_large_digits() {
        let w = vec![QuadElem::one(Radicand::Two); 5];
        assert!(WeightedDigitScheme::new(2, w).is_err());
    }

    #[test]
    fn disjoint_examples() {
        assert!(digit_disjoint(&[1, 2], 2));
        assert!(!digit_disjoint(&[1, 1], 2));
        assert!(digit_disjoint(&[3, 9], 3));
        assert!(digit_disjoint(&[], 3));
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom_mod2(1, 2), 1);
        assert_eq!(binom_mod2(1, 1), 0);
        assert_eq!(binom_mod2(5, 2), 1);
    }

    #[test]
    fn binet_examples() {
        assert_eq!(binet_a(0).unwrap(), BigInt::from(1));
        assert_eq!(binet_a(2).unwrap(), BigInt::from(2));
        assert_eq!(binet_a(7).unwrap(), BigInt::from(1));
        assert_eq!(binet_b(0).unwrap(), QuadElem::one(Radicand::Two));
        assert_eq!(binet_b(1).unwrap(), QuadElem::sqrt(Radicand::Two));
        assert_eq!(binet_b(4).unwrap(), QuadElem::integer(Radicand::Two, 3));
    }

    #[test]
    fn ternary_ones_not_digit_sum() {
        // 2 has digit sum 2 but no ternary 1-digit
        assert_eq!(count_ones(2, 3), 0);
        assert_eq!(count_ones(4, 3), 2);
        assert_eq!(count_ones(7, 3), 1);
    }

    #[test]
    fn tuple_form_small() {
        let b = WeightedDigitScheme::for_tag(FamilyTag::B);
        assert_eq!(tuple_rep_sum(&b, 2), QuadElem::one(Radicand::Two));
        assert_eq!(tuple_rep_sum(&b, 4), QuadElem::integer(Radicand::Two, 3));
    }
}
