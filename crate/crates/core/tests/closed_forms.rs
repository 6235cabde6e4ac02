use num_bigint::BigInt;
use recount_core::closed_forms::{
    binet_a, binet_b, binom_mod2, tuple_rep_sum, weighted_rep_sum, WeightedDigitScheme,
};
use recount_core::stern::{as_integer, FamilyTag};

#[test]
fn digit_sums_match_sequences() {
    for tag in FamilyTag::ALL {
        let family = tag.family();
        let scheme = WeightedDigitScheme::for_family(&family);
        let seq = family.prefix(601);
        for n in 0..600 {
            assert_eq!(
                weighted_rep_sum(&scheme, n as u64),
                seq[n + 1],
                "{tag} n = {n}"
            );
        }
    }
}

#[test]
fn tuple_oracle_matches_dp() {
    for tag in FamilyTag::ALL {
        let scheme = WeightedDigitScheme::for_tag(tag);
        for n in 0..=24 {
            assert_eq!(
                tuple_rep_sum(&scheme, n),
                scheme.rep_sum(n),
                "{tag} n = {n}"
            );
        }
    }
}

#[test]
fn hyperbinary_count() {
    // a_{n+1} counts ways to write n with each power of 2 used at most twice
    fn brute(n: u64, bit: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        if bit > n {
            return 0;
        }
        (0..=2)
            .filter(|c| c * bit <= n)
            .map(|c| brute(n - c * bit, bit * 2))
            .sum()
    }
    let a = FamilyTag::A.family();
    let seq = a.prefix(301);
    for n in 0..300u64 {
        assert_eq!(
            as_integer(&seq[n as usize + 1]),
            Some(BigInt::from(brute(n, 1))),
            "n = {n}"
        );
    }
}

#[test]
fn kummer_parity_sum() {
    let a = FamilyTag::A.family();
    let seq = a.prefix(513);
    for n in 0..512u64 {
        let count: u64 = (0..=n / 2)
            .map(|j| u64::from(binom_mod2(n - 2 * j, j)))
            .sum();
        assert_eq!(
            as_integer(&seq[n as usize + 1]),
            Some(BigInt::from(count)),
            "n = {n}"
        );
    }
}

#[test]
fn binet_forms() {
    let a = FamilyTag::A.family();
    let b = FamilyTag::B.family();
    let sa = a.prefix(300);
    let sb = b.prefix(300);
    for n in 0..299 {
        assert_eq!(
            Some(binet_a(n as u64).unwrap()),
            as_integer(&sa[n + 1]),
            "a, n = {n}"
        );
        assert_eq!(binet_b(n as u64).unwrap(), sb[n + 1], "b, n = {n}");
    }
}
