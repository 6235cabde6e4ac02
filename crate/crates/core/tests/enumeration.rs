use num_bigint::BigUint;
use proptest::prelude::*;
use recount_core::arith::ratio;
use recount_core::enumeration::{
    default_max_steps, orbit_check, u_conjecture_experiment, verify_bijection, EnumTag, Enumeration,
};
use recount_core::Error;

const TAGS: [EnumTag; 4] = [EnumTag::R, EnumTag::S, EnumTag::T, EnumTag::U];

#[test]
fn four_constructions_agree() {
    for tag in TAGS {
        let e = Enumeration::new(tag);
        let n = 2000;
        let tree = e.tree_prefix(n).unwrap();
        assert_eq!(e.ratio_prefix(n).unwrap(), tree, "{tag} ratio");
        assert_eq!(e.recurrence_prefix(n).unwrap(), tree, "{tag} recurrence");
        assert_eq!(
            e.semirecursive_prefix(n).unwrap(),
            tree,
            "{tag} semi-recursive"
        );
    }
}

#[test]
fn greedy_agrees() {
    for tag in TAGS {
        let e = Enumeration::new(tag);
        assert_eq!(
            e.greedy_prefix(300).unwrap(),
            e.tree_prefix(300).unwrap(),
            "{tag}"
        );
    }
}

#[test]
fn single_term_routes() {
    for tag in TAGS {
        let e = Enumeration::new(tag);
        for n in [1, 2, 7, 64, 100, 729] {
            let x = e.value_at(n).unwrap();
            assert_eq!(e.term_by_ratio(n).unwrap(), x);
            assert_eq!(e.term_by_recurrence(n).unwrap(), x);
            assert_eq!(e.term_by_semirecursive(n).unwrap(), x);
        }
        assert!(e.value_at(0).is_err());
    }
}

#[test]
fn index_round_trips() {
    for tag in TAGS {
        let e = Enumeration::new(tag);
        for (i, x) in e.tree_prefix(3000).unwrap().iter().enumerate() {
            assert_eq!(
                e.index_of(x, None).unwrap(),
                BigUint::from(i + 1),
                "{tag} {x}"
            );
        }
    }
}

#[test]
fn index_errors() {
    let r = Enumeration::new(EnumTag::R);
    let zero = r.embed_int(0);
    assert_eq!(r.index_of(&zero, None), Err(Error::NotPositive));
    assert_eq!(r.index_of(&r.embed_int(-3), None), Err(Error::NotPositive));
    // 1/40 sits 39 levels below the root 1
    let deep = r.embed_rational(&ratio(1, 40));
    assert_eq!(r.index_of(&deep, Some(10)), Err(Error::BoundExceeded(10)));
    assert!(r.index_of(&deep, Some(39)).is_ok());
}

#[test]
fn small_bijections() {
    for tag in [EnumTag::R, EnumTag::S, EnumTag::T] {
        let report = verify_bijection(tag, 20, 2).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.checked, 127);
    }
}

#[test]
fn orbit_small_window() {
    let report = orbit_check(15, 3000).unwrap();
    assert!(report.passed(), "{report:?}");
}

#[test]
fn golden_grid_low_height() {
    let report = u_conjecture_experiment(2, default_max_steps(2));
    assert_eq!(report.reached_root, report.elements);
    assert!(report.witnesses.is_empty());
}

fn tag_strategy() -> impl Strategy<Value = EnumTag> {
    prop::sample::select(TAGS.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn children_and_parent_invert(tag in tag_strategy(), n in 1u64..2_000_000) {
        let e = Enumeration::new(tag);
        let k = e.base();
        let x = e.value_at(n).unwrap();
        for (d, kid) in e.children(&x).unwrap().iter().enumerate() {
            prop_assert_eq!(kid, &e.value_at(k * n + d as u64).unwrap());
            let (p, digit) = e.parent(kid).unwrap();
            prop_assert_eq!(&p, &x);
            prop_assert_eq!(digit, d);
        }
    }

    #[test]
    fn rationals_round_trip(tag in prop::sample::select(vec![EnumTag::R, EnumTag::S, EnumTag::T]),
                            a in 1i64..60, b in 1i64..60) {
        let e = Enumeration::new(tag);
        let x = e.embed_rational(&ratio(a, b));
        let n = e.index_of(&x, None).unwrap();
        prop_assert_eq!(e.value_at_index(&n).unwrap(), x);
    }

    #[test]
    fn recurrence_step_advances_index(tag in tag_strategy(), n in 1u64..1_000_000) {
        let e = Enumeration::new(tag);
        let x = e.value_at(n).unwrap();
        prop_assert_eq!(e.recurrence_step(&x).unwrap(), e.value_at(n + 1).unwrap());
    }
}
