//! Exit-gate checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use recount_cli::run;
use recount_core::analysis::{
    degree_estimate, degree_target, genfun_verify, primary_roots_check, question_mark_roundtrip,
    singular_report,
};
use recount_core::arith::{parse_quad, Radicand};
use recount_core::closed_forms::{
    binet_a, binet_b, tuple_rep_sum, weighted_rep_sum, WeightedDigitScheme,
};
use recount_core::enumeration::{
    default_max_steps, orbit_check, u_conjecture_experiment, verify_bijection, EnumTag, Enumeration,
};
use recount_core::geometry::{cheb_chain, packing, tangent, totient_halved, PackingKind};
use recount_core::mcf::{encode_valuation, term_from_list, valuation_prefix};
use recount_core::stern::{as_integer, FamilyTag};
use recount_core::QuadElem;

const R32: &str = "1/1 2/1 1/2 3/1 2/3 3/2 1/3 4/1 3/4 5/3 2/5 5/2 3/5 4/3 1/4 5/1 4/5 7/4 3/7 8/3 5/8 7/5 2/7 7/2 5/7 8/5 3/8 7/3 4/7 5/4 1/5 6/1";
const S32: &str = "2/1 1/1 4/1 3/2 2/3 3/1 4/3 1/2 6/1 5/3 4/5 7/2 10/7 3/5 8/3 5/4 2/5 5/1 8/5 3/4 10/3 7/5 4/7 5/2 6/5 1/3 8/1 7/4 6/7 11/3 16/11 5/8";
const T32: &str = "3/1 2/1 3/2 1/1 6/1 5/2 9/5 4/3 3/4 5/1 12/5 7/4 9/7 2/3 9/2 7/3 12/7 5/4 3/5 4/1 9/4 5/3 6/5 1/2 9/1 8/3 15/8 7/5 6/7 11/2 27/11 16/9";
const U20: &str =
    "1+phi phi 1 2+2phi 1/2+phi 3-phi 2/5+phi/5 1+2phi 2 1/2+phi/2 -1+phi 2+phi 3/5+4/5phi \
    -2+2phi 1/2 3+3phi 2/3+phi -5+4phi 6/11+2/11phi 3/2+2phi";

const RATIONAL: [EnumTag; 3] = [EnumTag::R, EnumTag::S, EnumTag::T];
const ALL_ENUMS: [EnumTag; 4] = [EnumTag::R, EnumTag::S, EnumTag::T, EnumTag::U];

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("recount").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).expect("utf-8 output"))
}

fn golden_prefixes() -> Verdict {
    let mut bad = Vec::new();
    for (tag, want) in [("r", R32), ("s", S32), ("t", T32)] {
        let (code, out) = cli(&["gen", tag, "--count", "32"]);
        let got: Vec<&str> = out.split_whitespace().collect();
        let want: Vec<&str> = want.split_whitespace().collect();
        if code != 0 || got != want {
            bad.push(tag.to_string());
        }
    }
    let (code, out) = cli(&["gen", "u", "--count", "20"]);
    let got: Vec<QuadElem> = out
        .split_whitespace()
        .filter_map(|t| parse_quad(t, Radicand::Five).ok())
        .collect();
    let want: Vec<QuadElem> = U20
        .split_whitespace()
        .map(|t| parse_quad(t, Radicand::Five).unwrap())
        .collect();
    if code != 0 || out.split_whitespace().count() != 20 || got != want {
        bad.push("u".into());
    }
    verdict(
        bad.is_empty(),
        format!("r/s/t 32 terms, u 20 terms; mismatched: {bad:?}"),
    )
}

fn construction_agreement() -> Verdict {
    let n = 10_000;
    let mut bad = Vec::new();
    for tag in ALL_ENUMS {
        let e = Enumeration::new(tag);
        let tree = e.tree_prefix(n).expect("tree");
        let routes = [
            ("ratio", e.ratio_prefix(n)),
            ("rec", e.recurrence_prefix(n)),
            ("semi", e.semirecursive_prefix(n)),
            ("greedy", e.greedy_prefix(2000)),
        ];
        for (name, values) in routes {
            match values {
                Ok(v) if v[..] == tree[..v.len()] => {}
                _ => bad.push(format!("{tag}/{name}")),
            }
        }
    }
    verdict(
        bad.is_empty(),
        format!("n <= 10000 (greedy <= 2000); disagreeing: {bad:?}"),
    )
}

fn bijectivity() -> Verdict {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut parts = Vec::new();
    let mut pass = true;
    for tag in RATIONAL {
        match verify_bijection(tag, 40, jobs) {
            Ok(r) => {
                pass &= r.passed();
                parts.push(format!(
                    "{tag}: {} checked, max index {}",
                    r.checked, r.max_index
                ));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{tag}: {e}"));
            }
        }
    }
    match orbit_check(40, 3usize.pow(13)) {
        Ok(o) => {
            pass &= o.passed();
            parts.push(format!(
                "orbit: {} targets, {} met in {} literal steps, {} certified",
                o.targets, o.visited, o.literal_steps, o.certified
            ));
        }
        Err(e) => {
            pass = false;
            parts.push(format!("orbit: {e}"));
        }
    }
    verdict(pass, parts.join("; "))
}

fn closed_forms() -> Verdict {
    let mut bad = Vec::new();
    for (tag, max_n) in [
        (FamilyTag::A, 2000),
        (FamilyTag::B, 2000),
        (FamilyTag::C, 1000),
        (FamilyTag::D, 2000),
    ] {
        let family = tag.family();
        let scheme = WeightedDigitScheme::for_family(&family);
        let seq = family.prefix(max_n + 1);
        if (0..=max_n).any(|n| weighted_rep_sum(&scheme, n as u64) != seq[n + 1]) {
            bad.push(format!("digits-{tag}"));
        }
        if (0..=40u64).any(|n| tuple_rep_sum(&scheme, n) != scheme.rep_sum(n)) {
            bad.push(format!("tuples-{tag}"));
        }
    }
    let a = FamilyTag::A.family().prefix(4097);
    if (0..=4096u64).any(|n| binet_a(n).ok() != as_integer(&a[n as usize + 1])) {
        bad.push("binet-a".into());
    }
    let b = FamilyTag::B.family().prefix(2188);
    if (0..=2187u64).any(|n| binet_b(n).ok().as_ref() != Some(&b[n as usize + 1])) {
        bad.push("binet-b".into());
    }
    verdict(
        bad.is_empty(),
        format!("digit sums, tuple oracle, Binet sums; failing: {bad:?}"),
    )
}

fn degrees() -> Verdict {
    let mut pass = true;
    let mut parts = Vec::new();
    for (tag, k, tol) in [
        (FamilyTag::A, 20, 0.01),
        (FamilyTag::B, 12, 0.02),
        (FamilyTag::C, 9, 0.02),
        (FamilyTag::D, 10, 0.02),
    ] {
        match degree_estimate(&tag.family(), k) {
            Ok(est) => {
                pass &= est.abs_error < tol && est.target == degree_target(tag);
                parts.push(format!(
                    "{tag}: {:.9} (err {:.1e})",
                    est.estimate, est.abs_error
                ));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{tag}: {e}"));
            }
        }
    }
    verdict(pass, parts.join(", "))
}

fn generating_functions() -> Verdict {
    let mut bad = Vec::new();
    for (tag, degree) in [
        (FamilyTag::A, 1000),
        (FamilyTag::B, 729),
        (FamilyTag::C, 625),
        (FamilyTag::D, 1024),
    ] {
        let family = tag.family();
        if !matches!(genfun_verify(&family, degree), Ok(None)) {
            bad.push(format!("identity-{tag}"));
        }
        let roots = primary_roots_check(&family, 20);
        if !roots.all_below_tolerance {
            bad.push(format!("roots-{tag}"));
        }
        if !roots.matches_closed_form {
            bad.push(format!("exponents-{tag}"));
        }
    }
    verdict(
        bad.is_empty(),
        format!("degrees 1000/729/625/1024, |P| < 1e-20; failing: {bad:?}"),
    )
}

fn geometry() -> Verdict {
    let mut bad = Vec::new();
    for kind in [
        PackingKind::Ford,
        PackingKind::GuettlerMallows,
        PackingKind::Hex,
        PackingKind::Golden,
    ] {
        let chain = packing(kind, 6);
        if !chain.windows(2).all(|w| tangent(&w[0], &w[1])) {
            bad.push(format!("{kind:?}"));
        }
    }
    let a = FamilyTag::A.family();
    for k in 0..=8u32 {
        let chain = packing(PackingKind::Ford, k);
        let m = 1u64 << k;
        if (0..=m).any(|n| chain[n as usize].tangency_point() != Some(&a.term(n) / &a.term(m + n)))
        {
            bad.push(format!("ford-points-k{k}"));
        }
    }
    let scales = [
        QuadElem::one(Radicand::Two),
        QuadElem::sqrt(Radicand::Two),
        QuadElem::phi(),
        QuadElem::sqrt(Radicand::Three),
    ];
    let lengths: Vec<usize> = scales
        .iter()
        .map(|s| cheb_chain(s, 50).map_or(0, |c| c.len()))
        .collect();
    if lengths != [3, 4, 5, 6] {
        bad.push(format!("chains {lengths:?}"));
    }
    let totients: Vec<u64> = (1..=10).map(|n| totient_halved(n).unwrap_or(0)).collect();
    if totients != [1, 1, 2, 2, 2, 3, 4, 3, 4, 5] {
        bad.push(format!("totients {totients:?}"));
    }
    verdict(
        bad.is_empty(),
        format!("depth-6 tangencies, Ford points k <= 8, chains, totients; failing: {bad:?}"),
    )
}

fn singular_functions() -> Verdict {
    let qm_bad: usize = (0..=10)
        .map(|k| question_mark_roundtrip(k).map_or(usize::MAX, |v| v.len()))
        .sum();
    let b = FamilyTag::B.family();
    let mut b_pass = true;
    let mut b_parts = Vec::new();
    for k in 1..=5 {
        let r = singular_report(&b, k);
        b_pass &= r.passed == r.checked;
        b_parts.push(format!(
            "k{k} {}/{} ({} unexpandable, {} wrong)",
            r.passed, r.checked, r.unexpandable, r.wrong_sums
        ));
    }
    let mut info = Vec::new();
    for tag in [FamilyTag::C, FamilyTag::D] {
        let family = tag.family();
        let rates: Vec<String> = (1..=4)
            .map(|k| format!("{:.1}%", 100.0 * singular_report(&family, k).pass_rate()))
            .collect();
        info.push(format!("{tag} k1..4 {}", rates.join("/")));
    }
    verdict(
        qm_bad == 0 && b_pass,
        format!(
            "?-function k <= 10 failures {qm_bad}; b round trip: {}; informational: {}",
            b_parts.join(", "),
            info.join("; ")
        ),
    )
}

fn golden_conjecture() -> Verdict {
    let r = u_conjecture_experiment(5, default_max_steps(5));
    let mut detail = format!(
        "{}/{} reach a root within {} steps (longest path {})",
        r.reached_root, r.elements, r.max_steps, r.longest_path
    );
    if !r.witnesses.is_empty() {
        detail += &format!("; potential counterexamples: {:?}", r.witnesses);
    }
    verdict(r.elements > 0, detail)
}

fn minus_fractions() -> Verdict {
    let n = 10_000;
    let mut bad = Vec::new();
    for (k, tag) in [
        (2, EnumTag::R),
        (3, EnumTag::S),
        (5, EnumTag::T),
        (4, EnumTag::U),
    ] {
        let e = Enumeration::new(tag);
        let tree = e.tree_prefix(n).expect("tree");
        if tag.is_rational() {
            if valuation_prefix(&e, n).ok().as_deref() != Some(&tree[..]) {
                bad.push(format!("valuation-{tag}"));
            }
            let direct_ok = (1..=300u64).all(|i| {
                encode_valuation(&e, i).and_then(|x| x.eval()).ok().as_ref()
                    == Some(&tree[i as usize - 1])
            });
            if !direct_ok {
                bad.push(format!("valuation-direct-{tag}"));
            }
        }
        if !(1..=n as u64)
            .all(|i| term_from_list(k, i).ok().as_ref() == Some(&tree[i as usize - 1]))
        {
            bad.push(format!("lists-{tag}"));
        }
    }
    verdict(
        bad.is_empty(),
        format!("valuation and list encodings, n <= 10000; failing: {bad:?}"),
    )
}

fn main() -> ExitCode {
    type Check = (&'static str, Duration, fn() -> Verdict);
    let checks: [Check; 10] = [
        ("golden prefixes", Duration::from_secs(1), golden_prefixes),
        (
            "construction agreement",
            Duration::from_secs(120),
            construction_agreement,
        ),
        ("bijectivity", Duration::from_secs(60), bijectivity),
        ("closed forms", Duration::from_secs(120), closed_forms),
        ("degrees", Duration::from_secs(60), degrees),
        ("generating functions", Duration::MAX, generating_functions),
        ("geometry", Duration::MAX, geometry),
        ("singular functions", Duration::MAX, singular_functions),
        (
            "golden-ratio conjecture experiment",
            Duration::MAX,
            golden_conjecture,
        ),
        ("minus continued fractions", Duration::MAX, minus_fractions),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let v = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *limit;
        let pass = v.pass && in_time;
        if !pass {
            failed += 1;
        }
        let budget = if *limit == Duration::MAX {
            String::new()
        } else {
            format!(" / {:?}", limit)
        };
        println!(
            "AC{:<2} {} {name} [{:.2?}{budget}]: {}{}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed,
            v.detail,
            if in_time { "" } else { " (over time budget)" }
        );
    }
    println!(
        "{} of {} criteria passed",
        checks.len() - failed,
        checks.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
