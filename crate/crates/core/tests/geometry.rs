use recount_core::arith::Real;
use recount_core::geometry::{
    cheb_chain, cheb_chain_len_real, mobius_apply, packing, render_svg, tangent, totient_halved,
    Circle, PackingKind, Viewport,
};
use recount_core::mobius::Mobius;
use recount_core::stern::FamilyTag;
use recount_core::{QuadElem, Radicand};

const KINDS: [PackingKind; 4] = [
    PackingKind::Ford,
    PackingKind::GuettlerMallows,
    PackingKind::Hex,
    PackingKind::Golden,
];

#[test]
fn adjacent_circles_touch() {
    for kind in KINDS {
        let depth = if kind == PackingKind::Hex { 4 } else { 5 };
        let chain = packing(kind, depth);
        assert!(chain.windows(2).all(|w| tangent(&w[0], &w[1])), "{kind:?}");
    }
}

#[test]
fn first_segment_is_the_sequence() {
    for kind in KINDS {
        let family = kind.family_tag().family();
        for k in 0..=3u32 {
            let m = family.base.pow(k);
            let chain = packing(kind, k);
            for n in 0..=m {
                let c = &chain[n as usize];
                assert_eq!(c.x, family.term(n), "{kind:?} k = {k} n = {n}");
                assert_eq!(c.y, family.term(m + n), "{kind:?} k = {k} n = {n}");
            }
        }
    }
}

#[test]
fn ford_points_are_stern_ratios() {
    let a = FamilyTag::A.family();
    let chain = packing(PackingKind::Ford, 6);
    for n in 0..=64u64 {
        let want = &a.term(n) / &a.term(64 + n);
        assert_eq!(chain[n as usize].tangency_point(), Some(want));
    }
}

#[test]
fn mobius_images_stay_tangent() {
    let chain = packing(PackingKind::GuettlerMallows, 2);
    let s2 = QuadElem::sqrt(Radicand::Two);
    let one = QuadElem::one(Radicand::Two);
    let zero = QuadElem::zero(Radicand::Two);
    // x ↦ x + √2 and x ↦ −1/x
    let maps = [
        Mobius::new(one.clone(), s2, zero.clone(), one.clone()),
        Mobius::new(zero, -&one, one.clone(), QuadElem::zero(Radicand::Two)),
    ];
    for m in &maps {
        let image: Vec<Circle> = chain.iter().map(|c| mobius_apply(m, c).unwrap()).collect();
        assert!(image.windows(2).all(|w| tangent(&w[0], &w[1])));
    }
}

#[test]
fn chains_and_totients() {
    let one = QuadElem::one(Radicand::Five);
    assert_eq!(cheb_chain(&one, 50).unwrap().len(), 3);
    assert_eq!(
        cheb_chain(&QuadElem::sqrt(Radicand::Two), 50)
            .unwrap()
            .len(),
        4
    );
    assert_eq!(cheb_chain(&QuadElem::phi(), 50).unwrap().len(), 5);
    assert_eq!(
        cheb_chain(&QuadElem::sqrt(Radicand::Three), 50)
            .unwrap()
            .len(),
        6
    );
    let halved: Vec<u64> = (1..=10).map(|n| totient_halved(n).unwrap()).collect();
    assert_eq!(halved, [1, 1, 2, 2, 2, 3, 4, 3, 4, 5]);
    let two_cos = |k: u64| {
        let (c, _) = (&Real::pi() / &Real::from_int(k + 1)).cos_sin();
        &c + &c
    };
    assert_eq!(cheb_chain_len_real(&two_cos(7), 50).unwrap(), 8);
}

#[test]
fn svg_output() {
    let circles = packing(PackingKind::Golden, 2);
    let mut buf = Vec::new();
    let drawn = render_svg(&circles, &Viewport::unit(), &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with("<svg") || text.starts_with("<?xml"));
    assert_eq!(text.matches("<circle").count(), drawn);
    assert!(drawn > 0);
}
