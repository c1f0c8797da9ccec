//! Property tests tying the three views of a one-variable term together:
//! rational evaluation, the PL realisation, and the normal form over
//! `{0, ¬, ⊕}`.

use proptest::prelude::*;

use mv_terms::rational::{fmt_q, q};
use mv_terms::{eval, to_pl1, Pl1, Term, Valuation};

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        Just(Term::var("x")),
        Just(Term::var("x")),
    ];
    leaf.prop_recursive(4, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::oplus(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::odot(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::ominus(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::join(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::meet(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::dist(a, b)),
        ]
    })
}

fn canonical_with_integer_slopes(f: &Pl1) -> bool {
    // from_breakpoints re-validates every invariant and re-canonicalizes;
    // a canonical input must come back unchanged
    match Pl1::from_breakpoints(f.breakpoints().to_vec()) {
        Ok(g) => g == *f,
        Err(_) => false,
    }
}

proptest! {
    #[test]
    fn pl_realisation_matches_pointwise_evaluation(t in arb_term(), den in 1i64..=32, num_seed in 0i64..1000) {
        let f = to_pl1(&t).unwrap();
        let num = num_seed % (den + 1);
        let x = q(num, den);
        let mut v = Valuation::new();
        v.insert("x".into(), x.clone());
        let direct = eval(&t, &v).unwrap();
        let via_pl = f.eval(&x).unwrap();
        prop_assert_eq!(direct, via_pl, "term {} at {}", t, fmt_q(&x));
    }

    #[test]
    fn pl_outputs_are_canonical(t in arb_term()) {
        let f = to_pl1(&t).unwrap();
        prop_assert!(canonical_with_integer_slopes(&f), "not canonical for {}: {:?}", t, f);
    }

    #[test]
    fn normalization_preserves_the_function(t in arb_term()) {
        let f = to_pl1(&t).unwrap();
        let g = to_pl1(&t.normalize()).unwrap();
        prop_assert_eq!(f, g, "normal form of {} changed the function", t);
    }

    #[test]
    fn distance_to_self_is_zero(t in arb_term()) {
        let f = to_pl1(&t).unwrap();
        prop_assert!(f.dist(&f).is_zero());
    }

    #[test]
    fn difference_meet_is_zero(a in arb_term(), b in arb_term()) {
        let f = to_pl1(&a).unwrap();
        let g = to_pl1(&b).unwrap();
        prop_assert!(f.ominus(&g).meet(&g.ominus(&f)).is_zero());
    }
}
