//! Cross-module invariants: proptest for the syntactic properties, seeded
//! sampling for the representation-backed ones.

mod common;

use proptest::prelude::*;

use common::{random_standard_word, rng};
use rand::Rng;
use vsb_core::morphisms::{
    expand_generalized, normalize_to, permutation_of, reduce_to_subscript_one, to_fusing,
    to_standard, TargetAlphabet,
};
use vsb_core::representation::{apply_word, permuted_state, rep_equal, BasisState};
use vsb_core::words::{Generator, Word};

fn letter_strategy(n: usize) -> impl Strategy<Value = Generator> {
    let single = 1..n;
    let pair = (1..=n, 1..=n).prop_filter("distinct", |(k, l)| k != l);
    prop_oneof![
        single.clone().prop_map(Generator::Sigma),
        single.clone().prop_map(Generator::SigmaInv),
        single.clone().prop_map(Generator::V),
        single.clone().prop_map(Generator::Tau),
        single.clone().prop_map(Generator::Mu),
        single.clone().prop_map(Generator::MuInv),
        single.prop_map(Generator::Gamma),
        pair.clone().prop_map(|(k, l)| Generator::GMu(k, l)),
        pair.clone().prop_map(|(k, l)| Generator::GMuInv(k, l)),
        pair.prop_map(|(k, l)| Generator::GGamma(k, l)),
    ]
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    (2usize..=5).prop_flat_map(move |n| {
        proptest::collection::vec(letter_strategy(n), 0..=max_len)
            .prop_map(move |letters| Word::new(n, letters).unwrap())
    })
}

proptest! {
    #[test]
    fn format_parse_round_trip(w in word_strategy(24)) {
        let text = w.to_string();
        prop_assert_eq!(Word::parse(&text, w.n()).unwrap(), w);
    }

    #[test]
    fn free_reduce_is_idempotent_and_shrinks(w in word_strategy(24)) {
        let reduced = w.free_reduce();
        prop_assert!(reduced.len() <= w.len());
        prop_assert_eq!(reduced.free_reduce(), reduced.clone());
        // Reduction also respects π.
        prop_assert_eq!(permutation_of(&reduced), permutation_of(&w));
    }

    #[test]
    fn pi_is_a_homomorphism(a in word_strategy(12), b in word_strategy(12)) {
        let b = if a.n() == b.n() { b } else { Word::identity(a.n()) };
        let product = a.concat(&b).unwrap();
        prop_assert_eq!(
            permutation_of(&product),
            permutation_of(&a).compose(&permutation_of(&b))
        );
    }

    #[test]
    fn translations_respect_pi_and_reduce_back(w in word_strategy(16)) {
        let std = normalize_to(&w, TargetAlphabet::Standard);
        let fus = normalize_to(&w, TargetAlphabet::Fusing);
        prop_assert_eq!(permutation_of(&std), permutation_of(&w));
        prop_assert_eq!(permutation_of(&fus), permutation_of(&w));
        // G ∘ F is the identity up to free reduction on standard words.
        let round = to_standard(&to_fusing(&std).unwrap()).unwrap();
        prop_assert_eq!(round.free_reduce(), std.free_reduce());
        let round = to_fusing(&to_standard(&fus).unwrap()).unwrap();
        prop_assert_eq!(round.free_reduce(), fus.free_reduce());
    }

    #[test]
    fn expansion_is_pure_on_generalized_letters(w in word_strategy(10)) {
        let expanded = expand_generalized(&w);
        prop_assert!(expanded.letters().iter().all(|g| !g.is_generalized()));
        prop_assert_eq!(permutation_of(&expanded), permutation_of(&w));
    }
}

#[test]
fn rep_equal_holds_for_free_reduction_of_random_words() {
    let mut rng = rng(0x5eed_0001);
    for case in 0..40 {
        let n = rng.gen_range(2..=5);
        let w = if case % 2 == 0 {
            random_standard_word(&mut rng, n, 30)
        } else {
            common::random_mixed_word(&mut rng, n, 30)
        };
        assert!(
            rep_equal(&w, &w.free_reduce(), 3).unwrap(),
            "free reduction changed the fingerprint of {w}"
        );
    }
}

#[test]
fn evaluation_is_functorial_on_random_words() {
    let mut rng = rng(0x5eed_0002);
    for _ in 0..60 {
        let n = rng.gen_range(2..=4);
        let a = random_standard_word(&mut rng, n, 10);
        let b = random_standard_word(&mut rng, n, 10);
        let product = a.concat(&b).unwrap();
        for state in BasisState::enumerate(3, n).unwrap().iter().step_by(5) {
            // Last letter acts first: b's image feeds a.
            let ib = apply_word(&b, state).unwrap();
            let ia = apply_word(&a, &ib.state).unwrap();
            let img = apply_word(&product, state).unwrap();
            assert_eq!(img.state, ia.state);
            let ring = vsb_core::cyclotomic::CycRing::new(3).unwrap();
            assert_eq!(img.scalar, ring.mul(&ia.scalar, &ib.scalar));
        }
    }
}

#[test]
fn images_are_monomial_with_permuted_state() {
    let mut rng = rng(0x5eed_0003);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let w = random_standard_word(&mut rng, n, 12);
        for state in BasisState::enumerate(3, n).unwrap() {
            let img = apply_word(&w, &state).unwrap();
            assert!(!img.scalar.is_zero(), "zero scalar for {w}");
            assert_eq!(img.state, permuted_state(&w, &state));
        }
    }
}

#[test]
fn scalars_of_v_words_are_one_and_of_mu_words_are_powers() {
    let ring = vsb_core::cyclotomic::CycRing::new(5).unwrap();
    let mut rng = rng(0x5eed_0004);
    for _ in 0..30 {
        let n = rng.gen_range(2..=4);
        let v_word = Word::new(
            n,
            (0..rng.gen_range(0..12))
                .map(|_| Generator::V(rng.gen_range(1..n)))
                .collect(),
        )
        .unwrap();
        let mu_word = Word::new(
            n,
            (0..rng.gen_range(0..12))
                .map(|_| {
                    let i = rng.gen_range(1..n);
                    if rng.gen_bool(0.5) {
                        Generator::Mu(i)
                    } else {
                        Generator::MuInv(i)
                    }
                })
                .collect(),
        )
        .unwrap();
        for state in BasisState::enumerate(5, n).unwrap().iter().step_by(7) {
            let iv = apply_word(&v_word, state).unwrap();
            assert_eq!(iv.scalar, ring.one());
            let im = apply_word(&mu_word, state).unwrap();
            let is_power = (0..5).any(|e| im.scalar == ring.from_power(e));
            assert!(is_power, "μ-word scalar is not a power of ξ");
        }
    }
}

#[test]
fn subscript_one_reduction_preserves_the_fingerprint() {
    let mut rng = rng(0x5eed_0005);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let w = random_standard_word(&mut rng, n, 10);
        let reduced = reduce_to_subscript_one(&w);
        assert!(reduced
            .letters()
            .iter()
            .all(|g| matches!(g, Generator::V(_)) || g.index() == Some(1)));
        assert!(
            rep_equal(&w, &reduced, 3).unwrap(),
            "detour reduction changed {w}"
        );
    }
}
