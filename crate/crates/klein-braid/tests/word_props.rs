//! Group laws and reduction canonicity for free-group words.

mod common;

use klein_braid::word::{apply_endo, conj, word_b, word_bkl, FreeWord, Gen, Syllable};
use proptest::prelude::*;

fn arb_letter() -> impl Strategy<Value = (Gen, i64)> {
    (any::<bool>(), any::<bool>())
        .prop_map(|(g, s)| (if g { Gen::U } else { Gen::V }, if s { 1 } else { -1 }))
}

fn arb_letters(max: usize) -> impl Strategy<Value = Vec<(Gen, i64)>> {
    proptest::collection::vec(arb_letter(), 0..=max)
}

fn arb_word() -> impl Strategy<Value = FreeWord> {
    arb_letters(24).prop_map(|ls| {
        FreeWord::from_syllables(ls.into_iter().map(|(gen, exp)| Syllable { gen, exp }))
    })
}

// One-letter-at-a-time cancellation oracle for reduction.
fn naive_reduce(letters: &[(Gen, i64)]) -> Vec<(Gen, i64)> {
    let mut stack: Vec<(Gen, i64)> = Vec::new();
    for &(g, s) in letters {
        match stack.last() {
            Some(&(tg, ts)) if tg == g && ts == -s => {
                stack.pop();
            }
            _ => stack.push((g, s)),
        }
    }
    stack
}

proptest! {
    #[test]
    fn reduction_matches_naive_oracle(letters in arb_letters(64)) {
        let w = FreeWord::from_syllables(
            letters.iter().map(|&(gen, exp)| Syllable { gen, exp }),
        );
        prop_assert_eq!(w.letters().collect::<Vec<_>>(), naive_reduce(&letters));
        // Reducing the already-reduced syllables is idempotent.
        let again = FreeWord::from_syllables(w.syllables().iter().copied());
        prop_assert_eq!(again, w);
    }

    #[test]
    fn group_laws(a in arb_word(), b in arb_word(), c in arb_word()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(FreeWord::identity().mul(&a), a.clone());
        prop_assert_eq!(a.mul(&FreeWord::identity()), a.clone());
        prop_assert!(a.mul(&a.inv()).is_identity());
        prop_assert!(a.inv().mul(&a).is_identity());
    }

    #[test]
    fn endo_is_homomorphism(
        iu in arb_word(),
        iv in arb_word(),
        a in arb_word(),
        b in arb_word(),
    ) {
        prop_assert_eq!(
            apply_endo(&iu, &iv, &a.mul(&b)),
            apply_endo(&iu, &iv, &a).mul(&apply_endo(&iu, &iv, &b))
        );
    }

    #[test]
    fn pow_matches_repeated_mul(a in arb_word(), n in -6i64..=6) {
        let mut oracle = FreeWord::identity();
        let step = if n < 0 { a.inv() } else { a.clone() };
        for _ in 0..n.unsigned_abs() {
            oracle = oracle.mul(&step);
        }
        prop_assert_eq!(a.pow(n), oracle);
    }
}

#[test]
fn group_laws_exhaustive_short_words() {
    let letters = [(Gen::U, 1i64), (Gen::U, -1), (Gen::V, 1), (Gen::V, -1)];
    let mut words = vec![FreeWord::identity()];
    let mut layer = vec![FreeWord::identity()];
    for _ in 0..3 {
        let mut next = Vec::new();
        for w in &layer {
            for &(gen, exp) in &letters {
                next.push(w.mul(&FreeWord::gen_pow(gen, exp)));
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words.sort_by_key(|w| format!("{w}"));
    words.dedup();
    for a in &words {
        for b in &words {
            assert_eq!(a.mul(b).inv(), b.inv().mul(&a.inv()));
            for c in &words {
                assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
            }
        }
    }
}

#[test]
fn bkl_is_conjugate_of_b() {
    for k in -8..=8 {
        for l in -8..=8 {
            let prefix = FreeWord::gen_pow(Gen::V, k).mul(&FreeWord::gen_pow(Gen::U, l));
            assert_eq!(word_bkl(k, l), conj(&prefix, &word_b()));
        }
    }
}
