#![allow(dead_code)]

use klein_braid::kerg::{BBasisWord, BFactor};
use klein_braid::pi1k::Pi1K;
use klein_braid::word::{word_bkl, FreeWord, Gen, Syllable};
use klein_braid::P2Elem;
use rand::Rng;

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    FreeWord::from_syllables((0..len).map(|_| Syllable {
        gen: if rng.gen() { Gen::U } else { Gen::V },
        exp: if rng.gen() { 1 } else { -1 },
    }))
}

/// Random element of `ker g`: a product of `B_{k,l}^{±1}` factors.
pub fn random_kernel_word<R: Rng>(rng: &mut R, max_factors: usize, bound: i64) -> FreeWord {
    let n = rng.gen_range(0..=max_factors);
    let mut acc = FreeWord::identity();
    for _ in 0..n {
        let k = rng.gen_range(-bound..=bound);
        let l = rng.gen_range(-bound..=bound);
        let exp = if rng.gen() { 1 } else { -1 };
        acc = acc.mul(&word_bkl(k, l).pow(exp));
    }
    acc
}

/// Random reduced word over the `B`-basis alphabet.
pub fn random_b_word<R: Rng>(rng: &mut R, max_factors: usize, bound: i64) -> BBasisWord {
    let n = rng.gen_range(0..=max_factors);
    BBasisWord::from_factors((0..n).map(|_| BFactor {
        k: rng.gen_range(-bound..=bound),
        l: rng.gen_range(-bound..=bound),
        exp: if rng.gen() { 1 } else { -1 },
    }))
}

pub fn random_pi1k<R: Rng>(rng: &mut R, bound: i64) -> Pi1K {
    Pi1K::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

pub fn random_p2<R: Rng>(rng: &mut R, max_len: usize, bound: i64) -> P2Elem {
    P2Elem::new(random_word(rng, max_len), random_pi1k(rng, bound))
}
