//! Structural identities of `P₂(K²)`: the θ action, the group laws, and
//! the conjugation homomorphism `l_σ`.

mod common;

use common::{random_kernel_word, random_p2, random_pi1k, random_word};
use klein_braid::p2::{l_sigma, rho, sigma_sq, split_normal, theta, theta_q, P2Elem};
use klein_braid::pi1k::{g_word, Pi1K};
use klein_braid::word::{delta, eps, word_b, FreeWord, Gen};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn theta_is_an_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let q1 = random_pi1k(&mut rng, 4);
        let q2 = random_pi1k(&mut rng, 4);
        let w = random_word(&mut rng, 10);
        assert_eq!(theta_q(q1.mul(q2), &w), theta_q(q1, &theta_q(q2, &w)));
    }
}

#[test]
fn theta_depends_on_parity_only() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..300 {
        let q = random_pi1k(&mut rng, 4);
        let w = random_word(&mut rng, 10);
        assert_eq!(theta(q.m, q.n, &w), theta(q.m, delta(q.n), &w));
    }
}

#[test]
fn theta_sends_b_to_signed_b() {
    for m in -4..=4 {
        for n in -4..=4 {
            assert_eq!(theta(m, n, &word_b()), word_b().pow(eps(n)));
        }
    }
}

#[test]
fn p2_group_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let a = random_p2(&mut rng, 8, 3);
        let b = random_p2(&mut rng, 8, 3);
        let c = random_p2(&mut rng, 8, 3);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(P2Elem::identity().mul(&a), a);
        assert_eq!(a.mul(&P2Elem::identity()), a);
        assert_eq!(a.mul(&a.inv()), P2Elem::identity());
        assert_eq!(a.inv().mul(&a), P2Elem::identity());
    }
}

#[test]
fn l_sigma_is_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..200 {
        let a = random_p2(&mut rng, 8, 3);
        let b = random_p2(&mut rng, 8, 3);
        assert_eq!(l_sigma(&a.mul(&b)), l_sigma(&a).mul(&l_sigma(&b)));
    }
}

#[test]
fn l_sigma_squared_is_conjugation_by_sigma_sq() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..200 {
        let a = random_p2(&mut rng, 8, 3);
        let conj = sigma_sq().mul(&a).mul(&sigma_sq().inv());
        assert_eq!(l_sigma(&l_sigma(&a)), conj);
    }
}

#[test]
fn l_sigma_on_fiber_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..300 {
        let w = random_word(&mut rng, 12);
        let a = P2Elem::new(w.clone(), Pi1K::IDENTITY);
        assert_eq!(l_sigma(&a), P2Elem::new(rho(&w), g_word(&w)));
    }
}

#[test]
fn l_sigma_closed_forms_match_general_path() {
    let b = word_b();
    for r in -5..=5 {
        // l_σ(u^r; 0,0) = ((B u⁻¹)^r B^{-r}; r, 0)
        let lhs = l_sigma(&P2Elem::new(FreeWord::gen_pow(Gen::U, r), Pi1K::IDENTITY));
        let word = b.mul(&FreeWord::u().inv()).pow(r).mul(&b.pow(-r));
        assert_eq!(lhs, P2Elem::new(word, Pi1K::new(r, 0)));
    }
    for s in -5..=5 {
        // l_σ(v^s; 0,0) = ((u v)^{-s} (u B)^{δ_s}; 0, s)
        let lhs = l_sigma(&P2Elem::new(FreeWord::gen_pow(Gen::V, s), Pi1K::IDENTITY));
        let word = FreeWord::u()
            .mul(&FreeWord::v())
            .pow(-s)
            .mul(&FreeWord::u().mul(&b).pow(delta(s)));
        assert_eq!(lhs, P2Elem::new(word, Pi1K::new(0, s)));
    }
    for m in -5..=5 {
        let a = P2Elem::new(FreeWord::identity(), Pi1K::new(m, 0));
        assert_eq!(l_sigma(&a), a);
    }
    for n in -5..=5 {
        let lhs = l_sigma(&P2Elem::new(FreeWord::identity(), Pi1K::new(0, n)));
        assert_eq!(lhs, P2Elem::new(b.pow(delta(n)), Pi1K::new(0, n)));
    }
}

#[test]
fn rho_multiplicative_on_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    for _ in 0..200 {
        let w = random_kernel_word(&mut rng, 4, 3);
        let z = random_word(&mut rng, 10);
        assert_eq!(rho(&w.mul(&z)), rho(&w).mul(&rho(&z)));
    }
}

#[test]
fn l_sigma_preserves_fiber_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(28);
    for _ in 0..200 {
        let x = random_kernel_word(&mut rng, 5, 3);
        let image = l_sigma(&P2Elem::new(x, Pi1K::IDENTITY));
        assert_eq!(image.p1_sharp(), Pi1K::IDENTITY);
    }
}

#[test]
fn split_normal_reconstructs() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..300 {
        let w = random_word(&mut rng, 14);
        let (r, s, x) = split_normal(&w);
        assert_eq!(Pi1K::new(r, s), g_word(&w));
        assert_eq!(g_word(&x), Pi1K::IDENTITY);
        let rebuilt = FreeWord::gen_pow(Gen::U, r)
            .mul(&FreeWord::gen_pow(Gen::V, s))
            .mul(&x);
        assert_eq!(rebuilt, w);
    }
}
