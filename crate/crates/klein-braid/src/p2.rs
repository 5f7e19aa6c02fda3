//! Arithmetic in `P₂(K²) = F(u,v) ⋊_θ (Z ⋊ Z)`.
//!
//! Elements are pairs `(w; m, n)`. The twisting automorphism `θ(m,n)` acts
//! on `F(u,v)` by
//!
//! ```text
//! u ↦ B^{m-δ_n} u^{ε_n} B^{-m+δ_n}
//! v ↦ B^m v u^{-2m} B^{-m+δ_n}
//! ```
//!
//! where `B = u v u v⁻¹`; it depends only on `m` and the parity of `n`, and
//! sends `B` to `B^{ε_n}`. The swap generator `σ` of the full braid group is
//! not itself a data value: it enters only through `σ² = (B; 0, 0)` and the
//! conjugation homomorphism [`l_sigma`].

use core::fmt;
use core::ops::Mul;

use crate::pi1k::{g_word, Pi1K};
use crate::word::{self, delta, eps, FreeWord, Gen};

/// Element `(w; m, n)` of `P₂(K²)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct P2Elem {
    pub w: FreeWord,
    pub q: Pi1K,
}

impl P2Elem {
    pub fn new(w: FreeWord, q: Pi1K) -> P2Elem {
        P2Elem { w, q }
    }

    pub fn identity() -> P2Elem {
        P2Elem::default()
    }

    /// Semidirect product `(w₁ θ(q₁)(w₂); q₁ q₂)`.
    pub fn mul(&self, rhs: &P2Elem) -> P2Elem {
        P2Elem {
            w: self.w.mul(&theta(self.q.m, self.q.n, &rhs.w)),
            q: self.q.mul(rhs.q),
        }
    }

    /// Inverse `(θ(q⁻¹)(w⁻¹); q⁻¹)`.
    pub fn inv(&self) -> P2Elem {
        let qi = self.q.inv();
        P2Elem {
            w: theta(qi.m, qi.n, &self.w.inv()),
            q: qi,
        }
    }

    /// The power `self^n`.
    pub fn pow(&self, n: i64) -> P2Elem {
        let mut base = if n < 0 { self.inv() } else { self.clone() };
        let mut n = n.unsigned_abs();
        let mut acc = P2Elem::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Strand-forgetting projection `(p₁)_# (w; r, s) = (r, s)`.
    pub fn p1_sharp(&self) -> Pi1K {
        self.q
    }
}

impl Mul for &P2Elem {
    type Output = P2Elem;

    fn mul(self, rhs: &P2Elem) -> P2Elem {
        P2Elem::mul(self, rhs)
    }
}

impl fmt::Display for P2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.w, self.q.m, self.q.n)
    }
}

/// The element `σ² = (B; 0, 0)`.
pub fn sigma_sq() -> P2Elem {
    P2Elem::new(word::word_b(), Pi1K::IDENTITY)
}

/// The twisting automorphism `θ(m, n)` applied to a word.
pub fn theta(m: i64, n: i64, w: &FreeWord) -> FreeWord {
    let b = word::word_b();
    let d = delta(n);
    let img_u = b
        .pow(m - d)
        .mul(&FreeWord::gen_pow(Gen::U, eps(n)))
        .mul(&b.pow(-m + d));
    let img_v = b
        .pow(m)
        .mul(&FreeWord::v())
        .mul(&FreeWord::gen_pow(Gen::U, -2 * m))
        .mul(&b.pow(-m + d));
    word::apply_endo(&img_u, &img_v, w)
}

/// `θ(q)` for `q ∈ Z ⋊ Z`.
pub fn theta_q(q: Pi1K, w: &FreeWord) -> FreeWord {
    theta(q.m, q.n, w)
}

fn rho_letter(gen: Gen, sign: i64) -> FreeWord {
    let b = word::word_b();
    let base = match gen {
        // ρ(u) = B u⁻¹ B⁻¹
        Gen::U => b.mul(&FreeWord::u().inv()).mul(&b.inv()),
        // ρ(v) = v⁻¹ B
        Gen::V => FreeWord::v().inv().mul(&b),
    };
    if sign > 0 {
        base
    } else {
        // ρ(x⁻¹) = θ(g(x)⁻¹)(ρ(x)⁻¹)
        let gi = g_word(&FreeWord::gen(gen)).inv();
        theta_q(gi, &base.inv())
    }
}

/// The word part `ρ` of `l_σ` restricted to `(w; 0, 0)`.
///
/// Computed letter by letter: `ρ(x₁ ⋯ x_r)` accumulates
/// `θ(g(x₁ ⋯ x_{j-1}))(ρ(x_j))` using the cocycle rule
/// `ρ(wz) = ρ(w) θ(g(w))(ρ(z))`.
pub fn rho(w: &FreeWord) -> FreeWord {
    let mut acc = FreeWord::identity();
    let mut gacc = Pi1K::IDENTITY;
    for (gen, sign) in w.letters() {
        acc = acc.mul(&theta_q(gacc, &rho_letter(gen, sign)));
        gacc = gacc.mul(g_word(&FreeWord::gen_pow(gen, sign)));
    }
    acc
}

/// Conjugation by the swap generator, `l_σ(b) = σ b σ⁻¹`.
///
/// A general element decomposes as `(w; m, n) = (w; 0,0)(1; m,0)(1; 0,n)`,
/// and `l_σ` sends the three factors to `(ρ(w); g(w))`, `(1; m, 0)` and
/// `(B^{δ_n}; 0, n)` respectively.
pub fn l_sigma(a: &P2Elem) -> P2Elem {
    let head = P2Elem::new(rho(&a.w), g_word(&a.w));
    let mid = P2Elem::new(FreeWord::identity(), Pi1K::new(a.q.m, 0));
    let tail = P2Elem::new(word::word_b().pow(delta(a.q.n)), Pi1K::new(0, a.q.n));
    head.mul(&mid).mul(&tail)
}

/// Normal-form split `w = u^r v^s x` with `x ∈ ker g`.
///
/// Returns `(r, s, x)` where `(r, s) = g(w)` and `x = v^{-s} u^{-r} w`.
pub fn split_normal(w: &FreeWord) -> (i64, i64, FreeWord) {
    let g = g_word(w);
    let x = FreeWord::gen_pow(Gen::V, -g.n)
        .mul(&FreeWord::gen_pow(Gen::U, -g.m))
        .mul(w);
    (g.m, g.n, x)
}
