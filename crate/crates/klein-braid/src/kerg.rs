//! The normal closure of `σ²`, identified with `ker g ⊂ F(u,v)`.
//!
//! `ker g` is free of countably-infinite rank. Reidemeister-Schreier
//! rewriting against the transversal `{v^k u^l}` produces the Schreier
//! generators `Γ_{k,l} = v^k u^l v u^l v^{-k-1}` (`l ≠ 0`); the basis used
//! everywhere else is `B_{k,l} = v^k u^l B u^{-l} v^{-k}`, related by
//!
//! ```text
//! Γ_{k,l} = B_{k,l-1} ⋯ B_{k,0}              (l ≥ 1)
//! Γ_{k,l} = B_{k,l}⁻¹ ⋯ B_{k,-1}⁻¹           (l ≤ -1)
//! B_{k,l} = Γ_{k,l+1} Γ_{k,l}⁻¹              (Γ_{k,0} = 1)
//! ```
//!
//! This module also carries the abelianisation of `ker g` as a sparse
//! integer vector indexed by `(k, l)`, the induced maps of `θ`, `ρ` and the
//! conjugations `c_{p,q}` on it, and the special words `T`, `I`, `O`, `J`
//! with their closed forms.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use alloc::collections::BTreeMap;

use crate::p2;
use crate::pi1k::{g_word, Pi1K};
use crate::word::{self, delta, eps, sgn, FreeWord, Gen};
use crate::Error;

/// Whether `w ∈ ker g`.
pub fn in_kerg(w: &FreeWord) -> bool {
    g_word(w) == Pi1K::IDENTITY
}

fn require_kernel(w: &FreeWord) -> Result<(), Error> {
    let image = g_word(w);
    if image == Pi1K::IDENTITY {
        Ok(())
    } else {
        Err(Error::NotInKernel { image })
    }
}

/// A Schreier generator `Γ_{k,l}^{exp}` with `l ≠ 0` and `exp ∈ {-1, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaGen {
    pub k: i64,
    pub l: i64,
    pub exp: i64,
}

impl GammaGen {
    /// The underlying word `(v^k u^l v u^l v^{-k-1})^{exp}`.
    pub fn word(&self) -> FreeWord {
        FreeWord::gen_pow(Gen::V, self.k)
            .mul(&FreeWord::gen_pow(Gen::U, self.l))
            .mul(&FreeWord::v())
            .mul(&FreeWord::gen_pow(Gen::U, self.l))
            .mul(&FreeWord::gen_pow(Gen::V, -self.k - 1))
            .pow(self.exp)
    }
}

/// Reidemeister-Schreier rewriting of a kernel word into Γ-generators.
///
/// Scans the word letter by letter, tracking the coset state `(k, l)` whose
/// representative is `v^k u^l`: a letter `u^{±1}` only updates `l`; a letter
/// `v` emits `Γ_{k,l}` and moves to `(k+1, -l)`; a letter `v⁻¹` emits
/// `Γ_{k-1,-l}⁻¹` and moves to `(k-1, -l)`. Trivial generators (`l = 0`)
/// are skipped. The product of the emitted generators reconstructs `w`.
pub fn rs_rewrite(w: &FreeWord) -> Result<Vec<GammaGen>, Error> {
    require_kernel(w)?;
    let mut out = Vec::new();
    let (mut k, mut l) = (0i64, 0i64);
    for (gen, sign) in w.letters() {
        match (gen, sign) {
            (Gen::U, s) => l += s,
            (Gen::V, 1) => {
                if l != 0 {
                    out.push(GammaGen { k, l, exp: 1 });
                }
                k += 1;
                l = -l;
            }
            (Gen::V, _) => {
                k -= 1;
                l = -l;
                if l != 0 {
                    out.push(GammaGen { k, l, exp: -1 });
                }
            }
        }
    }
    debug_assert_eq!((k, l), (0, 0));
    Ok(out)
}

/// One factor `B_{k,l}^{exp}` of a word in the `B`-basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BFactor {
    pub k: i64,
    pub l: i64,
    pub exp: i64,
}

/// A reduced word over the free basis `{B_{k,l}}` of `ker g`.
///
/// Adjacent factors carry distinct `(k, l)` and no factor has exponent
/// zero; since the basis is free, this form is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BBasisWord {
    factors: Vec<BFactor>,
}

impl BBasisWord {
    pub fn identity() -> BBasisWord {
        BBasisWord::default()
    }

    pub fn from_factors<I: IntoIterator<Item = BFactor>>(iter: I) -> BBasisWord {
        let mut out = BBasisWord::identity();
        for f in iter {
            out.push(f.k, f.l, f.exp);
        }
        out
    }

    /// Appends `B_{k,l}^{exp}`, merging with the last factor.
    pub fn push(&mut self, k: i64, l: i64, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.factors.last_mut() {
            Some(top) if top.k == k && top.l == l => {
                top.exp += exp;
                if top.exp == 0 {
                    self.factors.pop();
                }
            }
            _ => self.factors.push(BFactor { k, l, exp }),
        }
    }

    pub fn factors(&self) -> &[BFactor] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn inv(&self) -> BBasisWord {
        BBasisWord {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|f| BFactor {
                    k: f.k,
                    l: f.l,
                    exp: -f.exp,
                })
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &BBasisWord) -> BBasisWord {
        let mut out = self.clone();
        for f in &rhs.factors {
            out.push(f.k, f.l, f.exp);
        }
        out
    }
}

impl fmt::Display for BBasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, fac) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "B[{},{}]", fac.k, fac.l)?;
            if fac.exp != 1 {
                write!(f, "^{}", fac.exp)?;
            }
        }
        Ok(())
    }
}

/// Expands one Γ-generator in the `B`-basis.
pub fn gamma_to_b(g: &GammaGen) -> BBasisWord {
    debug_assert!(g.l != 0);
    let mut out = BBasisWord::identity();
    if g.l >= 1 {
        for i in 1..=g.l {
            out.push(g.k, g.l - i, 1);
        }
    } else {
        for i in 1..=(-g.l) {
            out.push(g.k, g.l - 1 + i, -1);
        }
    }
    if g.exp < 0 {
        out.inv()
    } else {
        out
    }
}

/// Expresses `B_{k,l}` as `Γ_{k,l+1} Γ_{k,l}⁻¹`, dropping trivial factors.
pub fn b_to_gamma(k: i64, l: i64) -> Vec<GammaGen> {
    let mut out = Vec::new();
    if l + 1 != 0 {
        out.push(GammaGen {
            k,
            l: l + 1,
            exp: 1,
        });
    }
    if l != 0 {
        out.push(GammaGen { k, l, exp: -1 });
    }
    out
}

/// Rewrites a kernel word in the free basis `{B_{k,l}}`.
pub fn to_b_basis(w: &FreeWord) -> Result<BBasisWord, Error> {
    let gammas = rs_rewrite(w)?;
    let mut out = BBasisWord::identity();
    for g in &gammas {
        for f in gamma_to_b(g).factors() {
            out.push(f.k, f.l, f.exp);
        }
    }
    Ok(out)
}

/// Evaluates a `B`-basis word back to a reduced word in `F(u,v)`.
pub fn from_b_basis(bw: &BBasisWord) -> FreeWord {
    let mut acc = FreeWord::identity();
    for f in bw.factors() {
        acc = acc.mul(&word::word_bkl(f.k, f.l).pow(f.exp));
    }
    acc
}

/// Element of the abelianisation of `ker g`: a finite integer combination
/// of the classes of the `B_{k,l}`, stored sparsely with keys sorted by
/// `(k, l)` and no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbKerG {
    coeffs: BTreeMap<(i64, i64), i64>,
}

impl AbKerG {
    pub fn zero() -> AbKerG {
        AbKerG::default()
    }

    /// The single term `c · B_{k,l}`.
    pub fn term(k: i64, l: i64, c: i64) -> AbKerG {
        let mut out = AbKerG::zero();
        out.add_term(k, l, c);
        out
    }

    pub fn add_term(&mut self, k: i64, l: i64, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry((k, l)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&(k, l));
        }
    }

    pub fn coeff(&self, k: i64, l: i64) -> i64 {
        self.coeffs.get(&(k, l)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterates `((k, l), coeff)` in sorted key order.
    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), i64)> + '_ {
        self.coeffs.iter().map(|(&kl, &c)| (kl, c))
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl Add for AbKerG {
    type Output = AbKerG;

    fn add(mut self, rhs: AbKerG) -> AbKerG {
        for ((k, l), c) in rhs.iter() {
            self.add_term(k, l, c);
        }
        self
    }
}

impl Sub for AbKerG {
    type Output = AbKerG;

    fn sub(mut self, rhs: AbKerG) -> AbKerG {
        for ((k, l), c) in rhs.iter() {
            self.add_term(k, l, -c);
        }
        self
    }
}

impl Neg for AbKerG {
    type Output = AbKerG;

    fn neg(self) -> AbKerG {
        AbKerG::zero() - self
    }
}

/// Projection of a `B`-basis word to the abelianisation.
pub fn abelianize(bw: &BBasisWord) -> AbKerG {
    let mut out = AbKerG::zero();
    for f in bw.factors() {
        out.add_term(f.k, f.l, f.exp);
    }
    out
}

/// Induced map `θ(m,n)_Ab : B_{k,l} ↦ ε_n B_{k, ε_n l - 2 δ_k m}`.
pub fn theta_ab(m: i64, n: i64, x: &AbKerG) -> AbKerG {
    let mut out = AbKerG::zero();
    for ((k, l), c) in x.iter() {
        out.add_term(k, eps(n) * l - 2 * delta(k) * m, eps(n) * c);
    }
    out
}

/// Induced map `ρ_Ab : B_{k,l} ↦ ε_k B_{-k, ε_{k+1} l}`.
pub fn rho_ab(x: &AbKerG) -> AbKerG {
    let mut out = AbKerG::zero();
    for ((k, l), c) in x.iter() {
        out.add_term(-k, eps(k + 1) * l, eps(k) * c);
    }
    out
}

/// Induced map `(c_{p,q})_Ab : B_{k,l} ↦ B_{k+p, l + ε_k q}`.
pub fn c_ab(p: i64, q: i64, x: &AbKerG) -> AbKerG {
    let mut out = AbKerG::zero();
    for ((k, l), c) in x.iter() {
        out.add_term(k + p, l + eps(k) * q, c);
    }
    out
}

/// The conjugation `c_{p,q}(x) = v^p u^q x u^{-q} v^{-p}` on kernel words.
pub fn c_pq(p: i64, q: i64, x: &FreeWord) -> Result<FreeWord, Error> {
    require_kernel(x)?;
    let prefix = FreeWord::gen_pow(Gen::V, p).mul(&FreeWord::gen_pow(Gen::U, q));
    Ok(word::conj(&prefix, x))
}

/// The word `T_{k,r} = u^k (B^{ε_r} u^{-ε_r})^{k ε_r}`, `r ∈ {0,1}`.
pub fn special_t(k: i64, r: i64) -> FreeWord {
    let b = word::word_b();
    let inner = b.pow(eps(r)).mul(&FreeWord::gen_pow(Gen::U, -eps(r)));
    FreeWord::gen_pow(Gen::U, k).mul(&inner.pow(k * eps(r)))
}

/// The word `I_k = v^k (v B)^{-k}`.
pub fn special_i(k: i64) -> FreeWord {
    let vb = FreeWord::v().mul(&word::word_b());
    FreeWord::gen_pow(Gen::V, k).mul(&vb.pow(-k))
}

/// The word `O_{k,l} = [v^{2k}, u^l]`.
pub fn special_o(k: i64, l: i64) -> FreeWord {
    word::commutator(
        &FreeWord::gen_pow(Gen::V, 2 * k),
        &FreeWord::gen_pow(Gen::U, l),
    )
}

/// The word `J_{k,l} = v^{2k} (v u^l)^{-2k}`.
pub fn special_j(k: i64, l: i64) -> FreeWord {
    let vul = FreeWord::v().mul(&FreeWord::gen_pow(Gen::U, l));
    FreeWord::gen_pow(Gen::V, 2 * k).mul(&vul.pow(-2 * k))
}

/// Closed form of `T_{k,r}` in the `B`-basis:
/// `∏_{i=1}^{|k|} B_{0, k - σ_k i - r + (σ_k+1)/2}^{σ_k}`.
pub fn closed_t_word(k: i64, r: i64) -> BBasisWord {
    debug_assert!(r == 0 || r == 1);
    let s = sgn(k);
    let mut out = BBasisWord::identity();
    for i in 1..=k.abs() {
        out.push(0, k - s * i - r + (s + 1) / 2, s);
    }
    out
}

/// Closed form of `I_k`: `(∏_{i=1}^{|k|} B_{i + k(1-σ_k)/2, 0})^{-σ_k}`.
pub fn closed_i_word(k: i64) -> BBasisWord {
    let s = sgn(k);
    let mut prod = BBasisWord::identity();
    for i in 1..=k.abs() {
        prod.push(i + k * (1 - s) / 2, 0, 1);
    }
    if s > 0 {
        prod.inv()
    } else {
        prod
    }
}

/// Closed form of `J_{k,l}`, dispatching on the signs of `k` and `l`:
/// for `k, l > 0` and `ε ∈ {±1}`,
/// `J_{k,εl} = ∏_{i=1}^{k} ∏_{j=1}^{l} B_{2k-2i+1, εj-ω}^{-ε}` with
/// `ω = (1+ε)/2`, and `J_{-k,εl}` is the inverse of the same product with
/// first indices `-2i+1`.
pub fn closed_j_word(k: i64, l: i64) -> BBasisWord {
    if k == 0 || l == 0 {
        return BBasisWord::identity();
    }
    let e = sgn(l);
    let w = (1 + e) / 2;
    let mut prod = BBasisWord::identity();
    if k > 0 {
        for i in 1..=k {
            for j in 1..=l.abs() {
                prod.push(2 * k - 2 * i + 1, e * j - w, -e);
            }
        }
        prod
    } else {
        for i in 1..=(-k) {
            for j in 1..=l.abs() {
                prod.push(-2 * i + 1, e * j - w, -e);
            }
        }
        prod.inv()
    }
}

/// Abelianised closed form
/// `T̃_{k,r} = σ_k Σ_{i=1}^{|k|} B_{0, σ_k(i + (σ_k(1-2r)-1)/2)}`; zero for `k = 0`.
pub fn closed_t_ab(k: i64, r: i64) -> AbKerG {
    debug_assert!(r == 0 || r == 1);
    let s = sgn(k);
    let mut out = AbKerG::zero();
    for i in 1..=k.abs() {
        out.add_term(0, s * (i + (s * (1 - 2 * r) - 1) / 2), s);
    }
    out
}

/// Abelianised closed form
/// `Ĩ_k = -σ_k Σ_{i=1}^{|k|} B_{σ_k i + (1-σ_k)/2, 0}`; zero for `k = 0`.
pub fn closed_i_ab(k: i64) -> AbKerG {
    let s = sgn(k);
    let mut out = AbKerG::zero();
    for i in 1..=k.abs() {
        out.add_term(s * i + (1 - s) / 2, 0, -s);
    }
    out
}

/// Abelianised closed form of `Õ_{k,l}`; zero when `k = 0` or `l = 0`.
pub fn closed_o_ab(k: i64, l: i64) -> AbKerG {
    let sk = sgn(k);
    let sl = sgn(l);
    let mut out = AbKerG::zero();
    for i in 1..=k.abs() {
        for j in 1..=l.abs() {
            out.add_term(sk * (2 * i - 1), -sl * j + (sl - 1) / 2, sk * sl);
            out.add_term(sk * (2 * i - 1) - 1, sl * j - (1 + sl) / 2, -sk * sl);
        }
    }
    out
}

/// Abelianised closed form
/// `J̃_{k,l} = -σ_k σ_l Σ_i Σ_j B_{σ_k(2i-1), σ_l(j-(1+σ_l)/2)}`;
/// zero when `k = 0` or `l = 0`.
pub fn closed_j_ab(k: i64, l: i64) -> AbKerG {
    let sk = sgn(k);
    let sl = sgn(l);
    let mut out = AbKerG::zero();
    for i in 1..=k.abs() {
        for j in 1..=l.abs() {
            out.add_term(sk * (2 * i - 1), sl * (j - (1 + sl) / 2), -sk * sl);
        }
    }
    out
}

/// Target basis element of a conjugation identity: `B_{k,l}^{sign}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjTarget {
    pub k: i64,
    pub l: i64,
    pub sign: i64,
}

/// Explicit conjugator realising `θ(m,n)(B_{k,l}) = γ B_{k, ε_n l - 2δ_k m}^{ε_n} γ⁻¹`
/// with `γ = θ(m,n)(v^k u^l) u^{ε_{n+1} l + 2 δ_k m} v^{-k} ∈ ker g`.
pub fn conj_data_theta(m: i64, n: i64, k: i64, l: i64) -> (FreeWord, ConjTarget) {
    let prefix = FreeWord::gen_pow(Gen::V, k).mul(&FreeWord::gen_pow(Gen::U, l));
    let gamma = p2::theta(m, n, &prefix)
        .mul(&FreeWord::gen_pow(
            Gen::U,
            eps(n + 1) * l + 2 * delta(k) * m,
        ))
        .mul(&FreeWord::gen_pow(Gen::V, -k));
    let target = ConjTarget {
        k,
        l: eps(n) * l - 2 * delta(k) * m,
        sign: eps(n),
    };
    (gamma, target)
}

/// Explicit conjugator realising `ρ(B_{k,l}) = λ B_{-k, ε_{k+1} l}^{ε_k} λ⁻¹`
/// with `λ = ρ(v^k u^l) u^{ε_k l} v^k ∈ ker g`.
pub fn conj_data_rho(k: i64, l: i64) -> (FreeWord, ConjTarget) {
    let prefix = FreeWord::gen_pow(Gen::V, k).mul(&FreeWord::gen_pow(Gen::U, l));
    let lambda = p2::rho(&prefix)
        .mul(&FreeWord::gen_pow(Gen::U, eps(k) * l))
        .mul(&FreeWord::gen_pow(Gen::V, k));
    let target = ConjTarget {
        k: -k,
        l: eps(k + 1) * l,
        sign: eps(k),
    };
    (lambda, target)
}

/// Explicit conjugator realising `c_{p,q}(B_{k,l}) = η B_{k+p, l+ε_k q} η⁻¹`
/// with `η = v^p u^q v^k u^{ε_{k+1} q} v^{-k-p} ∈ ker g`.
pub fn conj_data_c(p: i64, q: i64, k: i64, l: i64) -> (FreeWord, ConjTarget) {
    let eta = FreeWord::gen_pow(Gen::V, p)
        .mul(&FreeWord::gen_pow(Gen::U, q))
        .mul(&FreeWord::gen_pow(Gen::V, k))
        .mul(&FreeWord::gen_pow(Gen::U, eps(k + 1) * q))
        .mul(&FreeWord::gen_pow(Gen::V, -k - p));
    let target = ConjTarget {
        k: k + p,
        l: l + eps(k) * q,
        sign: 1,
    };
    (eta, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{word_b, word_bkl};

    #[test]
    fn kernel_membership() {
        assert!(in_kerg(&word_b()));
        assert!(!in_kerg(&FreeWord::u()));
        assert!(in_kerg(&word_bkl(3, -2)));
    }

    #[test]
    fn rs_rewrite_examples() {
        assert_eq!(
            rs_rewrite(&word_b()).unwrap(),
            alloc::vec![GammaGen { k: 0, l: 1, exp: 1 }]
        );
        assert_eq!(
            rs_rewrite(&word_bkl(1, 0)).unwrap(),
            alloc::vec![GammaGen { k: 1, l: 1, exp: 1 }]
        );
        assert!(rs_rewrite(&FreeWord::identity()).unwrap().is_empty());
        assert_eq!(
            rs_rewrite(&FreeWord::u()).unwrap_err(),
            Error::NotInKernel {
                image: Pi1K::new(1, 0)
            }
        );
    }

    #[test]
    fn gamma_expansion() {
        let g = GammaGen { k: 0, l: 1, exp: 1 };
        assert_eq!(gamma_to_b(&g).factors(), &[BFactor { k: 0, l: 0, exp: 1 }]);
        let g = GammaGen { k: 0, l: 2, exp: 1 };
        assert_eq!(
            gamma_to_b(&g).factors(),
            &[
                BFactor { k: 0, l: 1, exp: 1 },
                BFactor { k: 0, l: 0, exp: 1 }
            ]
        );
        let g = GammaGen {
            k: 0,
            l: -1,
            exp: 1,
        };
        assert_eq!(
            gamma_to_b(&g).factors(),
            &[BFactor {
                k: 0,
                l: -1,
                exp: -1
            }]
        );
    }

    #[test]
    fn b_to_gamma_examples() {
        assert_eq!(
            b_to_gamma(0, 0),
            alloc::vec![GammaGen { k: 0, l: 1, exp: 1 }]
        );
        assert_eq!(
            b_to_gamma(1, 0),
            alloc::vec![GammaGen { k: 1, l: 1, exp: 1 }]
        );
        assert_eq!(
            b_to_gamma(0, -1),
            alloc::vec![GammaGen {
                k: 0,
                l: -1,
                exp: -1
            }]
        );
    }

    #[test]
    fn b_basis_round_trip_values() {
        assert_eq!(
            to_b_basis(&word_b()).unwrap().factors(),
            &[BFactor { k: 0, l: 0, exp: 1 }]
        );
        assert_eq!(
            to_b_basis(&word_bkl(2, -3)).unwrap().factors(),
            &[BFactor {
                k: 2,
                l: -3,
                exp: 1
            }]
        );
        assert!(to_b_basis(&word_b().mul(&word_b().inv()))
            .unwrap()
            .is_identity());
        assert_eq!(
            from_b_basis(&BBasisWord::from_factors([BFactor { k: 0, l: 0, exp: 1 }])),
            word_b()
        );
        assert!(from_b_basis(&BBasisWord::identity()).is_identity());
        assert_eq!(
            from_b_basis(&BBasisWord::from_factors([BFactor {
                k: 1,
                l: 0,
                exp: -1
            }])),
            word_bkl(1, 0).inv()
        );
    }

    #[test]
    fn abelianize_examples() {
        let bw = BBasisWord::from_factors([
            BFactor { k: 0, l: 0, exp: 1 },
            BFactor { k: 1, l: 2, exp: 1 },
            BFactor { k: 0, l: 0, exp: 1 },
            BFactor {
                k: 1,
                l: 2,
                exp: -1,
            },
        ]);
        let ab = abelianize(&bw);
        assert_eq!(ab.coeff(0, 0), 2);
        assert_eq!(ab.coeff(1, 2), 0);

        // O_{1,1} = B_{1,-1} B_{0,0}^{-1}
        let o11 = abelianize(&to_b_basis(&special_o(1, 1)).unwrap());
        assert_eq!(o11, AbKerG::term(1, -1, 1) + AbKerG::term(0, 0, -1));
    }

    #[test]
    fn induced_map_examples() {
        let x = AbKerG::term(1, 3, 1);
        assert_eq!(theta_ab(0, 0, &x), x);
        assert_eq!(theta_ab(2, 1, &x), AbKerG::term(1, -7, -1));
        assert_eq!(
            theta_ab(5, 0, &AbKerG::term(0, 1, 1)),
            AbKerG::term(0, 1, 1)
        );

        assert_eq!(rho_ab(&AbKerG::term(0, 0, 1)), AbKerG::term(0, 0, 1));
        assert_eq!(rho_ab(&AbKerG::term(1, 2, 1)), AbKerG::term(-1, 2, -1));
        assert_eq!(rho_ab(&AbKerG::zero()), AbKerG::zero());

        let x = AbKerG::term(0, 0, 1);
        assert_eq!(c_ab(0, 0, &x), x);
        assert_eq!(c_ab(1, 1, &x), AbKerG::term(1, 1, 1));
        assert_eq!(c_ab(0, 3, &AbKerG::term(1, 0, 1)), AbKerG::term(1, -3, 1));
    }

    #[test]
    fn c_pq_examples() {
        assert_eq!(c_pq(1, 0, &word_b()).unwrap(), word_bkl(1, 0));
        assert_eq!(c_pq(0, 1, &word_b()).unwrap(), word_bkl(0, 1));
        let x = word_bkl(2, 1).mul(&word_bkl(0, -1));
        assert_eq!(c_pq(0, 0, &x).unwrap(), x);
        assert!(c_pq(1, 1, &FreeWord::u()).is_err());
    }

    #[test]
    fn special_word_values() {
        assert_eq!(
            special_t(1, 0),
            FreeWord::u().mul(&word_b()).mul(&FreeWord::u().inv())
        );
        assert_eq!(
            special_i(1),
            FreeWord::v().mul(&word_b().inv()).mul(&FreeWord::v().inv())
        );
        assert!(special_o(0, 5).is_identity());
        assert!(special_j(3, 0).is_identity());
        for (k, l) in [(1, 1), (-2, 3), (2, -2)] {
            assert!(in_kerg(&special_t(k, delta(l))));
            assert!(in_kerg(&special_i(k)));
            assert!(in_kerg(&special_o(k, l)));
            assert!(in_kerg(&special_j(k, l)));
        }
    }

    #[test]
    fn closed_word_values() {
        assert_eq!(
            closed_t_word(1, 1).factors(),
            &[BFactor { k: 0, l: 0, exp: 1 }]
        );
        assert_eq!(
            closed_j_word(1, 1).factors(),
            &[BFactor {
                k: 1,
                l: 0,
                exp: -1
            }]
        );
        assert_eq!(
            closed_j_word(1, -1).factors(),
            &[BFactor {
                k: 1,
                l: -1,
                exp: 1
            }]
        );
        assert_eq!(
            closed_i_word(1).factors(),
            &[BFactor {
                k: 1,
                l: 0,
                exp: -1
            }]
        );
    }

    #[test]
    fn closed_ab_values() {
        assert!(closed_t_ab(0, 0).is_zero());
        assert!(closed_i_ab(0).is_zero());
        assert!(closed_o_ab(0, 4).is_zero());
        assert!(closed_j_ab(2, 0).is_zero());
        assert_eq!(
            closed_o_ab(1, 1),
            AbKerG::term(1, -1, 1) + AbKerG::term(0, 0, -1)
        );
        assert_eq!(closed_i_ab(1), AbKerG::term(1, 0, -1));
        // T̃_{2,1} = B_{0,0} + B_{0,1}
        assert_eq!(
            closed_t_ab(2, 1),
            AbKerG::term(0, 0, 1) + AbKerG::term(0, 1, 1)
        );
    }

    #[test]
    fn conj_data_examples() {
        // θ(0,0) is the identity, so the identity reduces to B_{k,l} = γ B_{k,l} γ⁻¹.
        let (gamma, target) = conj_data_theta(0, 0, 2, -1);
        assert!(in_kerg(&gamma));
        assert_eq!(
            target,
            ConjTarget {
                k: 2,
                l: -1,
                sign: 1
            }
        );
        assert_eq!(
            word::conj(&gamma, &word_bkl(2, -1)),
            p2::theta(0, 0, &word_bkl(2, -1))
        );

        let (lambda, target) = conj_data_rho(0, 0);
        assert!(in_kerg(&lambda));
        assert_eq!(
            target,
            ConjTarget {
                k: 0,
                l: 0,
                sign: 1
            }
        );
        assert_eq!(p2::rho(&word_b()), word::conj(&lambda, &word_b()));

        let (eta, target) = conj_data_c(1, 0, 0, 0);
        assert!(in_kerg(&eta));
        assert_eq!(
            target,
            ConjTarget {
                k: 1,
                l: 0,
                sign: 1
            }
        );
        assert_eq!(
            c_pq(1, 0, &word_b()).unwrap(),
            word::conj(&eta, &word_bkl(1, 0))
        );
    }
}
