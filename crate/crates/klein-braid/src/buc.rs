//! The Borsuk-Ulam classifier, witness generation and verification, and the
//! mod-2 obstruction machinery.
//!
//! A homotopy class with normal form `nf` fails to have the Borsuk-Ulam
//! property exactly when a pair `a, b ∈ P₂(K²)` exists with
//!
//! 1. `a l_σ(b) = b a`,
//! 2. `(p₁)_#(a l_σ(a)) = f10`,
//! 3. `(p₁)_#(b) = f01`.
//!
//! [`classify`] decides the property directly from the normal form: it holds
//! iff the form is of Type 3, or of Type 4 with `s₁` odd, `r₂ ≠ 0`, and
//! `e(r₁) > e(r₂)` whenever `r₁ ≠ 0` (2-adic valuations). For the negative
//! classes, [`generate_witness`] produces an explicit pair and
//! [`verify_witness`] checks the three conditions by plain braid arithmetic,
//! independently of the classifier. For the positive Type-4 classes, the
//! functional `ξ_{n₁,r₂}` kills both unknown sides of the witness equation
//! ([`mu_ab`], [`nu_ab`]) but not its constant side ([`rhs_type4`]), which is
//! the contradiction the obstruction checks replay.

use crate::kerg::{closed_i_ab, closed_j_ab, closed_o_ab, closed_t_ab, AbKerG};
use crate::p2::{l_sigma, sigma_sq, P2Elem};
use crate::pi1k::{HomNormalForm, HomPair, Pi1K};
use crate::word::{delta, eps, FreeWord, Gen};
use crate::Error;

/// 2-adic valuation `e(t)`: the largest `e` with `2^e | t`.
pub fn val2(t: i64) -> Result<u32, Error> {
    if t == 0 {
        Err(Error::ZeroInput)
    } else {
        Ok(t.trailing_zeros())
    }
}

/// Odd part `o(t) = |t| / 2^{e(t)}`, positive and odd.
pub fn odd_part(t: i64) -> Result<i64, Error> {
    let e = val2(t)?;
    Ok((t.unsigned_abs() >> e) as i64)
}

/// Why a class does or does not have the Borsuk-Ulam property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuReason {
    Type3,
    Type4OddValuation,
    NotBuType1,
    NotBuType2,
    NotBuType4EvenS1,
    NotBuType4ValuationFail,
    NotBuType4ZeroR2,
}

impl BuReason {
    /// The canonical name used in CLI and JSON output.
    pub fn name(&self) -> &'static str {
        match self {
            BuReason::Type3 => "Type3",
            BuReason::Type4OddValuation => "Type4OddValuation",
            BuReason::NotBuType1 => "NotBU-Type1",
            BuReason::NotBuType2 => "NotBU-Type2",
            BuReason::NotBuType4EvenS1 => "NotBU-Type4-EvenS1",
            BuReason::NotBuType4ValuationFail => "NotBU-Type4-ValuationFail",
            BuReason::NotBuType4ZeroR2 => "NotBU-Type4-ZeroR2",
        }
    }
}

/// Classification verdict for one homotopy class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuVerdict {
    pub has_bu: bool,
    pub reason: BuReason,
}

/// Decides whether the class of `nf` has the Borsuk-Ulam property.
pub fn classify(nf: &HomNormalForm) -> BuVerdict {
    let (has_bu, reason) = match *nf {
        HomNormalForm::Type1 { .. } => (false, BuReason::NotBuType1),
        HomNormalForm::Type2 { .. } => (false, BuReason::NotBuType2),
        HomNormalForm::Type3 { .. } => (true, BuReason::Type3),
        HomNormalForm::Type4 { r1, s1, r2, .. } => {
            if delta(s1) == 0 {
                (false, BuReason::NotBuType4EvenS1)
            } else if r2 == 0 {
                (false, BuReason::NotBuType4ZeroR2)
            } else if r1 == 0 || val2(r1).unwrap() > val2(r2).unwrap() {
                (true, BuReason::Type4OddValuation)
            } else {
                (false, BuReason::NotBuType4ValuationFail)
            }
        }
    };
    BuVerdict { has_bu, reason }
}

/// Outcome of witness generation for one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An explicit pair satisfying the three witness conditions.
    Generated { a: P2Elem, b: P2Elem },
    /// Types 1 and 2 with `i = 1`: the class reduces to `i = 0` at the
    /// fundamental-group level, but no braid-level transport of the witness
    /// is available, so no pair is produced.
    UnsupportedI1,
    /// The class has the Borsuk-Ulam property; no witness exists.
    NotApplicableBU,
}

impl Witness {
    /// Applies [`shift_witness`] to a generated pair; other outcomes pass through.
    pub fn shift(self, k1: i64, k2: i64) -> Witness {
        match self {
            Witness::Generated { a, b } => {
                let (a, b) = shift_witness(&a, &b, k1, k2);
                Witness::Generated { a, b }
            }
            other => other,
        }
    }
}

fn in_sigma(rho: i64, gamma: i64, xi: i64, tau: i64) -> bool {
    (rho == 0 && xi == 0 && (gamma == 1 || gamma == 3) && (tau == 0 || tau == 1))
        || (gamma == 0 && tau == 0 && rho >= 0)
        || (rho == 0 && gamma == 2 && xi == 0 && tau == 0)
}

/// Witness pair for a class `(1,0) ↦ (ρ, γ)`, `(0,1) ↦ (ξ, τ)` with
/// `(ρ, γ, ξ, τ)` in the table
/// `Σ = {(0, 2s+1, 0, j) : j,s ∈ {0,1}} ∪ {(r₁, 0, r₂, 0) : r₁ ≥ 0} ∪ {(0,2,0,0)}`:
///
/// ```text
/// a = (u^{δ_ρ} v^{δ_γ} B^{δ_γ(γ-δ_γ)/2}; (ρ-δ_ρ)/2, (γ-δ_γ)/2)
/// b = (B^{-δ_ρ ξ}; ξ, τ)
/// ```
pub fn sigma_table_witness(
    rho: i64,
    gamma: i64,
    xi: i64,
    tau: i64,
) -> Result<(P2Elem, P2Elem), Error> {
    if !in_sigma(rho, gamma, xi, tau) {
        return Err(Error::NotInSigma);
    }
    let dr = delta(rho);
    let dg = delta(gamma);
    let b = crate::word::word_b();
    let a_word = FreeWord::gen_pow(Gen::U, dr)
        .mul(&FreeWord::gen_pow(Gen::V, dg))
        .mul(&b.pow(dg * (gamma - dg) / 2));
    let a = P2Elem::new(a_word, Pi1K::new((rho - dr) / 2, (gamma - dg) / 2));
    let bb = P2Elem::new(b.pow(-dr * xi), Pi1K::new(xi, tau));
    Ok((a, bb))
}

/// Witness pair for Type-4 classes with `s₁` odd that fail the valuation
/// test, built from `c = (u^{2^{e(r₁)}} v²; 0, 0)`:
///
/// ```text
/// a = (c l_σ(c) σ²)^{(o(r₁)-1)/2} c      b = (c l_σ(c) σ²)^{m},  m = r₂ / 2^{e(r₁)}
/// ```
///
/// The pair certifies the class `(1,0) ↦ (r₁, 2o(r₁))`, `(0,1) ↦ (r₂, 2m)`.
/// Requires `r₁ > 0` and either `r₂ = 0` or `e(r₁) ≤ e(r₂)`.
pub fn type4_odd_witness(r1: i64, r2: i64) -> Result<(P2Elem, P2Elem), Error> {
    if r1 <= 0 {
        return Err(Error::WitnessPrecondition);
    }
    let e = val2(r1).unwrap();
    if r2 != 0 && val2(r2).unwrap() < e {
        return Err(Error::WitnessPrecondition);
    }
    let c_word = FreeWord::gen_pow(Gen::U, 1i64 << e).mul(&FreeWord::gen_pow(Gen::V, 2));
    let c = P2Elem::new(c_word, Pi1K::IDENTITY);
    // (cσ)² = c l_σ(c) σ² lies in P₂ even though cσ does not.
    let cs2 = c.mul(&l_sigma(&c)).mul(&sigma_sq());
    let o = odd_part(r1).unwrap();
    let m = r2 / (1i64 << e);
    let a = cs2.pow((o - 1) / 2).mul(&c);
    let b = cs2.pow(m);
    Ok((a, b))
}

/// Moves a witness to the class whose `f10` second coordinate is shifted by
/// `4 k₁` and whose `f01` second coordinate is shifted by `2 k₂`, using the
/// central element `(1; 0, 2)`:
/// `a' = a (1; 0, 2k₁)`, `b' = b (1; 0, 2k₂)`.
pub fn shift_witness(a: &P2Elem, b: &P2Elem, k1: i64, k2: i64) -> (P2Elem, P2Elem) {
    let za = P2Elem::new(FreeWord::identity(), Pi1K::new(0, 2 * k1));
    let zb = P2Elem::new(FreeWord::identity(), Pi1K::new(0, 2 * k2));
    (a.mul(&za), b.mul(&zb))
}

/// Produces a witness pair for the class of `nf` whenever one exists.
///
/// Dispatch: classes with the Borsuk-Ulam property yield `NotApplicableBU`;
/// Types 1/2 with `i = 1` yield `UnsupportedI1`; every other class is
/// covered by a table witness or the Type-4 power construction, shifted to
/// the exact `(s₁, s₂)` of the normal form.
pub fn generate_witness(nf: &HomNormalForm) -> Witness {
    if classify(nf).has_bu {
        return Witness::NotApplicableBU;
    }
    let generated = |pair: (P2Elem, P2Elem)| Witness::Generated {
        a: pair.0,
        b: pair.1,
    };
    match *nf {
        HomNormalForm::Type1 { i: 0, s1, s2 } => {
            let s = s1.rem_euclid(2);
            generated(sigma_table_witness(0, 2 * s + 1, 0, 0).unwrap()).shift((s1 - s) / 2, s2)
        }
        HomNormalForm::Type2 { i: 0, s1, s2 } => {
            let s = s1.rem_euclid(2);
            generated(sigma_table_witness(0, 2 * s + 1, 0, 1).unwrap()).shift((s1 - s) / 2, s2)
        }
        HomNormalForm::Type1 { .. } | HomNormalForm::Type2 { .. } => Witness::UnsupportedI1,
        HomNormalForm::Type4 { r1, s1, r2, s2 } => {
            if delta(s1) == 0 {
                generated(sigma_table_witness(r1, 0, r2, 0).unwrap()).shift(s1 / 2, s2)
            } else if r1 == 0 && r2 == 0 {
                generated(sigma_table_witness(0, 2, 0, 0).unwrap()).shift((s1 - 1) / 2, s2)
            } else {
                // s₁ odd, r₁ > 0, and r₂ = 0 or e(r₁) ≤ e(r₂).
                let m = r2 / (1i64 << val2(r1).unwrap());
                let o = odd_part(r1).unwrap();
                generated(type4_odd_witness(r1, r2).unwrap()).shift((s1 - o) / 2, s2 - m)
            }
        }
        HomNormalForm::Type3 { .. } => unreachable!("Type 3 always has the property"),
    }
}

/// Result of checking the three witness conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessReport {
    /// `a l_σ(b) = b a`.
    pub cond_i: bool,
    /// `(p₁)_#(a l_σ(a)) = f10`.
    pub cond_ii: bool,
    /// `(p₁)_#(b) = f01`.
    pub cond_iii: bool,
}

impl WitnessReport {
    pub fn all(&self) -> bool {
        self.cond_i && self.cond_ii && self.cond_iii
    }
}

/// Checks the witness conditions for `h` by direct arithmetic in `P₂(K²)`.
///
/// All three conditions holding certifies that the class of `h` does not
/// have the Borsuk-Ulam property; the check never consults [`classify`].
pub fn verify_witness(h: &HomPair, a: &P2Elem, b: &P2Elem) -> WitnessReport {
    WitnessReport {
        cond_i: a.mul(&l_sigma(b)) == b.mul(a),
        cond_ii: a.mul(&l_sigma(a)).p1_sharp() == h.f10(),
        cond_iii: b.p1_sharp() == h.f01(),
    }
}

/// `μ₁(B_{k,l}) = B_{k, l-2ε_k m₁} + B_{k,-l}`, extended linearly.
pub fn mu1_ab(m1: i64, x: &AbKerG) -> AbKerG {
    let mut out = AbKerG::zero();
    for ((k, l), c) in x.iter() {
        out.add_term(k, l - 2 * eps(k) * m1, c);
        out.add_term(k, -l, c);
    }
    out
}

/// `μ₂(B_{k,l}) = ε_k ε_{δ_{n₁}} B_{-k, ε_{δ_{n₁}} ε_{k+1} l + 2δ_k m₁}
///  - B_{k+2n₁-2s, l - 2ε_k δ_{n₁+1} m₁}`, extended linearly; `s ∈ {0,1}`.
pub fn mu2_ab(m1: i64, n1: i64, s: i64, x: &AbKerG) -> AbKerG {
    debug_assert!(s == 0 || s == 1);
    let dn = delta(n1);
    let mut out = AbKerG::zero();
    for ((k, l), c) in x.iter() {
        out.add_term(
            -k,
            eps(dn) * eps(k + 1) * l + 2 * delta(k) * m1,
            eps(k) * eps(dn) * c,
        );
        out.add_term(k + 2 * n1 - 2 * s, l - 2 * eps(k) * delta(n1 + 1) * m1, -c);
    }
    out
}

/// `μ(B_{k,l}) = B_{k, l+2ε_k δ_{n₁} r₂} - B_{k, l-2δ_k r₂}`, extended linearly.
pub fn mu_ab(n1: i64, r2: i64, x: &AbKerG) -> AbKerG {
    let mut out = AbKerG::zero();
    for ((k, l), c) in x.iter() {
        out.add_term(k, l + 2 * eps(k) * delta(n1) * r2, c);
        out.add_term(k, l - 2 * delta(k) * r2, -c);
    }
    out
}

/// `ν(B_{k,l}) = ε_k ε_{n₁} B_{-k, ε_{n₁} ε_{k+1} l - 2δ_k(m₁ + 2δ_{n₁} r₂)}
///  - B_{k+2(n₁-1), l + ε_k(2δ_{n₁+1} m₁ - ε_{n₁} r₁)}`, extended linearly.
pub fn nu_ab(m1: i64, n1: i64, r1: i64, r2: i64, x: &AbKerG) -> AbKerG {
    let mut out = AbKerG::zero();
    for ((k, l), c) in x.iter() {
        out.add_term(
            -k,
            eps(n1) * eps(k + 1) * l - 2 * delta(k) * (m1 + 2 * delta(n1) * r2),
            eps(k) * eps(n1) * c,
        );
        out.add_term(
            k + 2 * (n1 - 1),
            l + eps(k) * (2 * delta(n1 + 1) * m1 - eps(n1) * r1),
            -c,
        );
    }
    out
}

/// Constant side of the Type-2/Type-3 witness equation:
/// `Ĩ_{2n₁-2s} - T̃_{-2m₁,δ_{n₁}} - Õ_{n₁-s,-2m₁}
///  - (m₁+δ_{n₁}+ε_{n₁}) B_{0,0} - (m₁-δ_{n₁}) B_{0,-2m₁}
///  - B_{2n₁-2s, -2δ_{n₁+1} m₁} + B_{2n₁-2s, 0}`.
pub fn rhs_type2(s: i64, m1: i64, n1: i64) -> AbKerG {
    debug_assert!(s == 0 || s == 1);
    closed_i_ab(2 * n1 - 2 * s)
        - closed_t_ab(-2 * m1, delta(n1))
        - closed_o_ab(n1 - s, -2 * m1)
        - AbKerG::term(0, 0, m1 + delta(n1) + eps(n1))
        - AbKerG::term(0, -2 * m1, m1 - delta(n1))
        - AbKerG::term(2 * n1 - 2 * s, -2 * delta(n1 + 1) * m1, 1)
        + AbKerG::term(2 * n1 - 2 * s, 0, 1)
}

/// Constant side of the Type-4 witness equation:
/// `J̃_{n₁-1,-2r₂} - Õ_{n₁-1,2δ_{n₁}r₂} - T̃_{2δ_{n₁}r₂,δ_{n₁}}
///  + r₂ B_{2(n₁-1), 2δ_{n₁+1}m₁ - ε_{n₁}r₁}
///  - (m₁-δ_{n₁}) B_{0, 2δ_{n₁}r₂} - (δ_{n₁}(1-2r₂) - m₁ + r₂) B_{0,0}`.
pub fn rhs_type4(r1: i64, r2: i64, m1: i64, n1: i64) -> AbKerG {
    let dn = delta(n1);
    closed_j_ab(n1 - 1, -2 * r2) - closed_o_ab(n1 - 1, 2 * dn * r2) - closed_t_ab(2 * dn * r2, dn)
        + AbKerG::term(2 * (n1 - 1), 2 * delta(n1 + 1) * m1 - eps(n1) * r1, r2)
        - AbKerG::term(0, 2 * dn * r2, m1 - dn)
        - AbKerG::term(0, 0, dn * (1 - 2 * r2) - m1 + r2)
}

/// Whether `2^{e+1}` divides `l`.
fn divisible_next_pow2(l: i64, e: u32) -> bool {
    l == 0 || l.trailing_zeros() > e
}

/// The mod-2 functional `ξ_{n₁,r₂}`: the parity of the coefficient sum over
/// basis positions `(n₁-1, l)` with `2^{e(r₂)+1} | l`.
///
/// Returns `true` for `1̄`. Requires `r₂ ≠ 0`.
pub fn xi(n1: i64, r2: i64, x: &AbKerG) -> Result<bool, Error> {
    let e = val2(r2)?;
    let mut sum = 0i64;
    for ((k, l), c) in x.iter() {
        if k == n1 - 1 && divisible_next_pow2(l, e) {
            sum += c;
        }
    }
    Ok(delta(sum) == 1)
}

/// The all-ones mod-2 functional `B_{k,l} ↦ 1̄`: parity of the total
/// coefficient sum. Returns `true` for `1̄`.
pub fn xi_all_ones(x: &AbKerG) -> bool {
    delta(x.total()) == 1
}

/// Whether the Type-2/Type-3 obstruction fires for the slot `(s, m₁, n₁)`:
/// the all-ones functional sends the constant side to `1̄` while it kills
/// `μ₁` and `μ₂`, so no witness can exist in this slot.
pub fn obstruction_check_type2(s: i64, m1: i64, n1: i64) -> bool {
    xi_all_ones(&rhs_type2(s, m1, n1))
}

/// Whether the Type-4 obstruction fires for the slot `(m₁, n₁)`: requires
/// `r₂ ≠ 0` and `r₁ = 0` or `e(r₁) > e(r₂)`.
pub fn obstruction_check_type4(r1: i64, r2: i64, m1: i64, n1: i64) -> Result<bool, Error> {
    let e2 = val2(r2)?;
    if r1 != 0 && val2(r1).unwrap() <= e2 {
        return Err(Error::WitnessPrecondition);
    }
    xi(n1, r2, &rhs_type4(r1, r2, m1, n1))
}
