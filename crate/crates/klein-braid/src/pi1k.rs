//! The Klein bottle group `Z ⋊ Z` and conjugacy normal forms of
//! homomorphisms `Z² → Z ⋊ Z`.
//!
//! The product is `(m₁,n₁)(m₂,n₂) = (m₁ + (-1)^{n₁} m₂, n₁ + n₂)`; this is
//! the unique convention compatible with `g(v^k u^l) = ((-1)^k l, k)` for
//! the homomorphism `g` defined by `g(u) = (1,0)`, `g(v) = (0,1)`.

use core::fmt;
use core::ops::Mul;

use crate::word::{eps, FreeWord, Gen};
use crate::Error;

/// Element `(m, n)` of `Z ⋊ Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Pi1K {
    pub m: i64,
    pub n: i64,
}

impl Pi1K {
    pub const IDENTITY: Pi1K = Pi1K { m: 0, n: 0 };

    pub fn new(m: i64, n: i64) -> Pi1K {
        Pi1K { m, n }
    }

    /// Twisted product `(m₁ + (-1)^{n₁} m₂, n₁ + n₂)`.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: Pi1K) -> Pi1K {
        Pi1K {
            m: self.m + eps(self.n) * rhs.m,
            n: self.n + rhs.n,
        }
    }

    /// The unique `b` with `self · b = (0,0)`.
    pub fn inv(self) -> Pi1K {
        Pi1K {
            m: -eps(self.n) * self.m,
            n: -self.n,
        }
    }

    /// The power `self^t`.
    pub fn pow(self, t: i64) -> Pi1K {
        let mut base = if t < 0 { self.inv() } else { self };
        let mut t = t.unsigned_abs();
        let mut acc = Pi1K::IDENTITY;
        while t > 0 {
            if t & 1 == 1 {
                acc = acc.mul(base);
            }
            t >>= 1;
            if t > 0 {
                base = base.mul(base);
            }
        }
        acc
    }

    /// Conjugate `self · a · self⁻¹ = ((-1)^q a.m + (1 - (-1)^{a.n}) p, a.n)`
    /// for `self = (p, q)`.
    pub fn conj(self, a: Pi1K) -> Pi1K {
        Pi1K {
            m: eps(self.n) * a.m + (1 - eps(a.n)) * self.m,
            n: a.n,
        }
    }

    /// Whether `self` and `other` commute,
    /// i.e. `self.m (1 - (-1)^{other.n}) = other.m (1 - (-1)^{self.n})`.
    pub fn commutes(self, other: Pi1K) -> bool {
        self.m * (1 - eps(other.n)) == other.m * (1 - eps(self.n))
    }
}

impl Mul for Pi1K {
    type Output = Pi1K;

    fn mul(self, rhs: Pi1K) -> Pi1K {
        Pi1K::mul(self, rhs)
    }
}

impl fmt::Display for Pi1K {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// Homomorphic image of a word under `g(u) = (1,0)`, `g(v) = (0,1)`.
pub fn g_word(w: &FreeWord) -> Pi1K {
    let mut acc = Pi1K::IDENTITY;
    for s in w.syllables() {
        let img = match s.gen {
            Gen::U => Pi1K::new(s.exp, 0),
            Gen::V => Pi1K::new(0, s.exp),
        };
        acc = acc.mul(img);
    }
    acc
}

/// The isomorphism `h` of `Z ⋊ Z` with `h(1,0) = (1,0)` and `h(0,1) = (1,1)`.
pub fn h_iso(a: Pi1K) -> Pi1K {
    Pi1K::new(1, 0).pow(a.m).mul(Pi1K::new(1, 1).pow(a.n))
}

/// The inverse of [`h_iso`], sending `(1,0) ↦ (1,0)` and `(0,1) ↦ (-1,1)`.
pub fn h_iso_inv(a: Pi1K) -> Pi1K {
    Pi1K::new(1, 0).pow(a.m).mul(Pi1K::new(-1, 1).pow(a.n))
}

/// A homomorphism `Z² → Z ⋊ Z`, stored via the images of `(1,0)` and `(0,1)`.
///
/// Construction rejects non-commuting images: since `Z²` is abelian, a pair
/// with non-commuting images defines no homomorphism at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomPair {
    f10: Pi1K,
    f01: Pi1K,
}

impl HomPair {
    pub fn new(f10: Pi1K, f01: Pi1K) -> Result<HomPair, Error> {
        if f10.commutes(f01) {
            Ok(HomPair { f10, f01 })
        } else {
            Err(Error::NonCommuting { f10, f01 })
        }
    }

    /// Image of `(1,0)`.
    pub fn f10(&self) -> Pi1K {
        self.f10
    }

    /// Image of `(0,1)`.
    pub fn f01(&self) -> Pi1K {
        self.f01
    }
}

/// Conjugacy normal form of a homomorphism `Z² → Z ⋊ Z`.
///
/// The four shapes are distinguished by the parities of the second
/// coordinates of the two images (odd/even, odd/odd, even/odd, even/even):
///
/// - `Type1`: `(1,0) ↦ (i, 2s₁+1)`, `(0,1) ↦ (0, 2s₂)`;
/// - `Type2`: `(1,0) ↦ (i, 2s₁+1)`, `(0,1) ↦ (i, 2s₂+1)`;
/// - `Type3`: `(1,0) ↦ (0, 2s₁)`, `(0,1) ↦ (i, 2s₂+1)`;
/// - `Type4`: `(1,0) ↦ (r₁, 2s₁)`, `(0,1) ↦ (r₂, 2s₂)` with `r₁ ≥ 0`, and
///   `r₂ ≥ 0` whenever `r₁ = 0` (tie-break making the form unique, since
///   conjugation by `(0,1)` negates both first coordinates).
///
/// [`normalize_hom`] produces exactly one such form per conjugacy class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomNormalForm {
    Type1 { i: i64, s1: i64, s2: i64 },
    Type2 { i: i64, s1: i64, s2: i64 },
    Type3 { i: i64, s1: i64, s2: i64 },
    Type4 { r1: i64, s1: i64, r2: i64, s2: i64 },
}

impl HomNormalForm {
    /// Numeric type tag, 1 through 4.
    pub fn type_index(&self) -> u8 {
        match self {
            HomNormalForm::Type1 { .. } => 1,
            HomNormalForm::Type2 { .. } => 2,
            HomNormalForm::Type3 { .. } => 3,
            HomNormalForm::Type4 { .. } => 4,
        }
    }

    /// The images `(f10, f01)` this normal form stands for.
    pub fn pair(&self) -> HomPair {
        let (f10, f01) = match *self {
            HomNormalForm::Type1 { i, s1, s2 } => (Pi1K::new(i, 2 * s1 + 1), Pi1K::new(0, 2 * s2)),
            HomNormalForm::Type2 { i, s1, s2 } => {
                (Pi1K::new(i, 2 * s1 + 1), Pi1K::new(i, 2 * s2 + 1))
            }
            HomNormalForm::Type3 { i, s1, s2 } => (Pi1K::new(0, 2 * s1), Pi1K::new(i, 2 * s2 + 1)),
            HomNormalForm::Type4 { r1, s1, r2, s2 } => {
                (Pi1K::new(r1, 2 * s1), Pi1K::new(r2, 2 * s2))
            }
        };
        HomPair { f10, f01 }
    }
}

/// Brings a homomorphism into its conjugacy normal form.
///
/// Returns the normal form together with a conjugator `c` such that
/// `c · f10 · c⁻¹` and `c · f01 · c⁻¹` are exactly the images of the normal
/// form. The conjugator is found analytically: conjugation by `(p, q)` maps
/// a first coordinate `m` to `(-1)^q m + (1 - (-1)^n) p`, so for odd `n` one
/// solves `m + 2p = i` with `q = 0`, and for the all-even case only a
/// simultaneous sign flip `q ∈ {0,1}` is available.
pub fn normalize_hom(h: &HomPair) -> (HomNormalForm, Pi1K) {
    let f10 = h.f10;
    let f01 = h.f01;
    let odd10 = f10.n.rem_euclid(2) == 1;
    let odd01 = f01.n.rem_euclid(2) == 1;
    let (nf, conjugator) = match (odd10, odd01) {
        (true, false) => {
            // Commutation forces f01.m = 0.
            let i = f10.m.rem_euclid(2);
            let p = (i - f10.m) / 2;
            (
                HomNormalForm::Type1 {
                    i,
                    s1: (f10.n - 1) / 2,
                    s2: f01.n / 2,
                },
                Pi1K::new(p, 0),
            )
        }
        (true, true) => {
            // Commutation forces f10.m = f01.m; both move together.
            let i = f10.m.rem_euclid(2);
            let p = (i - f10.m) / 2;
            (
                HomNormalForm::Type2 {
                    i,
                    s1: (f10.n - 1) / 2,
                    s2: (f01.n - 1) / 2,
                },
                Pi1K::new(p, 0),
            )
        }
        (false, true) => {
            // Commutation forces f10.m = 0.
            let i = f01.m.rem_euclid(2);
            let p = (i - f01.m) / 2;
            (
                HomNormalForm::Type3 {
                    i,
                    s1: f10.n / 2,
                    s2: (f01.n - 1) / 2,
                },
                Pi1K::new(p, 0),
            )
        }
        (false, false) => {
            let flip = f10.m < 0 || (f10.m == 0 && f01.m < 0);
            let q = if flip { 1 } else { 0 };
            let sign = if flip { -1 } else { 1 };
            (
                HomNormalForm::Type4 {
                    r1: sign * f10.m,
                    s1: f10.n / 2,
                    r2: sign * f01.m,
                    s2: f01.n / 2,
                },
                Pi1K::new(0, q),
            )
        }
    };
    debug_assert_eq!(conjugator.conj(f10), nf.pair().f10);
    debug_assert_eq!(conjugator.conj(f01), nf.pair().f01);
    (nf, conjugator)
}
