//! Reduced words in the free group `F(u,v)`.
//!
//! Every [`FreeWord`] is stored in canonical reduced form: adjacent syllables
//! carry distinct generators and no syllable has exponent zero. Structural
//! equality is therefore equality in the group, and all identity checks in
//! the rest of the crate are exact.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

/// Parity indicator: `0` for even `n`, `1` for odd `n` (also for negative `n`).
pub fn delta(n: i64) -> i64 {
    n.rem_euclid(2)
}

/// Sign power `(-1)^n`.
pub fn eps(n: i64) -> i64 {
    if delta(n) == 0 {
        1
    } else {
        -1
    }
}

/// Sign of an integer: `1`, `-1`, or `0`.
pub fn sgn(l: i64) -> i64 {
    l.signum()
}

/// Generator of `F(u,v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    U,
    V,
}

/// Maximal run `gen^exp` of a single generator, `exp != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: Gen,
    pub exp: i64,
}

/// A reduced word in `F(u,v)`; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    syllables: Vec<Syllable>,
}

fn push_reduced(stack: &mut Vec<Syllable>, s: Syllable) {
    if s.exp == 0 {
        return;
    }
    match stack.last_mut() {
        Some(top) if top.gen == s.gen => {
            top.exp += s.exp;
            if top.exp == 0 {
                stack.pop();
            }
        }
        _ => stack.push(s),
    }
}

impl FreeWord {
    /// The identity element.
    pub fn identity() -> FreeWord {
        FreeWord::default()
    }

    /// The one-letter word `g`.
    pub fn gen(gen: Gen) -> FreeWord {
        FreeWord::gen_pow(gen, 1)
    }

    /// The word `g^exp`.
    pub fn gen_pow(gen: Gen, exp: i64) -> FreeWord {
        if exp == 0 {
            FreeWord::identity()
        } else {
            FreeWord {
                syllables: alloc::vec![Syllable { gen, exp }],
            }
        }
    }

    /// Shorthand for `u`.
    pub fn u() -> FreeWord {
        FreeWord::gen(Gen::U)
    }

    /// Shorthand for `v`.
    pub fn v() -> FreeWord {
        FreeWord::gen(Gen::V)
    }

    /// Builds a word from an arbitrary (possibly unreduced) syllable stream.
    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(iter: I) -> FreeWord {
        let mut stack = Vec::new();
        for s in iter {
            push_reduced(&mut stack, s);
        }
        FreeWord { syllables: stack }
    }

    /// The canonical syllable decomposition.
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length counted in letters, `sum |exp|`.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Iterates over single letters as `(generator, ±1)` pairs.
    pub fn letters(&self) -> impl Iterator<Item = (Gen, i64)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let sign = s.exp.signum();
            (0..s.exp.unsigned_abs()).map(move |_| (s.gen, sign))
        })
    }

    /// Reduced product `self · rhs`.
    pub fn mul(&self, rhs: &FreeWord) -> FreeWord {
        let mut stack = self.syllables.clone();
        for &s in &rhs.syllables {
            push_reduced(&mut stack, s);
        }
        FreeWord { syllables: stack }
    }

    /// The inverse word: reversed with negated exponents.
    pub fn inv(&self) -> FreeWord {
        FreeWord {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    gen: s.gen,
                    exp: -s.exp,
                })
                .collect(),
        }
    }

    /// The power `self^n`, inverse for negative `n`.
    pub fn pow(&self, n: i64) -> FreeWord {
        let mut base = if n < 0 { self.inv() } else { self.clone() };
        let mut n = n.unsigned_abs();
        let mut acc = FreeWord::identity();
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
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        FreeWord::mul(self, rhs)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (idx, s) in self.syllables.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            match s.gen {
                Gen::U => write!(f, "u")?,
                Gen::V => write!(f, "v")?,
            }
            if s.exp != 1 {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

/// Conjugate `c · a · c⁻¹`.
pub fn conj(c: &FreeWord, a: &FreeWord) -> FreeWord {
    c.mul(a).mul(&c.inv())
}

/// Commutator `[a, b] = a b a⁻¹ b⁻¹`.
pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
    a.mul(b).mul(&a.inv()).mul(&b.inv())
}

/// Image of `w` under the endomorphism `u ↦ img_u`, `v ↦ img_v`.
pub fn apply_endo(img_u: &FreeWord, img_v: &FreeWord, w: &FreeWord) -> FreeWord {
    let mut acc = FreeWord::identity();
    for s in &w.syllables {
        let img = match s.gen {
            Gen::U => img_u,
            Gen::V => img_v,
        };
        acc = acc.mul(&img.pow(s.exp));
    }
    acc
}

/// The fixed word `B = u v u v⁻¹`.
pub fn word_b() -> FreeWord {
    FreeWord::from_syllables([
        Syllable {
            gen: Gen::U,
            exp: 1,
        },
        Syllable {
            gen: Gen::V,
            exp: 1,
        },
        Syllable {
            gen: Gen::U,
            exp: 1,
        },
        Syllable {
            gen: Gen::V,
            exp: -1,
        },
    ])
}

/// The basis word `B_{k,l} = v^k u^l B u^{-l} v^{-k}`, reduced.
pub fn word_bkl(k: i64, l: i64) -> FreeWord {
    let prefix = FreeWord::gen_pow(Gen::V, k).mul(&FreeWord::gen_pow(Gen::U, l));
    conj(&prefix, &word_b())
}
