//! Exact symbolic arithmetic in the 2-string pure braid group of the Klein
//! bottle, presented as the semidirect product `F(u,v) ⋊_θ (Z ⋊ Z)`, together
//! with a decision procedure for the Borsuk-Ulam property of homotopy classes
//! of maps from the torus to the Klein bottle.
//!
//! The crate is organised along the objects it computes with:
//!
//! - [`word`]: reduced words in the free group `F(u,v)`;
//! - [`pi1k`]: the Klein bottle group `Z ⋊ Z` and conjugacy normal forms of
//!   homomorphisms `Z² → Z ⋊ Z`;
//! - [`p2`]: the pure braid group `P₂(K²)` with the twisting action `θ`, the
//!   swap conjugation `l_σ` and its word part `ρ`;
//! - [`kerg`]: the normal closure of `σ²`, identified with `ker g` inside
//!   `F(u,v)`, its free basis `B_{k,l}` obtained by Reidemeister-Schreier
//!   rewriting, and the induced maps on its abelianisation;
//! - [`buc`]: the Borsuk-Ulam classifier, explicit witness pairs for classes
//!   without the property, and the mod-2 obstruction machinery that rules
//!   witnesses out for classes with it.
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is safe to use from multiple threads without
//! synchronisation. The crate is `no_std` (it requires `alloc`).

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

use core::fmt;

pub mod buc;
pub mod kerg;
pub mod p2;
pub mod pi1k;
pub mod word;

pub use buc::{classify, generate_witness, verify_witness, BuReason, BuVerdict, Witness};
pub use kerg::{from_b_basis, in_kerg, to_b_basis, AbKerG, BBasisWord};
pub use p2::{l_sigma, rho, sigma_sq, theta, P2Elem};
pub use pi1k::{g_word, normalize_hom, HomNormalForm, HomPair, Pi1K};
pub use word::{FreeWord, Gen};

/// Errors raised by operations with semantic preconditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// The two images do not commute in `Z ⋊ Z`, so they do not define a
    /// homomorphism on `Z²`.
    NonCommuting { f10: Pi1K, f01: Pi1K },
    /// The word is not in `ker g`; carries the offending image under `g`.
    NotInKernel { image: Pi1K },
    /// A 2-adic valuation or odd part of zero was requested.
    ZeroInput,
    /// The requested tuple is not in the witness table Σ.
    NotInSigma,
    /// Parameters violate a witness-construction precondition.
    WitnessPrecondition,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonCommuting { f10, f01 } => {
                write!(f, "images {f10} and {f01} do not commute")
            }
            Error::NotInKernel { image } => write!(f, "word is not in ker g: g={image}"),
            Error::ZeroInput => write!(f, "2-adic valuation of zero is undefined"),
            Error::NotInSigma => write!(f, "tuple is not in the witness table"),
            Error::WitnessPrecondition => write!(f, "witness construction precondition violated"),
        }
    }
}

impl core::error::Error for Error {}
