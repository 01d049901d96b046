//! Exact computation in polynomial composite rings `A + X·B[X]`.
//!
//! The crate is layered bottom-up:
//!
//! * [`fieldtower`]: finite fields, ℚ and small number fields, rational
//!   function fields, and embedded pairs `K ⊆ L`.
//! * [`polyring`]: dense univariate polynomials with gcd and factorization.
//! * [`composite`]: the rings `K + X·L[X]`, `ℤ + X·ℚ[X]` and `ℤ + X·ℤ_S[X]`.
//! * [`ideals`]: fractional ideals of `K + X·L[X]` over finite fields.
//! * [`covers`]: integer-valued style rings `I(B, A)` and their composite covers.
//! * [`claims`]: runs each structural statement on a concrete instance and
//!   reports the predicted verdict next to the computed one.

pub mod claims;
pub mod composite;
pub mod covers;
pub mod exec;
pub mod fieldtower;
pub mod ideals;
pub mod linalg;
pub mod polyring;

/// Seed used whenever the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;
