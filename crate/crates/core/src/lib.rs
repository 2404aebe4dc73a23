//! Exact arithmetic for monomial ideals and the asymptotic invariants built on it.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values:
//!
//! * [`monomial`]: exponent vectors and monomial ideals (sum, product, power,
//!   intersection, colon, saturation).
//! * [`colength`]: exact lengths `ℓ(J/I)` by staircase enumeration.
//! * [`family`]: graded families of ideals `n ↦ I_n`.
//! * [`multiplicity`]: Amao multiplicities via stabilized finite differences,
//!   epsilon-multiplicity sequences and the convergence table
//!   `a(I^m, (I^m)^sat) / m^d → ε(I)`.
//! * [`okounkov`]: monomial valuations, truncated value semigroups, cone
//!   conditions, lattice-point counts and Okounkov-body volumes.

#![no_std]

extern crate alloc;

pub mod colength;
pub mod error;
pub mod family;
pub mod monomial;
pub mod multiplicity;
pub mod okounkov;

pub use error::{Error, Result};
pub use family::GradedFamilySpec;
pub use monomial::{ExponentVector, MonomialIdeal};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
