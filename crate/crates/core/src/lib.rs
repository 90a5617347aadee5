//! Exact root-system combinatorics for simple Lie algebras.
//!
//! Builds the finite root systems of types A-G from their Cartan matrices,
//! normalizes the invariant form so the highest root `θ` has `(θ, θ) = 2`, and
//! checks the identities relating the dual Coxeter number `h∨ = (ρ, θ) + 1`,
//! the special roots `𝕊 = {α ∈ Δ₊ : θ - α ∈ Δ}`, the dimension of the
//! minimal nilpotent orbit and the length of the reflection `r_θ`.
//!
//! All arithmetic is exact.
//!
//! ```
//! use minorbit::{cartan::parse_lie_type, orbit::verify};
//!
//! let report = verify(parse_lie_type("E8").unwrap()).unwrap();
//! assert_eq!(report.h_dual, 30);
//! assert_eq!(report.dim_root_count, 58);
//! assert!(report.passed());
//! ```

pub mod cartan;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod orbit;
pub mod rational;
pub mod roots;
pub mod weyl;

pub use cartan::{BilinearForm, CartanMatrix, Family, LieType};
pub use error::{Error, Result};
pub use orbit::{verify, VerificationReport};
pub use rational::Rational;
pub use roots::{Root, RootSystem};
