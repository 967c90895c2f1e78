//! Exact Alexander polynomials of twisted torus knots `T(p, q, 2, r)` and the
//! coefficient obstructions built on them.
//!
//! The pipeline is: [`braid::TwistedTorusKnot`] → braid word → reduced Burau
//! matrix → `det(I - B) / (1 + t + … + t^(n-1))` → normalized
//! [`burau::AlexanderPolynomial`] → [`obstruction`] checks.

pub mod braid;
pub mod burau;
pub mod error;
pub mod laurent;
pub mod obstruction;
pub mod primitivity;
pub mod scan;

pub use braid::{family_km, BraidWord, Letter, Permutation, TwistedTorusKnot};
pub use burau::{
    alexander_from_braid, alexander_torus_closed_form, normalize, reduced_burau, AlexanderPolynomial,
    BurauMatrix, Form,
};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use obstruction::{
    gamma_primitivity_verdict, morton_check, morton_inverse_s, os_lens_form_check, ObstructionReport,
};
pub use primitivity::{middle_splitting_primitive, PrimitivityResult};
pub use scan::{scan, ScanConfig, ScanRow};
