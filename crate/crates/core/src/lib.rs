//! Numerical toolkit for the spinor representation space of Cl(1,3).
//!
//! The crate covers multivector arithmetic ([`clifford`]), the classical,
//! algebraic and operator definitions of a spinor ([`spinor_forms`]), the
//! bilinear covariants ([`bilinears`]), Fierz identities and the Fierz
//! aggregate ([`fierz`]), Lounesto's classification ([`lounesto`]), the
//! regular-to-flag-dipole mapping matrix ([`classmap`]) and the winding /
//! sphere invariants of the regular sector ([`topology`]).

pub mod bilinears;
pub mod classmap;
pub mod clifford;
pub mod error;
pub mod fierz;
pub mod lounesto;
pub mod spinor_forms;
pub mod topology;

pub use bilinears::{covariants, BilinearSet, S_NORMALIZATION};
pub use classmap::{build_M, MappingMatrix, MappingParams};
pub use clifford::{GammaRep, Matrix4c, Multivector, Rep, Signature};
pub use error::{Error, Result};
pub use fierz::{aggregate, fpk_residuals, FpkResiduals};
pub use lounesto::{classify, ClassificationReport, LounestoClass};
pub use num_complex::Complex64;
pub use spinor_forms::{ClassicalSpinor, Quaternion, SpinorOperator};
pub use topology::{winding_number, PlanePath};

/// Default relative tolerance for zero tests and identity checks.
pub const DEFAULT_TOL: f64 = 1e-8;
