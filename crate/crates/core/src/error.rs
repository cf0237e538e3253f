use thiserror::Error;

use crate::clifford::Signature;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature mismatch: {0:?} vs {1:?}")]
    SignatureMismatch(Signature, Signature),

    #[error("operation requires {expected:?} signature, got {found:?}")]
    WrongSignature {
        expected: Signature,
        found: Signature,
    },

    #[error("grade {0} out of range 0..=4")]
    GradeOutOfRange(usize),

    #[error("generator index {0} out of range 0..=3")]
    IndexOutOfRange(usize),

    #[error("bilinear {name} has imaginary residue {residue:e} (limit {limit:e})")]
    ImaginaryResidue {
        name: &'static str,
        residue: f64,
        limit: f64,
    },

    #[error("zero spinor")]
    ZeroSpinor,

    #[error("invalid singular aggregate parameters: {0}")]
    InvalidSingularParams(String),

    #[error(
        "reconstruction kernel is degenerate (|xi^dag g0 Z xi| = {value:e}); choose a different test spinor"
    )]
    DegenerateKernel { value: f64 },

    #[error("m12 must be nonzero")]
    ZeroM12,

    #[error("input spinor is not regular (classified as {0})")]
    NotRegular(String),

    #[error("spinor lies in the kernel of M (M phi = 0)")]
    InKernel,

    #[error("inconsistent hermitian parameters: {}", .0.join("; "))]
    HermitianViolations(Vec<String>),

    #[error("class {0} cannot be generated as a spinor")]
    NotGeneratable(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("path too coarse: {0}")]
    CoarsePath(String),

    #[error("spinor is not normalized: sigma = {0}, expected 1")]
    NotNormalized(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
