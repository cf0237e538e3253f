//! Multivectors over a 4-dimensional quadratic space.
//!
//! Two signatures are supported: the spacetime algebra Cl(1,3) with metric
//! (+,-,-,-) and the Euclidean algebra Cl(4). Coefficients are complex, so the
//! same type also covers the complexified algebra C ⊗ Cl(1,3).
//!
//! Blades are stored in grade-then-lexicographic order:
//!
//! ```text
//! index  0      1  2  3  4     5   6   7   8   9   10    11   12   13   14    15
//! blade  1      e0 e1 e2 e3    e01 e02 e03 e12 e13 e23   e012 e013 e023 e123  e0123
//! ```
//!
//! Internally each blade is a bitmask (bit `mu` set when `e_mu` is a factor).
//! The product of two blades is `a ^ b` with a sign collected from the
//! transpositions needed to bring the factors into ascending order and from the
//! metric on the repeated generators.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::LazyLock;

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Matrix4c = Matrix4<Complex64>;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

/// Number of basis blades.
pub const DIM: usize = 16;

/// Bitmask of each blade, indexed by storage slot.
pub const BLADE_MASKS: [u8; DIM] = [
    0b0000, // 1
    0b0001, 0b0010, 0b0100, 0b1000, // e0 e1 e2 e3
    0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, // e01 e02 e03 e12 e13 e23
    0b0111, 0b1011, 0b1101, 0b1110, // e012 e013 e023 e123
    0b1111, // e0123
];

/// Storage slot of each bitmask (inverse of [`BLADE_MASKS`]).
pub const MASK_TO_INDEX: [usize; DIM] = build_mask_index();

/// Slots of the six bivectors in (01, 02, 03, 12, 13, 23) order.
pub const BIVECTOR_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Slot of the pseudoscalar `e0 e1 e2 e3`.
pub const PSEUDOSCALAR: usize = 15;

const fn build_mask_index() -> [usize; DIM] {
    let mut out = [0usize; DIM];
    let mut i = 0;
    while i < DIM {
        out[BLADE_MASKS[i] as usize] = i;
        i += 1;
    }
    out
}

/// Grade of the blade stored at `index`.
pub const fn grade_of(index: usize) -> usize {
    BLADE_MASKS[index].count_ones() as usize
}

/// Storage slot of the blade `e_mu`.
pub const fn vector_slot(mu: usize) -> usize {
    1 + mu
}

/// Storage slot of `e_mu e_nu` for `mu < nu`.
pub const fn bivector_slot(mu: usize, nu: usize) -> usize {
    MASK_TO_INDEX[(1 << mu) | (1 << nu)]
}

/// Metric signature of the underlying quadratic space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    /// (+,-,-,-)
    Minkowski,
    /// (+,+,+,+)
    Euclidean,
}

impl Signature {
    /// `e_mu^2`.
    pub const fn metric(self, mu: usize) -> f64 {
        match self {
            Signature::Minkowski => {
                if mu == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
            Signature::Euclidean => 1.0,
        }
    }

    fn table(self) -> &'static ProductTable {
        match self {
            Signature::Minkowski => &MINKOWSKI_TABLE,
            Signature::Euclidean => &EUCLIDEAN_TABLE,
        }
    }
}

struct ProductTable {
    index: [[u8; DIM]; DIM],
    sign: [[i8; DIM]; DIM],
}

static MINKOWSKI_TABLE: ProductTable = build_table(Signature::Minkowski);
static EUCLIDEAN_TABLE: ProductTable = build_table(Signature::Euclidean);

const fn blade_product(a: u8, b: u8, sig: Signature) -> (u8, i8) {
    // transpositions: every generator of `b` must move past the higher
    // generators of `a`
    let mut swaps = 0u32;
    let mut bit = 0;
    while bit < 4 {
        if b & (1 << bit) != 0 {
            let higher = a & !((1u8 << (bit + 1)) - 1);
            swaps += higher.count_ones();
        }
        bit += 1;
    }
    let mut sign: i8 = if swaps.is_multiple_of(2) { 1 } else { -1 };
    let common = a & b;
    let mut mu = 0;
    while mu < 4 {
        if common & (1 << mu) != 0 && sig.metric(mu) < 0.0 {
            sign = -sign;
        }
        mu += 1;
    }
    (a ^ b, sign)
}

const fn build_table(sig: Signature) -> ProductTable {
    let mut index = [[0u8; DIM]; DIM];
    let mut sign = [[0i8; DIM]; DIM];
    let mut i = 0;
    while i < DIM {
        let mut j = 0;
        while j < DIM {
            let (mask, s) = blade_product(BLADE_MASKS[i], BLADE_MASKS[j], sig);
            index[i][j] = MASK_TO_INDEX[mask as usize] as u8;
            sign[i][j] = s;
            j += 1;
        }
        i += 1;
    }
    ProductTable { index, sign }
}

/// Product of two basis blades: (storage slot, sign).
pub fn blade_mul(sig: Signature, a: usize, b: usize) -> (usize, f64) {
    let t = sig.table();
    (t.index[a][b] as usize, t.sign[a][b] as f64)
}

/// A complex multivector with 16 coefficients over the blade basis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Multivector {
    signature: Signature,
    coeffs: [Complex64; DIM],
}

impl Multivector {
    pub fn zero(signature: Signature) -> Self {
        Self {
            signature,
            coeffs: [ZERO; DIM],
        }
    }

    pub fn from_coeffs(signature: Signature, coeffs: [Complex64; DIM]) -> Self {
        Self { signature, coeffs }
    }

    pub fn from_real(signature: Signature, coeffs: [f64; DIM]) -> Self {
        Self {
            signature,
            coeffs: coeffs.map(|c| Complex64::new(c, 0.0)),
        }
    }

    pub fn scalar(signature: Signature, value: impl Into<Complex64>) -> Self {
        let mut mv = Self::zero(signature);
        mv.coeffs[0] = value.into();
        mv
    }

    /// The basis blade stored at `index`, with unit coefficient.
    pub fn blade(signature: Signature, index: usize) -> Self {
        let mut mv = Self::zero(signature);
        mv.coeffs[index] = ONE;
        mv
    }

    /// The generator `e_mu`.
    pub fn generator(signature: Signature, mu: usize) -> Result<Self> {
        if mu > 3 {
            return Err(Error::IndexOutOfRange(mu));
        }
        Ok(Self::blade(signature, vector_slot(mu)))
    }

    /// `v^mu e_mu` from contravariant components.
    pub fn vector(signature: Signature, components: [f64; 4]) -> Self {
        let mut mv = Self::zero(signature);
        for (mu, c) in components.into_iter().enumerate() {
            mv.coeffs[vector_slot(mu)] = Complex64::new(c, 0.0);
        }
        mv
    }

    /// `e0 e1 e2 e3`.
    pub fn pseudoscalar(signature: Signature) -> Self {
        Self::blade(signature, PSEUDOSCALAR)
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn coeffs(&self) -> &[Complex64; DIM] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> Complex64 {
        self.coeffs[index]
    }

    pub fn set_coeff(&mut self, index: usize, value: Complex64) {
        self.coeffs[index] = value;
    }

    pub fn scalar_part(&self) -> Complex64 {
        self.coeffs[0]
    }

    pub fn scale(&self, factor: impl Into<Complex64>) -> Self {
        let f = factor.into();
        Self {
            signature: self.signature,
            coeffs: self.coeffs.map(|c| c * f),
        }
    }

    /// Geometric product. Fails when the signatures differ.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        if self.signature != other.signature {
            return Err(Error::SignatureMismatch(self.signature, other.signature));
        }
        let table = self.signature.table();
        let mut out = [ZERO; DIM];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == ZERO {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == ZERO {
                    continue;
                }
                let k = table.index[i][j] as usize;
                out[k] += a * b * table.sign[i][j] as f64;
            }
        }
        Ok(Self::from_coeffs(self.signature, out))
    }

    /// Reversion: grade-k part times (-1)^{k(k-1)/2}.
    pub fn reversion(&self) -> Self {
        let mut out = self.coeffs;
        for (i, c) in out.iter_mut().enumerate() {
            let k = grade_of(i);
            if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
                *c = -*c;
            }
        }
        Self::from_coeffs(self.signature, out)
    }

    /// Complex conjugation of every coefficient.
    pub fn conj(&self) -> Self {
        Self::from_coeffs(self.signature, self.coeffs.map(|c| c.conj()))
    }

    pub fn grade_projection(&self, k: usize) -> Result<Self> {
        if k > 4 {
            return Err(Error::GradeOutOfRange(k));
        }
        let mut out = [ZERO; DIM];
        for (i, c) in self.coeffs.iter().enumerate() {
            if grade_of(i) == k {
                out[i] = *c;
            }
        }
        Ok(Self::from_coeffs(self.signature, out))
    }

    /// `A^dag = e0 Ã* e0`, the algebraic counterpart of Hermitian conjugation.
    /// Only defined for the Minkowski signature.
    pub fn adjoint_dagger(&self) -> Result<Self> {
        if self.signature != Signature::Minkowski {
            return Err(Error::WrongSignature {
                expected: Signature::Minkowski,
                found: self.signature,
            });
        }
        let e0 = Self::blade(Signature::Minkowski, vector_slot(0));
        let inner = self.reversion().conj();
        Ok((e0 * inner) * e0)
    }

    /// Largest coefficient modulus.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Grades with at least one coefficient above `tol` in modulus.
    pub fn grades_present(&self, tol: f64) -> Vec<usize> {
        let mut grades: Vec<usize> = (0..DIM)
            .filter(|&i| self.coeffs[i].norm() > tol)
            .map(grade_of)
            .collect();
        grades.sort_unstable();
        grades.dedup();
        grades
    }

    /// Largest modulus of an imaginary part.
    pub fn max_imag(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(
            self.signature, other.signature,
            "multivector signature mismatch"
        );
        let mut out = [ZERO; DIM];
        for (o, (a, b)) in out.iter_mut().zip(self.coeffs.iter().zip(&other.coeffs)) {
            *o = f(*a, *b);
        }
        Self::from_coeffs(self.signature, out)
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

/// Geometric product. Panics on signature mismatch; use
/// [`Multivector::geometric_product`] for the fallible form.
impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs)
            .expect("multivector signature mismatch")
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.geometric_product(&rhs)
            .expect("multivector signature mismatch")
    }
}

/// Which complex matrix representation of Cl(1,3) is in use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rep {
    /// Chiral: `g0 = [[0, I], [I, 0]]`, `gk = [[0, s_k], [-s_k, 0]]`.
    Weyl,
    /// Standard: `g0 = diag(I, -I)`, `gk = [[0, s_k], [-s_k, 0]]`.
    Dirac,
}

impl std::fmt::Display for Rep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rep::Weyl => f.write_str("weyl"),
            Rep::Dirac => f.write_str("dirac"),
        }
    }
}

/// Gamma matrices of a representation together with the images of all 16
/// basis blades.
#[derive(Clone, Debug)]
pub struct GammaRep {
    rep: Rep,
    gammas: [Matrix4c; 4],
    blades: [Matrix4c; DIM],
}

static WEYL: LazyLock<GammaRep> = LazyLock::new(|| GammaRep::build(Rep::Weyl));
static DIRAC: LazyLock<GammaRep> = LazyLock::new(|| GammaRep::build(Rep::Dirac));

pub(crate) fn pauli() -> [[[Complex64; 2]; 2]; 3] {
    [
        [[ZERO, ONE], [ONE, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[ONE, ZERO], [ZERO, -ONE]],
    ]
}

/// Assemble a 4x4 matrix from four 2x2 blocks.
pub(crate) fn from_blocks(
    a: [[Complex64; 2]; 2],
    b: [[Complex64; 2]; 2],
    c: [[Complex64; 2]; 2],
    d: [[Complex64; 2]; 2],
) -> Matrix4c {
    Matrix4c::from_fn(|r, col| {
        let block = match (r < 2, col < 2) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        block[r % 2][col % 2]
    })
}

pub(crate) fn scale2(m: [[Complex64; 2]; 2], f: Complex64) -> [[Complex64; 2]; 2] {
    m.map(|row| row.map(|x| x * f))
}

impl GammaRep {
    fn build(rep: Rep) -> Self {
        let zero2 = [[ZERO; 2]; 2];
        let id2 = [[ONE, ZERO], [ZERO, ONE]];
        let g0 = match rep {
            Rep::Weyl => from_blocks(zero2, id2, id2, zero2),
            Rep::Dirac => from_blocks(id2, zero2, zero2, scale2(id2, -ONE)),
        };
        let [s1, s2, s3] = pauli();
        let gk = |s| from_blocks(zero2, s, scale2(s, -ONE), zero2);
        let gammas = [g0, gk(s1), gk(s2), gk(s3)];
        let blades = std::array::from_fn(|i| {
            let mask = BLADE_MASKS[i];
            (0..4)
                .filter(|mu| mask & (1 << mu) != 0)
                .fold(Matrix4c::identity(), |acc, mu| acc * gammas[mu])
        });
        Self {
            rep,
            gammas,
            blades,
        }
    }

    pub fn get(rep: Rep) -> &'static GammaRep {
        match rep {
            Rep::Weyl => &WEYL,
            Rep::Dirac => &DIRAC,
        }
    }

    pub fn weyl() -> &'static GammaRep {
        &WEYL
    }

    pub fn dirac() -> &'static GammaRep {
        &DIRAC
    }

    pub fn rep(&self) -> Rep {
        self.rep
    }

    pub fn gamma(&self, mu: usize) -> &Matrix4c {
        &self.gammas[mu]
    }

    pub fn gammas(&self) -> &[Matrix4c; 4] {
        &self.gammas
    }

    /// Image of the basis blade stored at `index`.
    pub fn blade(&self, index: usize) -> &Matrix4c {
        &self.blades[index]
    }

    /// `g0 g1 g2 g3`.
    pub fn g0123(&self) -> &Matrix4c {
        &self.blades[PSEUDOSCALAR]
    }
}

/// Matrix image of a Minkowski multivector under `e_mu -> g_mu`.
pub fn rep_matrix(a: &Multivector, rep: Rep) -> Result<Matrix4c> {
    if a.signature() != Signature::Minkowski {
        return Err(Error::WrongSignature {
            expected: Signature::Minkowski,
            found: a.signature(),
        });
    }
    let g = GammaRep::get(rep);
    Ok(a.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != ZERO)
        .fold(Matrix4c::zeros(), |acc, (i, c)| acc + g.blade(i) * *c))
}

/// Inverse of [`rep_matrix`]: every 4x4 complex matrix is the image of exactly
/// one complexified multivector. Uses `c_A = Tr(M G_A^{-1}) / 4`.
pub fn from_rep_matrix(m: &Matrix4c, rep: Rep) -> Multivector {
    let g = GammaRep::get(rep);
    let mut coeffs = [ZERO; DIM];
    for (i, c) in coeffs.iter_mut().enumerate() {
        // G_A^2 = s 1, so G_A^{-1} = s G_A
        let (_, s) = blade_mul(Signature::Minkowski, i, i);
        *c = (m * g.blade(i)).trace() * s / 4.0;
    }
    Multivector::from_coeffs(Signature::Minkowski, coeffs)
}

/// The primitive idempotent `½(1 + e0)`, or its complexified refinement
/// `¼(1 + e0)(1 + i e1 e2)` whose Dirac image is the matrix unit at (1,1).
pub fn idempotent_f(complexified: bool) -> Multivector {
    let sig = Signature::Minkowski;
    let one = Multivector::scalar(sig, 1.0);
    let half_1_e0 = (one + Multivector::blade(sig, vector_slot(0))).scale(0.5);
    if !complexified {
        return half_1_e0;
    }
    let e12 = Multivector::blade(sig, bivector_slot(1, 2)).scale(I);
    let half_1_ie12 = (one + e12).scale(0.5);
    half_1_e0 * half_1_ie12
}

/// Max-norm of a 4x4 complex matrix.
pub fn matrix_max_norm(m: &Matrix4c) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    const M: Signature = Signature::Minkowski;

    fn e(mu: usize) -> Multivector {
        Multivector::generator(M, mu).unwrap()
    }

    #[test]
    fn generator_squares_follow_metric() {
        assert_eq!(e(0) * e(0), Multivector::scalar(M, 1.0));
        assert_eq!(e(1) * e(1), Multivector::scalar(M, -1.0));
        let eu = Multivector::generator(Signature::Euclidean, 2).unwrap();
        assert_eq!(eu * eu, Multivector::scalar(Signature::Euclidean, 1.0));
    }

    #[test]
    fn distinct_generators_anticommute() {
        let sum = (e(0) * e(1)) + (e(1) * e(0));
        assert_eq!(sum, Multivector::zero(M));
    }

    #[test]
    fn blade_slots_are_products_of_generators() {
        for (i, &mask) in BLADE_MASKS.iter().enumerate() {
            let prod = (0..4)
                .filter(|mu| mask & (1 << mu) != 0)
                .fold(Multivector::scalar(M, 1.0), |acc, mu| acc * e(mu));
            assert_eq!(prod, Multivector::blade(M, i), "slot {i}");
        }
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = Multivector::scalar(M, 1.0);
        let b = Multivector::scalar(Signature::Euclidean, 1.0);
        assert_eq!(
            a.geometric_product(&b),
            Err(Error::SignatureMismatch(M, Signature::Euclidean))
        );
    }

    #[test]
    fn reversion_examples() {
        let a = Multivector::scalar(M, 1.0) + e(0);
        assert_eq!(a.reversion(), a);
        let e01 = Multivector::blade(M, bivector_slot(0, 1));
        assert_eq!(e01.reversion(), e(1) * e(0));
        assert_eq!(e01.reversion(), e01.scale(-1.0));
        let e5 = Multivector::pseudoscalar(M);
        assert_eq!(e5.reversion(), e5);
    }

    #[test]
    fn grade_projection_examples() {
        let a = Multivector::scalar(M, 3.0) + e(0) + Multivector::blade(M, 5).scale(2.0);
        assert_eq!(a.grade_projection(0).unwrap(), Multivector::scalar(M, 3.0));
        assert_eq!(
            a.grade_projection(2).unwrap(),
            Multivector::blade(M, bivector_slot(0, 1)).scale(2.0)
        );
        assert_eq!(a.grade_projection(5), Err(Error::GradeOutOfRange(5)));
    }

    #[test]
    fn adjoint_of_generators() {
        assert_eq!(e(0).adjoint_dagger().unwrap(), e(0));
        assert_eq!(e(1).adjoint_dagger().unwrap(), e(1).scale(-1.0));
        let eu = Multivector::scalar(Signature::Euclidean, 1.0);
        assert!(matches!(
            eu.adjoint_dagger(),
            Err(Error::WrongSignature { .. })
        ));
    }

    #[test]
    fn pseudoscalar_square_depends_on_signature() {
        let m5 = Multivector::pseudoscalar(M);
        assert_eq!(m5 * m5, Multivector::scalar(M, -1.0));
        let e5 = Multivector::pseudoscalar(Signature::Euclidean);
        assert_eq!(e5 * e5, Multivector::scalar(Signature::Euclidean, 1.0));
    }

    #[test]
    fn quaternion_units_multiply_to_minus_one() {
        // i = e2e3, j = e3e1, k = e1e2
        let i = e(2) * e(3);
        let j = e(3) * e(1);
        let k = e(1) * e(2);
        assert_eq!(i * j, k);
        assert_eq!((i * j) * k, Multivector::scalar(M, -1.0));
    }

    #[test]
    fn rep_matrix_identity_and_trace() {
        for rep in [Rep::Weyl, Rep::Dirac] {
            let one = rep_matrix(&Multivector::scalar(M, 1.0), rep).unwrap();
            assert_eq!(one, Matrix4c::identity());
            let a = Multivector::scalar(M, 3.0) + Multivector::blade(M, bivector_slot(0, 1));
            let tr = rep_matrix(&a, rep).unwrap().trace();
            assert!((tr - Complex64::new(12.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn e01_squares_to_plus_one() {
        let e01 = Multivector::blade(M, bivector_slot(0, 1));
        assert_eq!(e01 * e01, Multivector::scalar(M, 1.0));
        for rep in [Rep::Weyl, Rep::Dirac] {
            let m = rep_matrix(&e01, rep).unwrap();
            assert!(matrix_max_norm(&(m * m - Matrix4c::identity())) < 1e-15);
        }
    }

    #[test]
    fn gammas_satisfy_clifford_relations() {
        for rep in [Rep::Weyl, Rep::Dirac] {
            let g = GammaRep::get(rep);
            for mu in 0..4 {
                for nu in 0..4 {
                    let ac = g.gamma(mu) * g.gamma(nu) + g.gamma(nu) * g.gamma(mu);
                    let eta = if mu == nu { M.metric(mu) } else { 0.0 };
                    let expected = Matrix4c::identity() * Complex64::new(2.0 * eta, 0.0);
                    assert!(matrix_max_norm(&(ac - expected)) < 1e-15);
                }
            }
        }
    }

    #[test]
    fn idempotents() {
        let f = idempotent_f(false);
        assert!(((f * f) - f).max_norm() < 1e-15);
        let fc = idempotent_f(true);
        assert!(((fc * fc) - fc).max_norm() < 1e-15);
        let m = rep_matrix(&fc, Rep::Dirac).unwrap();
        let mut unit = Matrix4c::zeros();
        unit[(0, 0)] = ONE;
        assert!(matrix_max_norm(&(m - unit)) < 1e-15);
    }

    #[test]
    fn from_rep_matrix_inverts_rep_matrix() {
        let coeffs: [Complex64; DIM] =
            std::array::from_fn(|i| Complex64::new(i as f64 - 7.5, 0.25 * i as f64));
        let a = Multivector::from_coeffs(M, coeffs);
        for rep in [Rep::Weyl, Rep::Dirac] {
            let back = from_rep_matrix(&rep_matrix(&a, rep).unwrap(), rep);
            assert!((back - a).max_norm() < 1e-12);
        }
    }
}
