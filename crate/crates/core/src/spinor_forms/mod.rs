//! The three equivalent spinor definitions and the maps between them.
//!
//! * classical: a column `ψ ∈ ℂ⁴` tagged with the gamma representation it lives in;
//! * algebraic: an element of the minimal left ideal, here the 4x4 matrix whose
//!   only nonzero column is the first one;
//! * spinor operator: an even multivector `s + s^{μν} e_μ e_ν + p e0123`,
//!   equivalently the quaternionic matrix `[[q1, -q2], [q2, q1]]`.
//!
//! The operator <-> classical map is the fixed linear bijection
//!
//! ```text
//! ψ1 = s + s²³ i    ψ2 = s¹³ + s¹² i    ψ3 = p + s¹⁰ i    ψ4 = s⁰² + s³⁰ i
//! ```
//!
//! with `s^{νμ} = -s^{μν}`. Its output is tagged as the Dirac (standard)
//! representation.

mod quaternion;

pub use quaternion::{QuatMatrix2, Quaternion};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{
    bivector_slot, grade_of, idempotent_f, rep_matrix, Matrix4c, Multivector, Rep, Signature,
    BIVECTOR_PAIRS, BLADE_MASKS, DIM, PSEUDOSCALAR, ZERO,
};
use crate::error::{Error, Result};

/// Images of `e0..e3` in M(2,ℍ).
pub fn quaternion_rep_e(mu: usize) -> Result<QuatMatrix2> {
    use Quaternion as Q;
    let off = |q: Q| QuatMatrix2([[Q::ZERO, q], [q, Q::ZERO]]);
    match mu {
        0 => Ok(QuatMatrix2([[Q::ONE, Q::ZERO], [Q::ZERO, -Q::ONE]])),
        1 => Ok(off(Q::I)),
        2 => Ok(off(Q::J)),
        3 => Ok(off(Q::K)),
        _ => Err(Error::IndexOutOfRange(mu)),
    }
}

/// Image of a real Minkowski multivector in M(2,ℍ) under the generator map
/// [`quaternion_rep_e`]. Imaginary parts are rejected.
pub fn quaternion_image(a: &Multivector) -> Result<QuatMatrix2> {
    if a.signature() != Signature::Minkowski {
        return Err(Error::WrongSignature {
            expected: Signature::Minkowski,
            found: a.signature(),
        });
    }
    if a.max_imag() > 0.0 {
        return Err(Error::InvalidArgument(
            "M(2,H) image needs real coefficients".into(),
        ));
    }
    let gens: Vec<QuatMatrix2> = (0..4).map(|mu| quaternion_rep_e(mu).unwrap()).collect();
    let mut out = QuatMatrix2::zero();
    for (i, c) in a.coeffs().iter().enumerate() {
        if c.re == 0.0 {
            continue;
        }
        let mask = BLADE_MASKS[i];
        let blade = (0..4)
            .filter(|mu| mask & (1 << mu) != 0)
            .fold(QuatMatrix2::IDENTITY, |acc, mu| acc * gens[mu]);
        out = out + blade.scale(c.re);
    }
    Ok(out)
}

/// Element of the even subalgebra Cl⁺(1,3), stored as its two quaternions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SpinorOperator {
    pub q1: Quaternion,
    pub q2: Quaternion,
}

/// Real coefficients of an even multivector: scalar, the six bivector
/// components `s^{μν}` (μ<ν, order 01 02 03 12 13 23), and the pseudoscalar.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct EvenCoeffs {
    pub s: f64,
    pub bivector: [f64; 6],
    pub p: f64,
}

impl EvenCoeffs {
    /// `s^{μν}` for any ordered pair, with antisymmetry.
    pub fn s_pair(&self, mu: usize, nu: usize) -> f64 {
        match mu.cmp(&nu) {
            std::cmp::Ordering::Equal => 0.0,
            std::cmp::Ordering::Less => self.bivector[pair_index(mu, nu)],
            std::cmp::Ordering::Greater => -self.bivector[pair_index(nu, mu)],
        }
    }
}

fn pair_index(mu: usize, nu: usize) -> usize {
    BIVECTOR_PAIRS
        .iter()
        .position(|&p| p == (mu, nu))
        .expect("pair with mu < nu <= 3")
}

/// Assemble `q1 = s + s²³𝔦 + s³¹𝔧 + s¹²𝔨` and `q2 = -p + s⁰¹𝔦 + s⁰²𝔧 + s⁰³𝔨`.
pub fn operator_from_coeffs(s: f64, bivector: [f64; 6], p: f64) -> SpinorOperator {
    let c = EvenCoeffs { s, bivector, p };
    SpinorOperator {
        q1: Quaternion::new(s, c.s_pair(2, 3), c.s_pair(3, 1), c.s_pair(1, 2)),
        q2: Quaternion::new(-p, c.s_pair(0, 1), c.s_pair(0, 2), c.s_pair(0, 3)),
    }
}

impl SpinorOperator {
    pub fn new(q1: Quaternion, q2: Quaternion) -> Self {
        Self { q1, q2 }
    }

    /// Inverse of [`operator_from_coeffs`].
    pub fn coeffs(&self) -> EvenCoeffs {
        let (q1, q2) = (self.q1, self.q2);
        let mut bivector = [0.0; 6];
        bivector[pair_index(0, 1)] = q2.x;
        bivector[pair_index(0, 2)] = q2.y;
        bivector[pair_index(0, 3)] = q2.z;
        bivector[pair_index(2, 3)] = q1.x;
        bivector[pair_index(1, 3)] = -q1.y;
        bivector[pair_index(1, 2)] = q1.z;
        EvenCoeffs {
            s: q1.w,
            bivector,
            p: -q2.w,
        }
    }

    /// `s + s^{μν} e_μ e_ν + p e0123` in Cl(1,3).
    pub fn to_multivector(&self) -> Multivector {
        let c = self.coeffs();
        let mut mv = Multivector::scalar(Signature::Minkowski, c.s);
        for (k, &(mu, nu)) in BIVECTOR_PAIRS.iter().enumerate() {
            mv.set_coeff(bivector_slot(mu, nu), Complex64::new(c.bivector[k], 0.0));
        }
        mv.set_coeff(PSEUDOSCALAR, Complex64::new(c.p, 0.0));
        mv
    }

    /// Read an even, real multivector. Odd or imaginary parts are an error.
    pub fn from_multivector(mv: &Multivector) -> Result<Self> {
        if mv.signature() != Signature::Minkowski {
            return Err(Error::WrongSignature {
                expected: Signature::Minkowski,
                found: mv.signature(),
            });
        }
        for i in 0..DIM {
            let c = mv.coeff(i);
            if c.im != 0.0 || (grade_of(i) % 2 == 1 && c.re != 0.0) {
                return Err(Error::InvalidArgument(
                    "spinor operator must be a real even multivector".into(),
                ));
            }
        }
        let mut bivector = [0.0; 6];
        for (k, &(mu, nu)) in BIVECTOR_PAIRS.iter().enumerate() {
            bivector[k] = mv.coeff(bivector_slot(mu, nu)).re;
        }
        Ok(operator_from_coeffs(
            mv.coeff(0).re,
            bivector,
            mv.coeff(PSEUDOSCALAR).re,
        ))
    }

    /// `[[q1, -q2], [q2, q1]]`.
    pub fn matrix(&self) -> QuatMatrix2 {
        QuatMatrix2([[self.q1, -self.q2], [self.q2, self.q1]])
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.q1
            .max_abs_diff(&other.q1)
            .max(self.q2.max_abs_diff(&other.q2))
    }
}

/// Ideal element `[[q1, -q2], [q2, q1]] [f]` with `[f] = [[1, 0], [0, 0]]`.
pub fn ideal_element_h2(q1: Quaternion, q2: Quaternion) -> QuatMatrix2 {
    let f = QuatMatrix2([
        [Quaternion::ONE, Quaternion::ZERO],
        [Quaternion::ZERO, Quaternion::ZERO],
    ]);
    SpinorOperator::new(q1, q2).matrix() * f
}

/// Change of basis taking Dirac-representation columns to Weyl ones:
/// `g_weyl = U g_dirac U⁻¹`, `U = (1/√2) [[I, -I], [I, I]]`.
pub fn dirac_to_weyl() -> Matrix4c {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    Matrix4c::from_fn(|r, c| {
        let same = r % 2 == c % 2;
        if !same {
            return ZERO;
        }
        if r >= 2 || c < 2 {
            h
        } else {
            -h
        }
    })
}

/// A Dirac spinor `ψ ∈ ℂ⁴` in a given gamma representation.
///
/// JSON: `{"components": [[re, im] x4], "rep": "weyl" | "dirac"}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalSpinor {
    pub components: [Complex64; 4],
    pub rep: Rep,
}

impl ClassicalSpinor {
    pub fn new(components: [Complex64; 4], rep: Rep) -> Self {
        Self { components, rep }
    }

    pub fn weyl(components: [Complex64; 4]) -> Self {
        Self::new(components, Rep::Weyl)
    }

    pub fn dirac(components: [Complex64; 4]) -> Self {
        Self::new(components, Rep::Dirac)
    }

    /// Spinor with real components.
    pub fn from_real(re: [f64; 4], rep: Rep) -> Self {
        Self::new(re.map(|x| Complex64::new(x, 0.0)), rep)
    }

    pub fn zero(rep: Rep) -> Self {
        Self::new([ZERO; 4], rep)
    }

    pub fn is_finite(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.components.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| *c == ZERO)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.components.map(|x| x * c), self.rep)
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroSpinor);
        }
        Ok(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn column(&self) -> nalgebra::Vector4<Complex64> {
        nalgebra::Vector4::from(self.components)
    }

    pub fn from_column(v: &nalgebra::Vector4<Complex64>, rep: Rep) -> Self {
        Self::new([v[0], v[1], v[2], v[3]], rep)
    }

    /// The same abstract spinor expressed in another representation.
    pub fn to_rep(&self, target: Rep) -> Self {
        let u = dirac_to_weyl();
        let v = self.column();
        let out = match (self.rep, target) {
            (a, b) if a == b => v,
            (Rep::Dirac, Rep::Weyl) => u * v,
            (Rep::Weyl, Rep::Dirac) => u.adjoint() * v,
            _ => unreachable!(),
        };
        Self::from_column(&out, target)
    }

    /// `⟨self, other⟩ = Σ self_i* other_i`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Sine of the angle between the complex rays of two nonzero spinors,
    /// from the component of `other` orthogonal to `self`.
    pub fn ray_sine(&self, other: &Self) -> f64 {
        let n2 = self.norm_sqr();
        let proj = self.inner(other) / n2;
        let residual: f64 = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| (b - a * proj).norm_sqr())
            .sum();
        residual.sqrt() / other.norm()
    }
}

/// Classical spinor (Dirac representation) of a spinor operator.
pub fn classical_from_operator(op: &SpinorOperator) -> ClassicalSpinor {
    let c = op.coeffs();
    let s = |mu, nu| c.s_pair(mu, nu);
    ClassicalSpinor::dirac([
        Complex64::new(c.s, s(2, 3)),
        Complex64::new(s(1, 3), s(1, 2)),
        Complex64::new(c.p, s(1, 0)),
        Complex64::new(s(0, 2), s(3, 0)),
    ])
}

/// Inverse of [`classical_from_operator`]; non-Dirac inputs are converted first.
pub fn operator_from_classical(psi: &ClassicalSpinor) -> SpinorOperator {
    let [p1, p2, p3, p4] = psi.to_rep(Rep::Dirac).components;
    let mut bivector = [0.0; 6];
    bivector[pair_index(2, 3)] = p1.im;
    bivector[pair_index(1, 3)] = p2.re;
    bivector[pair_index(1, 2)] = p2.im;
    bivector[pair_index(0, 1)] = -p3.im;
    bivector[pair_index(0, 2)] = p4.re;
    bivector[pair_index(0, 3)] = -p4.im;
    operator_from_coeffs(p1.re, bivector, p3.re)
}

/// Minimal-left-ideal form of a spinor: a 4x4 complex matrix whose first
/// column carries ψ and whose other columns vanish.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraicSpinor {
    pub matrix: Matrix4c,
    pub rep: Rep,
}

impl AlgebraicSpinor {
    /// `true` when columns 2-4 are identically zero.
    pub fn is_in_ideal(&self) -> bool {
        (0..4).all(|r| (1..4).all(|c| self.matrix[(r, c)] == ZERO))
    }
}

pub fn algebraic_from_classical(psi: &ClassicalSpinor) -> AlgebraicSpinor {
    let mut m = Matrix4c::zeros();
    for (r, c) in psi.components.iter().enumerate() {
        m[(r, 0)] = *c;
    }
    AlgebraicSpinor {
        matrix: m,
        rep: psi.rep,
    }
}

pub fn classical_from_algebraic(xi: &AlgebraicSpinor) -> ClassicalSpinor {
    ClassicalSpinor::new(std::array::from_fn(|r| xi.matrix[(r, 0)]), xi.rep)
}

/// `M f` for the complexified idempotent in its Dirac image (the matrix unit
/// at (1,1)); any 4x4 matrix projected into the ideal.
pub fn project_to_ideal(m: &Matrix4c) -> Matrix4c {
    let f = rep_matrix(&idempotent_f(true), Rep::Dirac).expect("Minkowski idempotent");
    m * f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{matrix_max_norm, GammaRep};

    #[test]
    fn quaternion_generators_match_display() {
        use Quaternion as Q;
        let e0 = quaternion_rep_e(0).unwrap();
        assert_eq!(e0.0, [[Q::ONE, Q::ZERO], [Q::ZERO, -Q::ONE]]);
        let e1 = quaternion_rep_e(1).unwrap();
        assert_eq!(e1.0, [[Q::ZERO, Q::I], [Q::I, Q::ZERO]]);
        assert_eq!(e1 * e1, QuatMatrix2::IDENTITY.scale(-1.0));
        assert_eq!(quaternion_rep_e(4), Err(Error::IndexOutOfRange(4)));
    }

    #[test]
    fn quaternion_generators_satisfy_clifford_relations() {
        for mu in 0..4 {
            for nu in 0..4 {
                let a = quaternion_rep_e(mu).unwrap();
                let b = quaternion_rep_e(nu).unwrap();
                let ac = a * b + b * a;
                let eta = if mu == nu {
                    Signature::Minkowski.metric(mu)
                } else {
                    0.0
                };
                assert!(ac.max_abs_diff(&QuatMatrix2::IDENTITY.scale(2.0 * eta)) < 1e-15);
            }
        }
    }

    #[test]
    fn operator_from_coeffs_examples() {
        let op = operator_from_coeffs(1.0, [0.0; 6], 0.0);
        assert_eq!((op.q1, op.q2), (Quaternion::ONE, Quaternion::ZERO));
        let op = operator_from_coeffs(0.0, [0.0; 6], 1.0);
        assert_eq!((op.q1, op.q2), (Quaternion::ZERO, -Quaternion::ONE));
        let mut b = [0.0; 6];
        b[5] = 1.0; // s^23
        let op = operator_from_coeffs(0.0, b, 0.0);
        assert_eq!((op.q1, op.q2), (Quaternion::I, Quaternion::ZERO));
    }

    #[test]
    fn classical_from_operator_examples() {
        let one = Complex64::new(1.0, 0.0);
        let op = operator_from_coeffs(1.0, [0.0; 6], 0.0);
        assert_eq!(
            classical_from_operator(&op).components,
            [one, ZERO, ZERO, ZERO]
        );
        let op = operator_from_coeffs(0.0, [0.0; 6], 1.0);
        assert_eq!(
            classical_from_operator(&op).components,
            [ZERO, ZERO, one, ZERO]
        );
    }

    #[test]
    fn antisymmetric_components_carry_signs() {
        // s^01 = 1 gives psi3 = s^10 i = -i; s^03 = 1 gives psi4 = s^30 i = -i
        let mut b = [0.0; 6];
        b[0] = 1.0;
        b[2] = 1.0;
        let psi = classical_from_operator(&operator_from_coeffs(0.0, b, 0.0));
        assert_eq!(psi.components[2], Complex64::new(0.0, -1.0));
        assert_eq!(psi.components[3], Complex64::new(0.0, -1.0));
    }

    #[test]
    fn algebraic_examples() {
        let psi = ClassicalSpinor::from_real([1.0, 0.0, 0.0, 0.0], Rep::Dirac);
        let xi = algebraic_from_classical(&psi);
        let f = rep_matrix(&idempotent_f(true), Rep::Dirac).unwrap();
        assert_eq!(xi.matrix, f);
        assert!(xi.is_in_ideal());
        let zero = algebraic_from_classical(&ClassicalSpinor::zero(Rep::Dirac));
        assert_eq!(zero.matrix, Matrix4c::zeros());
    }

    #[test]
    fn ideal_element_examples() {
        use Quaternion as Q;
        let m = ideal_element_h2(Q::ONE, Q::ZERO);
        assert_eq!(m.0, [[Q::ONE, Q::ZERO], [Q::ZERO, Q::ZERO]]);
        let m = ideal_element_h2(Q::I, Q::K);
        assert_eq!(m.0, [[Q::I, Q::ZERO], [Q::K, Q::ZERO]]);
    }

    #[test]
    fn operator_multivector_is_even() {
        let op = operator_from_coeffs(0.5, [1.0, -2.0, 3.0, 0.25, -0.75, 1.5], -1.25);
        let mv = op.to_multivector();
        for i in 0..DIM {
            if grade_of(i) % 2 == 1 {
                assert_eq!(mv.coeff(i), ZERO);
            }
        }
        assert_eq!(SpinorOperator::from_multivector(&mv).unwrap(), op);
    }

    #[test]
    fn dirac_to_weyl_intertwines_gammas() {
        let u = dirac_to_weyl();
        for mu in 0..4 {
            let lhs = u * GammaRep::dirac().gamma(mu) * u.adjoint();
            assert!(matrix_max_norm(&(lhs - GammaRep::weyl().gamma(mu))) < 1e-15);
        }
        assert!(matrix_max_norm(&(u * u.adjoint() - Matrix4c::identity())) < 1e-15);
    }

    #[test]
    fn ray_sine_of_phase_multiple_is_zero() {
        let psi = ClassicalSpinor::new(
            [
                Complex64::new(1.0, 2.0),
                Complex64::new(-0.5, 0.1),
                Complex64::new(0.0, 3.0),
                Complex64::new(2.0, -1.0),
            ],
            Rep::Weyl,
        );
        let rotated = psi.scale(Complex64::from_polar(2.0, 0.7));
        assert!(psi.ray_sine(&rotated) < 1e-15);
    }
}
