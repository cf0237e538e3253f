//! Bilinear covariants σ, ω, J, K, S of a Dirac spinor.
//!
//! Minkowski (Cl(1,3)), with `ψ̄ = ψ† γ0`:
//!
//! ```text
//! σ = ψ̄ψ    ω = -ψ̄ γ0123 ψ    J_μ = ψ̄ γ_μ ψ    K_μ = i ψ̄ γ0123 γ_μ ψ
//! S_μν = c_S · i ψ̄ [γ_μ, γ_ν] ψ
//! ```
//!
//! `c_S = 1/2` is the only normalization for which the aggregate
//! `σ + J + iS + iKγ0123 + ωγ0123` equals `4ψψ̄` and `J∧K = -(ω + σγ0123)S`
//! holds; see the calibration tests. All components are stored with lower
//! indices.
//!
//! Euclidean (Cl(4)) uses `ψ̄ = ψ†` and the generators `e0 = [e0]`,
//! `e_i = [e_i][e0]` of the quaternionic representation, embedded in M(4,ℂ).

use std::sync::LazyLock;

use nalgebra::Vector4;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{
    bivector_slot, vector_slot, GammaRep, Matrix4c, Multivector, Signature, BIVECTOR_PAIRS, I,
};
use crate::error::{Error, Result};
use crate::spinor_forms::{quaternion_rep_e, ClassicalSpinor, Quaternion};

/// Calibrated normalization of the S components.
pub const S_NORMALIZATION: f64 = 0.5;

/// Imaginary residues above `IMAG_TOL · ‖ψ‖²` are reported as errors.
pub const IMAG_TOL: f64 = 1e-10;

/// The five covariants. JSON field names follow the physics notation
/// (`sigma`, `omega`, `J`, `K`, `S`); S is ordered (01, 02, 03, 12, 13, 23).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BilinearSet {
    pub sigma: f64,
    pub omega: f64,
    #[serde(rename = "J")]
    pub j: [f64; 4],
    #[serde(rename = "K")]
    pub k: [f64; 4],
    #[serde(rename = "S")]
    pub s: [f64; 6],
    pub signature: Signature,
}

fn euclid_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

impl BilinearSet {
    pub fn zero(signature: Signature) -> Self {
        Self {
            sigma: 0.0,
            omega: 0.0,
            j: [0.0; 4],
            k: [0.0; 4],
            s: [0.0; 6],
            signature,
        }
    }

    pub fn scale(&self, f: f64) -> Self {
        Self {
            sigma: self.sigma * f,
            omega: self.omega * f,
            j: self.j.map(|x| x * f),
            k: self.k.map(|x| x * f),
            s: self.s.map(|x| x * f),
            signature: self.signature,
        }
    }

    /// Euclidean norms of the components, ordered (σ, ω, J, K, S).
    pub fn norms(&self) -> [f64; 5] {
        [
            self.sigma.abs(),
            self.omega.abs(),
            euclid_norm(&self.j),
            euclid_norm(&self.k),
            euclid_norm(&self.s),
        ]
    }

    /// Largest component norm; the natural quadratic scale of the set.
    pub fn magnitude(&self) -> f64 {
        self.norms().into_iter().fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let a = self.flat();
        let b = other.flat();
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    fn flat(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        out[0] = self.sigma;
        out[1] = self.omega;
        out[2..6].copy_from_slice(&self.j);
        out[6..10].copy_from_slice(&self.k);
        out[10..16].copy_from_slice(&self.s);
        out
    }

    /// Contraction `a^μ b_μ` in the set's metric.
    pub fn dot(&self, a: &[f64; 4], b: &[f64; 4]) -> f64 {
        (0..4)
            .map(|mu| self.signature.metric(mu) * a[mu] * b[mu])
            .sum()
    }

    /// `J = J_μ γ^μ` as a multivector.
    pub fn j_vector(&self) -> Multivector {
        self.lower_vector(&self.j)
    }

    /// `K = K_μ γ^μ` as a multivector.
    pub fn k_vector(&self) -> Multivector {
        self.lower_vector(&self.k)
    }

    fn lower_vector(&self, v: &[f64; 4]) -> Multivector {
        let sig = self.signature;
        Multivector::vector(sig, std::array::from_fn(|mu| sig.metric(mu) * v[mu]))
    }

    /// `S = Σ_{μ<ν} S_μν γ^μ γ^ν` as a multivector.
    pub fn s_bivector(&self) -> Multivector {
        let sig = self.signature;
        let mut mv = Multivector::zero(sig);
        for (k, &(mu, nu)) in BIVECTOR_PAIRS.iter().enumerate() {
            let c = sig.metric(mu) * sig.metric(nu) * self.s[k];
            mv.set_coeff(bivector_slot(mu, nu), Complex64::new(c, 0.0));
        }
        mv
    }

    /// Inverse of the multivector packing: read lower-index components back
    /// from vector / bivector multivectors (real parts).
    pub fn lower_from_vector(sig: Signature, v: &Multivector) -> [f64; 4] {
        std::array::from_fn(|mu| sig.metric(mu) * v.coeff(vector_slot(mu)).re)
    }
}

/// `ψ̄ = ψ† γ0` as a row, in the spinor's representation.
pub fn dirac_adjoint(psi: &ClassicalSpinor) -> [Complex64; 4] {
    let g0 = GammaRep::get(psi.rep).gamma(0);
    let row = psi.column().adjoint() * g0;
    [row[0], row[1], row[2], row[3]]
}

fn sandwich(
    bar: &nalgebra::RowVector4<Complex64>,
    m: &Matrix4c,
    psi: &Vector4<Complex64>,
) -> Complex64 {
    (bar * m * psi)[0]
}

struct RawBilinears {
    sigma: Complex64,
    omega: Complex64,
    j: [Complex64; 4],
    k: [Complex64; 4],
    s: [Complex64; 6],
}

impl RawBilinears {
    fn compute(
        bar: &nalgebra::RowVector4<Complex64>,
        psi: &Vector4<Complex64>,
        gens: &[Matrix4c; 4],
        pseudo: &Matrix4c,
        c_s: f64,
    ) -> Self {
        let sigma = (bar * psi)[0];
        let omega = -sandwich(bar, pseudo, psi);
        let j = std::array::from_fn(|mu| sandwich(bar, &gens[mu], psi));
        let k = std::array::from_fn(|mu| I * sandwich(bar, &(pseudo * gens[mu]), psi));
        let s = std::array::from_fn(|n| {
            let (mu, nu) = BIVECTOR_PAIRS[n];
            let comm = gens[mu] * gens[nu] - gens[nu] * gens[mu];
            I * sandwich(bar, &comm, psi) * c_s
        });
        Self {
            sigma,
            omega,
            j,
            k,
            s,
        }
    }

    fn max_imag(&self) -> (&'static str, f64) {
        let mut worst = ("sigma", self.sigma.im.abs());
        let mut check = |name, v: &[Complex64]| {
            for c in v {
                if c.im.abs() > worst.1 {
                    worst = (name, c.im.abs());
                }
            }
        };
        check("omega", &[self.omega]);
        check("J", &self.j);
        check("K", &self.k);
        check("S", &self.s);
        worst
    }

    fn real(&self, signature: Signature) -> BilinearSet {
        BilinearSet {
            sigma: self.sigma.re,
            omega: self.omega.re,
            j: self.j.map(|c| c.re),
            k: self.k.map(|c| c.re),
            s: self.s.map(|c| c.re),
            signature,
        }
    }
}

/// Minkowski covariants of `psi` in its own representation, with the S
/// normalization `c_s` (use [`covariants`] for the calibrated value).
pub fn bilinear_covariants(psi: &ClassicalSpinor, c_s: f64) -> Result<BilinearSet> {
    if !psi.is_finite() {
        return Err(Error::InvalidArgument(
            "spinor has non-finite components".into(),
        ));
    }
    let g = GammaRep::get(psi.rep);
    let v = psi.column();
    let bar = v.adjoint() * g.gamma(0);
    let raw = RawBilinears::compute(&bar, &v, g.gammas(), g.g0123(), c_s);
    let (name, residue) = raw.max_imag();
    let limit = IMAG_TOL * psi.norm_sqr();
    if residue > limit {
        return Err(Error::ImaginaryResidue {
            name,
            residue,
            limit,
        });
    }
    Ok(raw.real(Signature::Minkowski))
}

/// [`bilinear_covariants`] with the calibrated [`S_NORMALIZATION`].
pub fn covariants(psi: &ClassicalSpinor) -> Result<BilinearSet> {
    bilinear_covariants(psi, S_NORMALIZATION)
}

struct EuclideanRep {
    gens: [Matrix4c; 4],
    e5: Matrix4c,
}

static EUCLIDEAN: LazyLock<EuclideanRep> = LazyLock::new(|| {
    let e0 = quaternion_rep_e(0).unwrap();
    let gens = std::array::from_fn(|mu| {
        if mu == 0 {
            e0.to_complex()
        } else {
            (quaternion_rep_e(mu).unwrap() * e0).to_complex()
        }
    });
    let e5 = gens[0] * gens[1] * gens[2] * gens[3];
    EuclideanRep { gens, e5 }
});

/// Complex image of the Euclidean generator `e_mu` (Hermitian, squares to 1).
pub fn euclidean_generator(mu: usize) -> Result<Matrix4c> {
    if mu > 3 {
        return Err(Error::IndexOutOfRange(mu));
    }
    Ok(EUCLIDEAN.gens[mu])
}

/// `e5 = e0 e1 e2 e3` in the Euclidean representation.
pub fn euclidean_e5() -> Matrix4c {
    EUCLIDEAN.e5
}

/// Euclidean covariants of `ψ ∈ ℂ⁴`. ω carries the same sign convention as
/// the Minkowski one, `ω = -ψ† e5 ψ`, which is what the closed-form component
/// formulas produce.
pub fn euclidean_bilinears(psi: &[Complex64; 4]) -> BilinearSet {
    let v = Vector4::from(*psi);
    let bar = v.adjoint();
    RawBilinears::compute(&bar, &v, &EUCLIDEAN.gens, &EUCLIDEAN.e5, S_NORMALIZATION)
        .real(Signature::Euclidean)
}

/// σ, ω and J of the Euclidean covariants.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EuclideanComponents {
    pub sigma: f64,
    pub omega: f64,
    #[serde(rename = "J")]
    pub j: [f64; 4],
}

impl EuclideanComponents {
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m = (self.sigma - other.sigma)
            .abs()
            .max((self.omega - other.omega).abs());
        for mu in 0..4 {
            m = m.max((self.j[mu] - other.j[mu]).abs());
        }
        m
    }
}

impl From<&BilinearSet> for EuclideanComponents {
    fn from(b: &BilinearSet) -> Self {
        Self {
            sigma: b.sigma,
            omega: b.omega,
            j: b.j,
        }
    }
}

/// Closed-form components:
///
/// ```text
/// σ  = |ψ1|² + |ψ2|² + |ψ3|² + |ψ4|²     ω  = 2 Re(ψ1ψ3* + ψ2ψ4*)
/// J0 = |ψ1|² + |ψ2|² - |ψ3|² - |ψ4|²     J1 = 2 Im(ψ1ψ4* + ψ2ψ3*)
/// J2 = 2 Re(ψ2ψ3* - ψ1ψ4*)               J3 = 2 Im(ψ3ψ1* + ψ2ψ4*)
/// ```
pub fn euclidean_components_closed_form(psi: &[Complex64; 4]) -> EuclideanComponents {
    let [p1, p2, p3, p4] = *psi;
    let n = |c: Complex64| c.norm_sqr();
    EuclideanComponents {
        sigma: n(p1) + n(p2) + n(p3) + n(p4),
        omega: 2.0 * (p1 * p3.conj() + p2 * p4.conj()).re,
        j: [
            n(p1) + n(p2) - n(p3) - n(p4),
            2.0 * (p1 * p4.conj() + p2 * p3.conj()).im,
            2.0 * (p2 * p3.conj() - p1 * p4.conj()).re,
            2.0 * (p3 * p1.conj() + p2 * p4.conj()).im,
        ],
    }
}

/// The same components from the quaternionic pair `(q1, q2) ∈ ℍ²`:
///
/// ```text
/// σ = q1·q1 + q2·q2    ω = 2 Re(q1* q2)    J0 = q1·q1 - q2·q2
/// J_i = 2 Re(q2* u_i q1),  u = (𝔦, 𝔧, 𝔨) = (e2e3, e3e1, e1e2)
/// ```
pub fn quaternionic_euclidean_components(q1: Quaternion, q2: Quaternion) -> EuclideanComponents {
    let units = [Quaternion::I, Quaternion::J, Quaternion::K];
    let ji = units.map(|u| 2.0 * (q2.conj() * u * q1).w);
    EuclideanComponents {
        sigma: q1.norm_sqr() + q2.norm_sqr(),
        omega: 2.0 * (q1.conj() * q2).w,
        j: [q1.norm_sqr() - q2.norm_sqr(), ji[0], ji[1], ji[2]],
    }
}

/// `(q1, q2) -> ψ`: first column of the embedded ideal element.
pub fn h2_to_c4(q1: Quaternion, q2: Quaternion) -> [Complex64; 4] {
    let a = q1.to_complex();
    let b = q2.to_complex();
    [a[0][0], a[1][0], b[0][0], b[1][0]]
}

/// Inverse of [`h2_to_c4`].
pub fn c4_to_h2(psi: &[Complex64; 4]) -> (Quaternion, Quaternion) {
    // first column of to_complex(q) is (w + iz, -y - ix)
    let q =
        |top: Complex64, bottom: Complex64| Quaternion::new(top.re, -bottom.im, -bottom.re, top.im);
    (q(psi[0], psi[1]), q(psi[2], psi[3]))
}
