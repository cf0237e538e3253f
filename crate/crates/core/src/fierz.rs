//! Fierz-Pauli-Kofink identities, the Fierz aggregate and spinor
//! reconstruction.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bilinears::{BilinearSet, S_NORMALIZATION};
use crate::clifford::{rep_matrix, GammaRep, Multivector, Rep, Signature, BIVECTOR_PAIRS, I};
use crate::error::{Error, Result};
use crate::spinor_forms::ClassicalSpinor;

/// Residuals of the four quadratic identities.
///
/// Minkowski: `r1 = J² - σ² - ω²`, `r2 = K² + J²`, `r3 = J·K`,
/// `r4 = ‖J∧K + (ω + σγ0123)S‖`.
/// Euclidean: `r1 = J² - σ² + ω²`, `r2 = J² - K²`, `r3 = J·K`,
/// `r4 = ‖J∧K + (ω + σe5)S‖`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FpkResiduals {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub r4: f64,
}

impl FpkResiduals {
    pub fn as_array(&self) -> [f64; 4] {
        [self.r1, self.r2, self.r3, self.r4]
    }

    /// Largest absolute residual.
    pub fn max_abs(&self) -> f64 {
        self.as_array().iter().fold(0.0, |m, r| m.max(r.abs()))
    }

    /// Per-identity verdict against `limit`.
    pub fn passes(&self, limit: f64) -> [bool; 4] {
        self.as_array().map(|r| r.abs() <= limit)
    }
}

pub fn fpk_residuals(b: &BilinearSet) -> FpkResiduals {
    let j2 = b.dot(&b.j, &b.j);
    let k2 = b.dot(&b.k, &b.k);
    let (r1, r2) = match b.signature {
        Signature::Minkowski => (j2 - b.sigma * b.sigma - b.omega * b.omega, k2 + j2),
        Signature::Euclidean => (j2 - b.sigma * b.sigma + b.omega * b.omega, j2 - k2),
    };
    FpkResiduals {
        r1,
        r2,
        r3: b.dot(&b.j, &b.k),
        r4: wedge_residual(b).max_norm(),
    }
}

fn wedge_residual(b: &BilinearSet) -> Multivector {
    let sig = b.signature;
    let j = b.j_vector();
    let k = b.k_vector();
    let wedge = ((j * k) - (k * j)).scale(0.5);
    let factor = Multivector::scalar(sig, b.omega) + Multivector::pseudoscalar(sig).scale(b.sigma);
    wedge + (factor * b.s_bivector())
}

/// Residuals together with the limit they were judged against.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FpkReport {
    pub residuals: FpkResiduals,
    pub tol: f64,
    pub limit: f64,
    pub pass: [bool; 4],
}

impl FpkReport {
    pub fn all_pass(&self) -> bool {
        self.pass.iter().all(|&p| p)
    }
}

/// Judge the identities at `tol` relative to the square of the set's
/// magnitude (the identities are quadratic in the covariants).
pub fn fpk_report(b: &BilinearSet, tol: f64) -> FpkReport {
    let residuals = fpk_residuals(b);
    let limit = tol * b.magnitude().powi(2);
    FpkReport {
        residuals,
        tol,
        limit,
        pass: residuals.passes(limit),
    }
}

/// `Z = σ + J + iS + iKγ0123 + ωγ0123`.
pub fn aggregate(b: &BilinearSet) -> Multivector {
    let sig = b.signature;
    let pseudo = Multivector::pseudoscalar(sig);
    let mut z = Multivector::scalar(sig, b.sigma);
    z = z + b.j_vector();
    z = z + b.s_bivector().scale(I);
    z = z + (b.k_vector() * pseudo).scale(I);
    z + pseudo.scale(b.omega)
}

/// `‖Z² - 4σZ‖ < tol‖Z‖²`.
pub fn is_boomerang(z: &Multivector, sigma: f64, tol: f64) -> bool {
    boomerang_residual(z, sigma) <= tol * z.max_norm().powi(2)
}

pub fn boomerang_residual(z: &Multivector, sigma: f64) -> f64 {
    ((z * z) - z.scale(4.0 * sigma)).max_norm()
}

/// Residuals of `¼ZΓZ = bZ` for the operator Γ defining each covariant,
/// ordered (σ, J, S, K, ω). Each entry is the largest residual norm over the
/// components of that covariant.
pub fn generalized_fpk_residuals(z: &Multivector, b: &BilinearSet) -> [f64; 5] {
    let sig = z.signature();
    let one = Multivector::scalar(sig, 1.0);
    let pseudo = Multivector::pseudoscalar(sig);
    let e = |mu: usize| Multivector::generator(sig, mu).expect("index in range");
    let check = |gamma: &Multivector, value: f64| {
        let lhs = (&(z * gamma) * z).scale(0.25);
        (lhs - z.scale(value)).max_norm()
    };
    let max = |it: &mut dyn Iterator<Item = f64>| it.fold(0.0, f64::max);

    let r_sigma = check(&one, b.sigma);
    let r_j = max(&mut (0..4).map(|mu| check(&e(mu), b.j[mu])));
    let r_s = max(
        &mut BIVECTOR_PAIRS.iter().enumerate().map(|(n, &(mu, nu))| {
            let comm = (e(mu) * e(nu)) - (e(nu) * e(mu));
            check(&comm.scale(I * S_NORMALIZATION), b.s[n])
        }),
    );
    let r_k = max(&mut (0..4).map(|mu| check(&(pseudo * e(mu)).scale(I), b.k[mu])));
    let r_omega = check(&-pseudo, b.omega);
    [r_sigma, r_j, r_s, r_k, r_omega]
}

/// Data of a singular aggregate `Z = J(1 + is + ihγ0123)`. `j` and `s` are
/// lower-index components.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularAggregateParams {
    #[serde(rename = "J")]
    pub j: [f64; 4],
    pub s: [f64; 4],
    pub h: f64,
}

const NULL_TOL: f64 = 1e-12;

pub fn build_singular_aggregate(p: &SingularAggregateParams) -> Result<Multivector> {
    let probe = BilinearSet::zero(Signature::Minkowski);
    let euclid = |v: &[f64; 4]| v.iter().map(|x| x * x).sum::<f64>();
    let (jn, sn) = (euclid(&p.j), euclid(&p.s));
    if jn == 0.0 {
        return Err(Error::InvalidSingularParams("J must be nonzero".into()));
    }
    let j2 = probe.dot(&p.j, &p.j);
    if j2.abs() > NULL_TOL * jn {
        return Err(Error::InvalidSingularParams(format!(
            "J is not lightlike (J² = {j2})"
        )));
    }
    let sj = probe.dot(&p.s, &p.j);
    if sj.abs() > NULL_TOL * (jn * sn).sqrt() {
        return Err(Error::InvalidSingularParams(format!(
            "s is not orthogonal to J (s·J = {sj})"
        )));
    }
    if probe.dot(&p.s, &p.s) >= 0.0 {
        return Err(Error::InvalidSingularParams("s is not space-like".into()));
    }
    let sig = Signature::Minkowski;
    let raise =
        |v: &[f64; 4]| Multivector::vector(sig, std::array::from_fn(|mu| sig.metric(mu) * v[mu]));
    let factor = (Multivector::scalar(sig, 1.0) + raise(&p.s).scale(I))
        + Multivector::pseudoscalar(sig).scale(I * p.h);
    Ok(raise(&p.j) * factor)
}

/// Kernel values `|ξ̄Zξ|` below this fraction of `‖Z‖‖ξ‖²` are degenerate.
pub const KERNEL_TOL: f64 = 1e-10;

fn kernel_value(z: &nalgebra::Matrix4<Complex64>, xi: &ClassicalSpinor) -> Complex64 {
    let v = xi.column();
    let bar = v.adjoint() * GammaRep::get(xi.rep).gamma(0);
    (bar * z * v)[0]
}

/// Recover a spinor from its aggregate:
/// `ψ' = e^{-iθ} Zξ / (2√(ξ̄Zξ))`.
///
/// With `psi_ref`, θ is chosen so that `ψ'` matches it; otherwise θ = 0 and
/// `ψ'` equals the original spinor up to a unit phase. The result is in the
/// representation of `xi`.
pub fn reconstruct(
    z: &Multivector,
    xi: &ClassicalSpinor,
    psi_ref: Option<&ClassicalSpinor>,
) -> Result<ClassicalSpinor> {
    let zm = rep_matrix(z, xi.rep)?;
    let value = kernel_value(&zm, xi);
    if value.norm() <= KERNEL_TOL * z.max_norm() * xi.norm_sqr() || value.norm() == 0.0 {
        return Err(Error::DegenerateKernel {
            value: value.norm(),
        });
    }
    let zxi = zm * xi.column();
    let psi = ClassicalSpinor::from_column(&zxi, xi.rep).scale(1.0 / (2.0 * value.sqrt()));
    Ok(match psi_ref {
        Some(r) => {
            let overlap = psi.inner(&r.to_rep(xi.rep));
            if overlap.norm() == 0.0 {
                psi
            } else {
                psi.scale(overlap / overlap.norm())
            }
        }
        None => psi,
    })
}

/// The canonical basis spinor with the largest `|ξ̄Zξ|`.
pub fn default_test_spinor(z: &Multivector, rep: Rep) -> Result<ClassicalSpinor> {
    let zm = rep_matrix(z, rep)?;
    let mut best = None;
    let mut best_val = -1.0;
    for i in 0..4 {
        let mut c = [Complex64::new(0.0, 0.0); 4];
        c[i] = Complex64::new(1.0, 0.0);
        let xi = ClassicalSpinor::new(c, rep);
        let v = kernel_value(&zm, &xi).norm();
        if v > best_val {
            best_val = v;
            best = Some(xi);
        }
    }
    Ok(best.expect("four candidates"))
}
