//! The singular matrix mapping regular spinors onto flag-dipoles (class 4).
//!
//! Rows 2 and 3 are fixed by rows 1 and 4:
//!
//! ```text
//! row2 = (m22 / m12) row1        row3 = -(m22* / m12*) row4
//! ```
//!
//! which makes `M†γ0M = 0` and `M†γ1γ2γ3M = 0` in the Weyl representation,
//! so every image has σ = ω = 0.

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::clifford::{matrix_max_norm, GammaRep, Matrix4c, Rep};
use crate::error::{Error, Result};
use crate::lounesto::{classify, ClassificationReport, LounestoClass};
use crate::spinor_forms::ClassicalSpinor;

/// The nine free entries.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MappingParams {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m13: Complex64,
    pub m14: Complex64,
    pub m22: Complex64,
    pub m41: Complex64,
    pub m42: Complex64,
    pub m43: Complex64,
    pub m44: Complex64,
}

impl MappingParams {
    pub fn uniform(value: Complex64) -> Self {
        Self {
            m11: value,
            m12: value,
            m13: value,
            m14: value,
            m22: value,
            m41: value,
            m42: value,
            m43: value,
            m44: value,
        }
    }

    /// Entries with independent standard normal real and imaginary parts,
    /// redrawn until `|m12| ≥ 0.1`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut draw = || Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
        let mut p = Self::uniform(Complex64::new(0.0, 0.0));
        for slot in p.slots_mut() {
            *slot = draw();
        }
        while p.m12.norm() < 0.1 {
            p.m12 = draw();
        }
        p
    }

    fn slots_mut(&mut self) -> [&mut Complex64; 9] {
        [
            &mut self.m11,
            &mut self.m12,
            &mut self.m13,
            &mut self.m14,
            &mut self.m22,
            &mut self.m41,
            &mut self.m42,
            &mut self.m43,
            &mut self.m44,
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MappingMatrix {
    pub matrix: Matrix4c,
    pub params: MappingParams,
}

#[allow(non_snake_case)]
pub fn build_M(p: &MappingParams) -> Result<MappingMatrix> {
    if p.m12.norm() == 0.0 {
        return Err(Error::ZeroM12);
    }
    let row1 = [p.m11, p.m12, p.m13, p.m14];
    let row4 = [p.m41, p.m42, p.m43, p.m44];
    let a = p.m22 / p.m12;
    let b = -p.m22.conj() / p.m12.conj();
    let matrix = Matrix4::from_fn(|r, c| match r {
        0 => row1[c],
        1 => a * row1[c],
        2 => b * row4[c],
        _ => row4[c],
    });
    Ok(MappingMatrix { matrix, params: *p })
}

/// Max-norms of `M†γ0M` and `M†γ1γ2γ3M` (Weyl representation).
pub fn constraint_residuals(m: &Matrix4c) -> (f64, f64) {
    let g = GammaRep::weyl();
    let g123 = g.gamma(1) * g.gamma(2) * g.gamma(3);
    let adj = m.adjoint();
    (
        matrix_max_norm(&(adj * g.gamma(0) * m)),
        matrix_max_norm(&(adj * g123 * m)),
    )
}

/// `|det M|`.
pub fn no_inverse_witness(m: &MappingMatrix) -> f64 {
    m.matrix.determinant().norm()
}

/// Image of a regular spinor, with its classification. `degenerate` explains
/// why the image is not a flag-dipole when that happens.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MapImage {
    pub spinor: ClassicalSpinor,
    pub report: ClassificationReport,
    pub degenerate: Option<String>,
}

/// Images of nonzero spinors below this fraction of `‖M‖‖φ‖` count as zero.
const KERNEL_TOL: f64 = 1e-12;

pub fn map_to_class4(m: &MappingMatrix, phi: &ClassicalSpinor, tol: f64) -> Result<MapImage> {
    let source = classify(phi, tol)?;
    let phi = phi.to_rep(Rep::Weyl);
    let image = ClassicalSpinor::from_column(&(m.matrix * phi.column()), Rep::Weyl);
    if image.norm() <= KERNEL_TOL * matrix_max_norm(&m.matrix) * phi.norm() {
        return Err(Error::InKernel);
    }
    if !source.class.is_regular() {
        return Err(Error::NotRegular(source.class.to_string()));
    }
    let report = classify(&image, tol)?;
    let degenerate = (report.class != LounestoClass::C4).then(|| {
        let f = &report.zero_flags;
        let vanishing: Vec<&str> = [("J", f.j), ("K", f.k), ("S", f.s)]
            .into_iter()
            .filter(|&(_, z)| z)
            .map(|(n, _)| n)
            .collect();
        format!(
            "image classifies {} (vanishing: {})",
            report.class,
            if vanishing.is_empty() {
                "none".to_string()
            } else {
                vanishing.join(", ")
            }
        )
    });
    Ok(MapImage {
        spinor: image,
        report,
        degenerate,
    })
}

const HERMITIAN_TOL: f64 = 1e-12;

/// Check the parameters against every relation needed for `M = M†` and build
/// the matrix. All violated relations are listed in the error.
pub fn hermitian_constrain(p: &MappingParams) -> Result<MappingMatrix> {
    let scale = [
        p.m11, p.m12, p.m13, p.m14, p.m22, p.m41, p.m42, p.m43, p.m44,
    ]
    .iter()
    .map(|c| c.norm())
    .fold(1.0, f64::max);
    let near = |a: Complex64, b: Complex64| (a - b).norm() <= HERMITIAN_TOL * scale * scale;
    let real = |a: Complex64| a.im.abs() <= HERMITIAN_TOL * scale;
    let checks = [
        (real(p.m11), "m11 = m11*"),
        (real(p.m12), "m12 = m12*"),
        (real(p.m22), "m22 = m22*"),
        (p.m22.norm() > 0.0, "m22 != 0"),
        (near(p.m14, p.m41.conj()), "m14 = m41*"),
        (near(p.m13 * p.m12, -p.m22 * p.m14), "m13 = -m22 m14 / m12"),
        (near(p.m13, -p.m42.conj()), "m13 = -m42*"),
        (near(p.m44 * p.m22, -p.m12 * p.m43), "m44 = -m12 m43 / m22"),
        (near(p.m11 * p.m22, p.m12 * p.m12), "m11 m22 = m12^2"),
        (real(p.m43), "m43 = m43*"),
    ];
    let violations: Vec<String> = checks
        .iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, what)| what.to_string())
        .collect();
    if !violations.is_empty() {
        return Err(Error::HermitianViolations(violations));
    }
    let m = build_M(p)?;
    let dev = matrix_max_norm(&(m.matrix - m.matrix.adjoint()));
    if dev > HERMITIAN_TOL * matrix_max_norm(&m.matrix) {
        return Err(Error::HermitianViolations(vec![format!(
            "M - M^dag has max entry {dev:e}"
        )]));
    }
    Ok(m)
}

/// A random parameter set satisfying every Hermiticity relation.
pub fn random_hermitian_params<R: Rng + ?Sized>(rng: &mut R) -> MappingParams {
    let mut normal = || -> f64 { rng.sample(StandardNormal) };
    let mut m12 = normal();
    while m12.abs() < 0.1 {
        m12 = normal();
    }
    let mut m22 = normal();
    while m22.abs() < 0.1 {
        m22 = normal();
    }
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let m14 = c(normal(), normal());
    let m43 = c(normal(), 0.0);
    let m13 = -(c(m22, 0.0) * m14) / m12;
    MappingParams {
        m11: c(m12 * m12 / m22, 0.0),
        m12: c(m12, 0.0),
        m13,
        m14,
        m22: c(m22, 0.0),
        m41: m14.conj(),
        m42: -m13.conj(),
        m43,
        m44: -(c(m12, 0.0) * m43) / m22,
    }
}

/// A unit vector spanning part of the null space of `M`.
pub fn kernel_vector(m: &Matrix4c) -> ClassicalSpinor {
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let (idx, _) =
        svd.singular_values
            .iter()
            .enumerate()
            .fold(
                (0, f64::INFINITY),
                |(bi, bv), (i, &v)| if v < bv { (i, v) } else { (bi, bv) },
            );
    let row = v_t.row(idx);
    ClassicalSpinor::weyl([row[0].conj(), row[1].conj(), row[2].conj(), row[3].conj()])
}

/// Relative residual `‖Mx - φ‖ / ‖φ‖` of the least-squares solution of
/// `Mx = φ`; bounded away from zero when φ leaves the column space.
pub fn least_squares_residual(m: &Matrix4c, phi: &ClassicalSpinor) -> f64 {
    let b: Vector4<Complex64> = phi.to_rep(Rep::Weyl).column();
    let svd = m.svd(true, true);
    let eps = 1e-12 * svd.singular_values.max();
    let x = svd.solve(&b, eps).expect("u and v_t computed");
    (m * x - b).norm() / b.norm()
}
