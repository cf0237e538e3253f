//! Invariants of the regular sector: the projection onto (σ, J, ω), the
//! S⁴ sphere of normalized Euclidean spinors, and winding numbers of closed
//! paths around the excluded origin of the (σ, ω) plane.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bilinears::{euclidean_bilinears, BilinearSet};
use crate::error::{Error, Result};
use crate::fierz::fpk_report;

/// A point `(σ, J, K, S, ω)` of bilinear space.
pub type BilinearPoint = BilinearSet;

/// `(σ, J, K, S, ω) ↦ (σ, J, 0, 0, ω)`.
pub fn project_regular(p: &BilinearPoint) -> BilinearPoint {
    BilinearPoint {
        k: [0.0; 4],
        s: [0.0; 6],
        ..*p
    }
}

/// Whether the point satisfies the FPK identities at `tol`.
pub fn fpk_membership(p: &BilinearPoint, tol: f64) -> bool {
    fpk_report(p, tol).all_pass()
}

/// A closed polyline in the (σ, ω) plane; JSON is a list of `[σ, ω]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlanePath(pub Vec<[f64; 2]>);

impl PlanePath {
    /// `n` segments of the circle of `radius` around `center`, closed.
    pub fn circle(center: [f64; 2], radius: f64, n: usize, counterclockwise: bool) -> Self {
        let dir = if counterclockwise { 1.0 } else { -1.0 };
        let mut pts: Vec<[f64; 2]> = (0..n)
            .map(|k| {
                let t = dir * TAU * k as f64 / n as f64;
                [center[0] + radius * t.cos(), center[1] + radius * t.sin()]
            })
            .collect();
        pts.push(pts[0]);
        Self(pts)
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self(self.0.iter().map(|p| [p[0] * c, p[1] * c]).collect())
    }

    /// Join two closed paths through a straight bridge from the end of `self`
    /// to the start of `other` and back.
    pub fn concat(&self, other: &Self) -> Self {
        let mut pts = self.0.clone();
        pts.extend_from_slice(&other.0);
        pts.push(self.0[0]);
        Self(pts)
    }

    fn validate(&self) -> Result<()> {
        let pts = &self.0;
        if pts.len() < 3 {
            return Err(Error::InvalidPath(format!(
                "need at least 3 points, got {}",
                pts.len()
            )));
        }
        if pts.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidPath("non-finite coordinate".into()));
        }
        let (first, last) = (pts[0], pts[pts.len() - 1]);
        let scale = pts.iter().map(|p| p[0].hypot(p[1])).fold(0.0, f64::max);
        if (first[0] - last[0]).hypot(first[1] - last[1]) > 1e-12 * scale {
            return Err(Error::InvalidPath(
                "path is not closed (first != last)".into(),
            ));
        }
        if let Some(i) = pts.iter().position(|p| p[0] == 0.0 && p[1] == 0.0) {
            return Err(Error::InvalidPath(format!("vertex {i} is the origin")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindingReport {
    pub winding: i64,
    /// Sum of the signed angle increments, in radians.
    pub angle_sum: f64,
    /// Distance of `angle_sum / 2π` from the nearest integer.
    pub residue: f64,
}

/// Maximum rounding residue accepted by [`winding_number`].
pub const MAX_RESIDUE: f64 = 0.01;

/// Number of counterclockwise turns of the path around the origin.
pub fn winding_number(path: &PlanePath) -> Result<WindingReport> {
    path.validate()?;
    let mut sum = 0.0;
    for (i, w) in path.0.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        let cross = a[0] * b[1] - a[1] * b[0];
        let dot = a[0] * b[0] + a[1] * b[1];
        let na = a[0].hypot(a[1]);
        let nb = b[0].hypot(b[1]);
        if cross.abs() <= 1e-15 * na * nb && dot < 0.0 {
            return Err(Error::InvalidPath(format!(
                "segment {i} passes through the origin"
            )));
        }
        let step = cross.atan2(dot);
        if step.abs() >= FRAC_PI_2 {
            return Err(Error::CoarsePath(format!(
                "segment {i} turns by {step:.3} rad around the origin (limit π/2)"
            )));
        }
        sum += step;
    }
    let turns = sum / TAU;
    let winding = turns.round();
    let residue = (turns - winding).abs();
    if residue >= MAX_RESIDUE {
        return Err(Error::CoarsePath(format!("rounding residue {residue:e}")));
    }
    Ok(WindingReport {
        winding: winding as i64,
        angle_sum: sum,
        residue,
    })
}

/// Tolerance on σ = 1 in [`regular_sphere_check`].
pub const SPHERE_NORM_TOL: f64 = 1e-8;

/// `|J² + ω² - 1|` for a Euclidean spinor with σ = ψ†ψ = 1.
pub fn regular_sphere_check(psi: &[Complex64; 4]) -> Result<f64> {
    let b = euclidean_bilinears(psi);
    if (b.sigma - 1.0).abs() > SPHERE_NORM_TOL {
        return Err(Error::NotNormalized(b.sigma));
    }
    let j2: f64 = b.j.iter().map(|x| x * x).sum();
    Ok((j2 + b.omega * b.omega - 1.0).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinears::covariants;
    use crate::clifford::Signature;
    use crate::spinor_forms::ClassicalSpinor;
    use crate::DEFAULT_TOL;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Trapezoidal quadrature of (σdω - ωdσ)/(σ² + ω²) along each segment.
    fn quadrature_winding(path: &PlanePath, steps: usize) -> f64 {
        let form =
            |p: [f64; 2], d: [f64; 2]| (p[0] * d[1] - p[1] * d[0]) / (p[0] * p[0] + p[1] * p[1]);
        let mut total = 0.0;
        for w in path.0.windows(2) {
            let d = [w[1][0] - w[0][0], w[1][1] - w[0][1]];
            let at = |t: f64| [w[0][0] + t * d[0], w[0][1] + t * d[1]];
            let h = 1.0 / steps as f64;
            let mut seg = 0.5 * (form(at(0.0), d) + form(at(1.0), d));
            for k in 1..steps {
                seg += form(at(k as f64 * h), d);
            }
            total += seg * h;
        }
        total / TAU
    }

    #[test]
    fn canonical_circles() {
        let unit = PlanePath::circle([0.0, 0.0], 1.0, 64, true);
        assert_eq!(winding_number(&unit).unwrap().winding, 1);
        let off = PlanePath::circle([3.0, 0.0], 1.0, 64, true);
        assert_eq!(winding_number(&off).unwrap().winding, 0);
        let cw = PlanePath::circle([0.0, 0.0], 1.0, 64, false);
        assert_eq!(winding_number(&cw).unwrap().winding, -1);
    }

    #[test]
    fn quadrature_agrees() {
        for path in [
            PlanePath::circle([0.0, 0.0], 1.0, 64, true),
            PlanePath::circle([0.4, -0.2], 2.0, 40, false),
            PlanePath::circle([3.0, 0.0], 1.0, 64, true),
        ] {
            let w = winding_number(&path).unwrap().winding as f64;
            assert!((quadrature_winding(&path, 200) - w).abs() < 1e-6);
        }
    }

    #[test]
    fn orientation_scaling_and_concatenation() {
        let a = PlanePath::circle([0.0, 0.0], 1.0, 64, true);
        let b = PlanePath::circle([0.5, 0.0], 2.0, 96, true);
        let wa = winding_number(&a).unwrap().winding;
        let wb = winding_number(&b).unwrap().winding;
        assert_eq!(winding_number(&a.reversed()).unwrap().winding, -wa);
        assert_eq!(winding_number(&a.scaled(7.5)).unwrap().winding, wa);
        assert_eq!(winding_number(&a.concat(&b)).unwrap().winding, wa + wb);
    }

    #[test]
    fn invalid_paths() {
        let through = PlanePath(vec![[-1.0, 0.0], [1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]]);
        assert!(matches!(
            winding_number(&through),
            Err(Error::InvalidPath(_))
        ));
        let at_origin = PlanePath(vec![[1.0, 0.0], [0.0, 0.0], [0.0, 1.0], [1.0, 0.0]]);
        assert!(matches!(
            winding_number(&at_origin),
            Err(Error::InvalidPath(_))
        ));
        let coarse = PlanePath::circle([0.0, 0.0], 1.0, 3, true);
        assert!(matches!(winding_number(&coarse), Err(Error::CoarsePath(_))));
        let open = PlanePath(vec![[1.0, 0.0], [0.0, 1.0], [-1.0, 0.5]]);
        assert!(matches!(winding_number(&open), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn projection() {
        let psi = ClassicalSpinor::weyl([c(0.3, -1.1), c(0.8, 0.2), c(-0.5, 0.7), c(1.4, -0.6)]);
        let p = covariants(&psi).unwrap();
        let q = project_regular(&p);
        assert_eq!((q.sigma, q.omega, q.j), (p.sigma, p.omega, p.j));
        assert_eq!((q.k, q.s), ([0.0; 4], [0.0; 6]));
        assert_eq!(project_regular(&q), q);
        let r1 = q.dot(&q.j, &q.j) - q.sigma * q.sigma - q.omega * q.omega;
        assert!(r1.abs() < 1e-10 * psi.norm_sqr().powi(2));
    }

    #[test]
    fn membership() {
        let psi = ClassicalSpinor::weyl([c(0.3, -1.1), c(0.8, 0.2), c(-0.5, 0.7), c(1.4, -0.6)]);
        assert!(fpk_membership(&covariants(&psi).unwrap(), DEFAULT_TOL));
        let mut anomalous = BilinearPoint::zero(Signature::Minkowski);
        anomalous.k = [1.0, 0.0, 0.0, 0.0];
        assert!(!fpk_membership(&anomalous, DEFAULT_TOL));
        assert!(fpk_membership(
            &BilinearPoint::zero(Signature::Minkowski),
            DEFAULT_TOL
        ));
    }

    #[test]
    fn sphere() {
        let e0 = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(regular_sphere_check(&e0).unwrap() < 1e-15);
        let psi = ClassicalSpinor::weyl([c(0.3, -1.1), c(0.8, 0.2), c(-0.5, 0.7), c(1.4, -0.6)])
            .normalized()
            .unwrap();
        assert!(regular_sphere_check(&psi.components).unwrap() < 1e-10);
        let two = e0.map(|x| x * 2.0);
        assert_eq!(regular_sphere_check(&two), Err(Error::NotNormalized(4.0)));
    }
}
