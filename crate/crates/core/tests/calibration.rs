//! The S normalization is the only one for which both the aggregate identity
//! `Z = 4ψψ̄` and the wedge identity hold.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinrep::bilinears::bilinear_covariants;
use spinrep::clifford::{matrix_max_norm, rep_matrix};
use spinrep::fierz::{aggregate, fpk_residuals};
use spinrep::{GammaRep, Rep, S_NORMALIZATION};

fn identities_hold(c_s: f64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    (0..20).all(|k| {
        let rep = if k % 2 == 0 { Rep::Weyl } else { Rep::Dirac };
        let psi = common::random_spinor(&mut rng, rep);
        let b = bilinear_covariants(&psi, c_s).unwrap();
        let scale = psi.norm_sqr().powi(2);
        let v = psi.column();
        let outer =
            v * (v.adjoint() * GammaRep::get(rep).gamma(0)) * spinrep::Complex64::new(4.0, 0.0);
        let z = rep_matrix(&aggregate(&b), rep).unwrap();
        matrix_max_norm(&(z - outer)) < 1e-10 * scale.sqrt() && fpk_residuals(&b).r4 < 1e-10 * scale
    })
}

#[test]
fn only_the_frozen_normalization_passes() {
    let candidates = [-1.0, -0.5, 0.25, 0.5, 1.0, 2.0];
    let passing: Vec<f64> = candidates
        .into_iter()
        .filter(|&c| identities_hold(c))
        .collect();
    assert_eq!(passing, vec![S_NORMALIZATION]);
}
