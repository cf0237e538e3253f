#![allow(dead_code)]

use rand::Rng;
use rand_distr::StandardNormal;
use spinrep::{ClassicalSpinor, Complex64, Multivector, Rep, Signature};

pub fn normal_c<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_spinor<R: Rng>(rng: &mut R, rep: Rep) -> ClassicalSpinor {
    ClassicalSpinor::new(std::array::from_fn(|_| normal_c(rng)), rep)
}

pub fn random_multivector<R: Rng>(rng: &mut R, sig: Signature) -> Multivector {
    Multivector::from_coeffs(sig, std::array::from_fn(|_| normal_c(rng)))
}

pub fn random_real_multivector<R: Rng>(rng: &mut R, sig: Signature) -> Multivector {
    Multivector::from_real(sig, std::array::from_fn(|_| rng.sample(StandardNormal)))
}
