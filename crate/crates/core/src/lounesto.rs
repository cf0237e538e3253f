//! Lounesto classification of spinors by their bilinear covariants, plus the
//! J = 0 classes that only arise from bilinear sets.
//!
//! | class | σ | ω | K | S |
//! |-------|---|---|---|---|
//! | C1    | ≠0 | ≠0 | ≠0 | ≠0 |
//! | C2    | ≠0 | 0  | ≠0 | ≠0 |
//! | C3    | 0  | ≠0 | ≠0 | ≠0 |
//! | C4    | 0  | 0  | ≠0 | ≠0 |
//! | C5    | 0  | 0  | 0  | ≠0 |
//! | C6    | 0  | 0  | ≠0 | 0  |
//!
//! J ≠ 0 in every row. With J = 0 (and σ = ω = 0) the point is a pole
//! (only K), a flag (only S) or a flag-pole (both).

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::bilinears::{covariants, BilinearSet};
use crate::classmap::{build_M, map_to_class4, MappingParams};
use crate::clifford::Signature;
use crate::error::{Error, Result};
use crate::fierz::fpk_report;
use crate::spinor_forms::ClassicalSpinor;
use crate::DEFAULT_TOL;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LounestoClass {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    Pole,
    Flag,
    FlagPoleJ0,
    Anomalous,
}

impl LounestoClass {
    pub const TABLE: [LounestoClass; 6] = [
        LounestoClass::C1,
        LounestoClass::C2,
        LounestoClass::C3,
        LounestoClass::C4,
        LounestoClass::C5,
        LounestoClass::C6,
    ];

    /// Classes 1-3 (σ ≠ 0 or ω ≠ 0).
    pub fn is_regular(self) -> bool {
        matches!(self, Self::C1 | Self::C2 | Self::C3)
    }

    pub fn is_singular(self) -> bool {
        matches!(self, Self::C4 | Self::C5 | Self::C6)
    }
}

impl fmt::Display for LounestoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for LounestoClass {
    type Err = Error;

    /// Accepts `C1`..`C6`, bare digits `1`..`6` and the J = 0 class names.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t.strip_prefix(['C', 'c']).unwrap_or(t);
        if let Ok(n) = digits.parse::<usize>() {
            if (1..=6).contains(&n) {
                return Ok(Self::TABLE[n - 1]);
            }
        }
        match t {
            "Pole" => Ok(Self::Pole),
            "Flag" => Ok(Self::Flag),
            "FlagPoleJ0" => Ok(Self::FlagPoleJ0),
            "Anomalous" => Ok(Self::Anomalous),
            _ => Err(Error::InvalidArgument(format!("unknown class {s:?}"))),
        }
    }
}

/// Which covariants fell below the zero threshold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroFlags {
    pub sigma: bool,
    pub omega: bool,
    #[serde(rename = "J")]
    pub j: bool,
    #[serde(rename = "K")]
    pub k: bool,
    #[serde(rename = "S")]
    pub s: bool,
}

impl ZeroFlags {
    fn from_norms(norms: [f64; 5], threshold: f64) -> Self {
        let z = norms.map(|n| n < threshold);
        Self {
            sigma: z[0],
            omega: z[1],
            j: z[2],
            k: z[3],
            s: z[4],
        }
    }

    fn as_array(&self) -> [bool; 5] {
        [self.sigma, self.omega, self.j, self.k, self.s]
    }
}

/// Class assignment for a zero pattern; `None` when no row matches.
fn class_of(f: &ZeroFlags) -> Option<LounestoClass> {
    use LounestoClass::*;
    if f.j {
        if !(f.sigma && f.omega) {
            return None;
        }
        return match (f.k, f.s) {
            (false, true) => Some(Pole),
            (true, false) => Some(Flag),
            (false, false) => Some(FlagPoleJ0),
            (true, true) => None,
        };
    }
    match (f.sigma, f.omega, f.k, f.s) {
        (false, false, false, false) => Some(C1),
        (false, true, false, false) => Some(C2),
        (true, false, false, false) => Some(C3),
        (true, true, false, false) => Some(C4),
        (true, true, true, false) => Some(C5),
        (true, true, false, true) => Some(C6),
        _ => None,
    }
}

/// JSON: `{class, sigma, omega, J, K, S, zero_flags, tol, margin}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub class: LounestoClass,
    pub sigma: f64,
    pub omega: f64,
    #[serde(rename = "J")]
    pub j: [f64; 4],
    #[serde(rename = "K")]
    pub k: [f64; 4],
    #[serde(rename = "S")]
    pub s: [f64; 6],
    pub zero_flags: ZeroFlags,
    pub tol: f64,
    /// Smallest ratio of a nonzero covariant's norm to the zero threshold.
    pub margin: Option<f64>,
}

impl ClassificationReport {
    fn new(
        class: LounestoClass,
        b: &BilinearSet,
        flags: ZeroFlags,
        tol: f64,
        threshold: f64,
    ) -> Self {
        let margin = b
            .norms()
            .iter()
            .zip(flags.as_array())
            .filter(|(_, zero)| !zero)
            .map(|(n, _)| n / threshold)
            .reduce(f64::min);
        Self {
            class,
            sigma: b.sigma,
            omega: b.omega,
            j: b.j,
            k: b.k,
            s: b.s,
            zero_flags: flags,
            tol,
            margin,
        }
    }

    pub fn bilinears(&self) -> BilinearSet {
        BilinearSet {
            sigma: self.sigma,
            omega: self.omega,
            j: self.j,
            k: self.k,
            s: self.s,
            signature: Signature::Minkowski,
        }
    }
}

/// Classify a nonzero spinor. A covariant counts as zero when its Euclidean
/// norm is below `tol·‖ψ‖²`.
pub fn classify(psi: &ClassicalSpinor, tol: f64) -> Result<ClassificationReport> {
    if psi.is_zero() {
        return Err(Error::ZeroSpinor);
    }
    let b = covariants(psi)?;
    let threshold = tol * psi.norm_sqr();
    let flags = ZeroFlags::from_norms(b.norms(), threshold);
    let class = class_of(&flags).unwrap_or(LounestoClass::Anomalous);
    Ok(ClassificationReport::new(class, &b, flags, tol, threshold))
}

/// Classify a bare bilinear set. Sets failing the FPK identities are
/// anomalous; otherwise thresholds are relative to the set's magnitude.
pub fn classify_bilinears(b: &BilinearSet, tol: f64) -> LounestoClass {
    classify_bilinears_report(b, tol).class
}

pub fn classify_bilinears_report(b: &BilinearSet, tol: f64) -> ClassificationReport {
    let threshold = tol * b.magnitude();
    let flags = if threshold > 0.0 {
        ZeroFlags::from_norms(b.norms(), threshold)
    } else {
        ZeroFlags::from_norms([0.0; 5], 1.0)
    };
    let class = if fpk_report(b, tol).all_pass() {
        class_of(&flags).unwrap_or(LounestoClass::Anomalous)
    } else {
        LounestoClass::Anomalous
    };
    ClassificationReport::new(class, b, flags, tol, threshold)
}

/// Generated spinors keep every nonzero covariant at least this many times
/// above the default zero threshold.
const MIN_MARGIN: f64 = 1e4;
const MAX_ATTEMPTS: usize = 10_000;

fn normal_c<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn random_pair<R: Rng>(rng: &mut R) -> [Complex64; 2] {
    [normal_c(rng), normal_c(rng)]
}

fn weyl_spinor(u: [Complex64; 2], v: [Complex64; 2]) -> ClassicalSpinor {
    ClassicalSpinor::weyl([u[0], u[1], v[0], v[1]])
}

/// `u†v`
fn overlap(u: &[Complex64; 2], v: &[Complex64; 2]) -> Complex64 {
    u[0].conj() * v[0] + u[1].conj() * v[1]
}

fn candidate<R: Rng>(class: LounestoClass, rng: &mut R) -> Result<ClassicalSpinor> {
    use LounestoClass::*;
    let u = random_pair(rng);
    let v = random_pair(rng);
    // In the Weyl representation σ = 2Re(u†v) and ω = ±2Im(u†v).
    let rotate = |v: [Complex64; 2], phase: Complex64| v.map(|c| c * phase);
    Ok(match class {
        C1 => weyl_spinor(u, v),
        C2 => {
            let o = overlap(&u, &v);
            weyl_spinor(u, rotate(v, o.conj() / o.norm()))
        }
        C3 => {
            let o = overlap(&u, &v);
            weyl_spinor(u, rotate(v, o.conj() / o.norm() * Complex64::new(0.0, 1.0)))
        }
        C4 => {
            let m = build_M(&MappingParams::random(rng))?;
            let phi = weyl_spinor(u, v);
            match map_to_class4(&m, &phi, DEFAULT_TOL) {
                Ok(img) => img.spinor,
                Err(Error::NotRegular(_)) | Err(Error::InKernel) => phi,
                Err(e) => return Err(e),
            }
        }
        C5 => {
            // (u, e^{iφ} iσ2 u*)
            let phase = Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
            weyl_spinor(u, [u[1].conj() * phase, -u[0].conj() * phase])
        }
        C6 => {
            if rng.random_bool(0.5) {
                weyl_spinor(u, [Complex64::new(0.0, 0.0); 2])
            } else {
                weyl_spinor([Complex64::new(0.0, 0.0); 2], v)
            }
        }
        other => return Err(Error::NotGeneratable(other.to_string())),
    })
}

/// `count` spinors of the requested class (Weyl representation),
/// deterministic in `seed`. Each one classifies into `class` at the default
/// tolerance with a comfortable margin.
pub fn generate(class: LounestoClass, seed: u64, count: usize) -> Result<Vec<ClassicalSpinor>> {
    if !(class.is_regular() || class.is_singular()) {
        return Err(Error::NotGeneratable(class.to_string()));
    }
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > MAX_ATTEMPTS * count {
            return Err(Error::NotGeneratable(format!(
                "{class}: no acceptable sample after {attempts} attempts"
            )));
        }
        let psi = candidate(class, &mut rng)?;
        if psi.is_zero() {
            continue;
        }
        let report = classify(&psi, DEFAULT_TOL)?;
        if report.class == class && report.margin.is_some_and(|m| m >= MIN_MARGIN) {
            out.push(psi);
        }
    }
    Ok(out)
}

/// Whether `cψ` lands in the same class as `ψ` at the default tolerance.
pub fn rescale_class_invariance(psi: &ClassicalSpinor, c: Complex64) -> Result<bool> {
    if c.norm() == 0.0 {
        return Err(Error::InvalidArgument(
            "scale factor must be nonzero".into(),
        ));
    }
    let before = classify(psi, DEFAULT_TOL)?.class;
    let after = classify(&psi.scale(c), DEFAULT_TOL)?.class;
    Ok(before == after)
}
