use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{from_blocks, Matrix4c};

/// `w + x𝔦 + y𝔧 + z𝔨`, with 𝔦 = e2e3, 𝔧 = e3e1, 𝔨 = e1e2.
///
/// Serialized as `[w, x, y, z]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<[f64; 4]> for Quaternion {
    fn from([w, x, y, z]: [f64; 4]) -> Self {
        Self { w, x, y, z }
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        [q.w, q.x, q.y, q.z]
    }
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Euclidean inner product on ℍ ≅ ℝ⁴, equal to `Re(p* q)`.
    pub fn dot(&self, other: &Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, f: f64) -> Self {
        Self::new(self.w * f, self.x * f, self.y * f, self.z * f)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            self.w - other.w,
            self.x - other.x,
            self.y - other.y,
            self.z - other.z,
        ]
        .iter()
        .fold(0.0, |m, d| f64::max(m, d.abs()))
    }

    /// 2x2 complex image: 𝔦 -> -iσ1, 𝔧 -> iσ2, 𝔨 -> iσ3.
    pub fn to_complex(&self) -> [[Complex64; 2]; 2] {
        let (w, x, y, z) = (self.w, self.x, self.y, self.z);
        [
            [Complex64::new(w, z), Complex64::new(y, -x)],
            [Complex64::new(-y, -x), Complex64::new(w, -z)],
        ]
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.w + r.w, self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.w - r.w, self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

// Hamilton product, ij = k.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: Quaternion) -> Quaternion {
        let (a, b) = (self, r);
        Quaternion::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }
}

/// A 2x2 matrix over ℍ, row-major.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct QuatMatrix2(pub [[Quaternion; 2]; 2]);

impl QuatMatrix2 {
    pub const IDENTITY: QuatMatrix2 = QuatMatrix2([
        [Quaternion::ONE, Quaternion::ZERO],
        [Quaternion::ZERO, Quaternion::ONE],
    ]);

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn entry(&self, r: usize, c: usize) -> Quaternion {
        self.0[r][c]
    }

    pub fn scale(&self, f: f64) -> Self {
        Self(self.0.map(|row| row.map(|q| q.scale(f))))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                m = m.max(self.0[r][c].max_abs_diff(&other.0[r][c]));
            }
        }
        m
    }

    /// Block embedding M(2,ℍ) -> M(4,ℂ) through [`Quaternion::to_complex`].
    pub fn to_complex(&self) -> Matrix4c {
        let q = |r: usize, c: usize| self.0[r][c].to_complex();
        from_blocks(q(0, 0), q(0, 1), q(1, 0), q(1, 1))
    }
}

impl Add for QuatMatrix2 {
    type Output = QuatMatrix2;
    fn add(self, r: QuatMatrix2) -> QuatMatrix2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j] + r.0[i][j];
            }
        }
        out
    }
}

impl Mul for QuatMatrix2 {
    type Output = QuatMatrix2;
    fn mul(self, r: QuatMatrix2) -> QuatMatrix2 {
        let mut out = QuatMatrix2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][0] * r.0[0][j] + self.0[i][1] * r.0[1][j];
            }
        }
        out
    }
}
