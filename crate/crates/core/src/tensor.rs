//! Fourth-order elasticity tensors.
//!
//! A tensor is stored as the 21 independent entries of its symmetric 6×6
//! Voigt matrix (upper triangle, row-major). Full components `C_ijkl` are
//! always materialized through the index map
//!
//! ```text
//! ij : 11 22 33 23,32 13,31 12,21
//! α  :  1  2  3   4     5     6
//! ```
//!
//! so the minor symmetries `C_ijkl = C_jikl = C_ijlk` and the major symmetry
//! `C_ijkl = C_klij` hold by construction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];
pub type Mat6 = [[f64; 6]; 6];

/// Relative asymmetry tolerated by [`ElasticityTensor::from_voigt`].
pub const VOIGT_SYMMETRY_TOL: f64 = 1e-9;

const VOIGT_MAP: [[usize; 3]; 3] = [[0, 5, 4], [5, 1, 3], [4, 3, 2]];

/// Zero-based Voigt index of the symmetric index pair `(i, j)`.
#[inline]
pub const fn voigt_index(i: usize, j: usize) -> usize {
    VOIGT_MAP[i][j]
}

#[inline]
const fn packed(a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * (13 - a) / 2 + (b - a)
}

/// `w_a w_b` with `w = 1` on normal and `√2` on shear indices; the
/// shear/shear product is exactly 2.
#[inline]
fn mandel_weight(a: usize, b: usize) -> f64 {
    match (a < 3, b < 3) {
        (true, true) => 1.0,
        (false, false) => 2.0,
        _ => std::f64::consts::SQRT_2,
    }
}

/// Symmetric 6×6 stiffness matrix in Voigt notation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VoigtMatrix(pub Mat6);

/// Symmetric 6×6 matrix whose quadratic form equals the tensor's action on
/// symmetric second-order tensors: normal/shear blocks carry `√2`, the
/// shear/shear block carries `2`, relative to [`VoigtMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MandelMatrix(pub Mat6);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    Isotropic,
    Cubic,
    TransverseIsotropic,
    Tetragonal,
    Orthotropic,
    General,
}

impl ClassTag {
    pub const ALL: [ClassTag; 6] = [
        ClassTag::Isotropic,
        ClassTag::Cubic,
        ClassTag::TransverseIsotropic,
        ClassTag::Tetragonal,
        ClassTag::Orthotropic,
        ClassTag::General,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Isotropic => "isotropic",
            ClassTag::Cubic => "cubic",
            ClassTag::TransverseIsotropic => "transverse_isotropic",
            ClassTag::Tetragonal => "tetragonal",
            ClassTag::Orthotropic => "orthotropic",
            ClassTag::General => "general",
        }
    }

    /// Number of independent parameters for the tag (0 for `General`).
    pub fn param_count(self) -> usize {
        match self {
            ClassTag::Isotropic => 2,
            ClassTag::Cubic => 3,
            ClassTag::TransverseIsotropic => 5,
            ClassTag::Tetragonal => 6,
            ClassTag::Orthotropic => 9,
            ClassTag::General => 0,
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ClassTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ClassTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown symmetry class `{s}`"))
    }
}

/// Isotropic moduli: bulk modulus `K` and shear modulus `G`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isotropic {
    pub bulk: f64,
    pub shear: f64,
}

impl Isotropic {
    pub fn from_lame(lambda: f64, mu: f64) -> Self {
        Isotropic {
            bulk: lambda + 2.0 * mu / 3.0,
            shear: mu,
        }
    }

    /// Lamé's first parameter `λ = K − 2G/3`.
    pub fn lambda(&self) -> f64 {
        self.bulk - 2.0 * self.shear / 3.0
    }

    pub fn mu(&self) -> f64 {
        self.shear
    }
}

/// Cubic moduli `(c11, c66, c12)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cubic {
    pub c11: f64,
    pub c66: f64,
    pub c12: f64,
}

/// Transversely isotropic moduli about the 3-axis; `c12 = c11 − 2 c66`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransverseIsotropic {
    pub c11: f64,
    pub c33: f64,
    pub c44: f64,
    pub c66: f64,
    pub c13: f64,
}

impl TransverseIsotropic {
    pub fn c12(&self) -> f64 {
        self.c11 - 2.0 * self.c66
    }
}

/// Tetragonal moduli (six-constant form).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tetragonal {
    pub c11: f64,
    pub c33: f64,
    pub c44: f64,
    pub c66: f64,
    pub c13: f64,
    pub c12: f64,
}

/// Orthotropic moduli in parameter order `c11 c22 c33 c44 c55 c66 c23 c13 c12`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Orthotropic {
    pub c11: f64,
    pub c22: f64,
    pub c33: f64,
    pub c44: f64,
    pub c55: f64,
    pub c66: f64,
    pub c23: f64,
    pub c13: f64,
    pub c12: f64,
}

impl From<TransverseIsotropic> for Tetragonal {
    fn from(t: TransverseIsotropic) -> Self {
        Tetragonal {
            c11: t.c11,
            c33: t.c33,
            c44: t.c44,
            c66: t.c66,
            c13: t.c13,
            c12: t.c12(),
        }
    }
}

impl From<Tetragonal> for Orthotropic {
    fn from(t: Tetragonal) -> Self {
        Orthotropic {
            c11: t.c11,
            c22: t.c11,
            c33: t.c33,
            c44: t.c44,
            c55: t.c44,
            c66: t.c66,
            c23: t.c13,
            c13: t.c13,
            c12: t.c12,
        }
    }
}

impl From<Cubic> for Orthotropic {
    fn from(c: Cubic) -> Self {
        Orthotropic {
            c11: c.c11,
            c22: c.c11,
            c33: c.c11,
            c44: c.c66,
            c55: c.c66,
            c66: c.c66,
            c23: c.c12,
            c13: c.c12,
            c12: c.c12,
        }
    }
}

impl From<Isotropic> for Cubic {
    fn from(i: Isotropic) -> Self {
        let (lambda, mu) = (i.lambda(), i.mu());
        Cubic {
            c11: lambda + 2.0 * mu,
            c66: mu,
            c12: lambda,
        }
    }
}

impl From<Isotropic> for TransverseIsotropic {
    fn from(i: Isotropic) -> Self {
        let (lambda, mu) = (i.lambda(), i.mu());
        TransverseIsotropic {
            c11: lambda + 2.0 * mu,
            c33: lambda + 2.0 * mu,
            c44: mu,
            c66: mu,
            c13: lambda,
        }
    }
}

/// Material symmetry class with its independent parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymmetryClass {
    Isotropic(Isotropic),
    Cubic(Cubic),
    TransverseIsotropic(TransverseIsotropic),
    Tetragonal(Tetragonal),
    Orthotropic(Orthotropic),
    General,
}

impl SymmetryClass {
    pub fn isotropic(bulk: f64, shear: f64) -> Self {
        SymmetryClass::Isotropic(Isotropic { bulk, shear })
    }

    pub fn cubic(c11: f64, c66: f64, c12: f64) -> Self {
        SymmetryClass::Cubic(Cubic { c11, c66, c12 })
    }

    pub fn transverse(c11: f64, c33: f64, c44: f64, c66: f64, c13: f64) -> Self {
        SymmetryClass::TransverseIsotropic(TransverseIsotropic {
            c11,
            c33,
            c44,
            c66,
            c13,
        })
    }

    pub fn tetragonal(c11: f64, c33: f64, c44: f64, c66: f64, c13: f64, c12: f64) -> Self {
        SymmetryClass::Tetragonal(Tetragonal {
            c11,
            c33,
            c44,
            c66,
            c13,
            c12,
        })
    }

    pub fn orthotropic(p: [f64; 9]) -> Self {
        SymmetryClass::Orthotropic(Orthotropic {
            c11: p[0],
            c22: p[1],
            c33: p[2],
            c44: p[3],
            c55: p[4],
            c66: p[5],
            c23: p[6],
            c13: p[7],
            c12: p[8],
        })
    }

    /// Builds a class from a tag and its parameter list in canonical order.
    pub fn from_params(tag: ClassTag, p: &[f64]) -> Result<Self> {
        if p.len() != tag.param_count() {
            return Err(Error::ParameterCount {
                tag,
                expected: tag.param_count(),
                got: p.len(),
            });
        }
        if p.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("class parameters"));
        }
        Ok(match tag {
            ClassTag::Isotropic => Self::isotropic(p[0], p[1]),
            ClassTag::Cubic => Self::cubic(p[0], p[1], p[2]),
            ClassTag::TransverseIsotropic => Self::transverse(p[0], p[1], p[2], p[3], p[4]),
            ClassTag::Tetragonal => Self::tetragonal(p[0], p[1], p[2], p[3], p[4], p[5]),
            ClassTag::Orthotropic => {
                let mut a = [0.0; 9];
                a.copy_from_slice(p);
                Self::orthotropic(a)
            }
            ClassTag::General => SymmetryClass::General,
        })
    }

    pub fn tag(&self) -> ClassTag {
        match self {
            SymmetryClass::Isotropic(_) => ClassTag::Isotropic,
            SymmetryClass::Cubic(_) => ClassTag::Cubic,
            SymmetryClass::TransverseIsotropic(_) => ClassTag::TransverseIsotropic,
            SymmetryClass::Tetragonal(_) => ClassTag::Tetragonal,
            SymmetryClass::Orthotropic(_) => ClassTag::Orthotropic,
            SymmetryClass::General => ClassTag::General,
        }
    }

    /// Parameters in canonical order (empty for `General`).
    pub fn params(&self) -> Vec<f64> {
        match *self {
            SymmetryClass::Isotropic(i) => vec![i.bulk, i.shear],
            SymmetryClass::Cubic(c) => vec![c.c11, c.c66, c.c12],
            SymmetryClass::TransverseIsotropic(t) => vec![t.c11, t.c33, t.c44, t.c66, t.c13],
            SymmetryClass::Tetragonal(t) => vec![t.c11, t.c33, t.c44, t.c66, t.c13, t.c12],
            SymmetryClass::Orthotropic(o) => vec![
                o.c11, o.c22, o.c33, o.c44, o.c55, o.c66, o.c23, o.c13, o.c12,
            ],
            SymmetryClass::General => Vec::new(),
        }
    }

    /// Largest parameter magnitude, floored at 1.
    pub fn scale(&self) -> f64 {
        self.params().iter().fold(1.0_f64, |m, v| m.max(v.abs()))
    }
}

/// Fourth-order elasticity tensor with major and minor symmetries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticityTensor {
    c: [f64; 21],
}

impl Default for ElasticityTensor {
    fn default() -> Self {
        Self::zero()
    }
}

impl ElasticityTensor {
    pub fn zero() -> Self {
        ElasticityTensor { c: [0.0; 21] }
    }

    /// The 21 stored components, upper-triangle row-major over Voigt indices.
    pub fn components(&self) -> &[f64; 21] {
        &self.c
    }

    /// Voigt entry `c_{αβ}` (zero-based, any order).
    #[inline]
    pub fn voigt(&self, a: usize, b: usize) -> f64 {
        self.c[packed(a, b)]
    }

    /// Sets `c_{αβ}` and, by storage, `c_{βα}`.
    pub fn set_voigt(&mut self, a: usize, b: usize, value: f64) {
        self.c[packed(a, b)] = value;
    }

    /// Full component `C_ijkl` (zero-based indices).
    #[inline]
    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.voigt(voigt_index(i, j), voigt_index(k, l))
    }

    /// Dense `C_ijkl` array for inner loops.
    pub fn full(&self) -> [[[[f64; 3]; 3]; 3]; 3] {
        let mut out = [[[[0.0; 3]; 3]; 3]; 3];
        for (i, oi) in out.iter_mut().enumerate() {
            for (j, oj) in oi.iter_mut().enumerate() {
                for (k, ok) in oj.iter_mut().enumerate() {
                    for (l, v) in ok.iter_mut().enumerate() {
                        *v = self.component(i, j, k, l);
                    }
                }
            }
        }
        out
    }

    /// Largest component magnitude.
    pub fn max_abs(&self) -> f64 {
        self.c.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// `max(1, max |c|)`, the scale used for relative tolerances.
    pub fn scale(&self) -> f64 {
        self.max_abs().max(1.0)
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|v| v.is_finite())
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let mut c = self.c;
        c.iter_mut().for_each(|v| *v *= factor);
        ElasticityTensor { c }
    }

    pub fn to_voigt(&self) -> VoigtMatrix {
        let mut m = [[0.0; 6]; 6];
        for (a, row) in m.iter_mut().enumerate() {
            for (b, v) in row.iter_mut().enumerate() {
                *v = self.voigt(a, b);
            }
        }
        VoigtMatrix(m)
    }

    /// Accepts a Voigt matrix that is symmetric to within
    /// [`VOIGT_SYMMETRY_TOL`]` · max|m|`, averaging the two triangles.
    pub fn from_voigt(m: &VoigtMatrix) -> Result<Self> {
        let m = &m.0;
        if m.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("Voigt matrix"));
        }
        let scale = m.iter().flatten().fold(0.0_f64, |s, v| s.max(v.abs()));
        let tolerance = VOIGT_SYMMETRY_TOL * scale;
        let mut deviation = 0.0_f64;
        let mut t = Self::zero();
        for a in 0..6 {
            for b in a..6 {
                deviation = deviation.max((m[a][b] - m[b][a]).abs());
                t.set_voigt(a, b, 0.5 * (m[a][b] + m[b][a]));
            }
        }
        if deviation > tolerance {
            return Err(Error::Asymmetric {
                deviation,
                tolerance,
            });
        }
        Ok(t)
    }

    pub fn to_mandel(&self) -> MandelMatrix {
        let mut m = [[0.0; 6]; 6];
        for (a, row) in m.iter_mut().enumerate() {
            for (b, v) in row.iter_mut().enumerate() {
                *v = self.voigt(a, b) * mandel_weight(a, b);
            }
        }
        MandelMatrix(m)
    }

    /// Voigt template of a symmetry class.
    pub fn from_class(sc: &SymmetryClass) -> Result<Self> {
        let o: Orthotropic = match *sc {
            SymmetryClass::Isotropic(i) => Cubic::from(i).into(),
            SymmetryClass::Cubic(c) => c.into(),
            SymmetryClass::TransverseIsotropic(t) => Tetragonal::from(t).into(),
            SymmetryClass::Tetragonal(t) => t.into(),
            SymmetryClass::Orthotropic(o) => o,
            SymmetryClass::General => return Err(Error::UnsupportedClass(ClassTag::General)),
        };
        if sc.params().iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("class parameters"));
        }
        // The isotropic template is written from (K, G) directly so that the
        // normal block is exact: c11 = K + 4G/3, c12 = K − 2G/3.
        let (c11, c22, c33, c12, c13, c23) = match *sc {
            SymmetryClass::Isotropic(i) => {
                let d = i.bulk + 4.0 * i.shear / 3.0;
                let off = i.bulk - 2.0 * i.shear / 3.0;
                (d, d, d, off, off, off)
            }
            _ => (o.c11, o.c22, o.c33, o.c12, o.c13, o.c23),
        };
        let mut t = Self::zero();
        t.set_voigt(0, 0, c11);
        t.set_voigt(1, 1, c22);
        t.set_voigt(2, 2, c33);
        t.set_voigt(0, 1, c12);
        t.set_voigt(0, 2, c13);
        t.set_voigt(1, 2, c23);
        t.set_voigt(3, 3, o.c44);
        t.set_voigt(4, 4, o.c55);
        t.set_voigt(5, 5, o.c66);
        Ok(t)
    }

    /// Full four-linear contraction `C_ijkl w_i x_j y_k z_l`.
    pub fn contract4(&self, w: &Vec3, x: &Vec3, y: &Vec3, z: &Vec3) -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let wx = w[i] * x[j];
                if wx == 0.0 {
                    continue;
                }
                for k in 0..3 {
                    for l in 0..3 {
                        s += self.component(i, j, k, l) * wx * y[k] * z[l];
                    }
                }
            }
        }
        s
    }

    /// `f(x, y) = C_ijkl x_i y_j x_k y_l`, the strong-ellipticity form.
    pub fn quad_form(&self, x: &Vec3, y: &Vec3) -> f64 {
        self.contract4(x, y, x, y)
    }

    /// Acoustic-type matrix `A(y)_ik = C_ijkl y_j y_l`, so that the first
    /// M-eigen equation reads `A(y) x = θ x`.
    pub fn a_matrix(&self, y: &Vec3) -> Mat3 {
        let mut a = [[0.0; 3]; 3];
        for i in 0..3 {
            for k in i..3 {
                let mut s = 0.0;
                for j in 0..3 {
                    for l in 0..3 {
                        s += self.component(i, j, k, l) * y[j] * y[l];
                    }
                }
                a[i][k] = s;
                a[k][i] = s;
            }
        }
        a
    }

    /// `B(x)_jl = C_ijkl x_i x_k`, so that the second M-eigen equation reads
    /// `B(x) y = θ y`.
    pub fn b_matrix(&self, x: &Vec3) -> Mat3 {
        let mut b = [[0.0; 3]; 3];
        for j in 0..3 {
            for l in j..3 {
                let mut s = 0.0;
                for i in 0..3 {
                    for k in 0..3 {
                        s += self.component(i, j, k, l) * x[i] * x[k];
                    }
                }
                b[j][l] = s;
                b[l][j] = s;
            }
        }
        b
    }

    /// Tensor in a rotated frame: `C'_ijkl = Q_im Q_jn Q_kp Q_lq C_mnpq`.
    pub fn rotated(&self, q: &Mat3) -> Self {
        let full = self.full();
        let mut out = Self::zero();
        for a in 0..6 {
            let (i, j) = voigt_pair(a);
            for b in a..6 {
                let (k, l) = voigt_pair(b);
                let mut s = 0.0;
                for (m, fm) in full.iter().enumerate() {
                    for (n, fmn) in fm.iter().enumerate() {
                        let qq = q[i][m] * q[j][n];
                        if qq == 0.0 {
                            continue;
                        }
                        for (p, fmnp) in fmn.iter().enumerate() {
                            for (r, v) in fmnp.iter().enumerate() {
                                s += qq * q[k][p] * q[l][r] * v;
                            }
                        }
                    }
                }
                out.set_voigt(a, b, s);
            }
        }
        out
    }

    /// Most specific symmetry class whose Voigt pattern holds to within
    /// `tol · max|c|`, with parameters averaged over equated entries.
    pub fn detect_class(&self, tol: f64) -> SymmetryClass {
        detect_class(self, tol)
    }
}

/// Index pair `(i, j)` with `i ≤ j` for a zero-based Voigt index.
pub const fn voigt_pair(a: usize) -> (usize, usize) {
    match a {
        0 => (0, 0),
        1 => (1, 1),
        2 => (2, 2),
        3 => (1, 2),
        4 => (0, 2),
        _ => (0, 1),
    }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn all_close(v: &[f64], thr: f64) -> bool {
    let m = mean(v);
    v.iter().all(|x| (x - m).abs() <= thr)
}

/// See [`ElasticityTensor::detect_class`].
pub fn detect_class(t: &ElasticityTensor, tol: f64) -> SymmetryClass {
    let thr = tol.abs() * t.max_abs();
    let v = |a: usize, b: usize| t.voigt(a, b);

    // Orthotropic zero pattern: normal/shear coupling and off-diagonal shear.
    for a in 0..6 {
        for b in a + 1..6 {
            let normal_block = a < 3 && b < 3;
            if !normal_block && v(a, b).abs() > thr {
                return SymmetryClass::General;
            }
        }
    }

    let (c11, c22, c33) = (v(0, 0), v(1, 1), v(2, 2));
    let (c44, c55, c66) = (v(3, 3), v(4, 4), v(5, 5));
    let (c23, c13, c12) = (v(1, 2), v(0, 2), v(0, 1));

    let diag_eq = all_close(&[c11, c22, c33], thr);
    let off_eq = all_close(&[c12, c13, c23], thr);
    let shear_eq = all_close(&[c44, c55, c66], thr);

    if diag_eq && off_eq && shear_eq {
        let d = mean(&[c11, c22, c33]);
        let off = mean(&[c12, c13, c23]);
        let g = mean(&[c44, c55, c66]);
        if (d - off - 2.0 * g).abs() <= thr {
            return SymmetryClass::isotropic((d + 2.0 * off) / 3.0, g);
        }
        return SymmetryClass::cubic(d, g, off);
    }

    let plane_eq = all_close(&[c11, c22], thr);
    let c13_eq = all_close(&[c13, c23], thr);
    let c44_eq = all_close(&[c44, c55], thr);
    if plane_eq && c13_eq && c44_eq {
        let a1 = mean(&[c11, c22]);
        let a3 = mean(&[c44, c55]);
        let a5 = mean(&[c13, c23]);
        if (c12 - (a1 - 2.0 * c66)).abs() <= thr {
            return SymmetryClass::transverse(a1, c33, a3, c66, a5);
        }
        return SymmetryClass::tetragonal(a1, c33, a3, c66, a5, c12);
    }

    SymmetryClass::orthotropic([c11, c22, c33, c44, c55, c66, c23, c13, c12])
}

/// Engineering constants of a transversely isotropic material with the
/// 3-axis as symmetry axis.
///
/// `poisson_tp` is `ν31 = ν32`, `poisson_pt` is `ν13 = ν23`; `shear_t` is the
/// transverse shear modulus `μt = c44`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EngineeringConstants {
    pub young_p: f64,
    pub young_t: f64,
    pub poisson_p: f64,
    pub poisson_tp: f64,
    pub poisson_pt: f64,
    pub shear_t: f64,
}

impl EngineeringConstants {
    /// `1 − νp² − 2 νpt νtp − 2 νp νpt νtp`.
    pub fn gamma_denominator(&self) -> f64 {
        let (np, ntp, npt) = (self.poisson_p, self.poisson_tp, self.poisson_pt);
        1.0 - np * np - 2.0 * npt * ntp - 2.0 * np * npt * ntp
    }

    pub fn gamma(&self) -> Result<f64> {
        let den = self.gamma_denominator();
        if !den.is_finite() || den.abs() < 1e-12 {
            return Err(Error::Degenerate(
                "engineering constants: γ denominator vanishes",
            ));
        }
        Ok(1.0 / den)
    }

    /// In-plane shear modulus `μp = Ep / 2(1 + νp)`.
    pub fn shear_p(&self) -> Result<f64> {
        let den = 2.0 * (1.0 + self.poisson_p);
        if den.abs() < 1e-12 {
            return Err(Error::Degenerate("engineering constants: νp = −1"));
        }
        Ok(self.young_p / den)
    }

    pub fn to_transverse(&self) -> Result<SymmetryClass> {
        let g = self.gamma()?;
        let (np, ntp, npt) = (self.poisson_p, self.poisson_tp, self.poisson_pt);
        Ok(SymmetryClass::transverse(
            self.young_p * (1.0 - npt * ntp) * g,
            self.young_t * (1.0 - np * np) * g,
            self.shear_t,
            self.shear_p()?,
            self.young_p * (ntp + np * ntp) * g,
        ))
    }
}

/// See [`EngineeringConstants::to_transverse`].
pub fn engineering_to_transverse(ec: &EngineeringConstants) -> Result<SymmetryClass> {
    ec.to_transverse()
}

/// Rotation matrix of the unit quaternion `q / |q|` (`q = [w, x, y, z]`).
pub fn rotation_from_quaternion(q: [f64; 4]) -> Mat3 {
    let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
    let [w, x, y, z] = q.map(|v| v / n);
    [
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
        ],
        [
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
        ],
        [
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        ],
    ]
}
