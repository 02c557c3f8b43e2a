//! Closed-form M- and Z-eigenvalues for the isotropic, cubic, transversely
//! isotropic, tetragonal and orthotropic classes.
//!
//! Every value carries a representative eigenvector pair when one exists
//! with real components. Values whose pair would need complex components are
//! kept in the list but flagged `realizable = false`: they solve the
//! reduced polynomial system, not the eigenproblem on real unit vectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{
    ClassTag, Cubic, Isotropic, Mat3, Orthotropic, SymmetryClass, Tetragonal, TransverseIsotropic,
    Vec3,
};

/// Relative size below which a formula denominator counts as zero.
pub const DEGENERATE_TOL: f64 = 1e-12;

/// Squared eigenvector components in `[-RADICAND_TOL, 0)` are clamped to 0.
pub const RADICAND_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledEigenvalue {
    pub label: String,
    /// `None` when the formula's denominator vanished.
    pub value: Option<f64>,
    pub degenerate: bool,
    /// A real unit eigenvector pair exists for this value.
    pub realizable: bool,
    pub x: Option<Vec3>,
    pub y: Option<Vec3>,
    /// For Z-eigenvalues: label of the M-eigenvalue it equals.
    pub coincides_with: Option<String>,
}

impl LabeledEigenvalue {
    fn exact(label: String, value: f64, x: Vec3, y: Vec3) -> Self {
        LabeledEigenvalue {
            label,
            value: Some(value),
            degenerate: false,
            realizable: true,
            x: Some(x),
            y: Some(y),
            coincides_with: None,
        }
    }

    fn degenerate(label: String) -> Self {
        LabeledEigenvalue {
            label,
            value: None,
            degenerate: true,
            realizable: false,
            x: None,
            y: None,
            coincides_with: None,
        }
    }

    fn rational(label: String, value: f64, pair: Option<(Vec3, Vec3)>) -> Self {
        LabeledEigenvalue {
            label,
            value: Some(value),
            degenerate: false,
            realizable: pair.is_some(),
            x: pair.map(|p| p.0),
            y: pair.map(|p| p.1),
            coincides_with: None,
        }
    }

    /// Value if non-degenerate and realizable.
    pub fn realized(&self) -> Option<f64> {
        self.value.filter(|_| self.realizable && !self.degenerate)
    }
}

fn is_degenerate(den: f64, scale: f64, degree: i32) -> bool {
    !den.is_finite() || den.abs() < DEGENERATE_TOL * scale.powi(degree)
}

/// Square roots of squared components, or `None` if any is negative.
fn roots<const N: usize>(sq: [f64; N]) -> Option<[f64; N]> {
    if sq.iter().any(|v| !v.is_finite() || *v < -RADICAND_TOL) {
        return None;
    }
    Some(sq.map(|v| v.max(0.0).sqrt()))
}

fn e(i: usize) -> Vec3 {
    let mut v = [0.0; 3];
    v[i] = 1.0;
    v
}

fn combine(a: f64, u: &Vec3, b: f64, v: &Vec3) -> Vec3 {
    let w: Vec3 = std::array::from_fn(|i| a * u[i] + b * v[i]);
    let n = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
    w.map(|c| c / n)
}

/// Stationary value in the plane spanned by orthonormal `u`, `v` with
/// `x = a u + b v`, `y = a u − b v`; `cuu`, `cvv`, `cuv` are the rotated
/// Voigt entries for that plane.
fn opposed(
    label: String,
    cuu: f64,
    cvv: f64,
    cuv: f64,
    u: Vec3,
    v: Vec3,
    s: f64,
) -> LabeledEigenvalue {
    let (p, q) = (cuu + cuv, cvv + cuv);
    let den = p + q;
    if is_degenerate(den, s, 1) {
        return LabeledEigenvalue::degenerate(label);
    }
    // (cuu·cvv − cuv²)/den, regrouped to avoid cancellation.
    let theta = p * q / den - cuv;
    let pair =
        roots([q / den, p / den]).map(|[a, b]| (combine(a, &u, b, &v), combine(a, &u, -b, &v)));
    LabeledEigenvalue::rational(label, theta, pair)
}

/// Stationary value in the plane of `u`, `v` with `x = y = a u + b v`;
/// `g = cuv + 2 · shear`.
fn aligned(
    label: String,
    cuu: f64,
    cvv: f64,
    g: f64,
    u: Vec3,
    v: Vec3,
    s: f64,
) -> LabeledEigenvalue {
    let (p, q) = (cuu - g, cvv - g);
    let den = p + q;
    if is_degenerate(den, s, 1) {
        return LabeledEigenvalue::degenerate(label);
    }
    // (cuu·cvv − g²)/den, regrouped to avoid cancellation.
    let theta = p * q / den + g;
    let pair = roots([q / den, p / den]).map(|[a, b]| {
        let x = combine(a, &u, b, &v);
        (x, x)
    });
    LabeledEigenvalue::rational(label, theta, pair)
}

fn lbl(tag: &str, kind: &str, i: usize) -> String {
    format!("{tag}.{kind}{i}")
}

const DIAG12: Vec3 = [
    std::f64::consts::FRAC_1_SQRT_2,
    std::f64::consts::FRAC_1_SQRT_2,
    0.0,
];
const ANTI12: Vec3 = [
    std::f64::consts::FRAC_1_SQRT_2,
    -std::f64::consts::FRAC_1_SQRT_2,
    0.0,
];

fn isotropic_m(i: &Isotropic) -> Vec<LabeledEigenvalue> {
    let t = "isotropic";
    vec![
        LabeledEigenvalue::exact(lbl(t, "θ", 1), i.shear, e(0), e(1)),
        LabeledEigenvalue::exact(
            lbl(t, "θ", 2),
            (3.0 * i.bulk + 4.0 * i.shear) / 3.0,
            e(0),
            e(0),
        ),
    ]
}

fn cubic_m(c: &Cubic, s: f64) -> Vec<LabeledEigenvalue> {
    let t = "cubic";
    let (b1, b2, b3) = (c.c11, c.c66, c.c12);
    let r2 = std::f64::consts::FRAC_1_SQRT_2;
    let r3 = 1.0 / 3.0_f64.sqrt();
    let mut out = vec![
        LabeledEigenvalue::exact(lbl(t, "θ", 1), b1, e(0), e(0)),
        LabeledEigenvalue::exact(lbl(t, "θ", 2), b2, e(0), e(1)),
        LabeledEigenvalue::exact(
            lbl(t, "θ", 3),
            0.5 * (b1 - b3),
            [0.0, r2, r2],
            [0.0, r2, -r2],
        ),
        LabeledEigenvalue::exact(lbl(t, "θ", 4), 0.5 * (b1 + 2.0 * b2 + b3), DIAG12, DIAG12),
        LabeledEigenvalue::exact(
            lbl(t, "θ", 5),
            (b1 + 4.0 * b2 + 2.0 * b3) / 3.0,
            [r3; 3],
            [r3; 3],
        ),
    ];
    let q = 3.0 * b1 + 2.0 * b2 + 5.0 * b3;
    out.push(if is_degenerate(q, s, 1) {
        LabeledEigenvalue::degenerate(lbl(t, "θ", 6))
    } else {
        let theta = (b1 * b1 + 2.0 * b1 * b2 + b1 * b3 - 2.0 * b3 * b3) / q;
        let pair = roots([(b1 + b3) / q, (b1 + 2.0 * b2 + 3.0 * b3) / q]).map(|[a, c]| {
            let x = combine(a, &[1.0, 1.0, 0.0], c, &e(2));
            let y = combine(a, &[1.0, 1.0, 0.0], -c, &e(2));
            (x, y)
        });
        LabeledEigenvalue::rational(lbl(t, "θ", 6), theta, pair)
    });
    out
}

fn transverse_m(p: &TransverseIsotropic, s: f64) -> Vec<LabeledEigenvalue> {
    let t = "transverse_isotropic";
    vec![
        LabeledEigenvalue::exact(lbl(t, "θ", 1), p.c11, e(0), e(0)),
        LabeledEigenvalue::exact(lbl(t, "θ", 2), p.c33, e(2), e(2)),
        LabeledEigenvalue::exact(lbl(t, "θ", 3), p.c44, e(0), e(2)),
        LabeledEigenvalue::exact(lbl(t, "θ", 4), p.c66, e(0), e(1)),
        opposed(lbl(t, "θ", 5), p.c11, p.c33, p.c13, e(0), e(2), s),
        aligned(
            lbl(t, "θ", 6),
            p.c11,
            p.c33,
            p.c13 + 2.0 * p.c44,
            e(0),
            e(2),
            s,
        ),
    ]
}

/// `½(c11 + 2c66 + c12)`: the in-plane longitudinal modulus along (1,1,0).
fn tetragonal_diag(p: &Tetragonal) -> f64 {
    0.5 * (p.c12 + 2.0 * p.c66 + p.c11)
}

fn tetragonal_m(p: &Tetragonal, s: f64) -> Vec<LabeledEigenvalue> {
    let t = "tetragonal";
    let d = tetragonal_diag(p);
    let g = p.c13 + 2.0 * p.c44;
    vec![
        LabeledEigenvalue::exact(lbl(t, "θ", 1), p.c11, e(0), e(0)),
        LabeledEigenvalue::exact(lbl(t, "θ", 2), p.c33, e(2), e(2)),
        LabeledEigenvalue::exact(lbl(t, "θ", 3), p.c44, e(0), e(2)),
        LabeledEigenvalue::exact(lbl(t, "θ", 4), p.c66, e(0), e(1)),
        opposed(lbl(t, "θ", 5), p.c11, p.c33, p.c13, e(0), e(2), s),
        aligned(lbl(t, "θ", 6), p.c11, p.c33, g, e(0), e(2), s),
        LabeledEigenvalue::exact(lbl(t, "θ", 7), d, DIAG12, DIAG12),
        LabeledEigenvalue::exact(lbl(t, "θ", 8), 0.5 * (p.c11 - p.c12), DIAG12, ANTI12),
        opposed(lbl(t, "θ", 9), d, p.c33, p.c13, DIAG12, e(2), s),
        aligned(lbl(t, "θ", 10), d, p.c33, g, DIAG12, e(2), s),
    ]
}

/// Numerator and denominator of the thirteenth orthotropic value, expanded
/// as polynomials in the nine constants.
pub fn orthotropic_theta13_polynomial(o: &Orthotropic) -> (f64, f64) {
    let [d1, d2, d3, d4, d5, d6, d7, d8, d9] = ortho_params(o);
    let num = 4.0 * d1 * d4 * d4
        + 4.0 * d2 * d5 * d5
        + 4.0 * d3 * d6 * d6
        + d1 * d7 * d7
        + d2 * d8 * d8
        + d3 * d9 * d9
        - d1 * d2 * d3
        - 16.0 * d4 * d5 * d6
        - 8.0 * d5 * d6 * d7
        - 4.0 * d6 * d7 * d8
        - 2.0 * d7 * d8 * d9
        + 4.0 * d1 * d4 * d7
        + 4.0 * d2 * d5 * d8
        + 4.0 * d3 * d6 * d9
        - 8.0 * d4 * d6 * d8
        - 8.0 * d4 * d5 * d9
        - 4.0 * d5 * d7 * d9
        - 4.0 * d4 * d8 * d9;
    let den = 4.0 * d4 * d4 + 4.0 * d5 * d5 + 4.0 * d6 * d6 + d7 * d7 + d8 * d8 + d9 * d9
        - d1 * d2
        - d1 * d3
        - d2 * d3
        - 8.0 * d4 * d5
        - 8.0 * d4 * d6
        - 8.0 * d5 * d6
        - 2.0 * d7 * d8
        - 2.0 * d7 * d9
        - 2.0 * d8 * d9
        + 4.0 * d1 * d4
        + 4.0 * d2 * d5
        + 4.0 * d3 * d6
        + 2.0 * d1 * d7
        + 2.0 * d2 * d8
        + 2.0 * d3 * d9
        + 4.0 * d4 * d7
        - 4.0 * d4 * d8
        - 4.0 * d4 * d9
        - 4.0 * d5 * d7
        + 4.0 * d5 * d8
        - 4.0 * d5 * d9
        - 4.0 * d6 * d7
        - 4.0 * d6 * d8
        + 4.0 * d6 * d9;
    (num, den)
}

/// The same numerator and denominator regrouped around `c12 + 2c66`.
pub fn orthotropic_theta13_factored(o: &Orthotropic) -> (f64, f64) {
    let [d1, d2, d3, d4, d5, d6, d7, d8, d9] = ortho_params(o);
    let h = d9 + 2.0 * d6;
    let g23 = d7 + 2.0 * d4;
    let g13 = d8 + 2.0 * d5;
    let cross = d7 - d8 + 2.0 * d4 - 2.0 * d5;
    let num = 0.5 * ((h + d2) * d3 - 2.0 * g23 * g23) * (h - d1)
        + 0.5 * ((h + d1) * d3 - 2.0 * g13 * g13) * (h - d2)
        + cross * cross * h;
    let den = 0.5 * (h + d2 + 2.0 * d3 - 4.0 * g23) * (h - d1)
        + 0.5 * (h + d1 + 2.0 * d3 - 4.0 * g13) * (h - d2)
        + cross * cross;
    (num, den)
}

fn ortho_params(o: &Orthotropic) -> [f64; 9] {
    [
        o.c11, o.c22, o.c33, o.c44, o.c55, o.c66, o.c23, o.c13, o.c12,
    ]
}

/// Symmetric matrix `G` of the aligned (`x = y`) reduced system:
/// diagonal `cii`, off-diagonal `cij + 2 c_shear(ij)`.
pub fn orthotropic_coupling(o: &Orthotropic) -> Mat3 {
    let g12 = o.c12 + 2.0 * o.c66;
    let g13 = o.c13 + 2.0 * o.c55;
    let g23 = o.c23 + 2.0 * o.c44;
    [[o.c11, g12, g13], [g12, o.c22, g23], [g13, g23, o.c33]]
}

fn adjugate(g: &Mat3) -> Mat3 {
    let mut a = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            a[i][j] = g[r0][c0] * g[r1][c1] - g[r0][c1] * g[r1][c0];
        }
    }
    a
}

fn orthotropic_m(o: &Orthotropic, s: f64) -> Vec<LabeledEigenvalue> {
    let t = "orthotropic";
    let mut out = vec![
        LabeledEigenvalue::exact(lbl(t, "θ", 1), o.c11, e(0), e(0)),
        LabeledEigenvalue::exact(lbl(t, "θ", 2), o.c22, e(1), e(1)),
        LabeledEigenvalue::exact(lbl(t, "θ", 3), o.c33, e(2), e(2)),
        LabeledEigenvalue::exact(lbl(t, "θ", 4), o.c44, e(1), e(2)),
        LabeledEigenvalue::exact(lbl(t, "θ", 5), o.c55, e(0), e(2)),
        LabeledEigenvalue::exact(lbl(t, "θ", 6), o.c66, e(0), e(1)),
        opposed(lbl(t, "θ", 7), o.c22, o.c33, o.c23, e(1), e(2), s),
        opposed(lbl(t, "θ", 8), o.c11, o.c33, o.c13, e(0), e(2), s),
        opposed(lbl(t, "θ", 9), o.c11, o.c22, o.c12, e(0), e(1), s),
        aligned(
            lbl(t, "θ", 10),
            o.c22,
            o.c33,
            o.c23 + 2.0 * o.c44,
            e(1),
            e(2),
            s,
        ),
        aligned(
            lbl(t, "θ", 11),
            o.c11,
            o.c33,
            o.c13 + 2.0 * o.c55,
            e(0),
            e(2),
            s,
        ),
        aligned(
            lbl(t, "θ", 12),
            o.c11,
            o.c22,
            o.c12 + 2.0 * o.c66,
            e(0),
            e(1),
            s,
        ),
    ];
    let (num, den) = orthotropic_theta13_factored(o);
    out.push(if is_degenerate(den, s, 2) {
        LabeledEigenvalue::degenerate(lbl(t, "θ", 13))
    } else {
        // x_i² ∝ (G⁻¹ 1)_i, normalized to unit sum; written with the
        // adjugate so a singular G needs no special case.
        let adj = adjugate(&orthotropic_coupling(o));
        let w: Vec3 = std::array::from_fn(|i| adj[i].iter().sum());
        let total: f64 = w.iter().sum();
        let pair = if is_degenerate(total, s, 2) {
            None
        } else {
            roots(w.map(|v| v / total)).map(|x| (x, x))
        };
        LabeledEigenvalue::rational(lbl(t, "θ", 13), num / den, pair)
    });
    out
}

/// Closed-form M-eigenvalues for a symmetry class, in label order.
/// Duplicates are kept.
pub fn m_eigenvalues(sc: &SymmetryClass) -> Result<Vec<LabeledEigenvalue>> {
    let s = sc.scale();
    Ok(match sc {
        SymmetryClass::Isotropic(i) => isotropic_m(i),
        SymmetryClass::Cubic(c) => cubic_m(c, s),
        SymmetryClass::TransverseIsotropic(t) => transverse_m(t, s),
        SymmetryClass::Tetragonal(t) => tetragonal_m(t, s),
        SymmetryClass::Orthotropic(o) => orthotropic_m(o, s),
        SymmetryClass::General => return Err(Error::UnsupportedClass(ClassTag::General)),
    })
}

/// Closed-form Z-eigenvalues. Each entry repeats the value, flags and
/// eigenvector of the M-eigenvalue named in `coincides_with`.
pub fn z_eigenvalues(sc: &SymmetryClass) -> Result<Vec<LabeledEigenvalue>> {
    let m = m_eigenvalues(sc)?;
    let picks: &[usize] = match sc.tag() {
        ClassTag::Isotropic => &[2],
        ClassTag::Cubic => &[1, 4, 5],
        ClassTag::TransverseIsotropic => &[1, 2, 6],
        ClassTag::Tetragonal => &[7, 2, 6, 10],
        ClassTag::Orthotropic => &[1, 2, 3, 10, 11, 12, 13],
        ClassTag::General => unreachable!(),
    };
    Ok(picks
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let src = &m[i - 1];
            LabeledEigenvalue {
                label: lbl(sc.tag().as_str(), "η", k + 1),
                coincides_with: Some(src.label.clone()),
                ..src.clone()
            }
        })
        .collect())
}

/// One `(x, y, θ)` row of the transversely isotropic eigenpair table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub x: Vec3,
    pub y: Vec3,
    pub label: String,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransverseEigenvectorTable {
    pub zeta: Option<f64>,
    pub phi: Option<f64>,
    pub eta: Option<f64>,
    pub psi: Option<f64>,
    /// `diag(1, 0, −1)`
    pub lambda: Mat3,
    /// `diag(0, 1, −1)`
    pub d: Mat3,
    /// Cyclic permutation `e1 → e3 → e2 → e1`.
    pub p: Mat3,
    pub rows: Vec<TableRow>,
    /// Row families left out because their constants are undefined.
    pub omitted: Vec<String>,
}

fn sqrt_ratio(num: f64, den: f64, s: f64) -> Option<f64> {
    if is_degenerate(den, s, 1) {
        return None;
    }
    roots([num / den]).map(|[r]| r)
}

fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    std::array::from_fn(|i| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2])
}

/// Eigenpair table of a transversely isotropic tensor: axis pairs, the
/// opposed pairs `(x, ±Λx)` and `(x, ±Dx)`, and the aligned pairs `(x, ±x)`,
/// with every sign choice of the components of `x`.
pub fn transverse_eigenpairs(sc: &SymmetryClass) -> Result<TransverseEigenvectorTable> {
    let p = match sc {
        SymmetryClass::TransverseIsotropic(p) => *p,
        other => {
            return Err(Error::WrongClass {
                expected: ClassTag::TransverseIsotropic,
                got: other.tag(),
            })
        }
    };
    let s = sc.scale();
    let (a1, a2, a3, a4, a5) = (p.c11, p.c33, p.c44, p.c66, p.c13);
    let g = 2.0 * a3 + a5;
    let zeta = sqrt_ratio(g - a1, 2.0 * g - a1 - a2, s);
    let eta = sqrt_ratio(g - a2, 2.0 * g - a1 - a2, s);
    let opp = a1 + a2 + 2.0 * a5;
    let phi = sqrt_ratio(a1 + a5, opp, s);
    let psi = sqrt_ratio(a2 + a5, opp, s);

    let lambda = [[1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, -1.0]];
    let d = [[0.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]];
    let perm = [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]];
    let perm2 = [[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]];
    let ident = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

    let tag = "transverse_isotropic";
    let mut rows = Vec::new();
    let mut omitted = Vec::new();

    let mut push_family = |x: Vec3, map: &Mat3, label: String, theta: f64| {
        let mut xs = vec![x];
        for i in 0..3 {
            if x[i] != 0.0 {
                let flipped: Vec<Vec3> = xs
                    .iter()
                    .map(|v| {
                        let mut w = *v;
                        w[i] = -w[i];
                        w
                    })
                    .collect();
                xs.extend(flipped);
            }
        }
        for x in xs {
            let y = mat_vec(map, &x);
            for sign in [1.0, -1.0] {
                rows.push(TableRow {
                    x,
                    y: y.map(|c| sign * c),
                    label: label.clone(),
                    theta,
                });
            }
        }
    };

    push_family(e(0), &ident, lbl(tag, "θ", 1), a1);
    push_family(e(1), &ident, lbl(tag, "θ", 1), a1);
    push_family(e(2), &ident, lbl(tag, "θ", 2), a2);
    push_family(e(2), &perm, lbl(tag, "θ", 3), a3);
    push_family(e(0), &perm, lbl(tag, "θ", 3), a3);
    push_family(e(2), &perm2, lbl(tag, "θ", 3), a3);
    push_family(e(1), &perm2, lbl(tag, "θ", 3), a3);
    push_family(e(1), &perm, lbl(tag, "θ", 4), a4);
    push_family(e(0), &perm2, lbl(tag, "θ", 4), a4);

    match (psi, phi) {
        (Some(ps), Some(ph)) => {
            let theta5 = (a1 * a2 - a5 * a5) / opp;
            push_family([ps, 0.0, ph], &lambda, lbl(tag, "θ", 5), theta5);
            push_family([0.0, ps, ph], &d, lbl(tag, "θ", 5), theta5);
        }
        _ => omitted.push(format!("{}: ψ or φ undefined", lbl(tag, "θ", 5))),
    }
    match (eta, zeta) {
        (Some(et), Some(ze)) => {
            let theta6 = (a1 * a2 - g * g) / (a1 + a2 - 2.0 * g);
            push_family([0.0, et, ze], &ident, lbl(tag, "θ", 6), theta6);
            push_family([et, 0.0, ze], &ident, lbl(tag, "θ", 6), theta6);
        }
        _ => omitted.push(format!("{}: η or ζ undefined", lbl(tag, "θ", 6))),
    }

    Ok(TransverseEigenvectorTable {
        zeta,
        phi,
        eta,
        psi,
        lambda,
        d,
        p: perm,
        rows,
        omitted,
    })
}

/// `A = 2c66 / (c11 − c12)`; equals 1 exactly for isotropy.
pub fn anisotropy_factor(sc: &SymmetryClass) -> Result<f64> {
    match sc {
        SymmetryClass::Cubic(c) => {
            let den = c.c11 - c.c12;
            if is_degenerate(den, sc.scale(), 1) {
                return Err(Error::Degenerate("anisotropy factor: c11 = c12"));
            }
            Ok(2.0 * c.c66 / den)
        }
        other => Err(Error::WrongClass {
            expected: ClassTag::Cubic,
            got: other.tag(),
        }),
    }
}

/// Longitudinal and shear wave speeds `(vP, vS)` of an isotropic medium.
pub fn wave_velocities(sc: &SymmetryClass, density: f64) -> Result<(f64, f64)> {
    let i = match sc {
        SymmetryClass::Isotropic(i) => i,
        other => {
            return Err(Error::WrongClass {
                expected: ClassTag::Isotropic,
                got: other.tag(),
            })
        }
    };
    if !(density > 0.0) || !density.is_finite() {
        return Err(Error::Domain("density must be positive"));
    }
    let p_mod = i.bulk + 4.0 * i.shear / 3.0;
    if i.shear < 0.0 || p_mod < 0.0 {
        return Err(Error::Domain("wave speeds need nonnegative moduli"));
    }
    Ok(((p_mod / density).sqrt(), (i.shear / density).sqrt()))
}
