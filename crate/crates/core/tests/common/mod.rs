#![allow(dead_code)]

use elasticity_core::{ClassTag, ElasticityTensor, SplitMix64, SymmetryClass, VoigtMatrix};

pub const CLASSED: [ClassTag; 5] = [
    ClassTag::Isotropic,
    ClassTag::Cubic,
    ClassTag::TransverseIsotropic,
    ClassTag::Tetragonal,
    ClassTag::Orthotropic,
];

/// Indices of the off-diagonal (coupling) parameters of each class.
pub fn is_coupling(tag: ClassTag, i: usize) -> bool {
    match tag {
        ClassTag::Cubic => i == 2,
        ClassTag::TransverseIsotropic => i == 4,
        ClassTag::Tetragonal => i >= 4,
        ClassTag::Orthotropic => i >= 6,
        _ => false,
    }
}

/// Moduli in `[lo, 4]`, couplings in `[-c, c]`.
pub fn draw_class(rng: &mut SplitMix64, tag: ClassTag, lo: f64, c: f64) -> SymmetryClass {
    let p: Vec<f64> = (0..tag.param_count())
        .map(|i| {
            if is_coupling(tag, i) {
                rng.uniform(-c, c)
            } else {
                rng.uniform(lo, 4.0)
            }
        })
        .collect();
    SymmetryClass::from_params(tag, &p).unwrap()
}

pub fn tensor(sc: &SymmetryClass) -> ElasticityTensor {
    ElasticityTensor::from_class(sc).unwrap()
}

/// Dense symmetric Voigt matrix with entries in `[-1, 1]` plus `shift` on
/// the diagonal.
pub fn dense(rng: &mut SplitMix64, shift: f64) -> ElasticityTensor {
    let mut m = [[0.0; 6]; 6];
    for a in 0..6 {
        for b in a..6 {
            let v = rng.uniform(-1.0, 1.0) + if a == b { shift } else { 0.0 };
            m[a][b] = v;
            m[b][a] = v;
        }
    }
    ElasticityTensor::from_voigt(&VoigtMatrix(m)).unwrap()
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// Every value of `a` has a partner in `b`.
pub fn covered(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().all(|x| b.iter().any(|y| rel_close(*x, *y, tol)))
}
