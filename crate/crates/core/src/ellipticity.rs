//! Strong-ellipticity and positive-definiteness verdicts.
//!
//! Per-class checkers translate positivity of the closed-form M-eigenvalues
//! into inequalities on the moduli. A condition tied to an eigenvalue is
//! `Necessary` only when that eigenvalue has a real eigenvector pair; the
//! others are reported as `Diagnostic` and do not decide the status.

use serde::{Deserialize, Serialize};

use crate::closed_form::{m_eigenvalues, LabeledEigenvalue};
use crate::error::{Error, Result};
use crate::linalg::symmetric_eigen;
use crate::numeric::{oracle, SolverConfig};
use crate::tensor::{
    ClassTag, Cubic, ElasticityTensor, Isotropic, Orthotropic, SymmetryClass, Tetragonal,
    TransverseIsotropic,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Elliptic,
    NotElliptic,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    NecessaryOnly,
    Sufficient,
    Exact,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    /// Failure implies the tensor is not strongly elliptic.
    Necessary,
    /// Part of a block whose joint success implies strong ellipticity.
    Sufficient,
    /// Reported for reference; never decides the status.
    Diagnostic,
}

/// One strict inequality `lhs > rhs`, reported as `margin = lhs − rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Condition {
    pub label: String,
    pub margin: f64,
    pub role: Role,
}

impl Condition {
    fn new(label: impl Into<String>, margin: f64, role: Role) -> Self {
        Condition {
            label: label.into(),
            margin,
            role,
        }
    }

    pub fn holds(&self) -> bool {
        self.margin > 0.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipticityVerdict {
    pub status: Status,
    pub mode: Mode,
    /// The condition that settled the status, if a single one did.
    pub decided_by: Option<Condition>,
    pub fired: Vec<Condition>,
}

impl EllipticityVerdict {
    fn from_conditions(mode: Mode, fired: Vec<Condition>) -> Self {
        let failed = fired
            .iter()
            .filter(|c| c.role == Role::Necessary && !c.holds())
            .min_by(|a, b| a.margin.total_cmp(&b.margin))
            .cloned();
        if let Some(c) = failed {
            return EllipticityVerdict {
                status: Status::NotElliptic,
                mode,
                decided_by: Some(c),
                fired,
            };
        }
        let status = match mode {
            Mode::Exact => Status::Elliptic,
            _ => {
                let suff: Vec<&Condition> = fired
                    .iter()
                    .filter(|c| c.role == Role::Sufficient)
                    .collect();
                if !suff.is_empty() && suff.iter().all(|c| c.holds()) {
                    Status::Elliptic
                } else {
                    Status::Inconclusive
                }
            }
        };
        let decided_by = match status {
            // The tightest condition that had to hold.
            Status::Elliptic => fired
                .iter()
                .filter(|c| match mode {
                    Mode::Exact => c.role == Role::Necessary,
                    _ => c.role == Role::Sufficient,
                })
                .min_by(|a, b| a.margin.total_cmp(&b.margin))
                .cloned(),
            _ => fired
                .iter()
                .filter(|c| c.role == Role::Sufficient && !c.holds())
                .min_by(|a, b| a.margin.total_cmp(&b.margin))
                .cloned(),
        };
        EllipticityVerdict {
            status,
            mode,
            decided_by,
            fired,
        }
    }

    pub fn condition(&self, label: &str) -> Option<&Condition> {
        self.fired.iter().find(|c| c.label == label)
    }
}

/// `√(ab) − |c|`, with `√` of a negative product taken as 0.
fn root_gap(a: f64, b: f64, c: f64) -> f64 {
    (a * b).max(0.0).sqrt() - c.abs()
}

/// Either-branch condition; the label names the branch with larger margin.
fn either(a: (String, f64), b: (String, f64), role: Role) -> Condition {
    if b.1 > a.1 {
        Condition::new(b.0, b.1, role)
    } else {
        Condition::new(a.0, a.1, role)
    }
}

/// Role of the positivity condition for eigenvalue `label`.
fn role_of(list: &[LabeledEigenvalue], label: &str) -> Role {
    match list.iter().find(|l| l.label == label) {
        Some(l) if l.realizable && !l.degenerate => Role::Necessary,
        _ => Role::Diagnostic,
    }
}

/// `θ > 0` for an opposed-pair value `(ab − c²)/(a + b + 2c)` given `a, b > 0`.
fn opposed_positive(a: (&str, f64), b: (&str, f64), c: (&str, f64), role: Role) -> Condition {
    either(
        (
            format!("|{}| < sqrt({}*{})", c.0, a.0, b.0),
            root_gap(a.1, b.1, c.1),
        ),
        (
            format!("{} < -({} + {})/2", c.0, a.0, b.0),
            -(a.1 + b.1) / 2.0 - c.1,
        ),
        role,
    )
}

/// `θ > 0` for an aligned-pair value `(ab − g²)/(a + b − 2g)` given `a, b > 0`.
fn aligned_positive(a: (&str, f64), b: (&str, f64), g: (&str, f64), role: Role) -> Condition {
    either(
        (
            format!("|{}| < sqrt({}*{})", g.0, a.0, b.0),
            root_gap(a.1, b.1, g.1),
        ),
        (
            format!("{} > ({} + {})/2", g.0, a.0, b.0),
            g.1 - (a.1 + b.1) / 2.0,
        ),
        role,
    )
}

pub fn check_isotropic(sc: &SymmetryClass) -> Result<EllipticityVerdict> {
    let i: &Isotropic = match sc {
        SymmetryClass::Isotropic(i) => i,
        other => return Err(wrong(ClassTag::Isotropic, other)),
    };
    let (lambda, mu) = (i.lambda(), i.mu());
    let fired = vec![
        Condition::new("mu > 0", mu, Role::Necessary),
        Condition::new("lambda + 2*mu > 0", lambda + 2.0 * mu, Role::Necessary),
        Condition::new(
            "lambda + 2*mu/3 > 0",
            lambda + 2.0 * mu / 3.0,
            Role::Diagnostic,
        ),
    ];
    Ok(EllipticityVerdict::from_conditions(Mode::Exact, fired))
}

pub fn check_cubic(sc: &SymmetryClass) -> Result<EllipticityVerdict> {
    let c: &Cubic = match sc {
        SymmetryClass::Cubic(c) => c,
        other => return Err(wrong(ClassTag::Cubic, other)),
    };
    let list = m_eigenvalues(sc)?;
    let (c11, c66, c12) = (c.c11, c.c66, c.c12);
    let n = Role::Necessary;
    let mut fired = vec![
        Condition::new("c11 > 0", c11, n),
        Condition::new("c66 > 0", c66, n),
        Condition::new("|c12 + c66| < c11 + c66", c11 + c66 - (c12 + c66).abs(), n),
        Condition::new("c11 > c12", c11 - c12, n),
        Condition::new("c11 + 2*c66 + c12 > 0", c11 + 2.0 * c66 + c12, n),
        Condition::new("c11 + 4*c66 + 2*c12 > 0", c11 + 4.0 * c66 + 2.0 * c12, n),
    ];
    if let Some(v) = list[5].value {
        fired.push(Condition::new(
            "cubic.θ6 > 0",
            v,
            role_of(&list, "cubic.θ6"),
        ));
    }
    fired.push(Condition::new(
        "c11 + 2*c12 > 0",
        c11 + 2.0 * c12,
        Role::Sufficient,
    ));
    Ok(EllipticityVerdict::from_conditions(Mode::Exact, fired))
}

pub fn check_transverse(sc: &SymmetryClass) -> Result<EllipticityVerdict> {
    let p: &TransverseIsotropic = match sc {
        SymmetryClass::TransverseIsotropic(p) => p,
        other => return Err(wrong(ClassTag::TransverseIsotropic, other)),
    };
    let list = m_eigenvalues(sc)?;
    let (c11, c33, c55, c66, c13) = (p.c11, p.c33, p.c44, p.c66, p.c13);
    let n = Role::Necessary;
    let d = Role::Diagnostic;
    let g = 2.0 * c55 + c13;
    let fired = vec![
        Condition::new("c11 > 0", c11, n),
        Condition::new("c33 > 0", c33, n),
        Condition::new("c55 > 0", c55, n),
        Condition::new("c11 > c12", 2.0 * c66, n),
        opposed_positive(
            ("c11", c11),
            ("c33", c33),
            ("c13", c13),
            role_of(&list, "transverse_isotropic.θ5"),
        ),
        aligned_positive(
            ("c11", c11),
            ("c33", c33),
            ("2*c55 + c13", g),
            role_of(&list, "transverse_isotropic.θ6"),
        ),
        Condition::new("|c13| < sqrt(c11*c33)", root_gap(c11, c33, c13), d),
        Condition::new(
            "|c13 + c55| < c55 + sqrt(c11*c33)",
            c55 + (c11 * c33).max(0.0).sqrt() - (c13 + c55).abs(),
            d,
        ),
    ];
    Ok(EllipticityVerdict::from_conditions(Mode::Exact, fired))
}

pub fn check_tetragonal(sc: &SymmetryClass) -> Result<EllipticityVerdict> {
    let p: &Tetragonal = match sc {
        SymmetryClass::Tetragonal(p) => p,
        other => return Err(wrong(ClassTag::Tetragonal, other)),
    };
    let list = m_eigenvalues(sc)?;
    let (c11, c33, c55, c66, c13, c12) = (p.c11, p.c33, p.c44, p.c66, p.c13, p.c12);
    let zeta = 0.5 * (c12 + 2.0 * c66 + c11);
    let g = 2.0 * c55 + c13;
    let n = Role::Necessary;
    let d = Role::Diagnostic;
    let r11 = (c11 * c33).max(0.0).sqrt();
    let rz = (zeta * c33).max(0.0).sqrt();
    let fired = vec![
        Condition::new("c11 > 0", c11, n),
        Condition::new("c33 > 0", c33, n),
        Condition::new("c55 > 0", c55, n),
        Condition::new("c66 > 0", c66, n),
        Condition::new("zeta > 0", zeta, n),
        Condition::new("c11 > c12", c11 - c12, n),
        opposed_positive(
            ("c11", c11),
            ("c33", c33),
            ("c13", c13),
            role_of(&list, "tetragonal.θ5"),
        ),
        opposed_positive(
            ("zeta", zeta),
            ("c33", c33),
            ("c13", c13),
            role_of(&list, "tetragonal.θ9"),
        ),
        aligned_positive(
            ("c11", c11),
            ("c33", c33),
            ("2*c55 + c13", g),
            role_of(&list, "tetragonal.θ6"),
        ),
        aligned_positive(
            ("zeta", zeta),
            ("c33", c33),
            ("2*c55 + c13", g),
            role_of(&list, "tetragonal.θ10"),
        ),
        Condition::new("|c13| < sqrt(c11*c33)", r11 - c13.abs(), d),
        Condition::new("|c13| < sqrt(zeta*c33)", rz - c13.abs(), d),
        Condition::new(
            "|2*c55 + c13| < min(sqrt(c11*c33), sqrt(zeta*c33))",
            r11.min(rz) - g.abs(),
            d,
        ),
        Condition::new(
            "2*c55 + c13 > (c33 + max(c11, zeta))/2",
            g - 0.5 * (c33 + c11.max(zeta)),
            d,
        ),
        Condition::new(
            "(zeta + c33)/2 < 2*c55 + c13 < sqrt(c11*c33)",
            (g - 0.5 * (zeta + c33)).min(r11 - g),
            d,
        ),
        Condition::new(
            "(c11 + c33)/2 < 2*c55 + c13 < sqrt(zeta*c33)",
            (g - 0.5 * (c11 + c33)).min(rz - g),
            d,
        ),
        Condition::new(
            "-2*c55 - sqrt(c11*c33) < c13 < sqrt(c11*c33)",
            (c13 + 2.0 * c55 + r11).min(r11 - c13),
            d,
        ),
        Condition::new(
            "(|c55 + c13| - c55)^2 < c33*(c11 + c12 + min(c11 - c12, 2*c66))/2",
            0.5 * c33 * (c11 + c12 + (c11 - c12).min(2.0 * c66))
                - ((c55 + c13).abs() - c55).powi(2),
            d,
        ),
    ];
    Ok(EllipticityVerdict::from_conditions(Mode::Exact, fired))
}

pub fn check_orthotropic_sufficient(sc: &SymmetryClass) -> Result<EllipticityVerdict> {
    let o: &Orthotropic = match sc {
        SymmetryClass::Orthotropic(o) => o,
        other => return Err(wrong(ClassTag::Orthotropic, other)),
    };
    let list = m_eigenvalues(sc)?;
    let n = Role::Necessary;
    let s = Role::Sufficient;
    let r = |l: &str| role_of(&list, &format!("orthotropic.{l}"));
    let diag = [
        ("c11", o.c11),
        ("c22", o.c22),
        ("c33", o.c33),
        ("c44", o.c44),
        ("c55", o.c55),
        ("c66", o.c66),
    ];
    let mut fired: Vec<Condition> = diag
        .iter()
        .map(|(name, v)| Condition::new(format!("{name} > 0"), *v, n))
        .collect();
    fired.extend([
        opposed_positive(("c22", o.c22), ("c33", o.c33), ("c23", o.c23), r("θ7")),
        opposed_positive(("c11", o.c11), ("c33", o.c33), ("c13", o.c13), r("θ8")),
        opposed_positive(("c11", o.c11), ("c22", o.c22), ("c12", o.c12), r("θ9")),
        aligned_positive(
            ("c22", o.c22),
            ("c33", o.c33),
            ("c23 + 2*c44", o.c23 + 2.0 * o.c44),
            r("θ10"),
        ),
        aligned_positive(
            ("c11", o.c11),
            ("c33", o.c33),
            ("c13 + 2*c55", o.c13 + 2.0 * o.c55),
            r("θ11"),
        ),
        aligned_positive(
            ("c11", o.c11),
            ("c22", o.c22),
            ("c12 + 2*c66", o.c12 + 2.0 * o.c66),
            r("θ12"),
        ),
    ]);
    if let Some(v) = list[12].value {
        fired.push(Condition::new("orthotropic.θ13 > 0", v, r("θ13")));
    }
    for (name, v) in diag {
        fired.push(Condition::new(format!("{name} > 0 [block]"), v, s));
    }
    fired.extend([
        Condition::new("sqrt(c11*c22) > |c12|", root_gap(o.c11, o.c22, o.c12), s),
        Condition::new(
            "c12 + 2*c66 > max(c11, c22)",
            o.c12 + 2.0 * o.c66 - o.c11.max(o.c22),
            s,
        ),
        Condition::new(
            "sqrt(c22*c33) > max(|c23|, |c23 + 2*c44|)",
            root_gap(o.c22, o.c33, o.c23).min(root_gap(o.c22, o.c33, o.c23 + 2.0 * o.c44)),
            s,
        ),
        Condition::new(
            "sqrt(c11*c33) > max(|c13|, |c13 + 2*c55|)",
            root_gap(o.c11, o.c33, o.c13).min(root_gap(o.c11, o.c33, o.c13 + 2.0 * o.c55)),
            s,
        ),
    ]);
    Ok(EllipticityVerdict::from_conditions(Mode::Sufficient, fired))
}

/// Dispatches to the checker for the class; `General` is an error.
pub fn check_class(sc: &SymmetryClass) -> Result<EllipticityVerdict> {
    match sc {
        SymmetryClass::Isotropic(_) => check_isotropic(sc),
        SymmetryClass::Cubic(_) => check_cubic(sc),
        SymmetryClass::TransverseIsotropic(_) => check_transverse(sc),
        SymmetryClass::Tetragonal(_) => check_tetragonal(sc),
        SymmetryClass::Orthotropic(_) => check_orthotropic_sufficient(sc),
        SymmetryClass::General => Err(Error::UnsupportedClass(ClassTag::General)),
    }
}

fn wrong(expected: ClassTag, got: &SymmetryClass) -> Error {
    Error::WrongClass {
        expected,
        got: got.tag(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PDVerdict {
    pub positive_definite: bool,
    pub min_eigenvalue: f64,
    /// Mandel-matrix eigenvalues, ascending.
    pub spectrum: [f64; 6],
}

pub fn positive_definite(t: &ElasticityTensor) -> Result<PDVerdict> {
    let e = symmetric_eigen(&t.to_mandel().0)?;
    Ok(PDVerdict {
        positive_definite: e.values[0] > 0.0,
        min_eigenvalue: e.values[0],
        spectrum: e.values,
    })
}

/// Sign of the refined oracle minimum of `f`, with an indeterminacy band of
/// `10 · cfg.tol · max|c|`.
pub fn strong_ellipticity_numeric(
    t: &ElasticityTensor,
    cfg: &SolverConfig,
) -> Result<EllipticityVerdict> {
    let o = oracle(t, cfg)?;
    let band = 10.0 * cfg.tol * t.max_abs();
    let m = o.refined.theta.min(o.grid_min);
    let fired = vec![
        Condition::new("min f(x, y) > band", m - band, Role::Sufficient),
        Condition::new("min f(x, y) > -band", m + band, Role::Necessary),
        Condition::new("grid min f(x, y)", o.grid_min, Role::Diagnostic),
    ];
    let mut v = EllipticityVerdict::from_conditions(Mode::Numeric, fired);
    if v.status == Status::NotElliptic && !(m < -band) {
        v.status = Status::Inconclusive;
        v.decided_by = None;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso_lame(lambda: f64, mu: f64) -> SymmetryClass {
        SymmetryClass::Isotropic(Isotropic::from_lame(lambda, mu))
    }

    #[test]
    fn isotropic_examples() {
        assert_eq!(
            check_isotropic(&iso_lame(1.0, 1.0)).unwrap().status,
            Status::Elliptic
        );
        let v = check_isotropic(&iso_lame(-2.0, 1.0)).unwrap();
        assert_eq!(v.status, Status::NotElliptic);
        assert_eq!(v.decided_by.unwrap().label, "lambda + 2*mu > 0");
        assert_eq!(
            check_isotropic(&iso_lame(-1.5, 1.0)).unwrap().status,
            Status::Elliptic
        );
        assert!(check_isotropic(&SymmetryClass::cubic(1.0, 1.0, 1.0)).is_err());
    }

    #[test]
    fn cubic_examples() {
        let v = check_cubic(&SymmetryClass::cubic(3.0, 1.0, 1.0)).unwrap();
        assert_eq!(v.status, Status::Elliptic);
        assert_eq!(v.mode, Mode::Exact);
        let v = check_cubic(&SymmetryClass::cubic(3.0, 1.0, 4.0)).unwrap();
        assert_eq!(v.status, Status::NotElliptic);
        assert!(!v.condition("c11 > c12").unwrap().holds());
        let v = check_cubic(&SymmetryClass::cubic(3.0, 1.0, -1.0)).unwrap();
        assert_eq!(v.status, Status::Elliptic);
        assert_eq!(v.condition("c11 + 2*c12 > 0").unwrap().margin, 1.0);
    }

    #[test]
    fn cubic_long_diagonal_failure() {
        // Passes the first four inequalities but f < 0 along (1,1,1).
        let v = check_cubic(&SymmetryClass::cubic(10.0, 0.1, -9.9)).unwrap();
        assert!(v.condition("|c12 + c66| < c11 + c66").unwrap().holds());
        assert_eq!(v.status, Status::NotElliptic);
    }

    #[test]
    fn transverse_examples() {
        let v = check_transverse(&SymmetryClass::transverse(3.0, 2.0, 0.8, 1.0, 0.5)).unwrap();
        assert_eq!(v.status, Status::Elliptic);
        let v = check_transverse(&SymmetryClass::transverse(1.0, 1.0, 2.0, 1.0, 0.0)).unwrap();
        assert_eq!(v.status, Status::Elliptic);
        assert!(v
            .fired
            .iter()
            .any(|c| c.label == "2*c55 + c13 > (c11 + c33)/2"));
        // Strongly negative c13 lands on the second branch of θ5 > 0.
        let v = check_transverse(&SymmetryClass::transverse(2.0, 2.0, 1.0, 1.0, -3.0)).unwrap();
        assert_eq!(v.status, Status::Elliptic);
        assert!(!v.condition("|c13| < sqrt(c11*c33)").unwrap().holds());
        // θ5 < 0 with a real eigenvector pair.
        let v = check_transverse(&SymmetryClass::transverse(3.0, 2.0, 0.8, 1.0, 2.5)).unwrap();
        assert_eq!(v.status, Status::NotElliptic);
        // Boundary c13 = -sqrt(c11*c33) with c11 = c33: θ5 is 0/0 and f stays positive.
        let v = check_transverse(&SymmetryClass::transverse(2.0, 2.0, 1.0, 1.0, -2.0)).unwrap();
        assert_eq!(v.status, Status::Elliptic);
    }

    #[test]
    fn tetragonal_examples() {
        let v = check_tetragonal(&SymmetryClass::tetragonal(3.0, 3.0, 1.0, 1.0, 1.0, 1.0)).unwrap();
        assert_eq!(v.status, Status::Elliptic);
        let v =
            check_tetragonal(&SymmetryClass::tetragonal(3.0, 3.0, 1.0, 1.0, -4.0, 1.0)).unwrap();
        assert_eq!(v.status, Status::Elliptic);
        let v = check_tetragonal(&SymmetryClass::tetragonal(3.0, 3.0, 1.0, 1.0, 4.0, 1.0)).unwrap();
        assert_eq!(v.status, Status::NotElliptic);
    }

    #[test]
    fn orthotropic_examples() {
        let v = check_orthotropic_sufficient(&SymmetryClass::orthotropic([
            3.0, 3.0, 3.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0,
        ]))
        .unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(v.decided_by.unwrap().label, "c12 + 2*c66 > max(c11, c22)");
        let v = check_orthotropic_sufficient(&SymmetryClass::orthotropic([
            3.0, 3.0, 3.0, 1.0, 1.0, 2.0, 0.5, 0.5, 0.5,
        ]))
        .unwrap();
        assert_eq!(v.status, Status::Elliptic);
        // Positive boundary: θ9 = 0 with a real eigenvector pair.
        let v = check_orthotropic_sufficient(&SymmetryClass::orthotropic([
            4.0, 1.0, 3.0, 1.0, 1.0, 1.0, 0.0, 0.0, 2.0,
        ]))
        .unwrap();
        assert_eq!(v.status, Status::NotElliptic);
        // Negative boundary: no real eigenvector for θ9, and f stays positive.
        let v = check_orthotropic_sufficient(&SymmetryClass::orthotropic([
            4.0, 1.0, 3.0, 1.0, 1.0, 1.0, 0.0, 0.0, -2.0,
        ]))
        .unwrap();
        assert_eq!(v.status, Status::Inconclusive);
    }

    #[test]
    fn pd_examples() {
        let t = ElasticityTensor::from_class(&SymmetryClass::isotropic(1.0, 1.0)).unwrap();
        let pd = positive_definite(&t).unwrap();
        assert!(pd.positive_definite);
        let expect = [2.0, 2.0, 2.0, 2.0, 2.0, 3.0];
        for (a, b) in pd.spectrum.iter().zip(expect) {
            assert!((a - b).abs() < 1e-14);
        }
        let t = ElasticityTensor::from_class(&iso_lame(-1.5, 1.0)).unwrap();
        assert!(!positive_definite(&t).unwrap().positive_definite);
        let z = positive_definite(&ElasticityTensor::zero()).unwrap();
        assert!(!z.positive_definite);
        assert_eq!(z.min_eigenvalue, 0.0);
    }

    #[test]
    fn numeric_examples() {
        let cfg = SolverConfig {
            grid_n: 24,
            ..SolverConfig::default()
        };
        let t = ElasticityTensor::from_class(&iso_lame(1.0, 1.0)).unwrap();
        assert_eq!(
            strong_ellipticity_numeric(&t, &cfg).unwrap().status,
            Status::Elliptic
        );
        let t = ElasticityTensor::from_class(&iso_lame(-3.0, 1.0)).unwrap();
        assert_eq!(
            strong_ellipticity_numeric(&t, &cfg).unwrap().status,
            Status::NotElliptic
        );
        let z = strong_ellipticity_numeric(&ElasticityTensor::zero(), &cfg).unwrap();
        assert_eq!(z.status, Status::Inconclusive);
    }
}
