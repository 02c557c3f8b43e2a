//! Report types and the analyses behind each subcommand.

use std::collections::BTreeMap;

use elasticity_core::{
    anisotropy_factor, check_class, m_eigenvalues, m_spectrum, numeric, positive_definite,
    strong_ellipticity_numeric, wave_velocities, z_eigenvalues, z_spectrum, ClassTag,
    EllipticityVerdict, Error, LabeledEigenvalue, MEigenpair, MSpectrum, PDVerdict, SolverConfig,
    Status, SymmetryClass, Vec3, ZSpectrum,
};
use serde::{Deserialize, Serialize};

use crate::error::InputError;
use crate::material::{Declared, Material, MaterialRecord};

/// Relative gap within which a numeric value matches a closed form.
pub const MATCH_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSummary {
    pub tag: ClassTag,
    /// `true` when the class came from the Voigt matrix rather than the file.
    pub detected: bool,
    /// Class parameters in file order; empty for `general`.
    pub parameters: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Waves {
    pub density: f64,
    pub p: f64,
    pub s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchRow {
    pub label: String,
    pub closed_form: f64,
    pub realizable: bool,
    /// Nearest numeric value, if the numeric spectrum is non-empty.
    pub numeric: Option<f64>,
    pub delta: Option<f64>,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericSection {
    pub seed: u64,
    pub n_starts: usize,
    pub m_spectrum: MSpectrum,
    pub z_spectrum: ZSpectrum,
    /// Closed-form values against the numeric spectrum; absent for `general`.
    pub matches: Option<Vec<MatchRow>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub material: MaterialRecord,
    pub class: ClassSummary,
    pub m_eigenvalues: Option<Vec<LabeledEigenvalue>>,
    pub z_eigenvalues: Option<Vec<LabeledEigenvalue>>,
    pub anisotropy_factor: Option<f64>,
    pub ellipticity: EllipticityVerdict,
    pub positive_definite: PDVerdict,
    pub wave_velocities: Option<Waves>,
    pub numeric: Option<NumericSection>,
    /// Reasons for every `null` section, keyed by field name.
    pub notes: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSection {
    pub grid_n: usize,
    pub grid_min: f64,
    pub grid_x: Vec3,
    pub grid_y: Vec3,
    pub refined: MEigenpair,
    /// Half-width of the indeterminacy band around zero.
    pub band: f64,
    pub verdict: EllipticityVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleReport {
    pub material: MaterialRecord,
    pub class: ClassSummary,
    pub oracle: OracleSection,
}

impl Report {
    pub fn status(&self) -> Status {
        self.ellipticity.status
    }
}

impl OracleReport {
    pub fn status(&self) -> Status {
        self.oracle.verdict.status
    }
}

/// Process exit code for a verdict.
pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Elliptic => 0,
        Status::NotElliptic => 1,
        Status::Inconclusive => 2,
    }
}

fn summary(m: &Material) -> ClassSummary {
    ClassSummary {
        tag: m.class.tag(),
        detected: m.record.voigt.is_some() && m.record.declared() == Some(Declared::Auto),
        parameters: m.class.params(),
    }
}

/// Closed forms, the class checker (or the numeric checker for `general`),
/// positive definiteness and, for isotropic input with a density, wave
/// velocities.
pub fn analyze(
    m: &Material,
    density: Option<f64>,
    cfg: &SolverConfig,
) -> Result<Report, InputError> {
    let mut notes = BTreeMap::new();
    let classed = m.class != SymmetryClass::General;
    let (ml, zl) = if classed {
        (
            Some(m_eigenvalues(&m.class)?),
            Some(z_eigenvalues(&m.class)?),
        )
    } else {
        let why = "no closed form for a general tensor".to_string();
        notes.insert("m_eigenvalues".into(), why.clone());
        notes.insert("z_eigenvalues".into(), why);
        (None, None)
    };
    let ellipticity = if classed {
        check_class(&m.class)?
    } else {
        strong_ellipticity_numeric(&m.tensor, cfg)?
    };
    let anisotropy = match anisotropy_factor(&m.class) {
        Ok(a) => Some(a),
        Err(e) => {
            let why = match e {
                Error::UnsupportedClass(_) => "defined for cubic materials only".to_string(),
                e => e.to_string(),
            };
            notes.insert("anisotropy_factor".into(), why);
            None
        }
    };
    let rho = density.or(m.record.density);
    let waves = match (m.class.tag(), rho) {
        (ClassTag::Isotropic, Some(d)) => match wave_velocities(&m.class, d) {
            Ok((p, s)) => Some(Waves { density: d, p, s }),
            Err(e) => {
                notes.insert("wave_velocities".into(), e.to_string());
                None
            }
        },
        (ClassTag::Isotropic, None) => {
            notes.insert("wave_velocities".into(), "no density given".into());
            None
        }
        _ => {
            notes.insert(
                "wave_velocities".into(),
                "defined for isotropic materials only".into(),
            );
            None
        }
    };
    notes.insert("numeric".into(), "run the `spectrum` command".into());
    Ok(Report {
        material: m.record.clone(),
        class: summary(m),
        m_eigenvalues: ml,
        z_eigenvalues: zl,
        anisotropy_factor: anisotropy,
        ellipticity,
        positive_definite: positive_definite(&m.tensor)?,
        wave_velocities: waves,
        numeric: None,
        notes,
    })
}

/// Each non-degenerate closed-form value against the nearest numeric `θ`.
pub fn match_table(closed: &[LabeledEigenvalue], spectrum: &MSpectrum) -> Vec<MatchRow> {
    closed
        .iter()
        .filter_map(|l| {
            let v = l.value?;
            let nearest = spectrum
                .pairs
                .iter()
                .map(|p| p.theta)
                .min_by(|a, b| (a - v).abs().total_cmp(&(b - v).abs()));
            let delta = nearest.map(|n| (n - v).abs());
            Some(MatchRow {
                label: l.label.clone(),
                closed_form: v,
                realizable: l.realizable,
                numeric: nearest,
                delta,
                matched: delta.is_some_and(|d| d <= MATCH_TOL * v.abs().max(1.0)),
            })
        })
        .collect()
}

/// [`analyze`] plus numeric M- and Z-spectra and the match table.
pub fn spectrum(m: &Material, cfg: &SolverConfig) -> Result<Report, InputError> {
    let mut r = analyze(m, None, cfg)?;
    let ms = m_spectrum(&m.tensor, cfg)?;
    let zs = z_spectrum(&m.tensor, cfg)?;
    let matches = r.m_eigenvalues.as_deref().map(|l| match_table(l, &ms));
    r.notes.remove("numeric");
    if matches.is_none() {
        r.notes.insert(
            "numeric.matches".into(),
            "no closed form for a general tensor".into(),
        );
    }
    r.numeric = Some(NumericSection {
        seed: cfg.seed,
        n_starts: cfg.n_starts,
        m_spectrum: ms,
        z_spectrum: zs,
        matches,
    });
    Ok(r)
}

/// Grid minimum of `f`, its refinement, and the sign verdict.
pub fn oracle(m: &Material, cfg: &SolverConfig) -> Result<OracleReport, InputError> {
    let o = numeric::oracle(&m.tensor, cfg)?;
    let verdict = strong_ellipticity_numeric(&m.tensor, cfg)?;
    Ok(OracleReport {
        material: m.record.clone(),
        class: summary(m),
        oracle: OracleSection {
            grid_n: o.grid_n,
            grid_min: o.grid_min,
            grid_x: o.grid_x,
            grid_y: o.grid_y,
            refined: o.refined,
            band: 10.0 * cfg.tol * m.tensor.max_abs(),
            verdict,
        },
    })
}
