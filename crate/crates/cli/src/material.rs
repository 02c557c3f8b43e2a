//! Material files: JSON records naming a symmetry class and either its
//! parameter list or a full Voigt matrix.

use std::path::Path;

use elasticity_core::{ClassTag, ElasticityTensor, Mat6, SymmetryClass, VoigtMatrix};
use serde::{Deserialize, Serialize};

use crate::error::InputError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialRecord {
    pub name: String,
    /// A class tag, `"general"`, or `"auto"`.
    pub symmetry: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub voigt: Option<Mat6>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<String>,
}

/// Declared symmetry of a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Declared {
    Auto,
    Tag(ClassTag),
}

/// A validated record with its tensor and class.
#[derive(Debug, Clone)]
pub struct Material {
    pub record: MaterialRecord,
    pub tensor: ElasticityTensor,
    pub class: SymmetryClass,
}

/// 1-based line and column of the first occurrence of `"key"` in `text`.
fn locate(text: &str, key: &str) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    match text.find(&needle) {
        Some(off) => {
            let before = &text[..off];
            let line = before.matches('\n').count() + 1;
            let col = off - before.rfind('\n').map_or(0, |i| i + 1) + 1;
            (line, col)
        }
        None => (1, 1),
    }
}

impl MaterialRecord {
    pub fn parse(text: &str, path: &Path) -> Result<Self, InputError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let field = e.path().to_string();
            let inner = e.into_inner();
            InputError::Parse {
                path: path.to_path_buf(),
                line: inner.line(),
                column: inner.column(),
                field: if field == "." { None } else { Some(field) },
                message: inner.to_string(),
            }
        })
    }

    pub fn declared(&self) -> Option<Declared> {
        match self.symmetry.as_str() {
            "auto" => Some(Declared::Auto),
            s => s.parse().ok().map(Declared::Tag),
        }
    }
}

/// Reads, parses and validates a material file. `detect_tol` is the
/// relative tolerance used to classify Voigt input.
pub fn load(path: &Path, detect_tol: f64) -> Result<Material, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let record = MaterialRecord::parse(&text, path)?;
    validate(record, &text, path, detect_tol)
}

fn validate(
    record: MaterialRecord,
    text: &str,
    path: &Path,
    detect_tol: f64,
) -> Result<Material, InputError> {
    let invalid = |field: &str, message: String| {
        let (line, column) = locate(text, field);
        InputError::Invalid {
            path: path.to_path_buf(),
            line,
            column,
            field: field.to_string(),
            message,
        }
    };
    let declared = record.declared().ok_or_else(|| {
        invalid(
            "symmetry",
            format!("unknown symmetry `{}`", record.symmetry),
        )
    })?;
    if let Some(d) = record.density {
        if !(d.is_finite() && d > 0.0) {
            return Err(invalid(
                "density",
                format!("density must be positive, got {d}"),
            ));
        }
    }
    let (tensor, class) = match (&record.parameters, &record.voigt) {
        (Some(_), Some(_)) => {
            return Err(invalid(
                "voigt",
                "give either `parameters` or `voigt`, not both".into(),
            ))
        }
        (None, None) => {
            return Err(invalid(
                "symmetry",
                "one of `parameters` or `voigt` is required".into(),
            ))
        }
        (Some(p), None) => {
            let tag = match declared {
                Declared::Tag(t) if t != ClassTag::General => t,
                _ => {
                    return Err(invalid(
                        "parameters",
                        format!(
                            "`parameters` need a concrete symmetry class, got `{}`",
                            record.symmetry
                        ),
                    ))
                }
            };
            let class = SymmetryClass::from_params(tag, p)
                .map_err(|e| invalid("parameters", e.to_string()))?;
            let tensor = ElasticityTensor::from_class(&class)
                .map_err(|e| invalid("parameters", e.to_string()))?;
            (tensor, class)
        }
        (None, Some(m)) => {
            let tensor = ElasticityTensor::from_voigt(&VoigtMatrix(*m))
                .map_err(|e| invalid("voigt", e.to_string()))?;
            let detected = tensor.detect_class(detect_tol);
            let class = match declared {
                Declared::Auto => detected,
                Declared::Tag(ClassTag::General) => SymmetryClass::General,
                Declared::Tag(t) if t == detected.tag() => detected,
                Declared::Tag(t) => {
                    return Err(invalid(
                        "symmetry",
                        format!(
                            "declared `{t}` but the Voigt matrix is `{}`",
                            detected.tag()
                        ),
                    ))
                }
            };
            (tensor, class)
        }
    };
    Ok(Material {
        record,
        tensor,
        class,
    })
}
