//! JSON input documents. Rationals are `"p/q"` strings or JSON integers;
//! floating-point numbers are rejected.

use std::fmt;
use std::path::{Path, PathBuf};

use coorth::exactlp::{parse_rational, Rational};
use coorth::{PolyhedralNormSpace, Subspace};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalText(pub Rational);

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        let text = match &value {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            Value::Number(_) => {
                return Err(de::Error::custom(format!("{value} is not exact; write rationals as \"p/q\" strings")))
            }
            _ => return Err(de::Error::custom(format!("expected a rational, found {value}"))),
        };
        parse_rational(&text)
            .map(RationalText)
            .ok_or_else(|| de::Error::custom(format!("invalid rational {text:?}")))
    }
}

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl fmt::Display for RationalText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn unwrap_vector(v: &[RationalText]) -> Vec<Rational> {
    v.iter().map(|r| r.0.clone()).collect()
}

/// Serialized with a `kind` tag; parsed by [`SpaceDocument::from_value`] so
/// that errors name the offending path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpaceDocument {
    DualVertices { functionals: Vec<Vec<RationalText>> },
    L1 { n: usize },
    Linf { n: usize },
    LinfSum { components: Vec<SpaceDocument> },
}

fn input(path: &str, msg: impl fmt::Display) -> CliError {
    CliError::Input(format!("{path}: {msg}"))
}

fn field<'a>(obj: &'a serde_json::Map<String, Value>, path: &str, name: &str) -> Result<&'a Value, CliError> {
    obj.get(name).ok_or_else(|| input(path, format!("missing field \"{name}\"")))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| input(path, format!("expected an array, found {v}")))
}

fn rational_vectors(v: &Value, path: &str) -> Result<Vec<Vec<RationalText>>, CliError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let row_path = format!("{path}[{i}]");
            array(row, &row_path)?
                .iter()
                .enumerate()
                .map(|(j, x)| RationalText::deserialize(x).map_err(|e| input(&format!("{row_path}[{j}]"), e)))
                .collect()
        })
        .collect()
}

impl SpaceDocument {
    pub fn from_value(v: &Value, path: &str) -> Result<Self, CliError> {
        let obj = v.as_object().ok_or_else(|| input(path, format!("expected a space document, found {v}")))?;
        let kind = field(obj, path, "kind")?;
        let kind = kind.as_str().ok_or_else(|| input(&format!("{path}.kind"), "expected a string"))?;
        let allowed: &[&str] = match kind {
            "dual-vertices" => &["kind", "functionals"],
            "l1" | "linf" => &["kind", "n"],
            "linf-sum" => &["kind", "components"],
            other => {
                return Err(input(
                    &format!("{path}.kind"),
                    format!("unknown kind {other:?} (expected dual-vertices, l1, linf or linf-sum)"),
                ))
            }
        };
        if let Some(extra) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(input(path, format!("unknown field \"{extra}\" for kind {kind:?}")));
        }
        let dimension = || -> Result<usize, CliError> {
            let n = field(obj, path, "n")?;
            n.as_u64()
                .and_then(|n| usize::try_from(n).ok())
                .ok_or_else(|| input(&format!("{path}.n"), format!("expected a nonnegative integer, found {n}")))
        };
        Ok(match kind {
            "dual-vertices" => SpaceDocument::DualVertices {
                functionals: rational_vectors(field(obj, path, "functionals")?, &format!("{path}.functionals"))?,
            },
            "l1" => SpaceDocument::L1 { n: dimension()? },
            "linf" => SpaceDocument::Linf { n: dimension()? },
            _ => {
                let components_path = format!("{path}.components");
                SpaceDocument::LinfSum {
                    components: array(field(obj, path, "components")?, &components_path)?
                        .iter()
                        .enumerate()
                        .map(|(i, c)| SpaceDocument::from_value(c, &format!("{components_path}[{i}]")))
                        .collect::<Result<_, _>>()?,
                }
            }
        })
    }

    /// Builds the space, prefixing errors with the offending document path.
    pub fn build(&self) -> Result<PolyhedralNormSpace, CliError> {
        self.build_at("space")
    }

    fn build_at(&self, path: &str) -> Result<PolyhedralNormSpace, CliError> {
        let located = |e: coorth::Error| CliError::Input(format!("{path}: {e}"));
        match self {
            SpaceDocument::DualVertices { functionals } => {
                PolyhedralNormSpace::from_functionals(functionals.iter().map(|f| unwrap_vector(f)).collect())
                    .map_err(located)
            }
            SpaceDocument::L1 { n } => PolyhedralNormSpace::l1(*n).map_err(located),
            SpaceDocument::Linf { n } => PolyhedralNormSpace::linf(*n).map_err(located),
            SpaceDocument::LinfSum { components } => {
                let built = components
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c.build_at(&format!("{path}.components[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                let refs: Vec<&PolyhedralNormSpace> = built.iter().collect();
                PolyhedralNormSpace::linf_sum(&refs).map_err(located)
            }
        }
    }

    /// The explicit dual-vertex form of `space`.
    pub fn expanded(space: &PolyhedralNormSpace) -> Self {
        SpaceDocument::DualVertices {
            functionals: space
                .dual_vertices()
                .iter()
                .map(|f| f.iter().cloned().map(RationalText).collect())
                .collect(),
        }
    }
}

/// Exactly one of `basis` (independent vectors) or `spanning` (any vectors;
/// a greedy independent subset is kept).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceDocument {
    #[serde(default)]
    pub basis: Option<Vec<Vec<RationalText>>>,
    #[serde(default)]
    pub spanning: Option<Vec<Vec<RationalText>>>,
    #[serde(default)]
    pub space: Option<SpaceRef>,
}

/// A space given inline or as a path to a space document.
#[derive(Clone, Debug, Deserialize)]
#[serde(transparent)]
pub struct SpaceRef(Value);

impl SpaceRef {
    /// Resolves relative paths against `base_dir`.
    pub fn resolve(&self, base_dir: &Path) -> Result<SpaceDocument, CliError> {
        match &self.0 {
            Value::String(p) => read_space_document(&base_dir.join(p)),
            inline => SpaceDocument::from_value(inline, "space"),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryDocument {
    pub command: String,
    pub space: SpaceRef,
    #[serde(default)]
    pub basis: Option<Vec<Vec<RationalText>>>,
    #[serde(default)]
    pub x: Option<Vec<RationalText>>,
    #[serde(default)]
    pub y: Option<Vec<RationalText>>,
    #[serde(default)]
    pub epsilon: Option<RationalText>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub samples: Option<usize>,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parent_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn read_space_document(path: &Path) -> Result<SpaceDocument, CliError> {
    let value: Value = read_json(path)?;
    SpaceDocument::from_value(&value, "space").map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_space(path: &Path) -> Result<PolyhedralNormSpace, CliError> {
    read_space_document(path)?.build().map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Loads a subspace document; its ambient space comes from `space_path` when
/// given, otherwise from the document's own `space` entry.
pub fn load_subspace(path: &Path, space_path: Option<&Path>) -> Result<Subspace, CliError> {
    let doc: SubspaceDocument = read_json(path)?;
    let space = match (space_path, &doc.space) {
        (Some(p), _) => load_space(p)?,
        (None, Some(r)) => r.resolve(&parent_dir(path))?.build()?,
        (None, None) => {
            return Err(CliError::Input(format!("{}: no space given (use --space or a \"space\" entry)", path.display())))
        }
    };
    match (&doc.basis, &doc.spanning) {
        (Some(basis), None) => build_subspace(space, basis),
        (None, Some(vectors)) => {
            let vectors: Vec<Vec<Rational>> = vectors.iter().map(|v| unwrap_vector(v)).collect();
            Subspace::spanned_by(space, &vectors).map_err(|e| CliError::Input(format!("spanning: {e}")))
        }
        _ => Err(CliError::Input(format!("{}: give exactly one of \"basis\" or \"spanning\"", path.display()))),
    }
}

pub fn build_subspace(space: PolyhedralNormSpace, basis: &[Vec<RationalText>]) -> Result<Subspace, CliError> {
    let basis: Vec<Vec<Rational>> = basis.iter().map(|b| unwrap_vector(b)).collect();
    Subspace::new(space, basis).map_err(|e| CliError::Input(format!("basis: {e}")))
}

/// Parses a comma-separated list of rationals such as `1/2,-1,0`.
pub fn parse_vector(name: &str, text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .enumerate()
        .map(|(i, part)| {
            parse_rational(part).ok_or_else(|| CliError::Input(format!("--{name}: entry {i} ({part:?}) is not a rational")))
        })
        .collect()
}

pub fn parse_scalar(name: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).ok_or_else(|| CliError::Input(format!("--{name}: {text:?} is not a rational")))
}

pub fn query_vector(name: &str, v: &Option<Vec<RationalText>>) -> Result<Vec<Rational>, CliError> {
    v.as_deref()
        .map(unwrap_vector)
        .ok_or_else(|| CliError::Input(format!("query: missing \"{name}\"")))
}
