use std::path::Path;

use coorth::example::{self, PAIRS};
use coorth::exactlp::{int, Rational};
use coorth::selection::{check_theorem_general, embed_linf, extension_is_unique, selection_report};
use coorth::subspace::{best_coapproximation, coproximinal_probe, find_orthogonal_direction, strong_report};
use coorth::{bj_orthogonal, eps_orthogonal, Limits, PolyhedralNormSpace, Subspace};
use serde::Serialize;
use serde_json::Value;

use crate::document::{build_subspace, query_vector, read_json, read_space_document, QueryDocument, SpaceDocument};
use crate::error::CliError;
use crate::output::{
    AntiFields, CoapproxOutput, EmbedOutput, OrthogonalOutput, PairOutput, PaperExampleOutput, ProbeOutput,
    SelectionOutput, StrongFields, TheoremCheckOutput,
};

pub const DEFAULT_PROBE_SAMPLES: usize = 100;
pub const DEFAULT_EMBED_SAMPLES: usize = 1000;

/// Work caps, with `COORTH_MAX_PATTERNS` overriding the pattern cap.
pub fn limits() -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    if let Ok(text) = std::env::var("COORTH_MAX_PATTERNS") {
        limits.max_patterns = text
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("COORTH_MAX_PATTERNS: {text:?} is not a nonnegative integer")))?;
    }
    Ok(limits)
}

fn to_value<T: Serialize>(out: &T) -> Value {
    serde_json::to_value(out).expect("report records serialize")
}

pub fn orthogonal(space: &PolyhedralNormSpace, x: &[Rational], y: &[Rational]) -> Result<Value, CliError> {
    let out = bj_orthogonal(space, x, y)?;
    Ok(to_value(&OrthogonalOutput::new(space, &out, None)))
}

pub fn eps_orthogonal_cmd(
    space: &PolyhedralNormSpace,
    x: &[Rational],
    y: &[Rational],
    eps: &Rational,
) -> Result<Value, CliError> {
    let out = eps_orthogonal(space, x, y, eps)?;
    Ok(to_value(&OrthogonalOutput::new(space, &out, Some(eps))))
}

pub fn coapprox(y: &Subspace, x: &[Rational]) -> Result<Value, CliError> {
    let sol = best_coapproximation(y, x)?;
    Ok(to_value(&CoapproxOutput::new(y, x, sol.as_ref())))
}

#[derive(Serialize)]
struct AntiOutput {
    dim: usize,
    #[serde(flatten)]
    anti: AntiFields,
}

pub fn check_anti(y: &Subspace, limits: &Limits) -> Result<Value, CliError> {
    let found = find_orthogonal_direction(y, limits)?;
    Ok(to_value(&AntiOutput { dim: y.dim(), anti: AntiFields::new(y.ambient(), found.as_ref()) }))
}

#[derive(Serialize)]
struct StrongOutput {
    dim: usize,
    #[serde(flatten)]
    strong: StrongFields,
}

pub fn check_strong(y: &Subspace, limits: &Limits) -> Result<Value, CliError> {
    let report = strong_report(y, limits)?;
    Ok(to_value(&StrongOutput { dim: y.dim(), strong: StrongFields::new(y.ambient(), &report) }))
}

fn selection_section(y: &Subspace) -> Result<SelectionOutput, CliError> {
    let report = selection_report(y)?;
    let verified = if report.minimal_exists {
        let mut all = true;
        for (i, &k) in report.chosen_image.iter().enumerate() {
            all &= extension_is_unique(y, i, k)?;
        }
        Some(all)
    } else {
        None
    };
    Ok(SelectionOutput::new(y.ambient(), &report, verified))
}

#[derive(Serialize)]
struct SelectionCommandOutput {
    dim: usize,
    selection: SelectionOutput,
}

pub fn check_selection(y: &Subspace) -> Result<Value, CliError> {
    Ok(to_value(&SelectionCommandOutput { dim: y.dim(), selection: selection_section(y)? }))
}

#[derive(Serialize)]
struct EmbedCommandOutput {
    dim: usize,
    embed: EmbedOutput,
    theorem_check: TheoremCheckOutput,
}

pub fn check_embed(y: &Subspace, samples: usize, seed: u64, limits: &Limits) -> Result<Value, CliError> {
    let embedding = embed_linf(y);
    let check = check_theorem_general(y, samples, seed, limits);
    Ok(to_value(&EmbedCommandOutput {
        dim: y.dim(),
        embed: (&embedding).into(),
        theorem_check: (&check).into(),
    }))
}

#[derive(Serialize)]
struct ProbeCommandOutput {
    dim: usize,
    #[serde(flatten)]
    probe: ProbeOutput,
}

pub fn probe(y: &Subspace, samples: usize, seed: u64, limits: &Limits) -> Result<Value, CliError> {
    let report = coproximinal_probe(y, samples, seed, limits)?;
    Ok(to_value(&ProbeCommandOutput { dim: y.dim(), probe: ProbeOutput::new(y.ambient(), &report) }))
}

#[derive(Serialize)]
struct CheckAllOutput {
    dim: usize,
    #[serde(flatten)]
    anti: Option<AntiFields>,
    #[serde(flatten)]
    strong: StrongFields,
    selection: SelectionOutput,
    embed: EmbedOutput,
    theorem_check: TheoremCheckOutput,
    probe: ProbeOutput,
}

/// Every section; a capped direction search still reports the others.
pub fn check_all(y: &Subspace, samples: usize, seed: u64, limits: &Limits) -> Result<Value, CliError> {
    let space = y.ambient();
    let (anti, capped) = match find_orthogonal_direction(y, limits) {
        Ok(found) => (Some(AntiFields::new(space, found.as_ref())), None),
        Err(e @ coorth::Error::Capacity { .. }) => (None, Some(CliError::from(e))),
        Err(e) => return Err(e.into()),
    };
    let strong = StrongFields::new(space, &strong_report(y, limits)?);
    let selection = selection_section(y)?;
    let embedding = embed_linf(y);
    let check = check_theorem_general(y, DEFAULT_EMBED_SAMPLES, seed, limits);
    let probe = ProbeOutput::new(space, &coproximinal_probe(y, samples, seed, limits)?);
    let out = to_value(&CheckAllOutput {
        dim: y.dim(),
        anti,
        strong,
        selection,
        embed: (&embedding).into(),
        theorem_check: (&check).into(),
        probe,
    });
    match capped {
        Some(err) => Err(err.with_partial(out)),
        None => Ok(out),
    }
}

pub fn paper_example(limits: &Limits) -> Result<Value, CliError> {
    let run = example::run(limits)?;
    let pairs = PAIRS
        .iter()
        .map(|(u, v)| PairOutput {
            u: u.iter().map(|&x| int(x).to_string()).collect(),
            v: v.iter().map(|&x| int(x).to_string()).collect(),
        })
        .collect();
    Ok(to_value(&PaperExampleOutput::new(&run, pairs)))
}

/// The space document, normalized, or expanded to explicit dual vertices.
pub fn space_document(path: &Path, expand: bool) -> Result<Value, CliError> {
    let doc = read_space_document(path)?;
    let space = doc.build()?;
    Ok(if expand { to_value(&SpaceDocument::expanded(&space)) } else { to_value(&doc) })
}

/// Runs the command named in a query document.
pub fn query(path: &Path, limits: &Limits) -> Result<Value, CliError> {
    let doc: QueryDocument = read_json(path)?;
    let base = path.parent().unwrap_or(Path::new(""));
    let space = doc.space.resolve(base)?.build()?;
    let subspace = || -> Result<Subspace, CliError> {
        let basis = doc.basis.as_ref().ok_or_else(|| CliError::Input("query: missing \"basis\"".into()))?;
        build_subspace(space.clone(), basis)
    };
    let seed = doc.seed.unwrap_or(0);
    match doc.command.as_str() {
        "orthogonal" => orthogonal(&space, &query_vector("x", &doc.x)?, &query_vector("y", &doc.y)?),
        "eps-orthogonal" => {
            let eps = doc.epsilon.as_ref().ok_or_else(|| CliError::Input("query: missing \"epsilon\"".into()))?;
            eps_orthogonal_cmd(&space, &query_vector("x", &doc.x)?, &query_vector("y", &doc.y)?, &eps.0)
        }
        "coapprox" => coapprox(&subspace()?, &query_vector("x", &doc.x)?),
        "check-anti" => check_anti(&subspace()?, limits),
        "check-strong" => check_strong(&subspace()?, limits),
        "check-selection" => check_selection(&subspace()?),
        "check-embed" => check_embed(&subspace()?, doc.samples.unwrap_or(DEFAULT_EMBED_SAMPLES), seed, limits),
        "check-all" => check_all(&subspace()?, doc.samples.unwrap_or(DEFAULT_PROBE_SAMPLES), seed, limits),
        "probe-coproximinal" => probe(&subspace()?, doc.samples.unwrap_or(DEFAULT_PROBE_SAMPLES), seed, limits),
        other => Err(CliError::Input(format!("query: unknown command {other:?}"))),
    }
}
