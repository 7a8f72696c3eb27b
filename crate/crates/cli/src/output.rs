//! Serializable report records. Every number is an exact rational string.

use coorth::example::{NamedWitness, WorkedExample};
use coorth::exactlp::{format_vector, Rational};
use coorth::selection::{EmbeddingReport, SelectionReport, TheoremGeneralCheck};
use coorth::subspace::{
    CoapproxSolution, CoverageEntry, CoverageWitness, OrthogonalDirection, ProbeReport, ProbeStatus, StrongReport,
    Threshold,
};
use coorth::{Orthogonality, PolyhedralNormSpace, Subspace};
use serde::Serialize;

type Vector = Vec<String>;

fn vertices(space: &PolyhedralNormSpace, indices: &[usize]) -> Vec<Vector> {
    indices.iter().map(|&k| format_vector(space.dual_vertex(k))).collect()
}

#[derive(Serialize)]
pub struct OrthogonalOutput {
    pub orthogonal: bool,
    pub certificate: Option<Vector>,
    pub support_face: Vec<Vector>,
    pub norm: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
}

impl OrthogonalOutput {
    pub fn new(space: &PolyhedralNormSpace, out: &Orthogonality, epsilon: Option<&Rational>) -> Self {
        Self {
            orthogonal: out.orthogonal,
            certificate: out.certificate.as_deref().map(format_vector),
            support_face: vertices(space, &out.face.vertex_indices),
            norm: out.face.norm_value.to_string(),
            epsilon: epsilon.map(ToString::to_string),
        }
    }
}

#[derive(Serialize)]
pub struct FunctionalPair {
    pub lower: Vector,
    pub upper: Vector,
}

#[derive(Serialize)]
pub struct Range {
    pub min: String,
    pub max: String,
}

#[derive(Serialize)]
pub struct SolutionOutput {
    pub coefficients: Vector,
    pub point: Vector,
    pub certificates: Vec<FunctionalPair>,
    pub coefficient_ranges: Vec<Range>,
    pub unique: bool,
}

#[derive(Serialize)]
pub struct CoapproxOutput {
    pub dim: usize,
    pub x: Vector,
    pub in_domain: bool,
    pub solution: Option<SolutionOutput>,
}

impl CoapproxOutput {
    pub fn new(y: &Subspace, x: &[Rational], sol: Option<&CoapproxSolution>) -> Self {
        Self {
            dim: y.dim(),
            x: format_vector(x),
            in_domain: sol.is_some(),
            solution: sol.map(|s| SolutionOutput {
                coefficients: format_vector(&s.coefficients),
                point: format_vector(&s.point),
                certificates: s
                    .certificates
                    .iter()
                    .map(|(lo, hi)| FunctionalPair { lower: format_vector(lo), upper: format_vector(hi) })
                    .collect(),
                coefficient_ranges: s
                    .coefficient_ranges
                    .iter()
                    .map(|(lo, hi)| Range { min: lo.to_string(), max: hi.to_string() })
                    .collect(),
                unique: s.unique,
            }),
        }
    }
}

#[derive(Serialize)]
pub struct AntiFields {
    pub anti: bool,
    pub direction: Option<Vector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<Vec<FunctionalPair>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selection_image: Option<Vec<Vector>>,
}

impl AntiFields {
    pub fn new(space: &PolyhedralNormSpace, found: Option<&OrthogonalDirection>) -> Self {
        Self {
            anti: found.is_none(),
            direction: found.map(|d| format_vector(&d.direction)),
            pattern: found.map(|d| {
                d.pattern
                    .iter()
                    .map(|&(lo, hi)| FunctionalPair {
                        lower: format_vector(space.dual_vertex(lo)),
                        upper: format_vector(space.dual_vertex(hi)),
                    })
                    .collect()
            }),
            selection_image: found.map(|d| d.selection_image.iter().map(|f| format_vector(f)).collect()),
        }
    }
}

#[derive(Serialize)]
pub struct WitnessOutput {
    pub coefficients: Vector,
    pub point: Vector,
    pub margin: String,
}

impl From<&CoverageWitness> for WitnessOutput {
    fn from(w: &CoverageWitness) -> Self {
        Self { coefficients: format_vector(&w.coefficients), point: format_vector(&w.point), margin: w.margin.to_string() }
    }
}

#[derive(Serialize)]
pub struct CoverageOutput {
    pub vertex: Vector,
    pub witness: Option<WitnessOutput>,
}

fn coverage_output(space: &PolyhedralNormSpace, entry: &CoverageEntry) -> CoverageOutput {
    CoverageOutput { vertex: format_vector(space.dual_vertex(entry.vertex)), witness: entry.witness.as_ref().map(Into::into) }
}

#[derive(Serialize)]
pub struct StrongFields {
    pub strong: bool,
    pub covered: usize,
    pub total: usize,
    pub blocking: Vec<Vector>,
    pub coverage: Vec<CoverageOutput>,
    pub eps_min: String,
    pub eps_exact: bool,
    pub eps_direction: Option<Vector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps_samples: Option<usize>,
    pub branches_agree: bool,
}

impl StrongFields {
    pub fn new(space: &PolyhedralNormSpace, report: &StrongReport) -> Self {
        let (eps_direction, eps_samples) = match &report.threshold {
            Threshold::Exact { direction, .. } => (direction.as_deref().map(format_vector), None),
            Threshold::SampledUpperBound { direction, samples, .. } => (Some(format_vector(direction)), Some(*samples)),
        };
        Self {
            strong: report.verdict,
            covered: report.covered(),
            total: report.coverage.len(),
            blocking: vertices(space, &report.blocking()),
            coverage: report.coverage.iter().map(|c| coverage_output(space, c)).collect(),
            eps_min: report.threshold.value().to_string(),
            eps_exact: report.threshold.is_exact(),
            eps_direction,
            eps_samples,
            branches_agree: report.branches_agree,
        }
    }
}

#[derive(Serialize)]
pub struct SelectionOutput {
    pub forced_vertices: Vec<Vector>,
    pub facet_pairs: usize,
    pub extension_unique: Vec<bool>,
    pub minimal_exists: bool,
    pub minimal_image_size: Option<usize>,
    pub chosen_image: Vec<Vector>,
    /// LP re-verification that each chosen extension is the only one, when minimal.
    pub uniqueness_verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl SelectionOutput {
    pub fn new(space: &PolyhedralNormSpace, report: &SelectionReport, uniqueness_verified: Option<bool>) -> Self {
        Self {
            forced_vertices: vertices(space, &report.forced_vertices),
            facet_pairs: report.facet_pairs,
            extension_unique: report.extension_unique.clone(),
            minimal_exists: report.minimal_exists,
            minimal_image_size: report.minimal_image_size,
            chosen_image: vertices(space, &report.chosen_image),
            uniqueness_verified,
            note: (!report.minimal_exists).then_some("no minimal selection map under the vertex-valued convention"),
        }
    }
}

#[derive(Serialize)]
pub struct EmbedOutput {
    pub r: usize,
    pub facet_count: usize,
    pub isometric_linf_n: bool,
    pub zeta: Vec<Vector>,
}

impl From<&EmbeddingReport> for EmbedOutput {
    fn from(e: &EmbeddingReport) -> Self {
        Self {
            r: e.r(),
            facet_count: e.facet_count,
            isometric_linf_n: e.isometric_linf_n,
            zeta: e.zeta.iter().map(|f| format_vector(f)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct TheoremCheckOutput {
    pub consistent: bool,
    pub facet_count_ok: bool,
    pub isometric_on_witnesses: bool,
    pub samples: usize,
    pub isometric_on_samples: bool,
    pub distinct_norming_rows: bool,
    pub coproximinal_certified: Option<bool>,
}

impl From<&TheoremGeneralCheck> for TheoremCheckOutput {
    fn from(c: &TheoremGeneralCheck) -> Self {
        Self {
            consistent: c.consistent,
            facet_count_ok: c.facet_count_ok,
            isometric_on_witnesses: c.isometric_on_witnesses,
            samples: c.samples,
            isometric_on_samples: c.isometric_on_samples,
            distinct_norming_rows: c.distinct_norming_rows,
            coproximinal_certified: c.coproximinal_certified,
        }
    }
}

#[derive(Serialize)]
pub struct ProbeOutput {
    pub status: &'static str,
    pub seed: u64,
    pub samples_requested: usize,
    pub samples_solved: usize,
    pub certified_selection: Option<Vec<Vector>>,
    pub sufficient_search_complete: bool,
    pub counterexample: Option<Vector>,
    pub co_chebyshev_on_samples: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ProbeOutput {
    pub fn new(space: &PolyhedralNormSpace, report: &ProbeReport) -> Self {
        let (status, note) = match report.status {
            ProbeStatus::Certified => ("certified", None),
            ProbeStatus::Counterexample => ("counterexample", None),
            ProbeStatus::NoCounterexample => (
                "no-counterexample",
                Some(format!("no counterexample among {} samples; undecided, not a proof", report.samples_requested)),
            ),
        };
        Self {
            status,
            seed: report.seed,
            samples_requested: report.samples_requested,
            samples_solved: report.samples_solved,
            certified_selection: report.certified_selection.as_deref().map(|s| vertices(space, s)),
            sufficient_search_complete: report.sufficient_search_complete,
            counterexample: report.counterexample.as_deref().map(format_vector),
            co_chebyshev_on_samples: report.co_chebyshev_on_samples,
            note,
        }
    }
}

#[derive(Serialize)]
pub struct PairOutput {
    pub u: Vector,
    pub v: Vector,
}

#[derive(Serialize)]
pub struct NamedWitnessOutput {
    pub pair: usize,
    pub negated: bool,
    pub point: Vector,
    pub verified: bool,
}

impl From<&NamedWitness> for NamedWitnessOutput {
    fn from(w: &NamedWitness) -> Self {
        Self { pair: w.pair, negated: w.negated, point: format_vector(&w.point), verified: w.verified }
    }
}

#[derive(Serialize)]
pub struct ExampleCoverage {
    pub vertex: Vector,
    pub block: Option<usize>,
    pub witness: Option<WitnessOutput>,
    pub named_witness: Option<NamedWitnessOutput>,
}

#[derive(Serialize)]
pub struct PaperExampleOutput {
    pub ambient_dim: usize,
    pub dual_vertices: usize,
    pub pairs: Vec<PairOutput>,
    pub dim: usize,
    pub strong: bool,
    pub anti: bool,
    pub covered: usize,
    pub total: usize,
    pub eps_min: String,
    pub eps_exact: bool,
    pub branches_agree: bool,
    pub named_witnesses_verified: bool,
    pub coverage: Vec<ExampleCoverage>,
}

impl PaperExampleOutput {
    pub fn new(run: &WorkedExample, pairs: Vec<PairOutput>) -> Self {
        let space = run.subspace.ambient();
        let coverage = run
            .strong
            .coverage
            .iter()
            .map(|entry| ExampleCoverage {
                vertex: format_vector(space.dual_vertex(entry.vertex)),
                block: space.vertex_block(entry.vertex),
                witness: entry.witness.as_ref().map(Into::into),
                named_witness: run.named_witnesses.iter().find(|w| w.vertex == entry.vertex).map(Into::into),
            })
            .collect();
        Self {
            ambient_dim: space.dim(),
            dual_vertices: space.num_dual_vertices(),
            pairs,
            dim: run.subspace.dim(),
            strong: run.strong.verdict,
            anti: run.orthogonal_direction.is_none(),
            covered: run.strong.covered(),
            total: run.strong.coverage.len(),
            eps_min: run.strong.threshold.value().to_string(),
            eps_exact: run.strong.threshold.is_exact(),
            branches_agree: run.strong.branches_agree,
            named_witnesses_verified: run.named_witnesses.iter().all(|w| w.verified),
            coverage,
        }
    }
}
