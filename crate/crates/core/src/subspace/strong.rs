//! Strong anti-coproximinality, decided two ways.
//!
//! Coverage: `Y` is strongly anti-coproximinal iff every dual vertex `x*` is
//! the whole support face `J_X(y)` of some `y ∈ Y`, i.e. the open condition
//! `x*(y) = 1, f(y) < 1 (f ≠ x*)` is feasible on `Y`.
//!
//! Threshold: `ε_min = min_{x ≠ 0} ρ(x)`, the smallest `ε` for which some
//! nonzero `x` has `Y ⊥_B^ε x`. `Y` is strongly anti-coproximinal iff
//! `ε_min = 1`. The minimum is taken facet by facet of `B_X` (one norming
//! vertex per antipodal pair, which fixes `‖x‖ = 1` linearly) and over the
//! per-facet choices of which extensions witness `min ≤ t` and `max ≥ -t`.

use num_traits::{One, Zero};

use super::{rho, Limits, Subspace, THRESHOLD_MAX_DIM, THRESHOLD_MAX_VERTICES};
use crate::error::Result;
use crate::exactlp::{lp_solve, strict_feasible, ConditionKind, LinearCondition, LinearProgram, LpOutcome, Rational};
use crate::sampling::RationalSampler;

#[derive(Clone, Debug, PartialEq)]
pub struct CoverageWitness {
    pub coefficients: Vec<Rational>,
    pub point: Vec<Rational>,
    /// Exact gap `1 - max_{f ≠ x*} f(y)` at the returned point (capped at 1).
    pub margin: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverageEntry {
    pub vertex: usize,
    /// `None` when the vertex is blocking: no `y ∈ Y` has `J_X(y) = {x*}`.
    pub witness: Option<CoverageWitness>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Threshold {
    Exact {
        eps_min: Rational,
        /// A minimizing direction, reported when `ε_min < 1`.
        direction: Option<Vec<Rational>>,
    },
    /// Caps exceeded: the smallest `ρ` over sampled directions, an upper
    /// bound on `ε_min`.
    SampledUpperBound {
        bound: Rational,
        direction: Vec<Rational>,
        samples: usize,
    },
}

impl Threshold {
    pub fn is_exact(&self) -> bool {
        matches!(self, Threshold::Exact { .. })
    }

    pub fn value(&self) -> &Rational {
        match self {
            Threshold::Exact { eps_min, .. } => eps_min,
            Threshold::SampledUpperBound { bound, .. } => bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StrongReport {
    pub verdict: bool,
    pub coverage: Vec<CoverageEntry>,
    pub threshold: Threshold,
    /// Coverage verdict equals `ε_min = 1` (only the implication
    /// `verdict ⇒ bound = 1` is checkable for a sampled threshold).
    pub branches_agree: bool,
}

impl StrongReport {
    pub fn covered(&self) -> usize {
        self.coverage.iter().filter(|c| c.witness.is_some()).count()
    }

    pub fn blocking(&self) -> Vec<usize> {
        self.coverage.iter().filter(|c| c.witness.is_none()).map(|c| c.vertex).collect()
    }
}

/// Runs the open-face LP for every ambient dual vertex.
pub fn coverage(y: &Subspace) -> Result<Vec<CoverageEntry>> {
    let restrictions = &y.facets().restrictions;
    (0..restrictions.len())
        .map(|k| {
            let mut conditions = vec![LinearCondition::new(restrictions[k].clone(), ConditionKind::Eq, Rational::one())];
            conditions.extend(
                restrictions
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, g)| LinearCondition::new(g.clone(), ConditionKind::Lt, Rational::one())),
            );
            let witness = strict_feasible(y.dim(), &conditions)?.map(|sol| CoverageWitness {
                point: y.point(&sol.point),
                coefficients: sol.point,
                margin: sol.margin,
            });
            Ok(CoverageEntry { vertex: k, witness })
        })
        .collect()
}

struct ThresholdSearch<'a> {
    y: &'a Subspace,
    best: Rational,
    best_direction: Option<Vec<Rational>>,
    nodes: u64,
    limit: u64,
}

struct NodeCapReached;

impl ThresholdSearch<'_> {
    /// Branch and bound over facets of `B_Y`: each node's LP relaxes the
    /// constraints of the facets below it, so its optimum bounds every leaf.
    fn descend(&mut self, lp: &LinearProgram, facet: usize) -> std::result::Result<(), NodeCapReached> {
        let dim = self.y.ambient().dim();
        let extensions = &self.y.facets().facets[facet].extensions;
        let last = facet + 1 == self.y.facets().r();
        for &lo in extensions {
            for &hi in extensions {
                if self.best.is_zero() {
                    return Ok(());
                }
                if self.nodes >= self.limit {
                    return Err(NodeCapReached);
                }
                self.nodes += 1;
                let space = self.y.ambient();
                let mut node = lp.clone();
                // f⁻(x) - t ≤ 0 and f⁺(x) + t ≥ 0
                let mut row = space.dual_vertex(lo).to_vec();
                row.push(-Rational::one());
                node.le(row, Rational::zero());
                let mut row = space.dual_vertex(hi).to_vec();
                row.push(Rational::one());
                node.ge(row, Rational::zero());
                let LpOutcome::Optimal { point, value } = lp_solve(&node).expect("well-formed threshold LP") else {
                    unreachable!("threshold LP is feasible and bounded below by zero");
                };
                if value >= self.best {
                    continue;
                }
                if last {
                    self.best = value;
                    self.best_direction = Some(point[..dim].to_vec());
                } else {
                    self.descend(&node, facet + 1)?;
                }
            }
        }
        Ok(())
    }
}

fn exact_threshold(y: &Subspace, limits: &Limits) -> Option<Threshold> {
    let space = y.ambient();
    let n = space.dim();
    if n > THRESHOLD_MAX_DIM || space.num_dual_vertices() > THRESHOLD_MAX_VERTICES {
        return None;
    }
    let mut search = ThresholdSearch {
        y,
        best: Rational::one(),
        best_direction: None,
        nodes: 0,
        limit: limits.max_threshold_nodes,
    };
    for k in space.pair_representatives() {
        // Variables: x (free), t ≥ 0; minimize t on the facet of B_X normed by f_k.
        let mut lp = LinearProgram::new(n + 1);
        lp.nonnegative(n);
        let mut objective = vec![Rational::zero(); n + 1];
        objective[n] = Rational::one();
        lp.minimize(objective);
        let mut row = space.dual_vertex(k).to_vec();
        row.push(Rational::zero());
        lp.equal(row, Rational::one());
        for j in 0..space.num_dual_vertices() {
            if j == k || j == space.antipode(k) {
                continue;
            }
            let mut row = space.dual_vertex(j).to_vec();
            row.push(Rational::zero());
            lp.le(row, Rational::one());
        }
        if search.descend(&lp, 0).is_err() {
            return None;
        }
    }
    let direction = if search.best < Rational::one() { search.best_direction } else { None };
    Some(Threshold::Exact { eps_min: search.best, direction })
}

fn sampled_threshold(y: &Subspace, limits: &Limits) -> Result<Threshold> {
    let mut sampler = RationalSampler::new(0);
    let n = y.ambient().dim();
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for _ in 0..limits.fallback_samples.max(1) {
        let x = sampler.nonzero_vector(n);
        let value = rho(y, &x)?;
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, x));
        }
    }
    let (bound, direction) = best.expect("at least one sample");
    Ok(Threshold::SampledUpperBound { bound, direction, samples: limits.fallback_samples.max(1) })
}

/// `ε_min = min_{x ≠ 0} ρ(x)`, exactly when within caps, otherwise a sampled
/// upper bound.
pub fn epsilon_threshold(y: &Subspace, limits: &Limits) -> Result<Threshold> {
    y.require_proper()?;
    match exact_threshold(y, limits) {
        Some(t) => Ok(t),
        None => sampled_threshold(y, limits),
    }
}

/// Decides strong anti-coproximinality by coverage and cross-checks it
/// against the exact `ε`-threshold.
pub fn strong_report(y: &Subspace, limits: &Limits) -> Result<StrongReport> {
    y.require_proper()?;
    let coverage = coverage(y)?;
    let verdict = coverage.iter().all(|c| c.witness.is_some());
    let threshold = epsilon_threshold(y, limits)?;
    let at_one = threshold.value().is_one();
    let branches_agree = match &threshold {
        Threshold::Exact { .. } => verdict == at_one,
        Threshold::SampledUpperBound { .. } => !verdict || at_one,
    };
    Ok(StrongReport { verdict, coverage, threshold, branches_agree })
}
