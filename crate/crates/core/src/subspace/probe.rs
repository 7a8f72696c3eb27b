//! Coproximinality: a certified sufficient test plus a seeded sampling probe.
//!
//! If one extension `f_i ∈ V_i` per facet can be chosen with
//! `dim span{f_i} = dim Y`, the selection with image `{±f_i}` has a
//! complement of `Y` as annihilator and every `x` decomposes, so `Y` is
//! coproximinal. Otherwise the residual case is undecided and only probed.

use super::{best_coapproximation, Limits, Subspace};
use crate::error::Result;
use crate::exactlp::{rank, Rational};
use crate::sampling::RationalSampler;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeStatus {
    /// The sufficient test succeeded.
    Certified,
    /// A sampled `x` has no best coapproximation.
    Counterexample,
    /// Every sample was solved; not a proof.
    NoCounterexample,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeReport {
    pub status: ProbeStatus,
    pub seed: u64,
    pub samples_requested: usize,
    pub samples_solved: usize,
    /// Per facet, the chosen dual vertex index when the sufficient test succeeded.
    pub certified_selection: Option<Vec<usize>>,
    /// False when the sufficient search hit the pattern cap before finishing.
    pub sufficient_search_complete: bool,
    pub counterexample: Option<Vec<Rational>>,
    /// Whether every solved sample had a unique best coapproximation.
    pub co_chebyshev_on_samples: bool,
}

struct SelectionSearch<'a> {
    y: &'a Subspace,
    chosen: Vec<usize>,
    rows: Vec<Vec<Rational>>,
    visited: u64,
    limit: u64,
}

impl SelectionSearch<'_> {
    /// Depth-first over per-facet extension choices; the span only grows, so a
    /// prefix of rank above `dim Y` is pruned.
    fn descend(&mut self, facet: usize) -> Option<bool> {
        if facet == self.y.facets().r() {
            return Some(true);
        }
        for &k in &self.y.facets().facets[facet].extensions {
            if self.visited >= self.limit {
                return None;
            }
            self.visited += 1;
            self.rows.push(self.y.ambient().dual_vertex(k).to_vec());
            self.chosen.push(k);
            if rank(&self.rows) <= self.y.dim() && self.descend(facet + 1)? {
                return Some(true);
            }
            self.rows.pop();
            self.chosen.pop();
        }
        Some(false)
    }
}

/// One extension per facet spanning a `dim Y`-dimensional space.
///
/// `None` when the pattern cap cut the search off; `Some(None)` when no such
/// choice exists.
pub fn sufficient_selection(y: &Subspace, limits: &Limits) -> Option<Option<Vec<usize>>> {
    let mut search = SelectionSearch { y, chosen: Vec::new(), rows: Vec::new(), visited: 0, limit: limits.max_patterns };
    match search.descend(0) {
        None => None,
        Some(true) => Some(Some(search.chosen)),
        Some(false) => Some(None),
    }
}

/// Runs the sufficient test, then decides `sample_count` seeded random
/// points exactly.
pub fn coproximinal_probe(y: &Subspace, sample_count: usize, seed: u64, limits: &Limits) -> Result<ProbeReport> {
    y.require_proper()?;
    let search = sufficient_selection(y, limits);
    let sufficient_search_complete = search.is_some();
    let certified_selection = search.flatten();

    let mut sampler = RationalSampler::new(seed);
    let n = y.ambient().dim();
    let mut samples_solved = 0;
    let mut counterexample = None;
    let mut co_chebyshev_on_samples = true;
    for _ in 0..sample_count {
        let x = sampler.vector(n);
        match best_coapproximation(y, &x)? {
            Some(sol) => {
                samples_solved += 1;
                co_chebyshev_on_samples &= sol.unique;
            }
            None => {
                counterexample = Some(x);
                break;
            }
        }
    }
    debug_assert!(certified_selection.is_none() || counterexample.is_none());
    let status = if certified_selection.is_some() {
        ProbeStatus::Certified
    } else if counterexample.is_some() {
        ProbeStatus::Counterexample
    } else {
        ProbeStatus::NoCounterexample
    };
    Ok(ProbeReport {
        status,
        seed,
        samples_requested: sample_count,
        samples_solved,
        certified_selection,
        sufficient_search_complete,
        counterexample,
        co_chebyshev_on_samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::int;
    use crate::space::PolyhedralNormSpace;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn axis_of_linf2_is_certified() {
        let y = Subspace::new(PolyhedralNormSpace::linf(2).unwrap(), vec![v(&[1, 0])]).unwrap();
        let report = coproximinal_probe(&y, 50, 1, &Limits::default()).unwrap();
        assert_eq!(report.status, ProbeStatus::Certified);
        assert_eq!(report.samples_solved, 50);
    }

    #[test]
    fn diagonal_of_linf2_is_not_co_chebyshev() {
        let y = Subspace::new(PolyhedralNormSpace::linf(2).unwrap(), vec![v(&[1, 1])]).unwrap();
        let report = coproximinal_probe(&y, 100, 3, &Limits::default()).unwrap();
        assert_eq!(report.samples_solved, 100);
        assert!(report.counterexample.is_none());
        assert!(!report.co_chebyshev_on_samples);
    }

    #[test]
    fn anti_coproximinal_subspace_yields_counterexample() {
        let y = Subspace::new(PolyhedralNormSpace::linf(3).unwrap(), vec![v(&[1, -1, 0]), v(&[0, 1, -1])]).unwrap();
        let report = coproximinal_probe(&y, 20, 9, &Limits::default()).unwrap();
        assert_eq!(report.status, ProbeStatus::Counterexample);
        assert!(!y.contains(report.counterexample.as_ref().unwrap()));
    }

    #[test]
    fn same_seed_same_report() {
        let y = Subspace::new(PolyhedralNormSpace::l1(3).unwrap(), vec![v(&[1, 2, 0])]).unwrap();
        let a = coproximinal_probe(&y, 30, 11, &Limits::default()).unwrap();
        let b = coproximinal_probe(&y, 30, 11, &Limits::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.seed, 11);
    }
}
