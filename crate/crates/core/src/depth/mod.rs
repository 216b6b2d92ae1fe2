//! Degree-wise local cohomology of monomial quotients and the depth oracles.

mod betti;
mod engine;
mod scan;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graph::{maximal_independent_sets, Graph};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::SimplicialComplex;

pub use betti::betti_depth_crosscheck;
pub use engine::{depth_power, depth_sequence, DepthEngine, DepthSequence};
pub use scan::depth_bruteforce;

/// An integer degree `α ∈ ℤ^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn new(entries: Vec<i64>) -> Self {
        DegreeVector(entries)
    }

    pub fn zero(r: usize) -> Self {
        DegreeVector(vec![0; r])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `G_α`, the coordinates with negative entries.
    pub fn negative_support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] < 0).collect()
    }

    /// Monomial with the exponents `max(α_i, 0)`.
    pub fn positive_part(&self) -> Monomial {
        Monomial::new(self.0.iter().map(|&a| a.max(0) as u32).collect())
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Inclusive per-coordinate bounds of a degree box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScanBox(pub Vec<[i64; 2]>);

impl ScanBox {
    pub(crate) fn from_rho(rho: &[u32]) -> Self {
        ScanBox(rho.iter().map(|&p| [-1, i64::from(p) - 1]).collect())
    }

    pub fn cells(&self) -> usize {
        self.0
            .iter()
            .map(|[lo, hi]| (hi - lo + 1).max(0) as usize)
            .fold(1usize, usize::saturating_mul)
    }
}

/// A depth value with a nonvanishing local cohomology degree proving it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthCertificate {
    pub depth: usize,
    pub witness_i: usize,
    pub witness_alpha: DegreeVector,
    pub homology_dim: usize,
    pub scan_box: ScanBox,
}

/// `Δ_α(I)`, computed face by face from the localization description.
pub fn takayama_complex(ideal: &MonomialIdeal, alpha: &DegreeVector, caps: &Caps) -> Result<SimplicialComplex> {
    let r = ideal.nvars();
    if alpha.len() != r {
        return Err(Error::DimensionMismatch { left: r, right: alpha.len() });
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidIdeal("expected a nonzero proper ideal".into()));
    }
    Caps::check("variables", r, caps.max_vars)?;
    let neg = alpha.negative_support();
    let universe: Vec<usize> = (0..r).filter(|i| !neg.contains(i)).collect();
    let point = alpha.positive_part();
    let mut faces = Vec::new();
    for mask in 0u64..1 << universe.len() {
        let face: Vec<usize> = (0..universe.len()).filter(|&b| mask >> b & 1 == 1).map(|b| universe[b]).collect();
        let mut inverted = face.clone();
        inverted.extend_from_slice(&neg);
        if !ideal.localize(&inverted).contains(&point) {
            faces.push(face);
        }
    }
    SimplicialComplex::from_facets(&universe, &faces)
}

/// `Δ_α(I(G)^n)` for bipartite `G`, as the maximal independent sets whose
/// complement has `α`-weight at most `n − 1`.
pub fn bipartite_power_complex(g: &Graph, alpha: &DegreeVector, n: usize, caps: &Caps) -> Result<SimplicialComplex> {
    let r = g.vertex_count();
    if alpha.len() != r {
        return Err(Error::DimensionMismatch { left: r, right: alpha.len() });
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    if let Some(i) = alpha.entries().iter().position(|&a| a < 0) {
        return Err(Error::NegativeDegree(i));
    }
    let facets: Vec<Vec<usize>> = maximal_independent_sets(g, caps)?
        .into_iter()
        .filter(|f| complement_weight(f, alpha.entries()) < n as i64)
        .collect();
    let universe: Vec<usize> = (0..r).collect();
    SimplicialComplex::from_facets(&universe, &facets)
}

pub(crate) fn complement_weight(set: &[usize], alpha: &[i64]) -> i64 {
    (0..alpha.len()).filter(|i| !set.contains(i)).map(|i| alpha[i]).sum()
}
