//! Closed forms, bounds and the oracle for the index of depth stability.

mod witness;

use serde::{Deserialize, Serialize};

use crate::config::{Caps, OracleConfig};
use crate::depth::DepthEngine;
use crate::error::{Error, Result};
use crate::graph::{cycle_profile, CycleClass, CycleProfile, Graph};

pub use witness::{mu_witness, unicyclic_bipartite_witness, WitnessAlpha};

/// Which closed form produced a component value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Tree,
    OddCycle,
    EvenCycle,
    FourCycle,
    FourCycleAdjacentDegreeTwo,
    FourCycleRemaining,
    /// Upper bound only.
    Bound,
    /// Computed by the depth oracle.
    Oracle,
}

impl Rule {
    /// Closed forms stated without a full proof.
    pub fn is_unproven(self) -> bool {
        matches!(self, Rule::FourCycleRemaining)
    }
}

/// A closed-form component value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub value: usize,
    pub exact: bool,
    pub rule: Rule,
}

pub fn dstab_tree(g: &Graph) -> Result<usize> {
    if !g.is_connected() || g.edge_count() + 1 != g.vertex_count() {
        return Err(Error::NotTree);
    }
    Ok(g.vertex_count() - g.leaf_edge_count())
}

pub fn dstab_unicyclic(g: &Graph, caps: &Caps) -> Result<ClosedForm> {
    if !g.is_connected() || g.edge_count() != g.vertex_count() {
        return Err(Error::NotUnicyclic);
    }
    let profile = cycle_profile(g, caps)?;
    let cycle = profile.unique_cycle.as_ref().ok_or(Error::NotUnicyclic)?;
    let base = g.vertex_count() - g.leaf_edge_count();
    let len = cycle.len();
    let (value, rule) = if len % 2 == 1 {
        (base + 1 - len.div_ceil(2), Rule::OddCycle)
    } else if len >= 6 {
        (base + 1 - len / 2, Rule::EvenCycle)
    } else if g.vertex_count() == 4 {
        (1, Rule::FourCycle)
    } else {
        let two: Vec<usize> = cycle.iter().copied().filter(|&v| g.degree(v) == 2).collect();
        let adjacent = two.iter().any(|&u| two.iter().any(|&v| g.has_edge(u, v)));
        if adjacent {
            (base - 2, Rule::FourCycleAdjacentDegreeTwo)
        } else {
            (base - 1, Rule::FourCycleRemaining)
        }
    };
    Ok(ClosedForm { value, exact: true, rule })
}

/// Number of bipartite components, the eventual depth of `R/I(G)^n`.
pub fn depth_limit(g: &Graph) -> usize {
    g.decompose().s()
}

/// `υ − ε₀ − k + 1` for a connected graph with cycle profile `profile`.
fn component_bound(g: &Graph, profile: &CycleProfile) -> usize {
    g.vertex_count() - g.leaf_edge_count() + 1 - profile.k()
}

/// Sum of the component bounds, less `p − 1`.
pub fn mt_bound(g: &Graph, caps: &Caps) -> Result<usize> {
    let dec = g.decompose();
    let mut total = 0;
    for c in &dec.components {
        let h = g.induced(&c.vertices)?;
        total += component_bound(&h, &cycle_profile(&h, caps)?);
    }
    Ok(total + 1 - dec.p())
}

/// Per-component part of a [`DstabReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub class: CycleClass,
    pub bipartite: bool,
    pub k: usize,
    pub upsilon: usize,
    pub epsilon0: usize,
    pub value: usize,
    pub bound: usize,
    pub exact: bool,
    pub rule: Rule,
    /// For nonbipartite general components, the first power found to have
    /// depth zero through a unicyclic spanning subgraph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_depth_zero: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DstabReport {
    pub value: usize,
    pub exact: bool,
    pub mt_bound: usize,
    pub s: usize,
    pub limit_depth: usize,
    pub components: Vec<ComponentReport>,
    pub witnesses: Vec<WitnessAlpha>,
    pub warnings: Vec<String>,
}

/// Which components [`dstab_formula`] hands to the oracle.
#[derive(Debug, Clone, Copy)]
pub enum Verify<'a> {
    Off,
    /// Only closed forms stated without a full proof.
    Unproven(&'a OracleConfig),
    /// Unproven closed forms and components that only have a bound.
    All(&'a OracleConfig),
}

/// Assembles the closed forms per component and composes them.
pub fn dstab_formula(g: &Graph, caps: &Caps, verify: Verify<'_>) -> Result<DstabReport> {
    let dec = g.decompose();
    let mut components = Vec::new();
    let mut witnesses = Vec::new();
    let mut warnings = Vec::new();
    for c in &dec.components {
        let h = g.induced(&c.vertices)?;
        let profile = cycle_profile(&h, caps)?;
        let bound = component_bound(&h, &profile);
        let mut cr = ComponentReport {
            vertices: c.vertices.clone(),
            class: profile.class,
            bipartite: c.is_bipartite(),
            k: profile.k(),
            upsilon: h.vertex_count(),
            epsilon0: h.leaf_edge_count(),
            value: bound,
            bound,
            exact: false,
            rule: Rule::Bound,
            certified_depth_zero: None,
        };
        match profile.class {
            CycleClass::Tree => {
                cr.value = dstab_tree(&h)?;
                cr.exact = true;
                cr.rule = Rule::Tree;
            }
            CycleClass::Unicyclic => {
                let cf = dstab_unicyclic(&h, caps)?;
                cr.value = cf.value;
                cr.exact = cf.exact;
                cr.rule = cf.rule;
            }
            CycleClass::General => {
                if !c.is_bipartite() {
                    if let Ok(w) = crate::assoc::nonbipartite_depth_zero_bound(&h, caps) {
                        cr.certified_depth_zero = Some(w.certified_n);
                    }
                }
            }
        }
        let oracle = match verify {
            Verify::All(cfg) if cr.rule == Rule::Bound => Some(cfg),
            Verify::All(cfg) | Verify::Unproven(cfg) if cr.rule.is_unproven() => Some(cfg),
            _ => None,
        };
        if let Some(cfg) = oracle {
            match dstab_oracle(&h, cfg) {
                Ok(v) if cr.rule == Rule::Bound => {
                    cr.value = v;
                    cr.exact = true;
                    cr.rule = Rule::Oracle;
                }
                Ok(v) if v != cr.value => {
                    warnings.push(format!(
                        "component {:?}: closed form {} disagrees with the oracle value {}",
                        crate::graph::labels(&c.vertices),
                        cr.value,
                        v
                    ));
                    cr.value = v;
                    cr.exact = false;
                    cr.rule = Rule::Oracle;
                }
                Ok(_) => {}
                Err(Error::TooLarge { what, got, cap }) => warnings.push(format!(
                    "component {:?} not verified: {what} = {got} exceeds {cap}",
                    crate::graph::labels(&c.vertices)
                )),
                Err(e) => return Err(e),
            }
        }
        if c.is_bipartite() {
            let mut w = mu_witness(&h, caps)?;
            w.relabel(&c.vertices);
            witnesses.push(w);
            if profile.class == CycleClass::Unicyclic {
                let mut w = unicyclic_bipartite_witness(&h, caps)?;
                w.relabel(&c.vertices);
                witnesses.push(w);
            }
        }
        components.push(cr);
    }
    let p = components.len();
    let value = components.iter().map(|c| c.value).sum::<usize>() + 1 - p;
    let mt = components.iter().map(|c| c.bound).sum::<usize>() + 1 - p;
    let s = dec.s();
    Ok(DstabReport {
        value,
        exact: components.iter().all(|c| c.exact),
        mt_bound: mt,
        s,
        limit_depth: s,
        components,
        witnesses,
        warnings,
    })
}

/// First power whose depth equals the number of bipartite components.
pub fn dstab_oracle(g: &Graph, config: &OracleConfig) -> Result<usize> {
    let bound = mt_bound(g, &config.caps)?;
    let s = depth_limit(g);
    let engine = DepthEngine::new(g, *config);
    for n in 1..=bound {
        if engine.depth_power(n)?.depth == s {
            return Ok(n);
        }
    }
    Err(Error::Internal(format!("depth did not reach {s} by the bound {bound}")))
}
