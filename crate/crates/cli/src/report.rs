//! Report types as printed, with 1-based vertex labels.

use std::fmt::Write as _;

use dstab_core::depth::DepthCertificate;
use dstab_core::graph::labels;
use dstab_core::stability::{ComponentReport, DstabReport, Rule, WitnessAlpha};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub upsilon: usize,
    pub epsilon: usize,
    pub epsilon0: usize,
    pub p: usize,
    pub s: usize,
    pub t: usize,
    pub mt_bound: usize,
    pub components: Vec<ComponentInfo>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentInfo {
    pub vertices: Vec<usize>,
    pub upsilon: usize,
    pub epsilon: usize,
    pub epsilon0: usize,
    pub bipartition: Option<[Vec<usize>; 2]>,
    pub class: String,
    pub k: usize,
    pub longest_even: Option<Vec<usize>>,
    pub longest_odd: Option<Vec<usize>>,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentOut {
    pub vertices: Vec<usize>,
    pub class: String,
    pub bipartite: bool,
    pub k: usize,
    pub upsilon: usize,
    pub epsilon0: usize,
    pub value: usize,
    pub bound: usize,
    pub exact: bool,
    pub rule: Rule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_depth_zero: Option<usize>,
}

impl From<&ComponentReport> for ComponentOut {
    fn from(c: &ComponentReport) -> Self {
        ComponentOut {
            vertices: labels(&c.vertices),
            class: format!("{:?}", c.class).to_lowercase(),
            bipartite: c.bipartite,
            k: c.k,
            upsilon: c.upsilon,
            epsilon0: c.epsilon0,
            value: c.value,
            bound: c.bound,
            exact: c.exact,
            rule: c.rule,
            certified_depth_zero: c.certified_depth_zero,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub kind: String,
    pub vertices: Vec<usize>,
    pub alpha: Vec<i64>,
    pub n: usize,
    pub facets: [Vec<usize>; 2],
}

impl From<&WitnessAlpha> for WitnessOut {
    fn from(w: &WitnessAlpha) -> Self {
        let kind = serde_json::to_value(w.kind)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        WitnessOut {
            kind,
            vertices: labels(&w.vertices),
            alpha: w.alpha.entries().to_vec(),
            n: w.n,
            facets: [labels(&w.x), labels(&w.y)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DstabOut {
    pub method: String,
    pub value: usize,
    pub mt_bound: usize,
    pub s: usize,
    pub limit_depth: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentOut>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessOut>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
    #[serde(default, rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

impl DstabOut {
    pub fn from_formula(rep: &DstabReport, method: &str) -> Self {
        DstabOut {
            method: method.to_owned(),
            value: rep.value,
            mt_bound: rep.mt_bound,
            s: rep.s,
            limit_depth: rep.limit_depth,
            exact: Some(rep.exact),
            components: rep.components.iter().map(ComponentOut::from).collect(),
            witnesses: rep.witnesses.iter().map(WitnessOut::from).collect(),
            warnings: rep.warnings.clone(),
            oracle: None,
            matches: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateOut {
    pub n: usize,
    pub depth: usize,
    pub witness_i: usize,
    pub witness_alpha: Vec<i64>,
    pub homology_dim: usize,
    pub scan_box: Vec<[i64; 2]>,
}

impl CertificateOut {
    pub fn new(n: usize, c: &DepthCertificate) -> Self {
        CertificateOut {
            n,
            depth: c.depth,
            witness_i: c.witness_i,
            witness_alpha: c.witness_alpha.entries().to_vec(),
            homology_dim: c.homology_dim,
            scan_box: c.scan_box.0.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthSeqOut {
    pub depths: Vec<usize>,
    pub s: usize,
    pub first_at_s: Option<usize>,
    pub certificates: Vec<CertificateOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti_depths: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssOut {
    pub power: usize,
    pub method: String,
    pub primes: Vec<Vec<usize>>,
    pub contains_maximal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bruteforce: Option<Vec<Vec<usize>>>,
    #[serde(default, rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyOut {
    pub field: String,
    pub facets: Vec<Vec<usize>>,
    /// Entry `j` is the reduced homology in degree `j − 1`.
    pub dims: Vec<usize>,
    pub cone_apex: Option<usize>,
}

/// Any report the binary prints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Analyze(AnalyzeReport),
    Dstab(DstabOut),
    DepthSeq(DepthSeqOut),
    Ass(AssOut),
    Homology(HomologyOut),
}

fn set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn sets(vs: &[Vec<usize>]) -> String {
    vs.iter().map(|v| set(v)).collect::<Vec<_>>().join(" ")
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Analyze(a) => {
                let _ = writeln!(out, "vertices {}  edges {}  leaf edges {}", a.upsilon, a.epsilon, a.epsilon0);
                let _ = writeln!(out, "components {}  bipartite {}  nonbipartite {}", a.p, a.s, a.t);
                let _ = writeln!(out, "mt bound {}", a.mt_bound);
                for (i, c) in a.components.iter().enumerate() {
                    let _ = writeln!(out, "component {} {} {} k={} bound={}", i + 1, set(&c.vertices), c.class, c.k, c.bound);
                    if let Some([x, y]) = &c.bipartition {
                        let _ = writeln!(out, "  bipartition {} | {}", set(x), set(y));
                    }
                    if let Some(o) = &c.longest_odd {
                        let _ = writeln!(out, "  longest odd cycle {}", set(o));
                    }
                    if let Some(e) = &c.longest_even {
                        let _ = writeln!(out, "  longest even cycle {}", set(e));
                    }
                }
            }
            Report::Dstab(d) => {
                let exact = match d.exact {
                    Some(true) => " (exact)",
                    Some(false) => " (upper bound)",
                    None => "",
                };
                let _ = writeln!(out, "dstab {}{exact} [{}]", d.value, d.method);
                if let Some(o) = d.oracle {
                    let _ = writeln!(out, "oracle {o}  match {}", d.matches.unwrap_or(false));
                }
                let _ = writeln!(out, "mt bound {}  limit depth {}", d.mt_bound, d.limit_depth);
                for c in &d.components {
                    let _ = writeln!(out, "component {} value {} bound {} {}", set(&c.vertices), c.value, c.bound, rule_name(c.rule));
                }
                for w in &d.witnesses {
                    let _ = writeln!(out, "witness {} n={} alpha={:?}", w.kind, w.n, w.alpha);
                }
                for w in &d.warnings {
                    let _ = writeln!(out, "warning: {w}");
                }
            }
            Report::DepthSeq(d) => {
                let _ = writeln!(out, "depths {:?}", d.depths);
                let _ = writeln!(out, "s {}  first at s {}", d.s, d.first_at_s.map_or("-".into(), |n| n.to_string()));
                for c in &d.certificates {
                    let _ = writeln!(out, "n={} depth {} witness alpha {:?} dim {}", c.n, c.depth, c.witness_alpha, c.homology_dim);
                }
                if let Some(b) = &d.betti_depths {
                    let _ = writeln!(out, "betti depths {b:?}");
                }
            }
            Report::Ass(a) => {
                let _ = writeln!(out, "ass of power {} [{}]", a.power, a.method);
                let _ = writeln!(out, "{}", sets(&a.primes));
                let _ = writeln!(out, "maximal ideal {}", if a.contains_maximal { "present" } else { "absent" });
                if let Some(m) = a.matches {
                    let _ = writeln!(out, "match {m}");
                }
            }
            Report::Homology(h) => {
                let _ = writeln!(out, "complex <{}> over {}", sets(&h.facets), h.field);
                for (j, d) in h.dims.iter().enumerate() {
                    let _ = writeln!(out, "H~_{} = {d}", j as isize - 1);
                }
                if let Some(v) = h.cone_apex {
                    let _ = writeln!(out, "cone with apex {v}");
                }
            }
        }
        out
    }
}

fn rule_name(rule: Rule) -> String {
    serde_json::to_value(rule).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}
