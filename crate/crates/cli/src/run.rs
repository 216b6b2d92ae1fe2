use std::io::Read;
use std::path::Path;

use dstab_core::assoc::{ass_formula, cms_states};
use dstab_core::depth::{betti_depth_crosscheck, takayama_complex, DegreeVector, DepthEngine};
use dstab_core::graph::{cycle_profile, labels, maximal_independent_sets, parse_graph, Graph};
use dstab_core::monomial::{associated_primes_bruteforce, MonomialIdeal};
use dstab_core::simplicial::{parse_facets, SimplicialComplex};
use dstab_core::stability::{dstab_formula, dstab_oracle, mt_bound, Verify};
use dstab_core::{Caps, Error, OracleConfig};

use crate::args::{AssMethod, Command, DstabMethod, GlobalOpts};
use crate::report::{
    AnalyzeReport, AssOut, CertificateOut, ComponentInfo, DepthSeqOut, DstabOut, HomologyOut, Report,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                Error::TooLarge { .. } => 3,
                Error::Mismatch(_) => 4,
                Error::Internal(_) | Error::WitnessCheckFailed(_) | Error::NoFullState | Error::Overflow => 5,
                _ => 2,
            },
        }
    }
}

pub struct RunConfig {
    pub caps: Caps,
    pub oracle: OracleConfig,
    pub verify: bool,
    pub trace: bool,
}

impl RunConfig {
    pub fn from_opts(o: &GlobalOpts) -> Self {
        let caps = Caps {
            max_graph_vertices: o.max_r.max(16),
            max_vars: o.max_r,
            max_box_cells: o.max_box,
            max_power: o.max_power,
            ..Caps::default()
        };
        let oracle = OracleConfig { caps, field: o.field, threads: o.threads, bipartite_fast_path: false };
        RunConfig { caps, oracle, verify: o.verify, trace: o.trace }
    }

    fn trace(&self, value: serde_json::Value) {
        if self.trace {
            eprintln!("{value}");
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |e: std::io::Error| CliError::Io { path: path.display().to_string(), message: e.to_string() };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load_graph(path: &Path, cfg: &RunConfig) -> Result<Graph, CliError> {
    let g = parse_graph(&read_input(path)?)?;
    Caps::check("vertex count", g.vertex_count(), cfg.caps.max_graph_vertices)?;
    Ok(g)
}

pub fn run(cmd: &Command, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        Command::Analyze { file } => analyze(&load_graph(file, cfg)?, cfg).map(Report::Analyze),
        Command::Dstab { file, method } => dstab(&load_graph(file, cfg)?, *method, cfg).map(Report::Dstab),
        Command::DepthSeq { file, max } => depth_seq(&load_graph(file, cfg)?, *max, cfg).map(Report::DepthSeq),
        Command::Ass { file, power, method } => {
            ass(&load_graph(file, cfg)?, *power, *method, cfg).map(Report::Ass)
        }
        Command::Homology { file, graph, alpha, power } => {
            homology(file, *graph, alpha.as_deref(), *power, cfg).map(Report::Homology)
        }
    }
}

fn analyze(g: &Graph, cfg: &RunConfig) -> Result<AnalyzeReport, CliError> {
    let dec = g.decompose();
    let mut components = Vec::new();
    for c in &dec.components {
        let h = g.induced(&c.vertices)?;
        let profile = cycle_profile(&h, &cfg.caps)?;
        let global = |cycle: &Option<Vec<usize>>| {
            cycle.as_ref().map(|cy| cy.iter().map(|&v| c.vertices[v] + 1).collect::<Vec<_>>())
        };
        components.push(ComponentInfo {
            vertices: labels(&c.vertices),
            upsilon: h.vertex_count(),
            epsilon: h.edge_count(),
            epsilon0: h.leaf_edge_count(),
            bipartition: c.bipartition.as_ref().map(|b| [labels(&b.x), labels(&b.y)]),
            class: format!("{:?}", profile.class).to_lowercase(),
            k: profile.k(),
            longest_even: global(&profile.longest_even),
            longest_odd: global(&profile.longest_odd),
            bound: h.vertex_count() - h.leaf_edge_count() + 1 - profile.k(),
        });
    }
    Ok(AnalyzeReport {
        upsilon: g.vertex_count(),
        epsilon: g.edge_count(),
        epsilon0: g.leaf_edge_count(),
        p: dec.p(),
        s: dec.s(),
        t: dec.t(),
        mt_bound: mt_bound(g, &cfg.caps)?,
        components,
    })
}

fn dstab(g: &Graph, method: DstabMethod, cfg: &RunConfig) -> Result<DstabOut, CliError> {
    match method {
        DstabMethod::Formula => {
            let verify = if cfg.verify { Verify::All(&cfg.oracle) } else { Verify::Off };
            Ok(DstabOut::from_formula(&dstab_formula(g, &cfg.caps, verify)?, "formula"))
        }
        DstabMethod::Oracle => {
            let s = g.decompose().s();
            Ok(DstabOut {
                method: "oracle".into(),
                value: dstab_oracle(g, &cfg.oracle)?,
                mt_bound: mt_bound(g, &cfg.caps)?,
                s,
                limit_depth: s,
                exact: None,
                components: Vec::new(),
                witnesses: Vec::new(),
                warnings: Vec::new(),
                oracle: None,
                matches: None,
            })
        }
        DstabMethod::Both => {
            let rep = dstab_formula(g, &cfg.caps, Verify::Unproven(&cfg.oracle))?;
            let oracle = dstab_oracle(g, &cfg.oracle)?;
            if rep.exact && rep.value != oracle {
                return Err(Error::Mismatch(format!("formula {} but oracle {oracle}", rep.value)).into());
            }
            if oracle > rep.mt_bound {
                return Err(Error::Mismatch(format!("oracle {oracle} exceeds the bound {}", rep.mt_bound)).into());
            }
            let mut out = DstabOut::from_formula(&rep, "both");
            out.matches = Some(rep.value == oracle);
            out.oracle = Some(oracle);
            Ok(out)
        }
    }
}

fn depth_seq(g: &Graph, max: usize, cfg: &RunConfig) -> Result<DepthSeqOut, CliError> {
    let engine = DepthEngine::new(g, cfg.oracle);
    let mut certificates = Vec::new();
    let mut betti = Vec::new();
    for n in 1..=max {
        let cert = engine.depth_power(n)?;
        cfg.trace(serde_json::json!({ "n": n, "certificate": cert }));
        if cfg.verify {
            let b = betti_depth_crosscheck(&*engine.power(n)?, cfg.oracle.field, &cfg.caps)?;
            if b != cert.depth {
                return Err(Error::Mismatch(format!("power {n}: scan depth {} but Betti depth {b}", cert.depth)).into());
            }
            betti.push(b);
        }
        certificates.push(CertificateOut::new(n, &cert));
    }
    let s = g.decompose().s();
    let depths: Vec<usize> = certificates.iter().map(|c| c.depth).collect();
    let first_at_s = depths.iter().position(|&d| d == s).map(|i| i + 1);
    Ok(DepthSeqOut { depths, s, first_at_s, certificates, betti_depths: cfg.verify.then_some(betti) })
}

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| labels(s)).collect()
}

fn ass(g: &Graph, power: usize, method: AssMethod, cfg: &RunConfig) -> Result<AssOut, CliError> {
    Caps::check("power", power, cfg.caps.max_power)?;
    let r = g.vertex_count();
    let all: Vec<usize> = (1..=r).collect();
    let formula = || -> Result<Vec<Vec<usize>>, CliError> {
        if cfg.trace {
            if let Ok(states) = cms_states(g, power, &cfg.caps) {
                for s in states {
                    cfg.trace(serde_json::json!({
                        "n": s.n,
                        "red": labels(&s.red),
                        "blue": labels(&s.blue),
                        "d": s.d.to_string(),
                    }));
                }
            }
        }
        Ok(one_based(&ass_formula(g, power, &cfg.caps)?.primes))
    };
    let brute = || -> Result<Vec<Vec<usize>>, CliError> {
        let ideal = MonomialIdeal::edge_ideal(g).power(power.max(1))?;
        Ok(one_based(&associated_primes_bruteforce(&ideal, &cfg.caps)?))
    };
    let (name, primes, bruteforce) = match method {
        AssMethod::Formula => ("formula", formula()?, None),
        AssMethod::Bruteforce => ("bruteforce", brute()?, None),
        AssMethod::Both => ("both", formula()?, Some(brute()?)),
    };
    let matches = bruteforce.as_ref().map(|b| *b == primes);
    if matches == Some(false) {
        return Err(Error::Mismatch("formula and brute-force associated primes differ".into()).into());
    }
    Ok(AssOut {
        power,
        method: name.into(),
        contains_maximal: primes.contains(&all),
        primes,
        bruteforce,
        matches,
    })
}

fn parse_alpha(text: &str, r: usize) -> Result<DegreeVector, CliError> {
    let entries: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let entries = entries.map_err(|e| Error::Parse { line: 0, message: format!("bad degree `{text}`: {e}") })?;
    if entries.len() != r {
        return Err(Error::DimensionMismatch { left: r, right: entries.len() }.into());
    }
    Ok(DegreeVector::new(entries))
}

fn homology(
    file: &Path,
    graph: bool,
    alpha: Option<&str>,
    power: usize,
    cfg: &RunConfig,
) -> Result<HomologyOut, CliError> {
    let complex = if graph {
        let g = load_graph(file, cfg)?;
        match alpha {
            Some(a) => {
                Caps::check("power", power, cfg.caps.max_power)?;
                let alpha = parse_alpha(a, g.vertex_count())?;
                let ideal = MonomialIdeal::edge_ideal(&g).power(power.max(1))?;
                takayama_complex(&ideal, &alpha, &cfg.caps)?
            }
            None => {
                let universe: Vec<usize> = (0..g.vertex_count()).collect();
                SimplicialComplex::from_facets(&universe, &maximal_independent_sets(&g, &cfg.caps)?)?
            }
        }
    } else {
        parse_facets(&read_input(file)?)?
    };
    let dims = complex.reduced_homology_dims(cfg.oracle.field, &cfg.caps)?;
    Ok(HomologyOut {
        field: cfg.oracle.field.to_string(),
        facets: one_based(complex.facets()),
        dims: dims.0,
        cone_apex: complex.is_cone().map(|v| v + 1),
    })
}
