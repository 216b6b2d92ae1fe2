use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::io::MAX_LABEL;

/// Reads a facet list: one facet per line as 1-based labels separated by
/// spaces or commas, `-` for the empty facet, `#` starting a comment. An
/// optional `n=<m>` line fixes the universe to `1..=m`; otherwise it is the
/// set of labels used.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut universe: Option<usize> = None;
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(m) = line.strip_prefix("n=") {
            if universe.is_some() {
                return Err(Error::Parse { line: line_no, message: "duplicate n= header".into() });
            }
            let m: usize = m.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad vertex count `{}`", m.trim()),
            })?;
            if m > MAX_LABEL {
                return Err(Error::Parse { line: line_no, message: format!("vertex count {m} too large") });
            }
            universe = Some(m);
            continue;
        }
        if line == "-" {
            facets.push(Vec::new());
            continue;
        }
        let mut facet = Vec::new();
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let label: usize = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad label `{tok}`"),
            })?;
            if label == 0 || label > MAX_LABEL {
                return Err(Error::Parse { line: line_no, message: format!("label {label} out of range") });
            }
            facet.push(label - 1);
        }
        facets.push(facet);
    }
    let universe: Vec<usize> = match universe {
        Some(m) => (0..m).collect(),
        None => {
            let mut u: Vec<usize> = facets.iter().flatten().copied().collect();
            u.sort_unstable();
            u.dedup();
            u
        }
    };
    SimplicialComplex::from_facets(&universe, &facets).map_err(|e| match e {
        Error::FacetOutsideUniverse(v) => Error::FacetOutsideUniverse(v + 1),
        e => e,
    })
}
