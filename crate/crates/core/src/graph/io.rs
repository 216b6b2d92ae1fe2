use super::Graph;
use crate::{Error, Result};

/// Largest vertex label accepted from text input.
pub const MAX_LABEL: usize = 1 << 20;

/// Parses the edge-list text format.
///
/// One edge `u v` per line (1-based labels, whitespace separated), `#` starts
/// a comment, and an optional `r=<n>` line fixes the vertex count. Without a
/// header the vertex count is the largest label.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Parse { line: line_no, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('r') {
            let value = rest
                .trim_start()
                .strip_prefix('=')
                .ok_or_else(|| err(format!("expected `r=<n>`, found `{line}`")))?;
            if declared.is_some() {
                return Err(err("duplicate vertex-count header".into()));
            }
            let r = parse_label(value.trim()).map_err(err)?;
            declared = Some(r);
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected two vertex labels, found `{line}`")));
        };
        let u = parse_label(a).map_err(err)?;
        let v = parse_label(b).map_err(err)?;
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no edges".into(),
        });
    }
    let r = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0));
    Graph::new(r, &edges)
}

fn parse_label(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("`{s}` is not a vertex label"))?;
    if n > MAX_LABEL {
        return Err(format!("label {n} exceeds {MAX_LABEL}"));
    }
    Ok(n)
}

/// Renders a graph in the text format accepted by [`parse_graph`].
pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("r={}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_header() {
        let g = parse_graph("# square\nr=4\n1 2\n2 3 # side\n3 4\n\n4 1\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
    }

    #[test]
    fn vertex_count_defaults_to_max_label() {
        let g = parse_graph("1 2\n3 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("1 2 3"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("1 x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("r=2\nr=2\n1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("rx\n1 2"), Err(Error::Parse { .. })));
        assert_eq!(parse_graph("r=3\n1 2"), Err(Error::IsolatedVertex(3)));
        assert_eq!(parse_graph("2 2"), Err(Error::LoopEdge(2)));
        assert!(matches!(parse_graph("1 99999999999"), Err(Error::Parse { .. })));
    }
}
