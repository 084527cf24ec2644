//! Human-friendly edge-list text format: first non-comment line is `n`,
//! then one `u v` pair per line. `#` starts a comment, blank lines allowed.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write as _;

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        reason: reason.into(),
    }
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (&n, fields.as_slice()) {
            (None, [count]) => {
                n = Some(
                    count
                        .parse()
                        .map_err(|_| err(line_no, format!("expected vertex count, got {count:?}")))?,
                );
            }
            (None, _) => return Err(err(line_no, "expected a single vertex count on the first line")),
            (Some(_), [u, v]) => {
                let u = u
                    .parse()
                    .map_err(|_| err(line_no, format!("bad endpoint {u:?}")))?;
                let v = v
                    .parse()
                    .map_err(|_| err(line_no, format!("bad endpoint {v:?}")))?;
                edges.push(((u, v), line_no));
            }
            (Some(_), _) => return Err(err(line_no, "expected an edge as two endpoints")),
        }
    }
    let n = n.ok_or_else(|| err(1, "missing vertex count"))?;
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(e, _)| e).collect();
    Graph::from_edge_list(n, &pairs).map_err(|e| match e {
        Error::VertexOutOfRange { vertex, .. } => {
            let line = edges
                .iter()
                .find(|&&((u, v), _)| u == vertex || v == vertex)
                .map(|&(_, l)| l)
                .unwrap_or(1);
            err(line, format!("endpoint {vertex} out of range for n={n}"))
        }
        Error::LoopEdge(v) => {
            let line = edges
                .iter()
                .find(|&&((u, w), _)| u == v && w == v)
                .map(|&(_, l)| l)
                .unwrap_or(1);
            err(line, format!("loop edge at vertex {v}"))
        }
        other => other,
    })
}

pub fn render(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse("# pentagon\n5\n0 1\n1 2\n2 3\n3 4\n4 0 # closing edge\n").unwrap();
        assert_eq!(g, Graph::cycle(5));
    }

    #[test]
    fn round_trips() {
        let g = Graph::complete_multipartite(2, 3).unwrap();
        assert_eq!(parse(&render(&g)).unwrap(), g);
    }

    #[test]
    fn errors_name_the_line() {
        match parse("3\n0 1\n0 7\n") {
            Err(Error::EdgeList { line: 3, .. }) => {}
            other => panic!("expected line-3 error, got {other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("3\n0 1 2\n").is_err());
    }
}
