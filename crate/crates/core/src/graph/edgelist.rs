//! Plain edge lists: a header line with the order `n`, then one `u v` pair
//! per line. Blank lines and `#` comments are skipped.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        reason: reason.into(),
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| err(line, format!("`{token}` is not a vertex index")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing order line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| err(header_line, format!("`{header}` is not a vertex count")))?;
    let mut g = Graph::empty(n).map_err(|e| err(header_line, e.to_string()))?;
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(err(line, "expected exactly two vertex indices"));
        };
        let (u, v) = (parse_index(a, line)?, parse_index(b, line)?);
        if u >= n || v >= n {
            return Err(err(line, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        g.insert(u, v);
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = parse_edge_list("4\n0 1\n2 3").unwrap();
        assert_eq!(g, Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        assert!(matches!(parse_edge_list("2\n0 0"), Err(Error::EdgeList { line: 2, .. })));
        let dup = parse_edge_list("3\n0 1\n1 0").unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_edge_list(""), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("x"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("3\n0 3"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n0 a"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n\n0 1 2"), Err(Error::EdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list("0"), Err(Error::EdgeList { line: 1, .. })));
    }

    #[test]
    fn comments_and_round_trip() {
        let g = parse_edge_list("# star\n4\n0 1 # spoke\n0 2\n\n0 3\n").unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
