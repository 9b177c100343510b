//! Whitespace-separated edge lists.
//!
//! ```text
//! # comment
//! undirected 6      <- optional header: orientation and optional node count
//! 0 1
//! 1 2               <- "u v", 0-based ids
//! ```
//!
//! Without a node count, ids are compacted to `0..k` in increasing order and
//! the original ids are kept in [`ParsedGraph::node_ids`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::ParsedGraph;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Tokens of a line with their 1-based columns, comment stripped.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in content.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(idx),
            (true, Some(s)) => {
                out.push((s + 1, &content[s..idx]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &content[s..]));
    }
    out
}

fn parse_id(line: usize, column: usize, tok: &str) -> Result<u64> {
    if tok.starts_with('-') && tok[1..].chars().all(|c| c.is_ascii_digit()) && tok.len() > 1 {
        return Err(parse_err(line, column, format!("negative node id '{tok}'")));
    }
    tok.parse::<u64>()
        .map_err(|_| parse_err(line, column, format!("expected a node id, found '{tok}'")))
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    parse_edge_list_as(text, false)
}

/// `directed_default` applies when the file has no orientation header.
pub fn parse_edge_list_as(text: &str, directed_default: bool) -> Result<ParsedGraph> {
    let mut directed = directed_default;
    let mut declared_n: Option<usize> = None;
    let mut seen_content = false;
    let mut raw: Vec<(usize, u64, u64)> = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        let first = toks[0].1;
        if !seen_content && (first == "directed" || first == "undirected") {
            seen_content = true;
            directed = first == "directed";
            match toks.len() {
                1 => {}
                2 => {
                    let (col, tok) = toks[1];
                    let n = tok
                        .parse::<usize>()
                        .map_err(|_| parse_err(lineno, col, format!("expected a node count, found '{tok}'")))?;
                    if n == 0 {
                        return Err(parse_err(lineno, col, "node count must be positive"));
                    }
                    declared_n = Some(n);
                }
                _ => return Err(parse_err(lineno, toks[2].0, "unexpected token after header")),
            }
            continue;
        }
        seen_content = true;
        if toks.len() != 2 {
            let col = toks.get(2).map_or(toks[0].0, |t| t.0);
            return Err(parse_err(
                lineno,
                col,
                format!("expected 'u v', found {} token(s)", toks.len()),
            ));
        }
        let u = parse_id(lineno, toks[0].0, toks[0].1)?;
        let v = parse_id(lineno, toks[1].0, toks[1].1)?;
        if u == v {
            return Err(parse_err(lineno, toks[0].0, format!("self-loop at node {u}")));
        }
        raw.push((lineno, u, v));
    }

    let (n, node_ids, index): (usize, Vec<u64>, BTreeMap<u64, usize>) = match declared_n {
        Some(n) => {
            if let Some(&(line, u, v)) = raw.iter().find(|&&(_, u, v)| u.max(v) >= n as u64) {
                return Err(parse_err(
                    line,
                    1,
                    format!("edge ({u}, {v}) exceeds the declared node count {n}"),
                ));
            }
            (n, (0..n as u64).collect(), BTreeMap::new())
        }
        None => {
            let mut ids: Vec<u64> = raw.iter().flat_map(|&(_, u, v)| [u, v]).collect();
            ids.sort_unstable();
            ids.dedup();
            if ids.is_empty() {
                return Err(parse_err(1, 1, "edge list contains no edges"));
            }
            let index = ids.iter().enumerate().map(|(k, &id)| (id, k)).collect();
            (ids.len(), ids, index)
        }
    };
    let lookup = |id: u64| -> usize {
        if declared_n.is_some() {
            id as usize
        } else {
            index[&id]
        }
    };
    let edges: Vec<(usize, usize)> = raw.iter().map(|&(_, u, v)| (lookup(u), lookup(v))).collect();
    let graph = if directed {
        Graph::build_directed(n, &edges)?
    } else {
        Graph::build_undirected(n, &edges)?
    };
    Ok(ParsedGraph { graph, node_ids })
}

/// Header with orientation and node count, then one line per edge (`i < j` when undirected).
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!(
        "{} {}\n",
        if g.is_directed() { "directed" } else { "undirected" },
        g.node_count()
    );
    for (i, j) in g.edge_list() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_path() {
        let p = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p.graph.degrees(), &[1, 2, 1]);
        assert!(!p.graph.is_directed());
    }

    #[test]
    fn path_six_with_comments() {
        let text = "# the 6-path\n0 1\n1 2 # middle\n\n2 3\n3 4\n4 5\n";
        let p = parse_edge_list(text).unwrap();
        assert_eq!(p.graph.degrees(), &[1, 2, 2, 2, 2, 1]);
    }

    #[test]
    fn duplicates_accumulate() {
        let p = parse_edge_list("0 1\n0 1").unwrap();
        assert_eq!(p.graph.multiplicities(), &[2, 2]);
        // either orientation is the same undirected edge
        let q = parse_edge_list("0 1\n1 0").unwrap();
        assert_eq!(p.graph, q.graph);
    }

    #[test]
    fn directed_header() {
        let p = parse_edge_list("# c3\ndirected\n0 1\n1 2\n2 0\n").unwrap();
        assert!(p.graph.is_directed());
        assert_eq!(p.graph.degrees(), &[1, 1, 1]);
        let q = parse_edge_list_as("0 1\n1 2\n2 0\n", true).unwrap();
        assert_eq!(p.graph, q.graph);
    }

    #[test]
    fn gaps_are_compacted() {
        let p = parse_edge_list("10 20\n20 35\n").unwrap();
        assert_eq!(p.node_ids, vec![10, 20, 35]);
        assert_eq!(p.graph.degrees(), &[1, 2, 1]);
        let q = parse_edge_list("undirected 5\n0 4\n").unwrap();
        assert_eq!(q.graph.node_count(), 5);
    }

    #[test]
    fn errors_carry_positions() {
        let cases = [
            ("0 1\n1 x\n", 2, 3),
            ("0 1\n2 2\n", 2, 1),
            ("0 -1\n", 1, 3),
            ("0 1 2\n", 1, 5),
            ("undirected 2\n0 5\n", 2, 1),
        ];
        for (text, line, column) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, column: c, .. }) => {
                    assert_eq!((l, c), (line, column), "{text:?}")
                }
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn emission_is_canonical() {
        let g = Graph::build_undirected(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(emit_edge_list(&g), "undirected 3\n0 1\n1 2\n");
    }
}
