//! Matrix Market coordinate pattern files, `symmetric` (undirected) or `general` (directed).

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

fn fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut rest = line;
    let mut offset = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        out.push((offset + start + 1, &tail[..len]));
        offset += start + len;
        rest = &tail[len..];
    }
    out
}

pub fn parse_matrix_market(text: &str) -> Result<ParsedGraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty file"))?;
    let head = fields(header);
    let words: Vec<String> = head.iter().map(|(_, w)| w.to_ascii_lowercase()).collect();
    if words.first().map(String::as_str) != Some("%%matrixmarket") {
        return Err(parse_err(1, 1, "missing %%MatrixMarket banner"));
    }
    if words.len() != 5 {
        return Err(parse_err(
            1,
            1,
            "banner must read: %%MatrixMarket matrix coordinate pattern <symmetry>",
        ));
    }
    let expect = [(1, "matrix"), (2, "coordinate"), (3, "pattern")];
    for (k, want) in expect {
        if words[k] != want {
            return Err(parse_err(
                1,
                head[k].0,
                format!("unsupported qualifier '{}' (expected '{want}')", head[k].1),
            ));
        }
    }
    let directed = match words[4].as_str() {
        "symmetric" => false,
        "general" => true,
        _ => return Err(parse_err(1, head[4].0, format!("unsupported symmetry '{}'", head[4].1))),
    };

    let mut size: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 1;
    for (lineno, line) in lines {
        last_line = lineno;
        let toks = fields(line);
        if toks.is_empty() || toks[0].1.starts_with('%') {
            continue;
        }
        let num = |k: usize| -> Result<usize> {
            toks[k]
                .1
                .parse::<usize>()
                .map_err(|_| parse_err(lineno, toks[k].0, format!("expected an integer, found '{}'", toks[k].1)))
        };
        match size {
            None => {
                if toks.len() != 3 {
                    return Err(parse_err(lineno, toks[0].0, "size line must read: rows cols entries"));
                }
                let (rows, cols, nnz) = (num(0)?, num(1)?, num(2)?);
                if rows != cols {
                    return Err(parse_err(
                        lineno,
                        toks[1].0,
                        format!("matrix is {rows}x{cols}, expected square"),
                    ));
                }
                if rows == 0 {
                    return Err(parse_err(lineno, toks[0].0, "matrix has no rows"));
                }
                size = Some((rows, nnz));
            }
            Some((n, _)) => {
                if toks.len() != 2 {
                    let col = toks.get(2).map_or(toks[0].0, |t| t.0);
                    return Err(parse_err(lineno, col, "pattern entries must read: row col"));
                }
                let (i, j) = (num(0)?, num(1)?);
                for (k, v) in [(0, i), (1, j)] {
                    if v == 0 || v > n {
                        return Err(parse_err(lineno, toks[k].0, format!("index {v} outside 1..={n}")));
                    }
                }
                if i == j {
                    return Err(parse_err(
                        lineno,
                        toks[0].0,
                        format!("diagonal entry ({i}, {i}) is a self-loop"),
                    ));
                }
                edges.push((i - 1, j - 1));
            }
        }
    }
    let (n, nnz) = size.ok_or_else(|| parse_err(last_line, 1, "missing size line"))?;
    if edges.len() != nnz {
        return Err(parse_err(
            last_line,
            1,
            format!("size line declares {nnz} entries, found {}", edges.len()),
        ));
    }
    let graph = if directed {
        Graph::build_directed(n, &edges)?
    } else {
        Graph::build_undirected(n, &edges)?
    };
    Ok(ParsedGraph {
        graph,
        node_ids: (0..n as u64).collect(),
    })
}

/// Symmetric files list the strict lower triangle (`row > col`).
pub fn emit_matrix_market(g: &Graph) -> String {
    let symmetry = if g.is_directed() { "general" } else { "symmetric" };
    let edges = g.edge_list();
    let mut out = format!(
        "%%MatrixMarket matrix coordinate pattern {symmetry}\n{} {} {}\n",
        g.node_count(),
        g.node_count(),
        edges.len()
    );
    for (i, j) in edges {
        let (row, col) = if g.is_directed() { (i, j) } else { (j, i) };
        out.push_str(&format!("{} {}\n", row + 1, col + 1));
    }
    out
}
