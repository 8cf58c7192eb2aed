//! Line-oriented text formats shared with the command line.
//!
//! Edge list: a header line `n <count>` followed by one `u v` line per edge,
//! smaller label first, lines sorted. Trees are simply concatenated in a
//! stream; the next header starts the next tree.
//!
//! Prüfer: one sequence per line, symbols separated by commas. Trees on one
//! or two vertices have an empty line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tree::{Edge, LabeledTree, PruferSequence};

pub fn format_edge_list(tree: &LabeledTree) -> String {
    let mut out = String::with_capacity(8 + tree.edges().len() * 6);
    writeln!(out, "n {}", tree.n()).unwrap();
    for &(u, v) in tree.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses a stream of edge lists. Edges may arrive in any order; each tree
/// is canonicalized and tree errors are reported against its header line.
pub fn parse_edge_lists(input: &str) -> Result<Vec<LabeledTree>> {
    Ok(parse_edge_lists_with_lines(input)?
        .into_iter()
        .map(|(_, t)| t)
        .collect())
}

/// Like [`parse_edge_lists`], pairing each tree with its header line number.
pub fn parse_edge_lists_with_lines(input: &str) -> Result<Vec<(usize, LabeledTree)>> {
    let mut trees = Vec::new();
    // (header line number, n, edges)
    let mut current: Option<(usize, usize, Vec<Edge>)> = None;

    let finish = |cur: (usize, usize, Vec<Edge>)| -> Result<(usize, LabeledTree)> {
        let (line, n, edges) = cur;
        let tree = LabeledTree::canonicalize(n, &edges).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        Ok((line, tree))
    };

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["n", count] => {
                let n = parse_usize(count, line_no)?;
                if let Some(prev) = current.take() {
                    trees.push(finish(prev)?);
                }
                current = Some((line_no, n, Vec::new()));
            }
            [u, v] => {
                let Some((_, _, edges)) = current.as_mut() else {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "edge before any `n <count>` header".into(),
                    });
                };
                edges.push((parse_usize(u, line_no)?, parse_usize(v, line_no)?));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `n <count>` or `<u> <v>`, got {line:?}"),
                })
            }
        }
    }
    if let Some(prev) = current.take() {
        trees.push(finish(prev)?);
    }
    Ok(trees)
}

pub fn format_prufer(seq: &PruferSequence) -> String {
    let mut out = String::new();
    for (i, s) in seq.symbols().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{s}").unwrap();
    }
    out
}

/// Parses one comma-separated Prüfer line. Without an explicit `n` the vertex
/// count is inferred as `length + 2`.
pub fn parse_prufer_line(line: &str, n: Option<usize>, line_no: usize) -> Result<PruferSequence> {
    let line = line.trim();
    let symbols = if line.is_empty() {
        Vec::new()
    } else {
        line.split(',')
            .map(|s| parse_usize(s.trim(), line_no))
            .collect::<Result<Vec<_>>>()?
    };
    let n = n.unwrap_or(symbols.len() + 2);
    PruferSequence::new(n, symbols).map_err(|e| Error::Parse {
        line: line_no,
        message: e.to_string(),
    })
}

fn parse_usize(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a nonnegative integer, got {s:?}"),
    })
}
