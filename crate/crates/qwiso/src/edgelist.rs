//! Plain-text edge lists: a header line `n k` followed by `k` lines `u v`
//! with 0-based endpoints.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();

    let (_, header) = lines.next().ok_or_else(|| Error::EdgeList {
        line: 1,
        reason: "missing header line".into(),
    })?;
    let mut fields = header.split_whitespace();
    let n: usize = parse_field(fields.next(), 1, "vertex count")?;
    let k: usize = parse_field(fields.next(), 1, "edge count")?;
    if fields.next().is_some() {
        return Err(Error::EdgeList {
            line: 1,
            reason: "header must be exactly `n k`".into(),
        });
    }

    let mut edges = Vec::with_capacity(k);
    let mut seen = std::collections::HashSet::with_capacity(k);
    for (idx, line) in &mut lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if edges.len() == k {
            return Err(Error::EdgeList {
                line: lineno,
                reason: format!("more than the declared {k} edges"),
            });
        }
        let mut fields = line.split_whitespace();
        let u: u32 = parse_field(fields.next(), lineno, "endpoint")?;
        let v: u32 = parse_field(fields.next(), lineno, "endpoint")?;
        if fields.next().is_some() {
            return Err(Error::EdgeList {
                line: lineno,
                reason: "edge line must be exactly `u v`".into(),
            });
        }
        if u as usize >= n || v as usize >= n {
            return Err(Error::EdgeList {
                line: lineno,
                reason: format!("endpoint out of range for {n} vertices"),
            });
        }
        if u == v {
            return Err(Error::EdgeList {
                line: lineno,
                reason: "self-loop".into(),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::EdgeList {
                line: lineno,
                reason: "duplicate edge".into(),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != k {
        return Err(Error::EdgeList {
            line: text.lines().count().max(1),
            reason: format!("declared {k} edges, found {}", edges.len()),
        });
    }

    Graph::from_edges(n, edges)
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, line: usize, what: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::EdgeList {
            line,
            reason: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::EdgeList {
            line,
            reason: format!("invalid {what}"),
        })
}
