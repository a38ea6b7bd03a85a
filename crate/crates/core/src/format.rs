//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! p digraph <n> <m>      directed graph, weights >= 1
//! p graph <n> <m>        undirected multigraph, integer weights
//! t <s> <t>              terminals (required by path problems)
//! e <u> <v> <w>          exactly m edge lines, ids 1..=m in order
//! ```
//!
//! Explicit matroids use `p matroid <groundset-size>` followed by one
//! `b <i> <j> ...` line per basis; weight files are `w <element> <weight>`
//! lines. Weight magnitudes are capped at 10^9 everywhere.

use crate::error::{Error, Result};
use crate::graph::{WeightedDigraph, WeightedMultigraph, MAX_WEIGHT};

#[derive(Debug, Clone)]
pub enum ParsedGraph {
    Digraph(WeightedDigraph),
    Multigraph(WeightedMultigraph),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_field<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse::<T>().map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut lines = tokens(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "empty input"))?;
    if header.len() != 4 || header[0] != "p" {
        return Err(parse_err(hline, "expected header `p digraph|graph <n> <m>`"));
    }
    let directed = match header[1] {
        "digraph" => true,
        "graph" => false,
        other => return Err(parse_err(hline, format!("unknown problem kind `{other}`"))),
    };
    let n: usize = parse_field(header[2], hline, "vertex count")?;
    let m: usize = parse_field(header[3], hline, "edge count")?;

    let mut terminals: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, i64)> = Vec::with_capacity(m);
    let mut edge_lines: Vec<usize> = Vec::with_capacity(m);
    for (lno, toks) in lines {
        match toks[0] {
            "t" => {
                if terminals.is_some() {
                    return Err(parse_err(lno, "duplicate terminal line"));
                }
                if toks.len() != 3 {
                    return Err(parse_err(lno, "expected `t <s> <t>`"));
                }
                let s: usize = parse_field(toks[1], lno, "terminal")?;
                let t: usize = parse_field(toks[2], lno, "terminal")?;
                terminals = Some((s, t));
            }
            "e" => {
                if toks.len() != 4 {
                    return Err(parse_err(lno, "expected `e <u> <v> <w>`"));
                }
                let u: usize = parse_field(toks[1], lno, "vertex id")?;
                let v: usize = parse_field(toks[2], lno, "vertex id")?;
                let w: i64 = parse_field(toks[3], lno, "integer weight")?;
                if w.abs() > MAX_WEIGHT {
                    return Err(Error::WeightTooLarge(w));
                }
                edges.push((u, v, w));
                edge_lines.push(lno);
            }
            other => return Err(parse_err(lno, format!("unknown line kind `{other}`"))),
        }
    }
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }

    // Directed inputs and undirected inputs with terminals are shortest-path
    // instances, where the distance pruning needs strictly positive weights.
    if directed || terminals.is_some() {
        for (idx, &(_, _, w)) in edges.iter().enumerate() {
            if w <= 0 {
                return Err(Error::NonpositiveWeight { edge: idx + 1, weight: w });
            }
        }
    }

    if directed {
        let mut g = WeightedDigraph::new(n, edges)?;
        if let Some((s, t)) = terminals {
            g = g.with_terminals(s, t)?;
        }
        Ok(ParsedGraph::Digraph(g))
    } else {
        let mut g = WeightedMultigraph::new(n, edges)?;
        if let Some((s, t)) = terminals {
            g = g.with_terminals(s, t)?;
        }
        Ok(ParsedGraph::Multigraph(g))
    }
}

/// Parses an explicit matroid file: ground-set size plus one basis per line.
pub fn parse_matroid(text: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut lines = tokens(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "empty input"))?;
    if header.len() != 3 || header[0] != "p" || header[1] != "matroid" {
        return Err(parse_err(hline, "expected header `p matroid <groundset-size>`"));
    }
    let ground: usize = parse_field(header[2], hline, "ground-set size")?;
    let mut bases = Vec::new();
    for (lno, toks) in lines {
        if toks[0] != "b" {
            return Err(parse_err(lno, format!("unknown line kind `{}`", toks[0])));
        }
        let mut basis = Vec::with_capacity(toks.len() - 1);
        for tok in &toks[1..] {
            let e: usize = parse_field(tok, lno, "element id")?;
            if e == 0 || e > ground {
                return Err(Error::ElementOutOfRange(e, ground));
            }
            basis.push(e);
        }
        basis.sort_unstable();
        basis.dedup();
        if basis.len() != toks.len() - 1 {
            return Err(parse_err(lno, "repeated element in basis"));
        }
        bases.push(basis);
    }
    Ok((ground, bases))
}

/// Parses a weight file (`w <element> <weight>` lines) into a 1-based table.
/// Every element of the ground set must be assigned exactly once.
pub fn parse_weights(text: &str, ground: usize) -> Result<Vec<i64>> {
    let mut w = vec![None; ground + 1];
    for (lno, toks) in tokens(text) {
        if toks[0] != "w" || toks.len() != 3 {
            return Err(parse_err(lno, "expected `w <element> <weight>`"));
        }
        let e: usize = parse_field(toks[1], lno, "element id")?;
        if e == 0 || e > ground {
            return Err(Error::ElementOutOfRange(e, ground));
        }
        let wt: i64 = parse_field(toks[2], lno, "integer weight")?;
        if wt.abs() > MAX_WEIGHT {
            return Err(Error::WeightTooLarge(wt));
        }
        if w[e].replace(wt).is_some() {
            return Err(parse_err(lno, format!("duplicate weight for element {e}")));
        }
    }
    w.into_iter()
        .enumerate()
        .map(|(e, v)| {
            if e == 0 {
                Ok(0)
            } else {
                v.ok_or_else(|| parse_err(0, format!("missing weight for element {e}")))
            }
        })
        .collect()
}

pub fn write_digraph(g: &WeightedDigraph) -> String {
    let mut out = format!("p digraph {} {}\n", g.n, g.m());
    if let (Some(s), Some(t)) = (g.s, g.t) {
        out.push_str(&format!("t {s} {t}\n"));
    }
    for e in &g.edges {
        out.push_str(&format!("e {} {} {}\n", e.tail, e.head, e.weight));
    }
    out
}

pub fn write_multigraph(g: &WeightedMultigraph) -> String {
    let mut out = format!("p graph {} {}\n", g.n, g.m());
    if let (Some(s), Some(t)) = (g.s, g.t) {
        out.push_str(&format!("t {s} {t}\n"));
    }
    for e in &g.edges {
        out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.weight));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_digraph() {
        let g = match parse_graph("p digraph 2 1\nt 1 2\ne 1 2 3\n").unwrap() {
            ParsedGraph::Digraph(g) => g,
            _ => panic!("expected digraph"),
        };
        assert_eq!(g.n, 2);
        assert_eq!(g.edges[0].weight, 3);
        assert_eq!(g.terminals().unwrap(), (1, 2));
    }

    #[test]
    fn parallel_edges_keep_identity() {
        let g = match parse_graph("p graph 2 2\ne 1 2 1\ne 1 2 1\n").unwrap() {
            ParsedGraph::Multigraph(g) => g,
            _ => panic!("expected multigraph"),
        };
        assert_eq!(g.m(), 2);
        assert_eq!(g.edge(1).unwrap(), g.edge(2).unwrap());
    }

    #[test]
    fn nonpositive_weight_rejected_for_path_input() {
        let err = parse_graph("p digraph 2 1\nt 1 2\ne 1 2 0\n").unwrap_err();
        assert!(matches!(err, Error::NonpositiveWeight { edge: 1, weight: 0 }));
        // Undirected with terminals is also a path input.
        assert!(parse_graph("p graph 2 1\nt 1 2\ne 1 2 -1\n").is_err());
        // Undirected without terminals may be negative (spanning tree input).
        assert!(parse_graph("p graph 2 1\ne 1 2 -1\n").is_ok());
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("p digraph 2 1\ne 1 2\n").is_err());
        assert!(parse_graph("p digraph 2 1\ne 1 3 1\n").is_err());
        assert!(parse_graph("p digraph 2 2\ne 1 2 1\n").is_err());
        assert!(parse_graph("p digraph 2 1\ne 1 2 1.5\n").is_err());
        assert!(parse_graph("q digraph 2 1\ne 1 2 1\n").is_err());
    }

    #[test]
    fn comments_ignored() {
        let text = "# a comment\np digraph 2 1 # trailing\nt 1 2\ne 1 2 3\n";
        assert!(parse_graph(text).is_ok());
    }

    #[test]
    fn graph_roundtrip() {
        let text = "p graph 3 3\ne 1 2 -4\ne 2 3 5\ne 3 3 1\n";
        let g = match parse_graph(text).unwrap() {
            ParsedGraph::Multigraph(g) => g,
            _ => panic!(),
        };
        assert_eq!(write_multigraph(&g), text);
    }

    #[test]
    fn matroid_and_weight_files() {
        let (ground, bases) = parse_matroid("p matroid 3\nb 1 2\nb 1 3\n").unwrap();
        assert_eq!(ground, 3);
        assert_eq!(bases, vec![vec![1, 2], vec![1, 3]]);
        let w = parse_weights("w 1 5\nw 2 -1\nw 3 0\n", 3).unwrap();
        assert_eq!(w, vec![0, 5, -1, 0]);
        assert!(parse_weights("w 1 5\n", 2).is_err());
        assert!(parse_weights("w 1 5\nw 1 6\nw 2 0\n", 2).is_err());
    }
}
