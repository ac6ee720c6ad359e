//! Plain-text formats.
//!
//! * graph: `n m` on the first line, then `m` lines `u v`
//! * coloring: `k` on the first line, then one color per element
//! * pairs: lines `p u v`
//! * partial coloring: lines `e c`, with `c` in `{0, 1}`
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::coloring::{Coloring, PairSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses exactly `N` whitespace-separated numbers.
pub(crate) fn numbers<T: FromStr, const N: usize>(line: usize, s: &str) -> Result<[T; N]> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    if fields.len() != N {
        return Err(parse_error(
            line,
            format!("expected {N} fields, found {}", fields.len()),
        ));
    }
    let mut out = Vec::with_capacity(N);
    for f in fields {
        out.push(
            f.parse::<T>()
                .map_err(|_| parse_error(line, format!("not a number: {f:?}")))?,
        );
    }
    out.try_into().map_err(|_| unreachable!())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_error(1, "missing header"))?;
    let [n, m] = numbers::<usize, 2>(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, l) in lines {
        if edges.len() == m {
            return Err(parse_error(ln, format!("more than {m} edges")));
        }
        let [u, v] = numbers::<usize, 2>(ln, l)?;
        edges.push((u, v));
        last = ln;
    }
    if edges.len() < m {
        return Err(parse_error(
            last + 1,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses a coloring; the caller checks its length against the graph.
pub fn parse_coloring<T>(text: &str) -> Result<Coloring<T>> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_error(1, "missing header"))?;
    let [k] = numbers::<u32, 1>(hl, header)?;
    let mut colors = Vec::new();
    for (ln, l) in lines {
        let [c] = numbers::<u32, 1>(ln, l)?;
        if c == 0 || c > k {
            return Err(parse_error(ln, format!("color {c} outside 1..={k}")));
        }
        colors.push(c);
    }
    Coloring::new(colors, k)
}

pub fn write_coloring<T>(c: &Coloring<T>) -> String {
    let mut out = format!("{}\n", c.k());
    for &x in c.colors() {
        let _ = writeln!(out, "{x}");
    }
    out
}

pub fn parse_pairs(text: &str) -> Result<PairSet> {
    let mut set = PairSet::new();
    for (ln, l) in content_lines(text) {
        let rest = l
            .strip_prefix('p')
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| parse_error(ln, "pair lines start with 'p'"))?;
        let [u, v] = numbers::<usize, 2>(ln, rest)?;
        set.insert(u, v).map_err(|e| parse_error(ln, e.to_string()))?;
    }
    Ok(set)
}

pub fn write_pairs(p: &PairSet) -> String {
    p.iter().map(|(u, v)| format!("p {u} {v}\n")).collect()
}

/// Parses `e c` lines into a map from edge index to color in `{0, 1}`.
pub fn parse_partial(text: &str) -> Result<BTreeMap<usize, u32>> {
    let mut out = BTreeMap::new();
    for (ln, l) in content_lines(text) {
        let [e, c] = numbers::<usize, 2>(ln, l)?;
        if c > 1 {
            return Err(parse_error(ln, format!("partial colors are 0 or 1, got {c}")));
        }
        if out.insert(e, c as u32).is_some() {
            return Err(parse_error(ln, format!("edge {e} colored twice")));
        }
    }
    Ok(out)
}

pub fn write_partial(assigned: &BTreeMap<usize, u32>) -> String {
    assigned.iter().map(|(e, c)| format!("{e} {c}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::EdgeColoring;

    #[test]
    fn graph_round_trip() {
        let text = "# a path\n4 3\n0 1\n\n1 2\n2 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_lines() {
        assert_eq!(
            parse_graph("3 2\n0 1\n1 x\n"),
            Err(parse_error(3, "not a number: \"x\""))
        );
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("2 1\n0 0\n"), Err(Error::SelfLoop(0))));
        assert!(matches!(parse_graph(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn coloring_round_trip() {
        let c: EdgeColoring = parse_coloring("2\n1\n2\n1\n").unwrap();
        assert_eq!(c.colors(), &[1, 2, 1]);
        assert_eq!(parse_coloring::<crate::coloring::OnEdges>(&write_coloring(&c)).unwrap(), c);
        assert!(matches!(
            parse_coloring::<crate::coloring::OnEdges>("2\n3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn pairs_and_partials() {
        let p = parse_pairs("p 2 0\np 1 3\n").unwrap();
        assert!(p.contains(0, 2));
        assert_eq!(write_pairs(&p), "p 0 2\np 1 3\n");
        assert!(parse_pairs("p 1 1\n").is_err());
        assert!(parse_pairs("1 2\n").is_err());
        let partial = parse_partial("0 1\n3 0\n").unwrap();
        assert_eq!(write_partial(&partial), "0 1\n3 0\n");
        assert!(parse_partial("0 2\n").is_err());
    }
}
