//! Graph and edge-set text formats.
//!
//! * edgelist: header `n m`, then `m` lines `u v` with 0-based vertices;
//!   lines starting with `#` and blank lines are ignored.
//! * dimacs: `c` comment lines, one `p edge n m` line, then `m` lines
//!   `e u v` with 1-based vertices.
//!
//! Repeated edges are merged. Errors carry the 1-based input line.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Edgelist,
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "edgelist" => Ok(Format::Edgelist),
            "dimacs" => Ok(Format::Dimacs),
            _ => Err(format!(
                "unknown format '{s}' (expected edgelist or dimacs)"
            )),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Edgelist => "edgelist",
            Format::Dimacs => "dimacs",
        })
    }
}

/// Non-empty content lines with their 1-based line numbers.
fn content_lines<R: BufRead>(
    input: R,
    is_comment: fn(&str) -> bool,
) -> impl Iterator<Item = Result<(usize, String)>> {
    input
        .lines()
        .enumerate()
        .filter_map(move |(i, line)| match line {
            Err(e) => Some(Err(Error::Io(e))),
            Ok(l) => {
                let t = l.trim();
                (!t.is_empty() && !is_comment(t)).then(|| Ok((i + 1, t.to_string())))
            }
        })
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let t = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    t.parse()
        .map_err(|_| Error::parse(line, format!("{what} '{t}' is not a non-negative integer")))
}

fn no_more(mut tokens: std::str::SplitWhitespace<'_>, line: usize) -> Result<()> {
    match tokens.next() {
        Some(t) => Err(Error::parse(line, format!("unexpected token '{t}'"))),
        None => Ok(()),
    }
}

/// Checks an edge read from `line` against the vertex count.
fn checked_edge(u: usize, v: usize, n: usize, line: usize) -> Result<(usize, usize)> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::parse(
                line,
                format!("vertex {x} out of range for n = {n}"),
            ));
        }
    }
    if u == v {
        return Err(Error::parse(line, format!("self-loop at vertex {u}")));
    }
    Ok((u, v))
}

pub fn parse_graph<R: BufRead>(input: R, format: Format) -> Result<Graph> {
    match format {
        Format::Edgelist => parse_edgelist(input),
        Format::Dimacs => parse_dimacs(input),
    }
}

pub fn parse_edgelist<R: BufRead>(input: R) -> Result<Graph> {
    let mut lines = content_lines(input, |t| t.starts_with('#'));
    let (hl, header) = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::parse(1, "missing 'n m' header"))?;
    let mut tokens = header.split_whitespace();
    let n = number(tokens.next(), hl, "vertex count")?;
    let m = number(tokens.next(), hl, "edge count")?;
    no_more(tokens, hl)?;

    let mut pairs = Vec::with_capacity(m);
    let mut last = hl;
    for item in lines {
        let (ln, text) = item?;
        last = ln;
        if pairs.len() == m {
            return Err(Error::parse(
                ln,
                format!("more than the {m} declared edges"),
            ));
        }
        let mut tokens = text.split_whitespace();
        let u = number(tokens.next(), ln, "endpoint")?;
        let v = number(tokens.next(), ln, "endpoint")?;
        no_more(tokens, ln)?;
        pairs.push(checked_edge(u, v, n, ln)?);
    }
    if pairs.len() < m {
        return Err(Error::parse(
            last + 1,
            format!("expected {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n, pairs)
}

pub fn parse_dimacs<R: BufRead>(input: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut last = 0;
    for item in content_lines(input, |t| {
        t == "c" || t.starts_with("c ") || t.starts_with("c\t")
    }) {
        let (ln, text) = item?;
        last = ln;
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(ln, "second 'p' line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            ln,
                            format!(
                                "expected 'p edge n m', found problem '{}'",
                                other.unwrap_or("")
                            ),
                        ))
                    }
                }
                let n = number(tokens.next(), ln, "vertex count")?;
                let m = number(tokens.next(), ln, "edge count")?;
                no_more(tokens, ln)?;
                header = Some((n, m));
                pairs.reserve(m);
            }
            Some("e") => {
                let (n, m) = header.ok_or_else(|| Error::parse(ln, "edge before the 'p' line"))?;
                if pairs.len() == m {
                    return Err(Error::parse(
                        ln,
                        format!("more than the {m} declared edges"),
                    ));
                }
                let u = number(tokens.next(), ln, "endpoint")?;
                let v = number(tokens.next(), ln, "endpoint")?;
                no_more(tokens, ln)?;
                if u == 0 || v == 0 {
                    return Err(Error::parse(ln, "DIMACS vertices are numbered from 1"));
                }
                pairs.push(checked_edge(u - 1, v - 1, n, ln)?);
            }
            Some(t) => return Err(Error::parse(ln, format!("unknown line type '{t}'"))),
            None => unreachable!("blank lines are filtered"),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(last + 1, "missing 'p edge n m' line"))?;
    if pairs.len() < m {
        return Err(Error::parse(
            last + 1,
            format!("expected {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n, pairs)
}

/// Canonical output: edges sorted, smaller endpoint first.
pub fn write_graph<W: Write>(g: &Graph, format: Format, mut out: W) -> Result<()> {
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    match format {
        Format::Edgelist => {
            writeln!(out, "{} {}", g.vertex_count(), edges.len())?;
            for (u, v) in edges {
                writeln!(out, "{u} {v}")?;
            }
        }
        Format::Dimacs => {
            writeln!(out, "p edge {} {}", g.vertex_count(), edges.len())?;
            for (u, v) in edges {
                writeln!(out, "e {} {}", u + 1, v + 1)?;
            }
        }
    }
    Ok(())
}

pub fn graph_to_string(g: &Graph, format: Format) -> String {
    let mut buf = Vec::new();
    write_graph(g, format, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

/// Reads `u v` lines (0-based) naming edges of `g`; `#` comments allowed.
pub fn parse_edge_set<R: BufRead>(input: R, g: &Graph) -> Result<EdgeSet> {
    let mut ids = Vec::new();
    for item in content_lines(input, |t| t.starts_with('#')) {
        let (ln, text) = item?;
        let mut tokens = text.split_whitespace();
        let u = number(tokens.next(), ln, "endpoint")?;
        let v = number(tokens.next(), ln, "endpoint")?;
        no_more(tokens, ln)?;
        let e = g
            .edge_between(u, v)
            .ok_or_else(|| Error::parse(ln, format!("{u} {v} is not an edge of the graph")))?;
        ids.push(e);
    }
    EdgeSet::new(g, ids)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edgelist(s: &str) -> Result<Graph> {
        parse_graph(s.as_bytes(), Format::Edgelist)
    }

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn edgelist_examples() {
        assert_eq!(edgelist("4 3\n0 1\n1 2\n2 3\n").unwrap(), Graph::path(4));
        assert_eq!(
            edgelist("# c\n\n4 3\n0 1\n# x\n1 2\n2 3\n").unwrap(),
            Graph::path(4)
        );
        assert_eq!(line_of(edgelist("4 1\n0 4\n").unwrap_err()), 2);
        assert_eq!(line_of(edgelist("3 1\n1 1\n").unwrap_err()), 2);
        assert_eq!(line_of(edgelist("3 2\n0 1\n").unwrap_err()), 3);
        assert_eq!(line_of(edgelist("3 1\n0 1\n1 2\n").unwrap_err()), 3);
        assert_eq!(line_of(edgelist("3 1\n0 x\n").unwrap_err()), 2);
        assert_eq!(line_of(edgelist("").unwrap_err()), 1);
    }

    #[test]
    fn dimacs_examples() {
        let g = parse_graph(
            "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n".as_bytes(),
            Format::Dimacs,
        )
        .unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        let c = parse_graph(
            "c hi\np edge 2 1\nc mid\ne 2 1\n".as_bytes(),
            Format::Dimacs,
        )
        .unwrap();
        assert_eq!(c.edge_count(), 1);
        let bad = parse_graph("p edge 2 1\ne 0 1\n".as_bytes(), Format::Dimacs).unwrap_err();
        assert_eq!(line_of(bad), 2);
        let early = parse_graph("e 1 2\n".as_bytes(), Format::Dimacs).unwrap_err();
        assert_eq!(line_of(early), 1);
    }

    #[test]
    fn round_trip_is_canonical() {
        let g = Graph::new(5, [(3, 4), (2, 0), (1, 0)]).unwrap();
        for f in [Format::Edgelist, Format::Dimacs] {
            let text = graph_to_string(&g, f);
            let back = parse_graph(text.as_bytes(), f).unwrap();
            assert_eq!(graph_to_string(&back, f), text);
            assert_eq!(back.edge_count(), 3);
        }
        assert_eq!(
            graph_to_string(&g, Format::Edgelist),
            "5 3\n0 1\n0 2\n3 4\n"
        );
    }

    #[test]
    fn edge_sets() {
        let g = Graph::path(4);
        let d = parse_edge_set("# witness\n1 0\n2 3\n".as_bytes(), &g).unwrap();
        assert_eq!(d.pairs(&g), vec![(0, 1), (2, 3)]);
        assert_eq!(
            line_of(parse_edge_set("0 2\n".as_bytes(), &g).unwrap_err()),
            1
        );
    }
}
