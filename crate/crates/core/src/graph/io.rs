//! Plain-text graph and path formats.
//!
//! Graph: a `p <n> <m>` header followed by exactly `m` lines `e <u> <v>`.
//! Blank lines and `#` comments are ignored anywhere.
//! Path: a single line `path <induced|plain> <v0> <v1> ...`.

use std::fmt::Write as _;

use super::{Graph, PathWitness};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| perr(line, format!("expected a non-negative integer, got {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut g = Graph::new(0);
    let mut seen = 0usize;
    let mut last_line = 0;
    for (line, toks) in records(text) {
        last_line = line;
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(perr(line, "duplicate header"));
                }
                if toks.len() != 3 {
                    return Err(perr(line, "header must be `p <n> <m>`"));
                }
                let n = num(line, toks[1])?;
                let m = num(line, toks[2])?;
                header = Some((n, m));
                g = Graph::new(n);
            }
            "e" => {
                let (n, m) = header.ok_or_else(|| perr(line, "edge before header"))?;
                if toks.len() != 3 {
                    return Err(perr(line, "edge must be `e <u> <v>`"));
                }
                let u = num(line, toks[1])?;
                let v = num(line, toks[2])?;
                if u >= n || v >= n {
                    return Err(perr(line, format!("vertex id out of range (n={n})")));
                }
                if u == v {
                    return Err(perr(line, format!("self-loop at {u}")));
                }
                if seen == m {
                    return Err(perr(line, format!("more than the declared {m} edges")));
                }
                if !g.add_edge(u, v) {
                    return Err(perr(line, format!("duplicate edge {u} {v}")));
                }
                seen += 1;
            }
            other => return Err(perr(line, format!("unknown record type {other:?}"))),
        }
    }
    match header {
        None => Err(perr(last_line.max(1), "missing `p <n> <m>` header")),
        Some((_, m)) if seen != m => Err(perr(last_line, format!("header declares {m} edges, found {seen}"))),
        Some(_) => Ok(g),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn parse_path_witness(text: &str) -> Result<PathWitness> {
    let mut found = None;
    for (line, toks) in records(text) {
        if found.is_some() {
            return Err(perr(line, "more than one path record"));
        }
        if toks[0] != "path" || toks.len() < 3 {
            return Err(perr(line, "expected `path <induced|plain> <v0> ...`"));
        }
        let claims_induced = match toks[1] {
            "induced" => true,
            "plain" => false,
            other => return Err(perr(line, format!("unknown path kind {other:?}"))),
        };
        let vertices = toks[2..].iter().map(|t| num(line, t)).collect::<Result<Vec<_>>>()?;
        found = Some(PathWitness {
            vertices,
            claims_induced,
        });
    }
    found.ok_or_else(|| perr(1, "no path record"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = parse_graph("# tri\np 3 3\ne 0 1\n\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn rejects_self_loop_with_line_number() {
        match parse_graph("p 2 1\ne 0 0\n") {
            Err(Error::Parse { line: 2, msg }) => assert!(msg.contains("self-loop")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_inputs() {
        for bad in [
            "e 0 1\n",
            "p 3 1\ne 0 3\n",
            "p 3 2\ne 0 1\ne 1 0\n",
            "p 3 2\ne 0 1\n",
            "p 3 1\ne 0 1\ne 1 2\n",
            "p 3 1\nx 0 1\n",
            "p 3 1\ne 0 a\n",
            "",
        ] {
            assert!(parse_graph(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::cycle(5);
        let text = write_graph(&g);
        assert!(text.starts_with("p 5 5\ne 0 1\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn path_records() {
        let w = parse_path_witness("path plain 3 1 2\n").unwrap();
        assert_eq!(w, PathWitness::plain(vec![3, 1, 2]));
        assert_eq!(parse_path_witness(&w.to_string()).unwrap(), w);
        assert!(parse_path_witness("path weird 1 2").is_err());
        assert!(parse_path_witness("").is_err());
    }
}
