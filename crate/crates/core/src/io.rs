//! Edge-list text format.
//!
//! ```text
//! c optional comment
//! p edge <n> <m>
//! e <u> <v>
//! ```
//!
//! Endpoints are 1-based in the file and 0-based in memory. Blank lines and
//! lines starting with `c` are skipped.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn field(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn read_graph(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|e| parse_err(0, format!("not UTF-8: {e}")))?;
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate header"));
                }
                if toks.next() != Some("edge") {
                    return Err(parse_err(lineno, "expected `p edge <n> <m>`"));
                }
                let n = field(toks.next(), lineno, "vertex count")?;
                let m = field(toks.next(), lineno, "edge count")?;
                if n == 0 {
                    return Err(parse_err(lineno, "vertex count must be positive"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "edge before header"))?;
                let u = field(toks.next(), lineno, "endpoint")?;
                let v = field(toks.next(), lineno, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(lineno, format!("endpoint {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop on {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(lineno, format!("unknown line type `{other}`"))),
            None => unreachable!(),
        }
        if toks.next().is_some() {
            return Err(parse_err(lineno, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p edge` header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn write_graph(g: &Graph) -> Vec<u8> {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_gnm;

    #[test]
    fn reads_minimal_file() {
        let g = read_graph(b"p edge 3 1\ne 1 2\n").unwrap();
        assert_eq!((g.n(), g.edges()), (3, &[(0, 1)][..]));
    }

    #[test]
    fn skips_comments_and_blanks() {
        let g = read_graph(b"c hello\n\np edge 4 2\nc mid\ne 4 1\n\ne 2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 3), (1, 2)]);
    }

    #[test]
    fn writes_edgeless() {
        let g = Graph::edgeless(2).unwrap();
        assert_eq!(write_graph(&g), b"p edge 2 0\n");
    }

    #[test]
    fn round_trip() {
        let g = random_gnm(20, 80, 7).unwrap();
        assert_eq!(read_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases: &[(&[u8], usize)] = &[
            (b"p edge 3 1\ne 1 4\n", 2),
            (b"e 1 2\n", 1),
            (b"p edge 3 1\ne 1 x\n", 2),
            (b"p edge 3 1\nq 1 2\n", 2),
            (b"c\np edge 3 1\ne 2 2\n", 3),
            (b"p node 3 1\n", 1),
        ];
        for (input, line) in cases {
            match read_graph(input) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, *line),
                other => panic!("expected parse error, got {other:?}"),
            }
        }
        assert!(matches!(read_graph(b"p edge 3 2\ne 1 2\n"), Err(Error::Parse { .. })));
    }
}
