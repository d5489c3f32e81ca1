//! Text formats: graph6 (short form), DIMACS `.col`, and a plain edge list.
//!
//! graph6 writes `chr(63 + n)` followed by the upper-triangle adjacency bits
//! in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six to a
//! character (most significant first, zero padded, each offset by 63).
//! Only `n <= 62` is supported; the long form is rejected.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Graph, GraphBuilder, GraphError};

pub const GRAPH6_MAX_N: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("byte {offset}: character {found:?} outside the graph6 range 63..=126")]
    BadChar { offset: usize, found: char },
    #[error("byte 0: graph6 long form (n > {GRAPH6_MAX_N}) is not supported")]
    LongForm,
    #[error("byte {offset}: expected {expected} bytes of graph6 data for n = {n}, found {found}")]
    BadLength {
        offset: usize,
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: non-zero padding bits")]
    NonZeroPadding { offset: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

fn graph6_bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn format_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(GraphError::TooManyVertices { n });
    }
    let mut out = String::with_capacity(1 + graph6_bit_count(n).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    Ok(out)
}

/// Parses one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted; offsets in errors count from the
/// first byte of the encoded graph.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let s = text.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(ParseError::Empty);
    };
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            let found = s[offset..].chars().next().unwrap_or('\u{fffd}');
            return Err(ParseError::BadChar { offset, found });
        }
    }
    if first == 126 {
        return Err(ParseError::LongForm);
    }
    let n = (first - 63) as usize;
    let bits = graph6_bit_count(n);
    let expected = bits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(ParseError::BadLength {
            offset: 1 + data.len().min(expected),
            n,
            expected,
            found: data.len(),
        });
    }
    let mut b = GraphBuilder::new(n).map_err(|source| ParseError::Graph { line: 1, source })?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = data[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::NonZeroPadding { offset: expected });
        }
    }
    Ok(b.build())
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

fn parse_field<T: FromStr>(line: usize, field: Option<&str>, what: &str) -> Result<T, ParseError> {
    let raw = field.ok_or_else(|| ParseError::Malformed {
        line,
        message: format!("missing {what}"),
    })?;
    raw.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("invalid {what} {raw:?}"),
    })
}

/// DIMACS `.col`: `c` comment lines, one `p edge N M` header, then `e u v`
/// lines with 1-based vertices. Duplicate edges collapse.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut builder: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if builder.is_some() {
                    return Err(ParseError::Malformed {
                        line,
                        message: "duplicate problem line".into(),
                    });
                }
                let kind = fields.next();
                if !matches!(kind, Some("edge" | "col")) {
                    return Err(ParseError::Malformed {
                        line,
                        message: format!("expected `p edge N M`, found {raw:?}"),
                    });
                }
                let n: usize = parse_field(line, fields.next(), "vertex count")?;
                let _m: usize = parse_field(line, fields.next(), "edge count")?;
                builder = Some(
                    GraphBuilder::new(n).map_err(|source| ParseError::Graph { line, source })?,
                );
            }
            Some("e") => {
                let b = builder.as_mut().ok_or_else(|| ParseError::Malformed {
                    line,
                    message: "edge before `p edge` header".into(),
                })?;
                let u: usize = parse_field(line, fields.next(), "endpoint")?;
                let v: usize = parse_field(line, fields.next(), "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(ParseError::Malformed {
                        line,
                        message: "DIMACS vertices are 1-based".into(),
                    });
                }
                b.add_edge(u - 1, v - 1)
                    .map_err(|source| ParseError::Graph { line, source })?;
            }
            Some(other) => {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("unknown line type {other:?}"),
                });
            }
        }
    }
    builder
        .map(GraphBuilder::build)
        .ok_or(ParseError::Malformed {
            line: 0,
            message: "missing `p edge N M` header".into(),
        })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Edge list: first line `n=<count>`, then one 0-based `u v` pair per line.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (idx, header) = lines.next().ok_or(ParseError::Empty)?;
    let n: usize = header
        .trim()
        .strip_prefix("n=")
        .ok_or_else(|| ParseError::Malformed {
            line: idx + 1,
            message: "expected `n=<count>`".into(),
        })
        .and_then(|rest| parse_field(idx + 1, Some(rest.trim()), "vertex count"))?;
    let mut b = GraphBuilder::new(n).map_err(|source| ParseError::Graph {
        line: idx + 1,
        source,
    })?;
    for (idx, raw) in lines {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        let u: usize = parse_field(line, fields.next(), "endpoint")?;
        let v: usize = parse_field(line, fields.next(), "endpoint")?;
        if fields.next().is_some() {
            return Err(ParseError::Malformed {
                line,
                message: "trailing fields".into(),
            });
        }
        b.add_edge(u, v)
            .map_err(|source| ParseError::Graph { line, source })?;
    }
    Ok(b.build())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Dimacs,
    EdgeList,
}

impl Format {
    /// Guesses the format from content: DIMACS if any line starts with `p` or
    /// `c` followed by whitespace, edge list if the first line is `n=...`,
    /// graph6 otherwise.
    pub fn detect(text: &str) -> Format {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let Some(first) = lines.next() else {
            return Format::Graph6;
        };
        if first.starts_with("n=") {
            return Format::EdgeList;
        }
        let dimacs_line = |l: &str| {
            let mut f = l.split_whitespace();
            matches!(f.next(), Some("p" | "c" | "e")) && (l.len() == 1 || f.next().is_some())
        };
        if dimacs_line(first) {
            Format::Dimacs
        } else {
            Format::Graph6
        }
    }

    pub fn parse(self, text: &str) -> Result<Graph, ParseError> {
        match self {
            Format::Graph6 => {
                let line = text
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty())
                    .unwrap_or("");
                parse_graph6(line)
            }
            Format::Dimacs => parse_dimacs(text),
            Format::EdgeList => parse_edge_list(text),
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "dimacs" | "col" => Ok(Format::Dimacs),
            "edgelist" | "edge-list" | "edges" => Ok(Format::EdgeList),
            other => Err(format!("unknown graph format {other:?}")),
        }
    }
}

pub fn parse_auto(text: &str) -> Result<Graph, ParseError> {
    Format::detect(text).parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle};

    #[test]
    fn c5_graph6_matches_hand_encoding() {
        // bits (0,1)..(3,4) = 1010011001, padded to 101001 100100 = 41, 36
        let c5 = cycle(5).unwrap();
        assert_eq!(format_graph6(&c5).unwrap(), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), c5);
    }

    #[test]
    fn tiny_graph6_strings() {
        assert_eq!(format_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(format_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(format_graph6(&complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(
            parse_graph6(">>graph6<<A_\n").unwrap(),
            complete(2).unwrap()
        );
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert_eq!(
            parse_graph6("D h"),
            Err(ParseError::BadChar {
                offset: 1,
                found: ' '
            })
        );
        assert!(matches!(
            parse_graph6("Dh"),
            Err(ParseError::BadLength {
                n: 5,
                expected: 2,
                found: 1,
                ..
            })
        ));
        assert!(matches!(
            parse_graph6("Dhcc"),
            Err(ParseError::BadLength { found: 3, .. })
        ));
        assert_eq!(parse_graph6("~??"), Err(ParseError::LongForm));
        // 'd' = 63 + 37 sets the final padding bit of C5's second byte
        assert_eq!(
            parse_graph6("Dhd"),
            Err(ParseError::NonZeroPadding { offset: 2 })
        );
        assert!(format_graph6(&Graph::empty(63)).is_err());
    }

    #[test]
    fn dimacs_examples() {
        let k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(k3, complete(3).unwrap());
        let two = parse_dimacs("c two isolated vertices\np edge 2 0\n").unwrap();
        assert_eq!((two.n(), two.edge_count()), (2, 0));
        let c7 = cycle(7).unwrap();
        assert_eq!(parse_dimacs(&write_dimacs(&c7)).unwrap(), c7);
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(
            parse_dimacs("e 1 2\n"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge x 1\n"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p matrix 3 1\n"),
            Err(ParseError::Malformed { .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 1 4\n"),
            Err(ParseError::Graph {
                line: 2,
                source: GraphError::VertexOutOfRange { vertex: 3, n: 3 }
            })
        ));
        assert!(matches!(
            parse_dimacs("c only\n"),
            Err(ParseError::Malformed { line: 0, .. })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let c5 = cycle(5).unwrap();
        let text = write_edge_list(&c5);
        assert!(text.starts_with("n=5\n0 1\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), c5);
        assert!(parse_edge_list("5\n0 1\n").is_err());
        assert!(parse_edge_list("n=2\n0 2\n").is_err());
    }

    #[test]
    fn format_sniffing() {
        assert_eq!(Format::detect("Dhc"), Format::Graph6);
        assert_eq!(Format::detect("c hello\np edge 2 0\n"), Format::Dimacs);
        assert_eq!(Format::detect("p edge 2 1\ne 1 2"), Format::Dimacs);
        assert_eq!(Format::detect("n=3\n0 1\n"), Format::EdgeList);
        assert_eq!(parse_auto("  Dhc\n").unwrap(), cycle(5).unwrap());
        assert_eq!("g6".parse::<Format>(), Ok(Format::Graph6));
    }
}
