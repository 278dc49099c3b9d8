use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceFormat {
    Edgelist,
    Dimacs,
}

impl fmt::Display for SourceFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SourceFormat::Edgelist => "edgelist",
            SourceFormat::Dimacs => "dimacs",
        })
    }
}

impl FromStr for SourceFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "edgelist" => Ok(SourceFormat::Edgelist),
            "dimacs" => Ok(SourceFormat::Dimacs),
            other => Err(format!("unknown input format `{other}`")),
        }
    }
}

/// A parsed graph together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub source_format: SourceFormat,
    pub name: Option<String>,
}

/// Guesses the format from the first meaningful line: DIMACS files open
/// with a `c` comment or the `p` header.
pub fn detect_format(text: &str) -> SourceFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first.and_then(|l| l.chars().next()) {
        Some('c') | Some('p') => SourceFormat::Dimacs,
        _ => SourceFormat::Edgelist,
    }
}

pub fn parse(text: &str, format: SourceFormat) -> Result<GraphDocument> {
    match format {
        SourceFormat::Edgelist => parse_edgelist(text),
        SourceFormat::Dimacs => parse_dimacs(text),
    }
}

/// Accumulates edges, reporting rejections against the line they came from.
struct EdgeCollector {
    n: usize,
    edges: Vec<(usize, usize)>,
    seen: std::collections::HashSet<(usize, usize)>,
}

impl EdgeCollector {
    fn new(n: usize) -> Self {
        EdgeCollector {
            n,
            edges: Vec::new(),
            seen: Default::default(),
        }
    }

    fn push(&mut self, line: usize, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::parse(
                    line,
                    format!("vertex id out of range: {x} (n = {})", self.n),
                ));
            }
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge {u}-{v}")));
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self, format: SourceFormat) -> Result<GraphDocument> {
        let graph = Graph::new(self.n, self.edges).map_err(|e| Error::parse(0, e.to_string()))?;
        Ok(GraphDocument {
            graph,
            source_format: format,
            name: None,
        })
    }
}

fn number(line: usize, token: Option<&str>, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{token}`")))
}

fn no_more(line: usize, mut tokens: std::str::SplitWhitespace<'_>) -> Result<()> {
    match tokens.next() {
        Some(extra) => Err(Error::parse(line, format!("unexpected token `{extra}`"))),
        None => Ok(()),
    }
}

/// `n m` header followed by `m` lines `u v` with 0-based ids. Lines starting
/// with `#` and blank lines are ignored.
pub fn parse_edgelist(text: &str) -> Result<GraphDocument> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let mut tokens = header.split_whitespace();
    let n = number(hl, tokens.next(), "vertex count")?;
    let m = number(hl, tokens.next(), "edge count")?;
    no_more(hl, tokens)?;

    let mut edges = EdgeCollector::new(n);
    let mut last = hl;
    for (ln, line) in lines {
        if edges.edges.len() == m {
            return Err(Error::parse(
                ln,
                format!("more than the declared {m} edges"),
            ));
        }
        let mut tokens = line.split_whitespace();
        let u = number(ln, tokens.next(), "endpoint")?;
        let v = number(ln, tokens.next(), "endpoint")?;
        no_more(ln, tokens)?;
        edges.push(ln, u, v)?;
        last = ln;
    }
    if edges.edges.len() != m {
        return Err(Error::parse(
            last + 1,
            format!("expected {m} edges, found {}", edges.edges.len()),
        ));
    }
    edges.finish(SourceFormat::Edgelist)
}

/// DIMACS: `p edge n m`, then `e u v` with 1-based ids; `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<GraphDocument> {
    let mut edges: Option<(EdgeCollector, usize)> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        last = ln;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if edges.is_some() {
                    return Err(Error::parse(ln, "duplicate `p` header"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            ln,
                            format!("bad problem descriptor `{}`", other.unwrap_or("")),
                        ))
                    }
                }
                let n = number(ln, tokens.next(), "vertex count")?;
                let m = number(ln, tokens.next(), "edge count")?;
                no_more(ln, tokens)?;
                edges = Some((EdgeCollector::new(n), m));
            }
            Some("e") => {
                let (collector, m) = edges
                    .as_mut()
                    .ok_or_else(|| Error::parse(ln, "edge before `p edge` header"))?;
                if collector.edges.len() == *m {
                    return Err(Error::parse(
                        ln,
                        format!("more than the declared {m} edges"),
                    ));
                }
                let u = number(ln, tokens.next(), "endpoint")?;
                let v = number(ln, tokens.next(), "endpoint")?;
                no_more(ln, tokens)?;
                if u == 0 || v == 0 {
                    return Err(Error::parse(
                        ln,
                        "vertex id out of range: DIMACS ids start at 1",
                    ));
                }
                if u > collector.n || v > collector.n {
                    return Err(Error::parse(
                        ln,
                        format!("vertex id out of range: {} (n = {})", u.max(v), collector.n),
                    ));
                }
                collector.push(ln, u - 1, v - 1)?;
            }
            Some(other) => {
                return Err(Error::parse(ln, format!("bad line descriptor `{other}`")));
            }
            None => unreachable!("blank lines skipped"),
        }
    }
    let (collector, m) =
        edges.ok_or_else(|| Error::parse(last.max(1), "missing `p edge` header"))?;
    if collector.edges.len() != m {
        return Err(Error::parse(
            last + 1,
            format!("expected {m} edges, found {}", collector.edges.len()),
        ));
    }
    collector.finish(SourceFormat::Dimacs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("not a parse error: {other:?}"),
        }
    }

    #[test]
    fn edgelist_examples() {
        assert_eq!(
            parse_edgelist("3 2\n0 1\n1 2").unwrap().graph,
            Graph::path(3)
        );
        assert_eq!(parse_edgelist("1 0").unwrap().graph, Graph::empty(1));
        let err = parse_edgelist("3 1\n0 0").unwrap_err();
        assert!(err.to_string().contains("self-loop"));
        assert_eq!(line_of(err), 2);
    }

    #[test]
    fn edgelist_comments_and_errors() {
        let doc = parse_edgelist("# a path\n3 2\n# middle\n0 1\n\n1 2\n").unwrap();
        assert_eq!(doc.graph, Graph::path(3));
        assert_eq!(line_of(parse_edgelist("3 2\n0 1\n1 0").unwrap_err()), 3);
        assert_eq!(line_of(parse_edgelist("3 1\n0 3").unwrap_err()), 2);
        assert_eq!(line_of(parse_edgelist("3 1\n0 x").unwrap_err()), 2);
        assert_eq!(line_of(parse_edgelist("3 2\n0 1").unwrap_err()), 3);
        assert_eq!(line_of(parse_edgelist("3 1\n0 1\n1 2").unwrap_err()), 3);
        assert_eq!(line_of(parse_edgelist("3\n").unwrap_err()), 1);
        assert!(parse_edgelist("").is_err());
    }

    #[test]
    fn dimacs_examples() {
        assert_eq!(
            parse_dimacs("p edge 2 1\ne 1 2").unwrap().graph,
            Graph::complete(2)
        );
        assert_eq!(
            parse_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3")
                .unwrap()
                .graph,
            Graph::path(3)
        );
        let err = parse_dimacs("p edge 2 1\ne 1 3").unwrap_err();
        assert!(err.to_string().contains("out of range"));
        assert_eq!(line_of(err), 2);
    }

    #[test]
    fn dimacs_errors() {
        assert!(parse_dimacs("e 1 2")
            .unwrap_err()
            .to_string()
            .contains("header"));
        assert!(parse_dimacs("c only\n")
            .unwrap_err()
            .to_string()
            .contains("header"));
        assert!(parse_dimacs("p graph 2 1\ne 1 2")
            .unwrap_err()
            .to_string()
            .contains("descriptor"));
        assert!(parse_dimacs("p edge 2 1\nx 1 2")
            .unwrap_err()
            .to_string()
            .contains("descriptor"));
        assert!(parse_dimacs("p edge 2 1\ne 0 1").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 1")
            .unwrap_err()
            .to_string()
            .contains("self-loop"));
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("c hi\np edge 1 0"), SourceFormat::Dimacs);
        assert_eq!(detect_format("p edge 1 0"), SourceFormat::Dimacs);
        assert_eq!(detect_format("# x\n3 0"), SourceFormat::Edgelist);
        assert_eq!(detect_format(""), SourceFormat::Edgelist);
    }
}
