//! DIMACS shortest-path (`.gr`) text format. Vertex ids are 1-based on disk.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graphcore::Digraph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

/// Parses a `.gr` stream. Weights below 1 are rejected, and the number of
/// `a` lines must match the problem line.
pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<Digraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let no = idx + 1;
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(no, "second problem line"));
                }
                let kind: String = field(toks.next(), no, "problem kind")?;
                if kind != "sp" {
                    return Err(parse_err(no, format!("expected `sp`, got `{kind}`")));
                }
                header = Some((
                    field(toks.next(), no, "vertex count")?,
                    field(toks.next(), no, "arc count")?,
                ));
            }
            Some("a") => {
                let (n, _) = header.ok_or_else(|| parse_err(no, "arc before problem line"))?;
                let u: usize = field(toks.next(), no, "tail")?;
                let v: usize = field(toks.next(), no, "head")?;
                let w: i64 = field(toks.next(), no, "weight")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(Error::VertexOutOfRange { vertex: x, n });
                    }
                }
                if w < 1 {
                    return Err(parse_err(no, format!("weight {w} is not positive")));
                }
                edges.push((u - 1, v - 1, w as u64));
            }
            Some(other) => return Err(parse_err(no, format!("unknown line type `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(no, "trailing fields"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(Error::ArcCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Digraph::new(n, edges)
}

pub fn write_dimacs<W: Write>(g: &Digraph, w: &mut W) -> Result<()> {
    writeln!(w, "p sp {} {}", g.n(), g.m())?;
    for e in g.edges() {
        writeln!(w, "a {} {} {}", e.src + 1, e.dst + 1, e.weight)?;
    }
    Ok(())
}
