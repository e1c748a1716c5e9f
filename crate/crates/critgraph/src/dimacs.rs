//! DIMACS text format: optional `c` comment lines, one `p edge <n> <m>`
//! line, then exactly m lines `e <u> <v>` with 1-based endpoints. Vertices
//! are 0-based in memory and shifted on the way in and out.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("line {0}: malformed header (expected 'p edge <n> <m>')")]
    MalformedHeader(usize),
    #[error("line {0}: malformed edge line (expected 'e <u> <v>')")]
    MalformedEdge(usize),
    #[error("line {0}: unexpected content before header")]
    MissingHeader(usize),
    #[error("declared {declared} edges but found {found} edge lines")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: endpoint {value} out of range 1..={n}")]
    EndpointOutOfRange { line: usize, value: usize, n: usize },
    #[error("line {0}: self-loop")]
    SelfLoop(usize),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

pub fn read_dimacs<R: BufRead>(reader: R) -> Result<Graph, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::MalformedHeader(lineno));
            }
            let mut it = line.split_ascii_whitespace();
            let _p = it.next();
            let kind = it.next().ok_or(DimacsError::MalformedHeader(lineno))?;
            if kind != "edge" {
                return Err(DimacsError::MalformedHeader(lineno));
            }
            let n: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or(DimacsError::MalformedHeader(lineno))?;
            let m: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or(DimacsError::MalformedHeader(lineno))?;
            if it.next().is_some() {
                return Err(DimacsError::MalformedHeader(lineno));
            }
            header = Some((n, m));
            continue;
        }
        if let Some(rest) = line.strip_prefix('e') {
            let (n, _) = header.ok_or(DimacsError::MissingHeader(lineno))?;
            let mut it = rest.split_ascii_whitespace();
            let u: usize =
                it.next().and_then(|s| s.parse().ok()).ok_or(DimacsError::MalformedEdge(lineno))?;
            let v: usize =
                it.next().and_then(|s| s.parse().ok()).ok_or(DimacsError::MalformedEdge(lineno))?;
            if it.next().is_some() {
                return Err(DimacsError::MalformedEdge(lineno));
            }
            for value in [u, v] {
                if value == 0 || value > n {
                    return Err(DimacsError::EndpointOutOfRange { line: lineno, value, n });
                }
            }
            if u == v {
                return Err(DimacsError::SelfLoop(lineno));
            }
            edges.push((u as u32 - 1, v as u32 - 1));
            continue;
        }
        return Err(if header.is_none() {
            DimacsError::MissingHeader(lineno)
        } else {
            DimacsError::MalformedEdge(lineno)
        });
    }
    let (n, m) = header.ok_or(DimacsError::MissingHeader(0))?;
    if edges.len() != m {
        return Err(DimacsError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Ok(Graph::new(n, edges)?)
}

/// Writes the graph in normalized form: edges ascending, 1-based ids. The
/// output of `write_dimacs` reads back to an equal graph.
pub fn write_dimacs<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    writeln!(w, "p edge {} {}", g.n(), g.m())?;
    for &(u, v) in g.edges() {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn read_dimacs_file<P: AsRef<Path>>(path: P) -> Result<Graph, DimacsError> {
    read_dimacs(BufReader::new(File::open(path)?))
}

pub fn write_dimacs_file<P: AsRef<Path>>(g: &Graph, path: P) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_dimacs(g, &mut w)?;
    w.flush()
}

/// Serializes to a string (the exact bytes `write_dimacs` would produce).
pub fn to_dimacs_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_dimacs(g, &mut buf).expect("writing to Vec cannot fail");
    String::from_utf8(buf).expect("dimacs output is ascii")
}
