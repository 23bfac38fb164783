//! Text formats: `p phg` hypergraphs, `p edge` graphs, `l` level files and
//! reduction certificate sidecars. Everything is 1-based on disk.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::reductions::{ReductionCertificate, ReductionKind, Variant};
use crate::vertex_set::VertexSet;

const NAME_PREFIX: &str = "c name: ";

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

/// Non-blank, non-comment lines with their 1-based numbers, split into tokens.
fn records(text: &str) -> Lines<'_> {
    Lines {
        inner: text.lines().enumerate(),
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, Vec<&'a str>);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, line) in self.inner.by_ref() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() || toks[0] == "c" {
                continue;
            }
            return Some((i + 1, toks));
        }
        None
    }
}

fn number(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line, format!("{what} '{tok}' is not a non-negative integer")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v = number(line, tok, "vertex")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} is outside 1..{n}")));
    }
    Ok(v - 1)
}

fn header(line: usize, toks: &[&str], kind: &str) -> Result<(usize, usize)> {
    if toks.len() != 4 || toks[0] != "p" || toks[1] != kind {
        return Err(Error::parse(line, format!("expected header 'p {kind} <n> <m>'")));
    }
    Ok((number(line, toks[2], "n")?, number(line, toks[3], "m")?))
}

pub fn parse_phg(text: &str) -> Result<Hypergraph> {
    let name = text
        .lines()
        .find_map(|l| l.strip_prefix(NAME_PREFIX))
        .map(|s| s.trim().to_string());
    let mut recs = records(text);
    let (hl, toks) = recs.next().ok_or_else(|| Error::parse(1, "missing 'p phg' header"))?;
    let (n, m) = header(hl, &toks, "phg")?;
    if n > crate::vertex_set::MAX_VERTICES {
        return Err(Error::capacity(format!(
            "hypergraph has {n} vertices, limit is {}",
            crate::vertex_set::MAX_VERTICES
        )));
    }
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (line, toks) in recs {
        last = line;
        if toks[0] != "e" {
            return Err(Error::parse(line, format!("expected an 'e' line, found '{}'", toks[0])));
        }
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than the {m} edges announced")));
        }
        let mut e = VertexSet::new();
        for tok in &toks[1..] {
            e.insert(vertex(line, tok, n)?);
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(last, format!("{} edges found, header announced {m}", edges.len())));
    }
    let h = Hypergraph::new(n, edges)?;
    Ok(match name {
        Some(s) => h.with_name(s),
        None => h,
    })
}

pub fn write_phg(h: &Hypergraph) -> String {
    let mut out = String::new();
    if let Some(name) = h.name() {
        out.push_str(NAME_PREFIX);
        out.push_str(name);
        out.push('\n');
    }
    out.push_str(&format!("p phg {} {}\n", h.n(), h.m()));
    for e in h.edges() {
        out.push('e');
        for v in e {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    out
}

pub fn parse_edge(text: &str) -> Result<Graph> {
    let mut recs = records(text);
    let (hl, toks) = recs.next().ok_or_else(|| Error::parse(1, "missing 'p edge' header"))?;
    let (n, m) = header(hl, &toks, "edge")?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (line, toks) in recs {
        last = line;
        if toks[0] != "e" || toks.len() != 3 {
            return Err(Error::parse(line, "expected 'e <u> <v>'"));
        }
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than the {m} edges announced")));
        }
        let (u, v) = (vertex(line, toks[1], n)?, vertex(line, toks[2], n)?);
        if u == v {
            return Err(Error::parse(line, format!("self-loop on {}", u + 1)));
        }
        if edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
            return Err(Error::parse(line, format!("parallel edge ({}, {})", u + 1, v + 1)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(last, format!("{} edges found, header announced {m}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Per-vertex levels for a graph on `n` vertices; every vertex exactly once.
pub fn parse_levels(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut level = vec![0usize; n];
    let mut last = 0;
    for (line, toks) in records(text) {
        last = line;
        if toks[0] != "l" || toks.len() != 3 {
            return Err(Error::parse(line, "expected 'l <vertex> <level>'"));
        }
        let v = vertex(line, toks[1], n)?;
        let l = number(line, toks[2], "level")?;
        if l == 0 {
            return Err(Error::parse(line, "levels start at 1"));
        }
        if level[v] != 0 {
            return Err(Error::parse(line, format!("vertex {} listed twice", v + 1)));
        }
        level[v] = l;
    }
    if let Some(v) = level.iter().position(|&l| l == 0) {
        return Err(Error::parse(last.max(1), format!("vertex {} has no level", v + 1)));
    }
    Ok(level)
}

pub fn write_levels(level: &[usize]) -> String {
    level
        .iter()
        .enumerate()
        .map(|(v, l)| format!("l {} {l}\n", v + 1))
        .collect()
}

/// Parsed certificate sidecar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateRecord {
    pub kind: ReductionKind,
    pub variant: Option<Variant>,
    pub k: usize,
    pub k_prime: usize,
    pub identity: String,
}

/// Sidecar with lines `kind`, `variant`, `k`, `k_prime`, `identity`, in that order.
pub fn write_certificate(cert: &ReductionCertificate) -> String {
    format!(
        "kind {}\nvariant {}\nk {}\nk_prime {}\nidentity {}\n",
        cert.kind,
        cert.variant.map_or("none", |v| v.tag()),
        cert.k,
        cert.k_prime,
        cert.identity()
    )
}

pub fn parse_certificate(text: &str) -> Result<CertificateRecord> {
    let keys = ["kind", "variant", "k", "k_prime", "identity"];
    let mut values = Vec::with_capacity(keys.len());
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    for key in keys {
        let (i, line) = lines
            .next()
            .ok_or_else(|| Error::parse(values.len() + 1, format!("missing '{key}' line")))?;
        let rest = line
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix(' '))
            .ok_or_else(|| Error::parse(i + 1, format!("expected '{key} <value>'")))?;
        values.push((i + 1, rest.trim().to_string()));
    }
    let kind = values[0].1.parse().map_err(|e: Error| Error::parse(values[0].0, e.to_string()))?;
    let variant = match values[1].1.as_str() {
        "none" => None,
        v => Some(v.parse().map_err(|e: Error| Error::parse(values[1].0, e.to_string()))?),
    };
    Ok(CertificateRecord {
        kind,
        variant,
        k: number(values[2].0, &values[2].1, "k")?,
        k_prime: number(values[3].0, &values[3].1, "k_prime")?,
        identity: values[4].1.clone(),
    })
}

pub fn read_phg(path: &Path) -> Result<Hypergraph> {
    parse_phg(&fs::read_to_string(path)?)
}

pub fn read_edge(path: &Path) -> Result<Graph> {
    parse_edge(&fs::read_to_string(path)?)
}
