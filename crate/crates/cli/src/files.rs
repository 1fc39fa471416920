//! Text formats for graphs and certificates.
//!
//! A graph file is a `cubic <n> <m>` header followed by one `<id> <u> <v>`
//! line per edge. A certificate file holds one or more blocks
//!
//! ```text
//! certificate covering
//! graph 10 15
//! matching 0 7 9 11 13
//! ...
//! end
//! ```
//!
//! where the kind is `fr-triple` (three `matching` lines), `covering` (six)
//! or `ffamily` (`m`, `member A` .. `member D` and `n`). Blank lines and
//! anything after `#` are ignored. Edge lists are written sorted.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use fulkerson_core::ffamily::MEMBER_NAMES;
use fulkerson_core::{CubicGraph, EdgeId, FFamily, FRTriple, FulkersonCovering, MultiGraph};

use crate::error::ParseError;

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn number<T: FromStr>(tok: &str, line: usize, what: &str) -> Result<T, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("expected {what}, found {tok:?}")))
}

pub fn write_graph(g: &MultiGraph) -> String {
    let mut s = format!("cubic {} {}\n", g.vertex_count(), g.edge_count());
    for (e, u, v) in g.edges() {
        writeln!(s, "{e} {u} {v}").expect("writing to a string");
    }
    s
}

pub fn parse_graph(text: &str) -> Result<CubicGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::new(0, "empty graph file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "cubic" {
        return Err(ParseError::new(hl, "expected header `cubic <n> <m>`"));
    }
    let n: usize = number(toks[1], hl, "vertex count")?;
    let m: usize = number(toks[2], hl, "edge count")?;
    let mut edges: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut last = hl;
    for (ln, l) in lines {
        last = ln;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(ParseError::new(ln, "expected `<edge_id> <u> <v>`"));
        }
        let id: usize = number(toks[0], ln, "edge id")?;
        let u: usize = number(toks[1], ln, "vertex")?;
        let v: usize = number(toks[2], ln, "vertex")?;
        if id >= m {
            return Err(ParseError::new(ln, format!("edge id {id} out of range 0..{m}")));
        }
        if u >= n || v >= n {
            return Err(ParseError::new(ln, format!("vertex out of range 0..{n}")));
        }
        if edges[id].replace((u, v)).is_some() {
            return Err(ParseError::new(ln, format!("edge id {id} repeated")));
        }
    }
    if let Some(id) = edges.iter().position(Option::is_none) {
        return Err(ParseError::new(last, format!("edge id {id} missing (file truncated?)")));
    }
    let g = MultiGraph::from_edges(n, edges.into_iter().flatten()).map_err(|e| ParseError::new(hl, e.to_string()))?;
    CubicGraph::new(g).map_err(|e| ParseError::new(hl, format!("not a cubic graph: {e}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    FrTriple,
    Covering,
    FFamily,
}

impl CertificateKind {
    pub const NAMES: [&'static str; 3] = ["fr-triple", "covering", "ffamily"];
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::FrTriple => "fr-triple",
            CertificateKind::Covering => "covering",
            CertificateKind::FFamily => "ffamily",
        })
    }
}

impl FromStr for CertificateKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fr-triple" => Ok(CertificateKind::FrTriple),
            "covering" => Ok(CertificateKind::Covering),
            "ffamily" => Ok(CertificateKind::FFamily),
            _ => Err(format!(
                "unknown certificate kind {s:?}; expected one of {}",
                Self::NAMES.join(", ")
            )),
        }
    }
}

/// A certificate as plain edge lists, independent of any graph. Checking
/// the lists against a graph is the verifier's job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    FrTriple {
        n: usize,
        m: usize,
        matchings: Vec<Vec<EdgeId>>,
    },
    Covering {
        n: usize,
        m: usize,
        matchings: Vec<Vec<EdgeId>>,
    },
    FFamily {
        n: usize,
        m: usize,
        matching: Vec<EdgeId>,
        members: Vec<Vec<EdgeId>>,
        pairing: Vec<EdgeId>,
    },
}

fn sorted(ids: impl IntoIterator<Item = EdgeId>) -> Vec<EdgeId> {
    let mut v: Vec<EdgeId> = ids.into_iter().collect();
    v.sort_unstable();
    v
}

impl Certificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Certificate::FrTriple { .. } => CertificateKind::FrTriple,
            Certificate::Covering { .. } => CertificateKind::Covering,
            Certificate::FFamily { .. } => CertificateKind::FFamily,
        }
    }

    /// Vertex and edge count of the graph the certificate was made for.
    pub fn graph_size(&self) -> (usize, usize) {
        match self {
            Certificate::FrTriple { n, m, .. }
            | Certificate::Covering { n, m, .. }
            | Certificate::FFamily { n, m, .. } => (*n, *m),
        }
    }

    pub fn from_triple(g: &MultiGraph, t: &FRTriple) -> Self {
        Certificate::FrTriple {
            n: g.vertex_count(),
            m: g.edge_count(),
            matchings: t.matchings().iter().map(|p| sorted(p.iter())).collect(),
        }
    }

    pub fn from_covering(g: &MultiGraph, f: &FulkersonCovering) -> Self {
        Certificate::Covering {
            n: g.vertex_count(),
            m: g.edge_count(),
            matchings: f.matchings().iter().map(|p| sorted(p.iter())).collect(),
        }
    }

    pub fn from_family(g: &MultiGraph, fam: &FFamily) -> Self {
        Certificate::FFamily {
            n: g.vertex_count(),
            m: g.edge_count(),
            matching: sorted(fam.m().iter()),
            members: fam.members().iter().map(|x| sorted(x.iter())).collect(),
            pairing: sorted(fam.n().iter()),
        }
    }

    /// Matchings to annotate a rendering with, with their labels.
    pub fn labelled_sets(&self) -> Vec<(String, &[EdgeId])> {
        match self {
            Certificate::FrTriple { matchings, .. } | Certificate::Covering { matchings, .. } => matchings
                .iter()
                .enumerate()
                .map(|(i, s)| (format!("M{}", i + 1), s.as_slice()))
                .collect(),
            Certificate::FFamily {
                matching,
                members,
                pairing,
                ..
            } => {
                let mut v = vec![("M".to_string(), matching.as_slice())];
                for (name, s) in MEMBER_NAMES.iter().zip(members) {
                    v.push((name.to_string(), s.as_slice()));
                }
                v.push(("N".to_string(), pairing.as_slice()));
                v
            }
        }
    }
}

fn write_list(s: &mut String, key: &str, ids: &[EdgeId]) {
    s.push_str(key);
    for e in sorted(ids.iter().copied()) {
        write!(s, " {e}").expect("writing to a string");
    }
    s.push('\n');
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, m) = self.graph_size();
        let mut s = format!("certificate {}\ngraph {n} {m}\n", self.kind());
        match self {
            Certificate::FrTriple { matchings, .. } | Certificate::Covering { matchings, .. } => {
                for x in matchings {
                    write_list(&mut s, "matching", x);
                }
            }
            Certificate::FFamily {
                matching,
                members,
                pairing,
                ..
            } => {
                write_list(&mut s, "m", matching);
                for (name, x) in MEMBER_NAMES.iter().zip(members) {
                    write_list(&mut s, &format!("member {name}"), x);
                }
                write_list(&mut s, "n", pairing);
            }
        }
        s.push_str("end\n");
        f.write_str(&s)
    }
}

pub fn write_certificates(certs: &[Certificate]) -> String {
    certs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n")
}

fn parse_ids(toks: &[&str], line: usize) -> Result<Vec<EdgeId>, ParseError> {
    toks.iter().map(|t| number(t, line, "edge id")).collect()
}

/// Every certificate block in `text`.
pub fn parse_certificates(text: &str) -> Result<Vec<Certificate>, ParseError> {
    let mut out = Vec::new();
    let mut lines = content_lines(text);
    while let Some((ln, l)) = lines.next() {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 || toks[0] != "certificate" {
            return Err(ParseError::new(ln, "expected `certificate <kind>`"));
        }
        let kind: CertificateKind = toks[1].parse().map_err(|e: String| ParseError::new(ln, e))?;
        let (gl, g) = lines
            .next()
            .ok_or_else(|| ParseError::new(ln, "certificate truncated after its kind"))?;
        let gt: Vec<&str> = g.split_whitespace().collect();
        if gt.len() != 3 || gt[0] != "graph" {
            return Err(ParseError::new(gl, "expected `graph <n> <m>`"));
        }
        let n = number(gt[1], gl, "vertex count")?;
        let m = number(gt[2], gl, "edge count")?;
        let mut matchings = Vec::new();
        let mut matching = None;
        let mut members: [Option<Vec<EdgeId>>; 4] = Default::default();
        let mut pairing = None;
        let mut closed = false;
        let mut last = gl;
        for (bl, body) in lines.by_ref() {
            last = bl;
            let toks: Vec<&str> = body.split_whitespace().collect();
            let dup = || ParseError::new(bl, format!("duplicate `{}` line", toks[0]));
            match (kind, toks[0]) {
                (_, "end") if toks.len() == 1 => {
                    closed = true;
                    break;
                }
                (CertificateKind::FrTriple | CertificateKind::Covering, "matching") => {
                    matchings.push(parse_ids(&toks[1..], bl)?)
                }
                (CertificateKind::FFamily, "m") => {
                    if matching.replace(parse_ids(&toks[1..], bl)?).is_some() {
                        return Err(dup());
                    }
                }
                (CertificateKind::FFamily, "n") => {
                    if pairing.replace(parse_ids(&toks[1..], bl)?).is_some() {
                        return Err(dup());
                    }
                }
                (CertificateKind::FFamily, "member") if toks.len() >= 2 => {
                    let i = MEMBER_NAMES
                        .iter()
                        .position(|c| toks[1] == c.to_string())
                        .ok_or_else(|| ParseError::new(bl, format!("unknown member {:?}", toks[1])))?;
                    if members[i].replace(parse_ids(&toks[2..], bl)?).is_some() {
                        return Err(ParseError::new(bl, format!("duplicate member {}", toks[1])));
                    }
                }
                _ => return Err(ParseError::new(bl, format!("unexpected line in {kind} certificate"))),
            }
        }
        if !closed {
            return Err(ParseError::new(last, "certificate truncated: missing `end`"));
        }
        let cert = match kind {
            CertificateKind::FrTriple | CertificateKind::Covering => {
                let want = if kind == CertificateKind::FrTriple { 3 } else { 6 };
                if matchings.len() != want {
                    return Err(ParseError::new(
                        last,
                        format!("{kind} needs {want} matchings, found {}", matchings.len()),
                    ));
                }
                if kind == CertificateKind::FrTriple {
                    Certificate::FrTriple { n, m, matchings }
                } else {
                    Certificate::Covering { n, m, matchings }
                }
            }
            CertificateKind::FFamily => {
                let missing = |what: &str| ParseError::new(last, format!("ffamily certificate has no `{what}` line"));
                let matching = matching.ok_or_else(|| missing("m"))?;
                let pairing = pairing.ok_or_else(|| missing("n"))?;
                let mut ms = Vec::with_capacity(4);
                for (name, x) in MEMBER_NAMES.iter().zip(members) {
                    ms.push(x.ok_or_else(|| missing(&format!("member {name}")))?);
                }
                Certificate::FFamily {
                    n,
                    m,
                    matching,
                    members: ms,
                    pairing,
                }
            }
        };
        out.push(cert);
    }
    if out.is_empty() {
        return Err(ParseError::new(0, "no certificate found"));
    }
    Ok(out)
}
