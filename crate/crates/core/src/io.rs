//! graph6, edge-list and JSON descriptor formats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{build_family, FamilySpec};
use crate::graph::{Graph, Labeling};

const GRAPH6_MAX: usize = (1 << 36) - 1;

/// Encodes `g` as one graph6 line (without the trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX {
        return Err(Error::SizeGuard { what: "graph6 encoding".into(), size: n as u128, cap: GRAPH6_MAX as u128 });
    }
    let mut out = size_header(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn size_header(n: usize) -> Vec<u8> {
    let digits = |count: usize| (0..count).rev().map(move |i| ((n >> (6 * i)) & 63) as u8 + 63);
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        std::iter::once(126).chain(digits(3)).collect()
    } else {
        [126, 126].into_iter().chain(digits(6)).collect()
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header is accepted.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b} outside the graph6 range")));
    }
    let take = |from: usize, count: usize| -> Result<usize> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| Error::Parse("truncated graph6 header".into()))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63)))
    };
    let (n, start) = match bytes {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, ..] => (take(2, 6)?, 8),
        [126, ..] => (take(1, 3)?, 4),
        [b, ..] => (usize::from(b - 63), 1),
    };
    let body = &bytes[start..];
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "expected {} data bytes for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges, FamilySpec::Explicit { name: "graph6".into() }, Labeling::Indices)
}

/// One `u v` line per edge with `u < v`.
pub fn to_edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
}

/// Parses `u v` lines. Blank lines and lines starting with `#` are skipped.
/// The vertex count is one more than the largest index unless given.
pub fn from_edge_list(text: &str, vertex_count: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace().map(str::parse::<u32>);
        match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("line {}: expected two vertex indices", no + 1))),
        }
    }
    let n = vertex_count.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) as usize + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges, FamilySpec::Explicit { name: "edgelist".into() }, Labeling::Indices)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDescriptor {
    pub family: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub n_vertices: usize,
    pub edges: Vec<[u32; 2]>,
}

impl GraphDescriptor {
    pub fn of(g: &Graph) -> Self {
        let (family, params) = family_params(g.family());
        Self { family, params, n_vertices: g.vertex_count(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }

    /// Rebuilds the graph. For generated families the edges must agree with
    /// the family rule.
    pub fn to_graph(&self) -> Result<Graph> {
        let spec = spec_from_params(&self.family, &self.params)?;
        let explicit = Graph::from_edges(
            self.n_vertices,
            self.edges.iter().map(|&[u, v]| (u, v)),
            spec.clone(),
            Labeling::Indices,
        )?;
        if let FamilySpec::Explicit { .. } = spec {
            return Ok(explicit);
        }
        let built = build_family(&spec)?;
        if built != explicit {
            return Err(Error::Parse(format!("edges do not match the {} rule", spec.name())));
        }
        Ok(built)
    }
}

/// Kind name and numeric parameters of a family, as used in descriptors and
/// on the command line.
pub fn family_params(spec: &FamilySpec) -> (String, BTreeMap<String, serde_json::Value>) {
    let value = serde_json::to_value(spec).expect("family specs serialize");
    let mut map: BTreeMap<String, serde_json::Value> =
        serde_json::from_value(value).expect("family specs are JSON objects");
    let kind = match map.remove("kind") {
        Some(serde_json::Value::String(kind)) => kind,
        _ => unreachable!("family specs are internally tagged"),
    };
    (kind, map)
}

pub fn spec_from_params(kind: &str, params: &BTreeMap<String, serde_json::Value>) -> Result<FamilySpec> {
    let mut map = serde_json::Map::new();
    map.insert("kind".into(), kind.into());
    map.extend(params.iter().map(|(k, v)| (k.clone(), v.clone())));
    if kind == "explicit" && !map.contains_key("name") {
        map.insert("name".into(), "explicit".into());
    }
    serde_json::from_value(serde_json::Value::Object(map))
        .map_err(|e| Error::Parse(format!("family {kind:?}: {e}")))
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphDescriptor::of(g)).expect("descriptor serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let d: GraphDescriptor = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    d.to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn graph6_known_strings() {
        assert_eq!(to_graph6(&complete_graph(1)).unwrap(), "@");
        assert_eq!(to_graph6(&complete_graph(2)).unwrap(), "A_");
        assert_eq!(to_graph6(&complete_graph(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&path_graph(3)).unwrap(), "Bg");
        assert_eq!(to_graph6(&cycle_graph(5)).unwrap(), "Dhc");
        assert_eq!(to_graph6(&complete_graph(0)).unwrap(), "?");
    }

    #[test]
    fn graph6_round_trips_across_header_sizes() {
        for spec in [
            FamilySpec::Hypercube { n: 3 },
            FamilySpec::Folded { n: 6 },
            FamilySpec::Augmented { n: 8 },
            FamilySpec::Hamming { m: 3, n: 3 },
        ] {
            let g = build_family(&spec).unwrap();
            let text = to_graph6(&g).unwrap();
            assert_eq!(from_graph6(&text).unwrap(), g, "{spec}");
        }
        let q7 = build_family(&FamilySpec::Hypercube { n: 7 }).unwrap();
        let text = to_graph6(&q7).unwrap();
        assert_eq!(&text[..4], "~?A?");
        assert_eq!(from_graph6(&text).unwrap(), q7);
    }

    #[test]
    fn graph6_size_headers() {
        assert_eq!(size_header(62), b"}");
        assert_eq!(size_header(63), b"~??~");
        assert_eq!(size_header(258_047), b"~}~~");
        assert_eq!(size_header(258_048), b"~~???~??");
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("C\x10").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = build_family(&FamilySpec::Hamming { m: 3, n: 2 }).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text.lines().count(), 18);
        assert_eq!(from_edge_list(&text, Some(9)).unwrap(), g);
        assert!(from_edge_list("0 1 2\n", None).is_err());
        assert!(from_edge_list("0 x\n", None).is_err());
    }

    #[test]
    fn json_descriptor_round_trip() {
        let g = build_family(&FamilySpec::Enhanced { n: 3, k: 2 }).unwrap();
        let text = to_json(&g);
        let d: GraphDescriptor = serde_json::from_str(&text).unwrap();
        assert_eq!(d.family, "enhanced");
        assert_eq!(d.params["n"], 3);
        assert_eq!(d.params["k"], 2);
        assert_eq!(d.edges.len(), 16);
        assert_eq!(from_json(&text).unwrap(), g);

        let mut tampered = d.clone();
        tampered.edges.pop();
        assert!(tampered.to_graph().is_err());

        let c5 = cycle_graph(5);
        assert_eq!(from_json(&to_json(&c5)).unwrap(), c5);
    }
}
