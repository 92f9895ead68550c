//! JSON formats for graphs and drawings.
//!
//! Graph: `{"format":"grid-fary-graph-v1","n":N,"edges":[[u,v],...],"rotation":{"v":[..]},"root":r}`
//! with `rotation` and `root` optional.
//!
//! Drawing: `{"format":"grid-fary-drawing-v1","algorithm":"star|tree|cactus","positions":{"v":[x,y]},
//! "edges":[[u,v,len],...],"bbox":[xmin,ymin,xmax,ymax],"triples_used":K}`.

use crate::embed::{Algorithm, BoundingBox, Drawing, EdgeRecord};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::graph::InputGraph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

pub const GRAPH_FORMAT: &str = "grid-fary-graph-v1";
pub const DRAWING_FORMAT: &str = "grid-fary-drawing-v1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[serde(default)]
    format: Option<String>,
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<BTreeMap<String, Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    root: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DrawingDoc {
    format: String,
    algorithm: String,
    positions: BTreeMap<String, [i64; 2]>,
    edges: Vec<(usize, usize, u64)>,
    bbox: [i64; 4],
    triples_used: usize,
}

fn vertex_key(key: &str, n: usize) -> Result<usize> {
    let v: usize = key.parse().map_err(|_| Error::Format(format!("vertex key {key:?} is not an integer")))?;
    if v >= n {
        return Err(Error::Format(format!("vertex key {v} out of range")));
    }
    Ok(v)
}

fn check_format(found: Option<&str>, expected: &str) -> Result<()> {
    match found {
        Some(f) if f != expected => Err(Error::Format(format!("unsupported format {f:?}, expected {expected:?}"))),
        _ => Ok(()),
    }
}

/// Parse a graph document. A missing `format` tag is accepted.
pub fn parse_graph(text: &str) -> Result<InputGraph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    check_format(doc.format.as_deref(), GRAPH_FORMAT)?;
    let mut g = InputGraph::new(doc.n, doc.edges.iter().map(|e| (e[0], e[1])).collect())?;
    if let Some(rot) = doc.rotation {
        if rot.len() != doc.n {
            return Err(Error::InvalidGraph(format!("rotation lists {} of {} vertices", rot.len(), doc.n)));
        }
        let mut lists = vec![Vec::new(); doc.n];
        for (k, list) in rot {
            lists[vertex_key(&k, doc.n)?] = list;
        }
        g = g.with_rotation(lists)?;
    }
    if let Some(r) = doc.root {
        g = g.with_root(r)?;
    }
    Ok(g)
}

pub fn graph_to_json(g: &InputGraph) -> String {
    let doc = GraphDoc {
        format: Some(GRAPH_FORMAT.to_string()),
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        rotation: g
            .rotation()
            .map(|r| r.iter().enumerate().map(|(v, l)| (v.to_string(), l.clone())).collect()),
        root: g.root(),
    };
    layout(&doc)
}

/// Parse a drawing document. Edge displacements are taken from the
/// positions; `bbox` must agree with them.
pub fn parse_drawing(text: &str) -> Result<Drawing> {
    let doc: DrawingDoc = serde_json::from_str(text)?;
    check_format(Some(&doc.format), DRAWING_FORMAT)?;
    let algorithm =
        Algorithm::parse(&doc.algorithm).ok_or_else(|| Error::Format(format!("unknown algorithm {:?}", doc.algorithm)))?;
    let n = doc.positions.len();
    if n == 0 {
        return Err(Error::Format("drawing has no vertices".into()));
    }
    let mut positions = vec![None; n];
    for (k, [x, y]) in &doc.positions {
        positions[vertex_key(k, n)?] = Some(Point::new(*x, *y));
    }
    let positions: Vec<Point> = positions.into_iter().map(|p| p.expect("keys are distinct and in range")).collect();
    let mut edges = Vec::with_capacity(doc.edges.len());
    for &(u, v, length) in &doc.edges {
        if u >= n || v >= n {
            return Err(Error::Format(format!("edge ({u},{v}) out of range")));
        }
        let d = positions[v].checked_sub(positions[u]).ok_or_else(|| Error::Overflow(format!("edge ({u},{v})")))?;
        edges.push(EdgeRecord { u, v, dx: d.x, dy: d.y, length });
    }
    let drawing = Drawing { algorithm, positions, edges, triples_used: doc.triples_used };
    let b = drawing.bbox();
    if [b.xmin, b.ymin, b.xmax, b.ymax] != doc.bbox {
        return Err(Error::Format(format!("bbox {:?} disagrees with the positions", doc.bbox)));
    }
    Ok(drawing)
}

pub fn drawing_to_json(d: &Drawing) -> String {
    let BoundingBox { xmin, ymin, xmax, ymax } = d.bbox();
    let doc = DrawingDoc {
        format: DRAWING_FORMAT.to_string(),
        algorithm: d.algorithm.as_str().to_string(),
        positions: d.positions.iter().enumerate().map(|(v, p)| (v.to_string(), [p.x, p.y])).collect(),
        edges: d.edges.iter().map(|e| (e.u, e.v, e.length)).collect(),
        bbox: [xmin, ymin, xmax, ymax],
        triples_used: d.triples_used,
    };
    layout(&doc)
}

/// Pretty-print with one top-level field per line and one array element or
/// map entry per line below it. Maps keyed by vertex id are listed in
/// numeric order.
fn layout<T: Serialize>(doc: &T) -> String {
    use serde_json::Value;
    let Value::Object(fields) = serde_json::to_value(doc).expect("document serializes") else {
        unreachable!("documents are objects")
    };
    let compact = |v: &Value| serde_json::to_string(v).expect("value serializes");
    let mut lines = Vec::new();
    for (name, value) in &fields {
        let key = compact(&Value::String(name.clone()));
        let body = match value {
            Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
                let rows: Vec<String> = items.iter().map(|x| format!("    {}", compact(x))).collect();
                format!("[\n{}\n  ]", rows.join(",\n"))
            }
            Value::Object(map) if !map.is_empty() => {
                let mut entries: Vec<(&String, &Value)> = map.iter().collect();
                entries.sort_by_key(|(k, _)| (k.len(), k.as_str()));
                let rows: Vec<String> = entries
                    .iter()
                    .map(|(k, x)| format!("    {}: {}", compact(&Value::String((*k).clone())), compact(x)))
                    .collect();
                format!("{{\n{}\n  }}", rows.join(",\n"))
            }
            other => compact(other),
        };
        lines.push(format!("  {key}: {body}"));
    }
    format!("{{\n{}\n}}\n", lines.join(",\n"))
}

pub fn read_graph(path: &Path) -> Result<InputGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn read_drawing(path: &Path) -> Result<Drawing> {
    parse_drawing(&std::fs::read_to_string(path)?)
}
