//! Seeded random instances.
//!
//! All randomness comes from [`SplitMix64`], written out here so that any
//! implementation can reproduce the same instances from the same seed:
//!
//! ```text
//! state ← state + 0x9E3779B97F4A7C15            (mod 2⁶⁴)
//! z ← state
//! z ← (z ⊕ (z ≫ 30)) · 0xBF58476D1CE4E5B9       (mod 2⁶⁴)
//! z ← (z ⊕ (z ≫ 27)) · 0x94D049BB133111EB       (mod 2⁶⁴)
//! output z ⊕ (z ≫ 31)
//! ```
//!
//! `below(b)` draws outputs until one is at least `(2⁶⁴ − b) mod b` and
//! returns it reduced mod `b`, which is exactly uniform on `0..b`.

use crate::error::{Error, Result};
use crate::graph::InputGraph;
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform on `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % bound;
            }
        }
    }

    /// Uniform on `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }

    /// True with probability `percent`/100.
    pub fn percent(&mut self, percent: u8) -> bool {
        self.below(100) < percent as u64
    }

    /// Fisher–Yates, from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenKind {
    Tree,
    Cactus,
    Star,
    Path,
    Balanced,
}

impl GenKind {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "tree" => GenKind::Tree,
            "cactus" => GenKind::Cactus,
            "star" => GenKind::Star,
            "path" => GenKind::Path,
            "balanced" => GenKind::Balanced,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    /// Trees only: no vertex deeper than this below vertex 0 of the construction.
    pub depth_cap: Option<u64>,
    /// Cacti only: exact number of cycles. Chosen at random when absent.
    pub cycles: Option<usize>,
    /// Cacti only: chance that a cycle is a triangle.
    pub triangle_percent: u8,
    /// Cacti only: longest cycle, at least 3.
    pub max_cycle_len: usize,
    /// Shuffle vertex ids (trees, balanced trees and cacti).
    pub relabel: bool,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { depth_cap: None, cycles: None, triangle_percent: 30, max_cycle_len: 12, relabel: true }
    }
}

/// Statistics known from the construction, relative to the graph's default root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroundTruth {
    pub root: usize,
    /// t: non-root vertices of degree one.
    pub leaves: u64,
    /// BFS eccentricity of the root.
    pub height: u64,
    /// o
    pub cycles: u64,
    /// δ
    pub triangles: u64,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: InputGraph,
    pub truth: GroundTruth,
}

fn infeasible(msg: impl Into<String>) -> Error {
    Error::Infeasible(msg.into())
}

fn random_tree(n: usize, rng: &mut SplitMix64, depth_cap: Option<u64>, balanced: bool) -> Result<Vec<(usize, usize)>> {
    if let Some(0) = depth_cap {
        if n > 1 {
            return Err(infeasible("depth cap 0 admits only a single vertex"));
        }
    }
    let mut depth = vec![0u64; n];
    // vertices that may still receive children under the depth cap
    let mut open: Vec<usize> = vec![0];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let p = if balanced {
            // parent among the first half keeps the depth logarithmic
            rng.below(i.div_ceil(2) as u64) as usize
        } else if depth_cap.is_some() {
            open[rng.below(open.len() as u64) as usize]
        } else {
            rng.below(i as u64) as usize
        };
        depth[i] = depth[p] + 1;
        if depth_cap.is_none_or(|cap| depth[i] < cap) {
            open.push(i);
        }
        edges.push((p, i));
    }
    Ok(edges)
}

/// Edge list plus cycle and triangle counts.
type CactusEdges = (Vec<(usize, usize)>, u64, u64);

fn random_cactus(n: usize, rng: &mut SplitMix64, params: &GenParams) -> Result<CactusEdges> {
    if params.max_cycle_len < 3 {
        return Err(infeasible("cycles need at least three vertices"));
    }
    if params.triangle_percent > 100 {
        return Err(infeasible("triangle percentage above 100"));
    }
    let spare = n - 1;
    let o = match params.cycles {
        Some(o) => o,
        None => rng.below((spare / 2) as u64 / 2 + 1) as usize,
    };
    if 2 * o > spare {
        return Err(infeasible(format!("{o} cycles need at least {} vertices, have {n}", 2 * o + 1)));
    }
    let mut lengths = Vec::with_capacity(o);
    let mut budget = spare;
    for k in 0..o {
        let reserve = 2 * (o - k - 1);
        let hi = params.max_cycle_len.min(budget - reserve + 1);
        let len = if hi == 3 || rng.percent(params.triangle_percent) { 3 } else { rng.range(4, hi as u64) as usize };
        budget -= len - 1;
        lengths.push(len);
    }
    let triangles = lengths.iter().filter(|&&l| l == 3).count() as u64;

    // None marks a pendant edge, Some(len) a cycle
    let mut items: Vec<Option<usize>> = lengths.into_iter().map(Some).chain(std::iter::repeat_n(None, budget)).collect();
    rng.shuffle(&mut items);
    let mut edges = Vec::with_capacity(n - 1 + o);
    let mut next = 1usize;
    for item in items {
        let a = rng.below(next as u64) as usize;
        match item {
            None => {
                edges.push((a, next));
                next += 1;
            }
            Some(len) => {
                let mut prev = a;
                for _ in 1..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, a));
            }
        }
    }
    debug_assert_eq!(next, n);
    Ok((edges, o as u64, triangles))
}

fn relabel(n: usize, edges: &mut [(usize, usize)], rng: &mut SplitMix64) {
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    for e in edges.iter_mut() {
        *e = (perm[e.0], perm[e.1]);
    }
}

fn eccentricity(g: &InputGraph, root: usize) -> u64 {
    let mut dist = vec![u64::MAX; g.n()];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut far = 0;
    while let Some(u) = queue.pop_front() {
        far = far.max(dist[u]);
        for &w in g.neighbors(u) {
            if dist[w] == u64::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    far
}

/// A deterministic pseudo-random graph of the requested class.
pub fn generate_random(kind: GenKind, n: usize, seed: u64, params: &GenParams) -> Result<Generated> {
    if n == 0 {
        return Err(infeasible("n must be at least 1"));
    }
    let mut rng = SplitMix64::new(seed);
    let (mut edges, cycles, triangles) = match kind {
        GenKind::Path => ((0..n - 1).map(|i| (i, i + 1)).collect(), 0, 0),
        GenKind::Star => ((1..n).map(|i| (0, i)).collect(), 0, 0),
        GenKind::Tree => (random_tree(n, &mut rng, params.depth_cap, false)?, 0, 0),
        GenKind::Balanced => (random_tree(n, &mut rng, params.depth_cap, true)?, 0, 0),
        GenKind::Cactus => random_cactus(n, &mut rng, params)?,
    };
    if params.relabel && matches!(kind, GenKind::Tree | GenKind::Balanced | GenKind::Cactus) {
        relabel(n, &mut edges, &mut rng);
    }
    let graph = InputGraph::new(n, edges)?;
    let root = graph.effective_root();
    let leaves = (0..n).filter(|&v| v != root && graph.degree(v) == 1).count() as u64;
    let truth = GroundTruth { root, leaves, height: eccentricity(&graph, root), cycles, triangles };
    Ok(Generated { graph, truth })
}
