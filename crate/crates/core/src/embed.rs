//! Drawing stars, trees and cacti with integer coordinates and integer edge
//! lengths.
//!
//! Every edge is a (possibly scaled) primitive Pythagorean triple. Trees and
//! cacti live in the first quadrant: each component receives a contiguous
//! block of the angle-sorted triples and is drawn inside the cone spanned by
//! the flattest and steepest triple of its block.

use crate::error::{Error, Result};
use crate::geom::{cross, Point};
use crate::graph::{
    assign_cactus, assign_tree, decompose_cactus, root_tree, CactusAssignment, CactusDecomposition, InputGraph,
    RootedTree, Successor, TreeAssignment,
};
use crate::pythagorean::{angle_sorted_prefix, slope_compare, PythTriple};
use num_integer::Integer;
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Star,
    Tree,
    Cactus,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Star => "star",
            Algorithm::Tree => "tree",
            Algorithm::Cactus => "cactus",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "star" => Some(Algorithm::Star),
            "tree" => Some(Algorithm::Tree),
            "cactus" => Some(Algorithm::Cactus),
            _ => None,
        }
    }
}

/// One drawn edge: `v` sits at `u + (dx, dy)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub dx: i64,
    pub dy: i64,
    pub length: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundingBox {
    pub xmin: i64,
    pub ymin: i64,
    pub xmax: i64,
    pub ymax: i64,
}

impl BoundingBox {
    pub fn of(points: &[Point]) -> Self {
        let mut b = BoundingBox { xmin: 0, ymin: 0, xmax: 0, ymax: 0 };
        if let Some(p) = points.first() {
            b = BoundingBox { xmin: p.x, ymin: p.y, xmax: p.x, ymax: p.y };
        }
        for p in points {
            b.xmin = b.xmin.min(p.x);
            b.ymin = b.ymin.min(p.y);
            b.xmax = b.xmax.max(p.x);
            b.ymax = b.ymax.max(p.y);
        }
        b
    }

    pub fn width(&self) -> u64 {
        (self.xmax as i128 - self.xmin as i128) as u64
    }

    pub fn height(&self) -> u64 {
        (self.ymax as i128 - self.ymin as i128) as u64
    }

    pub fn max_side(&self) -> u64 {
        self.width().max(self.height())
    }
}

/// A straight-line drawing on the integer grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    pub algorithm: Algorithm,
    /// Position of vertex `v` at index `v`.
    pub positions: Vec<Point>,
    /// Sorted by `(u, v)`.
    pub edges: Vec<EdgeRecord>,
    /// Size of the angle-sorted prefix the drawing was built from.
    pub triples_used: usize,
}

impl Drawing {
    fn new(algorithm: Algorithm, positions: Vec<Point>, mut edges: Vec<EdgeRecord>, triples_used: usize) -> Self {
        edges.sort_by_key(|e| (e.u, e.v));
        Drawing { algorithm, positions, edges, triples_used }
    }

    pub fn bbox(&self) -> BoundingBox {
        BoundingBox::of(&self.positions)
    }

    /// The vertex at the origin, if any.
    pub fn root(&self) -> Option<usize> {
        self.positions.iter().position(|&p| p == Point::ORIGIN)
    }
}

/// The wedge `apex + {a·low + b·high : a, b ≥ 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cone {
    pub apex: Point,
    pub low: Point,
    pub high: Point,
}

impl Cone {
    /// `low` must not be steeper than `high`; both must point into the open
    /// first quadrant. Equal directions give a ray.
    pub fn new(apex: Point, low: Point, high: Point) -> Result<Self> {
        let inside = |d: Point| d.x > 0 && d.y > 0;
        if !inside(low) || !inside(high) || cross(low, high) < 0 {
            return Err(Error::Invariant(format!("cone rays {low:?}, {high:?} are not ordered first-quadrant directions")));
        }
        Ok(Cone { apex, low, high })
    }

    pub fn from_triples(apex: Point, low: PythTriple, high: PythTriple) -> Result<Self> {
        Cone::new(apex, low.offset(), high.offset())
    }

    /// Weak containment: points on either bounding ray count as inside.
    pub fn contains(&self, p: Point) -> bool {
        let d = Point::new(p.x - self.apex.x, p.y - self.apex.y);
        if d == Point::ORIGIN {
            return true;
        }
        cross(self.low, d) >= 0 && cross(d, self.high) >= 0 && (d.x > 0 || d.y > 0)
    }

    /// Whether `p` lies on one of the bounding rays (and not at the apex).
    pub fn on_boundary(&self, p: Point) -> bool {
        let d = p - self.apex;
        d != Point::ORIGIN && self.contains(p) && (cross(self.low, d) == 0 || cross(d, self.high) == 0)
    }
}

fn overflow(what: &str) -> Error {
    Error::Overflow(format!("coordinates exceed 64 bits while placing {what}"))
}

fn place(base: Point, offset: Point, what: &str) -> Result<Point> {
    base.checked_add(offset).ok_or_else(|| overflow(what))
}

/// Vertex `center` at the origin and its leaves split into four blocks of at
/// most ⌈(n−1)/4⌉, block `q` drawn with the angle-sorted prefix rotated by
/// `q` quarter turns.
pub fn draw_star(g: &InputGraph, triples: &[PythTriple]) -> Result<Drawing> {
    let n = g.n();
    if n == 1 {
        return Ok(Drawing::new(Algorithm::Star, vec![Point::ORIGIN], Vec::new(), 0));
    }
    if g.edges().len() + 1 != n {
        return Err(Error::Unsupported("not a star".into()));
    }
    let center = match g.root() {
        Some(r) if g.degree(r) == n - 1 => r,
        Some(r) => return Err(Error::Unsupported(format!("root {r} is not the center of a star"))),
        None => (0..n).find(|&v| g.degree(v) == n - 1).ok_or_else(|| Error::Unsupported("not a star".into()))?,
    };
    let per_quadrant = (n - 1).div_ceil(4);
    if triples.len() < per_quadrant {
        return Err(Error::Invariant(format!("{per_quadrant} triples needed, {} supplied", triples.len())));
    }
    let mut positions = vec![Point::ORIGIN; n];
    let mut edges = Vec::with_capacity(n - 1);
    for (i, &leaf) in g.neighbors(center).iter().enumerate() {
        let t = triples[i % per_quadrant];
        let mut offset = t.offset();
        for _ in 0..i / per_quadrant {
            offset = offset.rot90();
        }
        positions[leaf] = offset;
        edges.push(EdgeRecord { u: center, v: leaf, dx: offset.x, dy: offset.y, length: t.ell });
    }
    Ok(Drawing::new(Algorithm::Star, positions, edges, per_quadrant))
}

/// Root at the origin, every child at the first triple of its block, every
/// subtree drawn recursively with exactly its own block.
pub fn draw_tree(tree: &RootedTree, assignment: &TreeAssignment, triples: &[PythTriple]) -> Result<Drawing> {
    if triples.len() < assignment.budget {
        return Err(Error::Invariant("assignment refers past the supplied triples".into()));
    }
    let mut positions = vec![Point::ORIGIN; tree.n()];
    let mut edges = Vec::with_capacity(tree.n().saturating_sub(1));
    for &u in &tree.order {
        for &c in &tree.children[u] {
            let t = triples[assignment.block[c].start];
            positions[c] = place(positions[u], t.offset(), "a tree vertex")?;
            edges.push(EdgeRecord { u, v: c, dx: t.x as i64, dy: t.y as i64, length: t.ell });
        }
    }
    Ok(Drawing::new(Algorithm::Tree, positions, edges, assignment.budget))
}

/// Canonical drawing of one cycle, relative to its origin at (0, 0).
///
/// `left[k]` / `right[k]` hold the position of the k-th vertex of the
/// respective path (index 0 is the origin) and the length of the edge that
/// reaches it. Both paths end at the terminal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCycle {
    pub left: Vec<(Point, u64)>,
    pub right: Vec<(Point, u64)>,
}

impl CanonicalCycle {
    pub fn terminal(&self) -> Point {
        self.left.last().unwrap().0
    }
}

/// Draw a cycle with `left_edges` = i and `right_edges` = j edges on its two
/// paths using the flat and the steep triple.
pub fn draw_cycle_canonical(left_edges: usize, right_edges: usize, flat: PythTriple, steep: PythTriple) -> Result<CanonicalCycle> {
    let (i, j) = (left_edges, right_edges);
    if slope_compare(flat, steep) != Ordering::Less {
        return Err(Error::Invariant(format!("cycle triples {flat:?} and {steep:?} are not strictly angle-ordered")));
    }
    if j == 0 || i + j < 3 || !(i == j || i == j + 1) {
        return Err(Error::Invariant(format!("cycle paths of {i} and {j} edges cannot be drawn canonically")));
    }
    let (f, s) = (flat.offset(), steep.offset());
    let mut left = vec![(Point::ORIGIN, 0)];
    let mut right = vec![(Point::ORIGIN, 0)];
    let step = |path: &mut Vec<(Point, u64)>, d: Point, len: u64| -> Result<()> {
        let p = place(path.last().unwrap().0, d, "a cycle vertex")?;
        path.push((p, len));
        Ok(())
    };
    if i == 2 && j == 1 {
        let l = flat.y.lcm(&steep.y);
        let (ks, kf) = ((l / steep.y) as i64, (l / flat.y) as i64);
        let v = s.checked_scale(ks).ok_or_else(|| overflow("a triangle"))?;
        let t = f.checked_scale(kf).ok_or_else(|| overflow("a triangle"))?;
        left.push((v, steep.ell * ks as u64));
        left.push((t, (t.x - v.x) as u64));
        right.push((t, flat.ell * kf as u64));
    } else if i == j {
        for _ in 1..j {
            step(&mut right, f, flat.ell)?;
        }
        step(&mut right, s, steep.ell)?;
        step(&mut left, s, steep.ell)?;
        for _ in 1..i {
            step(&mut left, f, flat.ell)?;
        }
    } else {
        for _ in 1..j {
            step(&mut right, f, flat.ell)?;
        }
        let double = s.checked_scale(2).ok_or_else(|| overflow("a cycle vertex"))?;
        step(&mut right, double, 2 * steep.ell)?;
        step(&mut left, s, steep.ell)?;
        step(&mut left, s, steep.ell)?;
        for _ in 2..i {
            step(&mut left, f, flat.ell)?;
        }
    }
    debug_assert_eq!(left.last().unwrap().0, right.last().unwrap().0);
    Ok(CanonicalCycle { left, right })
}

/// Root at the origin; child vertices as in [`draw_tree`], child cycles in
/// their canonical drawing, and the subcactus of every cut vertex translated
/// to that vertex.
pub fn draw_cactus(decomp: &CactusDecomposition, assignment: &CactusAssignment, triples: &[PythTriple]) -> Result<Drawing> {
    if triples.len() < assignment.budget {
        return Err(Error::Invariant("assignment refers past the supplied triples".into()));
    }
    let n = decomp.n();
    let mut positions = vec![Point::ORIGIN; n];
    let mut edges = Vec::with_capacity(n);
    for &u in &decomp.order {
        for s in &decomp.vertices[u].successors {
            match *s {
                Successor::Vertex(w) => {
                    let block = assignment.vertex_block[w].as_ref().ok_or_else(|| Error::Invariant(format!("vertex {w} has no block")))?;
                    let t = triples[block.start];
                    positions[w] = place(positions[u], t.offset(), "a cactus vertex")?;
                    edges.push(EdgeRecord { u, v: w, dx: t.x as i64, dy: t.y as i64, length: t.ell });
                }
                Successor::Cycle(c) => {
                    let cyc = &decomp.cycles[c];
                    let (fi, si) = assignment.cycle_pair[c];
                    let canon = draw_cycle_canonical(cyc.left_edges(), cyc.right_edges(), triples[fi], triples[si])?;
                    for (path, drawn) in [(&cyc.left, &canon.left), (&cyc.right, &canon.right)] {
                        for k in 1..path.len() {
                            let (a, b) = (path[k - 1], path[k]);
                            let p = place(positions[u], drawn[k].0, "a cycle vertex")?;
                            positions[b] = p;
                            let d = drawn[k].0 - drawn[k - 1].0;
                            edges.push(EdgeRecord { u: a, v: b, dx: d.x, dy: d.y, length: drawn[k].1 });
                        }
                    }
                }
            }
        }
    }
    Ok(Drawing::new(Algorithm::Cactus, positions, edges, assignment.budget))
}

/// Star drawing straight from a graph.
pub fn embed_star(g: &InputGraph) -> Result<Drawing> {
    let k = (g.n().saturating_sub(1)).div_ceil(4);
    draw_star(g, &angle_sorted_prefix(k))
}

/// Tree drawing straight from a graph.
pub fn embed_tree(g: &InputGraph) -> Result<Drawing> {
    let tree = root_tree(g)?;
    let triples = angle_sorted_prefix(tree.leaf_count() as usize);
    let assignment = assign_tree(&tree, triples.len())?;
    draw_tree(&tree, &assignment, &triples)
}

/// Cactus drawing straight from a graph.
pub fn embed_cactus(g: &InputGraph) -> Result<Drawing> {
    let decomp = decompose_cactus(g)?;
    let triples = angle_sorted_prefix(decomp.budget() as usize);
    let assignment = assign_cactus(&decomp, triples.len())?;
    draw_cactus(&decomp, &assignment, &triples)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(x: u64, y: u64, ell: u64) -> PythTriple {
        PythTriple { x, y, ell }
    }

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn star(n: usize) -> InputGraph {
        InputGraph::new(n, (1..n).map(|i| (0, i)).collect()).unwrap()
    }

    #[test]
    fn star_with_four_leaves() {
        let d = embed_star(&star(5)).unwrap();
        assert_eq!(d.positions, vec![p(0, 0), p(3, 4), p(-4, 3), p(-3, -4), p(4, -3)]);
        assert!(d.edges.iter().all(|e| e.length == 5));
        assert_eq!(d.triples_used, 1);
    }

    #[test]
    fn star_with_one_leaf_and_none() {
        let d = embed_star(&star(2)).unwrap();
        assert_eq!(d.positions, vec![p(0, 0), p(3, 4)]);
        let single = embed_star(&InputGraph::new(1, vec![]).unwrap()).unwrap();
        assert_eq!(single.positions, vec![p(0, 0)]);
        assert!(single.edges.is_empty());
    }

    #[test]
    fn star_with_twelve_leaves() {
        let d = embed_star(&star(13)).unwrap();
        // the first three primitive triples are (3,4,5), (4,3,5), (5,12,13)
        assert_eq!(&d.positions[1..4], &[p(4, 3), p(3, 4), p(5, 12)]);
        assert_eq!(d.positions[4], p(-3, 4));
        let max = d.positions.iter().map(|q| q.x.abs().max(q.y.abs())).max().unwrap();
        assert_eq!(max, 12);
        assert_eq!(d.triples_used, 3);
    }

    #[test]
    fn path_reuses_its_single_triple() {
        let g = InputGraph::new(3, vec![(0, 1), (1, 2)]).unwrap().with_root(0).unwrap();
        let d = embed_tree(&g).unwrap();
        assert_eq!(d.positions, vec![p(0, 0), p(3, 4), p(6, 8)]);
        assert!(d.edges.iter().all(|e| e.length == 5));
    }

    #[test]
    fn depth_one_tree_follows_rotation() {
        let g = star(4).with_root(0).unwrap();
        let d = embed_tree(&g).unwrap();
        assert_eq!(&d.positions[1..], &[p(4, 3), p(3, 4), p(5, 12)]);
        let g = star(5).with_root(0).unwrap();
        assert_eq!(&embed_tree(&g).unwrap().positions[1..], &[p(12, 5), p(4, 3), p(3, 4), p(5, 12)]);
        let g = star(5).with_rotation(vec![vec![3, 1, 4, 2], vec![0], vec![0], vec![0], vec![0]]).unwrap().with_root(0).unwrap();
        assert_eq!(&embed_tree(&g).unwrap().positions[1..], &[p(4, 3), p(5, 12), p(12, 5), p(3, 4)]);
        assert_eq!(embed_tree(&InputGraph::new(1, vec![]).unwrap()).unwrap().positions, vec![p(0, 0)]);
    }

    #[test]
    fn canonical_four_cycle() {
        let c = draw_cycle_canonical(2, 2, t(4, 3, 5), t(3, 4, 5)).unwrap();
        assert_eq!(c.right, vec![(p(0, 0), 0), (p(4, 3), 5), (p(7, 7), 5)]);
        assert_eq!(c.left, vec![(p(0, 0), 0), (p(3, 4), 5), (p(7, 7), 5)]);
    }

    #[test]
    fn canonical_five_cycle() {
        let c = draw_cycle_canonical(3, 2, t(4, 3, 5), t(3, 4, 5)).unwrap();
        assert_eq!(c.right, vec![(p(0, 0), 0), (p(4, 3), 5), (p(10, 11), 10)]);
        assert_eq!(c.left, vec![(p(0, 0), 0), (p(3, 4), 5), (p(6, 8), 5), (p(10, 11), 5)]);
    }

    #[test]
    fn canonical_triangle() {
        let c = draw_cycle_canonical(2, 1, t(4, 3, 5), t(3, 4, 5)).unwrap();
        assert_eq!(c.left, vec![(p(0, 0), 0), (p(9, 12), 15), (p(16, 12), 7)]);
        assert_eq!(c.right, vec![(p(0, 0), 0), (p(16, 12), 20)]);
    }

    #[test]
    fn canonical_rejects_bad_input() {
        assert!(draw_cycle_canonical(2, 2, t(3, 4, 5), t(4, 3, 5)).is_err());
        assert!(draw_cycle_canonical(3, 1, t(4, 3, 5), t(3, 4, 5)).is_err());
        assert!(draw_cycle_canonical(1, 1, t(4, 3, 5), t(3, 4, 5)).is_err());
    }

    #[test]
    fn long_even_cycle_is_a_parallelogram() {
        let c = draw_cycle_canonical(6, 6, t(4, 3, 5), t(3, 4, 5)).unwrap();
        assert_eq!(c.terminal(), p(5 * 4 + 3, 5 * 3 + 4));
        assert_eq!(c.right.iter().filter(|e| e.1 == 5).count(), 6);
    }

    #[test]
    fn single_triangle_cactus() {
        let g = InputGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap().with_root(0).unwrap();
        let d = embed_cactus(&g).unwrap();
        assert_eq!(d.positions, vec![p(0, 0), p(9, 12), p(16, 12)]);
        assert_eq!(d.triples_used, 2);
        let lengths: Vec<u64> = d.edges.iter().map(|e| e.length).collect();
        assert_eq!(lengths, vec![15, 20, 7]);
    }

    #[test]
    fn single_four_cycle_cactus() {
        let g = InputGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap().with_root(0).unwrap();
        let d = embed_cactus(&g).unwrap();
        assert_eq!(d.positions, vec![p(0, 0), p(3, 4), p(7, 7), p(4, 3)]);
        assert_eq!(d.bbox().max_side(), 7);
    }

    #[test]
    fn cone_containment() {
        let c = Cone::new(p(1, 1), p(4, 3), p(3, 4)).unwrap();
        assert!(c.contains(p(1, 1)));
        assert!(c.contains(p(5, 4)));
        assert!(c.on_boundary(p(5, 4)));
        assert!(c.contains(p(3, 3)));
        assert!(!c.contains(p(5, 2)));
        assert!(!c.contains(p(0, 0)));
        assert!(Cone::new(p(0, 0), p(3, 4), p(4, 3)).is_err());
        assert!(Cone::new(p(0, 0), p(1, 0), p(4, 3)).is_err());
    }
}
