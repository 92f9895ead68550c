//! Exact certification of drawings.
//!
//! A drawing is a truly integral Fáry embedding iff every vertex is a grid
//! point (guaranteed by the types), every edge length is an integer and no
//! two edges meet outside a shared endpoint. On top of that the bound checks
//! compare the drawing against the cone, distance, grid and budget
//! guarantees of the algorithm that produced it.

use crate::bounds::{self, PiSq};
use crate::embed::{Algorithm, Cone, Drawing};
use crate::error::{Error, Result};
use crate::geom::{exact_sqrt, isqrt_u128, orient_sign, Point};
use crate::graph::{
    assign_cactus, assign_tree, decompose_cactus, root_tree, CactusAssignment, CactusDecomposition, InputGraph,
    RootedTree, TreeAssignment,
};
use crate::pythagorean::{angle_sorted_prefix, PythTriple};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    NonIntegerLength,
    Crossing,
    CollinearOverlap,
    ConeBreach,
    DistanceBound,
    GridBound,
    BudgetMismatch,
}

/// Integer evidence for a violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Edge { u: usize, v: usize, dx: i64, dy: i64, recorded_length: u64, squared_length: u128, floor_sqrt: u128 },
    Displacement { u: usize, v: usize, recorded: [i64; 2], actual: [i64; 2] },
    EdgePair { first: [usize; 2], second: [usize; 2], orientations: [i8; 4] },
    Cone { apex: usize, low: [i64; 2], high: [i64; 2], vertex: usize, offset: [i64; 2] },
    Distance { from: usize, to: usize, squared_distance: u128, bound: String },
    Grid { side: u64, bound: String },
    Budget { expected: usize, recorded: usize, distinct_directions: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Witness,
}

/// Everything the bound checks need to know about how a drawing was built.
#[derive(Debug, Clone)]
pub enum Structure {
    Star { n: usize },
    Tree { tree: RootedTree, assignment: TreeAssignment, triples: Vec<PythTriple> },
    Cactus { decomp: CactusDecomposition, assignment: CactusAssignment, triples: Vec<PythTriple> },
}

impl Structure {
    /// Rebuild the decomposition of `g` for `profile`, rooted where the drawing
    /// put its origin when the graph names no root.
    pub fn for_drawing(g: &InputGraph, d: &Drawing, profile: Algorithm) -> Result<Self> {
        if g.n() != d.positions.len() {
            return Err(Error::Format(format!("graph has {} vertices, drawing has {}", g.n(), d.positions.len())));
        }
        let graph_edges: HashSet<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let drawn: HashSet<(usize, usize)> = d.edges.iter().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
        if graph_edges != drawn || drawn.len() != d.edges.len() {
            return Err(Error::Format("drawing edges do not match the graph".into()));
        }
        let g = match (g.root(), d.root()) {
            (Some(r), _) => {
                if d.positions[r] != Point::ORIGIN {
                    return Err(Error::Format(format!("root {r} is not drawn at the origin")));
                }
                g.clone()
            }
            (None, Some(r)) => g.clone().with_root(r)?,
            (None, None) => return Err(Error::Format("no vertex is drawn at the origin".into())),
        };
        Ok(match profile {
            Algorithm::Star => Structure::Star { n: g.n() },
            Algorithm::Tree => {
                let tree = root_tree(&g)?;
                let triples = angle_sorted_prefix(tree.leaf_count() as usize);
                let assignment = assign_tree(&tree, triples.len())?;
                Structure::Tree { tree, assignment, triples }
            }
            Algorithm::Cactus => {
                let decomp = decompose_cactus(&g)?;
                let triples = angle_sorted_prefix(decomp.budget() as usize);
                let assignment = assign_cactus(&decomp, triples.len())?;
                Structure::Cactus { decomp, assignment, triples }
            }
        })
    }

    pub fn profile(&self) -> Algorithm {
        match self {
            Structure::Star { .. } => Algorithm::Star,
            Structure::Tree { .. } => Algorithm::Tree,
            Structure::Cactus { .. } => Algorithm::Cactus,
        }
    }

    fn n(&self) -> usize {
        match self {
            Structure::Star { n } => *n,
            Structure::Tree { tree, .. } => tree.n(),
            Structure::Cactus { decomp, .. } => decomp.n(),
        }
    }
}

/// Every edge: endpoints differ by the recorded displacement and the squared
/// displacement is the square of the recorded positive length.
pub fn check_integrality(d: &Drawing) -> Vec<Violation> {
    let mut out = Vec::new();
    for e in &d.edges {
        let actual = d.positions[e.v] - d.positions[e.u];
        if actual != Point::new(e.dx, e.dy) {
            out.push(Violation {
                kind: ViolationKind::NonIntegerLength,
                witness: Witness::Displacement { u: e.u, v: e.v, recorded: [e.dx, e.dy], actual: [actual.x, actual.y] },
            });
            continue;
        }
        let sq = actual.norm_sq() as u128;
        let ok = e.length > 0 && exact_sqrt(sq) == Some(e.length as u128);
        if !ok {
            out.push(Violation {
                kind: ViolationKind::NonIntegerLength,
                witness: Witness::Edge {
                    u: e.u,
                    v: e.v,
                    dx: actual.x,
                    dy: actual.y,
                    recorded_length: e.length,
                    squared_length: sq,
                    floor_sqrt: isqrt_u128(sq),
                },
            });
        }
    }
    out
}

struct Segment {
    u: usize,
    v: usize,
    a: Point,
    b: Point,
    xmin: i64,
    xmax: i64,
    ymin: i64,
    ymax: i64,
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

fn orientations(s: &Segment, t: &Segment) -> [i8; 4] {
    [orient_sign(s.a, s.b, t.a), orient_sign(s.a, s.b, t.b), orient_sign(t.a, t.b, s.a), orient_sign(t.a, t.b, s.b)]
}

/// Two edges without a common endpoint that touch or cross.
fn crossing(s: &Segment, t: &Segment) -> Option<Violation> {
    let o = orientations(s, t);
    let proper = o[0] * o[1] < 0 && o[2] * o[3] < 0;
    let touching = (o[0] == 0 && on_segment(s.a, s.b, t.a))
        || (o[1] == 0 && on_segment(s.a, s.b, t.b))
        || (o[2] == 0 && on_segment(t.a, t.b, s.a))
        || (o[3] == 0 && on_segment(t.a, t.b, s.b));
    (proper || touching).then_some(Violation {
        kind: ViolationKind::Crossing,
        witness: Witness::EdgePair { first: [s.u, s.v], second: [t.u, t.v], orientations: o },
    })
}

/// Reduced direction of `q - p`, or `None` for a zero-length edge.
fn direction(p: Point, q: Point) -> Option<(i64, i64)> {
    let d = q - p;
    let g = d.x.gcd(&d.y);
    (g != 0).then(|| (d.x / g, d.y / g))
}

fn segments(d: &Drawing) -> Vec<Segment> {
    d.edges
        .iter()
        .map(|e| {
            let (a, b) = (d.positions[e.u], d.positions[e.v]);
            Segment { u: e.u, v: e.v, a, b, xmin: a.x.min(b.x), xmax: a.x.max(b.x), ymin: a.y.min(b.y), ymax: a.y.max(b.y) }
        })
        .collect()
}

/// Edges leaving a common vertex in the same direction. Grouping the edges
/// at each vertex by reduced direction finds exactly the pairs with a zero
/// orientation and a positive dot product.
fn shared_endpoint_overlaps(segs: &[Segment], n: usize) -> Vec<Violation> {
    let mut incident: Vec<Vec<(usize, (i64, i64))>> = vec![Vec::new(); n];
    for (i, s) in segs.iter().enumerate() {
        if let Some(dir) = direction(s.a, s.b) {
            incident[s.u].push((i, dir));
        }
        if let Some(dir) = direction(s.b, s.a) {
            incident[s.v].push((i, dir));
        }
    }
    let mut out = Vec::new();
    for list in &mut incident {
        list.sort_unstable_by_key(|&(i, dir)| (dir, i));
        for (k, &(i, dir)) in list.iter().enumerate() {
            for &(j, other) in &list[k + 1..] {
                if other != dir {
                    break;
                }
                let (s, t) = (&segs[i], &segs[j]);
                out.push(Violation {
                    kind: ViolationKind::CollinearOverlap,
                    witness: Witness::EdgePair { first: [s.u, s.v], second: [t.u, t.v], orientations: orientations(s, t) },
                });
            }
        }
    }
    out
}

/// Exact intersection tests over all edge pairs. Pairs are pruned by their
/// x- and y-extents before any predicate is evaluated; pairs with a common
/// endpoint are settled by comparing reduced directions at that endpoint.
pub fn check_planarity(d: &Drawing) -> Vec<Violation> {
    let mut segs = segments(d);
    segs.sort_by_key(|s| (s.xmin, s.u, s.v));
    let mut out = shared_endpoint_overlaps(&segs, d.positions.len());
    for i in 0..segs.len() {
        let s = &segs[i];
        for t in &segs[i + 1..] {
            if t.xmin > s.xmax {
                break;
            }
            if t.ymin > s.ymax || t.ymax < s.ymin || s.u == t.u || s.u == t.v || s.v == t.u || s.v == t.v {
                continue;
            }
            if let Some(v) = crossing(s, t) {
                out.push(v);
            }
        }
    }
    out
}

/// Exact slack of one bound comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Slack {
    pub check: String,
    /// value / bound (squared for distances) as `p/q`
    pub ratio: String,
    pub approx: f64,
}

impl Slack {
    fn new(check: &str, r: &BigRational) -> Self {
        Slack { check: check.to_string(), ratio: format!("{}/{}", r.numer(), r.denom()), approx: bounds::to_f64(r) }
    }
}

/// Outcome of [`check_bounds`].
#[derive(Debug, Clone, Default, Serialize)]
pub struct BoundsReport {
    pub violations: Vec<Violation>,
    /// Failures within 10⁻⁹ of the bound, attributable to the π² approximation.
    pub marginal: Vec<Violation>,
    pub slack: Vec<Slack>,
    /// Vertices lying exactly on a bounding ray of some cone.
    pub boundary_contacts: usize,
    pub cones_checked: usize,
    pub distances_checked: usize,
}

fn widened(bound: &BigRational) -> BigRational {
    let eps = BigRational::new(BigInt::from(1_000_000_001u64), BigInt::from(1_000_000_000u64));
    bound * eps
}

impl BoundsReport {
    fn distance(&mut self, from: usize, to: usize, dist_sq: u128, bound: &BigRational) {
        self.distances_checked += 1;
        if bounds::distance_within(dist_sq, bound) {
            return;
        }
        let v = Violation {
            kind: ViolationKind::DistanceBound,
            witness: Witness::Distance { from, to, squared_distance: dist_sq, bound: format!("{}/{}", bound.numer(), bound.denom()) },
        };
        if bounds::distance_within(dist_sq, &widened(bound)) {
            self.marginal.push(v);
        } else {
            self.violations.push(v);
        }
    }

    fn cone(&mut self, positions: &[Point], apex: usize, cone: &Cone, members: &[usize]) {
        self.cones_checked += 1;
        for &w in members {
            let p = positions[w];
            if !cone.contains(p) {
                let off = p - cone.apex;
                self.violations.push(Violation {
                    kind: ViolationKind::ConeBreach,
                    witness: Witness::Cone {
                        apex,
                        low: [cone.low.x, cone.low.y],
                        high: [cone.high.x, cone.high.y],
                        vertex: w,
                        offset: [off.x, off.y],
                    },
                });
            } else if cone.on_boundary(p) && w != apex {
                self.boundary_contacts += 1;
            }
        }
    }
}

fn farthest(positions: &[Point], from: usize, members: &[usize]) -> (usize, u128) {
    members
        .iter()
        .map(|&w| (w, (positions[w] - positions[from]).norm_sq() as u128))
        .max_by_key(|&(w, d)| (d, std::cmp::Reverse(w)))
        .unwrap_or((from, 0))
}

/// Canonical representative of an edge direction up to quarter turns and
/// scaling, or `None` for axis-parallel edges.
fn primitive_direction(dx: i64, dy: i64) -> Option<(i64, i64)> {
    if dx == 0 || dy == 0 {
        return None;
    }
    let mut p = Point::new(dx, dy);
    while !(p.x > 0 && p.y > 0) {
        p = p.rot90();
    }
    let g = p.x.gcd(&p.y);
    Some((p.x / g, p.y / g))
}

/// Grid, distance, cone and budget checks against `structure`.
pub fn check_bounds(d: &Drawing, structure: &Structure) -> Result<BoundsReport> {
    if structure.n() != d.positions.len() {
        return Err(Error::Format("structure and drawing disagree on the vertex count".into()));
    }
    let mut report = BoundsReport::default();
    let pos = &d.positions;
    let side = d.bbox().max_side();

    let (grid, expected_budget) = match structure {
        Structure::Star { n } => (bounds::star_grid(*n as u64, PiSq::Upper), (n.saturating_sub(1)).div_ceil(4)),
        Structure::Tree { tree, .. } => {
            (bounds::tree_grid(tree.leaf_count(), tree.height(), PiSq::Upper), tree.leaf_count() as usize)
        }
        Structure::Cactus { decomp, .. } => (
            bounds::cactus_grid(decomp.diameter(), decomp.leaf_count(), decomp.cycle_count(), decomp.triangle_count(), PiSq::Upper),
            decomp.budget() as usize,
        ),
    };
    report.slack.push(Slack::new("grid", &bounds::linear_slack(side as u128, &grid)));
    if !bounds::length_within(side as u128, &grid) {
        let v = Violation { kind: ViolationKind::GridBound, witness: Witness::Grid { side, bound: format!("{}/{}", grid.numer(), grid.denom()) } };
        if bounds::length_within(side as u128, &widened(&grid)) {
            report.marginal.push(v);
        } else {
            report.violations.push(v);
        }
    }

    let distinct: HashSet<(i64, i64)> = d.edges.iter().filter_map(|e| primitive_direction(e.dx, e.dy)).collect();
    if d.triples_used != expected_budget || distinct.len() != expected_budget {
        report.violations.push(Violation {
            kind: ViolationKind::BudgetMismatch,
            witness: Witness::Budget { expected: expected_budget, recorded: d.triples_used, distinct_directions: distinct.len() },
        });
    }

    let mut worst_distance = BigRational::from_integer(BigInt::from(0));
    match structure {
        Structure::Star { .. } => {}
        Structure::Tree { tree, assignment, triples } => {
            let t = tree.leaf_count();
            for v in 0..tree.n() {
                if tree.children[v].is_empty() {
                    continue;
                }
                let members = tree.subtree(v);
                let block = &assignment.block[v];
                let cone = Cone::from_triples(pos[v], triples[block.start], triples[block.end - 1])?;
                report.cone(pos, v, &cone, &members);
                let bound = bounds::tree_grid(t, tree.depth[v], PiSq::Upper);
                let (far, dist_sq) = farthest(pos, v, &members);
                report.distance(v, far, dist_sq, &bound);
                worst_distance = worst_distance.max(bounds::squared_slack(dist_sq, &bound));
            }
        }
        Structure::Cactus { decomp, assignment, triples } => {
            let budget = decomp.budget();
            for v in 0..decomp.n() {
                let node = &decomp.vertices[v];
                if node.successors.is_empty() {
                    continue;
                }
                let members = decomp.subcactus(v);
                let block = assignment.vertex_block[v].as_ref().ok_or_else(|| Error::Invariant(format!("vertex {v} has no block")))?;
                let cone = Cone::from_triples(pos[v], triples[block.start], triples[block.end - 1])?;
                report.cone(pos, v, &cone, &members);
                let census = node.stats.census;
                let bound = bounds::cactus_distance(node.stats.diameter, census.cycles, census.triangles, budget, PiSq::Upper);
                let (far, dist_sq) = farthest(pos, v, &members);
                report.distance(v, far, dist_sq, &bound);
                worst_distance = worst_distance.max(bounds::squared_slack(dist_sq, &bound));
            }
            for (c, cyc) in decomp.cycles.iter().enumerate() {
                let s = cyc.origin;
                let block = &assignment.cycle_block[c];
                let component = decomp.cycle_component(c);
                let cone = Cone::from_triples(pos[s], triples[block.start], triples[block.end - 1])?;
                report.cone(pos, s, &cone, &component);
                let (fi, si) = assignment.cycle_pair[c];
                let ring: Vec<usize> = cyc.left.iter().chain(cyc.right.iter()).copied().collect();
                let cone = Cone::from_triples(pos[s], triples[fi], triples[si])?;
                report.cone(pos, s, &cone, &ring);
                let bound = bounds::cycle_distance(cyc.len() as u64, budget, PiSq::Upper);
                let (far, dist_sq) = farthest(pos, s, &ring);
                report.distance(s, far, dist_sq, &bound);
            }
        }
    }
    if !matches!(structure, Structure::Star { .. }) {
        report.slack.push(Slack::new("distance_squared", &worst_distance));
    }
    Ok(report)
}

/// Pass/fail summary of one check category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: &'static str,
    pub passed: bool,
    pub violations: usize,
}

/// The full certificate.
#[derive(Debug, Clone, Serialize)]
pub struct CertReport {
    pub passed: bool,
    pub vertices: usize,
    pub edges: usize,
    pub checks: Vec<CheckSummary>,
    pub violations: Vec<Violation>,
    pub marginal: Vec<Violation>,
    pub slack: Vec<Slack>,
    pub boundary_contacts: usize,
}

impl CertReport {
    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }
}

/// Run every check. Bound checks need the structure; without one only the
/// definition-level checks run.
pub fn certify(d: &Drawing, structure: Option<&Structure>) -> Result<CertReport> {
    let mut violations = check_integrality(d);
    let integrality = violations.len();
    let planarity = check_planarity(d);
    let mut checks = vec![
        CheckSummary { check: "integrality", passed: integrality == 0, violations: integrality },
        CheckSummary { check: "planarity", passed: planarity.is_empty(), violations: planarity.len() },
    ];
    violations.extend(planarity);
    let mut marginal = Vec::new();
    let mut slack = Vec::new();
    let mut boundary_contacts = 0;
    if let Some(s) = structure {
        let b = check_bounds(d, s)?;
        for (name, kind) in [
            ("cones", ViolationKind::ConeBreach),
            ("distances", ViolationKind::DistanceBound),
            ("grid", ViolationKind::GridBound),
            ("budget", ViolationKind::BudgetMismatch),
        ] {
            let k = b.violations.iter().filter(|v| v.kind == kind).count();
            checks.push(CheckSummary { check: name, passed: k == 0, violations: k });
        }
        violations.extend(b.violations);
        marginal = b.marginal;
        slack = b.slack;
        boundary_contacts = b.boundary_contacts;
    }
    Ok(CertReport {
        passed: violations.is_empty(),
        vertices: d.positions.len(),
        edges: d.edges.len(),
        checks,
        violations,
        marginal,
        slack,
        boundary_contacts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{embed_cactus, embed_star, embed_tree, EdgeRecord};

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn drawing(positions: Vec<Point>, edges: &[(usize, usize, u64)]) -> Drawing {
        let edges = edges
            .iter()
            .map(|&(u, v, length)| {
                let d = positions[v] - positions[u];
                EdgeRecord { u, v, dx: d.x, dy: d.y, length }
            })
            .collect();
        Drawing { algorithm: Algorithm::Tree, positions, edges, triples_used: 0 }
    }

    #[test]
    fn integrality_examples() {
        assert!(check_integrality(&drawing(vec![p(0, 0), p(3, 4)], &[(0, 1, 5)])).is_empty());
        let bad = check_integrality(&drawing(vec![p(0, 0), p(1, 1)], &[(0, 1, 1)]));
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].kind, ViolationKind::NonIntegerLength);
        assert!(matches!(bad[0].witness, Witness::Edge { squared_length: 2, .. }));
        assert!(check_integrality(&drawing(vec![p(0, 0), p(16, 12)], &[(0, 1, 20)])).is_empty());
        // wrong recorded length on a perfect square
        assert_eq!(check_integrality(&drawing(vec![p(0, 0), p(3, 4)], &[(0, 1, 6)])).len(), 1);
        // displacement disagreeing with positions
        let mut d = drawing(vec![p(0, 0), p(3, 4)], &[(0, 1, 5)]);
        d.edges[0].dx = 4;
        assert!(matches!(check_integrality(&d)[0].witness, Witness::Displacement { .. }));
    }

    #[test]
    fn planarity_examples() {
        let cross = drawing(vec![p(0, 0), p(2, 0), p(1, -1), p(1, 1)], &[(0, 1, 2), (2, 3, 2)]);
        let v = check_planarity(&cross);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::Crossing);
        assert!(matches!(v[0].witness, Witness::EdgePair { orientations: [1, -1, -1, 1], .. } | Witness::EdgePair { orientations: [-1, 1, 1, -1], .. }));

        let overlap = drawing(vec![p(0, 0), p(3, 4), p(6, 8)], &[(0, 1, 5), (0, 2, 10)]);
        let v = check_planarity(&overlap);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::CollinearOverlap);

        // a straight path is fine
        let path = drawing(vec![p(0, 0), p(3, 4), p(6, 8)], &[(0, 1, 5), (1, 2, 5)]);
        assert!(check_planarity(&path).is_empty());

        // T-junction: endpoint of one edge in the interior of another
        let t = drawing(vec![p(0, 0), p(4, 0), p(2, 0), p(2, 3)], &[(0, 1, 4), (2, 3, 3)]);
        assert_eq!(check_planarity(&t).len(), 1);

        let star = embed_star(&InputGraph::new(13, (1..13).map(|i| (0, i)).collect()).unwrap()).unwrap();
        assert!(check_planarity(&star).is_empty());
    }

    #[test]
    fn path_bounds_pass() {
        let g = InputGraph::new(3, vec![(0, 1), (1, 2)]).unwrap().with_root(0).unwrap();
        let d = embed_tree(&g).unwrap();
        let s = Structure::for_drawing(&g, &d, Algorithm::Tree).unwrap();
        let r = check_bounds(&d, &s).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.distances_checked, 2);
        let cert = certify(&d, Some(&s)).unwrap();
        assert!(cert.passed);
    }

    #[test]
    fn triangle_bounds_pass() {
        let g = InputGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap().with_root(0).unwrap();
        let d = embed_cactus(&g).unwrap();
        let s = Structure::for_drawing(&g, &d, Algorithm::Cactus).unwrap();
        let cert = certify(&d, Some(&s)).unwrap();
        assert!(cert.passed, "{:?}", cert.violations);
    }

    #[test]
    fn inflated_drawing_breaks_grid_bound() {
        let g = InputGraph::new(3, vec![(0, 1), (1, 2)]).unwrap().with_root(0).unwrap();
        let mut d = embed_tree(&g).unwrap();
        for q in &mut d.positions {
            *q = *q * 1000;
        }
        for e in &mut d.edges {
            e.dx *= 1000;
            e.dy *= 1000;
            e.length *= 1000;
        }
        let s = Structure::for_drawing(&g, &d, Algorithm::Tree).unwrap();
        let cert = certify(&d, Some(&s)).unwrap();
        assert!(!cert.passed);
        assert_eq!(cert.count(ViolationKind::GridBound), 1);
        assert!(cert.count(ViolationKind::DistanceBound) >= 1);
        assert_eq!(cert.count(ViolationKind::NonIntegerLength), 0);
    }

    #[test]
    fn mismatched_graph_is_an_input_error() {
        let g = InputGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let other = InputGraph::new(3, vec![(0, 1), (0, 2)]).unwrap();
        let d = embed_tree(&g).unwrap();
        assert!(Structure::for_drawing(&other, &d, Algorithm::Tree).is_err());
    }

    #[test]
    fn cone_breach_detected() {
        let g = InputGraph::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap().with_root(0).unwrap();
        let mut d = embed_tree(&g).unwrap();
        // swap the two grandchildren: still integral and planar, but outside the cones' order
        d.positions.swap(2, 3);
        for e in &mut d.edges {
            let q = d.positions[e.v] - d.positions[e.u];
            e.dx = q.x;
            e.dy = q.y;
        }
        let s = Structure::for_drawing(&g, &d, Algorithm::Tree).unwrap();
        let r = check_bounds(&d, &s).unwrap();
        assert!(r.violations.is_empty());
        // move vertex 3 far outside vertex 1's cone
        d.positions[3] = p(100, 1);
        let r = check_bounds(&d, &s).unwrap();
        assert!(r.violations.iter().any(|v| v.kind == ViolationKind::ConeBreach));
    }

    #[test]
    fn directions_fold_quarter_turns() {
        assert_eq!(primitive_direction(-4, 3), Some((3, 4)));
        assert_eq!(primitive_direction(-6, -8), Some((3, 4)));
        assert_eq!(primitive_direction(8, 6), Some((4, 3)));
        assert_eq!(primitive_direction(7, 0), None);
    }
}
