//! Input graphs, their classification, and the rooted decompositions that
//! drive triple assignment.
//!
//! A cactus is decomposed at its root by a BFS orientation. Every cycle has a
//! unique vertex closest to the root (its origin) and is split into a left and
//! a right path that meet at its terminal; the left path is the longer one
//! when the cycle is odd. Statistics are kept for the subcactus `C_v` below
//! every vertex and `C_c` below every cycle.

use crate::error::{Error, Result};
use std::collections::{HashSet, VecDeque};
use std::ops::Range;

/// A simple connected undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Neighbours of each vertex, in rotation order when one was supplied and
    /// ascending otherwise.
    adj: Vec<Vec<usize>>,
    has_rotation: bool,
    root: Option<usize>,
}

impl InputGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) references a vertex outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("parallel edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = InputGraph { n, edges, adj, has_rotation: false, root: None };
        let reached = g.bfs_distances(0).iter().filter(|d| d.is_some()).count();
        if reached != n {
            return Err(Error::InvalidGraph(format!("graph is disconnected ({reached} of {n} vertices reachable from 0)")));
        }
        Ok(g)
    }

    /// Attach a rotation system: for every vertex, its neighbours in cyclic order.
    pub fn with_rotation(mut self, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != self.n {
            return Err(Error::InvalidGraph(format!("rotation lists {} vertices, graph has {}", rotation.len(), self.n)));
        }
        for (v, list) in rotation.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted != self.adj[v] {
                return Err(Error::InvalidGraph(format!("rotation at vertex {v} is not a permutation of its neighbours")));
            }
        }
        self.adj = rotation;
        self.has_rotation = true;
        Ok(self)
    }

    pub fn with_root(mut self, root: usize) -> Result<Self> {
        if root >= self.n {
            return Err(Error::InvalidGraph(format!("root {root} out of range")));
        }
        self.root = Some(root);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_rotation(&self) -> bool {
        self.has_rotation
    }

    /// The rotation system, if one was attached.
    pub fn rotation(&self) -> Option<&[Vec<usize>]> {
        self.has_rotation.then_some(self.adj.as_slice())
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([src]);
        dist[src] = Some(0);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn eccentricity(&self, v: usize) -> usize {
        self.bfs_distances(v).into_iter().flatten().max().unwrap_or(0)
    }

    /// The vertex of minimum eccentricity, smallest id on ties.
    pub fn center(&self) -> usize {
        if self.edges.len() + 1 == self.n {
            return self.tree_center();
        }
        (0..self.n).min_by_key(|&v| (self.eccentricity(v), v)).unwrap()
    }

    // Trees: the minimum-eccentricity vertices are the middle of a longest path.
    fn tree_center(&self) -> usize {
        let far = |src: usize| {
            let dist = self.bfs_distances(src);
            let (v, d) = dist.iter().enumerate().map(|(v, d)| (v, d.unwrap())).max_by_key(|&(v, d)| (d, std::cmp::Reverse(v))).unwrap();
            (v, d, dist)
        };
        let (a, _, _) = far(0);
        let (b, diam, from_a) = far(a);
        let from_b = self.bfs_distances(b);
        (0..self.n)
            .filter(|&v| {
                let (da, db) = (from_a[v].unwrap(), from_b[v].unwrap());
                da + db == diam && da.max(db) == diam.div_ceil(2)
            })
            .min()
            .unwrap()
    }

    /// The configured root, else [`center`](Self::center).
    pub fn effective_root(&self) -> usize {
        self.root.unwrap_or_else(|| self.center())
    }
}

/// Graph families handled by the embedder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Star,
    Tree,
    Cactus,
    Unsupported,
}

impl GraphClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Star => "star",
            GraphClass::Tree => "tree",
            GraphClass::Cactus => "cactus",
            GraphClass::Unsupported => "unsupported",
        }
    }
}

/// Star if one vertex is adjacent to all others and there are no other edges,
/// tree if acyclic, cactus if every edge lies on at most one cycle.
pub fn classify(g: &InputGraph) -> GraphClass {
    let n = g.n();
    let m = g.edges().len();
    if m + 1 == n {
        if n <= 2 || (0..n).any(|v| g.degree(v) == n - 1) {
            return GraphClass::Star;
        }
        return GraphClass::Tree;
    }
    if find_cycles(g).is_some() {
        GraphClass::Cactus
    } else {
        GraphClass::Unsupported
    }
}

/// Cycles of a cactus as vertex sequences in cyclic order, or `None` when
/// some edge lies on two cycles.
pub(crate) fn find_cycles(g: &InputGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    // iterative DFS
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    order.push(0);
    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        if *next < g.degree(u) {
            let w = g.neighbors(u)[*next];
            *next += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                order.push(w);
                stack.push((w, 0));
            }
        } else {
            stack.pop();
        }
    }
    // Tree edge (x, parent[x]) is identified by x.
    let mut used = vec![false; n];
    let mut cycles = Vec::new();
    for &(a, b) in g.edges() {
        let (lo, hi) = if depth[a] < depth[b] { (a, b) } else { (b, a) };
        if parent[hi] == lo {
            continue;
        }
        // back edge hi -> ancestor lo
        let mut cycle = vec![lo];
        let mut path = Vec::new();
        let mut x = hi;
        while x != lo {
            if used[x] {
                return None;
            }
            used[x] = true;
            path.push(x);
            x = parent[x];
            if x == usize::MAX {
                return None;
            }
        }
        path.reverse();
        cycle.extend(path);
        cycles.push(cycle);
    }
    Some(cycles)
}

/// A rooted tree with children in rotation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// L(T_v): leaves of the subtree below v.
    pub leaves: Vec<u64>,
    /// d(T_v): depth of the subtree below v.
    pub depth: Vec<u64>,
    /// Vertices in BFS order from the root.
    pub order: Vec<usize>,
}

impl RootedTree {
    /// t, the number of leaves.
    pub fn leaf_count(&self) -> u64 {
        self.leaves[self.root]
    }

    /// d, the depth of the tree.
    pub fn height(&self) -> u64 {
        self.depth[self.root]
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Vertices of T_v in preorder.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().rev());
        }
        out
    }
}

/// Neighbours of `v` other than `anchors`, in rotation order starting after
/// the first anchor.
fn successor_neighbors(g: &InputGraph, v: usize, anchors: &[usize]) -> Vec<usize> {
    let nb = g.neighbors(v);
    let start = nb.iter().position(|w| anchors.contains(w)).map_or(0, |p| p + 1);
    (0..nb.len()).map(|k| nb[(start + k) % nb.len()]).filter(|w| !anchors.contains(w)).collect()
}

/// Root an acyclic graph and compute leaf counts and depths.
pub fn root_tree(g: &InputGraph) -> Result<RootedTree> {
    if g.edges().len() + 1 != g.n() {
        return Err(Error::Unsupported("not a tree".into()));
    }
    let n = g.n();
    let root = g.effective_root();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        let anchors: Vec<usize> = parent[u].into_iter().collect();
        let kids = successor_neighbors(g, u, &anchors);
        for &w in &kids {
            parent[w] = Some(u);
            queue.push_back(w);
        }
        children[u] = kids;
    }
    let mut leaves = vec![0u64; n];
    let mut depth = vec![0u64; n];
    for &u in order.iter().rev() {
        if children[u].is_empty() {
            leaves[u] = u64::from(u != root);
        } else {
            leaves[u] = children[u].iter().map(|&c| leaves[c]).sum();
            depth[u] = 1 + children[u].iter().map(|&c| depth[c]).max().unwrap();
        }
    }
    Ok(RootedTree { root, parent, children, leaves, depth, order })
}

/// Leaves, cycles and triangles of a part of a cactus.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Census {
    pub leaves: u64,
    pub cycles: u64,
    pub triangles: u64,
}

impl Census {
    /// L + 2O, the number of triples the part consumes.
    pub fn budget(&self) -> u64 {
        self.leaves + 2 * self.cycles
    }

    fn add(&mut self, o: &Census) {
        self.leaves += o.leaves;
        self.cycles += o.cycles;
        self.triangles += o.triangles;
    }
}

/// Statistics of a subcactus hanging below a vertex or a cycle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SubStats {
    pub census: Census,
    /// Largest distance from the top vertex.
    pub height: u64,
    /// d(·), the diameter.
    pub diameter: u64,
}

/// A successor component of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Successor {
    /// Child vertex across a bridge.
    Vertex(usize),
    /// Child cycle whose origin is the vertex.
    Cycle(usize),
}

/// How a vertex hangs off the rest of the cactus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Root,
    Bridge { parent: usize },
    Cycle { cycle: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexNode {
    pub anchor: Anchor,
    pub successors: Vec<Successor>,
    /// Statistics of C_v.
    pub stats: SubStats,
}

impl VertexNode {
    pub fn is_leaf(&self) -> bool {
        matches!(self.anchor, Anchor::Bridge { .. }) && self.successors.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleNode {
    pub origin: usize,
    pub terminal: usize,
    /// p_←(c): origin, ..., terminal.
    pub left: Vec<usize>,
    /// p_→(c): origin, ..., terminal.
    pub right: Vec<usize>,
    /// Statistics of C_c, the cycle and everything hanging off its non-origin vertices.
    pub stats: SubStats,
    /// L_→, O_→, Δ_→: subcacti at internal right-path vertices.
    pub right_census: Census,
    /// L_←, O_←, Δ_←: subcacti at internal left-path vertices and the terminal.
    pub left_census: Census,
}

impl CycleNode {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len() - 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// i, edges on the left path.
    pub fn left_edges(&self) -> usize {
        self.left.len() - 1
    }

    /// j, edges on the right path.
    pub fn right_edges(&self) -> usize {
        self.right.len() - 1
    }

    /// Vertices other than the origin, in no particular order.
    pub fn non_origin(&self) -> impl Iterator<Item = usize> + '_ {
        self.left[1..].iter().chain(self.right[1..self.right.len() - 1].iter()).copied()
    }
}

/// A cactus rooted and oriented by BFS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusDecomposition {
    pub root: usize,
    pub dist: Vec<usize>,
    pub vertices: Vec<VertexNode>,
    pub cycles: Vec<CycleNode>,
    /// Vertices in discovery order: every vertex after the one it hangs off.
    pub order: Vec<usize>,
}

impl CactusDecomposition {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// t
    pub fn leaf_count(&self) -> u64 {
        self.vertices[self.root].stats.census.leaves
    }

    /// o
    pub fn cycle_count(&self) -> u64 {
        self.vertices[self.root].stats.census.cycles
    }

    /// δ
    pub fn triangle_count(&self) -> u64 {
        self.vertices[self.root].stats.census.triangles
    }

    /// d, the diameter of the whole cactus.
    pub fn diameter(&self) -> u64 {
        self.vertices[self.root].stats.diameter
    }

    /// t + 2o
    pub fn budget(&self) -> u64 {
        self.vertices[self.root].stats.census.budget()
    }

    /// Vertices with their own subcactus: the root, leaves and every vertex with successors.
    pub fn is_component_root(&self, v: usize) -> bool {
        let node = &self.vertices[v];
        v == self.root || node.is_leaf() || !node.successors.is_empty()
    }

    /// Vertices of C_v.
    pub fn subcactus(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            for s in &self.vertices[u].successors {
                match *s {
                    Successor::Vertex(w) => stack.push(w),
                    Successor::Cycle(c) => stack.extend(self.cycles[c].non_origin()),
                }
            }
        }
        out
    }

    /// Vertices of C_c, including the origin.
    pub fn cycle_component(&self, c: usize) -> Vec<usize> {
        let mut out = vec![self.cycles[c].origin];
        for w in self.cycles[c].non_origin() {
            out.extend(self.subcactus(w));
        }
        out
    }
}

/// Root a cactus, orient it by BFS and compute all statistics.
pub fn decompose_cactus(g: &InputGraph) -> Result<CactusDecomposition> {
    let raw_cycles = find_cycles(g).ok_or_else(|| Error::Unsupported("an edge lies on two cycles".into()))?;
    let n = g.n();
    let root = g.effective_root();
    let dist: Vec<usize> = g.bfs_distances(root).into_iter().map(|d| d.unwrap()).collect();

    // Cycle membership of every edge, keyed by the smaller endpoint.
    let mut cycles_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut rotated: Vec<Vec<usize>> = Vec::with_capacity(raw_cycles.len());
    for (id, cyc) in raw_cycles.iter().enumerate() {
        let origin_pos = (0..cyc.len()).min_by_key(|&k| dist[cyc[k]]).unwrap();
        let seq: Vec<usize> = (0..cyc.len()).map(|k| cyc[(origin_pos + k) % cyc.len()]).collect();
        debug_assert!(seq[1..].iter().all(|&w| dist[w] > dist[seq[0]]), "cycle origin must be unique");
        for &w in &seq {
            cycles_at[w].push(id);
        }
        rotated.push(seq);
    }

    let mut anchor = vec![Anchor::Root; n];
    let mut successors: Vec<Vec<Successor>> = vec![Vec::new(); n];
    let mut cycles: Vec<Option<CycleNode>> = vec![None; rotated.len()];
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    let mut queue = VecDeque::from([root]);
    visited[root] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        let anchors: Vec<usize> = match anchor[u] {
            Anchor::Root => Vec::new(),
            Anchor::Bridge { parent } => vec![parent],
            Anchor::Cycle { cycle } => {
                let seq = &rotated[cycle];
                let k = seq.iter().position(|&w| w == u).unwrap();
                vec![seq[(k + seq.len() - 1) % seq.len()], seq[(k + 1) % seq.len()]]
            }
        };
        let mut handled = HashSet::new();
        for w in successor_neighbors(g, u, &anchors) {
            if handled.contains(&w) {
                continue;
            }
            let cyc = cycles_at[u].iter().copied().find(|&c| rotated[c][0] == u && rotated[c].contains(&w));
            match cyc {
                None => {
                    anchor[w] = Anchor::Bridge { parent: u };
                    visited[w] = true;
                    successors[u].push(Successor::Vertex(w));
                    queue.push_back(w);
                    handled.insert(w);
                }
                Some(c) => {
                    let seq = &rotated[c];
                    let len = seq.len();
                    // w comes first around u, so the left path starts through w.
                    let through_w: Vec<usize> = if seq[1] == w {
                        seq.clone()
                    } else {
                        std::iter::once(seq[0]).chain(seq[1..].iter().rev().copied()).collect()
                    };
                    let i = len.div_ceil(2);
                    let left = through_w[..=i].to_vec();
                    let right: Vec<usize> = std::iter::once(u).chain(through_w[i..].iter().rev().copied()).collect();
                    handled.insert(through_w[1]);
                    handled.insert(through_w[len - 1]);
                    for &x in &through_w[1..] {
                        if visited[x] {
                            return Err(Error::Invariant(format!("vertex {x} reached twice during decomposition")));
                        }
                        visited[x] = true;
                        anchor[x] = Anchor::Cycle { cycle: c };
                    }
                    // BFS order along the cycle keeps "parent before child".
                    let mut members: Vec<usize> = through_w[1..].to_vec();
                    members.sort_by_key(|&x| (dist[x], x));
                    queue.extend(members);
                    cycles[c] = Some(CycleNode {
                        origin: u,
                        terminal: through_w[i],
                        left,
                        right,
                        stats: SubStats::default(),
                        right_census: Census::default(),
                        left_census: Census::default(),
                    });
                    successors[u].push(Successor::Cycle(c));
                }
            }
        }
    }
    if order.len() != n {
        return Err(Error::Invariant("decomposition did not reach every vertex".into()));
    }
    let mut cycles: Vec<CycleNode> = cycles
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invariant("a cycle was never reached from the root".into()))?;

    let mut stats = vec![SubStats::default(); n];
    for &u in order.iter().rev() {
        let mut census = Census::default();
        let mut branch_heights: Vec<u64> = Vec::new();
        let mut diameter = 0u64;
        if matches!(anchor[u], Anchor::Bridge { .. }) && successors[u].is_empty() {
            census.leaves = 1;
        }
        for s in &successors[u] {
            match *s {
                Successor::Vertex(w) => {
                    census.add(&stats[w].census);
                    branch_heights.push(stats[w].height + 1);
                    diameter = diameter.max(stats[w].diameter);
                }
                Successor::Cycle(c) => {
                    let cyc = &mut cycles[c];
                    let ring: Vec<usize> = cyc.left.iter().copied().chain(cyc.right[1..cyc.right.len() - 1].iter().rev().copied()).collect();
                    let len = ring.len();
                    let mut cc = Census { leaves: 0, cycles: 1, triangles: u64::from(len == 3) };
                    let mut heights = vec![0u64; len];
                    let mut diam = 0u64;
                    for k in 1..len {
                        let w = ring[k];
                        cc.add(&stats[w].census);
                        heights[k] = stats[w].height;
                        diam = diam.max(stats[w].diameter);
                    }
                    let mut branch = 0u64;
                    for (k, &h) in heights.iter().enumerate().skip(1) {
                        branch = branch.max(k.min(len - k) as u64 + h);
                    }
                    for a in 0..len {
                        for b in a + 1..len {
                            let gap = (b - a).min(len - (b - a)) as u64;
                            diam = diam.max(heights[a] + heights[b] + gap);
                        }
                    }
                    let mut right_census = Census::default();
                    for &w in &cyc.right[1..cyc.right.len() - 1] {
                        right_census.add(&stats[w].census);
                    }
                    let mut left_census = Census::default();
                    for &w in &cyc.left[1..] {
                        left_census.add(&stats[w].census);
                    }
                    cyc.stats = SubStats { census: cc, height: branch, diameter: diam };
                    cyc.right_census = right_census;
                    cyc.left_census = left_census;
                    census.add(&cc);
                    branch_heights.push(branch);
                    diameter = diameter.max(diam);
                }
            }
        }
        branch_heights.sort_unstable_by(|a, b| b.cmp(a));
        let height = branch_heights.first().copied().unwrap_or(0);
        let top_two = height + branch_heights.get(1).copied().unwrap_or(0);
        stats[u] = SubStats { census, height, diameter: diameter.max(top_two) };
    }

    let vertices = (0..n)
        .map(|v| VertexNode { anchor: anchor[v], successors: std::mem::take(&mut successors[v]), stats: stats[v] })
        .collect();
    Ok(CactusDecomposition { root, dist, vertices, cycles, order })
}

/// A rooted tree or a decomposed cactus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rooted {
    Tree(RootedTree),
    Cactus(CactusDecomposition),
}

/// Root and orient a tree or cactus according to its class.
pub fn root_and_orient(g: &InputGraph) -> Result<Rooted> {
    match classify(g) {
        GraphClass::Star | GraphClass::Tree => root_tree(g).map(Rooted::Tree),
        GraphClass::Cactus => decompose_cactus(g).map(Rooted::Cactus),
        GraphClass::Unsupported => Err(Error::Unsupported("graph is not a cactus".into())),
    }
}

/// Triple blocks of a tree: `block[v]` indexes the angle-sorted prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeAssignment {
    pub budget: usize,
    pub block: Vec<Range<usize>>,
}

/// Give every child a contiguous block of as many angle-sorted triples as
/// its subtree has leaves, blocks in rotation order.
pub fn assign_tree(tree: &RootedTree, available: usize) -> Result<TreeAssignment> {
    let budget = tree.leaf_count() as usize;
    if available < budget {
        return Err(Error::Invariant(format!("{budget} triples needed, {available} supplied")));
    }
    let mut block = vec![0..0; tree.n()];
    block[tree.root] = 0..budget;
    for &u in &tree.order {
        let mut at = block[u].start;
        for &c in &tree.children[u] {
            let size = tree.leaves[c] as usize;
            block[c] = at..at + size;
            at += size;
        }
        if !tree.children[u].is_empty() && at != block[u].end {
            return Err(Error::Invariant(format!("children of {u} do not exhaust its block")));
        }
    }
    Ok(TreeAssignment { budget, block })
}

/// Triple blocks of a cactus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusAssignment {
    pub budget: usize,
    /// P(v) for every vertex that owns triples.
    pub vertex_block: Vec<Option<Range<usize>>>,
    pub cycle_block: Vec<Range<usize>>,
    /// (flat, steep) indices reserved for drawing each cycle.
    pub cycle_pair: Vec<(usize, usize)>,
}

/// Split the first t + 2o angle-sorted triples over the successor components.
/// Within a cycle block: right-path subcacti in path order, then the cycle's
/// own two triples, then left-path subcacti from the terminal backwards.
pub fn assign_cactus(decomp: &CactusDecomposition, available: usize) -> Result<CactusAssignment> {
    let budget = decomp.budget() as usize;
    if available < budget {
        return Err(Error::Invariant(format!("{budget} triples needed, {available} supplied")));
    }
    let n = decomp.n();
    let mut vertex_block: Vec<Option<Range<usize>>> = vec![None; n];
    let mut cycle_block = vec![0..0; decomp.cycles.len()];
    let mut cycle_pair = vec![(0, 0); decomp.cycles.len()];
    vertex_block[decomp.root] = Some(0..budget);
    let size = |v: usize| decomp.vertices[v].stats.census.budget() as usize;
    for &u in &decomp.order {
        let Some(range) = vertex_block[u].clone() else { continue };
        let mut at = range.start;
        for s in &decomp.vertices[u].successors {
            match *s {
                Successor::Vertex(w) => {
                    vertex_block[w] = Some(at..at + size(w));
                    at += size(w);
                }
                Successor::Cycle(c) => {
                    let cyc = &decomp.cycles[c];
                    let start = at;
                    for &w in &cyc.right[1..cyc.right.len() - 1] {
                        if size(w) > 0 {
                            vertex_block[w] = Some(at..at + size(w));
                            at += size(w);
                        }
                    }
                    cycle_pair[c] = (at, at + 1);
                    at += 2;
                    for &w in cyc.left[1..].iter().rev() {
                        if size(w) > 0 {
                            vertex_block[w] = Some(at..at + size(w));
                            at += size(w);
                        }
                    }
                    cycle_block[c] = start..at;
                    if at - start != cyc.stats.census.budget() as usize {
                        return Err(Error::Invariant(format!("cycle {c} block size mismatch")));
                    }
                }
            }
        }
        if !decomp.vertices[u].successors.is_empty() && at != range.end {
            return Err(Error::Invariant(format!("successors of {u} do not exhaust its block")));
        }
    }
    Ok(CactusAssignment { budget, vertex_block, cycle_block, cycle_pair })
}
