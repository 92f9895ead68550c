use gridfary::embed::Algorithm;
use gridfary::generate::{generate_random, GenKind, GenParams, SplitMix64};
use gridfary::graph::{decompose_cactus, InputGraph, Successor};
use gridfary::io::{drawing_to_json, graph_to_json, parse_drawing, parse_graph};
use gridfary::pipeline::{draw_and_certify, draw_graph, DEFAULT_MAX_COORD_BITS};
use gridfary::verify::{certify, Structure};
use proptest::prelude::*;
use std::collections::{HashSet, VecDeque};

fn with_random_rotation(g: InputGraph, seed: u64) -> InputGraph {
    let mut rng = SplitMix64::new(seed);
    let rotation: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut l = g.neighbors(v).to_vec();
            rng.shuffle(&mut l);
            l
        })
        .collect();
    g.with_rotation(rotation).unwrap()
}

fn cactus_params(cycles: usize, triangle_percent: u8, max_cycle_len: usize) -> GenParams {
    GenParams { cycles: Some(cycles), triangle_percent, max_cycle_len, ..Default::default() }
}

/// Drawing survives JSON and is certified again from the parsed graph.
fn round_trip(g: &InputGraph) {
    let (drawn, report) = draw_and_certify(g, None, DEFAULT_MAX_COORD_BITS).unwrap();
    assert!(report.passed);
    let text = drawing_to_json(&drawn.drawing);
    let back = parse_drawing(&text).unwrap();
    assert_eq!(back, drawn.drawing);
    let g2 = parse_graph(&graph_to_json(g)).unwrap();
    let s = Structure::for_drawing(&g2, &back, back.algorithm).unwrap();
    let again = certify(&back, Some(&s)).unwrap();
    assert!(again.passed, "{:?}", again.violations);
    assert_eq!(again.slack, report.slack);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_trees_certify(n in 1usize..400, seed: u64, rot_seed: u64, rotate: bool) {
        let mut g = generate_random(GenKind::Tree, n, seed, &GenParams::default()).unwrap().graph;
        if rotate {
            g = with_random_rotation(g, rot_seed);
        }
        round_trip(&g);
    }

    #[test]
    fn random_cacti_certify(n in 3usize..300, seed: u64, frac in 0usize..=100, tri in 0u8..=100, maxlen in 3usize..16, rot_seed: u64) {
        let cycles = ((n - 1) / 2) * frac / 100;
        let g = generate_random(GenKind::Cactus, n, seed, &cactus_params(cycles, tri, maxlen)).unwrap().graph;
        round_trip(&with_random_rotation(g, rot_seed));
    }

    #[test]
    fn any_root_works(n in 3usize..120, seed: u64, root_pick: usize) {
        let g = generate_random(GenKind::Cactus, n, seed, &cactus_params((n - 1) / 4, 50, 8)).unwrap().graph;
        let r = root_pick % n;
        let g = g.with_root(r).unwrap();
        let (drawn, _) = draw_and_certify(&g, None, DEFAULT_MAX_COORD_BITS).unwrap();
        prop_assert_eq!(drawn.drawing.positions[r], gridfary::Point::ORIGIN);
    }

    #[test]
    fn drawing_is_deterministic(n in 1usize..200, seed: u64) {
        let g = generate_random(GenKind::Cactus, n.max(3), seed, &GenParams::default()).unwrap().graph;
        let a = draw_graph(&g, None, DEFAULT_MAX_COORD_BITS).unwrap().drawing;
        let b = draw_graph(&g, None, DEFAULT_MAX_COORD_BITS).unwrap().drawing;
        prop_assert_eq!(drawing_to_json(&a), drawing_to_json(&b));
    }

    #[test]
    fn trees_degenerate(n in 1usize..300, seed: u64, rot_seed: u64) {
        let g = with_random_rotation(generate_random(GenKind::Tree, n, seed, &GenParams::default()).unwrap().graph, rot_seed);
        let t = draw_graph(&g, Some(Algorithm::Tree), DEFAULT_MAX_COORD_BITS).unwrap().drawing;
        let c = draw_graph(&g, Some(Algorithm::Cactus), DEFAULT_MAX_COORD_BITS).unwrap().drawing;
        prop_assert_eq!(t.positions, c.positions);
        prop_assert_eq!(t.edges, c.edges);
    }
}

fn bfs(adj: &[Vec<usize>], inside: &HashSet<usize>, src: usize) -> Vec<Option<u64>> {
    let mut dist = vec![None; adj.len()];
    dist[src] = Some(0);
    let mut q = VecDeque::from([src]);
    while let Some(u) = q.pop_front() {
        for &w in &adj[u] {
            if inside.contains(&w) && dist[w].is_none() {
                dist[w] = Some(dist[u].unwrap() + 1);
                q.push_back(w);
            }
        }
    }
    dist
}

/// Census, height and diameter of every subcactus against brute force on
/// the induced subgraph.
#[test]
fn subcactus_statistics_match_brute_force() {
    for seed in 0..60u64 {
        let n = 5 + (seed as usize * 7) % 60;
        let p = cactus_params((n - 1) / 3, (seed * 17 % 101) as u8, 3 + seed as usize % 7);
        let gen = generate_random(GenKind::Cactus, n, seed, &p).unwrap();
        let g = gen.graph;
        let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
        let d = decompose_cactus(&g).unwrap();
        assert_eq!(d.root, gen.truth.root);
        assert_eq!((d.leaf_count(), d.cycle_count(), d.triangle_count()), (gen.truth.leaves, gen.truth.cycles, gen.truth.triangles));
        for v in 0..n {
            let node = &d.vertices[v];
            if node.successors.is_empty() && v != d.root {
                continue;
            }
            let members: HashSet<usize> = d.subcactus(v).into_iter().collect();
            let edges: usize = members.iter().map(|&u| adj[u].iter().filter(|w| members.contains(w)).count()).sum::<usize>() / 2;
            let cycles = (edges + 1 - members.len()) as u64;
            let leaves = members.iter().filter(|&&u| u != d.root && adj[u].len() == 1).count() as u64;
            let mut triangles = 0u64;
            for &a in &members {
                for &b in &adj[a] {
                    for &c in &adj[b] {
                        if a < b && b < c && members.contains(&b) && members.contains(&c) && adj[c].contains(&a) {
                            triangles += 1;
                        }
                    }
                }
            }
            let from_v = bfs(&adj, &members, v);
            let height = members.iter().map(|&u| from_v[u].unwrap()).max().unwrap();
            let diameter = members.iter().flat_map(|&a| {
                let da = bfs(&adj, &members, a);
                members.iter().map(move |&b| da[b].unwrap()).collect::<Vec<_>>()
            }).max().unwrap();
            let s = node.stats;
            assert_eq!((s.census.leaves, s.census.cycles, s.census.triangles), (leaves, cycles, triangles), "seed {seed} v {v}");
            assert_eq!(s.height, height, "height seed {seed} v {v}");
            assert_eq!(s.diameter, diameter, "diameter seed {seed} v {v}");
        }
        // every cycle's origin is its unique vertex closest to the root
        for c in &d.cycles {
            let ring: Vec<usize> = c.left.iter().chain(c.right.iter()).copied().collect();
            let min = ring.iter().map(|&w| d.dist[w]).min().unwrap();
            assert_eq!(d.dist[c.origin], min);
            assert_eq!(ring.iter().filter(|&&w| d.dist[w] == min).count(), 2, "origin appears once per path");
            assert!(d.vertices[c.origin].successors.iter().any(|s| matches!(s, Successor::Cycle(_))));
        }
    }
}

/// Adversarial shapes: long chains of triangles, triangles with many
/// pendant leaves, and deep cycle nests.
#[test]
fn structured_cacti_certify() {
    let mut cases: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    // chain of k triangles sharing cut vertices
    for k in [1usize, 2, 5, 20, 60] {
        let n = 2 * k + 1;
        let mut e = Vec::new();
        for i in 0..k {
            let (a, b, c) = (2 * i, 2 * i + 1, 2 * i + 2);
            e.extend([(a, b), (b, c), (c, a)]);
        }
        cases.push((n, e));
    }
    // triangles hanging off a star, with leaves on every triangle vertex
    {
        let mut e = Vec::new();
        let mut next = 1;
        for _ in 0..15 {
            let (a, b) = (next, next + 1);
            e.extend([(0, a), (a, b), (b, 0)]);
            next += 2;
            for w in [a, b] {
                for _ in 0..3 {
                    e.push((w, next));
                    next += 1;
                }
            }
        }
        cases.push((next, e));
    }
    // cycles of every length 3..=14 around one vertex
    {
        let mut e = Vec::new();
        let mut next = 1;
        for len in 3..=14 {
            let mut prev = 0;
            for _ in 1..len {
                e.push((prev, next));
                prev = next;
                next += 1;
            }
            e.push((prev, 0));
        }
        cases.push((next, e));
    }
    for (n, e) in cases {
        let g = InputGraph::new(n, e).unwrap();
        for root in [None, Some(0), Some(n - 1)] {
            let g = match root {
                Some(r) => g.clone().with_root(r).unwrap(),
                None => g.clone(),
            };
            let (_, report) = draw_and_certify(&g, None, DEFAULT_MAX_COORD_BITS).unwrap();
            assert!(report.passed);
        }
    }
}
