#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::HashSet;

use common::{edge_keys, oracle_adjacency, Edge};
use epgt_core::graph::{self, SimpleGraph};
use epgt_core::lattice::LatticePath;
use epgt_core::search::{enumerate_paths, find_representation, SearchBounds, SearchOutcome};

/// Plain backtracking: give every vertex any pool path, repeats allowed.
fn brute_force(g: &SimpleGraph, pool: &[LatticePath]) -> bool {
    fn go(g: &SimpleGraph, keys: &[HashSet<Edge>], chosen: &mut Vec<usize>) -> bool {
        let v = chosen.len();
        if v == g.n() {
            return true;
        }
        for p in 0..keys.len() {
            let fits = chosen
                .iter()
                .enumerate()
                .all(|(u, &q)| g.has_edge(u, v) == !keys[p].is_disjoint(&keys[q]));
            if fits {
                chosen.push(p);
                if go(g, keys, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let keys: Vec<HashSet<Edge>> = pool.iter().map(edge_keys).collect();
    go(g, &keys, &mut Vec::new())
}

fn agree(g: &SimpleGraph, bounds: &SearchBounds) {
    let pool = enumerate_paths(bounds).unwrap();
    let expected = brute_force(g, &pool);
    match find_representation(g, bounds).unwrap() {
        SearchOutcome::Found(rep) => {
            assert!(
                expected,
                "search found a representation the brute force missed: {g:?}"
            );
            let adj = oracle_adjacency(&rep);
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(adj[u][v], g.has_edge(u, v), "{g:?}");
                }
            }
            assert!(rep.paths.iter().all(|p| p.bend_count() <= bounds.max_bends));
            let (lo, hi) = rep.bbox().unwrap();
            assert!((hi.x - lo.x) < bounds.width as i32 && (hi.y - lo.y) < bounds.height as i32);
        }
        SearchOutcome::Exhausted => assert!(!expected, "search missed a representation: {g:?}"),
        SearchOutcome::TimedOut => panic!("no timeout was set"),
    }
}

fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| pairs[b])
                .collect();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

#[test]
fn every_four_vertex_graph_straight_paths() {
    for g in all_graphs(4) {
        agree(&g, &SearchBounds::new(3, 3, 0));
    }
}

#[test]
fn every_four_vertex_graph_one_bend_small_window() {
    for g in all_graphs(4) {
        agree(&g, &SearchBounds::new(2, 3, 1));
    }
}

#[test]
fn named_graphs_one_bend() {
    let graphs = [
        graph::claw(),
        graph::cycle(4).unwrap(),
        graph::cycle(5).unwrap(),
        graph::complete_bipartite(2, 3).unwrap(),
        graph::complete(4).unwrap(),
    ];
    for g in &graphs {
        agree(g, &SearchBounds::new(3, 3, 1));
    }
}
