//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashSet;

use epgt_core::constructions::{
    claw_witness, gallery, k2n_representation, random_b1_family, sun_representation, GALLERY,
};
use epgt_core::epgt::Representation;
use epgt_core::lattice::LatticePath;

pub type Edge = ((i32, i32), (i32, i32));

/// Unit edges of a path read straight off its vertex chain.
pub fn edge_keys(p: &LatticePath) -> HashSet<Edge> {
    p.vertices()
        .windows(2)
        .map(|w| {
            let a = (w[0].x, w[0].y);
            let b = (w[1].x, w[1].y);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

pub fn key(a: (i32, i32), b: (i32, i32)) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Adjacency matrix of the edge-intersection graph, computed from vertex chains.
pub fn oracle_adjacency(rep: &Representation) -> Vec<Vec<bool>> {
    let keys: Vec<HashSet<Edge>> = rep.paths.iter().map(edge_keys).collect();
    let n = keys.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            adj[i][j] = i != j && !keys[i].is_disjoint(&keys[j]);
        }
    }
    adj
}

/// The k-sun: inner clique on `0..k`, outer vertex `k+i` adjacent to `i` and `i+1 mod k`.
pub fn sun_adjacency(k: usize) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; 2 * k]; 2 * k];
    let mut link = |a: usize, b: usize| {
        adj[a][b] = true;
        adj[b][a] = true;
    };
    for i in 0..k {
        for j in i + 1..k {
            link(i, j);
        }
        link(k + i, i);
        link(k + i, (i + 1) % k);
    }
    adj
}

/// Whether some maximal clique of size at least two is monochromatic.
pub fn has_monochromatic_maximal_clique(adj: &[Vec<bool>], colors: &[u8]) -> bool {
    fn extend(adj: &[Vec<bool>], class: &[usize], clique: &mut Vec<usize>, from: usize) -> bool {
        if clique.len() >= 2 {
            let n = adj.len();
            let extendable =
                (0..n).any(|v| !clique.contains(&v) && clique.iter().all(|&c| adj[v][c]));
            if !extendable {
                return true;
            }
        }
        for (pos, &v) in class.iter().enumerate().skip(from) {
            if clique.iter().all(|&c| adj[v][c]) {
                clique.push(v);
                if extend(adj, class, clique, pos + 1) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    let palette: HashSet<u8> = colors.iter().copied().collect();
    palette.into_iter().any(|c| {
        let class: Vec<usize> = (0..colors.len()).filter(|&v| colors[v] == c).collect();
        extend(adj, &class, &mut Vec::new(), 0)
    })
}

/// All triangles `i < j < l` of an adjacency matrix.
pub fn triangles(adj: &[Vec<bool>]) -> Vec<[usize; 3]> {
    let n = adj.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !adj[i][j] {
                continue;
            }
            for l in j + 1..n {
                if adj[i][l] && adj[j][l] {
                    out.push([i, j, l]);
                }
            }
        }
    }
    out
}

/// Chordless 4-cycles as cyclic sequences, each cycle once.
pub fn chordless_c4s(adj: &[Vec<bool>]) -> Vec<[usize; 4]> {
    let n = adj.len();
    let mut out = Vec::new();
    // `a` is the smallest member and `b < d` fixes the orientation.
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                for c in a + 1..n {
                    if c == b || c == d {
                        continue;
                    }
                    let cyc = adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a];
                    if cyc && !adj[a][c] && !adj[b][d] {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Suns 4..=12, the claw witness, every gallery entry, K_{2,n} for n = 1..=6,
/// and 200 seeded random one-bend families in an 8x8 window.
pub fn corpus() -> Vec<(String, Representation)> {
    let mut out = Vec::new();
    for k in 4..=12 {
        out.push((format!("sun-{k}"), sun_representation(k).unwrap()));
    }
    out.push(("claw-witness".into(), claw_witness()));
    for name in GALLERY {
        out.push((format!("gallery-{name}"), gallery(name).unwrap()));
    }
    for n in 1..=6 {
        out.push((format!("k2-{n}"), k2n_representation(n).unwrap()));
    }
    for seed in 0..200u64 {
        let count = 6 + (seed as usize % 29);
        out.push((
            format!("random-{seed}"),
            random_b1_family(count, 8, 8, seed).unwrap(),
        ));
    }
    out
}
