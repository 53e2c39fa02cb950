//! Small undirected simple graphs: maximal cliques, chordless 4-cycles,
//! isomorphism by backtracking, and a catalog of named families.

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("isomorphism test supports at most {limit} vertices, got {n}")]
    SizeLimitExceeded { n: usize, limit: usize },
}

/// Undirected loopless graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<FixedBitSet>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])
                .expect("permutation keeps vertices in range");
        }
        g
    }

    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        maximal_cliques(self)
    }
}

/// All inclusion-maximal cliques, each sorted, in lexicographic order.
///
/// Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut r = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    bron_kerbosch(g, &mut r, p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &SimpleGraph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_clear() {
        if x.is_clear() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| g.adj[u].intersection(&p).count())
        .expect("p is nonempty");
    let mut candidates = p.clone();
    candidates.difference_with(&g.adj[pivot]);
    for v in candidates.ones() {
        let mut p2 = p.clone();
        p2.intersect_with(&g.adj[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&g.adj[v]);
        r.push(v);
        bron_kerbosch(g, r, p2, x2, out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Every induced 4-cycle once, as `[v0, v1, v2, v3]` in cyclic order.
///
/// `v0` is the smallest vertex, `v1 < v3` are its cycle neighbours and `v2`
/// is opposite it.
pub fn chordless_4cycles(g: &SimpleGraph) -> Vec<[usize; 4]> {
    let n = g.n();
    let mut out = Vec::new();
    for v0 in 0..n {
        let nb: Vec<usize> = g.neighbors(v0).filter(|&u| u > v0).collect();
        for (i, &v1) in nb.iter().enumerate() {
            for &v3 in &nb[i + 1..] {
                if g.has_edge(v1, v3) {
                    continue;
                }
                for v2 in g.neighbors(v1) {
                    if v2 > v0 && v2 != v3 && g.has_edge(v2, v3) && !g.has_edge(v0, v2) {
                        out.push([v0, v1, v2, v3]);
                    }
                }
            }
        }
    }
    out
}

/// Default vertex limit for [`is_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 24;

/// Isomorphism test; returns a mapping `g -> h` when one exists.
pub fn isomorphism(
    g: &SimpleGraph,
    h: &SimpleGraph,
    limit: usize,
) -> Result<Option<Vec<usize>>, GraphError> {
    let n = g.n();
    if n > limit || h.n() > limit {
        return Err(GraphError::SizeLimitExceeded {
            n: n.max(h.n()),
            limit,
        });
    }
    if n != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let sig = |gr: &SimpleGraph, v: usize| {
        let mut nd: Vec<usize> = gr.neighbors(v).map(|u| gr.degree(u)).collect();
        nd.sort_unstable();
        (gr.degree(v), nd)
    };
    let gs: Vec<_> = (0..n).map(|v| sig(g, v)).collect();
    let hs: Vec<_> = (0..n).map(|v| sig(h, v)).collect();
    let mut a = gs.clone();
    let mut b = hs.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    // Map the most constrained vertices first: high degree, then BFS-ish order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_iso(g, h, &gs, &hs, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g: &SimpleGraph,
    h: &SimpleGraph,
    gs: &[(usize, Vec<usize>)],
    hs: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n() {
        if used[w] || gs[v] != hs[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(g, h, gs, hs, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Isomorphism verdict with the default size limit.
pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool, GraphError> {
    Ok(isomorphism(g, h, ISOMORPHISM_LIMIT)?.is_some())
}

pub fn cycle(k: usize) -> Result<SimpleGraph, GraphError> {
    if k < 3 {
        return Err(GraphError::BadParameter(format!(
            "C_k needs k >= 3, got {k}"
        )));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    SimpleGraph::from_edges(k, &edges)
}

pub fn complete(n: usize) -> Result<SimpleGraph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadParameter("K_n needs n >= 1".into()));
    }
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{m,n}` with sides `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<SimpleGraph, GraphError> {
    if m < 1 || n < 1 {
        return Err(GraphError::BadParameter(format!(
            "K_{{m,n}} needs m,n >= 1, got {m},{n}"
        )));
    }
    let mut g = SimpleGraph::new(m + n);
    for u in 0..m {
        for v in m..m + n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// The k-star `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<SimpleGraph, GraphError> {
    complete_bipartite(1, k)
}

pub fn claw() -> SimpleGraph {
    star(3).expect("valid parameter")
}

/// The k-sun: inner clique on `0..k`, outer vertex `k+i` adjacent to `i` and `(i+1) mod k`.
pub fn sun(k: usize) -> Result<SimpleGraph, GraphError> {
    if k < 3 {
        return Err(GraphError::BadParameter(format!(
            "S_k needs k >= 3, got {k}"
        )));
    }
    let mut g = complete(k)?;
    g.adj.iter_mut().for_each(|a| a.grow(2 * k));
    g.adj.resize(2 * k, FixedBitSet::with_capacity(2 * k));
    for i in 0..k {
        g.add_edge(k + i, i)?;
        g.add_edge(k + i, (i + 1) % k)?;
    }
    Ok(g)
}

/// Looks up a named family: `C5`, `K4`, `K2,6`, `star4`, `claw`, `S4`.
///
/// Underscores and braces are ignored, so `K_{2,6}` and `S_4` also parse.
pub fn catalog(name: &str) -> Result<SimpleGraph, GraphError> {
    let clean: String = name
        .chars()
        .filter(|c| !matches!(c, '_' | '{' | '}' | ' '))
        .collect();
    let bad = || GraphError::BadParameter(format!("unknown graph name `{name}`"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if clean.eq_ignore_ascii_case("claw") {
        return Ok(claw());
    }
    if let Some(rest) = clean.strip_prefix("star") {
        return star(num(rest)?);
    }
    let (head, rest) = clean.split_at(clean.chars().next().map_or(0, |c| c.len_utf8()));
    match head {
        "C" => cycle(num(rest)?),
        "S" => sun(num(rest)?),
        "K" => match rest.split_once(',') {
            Some((m, n)) => complete_bipartite(num(m)?, num(n)?),
            None => complete(num(rest)?),
        },
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_cliques(g: &SimpleGraph) -> Vec<Vec<usize>> {
        let n = g.n();
        let cliques: Vec<u32> = (1u32..(1 << n))
            .filter(|&m| {
                let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .collect();
        let mut out: Vec<Vec<usize>> = cliques
            .iter()
            .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
            .map(|&m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn cliques_of_small_graphs() {
        assert_eq!(maximal_cliques(&complete(3).unwrap()), vec![vec![0, 1, 2]]);
        let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(maximal_cliques(&path), vec![vec![0, 1], vec![1, 2]]);
        let s4 = sun(4).unwrap();
        let got = maximal_cliques(&s4);
        assert_eq!(got, brute_force_cliques(&s4));
        assert!(got.contains(&vec![0, 1, 2, 3]));
        assert_eq!(got.len(), 5);
    }

    #[test]
    fn isolated_vertices_are_cliques() {
        let g = SimpleGraph::new(2);
        assert_eq!(maximal_cliques(&g), vec![vec![0], vec![1]]);
    }

    #[test]
    fn chordless_cycles() {
        assert_eq!(chordless_4cycles(&cycle(4).unwrap()), vec![[0, 1, 2, 3]]);
        assert!(chordless_4cycles(&complete(4).unwrap()).is_empty());
        assert_eq!(
            chordless_4cycles(&complete_bipartite(2, 3).unwrap()).len(),
            3
        );
    }

    #[test]
    fn isomorphism_basics() {
        assert!(is_isomorphic(&cycle(4).unwrap(), &complete_bipartite(2, 2).unwrap()).unwrap());
        assert!(!is_isomorphic(&cycle(5).unwrap(), &cycle(4).unwrap()).unwrap());
        let big = complete(25).unwrap();
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(GraphError::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn isomorphism_witness_is_valid() {
        let g = sun(5).unwrap();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        let h = g.permuted(&perm);
        let map = isomorphism(&g, &h, 24).unwrap().unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn catalog_families() {
        let s3 = catalog("S_3").unwrap();
        assert_eq!((s3.n(), s3.edge_count()), (6, 9));
        let k26 = catalog("K_{2,6}").unwrap();
        assert_eq!((k26.n(), k26.edge_count()), (8, 12));
        assert_eq!(catalog("claw").unwrap(), complete_bipartite(1, 3).unwrap());
        assert_eq!(catalog("star3").unwrap(), claw());
        assert_eq!(catalog("C5").unwrap().edge_count(), 5);
        assert_eq!(catalog("K4").unwrap().edge_count(), 6);
        assert!(catalog("C2").is_err());
        assert!(catalog("Q7").is_err());
    }

    #[test]
    fn sun_matches_definition() {
        let k = 6;
        let g = sun(k).unwrap();
        assert_eq!(g.edge_count(), 2 * k + k * (k - 1) / 2);
        for i in 0..k {
            assert_eq!(g.degree(k + i), 2);
        }
    }
}
