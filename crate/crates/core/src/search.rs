//! Bounded exhaustive search for path representations of small graphs.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::rc::Rc;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use thiserror::Error;

use crate::epgt::Representation;
use crate::graph::SimpleGraph;
use crate::lattice::{GridEdge, GridPoint, LatticePath, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("bounds too large: {0}")]
    BoundsTooLarge(String),
    #[error("target has {n} vertices, the search supports at most {limit}")]
    TargetTooLarge { n: usize, limit: usize },
}

/// Default cap on window area, in grid points.
pub const AREA_LIMIT: usize = 144;
/// Default cap on target size for [`find_representation`].
pub const TARGET_LIMIT: usize = 12;

/// A `width x height` window of grid points with its lower-left corner at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub width: usize,
    pub height: usize,
    pub max_bends: usize,
    pub max_seg_len: Option<usize>,
    pub area_limit: usize,
    pub timeout: Option<Duration>,
}

impl SearchBounds {
    pub fn new(width: usize, height: usize, max_bends: usize) -> Self {
        SearchBounds {
            width,
            height,
            max_bends,
            max_seg_len: None,
            area_limit: AREA_LIMIT,
            timeout: None,
        }
    }

    pub fn with_max_seg_len(mut self, len: usize) -> Self {
        self.max_seg_len = Some(len);
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }

    fn check(&self) -> Result<(), SearchError> {
        if self.width == 0 || self.height == 0 {
            return Err(SearchError::BoundsTooLarge(
                "window must be nonempty".into(),
            ));
        }
        if self.width * self.height > self.area_limit {
            return Err(SearchError::BoundsTooLarge(format!(
                "{}x{} window exceeds the area limit of {} points",
                self.width, self.height, self.area_limit
            )));
        }
        if self.max_bends > 2 {
            return Err(SearchError::BoundsTooLarge(format!(
                "max_bends {} exceeds 2",
                self.max_bends
            )));
        }
        Ok(())
    }
}

/// All canonical paths inside the window with at most `max_bends` bends.
///
/// Sorted by bend count, then by vertex chain.
pub fn enumerate_paths(bounds: &SearchBounds) -> Result<Vec<LatticePath>, SearchError> {
    bounds.check()?;
    Ok(paths_in_box(
        GridPoint::new(0, 0),
        bounds.width,
        bounds.height,
        bounds.max_bends,
        bounds.max_seg_len,
    ))
}

/// Enumerates paths inside the box `[origin, origin + (w-1, h-1)]`.
pub(crate) fn paths_in_box(
    origin: GridPoint,
    w: usize,
    h: usize,
    max_bends: usize,
    max_seg_len: Option<usize>,
) -> Vec<LatticePath> {
    let inside = |p: GridPoint| {
        p.x >= origin.x && p.y >= origin.y && p.x < origin.x + w as i32 && p.y < origin.y + h as i32
    };
    let cap = max_seg_len.unwrap_or(usize::MAX);
    let mut out: Vec<LatticePath> = Vec::new();
    let mut chain = Vec::new();
    let mut visited = vec![false; w * h];
    let slot = |p: GridPoint| ((p.y - origin.y) as usize) * w + (p.x - origin.x) as usize;

    #[allow(clippy::too_many_arguments)]
    fn extend(
        chain: &mut Vec<GridPoint>,
        visited: &mut [bool],
        last: Option<Step>,
        bends_left: usize,
        cap: usize,
        inside: &dyn Fn(GridPoint) -> bool,
        slot: &dyn Fn(GridPoint) -> usize,
        out: &mut Vec<LatticePath>,
    ) {
        for step in Step::ALL {
            if let Some(prev) = last {
                if step == prev || step == prev.opposite() {
                    continue;
                }
            }
            let mut pushed = 0;
            loop {
                let next = chain[chain.len() - 1].step(step);
                if pushed == cap || !inside(next) || visited[slot(next)] {
                    break;
                }
                visited[slot(next)] = true;
                chain.push(next);
                pushed += 1;
                if chain[0] < chain[chain.len() - 1] {
                    out.push(LatticePath::new(chain.clone()).expect("valid chain"));
                }
                if bends_left > 0 {
                    extend(
                        chain,
                        visited,
                        Some(step),
                        bends_left - 1,
                        cap,
                        inside,
                        slot,
                        out,
                    );
                }
            }
            for _ in 0..pushed {
                let p = chain.pop().expect("pushed");
                visited[slot(p)] = false;
            }
        }
    }

    for y in 0..h as i32 {
        for x in 0..w as i32 {
            let start = GridPoint::new(origin.x + x, origin.y + y);
            chain.push(start);
            visited[slot(start)] = true;
            // The first segment may not bend before it starts; treat bends as turns.
            extend(
                &mut chain,
                &mut visited,
                None,
                max_bends,
                cap,
                &inside,
                &slot,
                &mut out,
            );
            visited[slot(start)] = false;
            chain.pop();
        }
    }
    out.sort_by(|a, b| (a.bend_count(), a.vertices()).cmp(&(b.bend_count(), b.vertices())));
    out.dedup();
    out
}

/// Outcome of a bounded representation search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Representation),
    Exhausted,
    TimedOut,
}

/// Search statistics, reported alongside the outcome.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub pool_size: usize,
    pub anchors: usize,
    pub nodes: u64,
}

struct Pool {
    paths: Vec<LatticePath>,
    edges: Vec<FixedBitSet>,
    edge_lists: Vec<Vec<u32>>,
    by_edge: Vec<Vec<u32>>,
    lo: Vec<GridPoint>,
    hi: Vec<GridPoint>,
    key: Vec<Vec<GridPoint>>,
}

impl Pool {
    fn build(paths: Vec<LatticePath>) -> Pool {
        let mut ids: HashMap<GridEdge, u32> = HashMap::new();
        let edge_lists: Vec<Vec<u32>> = paths
            .iter()
            .map(|p| {
                p.edges()
                    .into_iter()
                    .map(|e| {
                        let next = ids.len() as u32;
                        *ids.entry(e).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        let m = ids.len();
        let mut by_edge = vec![Vec::new(); m];
        let mut edges = Vec::with_capacity(paths.len());
        for (i, list) in edge_lists.iter().enumerate() {
            let mut bits = FixedBitSet::with_capacity(m);
            for &e in list {
                bits.insert(e as usize);
                by_edge[e as usize].push(i as u32);
            }
            edges.push(bits);
        }
        let (lo, hi): (Vec<_>, Vec<_>) = paths.iter().map(|p| p.bbox()).unzip();
        let key = paths
            .iter()
            .map(|p| {
                let f = p.first();
                p.vertices()
                    .iter()
                    .map(|v| v.translate(-f.x, -f.y))
                    .collect()
            })
            .collect();
        Pool {
            paths,
            edges,
            edge_lists,
            by_edge,
            lo,
            hi,
            key,
        }
    }

    fn shares(&self, a: usize, b: usize) -> bool {
        !self.edges[a].is_disjoint(&self.edges[b])
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Twin {
    /// Same open neighbourhood: members must be pairwise edge-disjoint.
    False,
    /// Same closed neighbourhood: members pairwise share an edge.
    True,
}

struct Plan<'a> {
    target: &'a SimpleGraph,
    order: Vec<usize>,
    /// Twin class of each position in `order`.
    class: Vec<usize>,
    /// Size and kind of each class.
    class_size: Vec<usize>,
    class_kind: Vec<Option<Twin>>,
    /// One vertex of each class, for adjacency lookups.
    class_rep: Vec<usize>,
    width: i32,
    height: i32,
}

impl<'a> Plan<'a> {
    fn new(target: &'a SimpleGraph, width: usize, height: usize) -> Plan<'a> {
        let n = target.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(target.degree(v)), v));

        let mut class_of_vertex = vec![usize::MAX; n];
        let mut class_kind = Vec::new();
        let mut class_rep = Vec::new();
        let mut class_size = Vec::new();
        for v in 0..n {
            if class_of_vertex[v] != usize::MAX {
                continue;
            }
            let open = target.neighbor_set(v);
            let mut closed = open.clone();
            closed.insert(v);
            let false_twins: Vec<usize> = (v + 1..n)
                .filter(|&u| class_of_vertex[u] == usize::MAX && target.neighbor_set(u) == open)
                .collect();
            let (members, kind) = if !false_twins.is_empty() {
                (false_twins, Some(Twin::False))
            } else {
                let true_twins: Vec<usize> = (v + 1..n)
                    .filter(|&u| {
                        let mut c = target.neighbor_set(u).clone();
                        c.insert(u);
                        class_of_vertex[u] == usize::MAX && c == closed
                    })
                    .collect();
                let kind = (!true_twins.is_empty()).then_some(Twin::True);
                (true_twins, kind)
            };
            let c = class_kind.len();
            class_of_vertex[v] = c;
            for &u in &members {
                class_of_vertex[u] = c;
            }
            class_kind.push(kind);
            class_rep.push(v);
            class_size.push(members.len() + 1);
        }
        let class = order.iter().map(|&v| class_of_vertex[v]).collect();
        Plan {
            target,
            order,
            class,
            class_size,
            class_kind,
            class_rep,
            width: width as i32,
            height: height as i32,
        }
    }
}

type Domains = Vec<Option<Rc<Vec<u32>>>>;

struct Worker<'a> {
    pool: &'a Pool,
    plan: &'a Plan<'a>,
    chosen: Vec<usize>,
    remaining: Vec<usize>,
    /// Pool indices of placed paths adjacent to each class.
    covers: Vec<Vec<usize>>,
    stamp: Vec<u32>,
    epoch: u32,
    nodes: u64,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    timed_out: &'a AtomicBool,
}

impl<'a> Worker<'a> {
    fn fits(&self, lo: GridPoint, hi: GridPoint, cand: usize) -> Option<(GridPoint, GridPoint)> {
        let l = GridPoint::new(
            lo.x.min(self.pool.lo[cand].x),
            lo.y.min(self.pool.lo[cand].y),
        );
        let h = GridPoint::new(
            hi.x.max(self.pool.hi[cand].x),
            hi.y.max(self.pool.hi[cand].y),
        );
        (h.x - l.x < self.plan.width && h.y - l.y < self.plan.height).then_some((l, h))
    }

    /// Checks a candidate for class `c` against every placed path.
    fn consistent_with_placed(&self, c: usize, cand: usize) -> bool {
        let rep = self.plan.class_rep[c];
        self.chosen.iter().enumerate().all(|(e, &p)| {
            let u = self.plan.order[e];
            let want = if self.plan.class[e] == c {
                self.plan.class_kind[c] == Some(Twin::True)
            } else {
                self.plan.target.has_edge(u, rep)
            };
            self.pool.shares(p, cand) == want
        })
    }

    fn neighbours_of(&mut self, p: usize) -> Vec<u32> {
        self.epoch += 1;
        let epoch = self.epoch;
        let mut out = Vec::new();
        for &edge in &self.pool.edge_lists[p] {
            for &c in &self.pool.by_edge[edge as usize] {
                if self.stamp[c as usize] != epoch {
                    self.stamp[c as usize] = epoch;
                    out.push(c);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Upper bound on pairwise edge-disjoint members of `dom`, from a clique
    /// cover by the edges of a placed neighbour.
    fn cover_bound(&mut self, dom: &[u32], cover: usize) -> usize {
        self.epoch += 1;
        let epoch = self.epoch;
        let mut groups = 0;
        for &c in dom {
            let first = self.pool.edge_lists[c as usize]
                .iter()
                .copied()
                .filter(|&e| self.pool.edges[cover].contains(e as usize))
                .min();
            if let Some(e) = first {
                if self.stamp[e as usize] != epoch {
                    self.stamp[e as usize] = epoch;
                    groups += 1;
                }
            }
        }
        groups
    }

    /// Domains after placing `cand` at position `depth`, or `None` on a wipe-out.
    fn propagate(&mut self, depth: usize, cand: usize, doms: &Domains) -> Option<Domains> {
        let plan = self.plan;
        let placed_class = plan.class[depth];
        let v = plan.order[depth];
        let mut next = doms.clone();
        for c in 0..plan.class_kind.len() {
            if self.remaining[c] == 0 {
                next[c] = None;
                continue;
            }
            let kind = plan.class_kind[c];
            let (want, same) = if c == placed_class {
                (kind == Some(Twin::True), true)
            } else {
                (plan.target.has_edge(v, plan.class_rep[c]), false)
            };
            let filtered: Option<Vec<u32>> = match &doms[c] {
                Some(d) => {
                    let d: Vec<u32> = d
                        .iter()
                        .copied()
                        .filter(|&x| {
                            let x = x as usize;
                            self.pool.shares(x, cand) == want
                                && (!same || self.ordered_after(depth, cand, x, kind))
                        })
                        .collect();
                    Some(d)
                }
                None if want || same => {
                    let base: Vec<u32> = if want {
                        self.neighbours_of(cand)
                    } else {
                        (0..self.pool.paths.len() as u32).collect()
                    };
                    let d: Vec<u32> = base
                        .into_iter()
                        .filter(|&x| {
                            let x = x as usize;
                            self.consistent_with_placed(c, x)
                                && self.pool.shares(x, cand) == want
                                && (!same || self.ordered_after(depth, cand, x, kind))
                        })
                        .collect();
                    Some(d)
                }
                None => None,
            };
            if let Some(d) = filtered {
                let need = if kind == Some(Twin::True) {
                    1
                } else {
                    self.remaining[c]
                };
                if d.len() < need {
                    return None;
                }
                if kind == Some(Twin::False) && need >= 2 {
                    let covers = self.covers[c].clone();
                    for cover in covers.into_iter().chain((want && !same).then_some(cand)) {
                        if self.cover_bound(&d, cover) < need {
                            return None;
                        }
                    }
                }
                next[c] = Some(Rc::new(d));
            }
        }
        Some(next)
    }

    /// Twin ordering: later members of a class take larger pool indices, or,
    /// relative to the anchored first path, a larger translation-free key.
    fn ordered_after(&self, depth: usize, placed: usize, x: usize, kind: Option<Twin>) -> bool {
        if depth == 0 {
            self.pool.key[x] >= self.pool.key[placed]
        } else if kind == Some(Twin::True) {
            x >= placed
        } else {
            x > placed
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if self.stop.load(Ordering::Relaxed) {
                return false;
            }
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.timed_out.store(true, Ordering::Relaxed);
                    self.stop.store(true, Ordering::Relaxed);
                    return false;
                }
            }
        }
        true
    }

    fn place(
        &mut self,
        depth: usize,
        cand: usize,
        doms: &Domains,
        lo: GridPoint,
        hi: GridPoint,
    ) -> bool {
        let c = self.plan.class[depth];
        let v = self.plan.order[depth];
        self.remaining[c] -= 1;
        self.chosen.push(cand);
        let found = match self.propagate(depth, cand, doms) {
            Some(next) => {
                let added: Vec<usize> = (0..self.covers.len())
                    .filter(|&k| k != c && self.plan.target.has_edge(v, self.plan.class_rep[k]))
                    .collect();
                for &k in &added {
                    self.covers[k].push(cand);
                }
                let ok = self.dfs(depth + 1, &next, lo, hi);
                for &k in &added {
                    self.covers[k].pop();
                }
                ok
            }
            None => false,
        };
        if !found {
            self.chosen.pop();
            self.remaining[c] += 1;
        }
        found
    }

    fn dfs(&mut self, depth: usize, doms: &Domains, lo: GridPoint, hi: GridPoint) -> bool {
        if depth == self.plan.order.len() {
            return true;
        }
        if !self.tick() {
            return false;
        }
        let c = self.plan.class[depth];
        let candidates: Rc<Vec<u32>> = match &doms[c] {
            Some(d) => Rc::clone(d),
            None => Rc::new(
                (0..self.pool.paths.len() as u32)
                    .filter(|&x| self.consistent_with_placed(c, x as usize))
                    .collect(),
            ),
        };
        for &cand in candidates.iter() {
            let cand = cand as usize;
            let Some((l, h)) = self.fits(lo, hi, cand) else {
                continue;
            };
            if self.place(depth, cand, doms, l, h) {
                return true;
            }
            if self.stop.load(Ordering::Relaxed) {
                return false;
            }
        }
        false
    }
}

/// Backtracking search for a labelled representation of `target` inside the window.
///
/// The first vertex is anchored with its canonical first point at the origin,
/// and the union bounding box must fit the window.
pub fn find_representation(
    target: &SimpleGraph,
    bounds: &SearchBounds,
) -> Result<SearchOutcome, SearchError> {
    find_representation_with_stats(target, bounds).map(|(o, _)| o)
}

pub fn find_representation_with_stats(
    target: &SimpleGraph,
    bounds: &SearchBounds,
) -> Result<(SearchOutcome, SearchStats), SearchError> {
    bounds.check()?;
    let n = target.n();
    if n > TARGET_LIMIT {
        return Err(SearchError::TargetTooLarge {
            n,
            limit: TARGET_LIMIT,
        });
    }
    if n == 0 {
        return Ok((
            SearchOutcome::Found(Representation::identity_labeled(Vec::new())),
            SearchStats::default(),
        ));
    }
    let (w, h) = (bounds.width, bounds.height);
    let origin = GridPoint::new(1 - w as i32, 1 - h as i32);
    let paths = paths_in_box(
        origin,
        2 * w - 1,
        2 * h - 1,
        bounds.max_bends,
        bounds.max_seg_len,
    );
    let pool = Pool::build(paths);
    let plan = Plan::new(target, w, h);
    let anchors: Vec<usize> = (0..pool.paths.len())
        .filter(|&i| {
            pool.paths[i].first() == GridPoint::new(0, 0)
                && pool.hi[i].x - pool.lo[i].x < w as i32
                && pool.hi[i].y - pool.lo[i].y < h as i32
        })
        .collect();
    let stop = AtomicBool::new(false);
    let timed_out = AtomicBool::new(false);
    let nodes = AtomicU64::new(0);
    let deadline = bounds.timeout.map(|t| Instant::now() + t);
    let classes = plan.class_kind.len();

    let found = anchors.par_iter().find_map_first(|&a| {
        if stop.load(Ordering::Relaxed) {
            return None;
        }
        let mut worker = Worker {
            pool: &pool,
            plan: &plan,
            chosen: Vec::with_capacity(n),
            remaining: plan.class_size.clone(),
            covers: vec![Vec::new(); classes],
            stamp: vec![0; pool.paths.len().max(pool.by_edge.len())],
            epoch: 0,
            nodes: 0,
            deadline,
            stop: &stop,
            timed_out: &timed_out,
        };
        let doms: Domains = vec![None; classes];
        let ok = worker.place(0, a, &doms, pool.lo[a], pool.hi[a]);
        nodes.fetch_add(worker.nodes, Ordering::Relaxed);
        ok.then(|| worker.chosen.clone())
    });

    let stats = SearchStats {
        pool_size: pool.paths.len(),
        anchors: anchors.len(),
        nodes: nodes.load(Ordering::Relaxed),
    };
    let outcome = match found {
        Some(chosen) => {
            let mut paths = vec![None; n];
            for (d, &c) in chosen.iter().enumerate() {
                paths[plan.order[d]] = Some(pool.paths[c].clone());
            }
            let paths: Vec<LatticePath> = paths
                .into_iter()
                .map(|p| p.expect("every vertex placed"))
                .collect();
            let rep = Representation::identity_labeled(paths);
            let (lo, _) = rep.bbox().expect("nonempty");
            SearchOutcome::Found(rep.translate(-lo.x, -lo.y))
        }
        None if timed_out.load(Ordering::Relaxed) => SearchOutcome::TimedOut,
        None => SearchOutcome::Exhausted,
    };
    Ok((outcome, stats))
}

/// Largest set of pairwise edge-disjoint common neighbours over hub placements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingReport {
    pub width: usize,
    pub height: usize,
    pub paths: usize,
    pub hub_pairs: u64,
    pub max_common: usize,
    pub witness: Option<(LatticePath, LatticePath, Vec<LatticePath>)>,
}

impl CountingReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "window: {}x{} points (bounded evidence only)",
            self.width, self.height
        );
        let _ = writeln!(s, "candidate paths: {}", self.paths);
        let _ = writeln!(s, "edge-disjoint hub pairs: {}", self.hub_pairs);
        let _ = writeln!(
            s,
            "max pairwise edge-disjoint common neighbours: {}",
            self.max_common
        );
        if let Some((a, b, ws)) = &self.witness {
            let _ = writeln!(s, "hub 1: {a}");
            let _ = writeln!(s, "hub 2: {b}");
            for w in ws {
                let _ = writeln!(s, "  common: {w}");
            }
        }
        s
    }
}

/// Maximum independent set size in the conflict graph given by `adj`,
/// returning the members.
fn max_independent(
    adj: &[FixedBitSet],
    cand: FixedBitSet,
    best: &mut Vec<usize>,
    cur: &mut Vec<usize>,
) {
    if cur.len() + cand.count_ones(..) <= best.len() {
        return;
    }
    let Some(v) = cand.ones().next() else {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    };
    let mut with = cand.clone();
    with.remove(v);
    with.difference_with(&adj[v]);
    cur.push(v);
    max_independent(adj, with, best, cur);
    cur.pop();
    let mut without = cand;
    without.remove(v);
    max_independent(adj, without, best, cur);
}

/// Pairwise edge-disjoint paths from `pool` that share an edge with both hubs, maximised.
pub fn max_disjoint_common_neighbors(
    p1: &LatticePath,
    p2: &LatticePath,
    pool: &[LatticePath],
) -> Vec<LatticePath> {
    let pool_ref = Pool::build(pool.to_vec());
    let a = pool_ref.paths.iter().position(|p| p == p1);
    let b = pool_ref.paths.iter().position(|p| p == p2);
    let common: Vec<usize> = (0..pool.len())
        .filter(|&c| {
            crate::epgt::shares_edge(&pool[c], p1)
                && crate::epgt::shares_edge(&pool[c], p2)
                && Some(c) != a
                && Some(c) != b
        })
        .collect();
    best_set(&pool_ref, &common)
        .into_iter()
        .map(|i| pool[i].clone())
        .collect()
}

fn best_set(pool: &Pool, common: &[usize]) -> Vec<usize> {
    let k = common.len();
    let mut adj = vec![FixedBitSet::with_capacity(k); k];
    for i in 0..k {
        for j in i + 1..k {
            if pool.shares(common[i], common[j]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let mut all = FixedBitSet::with_capacity(k);
    all.insert_range(..);
    let mut best = Vec::new();
    max_independent(&adj, all, &mut best, &mut Vec::new());
    best.into_iter().map(|i| common[i]).collect()
}

/// Hub pairs seen, best count, and the best hubs with their neighbours.
type AnchorCount = (u64, usize, Option<(usize, usize, Vec<usize>)>);

/// For every pair of edge-disjoint paths in the window, the largest set of
/// pairwise edge-disjoint window paths sharing an edge with both.
pub fn k27_counting_check(bounds: &SearchBounds) -> Result<CountingReport, SearchError> {
    let paths = enumerate_paths(bounds)?;
    let pool = Pool::build(paths);
    let m = pool.paths.len();
    let results: Vec<AnchorCount> = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut stamp = vec![0u32; m];
            let mut pairs = 0u64;
            let mut best = 0usize;
            let mut witness = None;
            let mut near_a = Vec::new();
            for &e in &pool.edge_lists[a] {
                for &c in &pool.by_edge[e as usize] {
                    if stamp[c as usize] == 0 && c as usize != a {
                        stamp[c as usize] = 1;
                        near_a.push(c as usize);
                    }
                }
            }
            near_a.sort_unstable();
            for b in a + 1..m {
                if pool.shares(a, b) {
                    continue;
                }
                pairs += 1;
                let common: Vec<usize> = near_a
                    .iter()
                    .copied()
                    .filter(|&c| c != b && pool.shares(c, b))
                    .collect();
                if common.len() <= best {
                    continue;
                }
                let set = best_set(&pool, &common);
                if set.len() > best {
                    best = set.len();
                    witness = Some((a, b, set));
                }
            }
            (pairs, best, witness)
        })
        .collect();
    let mut report = CountingReport {
        width: bounds.width,
        height: bounds.height,
        paths: m,
        hub_pairs: 0,
        max_common: 0,
        witness: None,
    };
    for (pairs, best, witness) in results {
        report.hub_pairs += pairs;
        if best > report.max_common
            || (report.witness.is_none() && witness.is_some() && best == report.max_common)
        {
            report.max_common = best;
            report.witness = witness.map(|(a, b, set)| {
                (
                    pool.paths[a].clone(),
                    pool.paths[b].clone(),
                    set.into_iter().map(|i| pool.paths[i].clone()).collect(),
                )
            });
        }
    }
    Ok(report)
}
