//! Edge-intersection semantics for path families on the triangular grid.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{self, SimpleGraph};
use crate::lattice::{bbox_of, AngleClass, GridEdge, GridLine, GridPoint, LatticePath, Segment};
use crate::search::{enumerate_paths, SearchBounds};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EpgtError {
    #[error("labels must be a bijection onto 0..{0}")]
    BadLabels(usize),
    #[error("window {width}x{height} exceeds the {limit}x{limit} limit")]
    WindowTooLarge {
        width: usize,
        height: usize,
        limit: usize,
    },
}

/// A family of paths, optionally labelled by target-graph vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub paths: Vec<LatticePath>,
    labels: Option<Vec<usize>>,
}

impl Representation {
    pub fn new(paths: Vec<LatticePath>) -> Self {
        Representation {
            paths,
            labels: None,
        }
    }

    /// `labels[i]` is the target vertex represented by path `i`.
    pub fn labeled(paths: Vec<LatticePath>, labels: Vec<usize>) -> Result<Self, EpgtError> {
        let n = paths.len();
        let distinct: BTreeSet<usize> = labels.iter().copied().collect();
        if labels.len() != n || distinct.len() != n || labels.iter().any(|&l| l >= n) {
            return Err(EpgtError::BadLabels(n));
        }
        Ok(Representation {
            paths,
            labels: Some(labels),
        })
    }

    /// Labels path `i` with vertex `i`.
    pub fn identity_labeled(paths: Vec<LatticePath>) -> Self {
        let labels = (0..paths.len()).collect();
        Representation {
            paths,
            labels: Some(labels),
        }
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn translate(&self, dx: i32, dy: i32) -> Self {
        Representation {
            paths: self.paths.iter().map(|p| p.translate(dx, dy)).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn double_flip(&self) -> Self {
        Representation {
            paths: self.paths.iter().map(|p| p.double_flip()).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn subset(&self, indices: &[usize]) -> Self {
        Representation::new(indices.iter().map(|&i| self.paths[i].clone()).collect())
    }

    pub fn bbox(&self) -> Option<(GridPoint, GridPoint)> {
        bbox_of(self.paths.iter().flat_map(|p| p.vertices().iter().copied()))
    }

    /// Bounding box size as (rows, columns).
    pub fn rows_cols(&self) -> (usize, usize) {
        match self.bbox() {
            Some((lo, hi)) => ((hi.y - lo.y + 1) as usize, (hi.x - lo.x + 1) as usize),
            None => (0, 0),
        }
    }
}

/// Edges shared by both paths, sorted.
pub fn edge_intersection(p: &LatticePath, q: &LatticePath) -> BTreeSet<GridEdge> {
    let a = p.edge_set();
    q.edges().into_iter().filter(|e| a.contains(e)).collect()
}

/// Points shared by both paths, sorted.
pub fn vertex_intersection(p: &LatticePath, q: &LatticePath) -> BTreeSet<GridPoint> {
    let a = p.point_set();
    q.vertices()
        .iter()
        .copied()
        .filter(|v| a.contains(v))
        .collect()
}

pub fn shares_edge(p: &LatticePath, q: &LatticePath) -> bool {
    let a = p.edge_set();
    q.edges().iter().any(|e| a.contains(e))
}

/// Maps each grid edge to the indices of the paths using it.
pub fn edge_index(paths: &[LatticePath]) -> HashMap<GridEdge, Vec<usize>> {
    let mut index: HashMap<GridEdge, Vec<usize>> = HashMap::new();
    for (i, p) in paths.iter().enumerate() {
        for e in p.edges() {
            index.entry(e).or_default().push(i);
        }
    }
    index
}

/// Vertex `i` is path `i`; adjacency means a shared grid edge.
pub fn intersection_graph(rep: &Representation) -> SimpleGraph {
    let mut g = SimpleGraph::new(rep.len());
    for users in edge_index(&rep.paths).values() {
        for (k, &u) in users.iter().enumerate() {
            for &v in &users[k + 1..] {
                g.add_edge(u, v).expect("indices in range");
            }
        }
    }
    g
}

/// Segments of the family that carry an edge shared with another member.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UnderlyingGrid {
    /// `(path index, segment)` pairs in path order.
    pub segments: Vec<(usize, Segment)>,
}

impl UnderlyingGrid {
    pub fn edges(&self) -> BTreeSet<GridEdge> {
        self.segments.iter().flat_map(|(_, s)| s.edges()).collect()
    }

    pub fn points(&self) -> BTreeSet<GridPoint> {
        self.segments.iter().flat_map(|(_, s)| s.points()).collect()
    }
}

pub fn underlying_grid(rep: &Representation) -> UnderlyingGrid {
    underlying_grid_of(&rep.paths)
}

pub fn underlying_grid_of(paths: &[LatticePath]) -> UnderlyingGrid {
    let index = edge_index(paths);
    let mut segments = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        for s in p.segments() {
            let shared = s.edges().iter().any(|e| index[e].iter().any(|&j| j != i));
            if shared {
                segments.push((i, s));
            }
        }
    }
    UnderlyingGrid { segments }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    Labeled,
    Unlabeled,
}

/// Outcome of checking a representation against a target graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub mode: ValidationMode,
    pub bends: Vec<usize>,
    pub bend_limit: usize,
    pub bends_ok: bool,
    pub adjacency_ok: bool,
    pub rows: usize,
    pub cols: usize,
    /// Target edges missing from the intersection graph (labeled mode).
    pub missing: Vec<(usize, usize)>,
    /// Intersection-graph edges absent from the target (labeled mode).
    pub extra: Vec<(usize, usize)>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.bends_ok && self.adjacency_ok
    }

    pub fn max_bends(&self) -> usize {
        self.bends.iter().copied().max().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mode = match self.mode {
            ValidationMode::Labeled => "labeled",
            ValidationMode::Unlabeled => "unlabeled",
        };
        let _ = writeln!(s, "validation: {verdict} ({mode})");
        let _ = writeln!(s, "paths: {}", self.bends.len());
        let per: Vec<String> = self
            .bends
            .iter()
            .enumerate()
            .map(|(i, b)| format!("P{i}={b}"))
            .collect();
        let _ = writeln!(s, "bends: {}", per.join(" "));
        let _ = writeln!(
            s,
            "max bends: {} (limit {}) {}",
            self.max_bends(),
            self.bend_limit,
            if self.bends_ok { "ok" } else { "exceeded" }
        );
        let _ = writeln!(
            s,
            "adjacency: {}",
            if self.adjacency_ok { "ok" } else { "mismatch" }
        );
        for (u, v) in &self.missing {
            let _ = writeln!(s, "  missing edge {u}-{v}");
        }
        for (u, v) in &self.extra {
            let _ = writeln!(s, "  extra edge {u}-{v}");
        }
        let _ = writeln!(
            s,
            "bounding box: {} rows x {} columns",
            self.rows, self.cols
        );
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }

    pub fn to_kv(&self) -> String {
        let pairs = |v: &[(usize, usize)]| {
            v.iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut s = String::new();
        let _ = writeln!(s, "pass={}", self.passed());
        let _ = writeln!(
            s,
            "mode={}",
            if self.mode == ValidationMode::Labeled {
                "labeled"
            } else {
                "unlabeled"
            }
        );
        let _ = writeln!(s, "paths={}", self.bends.len());
        let _ = writeln!(s, "max_bends={}", self.max_bends());
        let _ = writeln!(s, "bend_limit={}", self.bend_limit);
        let _ = writeln!(s, "bends_ok={}", self.bends_ok);
        let _ = writeln!(s, "adjacency_ok={}", self.adjacency_ok);
        let _ = writeln!(s, "rows={}", self.rows);
        let _ = writeln!(s, "cols={}", self.cols);
        let _ = writeln!(s, "missing_edges={}", pairs(&self.missing));
        let _ = writeln!(s, "extra_edges={}", pairs(&self.extra));
        s
    }
}

/// Checks bend counts and adjacency of `rep` against `target`.
pub fn validate(
    rep: &Representation,
    target: &SimpleGraph,
    k: usize,
    mode: ValidationMode,
) -> ValidationReport {
    let bends: Vec<usize> = rep.paths.iter().map(|p| p.bend_count()).collect();
    let bends_ok = bends.iter().all(|&b| b <= k);
    let (rows, cols) = rep.rows_cols();
    let mut report = ValidationReport {
        mode,
        bends,
        bend_limit: k,
        bends_ok,
        adjacency_ok: false,
        rows,
        cols,
        missing: Vec::new(),
        extra: Vec::new(),
        notes: Vec::new(),
    };
    if target.n() != rep.len() {
        report.notes.push(format!(
            "target has {} vertices, family has {} paths",
            target.n(),
            rep.len()
        ));
        return report;
    }
    let g = intersection_graph(rep);
    match mode {
        ValidationMode::Labeled => {
            let Some(labels) = rep.labels() else {
                report.notes.push("labeled mode requires labels".into());
                return report;
            };
            let mut inverse = vec![0; labels.len()];
            for (i, &l) in labels.iter().enumerate() {
                inverse[l] = i;
            }
            for (u, v) in target.edges() {
                if !g.has_edge(inverse[u], inverse[v]) {
                    report.missing.push((u, v));
                }
            }
            for (i, j) in g.edges() {
                let (u, v) = (labels[i].min(labels[j]), labels[i].max(labels[j]));
                if !target.has_edge(u, v) {
                    report.extra.push((u, v));
                }
            }
            report.extra.sort_unstable();
            report.adjacency_ok = report.missing.is_empty() && report.extra.is_empty();
        }
        ValidationMode::Unlabeled => {
            match graph::isomorphism(&g, target, target.n().max(graph::ISOMORPHISM_LIMIT)) {
                Ok(found) => report.adjacency_ok = found.is_some(),
                Err(e) => report.notes.push(e.to_string()),
            }
        }
    }
    report
}

/// Largest window side accepted by [`remark_suite`].
pub const REMARK_WINDOW_LIMIT: usize = 6;

/// Results of the exhaustive pairwise property checks over one-bend paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemarkReport {
    pub width: usize,
    pub height: usize,
    pub paths: usize,
    pub ordered_pairs: usize,
    /// At most two colinear overlap runs, on at most two lines.
    pub overlap_components_ok: bool,
    /// Same bend point and angle class, or the overlap sits in one segment.
    pub dichotomy_ok: bool,
    /// Colinear segments touching in one point force a common bend there.
    pub touching_forces_bend_ok: bool,
    /// No path with at most one bend uses two parallel lines, and crossing
    /// lines are used only through a bend at their crossing.
    pub two_line_ok: bool,
    /// Largest number of connected pieces of a pairwise vertex intersection.
    pub max_vertex_components: usize,
    pub violations: Vec<String>,
}

impl RemarkReport {
    pub fn all_ok(&self) -> bool {
        self.overlap_components_ok
            && self.dichotomy_ok
            && self.touching_forces_bend_ok
            && self.two_line_ok
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let ok = |b: bool| if b { "ok" } else { "VIOLATED" };
        let _ = writeln!(s, "window: {}x{} points", self.width, self.height);
        let _ = writeln!(s, "one-bend paths: {}", self.paths);
        let _ = writeln!(s, "ordered pairs: {}", self.ordered_pairs);
        let _ = writeln!(
            s,
            "overlap components <= 2 on <= 2 lines: {}",
            ok(self.overlap_components_ok)
        );
        let _ = writeln!(
            s,
            "common bend or single-segment overlap: {}",
            ok(self.dichotomy_ok)
        );
        let _ = writeln!(
            s,
            "touching colinear segments force a shared bend: {}",
            ok(self.touching_forces_bend_ok)
        );
        let _ = writeln!(s, "two-line obstruction: {}", ok(self.two_line_ok));
        let _ = writeln!(
            s,
            "max vertex-intersection components: {}",
            self.max_vertex_components
        );
        for v in &self.violations {
            let _ = writeln!(s, "violation: {v}");
        }
        s
    }
}

struct PairOutcome {
    r1: bool,
    r2: bool,
    r3: bool,
    components: usize,
    note: Option<String>,
}

fn overlap_runs(shared: &BTreeSet<GridEdge>) -> (usize, usize) {
    let mut by_line: BTreeMap<GridLine, Vec<i32>> = BTreeMap::new();
    for e in shared {
        let line = e.line();
        by_line
            .entry(line)
            .or_default()
            .push(line.position(e.endpoints().0));
    }
    let mut runs = 0;
    for positions in by_line.values_mut() {
        positions.sort_unstable();
        runs += 1 + positions.windows(2).filter(|w| w[1] != w[0] + 1).count();
    }
    (runs, by_line.len())
}

fn vertex_components(common: &BTreeSet<GridPoint>, shared: &BTreeSet<GridEdge>) -> usize {
    let pts: Vec<GridPoint> = common.iter().copied().collect();
    let idx = |p: GridPoint| {
        pts.binary_search(&p)
            .expect("edge endpoints are common points")
    };
    let mut parent: Vec<usize> = (0..pts.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in shared {
        let (a, b) = e.endpoints();
        let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
        parent[ra] = rb;
    }
    (0..pts.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}

fn check_pair(p: &LatticePath, q: &LatticePath) -> PairOutcome {
    let shared = edge_intersection(p, q);
    let common = vertex_intersection(p, q);
    let components = vertex_components(&common, &shared);
    let (runs, lines) = overlap_runs(&shared);
    let r1 = runs <= 2 && lines <= 2;

    let sp = p.segments();
    let sq = q.segments();
    let bp = p.bend_point();
    let bq = q.bend_point();
    let class = |x: &LatticePath| x.bend_shape().map(|s| s.angle_class()).ok();
    let r2 = shared.is_empty()
        || (bp == bq && class(p) == class(q))
        || sp
            .iter()
            .chain(sq.iter())
            .any(|s| shared.iter().all(|e| s.contains_edge(e)));

    let mut r3 = true;
    if !shared.is_empty() {
        for s in &sp {
            for t in &sq {
                if s.line != t.line {
                    continue;
                }
                let (lo1, hi1) = s.range();
                let (lo2, hi2) = t.range();
                let touch = if hi1 == lo2 {
                    Some(hi1)
                } else if hi2 == lo1 {
                    Some(lo1)
                } else {
                    None
                };
                let Some(pos) = touch else { continue };
                let b = s.line.point_at(pos);
                let ok = bp == Some(b)
                    && bq == Some(b)
                    && shared.iter().any(|e| e.has_endpoint(b))
                    && !shared.iter().all(|e| e.line() == s.line);
                r3 &= ok;
            }
        }
    }
    let note = (!(r1 && r2 && r3)).then(|| format!("pair [{p}] / [{q}]: r1={r1} r2={r2} r3={r3}"));
    PairOutcome {
        r1,
        r2,
        r3,
        components,
        note,
    }
}

fn check_two_lines(p: &LatticePath) -> bool {
    let lines: BTreeSet<GridLine> = p.edges().iter().map(|e| e.line()).collect();
    let lines: Vec<GridLine> = lines.into_iter().collect();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            match a.intersection(b) {
                crate::lattice::LineIntersection::Point(x) => {
                    let segs = p.segments();
                    let on = |l: &GridLine| segs.iter().any(|s| s.line == *l);
                    if !(p.bend_point() == Some(x) && on(a) && on(b)) {
                        return false;
                    }
                }
                _ => return false,
            }
        }
    }
    true
}

/// Exhaustive pairwise property checks over all one-bend paths in a window
/// of `width x height` points.
pub fn remark_suite(width: usize, height: usize) -> Result<RemarkReport, EpgtError> {
    if width > REMARK_WINDOW_LIMIT || height > REMARK_WINDOW_LIMIT {
        return Err(EpgtError::WindowTooLarge {
            width,
            height,
            limit: REMARK_WINDOW_LIMIT,
        });
    }
    let bounds = SearchBounds::new(width, height, 1);
    let all = enumerate_paths(&bounds).expect("window within limits");
    let bent: Vec<LatticePath> = all
        .iter()
        .filter(|p| p.bend_count() == 1)
        .cloned()
        .collect();
    let two_line_ok = all.par_iter().all(check_two_lines);

    let outcomes: Vec<(bool, bool, bool, usize, Option<String>)> = (0..bent.len())
        .into_par_iter()
        .map(|i| {
            let (mut r1, mut r2, mut r3, mut comp) = (true, true, true, 0);
            let mut note = None;
            for (j, q) in bent.iter().enumerate() {
                if i == j {
                    continue;
                }
                let o = check_pair(&bent[i], q);
                r1 &= o.r1;
                r2 &= o.r2;
                r3 &= o.r3;
                comp = comp.max(o.components);
                if note.is_none() {
                    note = o.note;
                }
            }
            (r1, r2, r3, comp, note)
        })
        .collect();

    let mut report = RemarkReport {
        width,
        height,
        paths: bent.len(),
        ordered_pairs: bent.len() * bent.len().saturating_sub(1),
        overlap_components_ok: true,
        dichotomy_ok: true,
        touching_forces_bend_ok: true,
        two_line_ok,
        max_vertex_components: 0,
        violations: Vec::new(),
    };
    for (r1, r2, r3, comp, note) in outcomes {
        report.overlap_components_ok &= r1;
        report.dichotomy_ok &= r2;
        report.touching_forces_bend_ok &= r3;
        report.max_vertex_components = report.max_vertex_components.max(comp);
        if let Some(n) = note {
            if report.violations.len() < 10 {
                report.violations.push(n);
            }
        }
    }
    Ok(report)
}

/// Angle class of a one-bend path, `None` otherwise.
pub fn angle_class(p: &LatticePath) -> Option<AngleClass> {
    p.bend_shape().ok().map(|s| s.angle_class())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::GridPoint as P;

    fn path(pts: &[(i32, i32)]) -> LatticePath {
        LatticePath::new(pts.iter().map(|&q| q.into()).collect()).unwrap()
    }

    fn e(a: (i32, i32), b: (i32, i32)) -> GridEdge {
        GridEdge::new(a.into(), b.into()).unwrap()
    }

    #[test]
    fn crossing_paths_share_a_point_only() {
        let h = path(&[(0, 1), (1, 1), (2, 1)]);
        let v = path(&[(1, 0), (1, 1), (1, 2)]);
        assert!(edge_intersection(&h, &v).is_empty());
        assert_eq!(
            vertex_intersection(&h, &v),
            [P::new(1, 1)].into_iter().collect()
        );
        let far = path(&[(5, 5), (6, 5)]);
        assert!(edge_intersection(&h, &far).is_empty());
    }

    #[test]
    fn single_path_graph() {
        let rep = Representation::new(vec![path(&[(0, 0), (1, 0)])]);
        let g = intersection_graph(&rep);
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn lonely_paths_add_no_grid() {
        let a = path(&[(0, 0), (1, 0), (2, 0)]);
        let b = path(&[(1, 0), (2, 0), (2, 1)]);
        let c = path(&[(5, 5), (6, 6)]);
        let u = underlying_grid(&Representation::new(vec![a.clone(), b, c]));
        assert!(u.segments.iter().all(|(i, _)| *i != 2));
        assert_eq!(u.segments.len(), 2);
        assert_eq!(
            u.edges(),
            [e((0, 0), (1, 0)), e((1, 0), (2, 0))].into_iter().collect()
        );

        let twins = underlying_grid(&Representation::new(vec![a.clone(), a]));
        assert_eq!(twins.segments.len(), 2);
    }

    #[test]
    fn validate_single_path() {
        let rep = Representation::identity_labeled(vec![path(&[(0, 0), (1, 0)])]);
        let k1 = crate::graph::complete(1).unwrap();
        let r = validate(&rep, &k1, 0, ValidationMode::Labeled);
        assert!(r.passed());
        assert_eq!((r.rows, r.cols), (1, 2));
    }

    #[test]
    fn labeled_mode_needs_labels() {
        let rep = Representation::new(vec![path(&[(0, 0), (1, 0)])]);
        let k1 = crate::graph::complete(1).unwrap();
        assert!(!validate(&rep, &k1, 0, ValidationMode::Labeled).passed());
        assert!(validate(&rep, &k1, 0, ValidationMode::Unlabeled).passed());
    }

    #[test]
    fn bad_labels_rejected() {
        let ps = vec![path(&[(0, 0), (1, 0)]), path(&[(0, 1), (1, 1)])];
        assert!(Representation::labeled(ps.clone(), vec![0, 0]).is_err());
        assert!(Representation::labeled(ps, vec![1, 0]).is_ok());
    }

    #[test]
    fn report_formats() {
        let rep = Representation::identity_labeled(vec![
            path(&[(0, 0), (1, 0)]),
            path(&[(0, 0), (1, 0), (1, 1)]),
        ]);
        let k2 = crate::graph::complete(2).unwrap();
        let r = validate(&rep, &k2, 0, ValidationMode::Labeled);
        assert!(!r.passed());
        assert!(r.to_text().contains("exceeded"));
        assert!(r.to_kv().contains("bends_ok=false"));
    }

    #[test]
    fn remark_suite_small_window() {
        let r = remark_suite(4, 4).unwrap();
        assert!(r.all_ok(), "{}", r.to_text());
        assert!(r.paths > 0);
        assert!(remark_suite(7, 3).is_err());
    }

    #[test]
    fn overlap_runs_counts_gaps() {
        let shared: BTreeSet<GridEdge> = [e((0, 0), (1, 0)), e((2, 0), (3, 0)), e((0, 0), (0, 1))]
            .into_iter()
            .collect();
        assert_eq!(overlap_runs(&shared), (3, 2));
    }
}
