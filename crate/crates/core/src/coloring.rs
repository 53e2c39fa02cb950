//! Clique coloring of B1-EPG_t representations with at most seven colors.
//!
//! Every segment gets a component color `a` or `b` on its grid line, which
//! gives each path a triple indexed by direction (H, V, D). A missing segment
//! counts as `b`. Triples map to colors 1..=7. A recoloring pass over grid
//! points then removes monochromatic claw cliques.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::epgt::Representation;
use crate::graph::maximal_cliques;
use crate::lattice::{Direction, GridEdge, GridLine, GridPoint, LatticePath, Segment};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("segments do not lie on one grid line")]
    SegmentsNotColinear,
    #[error("path {0} has more than one bend")]
    NotB1Family(usize),
    #[error("no recoloring at {0} satisfies the required properties")]
    NoFeasibleRecoloring(GridPoint),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentColor {
    A,
    B,
}

impl fmt::Display for ComponentColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentColor::A => "a",
            ComponentColor::B => "b",
        })
    }
}

/// Component colors of a path in H, V, D order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorTriple(pub [ComponentColor; 3]);

impl ColorTriple {
    pub fn get(&self, d: Direction) -> ComponentColor {
        self.0[d.index()]
    }

    pub fn with(mut self, d: Direction, c: ComponentColor) -> Self {
        self.0[d.index()] = c;
        self
    }

    /// Color number in 1..=7, or `None` for `aaa`.
    pub fn color(&self) -> Option<u8> {
        use ComponentColor::{A, B};
        match self.0 {
            [A, A, B] => Some(1),
            [A, B, A] => Some(2),
            [B, A, A] => Some(3),
            [A, B, B] => Some(4),
            [B, A, B] => Some(5),
            [B, B, A] => Some(6),
            [B, B, B] => Some(7),
            [A, A, A] => None,
        }
    }
}

impl fmt::Display for ColorTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Colors one grid line. Every maximal set of pairwise edge-sharing segments
/// of size at least two receives exactly one `b`, and `b` segments are
/// pairwise edge-disjoint.
///
/// Maximal sets are visited left to right. A set without a `b` member gets
/// its member with the largest left endpoint, ties broken by the smallest
/// right endpoint and then by input order.
pub fn two_clique_color_line(segments: &[Segment]) -> Result<Vec<ComponentColor>, ColoringError> {
    let mut colors = vec![ComponentColor::A; segments.len()];
    let Some(first) = segments.first() else {
        return Ok(colors);
    };
    if segments.iter().any(|s| s.line != first.line) {
        return Err(ColoringError::SegmentsNotColinear);
    }
    let ranges: Vec<(i32, i32)> = segments.iter().map(Segment::range).collect();
    let lo = ranges.iter().map(|r| r.0).min().unwrap_or(0);
    let hi = ranges.iter().map(|r| r.1).max().unwrap_or(0);

    // Runs of equal covering sets over unit edges [t, t+1).
    let mut runs: Vec<(i32, Vec<usize>)> = Vec::new();
    for t in lo..hi {
        let cover: Vec<usize> = (0..segments.len())
            .filter(|&i| ranges[i].0 <= t && t < ranges[i].1)
            .collect();
        if runs.last().map(|r| r.1 != cover).unwrap_or(true) {
            runs.push((t, cover));
        }
    }
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
    for r in 0..runs.len() {
        let set = &runs[r].1;
        if set.len() < 2 {
            continue;
        }
        if r > 0 && subset(set, &runs[r - 1].1) {
            continue;
        }
        if r + 1 < runs.len() && subset(set, &runs[r + 1].1) {
            continue;
        }
        if set.iter().any(|&i| colors[i] == ComponentColor::B) {
            continue;
        }
        let pick = set
            .iter()
            .copied()
            .max_by(|&i, &j| {
                ranges[i]
                    .0
                    .cmp(&ranges[j].0)
                    .then(ranges[j].1.cmp(&ranges[i].1))
                    .then(j.cmp(&i))
            })
            .expect("nonempty set");
        colors[pick] = ComponentColor::B;
    }
    Ok(colors)
}

/// Initial triples from coloring every grid line independently, plus one log
/// line per colored grid line.
pub fn initial_colors(
    rep: &Representation,
) -> Result<(Vec<ColorTriple>, Vec<String>), ColoringError> {
    let mut by_line: BTreeMap<GridLine, Vec<(usize, Segment)>> = BTreeMap::new();
    for (i, p) in rep.paths.iter().enumerate() {
        if p.bend_count() > 1 {
            return Err(ColoringError::NotB1Family(i));
        }
        for s in p.segments() {
            by_line.entry(s.line).or_default().push((i, s));
        }
    }
    let mut triples = vec![ColorTriple([ComponentColor::B; 3]); rep.len()];
    let mut log = Vec::new();
    for (line, members) in &by_line {
        let segs: Vec<Segment> = members.iter().map(|m| m.1).collect();
        let colors = two_clique_color_line(&segs)?;
        let mut entry = format!("{line}:");
        for ((i, _), c) in members.iter().zip(&colors) {
            triples[*i] = triples[*i].with(line.direction, *c);
            entry.push_str(&format!(" P{i}={c}"));
        }
        log.push(entry);
    }
    Ok((triples, log))
}

/// Per-path geometry used by the claw checks.
struct Geometry {
    edges: Vec<BTreeSet<GridEdge>>,
    points: Vec<BTreeSet<GridPoint>>,
    bends: Vec<Vec<GridPoint>>,
}

impl Geometry {
    fn new(paths: &[LatticePath]) -> Self {
        Geometry {
            edges: paths.iter().map(LatticePath::edge_set).collect(),
            points: paths.iter().map(LatticePath::point_set).collect(),
            bends: paths.iter().map(LatticePath::bend_points).collect(),
        }
    }

    fn shares_edge(&self, i: usize, j: usize) -> bool {
        self.edges[i].intersection(&self.edges[j]).next().is_some()
    }

    fn bends_at(&self, i: usize, x: GridPoint) -> bool {
        self.bends[i].contains(&x)
    }

    /// `i` and `j` bend at `x`, `l` passes through `x` without bending there,
    /// the three pairwise share edges, no edge is common to all three and `x`
    /// is the only common point.
    fn is_regular_claw(&self, x: GridPoint, i: usize, j: usize, l: usize) -> bool {
        if !(self.shares_edge(i, j) && self.shares_edge(i, l) && self.shares_edge(j, l)) {
            return false;
        }
        let common_edge = self.edges[i]
            .iter()
            .any(|e| self.edges[j].contains(e) && self.edges[l].contains(e));
        if common_edge {
            return false;
        }
        let mut common = self.points[i]
            .iter()
            .filter(|p| self.points[j].contains(p) && self.points[l].contains(p));
        common.next() == Some(&x) && common.next().is_none()
    }

    fn claws_at(&self, x: GridPoint) -> Vec<[usize; 3]> {
        let n = self.edges.len();
        let bent: Vec<usize> = (0..n).filter(|&i| self.bends_at(i, x)).collect();
        let through: Vec<usize> = (0..n)
            .filter(|&i| self.points[i].contains(&x) && !self.bends_at(i, x))
            .collect();
        let mut out = Vec::new();
        for (a, &i) in bent.iter().enumerate() {
            for &j in &bent[a + 1..] {
                if !self.shares_edge(i, j) {
                    continue;
                }
                for &l in &through {
                    if self.is_regular_claw(x, i, j, l) {
                        out.push([i, j, l]);
                    }
                }
            }
        }
        out
    }
}

fn is_two_colored(t: &ColorTriple) -> bool {
    matches!(t.color(), Some(1..=3))
}

fn monocolored(claws: Vec<[usize; 3]>, triples: &[ColorTriple]) -> Vec<[usize; 3]> {
    claws
        .into_iter()
        .filter(|c| {
            let t = triples[c[0]];
            is_two_colored(&t) && triples[c[1]] == t && triples[c[2]] == t
        })
        .collect()
}

/// Regular claws at `x` whose three paths carry the same triple from
/// `aab`, `aba`, `baa`. Each entry lists the two paths bending at `x` first.
pub fn monocolored_regular_claws_at(
    rep: &Representation,
    triples: &[ColorTriple],
    x: GridPoint,
) -> Vec<[usize; 3]> {
    monocolored(Geometry::new(&rep.paths).claws_at(x), triples)
}

/// All monocolored regular claws, keyed by center.
pub fn monocolored_regular_claws(
    rep: &Representation,
    triples: &[ColorTriple],
) -> BTreeMap<GridPoint, Vec<[usize; 3]>> {
    let geo = Geometry::new(&rep.paths);
    let centers: BTreeSet<GridPoint> = geo.bends.iter().flatten().copied().collect();
    centers
        .into_iter()
        .filter_map(|x| {
            let found = monocolored(geo.claws_at(x), triples);
            (!found.is_empty()).then_some((x, found))
        })
        .collect()
}

/// One recoloring step: `(path, direction)` components switched from `a` to `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecolorEvent {
    pub point: GridPoint,
    pub changes: Vec<(usize, Direction)>,
    /// For each change, a similar path bending at the same point whose
    /// same-line segment contains the recolored one and stays `a`.
    pub support: Vec<usize>,
}

impl fmt::Display for RecolorEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "recolor at {}:", self.point)?;
        for ((i, d), q) in self.changes.iter().zip(&self.support) {
            write!(f, " P{i}[{}]->b inside P{q}", d.letter())?;
        }
        let meet = if self.changes.len() == 2 {
            "recolored paths meet only at the center"
        } else {
            "no recolored pair shares a regular claw"
        };
        write!(f, "; {meet}; no monocolored claw left at {}", self.point)
    }
}

fn subsets_up_to(items: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=max.min(items.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| items[i]).collect());
            let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + items.len() - size) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..size {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    out
}

/// Removes the monocolored regular claws at `x`, if any.
///
/// Only paths bending at `x`, colored 1..=3 and not recolored before are
/// touched; each has one of its two segments switched to `b`. A choice is
/// accepted when every switched segment lies inside a same-line segment of a
/// path with the same two directions that bends at `x` and keeps `a` there,
/// when the recolored paths meet only at `x` (pairs) or never share an edge
/// inside a common regular claw (larger sets), when no monocolored regular
/// claw remains at `x`, and when no new one appears anywhere else.
pub fn recolor_at(
    rep: &Representation,
    triples: &mut [ColorTriple],
    recolored: &mut [bool],
    x: GridPoint,
) -> Result<Option<RecolorEvent>, ColoringError> {
    let geo = Geometry::new(&rep.paths);
    recolor_with(&geo, rep, triples, recolored, x)
}

fn recolor_with(
    geo: &Geometry,
    rep: &Representation,
    triples: &mut [ColorTriple],
    recolored: &mut [bool],
    x: GridPoint,
) -> Result<Option<RecolorEvent>, ColoringError> {
    let claws_here = geo.claws_at(x);
    if monocolored(claws_here.clone(), triples).is_empty() {
        return Ok(None);
    }
    let n = rep.len();
    let candidates: Vec<usize> = (0..n)
        .filter(|&i| !recolored[i] && geo.bends_at(i, x) && is_two_colored(&triples[i]))
        .collect();
    let segments: Vec<Vec<Segment>> = rep.paths.iter().map(LatticePath::segments).collect();
    let dirs: Vec<BTreeSet<Direction>> = segments
        .iter()
        .map(|s| s.iter().map(|g| g.direction()).collect())
        .collect();
    let in_common_claw = |i: usize, j: usize| {
        claws_here
            .iter()
            .any(|c| (c[0] == i && c[1] == j) || (c[0] == j && c[1] == i))
    };

    for subset in subsets_up_to(&candidates, 4) {
        let pair_ok = if subset.len() == 2 {
            let (i, j) = (subset[0], subset[1]);
            let mut shared = geo.points[i].intersection(&geo.points[j]);
            !geo.shares_edge(i, j) && shared.next() == Some(&x) && shared.next().is_none()
        } else {
            subset.iter().enumerate().all(|(a, &i)| {
                subset[a + 1..]
                    .iter()
                    .all(|&j| !geo.shares_edge(i, j) || !in_common_claw(i, j))
            })
        };
        if !pair_ok {
            continue;
        }
        for mask in 0..(1u32 << subset.len()) {
            let changes: Vec<(usize, Direction)> = subset
                .iter()
                .enumerate()
                .map(|(b, &i)| {
                    let ds: Vec<Direction> = dirs[i].iter().copied().collect();
                    (i, ds[((mask >> b) & 1) as usize])
                })
                .collect();
            let mut next = triples.to_vec();
            for &(i, d) in &changes {
                next[i] = next[i].with(d, ComponentColor::B);
            }
            let support: Option<Vec<usize>> = changes
                .iter()
                .map(|&(i, d)| {
                    let seg = segments[i]
                        .iter()
                        .find(|s| s.direction() == d)
                        .expect("segment in direction");
                    (0..n).find(|&q| {
                        q != i
                            && dirs[q] == dirs[i]
                            && geo.bends_at(q, x)
                            && next[q].get(d) == ComponentColor::A
                            && segments[q].iter().any(|s| s.contains_segment(seg))
                    })
                })
                .collect();
            let Some(support) = support else {
                continue;
            };
            if !monocolored(claws_here.clone(), &next).is_empty() {
                continue;
            }
            if creates_new_claw(geo, triples, &next, &changes, x) {
                continue;
            }
            triples.copy_from_slice(&next);
            for &(i, _) in &changes {
                recolored[i] = true;
            }
            return Ok(Some(RecolorEvent {
                point: x,
                changes,
                support,
            }));
        }
    }
    Err(ColoringError::NoFeasibleRecoloring(x))
}

fn creates_new_claw(
    geo: &Geometry,
    before: &[ColorTriple],
    after: &[ColorTriple],
    changes: &[(usize, Direction)],
    x: GridPoint,
) -> bool {
    let centers: BTreeSet<GridPoint> = changes
        .iter()
        .flat_map(|&(i, _)| geo.points[i].iter().copied())
        .filter(|&p| p != x)
        .collect();
    centers.into_iter().any(|y| {
        let claws = geo.claws_at(y);
        let old: BTreeSet<[usize; 3]> = monocolored(claws.clone(), before).into_iter().collect();
        monocolored(claws, after).iter().any(|c| !old.contains(c))
    })
}

/// Final result of [`clique_color`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredRepresentation {
    pub triples: Vec<ColorTriple>,
    pub colors: Vec<u8>,
    pub recolored: Vec<bool>,
    pub events: Vec<RecolorEvent>,
    pub line_log: Vec<String>,
}

impl ColoredRepresentation {
    pub fn color_count(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Line colorings, recolor events, then final colors.
    pub fn explain(&self) -> String {
        let mut out = String::new();
        for l in &self.line_log {
            out.push_str(l);
            out.push('\n');
        }
        for e in &self.events {
            out.push_str(&e.to_string());
            out.push('\n');
        }
        for (i, (t, c)) in self.triples.iter().zip(&self.colors).enumerate() {
            out.push_str(&format!("P{i} {t} color {c}\n"));
        }
        out
    }
}

/// Colors a B1 representation so that no maximal clique of size at least two
/// is monochromatic.
pub fn clique_color(rep: &Representation) -> Result<ColoredRepresentation, ColoringError> {
    let (mut triples, line_log) = initial_colors(rep)?;
    let geo = Geometry::new(&rep.paths);
    let mut centers: Vec<GridPoint> = geo
        .bends
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    centers.sort_by_key(|p| (p.y, p.x));
    let mut recolored = vec![false; rep.len()];
    let mut events = Vec::new();
    for x in centers {
        if let Some(e) = recolor_with(&geo, rep, &mut triples, &mut recolored, x)? {
            events.push(e);
        }
    }
    let colors = triples
        .iter()
        .map(|t| t.color().expect("every path misses a direction"))
        .collect();
    Ok(ColoredRepresentation {
        triples,
        colors,
        recolored,
        events,
        line_log,
    })
}

/// Maximal cliques of size at least two that are monochromatic under `colors`.
pub fn monochromatic_cliques(rep: &Representation, colors: &[u8]) -> Vec<Vec<usize>> {
    let g = crate::epgt::intersection_graph(rep);
    maximal_cliques(&g)
        .into_iter()
        .filter(|c| c.len() >= 2 && c.iter().all(|&v| colors[v] == colors[c[0]]))
        .collect()
}

pub fn verify_clique_coloring(rep: &Representation, colors: &[u8]) -> bool {
    colors.len() == rep.len() && monochromatic_cliques(rep, colors).is_empty()
}
