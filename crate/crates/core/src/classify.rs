//! Archetypes of cliques and chordless 4-cycles in single-bend representations.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::epgt::{edge_intersection, shares_edge, underlying_grid_of, Representation};
use crate::lattice::{GridEdge, GridPoint, LatticePath, Segment, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("paths {0} and {1} share no edge")]
    NotAClique(usize, usize),
    #[error("path {0} has more than one bend")]
    NotB1(usize),
    #[error("path does not bend at corner {0}")]
    NotBentAtCorner(GridPoint),
    #[error("the four paths do not form a chordless 4-cycle in the given order")]
    NotChordlessC4,
    #[error("some clique path bends away from the triangle {0}")]
    AssumptionViolated(RightTriangle),
    #[error("no archetype matches: {0}")]
    Unclassifiable(String),
}

/// A closed triangle with one side per grid direction.
///
/// Corners are `{(x,y),(x+k,y),(x+k,y+k)}` or `{(x,y),(x,y+k),(x+k,y+k)}`,
/// stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RightTriangle {
    pub corners: [GridPoint; 3],
}

impl RightTriangle {
    pub fn new(a: GridPoint, b: GridPoint, c: GridPoint) -> Option<RightTriangle> {
        let mut corners = [a, b, c];
        corners.sort();
        let [lo, mid, hi] = corners;
        let k = hi.x - lo.x;
        if k < 1 || hi.y - lo.y != k {
            return None;
        }
        let ok = mid == GridPoint::new(hi.x, lo.y) || mid == GridPoint::new(lo.x, hi.y);
        ok.then_some(RightTriangle { corners })
    }

    pub fn sides(&self) -> [Segment; 3] {
        let [a, b, c] = self.corners;
        [
            Segment::new(a, b).expect("axis side"),
            Segment::new(b, c).expect("axis side"),
            Segment::new(a, c).expect("diagonal side"),
        ]
    }

    pub fn edges(&self) -> Vec<GridEdge> {
        self.sides().iter().flat_map(|s| s.edges()).collect()
    }

    /// Boundary points.
    pub fn points(&self) -> BTreeSet<GridPoint> {
        self.sides().iter().flat_map(|s| s.points()).collect()
    }

    /// The two unit triangle edges leaving `corner`.
    pub fn edges_at(&self, corner: GridPoint) -> Option<[GridEdge; 2]> {
        if !self.corners.contains(&corner) {
            return None;
        }
        let mut out = self
            .sides()
            .into_iter()
            .filter(|s| s.contains_point(corner))
            .map(|s| {
                let t = s.line.position(corner);
                let (lo, hi) = s.range();
                let next = if t == lo { t + 1 } else { hi - 1 };
                GridEdge::new(corner, s.line.point_at(next)).expect("adjacent along the side")
            });
        Some([out.next()?, out.next()?])
    }

    pub fn translate(&self, dx: i32, dy: i32) -> RightTriangle {
        let [a, b, c] = self.corners;
        RightTriangle::new(
            a.translate(dx, dy),
            b.translate(dx, dy),
            c.translate(dx, dy),
        )
        .expect("shape kept")
    }

    pub fn double_flip(&self) -> RightTriangle {
        let [a, b, c] = self.corners;
        RightTriangle::new(a.double_flip(), b.double_flip(), c.double_flip()).expect("shape kept")
    }
}

impl fmt::Display for RightTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.corners;
        write!(f, "{a} {b} {c}")
    }
}

/// How a corner-bent path sits relative to its corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Placement {
    /// Holds both triangle edges at the corner.
    Inside,
    /// Holds exactly one.
    Midway,
    /// Holds neither.
    Outside,
}

impl Placement {
    pub fn letter(self) -> char {
        match self {
            Placement::Inside => 'I',
            Placement::Midway => 'M',
            Placement::Outside => 'O',
        }
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriangleSubtype {
    Flag,
    Paw,
    Cricket,
    Bull,
    ExtendedBull,
    Net,
}

impl TriangleSubtype {
    pub const ALL: [TriangleSubtype; 6] = [
        TriangleSubtype::Flag,
        TriangleSubtype::Paw,
        TriangleSubtype::Cricket,
        TriangleSubtype::Bull,
        TriangleSubtype::ExtendedBull,
        TriangleSubtype::Net,
    ];

    /// The placement multiset of the subtype, sorted.
    pub fn triple(self) -> [Placement; 3] {
        use Placement::*;
        match self {
            TriangleSubtype::Flag => [Inside, Inside, Inside],
            TriangleSubtype::Paw => [Inside, Inside, Midway],
            TriangleSubtype::Cricket => [Inside, Inside, Outside],
            TriangleSubtype::Bull => [Inside, Midway, Midway],
            TriangleSubtype::ExtendedBull => [Inside, Midway, Outside],
            TriangleSubtype::Net => [Midway, Midway, Midway],
        }
    }

    /// `None` for the four multisets no clique can realize.
    pub fn from_triple(mut triple: [Placement; 3]) -> Option<TriangleSubtype> {
        triple.sort();
        TriangleSubtype::ALL
            .into_iter()
            .find(|s| s.triple() == triple)
    }

    pub fn name(self) -> &'static str {
        match self {
            TriangleSubtype::Flag => "flag",
            TriangleSubtype::Paw => "paw",
            TriangleSubtype::Cricket => "cricket",
            TriangleSubtype::Bull => "bull",
            TriangleSubtype::ExtendedBull => "extended-bull",
            TriangleSubtype::Net => "net",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueClass {
    EdgeClique,
    ClawClique {
        center: GridPoint,
    },
    TriangularClique {
        subtype: TriangleSubtype,
        triple: [Placement; 3],
        triangle: RightTriangle,
    },
}

impl CliqueClass {
    /// Class name without coordinates, stable under grid symmetries.
    pub fn name(&self) -> String {
        match self {
            CliqueClass::EdgeClique => "edge-clique".into(),
            CliqueClass::ClawClique { .. } => "claw-clique".into(),
            CliqueClass::TriangularClique { subtype, .. } => format!("{}-clique", subtype.name()),
        }
    }
}

impl fmt::Display for CliqueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliqueClass::EdgeClique => write!(f, "edge-clique"),
            CliqueClass::ClawClique { center } => write!(f, "claw-clique center {center}"),
            CliqueClass::TriangularClique {
                subtype,
                triple,
                triangle,
            } => write!(
                f,
                "{}-clique ({},{},{}) triangle {triangle}",
                subtype.name(),
                triple[0],
                triple[1],
                triple[2]
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleClass {
    TruePie {
        center: GridPoint,
    },
    FalsePie {
        center: GridPoint,
    },
    RFrame {
        quad: [GridPoint; 4],
    },
    TFrame {
        quad: [GridPoint; 4],
    },
    PFrame {
        quad: [GridPoint; 4],
    },
    Flag {
        triangle: RightTriangle,
    },
    Butterfly {
        triangles: [RightTriangle; 2],
        shared: GridPoint,
    },
}

impl CycleClass {
    pub fn name(&self) -> &'static str {
        match self {
            CycleClass::TruePie { .. } => "true-pie",
            CycleClass::FalsePie { .. } => "false-pie",
            CycleClass::RFrame { .. } => "r-frame",
            CycleClass::TFrame { .. } => "t-frame",
            CycleClass::PFrame { .. } => "p-frame",
            CycleClass::Flag { .. } => "flag",
            CycleClass::Butterfly { .. } => "butterfly",
        }
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        match self {
            CycleClass::TruePie { center } | CycleClass::FalsePie { center } => {
                write!(f, " center {center}")
            }
            CycleClass::RFrame { quad }
            | CycleClass::TFrame { quad }
            | CycleClass::PFrame { quad } => {
                write!(f, " quad {} {} {} {}", quad[0], quad[1], quad[2], quad[3])
            }
            CycleClass::Flag { triangle } => write!(f, " triangle {triangle}"),
            CycleClass::Butterfly { triangles, shared } => {
                write!(
                    f,
                    " triangles {} | {} shared {shared}",
                    triangles[0], triangles[1]
                )
            }
        }
    }
}

pub fn path_corner_category(
    path: &LatticePath,
    triangle: &RightTriangle,
    corner: GridPoint,
) -> Result<Placement, ClassifyError> {
    let edges = triangle
        .edges_at(corner)
        .ok_or(ClassifyError::NotBentAtCorner(corner))?;
    if !path.bends_at(corner) {
        return Err(ClassifyError::NotBentAtCorner(corner));
    }
    Ok(
        match edges.iter().filter(|e| path.contains_edge(e)).count() {
            2 => Placement::Inside,
            1 => Placement::Midway,
            _ => Placement::Outside,
        },
    )
}

fn check_b1(paths: &[&LatticePath]) -> Result<(), ClassifyError> {
    match paths.iter().position(|p| !p.is_bk(1)) {
        Some(i) => Err(ClassifyError::NotB1(i)),
        None => Ok(()),
    }
}

fn check_clique(paths: &[&LatticePath]) -> Result<(), ClassifyError> {
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            if !shares_edge(paths[i], paths[j]) {
                return Err(ClassifyError::NotAClique(i, j));
            }
        }
    }
    Ok(())
}

fn common_edges(paths: &[&LatticePath]) -> BTreeSet<GridEdge> {
    let mut core = paths[0].edge_set();
    for p in &paths[1..] {
        let e = p.edge_set();
        core.retain(|x| e.contains(x));
    }
    core
}

fn common_points(paths: &[&LatticePath]) -> BTreeSet<GridPoint> {
    let mut core = paths[0].point_set();
    for p in &paths[1..] {
        let e = p.point_set();
        core.retain(|x| e.contains(x));
    }
    core
}

fn owned(paths: &[&LatticePath]) -> Vec<LatticePath> {
    paths.iter().map(|&p| p.clone()).collect()
}

fn distinct_bends(paths: &[&LatticePath]) -> Vec<GridPoint> {
    let set: BTreeSet<GridPoint> = paths.iter().filter_map(|p| p.bend_point()).collect();
    set.into_iter().collect()
}

/// Right triangles on bend points whose sides lie in the given edge set.
fn triangles_on(points: &[GridPoint], grid: &BTreeSet<GridEdge>) -> Vec<RightTriangle> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                if let Some(t) = RightTriangle::new(points[i], points[j], points[k]) {
                    if t.edges().iter().all(|e| grid.contains(e)) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

fn classify_clique_paths(paths: &[&LatticePath]) -> Result<CliqueClass, ClassifyError> {
    if !common_edges(paths).is_empty() {
        return Ok(CliqueClass::EdgeClique);
    }
    let points = common_points(paths);
    for &b in &points {
        let around_b = (0..paths.len()).all(|i| {
            (i + 1..paths.len()).all(|j| {
                edge_intersection(paths[i], paths[j])
                    .iter()
                    .any(|e| e.has_endpoint(b))
            })
        });
        if around_b {
            return Ok(CliqueClass::ClawClique { center: b });
        }
    }

    let grid = underlying_grid_of(&owned(paths)).edges();
    let mut violated = None;
    let mut forbidden = None;
    for t in triangles_on(&distinct_bends(paths), &grid) {
        let mut labels = [None::<Placement>; 3];
        let mut all_at_corners = true;
        for p in paths {
            let Some(c) = t.corners.iter().position(|&c| p.bends_at(c)) else {
                all_at_corners = false;
                break;
            };
            let place = path_corner_category(p, &t, t.corners[c])?;
            labels[c] = Some(labels[c].map_or(place, |old| old.max(place)));
        }
        if !all_at_corners {
            violated.get_or_insert(t);
            continue;
        }
        let triple = labels.map(|l| l.expect("each corner is a bend point of some path"));
        let mut sorted = triple;
        sorted.sort();
        match TriangleSubtype::from_triple(sorted) {
            Some(subtype) => {
                return Ok(CliqueClass::TriangularClique {
                    subtype,
                    triple: sorted,
                    triangle: t,
                })
            }
            None => {
                forbidden.get_or_insert((t, sorted));
            }
        }
    }

    if points.len() == 1 {
        let center = *points.iter().next().expect("one point");
        return Ok(CliqueClass::ClawClique { center });
    }
    if let Some((t, triple)) = forbidden {
        return Err(ClassifyError::Unclassifiable(format!(
            "triangle {t} carries the unrealizable triple ({},{},{})",
            triple[0], triple[1], triple[2]
        )));
    }
    if let Some(t) = violated {
        return Err(ClassifyError::AssumptionViolated(t));
    }
    Err(ClassifyError::Unclassifiable(
        "no common edge, claw centre or triangle".into(),
    ))
}

/// Edge-, claw- or triangular-clique for three pairwise intersecting paths.
///
/// The claw test accepts a common point `b` when every pairwise intersection
/// holds an edge at `b`; a common point alone is used only when no triangle
/// fits.
pub fn classify_triangle(
    p1: &LatticePath,
    p2: &LatticePath,
    p3: &LatticePath,
) -> Result<CliqueClass, ClassifyError> {
    let paths = [p1, p2, p3];
    check_b1(&paths)?;
    check_clique(&paths)?;
    classify_clique_paths(&paths)
}

/// Same trichotomy for a clique of any size. Per corner, the strongest
/// placement wins: any outside path makes the corner `O`, else any midway
/// path makes it `M`.
pub fn classify_maximal_clique(
    rep: &Representation,
    clique: &[usize],
) -> Result<CliqueClass, ClassifyError> {
    if clique.is_empty() {
        return Err(ClassifyError::Unclassifiable("empty clique".into()));
    }
    let paths: Vec<&LatticePath> = clique.iter().map(|&i| &rep.paths[i]).collect();
    check_b1(&paths).map_err(|e| match e {
        ClassifyError::NotB1(i) => ClassifyError::NotB1(clique[i]),
        other => other,
    })?;
    check_clique(&paths).map_err(|e| match e {
        ClassifyError::NotAClique(i, j) => ClassifyError::NotAClique(clique[i], clique[j]),
        other => other,
    })?;
    classify_clique_paths(&paths)
}

fn pie_at(paths: &[&LatticePath; 4], b: GridPoint) -> Option<CycleClass> {
    let mut pairs = Vec::with_capacity(4);
    for p in paths {
        let arms = p.arms_at(b);
        if arms.len() != 2 {
            return None;
        }
        let pair = if arms[0] < arms[1] {
            [arms[0], arms[1]]
        } else {
            [arms[1], arms[0]]
        };
        pairs.push(pair);
    }
    let distinct: BTreeSet<[Step; 2]> = pairs.iter().copied().collect();
    let arms: BTreeSet<Step> = pairs.iter().flatten().copied().collect();
    if distinct.len() != 4 || arms.len() != 4 {
        return None;
    }
    if arms
        .iter()
        .any(|a| pairs.iter().filter(|p| p.contains(a)).count() != 2)
    {
        return None;
    }
    let mut by_angle: Vec<Step> = arms.into_iter().collect();
    by_angle.sort_by_key(|s| s.angle());
    let consecutive = |pair: &[Step; 2]| {
        let i = by_angle.iter().position(|s| *s == pair[0]).expect("arm");
        let j = by_angle.iter().position(|s| *s == pair[1]).expect("arm");
        (i + 1) % 4 == j || (j + 1) % 4 == i
    };
    Some(if pairs.iter().all(consecutive) {
        CycleClass::TruePie { center: b }
    } else {
        CycleClass::FalsePie { center: b }
    })
}

fn segments_cross(a: &Segment, b: &Segment) -> bool {
    let pa = a.points();
    b.points().iter().any(|p| pa.contains(p))
}

fn frame(bends: &[GridPoint; 4], grid: &BTreeSet<GridEdge>) -> Option<CycleClass> {
    let distinct: BTreeSet<GridPoint> = bends.iter().copied().collect();
    if distinct.len() != 4 {
        return None;
    }
    let mut sides = Vec::with_capacity(4);
    for i in 0..4 {
        let s = Segment::new(bends[i], bends[(i + 1) % 4]).ok()?;
        if !s.edges().iter().all(|e| grid.contains(e)) {
            return None;
        }
        sides.push(s);
    }
    for i in 0..4 {
        if sides[i].direction() == sides[(i + 1) % 4].direction() {
            return None;
        }
    }
    if segments_cross(&sides[0], &sides[2]) || segments_cross(&sides[1], &sides[3]) {
        return None;
    }
    let quad = *bends;
    let p02 = sides[0].direction() == sides[2].direction();
    let p13 = sides[1].direction() == sides[3].direction();
    match (p02, p13) {
        (true, true) => {
            let uses_diagonal = sides
                .iter()
                .any(|s| s.direction() == crate::lattice::Direction::Diagonal);
            Some(if uses_diagonal {
                CycleClass::PFrame { quad }
            } else {
                CycleClass::RFrame { quad }
            })
        }
        (true, false) | (false, true) => Some(CycleClass::TFrame { quad }),
        (false, false) => None,
    }
}

fn flag(paths: &[&LatticePath; 4], grid: &BTreeSet<GridEdge>) -> Option<CycleClass> {
    let bends = distinct_bends(paths);
    triangles_on(&bends, grid).into_iter().find_map(|t| {
        let ok = t.corners.iter().all(|&c| {
            let n = paths.iter().filter(|p| p.bends_at(c)).count();
            (1..=2).contains(&n)
        });
        ok.then_some(CycleClass::Flag { triangle: t })
    })
}

/// Third corners completing a right triangle on two given corners.
fn third_corners(a: GridPoint, b: GridPoint) -> Vec<GridPoint> {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let candidates = if dy == 0 && dx > 0 {
        vec![GridPoint::new(b.x, b.y + dx), GridPoint::new(a.x, a.y - dx)]
    } else if dx == 0 && dy > 0 {
        vec![GridPoint::new(a.x + dy, b.y), GridPoint::new(b.x - dy, a.y)]
    } else if dx == dy && dx > 0 {
        vec![GridPoint::new(b.x, a.y), GridPoint::new(a.x, b.y)]
    } else {
        Vec::new()
    };
    candidates
        .into_iter()
        .filter(|&c| RightTriangle::new(a, b, c).is_some())
        .collect()
}

fn butterfly(bends: &[GridPoint; 4], grid: &BTreeSet<GridEdge>) -> Option<CycleClass> {
    let distinct: BTreeSet<GridPoint> = bends.iter().copied().collect();
    if distinct.len() != 4 {
        return None;
    }
    let pairings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    for [(a, b), (c, d)] in pairings {
        for v in third_corners(bends[a], bends[b]) {
            let (Some(t1), Some(t2)) = (
                RightTriangle::new(bends[a], bends[b], v),
                RightTriangle::new(bends[c], bends[d], v),
            ) else {
                continue;
            };
            let shared: Vec<GridPoint> = t1.points().intersection(&t2.points()).copied().collect();
            if shared != [v] {
                continue;
            }
            if t1
                .edges()
                .iter()
                .chain(t2.edges().iter())
                .all(|e| grid.contains(e))
            {
                let triangles = if t1 < t2 { [t1, t2] } else { [t2, t1] };
                return Some(CycleClass::Butterfly {
                    triangles,
                    shared: v,
                });
            }
        }
    }
    None
}

/// Archetype of a chordless 4-cycle given in cyclic order.
///
/// Tests run in a fixed order: pies, frames, flag, butterfly.
pub fn classify_c4(
    p1: &LatticePath,
    p2: &LatticePath,
    p3: &LatticePath,
    p4: &LatticePath,
) -> Result<CycleClass, ClassifyError> {
    let paths = [p1, p2, p3, p4];
    check_b1(&paths)?;
    let cyclic = (0..4).all(|i| shares_edge(paths[i], paths[(i + 1) % 4]));
    if !cyclic || shares_edge(p1, p3) || shares_edge(p2, p4) {
        return Err(ClassifyError::NotChordlessC4);
    }
    for b in common_points(&paths) {
        if let Some(class) = pie_at(&paths, b) {
            return Ok(class);
        }
    }
    let grid = underlying_grid_of(&owned(&paths)).edges();
    let bends: Option<Vec<GridPoint>> = paths.iter().map(|p| p.bend_point()).collect();
    let bends: Option<[GridPoint; 4]> = bends.map(|b| [b[0], b[1], b[2], b[3]]);
    if let Some(class) = bends.as_ref().and_then(|b| frame(b, &grid)) {
        return Ok(class);
    }
    if let Some(class) = flag(&paths, &grid) {
        return Ok(class);
    }
    if let Some(class) = bends.as_ref().and_then(|b| butterfly(b, &grid)) {
        return Ok(class);
    }
    Err(ClassifyError::Unclassifiable(
        "no pie, frame, flag or butterfly".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{claw_witness, gallery};

    fn pt(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn path(points: &[(i32, i32)]) -> LatticePath {
        LatticePath::new(points.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    fn triangle_of(name: &str) -> CliqueClass {
        let rep = gallery(name).unwrap();
        classify_triangle(&rep.paths[0], &rep.paths[1], &rep.paths[2]).unwrap()
    }

    fn c4_of(name: &str) -> CycleClass {
        let rep = gallery(name).unwrap();
        let p = &rep.paths;
        classify_c4(&p[0], &p[1], &p[2], &p[3]).unwrap()
    }

    #[test]
    fn right_triangle_orientations() {
        assert!(RightTriangle::new(pt(0, 0), pt(2, 0), pt(2, 2)).is_some());
        assert!(RightTriangle::new(pt(0, 0), pt(0, 2), pt(2, 2)).is_some());
        assert!(RightTriangle::new(pt(0, 0), pt(2, 0), pt(0, 2)).is_none());
        assert!(RightTriangle::new(pt(0, 0), pt(1, 0), pt(1, 2)).is_none());
        let t = RightTriangle::new(pt(0, 0), pt(2, 0), pt(2, 2)).unwrap();
        assert_eq!(t.edges().len(), 6);
        assert_eq!(t.points().len(), 6);
        let at = t.edges_at(pt(2, 0)).unwrap();
        assert!(at.contains(&GridEdge::new(pt(1, 0), pt(2, 0)).unwrap()));
        assert!(at.contains(&GridEdge::new(pt(2, 0), pt(2, 1)).unwrap()));
    }

    #[test]
    fn placements() {
        let t = RightTriangle::new(pt(0, 0), pt(2, 0), pt(2, 2)).unwrap();
        let inside = path(&[(2, 0), (1, 0), (0, 0), (1, 1)]);
        let midway = path(&[(-1, 0), (0, 0), (1, 1)]);
        let outside = path(&[(-1, 0), (0, 0), (0, 1)]);
        assert_eq!(
            path_corner_category(&inside, &t, pt(0, 0)),
            Ok(Placement::Inside)
        );
        assert_eq!(
            path_corner_category(&midway, &t, pt(0, 0)),
            Ok(Placement::Midway)
        );
        assert_eq!(
            path_corner_category(&outside, &t, pt(0, 0)),
            Ok(Placement::Outside)
        );
        assert!(path_corner_category(&inside, &t, pt(2, 0)).is_err());
    }

    #[test]
    fn table_lookup() {
        use Placement::*;
        assert_eq!(
            TriangleSubtype::from_triple([Midway, Inside, Midway]),
            Some(TriangleSubtype::Bull)
        );
        assert_eq!(
            TriangleSubtype::from_triple([Outside, Midway, Midway]),
            None
        );
        assert_eq!(
            TriangleSubtype::from_triple([Outside, Inside, Outside]),
            None
        );
    }

    #[test]
    fn gallery_cliques() {
        assert_eq!(triangle_of("edge"), CliqueClass::EdgeClique);
        assert_eq!(
            triangle_of("claw"),
            CliqueClass::ClawClique { center: pt(1, 1) }
        );
        for subtype in TriangleSubtype::ALL {
            match triangle_of(subtype.name()) {
                CliqueClass::TriangularClique {
                    subtype: s, triple, ..
                } => {
                    assert_eq!(s, subtype);
                    assert_eq!(triple, subtype.triple());
                }
                other => panic!("{}: {other}", subtype.name()),
            }
        }
    }

    #[test]
    fn claw_witness_class() {
        let rep = claw_witness();
        let class = classify_maximal_clique(&rep, &[0, 1, 2]).unwrap();
        assert_eq!(class, CliqueClass::ClawClique { center: pt(1, 1) });
    }

    #[test]
    fn duplicated_inside_path_keeps_paw() {
        let mut rep = gallery("paw").unwrap();
        let class = classify_maximal_clique(&rep, &[0, 1, 2]).unwrap();
        let CliqueClass::TriangularClique { triangle, .. } = class else {
            panic!("{class}")
        };
        let inside = (0..3)
            .find(|&i| {
                let b = rep.paths[i].bend_point().unwrap();
                path_corner_category(&rep.paths[i], &triangle, b) == Ok(Placement::Inside)
            })
            .unwrap();
        rep.paths.push(rep.paths[inside].clone());
        let class = classify_maximal_clique(&rep, &[0, 1, 2, 3]).unwrap();
        assert_eq!(class.name(), "paw-clique");
    }

    #[test]
    fn four_paths_through_one_edge() {
        let rep = Representation::new(vec![
            path(&[(0, 0), (1, 0), (2, 0)]),
            path(&[(1, 0), (2, 0), (2, 1)]),
            path(&[(0, 1), (1, 1), (2, 1)]).translate(0, -1),
            path(&[(1, 0), (2, 0), (3, 1)]),
        ]);
        assert_eq!(
            classify_maximal_clique(&rep, &[0, 1, 2, 3]),
            Ok(CliqueClass::EdgeClique)
        );
    }

    #[test]
    fn not_a_clique() {
        let a = path(&[(0, 0), (1, 0)]);
        let b = path(&[(0, 1), (1, 1)]);
        assert_eq!(
            classify_triangle(&a, &a, &b),
            Err(ClassifyError::NotAClique(0, 2))
        );
        let bent2 = path(&[(0, 0), (1, 0), (1, 1), (2, 2)]);
        assert_eq!(
            classify_triangle(&a, &bent2, &a),
            Err(ClassifyError::NotB1(1))
        );
    }

    #[test]
    fn gallery_cycles() {
        assert_eq!(c4_of("truepie"), CycleClass::TruePie { center: pt(1, 1) });
        assert_eq!(c4_of("falsepie"), CycleClass::FalsePie { center: pt(1, 1) });
        assert_eq!(c4_of("rframe").name(), "r-frame");
        assert_eq!(c4_of("tframe").name(), "t-frame");
        assert_eq!(c4_of("pframe").name(), "p-frame");
        assert_eq!(c4_of("c4flag").name(), "flag");
        assert!(
            matches!(c4_of("butterfly"), CycleClass::Butterfly { shared, .. } if shared == pt(2, 2))
        );
    }

    #[test]
    fn rejects_chords() {
        let rep = gallery("truepie").unwrap();
        let p = &rep.paths;
        assert_eq!(
            classify_c4(&p[0], &p[2], &p[1], &p[3]),
            Err(ClassifyError::NotChordlessC4)
        );
    }
}
