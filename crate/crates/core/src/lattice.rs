//! Integer triangular-lattice geometry.
//!
//! The lattice has three line directions: horizontal, vertical and a single
//! diagonal with step `(+1,+1)`. The anti-diagonal does not exist.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors raised while building lattice objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("points {0} and {1} are not adjacent on the triangular grid")]
    NotAdjacent(GridPoint, GridPoint),
    #[error("points {0} and {1} do not lie on a common grid line")]
    NotColinear(GridPoint, GridPoint),
    #[error("a path needs at least two vertices")]
    TooShort,
    #[error("vertex {0} is repeated")]
    RepeatedVertex(GridPoint),
    #[error("expected exactly one bend, found {0}")]
    NotOneBend(usize),
}

/// A lattice point: column `x`, row `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GridPoint {
    pub x: i32,
    pub y: i32,
}

impl GridPoint {
    pub const fn new(x: i32, y: i32) -> Self {
        GridPoint { x, y }
    }

    pub fn step(self, step: Step) -> GridPoint {
        let (dx, dy) = step.vector();
        GridPoint::new(self.x + dx, self.y + dy)
    }

    pub fn translate(self, dx: i32, dy: i32) -> GridPoint {
        GridPoint::new(self.x + dx, self.y + dy)
    }

    /// Simultaneous horizontal and vertical reflection through the origin.
    pub fn double_flip(self) -> GridPoint {
        GridPoint::new(-self.x, -self.y)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i32, i32)> for GridPoint {
    fn from((x, y): (i32, i32)) -> Self {
        GridPoint::new(x, y)
    }
}

/// One of the three line directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Horizontal,
    Vertical,
    Diagonal,
}

impl Direction {
    pub const ALL: [Direction; 3] = [
        Direction::Horizontal,
        Direction::Vertical,
        Direction::Diagonal,
    ];

    /// Positive unit step along this direction.
    pub fn vector(self) -> (i32, i32) {
        match self {
            Direction::Horizontal => (1, 0),
            Direction::Vertical => (0, 1),
            Direction::Diagonal => (1, 1),
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Direction::Horizontal => 'H',
            Direction::Vertical => 'V',
            Direction::Diagonal => 'D',
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Direction::Horizontal => "horizontal",
            Direction::Vertical => "vertical",
            Direction::Diagonal => "diagonal",
        };
        f.write_str(name)
    }
}

/// A unit step: the six rays leaving a lattice point.
///
/// Angles use the rectangular drawing with the diagonal as the 45 degree ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    East,
    NorthEast,
    North,
    West,
    SouthWest,
    South,
}

impl Step {
    pub const ALL: [Step; 6] = [
        Step::East,
        Step::NorthEast,
        Step::North,
        Step::West,
        Step::SouthWest,
        Step::South,
    ];

    pub fn vector(self) -> (i32, i32) {
        match self {
            Step::East => (1, 0),
            Step::NorthEast => (1, 1),
            Step::North => (0, 1),
            Step::West => (-1, 0),
            Step::SouthWest => (-1, -1),
            Step::South => (0, -1),
        }
    }

    pub fn from_vector(dx: i32, dy: i32) -> Option<Step> {
        Step::ALL.into_iter().find(|s| s.vector() == (dx, dy))
    }

    pub fn direction(self) -> Direction {
        match self {
            Step::East | Step::West => Direction::Horizontal,
            Step::North | Step::South => Direction::Vertical,
            Step::NorthEast | Step::SouthWest => Direction::Diagonal,
        }
    }

    pub fn opposite(self) -> Step {
        match self {
            Step::East => Step::West,
            Step::NorthEast => Step::SouthWest,
            Step::North => Step::South,
            Step::West => Step::East,
            Step::SouthWest => Step::NorthEast,
            Step::South => Step::North,
        }
    }

    /// Angle of the ray in degrees.
    pub fn angle(self) -> u32 {
        match self {
            Step::East => 0,
            Step::NorthEast => 45,
            Step::North => 90,
            Step::West => 180,
            Step::SouthWest => 225,
            Step::South => 270,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Step::East => "E",
            Step::NorthEast => "NE",
            Step::North => "N",
            Step::West => "W",
            Step::SouthWest => "SW",
            Step::South => "S",
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Step::East | Step::NorthEast | Step::North)
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A unit grid edge, stored with the lexicographically smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    a: GridPoint,
    b: GridPoint,
}

impl GridEdge {
    pub fn new(p: GridPoint, q: GridPoint) -> Result<GridEdge, LatticeError> {
        let (a, b) = if p <= q { (p, q) } else { (q, p) };
        match (b.x - a.x, b.y - a.y) {
            (1, 0) | (0, 1) | (1, 1) => Ok(GridEdge { a, b }),
            _ => Err(LatticeError::NotAdjacent(p, q)),
        }
    }

    pub fn endpoints(&self) -> (GridPoint, GridPoint) {
        (self.a, self.b)
    }

    pub fn direction(&self) -> Direction {
        match (self.b.x - self.a.x, self.b.y - self.a.y) {
            (1, 0) => Direction::Horizontal,
            (0, 1) => Direction::Vertical,
            _ => Direction::Diagonal,
        }
    }

    pub fn line(&self) -> GridLine {
        GridLine::through(self.a, self.direction())
    }

    pub fn has_endpoint(&self, p: GridPoint) -> bool {
        self.a == p || self.b == p
    }

    pub fn translate(&self, dx: i32, dy: i32) -> GridEdge {
        GridEdge {
            a: self.a.translate(dx, dy),
            b: self.b.translate(dx, dy),
        }
    }

    pub fn double_flip(&self) -> GridEdge {
        GridEdge {
            a: self.b.double_flip(),
            b: self.a.double_flip(),
        }
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Canonical edge between two adjacent points.
pub fn edge_between(p: GridPoint, q: GridPoint) -> Result<GridEdge, LatticeError> {
    GridEdge::new(p, q)
}

/// A full grid line: `y = offset`, `x = offset` or `y - x = offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridLine {
    pub direction: Direction,
    pub offset: i32,
}

/// Result of intersecting two grid lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineIntersection {
    Point(GridPoint),
    Same,
    Empty,
}

impl GridLine {
    pub fn new(direction: Direction, offset: i32) -> Self {
        GridLine { direction, offset }
    }

    pub fn through(p: GridPoint, direction: Direction) -> Self {
        let offset = match direction {
            Direction::Horizontal => p.y,
            Direction::Vertical => p.x,
            Direction::Diagonal => p.y - p.x,
        };
        GridLine { direction, offset }
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        GridLine::through(p, self.direction).offset == self.offset
    }

    /// Coordinate of a point along the line (`y` for vertical lines, `x` otherwise).
    pub fn position(&self, p: GridPoint) -> i32 {
        match self.direction {
            Direction::Vertical => p.y,
            _ => p.x,
        }
    }

    pub fn point_at(&self, t: i32) -> GridPoint {
        match self.direction {
            Direction::Horizontal => GridPoint::new(t, self.offset),
            Direction::Vertical => GridPoint::new(self.offset, t),
            Direction::Diagonal => GridPoint::new(t, t + self.offset),
        }
    }

    pub fn intersection(&self, other: &GridLine) -> LineIntersection {
        use Direction::*;
        if self.direction == other.direction {
            return if self.offset == other.offset {
                LineIntersection::Same
            } else {
                LineIntersection::Empty
            };
        }
        let (a, b) = if self.direction < other.direction {
            (self, other)
        } else {
            (other, self)
        };
        let p = match (a.direction, b.direction) {
            (Horizontal, Vertical) => GridPoint::new(b.offset, a.offset),
            (Horizontal, Diagonal) => GridPoint::new(a.offset - b.offset, a.offset),
            (Vertical, Diagonal) => GridPoint::new(a.offset, a.offset + b.offset),
            _ => unreachable!("directions are sorted and distinct"),
        };
        LineIntersection::Point(p)
    }
}

impl fmt::Display for GridLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Horizontal => write!(f, "H[y={}]", self.offset),
            Direction::Vertical => write!(f, "V[x={}]", self.offset),
            Direction::Diagonal => write!(f, "D[y-x={}]", self.offset),
        }
    }
}

pub fn line_intersection(l1: GridLine, l2: GridLine) -> LineIntersection {
    l1.intersection(&l2)
}

/// A maximal straight piece of a path, endpoints in path order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub line: GridLine,
    pub start: GridPoint,
    pub end: GridPoint,
}

impl Segment {
    pub fn new(start: GridPoint, end: GridPoint) -> Result<Segment, LatticeError> {
        if start == end {
            return Err(LatticeError::TooShort);
        }
        let direction = Direction::ALL
            .into_iter()
            .find(|&d| GridLine::through(start, d).contains(end))
            .ok_or(LatticeError::NotColinear(start, end))?;
        Ok(Segment {
            line: GridLine::through(start, direction),
            start,
            end,
        })
    }

    pub fn direction(&self) -> Direction {
        self.line.direction
    }

    /// Positions of the endpoints along the line, smaller first.
    pub fn range(&self) -> (i32, i32) {
        let s = self.line.position(self.start);
        let e = self.line.position(self.end);
        (s.min(e), s.max(e))
    }

    pub fn len(&self) -> usize {
        let (lo, hi) = self.range();
        (hi - lo) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> Vec<GridEdge> {
        let (lo, hi) = self.range();
        (lo..hi)
            .map(|t| {
                GridEdge::new(self.line.point_at(t), self.line.point_at(t + 1)).expect("unit step")
            })
            .collect()
    }

    pub fn points(&self) -> Vec<GridPoint> {
        let (lo, hi) = self.range();
        (lo..=hi).map(|t| self.line.point_at(t)).collect()
    }

    pub fn contains_point(&self, p: GridPoint) -> bool {
        let (lo, hi) = self.range();
        self.line.contains(p) && (lo..=hi).contains(&self.line.position(p))
    }

    pub fn contains_edge(&self, e: &GridEdge) -> bool {
        let (a, b) = e.endpoints();
        e.direction() == self.direction() && self.contains_point(a) && self.contains_point(b)
    }

    pub fn contains_segment(&self, other: &Segment) -> bool {
        other.line == self.line && {
            let (lo, hi) = self.range();
            let (olo, ohi) = other.range();
            lo <= olo && ohi <= hi
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.start, self.end)
    }
}

/// Angle class of a one-bend path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AngleClass {
    Narrow,
    Normal,
    Wide,
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AngleClass::Narrow => "narrow",
            AngleClass::Normal => "normal",
            AngleClass::Wide => "wide",
        })
    }
}

/// The bend point of a one-bend path with its two arms, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BendShape {
    pub bend: GridPoint,
    pub arms: [Step; 2],
}

impl BendShape {
    /// `None` when the arms are equal or opposite.
    pub fn new(bend: GridPoint, a: Step, b: Step) -> Option<BendShape> {
        if a == b || a.opposite() == b {
            return None;
        }
        let arms = if a < b { [a, b] } else { [b, a] };
        Some(BendShape { bend, arms })
    }

    pub fn angle(&self) -> u32 {
        let d = self.arms[0].angle().abs_diff(self.arms[1].angle());
        d.min(360 - d)
    }

    pub fn angle_class(&self) -> AngleClass {
        match self.angle() {
            45 => AngleClass::Narrow,
            90 => AngleClass::Normal,
            _ => AngleClass::Wide,
        }
    }

    pub fn directions(&self) -> [Direction; 2] {
        [self.arms[0].direction(), self.arms[1].direction()]
    }

    /// The twelve valid arm pairs.
    pub fn arm_pairs() -> Vec<[Step; 2]> {
        let mut out = Vec::new();
        for (i, &a) in Step::ALL.iter().enumerate() {
            for &b in &Step::ALL[i + 1..] {
                if let Some(shape) = BendShape::new(GridPoint::default(), a, b) {
                    out.push(shape.arms);
                }
            }
        }
        out
    }
}

/// A simple lattice path stored as its full vertex chain.
///
/// The chain is kept in canonical orientation: the lexicographically smaller
/// endpoint comes first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    vertices: Vec<GridPoint>,
}

impl LatticePath {
    pub fn new(mut vertices: Vec<GridPoint>) -> Result<LatticePath, LatticeError> {
        if vertices.len() < 2 {
            return Err(LatticeError::TooShort);
        }
        for w in vertices.windows(2) {
            GridEdge::new(w[0], w[1])?;
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(LatticeError::RepeatedVertex(v));
            }
        }
        if vertices[vertices.len() - 1] < vertices[0] {
            vertices.reverse();
        }
        Ok(LatticePath { vertices })
    }

    /// Builds a path from its corner points, filling in the straight runs.
    pub fn from_corners(corners: &[GridPoint]) -> Result<LatticePath, LatticeError> {
        if corners.len() < 2 {
            return Err(LatticeError::TooShort);
        }
        let mut vertices = vec![corners[0]];
        for w in corners.windows(2) {
            let seg = Segment::new(w[0], w[1])?;
            let (dx, dy) = seg.direction().vector();
            let sign = if seg.line.position(w[1]) > seg.line.position(w[0]) {
                1
            } else {
                -1
            };
            let mut p = w[0];
            while p != w[1] {
                p = p.translate(sign * dx, sign * dy);
                vertices.push(p);
            }
        }
        LatticePath::new(vertices)
    }

    pub fn vertices(&self) -> &[GridPoint] {
        &self.vertices
    }

    pub fn first(&self) -> GridPoint {
        self.vertices[0]
    }

    pub fn last(&self) -> GridPoint {
        self.vertices[self.vertices.len() - 1]
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        self.vertices
            .windows(2)
            .map(|w| Step::from_vector(w[1].x - w[0].x, w[1].y - w[0].y).expect("validated chain"))
    }

    pub fn edges(&self) -> Vec<GridEdge> {
        self.vertices
            .windows(2)
            .map(|w| GridEdge::new(w[0], w[1]).expect("validated chain"))
            .collect()
    }

    pub fn edge_set(&self) -> BTreeSet<GridEdge> {
        self.edges().into_iter().collect()
    }

    pub fn point_set(&self) -> BTreeSet<GridPoint> {
        self.vertices.iter().copied().collect()
    }

    pub fn contains_point(&self, p: GridPoint) -> bool {
        self.vertices.contains(&p)
    }

    pub fn contains_edge(&self, e: &GridEdge) -> bool {
        self.segments().iter().any(|s| s.contains_edge(e))
    }

    pub fn segments(&self) -> Vec<Segment> {
        let steps: Vec<Step> = self.steps().collect();
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=steps.len() {
            if i == steps.len() || steps[i] != steps[start] {
                let seg = Segment {
                    line: GridLine::through(self.vertices[start], steps[start].direction()),
                    start: self.vertices[start],
                    end: self.vertices[i],
                };
                out.push(seg);
                start = i;
            }
        }
        out
    }

    /// Interior vertices where the direction changes, in path order.
    pub fn bend_points(&self) -> Vec<GridPoint> {
        let steps: Vec<Step> = self.steps().collect();
        (1..steps.len())
            .filter(|&i| steps[i] != steps[i - 1])
            .map(|i| self.vertices[i])
            .collect()
    }

    pub fn bend_count(&self) -> usize {
        self.bend_points().len()
    }

    pub fn is_bk(&self, k: usize) -> bool {
        self.bend_count() <= k
    }

    /// The bend point when the path has exactly one bend.
    pub fn bend_point(&self) -> Option<GridPoint> {
        match self.bend_points().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    pub fn bends_at(&self, p: GridPoint) -> bool {
        self.bend_points().contains(&p)
    }

    pub fn bend_shape(&self) -> Result<BendShape, LatticeError> {
        let bends = self.bend_points();
        if bends.len() != 1 {
            return Err(LatticeError::NotOneBend(bends.len()));
        }
        let i = self
            .vertices
            .iter()
            .position(|&v| v == bends[0])
            .expect("bend on path");
        let b = self.vertices[i];
        let prev = self.vertices[i - 1];
        let next = self.vertices[i + 1];
        let a1 = Step::from_vector(prev.x - b.x, prev.y - b.y).expect("adjacent");
        let a2 = Step::from_vector(next.x - b.x, next.y - b.y).expect("adjacent");
        Ok(BendShape::new(b, a1, a2).expect("a bend has non-collinear arms"))
    }

    /// Unit steps leaving `p` along the path (zero, one or two of them).
    pub fn arms_at(&self, p: GridPoint) -> Vec<Step> {
        let Some(i) = self.vertices.iter().position(|&v| v == p) else {
            return Vec::new();
        };
        let mut arms = Vec::new();
        for j in [i.wrapping_sub(1), i + 1] {
            if let Some(q) = self.vertices.get(j) {
                arms.push(Step::from_vector(q.x - p.x, q.y - p.y).expect("adjacent"));
            }
        }
        arms
    }

    /// The segment lying in the given direction, if the path has exactly one.
    pub fn segment_in(&self, direction: Direction) -> Option<Segment> {
        let mut found = self
            .segments()
            .into_iter()
            .filter(|s| s.direction() == direction);
        let first = found.next()?;
        found.next().is_none().then_some(first)
    }

    pub fn directions(&self) -> BTreeSet<Direction> {
        self.segments().iter().map(|s| s.direction()).collect()
    }

    /// Inclusive bounding box as (min corner, max corner).
    pub fn bbox(&self) -> (GridPoint, GridPoint) {
        bbox_of(self.vertices.iter().copied()).expect("nonempty path")
    }

    pub fn translate(&self, dx: i32, dy: i32) -> LatticePath {
        LatticePath {
            vertices: self.vertices.iter().map(|p| p.translate(dx, dy)).collect(),
        }
    }

    pub fn double_flip(&self) -> LatticePath {
        let mut vertices: Vec<GridPoint> = self.vertices.iter().map(|p| p.double_flip()).collect();
        vertices.reverse();
        LatticePath { vertices }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Inclusive bounding box of a point set.
pub fn bbox_of(points: impl IntoIterator<Item = GridPoint>) -> Option<(GridPoint, GridPoint)> {
    let mut it = points.into_iter();
    let first = it.next()?;
    let (mut lo, mut hi) = (first, first);
    for p in it {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    Some((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn path(pts: &[(i32, i32)]) -> LatticePath {
        LatticePath::new(pts.iter().map(|&q| q.into()).collect()).unwrap()
    }

    #[test]
    fn edges_between_adjacent_points() {
        let e = edge_between(p(2, 3), p(3, 3)).unwrap();
        assert_eq!(e.direction(), Direction::Horizontal);
        assert_eq!(e.endpoints(), (p(2, 3), p(3, 3)));
        let d = edge_between(p(3, 3), p(2, 2)).unwrap();
        assert_eq!(d.direction(), Direction::Diagonal);
        assert_eq!(d.endpoints(), (p(2, 2), p(3, 3)));
        assert_eq!(
            edge_between(p(0, 0), p(1, -1)),
            Err(LatticeError::NotAdjacent(p(0, 0), p(1, -1)))
        );
        assert!(edge_between(p(0, 0), p(2, 0)).is_err());
        assert!(edge_between(p(0, 0), p(0, 0)).is_err());
    }

    #[test]
    fn line_intersections() {
        let h3 = GridLine::new(Direction::Horizontal, 3);
        let v2 = GridLine::new(Direction::Vertical, 2);
        assert_eq!(line_intersection(h3, v2), LineIntersection::Point(p(2, 3)));
        let h1 = GridLine::new(Direction::Horizontal, 1);
        let h2 = GridLine::new(Direction::Horizontal, 2);
        assert_eq!(line_intersection(h1, h2), LineIntersection::Empty);
        assert_eq!(line_intersection(h1, h1), LineIntersection::Same);
        let d0 = GridLine::new(Direction::Diagonal, 0);
        let v5 = GridLine::new(Direction::Vertical, 5);
        assert_eq!(line_intersection(d0, v5), LineIntersection::Point(p(5, 5)));
        let d2 = GridLine::new(Direction::Diagonal, -2);
        assert_eq!(line_intersection(h3, d2), LineIntersection::Point(p(5, 3)));
    }

    #[test]
    fn segment_decomposition() {
        let q = path(&[(1, 3), (2, 3), (3, 3), (2, 2)]);
        let segs = q.segments();
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[0].direction(), Direction::Horizontal);
        assert_eq!((segs[0].start, segs[0].end), (p(1, 3), p(3, 3)));
        assert_eq!(segs[1].direction(), Direction::Diagonal);
        assert_eq!((segs[1].start, segs[1].end), (p(3, 3), p(2, 2)));

        assert_eq!(path(&[(0, 0), (1, 0)]).segments().len(), 1);

        let r = path(&[(1, 2), (1, 1), (2, 2)]);
        let dirs: Vec<_> = r.segments().iter().map(|s| s.direction()).collect();
        assert_eq!(dirs, vec![Direction::Vertical, Direction::Diagonal]);
        assert_eq!(r.bend_count(), 1);
    }

    #[test]
    fn bend_counts() {
        assert_eq!(path(&[(1, 3), (2, 3), (3, 3)]).bend_count(), 0);
        assert_eq!(path(&[(1, 3), (2, 3), (3, 3), (2, 2)]).bend_count(), 1);
        let two = path(&[(0, 0), (1, 0), (1, 1), (2, 2)]);
        assert_eq!(two.bend_count(), 2);
        assert!(two.is_bk(2));
        assert!(!two.is_bk(1));
    }

    #[test]
    fn bend_shapes() {
        let s = path(&[(0, 1), (1, 1), (1, 2)]).bend_shape().unwrap();
        assert_eq!(s.bend, p(1, 1));
        assert_eq!(s.arms, [Step::North, Step::West]);
        assert_eq!(s.angle_class(), AngleClass::Normal);

        let w = path(&[(0, 0), (1, 0), (2, 1)]).bend_shape().unwrap();
        assert_eq!(w.arms, [Step::NorthEast, Step::West]);
        assert_eq!(w.angle_class(), AngleClass::Wide);

        let n = path(&[(1, 2), (1, 1), (2, 2)]).bend_shape().unwrap();
        assert_eq!(n.arms, [Step::NorthEast, Step::North]);
        assert_eq!(n.angle_class(), AngleClass::Narrow);

        let straight = path(&[(0, 0), (1, 0)]);
        assert_eq!(straight.bend_shape(), Err(LatticeError::NotOneBend(0)));
    }

    #[test]
    fn twelve_arm_pairs_split_evenly() {
        let pairs = BendShape::arm_pairs();
        assert_eq!(pairs.len(), 12);
        let count = |c| {
            pairs
                .iter()
                .filter(|a| BendShape::new(p(0, 0), a[0], a[1]).unwrap().angle_class() == c)
                .count()
        };
        assert_eq!(count(AngleClass::Narrow), 4);
        assert_eq!(count(AngleClass::Normal), 4);
        assert_eq!(count(AngleClass::Wide), 4);
    }

    #[test]
    fn canonical_orientation() {
        let a = path(&[(3, 3), (2, 3), (1, 3)]);
        assert_eq!(a.first(), p(1, 3));
        let b = path(&[(1, 3), (2, 3), (3, 3)]);
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_paths_rejected() {
        assert_eq!(LatticePath::new(vec![p(0, 0)]), Err(LatticeError::TooShort));
        assert!(matches!(
            LatticePath::new(vec![p(0, 0), p(1, 0), p(0, 0)]),
            Err(LatticeError::RepeatedVertex(_))
        ));
        assert!(LatticePath::new(vec![p(0, 0), p(1, -1)]).is_err());
    }

    #[test]
    fn corners_expand_to_unit_steps() {
        let q = LatticePath::from_corners(&[p(1, 3), p(3, 3), p(2, 2)]).unwrap();
        assert_eq!(q, path(&[(1, 3), (2, 3), (3, 3), (2, 2)]));
        assert!(LatticePath::from_corners(&[p(0, 0), p(2, 1)]).is_err());
    }

    #[test]
    fn double_flip_preserves_shape_class() {
        let q = path(&[(0, 0), (1, 0), (2, 1)]);
        let f = q.double_flip();
        assert_eq!(f.bend_shape().unwrap().angle_class(), AngleClass::Wide);
        assert_eq!(f.double_flip(), q);
    }

    #[test]
    fn three_lines_through_a_point_meet_only_there() {
        let q = p(4, -2);
        for a in Direction::ALL {
            for b in Direction::ALL {
                if a != b {
                    let r = GridLine::through(q, a).intersection(&GridLine::through(q, b));
                    assert_eq!(r, LineIntersection::Point(q));
                }
            }
        }
    }
}
