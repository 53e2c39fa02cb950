//! Explicit representations: suns, small complete bipartite graphs, the claw
//! witness, a gallery of clique and 4-cycle archetypes, and seeded random families.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::epgt::Representation;
use crate::lattice::{GridPoint, LatticePath};
use crate::search::{enumerate_paths, SearchBounds};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown gallery subtype {0:?}")]
    UnknownSubtype(String),
}

/// Largest window accepted by [`random_b1_family`], per side.
pub const RANDOM_WINDOW_LIMIT: usize = 12;

/// Gallery names, clique archetypes first.
pub const GALLERY: [&str; 15] = [
    "edge",
    "claw",
    "flag",
    "paw",
    "cricket",
    "bull",
    "extended-bull",
    "net",
    "truepie",
    "falsepie",
    "rframe",
    "tframe",
    "pframe",
    "c4flag",
    "butterfly",
];

fn p(x: i32, y: i32) -> GridPoint {
    GridPoint::new(x, y)
}

fn corners(points: &[(i32, i32)]) -> LatticePath {
    let pts: Vec<GridPoint> = points.iter().map(|&(x, y)| p(x, y)).collect();
    LatticePath::from_corners(&pts).expect("corner list lies on grid lines")
}

fn chain(points: &[(i32, i32)]) -> LatticePath {
    LatticePath::new(points.iter().map(|&(x, y)| p(x, y)).collect()).expect("valid vertex chain")
}

/// The k-sun on a 3-row strip.
///
/// Path `i - 1` is `P_i^v` (inner clique vertex `v_i`) and path `k + i - 1` is
/// `P_i^s` (outer vertex `s_i`, adjacent to `v_i` and `v_{i+1}`). Labels are the
/// identity, matching [`crate::graph::sun`].
pub fn sun_representation(k: usize) -> Result<Representation, ConstructionError> {
    if k < 4 {
        return Err(ConstructionError::BadParameter(format!(
            "sun needs k >= 4, got {k}"
        )));
    }
    let k32 = k as i32;
    let mut paths = Vec::with_capacity(2 * k);
    for i in 1..=k32 {
        let start = if i == k32 { 1 } else { 2 };
        let path = if i == 1 {
            corners(&[(1, 3), (3, 3), (2, 2)])
        } else if i % 2 == 1 {
            corners(&[(start, 3), ((i + 5) / 2, 3), ((i + 1) / 2, 1)])
        } else {
            corners(&[(start, 3), ((i + 4) / 2, 3), ((i + 4) / 2, 1)])
        };
        paths.push(path);
    }
    for i in 1..=k32 {
        let path = if i == k32 {
            corners(&[(1, 3), (2, 3)])
        } else if i % 2 == 1 {
            corners(&[((i + 3) / 2, 2), ((i + 5) / 2, 3), ((i + 5) / 2, 2)])
        } else {
            corners(&[((i + 2) / 2, 1), ((i + 4) / 2, 2), ((i + 4) / 2, 1)])
        };
        paths.push(path);
    }
    Ok(Representation::identity_labeled(paths))
}

/// A K_{2,6} representation in a 6x6 window: two hubs, then six leaves.
const K26: [&[(i32, i32)]; 8] = [
    &[(3, 5), (0, 2), (5, 2)],
    &[(2, 5), (2, 0), (5, 3)],
    &[(0, 2), (2, 2), (2, 1)],
    &[(0, 2), (2, 4), (2, 3)],
    &[(2, 0), (4, 2), (3, 2)],
    &[(2, 3), (2, 2), (3, 2)],
    &[(2, 5), (2, 4), (3, 5)],
    &[(5, 2), (4, 2), (5, 3)],
];

/// K_{2,n} for `1 <= n <= 6`. Vertices 0 and 1 are the hubs.
pub fn k2n_representation(n: usize) -> Result<Representation, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::BadParameter(
            "K_{2,n} needs n >= 1".into(),
        ));
    }
    if n > 6 {
        return Err(ConstructionError::BadParameter(format!(
            "K_{{2,{n}}} has no single-bend representation (K_{{2,7}} is an induced subgraph)"
        )));
    }
    let paths = K26[..2 + n].iter().map(|c| corners(c)).collect();
    Ok(Representation::identity_labeled(paths))
}

/// Three single-bend paths around (1,1) that pairwise share an edge but have
/// no common edge.
pub fn claw_witness() -> Representation {
    Representation::identity_labeled(vec![
        chain(&[(0, 1), (1, 1), (1, 2)]),
        chain(&[(1, 2), (1, 1), (2, 2)]),
        chain(&[(2, 2), (1, 1), (0, 1)]),
    ])
}

/// A hand-built instance of a clique or 4-cycle archetype.
///
/// 4-cycle instances list their paths in cyclic order.
pub fn gallery(subtype: &str) -> Result<Representation, ConstructionError> {
    let paths = match subtype {
        "edge" => vec![
            chain(&[(0, 1), (1, 1), (2, 1)]),
            chain(&[(1, 1), (2, 1), (2, 2)]),
            chain(&[(1, 0), (1, 1), (2, 1), (3, 1)]),
        ],
        "claw" => return Ok(claw_witness()),
        "flag" => vec![
            chain(&[(2, 0), (1, 0), (0, 0), (1, 1), (2, 2)]),
            chain(&[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)]),
            chain(&[(2, 0), (2, 1), (2, 2), (1, 1), (0, 0)]),
        ],
        "paw" => vec![
            chain(&[(2, 0), (1, 0), (0, 0), (1, 1), (2, 2), (3, 3)]),
            chain(&[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)]),
            chain(&[(2, 0), (2, 1), (2, 2), (3, 3)]),
        ],
        "cricket" => vec![
            chain(&[(2, 0), (1, 0), (0, 0), (1, 1), (2, 2), (3, 3)]),
            chain(&[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (2, 3)]),
            chain(&[(2, 3), (2, 2), (3, 3)]),
        ],
        "bull" => vec![
            chain(&[(0, 0), (1, 1), (2, 1), (3, 1), (4, 1)]),
            chain(&[(4, 1), (3, 1), (3, 2), (3, 3)]),
            chain(&[(3, 1), (3, 2), (3, 3), (2, 2), (1, 1), (0, 0)]),
        ],
        "extended-bull" => vec![
            chain(&[(3, 0), (2, 0), (1, 0), (0, 0), (1, 1), (2, 2), (3, 3)]),
            chain(&[(3, 0), (2, 0), (2, 1), (2, 2), (2, 3)]),
            chain(&[(2, 3), (2, 2), (3, 3)]),
        ],
        "net" => vec![
            chain(&[(0, 0), (1, 1), (2, 1), (3, 1), (4, 1)]),
            chain(&[(4, 1), (3, 1), (3, 2), (3, 3), (3, 4)]),
            chain(&[(3, 4), (3, 3), (2, 2), (1, 1), (0, 0)]),
        ],
        "truepie" => vec![
            chain(&[(0, 1), (1, 1), (1, 2)]),
            chain(&[(1, 2), (1, 1), (2, 1)]),
            chain(&[(2, 1), (1, 1), (1, 0)]),
            chain(&[(1, 0), (1, 1), (0, 1)]),
        ],
        "falsepie" => vec![
            chain(&[(2, 1), (1, 1), (1, 2)]),
            chain(&[(1, 2), (1, 1), (1, 0)]),
            chain(&[(1, 0), (1, 1), (0, 1)]),
            chain(&[(0, 1), (1, 1), (2, 1)]),
        ],
        "rframe" => vec![
            chain(&[(2, 0), (1, 0), (0, 0), (0, 1)]),
            chain(&[(1, 0), (2, 0), (3, 0), (3, 1)]),
            chain(&[(3, 0), (3, 1), (3, 2), (2, 2), (1, 2)]),
            chain(&[(2, 2), (1, 2), (0, 2), (0, 1), (0, 0)]),
        ],
        "tframe" => vec![
            chain(&[(2, 0), (1, 0), (0, 0), (1, 1)]),
            chain(&[(1, 0), (2, 0), (3, 0), (4, 0), (4, 1)]),
            chain(&[(4, 0), (4, 1), (4, 2), (3, 2)]),
            chain(&[(4, 2), (3, 2), (2, 2), (1, 1), (0, 0)]),
        ],
        "pframe" => vec![
            chain(&[(2, 0), (1, 0), (0, 0), (1, 1)]),
            chain(&[(1, 0), (2, 0), (3, 0), (4, 1)]),
            chain(&[(3, 0), (4, 1), (5, 2), (4, 2), (3, 2)]),
            chain(&[(4, 2), (3, 2), (2, 2), (1, 1), (0, 0)]),
        ],
        "c4flag" => vec![
            chain(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]),
            chain(&[(0, 0), (1, 0), (2, 1), (3, 2)]),
            chain(&[(2, 1), (3, 2), (3, 1)]),
            chain(&[(4, 0), (3, 0), (3, 1), (3, 2)]),
        ],
        "butterfly" => vec![
            chain(&[(1, 2), (0, 2), (1, 3), (2, 4)]),
            chain(&[(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (3, 1)]),
            chain(&[(2, 1), (2, 0), (3, 1), (4, 2)]),
            chain(&[(2, 0), (2, 1), (2, 2), (2, 3), (2, 4), (1, 3)]),
        ],
        other => return Err(ConstructionError::UnknownSubtype(other.to_string())),
    };
    Ok(Representation::identity_labeled(paths))
}

/// `count` distinct paths with at most one bend, drawn uniformly without
/// replacement from a `width x height` window.
pub fn random_b1_family(
    count: usize,
    width: usize,
    height: usize,
    seed: u64,
) -> Result<Representation, ConstructionError> {
    if width > RANDOM_WINDOW_LIMIT || height > RANDOM_WINDOW_LIMIT {
        return Err(ConstructionError::BadParameter(format!(
            "window {width}x{height} exceeds {RANDOM_WINDOW_LIMIT}x{RANDOM_WINDOW_LIMIT}"
        )));
    }
    let mut bounds = SearchBounds::new(width, height, 1);
    bounds.area_limit = RANDOM_WINDOW_LIMIT * RANDOM_WINDOW_LIMIT;
    let pool =
        enumerate_paths(&bounds).map_err(|e| ConstructionError::BadParameter(e.to_string()))?;
    if count == 0 || count > pool.len() {
        return Err(ConstructionError::BadParameter(format!(
            "count must be in 1..={} for a {width}x{height} window",
            pool.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let paths = sample(&mut rng, pool.len(), count)
        .into_iter()
        .map(|i| pool[i].clone())
        .collect();
    Ok(Representation::identity_labeled(paths))
}
