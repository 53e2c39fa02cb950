//! Helly machinery over path families, with grid edges as the ground set.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::lattice::{GridEdge, GridPoint, LatticePath};
use crate::search::paths_in_box;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HellyError {
    #[error("the family is empty")]
    EmptyFamily,
    #[error("bounds too large: {0}")]
    BoundsTooLarge(String),
}

/// Largest window side accepted by the exhaustive checks.
pub const HELLY_WINDOW_LIMIT: usize = 5;
/// Largest segment length accepted by [`helly_violation_search`].
pub const HELLY_SEG_LIMIT: usize = 3;

/// Edges common to every member.
pub fn core_edges(family: &[LatticePath]) -> Result<BTreeSet<GridEdge>, HellyError> {
    let (first, rest) = family.split_first().ok_or(HellyError::EmptyFamily)?;
    let mut core = first.edge_set();
    for p in rest {
        let e = p.edge_set();
        core.retain(|x| e.contains(x));
    }
    Ok(core)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn pick(family: &[LatticePath], idx: &[usize]) -> Vec<LatticePath> {
    idx.iter().map(|&i| family[i].clone()).collect()
}

/// Every `min(h, |family|)` members share an edge.
pub fn is_h_intersecting(family: &[LatticePath], h: usize) -> bool {
    if family.is_empty() {
        return true;
    }
    let k = h.clamp(1, family.len());
    subsets(family.len(), k)
        .iter()
        .all(|s| !core_edges(&pick(family, s)).expect("nonempty").is_empty())
}

/// For every subfamily of at least `h` members, some `h` of them have the
/// subfamily's core as their core.
pub fn strong_helly_equals(family: &[LatticePath], h: usize) -> bool {
    let n = family.len();
    if h == 0 || n < h {
        return false;
    }
    for size in h..=n {
        for sub in subsets(n, size) {
            let members = pick(family, &sub);
            let core = core_edges(&members).expect("nonempty");
            let found = subsets(size, h)
                .iter()
                .any(|s| core_edges(&pick(&members, s)).expect("nonempty") == core);
            if !found {
                return false;
            }
        }
    }
    true
}

/// Outcome of the bounded search for 4-member violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HellyReport {
    pub width: usize,
    pub height: usize,
    pub max_seg_len: usize,
    pub max_bends: usize,
    pub pool_size: usize,
    /// Pairwise intersecting 4-member families inspected, one per translation class.
    pub families: u64,
    /// 3-intersecting with empty core.
    pub helly_witness: Option<Vec<LatticePath>>,
    /// No three members have the family core as their core.
    pub strong_witness: Option<Vec<LatticePath>>,
}

impl HellyReport {
    pub fn violation_found(&self, strong: bool) -> bool {
        if strong {
            self.strong_witness.is_some()
        } else {
            self.helly_witness.is_some()
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "window: {}x{} points, segments <= {}, bends <= {} (bounded evidence only)",
            self.width, self.height, self.max_seg_len, self.max_bends
        );
        let _ = writeln!(s, "candidate paths: {}", self.pool_size);
        let _ = writeln!(s, "pairwise intersecting 4-families: {}", self.families);
        for (name, w) in [
            ("3-intersecting with empty core", &self.helly_witness),
            ("strong Helly violation", &self.strong_witness),
        ] {
            match w {
                None => {
                    let _ = writeln!(s, "{name}: none");
                }
                Some(f) => {
                    let _ = writeln!(s, "{name}: found");
                    for p in f {
                        let _ = writeln!(s, "  {p}");
                    }
                }
            }
        }
        s
    }
}

fn check_window(width: usize, height: usize) -> Result<(), HellyError> {
    if width == 0 || height == 0 || width > HELLY_WINDOW_LIMIT || height > HELLY_WINDOW_LIMIT {
        return Err(HellyError::BoundsTooLarge(format!(
            "window {width}x{height} must be nonempty and at most {HELLY_WINDOW_LIMIT}x{HELLY_WINDOW_LIMIT}"
        )));
    }
    Ok(())
}

/// Edge masks over the window; at most 56 edges fit a 5x5 window.
fn edge_masks(paths: &[LatticePath]) -> Vec<u64> {
    let mut ids: HashMap<GridEdge, u32> = HashMap::new();
    paths
        .iter()
        .map(|p| {
            p.edges().into_iter().fold(0u64, |m, e| {
                let next = ids.len() as u32;
                let id = *ids.entry(e).or_insert(next);
                assert!(id < 64, "window edge count exceeds 64");
                m | 1 << id
            })
        })
        .collect()
}

/// Exhaustive search for 4-member families breaking Helly number 3 or
/// strong Helly number 3.
///
/// Members are distinct paths in the window with at most `max_bends` bends and
/// segments of at most `max_seg_len` edges. Only pairwise edge-sharing families
/// can violate either property, so the search walks 4-cliques of the
/// edge-sharing graph and keeps one family per translation class (the one whose
/// union bounding box starts at the origin).
pub fn helly_violation_search(
    width: usize,
    height: usize,
    max_seg_len: usize,
    max_bends: usize,
) -> Result<HellyReport, HellyError> {
    check_window(width, height)?;
    if max_seg_len == 0 || max_seg_len > HELLY_SEG_LIMIT {
        return Err(HellyError::BoundsTooLarge(format!(
            "segment length must be in 1..={HELLY_SEG_LIMIT}"
        )));
    }
    if max_bends > 2 {
        return Err(HellyError::BoundsTooLarge("at most two bends".into()));
    }
    let pool = paths_in_box(
        GridPoint::new(0, 0),
        width,
        height,
        max_bends,
        Some(max_seg_len),
    );
    let masks = edge_masks(&pool);
    let lo: Vec<GridPoint> = pool.iter().map(|p| p.bbox().0).collect();
    let n = pool.len();
    let later: Vec<Vec<usize>> = (0..n)
        .map(|a| (a + 1..n).filter(|&b| masks[a] & masks[b] != 0).collect())
        .collect();

    struct Found {
        families: u64,
        helly: Option<[usize; 4]>,
        strong: Option<[usize; 4]>,
    }

    let per_first: Vec<Found> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut found = Found {
                families: 0,
                helly: None,
                strong: None,
            };
            for (ib, &b) in later[a].iter().enumerate() {
                let ab = masks[a] & masks[b];
                let cs: Vec<usize> = later[a][ib + 1..]
                    .iter()
                    .copied()
                    .filter(|&c| masks[b] & masks[c] != 0)
                    .collect();
                for (ic, &c) in cs.iter().enumerate() {
                    let abc = ab & masks[c];
                    for &d in &cs[ic + 1..] {
                        if masks[c] & masks[d] == 0 {
                            continue;
                        }
                        let anchored_x = [a, b, c, d].iter().map(|&i| lo[i].x).min() == Some(0);
                        let anchored_y = [a, b, c, d].iter().map(|&i| lo[i].y).min() == Some(0);
                        if !(anchored_x && anchored_y) {
                            continue;
                        }
                        found.families += 1;
                        let abd = ab & masks[d];
                        let acd = masks[a] & masks[c] & masks[d];
                        let bcd = masks[b] & masks[c] & masks[d];
                        let all = abc & masks[d];
                        let triples = [abc, abd, acd, bcd];
                        if found.helly.is_none() && all == 0 && triples.iter().all(|&t| t != 0) {
                            found.helly = Some([a, b, c, d]);
                        }
                        if found.strong.is_none() && triples.iter().all(|&t| t != all) {
                            found.strong = Some([a, b, c, d]);
                        }
                    }
                }
            }
            found
        })
        .collect();

    let families = per_first.iter().map(|f| f.families).sum();
    let family = |w: [usize; 4]| w.iter().map(|&i| pool[i].clone()).collect::<Vec<_>>();
    Ok(HellyReport {
        width,
        height,
        max_seg_len,
        max_bends,
        pool_size: n,
        families,
        helly_witness: per_first.iter().find_map(|f| f.helly).map(family),
        strong_witness: per_first.iter().find_map(|f| f.strong).map(family),
    })
}

/// Path-level checks behind the two bend-forcing lemmas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub width: usize,
    pub height: usize,
    /// Paths with at most two bends inspected for (a).
    pub paths_checked: usize,
    /// (a): no path with at most two bends holds two edges of a line while
    /// skipping an edge of that line between them.
    pub colinear_ok: bool,
    /// Host and probe pairs inspected for (b).
    pub pairs_checked: usize,
    /// (b): no path with at most one bend holds two edges of a one-bend host
    /// while skipping a host edge between them.
    pub subpath_ok: bool,
    pub counterexample: Option<String>,
}

impl LemmaReport {
    pub fn all_ok(&self) -> bool {
        self.colinear_ok && self.subpath_ok
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = |ok: bool| if ok { "ok" } else { "FAILED" };
        let _ = writeln!(s, "window: {}x{} points", self.width, self.height);
        let _ = writeln!(
            s,
            "colinear gap needs >= 3 bends: {} ({} paths with <= 2 bends)",
            verdict(self.colinear_ok),
            self.paths_checked
        );
        let _ = writeln!(
            s,
            "one-bend subpath gap needs >= 2 bends: {} ({} host/probe pairs)",
            verdict(self.subpath_ok),
            self.pairs_checked
        );
        if let Some(c) = &self.counterexample {
            let _ = writeln!(s, "counterexample: {c}");
        }
        s
    }
}

/// True when the path's edges on each grid line form one contiguous run.
pub fn colinear_edges_contiguous(path: &LatticePath) -> bool {
    let mut by_line: HashMap<_, Vec<i32>> = HashMap::new();
    for e in path.edges() {
        let line = e.line();
        let (p, q) = e.endpoints();
        by_line
            .entry(line)
            .or_default()
            .push(line.position(p).min(line.position(q)));
    }
    by_line.into_values().all(|mut v| {
        v.sort_unstable();
        v.windows(2).all(|w| w[1] == w[0] + 1)
    })
}

/// True when the edges of `host` used by `probe` are consecutive along `host`.
pub fn covers_contiguous_run(host: &LatticePath, probe: &LatticePath) -> bool {
    let used = probe.edge_set();
    let hits: Vec<usize> = host
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| used.contains(e))
        .map(|(i, _)| i)
        .collect();
    hits.windows(2).all(|w| w[1] == w[0] + 1)
}

pub fn lemma_checks(width: usize, height: usize) -> Result<LemmaReport, HellyError> {
    check_window(width, height)?;
    let origin = GridPoint::new(0, 0);
    let b2 = paths_in_box(origin, width, height, 2, None);
    let bad_a = b2.par_iter().find_first(|p| !colinear_edges_contiguous(p));
    let b1 = paths_in_box(origin, width, height, 1, None);
    let hosts: Vec<&LatticePath> = b1.iter().filter(|p| p.bend_count() == 1).collect();
    let bad_b = hosts.par_iter().find_map_first(|h| {
        b1.iter()
            .find(|q| !covers_contiguous_run(h, q))
            .map(|q| (h.to_string(), q.to_string()))
    });
    let counterexample = match (&bad_a, &bad_b) {
        (Some(p), _) => Some(format!("path {p} skips an edge of one of its lines")),
        (None, Some((h, q))) => Some(format!("path {q} skips an edge of host {h}")),
        _ => None,
    };
    Ok(LemmaReport {
        width,
        height,
        paths_checked: b2.len(),
        colinear_ok: bad_a.is_none(),
        pairs_checked: hosts.len() * b1.len(),
        subpath_ok: bad_b.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{claw_witness, sun_representation};

    fn path(points: &[(i32, i32)]) -> LatticePath {
        LatticePath::new(points.iter().map(|&(x, y)| GridPoint::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn cores() {
        let sun = sun_representation(4).unwrap();
        let core = core_edges(&sun.paths[..4]).unwrap();
        assert!(core.contains(&GridEdge::new(GridPoint::new(2, 3), GridPoint::new(3, 3)).unwrap()));
        assert!(core_edges(&claw_witness().paths).unwrap().is_empty());
        let single = path(&[(0, 0), (1, 0), (1, 1)]);
        assert_eq!(
            core_edges(std::slice::from_ref(&single)).unwrap(),
            single.edge_set()
        );
        assert_eq!(core_edges(&[]), Err(HellyError::EmptyFamily));
    }

    #[test]
    fn claw_witness_predicates() {
        let f = claw_witness().paths;
        assert!(is_h_intersecting(&f, 2));
        assert!(!is_h_intersecting(&f, 3));
        assert!(strong_helly_equals(&f, 3));
        assert!(!strong_helly_equals(&f, 2));
        assert!(is_h_intersecting(&f[..1], 1));
    }

    #[test]
    fn translates_share_cores() {
        let p = path(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]);
        let f: Vec<LatticePath> = (0..4).map(|i| p.translate(i % 2, 0)).collect();
        assert!(strong_helly_equals(&f, 3));
    }

    #[test]
    fn small_window_has_no_violation() {
        let r = helly_violation_search(3, 3, 2, 1).unwrap();
        assert!(r.families > 0);
        assert!(r.helly_witness.is_none() && r.strong_witness.is_none());
    }

    #[test]
    fn bounds_are_guarded() {
        assert!(helly_violation_search(6, 4, 2, 1).is_err());
        assert!(helly_violation_search(4, 4, 4, 1).is_err());
        assert!(lemma_checks(0, 3).is_err());
    }

    #[test]
    fn gap_needs_three_bends() {
        let gap = path(&[(0, 0), (1, 0), (1, 1), (2, 1), (2, 0), (3, 0)]);
        assert_eq!(gap.bend_count(), 4);
        assert!(!colinear_edges_contiguous(&gap));
        let tight = path(&[(0, 0), (1, 0), (2, 1), (2, 0), (3, 0)]);
        assert_eq!(tight.bend_count(), 3);
        assert!(!colinear_edges_contiguous(&tight));
        let host = path(&[(0, 0), (1, 0), (2, 0), (2, 1)]);
        let skip = path(&[(0, 0), (1, 0), (2, 1), (2, 0)]);
        assert_eq!(skip.bend_count(), 2);
        assert!(!covers_contiguous_run(&host, &skip));
    }

    #[test]
    fn lemma_checks_small() {
        assert!(lemma_checks(4, 4).unwrap().all_ok());
    }
}
