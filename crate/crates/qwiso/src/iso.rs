//! Extraction of explicit isomorphisms between graphs the comparison
//! pipeline does not distinguish.
//!
//! A probe gadget (a pendant 2-path) is attached at each vertex of either
//! graph in turn; vertices whose gadgeted graphs remain indistinguishable
//! are candidate partners. When the candidate relation is not yet a
//! bijection, the vertex with the fewest partners is pinned to its first
//! candidate by attaching a longer marker path on both sides, and the
//! relation is recomputed. Any extracted bijection is checked against the
//! adjacency structure before being reported.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gi::{comparison_table, trace_table, GiConfig, TableSummary, TraceTable};
use crate::graph::{Graph, Permutation};

/// A candidate vertex bijection from graph A to graph B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mapping {
    map: Vec<u32>,
    verified: bool,
}

impl Mapping {
    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.map
    }

    /// True only when the adjacency check has passed.
    pub fn is_verified(&self) -> bool {
        self.verified
    }
}

/// The per-vertex candidate structure left behind when no bijection could
/// be extracted or the extracted one failed verification.
#[derive(Clone, Debug, Default)]
pub struct MatchRelation {
    /// Pairs fixed by marker gadgets, in pinning order.
    pub pinned: Vec<(u32, u32)>,
    /// For each remaining A-vertex, its candidate B-vertices.
    pub candidates: Vec<(u32, Vec<u32>)>,
}

/// The three possible ends of an isomorphism search.
#[derive(Clone, Debug)]
pub enum FinderOutcome {
    NonIsomorphic,
    Isomorphic(Mapping),
    /// The statistics could not resolve the pair: the walks consider the
    /// graphs equivalent but no candidate assembly survived verification.
    MethodIncomplete(MatchRelation),
}

/// Checks whether `map` carries edges of `a` exactly onto edges of `b`.
pub fn verify_mapping(a: &Graph, b: &Graph, map: &[u32]) -> Result<bool> {
    if map.len() != a.n() {
        return Err(Error::PermutationLength {
            expected: a.n(),
            got: map.len(),
        });
    }
    if a.n() != b.n() || Permutation::from_map(map.to_vec()).is_err() {
        return Ok(false);
    }
    for u in 0..a.n() as u32 {
        for v in u + 1..a.n() as u32 {
            if a.has_edge(u, v) != b.has_edge(map[u as usize], map[v as usize]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for an explicit isomorphism between `a` and `b`.
pub fn find_isomorphism(a: &Graph, b: &Graph, cfg: &GiConfig) -> Result<FinderOutcome> {
    if crate::gi::compare_graphs(a, b, cfg)?.verdict.is_non_isomorphic() {
        return Ok(FinderOutcome::NonIsomorphic);
    }
    let n = a.n();
    let mut pinned: Vec<(u32, u32)> = Vec::new();

    loop {
        // Marker paths must stay distinguishable from each other and from
        // the probe (length 2), so pin i uses length 3 + i.
        let mut base_a = a.clone();
        let mut base_b = b.clone();
        for (i, &(u, v)) in pinned.iter().enumerate() {
            base_a = base_a.attach_pendant_path(u as usize, 3 + i)?;
            base_b = base_b.attach_pendant_path(v as usize, 3 + i)?;
        }

        let unpinned_a: Vec<u32> =
            (0..n as u32).filter(|u| !pinned.iter().any(|&(x, _)| x == *u)).collect();
        let unpinned_b: Vec<u32> =
            (0..n as u32).filter(|v| !pinned.iter().any(|&(_, y)| y == *v)).collect();

        if unpinned_a.is_empty() {
            return Ok(assemble(a, b, &pinned, &[], &[]));
        }

        let probes_a = probe_tables(&base_a, &unpinned_a, cfg)?;
        let probes_b = probe_tables(&base_b, &unpinned_b, cfg)?;

        let candidate_rows: Vec<Vec<u32>> = probes_a
            .par_iter()
            .map(|(ta, sa)| {
                unpinned_b
                    .iter()
                    .zip(&probes_b)
                    .filter(|(_, (tb, sb))| matches_as_pair(ta, sa, tb, sb, cfg))
                    .map(|(&v, _)| v)
                    .collect()
            })
            .collect();

        let relation = MatchRelation {
            pinned: pinned.clone(),
            candidates: unpinned_a.iter().copied().zip(candidate_rows.clone()).collect(),
        };

        // An empty row before any pinning proves non-isomorphism: an
        // isomorphic partner graph would leave at least the image vertex
        // indistinguishable. After pinning it may instead mean a pin was
        // wrong, which only the incompleteness verdict can express.
        if candidate_rows.iter().any(|row| row.is_empty()) {
            return Ok(if pinned.is_empty() {
                FinderOutcome::NonIsomorphic
            } else {
                FinderOutcome::MethodIncomplete(relation)
            });
        }
        for &v in &unpinned_b {
            if !candidate_rows.iter().any(|row| row.contains(&v)) {
                return Ok(if pinned.is_empty() {
                    FinderOutcome::NonIsomorphic
                } else {
                    FinderOutcome::MethodIncomplete(relation)
                });
            }
        }

        let is_bijection = candidate_rows.iter().all(|row| row.len() == 1) && {
            let mut images: Vec<u32> = candidate_rows.iter().map(|row| row[0]).collect();
            images.sort_unstable();
            images.windows(2).all(|w| w[0] != w[1])
        };
        if is_bijection {
            return Ok(assemble(a, b, &pinned, &unpinned_a, &candidate_rows));
        }

        // Pin the most constrained vertex with several partners to its
        // first candidate. Rows of size one are not informative to re-pin,
        // but if every row has one candidate and they collide, pinning the
        // first collider forces the conflict to resolve or empty out.
        let (pos, row) = candidate_rows
            .iter()
            .enumerate()
            .filter(|(_, row)| row.len() > 1)
            .min_by_key(|(pos, row)| (row.len(), *pos))
            .or_else(|| {
                candidate_rows
                    .iter()
                    .enumerate()
                    .min_by_key(|(pos, row)| (row.len(), *pos))
            })
            .expect("nonempty candidate rows");
        pinned.push((unpinned_a[pos], row[0]));
        if pinned.len() > n {
            return Ok(FinderOutcome::MethodIncomplete(relation));
        }
    }
}

fn matches_as_pair(
    ta: &TraceTable,
    sa: &TableSummary,
    tb: &TraceTable,
    sb: &TableSummary,
    cfg: &GiConfig,
) -> bool {
    if sa.total != sb.total {
        return false;
    }
    let cross = comparison_table(ta, tb, cfg.tol);
    if cross.total != sa.total {
        return false;
    }
    !cfg.strict || (sa.sorted_rows() == sb.sorted_rows() && sa.sorted_rows() == cross.sorted_rows())
}

fn probe_tables(
    base: &Graph,
    vertices: &[u32],
    cfg: &GiConfig,
) -> Result<Vec<(TraceTable, TableSummary)>> {
    vertices
        .par_iter()
        .map(|&u| {
            let g = base.attach_gadget(u as usize)?;
            let t = trace_table(&g, cfg)?;
            let s = comparison_table(&t, &t, cfg.tol);
            Ok((t, s))
        })
        .collect()
}

fn assemble(
    a: &Graph,
    b: &Graph,
    pinned: &[(u32, u32)],
    unpinned_a: &[u32],
    rows: &[Vec<u32>],
) -> FinderOutcome {
    let mut map = vec![u32::MAX; a.n()];
    for &(u, v) in pinned {
        map[u as usize] = v;
    }
    for (&u, row) in unpinned_a.iter().zip(rows) {
        map[u as usize] = row[0];
    }
    match verify_mapping(a, b, &map) {
        Ok(true) => FinderOutcome::Isomorphic(Mapping { map, verified: true }),
        _ => FinderOutcome::MethodIncomplete(MatchRelation {
            pinned: pinned.to_vec(),
            candidates: unpinned_a
                .iter()
                .zip(rows)
                .map(|(&u, row)| (u, row.clone()))
                .collect(),
        }),
    }
}
