//! Simple undirected graphs with dense 0-based vertex indices, plus the
//! distance-based vertex/edge partitions the phase schemes are built from.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// Adjacency lists are kept sorted, so neighbor queries are binary searches
/// and iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edges: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, k={})", self.n(), self.edges)
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an explicit edge list, rejecting self-loops,
    /// duplicates, and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: u32, v: u32) -> Result<()> {
        let n = self.n();
        if u as usize >= n || v as usize >= n {
            return Err(Error::InvalidEdge {
                u,
                v,
                n,
                reason: "endpoint out of range",
            });
        }
        if u == v {
            return Err(Error::InvalidEdge {
                u,
                v,
                n,
                reason: "self-loop",
            });
        }
        if self.adj[u as usize].contains(&v) {
            return Err(Error::InvalidEdge {
                u,
                v,
                n,
                reason: "duplicate edge",
            });
        }
        self.adj[u as usize].push(v);
        self.adj[v as usize].push(u);
        self.edges += 1;
        Ok(())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Iterates over undirected edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as u32;
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Relabels vertices: edge `(u, v)` maps to `(p(u), p(v))`.
    pub fn apply_permutation(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.n() {
            return Err(Error::PermutationLength {
                expected: self.n(),
                got: p.len(),
            });
        }
        let mut adj = vec![Vec::new(); self.n()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            let pu = p.apply(u as u32);
            let list = &mut adj[pu as usize];
            list.extend(nbrs.iter().map(|&v| p.apply(v)));
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edges: self.edges,
        })
    }

    /// Attaches the symmetry-breaking gadget at `v`: a pendant path of two
    /// new vertices `v – w1 – w2`. Existing indices are unchanged.
    pub fn attach_gadget(&self, v: usize) -> Result<Graph> {
        self.attach_pendant_path(v, 2)
    }

    /// Attaches a pendant path of `len` new vertices at `v`. Longer paths
    /// serve as distinguishable markers when several vertices must be
    /// pinned at once.
    pub fn attach_pendant_path(&self, v: usize, len: usize) -> Result<Graph> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { v, n: self.n() });
        }
        let mut g = self.clone();
        let mut prev = v as u32;
        for _ in 0..len {
            let w = g.adj.len() as u32;
            g.adj.push(Vec::new());
            g.adj[prev as usize].push(w);
            g.adj[w as usize].push(prev);
            g.edges += 1;
            prev = w;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// BFS distance from `source` to every vertex; `None` for unreachable.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source as u32]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            for &w in &self.adj[u as usize] {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Groups vertices by BFS distance from `source`; unreachable vertices
    /// land in a distinguished final class.
    pub fn vertex_partition(&self, source: usize) -> Result<VertexPartition> {
        if source >= self.n() {
            return Err(Error::VertexOutOfRange {
                v: source,
                n: self.n(),
            });
        }
        let dist = self.bfs_distances(source);
        let max_d = dist.iter().flatten().max().copied().unwrap_or(0) as usize;
        let mut classes = vec![Vec::new(); max_d + 1];
        let mut unreachable = Vec::new();
        for (v, d) in dist.iter().enumerate() {
            match d {
                Some(d) => classes[*d as usize].push(v as u32),
                None => unreachable.push(v as u32),
            }
        }
        Ok(VertexPartition {
            source: source as u32,
            classes,
            unreachable,
        })
    }

    /// Groups undirected edges by the BFS distance of their nearer endpoint
    /// from `source`; edges between unreachable vertices land in a
    /// distinguished final class.
    pub fn edge_partition(&self, source: usize) -> Result<EdgePartition> {
        if source >= self.n() {
            return Err(Error::VertexOutOfRange {
                v: source,
                n: self.n(),
            });
        }
        let dist = self.bfs_distances(source);
        let mut classes: Vec<Vec<(u32, u32)>> = Vec::new();
        let mut unreachable = Vec::new();
        for (u, v) in self.edges() {
            let d = match (dist[u as usize], dist[v as usize]) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (Some(a), None) | (None, Some(a)) => Some(a),
                (None, None) => None,
            };
            match d {
                Some(d) => {
                    let d = d as usize;
                    if classes.len() <= d {
                        classes.resize(d + 1, Vec::new());
                    }
                    classes[d].push((u, v));
                }
                None => unreachable.push((u, v)),
            }
        }
        Ok(EdgePartition {
            source: source as u32,
            classes,
            unreachable,
        })
    }

    /// Tests the strong-regularity conditions: `d`-regular, every adjacent
    /// pair with exactly `lambda` common neighbors, every non-adjacent pair
    /// with exactly `mu`. When a pair class is empty (complete or empty
    /// graphs) the unconstrained parameter is reported as 0.
    pub fn detect_srg(&self) -> Option<SrgParams> {
        let n = self.n();
        if n < 2 {
            return None;
        }
        let d = self.degree(0);
        if (1..n).any(|v| self.degree(v) != d) {
            return None;
        }
        let mut lambda: Option<usize> = None;
        let mut mu: Option<usize> = None;
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                let common = sorted_intersection_len(self.neighbors(u as usize), self.neighbors(v as usize));
                let slot = if self.has_edge(u, v) { &mut lambda } else { &mut mu };
                match slot {
                    Some(x) if *x != common => return None,
                    Some(_) => {}
                    None => *slot = Some(common),
                }
            }
        }
        Some(SrgParams {
            n,
            d,
            lambda: lambda.unwrap_or(0),
            mu: mu.unwrap_or(0),
        })
    }
}

fn sorted_intersection_len(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// A bijection on `0..n`, stored as the image array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n as u32).collect(),
        }
    }

    /// Validates that `map` is a bijection on `0..map.len()`.
    pub fn from_map(map: Vec<u32>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if x as usize >= n {
                return Err(Error::NotAPermutation {
                    value: x,
                    reason: "out of range",
                });
            }
            if seen[x as usize] {
                return Err(Error::NotAPermutation {
                    value: x,
                    reason: "appears twice",
                });
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { map })
    }

    /// A uniformly random permutation (Fisher–Yates).
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut map: Vec<u32> = (0..n as u32).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            map.swap(i, j);
        }
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.map[v as usize]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { map: inv }
    }
}

/// Vertices grouped by BFS distance from a source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub source: u32,
    /// `classes[a]` holds the vertices at distance `a`; class 0 is `{source}`.
    pub classes: Vec<Vec<u32>>,
    /// Vertices with no path to the source.
    pub unreachable: Vec<u32>,
}

/// Undirected edges grouped by the distance of their nearer endpoint from a
/// source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    pub source: u32,
    pub classes: Vec<Vec<(u32, u32)>>,
    /// Edges both of whose endpoints are unreachable from the source.
    pub unreachable: Vec<(u32, u32)>,
}

/// Strong-regularity parameters `(n, d, lambda, mu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    pub lambda: usize,
    pub mu: usize,
}
