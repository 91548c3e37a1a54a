//! Named graph constructions and seeded random generators used throughout
//! the test suites and the batch harness.

use rand::Rng;

use crate::graph::Graph;

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n as u32).map(|i| (i, (i + 1) % n as u32))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as u32).map(|i| (i - 1, i))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
    Graph::from_edges(n, edges).unwrap()
}

/// The star K1,n: vertex 0 is the center.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves as u32).map(|v| (0, v))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a as u32).flat_map(|u| (0..b as u32).map(move |v| (u, a as u32 + v)));
    Graph::from_edges(a + b, edges).unwrap()
}

/// The line graph: one vertex per edge of `g`, adjacent when the edges share
/// an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(edges.len(), out).unwrap()
}

/// The 4x4 rook's graph, i.e. the line graph of K4,4: one of the two
/// strongly regular graphs with parameters (16, 6, 2, 2).
pub fn rook_4x4() -> Graph {
    line_graph(&complete_bipartite(4, 4))
}

/// The Shrikhande graph: the Cayley graph of Z4 x Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}. The other SRG(16, 6, 2, 2).
pub fn shrikhande() -> Graph {
    let idx = |x: i32, y: i32| (x.rem_euclid(4) * 4 + y.rem_euclid(4)) as u32;
    let mut edges = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            for (dx, dy) in [(1, 0), (0, 1), (1, 1)] {
                edges.push((idx(x, y), idx(x + dx, y + dy)));
            }
        }
    }
    Graph::from_edges(16, edges).unwrap()
}

/// The Petersen graph as the Kneser graph K(5,2).
pub fn petersen() -> Graph {
    let pairs: Vec<(u8, u8)> = (0..5u8)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let disjoint = |p: (u8, u8), q: (u8, u8)| p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1;
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if disjoint(pairs[i], pairs[j]) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(10, edges).unwrap()
}

// --- The generalized quadrangle GQ(3,3) --------------------------------
//
// Points are the 40 projective points of PG(3,3); lines are the 40 totally
// isotropic lines of the symplectic form
//     B(x, y) = x0 y1 - x1 y0 + x2 y3 - x3 y2   (mod 3).
// The point graph (collinearity of points) and the line graph (concurrence
// of lines) are both strongly regular (40, 12, 2, 4) and are not isomorphic
// to each other.

type F3Vec = [u8; 4];

fn symplectic_points() -> Vec<F3Vec> {
    let mut points = Vec::with_capacity(40);
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                for d in 0..3u8 {
                    let v = [a, b, c, d];
                    if v == [0, 0, 0, 0] {
                        continue;
                    }
                    // canonical projective representative: first nonzero = 1
                    if v.iter().find(|&&x| x != 0) == Some(&1) {
                        points.push(v);
                    }
                }
            }
        }
    }
    debug_assert_eq!(points.len(), 40);
    points
}

fn symplectic_form(x: &F3Vec, y: &F3Vec) -> u8 {
    let x = x.map(|v| v as i32);
    let y = y.map(|v| v as i32);
    ((x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]).rem_euclid(3)) as u8
}

/// The collinearity graph of the points of GQ(3,3).
pub fn gq33_point_graph() -> Graph {
    let points = symplectic_points();
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if symplectic_form(&points[i], &points[j]) == 0 {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(40, edges).unwrap()
}

/// The concurrence graph of the lines of GQ(3,3), i.e. the point graph of
/// the dual quadrangle.
pub fn gq33_line_graph() -> Graph {
    let points = symplectic_points();
    let lookup = |v: F3Vec| -> u8 {
        // scale so the first nonzero coordinate is 1, then find the index
        let s = *v.iter().find(|&&x| x != 0).unwrap();
        let inv = if s == 2 { 2 } else { 1 }; // inverses mod 3
        let canon = v.map(|x| (x * inv) % 3);
        points.iter().position(|p| *p == canon).unwrap() as u8
    };

    // Each totally isotropic line is the 4-point span of an orthogonal pair.
    let mut lines: Vec<[u8; 4]> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if symplectic_form(&points[i], &points[j]) != 0 {
                continue;
            }
            let (x, y) = (points[i], points[j]);
            let mut members = vec![lookup(x), lookup(y)];
            for t in 1..3u8 {
                let mut z = [0u8; 4];
                for (c, slot) in z.iter_mut().enumerate() {
                    *slot = (x[c] + t * y[c]) % 3;
                }
                members.push(lookup(z));
            }
            members.sort_unstable();
            let key: [u8; 4] = members.clone().try_into().unwrap();
            if seen.insert(key) {
                lines.push(key);
            }
        }
    }
    debug_assert_eq!(lines.len(), 40);

    let mut edges = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let shared = lines[i].iter().filter(|p| lines[j].contains(p)).count();
            if shared == 1 {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(40, edges).unwrap()
}

// --- Random generators ---------------------------------------------------

/// Erdos–Renyi G(n, p).
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A uniform random graph with exactly `m` edges.
pub fn random_graph_with_edges<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let max = n * (n - 1) / 2;
    assert!(m <= max, "requested {m} edges but K{n} has only {max}");
    let mut chosen = std::collections::HashSet::with_capacity(m);
    while chosen.len() < m {
        let u = rng.random_range(0..n as u32);
        let v = rng.random_range(0..n as u32);
        if u != v {
            chosen.insert((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, chosen).unwrap()
}

/// A random `d`-regular graph via the pairing model with rejection.
pub fn random_regular<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Graph {
    assert!(n * d % 2 == 0, "n*d must be even");
    assert!(d < n);
    'retry: loop {
        let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        // shuffle
        for i in (1..stubs.len()).rev() {
            let j = rng.random_range(0..=i);
            stubs.swap(i, j);
        }
        let mut seen = std::collections::HashSet::new();
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                continue 'retry;
            }
        }
        return Graph::from_edges(n, seen).unwrap();
    }
}

/// A uniform random labeled tree from a random Pruefer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2);
    if n == 2 {
        return Graph::from_edges(2, [(0, 1)]).unwrap();
    }
    let seq: Vec<u32> = (0..n - 2).map(|_| rng.random_range(0..n as u32)).collect();
    let mut degree = vec![1u32; n];
    for &s in &seq {
        degree[s as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n as u32).find(|&v| degree[v as usize] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf as usize] = 0;
        degree[s as usize] -= 1;
    }
    let rest: Vec<u32> = (0..n as u32).filter(|&v| degree[v as usize] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}
