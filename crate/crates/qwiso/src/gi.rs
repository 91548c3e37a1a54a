//! The isomorphism-testing procedure built on phased walks.
//!
//! For an ordered reference pair `(v1, v2)` the graph splits, per reference
//! node, into the node itself (`G0`), its neighbors (`G1`), and everything
//! else (`G2`). A phase scheme adds fixed angles to the reference blocks and
//! to the directed edges crossing from `G1` into `G0` and from `G1` into
//! `G2`. The walk is evolved from the equal superposition with the phases
//! applied every step, recording the amplitude at `v1` after each step.
//! Doing this for all ordered reference pairs yields one trace per pair;
//! pairwise trace comparison within and across graphs produces the match
//! tables, the certificate integer, and the verdict.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::walk::{CoinSpec, DiEdgeIndex, PhaseMask, Walk};

/// Which phase additions a scheme makes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeKind {
    /// Node phase on the reference blocks plus directed-edge phases on the
    /// `G1 -> G0` and `G1 -> G2` cuts.
    Full,
    /// A pi phase on the reference blocks only.
    SimplePi,
}

/// A labeling-invariant phase-addition rule parameterized by three angles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseScheme {
    pub kind: SchemeKind,
    pub phi_node: f64,
    pub phi_cut10: f64,
    pub phi_cut12: f64,
    /// Phase the reversed cut slots as well (`G0 -> G1`, `G2 -> G1`).
    pub both_orientations: bool,
}

impl PhaseScheme {
    /// The full scheme with the default angles pi/2, pi/4, pi/8.
    pub fn full() -> Self {
        PhaseScheme {
            kind: SchemeKind::Full,
            phi_node: std::f64::consts::FRAC_PI_2,
            phi_cut10: std::f64::consts::FRAC_PI_4,
            phi_cut12: std::f64::consts::FRAC_PI_8,
            both_orientations: false,
        }
    }

    pub fn full_with(phi_node: f64, phi_cut10: f64, phi_cut12: f64) -> Self {
        PhaseScheme {
            kind: SchemeKind::Full,
            phi_node,
            phi_cut10,
            phi_cut12,
            both_orientations: false,
        }
    }

    /// The simplified scheme: pi on the two reference blocks, no edge phases.
    pub fn simple_pi() -> Self {
        PhaseScheme {
            kind: SchemeKind::SimplePi,
            phi_node: std::f64::consts::PI,
            phi_cut10: 0.0,
            phi_cut12: 0.0,
            both_orientations: false,
        }
    }
}

/// Number of walk steps per trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Steps {
    /// Twice the graph order, the default.
    TwoN,
    Fixed(usize),
}

impl Steps {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            Steps::TwoN => 2 * n,
            Steps::Fixed(t) => t,
        }
    }
}

/// Configuration shared by the trace/table/verdict pipeline.
#[derive(Clone, Debug)]
pub struct GiConfig {
    pub scheme: PhaseScheme,
    pub steps: Steps,
    /// Absolute tolerance on the complex modulus of per-step differences.
    pub tol: f64,
    /// Also require equal sorted per-row match-count multisets.
    pub strict: bool,
    /// Include the diagonal pairs `v1 = v2` among the reference pairs.
    pub include_diagonal: bool,
}

impl Default for GiConfig {
    fn default() -> Self {
        GiConfig {
            scheme: PhaseScheme::full(),
            steps: Steps::TwoN,
            tol: 1e-8,
            strict: false,
            include_diagonal: true,
        }
    }
}

impl GiConfig {
    pub fn with_scheme(scheme: PhaseScheme) -> Self {
        GiConfig {
            scheme,
            ..GiConfig::default()
        }
    }
}

/// Builds the phase mask for the ordered reference pair `(v1, v2)`.
/// Contributions from the two reference nodes are summed where they overlap
/// (including `v1 = v2`, which doubles every angle).
pub fn build_phase_mask(idx: &DiEdgeIndex, v1: u32, v2: u32, scheme: &PhaseScheme) -> PhaseMask {
    let mut mask = PhaseMask::zero(idx);
    for r in [v1, v2] {
        let node_angle = match scheme.kind {
            SchemeKind::Full => scheme.phi_node,
            SchemeKind::SimplePi => std::f64::consts::PI,
        };
        mask.add_node_phase(r as usize, node_angle);
        if scheme.kind != SchemeKind::Full {
            continue;
        }
        // class of x relative to r: 0 = the node, 1 = adjacent, 2 = the rest
        let class = |x: u32| -> u8 {
            if x == r {
                0
            } else if idx.slot(x, r).is_some() {
                1
            } else {
                2
            }
        };
        for s in 0..idx.num_slots() {
            let (tc, hc) = (class(idx.tail(s)), class(idx.head(s)));
            match (tc, hc) {
                (1, 0) => mask.add_diedge_phase(s, scheme.phi_cut10),
                (1, 2) => mask.add_diedge_phase(s, scheme.phi_cut12),
                (0, 1) if scheme.both_orientations => mask.add_diedge_phase(s, scheme.phi_cut10),
                (2, 1) if scheme.both_orientations => mask.add_diedge_phase(s, scheme.phi_cut12),
                _ => {}
            }
        }
    }
    mask
}

/// The amplitude recorded at `v1` after each step of a phased walk.
#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeTrace {
    pub origin: (u32, u32),
    pub values: Vec<Complex64>,
}

/// Runs one phased walk and records the trace for `(v1, v2)`.
pub fn amplitude_trace(
    g: &Graph,
    v1: u32,
    v2: u32,
    scheme: &PhaseScheme,
    steps: usize,
) -> Result<AmplitudeTrace> {
    if v1 as usize >= g.n() || v2 as usize >= g.n() {
        return Err(Error::VertexOutOfRange {
            v: v1.max(v2) as usize,
            n: g.n(),
        });
    }
    let idx = DiEdgeIndex::new(g);
    trace_with_index(&idx, v1, v2, scheme, steps)
}

fn trace_with_index(
    idx: &DiEdgeIndex,
    v1: u32,
    v2: u32,
    scheme: &PhaseScheme,
    steps: usize,
) -> Result<AmplitudeTrace> {
    let mask = build_phase_mask(idx, v1, v2, scheme);
    let mut walk = Walk::new(idx, CoinSpec::Grover, &mask)?;
    let mut values = Vec::with_capacity(steps);
    for _ in 0..steps {
        walk.step();
        values.push(walk.node_amplitude(v1 as usize));
    }
    Ok(AmplitudeTrace {
        origin: (v1, v2),
        values,
    })
}

/// All reference-pair traces of one graph, in row-major `(v1, v2)` order.
#[derive(Clone, Debug)]
pub struct TraceTable {
    pub n: usize,
    pub steps: usize,
    pairs: Vec<(u32, u32)>,
    traces: Vec<AmplitudeTrace>,
}

impl TraceTable {
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn traces(&self) -> &[AmplitudeTrace] {
        &self.traces
    }

    pub fn trace_for(&self, v1: u32, v2: u32) -> Option<&AmplitudeTrace> {
        self.pairs
            .iter()
            .position(|&p| p == (v1, v2))
            .map(|i| &self.traces[i])
    }
}

/// Computes the trace for every ordered reference pair, in parallel.
///
/// An edgeless graph has no walk state space; its traces are all-zero,
/// which keeps the downstream tables and certificates well defined.
pub fn trace_table(g: &Graph, cfg: &GiConfig) -> Result<TraceTable> {
    let n = g.n();
    let steps = cfg.steps.resolve(n);
    let mut pairs = Vec::with_capacity(n * n);
    for v1 in 0..n as u32 {
        for v2 in 0..n as u32 {
            if cfg.include_diagonal || v1 != v2 {
                pairs.push((v1, v2));
            }
        }
    }

    if g.edge_count() == 0 {
        let traces = pairs
            .iter()
            .map(|&origin| AmplitudeTrace {
                origin,
                values: vec![Complex64::new(0.0, 0.0); steps],
            })
            .collect();
        return Ok(TraceTable { n, steps, pairs, traces });
    }

    let idx = DiEdgeIndex::new(g);
    let traces = pairs
        .par_iter()
        .map(|&(v1, v2)| trace_with_index(&idx, v1, v2, &cfg.scheme, steps))
        .collect::<Result<Vec<_>>>()?;
    Ok(TraceTable { n, steps, pairs, traces })
}

/// Element-wise comparison of two traces: a match iff every step differs by
/// at most `tol` in complex modulus.
pub fn compare_traces(a: &AmplitudeTrace, b: &AmplitudeTrace, tol: f64) -> Result<bool> {
    if a.values.len() != b.values.len() {
        return Err(Error::TraceLength {
            a: a.values.len(),
            b: b.values.len(),
        });
    }
    Ok(values_match(&a.values, &b.values, tol))
}

fn values_match(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
}

/// Match counts of one comparison table: the grand total plus the per-row
/// totals (rows indexed like the left table's reference pairs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSummary {
    pub total: u64,
    pub rows: Vec<u64>,
}

impl TableSummary {
    /// The sorted per-row match-count multiset, used in strict mode.
    pub fn sorted_rows(&self) -> Vec<u64> {
        let mut rows = self.rows.clone();
        rows.sort_unstable();
        rows
    }
}

fn quantized_key(values: &[Complex64], tol: f64) -> Vec<i64> {
    values
        .iter()
        .flat_map(|c| [(c.re / tol).floor() as i64, (c.im / tol).floor() as i64])
        .collect()
}

fn keys_adjacent(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1)
}

/// Counts matching ordered trace pairs between two tables.
///
/// Traces are grouped by a tolerance-quantized signature; only pairs from
/// cells adjacent in every coordinate are verified with the exact
/// element-wise comparison. Since two traces within `tol` can differ by at
/// most one quantization cell per coordinate, the result equals the direct
/// all-pairs comparison.
pub fn comparison_table(a: &TraceTable, b: &TraceTable, tol: f64) -> TableSummary {
    assert_eq!(a.steps, b.steps, "tables must have equal trace lengths");
    let buckets_a = bucketize(a, tol);
    let buckets_b = bucketize(b, tol);

    let rows_and_total = buckets_a
        .par_iter()
        .map(|(key_a, idxs_a)| {
            let mut rows: Vec<(usize, u64)> = Vec::new();
            let mut total = 0u64;
            // candidate buckets: first coordinate within one cell
            let lo = buckets_b.partition_point(|(k, _)| k[0] < key_a[0] - 1);
            for (key_b, idxs_b) in &buckets_b[lo..] {
                if key_b[0] > key_a[0] + 1 {
                    break;
                }
                if !keys_adjacent(key_a, key_b) {
                    continue;
                }
                for &p in idxs_a {
                    let mut count = 0u64;
                    for &q in idxs_b {
                        if values_match(&a.traces[p].values, &b.traces[q].values, tol) {
                            count += 1;
                        }
                    }
                    if count > 0 {
                        rows.push((p, count));
                        total += count;
                    }
                }
            }
            (rows, total)
        })
        .collect::<Vec<_>>();

    let mut rows = vec![0u64; a.traces.len()];
    let mut total = 0u64;
    for (partial, t) in rows_and_total {
        for (p, count) in partial {
            rows[p] += count;
        }
        total += t;
    }
    TableSummary { total, rows }
}

fn bucketize(t: &TraceTable, tol: f64) -> Vec<(Vec<i64>, Vec<usize>)> {
    let mut map: std::collections::HashMap<Vec<i64>, Vec<usize>> = std::collections::HashMap::new();
    for (i, trace) in t.traces.iter().enumerate() {
        map.entry(quantized_key(&trace.values, tol)).or_default().push(i);
    }
    let mut buckets: Vec<(Vec<i64>, Vec<usize>)> = map.into_iter().collect();
    buckets.sort_unstable();
    buckets
}

/// The plain all-pairs comparison. Quadratic in the number of traces; kept
/// as the reference the bucketed path is checked against.
pub fn comparison_table_direct(a: &TraceTable, b: &TraceTable, tol: f64) -> TableSummary {
    assert_eq!(a.steps, b.steps, "tables must have equal trace lengths");
    let rows: Vec<u64> = a
        .traces
        .par_iter()
        .map(|ta| {
            b.traces
                .iter()
                .filter(|tb| values_match(&ta.values, &tb.values, tol))
                .count() as u64
        })
        .collect();
    TableSummary {
        total: rows.iter().sum(),
        rows,
    }
}

/// The self-comparison match total: a permutation-invariant integer.
pub fn certificate(g: &Graph, cfg: &GiConfig) -> Result<u64> {
    let t = trace_table(g, cfg)?;
    Ok(comparison_table(&t, &t, cfg.tol).total)
}

/// What a comparison concluded, and on which statistic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distinction {
    /// Vertex or edge counts differ.
    OrderOrSize,
    /// Self-comparison totals (the certificates) differ.
    Certificate,
    /// Cross-table total differs from the self totals.
    CrossTotal,
    /// Strict mode: sorted per-row match multisets differ.
    RowMultiset,
    /// Baseline walk: per-node amplitude multisets differ at this step.
    StepMultiset(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    NonIsomorphic(Distinction),
    /// The statistics agree; the graphs may be isomorphic.
    NotDistinguished,
}

impl Verdict {
    pub fn is_non_isomorphic(&self) -> bool {
        matches!(self, Verdict::NonIsomorphic(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::NonIsomorphic(_) => "non-isomorphic",
            Verdict::NotDistinguished => "not-distinguished",
        }
    }
}

/// Full outcome of comparing two graphs. Tables that a short-circuit made
/// unnecessary are `None`.
#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub n_a: usize,
    pub k_a: usize,
    pub n_b: usize,
    pub k_b: usize,
    pub steps: usize,
    pub certificate_a: Option<u64>,
    pub certificate_b: Option<u64>,
    pub table_aa: Option<TableSummary>,
    pub table_bb: Option<TableSummary>,
    pub table_ab: Option<TableSummary>,
    pub verdict: Verdict,
}

/// Runs the whole pipeline on a pair of graphs.
///
/// The checks short-circuit in order: order/size, certificates, cross-table
/// total, then (strict mode) row multisets. The cross table is only
/// computed when the certificates agree. `Isomorphic` is never returned
/// here; extracting an explicit mapping is the finder's job.
pub fn compare_graphs(a: &Graph, b: &Graph, cfg: &GiConfig) -> Result<ComparisonReport> {
    let mut report = ComparisonReport {
        n_a: a.n(),
        k_a: a.edge_count(),
        n_b: b.n(),
        k_b: b.edge_count(),
        steps: cfg.steps.resolve(a.n().max(b.n())),
        certificate_a: None,
        certificate_b: None,
        table_aa: None,
        table_bb: None,
        table_ab: None,
        verdict: Verdict::NotDistinguished,
    };

    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        report.verdict = Verdict::NonIsomorphic(Distinction::OrderOrSize);
        return Ok(report);
    }

    let ta = trace_table(a, cfg)?;
    let tb = trace_table(b, cfg)?;
    let aa = comparison_table(&ta, &ta, cfg.tol);
    let bb = comparison_table(&tb, &tb, cfg.tol);
    report.certificate_a = Some(aa.total);
    report.certificate_b = Some(bb.total);

    if aa.total != bb.total {
        report.table_aa = Some(aa);
        report.table_bb = Some(bb);
        report.verdict = Verdict::NonIsomorphic(Distinction::Certificate);
        return Ok(report);
    }

    let ab = comparison_table(&ta, &tb, cfg.tol);
    let cross_differs = ab.total != aa.total;
    let rows_differ = cfg.strict
        && (aa.sorted_rows() != bb.sorted_rows() || aa.sorted_rows() != ab.sorted_rows());
    report.table_aa = Some(aa);
    report.table_bb = Some(bb);
    report.table_ab = Some(ab);
    report.verdict = if cross_differs {
        Verdict::NonIsomorphic(Distinction::CrossTotal)
    } else if rows_differ {
        Verdict::NonIsomorphic(Distinction::RowMultiset)
    } else {
        Verdict::NotDistinguished
    };
    Ok(report)
}

/// The baseline comparison: phase-free walks on both graphs, comparing the
/// sorted multisets of per-node amplitudes after each step.
pub fn naive_compare(a: &Graph, b: &Graph, steps: Steps, tol: f64) -> Result<Verdict> {
    if a.n() != b.n() {
        return Ok(Verdict::NonIsomorphic(Distinction::OrderOrSize));
    }
    let n = a.n();
    let t = steps.resolve(n);

    let mut walk_a = NaiveWalk::new(a)?;
    let mut walk_b = NaiveWalk::new(b)?;
    for s in 1..=t {
        let amps_a = walk_a.step_amplitudes(n);
        let amps_b = walk_b.step_amplitudes(n);
        let matched = amps_a
            .iter()
            .zip(&amps_b)
            .all(|(x, y)| (x - y).norm() <= tol);
        if !matched {
            return Ok(Verdict::NonIsomorphic(Distinction::StepMultiset(s)));
        }
    }
    Ok(Verdict::NotDistinguished)
}

/// Phase-free walk wrapper that treats an edgeless graph as the all-zero
/// amplitude distribution.
struct NaiveWalk {
    idx: Option<DiEdgeIndex>,
    walk_state: Option<crate::walk::DiEdgeState>,
}

impl NaiveWalk {
    fn new(g: &Graph) -> Result<Self> {
        if g.edge_count() == 0 {
            return Ok(NaiveWalk { idx: None, walk_state: None });
        }
        let idx = DiEdgeIndex::new(g);
        let state = crate::walk::DiEdgeState::equal_superposition(&idx)?;
        Ok(NaiveWalk {
            idx: Some(idx),
            walk_state: Some(state),
        })
    }

    /// Advances one step and returns the sorted per-node amplitudes.
    fn step_amplitudes(&mut self, n: usize) -> Vec<Complex64> {
        let (Some(idx), Some(state)) = (&self.idx, &mut self.walk_state) else {
            return vec![Complex64::new(0.0, 0.0); n];
        };
        crate::walk::apply_coin(state, idx, &CoinSpec::Grover).expect("grover always valid");
        crate::walk::apply_shift(state, idx);
        let mut amps: Vec<Complex64> = (0..n)
            .map(|v| crate::walk::node_amplitude(state, idx, v))
            .collect();
        amps.sort_unstable_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
        amps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Permutation;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn simple_pi_mask_on_k2() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let idx = DiEdgeIndex::new(&k2);
        let mask = build_phase_mask(&idx, 0, 1, &PhaseScheme::simple_pi());
        assert!((mask.node_phase(0) - PI).abs() < 1e-15);
        assert!((mask.node_phase(1) - PI).abs() < 1e-15);
        for s in 0..idx.num_slots() {
            assert_eq!(mask.diedge_phase(s), 0.0);
        }
    }

    #[test]
    fn full_mask_on_c4_with_coincident_references() {
        let c4 = families::cycle(4);
        let idx = DiEdgeIndex::new(&c4);
        let scheme = PhaseScheme::full();
        let mask = build_phase_mask(&idx, 0, 0, &scheme);

        assert!((mask.node_phase(0) - 2.0 * scheme.phi_node).abs() < 1e-15);
        for v in 1..4 {
            assert_eq!(mask.node_phase(v), 0.0);
        }
        let expect = |t: u32, h: u32, angle: f64| {
            let s = idx.slot(t, h).unwrap();
            assert!(
                (mask.diedge_phase(s) - angle).abs() < 1e-15,
                "slot {t}->{h} expected {angle}, got {}",
                mask.diedge_phase(s)
            );
        };
        expect(1, 0, 2.0 * scheme.phi_cut10);
        expect(3, 0, 2.0 * scheme.phi_cut10);
        expect(1, 2, 2.0 * scheme.phi_cut12);
        expect(3, 2, 2.0 * scheme.phi_cut12);
        expect(0, 1, 0.0);
        expect(0, 3, 0.0);
        expect(2, 1, 0.0);
        expect(2, 3, 0.0);
    }

    #[test]
    fn mask_is_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = families::random_graph(8, 0.5, &mut rng);
        let p = Permutation::random(8, &mut rng);
        let h = g.apply_permutation(&p).unwrap();
        let idx_g = DiEdgeIndex::new(&g);
        let idx_h = DiEdgeIndex::new(&h);
        let scheme = PhaseScheme::full();
        let (v1, v2) = (2, 5);
        let mask_g = build_phase_mask(&idx_g, v1, v2, &scheme);
        let mask_h = build_phase_mask(&idx_h, p.apply(v1), p.apply(v2), &scheme);
        for v in 0..8u32 {
            assert!(
                (mask_g.node_phase(v as usize) - mask_h.node_phase(p.apply(v) as usize)).abs()
                    < 1e-15
            );
        }
        for s in 0..idx_g.num_slots() {
            let (t, hd) = (idx_g.tail(s), idx_g.head(s));
            let s_p = idx_h.slot(p.apply(t), p.apply(hd)).unwrap();
            assert!((mask_g.diedge_phase(s) - mask_h.diedge_phase(s_p)).abs() < 1e-15);
        }
    }

    #[test]
    fn k2_simple_pi_trace_alternates() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let trace = amplitude_trace(&k2, 0, 1, &PhaseScheme::simple_pi(), 4).unwrap();
        let r = 1.0 / 2f64.sqrt();
        let expected = [-r, r, -r, r];
        for (v, e) in trace.values.iter().zip(expected) {
            assert!((v - Complex64::new(e, 0.0)).norm() < 1e-14, "{v} vs {e}");
        }
    }

    #[test]
    fn zero_phase_traces_identical_on_vertex_transitive_graph() {
        let c5 = families::cycle(5);
        let cfg = GiConfig {
            scheme: PhaseScheme::full_with(0.0, 0.0, 0.0),
            ..GiConfig::default()
        };
        let table = trace_table(&c5, &cfg).unwrap();
        let first = &table.traces()[0];
        for t in table.traces() {
            assert!(values_match(&t.values, &first.values, 1e-12));
        }
    }

    #[test]
    fn traces_are_equivariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let g = families::random_graph(9, 0.45, &mut rng);
        let p = Permutation::random(9, &mut rng);
        let h = g.apply_permutation(&p).unwrap();
        let scheme = PhaseScheme::full();
        for (v1, v2) in [(0u32, 3u32), (4, 4), (7, 1)] {
            let t_g = amplitude_trace(&g, v1, v2, &scheme, 18).unwrap();
            let t_h = amplitude_trace(&h, p.apply(v1), p.apply(v2), &scheme, 18).unwrap();
            for (x, y) in t_g.values.iter().zip(&t_h.values) {
                assert!((x - y).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn compare_traces_tolerance_and_length() {
        let t1 = AmplitudeTrace {
            origin: (0, 0),
            values: vec![Complex64::new(0.5, 0.1); 4],
        };
        assert!(compare_traces(&t1, &t1, 1e-8).unwrap());

        let mut t2 = t1.clone();
        t2.values[2] += Complex64::new(1e-7, 0.0);
        assert!(!compare_traces(&t1, &t2, 1e-8).unwrap());
        assert!(compare_traces(&t1, &t2, 1e-6).unwrap());

        let short = AmplitudeTrace {
            origin: (0, 0),
            values: vec![Complex64::new(0.5, 0.1); 3],
        };
        assert!(matches!(
            compare_traces(&t1, &short, 1e-8),
            Err(Error::TraceLength { a: 4, b: 3 })
        ));
    }

    #[test]
    fn conjugate_trace_differs_on_c5() {
        let c5 = families::cycle(5);
        let t = amplitude_trace(&c5, 0, 1, &PhaseScheme::full(), 10).unwrap();
        let conj = AmplitudeTrace {
            origin: t.origin,
            values: t.values.iter().map(|c| c.conj()).collect(),
        };
        assert!(!compare_traces(&t, &conj, 1e-8).unwrap());
    }

    #[test]
    fn self_table_total_at_least_n_squared() {
        let g = families::petersen();
        let cfg = GiConfig::default();
        let t = trace_table(&g, &cfg).unwrap();
        let summary = comparison_table(&t, &t, cfg.tol);
        assert!(summary.total >= (g.n() * g.n()) as u64);
        for (i, &row) in summary.rows.iter().enumerate() {
            assert!(row >= 1, "trace {i} must match itself");
        }
    }

    #[test]
    fn bucketed_equals_direct_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..10 {
            let n = rng.random_range(4..=9);
            let g = families::random_graph(n, 0.5, &mut rng);
            let cfg = GiConfig::default();
            let t = trace_table(&g, &cfg).unwrap();
            let fast = comparison_table(&t, &t, cfg.tol);
            let slow = comparison_table_direct(&t, &t, cfg.tol);
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn k4_certificate_is_160() {
        let k4 = families::complete(4);
        let cfg = GiConfig::default();

        // premise: the diagonal and off-diagonal orbits have distinct traces
        let table = trace_table(&k4, &cfg).unwrap();
        let diag = table.trace_for(0, 0).unwrap();
        let off = table.trace_for(0, 1).unwrap();
        assert!(!compare_traces(diag, off, cfg.tol).unwrap());

        assert_eq!(certificate(&k4, &cfg).unwrap(), 160);
    }

    #[test]
    fn compare_permuted_copy_not_distinguished() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let g = families::random_graph(10, 0.5, &mut rng);
        let p = Permutation::random(10, &mut rng);
        let h = g.apply_permutation(&p).unwrap();
        let cfg = GiConfig { strict: true, ..GiConfig::default() };
        let report = compare_graphs(&g, &h, &cfg).unwrap();
        assert_eq!(report.verdict, Verdict::NotDistinguished);
        assert_eq!(report.certificate_a, report.certificate_b);
        let ab = report.table_ab.unwrap();
        assert_eq!(ab.total, report.certificate_a.unwrap());
    }

    #[test]
    fn compare_short_circuits_on_size() {
        let c4 = families::cycle(4);
        let k4 = families::complete(4);
        let report = compare_graphs(&c4, &k4, &GiConfig::default()).unwrap();
        assert_eq!(report.verdict, Verdict::NonIsomorphic(Distinction::OrderOrSize));
        assert!(report.certificate_a.is_none());
    }

    #[test]
    fn compare_empty_graphs() {
        let a = Graph::empty(3);
        let b = Graph::empty(3);
        let report = compare_graphs(&a, &b, &GiConfig::default()).unwrap();
        assert_eq!(report.verdict, Verdict::NotDistinguished);
        assert_eq!(report.certificate_a, Some(81)); // 9 zero traces, all pairs match
    }

    #[test]
    fn naive_compare_examples() {
        let c4 = families::cycle(4);
        let s3 = families::star(3);
        let v = naive_compare(&c4, &s3, Steps::TwoN, 1e-8).unwrap();
        assert!(v.is_non_isomorphic());

        let mut rng = ChaCha8Rng::seed_from_u64(55);
        let g = families::random_graph(9, 0.4, &mut rng);
        let p = Permutation::random(9, &mut rng);
        let h = g.apply_permutation(&p).unwrap();
        assert_eq!(
            naive_compare(&g, &h, Steps::TwoN, 1e-8).unwrap(),
            Verdict::NotDistinguished
        );
    }

    #[test]
    fn diagonal_exclusion_flag() {
        let c4 = families::cycle(4);
        let cfg = GiConfig { include_diagonal: false, ..GiConfig::default() };
        let t = trace_table(&c4, &cfg).unwrap();
        assert_eq!(t.pairs().len(), 12);
        assert!(t.trace_for(2, 2).is_none());
    }
}
