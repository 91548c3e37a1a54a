//! The discrete-time coined quantum walk on the directed-edge space of a
//! graph.
//!
//! Each vertex `v` owns a block of `deg(v)` sub-node slots, one per incident
//! edge; the full state is a complex vector over all `2k` slots. A step is
//! coin, then shift, then phase:
//!
//! * the coin mixes each vertex block independently (Grover by default),
//! * the flip-flop shift swaps the two slots of every edge,
//! * the phase multiplies each slot by a unit-modulus factor.
//!
//! Every operation is linear-time in the number of slots.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Slot layout for a graph's directed-edge space: vertex-major blocks in
/// sorted-neighbor order, plus the reversal involution pairing the two
/// slots of each edge.
#[derive(Clone, Debug)]
pub struct DiEdgeIndex {
    n: usize,
    k: usize,
    block_start: Vec<u32>,
    head: Vec<u32>,
    tail: Vec<u32>,
    rev: Vec<u32>,
}

impl DiEdgeIndex {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let slots = 2 * g.edge_count();
        let mut block_start = Vec::with_capacity(n + 1);
        let mut head = Vec::with_capacity(slots);
        let mut tail = Vec::with_capacity(slots);
        block_start.push(0);
        for v in 0..n {
            for &w in g.neighbors(v) {
                head.push(w);
                tail.push(v as u32);
            }
            block_start.push(head.len() as u32);
        }
        let mut rev = vec![0u32; slots];
        for s in 0..slots {
            let (u, w) = (tail[s], head[s]);
            let pos = g.neighbors(w as usize)
                .binary_search(&u)
                .expect("adjacency is symmetric");
            rev[s] = block_start[w as usize] + pos as u32;
        }
        DiEdgeIndex { n, k: g.edge_count(), block_start, head, tail, rev }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Total number of sub-node slots, `2k`.
    pub fn num_slots(&self) -> usize {
        2 * self.k
    }

    /// The slot range owned by vertex `v`.
    pub fn block(&self, v: usize) -> std::ops::Range<usize> {
        self.block_start[v] as usize..self.block_start[v + 1] as usize
    }

    /// The slot of the directed edge `u -> w`, if the edge exists.
    pub fn slot(&self, u: u32, w: u32) -> Option<usize> {
        let range = self.block(u as usize);
        self.head[range.clone()]
            .binary_search(&w)
            .ok()
            .map(|pos| range.start + pos)
    }

    /// The slot of the reversed directed edge.
    pub fn reversal(&self, slot: usize) -> usize {
        self.rev[slot] as usize
    }

    /// Owning vertex of a slot.
    pub fn tail(&self, slot: usize) -> u32 {
        self.tail[slot]
    }

    /// Target vertex of a slot.
    pub fn head(&self, slot: usize) -> u32 {
        self.head[slot]
    }
}

/// State of the walk: one complex amplitude per directed-edge slot.
#[derive(Clone, Debug, PartialEq)]
pub struct DiEdgeState {
    amp: Vec<Complex64>,
}

impl DiEdgeState {
    /// The equal superposition over all slots, amplitude `1/sqrt(2k)`.
    pub fn equal_superposition(idx: &DiEdgeIndex) -> Result<Self> {
        let slots = idx.num_slots();
        if slots == 0 {
            return Err(Error::Edgeless);
        }
        let a = Complex64::new(1.0 / (slots as f64).sqrt(), 0.0);
        Ok(DiEdgeState { amp: vec![a; slots] })
    }

    pub fn from_amplitudes(amp: Vec<Complex64>) -> Self {
        DiEdgeState { amp }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amp
    }

    pub fn len(&self) -> usize {
        self.amp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amp.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Rescales to unit norm.
    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            for a in &mut self.amp {
                *a /= n;
            }
        }
    }
}

/// The per-block coin. `Grover` uses entries `2/d - delta_ij` for a block of
/// size `d`; `Fixed` uses the given diagonal/off-diagonal entries on every
/// block and must satisfy the unitarity conditions for each block size
/// present in the graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoinSpec {
    Grover,
    Fixed { diag: Complex64, offdiag: Complex64 },
}

impl CoinSpec {
    /// Checks block unitarity against every vertex degree in the index.
    pub fn validate_for(&self, idx: &DiEdgeIndex) -> Result<()> {
        let CoinSpec::Fixed { diag: a, offdiag: b } = *self else {
            return Ok(());
        };
        let mut seen = std::collections::HashSet::new();
        for v in 0..idx.n() {
            let d = idx.block(v).len();
            if d == 0 || !seen.insert(d) {
                continue;
            }
            let df = d as f64;
            let rows = a.norm_sqr() + (df - 1.0) * b.norm_sqr();
            let cross = 2.0 * (a * b.conj()).re + (df - 2.0) * b.norm_sqr();
            if (rows - 1.0).abs() > 1e-9 || cross.abs() > 1e-9 {
                return Err(Error::NonUnitaryCoin { degree: d });
            }
        }
        Ok(())
    }
}

/// Per-vertex and per-slot phase angles, applied multiplicatively as
/// `exp(i * (node_phase[tail(s)] + diedge_phase[s]))`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseMask {
    node_phase: Vec<f64>,
    diedge_phase: Vec<f64>,
}

impl PhaseMask {
    pub fn zero(idx: &DiEdgeIndex) -> Self {
        PhaseMask {
            node_phase: vec![0.0; idx.n()],
            diedge_phase: vec![0.0; idx.num_slots()],
        }
    }

    pub fn add_node_phase(&mut self, v: usize, angle: f64) {
        self.node_phase[v] += angle;
    }

    pub fn add_diedge_phase(&mut self, slot: usize, angle: f64) {
        self.diedge_phase[slot] += angle;
    }

    pub fn node_phase(&self, v: usize) -> f64 {
        self.node_phase[v]
    }

    pub fn diedge_phase(&self, slot: usize) -> f64 {
        self.diedge_phase[slot]
    }

    pub fn is_zero(&self) -> bool {
        self.node_phase.iter().all(|&a| a == 0.0) && self.diedge_phase.iter().all(|&a| a == 0.0)
    }

    fn check_size(&self, idx: &DiEdgeIndex) -> Result<()> {
        if self.node_phase.len() != idx.n() || self.diedge_phase.len() != idx.num_slots() {
            return Err(Error::MaskSize {
                expected_nodes: idx.n(),
                expected_slots: idx.num_slots(),
                got_nodes: self.node_phase.len(),
                got_slots: self.diedge_phase.len(),
            });
        }
        Ok(())
    }

    /// Compiles the mask to per-slot unit-modulus factors.
    pub fn factors(&self, idx: &DiEdgeIndex) -> Result<Vec<Complex64>> {
        self.check_size(idx)?;
        Ok((0..idx.num_slots())
            .map(|s| {
                let angle = self.node_phase[idx.tail(s) as usize] + self.diedge_phase[s];
                Complex64::from_polar(1.0, angle)
            })
            .collect())
    }
}

/// Applies the coin to every vertex block in place.
pub fn apply_coin(state: &mut DiEdgeState, idx: &DiEdgeIndex, coin: &CoinSpec) -> Result<()> {
    coin.validate_for(idx)?;
    match *coin {
        CoinSpec::Grover => {
            for v in 0..idx.n() {
                let block = &mut state.amp[idx.block(v)];
                let d = block.len();
                if d == 0 {
                    continue;
                }
                let scaled = block.iter().sum::<Complex64>() * (2.0 / d as f64);
                for a in block {
                    *a = scaled - *a;
                }
            }
        }
        CoinSpec::Fixed { diag, offdiag } => {
            let keep = diag - offdiag;
            for v in 0..idx.n() {
                let block = &mut state.amp[idx.block(v)];
                if block.is_empty() {
                    continue;
                }
                let scaled = block.iter().sum::<Complex64>() * offdiag;
                for a in block {
                    *a = keep * *a + scaled;
                }
            }
        }
    }
    Ok(())
}

/// The flip-flop shift: exchanges the amplitudes of the two slots of every
/// edge. An involution, so applying it twice is the identity.
pub fn apply_shift(state: &mut DiEdgeState, idx: &DiEdgeIndex) {
    for s in 0..state.amp.len() {
        let r = idx.reversal(s);
        if r > s {
            state.amp.swap(s, r);
        }
    }
}

/// Multiplies each slot by its mask factor. Norm-preserving.
pub fn apply_phase(state: &mut DiEdgeState, idx: &DiEdgeIndex, mask: &PhaseMask) -> Result<()> {
    let factors = mask.factors(idx)?;
    for (a, f) in state.amp.iter_mut().zip(&factors) {
        *a *= f;
    }
    Ok(())
}

/// One full step: coin, shift, then phase.
pub fn step(state: &mut DiEdgeState, idx: &DiEdgeIndex, coin: &CoinSpec, mask: &PhaseMask) -> Result<()> {
    apply_coin(state, idx, coin)?;
    apply_shift(state, idx);
    apply_phase(state, idx, mask)
}

/// The amplitude associated with a node: the coherent sum over the
/// vertex's sub-node block.
pub fn node_amplitude(state: &DiEdgeState, idx: &DiEdgeIndex, v: usize) -> Complex64 {
    state.amp[idx.block(v)].iter().sum()
}

/// A walk with its coin validated and phase factors compiled once, for
/// stepping many times without per-step checks.
pub struct Walk<'a> {
    idx: &'a DiEdgeIndex,
    coin: CoinSpec,
    factors: Option<Vec<Complex64>>,
    state: DiEdgeState,
}

impl<'a> Walk<'a> {
    /// Starts from the equal superposition.
    pub fn new(idx: &'a DiEdgeIndex, coin: CoinSpec, mask: &PhaseMask) -> Result<Self> {
        let state = DiEdgeState::equal_superposition(idx)?;
        Walk::with_state(idx, coin, mask, state)
    }

    pub fn with_state(
        idx: &'a DiEdgeIndex,
        coin: CoinSpec,
        mask: &PhaseMask,
        state: DiEdgeState,
    ) -> Result<Self> {
        coin.validate_for(idx)?;
        let factors = if mask.is_zero() {
            mask.check_size(idx)?;
            None
        } else {
            Some(mask.factors(idx)?)
        };
        Ok(Walk { idx, coin, factors, state })
    }

    pub fn step(&mut self) {
        match self.coin {
            CoinSpec::Grover => {
                for v in 0..self.idx.n() {
                    let block = &mut self.state.amp[self.idx.block(v)];
                    let d = block.len();
                    if d == 0 {
                        continue;
                    }
                    let scaled = block.iter().sum::<Complex64>() * (2.0 / d as f64);
                    for a in block {
                        *a = scaled - *a;
                    }
                }
            }
            coin @ CoinSpec::Fixed { .. } => {
                apply_coin(&mut self.state, self.idx, &coin).expect("validated at construction");
            }
        }
        apply_shift(&mut self.state, self.idx);
        if let Some(factors) = &self.factors {
            for (a, f) in self.state.amp.iter_mut().zip(factors) {
                *a *= f;
            }
        }
    }

    pub fn node_amplitude(&self, v: usize) -> Complex64 {
        node_amplitude(&self.state, self.idx, v)
    }

    pub fn state(&self) -> &DiEdgeState {
        &self.state
    }

    pub fn index(&self) -> &DiEdgeIndex {
        self.idx
    }
}
