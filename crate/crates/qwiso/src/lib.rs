//! Graph isomorphism testing via classically simulated discrete-time coined
//! quantum walks.
//!
//! The walk runs on the directed-edge space of a graph (Grover coin,
//! flip-flop shift) with labeling-invariant phase additions tied to an
//! ordered pair of reference nodes. Recording the reference-node amplitude
//! over the walk for every reference pair gives each graph a family of
//! traces; comparing traces within and across two graphs yields match
//! tables whose totals distinguish non-isomorphic graphs, a
//! permutation-invariant certificate integer for batch prefiltering, and —
//! through gadget pinning — explicit isomorphisms. A classical simulation
//! of the connecting-node measurement scheme models how the same comparison
//! would be read out on quantum hardware.
//!
//! Modules:
//! * [`graph`] — simple graphs, permutations, BFS partitions, strong
//!   regularity detection, pendant-path gadgets.
//! * [`graph6`] / [`edgelist`] — text formats.
//! * [`walk`] — the walk engine, linear-time in the number of edges.
//! * [`gi`] — phase schemes, traces, comparison tables, certificates,
//!   verdicts, and the phase-free baseline.
//! * [`iso`] — isomorphism extraction and verification.
//! * [`qmeasure`] — the measurement comparator and its statistics.
//! * [`families`] — named constructions and seeded random generators.

pub mod edgelist;
pub mod error;
pub mod families;
pub mod gi;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod qmeasure;
pub mod walk;

pub use error::{Error, Result};
pub use gi::{
    amplitude_trace, build_phase_mask, certificate, compare_graphs, compare_traces,
    comparison_table, naive_compare, trace_table, AmplitudeTrace, ComparisonReport, Distinction,
    GiConfig, PhaseScheme, SchemeKind, Steps, TableSummary, TraceTable, Verdict,
};
pub use graph::{EdgePartition, Graph, Permutation, SrgParams, VertexPartition};
pub use graph6::{parse_graph6, write_graph6};
pub use iso::{find_isomorphism, verify_mapping, FinderOutcome, Mapping, MatchRelation};
pub use walk::{CoinSpec, DiEdgeIndex, DiEdgeState, PhaseMask, Walk};

pub use edgelist::parse_edge_list;
