//! Classical simulation of the connecting-node measurement scheme and its
//! sampling-statistics model.
//!
//! Two walks run on two graphs; the node amplitudes being compared are fed
//! into one extra register with symmetric 1/sqrt(2) weights and a pi phase
//! on the second input, so equal amplitudes cancel exactly and the register
//! carries probability mass only when they differ.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::walk::{node_amplitude, DiEdgeIndex, DiEdgeState};

/// Probability mass at the connecting node for the compared pair of node
/// amplitudes: `|amp_a - amp_b|^2 / 2`. Zero exactly when they are equal.
pub fn connecting_probability(
    state_a: &DiEdgeState,
    idx_a: &DiEdgeIndex,
    va: usize,
    state_b: &DiEdgeState,
    idx_b: &DiEdgeIndex,
    vb: usize,
) -> f64 {
    let diff = node_amplitude(state_a, idx_a, va) - node_amplitude(state_b, idx_b, vb);
    diff.norm_sqr() / 2.0
}

/// Two walks joined through a connecting register at the compared vertices.
/// Each walk enters with weight 1/sqrt(2), so the joint walk norm is 1 for
/// unit input states; the register holds the pi-phased combination of the
/// two node amplitudes.
#[derive(Clone, Debug)]
pub struct JointSystem {
    state_a: DiEdgeState,
    state_b: DiEdgeState,
    connector: Complex64,
    pub va: usize,
    pub vb: usize,
}

impl JointSystem {
    pub fn new(
        state_a: &DiEdgeState,
        idx_a: &DiEdgeIndex,
        va: usize,
        state_b: &DiEdgeState,
        idx_b: &DiEdgeIndex,
        vb: usize,
    ) -> Self {
        let w = Complex64::new(1.0 / 2f64.sqrt(), 0.0);
        let scale = |s: &DiEdgeState| {
            DiEdgeState::from_amplitudes(s.amplitudes().iter().map(|a| a * w).collect())
        };
        let connector =
            (node_amplitude(state_a, idx_a, va) - node_amplitude(state_b, idx_b, vb)) * w;
        JointSystem {
            state_a: scale(state_a),
            state_b: scale(state_b),
            connector,
            va,
            vb,
        }
    }

    /// The connecting-register amplitude.
    pub fn connector(&self) -> Complex64 {
        self.connector
    }

    /// Probability of finding the walk at the connecting node.
    pub fn detection_probability(&self) -> f64 {
        self.connector.norm_sqr()
    }

    /// Combined norm of the two weighted walks; 1 for unit inputs.
    pub fn walk_norm(&self) -> f64 {
        (self.state_a.norm().powi(2) + self.state_b.norm().powi(2)).sqrt()
    }
}

/// Exact probability of at least one non-zero measurement in `m` attempts
/// when each attempt succeeds with probability `1/p`: the geometric sum
/// `1 - (1 - 1/p)^m`.
pub fn detection_probability(m: u64, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "inverse probability p must be >= 1, got {p}"
        )));
    }
    Ok(1.0 - (1.0 - 1.0 / p).powf(m as f64))
}

/// The large-`p` approximation `1 - exp(-m/p)` of [`detection_probability`].
pub fn detection_probability_approx(m: u64, p: f64) -> f64 {
    1.0 - (-(m as f64) / p).exp()
}

/// Simulates one Bernoulli trial per entry of `per_step_probabilities` and
/// returns the index of the first success. Deterministic in `seed`.
pub fn sample_until_detection(per_step_probabilities: &[f64], seed: u64) -> Result<Option<usize>> {
    for &p in per_step_probabilities {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ProbabilityRange { value: p });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (i, &p) in per_step_probabilities.iter().enumerate() {
        if rng.random_bool(p) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Smallest number of measurements `m` with `(1 - 1/n^c)^m <= target_error`,
/// i.e. enough attempts that the miss probability drops below the target.
pub fn measurements_for_accuracy(target_error: f64, n: usize, c: f64) -> Result<u64> {
    if !(target_error > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "target error must be positive, got {target_error}"
        )));
    }
    if target_error >= 1.0 {
        return Ok(0);
    }
    if n == 0 {
        return Err(Error::InvalidParameter("graph order must be positive".into()));
    }
    let p = (n as f64).powf(c);
    let miss = 1.0 - 1.0 / p;
    if miss <= 0.0 {
        return Ok(1); // certain detection on the first attempt
    }
    let mut m = (target_error.ln() / miss.ln()).ceil().max(0.0) as u64;
    // ln rounding can land one off in either direction
    while m > 0 && miss.powf((m - 1) as f64) <= target_error {
        m -= 1;
    }
    while miss.powf(m as f64) > target_error {
        m += 1;
    }
    Ok(m)
}

/// The sampling-statistics model: per-measurement success probability
/// `1/p`, concentration exponent `c` (so `p = n^c` when derived from a
/// graph order), and a measurement budget `m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementModel {
    pub p: f64,
    pub c: f64,
    pub m: u64,
}

impl MeasurementModel {
    pub fn new(p: f64, c: f64, m: u64) -> Result<Self> {
        if !(p >= 1.0) {
            return Err(Error::InvalidParameter(format!("p must be >= 1, got {p}")));
        }
        if !(c >= 1.0) {
            return Err(Error::InvalidParameter(format!("c must be >= 1, got {c}")));
        }
        Ok(MeasurementModel { p, c, m })
    }

    /// Model for a graph of order `n` with amplitude concentration `c`.
    pub fn for_order(n: usize, c: f64, m: u64) -> Result<Self> {
        Self::new((n as f64).powf(c), c, m)
    }

    pub fn exact(&self) -> f64 {
        detection_probability(self.m, self.p).expect("p validated at construction")
    }

    pub fn approx(&self) -> f64 {
        detection_probability_approx(self.m, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    fn k2_state(a0: Complex64, a1: Complex64) -> (DiEdgeState, DiEdgeIndex) {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let idx = DiEdgeIndex::new(&k2);
        (DiEdgeState::from_amplitudes(vec![a0, a1]), idx)
    }

    #[test]
    fn equal_amplitudes_cancel_exactly() {
        let r = 1.0 / 2f64.sqrt();
        let (sa, ia) = k2_state(Complex64::new(r, 0.0), Complex64::new(0.0, 0.0));
        let (sb, ib) = k2_state(Complex64::new(r, 0.0), Complex64::new(0.0, 0.0));
        assert_eq!(connecting_probability(&sa, &ia, 0, &sb, &ib, 0), 0.0);
    }

    #[test]
    fn opposite_amplitudes_give_unit_probability() {
        let r = 1.0 / 2f64.sqrt();
        let (sa, ia) = k2_state(Complex64::new(r, 0.0), Complex64::new(0.0, 0.0));
        let (sb, ib) = k2_state(Complex64::new(-r, 0.0), Complex64::new(0.0, 0.0));
        let p = connecting_probability(&sa, &ia, 0, &sb, &ib, 0);
        assert!((p - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_partner_gives_half_norm_squared() {
        let a = Complex64::new(0.3, 0.4);
        let (sa, ia) = k2_state(a, Complex64::new(0.0, 0.0));
        let (sb, ib) = k2_state(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        let p = connecting_probability(&sa, &ia, 0, &sb, &ib, 0);
        assert!((p - a.norm_sqr() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn joint_system_norm_and_register() {
        let g = families::cycle(5);
        let idx = DiEdgeIndex::new(&g);
        let s = DiEdgeState::equal_superposition(&idx).unwrap();
        let joint = JointSystem::new(&s, &idx, 0, &s, &idx, 3);
        assert!((joint.walk_norm() - 1.0).abs() < 1e-12);
        // vertex-transitive graph in the uniform state: same amplitudes
        assert!(joint.detection_probability() < 1e-24);
        assert_eq!(
            joint.detection_probability(),
            connecting_probability(&s, &idx, 0, &s, &idx, 3)
        );
        assert_eq!(joint.connector().norm_sqr(), joint.detection_probability());
    }

    #[test]
    fn detection_probability_examples() {
        assert_eq!(detection_probability(0, 7.5).unwrap(), 0.0);
        assert!((detection_probability(1, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((detection_probability(17, 1.0).unwrap() - 1.0).abs() < 1e-15);

        let exact = detection_probability(100, 100.0).unwrap();
        let approx = detection_probability_approx(100, 100.0);
        assert!((exact - (1.0 - 0.99f64.powi(100))).abs() < 1e-15);
        assert!((approx - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        assert!((exact - approx).abs() < 0.002);

        assert!(detection_probability(5, 0.5).is_err());
    }

    #[test]
    fn detection_probability_monotone_in_m() {
        let mut prev = -1.0;
        for m in 0..200 {
            let p = detection_probability(m, 37.0).unwrap();
            assert!((0.0..=1.0).contains(&p));
            assert!(p >= prev);
            prev = p;
        }
    }

    #[test]
    fn sampling_edge_cases() {
        assert_eq!(sample_until_detection(&[0.0; 50], 1).unwrap(), None);
        assert_eq!(sample_until_detection(&[1.0; 3], 1).unwrap(), Some(0));
        assert_eq!(sample_until_detection(&[], 1).unwrap(), None);
        assert!(matches!(
            sample_until_detection(&[0.5, 1.5], 1),
            Err(Error::ProbabilityRange { .. })
        ));
    }

    #[test]
    fn sampling_matches_geometric_model() {
        let p = 20.0;
        let m = 60;
        let probs = vec![1.0 / p; m as usize];
        let trials = 4000u64;
        let hits = (0..trials)
            .filter(|&t| sample_until_detection(&probs, 1000 + t).unwrap().is_some())
            .count() as f64;
        let expected = detection_probability(m, p).unwrap();
        let sigma = (expected * (1.0 - expected) / trials as f64).sqrt();
        assert!(
            (hits / trials as f64 - expected).abs() <= 3.0 * sigma,
            "empirical {} vs exact {expected}",
            hits / trials as f64
        );
    }

    #[test]
    fn measurements_for_accuracy_examples() {
        assert_eq!(measurements_for_accuracy(1.0, 50, 2.0).unwrap(), 0);
        // n^c = 100, target 1/e: within one of -ln(target) * n^c
        let m = measurements_for_accuracy((-1.0f64).exp(), 100, 1.0).unwrap();
        assert!((m as i64 - 100).abs() <= 1, "m = {m}");
        assert_eq!(measurements_for_accuracy(0.5, 1, 3.0).unwrap(), 1);

        // the bound grows log-linearly in the target error
        let m1 = measurements_for_accuracy(1e-2, 10, 2.0).unwrap();
        let m2 = measurements_for_accuracy(1e-4, 10, 2.0).unwrap();
        assert!((m2 as f64 / m1 as f64 - 2.0).abs() < 0.02);

        // minimality
        let target = 0.37;
        let m = measurements_for_accuracy(target, 7, 1.5).unwrap();
        let miss = 1.0 - 1.0 / 7f64.powf(1.5);
        assert!(miss.powf(m as f64) <= target);
        assert!(m == 0 || miss.powf((m - 1) as f64) > target);
    }

    #[test]
    fn model_validation() {
        assert!(MeasurementModel::new(0.5, 1.0, 10).is_err());
        assert!(MeasurementModel::new(10.0, 0.5, 10).is_err());
        let model = MeasurementModel::for_order(10, 2.0, 50).unwrap();
        assert_eq!(model.p, 100.0);
        assert!((model.exact() - detection_probability(50, 100.0).unwrap()).abs() < 1e-15);
    }
}
