//! Truncated photon-number distributions and the order/distance
//! structure built on them: geometric thermal laws, l1 distance with a
//! truncation bound, CDFs, and stochastic dominance.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::math::powi;

/// Slack allowed on normalization checks.
const NORM_SLACK: f64 = 1e-12;

/// Thermal occupation parameter `s` in `[0, 1)`.
///
/// `s = 0` is the vacuum, `s -> 1` the high-temperature limit. The
/// photon-number law of the thermal state is geometric with ratio `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalParams {
    s: f64,
}

impl ThermalParams {
    /// Validates `0 <= s < 1`.
    pub fn new(s: f64) -> Result<Self, Error> {
        if !s.is_finite() || !(0.0..1.0).contains(&s) {
            return Err(Error::InvalidParameter { name: "s", value: s });
        }
        Ok(Self { s })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// Inverse temperature `beta = -ln s`; `+inf` at `s = 0`.
    pub fn beta(&self) -> f64 {
        if self.s == 0.0 {
            f64::INFINITY
        } else {
            -libm::log(self.s)
        }
    }
}

/// A truncated probability vector over photon number.
///
/// `probs[l]` is the weight of `l` photons for `l <= cutoff`;
/// `tail_mass` is the mass beyond the cutoff, so truncation error is a
/// reported bound rather than a silent loss.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalState {
    probs: Vec<f64>,
    tail_mass: f64,
}

impl DiagonalState {
    /// Builds a state from truncated weights; the tail mass is `1 - sum`.
    pub fn from_probs(probs: Vec<f64>) -> Result<Self, Error> {
        let sum = validate_probs(&probs)?;
        Self::build(probs, 1.0 - sum)
    }

    /// Builds a state with an externally known (e.g. closed-form) tail.
    pub fn with_tail_mass(probs: Vec<f64>, tail_mass: f64) -> Result<Self, Error> {
        let sum = validate_probs(&probs)?;
        if (1.0 - sum - tail_mass).abs() > 1e-9 {
            return Err(Error::InvalidParameter {
                name: "tail_mass",
                value: tail_mass,
            });
        }
        Self::build(probs, tail_mass)
    }

    fn build(probs: Vec<f64>, tail_mass: f64) -> Result<Self, Error> {
        if tail_mass < -NORM_SLACK {
            return Err(Error::InvalidParameter {
                name: "tail_mass",
                value: tail_mass,
            });
        }
        Ok(Self { probs, tail_mass })
    }

    /// The vacuum `|0><0|` truncated at `cutoff`.
    pub fn vacuum(cutoff: usize) -> Self {
        let mut probs = vec![0.0; cutoff + 1];
        probs[0] = 1.0;
        Self { probs, tail_mass: 0.0 }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Weight at photon number `l`, zero beyond the cutoff.
    pub fn prob(&self, l: usize) -> f64 {
        self.probs.get(l).copied().unwrap_or(0.0)
    }

    /// Largest represented photon number.
    pub fn cutoff(&self) -> usize {
        self.probs.len() - 1
    }

    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }

    /// Total represented mass `sum(probs)`.
    pub fn mass(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn is_vacuum(&self) -> bool {
        self.probs[0] == 1.0 && self.probs[1..].iter().all(|&p| p == 0.0)
    }
}

fn validate_probs(probs: &[f64]) -> Result<f64, Error> {
    if probs.is_empty() {
        return Err(Error::InvalidParameter { name: "probs", value: 0.0 });
    }
    let mut sum = 0.0;
    for &p in probs {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::InvalidParameter { name: "prob", value: p });
        }
        sum += p;
    }
    if sum > 1.0 + NORM_SLACK {
        return Err(Error::InvalidParameter { name: "prob sum", value: sum });
    }
    Ok(sum)
}

/// Geometric thermal law `(1-s) s^l` truncated at `cutoff`, with the
/// closed-form tail `s^(cutoff+1)`.
pub fn thermal_distribution(params: ThermalParams, cutoff: usize) -> DiagonalState {
    let s = params.s();
    let probs: Vec<f64> = (0..=cutoff).map(|l| (1.0 - s) * powi(s, l as u32)).collect();
    let tail = powi(s, cutoff as u32 + 1);
    DiagonalState::with_tail_mass(probs, tail).expect("geometric law is normalized")
}

/// The number state `|k><k|` truncated at `cutoff`.
pub fn number_state(k: usize, cutoff: usize) -> Result<DiagonalState, Error> {
    if k > cutoff {
        return Err(Error::IndexOutOfRange { index: k, cutoff });
    }
    let mut probs = vec![0.0; cutoff + 1];
    probs[k] = 1.0;
    Ok(DiagonalState { probs, tail_mass: 0.0 })
}

/// An l1 distance on truncated vectors together with its truncation
/// bound: the exact distance of the untruncated laws lies within
/// `value ± uncertainty`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct L1Distance {
    pub value: f64,
    pub uncertainty: f64,
}

/// `sum_l |p_l - q_l|` over the common zero-padded support.
///
/// The uncertainty is `p.tail_mass + q.tail_mass`.
pub fn l1_distance(p: &DiagonalState, q: &DiagonalState) -> L1Distance {
    let top = p.cutoff().max(q.cutoff());
    let mut value = 0.0;
    for l in 0..=top {
        value += (p.prob(l) - q.prob(l)).abs();
    }
    L1Distance {
        value,
        uncertainty: p.tail_mass() + q.tail_mass(),
    }
}

/// Partial sum of `p` through photon number `m`.
pub fn cdf(p: &DiagonalState, m: usize) -> Result<f64, Error> {
    if m > p.cutoff() {
        return Err(Error::IndexOutOfRange { index: m, cutoff: p.cutoff() });
    }
    Ok(p.probs[..=m].iter().sum())
}

/// Whether `p` is stochastically smaller than `q`: every partial sum of
/// `p` dominates the corresponding one of `q`, within `tol`.
///
/// The shorter vector is zero-padded to the common cutoff.
pub fn stochastically_dominated(p: &DiagonalState, q: &DiagonalState, tol: f64) -> bool {
    let top = p.cutoff().max(q.cutoff());
    let mut cp = 0.0;
    let mut cq = 0.0;
    for l in 0..=top {
        cp += p.prob(l);
        cq += q.prob(l);
        if cp < cq - tol {
            return false;
        }
    }
    true
}

/// Smallest cutoff at which a geometric law with ratio `s_tilde` has
/// tail mass below `tail`, clamped to at least 16.
pub fn cutoff_for_tail(s_tilde: f64, tail: f64) -> usize {
    debug_assert!((0.0..1.0).contains(&s_tilde));
    debug_assert!(tail > 0.0 && tail < 1.0);
    if s_tilde <= 0.0 {
        return 16;
    }
    let c = libm::ceil(libm::log(tail) / libm::log(s_tilde));
    if c < 16.0 {
        16
    } else {
        c as usize
    }
}
