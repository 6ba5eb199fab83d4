//! The covariant phase-insensitive amplifier channel.
//!
//! An amplifier with gain `G > 1` acts on the input mode as
//! `a_amp = sqrt(G) a_in + sqrt(G-1) b*`, and is fully determined by
//! the diagonal state of the idler mode `b`. This module provides the
//! closed-form photon-number output laws for vacuum input, the
//! reduction of thermal input to vacuum input through a binomial loss
//! channel acting on the idler, and an exact truncated
//! two-mode-squeezer oracle used to validate both.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::fock::{DiagonalState, ThermalParams};
use crate::math::powi;
use crate::squeezer;

/// A covariant amplifier: gain plus the diagonal idler state.
///
/// Restricting the idler to a diagonal state is not a loss of
/// generality: phase averaging turns any idler into a diagonal one
/// without increasing the figure of merit.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplifierSpec {
    gain: f64,
    idler: DiagonalState,
}

impl AmplifierSpec {
    /// Requires `gain > 1`.
    pub fn new(gain: f64, idler: DiagonalState) -> Result<Self, Error> {
        if !gain.is_finite() || gain <= 1.0 {
            return Err(Error::InvalidParameter { name: "gain", value: gain });
        }
        Ok(Self { gain, idler })
    }

    pub fn gain(&self) -> f64 {
        self.gain
    }

    pub fn idler(&self) -> &DiagonalState {
        &self.idler
    }

    /// `gamma = (G-1)/G`, the geometric ratio of the vacuum-idler,
    /// vacuum-input output law. Equals `tanh^2` of the squeeze rate.
    pub fn gamma(&self) -> f64 {
        (self.gain - 1.0) / self.gain
    }

    /// Amplitude transmission `tanh` of the squeeze rate, `sqrt(gamma)`.
    pub fn squeeze_tanh(&self) -> f64 {
        libm::sqrt(self.gamma())
    }

    /// Squeeze rate `t` of the underlying two-mode squeezer,
    /// `cosh t = sqrt(G)`.
    pub fn squeeze_rate(&self) -> f64 {
        libm::acosh(libm::sqrt(self.gain))
    }

    /// `g = ln cosh t = ln(G) / 2`.
    pub fn log_amplitude_gain(&self) -> f64 {
        0.5 * libm::log(self.gain)
    }
}

/// Parameters of the thermal-to-vacuum input reduction.
///
/// A thermal input with ratio `s` is one output arm of a squeezer fed
/// with vacuum, so the amplifier on thermal input equals a *larger*
/// squeezer on vacuum input whose idler arm mixes the original idler
/// with vacuum on a beamsplitter. Matching coefficients in
/// `a_amp = sqrt(G) a_in + sqrt(G-1) b*` after substituting
/// `a_in = cosh(x) c1 + sinh(x) c2*` with `tanh^2 x = s`:
///
/// * effective squeezer: `cosh^2 t_eff = G / (1-s)`, so the effective
///   geometric ratio is `gamma_eff = tanh^2 t_eff = (G-1+s)/G` and the
///   effective gain is `cosh^2 t_eff = G/(1-s) = 1/(1-gamma_eff)`;
/// * the mode feeding the effective squeezer is
///   `c~* = T c2* + R b*` with `R = sqrt(G-1)/sinh t_eff`, i.e. the
///   idler photons survive into it with probability
///   `eta = R^2 = (G-1)(1-s)/(G-1+s)` while the complementary arm
///   `T^2 = G s/(G-1+s)` carries vacuum.
///
/// As `s -> 0` the loss channel tends to the identity; the reduction is
/// reserved for `0 < s < 1` and callers use the vacuum-input law
/// directly at `s = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReductionParams {
    s: f64,
    gain: f64,
    eta: f64,
    gamma_eff: f64,
}

impl ReductionParams {
    /// Requires `0 < s < 1` and `gain > 1`.
    pub fn new(s: ThermalParams, gain: f64) -> Result<Self, Error> {
        if !gain.is_finite() || gain <= 1.0 {
            return Err(Error::InvalidParameter { name: "gain", value: gain });
        }
        if s.s() == 0.0 {
            return Err(Error::InvalidParameter { name: "s", value: 0.0 });
        }
        let denom = gain - 1.0 + s.s();
        Ok(Self {
            s: s.s(),
            gain,
            eta: (gain - 1.0) * (1.0 - s.s()) / denom,
            gamma_eff: denom / gain,
        })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn gain(&self) -> f64 {
        self.gain
    }

    /// Transmissivity of the loss channel applied to the idler.
    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Geometric ratio of the effective vacuum-input squeezer.
    pub fn gamma_eff(&self) -> f64 {
        self.gamma_eff
    }

    /// Gain of the effective vacuum-input amplifier, `G/(1-s)`.
    pub fn effective_gain(&self) -> f64 {
        1.0 / (1.0 - self.gamma_eff)
    }
}

/// Output photon-number law of the amplifier on *vacuum* input.
///
/// For idler `|k>` the law is `(1-gamma)^(k+1) gamma^l C(l+k, k)`,
/// evaluated by the stable recursion
/// `q_(l+1) = q_l * gamma * (l+k+1)/(l+1)`; a mixed idler gives the
/// convex combination of the number-state laws.
pub fn output_vacuum_input(
    idler: &DiagonalState,
    gain: f64,
    cutoff: usize,
) -> Result<DiagonalState, Error> {
    if !gain.is_finite() || gain <= 1.0 {
        return Err(Error::InvalidParameter { name: "gain", value: gain });
    }
    let gamma = (gain - 1.0) / gain;
    let mut out = vec![0.0; cutoff + 1];
    for (k, &tau_k) in idler.probs().iter().enumerate() {
        if tau_k == 0.0 {
            continue;
        }
        let mut q = powi(1.0 - gamma, k as u32 + 1);
        for (l, slot) in out.iter_mut().enumerate() {
            *slot += tau_k * q;
            q *= gamma * (l + k + 1) as f64 / (l + 1) as f64;
        }
    }
    DiagonalState::from_probs(out)
}

/// Closed-form partial sum of the `|k>`-idler output law:
/// `sum_(l<=m) q^k_l = 1 - gamma^(m+1) sum_(r<=k) (1-gamma)^r gamma^(k-r) C(k+m+1, r)`.
///
/// Used as an independent oracle against [`output_vacuum_input`].
/// Requires `0 < gamma < 1`.
pub fn cdf_identity(k: usize, m: usize, gamma: f64) -> f64 {
    debug_assert!(gamma > 0.0 && gamma < 1.0);
    let mut sum = 0.0;
    let mut binom = 1.0; // C(k+m+1, r), starting at r = 0
    for r in 0..=k {
        sum += binom * powi(1.0 - gamma, r as u32) * powi(gamma, (k - r) as u32);
        binom *= (k + m + 1 - r) as f64 / (r + 1) as f64;
    }
    1.0 - powi(gamma, m as u32 + 1) * sum
}

/// Loss channel with transmissivity `eta`: binomial down-conversion
/// `out_p = sum_(k>=p) tau_k C(k, p) eta^p (1-eta)^(k-p)`.
///
/// The represented mass is conserved, so the output carries the input
/// tail mass unchanged. The output is the vacuum iff the input is the
/// vacuum or `eta = 0`, and equals the input iff `eta = 1`.
pub fn loss_channel(tau: &DiagonalState, eta: f64) -> Result<DiagonalState, Error> {
    if !eta.is_finite() || !(0.0..=1.0).contains(&eta) {
        return Err(Error::InvalidParameter { name: "eta", value: eta });
    }
    if eta == 1.0 {
        return Ok(tau.clone());
    }
    let mut out = vec![0.0; tau.cutoff() + 1];
    if eta == 0.0 {
        out[0] = tau.mass();
        return DiagonalState::with_tail_mass(out, tau.tail_mass());
    }
    let ratio = eta / (1.0 - eta);
    for (k, &tau_k) in tau.probs().iter().enumerate() {
        if tau_k == 0.0 {
            continue;
        }
        let mut w = powi(1.0 - eta, k as u32); // p = 0 term
        for p in 0..=k {
            out[p] += tau_k * w;
            w *= ratio * (k - p) as f64 / (p + 1) as f64;
        }
    }
    DiagonalState::with_tail_mass(out, tau.tail_mass())
}

/// Output photon-number law of the amplifier on a *thermal* input.
///
/// For `s > 0` the thermal impurity is transferred onto the idler: the
/// idler passes through a loss channel with the reduction's `eta`, and
/// the result feeds the effective vacuum-input amplifier. For `s = 0`
/// the reduction is bypassed. With a vacuum idler and gain 2 the output
/// is geometric with ratio `(1+s)/2`.
pub fn output_thermal_input(
    s: ThermalParams,
    spec: &AmplifierSpec,
    cutoff: usize,
) -> Result<DiagonalState, Error> {
    if s.s() == 0.0 {
        return output_vacuum_input(spec.idler(), spec.gain(), cutoff);
    }
    let reduction = ReductionParams::new(s, spec.gain())?;
    let lossy_idler = loss_channel(spec.idler(), reduction.eta())?;
    output_vacuum_input(&lossy_idler, reduction.effective_gain(), cutoff)
}

/// Exact evolution under the two-mode squeezer unitary
/// `exp(r (a*b* - ab))` with `cosh r = sqrt(gain)`, applied to each
/// basis pair of `input` and `idler` on a truncated Fock space, traced
/// over the idler.
///
/// Ground truth for the closed-form channel laws above. The returned
/// tail mass is the truncation deficit `1 - sum(output)`. Guarded to
/// cutoffs of at most 80.
pub fn two_mode_squeezer_oracle(
    input: &DiagonalState,
    idler: &DiagonalState,
    gain: f64,
    cutoff: usize,
) -> Result<DiagonalState, Error> {
    squeezer::oracle(input, idler, gain, cutoff)
}
