//! Exact two-mode-squeezer evolution on a truncated Fock space.
//!
//! The generator `K = a*b* - ab` conserves the photon-number difference
//! between the modes, so the truncated two-mode space splits into
//! blocks indexed by that difference. Within a block the generator is
//! a real antisymmetric tridiagonal matrix with couplings
//! `c_j = sqrt((j+d+1)(j+1))`; its exponential is applied to one basis
//! column at a time by scaling the rate and repeatedly applying a
//! truncated Taylor factor. Basis pairs are folded into the reduced
//! photon-number law of the amplified mode weighted by
//! `input_n * idler_k`.
//!
//! Blocks are exponentiated on a padded range above the requested
//! cutoff so that reflection off the truncation boundary stays away
//! from the reported entries; whatever lands beyond the cutoff is
//! returned as the deficit `1 - sum(output)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::fock::DiagonalState;

/// Largest admissible cutoff for oracle inputs and outputs.
pub(crate) const MAX_CUTOFF: usize = 80;

/// Basis pairs with joint weight below this contribute less than the
/// reporting precision and are skipped (their weight shows up in the
/// deficit).
const WEIGHT_FLOOR: f64 = 1e-16;

const TAYLOR_TOL: f64 = 1e-18;
const MAX_TAYLOR_TERMS: usize = 32;

pub(crate) fn oracle(
    input: &DiagonalState,
    idler: &DiagonalState,
    gain: f64,
    cutoff: usize,
) -> Result<DiagonalState, Error> {
    if !gain.is_finite() || gain < 1.0 {
        return Err(Error::InvalidParameter { name: "gain", value: gain });
    }
    for dim in [cutoff, input.cutoff(), idler.cutoff()] {
        if dim > MAX_CUTOFF {
            return Err(Error::ResourceLimit { requested: dim, max: MAX_CUTOFF });
        }
    }
    let rate = libm::acosh(libm::sqrt(gain));
    let cap = cutoff + cutoff / 2 + 16;
    let mut out = vec![0.0; cutoff + 1];
    for (n, &p_n) in input.probs().iter().enumerate() {
        for (k, &t_k) in idler.probs().iter().enumerate() {
            let weight = p_n * t_k;
            if weight < WEIGHT_FLOOR {
                continue;
            }
            let diff = n.abs_diff(k);
            let base = n.min(k);
            if base + diff > cap {
                continue; // pair not representable; weight stays in the deficit
            }
            let column = squeezer_column(diff, base, rate, cap);
            let offset = if n >= k { diff } else { 0 };
            for (j, &amp) in column.iter().enumerate() {
                let l = j + offset;
                if l <= cutoff {
                    out[l] += weight * amp * amp;
                }
            }
        }
    }
    DiagonalState::from_probs(out)
}

/// Column `exp(rate * K_d) e_base` of the block with photon-number
/// difference `d = diff`, truncated so the larger mode stays at or
/// below `cap`.
fn squeezer_column(diff: usize, base: usize, rate: f64, cap: usize) -> Vec<f64> {
    let len = cap - diff + 1;
    debug_assert!(base < len);
    // couplings between block states j and j+1
    let couplings: Vec<f64> = (0..len - 1)
        .map(|j| libm::sqrt(((j + diff + 1) * (j + 1)) as f64))
        .collect();
    let norm = rate
        * (0..len)
            .map(|j| {
                let above = if j > 0 { couplings[j - 1] } else { 0.0 };
                let below = if j < len - 1 { couplings[j] } else { 0.0 };
                above + below
            })
            .fold(0.0f64, f64::max);
    let steps = if norm <= 0.5 {
        1u32
    } else {
        1 << (libm::ceil(libm::log2(norm / 0.5)) as u32)
    };
    let h = rate / steps as f64;

    let mut v = vec![0.0; len];
    v[base] = 1.0;
    let mut term = vec![0.0; len];
    let mut next = vec![0.0; len];
    for _ in 0..steps {
        // v <- exp(h K) v by Taylor series; ||h K|| <= 1/2
        term.copy_from_slice(&v);
        for t in 1..=MAX_TAYLOR_TERMS {
            // next = (h/t) K term, with (K x)_j = c_(j-1) x_(j-1) - c_j x_(j+1)
            let scale = h / t as f64;
            for j in 0..len {
                let up = if j > 0 { couplings[j - 1] * term[j - 1] } else { 0.0 };
                let down = if j < len - 1 { couplings[j] * term[j + 1] } else { 0.0 };
                next[j] = scale * (up - down);
            }
            core::mem::swap(&mut term, &mut next);
            let mut max_term = 0.0f64;
            for (vj, &tj) in v.iter_mut().zip(term.iter()) {
                *vj += tj;
                max_term = max_term.max(tj.abs());
            }
            if max_term < TAYLOR_TOL {
                break;
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amplifier::{output_thermal_input, output_vacuum_input, AmplifierSpec};
    use crate::fock::{number_state, thermal_distribution, ThermalParams};

    #[test]
    fn column_is_unit_norm() {
        for (diff, base) in [(0, 0), (3, 2), (10, 0), (0, 15)] {
            let col = squeezer_column(diff, base, 0.8813735870195429, 60);
            let norm: f64 = col.iter().map(|c| c * c).sum();
            assert!((norm - 1.0).abs() < 1e-12, "diff={diff} base={base}");
        }
    }

    #[test]
    fn unit_gain_is_identity() {
        let input = thermal_distribution(ThermalParams::new(0.4).unwrap(), 20);
        let out = oracle(&input, &DiagonalState::vacuum(0), 1.0, 20).unwrap();
        for l in 0..=20 {
            assert!((out.prob(l) - input.prob(l)).abs() < 1e-12);
        }
    }

    #[test]
    fn vacuum_vacuum_matches_geometric() {
        let v = DiagonalState::vacuum(0);
        let out = oracle(&v, &v, 2.0, 40).unwrap();
        for l in 0..=40 {
            assert!((out.prob(l) - 0.5f64.powi(l as i32 + 1)).abs() < 1e-10, "l = {l}");
        }
        assert!(out.tail_mass() >= 0.0);
        assert!(out.tail_mass() < 1e-10);
    }

    #[test]
    fn number_idlers_match_closed_form() {
        let v = DiagonalState::vacuum(0);
        for k in 0..=5 {
            let idler = number_state(k, k).unwrap();
            let exact = output_vacuum_input(&idler, 2.0, 40).unwrap();
            let numeric = oracle(&v, &idler, 2.0, 40).unwrap();
            for l in 0..=40 {
                assert!((exact.prob(l) - numeric.prob(l)).abs() < 1e-8, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn thermal_input_matches_reduction() {
        let s = ThermalParams::new(0.5).unwrap();
        let input = thermal_distribution(s, 60);
        let idler = number_state(1, 1).unwrap();
        let spec = AmplifierSpec::new(2.0, idler.clone()).unwrap();
        let exact = output_thermal_input(s, &spec, 60).unwrap();
        let numeric = oracle(&input, &idler, 2.0, 60).unwrap();
        for l in 0..=60 {
            assert!((exact.prob(l) - numeric.prob(l)).abs() < 1e-6, "l = {l}");
        }
    }

    #[test]
    fn reduction_validated_off_the_paper_gain() {
        // gain 3 exercises the general-eta reduction against the oracle
        let s = ThermalParams::new(0.5).unwrap();
        let input = thermal_distribution(s, 60);
        let idler = number_state(2, 2).unwrap();
        let spec = AmplifierSpec::new(3.0, idler.clone()).unwrap();
        let exact = output_thermal_input(s, &spec, 40).unwrap();
        let numeric = oracle(&input, &idler, 3.0, 40).unwrap();
        for l in 0..=40 {
            assert!((exact.prob(l) - numeric.prob(l)).abs() < 1e-6, "l = {l}");
        }
    }

    #[test]
    fn dimension_guard() {
        let v = DiagonalState::vacuum(0);
        let err = oracle(&v, &v, 2.0, 81).unwrap_err();
        assert_eq!(err, Error::ResourceLimit { requested: 81, max: 80 });
        assert!(oracle(&v, &v, 0.5, 20).is_err());
    }
}
