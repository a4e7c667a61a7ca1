//! RF-pulse preparation: a Y rotation on the (m_f = 0 ↔ m_f = ±1) pair.
//!
//! The pulse moves population between the m_f = 0 pole and a symmetric,
//! equal-phase combination of m_f = ±1, so one angle θ_y fixes the whole
//! spinor:
//!
//! ```text
//!     (C'_{−1}, C'_0, C'_{+1}) = (sin(θ/2)/√2, cos(θ/2), sin(θ/2)/√2)
//! ```
//!
//! A full spin-1 rotation (with P_0 = cos²θ) would disagree with the
//! observed half-transfer at θ_y = π/2, so the two-pole model is the one
//! used. The superposition carries no momentum factors, hence the same
//! rate-ratio operation as the Raman-dressed case applies with no extra
//! approximation, and the closed forms are
//!
//! ```text
//!     F = 0:  k_sup/k_{0,0} = cos²θ_y          (period π)
//!     F = 2:  k_sup/k_{0,0} = ((1 + cos²(θ_y/2))/2)²   (period 2π)
//! ```

use crate::channels::rate_ratio;
use crate::error::Error;
use crate::sweep::{SweepKind, SweepSeries};
use crate::types::{ChannelSpec, SpinorAmplitudes};

/// Spinor amplitudes after an RF rotation by `theta_y` radians.
pub fn rf_amplitudes(theta_y: f64) -> SpinorAmplitudes {
    assert!(theta_y.is_finite(), "rotation angle must be finite");
    let half = 0.5 * theta_y;
    let side = half.sin() * std::f64::consts::FRAC_1_SQRT_2;
    SpinorAmplitudes::new(side, half.cos(), side)
        .expect("rotation amplitudes are unit-norm by construction")
}

/// An RF-prepared state: the rotation angle and the spinor it produces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RfState {
    theta_y: f64,
    amps: SpinorAmplitudes,
}

impl RfState {
    pub fn new(theta_y: f64) -> Self {
        Self {
            theta_y,
            amps: rf_amplitudes(theta_y),
        }
    }

    pub fn theta_y(&self) -> f64 {
        self.theta_y
    }

    pub fn amps(&self) -> &SpinorAmplitudes {
        &self.amps
    }
}

/// Rate ratios and populations along a strictly increasing θ grid.
pub fn rf_rate_curve(channel: &ChannelSpec, thetas: &[f64]) -> Result<SweepSeries, Error> {
    if channel.g_00() == 0.0 {
        return Err(Error::ZeroBareChannel);
    }
    let mut series = SweepSeries::new(
        SweepKind::ThetaSweep,
        &["with", "without", "cross", "pop_m1", "pop_0", "pop_p1"],
    );
    for &theta in thetas {
        let amps = rf_amplitudes(theta);
        let r = rate_ratio(&amps, channel)?;
        let pops = amps.populations();
        series.push(
            theta,
            vec![
                r.with_interference,
                r.without_interference,
                r.cross_term,
                pops[0],
                pops[1],
                pops[2],
            ],
        )?;
    }
    Ok(series)
}

/// Populations only, for the population-transfer curve.
pub fn population_curve(thetas: &[f64]) -> Result<SweepSeries, Error> {
    let mut series =
        SweepSeries::new(SweepKind::Populations, &["pop_m1", "pop_0", "pop_p1"]);
    for &theta in thetas {
        let pops = rf_amplitudes(theta).populations();
        series.push(theta, vec![pops[0], pops[1], pops[2]])?;
    }
    Ok(series)
}
