//! Total-spin scattering channels and photoassociation rate ratios.
//!
//! Two colliding f = 1 bosons reach the excited molecule through the
//! |F, m_F = 0⟩ channel selected by the PA laser. Only three product states
//! carry m_a + m_b = 0, so a channel is fully described by its
//! Clebsch–Gordan row (g_00, g_pm, g_mp). With both atoms in the dressed
//! superposition, the channel amplitude is
//!
//! ```text
//!     g_00·C_0² + (g_pm + g_mp)·C_{+1}C_{−1}
//! ```
//!
//! and the rate ratio k_sup/k_{0,0} is its square over g_00². The Raman
//! momentum phases e^{±i k_r·r_ab} are dropped at projection time (the
//! molecule is far smaller than the Raman wavelength), so RF-prepared and
//! Raman-dressed states share the same ratio. Franck–Condon factors cancel
//! between numerator and denominator and are never represented.
//!
//! The m_f = 0 pathway and the m_f = ±1 pathway add coherently: their cross
//! term is negative for F = 0 (opposite-sign CG row, destructive) and
//! positive for F = 2 (same-sign row, constructive).

use crate::error::Error;
use crate::types::{ChannelSpec, RatioResult, SpinorAmplitudes};

/// Clebsch–Gordan row for |F, m_F = 0⟩ of two f = 1 atoms.
pub fn cg_table(total_f: u8) -> Result<ChannelSpec, Error> {
    let s3 = 1.0 / 3.0_f64.sqrt();
    let s6 = 1.0 / 6.0_f64.sqrt();
    let s2 = std::f64::consts::FRAC_1_SQRT_2;
    match total_f {
        0 => Ok(ChannelSpec::new(0, -s3, s3, s3)),
        1 => Ok(ChannelSpec::new(1, 0.0, -s2, s2)),
        2 => Ok(ChannelSpec::new(2, 2.0 * s6, s6, s6)),
        f => Err(Error::UnsupportedChannel(f)),
    }
}

/// Channel amplitude before squaring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionAmplitude {
    /// Amplitude of the bare reference pair (C_0 = 1): just g_00.
    pub bare: f64,
    /// Amplitude of the superposition pair.
    pub dressed: f64,
}

/// Project the two-boson product state onto the channel.
pub fn project(amps: &SpinorAmplitudes, channel: &ChannelSpec) -> ProjectionAmplitude {
    let c0 = amps.c_0();
    ProjectionAmplitude {
        bare: channel.g_00(),
        dressed: channel.g_00() * c0 * c0
            + (channel.g_pm() + channel.g_mp()) * amps.c_p1() * amps.c_m1(),
    }
}

fn ratio_unchecked(amps: &SpinorAmplitudes, channel: &ChannelSpec) -> RatioResult {
    let r = (channel.g_pm() + channel.g_mp()) / channel.g_00();
    let direct = amps.c_0() * amps.c_0();
    let exchange = r * amps.c_p1() * amps.c_m1();
    let sum = direct + exchange;
    RatioResult {
        with_interference: sum * sum,
        without_interference: direct * direct + exchange * exchange,
        cross_term: 2.0 * direct * exchange,
    }
}

/// Rate ratio k_sup/k_{0,0} for the given channel.
///
/// Fails with [`Error::ZeroBareChannel`] when g_00 = 0 (F = 1): the bare
/// m_f = 0 pair has no projection there and the ratio is undefined.
pub fn rate_ratio(amps: &SpinorAmplitudes, channel: &ChannelSpec) -> Result<RatioResult, Error> {
    if channel.g_00() == 0.0 {
        return Err(Error::ZeroBareChannel);
    }
    Ok(ratio_unchecked(amps, channel))
}

/// Ratio in the destructive |F=0, m_F=0⟩ channel: (C_0² − 2C_{+1}C_{−1})².
pub fn rate_ratio_f0(amps: &SpinorAmplitudes) -> RatioResult {
    let channel = cg_table(0).expect("F = 0 is a supported channel");
    ratio_unchecked(amps, &channel)
}

/// Ratio in the constructive |F=2, m_F=0⟩ channel: (C_0² + C_{+1}C_{−1})².
pub fn rate_ratio_f2(amps: &SpinorAmplitudes) -> RatioResult {
    let channel = cg_table(2).expect("F = 2 is a supported channel");
    ratio_unchecked(amps, &channel)
}
