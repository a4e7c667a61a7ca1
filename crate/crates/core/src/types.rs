//! Shared unit conventions, parameter and amplitude types, and validation.
//!
//! Everything downstream works in recoil units: energies in `E_r = ħ²k_r²/2m`,
//! momenta in units of the photon recoil `k_r`. With that choice the kinetic
//! diagonal of the dressed Hamiltonian reads `(q ± 2)²` and `q²` with no
//! prefactors, and every experimental knob is a dimensionless number.

use crate::error::Error;

/// Accepted deviation of |c|² from 1 when constructing [`SpinorAmplitudes`].
pub const NORM_TOL: f64 = 1e-12;

/// Dressing parameters of the Raman-coupled spin-1 system, in recoil units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedParams {
    /// Raman coupling Ω_r / E_r. Must be ≥ 0.
    pub omega: f64,
    /// Two-photon detuning δ / E_r.
    pub delta: f64,
    /// Quadratic Zeeman shift ε / E_r of the m_f = 0 level.
    pub epsilon: f64,
    /// Quasimomentum q / k_r.
    pub q: f64,
}

impl DressedParams {
    /// Quadratic Zeeman shift applied when none is given, in E_r.
    pub const DEFAULT_EPSILON: f64 = 0.65;

    /// Parameters with the default quadratic Zeeman shift.
    pub fn new(omega: f64, delta: f64, q: f64) -> Self {
        Self {
            omega,
            delta,
            epsilon: Self::DEFAULT_EPSILON,
            q,
        }
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn at_q(mut self, q: f64) -> Self {
        self.q = q;
        self
    }

    /// Check finiteness of all fields and `omega >= 0`; returns the
    /// parameters unchanged on success.
    pub fn validated(self) -> Result<Self, Error> {
        let fields = [
            ("omega", self.omega),
            ("delta", self.delta),
            ("epsilon", self.epsilon),
            ("q", self.q),
        ];
        for (name, value) in fields {
            if !value.is_finite() {
                return Err(Error::NonFinite(name));
            }
        }
        if self.omega < 0.0 {
            return Err(Error::NegativeOmega(self.omega));
        }
        Ok(self)
    }
}

/// Flip the overall sign so the largest-magnitude component is positive;
/// magnitude ties resolve to the first component in index order. Also
/// normalizes -0.0 to +0.0 so serialized output carries a single zero.
pub(crate) fn canonicalize3(v: &mut [f64; 3]) {
    let mut k = 0;
    for i in 1..3 {
        if v[i].abs() > v[k].abs() {
            k = i;
        }
    }
    if v[k] < 0.0 {
        for c in v.iter_mut() {
            *c = -*c;
        }
    }
    for c in v.iter_mut() {
        *c += 0.0;
    }
}

/// Real spinor amplitudes (C₋₁, C₀, C₊₁) over the m_f = −1, 0, +1 states.
///
/// Invariants: unit norm within [`NORM_TOL`] and canonical overall sign (the
/// largest-magnitude component is positive, ties broken in field order).
/// Only the products C₀², C₊₁C₋₁ and C₀²C₊₁C₋₁ are observable, so the sign
/// rule is a serialization convention, not physics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorAmplitudes {
    c_m1: f64,
    c_0: f64,
    c_p1: f64,
}

impl SpinorAmplitudes {
    pub fn new(c_m1: f64, c_0: f64, c_p1: f64) -> Result<Self, Error> {
        let fields = [("c_m1", c_m1), ("c_0", c_0), ("c_p1", c_p1)];
        for (name, value) in fields {
            if !value.is_finite() {
                return Err(Error::NonFinite(name));
            }
        }
        let norm2 = c_m1 * c_m1 + c_0 * c_0 + c_p1 * c_p1;
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm2));
        }
        let mut v = [c_m1, c_0, c_p1];
        canonicalize3(&mut v);
        Ok(Self {
            c_m1: v[0],
            c_0: v[1],
            c_p1: v[2],
        })
    }

    pub fn from_array(v: [f64; 3]) -> Result<Self, Error> {
        Self::new(v[0], v[1], v[2])
    }

    pub fn c_m1(&self) -> f64 {
        self.c_m1
    }

    pub fn c_0(&self) -> f64 {
        self.c_0
    }

    pub fn c_p1(&self) -> f64 {
        self.c_p1
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.c_m1, self.c_0, self.c_p1]
    }

    /// Populations (P₋₁, P₀, P₊₁) = squared amplitudes.
    pub fn populations(&self) -> [f64; 3] {
        [
            self.c_m1 * self.c_m1,
            self.c_0 * self.c_0,
            self.c_p1 * self.c_p1,
        ]
    }
}

/// Clebsch–Gordan row of a total-spin channel |F, m_F = 0⟩ over the
/// two-boson product states with m_a + m_b = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    total_f: u8,
    g_00: f64,
    g_pm: f64,
    g_mp: f64,
}

impl ChannelSpec {
    pub(crate) fn new(total_f: u8, g_00: f64, g_pm: f64, g_mp: f64) -> Self {
        Self {
            total_f,
            g_00,
            g_pm,
            g_mp,
        }
    }

    /// Total two-atom spin F.
    pub fn total_f(&self) -> u8 {
        self.total_f
    }

    /// ⟨1,0; 1,0 | F,0⟩
    pub fn g_00(&self) -> f64 {
        self.g_00
    }

    /// ⟨1,+1; 1,−1 | F,0⟩
    pub fn g_pm(&self) -> f64 {
        self.g_pm
    }

    /// ⟨1,−1; 1,+1 | F,0⟩
    pub fn g_mp(&self) -> f64 {
        self.g_mp
    }
}

/// Rate ratio k_sup / k_{0,0} with its interference bookkeeping.
///
/// `with_interference = without_interference + cross_term` up to rounding;
/// for normalized amplitudes both ratios lie in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioResult {
    /// Full ratio, cross term included.
    pub with_interference: f64,
    /// Direct pathway terms only.
    pub without_interference: f64,
    /// Signed interference contribution.
    pub cross_term: f64,
}
