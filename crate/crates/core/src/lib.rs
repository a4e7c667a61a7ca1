//! Coherent control of a photoassociation reaction in a spin-1 ⁸⁷Rb BEC.
//!
//! Two colliding condensate atoms bind into an excited molecule only
//! through the total-spin channel |F, m_F = 0⟩ selected by the PA laser.
//! When the reactant spin state is a superposition of m_f = −1, 0, +1,
//! the two reaction pathways (a 0+0 pair, or a ±1 with a ∓1 partner)
//! interfere: destructively in the F = 0 channel, constructively in F = 2.
//!
//! The crate assembles the pieces end to end:
//!
//! * [`dressed`] — the 3×3 Raman spin–momentum Hamiltonian and its ground
//!   state, in recoil units;
//! * [`band`] — lowest-band scans and the band-minimum search that seats
//!   the condensate before each sweep point;
//! * [`channels`] — Clebsch–Gordan rows for F ∈ {0, 1, 2} and the rate
//!   ratio k_sup/k_{0,0} with and without the interference cross term;
//! * [`rf`] — the RF-pulse preparation as a Y rotation, population curves
//!   and their closed-form rate ratios;
//! * [`sweep`] — parameter sweeps over coupling, detuning and RF angle
//!   with deterministic CSV emission;
//! * [`oracle`] — slow, independent validators (Jacobi rotations,
//!   exhaustive scans, term enumeration) used by the test suites.
//!
//! ```
//! use pa_core::channels::{cg_table, rate_ratio};
//! use pa_core::dressed::ground_state;
//! use pa_core::types::DressedParams;
//!
//! let p = DressedParams::new(5.4, 0.0, 0.0);
//! let (_, amps) = ground_state(&p).unwrap();
//! let r = rate_ratio(&amps, &cg_table(0).unwrap()).unwrap();
//! assert!(r.with_interference < r.without_interference);
//! ```

pub mod band;
pub mod channels;
pub mod dressed;
pub mod error;
pub mod oracle;
pub mod rf;
pub mod sweep;
pub mod types;

pub use error::Error;
pub use types::{ChannelSpec, DressedParams, RatioResult, SpinorAmplitudes};
