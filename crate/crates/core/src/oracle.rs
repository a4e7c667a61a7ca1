//! Independent brute-force validators.
//!
//! Each oracle deliberately uses a different algorithm than the production
//! path it checks — Jacobi rotations against the closed-form cubic, an
//! exhaustive grid against golden-section refinement, term-by-term
//! enumeration against the factored rate formula — so agreement is
//! evidence rather than tautology. Oracles may be orders of magnitude
//! slower; that is fine.

use crate::dressed::{finalize, EigenSolution, Hamiltonian3};
use crate::error::Error;
use crate::types::{ChannelSpec, DressedParams, RatioResult, SpinorAmplitudes};

fn matmul(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

fn transpose(a: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

fn rotate(a: &mut [[f64; 3]; 3], v: &mut [[f64; 3]; 3], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        1.0 / (theta - (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let mut j = [[0.0; 3]; 3];
    for (k, row) in j.iter_mut().enumerate() {
        row[k] = 1.0;
    }
    j[p][p] = c;
    j[q][q] = c;
    j[p][q] = s;
    j[q][p] = -s;
    *a = matmul(&matmul(&transpose(&j), a), &j);
    *v = matmul(v, &j);
    // keep the iterate exactly symmetric
    a[1][0] = a[0][1];
    a[2][0] = a[0][2];
    a[2][1] = a[1][2];
}

/// Classical cyclic Jacobi sweeps until the off-diagonal norm of the
/// scale-normalized iterate drops below 1e-14.
pub fn jacobi_eigensolve(h: &Hamiltonian3) -> Result<EigenSolution, Error> {
    let a0 = h.as_array();
    let mut scale = 0.0_f64;
    for row in &a0 {
        for &x in row {
            scale = scale.max(x.abs());
        }
    }
    if scale == 0.0 {
        return Ok(finalize(
            [0.0; 3],
            [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        ));
    }
    let mut a = a0;
    for row in &mut a {
        for x in row.iter_mut() {
            *x /= scale;
        }
    }
    let mut v = [[0.0; 3]; 3];
    for (k, row) in v.iter_mut().enumerate() {
        row[k] = 1.0;
    }
    for _sweep in 0..100 {
        let off2 =
            2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]);
        if off2.sqrt() < 1e-14 {
            let energies = [a[0][0] * scale, a[1][1] * scale, a[2][2] * scale];
            // columns of the accumulated rotation are the eigenvectors
            let vectors = [
                [v[0][0], v[1][0], v[2][0]],
                [v[0][1], v[1][1], v[2][1]],
                [v[0][2], v[1][2], v[2][2]],
            ];
            return Ok(finalize(energies, vectors));
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            rotate(&mut a, &mut v, p, q);
        }
    }
    Err(Error::NoConvergence)
}

/// Lowest eigenvalue of the dressed matrix by Newton iteration on the
/// characteristic polynomial. Left of the lowest root the polynomial is
/// positive, decreasing and convex, so iteration from any point on that
/// side converges monotonically; `None` when `start` is not on it.
/// Shares no code with the trigonometric closed form used by the
/// production band scan.
fn newton_lowest_from(d0: f64, d1: f64, d2: f64, w2: f64, start: f64) -> Option<f64> {
    let mut x = start;
    {
        let (a, b, c) = (d0 - x, d1 - x, d2 - x);
        if a * b * c - w2 * (a + c) < 0.0 {
            return None;
        }
    }
    for _ in 0..80 {
        let a = d0 - x;
        let b = d1 - x;
        let c = d2 - x;
        let p = a * b * c - w2 * (a + c);
        let dp = -(b * c + a * c + a * b) + 2.0 * w2;
        let step = p / dp;
        let next = x - step;
        if next.is_nan() || next <= x {
            break;
        }
        x = next;
        if step.abs() <= 1e-16 * (1.0 + x.abs()) {
            break;
        }
    }
    Some(x)
}

fn gershgorin_start(d0: f64, d1: f64, d2: f64, w: f64) -> f64 {
    let wa = w.abs();
    (d0 - wa).min(d1 - 2.0 * wa).min(d2 - wa)
}

/// Exhaustive scan of the lowest band over q ∈ [−3, 3] at the given step;
/// on energy ties the minimum with q ≥ 0 wins.
pub fn dense_minimum(
    omega: f64,
    delta: f64,
    epsilon: f64,
    step: f64,
) -> Result<(f64, f64), Error> {
    DressedParams::new(omega, delta, 0.0)
        .with_epsilon(epsilon)
        .validated()?;
    if step <= 0.0 || !step.is_finite() {
        return Err(Error::BadGrid);
    }
    let w = 0.5 * omega;
    let w2 = w * w;
    let count = (6.0 / step).floor() as usize;
    let total = count + 1;
    let mut best_q = f64::NAN;
    let mut best_e = f64::INFINITY;

    // Lanes break the warm-start dependency chain so the Newton solves of
    // neighboring points can overlap in flight; each lane restarts from
    // its own root LANES grid steps back. ‖dH/dq‖ ≤ 10 over the window,
    // so that root minus the margin still lies left of the new lowest
    // root, and the iteration stays valid.
    const LANES: usize = 4;
    let margin_base = 10.0 * (LANES as f64) * step;
    let mut prev = [f64::NAN; LANES];
    let mut i = 0;
    while i < total {
        let block = (total - i).min(LANES);
        let mut qs = [0.0_f64; LANES];
        let mut es = [0.0_f64; LANES];
        for j in 0..block {
            let q = -3.0 + ((i + j) as f64) * step;
            let q = if q > 3.0 { 3.0 } else { q };
            let d0 = (q + 2.0) * (q + 2.0) - delta;
            let d1 = q * q - epsilon;
            let d2 = (q - 2.0) * (q - 2.0) + delta;
            let e = prev[j]
                .is_finite()
                .then(|| {
                    let margin = margin_base + 1e-12 * (1.0 + prev[j].abs());
                    newton_lowest_from(d0, d1, d2, w2, prev[j] - margin)
                })
                .flatten()
                .unwrap_or_else(|| {
                    newton_lowest_from(d0, d1, d2, w2, gershgorin_start(d0, d1, d2, w))
                        .expect("gershgorin bound lies left of the spectrum")
                });
            prev[j] = e;
            qs[j] = q;
            es[j] = e;
        }
        for j in 0..block {
            let (q, e) = (qs[j], es[j]);
            let tie = best_e.is_finite()
                && (e - best_e).abs() <= 1e-12 * (1.0 + best_e.abs());
            let better = (e < best_e && !tie) || (tie && best_q < 0.0 && q >= 0.0);
            if better {
                best_e = e;
                best_q = q;
            }
        }
        i += block;
    }
    Ok((best_q, best_e))
}

/// Rate ratio by explicit enumeration of the nine two-particle product
/// states against the channel's Clebsch–Gordan row; never uses the
/// factored closed form.
pub fn expand_ratio(
    amps: &SpinorAmplitudes,
    channel: &ChannelSpec,
) -> Result<RatioResult, Error> {
    if channel.g_00() == 0.0 {
        return Err(Error::ZeroBareChannel);
    }
    let c = amps.as_array();
    let ms = [-1_i32, 0, 1];
    let g = |ma: i32, mb: i32| -> f64 {
        if ma + mb != 0 {
            0.0
        } else if ma == 0 {
            channel.g_00()
        } else if ma == 1 {
            channel.g_pm()
        } else {
            channel.g_mp()
        }
    };
    let mut direct = 0.0; // both bosons in m_f = 0
    let mut exchange = 0.0; // the m_f = ±1 with m_f = ∓1 pathway
    for (ia, &ma) in ms.iter().enumerate() {
        for (ib, &mb) in ms.iter().enumerate() {
            let amp = c[ia] * c[ib] * g(ma, mb);
            if ma == 0 && mb == 0 {
                direct += amp;
            } else {
                exchange += amp;
            }
        }
    }
    let bare = g(0, 0);
    let direct = direct / bare;
    let exchange = exchange / bare;
    Ok(RatioResult {
        with_interference: (direct + exchange) * (direct + exchange),
        without_interference: direct * direct + exchange * exchange,
        cross_term: 2.0 * direct * exchange,
    })
}
