//! Lowest dressed band: scans over quasimomentum and band-minimum search.
//!
//! The detuning sweep recomputes the band minimum before every point, as the
//! condensate always sits at the minimum of the lowest band. All band minima
//! lie well inside |q| < 3 k_r (the kinetic parabolas are centered at 0 and
//! ∓2 k_r), so the search window is fixed to [−3, 3].

use crate::dressed::lowest_energy;
use crate::error::Error;
use crate::types::DressedParams;

/// Search window for the band minimum, in k_r.
pub const Q_WINDOW: (f64, f64) = (-3.0, 3.0);

/// Coarse grid resolution used by [`find_band_minimum`].
pub const COARSE_POINTS: usize = 2001;

/// Width below which golden-section refinement stops, in k_r.
pub const REFINE_TOL: f64 = 1e-10;

/// One sample of the lowest band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandPoint {
    /// Quasimomentum in k_r.
    pub q: f64,
    /// Lowest eigenvalue in E_r.
    pub energy: f64,
}

/// Uniform abscissa with exact endpoints; `i/(n-1)` keeps interior points
/// like the center of a symmetric range exactly representable.
pub(crate) fn grid_point(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    lo + (hi - lo) * (i as f64) / ((n - 1) as f64)
}

/// Sample the lowest band on a uniform grid of `n` points.
pub fn scan_band(
    omega: f64,
    delta: f64,
    epsilon: f64,
    q_min: f64,
    q_max: f64,
    n: usize,
) -> Result<Vec<BandPoint>, Error> {
    let base = DressedParams::new(omega, delta, 0.0)
        .with_epsilon(epsilon)
        .validated()?;
    if n < 2 || q_min >= q_max || !q_min.is_finite() || !q_max.is_finite() {
        return Err(Error::BadGrid);
    }
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let q = grid_point(q_min, q_max, n, i);
        let energy = lowest_energy(&base.at_q(q))?;
        points.push(BandPoint { q, energy });
    }
    Ok(points)
}

/// Golden-section minimization of `f` on `[a, b]` down to interval `tol`.
fn golden_section(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Golden section plus a parabolic vertex polish inside `[a, b]`.
///
/// The band is numerically flat over ~1e-8 around the bottom, which is
/// where golden section stalls; a three-point vertex fit at a step that
/// clears the noise floor restores ~1e-10 placement.
fn refine_bracket(f: impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let (mut q_star, mut energy) = golden_section(&f, a, b, REFINE_TOL);
    let h = 1e-5;
    if q_star - h > a.min(b) && q_star + h < a.max(b) {
        let em = f(q_star - h);
        let ep = f(q_star + h);
        let denom = em - 2.0 * energy + ep;
        let shift = 0.5 * h * (em - ep) / denom;
        if denom > 0.0 && shift.is_finite() && shift.abs() <= h {
            let qv = q_star + shift;
            let ev = f(qv);
            // accept within evaluation noise: the vertex is the better q
            // even when the stalled point carries luckier rounding
            if ev <= energy + 1e-14 * (1.0 + energy.abs()) {
                q_star = qv;
                energy = ev;
            }
        }
    }
    (q_star, energy)
}

/// Locate the minimum of the lowest band over the fixed window.
///
/// Coarse scan on [`COARSE_POINTS`] points, then golden-section refinement
/// inside every competitive local-minimum bracket (distinct wells can tie
/// nearly exactly). The result never exceeds the best coarse sample. At
/// δ = 0 two mirror minima can coexist; the one with q ≥ 0 is returned.
pub fn find_band_minimum(omega: f64, delta: f64, epsilon: f64) -> Result<(f64, f64), Error> {
    let base = DressedParams::new(omega, delta, 0.0)
        .with_epsilon(epsilon)
        .validated()?;
    let (lo, hi) = Q_WINDOW;
    let n = COARSE_POINTS;
    let mut grid_e = vec![0.0_f64; n];
    let mut best_i = 0;
    for i in 0..n {
        grid_e[i] = lowest_energy(&base.at_q(grid_point(lo, hi, n, i)))?;
        if grid_e[i] < grid_e[best_i] {
            best_i = i;
        }
    }
    let f = |q: f64| {
        lowest_energy(&base.at_q(q)).expect("validated parameters stay valid over q")
    };
    let mut q_star = grid_point(lo, hi, n, best_i);
    let mut energy = grid_e[best_i];
    for i in 0..n {
        let local_min = (i == 0 || grid_e[i] <= grid_e[i - 1])
            && (i == n - 1 || grid_e[i] <= grid_e[i + 1]);
        if !local_min || grid_e[i] > grid_e[best_i] + 1e-3 {
            continue;
        }
        let a = grid_point(lo, hi, n, i.saturating_sub(1));
        let b = grid_point(lo, hi, n, (i + 1).min(n - 1));
        let (q, e) = refine_bracket(f, a, b);
        if e < energy {
            q_star = q;
            energy = e;
        }
    }
    if delta == 0.0 && q_star < 0.0 {
        q_star = -q_star;
        energy = f(q_star);
    }
    Ok((q_star, energy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dressed::ground_state;

    #[test]
    fn scan_rejects_bad_grids() {
        assert!(matches!(
            scan_band(1.0, 0.0, 0.65, -1.0, 1.0, 1),
            Err(Error::BadGrid)
        ));
        assert!(matches!(
            scan_band(1.0, 0.0, 0.65, 1.0, -1.0, 5),
            Err(Error::BadGrid)
        ));
    }

    #[test]
    fn scan_uncoupled_band_is_the_lowest_parabola() {
        let pts = scan_band(0.0, 0.0, 0.65, -3.0, 3.0, 7).unwrap();
        assert_eq!(pts.len(), 7);
        // center of the window: pure m_f = 0 branch
        assert_eq!(pts[3].q, 0.0);
        assert!((pts[3].energy + 0.65).abs() < 1e-14);
        // |q| <= 1: still the m_f = 0 parabola q² − ε
        for p in &pts[2..5] {
            assert!((p.energy - (p.q * p.q - 0.65)).abs() < 1e-13);
        }
        for w in pts.windows(2) {
            assert!(w[0].q < w[1].q);
        }
    }

    #[test]
    fn scan_is_symmetric_at_zero_detuning() {
        let pts = scan_band(5.4, 0.0, 0.65, -3.0, 3.0, 121).unwrap();
        for k in 0..pts.len() {
            let mirror = &pts[pts.len() - 1 - k];
            assert!((pts[k].energy - mirror.energy).abs() < 1e-12);
        }
    }

    #[test]
    fn scan_energy_matches_ground_state_energy() {
        let pts = scan_band(5.4, 1.0, 0.65, -2.0, 2.0, 41).unwrap();
        for p in pts {
            let (e, _) = ground_state(&DressedParams::new(5.4, 1.0, p.q)).unwrap();
            assert!((p.energy - e).abs() < 1e-12);
        }
    }

    #[test]
    fn scan_matches_jacobi_oracle_pointwise() {
        let pts = scan_band(5.4, 1.0, 0.65, -3.0, 3.0, 61).unwrap();
        for p in pts {
            let h = crate::dressed::build_hamiltonian(&DressedParams::new(
                5.4, 1.0, p.q,
            ))
            .unwrap();
            let oracle = crate::oracle::jacobi_eigensolve(&h).unwrap();
            assert!((p.energy - oracle.energies[0]).abs() < 1e-10);
        }
    }

    #[test]
    fn minimum_of_bare_parabola() {
        let (q, e) = find_band_minimum(0.0, 0.0, 0.65).unwrap();
        assert!(q.abs() < 1e-8, "got q = {q}");
        assert!((e + 0.65).abs() < 1e-12);
    }

    #[test]
    fn minimum_strong_coupling_single_well() {
        let (q, _) = find_band_minimum(200.0, 0.0, 0.65).unwrap();
        assert!(q.abs() < 1e-8, "got q = {q}");
    }

    #[test]
    fn minimum_positive_zeeman_shift_keeps_the_center_well() {
        // With ε = 0.65 the m_f = 0 parabola owns the band bottom at every
        // coupling; the minimum never leaves q = 0 at zero detuning.
        for omega in [1.0, 5.4, 15.0] {
            let (q, e) = find_band_minimum(omega, 0.0, 0.65).unwrap();
            assert!(q.abs() < 1e-8, "expected the center well, got q = {q}");
            let e0 = lowest_energy(&DressedParams::new(omega, 0.0, 0.0)).unwrap();
            assert!((e - e0).abs() < 1e-12);
        }
    }

    #[test]
    fn minimum_double_well_resolves_to_positive_q() {
        // A negative quadratic Zeeman shift raises m_f = 0 and leaves two
        // mirror minima near the side parabola vertices at δ = 0.
        let (q, e) = find_band_minimum(0.5, 0.0, -1.0).unwrap();
        assert!(q > 1.0, "expected a displaced minimum, got q = {q}");
        // mirror point carries the same energy
        let base = DressedParams::new(0.5, 0.0, 0.0).with_epsilon(-1.0);
        let mirrored = lowest_energy(&base.at_q(-q)).unwrap();
        assert!((e - mirrored).abs() < 1e-12);
    }

    #[test]
    fn minimum_is_optimal_over_window() {
        let (q_star, e_star) = find_band_minimum(5.4, 1.0, 0.65).unwrap();
        let base = DressedParams::new(5.4, 1.0, 0.0);
        for i in 0..=600 {
            let q = grid_point(-3.0, 3.0, 601, i);
            assert!(e_star <= lowest_energy(&base.at_q(q)).unwrap() + 1e-12);
        }
        assert!((-3.0..=3.0).contains(&q_star));
    }

    #[test]
    fn minimum_mirrors_under_detuning_flip() {
        for (omega, delta) in [(5.4, 1.0), (2.0, 0.3), (8.0, -2.0)] {
            let (qp, ep) = find_band_minimum(omega, delta, 0.65).unwrap();
            let (qm, em) = find_band_minimum(omega, -delta, 0.65).unwrap();
            assert!((qp + qm).abs() < 1e-8);
            assert!((ep - em).abs() < 1e-10);
        }
    }
}
