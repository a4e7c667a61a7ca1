//! The 3×3 dressed Hamiltonian and its spectrum.
//!
//! The Raman lasers couple the bare states |m_f = −1, q+2⟩, |0, q⟩,
//! |+1, q−2⟩ (momenta in k_r). In recoil units the Hamiltonian is
//!
//! ```text
//!     ⎛ (q+2)² − δ     Ω/2          0      ⎞
//!     ⎜    Ω/2       q² − ε        Ω/2     ⎟
//!     ⎝     0          Ω/2      (q−2)² + δ ⎠
//! ```
//!
//! Eigenvalues come from the closed-form trigonometric solution of the
//! characteristic cubic; eigenvectors from cross products plus a 2×2
//! subspace rotation, refined by one cycle of inverse iteration. The
//! rotating-wave approximation is baked into the matrix; no
//! counter-rotating terms are modeled.

use crate::error::Error;
use crate::types::{canonicalize3, DressedParams, SpinorAmplitudes};

/// Two lowest eigenvalues closer than this (in E_r) make the ground state
/// ambiguous; `ground_state` reports an error instead of picking a vector.
pub const DEGENERACY_THRESHOLD: f64 = 1e-12;

/// Symmetric 3×3 real matrix in E_r units, basis order (m_f = −1, 0, +1).
///
/// Stored symmetric by construction: both triangles hold the same value,
/// element-wise. Matrices built from [`build_hamiltonian`] are tridiagonal
/// (zero corners).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hamiltonian3 {
    m: [[f64; 3]; 3],
}

impl Hamiltonian3 {
    /// Symmetric matrix from its diagonal and independent off-diagonals.
    pub fn symmetric(diag: [f64; 3], h01: f64, h12: f64, h02: f64) -> Self {
        Self {
            m: [
                [diag[0], h01, h02],
                [h01, diag[1], h12],
                [h02, h12, diag[2]],
            ],
        }
    }

    /// Symmetric tridiagonal matrix (zero corners).
    pub fn tridiagonal(diag: [f64; 3], h01: f64, h12: f64) -> Self {
        Self::symmetric(diag, h01, h12, 0.0)
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.m[row][col]
    }

    pub fn as_array(&self) -> [[f64; 3]; 3] {
        self.m
    }
}

/// Sorted spectrum of a [`Hamiltonian3`]: `vectors[i]` is the unit
/// eigenvector paired with `energies[i]`, energies ascending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSolution {
    pub energies: [f64; 3],
    pub vectors: [[f64; 3]; 3],
}

/// Assemble the dressed Hamiltonian at the given parameters.
pub fn build_hamiltonian(p: &DressedParams) -> Result<Hamiltonian3, Error> {
    let p = p.validated()?;
    let w = 0.5 * p.omega;
    let diag = [
        (p.q + 2.0) * (p.q + 2.0) - p.delta,
        p.q * p.q - p.epsilon,
        (p.q - 2.0) * (p.q - 2.0) + p.delta,
    ];
    Ok(Hamiltonian3::tridiagonal(diag, w, w))
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn matvec(m: &[[f64; 3]; 3], v: &[f64; 3]) -> [f64; 3] {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = dot(&v, &v).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn max_abs(m: &[[f64; 3]; 3]) -> f64 {
    let mut s = 0.0_f64;
    for row in m {
        for &x in row {
            s = s.max(x.abs());
        }
    }
    s
}

/// Eigenvalues of a symmetric 3×3, ascending, via the trigonometric form
/// of the characteristic cubic. The deviatoric sums are ordered so that
/// index reversal (0 ↔ 2) leaves the rounding pattern unchanged.
pub(crate) fn sym3_eigenvalues(m: &[[f64; 3]; 3]) -> [f64; 3] {
    let p1 = m[0][1] * m[0][1] + m[1][2] * m[1][2] + m[0][2] * m[0][2];
    let mean = ((m[0][0] + m[2][2]) + m[1][1]) / 3.0;
    let d0 = m[0][0] - mean;
    let d1 = m[1][1] - mean;
    let d2 = m[2][2] - mean;
    let p2 = (d0 * d0 + d2 * d2) + d1 * d1 + 2.0 * p1;
    if p2 <= 0.0 {
        return [mean, mean, mean];
    }
    let p = (p2 / 6.0).sqrt();
    // determinant of (M − mean·I) / p
    let b00 = d0 / p;
    let b11 = d1 / p;
    let b22 = d2 / p;
    let b01 = m[0][1] / p;
    let b12 = m[1][2] / p;
    let b02 = m[0][2] / p;
    let det = b00 * (b11 * b22 - b12 * b12) - b01 * (b01 * b22 - b12 * b02)
        + b02 * (b01 * b12 - b11 * b02);
    let r = (det / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = mean + 2.0 * p * phi.cos();
    let lo = mean + 2.0 * p * (phi + 2.0 * std::f64::consts::FRAC_PI_3).cos();
    let mid = 3.0 * mean - hi - lo;
    [lo, mid, hi]
}

/// Lowest eigenvalue only; shares the closed form with
/// [`sym3_eigenvalues`] but skips the other two roots.
pub fn lowest_energy(p: &DressedParams) -> Result<f64, Error> {
    let h = build_hamiltonian(p)?;
    Ok(sym3_eigenvalues(&h.as_array())[0])
}

/// Cross-product eigenvector of (m − lam·I); `None` when the rows are too
/// parallel to resolve one (near-degenerate eigenvalue).
fn eigvec_by_cross(m: &[[f64; 3]; 3], lam: f64) -> Option<[f64; 3]> {
    let r0 = [m[0][0] - lam, m[0][1], m[0][2]];
    let r1 = [m[1][0], m[1][1] - lam, m[1][2]];
    let r2 = [m[2][0], m[2][1], m[2][2] - lam];
    let candidates = [cross(&r0, &r1), cross(&r1, &r2), cross(&r2, &r0)];
    let mut best = candidates[0];
    let mut best_n2 = dot(&best, &best);
    for c in &candidates[1..] {
        let n2 = dot(c, c);
        if n2 > best_n2 {
            best = *c;
            best_n2 = n2;
        }
    }
    if best_n2 < 1e-24 {
        None
    } else {
        Some(normalize(best))
    }
}

/// Two unit vectors spanning the plane orthogonal to `u` (itself unit).
fn orthonormal_complement(u: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    let mut k = 0;
    for i in 1..3 {
        if u[i].abs() < u[k].abs() {
            k = i;
        }
    }
    let mut e = [0.0; 3];
    e[k] = 1.0;
    let w1 = normalize(cross(u, &e));
    let w2 = cross(u, &w1);
    (w1, w2)
}

/// Rotation angle diagonalizing [[a, b], [b, d]]; returns (cos, sin).
fn rot2(a: f64, d: f64, b: f64) -> (f64, f64) {
    let theta = 0.5 * (2.0 * b).atan2(a - d);
    (theta.cos(), theta.sin())
}

/// Solve (m − lam·I) w = v by partial-pivot elimination. `None` when a
/// pivot vanishes outright (exactly singular shift).
fn shifted_solve(m: &[[f64; 3]; 3], lam: f64, v: &[f64; 3]) -> Option<[f64; 3]> {
    let mut a = [
        [m[0][0] - lam, m[0][1], m[0][2], v[0]],
        [m[1][0], m[1][1] - lam, m[1][2], v[1]],
        [m[2][0], m[2][1], m[2][2] - lam, v[2]],
    ];
    for col in 0..3 {
        let mut piv = col;
        for row in col + 1..3 {
            if a[row][col].abs() > a[piv][col].abs() {
                piv = row;
            }
        }
        if a[piv][col] == 0.0 {
            return None;
        }
        a.swap(col, piv);
        for row in col + 1..3 {
            let f = a[row][col] / a[col][col];
            for k in col..4 {
                a[row][k] -= f * a[col][k];
            }
        }
    }
    let mut w = [0.0; 3];
    for col in (0..3).rev() {
        let mut s = a[col][3];
        for k in col + 1..3 {
            s -= a[col][k] * w[k];
        }
        w[col] = s / a[col][col];
        if !w[col].is_finite() {
            return None;
        }
    }
    Some(w)
}

/// Sort ascending by energy and fix each eigenvector's canonical sign.
/// Shared with the Jacobi oracle so both report identical conventions.
pub(crate) fn finalize(energies: [f64; 3], vectors: [[f64; 3]; 3]) -> EigenSolution {
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&i, &j| energies[i].total_cmp(&energies[j]));
    let mut e = [0.0; 3];
    let mut v = [[0.0; 3]; 3];
    for (slot, &i) in idx.iter().enumerate() {
        e[slot] = energies[i];
        v[slot] = vectors[i];
        canonicalize3(&mut v[slot]);
    }
    EigenSolution {
        energies: e,
        vectors: v,
    }
}

/// Full spectrum of a symmetric 3×3.
///
/// Closed-form eigenvalues, eigenvectors from the best-separated root's
/// cross product plus an exact 2×2 rotation in its orthogonal complement,
/// then one cycle of inverse iteration per well-separated pair and a
/// final orthonormalization.
pub fn eigensolve(h: &Hamiltonian3) -> EigenSolution {
    let a = h.as_array();
    let scale = max_abs(&a);
    if scale == 0.0 {
        return EigenSolution {
            energies: [0.0; 3],
            vectors: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        };
    }
    let mut b = a;
    for row in &mut b {
        for x in row.iter_mut() {
            *x /= scale;
        }
    }
    let lam = sym3_eigenvalues(&b);
    let spread = lam[2] - lam[0];
    if spread <= 1e-14 {
        // numerically a multiple of the identity
        return finalize(
            [lam[0] * scale, lam[1] * scale, lam[2] * scale],
            [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        );
    }

    // Take the extreme eigenvalue farther from the middle one: its cross
    // products are the best conditioned.
    let iso_low = lam[1] - lam[0] >= lam[2] - lam[1];
    let iso_lam = if iso_low { lam[0] } else { lam[2] };
    let u = eigvec_by_cross(&b, iso_lam).unwrap_or_else(|| {
        // rows nearly parallel even for the isolated root; fall back to the
        // axis whose diagonal entry sits closest to it
        let mut k = 0;
        for i in 1..3 {
            if (b[i][i] - iso_lam).abs() < (b[k][k] - iso_lam).abs() {
                k = i;
            }
        }
        let mut e = [0.0; 3];
        e[k] = 1.0;
        e
    });

    // Remaining pair from the 2×2 restriction onto the complement of u.
    let (w1, w2) = orthonormal_complement(&u);
    let bw1 = matvec(&b, &w1);
    let bw2 = matvec(&b, &w2);
    let a11 = dot(&w1, &bw1);
    let a12 = dot(&w1, &bw2);
    let a22 = dot(&w2, &bw2);
    let (c, s) = rot2(a11, a22, a12);
    let va = normalize([
        c * w1[0] + s * w2[0],
        c * w1[1] + s * w2[1],
        c * w1[2] + s * w2[2],
    ]);
    let vb = normalize([
        c * w2[0] - s * w1[0],
        c * w2[1] - s * w1[1],
        c * w2[2] - s * w1[2],
    ]);
    let mu_a = (c * c) * a11 + 2.0 * c * s * a12 + (s * s) * a22;
    let mu_b = (s * s) * a11 - 2.0 * c * s * a12 + (c * c) * a22;

    let mut energies;
    let mut vectors;
    if iso_low {
        if mu_a <= mu_b {
            energies = [iso_lam, mu_a, mu_b];
            vectors = [u, va, vb];
        } else {
            energies = [iso_lam, mu_b, mu_a];
            vectors = [u, vb, va];
        }
    } else if mu_a <= mu_b {
        energies = [mu_a, mu_b, iso_lam];
        vectors = [va, vb, u];
    } else {
        energies = [mu_b, mu_a, iso_lam];
        vectors = [vb, va, u];
    }

    // One inverse-iteration cycle on the unscaled matrix, skipped for
    // near-degenerate pairs where it could rotate within the subspace.
    for x in &mut energies {
        *x *= scale;
    }
    for i in 0..3 {
        let gap = (0..3)
            .filter(|&j| j != i)
            .map(|j| (energies[j] - energies[i]).abs())
            .fold(f64::INFINITY, f64::min);
        if gap > 1e-8 * scale {
            if let Some(w) = shifted_solve(&a, energies[i], &vectors[i]) {
                let n2 = dot(&w, &w);
                if n2.is_finite() && n2 > 0.0 {
                    let mut w = normalize(w);
                    if dot(&w, &vectors[i]) < 0.0 {
                        for x in &mut w {
                            *x = -*x;
                        }
                    }
                    vectors[i] = w;
                }
            }
        }
    }

    // Re-orthonormalize (modified Gram–Schmidt) and refresh the energies
    // with Rayleigh quotients.
    vectors[0] = normalize(vectors[0]);
    let p01 = dot(&vectors[1], &vectors[0]);
    for k in 0..3 {
        vectors[1][k] -= p01 * vectors[0][k];
    }
    vectors[1] = normalize(vectors[1]);
    let p02 = dot(&vectors[2], &vectors[0]);
    let p12 = dot(&vectors[2], &vectors[1]);
    for k in 0..3 {
        vectors[2][k] -= p02 * vectors[0][k] + p12 * vectors[1][k];
    }
    vectors[2] = normalize(vectors[2]);
    for i in 0..3 {
        energies[i] = dot(&vectors[i], &matvec(&a, &vectors[i]));
    }

    finalize(energies, vectors)
}

/// Ground state of the dressed Hamiltonian: lowest energy and its
/// canonicalized spinor amplitudes.
///
/// Errors with [`Error::Degenerate`] when the two lowest eigenvalues are
/// within [`DEGENERACY_THRESHOLD`], which happens only on measure-zero
/// parameter sets.
pub fn ground_state(p: &DressedParams) -> Result<(f64, SpinorAmplitudes), Error> {
    let h = build_hamiltonian(p)?;
    let sol = eigensolve(&h);
    let gap = sol.energies[1] - sol.energies[0];
    if gap < DEGENERACY_THRESHOLD {
        return Err(Error::Degenerate(gap));
    }
    let amps = SpinorAmplitudes::from_array(sol.vectors[0])?;
    Ok((sol.energies[0], amps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(m: &[[f64; 3]; 3], lam: f64, v: &[f64; 3]) -> f64 {
        let hv = matvec(m, v);
        let r = [hv[0] - lam * v[0], hv[1] - lam * v[1], hv[2] - lam * v[2]];
        dot(&r, &r).sqrt()
    }

    #[test]
    fn hamiltonian_zero_coupling() {
        let h = build_hamiltonian(&DressedParams::new(0.0, 0.0, 0.0)).unwrap();
        assert_eq!(h.get(0, 0), 4.0);
        assert_eq!(h.get(1, 1), -0.65);
        assert_eq!(h.get(2, 2), 4.0);
        for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)] {
            assert_eq!(h.get(i, j), 0.0);
        }
    }

    #[test]
    fn hamiltonian_resonant_coupling() {
        let h = build_hamiltonian(&DressedParams::new(5.4, 0.0, 0.0)).unwrap();
        assert_eq!(h.get(0, 0), 4.0);
        assert_eq!(h.get(1, 1), -0.65);
        assert_eq!(h.get(2, 2), 4.0);
        assert_eq!(h.get(0, 1), 2.7);
        assert_eq!(h.get(1, 0), 2.7);
        assert_eq!(h.get(1, 2), 2.7);
        assert_eq!(h.get(2, 1), 2.7);
        assert_eq!(h.get(0, 2), 0.0);
        assert_eq!(h.get(2, 0), 0.0);
    }

    #[test]
    fn hamiltonian_general_point() {
        let p = DressedParams::new(2.0, 1.0, 0.5);
        let h = build_hamiltonian(&p).unwrap();
        assert_eq!(h.get(0, 0), 6.25 - 1.0);
        assert_eq!(h.get(1, 1), 0.25 - 0.65);
        assert_eq!(h.get(2, 2), 2.25 + 1.0);
        assert_eq!(h.get(0, 1), 1.0);
        assert_eq!(h.get(1, 2), 1.0);
    }

    #[test]
    fn hamiltonian_is_exactly_symmetric() {
        let h = build_hamiltonian(&DressedParams::new(3.3, -0.7, 1.1))
            .unwrap()
            .as_array();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(h[i][j].to_bits(), h[j][i].to_bits());
            }
        }
    }

    #[test]
    fn hamiltonian_propagates_validation() {
        assert!(build_hamiltonian(&DressedParams::new(-1.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn eigensolve_diagonal_matrix() {
        let h = Hamiltonian3::tridiagonal([4.0, -0.65, 4.0], 0.0, 0.0);
        let sol = eigensolve(&h);
        assert!((sol.energies[0] + 0.65).abs() < 1e-14);
        assert!((sol.energies[1] - 4.0).abs() < 1e-14);
        assert!((sol.energies[2] - 4.0).abs() < 1e-14);
        assert_eq!(sol.vectors[0], [0.0, 1.0, 0.0]);
    }

    #[test]
    fn eigensolve_identity_matrix() {
        let h = Hamiltonian3::symmetric([1.0, 1.0, 1.0], 0.0, 0.0, 0.0);
        let sol = eigensolve(&h);
        for e in sol.energies {
            assert!((e - 1.0).abs() < 1e-14);
        }
        // any orthonormal triple is acceptable
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&sol.vectors[i], &sol.vectors[j]) - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn eigensolve_residuals_and_orthonormality() {
        let cases = [
            DressedParams::new(5.4, 0.0, 0.0),
            DressedParams::new(1.0, 0.3, -0.8),
            DressedParams::new(12.0, -2.5, 1.9),
            DressedParams::new(0.01, 0.0, 0.0),
        ];
        for p in cases {
            let h = build_hamiltonian(&p).unwrap();
            let m = h.as_array();
            let sol = eigensolve(&h);
            for i in 0..3 {
                assert!(
                    residual(&m, sol.energies[i], &sol.vectors[i]) < 1e-10,
                    "residual too large at {p:?}"
                );
                for j in 0..3 {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (dot(&sol.vectors[i], &sol.vectors[j]) - want).abs() < 1e-10
                    );
                }
            }
            assert!(sol.energies[0] <= sol.energies[1]);
            assert!(sol.energies[1] <= sol.energies[2]);
        }
    }

    #[test]
    fn ground_state_uncoupled_sits_in_mf0() {
        let (e, amps) = ground_state(&DressedParams::new(0.0, 0.0, 0.0)).unwrap();
        assert!((e + 0.65).abs() < 1e-14);
        assert_eq!(amps.as_array(), [0.0, 1.0, 0.0]);
    }

    #[test]
    fn ground_state_strong_coupling_limit() {
        // C_±1 → 1/2, C_0 → 1/√2 in magnitude; the eigenvector sign
        // pattern is (s, −s, s), so compare modulo the gauge group
        // {±1, ±diag(−1, 1, −1)}.
        let (_, amps) = ground_state(&DressedParams::new(200.0, 0.0, 0.0)).unwrap();
        let v = amps.as_array();
        let t = [0.5, std::f64::consts::FRAC_1_SQRT_2, 0.5];
        let mut best = f64::INFINITY;
        for (sm, s0) in [(1.0, 1.0), (-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0)] {
            let d = [
                v[0] - sm * t[0],
                v[1] - s0 * t[1],
                v[2] - sm * t[2],
            ];
            best = best.min(dot(&d, &d).sqrt());
        }
        assert!(best < 1e-2, "distance to limit state: {best}");
    }

    #[test]
    fn ground_state_sign_pattern_alternates() {
        let (_, amps) = ground_state(&DressedParams::new(5.4, 0.0, 0.0)).unwrap();
        assert!(amps.c_p1() * amps.c_m1() > 0.0);
        assert!(amps.c_0() * amps.c_p1() < 0.0);
    }

    #[test]
    fn ground_energy_symmetric_in_q_at_zero_detuning() {
        for q in [0.1, 0.5, 1.3, 2.7] {
            let ep = ground_state(&DressedParams::new(5.4, 0.0, q)).unwrap().0;
            let em = ground_state(&DressedParams::new(5.4, 0.0, -q)).unwrap().0;
            assert!((ep - em).abs() < 1e-12);
        }
    }

    #[test]
    fn ground_amplitudes_mirror_in_q_at_zero_detuning() {
        for q in [0.2, 0.9, 1.8] {
            let a = ground_state(&DressedParams::new(3.0, 0.0, q)).unwrap().1;
            let b = ground_state(&DressedParams::new(3.0, 0.0, -q)).unwrap().1;
            assert!((a.c_m1() - b.c_p1()).abs() < 1e-10);
            assert!((a.c_p1() - b.c_m1()).abs() < 1e-10);
            assert!((a.c_0() - b.c_0()).abs() < 1e-10);
        }
    }

    #[test]
    fn ground_energy_monotone_in_omega() {
        let mut last = f64::INFINITY;
        for k in 0..=150 {
            let omega = 0.1 * k as f64;
            let e = ground_state(&DressedParams::new(omega, 0.0, 0.0))
                .unwrap()
                .0;
            assert!(e <= last + 1e-12, "ground energy rose at omega = {omega}");
            last = e;
        }
    }
}
