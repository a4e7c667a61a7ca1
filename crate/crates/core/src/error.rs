use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter or amplitude is NaN or infinite.
    #[error("non-finite value for `{0}`")]
    NonFinite(&'static str),
    /// The Raman coupling must satisfy omega >= 0.
    #[error("negative Raman coupling: omega = {0}")]
    NegativeOmega(f64),
    /// Spinor amplitudes must carry unit norm.
    #[error("amplitudes not normalized: |c|^2 = {0}")]
    NotNormalized(f64),
    /// Scan grids need at least two points and strictly increasing bounds.
    #[error("bad scan grid: need n >= 2 and strictly increasing abscissae")]
    BadGrid,
    /// The two lowest eigenvalues are too close to pick a ground state.
    #[error("ground state degenerate: lowest gap {0} E_r below threshold")]
    Degenerate(f64),
    /// Total spin outside {0, 1, 2}.
    #[error("unsupported scattering channel: F = {0}")]
    UnsupportedChannel(u8),
    /// The bare m_f = 0 pair has no projection on this channel (g_00 = 0),
    /// so the rate ratio is undefined.
    #[error("channel has g_00 = 0; rate ratio undefined")]
    ZeroBareChannel,
    /// Jacobi sweeps failed to reduce the off-diagonal norm.
    #[error("jacobi iteration did not converge")]
    NoConvergence,
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}
