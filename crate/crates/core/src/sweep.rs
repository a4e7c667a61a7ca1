//! Parameter sweeps over coupling, detuning and RF angle, and CSV emission.
//!
//! Sweep points are embarrassingly parallel: evaluation goes through a
//! rayon indexed map and is gathered in input order, so output bytes do
//! not depend on the thread count. CSV output is deterministic: 12
//! significant digits, LF newlines, no locale.

use rayon::prelude::*;

use crate::band::{find_band_minimum, grid_point, scan_band};
use crate::channels::rate_ratio;
use crate::dressed::ground_state;
use crate::error::Error;
use crate::rf::rf_rate_curve;
use crate::types::{ChannelSpec, DressedParams};

/// What a series sweeps over; fixes the meaning of the `x` column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    OmegaSweep,
    DeltaSweep,
    ThetaSweep,
    BandScan,
    Populations,
}

impl SweepKind {
    pub fn label(&self) -> &'static str {
        match self {
            SweepKind::OmegaSweep => "omega_sweep",
            SweepKind::DeltaSweep => "delta_sweep",
            SweepKind::ThetaSweep => "theta_sweep",
            SweepKind::BandScan => "band_scan",
            SweepKind::Populations => "populations",
        }
    }
}

/// Ordered (x, named column values) records with a strictly increasing
/// abscissa and one shared column set.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSeries {
    kind: SweepKind,
    columns: Vec<String>,
    rows: Vec<(f64, Vec<f64>)>,
}

impl SweepSeries {
    pub fn new(kind: SweepKind, columns: &[&str]) -> Self {
        Self {
            kind,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Append a record; `x` must exceed the previous abscissa and `values`
    /// must match the column set.
    pub fn push(&mut self, x: f64, values: Vec<f64>) -> Result<(), Error> {
        if values.len() != self.columns.len() || !x.is_finite() {
            return Err(Error::BadGrid);
        }
        if let Some((last, _)) = self.rows.last() {
            if x <= *last {
                return Err(Error::BadGrid);
            }
        }
        self.rows.push((x, values));
        Ok(())
    }

    pub fn kind(&self) -> SweepKind {
        self.kind
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[(f64, Vec<f64>)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Value of a named column at row `i`, if the column exists.
    pub fn value(&self, i: usize, column: &str) -> Option<f64> {
        let k = self.columns.iter().position(|c| c == column)?;
        Some(self.rows.get(i)?.1[k])
    }

    /// Remove a column from the series; returns whether it existed.
    pub fn drop_column(&mut self, name: &str) -> bool {
        let Some(k) = self.columns.iter().position(|c| c == name) else {
            return false;
        };
        self.columns.remove(k);
        for (_, values) in &mut self.rows {
            values.remove(k);
        }
        true
    }
}

/// Fixed-width decimal with 12 significant digits; -0 collapses to 0 so a
/// zero has one spelling.
pub fn fmt_value(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{:.11e}", v)
}

/// Write `series` as CSV: header `x,<col>,...`, one record per line,
/// LF newlines, byte-deterministic for identical inputs.
pub fn emit_csv<W: std::io::Write>(series: &SweepSeries, mut w: W) -> Result<(), Error> {
    let mut out = String::from("x");
    for c in series.columns() {
        out.push(',');
        out.push_str(c);
    }
    out.push('\n');
    for (x, values) in series.rows() {
        out.push_str(&fmt_value(*x));
        for v in values {
            out.push(',');
            out.push_str(&fmt_value(*v));
        }
        out.push('\n');
    }
    w.write_all(out.as_bytes())?;
    Ok(())
}

/// Evaluate `n` sweep points in parallel, gathering in input order.
fn collect_points<F>(n: usize, point: F) -> Result<Vec<(f64, Vec<f64>)>, Error>
where
    F: Fn(usize) -> Result<(f64, Vec<f64>), Error> + Sync + Send,
{
    (0..n).into_par_iter().map(point).collect()
}

fn series_from_points(
    kind: SweepKind,
    columns: &[&str],
    points: Vec<(f64, Vec<f64>)>,
) -> Result<SweepSeries, Error> {
    let mut series = SweepSeries::new(kind, columns);
    for (x, values) in points {
        series.push(x, values)?;
    }
    Ok(series)
}

/// Rate ratios versus Raman coupling at fixed detuning (the condensate is
/// re-seated at the band minimum for every Ω).
pub fn sweep_omega(
    channel: &ChannelSpec,
    omega_min: f64,
    omega_max: f64,
    n: usize,
    delta: f64,
    epsilon: f64,
) -> Result<SweepSeries, Error> {
    DressedParams::new(omega_min, delta, 0.0)
        .with_epsilon(epsilon)
        .validated()?;
    DressedParams::new(omega_max, delta, 0.0)
        .with_epsilon(epsilon)
        .validated()?;
    if n < 2 || omega_min >= omega_max {
        return Err(Error::BadGrid);
    }
    let channel = *channel;
    let points = collect_points(n, |i| {
        let omega = grid_point(omega_min, omega_max, n, i);
        let (q_star, _) = find_band_minimum(omega, delta, epsilon)?;
        let p = DressedParams::new(omega, delta, q_star).with_epsilon(epsilon);
        let (_, amps) = ground_state(&p)?;
        let r = rate_ratio(&amps, &channel)?;
        Ok((
            omega,
            vec![r.with_interference, r.without_interference, r.cross_term],
        ))
    })?;
    series_from_points(SweepKind::OmegaSweep, &["with", "without", "cross"], points)
}

/// Rate ratios versus detuning at fixed Raman coupling; the band minimum
/// is recomputed for every δ and reported alongside the ratios.
pub fn sweep_delta(
    channel: &ChannelSpec,
    delta_min: f64,
    delta_max: f64,
    n: usize,
    omega: f64,
    epsilon: f64,
) -> Result<SweepSeries, Error> {
    DressedParams::new(omega, delta_min, 0.0)
        .with_epsilon(epsilon)
        .validated()?;
    DressedParams::new(omega, delta_max, 0.0)
        .with_epsilon(epsilon)
        .validated()?;
    if n < 2 || delta_min >= delta_max {
        return Err(Error::BadGrid);
    }
    let channel = *channel;
    let points = collect_points(n, |i| {
        let delta = grid_point(delta_min, delta_max, n, i);
        let (q_star, _) = find_band_minimum(omega, delta, epsilon)?;
        let p = DressedParams::new(omega, delta, q_star).with_epsilon(epsilon);
        let (_, amps) = ground_state(&p)?;
        let r = rate_ratio(&amps, &channel)?;
        Ok((
            delta,
            vec![
                r.with_interference,
                r.without_interference,
                r.cross_term,
                q_star,
            ],
        ))
    })?;
    series_from_points(
        SweepKind::DeltaSweep,
        &["with", "without", "cross", "q_star"],
        points,
    )
}

/// RF rate curve on a uniform θ grid over [0, 2π].
pub fn sweep_theta(channel: &ChannelSpec, n: usize) -> Result<SweepSeries, Error> {
    if n < 2 {
        return Err(Error::BadGrid);
    }
    let thetas: Vec<f64> = (0..n)
        .map(|i| grid_point(0.0, 2.0 * std::f64::consts::PI, n, i))
        .collect();
    rf_rate_curve(channel, &thetas)
}

/// Lowest-band samples as a series (x = q, one `energy` column).
pub fn band_scan_series(
    omega: f64,
    delta: f64,
    epsilon: f64,
    q_min: f64,
    q_max: f64,
    n: usize,
) -> Result<SweepSeries, Error> {
    let pts = scan_band(omega, delta, epsilon, q_min, q_max, n)?;
    let mut series = SweepSeries::new(SweepKind::BandScan, &["energy"]);
    for p in pts {
        series.push(p.q, vec![p.energy])?;
    }
    Ok(series)
}
