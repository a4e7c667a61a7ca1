//! `pa` — dressed-state photoassociation rate ratios from the command line.
//!
//! Exit codes: 0 success, 2 validation error, 3 undefined ratio
//! (zero bare channel), 4 I/O failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pa_core::band::find_band_minimum;
use pa_core::channels::{cg_table, rate_ratio};
use pa_core::dressed::ground_state;
use pa_core::error::Error;
use pa_core::sweep::{
    band_scan_series, emit_csv, fmt_value, sweep_delta, sweep_omega, sweep_theta, SweepKind,
    SweepSeries,
};
use pa_core::types::{ChannelSpec, DressedParams, SpinorAmplitudes};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ChannelArg {
    /// |F=0, m_F=0> (destructive interference)
    #[value(name = "F0")]
    F0,
    /// |F=2, m_F=0> (constructive interference)
    #[value(name = "F2")]
    F2,
}

impl ChannelArg {
    fn spec(self) -> ChannelSpec {
        match self {
            ChannelArg::F0 => cg_table(0).expect("F = 0 is supported"),
            ChannelArg::F2 => cg_table(2).expect("F = 2 is supported"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pa",
    version,
    about = "Photoassociation rate ratios of a Raman-dressed spin-1 BEC (recoil units)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Prefix the output with a `#` comment line documenting units
    #[arg(long, global = true)]
    units_comment: bool,
    /// Drop the interference cross-term column from the output
    #[arg(long, global = true)]
    no_interference_column: bool,
    /// Write a gnuplot script for the CSV to this path (requires --out)
    #[arg(long, global = true, value_name = "PATH")]
    plot_script: Option<PathBuf>,
    /// Worker threads for sweep evaluation (default: one per CPU)
    #[arg(long, global = true, value_name = "N",
          value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dressed ground state at fixed parameters
    Ground {
        /// Raman coupling in E_r
        #[arg(long)]
        omega: f64,
        /// Detuning in E_r
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        delta: f64,
        /// Quadratic Zeeman shift in E_r
        #[arg(long, default_value_t = DressedParams::DEFAULT_EPSILON,
              allow_hyphen_values = true)]
        epsilon: f64,
        /// Quasimomentum in k_r
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        q: f64,
    },
    /// Locate the minimum of the lowest band
    BandMin {
        #[arg(long)]
        omega: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long, default_value_t = DressedParams::DEFAULT_EPSILON,
              allow_hyphen_values = true)]
        epsilon: f64,
    },
    /// Sample the lowest band over quasimomentum
    BandScan {
        #[arg(long)]
        omega: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long, default_value_t = DressedParams::DEFAULT_EPSILON,
              allow_hyphen_values = true)]
        epsilon: f64,
        #[arg(long, default_value_t = -3.0, allow_hyphen_values = true)]
        q_min: f64,
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        q_max: f64,
        #[arg(long, default_value_t = 601)]
        points: usize,
    },
    /// Rate ratios versus Raman coupling (band minimum re-solved per point)
    SweepOmega {
        #[arg(long, value_enum)]
        channel: ChannelArg,
        #[arg(long, default_value_t = 0.0)]
        omega_min: f64,
        #[arg(long, default_value_t = 15.0)]
        omega_max: f64,
        #[arg(long, default_value_t = 301)]
        points: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long, default_value_t = DressedParams::DEFAULT_EPSILON,
              allow_hyphen_values = true)]
        epsilon: f64,
    },
    /// Rate ratios versus detuning at fixed coupling
    SweepDelta {
        #[arg(long, value_enum)]
        channel: ChannelArg,
        #[arg(long, default_value_t = -3.0, allow_hyphen_values = true)]
        delta_min: f64,
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        delta_max: f64,
        #[arg(long, default_value_t = 301)]
        points: usize,
        #[arg(long, default_value_t = 5.4)]
        omega: f64,
        #[arg(long, default_value_t = DressedParams::DEFAULT_EPSILON,
              allow_hyphen_values = true)]
        epsilon: f64,
    },
    /// RF rate ratios and populations versus rotation angle over [0, 2pi]
    SweepTheta {
        #[arg(long, value_enum)]
        channel: ChannelArg,
        #[arg(long, default_value_t = 361)]
        points: usize,
    },
    /// Rate ratios for explicit spinor amplitudes
    Ratio {
        #[arg(long, value_enum)]
        channel: ChannelArg,
        #[arg(long, allow_hyphen_values = true)]
        c_m1: f64,
        #[arg(long, allow_hyphen_values = true)]
        c_0: f64,
        #[arg(long, allow_hyphen_values = true)]
        c_p1: f64,
        /// Rescale the amplitudes to unit norm before use
        #[arg(long)]
        normalize: bool,
    },
}

enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Usage(_) => 2,
        CliError::Core(Error::Io(_)) => 4,
        CliError::Core(Error::ZeroBareChannel) => 3,
        CliError::Core(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match cli.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n as usize)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))?;
            pool.install(|| execute(cli))
        }
        None => execute(cli),
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Ground {
            omega,
            delta,
            epsilon,
            q,
        } => {
            let p = DressedParams::new(*omega, *delta, *q).with_epsilon(*epsilon);
            let (energy, amps) = ground_state(&p)?;
            let row = [energy, amps.c_m1(), amps.c_0(), amps.c_p1()];
            write_row(
                cli,
                "# energy [E_r]; amplitudes dimensionless",
                &["energy", "c_m1", "c_0", "c_p1"],
                &row,
            )
        }
        Command::BandMin {
            omega,
            delta,
            epsilon,
        } => {
            let (q_star, energy) = find_band_minimum(*omega, *delta, *epsilon)?;
            write_row(
                cli,
                "# q_star [k_r]; energy [E_r]",
                &["q_star", "energy"],
                &[q_star, energy],
            )
        }
        Command::BandScan {
            omega,
            delta,
            epsilon,
            q_min,
            q_max,
            points,
        } => {
            let series = band_scan_series(*omega, *delta, *epsilon, *q_min, *q_max, *points)?;
            write_series(cli, series)
        }
        Command::SweepOmega {
            channel,
            omega_min,
            omega_max,
            points,
            delta,
            epsilon,
        } => {
            let series = sweep_omega(
                &channel.spec(),
                *omega_min,
                *omega_max,
                *points,
                *delta,
                *epsilon,
            )?;
            write_series(cli, series)
        }
        Command::SweepDelta {
            channel,
            delta_min,
            delta_max,
            points,
            omega,
            epsilon,
        } => {
            let series = sweep_delta(
                &channel.spec(),
                *delta_min,
                *delta_max,
                *points,
                *omega,
                *epsilon,
            )?;
            write_series(cli, series)
        }
        Command::SweepTheta { channel, points } => {
            let series = sweep_theta(&channel.spec(), *points)?;
            write_series(cli, series)
        }
        Command::Ratio {
            channel,
            c_m1,
            c_0,
            c_p1,
            normalize,
        } => {
            let (mut a, mut b, mut c) = (*c_m1, *c_0, *c_p1);
            if *normalize {
                let n = (a * a + b * b + c * c).sqrt();
                if n <= 0.0 || !n.is_finite() {
                    return Err(CliError::Usage(
                        "cannot normalize amplitudes with zero or non-finite norm".into(),
                    ));
                }
                a /= n;
                b /= n;
                c /= n;
            }
            let amps = SpinorAmplitudes::new(a, b, c)?;
            let r = rate_ratio(&amps, &channel.spec())?;
            if cli.no_interference_column {
                write_row(
                    cli,
                    "# ratios dimensionless",
                    &["with", "without"],
                    &[r.with_interference, r.without_interference],
                )
            } else {
                write_row(
                    cli,
                    "# ratios dimensionless",
                    &["with", "without", "cross"],
                    &[r.with_interference, r.without_interference, r.cross_term],
                )
            }
        }
    }
}

fn units_comment(kind: SweepKind) -> &'static str {
    match kind {
        SweepKind::OmegaSweep => "# x = Raman coupling Omega_r [E_r]; ratios dimensionless",
        SweepKind::DeltaSweep => {
            "# x = detuning delta [E_r]; ratios dimensionless; q_star [k_r]"
        }
        SweepKind::ThetaSweep => {
            "# x = RF rotation angle theta_y [rad]; ratios and populations dimensionless"
        }
        SweepKind::BandScan => "# x = quasimomentum q [k_r]; energy [E_r]",
        SweepKind::Populations => {
            "# x = RF rotation angle theta_y [rad]; populations dimensionless"
        }
    }
}

fn write_series(cli: &Cli, mut series: SweepSeries) -> Result<(), CliError> {
    if cli.no_interference_column {
        series.drop_column("cross");
    }
    let mut bytes = Vec::new();
    if cli.units_comment {
        bytes.extend_from_slice(units_comment(series.kind()).as_bytes());
        bytes.push(b'\n');
    }
    emit_csv(&series, &mut bytes)?;
    if let Some(script_path) = &cli.plot_script {
        let Some(csv_path) = &cli.out else {
            return Err(CliError::Usage(
                "--plot-script needs --out so the script can reference the CSV".into(),
            ));
        };
        fs::write(script_path, plot_script(csv_path, &series))
            .map_err(|e| CliError::Core(Error::Io(e)))?;
    }
    write_output(cli, &bytes)
}

fn write_row(
    cli: &Cli,
    comment: &str,
    names: &[&str],
    values: &[f64],
) -> Result<(), CliError> {
    if cli.plot_script.is_some() {
        return Err(CliError::Usage(
            "--plot-script only applies to sweep and scan commands".into(),
        ));
    }
    let mut text = String::new();
    if cli.units_comment {
        text.push_str(comment);
        text.push('\n');
    }
    text.push_str(&names.join(","));
    text.push('\n');
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            text.push(',');
        }
        text.push_str(&fmt_value(*v));
    }
    text.push('\n');
    write_output(cli, text.as_bytes())
}

fn write_output(cli: &Cli, bytes: &[u8]) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => fs::write(path, bytes).map_err(|e| CliError::Core(Error::Io(e))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::Core(Error::Io(e))),
    }
}

fn plot_script(csv: &Path, series: &SweepSeries) -> String {
    let (xlabel, ylabel) = match series.kind() {
        SweepKind::OmegaSweep => ("Omega_r / E_r", "k_sup / k_00"),
        SweepKind::DeltaSweep => ("delta / E_r", "k_sup / k_00"),
        SweepKind::ThetaSweep => ("theta_y [rad]", "k_sup / k_00"),
        SweepKind::BandScan => ("q / k_r", "E / E_r"),
        SweepKind::Populations => ("theta_y [rad]", "population"),
    };
    let csv = csv.display();
    let mut s = String::new();
    s.push_str("# gnuplot script; run: gnuplot -p <this file>\n");
    s.push_str("set datafile separator ','\n");
    s.push_str("set key autotitle columnhead\n");
    s.push_str(&format!("set xlabel '{xlabel}'\n"));
    s.push_str(&format!("set ylabel '{ylabel}'\n"));
    s.push_str("plot ");
    for (k, _) in series.columns().iter().enumerate() {
        if k > 0 {
            s.push_str(", ");
        }
        if k == 0 {
            s.push_str(&format!("'{csv}' using 1:2 with lines"));
        } else {
            s.push_str(&format!("'' using 1:{} with lines", k + 2));
        }
    }
    s.push('\n');
    s
}
