//! `eafkit` command-line front end.
//!
//! ```text
//! eafkit eaf compute --runs runs.json --levels 12,25,37 --out surfs.json
//! eafkit eaf plot --surfs surfs.json --band --colors red --labels "Random search" --out band.svg
//! eafkit hv --runs runs.json --ref 75,1029 --out hv.csv [--plot hv.svg --colors red --labels A]
//! eafkit synth --seed 0 --n-runs 50 --n-samples 20 --dim 3 --out runs.json
//! ```
//!
//! Exit codes: 0 success, 1 invalid arguments, 2 I/O failure, 3 bad input data.
//! `EAFKIT_THREADS` caps the worker threads used for per-run computations.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use log::info;

use crate::attainment::{empirical_attainment_surfaces, LevelSpec, TransformSpec};
use crate::dataio::{self, DataFormat};
use crate::error::{Error, Result};
use crate::hypervolume::{hv_over_time, BandKind, HvConfig};
use crate::pareto::ObjectivePoint;
use crate::render::{self, AxisSpec, LineStyle, Marker, PlotSpec};
use crate::synth::{self, SynthConfig};

pub const THREADS_ENV: &str = "EAFKIT_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "eafkit",
    version,
    about = "Empirical attainment surfaces and hypervolume traces for bi-objective runs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Empirical attainment surfaces.
    #[command(subcommand)]
    Eaf(EafCommand),
    /// Hypervolume over the evaluation budget.
    Hv(HvArgs),
    /// Generate random-search runs on a convex bi-objective test function.
    Synth(SynthArgs),
}

#[derive(Debug, Subcommand)]
pub enum EafCommand {
    /// Compute attainment surfaces for the given levels.
    Compute(ComputeArgs),
    /// Plot a stored surface stack as SVG.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Run archive (.json or .csv).
    #[arg(long)]
    pub runs: PathBuf,
    /// Comma-separated, strictly increasing levels in [1, S].
    #[arg(long)]
    pub levels: String,
    /// Objectives (0-based) to maximize.
    #[arg(long, default_value = "")]
    pub maximize: String,
    /// Objectives (0-based) shown on a log scale.
    #[arg(long, default_value = "")]
    pub log: String,
    #[arg(long)]
    pub out: PathBuf,
    /// Output format; defaults to the output file extension.
    #[arg(long)]
    pub format: Option<String>,
}

#[derive(Debug, Args, Default)]
pub struct AxisArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x_max: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub y_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub y_max: Option<f64>,
    #[arg(long)]
    pub log_x: bool,
    #[arg(long)]
    pub log_y: bool,
    #[arg(long)]
    pub x_label: Option<String>,
    #[arg(long)]
    pub y_label: Option<String>,
    #[arg(long)]
    pub title: Option<String>,
    #[arg(long, default_value_t = 640)]
    pub width: u32,
    #[arg(long, default_value_t = 480)]
    pub height: u32,
    /// Comma-separated line styles (solid, dashed, dotted).
    #[arg(long)]
    pub linestyles: Option<String>,
    /// Comma-separated markers (none, circle, square).
    #[arg(long)]
    pub markers: Option<String>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Surface stack written by `eaf compute`.
    #[arg(long)]
    pub surfs: PathBuf,
    /// Draw a band between the first and third surface around the second.
    #[arg(long)]
    pub band: bool,
    #[arg(long)]
    pub colors: String,
    #[arg(long)]
    pub labels: String,
    #[command(flatten)]
    pub axes: AxisArgs,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct HvArgs {
    /// Comma-separated run archives; each becomes one trace set.
    #[arg(long)]
    pub runs: String,
    /// Reference point, e.g. `75,1029`.
    #[arg(long = "ref", allow_hyphen_values = true)]
    pub reference: String,
    #[arg(long)]
    pub normalize: bool,
    /// Known true Pareto front (JSON array of pairs or CSV `f1,f2`).
    #[arg(long)]
    pub true_pf: Option<PathBuf>,
    #[arg(long, default_value = "")]
    pub maximize: String,
    /// Band half-width: `stderr` (default) or `std`.
    #[arg(long, default_value = "stderr")]
    pub band_kind: String,
    /// Comma-separated trace outputs, one per runs file.
    #[arg(long)]
    pub out: Option<String>,
    #[arg(long)]
    pub format: Option<String>,
    /// SVG of center lines with bands.
    #[arg(long)]
    pub plot: Option<PathBuf>,
    #[arg(long)]
    pub colors: Option<String>,
    #[arg(long)]
    pub labels: Option<String>,
    #[command(flatten)]
    pub axes: AxisArgs,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 50, allow_hyphen_values = true)]
    pub n_runs: i64,
    #[arg(long, default_value_t = 20, allow_hyphen_values = true)]
    pub n_samples: i64,
    #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
    pub dim: i64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub format: Option<String>,
}

fn split_list(s: &str) -> Vec<String> {
    if s.trim().is_empty() {
        return Vec::new();
    }
    s.split(',').map(|f| f.trim().to_string()).collect()
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    split_list(s)
        .iter()
        .map(|f| {
            f.parse::<T>()
                .map_err(|_| Error::validation(format!("cannot parse {what} '{f}'")))
        })
        .collect()
}

fn parse_indices(s: &str, flag: &str) -> Result<Vec<usize>> {
    let idx: Vec<usize> = parse_list(s, &format!("{flag} index"))?;
    if let Some(bad) = idx.iter().find(|&&m| m >= 2) {
        return Err(Error::validation(format!(
            "{flag} index {bad} is out of range for two objectives"
        )));
    }
    Ok(idx)
}

fn output_format(explicit: Option<&str>, path: &Path) -> Result<DataFormat> {
    match explicit {
        Some(f) => f.parse(),
        None => Ok(DataFormat::from_path(path).unwrap_or(DataFormat::Json)),
    }
}

/// Format of an input file: its extension, else a peek at the first byte.
fn input_format(path: &Path) -> Result<DataFormat> {
    if let Some(f) = DataFormat::from_path(path) {
        return Ok(f);
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(match text.trim_start().chars().next() {
        Some('{') | Some('[') => DataFormat::Json,
        _ => DataFormat::Csv,
    })
}

fn plot_spec(colors: &str, labels: &str, axes: &AxisArgs) -> Result<PlotSpec> {
    let colors = split_list(colors);
    let labels = split_list(labels);
    if colors.is_empty() || labels.is_empty() {
        return Err(Error::validation("--colors and --labels are required"));
    }
    let mut spec = PlotSpec::from_colors_labels(&colors, &labels)?;
    if let Some(styles) = &axes.linestyles {
        let styles: Vec<LineStyle> = parse_list(styles, "line style")?;
        if styles.len() != spec.series.len() {
            return Err(Error::validation("need one line style per series"));
        }
        for (s, st) in spec.series.iter_mut().zip(styles) {
            s.line_style = st;
        }
    }
    if let Some(markers) = &axes.markers {
        let markers: Vec<Marker> = parse_list(markers, "marker")?;
        if markers.len() != spec.series.len() {
            return Err(Error::validation("need one marker per series"));
        }
        for (s, m) in spec.series.iter_mut().zip(markers) {
            s.marker = m;
        }
    }
    spec.x = AxisSpec {
        min: axes.x_min,
        max: axes.x_max,
        log: axes.log_x,
        label: axes.x_label.clone(),
    };
    spec.y = AxisSpec {
        min: axes.y_min,
        max: axes.y_max,
        log: axes.log_y,
        label: axes.y_label.clone(),
    };
    spec.title = axes.title.clone();
    spec.width = axes.width;
    spec.height = axes.height;
    Ok(spec)
}

fn cmd_eaf_compute(args: &ComputeArgs) -> Result<()> {
    let levels = LevelSpec::new(parse_list(&args.levels, "level")?)?;
    let transform = TransformSpec::new(
        parse_indices(&args.maximize, "--maximize")?,
        parse_indices(&args.log, "--log")?,
    );
    let out_format = output_format(args.format.as_deref(), &args.out)?;

    let archive = dataio::read_runs(&args.runs, input_format(&args.runs)?)?;
    let stack = empirical_attainment_surfaces(&archive.costs, &levels, &transform)?;
    info!(
        "computed {} surfaces over a grid of {} values",
        stack.len(),
        stack.grid().len()
    );
    dataio::write_surfaces(&stack, &args.out, out_format)
}

fn cmd_eaf_plot(args: &PlotArgs) -> Result<()> {
    let spec = plot_spec(&args.colors, &args.labels, &args.axes)?;
    if args.band && spec.series.len() != 1 {
        return Err(Error::validation(
            "--band draws a single series: pass one color and one label",
        ));
    }
    let stack = dataio::read_surfaces(&args.surfs, input_format(&args.surfs)?)?;
    if args.band {
        render::plot_surface_with_band(&stack, &spec, &args.out)
    } else {
        render::plot_multiple_surfaces(&stack, &spec, &args.out)
    }
}

fn cmd_hv(args: &HvArgs) -> Result<()> {
    let runs: Vec<PathBuf> = split_list(&args.runs)
        .into_iter()
        .map(PathBuf::from)
        .collect();
    if runs.is_empty() {
        return Err(Error::validation("--runs needs at least one file"));
    }
    let reference: Vec<f64> = parse_list(&args.reference, "reference coordinate")?;
    if reference.len() != 2 {
        return Err(Error::validation(format!(
            "--ref needs two comma-separated values, got {}",
            reference.len()
        )));
    }
    if args.normalize && args.true_pf.is_none() {
        return Err(Error::Config(
            "--normalize requires --true-pf with the true Pareto front".into(),
        ));
    }
    let band = BandKind::from_name(&args.band_kind).ok_or_else(|| {
        Error::validation(format!(
            "unknown --band-kind '{}' (expected stderr or std)",
            args.band_kind
        ))
    })?;
    let outs: Vec<PathBuf> = args
        .out
        .as_deref()
        .map(split_list)
        .unwrap_or_default()
        .into_iter()
        .map(PathBuf::from)
        .collect();
    if !outs.is_empty() && outs.len() != runs.len() {
        return Err(Error::validation(format!(
            "--out lists {} files for {} runs files",
            outs.len(),
            runs.len()
        )));
    }
    if outs.is_empty() && args.plot.is_none() {
        return Err(Error::validation("nothing to do: pass --out and/or --plot"));
    }
    let spec = match &args.plot {
        Some(_) => {
            let spec = plot_spec(
                args.colors.as_deref().unwrap_or(""),
                args.labels.as_deref().unwrap_or(""),
                &args.axes,
            )?;
            if spec.series.len() != runs.len() {
                return Err(Error::validation(format!(
                    "{} colors/labels for {} runs files",
                    spec.series.len(),
                    runs.len()
                )));
            }
            Some(spec)
        }
        None => None,
    };
    let out_formats = outs
        .iter()
        .map(|p| output_format(args.format.as_deref(), p))
        .collect::<Result<Vec<_>>>()?;
    let transform = TransformSpec::new(parse_indices(&args.maximize, "--maximize")?, []);

    let mut config = HvConfig::new(&ObjectivePoint::new(reference)?)?
        .with_transform(transform)?
        .with_band(band);
    if let Some(pf) = &args.true_pf {
        config = config.with_true_front(&dataio::read_points(pf, input_format(pf)?)?)?;
    }
    let mut all = Vec::with_capacity(runs.len());
    for path in &runs {
        let archive = dataio::read_runs(path, input_format(path)?)?;
        all.push(hv_over_time(&archive.costs, &config, args.normalize)?);
    }
    for ((traces, path), format) in all.iter().zip(&outs).zip(out_formats) {
        dataio::write_hv_traces(traces, path, format)?;
    }
    if let (Some(path), Some(spec)) = (&args.plot, spec) {
        render::plot_hv_with_band(&all, &spec, path)?;
    }
    Ok(())
}

fn cmd_synth(args: &SynthArgs) -> Result<()> {
    let positive = |v: i64, name: &str| {
        usize::try_from(v)
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| Error::validation(format!("--{name} must be positive, got {v}")))
    };
    let config = SynthConfig {
        seed: args.seed,
        n_runs: positive(args.n_runs, "n-runs")?,
        n_samples: positive(args.n_samples, "n-samples")?,
        dim: positive(args.dim, "dim")?,
    };
    let format = output_format(args.format.as_deref(), &args.out)?;
    dataio::write_runs(&synth::generate(&config)?, &args.out, format)
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Error::validation(format!(
            "{THREADS_ENV} must be a positive integer, got '{raw}'"
        ))
    })?;
    // A global pool can only be installed once per process; later calls keep the first.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<()> {
    configure_threads()?;
    match &cli.command {
        Command::Eaf(EafCommand::Compute(args)) => cmd_eaf_compute(args),
        Command::Eaf(EafCommand::Plot(args)) => cmd_eaf_plot(args),
        Command::Hv(args) => cmd_hv(args),
        Command::Synth(args) => cmd_synth(args),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Errors and warnings go to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .try_init();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("eafkit: {e}");
            e.exit_code()
        }
    }
}
