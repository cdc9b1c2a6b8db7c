//! Quartile attainment surfaces drawn as a band plot and as three step lines.
//!
//! Run with `cargo run --example band_plot -- [output-dir]`.

use std::path::PathBuf;

use eafkit::render::{plot_multiple_surfaces, plot_surface_with_band, AxisSpec, LineStyle};
use eafkit::synth::{generate, SynthConfig};
use eafkit::{empirical_attainment_surfaces, LevelSpec, PlotSpec, TransformSpec};

fn main() -> eafkit::Result<()> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let archive = generate(&SynthConfig {
        seed: 0,
        n_runs: 50,
        n_samples: 20,
        dim: 3,
    })?;
    let levels = LevelSpec::quartiles(archive.costs.n_runs())?;
    let stack = empirical_attainment_surfaces(&archive.costs, &levels, &TransformSpec::identity())?;

    let band = PlotSpec::from_colors_labels(&["red"], &["Random search"])?
        .title("Random search, 50 seeds")
        .x_axis(AxisSpec {
            label: Some("f1".into()),
            ..AxisSpec::default()
        })
        .y_axis(AxisSpec {
            label: Some("f2".into()),
            ..AxisSpec::default()
        });
    let band_path = out.join("band.svg");
    plot_surface_with_band(&stack, &band, &band_path)?;

    let mut lines =
        PlotSpec::from_colors_labels(&["blue", "black", "blue"], &["25%", "50%", "75%"])?.y_axis(
            AxisSpec {
                log: true,
                ..AxisSpec::default()
            },
        );
    lines.series[0] = lines.series[0].clone().line_style(LineStyle::Dashed);
    lines.series[2] = lines.series[2].clone().line_style(LineStyle::Dashed);
    let lines_path = out.join("surfaces.svg");
    plot_multiple_surfaces(&stack, &lines, &lines_path)?;

    println!(
        "levels {:?}: wrote {} and {}",
        levels.levels(),
        band_path.display(),
        lines_path.display()
    );
    Ok(())
}
