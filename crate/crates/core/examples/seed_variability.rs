//! End-to-end comparison of two optimizer configurations over many seeds:
//! synthetic runs, stored archives, attainment bands for both, and one figure.
//!
//! Run with `cargo run --example seed_variability -- [output-dir]`.

use std::path::PathBuf;

use eafkit::dataio::{read_runs, write_runs, write_surfaces};
use eafkit::render::plot_multiple_surfaces_with_band;
use eafkit::synth::{generate, SynthConfig};
use eafkit::{empirical_attainment_surfaces, DataFormat, LevelSpec, PlotSpec, TransformSpec};

fn main() -> eafkit::Result<()> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let levels = LevelSpec::new(vec![12, 25, 37])?;
    let mut stacks = Vec::new();
    for (name, n_samples) in [("short", 10), ("long", 40)] {
        let archive = generate(&SynthConfig {
            seed: 0,
            n_runs: 50,
            n_samples,
            dim: 3,
        })?;
        let runs_path = out.join(format!("{name}_runs.csv"));
        write_runs(&archive, &runs_path, DataFormat::Csv)?;
        let costs = read_runs(&runs_path, DataFormat::Csv)?.costs;
        let stack = empirical_attainment_surfaces(&costs, &levels, &TransformSpec::identity())?;
        write_surfaces(
            &stack,
            &out.join(format!("{name}_surfaces.json")),
            DataFormat::Json,
        )?;
        println!(
            "{name}: {} points on the median surface",
            stack.finite_points(1).len()
        );
        stacks.push(stack);
    }
    let spec =
        PlotSpec::from_colors_labels(&["orange", "purple"], &["10 evaluations", "40 evaluations"])?
            .title("Attainment bands over 50 seeds");
    let path = out.join("comparison.svg");
    plot_multiple_surfaces_with_band(&stacks, &spec, &path)?;
    println!("wrote {}", path.display());
    Ok(())
}
