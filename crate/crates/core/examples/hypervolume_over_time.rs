//! Hypervolume of each evaluation prefix, averaged over runs, with a band.
//!
//! Run with `cargo run --example hypervolume_over_time -- [output-dir]`.

use std::path::PathBuf;

use eafkit::render::plot_hv_with_band;
use eafkit::synth::{generate, SynthConfig};
use eafkit::{
    hv_over_time, hypervolume_2d, BandKind, HvConfig, ObjectivePoint, ObjectiveSet, PlotSpec,
};

fn main() -> eafkit::Result<()> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let reference = ObjectivePoint::try_from([4.0, 4.0])?;
    let front = ObjectiveSet::from_pairs(&[[1.0, 3.0], [2.0, 2.0], [3.0, 1.0]])?;
    println!(
        "staircase area against {reference:?}: {}",
        hypervolume_2d(&front, &reference)?
    );

    let reference = ObjectivePoint::try_from([75.0, 75.0])?;
    let truth = ObjectiveSet::from_pairs(&[[0.0, 12.0], [3.0, 3.0], [12.0, 0.0]])?;
    let mut sets = Vec::new();
    for (seed, dim) in [(0, 2), (0, 3)] {
        let archive = generate(&SynthConfig {
            seed,
            n_runs: 20,
            n_samples: 40,
            dim,
        })?;
        let config = HvConfig::new(&reference)?
            .with_true_front(&truth)?
            .with_band(BandKind::StandardError);
        let traces = hv_over_time(&archive.costs, &config, true)?;
        let last = traces.n_evals() - 1;
        println!(
            "dim {dim}: normalized HV after {} evaluations = {:.4} ± {:.4}",
            traces.n_evals(),
            traces.center()[last],
            traces.band_halfwidth()[last]
        );
        sets.push(traces);
    }
    let spec = PlotSpec::from_colors_labels(&["red", "blue"], &["2 variables", "3 variables"])?
        .title("Normalized hypervolume");
    let path = out.join("hypervolume.svg");
    plot_hv_with_band(&sets, &spec, &path)?;
    println!("wrote {}", path.display());
    Ok(())
}
