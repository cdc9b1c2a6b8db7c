//! Writing and reading runs, surfaces and hypervolume traces as JSON and CSV.
//!
//! Run with `cargo run --example data_roundtrip`.

use eafkit::dataio::{
    decode_runs, decode_surfaces, encode_hv_traces, encode_runs, encode_surfaces,
};
use eafkit::{
    empirical_attainment_surfaces, BandKind, DataFormat, HvTraceSet, LevelSpec, RunArchive,
    RunTensor, TransformSpec,
};

fn main() -> eafkit::Result<()> {
    let costs =
        RunTensor::from_pairs(&[vec![[1.0, 3.0], [3.0, 1.0]], vec![[2.0, 2.0], [0.1, 7.3]]])?;
    let archive = RunArchive::new(costs).with_metadata("optimizer", "random search");

    for format in [DataFormat::Json, DataFormat::Csv] {
        let text = encode_runs(&archive, format)?;
        println!("--- runs as {format:?} ---\n{text}");
        assert_eq!(decode_runs(&text, format)?, archive);
    }

    let stack = empirical_attainment_surfaces(
        &archive.costs,
        &LevelSpec::new(vec![1, 2])?,
        &TransformSpec::identity(),
    )?;
    let text = encode_surfaces(&stack, DataFormat::Csv)?;
    println!("--- surfaces as CSV (infinite sentinels kept) ---\n{text}");
    assert_eq!(decode_surfaces(&text, DataFormat::Csv)?, stack);

    let traces = HvTraceSet::from_traces(
        vec![vec![1.0, 3.0], vec![3.0, 5.0]],
        BandKind::StandardError,
    )?;
    println!(
        "--- hypervolume traces as CSV ---\n{}",
        encode_hv_traces(&traces, DataFormat::Csv)?
    );
    Ok(())
}
