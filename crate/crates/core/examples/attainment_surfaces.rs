//! Empirical attainment surfaces of a handful of runs, printed as staircases.
//!
//! Run with `cargo run --example attainment_surfaces`.

use eafkit::{attainment_fraction, empirical_attainment_surfaces, nondominated_filter};
use eafkit::{LevelSpec, ObjectivePoint, ObjectiveSet, RunTensor, TransformSpec};

fn main() -> eafkit::Result<()> {
    let runs = vec![
        vec![[1.0, 3.0], [3.0, 1.0], [2.5, 2.5]],
        vec![[2.0, 2.0], [4.0, 0.5], [2.0, 2.0]],
        vec![[0.5, 4.0], [1.5, 2.5], [3.0, 3.0]],
    ];
    let costs = RunTensor::from_pairs(&runs)?;
    let stack = empirical_attainment_surfaces(
        &costs,
        &LevelSpec::new(vec![1, 2, 3])?,
        &TransformSpec::identity(),
    )?;
    stack.check_invariants()?;

    println!("grid: {:?}", stack.grid());
    for (k, level) in stack.levels().levels().iter().enumerate() {
        println!(
            "level {level}/{}: {:?}",
            stack.n_runs(),
            stack.finite_points(k)
        );
    }

    let fronts: Vec<ObjectiveSet> = runs
        .iter()
        .map(|r| ObjectiveSet::from_pairs(r).map(|s| nondominated_filter(&s)))
        .collect::<eafkit::Result<_>>()?;
    let y = ObjectivePoint::try_from([2.0, 2.5])?;
    println!(
        "fraction of runs attaining {y:?}: {}",
        attainment_fraction(&fronts, &y)?
    );

    // Maximizing the second objective: pass raw values, flag the index.
    let profit: Vec<Vec<[f64; 2]>> = runs
        .iter()
        .map(|r| r.iter().map(|p| [p[0], -p[1]]).collect())
        .collect();
    let maxed = empirical_attainment_surfaces(
        &RunTensor::from_pairs(&profit)?,
        &LevelSpec::new(vec![2])?,
        &TransformSpec::identity().with_maximize(1),
    )?;
    println!(
        "median surface with objective 1 maximized: {:?}",
        maxed.finite_points(0)
    );
    Ok(())
}
