//! Pareto dominance checks and nondominated filtering.
//!
//! Run with `cargo run --example dominance`.

use eafkit::{
    dominates, nondominated_filter, set_attains, weakly_dominates, ObjectivePoint, ObjectiveSet,
};

fn main() -> eafkit::Result<()> {
    let a = ObjectivePoint::try_from([1.0, 2.0])?;
    let b = ObjectivePoint::try_from([1.0, 3.0])?;
    let c = ObjectivePoint::try_from([2.0, 1.0])?;
    println!(
        "{a:?} weakly dominates {b:?}: {}",
        weakly_dominates(&a, &b)?
    );
    println!("{a:?} dominates {b:?}: {}", dominates(&a, &b)?);
    println!(
        "{a:?} and {c:?} are incomparable: {}",
        !dominates(&a, &c)? && !dominates(&c, &a)?
    );

    let observed = ObjectiveSet::from_pairs(&[
        [1.0, 3.0],
        [2.0, 2.0],
        [3.0, 1.0],
        [2.0, 3.0],
        [3.0, 3.0],
        [2.0, 2.0],
    ])?;
    let front = nondominated_filter(&observed);
    println!(
        "front of {} observations: {:?}",
        observed.len(),
        front.to_pairs()?
    );

    let target = ObjectivePoint::try_from([2.5, 2.5])?;
    println!(
        "front attains {target:?}: {}",
        set_attains(&front, &target)?
    );

    let three = ObjectiveSet::from_rows(&[
        vec![1.0, 2.0, 3.0],
        vec![2.0, 1.0, 3.0],
        vec![2.0, 2.0, 4.0],
    ])?;
    println!(
        "three-objective front: {} of {} points",
        nondominated_filter(&three).len(),
        three.len()
    );
    Ok(())
}
