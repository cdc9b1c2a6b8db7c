//! Empirical attainment surfaces, hypervolume traces and uncertainty-band
//! plots for repeated runs of bi-objective optimizers.
//!
//! The typical pipeline reads a [`RunTensor`] of `S` runs × `N` evaluations ×
//! 2 objectives, computes a [`SurfaceStack`] for a few attainment levels (and
//! optionally an [`HvTraceSet`]), writes them through [`dataio`] and draws
//! SVG figures with [`render`].
//!
//! ```
//! use eafkit::{empirical_attainment_surfaces, LevelSpec, RunTensor, TransformSpec};
//!
//! let costs = RunTensor::from_pairs(&[
//!     vec![[1.0, 3.0], [3.0, 1.0]],
//!     vec![[2.0, 2.0], [2.0, 2.0]],
//! ])?;
//! let stack = empirical_attainment_surfaces(
//!     &costs,
//!     &LevelSpec::new(vec![1, 2])?,
//!     &TransformSpec::identity(),
//! )?;
//! assert_eq!(stack.finite_points(1), vec![[2.0, 3.0], [3.0, 2.0]]);
//! # Ok::<(), eafkit::Error>(())
//! ```

pub mod attainment;
pub mod cli;
pub mod dataio;
pub mod error;
pub mod hypervolume;
pub mod pareto;
pub mod render;
pub mod synth;
pub mod tensor;

pub use attainment::{
    apply_transform, attainment_fraction, empirical_attainment_surfaces, per_run_attainment_value,
    LevelSpec, SurfaceStack, TransformSpec,
};
pub use dataio::{DataFormat, RunArchive};
pub use error::{Error, Result};
pub use hypervolume::{
    hv_over_time, hypervolume_2d, normalized_hypervolume_2d, BandKind, HvConfig, HvTraceSet,
};
pub use pareto::{
    dominates, nondominated_filter, nondominated_pairwise, pareto_front_2d, set_attains,
    weakly_dominates, ObjectivePoint, ObjectiveSet,
};
pub use render::{PlotSpec, SeriesStyle};
pub use tensor::RunTensor;
