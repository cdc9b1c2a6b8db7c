//! Empirical attainment function and level-L attainment surfaces for
//! bi-objective runs.
//!
//! For each run, the attainment step function `x ↦ min{y₂ : (y₁, y₂) ∈ front, y₁ ≤ x}`
//! is evaluated on the shared grid of first-objective values. The level-L
//! surface at `x` is the L-th smallest of those S values, which is exactly the
//! lowest `y₂` that at least L runs attain at `x`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pareto::{pareto_front_2d, set_attains, ObjectivePoint, ObjectiveSet};
use crate::tensor::RunTensor;

/// Objectives to maximize and objectives to show on a log scale.
///
/// Internally every objective is minimized; maximized objectives are negated
/// on the way in and negated back on the way out. Log-scaled objectives are
/// validated (strictly positive) and carried along for the renderer, but the
/// surface geometry is computed in linear space.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransformSpec {
    maximize: BTreeSet<usize>,
    log: BTreeSet<usize>,
}

impl TransformSpec {
    pub fn new(
        maximize: impl IntoIterator<Item = usize>,
        log: impl IntoIterator<Item = usize>,
    ) -> Self {
        TransformSpec {
            maximize: maximize.into_iter().collect(),
            log: log.into_iter().collect(),
        }
    }

    pub fn identity() -> Self {
        TransformSpec::default()
    }

    pub fn with_maximize(mut self, objective: usize) -> Self {
        self.maximize.insert(objective);
        self
    }

    pub fn with_log(mut self, objective: usize) -> Self {
        self.log.insert(objective);
        self
    }

    pub fn maximize_indices(&self) -> Vec<usize> {
        self.maximize.iter().copied().collect()
    }

    pub fn log_indices(&self) -> Vec<usize> {
        self.log.iter().copied().collect()
    }

    pub fn is_maximized(&self, objective: usize) -> bool {
        self.maximize.contains(&objective)
    }

    pub fn is_log(&self, objective: usize) -> bool {
        self.log.contains(&objective)
    }

    pub fn is_identity(&self) -> bool {
        self.maximize.is_empty() && self.log.is_empty()
    }

    pub(crate) fn check_indices(&self, objectives: usize) -> Result<()> {
        for (kind, set) in [("maximize", &self.maximize), ("log", &self.log)] {
            if let Some(&bad) = set.iter().find(|&&m| m >= objectives) {
                return Err(Error::validation(format!(
                    "{kind} index {bad} is out of range for {objectives} objectives"
                )));
            }
        }
        Ok(())
    }

    /// Sign that maps an objective between caller and internal orientation.
    pub(crate) fn sign(&self, objective: usize) -> f64 {
        if self.is_maximized(objective) {
            -1.0
        } else {
            1.0
        }
    }
}

/// Strictly increasing attainment levels `L₁ < … < L_K`, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSpec(Vec<usize>);

impl LevelSpec {
    pub fn new(levels: Vec<usize>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::validation("at least one level is required"));
        }
        if let Some(&bad) = levels.iter().find(|&&l| l == 0) {
            return Err(Error::validation(format!("level {bad} is below 1")));
        }
        if let Some(w) = levels.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::validation(format!(
                "levels must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(LevelSpec(levels))
    }

    /// `[⌈S/4⌉, ⌈S/2⌉, ⌈3S/4⌉]`, the usual lower/center/upper band, with
    /// duplicates removed for very small S.
    pub fn quartiles(runs: usize) -> Result<Self> {
        let mut levels: Vec<usize> = [1, 2, 3]
            .iter()
            .map(|q| (q * runs).div_ceil(4).max(1))
            .collect();
        levels.dedup();
        LevelSpec::new(levels)
    }

    pub fn levels(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check_runs(&self, runs: usize) -> Result<()> {
        if let Some(&bad) = self.0.iter().find(|&&l| l > runs) {
            return Err(Error::validation(format!(
                "level {bad} exceeds the number of runs ({runs})"
            )));
        }
        Ok(())
    }
}

/// K aligned attainment surfaces over the shared first-objective grid.
///
/// `surfaces[k]` has one point per grid value. Points are stored in the
/// caller's orientation (maximized objectives carry their original sign).
/// Leading rows that no L_k runs attain have second coordinate +∞ (−∞ when
/// that objective is maximized) and are padded onto the first attained
/// first-objective value, so every surface starts with a vertical ray above
/// its edge point.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceStack {
    grid: Vec<f64>,
    surfaces: Vec<Vec<[f64; 2]>>,
    levels: LevelSpec,
    transform: TransformSpec,
    n_runs: usize,
}

impl SurfaceStack {
    /// Assembles a stack from stored parts and validates every invariant.
    pub fn from_parts(
        grid: Vec<f64>,
        surfaces: Vec<Vec<[f64; 2]>>,
        levels: LevelSpec,
        transform: TransformSpec,
        n_runs: usize,
    ) -> Result<Self> {
        let stack = SurfaceStack {
            grid,
            surfaces,
            levels,
            transform,
            n_runs,
        };
        stack.check_invariants()?;
        Ok(stack)
    }

    /// First-objective grid in caller orientation, including both infinities.
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn surfaces(&self) -> &[Vec<[f64; 2]>] {
        &self.surfaces
    }

    pub fn surface(&self, k: usize) -> &[[f64; 2]] {
        &self.surfaces[k]
    }

    pub fn levels(&self) -> &LevelSpec {
        &self.levels
    }

    pub fn transform(&self) -> &TransformSpec {
        &self.transform
    }

    pub fn n_runs(&self) -> usize {
        self.n_runs
    }

    /// K.
    pub fn len(&self) -> usize {
        self.surfaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.surfaces.is_empty()
    }

    /// Surface `k` mapped into the internal minimize-all orientation.
    pub fn internal_surface(&self, k: usize) -> Vec<[f64; 2]> {
        let (s0, s1) = (self.transform.sign(0), self.transform.sign(1));
        self.surfaces[k]
            .iter()
            .map(|p| [s0 * p[0], s1 * p[1]])
            .collect()
    }

    /// The surface restricted to points with both coordinates finite.
    pub fn finite_points(&self, k: usize) -> Vec<[f64; 2]> {
        self.surfaces[k]
            .iter()
            .copied()
            .filter(|p| p[0].is_finite() && p[1].is_finite())
            .collect()
    }

    /// Checks shape, grid, staircase and nesting invariants in internal orientation.
    pub fn check_invariants(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::data(format!("invalid surface stack: {msg}")));
        if self.levels.len() != self.surfaces.len() {
            return bad(format!(
                "{} levels but {} surfaces",
                self.levels.len(),
                self.surfaces.len()
            ));
        }
        if self.n_runs == 0 {
            return bad("number of runs must be positive".into());
        }
        self.levels.check_runs(self.n_runs)?;
        self.transform.check_indices(2)?;

        let s0 = self.transform.sign(0);
        let grid: Vec<f64> = self.grid.iter().map(|x| s0 * x).collect();
        if grid.len() < 3 {
            return bad("grid needs both sentinels and at least one value".into());
        }
        if grid[0] != f64::NEG_INFINITY || grid[grid.len() - 1] != f64::INFINITY {
            return bad("grid must start at -inf and end at +inf".into());
        }
        if grid.iter().any(|x| x.is_nan()) {
            return bad("grid contains NaN".into());
        }
        if grid[1..grid.len() - 1].iter().any(|x| !x.is_finite()) {
            return bad("interior grid values must be finite".into());
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) {
            return bad("grid must be strictly increasing".into());
        }

        let internal: Vec<Vec<[f64; 2]>> =
            (0..self.len()).map(|k| self.internal_surface(k)).collect();
        for (k, surf) in internal.iter().enumerate() {
            if surf.len() != grid.len() {
                return bad(format!(
                    "surface {k} has {} points, grid has {}",
                    surf.len(),
                    grid.len()
                ));
            }
            if surf.iter().any(|p| p[0].is_nan() || p[1].is_nan()) {
                return bad(format!("surface {k} contains NaN"));
            }
            let head = surf.iter().take_while(|p| p[1] == f64::INFINITY).count();
            if head == surf.len() {
                return bad(format!("surface {k} is never attained"));
            }
            let edge = surf[head][0];
            for (g, p) in surf.iter().enumerate() {
                let expected_x = if g < head { edge } else { grid[g] };
                if p[0] != expected_x {
                    return bad(format!(
                        "surface {k}, row {g}: first coordinate {} does not match grid value {expected_x}",
                        p[0]
                    ));
                }
                if g >= head && p[1] == f64::NEG_INFINITY {
                    return bad(format!("surface {k}, row {g}: second coordinate is -inf"));
                }
            }
            if surf.windows(2).any(|w| w[1][1] > w[0][1]) {
                return bad(format!("surface {k} is not a staircase"));
            }
        }
        for k in 1..internal.len() {
            let (lo, hi) = (&internal[k - 1], &internal[k]);
            if let Some(g) = (0..grid.len()).find(|&g| lo[g][1] > hi[g][1]) {
                return bad(format!(
                    "surfaces {} and {k} are not nested at grid row {g}",
                    k - 1
                ));
            }
        }
        Ok(())
    }
}

/// Fraction of fronts that weakly dominate `y`; always a multiple of `1/S`.
pub fn attainment_fraction(fronts: &[ObjectiveSet], y: &ObjectivePoint) -> Result<f64> {
    if fronts.is_empty() {
        return Err(Error::validation(
            "attainment fraction needs at least one front",
        ));
    }
    let mut hits = 0usize;
    for front in fronts {
        if set_attains(front, y)? {
            hits += 1;
        }
    }
    Ok(hits as f64 / fronts.len() as f64)
}

/// `min{y₂ : (y₁, y₂) ∈ front, y₁ ≤ x}`, or +∞ when nothing qualifies.
pub fn per_run_attainment_value(front: &ObjectiveSet, x: f64) -> Result<f64> {
    let pairs = front.to_pairs()?;
    Ok(pairs
        .iter()
        .filter(|p| p[0] <= x)
        .map(|p| p[1])
        .fold(f64::INFINITY, f64::min))
}

/// Negates maximized objectives after validating indices and log positivity.
///
/// The result is in the internal minimize-all orientation.
pub fn apply_transform(costs: &RunTensor, transform: &TransformSpec) -> Result<RunTensor> {
    let (runs, evals, m) = costs.shape();
    transform.check_indices(m)?;
    for &obj in &transform.log {
        for s in 0..runs {
            for n in 0..evals {
                let v = costs.row(s, n)[obj];
                if v <= 0.0 {
                    return Err(Error::data(format!(
                        "log-scaled objective {obj} has nonpositive value {v} at run {s}, row {n}"
                    )));
                }
            }
        }
    }
    Ok(costs.negated(&transform.maximize_indices()))
}

/// Per-run Pareto fronts of a bi-objective tensor in its current orientation.
pub(crate) fn run_fronts(costs: &RunTensor) -> Vec<Vec<[f64; 2]>> {
    (0..costs.n_runs())
        .into_par_iter()
        .map(|s| pareto_front_2d(&costs.run_pairs(s)))
        .collect()
}

/// Evaluates a sorted front's attainment step function on an ascending grid.
fn step_values(front: &[[f64; 2]], grid: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(grid.len());
    let mut j = 0;
    let mut current = f64::INFINITY;
    for &x in grid {
        while j < front.len() && front[j][0] <= x {
            current = front[j][1];
            j += 1;
        }
        out.push(current);
    }
    out
}

/// Computes the attainment surfaces of the requested levels.
///
/// `costs` holds raw evaluations (not pre-filtered fronts) in the caller's
/// orientation.
pub fn empirical_attainment_surfaces(
    costs: &RunTensor,
    levels: &LevelSpec,
    transform: &TransformSpec,
) -> Result<SurfaceStack> {
    costs.require_biobjective()?;
    let runs = costs.n_runs();
    levels.check_runs(runs)?;
    let internal = apply_transform(costs, transform)?;

    let fronts = run_fronts(&internal);
    let mut grid: Vec<f64> = fronts.iter().flatten().map(|p| p[0]).collect();
    grid.push(f64::NEG_INFINITY);
    grid.push(f64::INFINITY);
    grid.sort_by(f64::total_cmp);
    grid.dedup();

    let per_run: Vec<Vec<f64>> = fronts
        .par_iter()
        .map(|front| step_values(front, &grid))
        .collect();

    // Column g holds the S per-run values at grid[g], sorted ascending.
    let columns: Vec<Vec<f64>> = (0..grid.len())
        .into_par_iter()
        .map(|g| {
            let mut col: Vec<f64> = per_run.iter().map(|v| v[g]).collect();
            col.sort_by(f64::total_cmp);
            col
        })
        .collect();

    let (s0, s1) = (transform.sign(0), transform.sign(1));
    let surfaces = levels
        .levels()
        .iter()
        .map(|&level| {
            let mut surf: Vec<[f64; 2]> = grid
                .iter()
                .zip(&columns)
                .map(|(&x, col)| [x, col[level - 1]])
                .collect();
            let head = surf.iter().take_while(|p| p[1] == f64::INFINITY).count();
            let edge = surf[head][0];
            for p in &mut surf[..head] {
                p[0] = edge;
            }
            surf.into_iter().map(|p| [s0 * p[0], s1 * p[1]]).collect()
        })
        .collect();

    Ok(SurfaceStack {
        grid: grid.into_iter().map(|x| s0 * x).collect(),
        surfaces,
        levels: levels.clone(),
        transform: transform.clone(),
        n_runs: runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: f64 = f64::INFINITY;

    fn two_run_costs() -> RunTensor {
        RunTensor::from_pairs(&[vec![[1.0, 3.0], [3.0, 1.0]], vec![[2.0, 2.0], [2.0, 2.0]]])
            .unwrap()
    }

    fn fronts() -> Vec<ObjectiveSet> {
        vec![
            ObjectiveSet::from_rows(&[[1.0, 3.0], [3.0, 1.0]]).unwrap(),
            ObjectiveSet::from_rows(&[[2.0, 2.0]]).unwrap(),
        ]
    }

    fn pt(x: f64, y: f64) -> ObjectivePoint {
        ObjectivePoint::new(vec![x, y]).unwrap()
    }

    #[test]
    fn attainment_fraction_examples() {
        let f = fronts();
        assert_eq!(attainment_fraction(&f, &pt(2.0, 2.0)).unwrap(), 0.5);
        assert_eq!(attainment_fraction(&f, &pt(3.0, 3.0)).unwrap(), 1.0);
        assert_eq!(attainment_fraction(&f, &pt(0.0, 0.0)).unwrap(), 0.0);
        assert!(attainment_fraction(&[], &pt(0.0, 0.0)).is_err());
    }

    #[test]
    fn step_function_examples() {
        let front = &fronts()[0];
        assert_eq!(per_run_attainment_value(front, 2.0).unwrap(), 3.0);
        assert_eq!(per_run_attainment_value(front, 0.5).unwrap(), INF);
        assert_eq!(per_run_attainment_value(front, 3.0).unwrap(), 1.0);
    }

    #[test]
    fn level_one_surface() {
        let levels = LevelSpec::new(vec![1]).unwrap();
        let stack =
            empirical_attainment_surfaces(&two_run_costs(), &levels, &TransformSpec::identity())
                .unwrap();
        assert_eq!(stack.grid(), &[-INF, 1.0, 2.0, 3.0, INF]);
        assert_eq!(
            stack.surface(0),
            &[[1.0, INF], [1.0, 3.0], [2.0, 2.0], [3.0, 1.0], [INF, 1.0]]
        );
        stack.check_invariants().unwrap();
    }

    #[test]
    fn level_two_surface_is_padded_at_head() {
        let levels = LevelSpec::new(vec![2]).unwrap();
        let stack =
            empirical_attainment_surfaces(&two_run_costs(), &levels, &TransformSpec::identity())
                .unwrap();
        assert_eq!(
            stack.surface(0),
            &[[2.0, INF], [2.0, INF], [2.0, 3.0], [3.0, 2.0], [INF, 2.0]]
        );
        assert_eq!(stack.finite_points(0), vec![[2.0, 3.0], [3.0, 2.0]]);
    }

    #[test]
    fn single_run_reproduces_its_front() {
        let costs =
            RunTensor::from_pairs(&[vec![[4.0, 1.0], [1.0, 4.0], [2.0, 2.0], [3.0, 3.0]]]).unwrap();
        let stack = empirical_attainment_surfaces(
            &costs,
            &LevelSpec::new(vec![1]).unwrap(),
            &TransformSpec::identity(),
        )
        .unwrap();
        assert_eq!(
            stack.finite_points(0),
            vec![[1.0, 4.0], [2.0, 2.0], [4.0, 1.0]]
        );
    }

    #[test]
    fn maximized_objective_round_trips_sign() {
        let costs = RunTensor::from_pairs(&[vec![[1.0, 5.0]]]).unwrap();
        let t = TransformSpec::identity().with_maximize(1);
        let internal = apply_transform(&costs, &t).unwrap();
        assert_eq!(internal.row(0, 0), &[1.0, -5.0]);
        let stack =
            empirical_attainment_surfaces(&costs, &LevelSpec::new(vec![1]).unwrap(), &t).unwrap();
        assert_eq!(stack.finite_points(0), vec![[1.0, 5.0]]);
        assert_eq!(stack.surface(0)[0], [1.0, -INF]);
        stack.check_invariants().unwrap();
    }

    #[test]
    fn identity_transform_is_noop() {
        let costs = two_run_costs();
        assert_eq!(
            apply_transform(&costs, &TransformSpec::identity()).unwrap(),
            costs
        );
    }

    #[test]
    fn log_scale_rejects_nonpositive() {
        let costs = RunTensor::from_pairs(&[vec![[1.0, 2.0], [0.0, 3.0]]]).unwrap();
        let err = apply_transform(&costs, &TransformSpec::identity().with_log(0)).unwrap_err();
        assert!(matches!(err, Error::Data(ref m) if m.contains("run 0, row 1")));
        assert!(apply_transform(&costs, &TransformSpec::identity().with_log(1)).is_ok());
    }

    #[test]
    fn transform_index_out_of_range() {
        let err = apply_transform(
            &two_run_costs(),
            &TransformSpec::identity().with_maximize(2),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn level_validation() {
        assert!(LevelSpec::new(vec![0]).is_err());
        assert!(LevelSpec::new(vec![2, 2]).is_err());
        assert!(LevelSpec::new(vec![3, 1]).is_err());
        assert!(LevelSpec::new(vec![]).is_err());
        let levels = LevelSpec::new(vec![1, 3]).unwrap();
        let err =
            empirical_attainment_surfaces(&two_run_costs(), &levels, &TransformSpec::identity())
                .unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn quartile_levels() {
        assert_eq!(LevelSpec::quartiles(50).unwrap().levels(), &[13, 25, 38]);
        assert_eq!(LevelSpec::quartiles(4).unwrap().levels(), &[1, 2, 3]);
        assert_eq!(LevelSpec::quartiles(1).unwrap().levels(), &[1]);
    }

    #[test]
    fn three_objectives_unsupported() {
        let costs = RunTensor::new(1, 1, 3, vec![1.0, 2.0, 3.0]).unwrap();
        let err = empirical_attainment_surfaces(
            &costs,
            &LevelSpec::new(vec![1]).unwrap(),
            &TransformSpec::identity(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnsupportedDimension { found: 3, .. }));
    }

    #[test]
    fn invariant_checker_catches_broken_nesting() {
        let stack = empirical_attainment_surfaces(
            &two_run_costs(),
            &LevelSpec::new(vec![1, 2]).unwrap(),
            &TransformSpec::identity(),
        )
        .unwrap();
        let mut surfaces = stack.surfaces().to_vec();
        surfaces.swap(0, 1);
        let err = SurfaceStack::from_parts(
            stack.grid().to_vec(),
            surfaces,
            stack.levels().clone(),
            TransformSpec::identity(),
            2,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Data(_)));
    }
}
