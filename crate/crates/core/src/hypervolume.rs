//! Two-objective hypervolume, its normalized variant, and hypervolume traces
//! over the evaluation budget with cross-run band statistics.

use log::warn;
use rayon::prelude::*;

use crate::attainment::TransformSpec;
use crate::error::{Error, Result};
use crate::pareto::{pareto_front_2d, ObjectivePoint, ObjectiveSet};
use crate::tensor::RunTensor;

/// How the half-width of the cross-run band is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BandKind {
    /// Sample standard deviation (divisor S − 1) divided by √S.
    #[default]
    StandardError,
    /// Sample standard deviation (divisor S − 1).
    StandardDeviation,
}

impl BandKind {
    pub fn name(self) -> &'static str {
        match self {
            BandKind::StandardError => "stderr",
            BandKind::StandardDeviation => "std",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "stderr" => Some(BandKind::StandardError),
            "std" => Some(BandKind::StandardDeviation),
            _ => None,
        }
    }
}

/// Reference point, optional true front for normalization, and orientation.
///
/// The reference point and the true front are given in the caller's
/// orientation; maximized objectives are negated internally.
#[derive(Debug, Clone, PartialEq)]
pub struct HvConfig {
    ref_point: [f64; 2],
    true_front: Option<Vec<[f64; 2]>>,
    transform: TransformSpec,
    band: BandKind,
}

impl HvConfig {
    pub fn new(ref_point: &ObjectivePoint) -> Result<Self> {
        let v = ref_point.values();
        if v.len() != 2 {
            return Err(Error::UnsupportedDimension {
                expected: 2,
                found: v.len(),
            });
        }
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::validation(format!(
                "reference point must be finite, got ({}, {})",
                v[0], v[1]
            )));
        }
        Ok(HvConfig {
            ref_point: [v[0], v[1]],
            true_front: None,
            transform: TransformSpec::identity(),
            band: BandKind::default(),
        })
    }

    pub fn with_true_front(mut self, front: &ObjectiveSet) -> Result<Self> {
        if front.is_empty() {
            return Err(Error::validation("true Pareto front must not be empty"));
        }
        let pairs = front.to_pairs()?;
        if pairs.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
            return Err(Error::validation("true Pareto front must be finite"));
        }
        self.true_front = Some(pairs);
        self.check_true_front()?;
        Ok(self)
    }

    pub fn with_transform(mut self, transform: TransformSpec) -> Result<Self> {
        transform.check_indices(2)?;
        self.transform = transform;
        self.check_true_front()?;
        Ok(self)
    }

    pub fn with_band(mut self, band: BandKind) -> Self {
        self.band = band;
        self
    }

    pub fn ref_point(&self) -> [f64; 2] {
        self.ref_point
    }

    pub fn true_front(&self) -> Option<&[[f64; 2]]> {
        self.true_front.as_deref()
    }

    pub fn transform(&self) -> &TransformSpec {
        &self.transform
    }

    pub fn band(&self) -> BandKind {
        self.band
    }

    fn to_internal(&self, p: [f64; 2]) -> [f64; 2] {
        [self.transform.sign(0) * p[0], self.transform.sign(1) * p[1]]
    }

    fn check_true_front(&self) -> Result<()> {
        if let Some(front) = &self.true_front {
            let internal: Vec<[f64; 2]> = front.iter().map(|&p| self.to_internal(p)).collect();
            let mut unique = internal.clone();
            unique.sort_by(crate::pareto::cmp_pair);
            unique.dedup();
            if pareto_front_2d(&internal).len() != unique.len() {
                return Err(Error::validation(
                    "true Pareto front contains dominated points",
                ));
            }
        }
        Ok(())
    }

    /// Affine map sending the true front's per-objective minimum to 0 and the
    /// reference point to 1, in internal orientation.
    fn normalizer(&self) -> Result<Normalizer> {
        let front = self.true_front.as_ref().ok_or_else(|| {
            Error::Config("normalized hypervolume requires a true Pareto front".into())
        })?;
        let r = self.to_internal(self.ref_point);
        let mut lo = [f64::INFINITY; 2];
        for &p in front {
            let q = self.to_internal(p);
            lo[0] = lo[0].min(q[0]);
            lo[1] = lo[1].min(q[1]);
        }
        for m in 0..2 {
            if r[m] <= lo[m] {
                return Err(Error::validation(format!(
                    "degenerate normalization range for objective {m}: the reference point ({}) \
                     must be strictly worse than the true front's best value ({}); \
                     hypervolume is highly sensitive to this range",
                    self.transform.sign(m) * r[m],
                    self.transform.sign(m) * lo[m]
                )));
            }
        }
        Ok(Normalizer {
            lo,
            scale: [r[0] - lo[0], r[1] - lo[1]],
        })
    }
}

#[derive(Debug, Clone, Copy)]
struct Normalizer {
    lo: [f64; 2],
    scale: [f64; 2],
}

impl Normalizer {
    fn map(&self, p: [f64; 2]) -> [f64; 2] {
        [
            (p[0] - self.lo[0]) / self.scale[0],
            (p[1] - self.lo[1]) / self.scale[1],
        ]
    }
}

fn strictly_inside(p: &[f64; 2], r: &[f64; 2]) -> bool {
    p[0] <= r[0] && p[1] <= r[1] && (p[0] < r[0] || p[1] < r[1])
}

/// Area dominated by `points` and dominating `r`, all objectives minimized.
///
/// Points that do not dominate `r` contribute nothing; the count of such
/// points is returned alongside the area.
fn hv_pairs(points: &[[f64; 2]], r: [f64; 2]) -> (f64, usize) {
    let inside: Vec<[f64; 2]> = points
        .iter()
        .copied()
        .filter(|p| strictly_inside(p, &r))
        .collect();
    let clipped = points.len() - inside.len();
    let front = pareto_front_2d(&inside);
    let mut area = 0.0;
    let mut prev = r[1];
    for p in front {
        area += (r[0] - p[0]) * (prev - p[1]);
        prev = p[1];
    }
    (area, clipped)
}

/// Exact hypervolume of a bi-objective front against reference point `r`
/// (all objectives minimized).
///
/// Input need not be sorted or filtered. Points that do not dominate `r` are
/// dropped with a warning.
pub fn hypervolume_2d(front: &ObjectiveSet, reference: &ObjectivePoint) -> Result<f64> {
    let r = reference.values();
    if r.len() != 2 {
        return Err(Error::UnsupportedDimension {
            expected: 2,
            found: r.len(),
        });
    }
    if !r.iter().all(|x| x.is_finite()) {
        return Err(Error::validation("reference point must be finite"));
    }
    let pairs = front.to_pairs()?;
    let (area, clipped) = hv_pairs(&pairs, [r[0], r[1]]);
    if clipped > 0 {
        warn!(
            "{clipped} of {} points do not dominate the reference point ({}, {}) and were ignored",
            pairs.len(),
            r[0],
            r[1]
        );
    }
    if clipped == pairs.len() && !pairs.is_empty() {
        warn!("no point lies inside the reference box; hypervolume is 0");
    }
    Ok(area)
}

/// Hypervolume after mapping the true front's minima to 0 and the reference
/// point to 1 on each objective; `front` is in the caller's orientation.
pub fn normalized_hypervolume_2d(front: &ObjectiveSet, config: &HvConfig) -> Result<f64> {
    let norm = config.normalizer()?;
    let mapped: Vec<[f64; 2]> = front
        .to_pairs()?
        .into_iter()
        .map(|p| norm.map(config.to_internal(p)))
        .collect();
    let (area, clipped) = hv_pairs(&mapped, [1.0, 1.0]);
    if clipped > 0 {
        warn!(
            "{clipped} of {} points lie outside the normalized reference box and were ignored",
            mapped.len()
        );
    }
    Ok(area)
}

/// Incrementally maintained front that reports each new point's exclusive
/// contribution to the dominated area.
struct IncrementalFront {
    reference: [f64; 2],
    front: Vec<[f64; 2]>,
}

impl IncrementalFront {
    fn new(reference: [f64; 2]) -> Self {
        IncrementalFront {
            reference,
            front: Vec::new(),
        }
    }

    /// Adds `p` and returns the area it adds. `None` when `p` lies outside the
    /// reference box.
    fn insert(&mut self, p: [f64; 2]) -> Option<f64> {
        let r = self.reference;
        if !strictly_inside(&p, &r) {
            return None;
        }
        // First front index with a first objective strictly greater than p's.
        let split = self.front.partition_point(|q| q[0] <= p[0]);
        let mut level = if split == 0 {
            f64::INFINITY
        } else {
            self.front[split - 1][1]
        };
        if level <= p[1] {
            return Some(0.0);
        }
        let mut gained = 0.0;
        let mut x = p[0];
        let mut next = split;
        loop {
            let boundary = self.front.get(next).map_or(r[0], |q| q[0].min(r[0]));
            gained += (boundary - x) * (level.min(r[1]) - p[1]);
            if next >= self.front.len() {
                break;
            }
            level = self.front[next][1];
            if level <= p[1] {
                break;
            }
            x = boundary;
            next += 1;
        }
        // p dominates front[split..end) up to the first point with y₂ < p₂.
        let end = split + self.front[split..].partition_point(|q| q[1] >= p[1]);
        let start = if split > 0 && self.front[split - 1][0] == p[0] {
            split - 1
        } else {
            split
        };
        self.front.splice(start..end, [p]);
        Some(gained)
    }
}

/// Cumulative hypervolume of each observation prefix of one run (internal
/// orientation, already mapped). Returns the trace and the number of
/// observations that fell outside the reference box.
fn run_trace(points: &[[f64; 2]], reference: [f64; 2]) -> (Vec<f64>, usize) {
    let mut inc = IncrementalFront::new(reference);
    let mut total = 0.0;
    let mut outside = 0;
    let trace = points
        .iter()
        .map(|&p| {
            match inc.insert(p) {
                Some(gain) => total += gain,
                None => outside += 1,
            }
            total
        })
        .collect();
    (trace, outside)
}

/// Per-run hypervolume traces plus the cross-run center line and band.
#[derive(Debug, Clone, PartialEq)]
pub struct HvTraceSet {
    traces: Vec<Vec<f64>>,
    center: Vec<f64>,
    band_halfwidth: Vec<f64>,
    band: BandKind,
}

impl HvTraceSet {
    /// Computes center and band statistics from raw traces.
    pub fn from_traces(traces: Vec<Vec<f64>>, band: BandKind) -> Result<Self> {
        let n = check_traces(&traces)?;
        let s = traces.len() as f64;
        let mut center = Vec::with_capacity(n);
        let mut half = Vec::with_capacity(n);
        for i in 0..n {
            let mean = traces.iter().map(|t| t[i]).sum::<f64>() / s;
            let spread = if traces.len() < 2 {
                0.0
            } else {
                let var = traces.iter().map(|t| (t[i] - mean).powi(2)).sum::<f64>() / (s - 1.0);
                match band {
                    BandKind::StandardError => var.sqrt() / s.sqrt(),
                    BandKind::StandardDeviation => var.sqrt(),
                }
            };
            center.push(mean);
            half.push(spread);
        }
        Ok(HvTraceSet {
            traces,
            center,
            band_halfwidth: half,
            band,
        })
    }

    /// Reassembles a stored trace set, checking the stored statistics against
    /// a recomputation.
    pub fn from_parts(
        traces: Vec<Vec<f64>>,
        center: Vec<f64>,
        band_halfwidth: Vec<f64>,
        band: BandKind,
    ) -> Result<Self> {
        let computed = HvTraceSet::from_traces(traces, band)?;
        let close = |a: &[f64], b: &[f64]| {
            a.len() == b.len()
                && a.iter()
                    .zip(b)
                    .all(|(x, y)| (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0))
        };
        if !close(&center, &computed.center) {
            return Err(Error::data(
                "stored center does not match the mean of the traces",
            ));
        }
        if !close(&band_halfwidth, &computed.band_halfwidth) {
            return Err(Error::data(format!(
                "stored band half-width does not match the {} of the traces",
                band.name()
            )));
        }
        Ok(HvTraceSet {
            traces: computed.traces,
            center,
            band_halfwidth,
            band,
        })
    }

    pub fn traces(&self) -> &[Vec<f64>] {
        &self.traces
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn band_halfwidth(&self) -> &[f64] {
        &self.band_halfwidth
    }

    pub fn band(&self) -> BandKind {
        self.band
    }

    pub fn n_runs(&self) -> usize {
        self.traces.len()
    }

    /// Number of evaluations N.
    pub fn n_evals(&self) -> usize {
        self.center.len()
    }
}

fn check_traces(traces: &[Vec<f64>]) -> Result<usize> {
    let n = traces
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::validation("at least one trace is required"))?;
    if n == 0 {
        return Err(Error::validation("traces must have at least one step"));
    }
    for (s, t) in traces.iter().enumerate() {
        if t.len() != n {
            return Err(Error::format(format!(
                "trace {s} has {} steps, trace 0 has {n}",
                t.len()
            )));
        }
        if t.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::data(format!(
                "trace {s} contains a negative or non-finite value"
            )));
        }
        if t.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::data(format!("trace {s} decreases")));
        }
    }
    Ok(n)
}

/// Hypervolume of every observation prefix of every run, optionally
/// normalized, with mean and band across runs.
pub fn hv_over_time(costs: &RunTensor, config: &HvConfig, normalize: bool) -> Result<HvTraceSet> {
    costs.require_biobjective()?;
    let norm = if normalize {
        Some(config.normalizer()?)
    } else {
        None
    };
    let reference = match norm {
        Some(_) => [1.0, 1.0],
        None => config.to_internal(config.ref_point),
    };
    let results: Vec<(Vec<f64>, usize)> = (0..costs.n_runs())
        .into_par_iter()
        .map(|s| {
            let points: Vec<[f64; 2]> = costs
                .run(s)
                .map(|row| {
                    let p = config.to_internal([row[0], row[1]]);
                    norm.map_or(p, |n| n.map(p))
                })
                .collect();
            run_trace(&points, reference)
        })
        .collect();
    let outside: usize = results.iter().map(|r| r.1).sum();
    if outside > 0 {
        warn!(
            "{outside} of {} observations do not dominate the reference point and contribute nothing",
            costs.n_runs() * costs.n_evals()
        );
    }
    HvTraceSet::from_traces(results.into_iter().map(|r| r.0).collect(), config.band)
}
