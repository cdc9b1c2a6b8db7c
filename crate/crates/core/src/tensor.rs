use crate::error::{Error, Result};

/// Objective vectors from `S` independent runs of `N` evaluations each,
/// `M` objectives per evaluation, stored row-major.
///
/// Every value is finite. Infinity sentinels only ever appear in derived
/// surfaces.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTensor {
    runs: usize,
    evals: usize,
    objectives: usize,
    values: Vec<f64>,
}

impl RunTensor {
    pub fn new(runs: usize, evals: usize, objectives: usize, values: Vec<f64>) -> Result<Self> {
        if runs == 0 || evals == 0 || objectives == 0 {
            return Err(Error::validation(format!(
                "run tensor needs S, N, M >= 1, got shape [{runs}, {evals}, {objectives}]"
            )));
        }
        let expected = runs * evals * objectives;
        if values.len() != expected {
            return Err(Error::format(format!(
                "shape [{runs}, {evals}, {objectives}] needs {expected} values, got {}",
                values.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            let (s, n, m) = (
                i / (evals * objectives),
                (i / objectives) % evals,
                i % objectives,
            );
            return Err(Error::data(format!(
                "non-finite value {} at run {s}, row {n}, objective {m}",
                values[i]
            )));
        }
        Ok(RunTensor {
            runs,
            evals,
            objectives,
            values,
        })
    }

    /// Builds a tensor from `runs[s][n][m]`, rejecting ragged input.
    pub fn from_nested(runs: &[Vec<Vec<f64>>]) -> Result<Self> {
        let s = runs.len();
        let n = runs.first().map_or(0, Vec::len);
        let m = runs.first().and_then(|r| r.first()).map_or(0, Vec::len);
        let mut values = Vec::with_capacity(s * n * m);
        for (si, run) in runs.iter().enumerate() {
            if run.len() != n {
                return Err(Error::format(format!(
                    "run {si} has {} rows, run 0 has {n}",
                    run.len()
                )));
            }
            for (ni, row) in run.iter().enumerate() {
                if row.len() != m {
                    return Err(Error::format(format!(
                        "run {si}, row {ni} has {} objectives, expected {m}",
                        row.len()
                    )));
                }
                values.extend_from_slice(row);
            }
        }
        RunTensor::new(s, n, m, values)
    }

    /// Convenience constructor for bi-objective data.
    pub fn from_pairs(runs: &[Vec<[f64; 2]>]) -> Result<Self> {
        let nested: Vec<Vec<Vec<f64>>> = runs
            .iter()
            .map(|r| r.iter().map(|p| p.to_vec()).collect())
            .collect();
        RunTensor::from_nested(&nested)
    }

    /// `(S, N, M)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.runs, self.evals, self.objectives)
    }

    pub fn n_runs(&self) -> usize {
        self.runs
    }

    pub fn n_evals(&self) -> usize {
        self.evals
    }

    pub fn n_objectives(&self) -> usize {
        self.objectives
    }

    /// Flat row-major values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn row(&self, run: usize, eval: usize) -> &[f64] {
        let start = (run * self.evals + eval) * self.objectives;
        &self.values[start..start + self.objectives]
    }

    /// Rows of one run.
    pub fn run(&self, run: usize) -> impl Iterator<Item = &[f64]> + '_ {
        let start = run * self.evals * self.objectives;
        self.values[start..start + self.evals * self.objectives].chunks_exact(self.objectives)
    }

    /// One run as pairs; only meaningful when `M == 2`.
    pub(crate) fn run_pairs(&self, run: usize) -> Vec<[f64; 2]> {
        self.run(run).map(|r| [r[0], r[1]]).collect()
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<f64>>> {
        (0..self.runs)
            .map(|s| self.run(s).map(<[f64]>::to_vec).collect())
            .collect()
    }

    pub(crate) fn require_biobjective(&self) -> Result<()> {
        if self.objectives != 2 {
            return Err(Error::UnsupportedDimension {
                expected: 2,
                found: self.objectives,
            });
        }
        Ok(())
    }

    /// Returns a copy with every value of the listed objectives negated.
    pub(crate) fn negated(&self, objectives: &[usize]) -> RunTensor {
        let mut out = self.clone();
        if objectives.is_empty() {
            return out;
        }
        for row in out.values.chunks_exact_mut(self.objectives) {
            for &m in objectives {
                row[m] = -row[m];
            }
        }
        out
    }
}
