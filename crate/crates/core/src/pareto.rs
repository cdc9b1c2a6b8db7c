//! Pareto dominance and nondominated-set extraction.
//!
//! All objectives are minimized. Comparisons are exact; callers that need an
//! epsilon tolerance should quantize their data first.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// One vector in objective space.
///
/// Values may be finite or one of the two infinities; NaN is rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectivePoint(Vec<f64>);

impl ObjectivePoint {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::validation(
                "an objective point needs at least one value",
            ));
        }
        if let Some(m) = values.iter().position(|v| v.is_nan()) {
            return Err(Error::data(format!("objective {m} is NaN")));
        }
        Ok(ObjectivePoint(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.0
    }
}

impl TryFrom<Vec<f64>> for ObjectivePoint {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        ObjectivePoint::new(values)
    }
}

impl TryFrom<[f64; 2]> for ObjectivePoint {
    type Error = Error;

    fn try_from(values: [f64; 2]) -> Result<Self> {
        ObjectivePoint::new(values.to_vec())
    }
}

/// A finite collection of objective vectors sharing one dimensionality.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ObjectiveSet {
    dim: usize,
    points: Vec<ObjectivePoint>,
}

impl ObjectiveSet {
    pub fn new(points: Vec<ObjectivePoint>) -> Result<Self> {
        let dim = points.first().map_or(0, ObjectivePoint::dim);
        if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        Ok(ObjectiveSet { dim, points })
    }

    pub fn empty() -> Self {
        ObjectiveSet::default()
    }

    /// Builds a set from raw rows, validating each one.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let points = rows
            .iter()
            .map(|r| ObjectivePoint::new(r.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        ObjectiveSet::new(points)
    }

    /// Number of objectives, or 0 for the empty set.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ObjectivePoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ObjectivePoint> {
        self.points.iter()
    }

    /// The points as fixed-size pairs. Fails unless M = 2 (or the set is empty).
    pub fn to_pairs(&self) -> Result<Vec<[f64; 2]>> {
        if !self.is_empty() && self.dim != 2 {
            return Err(Error::UnsupportedDimension {
                expected: 2,
                found: self.dim,
            });
        }
        Ok(self.points.iter().map(|p| [p.0[0], p.0[1]]).collect())
    }

    pub fn from_pairs(pairs: &[[f64; 2]]) -> Result<Self> {
        ObjectiveSet::from_rows(pairs)
    }
}

impl<'a> IntoIterator for &'a ObjectiveSet {
    type Item = &'a ObjectivePoint;
    type IntoIter = std::slice::Iter<'a, ObjectivePoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

fn check_dims(a: &ObjectivePoint, b: &ObjectivePoint) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

fn weakly_dominates_raw(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn dominates_raw(a: &[f64], b: &[f64]) -> bool {
    weakly_dominates_raw(a, b) && a.iter().zip(b).any(|(x, y)| x < y)
}

/// `a ⪯ b`: every objective of `a` is no worse than the matching one of `b`.
pub fn weakly_dominates(a: &ObjectivePoint, b: &ObjectivePoint) -> Result<bool> {
    check_dims(a, b)?;
    Ok(weakly_dominates_raw(a.values(), b.values()))
}

/// `a ≺ b`: weak dominance plus a strict improvement in at least one objective.
pub fn dominates(a: &ObjectivePoint, b: &ObjectivePoint) -> Result<bool> {
    check_dims(a, b)?;
    Ok(dominates_raw(a.values(), b.values()))
}

/// True iff some member of `front` weakly dominates `y`. Empty fronts attain nothing.
pub fn set_attains(front: &ObjectiveSet, y: &ObjectivePoint) -> Result<bool> {
    if front.is_empty() {
        return Ok(false);
    }
    if front.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: front.dim(),
            found: y.dim(),
        });
    }
    Ok(front
        .iter()
        .any(|p| weakly_dominates_raw(p.values(), y.values())))
}

/// Points of `points` that no other point strictly dominates, duplicates collapsed.
///
/// Two objectives go through the sort-and-sweep path and come back sorted by
/// the first objective; anything else uses [`nondominated_pairwise`].
pub fn nondominated_filter(points: &ObjectiveSet) -> ObjectiveSet {
    if points.dim() != 2 {
        return nondominated_pairwise(points);
    }
    let pairs: Vec<[f64; 2]> = points.iter().map(|p| [p.0[0], p.0[1]]).collect();
    let front = pareto_front_2d(&pairs);
    ObjectiveSet {
        dim: 2,
        points: front
            .into_iter()
            .map(|p| ObjectivePoint(p.to_vec()))
            .collect(),
    }
}

/// Quadratic-time filter valid for any M. Output keeps the input order of
/// first occurrences.
pub fn nondominated_pairwise(points: &ObjectiveSet) -> ObjectiveSet {
    let pts = points.points();
    let mut kept: Vec<ObjectivePoint> = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let dominated = pts
            .iter()
            .enumerate()
            .any(|(j, q)| i != j && dominates_raw(q.values(), p.values()));
        if !dominated && !kept.iter().any(|k| k.values() == p.values()) {
            kept.push(p.clone());
        }
    }
    ObjectiveSet {
        dim: points.dim(),
        points: kept,
    }
}

/// Lexicographic order on pairs; NaN never reaches here.
pub(crate) fn cmp_pair(a: &[f64; 2], b: &[f64; 2]) -> Ordering {
    a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1]))
}

/// Nondominated subset of bi-objective points, sorted by ascending first
/// objective (and therefore strictly descending second objective).
///
/// Runs in O(N log N). Among points sharing a first objective only the one
/// with the smallest second objective can survive.
pub fn pareto_front_2d(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut sorted = points.to_vec();
    sorted.sort_by(cmp_pair);
    let mut front: Vec<[f64; 2]> = Vec::new();
    let mut best = f64::INFINITY;
    for p in sorted {
        // The first point always survives, even when its second objective is +inf.
        if front.is_empty() || p[1] < best {
            best = p[1];
            front.push(p);
        }
    }
    front
}
