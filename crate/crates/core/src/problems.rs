//! Shipped weighted-sum backends: the analytic ellipsoid family and the
//! discrete point-cloud problem, plus a deterministic front sampler for
//! test fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::image::ObjectiveVector;
use crate::scalarization::{Decision, WsProblem, WsSolution};

/// `min diag(l) x` over the unit ball: the feasible image set is an
/// axis-aligned ellipsoid with the given semi-axes.
///
/// The weighted-sum solve has the closed form `x* = -D w / ||D w||`,
/// `J* = D x*` with `D = diag(l)`, valid for any weight direction with
/// `D w != 0` (Cauchy-Schwarz over the ball). In particular `w = e_i`
/// returns the exact individual minimum without perturbation.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipsoidProblem {
    semi_axes: Vec<f64>,
}

impl EllipsoidProblem {
    pub fn new(semi_axes: Vec<f64>) -> Result<Self> {
        if semi_axes.len() < 2 {
            return Err(Error::TooFewObjectives {
                got: semi_axes.len(),
            });
        }
        if semi_axes.iter().any(|l| !l.is_finite() || *l <= 0.0) {
            return Err(Error::NonFinite {
                context: "ellipsoid semi-axes",
            });
        }
        Ok(Self { semi_axes })
    }

    pub fn unit_sphere(n: usize) -> Result<Self> {
        Self::new(vec![1.0; n])
    }

    pub fn semi_axes(&self) -> &[f64] {
        &self.semi_axes
    }

    /// Deterministic sample of the nondominated part of this problem's
    /// image boundary: unit-sphere front samples scaled by the semi-axes.
    pub fn sample_front(&self, count: usize, seed: u64) -> Result<Vec<ObjectiveVector>> {
        let unit = sample_sphere_front(self.semi_axes.len(), count, seed)?;
        unit.into_iter()
            .map(|p| {
                ObjectiveVector::new(p.iter().zip(&self.semi_axes).map(|(v, l)| v * l).collect())
            })
            .collect()
    }
}

impl WsProblem for EllipsoidProblem {
    fn n_objectives(&self) -> usize {
        self.semi_axes.len()
    }

    fn solve_ws(&self, weights: &[f64]) -> Result<WsSolution> {
        let dw: Vec<f64> = self
            .semi_axes
            .iter()
            .zip(weights)
            .map(|(l, w)| l * w)
            .collect();
        let norm = dw.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroWeight);
        }
        let x: Vec<f64> = dw.iter().map(|v| -v / norm).collect();
        let objectives: Vec<f64> = self
            .semi_axes
            .iter()
            .zip(&x)
            .map(|(l, xi)| l * xi)
            .collect();
        Ok(WsSolution {
            decision: Decision::DecisionVector(x),
            objectives: ObjectiveVector::new(objectives)?,
        })
    }
}

/// A finite set of image points, solved by exhaustive scan.
///
/// Ties in the weighted sum break towards the lexicographically smallest
/// objective vector and then the smallest index, so the selected objective
/// vector does not depend on input order.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloudProblem {
    points: Vec<ObjectiveVector>,
    ids: Option<Vec<String>>,
}

impl PointCloudProblem {
    pub fn new(points: Vec<ObjectiveVector>) -> Result<Self> {
        Self::with_ids(points, None)
    }

    pub fn with_ids(points: Vec<ObjectiveVector>, ids: Option<Vec<String>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::Empty {
                context: "point cloud",
            });
        };
        let dim = first.len();
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        if let Some(ids) = &ids {
            if ids.len() != points.len() {
                return Err(Error::DimensionMismatch {
                    expected: points.len(),
                    got: ids.len(),
                });
            }
        }
        Ok(Self { points, ids })
    }

    pub fn points(&self) -> &[ObjectiveVector] {
        &self.points
    }

    pub fn ids(&self) -> Option<&[String]> {
        self.ids.as_deref()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl WsProblem for PointCloudProblem {
    fn n_objectives(&self) -> usize {
        self.points[0].len()
    }

    fn solve_ws(&self, weights: &[f64]) -> Result<WsSolution> {
        let best = self
            .points
            .par_iter()
            .enumerate()
            .map(|(i, p)| {
                let score: f64 = p.iter().zip(weights).map(|(x, w)| x * w).sum();
                (i, score)
            })
            .min_by(|(i, a), (j, b)| {
                a.total_cmp(b)
                    .then_with(|| crate::image::lex_cmp(&self.points[*i], &self.points[*j]))
                    .then(i.cmp(j))
            })
            .expect("cloud is nonempty");
        if !best.1.is_finite() {
            return Err(Error::SolverFailure {
                message: format!("non-finite weighted sum {}", best.1),
            });
        }
        Ok(WsSolution {
            decision: Decision::PointIndex(best.0),
            objectives: self.points[best.0].clone(),
        })
    }
}

/// Deterministic pseudo-random sample of the all-negative orthant of the
/// unit sphere: a synthetic mutually-nondominated cloud.
///
/// Directions are drawn as component-wise absolute values of standard
/// normals, normalized and negated; the generator is ChaCha8 seeded with
/// `seed`, so output is reproducible across platforms.
pub fn sample_sphere_front(n: usize, count: usize, seed: u64) -> Result<Vec<ObjectiveVector>> {
    if n < 2 {
        return Err(Error::TooFewObjectives { got: n });
    }
    if count == 0 {
        return Err(Error::Empty {
            context: "sample count",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let raw: Vec<f64> = (0..n)
            .map(|_| {
                let g: f64 = rng.sample(StandardNormal);
                g.abs()
            })
            .collect();
        let norm = raw.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-12 {
            continue;
        }
        points.push(ObjectiveVector::new(
            raw.into_iter().map(|v| -v / norm).collect(),
        )?);
    }
    Ok(points)
}
