//! Weighted-sum solve abstraction and the discrete Pascoletti-Serafini
//! oracle used to cross-check it.
//!
//! The shooting-ray problem `min -l  s.t.  J~(x) = J_SO + l*d + V*nu` with
//! `d = -e_i` and `V` a spanning matrix is equivalent to a weighted-sum
//! solve with the spanning hyperplane's normal: taking the inner product of
//! the constraint with the normal `w` gives `l = w^T (J_SO - J~) / w_i`, so
//! maximizing `l` minimizes `w^T J~`. [`ps_solve_discrete`] evaluates the
//! ray formulation directly over a candidate set and exists purely as a
//! verification oracle for that equivalence.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{SpanningMatrix, WeightVector};
use crate::image::{apply_normalization, Normalization, ObjectiveVector};

/// Decision-space handle returned by a backend: a point index into a cloud
/// or the decision vector itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    PointIndex(usize),
    DecisionVector(Vec<f64>),
}

/// Result of one weighted-sum solve.
#[derive(Debug, Clone, PartialEq)]
pub struct WsSolution {
    pub decision: Decision,
    pub objectives: ObjectiveVector,
}

/// A problem whose weighted-sum scalarization `min w^T J(x)` can be solved
/// exactly. Backends must be safe for concurrent read-only solves.
pub trait WsProblem: Sync {
    fn n_objectives(&self) -> usize;

    /// Minimize `w^T J(x)` over the feasible set. The returned objectives
    /// must equal the problem's objective evaluation at the returned
    /// decision.
    fn solve_ws(&self, weights: &[f64]) -> Result<WsSolution>;
}

impl<P: WsProblem + ?Sized> WsProblem for &P {
    fn n_objectives(&self) -> usize {
        (**self).n_objectives()
    }

    fn solve_ws(&self, weights: &[f64]) -> Result<WsSolution> {
        (**self).solve_ws(weights)
    }
}

/// Validate dimensions and finiteness, then delegate to the backend.
pub fn ws_solve<P: WsProblem + ?Sized>(problem: &P, weights: &[f64]) -> Result<WsSolution> {
    if weights.len() != problem.n_objectives() {
        return Err(Error::DimensionMismatch {
            expected: problem.n_objectives(),
            got: weights.len(),
        });
    }
    if weights.iter().any(|w| !w.is_finite()) {
        return Err(Error::NonFinite {
            context: "weighted-sum weights",
        });
    }
    problem.solve_ws(weights)
}

/// Parameters of the shooting-ray scalarization: origin, direction, the
/// hyperplane spanning columns, and an affine image-space transform.
#[derive(Debug, Clone, PartialEq)]
pub struct PsParameters {
    shooting_origin: ObjectiveVector,
    direction: Vec<f64>,
    spanning: DMatrix<f64>,
    transform: Normalization,
}

impl PsParameters {
    pub fn new(
        shooting_origin: ObjectiveVector,
        direction: Vec<f64>,
        spanning_columns: Vec<Vec<f64>>,
        transform: Normalization,
    ) -> Result<Self> {
        let n = shooting_origin.len();
        if direction.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: direction.len(),
            });
        }
        if spanning_columns.len() != n - 1 {
            return Err(Error::DimensionMismatch {
                expected: n - 1,
                got: spanning_columns.len(),
            });
        }
        for col in &spanning_columns {
            if col.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: col.len(),
                });
            }
        }
        if transform.n_objectives() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: transform.n_objectives(),
            });
        }
        if direction.iter().any(|v| !v.is_finite())
            || spanning_columns.iter().flatten().any(|v| !v.is_finite())
        {
            return Err(Error::NonFinite {
                context: "shooting-ray parameters",
            });
        }
        let cols: Vec<DVector<f64>> = spanning_columns
            .into_iter()
            .map(DVector::from_vec)
            .collect();
        Ok(Self {
            shooting_origin,
            direction,
            spanning: DMatrix::from_columns(&cols),
            transform,
        })
    }

    /// The realization that recovers the individual minimum of the spanning
    /// matrix's objective: origin at zero, direction `-e_i`, identity
    /// transform.
    pub fn individual_minimum(spanning: &SpanningMatrix) -> Result<Self> {
        let n = spanning.n_objectives();
        let mut direction = vec![0.0; n];
        direction[spanning.objective_index()] = -1.0;
        let columns = spanning
            .matrix()
            .column_iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        Self::new(
            ObjectiveVector::zeros(n)?,
            direction,
            columns,
            Normalization::identity(n)?,
        )
    }

    pub fn n_objectives(&self) -> usize {
        self.direction.len()
    }
}

/// Index selected by the ray solve together with its progress value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsSelection {
    pub index: usize,
    pub l_value: f64,
}

/// Brute-force shooting-ray solve over a discrete candidate set.
///
/// For each point, the transformed image is decomposed in the `[d | V]`
/// basis and the point with the largest ray progress `l` wins (ties go to
/// the smallest index).
pub fn ps_solve_discrete(points: &[ObjectiveVector], params: &PsParameters) -> Result<PsSelection> {
    if points.is_empty() {
        return Err(Error::Empty {
            context: "candidate set",
        });
    }
    let n = params.n_objectives();
    let mut basis = DMatrix::zeros(n, n);
    basis.column_mut(0).copy_from_slice(&params.direction);
    basis.columns_mut(1, n - 1).copy_from(&params.spanning);

    let svd = basis.clone().svd(false, false);
    let smin = svd.singular_values.min();
    let smax = svd.singular_values.max();
    if smin <= f64::MIN_POSITIVE * smax.max(1.0) {
        return Err(Error::SingularBasis);
    }
    let condition = smax / smin;
    if condition > 1e12 {
        log::warn!("shooting-ray basis condition number {condition:.3e} exceeds 1e12");
    }

    let lu = basis.lu();
    let mut best: Option<PsSelection> = None;
    for (index, point) in points.iter().enumerate() {
        if point.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: point.len(),
            });
        }
        let transformed = apply_normalization(&params.transform, point)?;
        let rhs = DVector::from_iterator(
            n,
            transformed
                .iter()
                .zip(params.shooting_origin.iter())
                .map(|(t, o)| t - o),
        );
        let solution = lu.solve(&rhs).ok_or(Error::SingularBasis)?;
        let l_value = solution[0];
        if best.is_none_or(|b| l_value > b.l_value) {
            best = Some(PsSelection { index, l_value });
        }
    }
    Ok(best.expect("nonempty candidate set"))
}

/// Pull a weight vector through an affine image transform: since the scale
/// is diagonal, the transformed weight is the component-wise product
/// `scale_i * w_i`. Deliberately not re-normalized onto the simplex.
pub fn transform_weight(w: &WeightVector, norm: &Normalization) -> Result<Vec<f64>> {
    if w.len() != norm.n_objectives() {
        return Err(Error::DimensionMismatch {
            expected: norm.n_objectives(),
            got: w.len(),
        });
    }
    Ok(w.as_slice()
        .iter()
        .zip(norm.scale())
        .map(|(wi, si)| wi * si)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{hyperplane_normal, simplex_scale, spanning_matrix, AlphaSpec};
    use crate::problems::{EllipsoidProblem, PointCloudProblem};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const DEG: f64 = std::f64::consts::PI / 180.0;

    fn ov(values: &[f64]) -> ObjectiveVector {
        ObjectiveVector::new(values.to_vec()).unwrap()
    }

    #[test]
    fn ws_solve_unit_sphere_basis_weight() {
        let sphere = EllipsoidProblem::unit_sphere(3).unwrap();
        let sol = ws_solve(&sphere, &[1.0, 0.0, 0.0]).unwrap();
        assert_relative_eq!(sol.objectives[0], -1.0, max_relative = 1e-14);
        assert!(sol.objectives[1].abs() < 1e-14);
        assert!(sol.objectives[2].abs() < 1e-14);
    }

    #[test]
    fn ws_solve_ellipsoid_matches_lagrange_oracle() {
        let axes = [1.0, 3.0, 9.0];
        let problem = EllipsoidProblem::new(axes.to_vec()).unwrap();
        let w = [1.0 / 3.0; 3];
        let sol = ws_solve(&problem, &w).unwrap();
        // Oracle: J* = -D^2 w / ||D w||.
        let dw: Vec<f64> = axes.iter().zip(w).map(|(l, wi)| l * wi).collect();
        let norm = dw.iter().map(|v| v * v).sum::<f64>().sqrt();
        for i in 0..3 {
            assert_relative_eq!(
                sol.objectives[i],
                -axes[i] * dw[i] / norm,
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn ws_solve_cloud_picks_minimal_average_point() {
        let cloud = PointCloudProblem::new(vec![ov(&[0.0, 1.0]), ov(&[1.0, 0.0]), ov(&[0.4, 0.4])])
            .unwrap();
        let sol = ws_solve(&cloud, &[0.5, 0.5]).unwrap();
        assert_eq!(sol.decision, Decision::PointIndex(2));
        assert_eq!(sol.objectives.as_slice(), &[0.4, 0.4]);
    }

    #[test]
    fn ws_solve_validates_weights() {
        let sphere = EllipsoidProblem::unit_sphere(3).unwrap();
        assert!(matches!(
            ws_solve(&sphere, &[1.0, 0.0]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            ws_solve(&sphere, &[1.0, f64::NAN, 0.0]),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn ps_selects_first_objective_minimizer_along_its_axis() {
        let points = vec![ov(&[-1.0, 0.0]), ov(&[0.0, -1.0])];
        let params = PsParameters::new(
            ObjectiveVector::zeros(2).unwrap(),
            vec![-1.0, 0.0],
            vec![vec![0.0, 1.0]],
            Normalization::identity(2).unwrap(),
        )
        .unwrap();
        let sel = ps_solve_discrete(&points, &params).unwrap();
        assert_eq!(sel.index, 0);
        assert_relative_eq!(sel.l_value, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn ps_singleton_returns_that_point() {
        let points = vec![ov(&[0.3, -0.7])];
        let params = PsParameters::new(
            ObjectiveVector::zeros(2).unwrap(),
            vec![-1.0, 0.0],
            vec![vec![0.0, 1.0]],
            Normalization::identity(2).unwrap(),
        )
        .unwrap();
        let sel = ps_solve_discrete(&points, &params).unwrap();
        assert_eq!(sel.index, 0);
        assert_relative_eq!(sel.l_value, -0.3, max_relative = 1e-14);
    }

    #[test]
    fn ps_agrees_with_ws_on_rotated_hyperplane() {
        let alpha = AlphaSpec::uniform(2, 10.0 * DEG).unwrap();
        let spanning = spanning_matrix(0, &alpha).unwrap();
        let w = simplex_scale(&hyperplane_normal(&spanning).unwrap()).unwrap();
        let points = vec![ov(&[-1.0, 0.0]), ov(&[0.0, -1.0]), ov(&[-0.7, -0.7])];

        let cloud = PointCloudProblem::new(points.clone()).unwrap();
        let ws = ws_solve(&cloud, w.as_slice()).unwrap();

        let params = PsParameters::individual_minimum(&spanning).unwrap();
        let ps = ps_solve_discrete(&points, &params).unwrap();
        assert_eq!(Decision::PointIndex(ps.index), ws.decision);
    }

    #[test]
    fn ps_rejects_singular_basis() {
        let points = vec![ov(&[0.0, 1.0])];
        let params = PsParameters::new(
            ObjectiveVector::zeros(2).unwrap(),
            vec![-1.0, 0.0],
            vec![vec![-2.0, 0.0]],
            Normalization::identity(2).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            ps_solve_discrete(&points, &params),
            Err(Error::SingularBasis)
        ));
    }

    #[test]
    fn ps_rejects_empty_candidates() {
        let params = PsParameters::new(
            ObjectiveVector::zeros(2).unwrap(),
            vec![-1.0, 0.0],
            vec![vec![0.0, 1.0]],
            Normalization::identity(2).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            ps_solve_discrete(&[], &params),
            Err(Error::Empty { .. })
        ));
    }

    #[test]
    fn transform_weight_examples() {
        let identity = Normalization::identity(3).unwrap();
        let w = WeightVector::simplex(vec![1.0 / 3.0; 3]).unwrap();
        assert_eq!(transform_weight(&w, &identity).unwrap(), vec![1.0 / 3.0; 3]);

        let norm = Normalization::new(
            ObjectiveVector::zeros(3).unwrap(),
            vec![1.0, 1.0 / 3.0, 1.0 / 9.0],
        )
        .unwrap();
        let e2 = WeightVector::simplex(vec![0.0, 1.0, 0.0]).unwrap();
        assert_eq!(
            transform_weight(&e2, &norm).unwrap(),
            vec![0.0, 1.0 / 3.0, 0.0]
        );

        let a = 10.0 * DEG;
        let (s10, c10) = a.sin_cos();
        let w = simplex_scale(&[c10, s10, s10]).unwrap();
        let out = transform_weight(&w, &norm).unwrap();
        for (i, v) in out.iter().enumerate() {
            assert_relative_eq!(*v, w[i] * norm.scale()[i], max_relative = 1e-15);
        }

        assert!(matches!(
            transform_weight(&e2, &Normalization::identity(4).unwrap()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn random_cloud(seed: u64, len: usize, dim: usize) -> Vec<ObjectiveVector> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..len)
            .map(|_| {
                ObjectiveVector::new((0..dim).map(|_| rng.random_range(-5.0..5.0)).collect())
                    .unwrap()
            })
            .collect()
    }

    proptest! {
        /// Shooting-ray and weighted-sum solves agree on random clouds for
        /// every objective index (optimizer tie sets intersect).
        #[test]
        fn prop_ws_ps_equivalence(
            seed in 0_u64..5000,
            len in 3_usize..60,
            dim in 2_usize..5,
            alpha_deg in 1.0_f64..44.0,
        ) {
            let points = random_cloud(seed, len, dim);
            let cloud = PointCloudProblem::new(points.clone()).unwrap();
            let alpha = AlphaSpec::uniform(dim, alpha_deg * DEG).unwrap();
            for i in 0..dim {
                let spanning = spanning_matrix(i, &alpha).unwrap();
                let w = simplex_scale(&hyperplane_normal(&spanning).unwrap()).unwrap();
                let ws = ws_solve(&cloud, w.as_slice()).unwrap();
                let ps = ps_solve_discrete(
                    &points,
                    &PsParameters::individual_minimum(&spanning).unwrap(),
                )
                .unwrap();

                // Compare via tie sets: scores within 1e-9 of the optimum.
                let scores: Vec<f64> = points
                    .iter()
                    .map(|p| p.iter().zip(w.as_slice()).map(|(x, wi)| x * wi).sum())
                    .collect();
                let best = scores.iter().cloned().fold(f64::INFINITY, f64::min);
                let ws_index = match ws.decision {
                    Decision::PointIndex(idx) => idx,
                    _ => unreachable!(),
                };
                let tol = 1e-9 * (1.0 + best.abs());
                prop_assert!(scores[ws_index] <= best + tol);
                prop_assert!(scores[ps.index] <= best + tol);
            }
        }

        /// Translating every candidate leaves the ray selection unchanged.
        #[test]
        fn prop_ps_translation_invariant(
            seed in 0_u64..5000,
            len in 2_usize..40,
            shift in -10.0_f64..10.0,
        ) {
            let points = random_cloud(seed, len, 3);
            let alpha = AlphaSpec::uniform(3, 15.0 * DEG).unwrap();
            let spanning = spanning_matrix(1, &alpha).unwrap();
            let params = PsParameters::individual_minimum(&spanning).unwrap();
            let base = ps_solve_discrete(&points, &params).unwrap();

            let moved: Vec<ObjectiveVector> = points
                .iter()
                .map(|p| ov(&p.iter().map(|v| v + shift).collect::<Vec<_>>()))
                .collect();
            let shifted = ps_solve_discrete(&moved, &params).unwrap();
            prop_assert_eq!(base.index, shifted.index);
        }
    }
}
