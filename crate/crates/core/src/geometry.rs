//! Rotation geometry behind the non-extreme weight vectors.
//!
//! A spanning matrix for objective `i` collects the basis vectors `e_k`
//! (`k != i`), each tilted towards `-e_i` by a Givens rotation through the
//! per-axis angle `alpha_k`. The unit normal of the hyperplane spanned by
//! those columns, scaled onto the simplex, is the weight vector `w_i` used
//! by the weighted-sum solves. At `alpha = 0` the construction collapses to
//! the standard basis and `w_i = e_i`.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const HALF_PI: f64 = std::f64::consts::FRAC_PI_2;

/// Per-objective rotation angles in radians, each in `[0, pi/2)`.
///
/// Entry `i` is unused when building the spanning matrix for objective `i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct AlphaSpec(Vec<f64>);

impl AlphaSpec {
    pub fn new(angles: Vec<f64>) -> Result<Self> {
        if angles.len() < 2 {
            return Err(Error::TooFewObjectives { got: angles.len() });
        }
        for &a in &angles {
            if !a.is_finite() || !(0.0..HALF_PI).contains(&a) {
                return Err(Error::AlphaOutOfRange { radians: a });
            }
        }
        Ok(Self(angles))
    }

    /// All components set to the same angle.
    pub fn uniform(n: usize, alpha: f64) -> Result<Self> {
        Self::new(vec![alpha; n])
    }

    pub fn angles(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when every component is zero (standard individual minima).
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0.0)
    }
}

impl TryFrom<Vec<f64>> for AlphaSpec {
    type Error = Error;

    fn try_from(angles: Vec<f64>) -> Result<Self> {
        Self::new(angles)
    }
}

impl From<AlphaSpec> for Vec<f64> {
    fn from(a: AlphaSpec) -> Vec<f64> {
        a.0
    }
}

/// Givens rotation in the `(l, m)` coordinate plane of an `n`-dimensional
/// space (`l < m`, zero-based): the identity with entries
/// `(l,l) = (m,m) = cos(phi)`, `(l,m) = -sin(phi)`, `(m,l) = sin(phi)`.
pub fn givens_rotation(l: usize, m: usize, phi: f64, n: usize) -> Result<DMatrix<f64>> {
    if l >= m || m >= n {
        return Err(Error::InvalidPlane { l, m, n });
    }
    if !phi.is_finite() {
        return Err(Error::NonFinite {
            context: "rotation angle",
        });
    }
    let (s, c) = phi.sin_cos();
    let mut r = DMatrix::identity(n, n);
    r[(l, l)] = c;
    r[(m, m)] = c;
    r[(l, m)] = -s;
    r[(m, l)] = s;
    Ok(r)
}

/// Spanning vector for objective `i` along axis `k`: the basis vector `e_k`
/// rotated by `sign(k - i) * alpha_k` in the `(min(k,i), max(k,i))` plane,
/// which tilts it towards `-e_i`.
pub fn rotated_spanning_vector(i: usize, k: usize, alpha_k: f64, n: usize) -> Result<DVector<f64>> {
    if i == k || i >= n || k >= n {
        return Err(Error::InvalidPlane {
            l: i.min(k),
            m: i.max(k),
            n,
        });
    }
    if !alpha_k.is_finite() || !(0.0..HALF_PI).contains(&alpha_k) {
        return Err(Error::AlphaOutOfRange { radians: alpha_k });
    }
    let sign = if k > i { 1.0 } else { -1.0 };
    let rotation = givens_rotation(k.min(i), k.max(i), sign * alpha_k, n)?;
    let mut e_k = DVector::zeros(n);
    e_k[k] = 1.0;
    Ok(rotation * e_k)
}

/// The `n x (n-1)` matrix of rotated spanning vectors for one objective,
/// columns ordered by ascending axis index `k != i`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningMatrix {
    objective_index: usize,
    matrix: DMatrix<f64>,
}

impl SpanningMatrix {
    /// Index of the objective whose hyperplane this matrix spans.
    pub fn objective_index(&self) -> usize {
        self.objective_index
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn n_objectives(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Build the spanning matrix for objective `i` from per-axis angles.
/// With `alpha = 0` the columns are exactly the basis vectors `e_k`, `k != i`.
pub fn spanning_matrix(i: usize, alpha: &AlphaSpec) -> Result<SpanningMatrix> {
    let n = alpha.len();
    if i >= n {
        return Err(Error::InvalidPlane { l: i, m: i, n });
    }
    let columns: Vec<DVector<f64>> = (0..n)
        .filter(|&k| k != i)
        .map(|k| rotated_spanning_vector(i, k, alpha.angles()[k], n))
        .collect::<Result<_>>()?;
    Ok(SpanningMatrix {
        objective_index: i,
        matrix: DMatrix::from_columns(&columns),
    })
}

/// Unit direction orthogonal to every column of `a` (an `n x (n-1)` matrix),
/// computed as the eigenvector of the smallest eigenvalue of `a * a^T`.
/// The second-smallest eigenvalue doubles as the rank check.
pub(crate) fn orthogonal_complement(a: &DMatrix<f64>) -> Result<DVector<f64>> {
    debug_assert_eq!(a.ncols() + 1, a.nrows());
    let gram = a * a.transpose();
    let eig = nalgebra::linalg::SymmetricEigen::new(gram);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&x, &y| eig.eigenvalues[x].total_cmp(&eig.eigenvalues[y]));
    let lambda_max = eig.eigenvalues[order[order.len() - 1]].abs();
    if eig.eigenvalues[order[1]].abs() <= 1e-24 * lambda_max.max(f64::MIN_POSITIVE) {
        return Err(Error::RankDeficient);
    }
    let w = eig.eigenvectors.column(order[0]).into_owned();
    let residual = (a.transpose() * &w).amax();
    let col_scale = a.amax().max(1.0);
    if residual > 1e-12 * col_scale {
        return Err(Error::RankDeficient);
    }
    Ok(w)
}

/// Unit normal of the hyperplane spanned by the columns, with the sign fixed
/// so the component at the spanning objective's index is positive.
/// Orthogonality holds to a residual below `1e-12`.
pub fn hyperplane_normal(spanning: &SpanningMatrix) -> Result<Vec<f64>> {
    let mut w = orthogonal_complement(spanning.matrix())?;
    if w[spanning.objective_index()] < 0.0 {
        w.neg_mut();
    }
    Ok(w.iter().copied().collect())
}

/// Nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Validate simplex membership: components `>= 0` and sum `== 1`, both
    /// within `1e-12`. Rounding-level negatives are clamped to zero.
    pub fn simplex(weights: Vec<f64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::TooFewObjectives { got: weights.len() });
        }
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite {
                context: "weight vector",
            });
        }
        if weights.iter().any(|&w| w < -1e-12) {
            return Err(Error::MixedSigns);
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::NotOnSimplex { sum });
        }
        Ok(Self(weights.into_iter().map(|w| w.max(0.0)).collect()))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl AsRef<[f64]> for WeightVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = Error;

    fn try_from(weights: Vec<f64>) -> Result<Self> {
        Self::simplex(weights)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Vec<f64> {
        w.0
    }
}

/// Scale a one-signed vector onto the simplex: `w = v / sum(v)`.
///
/// Components within rounding noise of zero (relative `1e-12`) are treated
/// as zero; genuinely mixed signs yield [`Error::MixedSigns`] since no
/// positive rescaling can produce nonnegative weights.
pub fn simplex_scale(normal: &[f64]) -> Result<WeightVector> {
    if normal.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            context: "hyperplane normal",
        });
    }
    let magnitude = normal.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if magnitude == 0.0 {
        return Err(Error::ZeroVector);
    }
    let tol = 1e-12 * magnitude;
    let has_pos = normal.iter().any(|&v| v > tol);
    let has_neg = normal.iter().any(|&v| v < -tol);
    if has_pos && has_neg {
        return Err(Error::MixedSigns);
    }
    let sum: f64 = normal.iter().sum();
    if sum == 0.0 {
        return Err(Error::ZeroVector);
    }
    WeightVector::simplex(normal.iter().map(|v| v / sum).collect())
}

/// Rescale `v` so its absolute values sum to one and its largest-magnitude
/// component is positive (magnitude ties break towards the smallest index).
/// Idempotent, and the output is always parallel to the input.
pub fn scal(v: &[f64]) -> Result<Vec<f64>> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite {
            context: "scal input",
        });
    }
    let abs_sum: f64 = v.iter().map(|x| x.abs()).sum();
    if abs_sum == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut i_max = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[i_max].abs() {
            i_max = i;
        }
    }
    let c = if v[i_max] < 0.0 { -1.0 } else { 1.0 } / abs_sum;
    if !c.is_finite() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| c * x).collect())
}

/// Worst pairwise weight ratio `max_i max_{l != m} w_l / w_m` over all
/// objectives' weight vectors at the common angle `alpha_bar`.
///
/// Strictly decreasing in `alpha_bar`; returns `f64::INFINITY` at
/// `alpha_bar = 0`, where the weights collapse to basis vectors.
pub fn weight_ratio_bound(alpha_bar: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooFewObjectives { got: n });
    }
    if !alpha_bar.is_finite() || !(0.0..HALF_PI).contains(&alpha_bar) {
        return Err(Error::AlphaOutOfRange { radians: alpha_bar });
    }
    if alpha_bar == 0.0 {
        return Ok(f64::INFINITY);
    }
    let alpha = AlphaSpec::uniform(n, alpha_bar)?;
    let mut bound = 0.0_f64;
    for i in 0..n {
        let w = simplex_scale(&hyperplane_normal(&spanning_matrix(i, &alpha)?)?)?;
        for l in 0..n {
            for m in 0..n {
                if l != m {
                    bound = bound.max(w[l] / w[m]);
                }
            }
        }
    }
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const DEG: f64 = std::f64::consts::PI / 180.0;

    /// Closed-form weight direction for heterogeneous angles: component `i`
    /// is 1 and component `k != i` is `tan(alpha_k)`. Independent route used
    /// to cross-check the eigen-based normal.
    fn closed_form_weight(i: usize, alpha: &AlphaSpec) -> Vec<f64> {
        let n = alpha.len();
        let raw: Vec<f64> = (0..n)
            .map(|k| if k == i { 1.0 } else { alpha.angles()[k].tan() })
            .collect();
        let sum: f64 = raw.iter().sum();
        raw.into_iter().map(|v| v / sum).collect()
    }

    #[test]
    fn givens_zero_angle_is_identity() {
        let r = givens_rotation(0, 1, 0.0, 3).unwrap();
        assert_eq!(r, DMatrix::identity(3, 3));
    }

    #[test]
    fn givens_quarter_turn_of_e2() {
        let r = givens_rotation(0, 1, std::f64::consts::FRAC_PI_2, 2).unwrap();
        let e2 = DVector::from_vec(vec![0.0, 1.0]);
        let v = r * e2;
        assert_relative_eq!(v[0], -1.0, max_relative = 1e-15);
        assert!(v[1].abs() < 1e-15);
    }

    #[test]
    fn givens_ten_degrees_on_e2() {
        let r = givens_rotation(0, 1, 10.0 * DEG, 3).unwrap();
        let e2 = DVector::from_vec(vec![0.0, 1.0, 0.0]);
        let v = r * e2;
        assert_relative_eq!(v[0], -(10.0 * DEG).sin(), max_relative = 1e-15);
        assert_relative_eq!(v[1], (10.0 * DEG).cos(), max_relative = 1e-15);
        assert_eq!(v[2], 0.0);
        // Matches the quoted decimals.
        assert_relative_eq!(v[0], -0.173648, max_relative = 1e-5);
        assert_relative_eq!(v[1], 0.984808, max_relative = 1e-5);
    }

    #[test]
    fn givens_rejects_bad_planes() {
        assert!(matches!(
            givens_rotation(1, 1, 0.1, 3),
            Err(Error::InvalidPlane { .. })
        ));
        assert!(matches!(
            givens_rotation(2, 1, 0.1, 3),
            Err(Error::InvalidPlane { .. })
        ));
        assert!(matches!(
            givens_rotation(0, 3, 0.1, 3),
            Err(Error::InvalidPlane { .. })
        ));
    }

    #[test]
    fn rotated_vector_recovers_basis_at_zero() {
        let v = rotated_spanning_vector(0, 1, 0.0, 2).unwrap();
        assert_eq!(v.as_slice(), &[0.0, 1.0]);
    }

    #[test]
    fn rotated_vector_tilts_towards_negative_ei() {
        let a = 10.0 * DEG;
        // i < k: e_2 rotated by +alpha in the (1,2) plane.
        let v = rotated_spanning_vector(0, 1, a, 2).unwrap();
        assert_relative_eq!(v[0], -a.sin(), max_relative = 1e-15);
        assert_relative_eq!(v[1], a.cos(), max_relative = 1e-15);
        // i > k: e_1 rotated by -alpha in the (1,2) plane.
        let v = rotated_spanning_vector(1, 0, a, 2).unwrap();
        assert_relative_eq!(v[0], a.cos(), max_relative = 1e-15);
        assert_relative_eq!(v[1], -a.sin(), max_relative = 1e-15);
    }

    #[test]
    fn rotated_vector_rejects_equal_indices() {
        assert!(matches!(
            rotated_spanning_vector(1, 1, 0.1, 3),
            Err(Error::InvalidPlane { .. })
        ));
    }

    #[test]
    fn spanning_matrix_at_zero_is_basis_complement() {
        let alpha = AlphaSpec::uniform(3, 0.0).unwrap();
        let s = spanning_matrix(0, &alpha).unwrap();
        assert_eq!(s.matrix().column(0).as_slice(), &[0.0, 1.0, 0.0]);
        assert_eq!(s.matrix().column(1).as_slice(), &[0.0, 0.0, 1.0]);
    }

    #[test]
    fn spanning_matrix_ten_degrees() {
        let a = 10.0 * DEG;
        let (s10, c10) = a.sin_cos();
        let alpha = AlphaSpec::uniform(3, a).unwrap();

        let s = spanning_matrix(0, &alpha).unwrap();
        let expect = [[-s10, c10, 0.0], [-s10, 0.0, c10]];
        for (col, want) in s.matrix().column_iter().zip(expect) {
            for (got, w) in col.iter().zip(want) {
                assert_relative_eq!(*got, w, epsilon = 1e-15);
            }
        }

        let s = spanning_matrix(1, &alpha).unwrap();
        let expect = [[c10, -s10, 0.0], [0.0, -s10, c10]];
        for (col, want) in s.matrix().column_iter().zip(expect) {
            for (got, w) in col.iter().zip(want) {
                assert_relative_eq!(*got, w, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn normal_of_coordinate_hyperplane() {
        let alpha = AlphaSpec::uniform(3, 0.0).unwrap();
        let w = hyperplane_normal(&spanning_matrix(0, &alpha).unwrap()).unwrap();
        assert!((w[0] - 1.0).abs() <= 1e-14);
        assert!(w[1].abs() <= 1e-14);
        assert!(w[2].abs() <= 1e-14);
    }

    #[test]
    fn normal_matches_cross_product_route() {
        let a = 10.0 * DEG;
        let (s10, c10) = a.sin_cos();
        let alpha = AlphaSpec::uniform(3, a).unwrap();
        let w = hyperplane_normal(&spanning_matrix(0, &alpha).unwrap()).unwrap();
        // Cross product of (-s, c, 0) and (-s, 0, c) is (c^2, sc, sc),
        // parallel to (c, s, s).
        let norm = (c10 * c10 + 2.0 * s10 * s10).sqrt();
        assert_relative_eq!(w[0], c10 / norm, max_relative = 1e-12);
        assert_relative_eq!(w[1], s10 / norm, max_relative = 1e-12);
        assert_relative_eq!(w[2], s10 / norm, max_relative = 1e-12);
    }

    #[test]
    fn normal_in_two_dimensions() {
        let a = 10.0 * DEG;
        let alpha = AlphaSpec::uniform(2, a).unwrap();
        let w = hyperplane_normal(&spanning_matrix(0, &alpha).unwrap()).unwrap();
        assert_relative_eq!(w[0], a.cos(), max_relative = 1e-12);
        assert_relative_eq!(w[1], a.sin(), max_relative = 1e-12);
    }

    #[test]
    fn simplex_scale_examples() {
        let a = 10.0 * DEG;
        let (s10, c10) = a.sin_cos();
        let w = simplex_scale(&[c10, s10, s10]).unwrap();
        let denom = c10 + 2.0 * s10;
        assert_relative_eq!(w[0], c10 / denom, max_relative = 1e-15);
        assert_relative_eq!(w[1], s10 / denom, max_relative = 1e-15);
        assert_relative_eq!(w[2], s10 / denom, max_relative = 1e-15);
        // Quoted decimals.
        assert_relative_eq!(w[0], 0.739290, max_relative = 2e-5);
        assert_relative_eq!(w[1], 0.130355, max_relative = 2e-5);

        let e1 = simplex_scale(&[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(e1.as_slice(), &[1.0, 0.0, 0.0]);

        assert!(matches!(
            simplex_scale(&[1.0, -1.0]),
            Err(Error::MixedSigns)
        ));
    }

    #[test]
    fn simplex_scale_accepts_negative_direction() {
        let w = simplex_scale(&[-2.0, -2.0]).unwrap();
        assert_eq!(w.as_slice(), &[0.5, 0.5]);
    }

    #[test]
    fn scal_examples() {
        assert_eq!(scal(&[1.0, 1.0, 1.0]).unwrap(), vec![1.0 / 3.0; 3]);
        assert_eq!(scal(&[-2.0, -6.0]).unwrap(), vec![0.25, 0.75]);
        assert!(matches!(scal(&[0.0, 0.0]), Err(Error::ZeroVector)));
    }

    #[test]
    fn scal_idempotent_on_reported_knee_weight() {
        // A knee weight whose absolute values already sum to one and whose
        // largest component is positive must pass through unchanged.
        let v = [-0.0239, 0.9673, -0.0088];
        for c in [1.0, -2.5, 0.001] {
            let scaled: Vec<f64> = v.iter().map(|x| c * x).collect();
            let out = scal(&scaled).unwrap();
            for (got, want) in out.iter().zip(v) {
                assert_relative_eq!(*got, want, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn scal_breaks_magnitude_ties_towards_smallest_index() {
        let out = scal(&[-1.0, 1.0]).unwrap();
        // i_max = 0, so the sign flips to make component 0 positive.
        assert_eq!(out, vec![0.5, -0.5]);
    }

    #[test]
    fn weight_ratio_bound_examples() {
        assert_relative_eq!(
            weight_ratio_bound(45.0 * DEG, 2).unwrap(),
            1.0,
            max_relative = 1e-12
        );
        let cot10 = 1.0 / (10.0 * DEG).tan();
        assert_relative_eq!(
            weight_ratio_bound(10.0 * DEG, 2).unwrap(),
            cot10,
            max_relative = 1e-12
        );
        assert!(weight_ratio_bound(3.0 * DEG, 3).unwrap() < 20.0);
    }

    #[test]
    fn weight_ratio_bound_edge_cases() {
        assert!(weight_ratio_bound(0.0, 4).unwrap().is_infinite());
        assert!(matches!(
            weight_ratio_bound(-0.1, 3),
            Err(Error::AlphaOutOfRange { .. })
        ));
        assert!(matches!(
            weight_ratio_bound(HALF_PI, 3),
            Err(Error::AlphaOutOfRange { .. })
        ));
        assert!(matches!(
            weight_ratio_bound(0.1, 1),
            Err(Error::TooFewObjectives { .. })
        ));
    }

    #[test]
    fn weight_ratio_bound_strictly_decreasing_on_degree_grid() {
        for n in 2..=6 {
            let mut prev = f64::INFINITY;
            for deg in 1..=10 {
                let l = weight_ratio_bound(deg as f64 * DEG, n).unwrap();
                assert!(
                    l < prev,
                    "L-bar not strictly decreasing at {deg} deg, n={n}: {l} vs {prev}"
                );
                prev = l;
            }
        }
    }

    #[test]
    fn weight_ratio_bound_dimension_invariance_observed() {
        // Observed numerically, reported rather than asserted fatally.
        let mut worst: f64 = 0.0;
        for deg in 1..=10 {
            let base = weight_ratio_bound(deg as f64 * DEG, 2).unwrap();
            for n in 3..=6 {
                let l = weight_ratio_bound(deg as f64 * DEG, n).unwrap();
                worst = worst.max((l - base).abs() / base);
            }
        }
        if worst >= 1e-9 {
            eprintln!("warning: L-bar dimension spread {worst:e} exceeds 1e-9");
        }
    }

    #[test]
    fn alpha_spec_validation() {
        assert!(AlphaSpec::new(vec![0.0, 0.1]).is_ok());
        assert!(matches!(
            AlphaSpec::new(vec![0.0, HALF_PI]),
            Err(Error::AlphaOutOfRange { .. })
        ));
        assert!(matches!(
            AlphaSpec::new(vec![-0.1, 0.1]),
            Err(Error::AlphaOutOfRange { .. })
        ));
        assert!(matches!(
            AlphaSpec::new(vec![0.1]),
            Err(Error::TooFewObjectives { .. })
        ));
    }

    proptest! {
        /// Rotations are orthogonal: R^T R = I within 1e-12.
        #[test]
        fn prop_givens_orthogonal(
            phi in -3.0_f64..3.0,
            n in 2_usize..7,
            seed in 0_usize..100,
        ) {
            let m = 1 + seed % (n - 1);
            let l = seed % m;
            let r = givens_rotation(l, m, phi, n).unwrap();
            let prod = r.transpose() * &r;
            let id = DMatrix::identity(n, n);
            prop_assert!((prod - id).amax() < 1e-12);
        }

        /// Columns have unit norm and the normal is orthogonal to them all.
        #[test]
        fn prop_spanning_columns_unit_and_normal_orthogonal(
            raw in proptest::collection::vec(0.0_f64..1.56, 2..6),
        ) {
            let alpha = AlphaSpec::new(raw).unwrap();
            for i in 0..alpha.len() {
                let s = spanning_matrix(i, &alpha).unwrap();
                for col in s.matrix().column_iter() {
                    prop_assert!((col.norm() - 1.0).abs() < 1e-12);
                }
                let w = hyperplane_normal(&s).unwrap();
                let wv = DVector::from_vec(w.clone());
                prop_assert!((s.matrix().transpose() * wv).amax() < 1e-12);
            }
        }

        /// Strictly positive angles yield strictly positive simplex weights,
        /// matching the closed-form tangent pattern.
        #[test]
        fn prop_positive_alpha_gives_positive_weights(
            raw in proptest::collection::vec(0.01_f64..1.55, 2..6),
        ) {
            let alpha = AlphaSpec::new(raw).unwrap();
            for i in 0..alpha.len() {
                let w =
                    simplex_scale(&hyperplane_normal(&spanning_matrix(i, &alpha).unwrap()).unwrap())
                        .unwrap();
                let expect = closed_form_weight(i, &alpha);
                for (got, want) in w.as_slice().iter().zip(&expect) {
                    prop_assert!(*got > 0.0);
                    prop_assert!((got - want).abs() <= 1e-10 * want.abs().max(1.0));
                }
            }
        }

        /// At alpha = 0 the weight vector is exactly the basis vector.
        #[test]
        fn prop_zero_alpha_recovers_basis_weight(n in 2_usize..7) {
            let alpha = AlphaSpec::uniform(n, 0.0).unwrap();
            for i in 0..n {
                let w =
                    simplex_scale(&hyperplane_normal(&spanning_matrix(i, &alpha).unwrap()).unwrap())
                        .unwrap();
                for (k, v) in w.as_slice().iter().enumerate() {
                    let want = if k == i { 1.0 } else { 0.0 };
                    prop_assert!((v - want).abs() <= 1e-14);
                }
            }
        }

        /// scal output is parallel to the input, has unit absolute sum, and
        /// is a fixed point of scal.
        #[test]
        fn prop_scal_contract(
            v in proptest::collection::vec(-10.0_f64..10.0, 2..6),
        ) {
            prop_assume!(v.iter().any(|x| x.abs() > 1e-9));
            let out = scal(&v).unwrap();
            let abs_sum: f64 = out.iter().map(|x| x.abs()).sum();
            prop_assert!((abs_sum - 1.0).abs() < 1e-12);
            // Parallel: out x v = 0 for every pair of components.
            for a in 0..v.len() {
                for b in a + 1..v.len() {
                    prop_assert!((out[a] * v[b] - out[b] * v[a]).abs() < 1e-9);
                }
            }
            let again = scal(&out).unwrap();
            for (x, y) in out.iter().zip(&again) {
                prop_assert!((x - y).abs() < 1e-15);
            }
        }
    }
}
