//! The non-extreme individual-minima pipeline: payoff matrices from
//! weighted-sum solves, box filtering, dominance filtering, knee-point
//! weights, and the practical-proper-efficiency checker.
//!
//! [`neim`] runs the whole computation with exactly `2 n` weighted-sum
//! backend solves: `n` basis-weight solves for the standard payoff matrix,
//! then `n` rotated-weight solves (normalized by the utopia-nadir ranges)
//! for the non-extreme payoff matrix.

use crate::error::{Error, Result};
use crate::geometry::{
    hyperplane_normal, scal, simplex_scale, spanning_matrix, AlphaSpec, WeightVector,
};
use crate::image::{
    lex_cmp, normalization_from_box_with, utopia_nadir, DegeneratePolicy, ObjectiveVector,
    PayoffMatrix, UtopiaNadirBox,
};
use crate::scalarization::{transform_weight, ws_solve, Decision, WsProblem};

/// Everything produced by one [`neim`] run.
#[derive(Debug, Clone)]
pub struct NeimReport {
    pub standard_payoff: PayoffMatrix,
    pub nonextreme_payoff: PayoffMatrix,
    pub standard_box: UtopiaNadirBox,
    pub nonextreme_box: UtopiaNadirBox,
    /// Simplex-scaled hyperplane normals, one per objective.
    pub weights: Vec<WeightVector>,
    /// The weights actually handed to the backend (range-scaled when
    /// normalization is on).
    pub solver_weights: Vec<Vec<f64>>,
    pub alpha: AlphaSpec,
    pub normalized: bool,
}

/// Counts for a box-filter pass.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FilterStats {
    pub total: usize,
    pub kept: usize,
    pub kept_fraction: f64,
}

impl FilterStats {
    fn new(total: usize, kept: usize) -> Self {
        Self {
            total,
            kept,
            // Empty input counts as nothing kept.
            kept_fraction: if total == 0 {
                0.0
            } else {
                kept as f64 / total as f64
            },
        }
    }
}

fn basis_weight(n: usize, i: usize) -> Vec<f64> {
    let mut w = vec![0.0; n];
    w[i] = 1.0;
    w
}

/// Solve the `n` single-objective problems via basis weights and collect
/// the standard payoff matrix.
pub fn standard_payoff<P: WsProblem + ?Sized>(problem: &P) -> Result<PayoffMatrix> {
    let n = problem.n_objectives();
    let columns = (0..n)
        .map(|i| Ok(ws_solve(problem, &basis_weight(n, i))?.objectives))
        .collect::<Result<Vec<_>>>()?;
    PayoffMatrix::standard(columns)
}

/// Compute the non-extreme individual minima of `problem` for the given
/// rotation angles.
///
/// With `normalize` on, the rotated weights are scaled component-wise by
/// the inverse utopia-nadir ranges before the second round of solves, which
/// keeps the construction meaningful across differing objective ranges.
/// With `normalize` off the raw weights are used, which reproduces the
/// failure mode on badly scaled problems.
pub fn neim<P: WsProblem + ?Sized>(
    problem: &P,
    alpha: &AlphaSpec,
    normalize: bool,
) -> Result<NeimReport> {
    neim_with(problem, alpha, normalize, DegeneratePolicy::Error)
}

/// As [`neim`], with an explicit policy for objectives whose utopia-nadir
/// range is degenerate.
pub fn neim_with<P: WsProblem + ?Sized>(
    problem: &P,
    alpha: &AlphaSpec,
    normalize: bool,
    degenerate: DegeneratePolicy,
) -> Result<NeimReport> {
    let n = problem.n_objectives();
    if alpha.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: alpha.len(),
        });
    }

    // Step 0: rotated spanning matrices and their simplex-scaled normals.
    // Independent of the problem; computed once per alpha.
    let weights = (0..n)
        .map(|i| simplex_scale(&hyperplane_normal(&spanning_matrix(i, alpha)?)?))
        .collect::<Result<Vec<_>>>()?;

    // Step 1: standard payoff matrix (n solves).
    let standard = standard_payoff(problem)?;

    // Step 2: utopia, nadir, and the range normalization.
    let standard_box = utopia_nadir(&standard);
    let normalization = if normalize {
        Some(normalization_from_box_with(&standard_box, degenerate)?)
    } else {
        None
    };

    // Step 3: rotated-weight solves (n more) and the non-extreme payoff.
    let solver_weights = weights
        .iter()
        .map(|w| match &normalization {
            Some(norm) => transform_weight(w, norm),
            None => Ok(w.as_slice().to_vec()),
        })
        .collect::<Result<Vec<_>>>()?;
    let columns = solver_weights
        .iter()
        .map(|w| Ok(ws_solve(problem, w)?.objectives))
        .collect::<Result<Vec<_>>>()?;
    let nonextreme = PayoffMatrix::non_extreme(columns)?;
    let nonextreme_box = utopia_nadir(&nonextreme);

    // Any feasible image is bounded below by the true per-objective minima.
    debug_assert!(
        (0..n).all(|i| nonextreme_box.utopia()[i] >= standard_box.utopia()[i] - 1e-9),
        "non-extreme utopia fell below the standard utopia"
    );

    Ok(NeimReport {
        standard_payoff: standard,
        nonextreme_payoff: nonextreme,
        standard_box,
        nonextreme_box,
        weights,
        solver_weights,
        alpha: alpha.clone(),
        normalized: normalize,
    })
}

/// True when `a` dominates `b`: no worse anywhere, strictly better
/// somewhere. Both vectors must share a dimension.
pub fn dominates(a: &ObjectiveVector, b: &ObjectiveVector) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut strict = false;
    for (x, y) in a.iter().zip(b.iter()) {
        if x > y {
            return false;
        }
        if x < y {
            strict = true;
        }
    }
    strict
}

/// Indices of points inside the box: `J <= nadir` component-wise, plus
/// `J >= utopia` when `use_utopia` is set. Comparisons carry an absolute
/// tolerance of `1e-12` scaled by the box diagonal so boundary samples are
/// retained.
pub fn filter_box_indices(
    points: &[ObjectiveVector],
    bounds: &UtopiaNadirBox,
    use_utopia: bool,
) -> Result<(Vec<usize>, FilterStats)> {
    let n = bounds.n_objectives();
    let diagonal = bounds
        .nadir()
        .iter()
        .zip(bounds.utopia().iter())
        .map(|(hi, lo)| (hi - lo) * (hi - lo))
        .sum::<f64>()
        .sqrt();
    let tol = 1e-12 * diagonal;

    let mut kept = Vec::new();
    for (idx, p) in points.iter().enumerate() {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.len(),
            });
        }
        let below_nadir = (0..n).all(|i| p[i] <= bounds.nadir()[i] + tol);
        let above_utopia = !use_utopia || (0..n).all(|i| p[i] >= bounds.utopia()[i] - tol);
        if below_nadir && above_utopia {
            kept.push(idx);
        }
    }
    let stats = FilterStats::new(points.len(), kept.len());
    Ok((kept, stats))
}

/// As [`filter_box_indices`], returning the kept points themselves.
pub fn filter_box(
    points: &[ObjectiveVector],
    bounds: &UtopiaNadirBox,
    use_utopia: bool,
) -> Result<(Vec<ObjectiveVector>, FilterStats)> {
    let (indices, stats) = filter_box_indices(points, bounds, use_utopia)?;
    Ok((
        indices.into_iter().map(|i| points[i].clone()).collect(),
        stats,
    ))
}

/// Indices of the mutually nondominated points, in input order.
///
/// Points are visited in lexicographic order; since any dominator is
/// lexicographically smaller and domination is transitive, comparing each
/// candidate against the accepted survivors alone suffices.
pub fn pareto_filter_indices(points: &[ObjectiveVector]) -> Vec<usize> {
    let Some(first) = points.first() else {
        return Vec::new();
    };
    let dim = first.len();
    assert!(
        points.iter().all(|p| p.len() == dim),
        "pareto_filter requires uniform dimensions"
    );

    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| lex_cmp(&points[a], &points[b]).then(a.cmp(&b)));

    let mut survivors: Vec<usize> = Vec::new();
    for &idx in &order {
        if !survivors
            .iter()
            .any(|&s| dominates(&points[s], &points[idx]))
        {
            survivors.push(idx);
        }
    }
    survivors.sort_unstable();
    survivors
}

/// The maximal mutually nondominated subset, order-stable.
pub fn pareto_filter(points: &[ObjectiveVector]) -> Vec<ObjectiveVector> {
    pareto_filter_indices(points)
        .into_iter()
        .map(|i| points[i].clone())
        .collect()
}

/// Knee weight: the normal of the affine hyperplane through a payoff
/// matrix's columns, rescaled so its absolute values sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct KneeWeight {
    pub weights: Vec<f64>,
    /// Set when some component is meaningfully negative; a weighted-sum
    /// solve with such a weight rewards cost increases on those objectives
    /// and loses the Pareto-optimality guarantee.
    pub has_negative_components: bool,
}

/// Normal of the hyperplane through the payoff columns, via the nullspace
/// of the stacked column differences, scaled by [`scal`].
pub fn knee_weight(phi: &PayoffMatrix) -> Result<KneeWeight> {
    let n = phi.n_objectives();
    let mut differences = nalgebra::DMatrix::zeros(n, n - 1);
    for k in 1..n {
        for row in 0..n {
            differences[(row, k - 1)] = phi.entry(row, k) - phi.entry(row, 0);
        }
    }
    let eta = crate::geometry::orthogonal_complement(&differences).map_err(|e| match e {
        Error::RankDeficient => Error::DegenerateHull,
        other => other,
    })?;
    let weights = scal(eta.as_slice())?;
    let magnitude = weights.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let has_negative_components = weights.iter().any(|&w| w < -1e-12 * magnitude);
    Ok(KneeWeight {
        weights,
        has_negative_components,
    })
}

/// Behavior switches for [`knee_point_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct KneeOptions {
    /// Reject mixed-sign knee weights instead of solving with them.
    pub strict: bool,
    /// Clamp negative weight components to zero before solving. The solve
    /// then tends to degenerate towards an individual minimum, which is the
    /// documented trade-off of this safety layer.
    pub clamp: bool,
}

/// A knee-point solve together with the weight bookkeeping.
#[derive(Debug, Clone)]
pub struct KneeSolution {
    /// The raw hyperplane-normal weight.
    pub weight: KneeWeight,
    /// The weight handed to the solver (clamped when requested).
    pub solver_weight: Vec<f64>,
    pub clamped: bool,
    pub decision: Decision,
    pub objectives: ObjectiveVector,
    /// True when every solver weight component is strictly positive, in
    /// which case the solution is guaranteed Pareto optimal.
    pub pareto_guaranteed: bool,
}

/// Knee point via a weighted-sum solve with the hyperplane-normal weight.
pub fn knee_point<P: WsProblem + ?Sized>(problem: &P, phi: &PayoffMatrix) -> Result<KneeSolution> {
    knee_point_with(problem, phi, KneeOptions::default())
}

pub fn knee_point_with<P: WsProblem + ?Sized>(
    problem: &P,
    phi: &PayoffMatrix,
    options: KneeOptions,
) -> Result<KneeSolution> {
    let weight = knee_weight(phi)?;
    if options.strict && weight.has_negative_components {
        return Err(Error::MixedSigns);
    }
    let (solver_weight, clamped) = if options.clamp && weight.has_negative_components {
        let clamped: Vec<f64> = weight.weights.iter().map(|w| w.max(0.0)).collect();
        (scal(&clamped)?, true)
    } else {
        (weight.weights.clone(), false)
    };
    let solution = ws_solve(problem, &solver_weight)?;
    let pareto_guaranteed = solver_weight.iter().all(|&w| w > 0.0);
    Ok(KneeSolution {
        weight,
        solver_weight,
        clamped,
        decision: solution.decision,
        objectives: solution.objectives,
        pareto_guaranteed,
    })
}

/// Outcome of a practical-proper-efficiency check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PpeVerdict {
    Pass,
    /// First violation found: improving objective `objective` of point
    /// `point_index` costs more than the bound allows on every other axis.
    Fail {
        point_index: usize,
        objective: usize,
    },
}

/// Sample-based trade-off check against a candidate.
///
/// For every point that improves some objective over the candidate, some
/// other objective must deteriorate, and the improvement-to-deterioration
/// ratio must stay within `l_bound` (plus `1e-9` slack) for at least one
/// such axis. This scans a finite sample, so it is a necessary-condition
/// check, not a proof over a continuum.
pub fn ppe_check(
    points: &[ObjectiveVector],
    candidate: &ObjectiveVector,
    l_bound: f64,
) -> Result<PpeVerdict> {
    if !l_bound.is_finite() || l_bound <= 0.0 {
        return Err(Error::InvalidBound { value: l_bound });
    }
    let n = candidate.len();
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.len(),
            });
        }
    }
    if let Some(index) = points.iter().position(|p| dominates(p, candidate)) {
        return Err(Error::CandidateDominated { index });
    }

    for (point_index, x) in points.iter().enumerate() {
        for i in 0..n {
            if x[i] >= candidate[i] {
                continue;
            }
            let gain = candidate[i] - x[i];
            let within_bound = (0..n).any(|j| {
                j != i && x[j] > candidate[j] && gain / (x[j] - candidate[j]) <= l_bound + 1e-9
            });
            if !within_bound {
                return Ok(PpeVerdict::Fail {
                    point_index,
                    objective: i,
                });
            }
        }
    }
    Ok(PpeVerdict::Pass)
}
