//! Non-extreme individual minima for multi-objective optimization.
//!
//! Standard individual minima, the per-objective minimizers of a
//! multi-objective problem, sit at the extreme ends of the Pareto front
//! where trade-offs are steepest. This crate computes *non-extreme*
//! replacements by solving weighted-sum scalarizations whose weights are
//! hyperplane normals of rotated spanning matrices: each basis direction is
//! tilted by a Givens rotation through a chosen angle, which caps the
//! accepted trade-off ratio. The resulting payoff matrix yields a refined
//! utopia-nadir box for trimming Pareto-front sample clouds, a basis for
//! image-space normalization, and better-behaved knee-point weights.
//!
//! The main entry point is [`neim`], which runs the whole pipeline on any
//! [`WsProblem`] backend with exactly two weighted-sum solves per
//! objective. Two backends ship with the crate: the analytic
//! [`EllipsoidProblem`] family and the discrete [`PointCloudProblem`].
//!
//! ```
//! use neim_core::{neim, AlphaSpec, EllipsoidProblem};
//!
//! let sphere = EllipsoidProblem::unit_sphere(3)?;
//! let alpha = AlphaSpec::uniform(3, 10.0_f64.to_radians())?;
//! let report = neim(&sphere, &alpha, true)?;
//! // The non-extreme box is strictly inside the standard one.
//! assert!(report.nonextreme_box.nadir()[0] < report.standard_box.nadir()[0]);
//! # Ok::<(), neim_core::Error>(())
//! ```

pub mod algorithm;
pub mod error;
pub mod geometry;
pub mod image;
pub mod problems;
pub mod scalarization;

pub use algorithm::{
    dominates, filter_box, filter_box_indices, knee_point, knee_point_with, knee_weight, neim,
    neim_with, pareto_filter, pareto_filter_indices, ppe_check, standard_payoff, FilterStats,
    KneeOptions, KneeSolution, KneeWeight, NeimReport, PpeVerdict,
};
pub use error::{Error, Result};
pub use geometry::{
    givens_rotation, hyperplane_normal, rotated_spanning_vector, scal, simplex_scale,
    spanning_matrix, weight_ratio_bound, AlphaSpec, SpanningMatrix, WeightVector,
};
pub use image::{
    apply_normalization, normalization_from_box, normalization_from_box_with, utopia_nadir,
    DegeneratePolicy, Normalization, ObjectiveVector, PayoffKind, PayoffMatrix, UtopiaNadirBox,
};
pub use problems::{sample_sphere_front, EllipsoidProblem, PointCloudProblem};
pub use scalarization::{
    ps_solve_discrete, transform_weight, ws_solve, Decision, PsParameters, PsSelection, WsProblem,
    WsSolution,
};

pub use nalgebra;
