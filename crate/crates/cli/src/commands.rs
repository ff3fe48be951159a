//! Implementations of the six subcommands.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use neim_core::{
    filter_box_indices, hyperplane_normal, knee_point_with, neim_with, normalization_from_box_with,
    pareto_filter_indices, sample_sphere_front, simplex_scale, spanning_matrix, standard_payoff,
    AlphaSpec, DegeneratePolicy, EllipsoidProblem, KneeOptions, KneeSolution, ObjectiveVector,
    PayoffMatrix, PointCloudProblem, UtopiaNadirBox, WsProblem,
};

use crate::cloud::Cloud;
use crate::error::CliError;
use crate::report::{BoxDoc, KneeDoc, NormalizationDoc, Report};
use crate::{
    BoxChoice, FilterArgs, GenerateArgs, KneeArgs, LbarArgs, NeimArgs, ParetoArgs, PayoffChoice,
    WeightsArgs,
};

const DEG: f64 = std::f64::consts::PI / 180.0;

/// Either of the two shipped backends, selected by the problem flags.
enum Problem {
    Ellipsoid(EllipsoidProblem),
    Cloud(PointCloudProblem, PathBuf),
}

impl Problem {
    fn descriptor(&self) -> String {
        match self {
            Problem::Ellipsoid(p) => format!(
                "ellipsoid semi-axes [{}]",
                p.semi_axes()
                    .iter()
                    .map(f64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            Problem::Cloud(_, path) => format!("cloud {}", path.display()),
        }
    }

    fn backend(&self) -> &dyn WsProblem {
        match self {
            Problem::Ellipsoid(p) => p,
            Problem::Cloud(p, _) => p,
        }
    }

    fn cloud_points(&self) -> Option<&[ObjectiveVector]> {
        match self {
            Problem::Ellipsoid(_) => None,
            Problem::Cloud(p, _) => Some(p.points()),
        }
    }
}

fn load_problem(
    problem: &Option<String>,
    semi_axes: &Option<Vec<f64>>,
    cloud: &Option<PathBuf>,
) -> Result<Problem, CliError> {
    match (problem, cloud) {
        (Some(kind), None) => {
            if kind != "ellipsoid" {
                return Err(CliError::Usage(format!(
                    "unknown problem '{kind}'; only 'ellipsoid' is built in"
                )));
            }
            let axes = semi_axes.clone().ok_or_else(|| {
                CliError::Usage("--problem ellipsoid requires --semi-axes".into())
            })?;
            if axes.len() < 2 || axes.iter().any(|l| !l.is_finite() || *l <= 0.0) {
                return Err(CliError::Usage(
                    "--semi-axes needs at least two positive finite values".into(),
                ));
            }
            Ok(Problem::Ellipsoid(EllipsoidProblem::new(axes)?))
        }
        (None, Some(path)) => {
            if semi_axes.is_some() {
                return Err(CliError::Usage(
                    "--semi-axes only applies to --problem ellipsoid".into(),
                ));
            }
            let cloud = Cloud::load(path)?;
            if cloud.is_empty() {
                return Err(CliError::Data(format!(
                    "{}: cloud has no sample rows",
                    path.display()
                )));
            }
            Ok(Problem::Cloud(
                PointCloudProblem::with_ids(cloud.points().to_vec(), cloud.ids())?,
                path.clone(),
            ))
        }
        _ => Err(CliError::Usage(
            "pass exactly one problem source: --problem ellipsoid --semi-axes ... or --cloud FILE"
                .into(),
        )),
    }
}

/// Angles arrive in degrees; validate the range and convert once.
fn alpha_from_args(
    dim: usize,
    alpha: Option<f64>,
    alpha_vec: &Option<Vec<f64>>,
) -> Result<(Vec<f64>, AlphaSpec), CliError> {
    let degrees = match (alpha, alpha_vec) {
        (Some(a), None) => vec![a; dim],
        (None, Some(v)) => {
            if v.len() != dim {
                return Err(CliError::Usage(format!(
                    "--alpha-vec has {} entries but the problem has {dim} objectives",
                    v.len()
                )));
            }
            v.clone()
        }
        _ => {
            return Err(CliError::Usage(
                "pass exactly one of --alpha or --alpha-vec".into(),
            ))
        }
    };
    for &d in &degrees {
        if !d.is_finite() || !(0.0..90.0).contains(&d) {
            return Err(CliError::Usage(format!(
                "angle {d} out of range: need 0 <= alpha < 90 degrees"
            )));
        }
    }
    let spec = AlphaSpec::new(degrees.iter().map(|d| d * DEG).collect())?;
    Ok((degrees, spec))
}

fn reject_zero_alpha(degrees: &[f64], allow_standard: bool) -> Result<(), CliError> {
    if !allow_standard && degrees.contains(&0.0) {
        return Err(CliError::Usage(
            "alpha components must be strictly positive: a zero angle leaves the trade-off \
             ratio bound infinite and reproduces the standard individual minima; pass \
             --allow-standard to do that deliberately"
                .into(),
        ));
    }
    Ok(())
}

fn open_output(output: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match output {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| {
                CliError::Data(format!("{}: {e}", path.display()))
            })?))
        }
        None => Box::new(std::io::stdout().lock()),
    })
}

fn write_report(report: &Report, output: &Option<PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => report.save(path),
        None => report.write(std::io::stdout().lock()),
    }
}

pub fn cmd_weights(args: &WeightsArgs) -> Result<(), CliError> {
    if args.dim < 2 {
        return Err(CliError::Usage("--dim must be at least 2".into()));
    }
    let (degrees, alpha) = alpha_from_args(args.dim, args.alpha, &args.alpha_vec)?;

    let mut weights = Vec::with_capacity(args.dim);
    let mut spanning = Vec::with_capacity(args.dim);
    for i in 0..args.dim {
        let s = spanning_matrix(i, &alpha)?;
        weights.push(simplex_scale(&hyperplane_normal(&s)?)?.as_slice().to_vec());
        spanning.push(
            s.matrix()
                .column_iter()
                .map(|c| c.iter().copied().collect())
                .collect(),
        );
    }

    let report = Report {
        alpha_deg: Some(degrees),
        weights: Some(weights),
        spanning_matrices: Some(spanning),
        ..Report::default()
    };
    write_report(&report, &args.output)
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usage = || CliError::Usage(format!("--alpha-grid '{spec}': expected START:STEP:END"));
    if parts.len() != 3 {
        return Err(usage());
    }
    let start: f64 = parts[0].parse().map_err(|_| usage())?;
    let step: f64 = parts[1].parse().map_err(|_| usage())?;
    let end: f64 = parts[2].parse().map_err(|_| usage())?;
    if !start.is_finite() || !step.is_finite() || !end.is_finite() || step <= 0.0 || start > end {
        return Err(usage());
    }
    let mut values = Vec::new();
    let mut k = 0u32;
    loop {
        let v = start + f64::from(k) * step;
        if v > end + 1e-9 {
            break;
        }
        values.push(v);
        k += 1;
    }
    if values.iter().any(|&v| v <= 0.0 || v >= 90.0) {
        return Err(CliError::Usage(format!(
            "--alpha-grid '{spec}': values must lie strictly between 0 and 90 degrees"
        )));
    }
    Ok(values)
}

pub fn cmd_lbar(args: &LbarArgs) -> Result<(), CliError> {
    if args.dim < 2 {
        return Err(CliError::Usage("--dim must be at least 2".into()));
    }
    let grid = parse_grid(&args.alpha_grid)?;
    let mut out = open_output(&args.output)?;
    writeln!(out, "alpha_deg,lbar")?;
    for alpha_deg in grid {
        let lbar = neim_core::weight_ratio_bound(alpha_deg * DEG, args.dim)?;
        writeln!(out, "{alpha_deg},{lbar}")?;
    }
    out.flush()?;
    Ok(())
}

pub fn cmd_neim(args: &NeimArgs) -> Result<(), CliError> {
    let problem = load_problem(&args.problem, &args.semi_axes, &args.cloud)?;
    let dim = problem.backend().n_objectives();
    let (degrees, alpha) = alpha_from_args(dim, args.alpha, &args.alpha_vec)?;
    reject_zero_alpha(&degrees, args.allow_standard)?;

    let policy = if args.allow_degenerate {
        DegeneratePolicy::UnitScale
    } else {
        DegeneratePolicy::Error
    };
    let result = neim_with(problem.backend(), &alpha, !args.no_normalize, policy)?;

    let mut report = Report::from_neim(&result, degrees, problem.descriptor());
    if result.normalized {
        let norm = normalization_from_box_with(&result.standard_box, policy)?;
        report.normalization = Some(NormalizationDoc::from(&norm));
    }
    write_report(&report, &args.output)
}

fn box_from_args(
    args: &FilterArgs,
    points: &[ObjectiveVector],
    dim: usize,
) -> Result<(UtopiaNadirBox, bool), CliError> {
    match (&args.report, &args.nadir) {
        (Some(path), None) => {
            let report = Report::load(path)?;
            let doc = match args.box_choice {
                BoxChoice::Standard => report.box_standard.as_ref(),
                BoxChoice::NonExtreme => report.box_nonextreme.as_ref(),
            };
            let doc = doc.ok_or_else(|| {
                CliError::Data(format!(
                    "{}: report lacks the requested box",
                    path.display()
                ))
            })?;
            Ok((doc.to_box()?, args.use_utopia))
        }
        (None, Some(nadir)) => {
            if nadir.len() != dim {
                return Err(CliError::Data(format!(
                    "--nadir has {} entries but the cloud has {dim} objectives",
                    nadir.len()
                )));
            }
            let (utopia, use_utopia) = match &args.utopia {
                Some(utopia) => {
                    if utopia.len() != dim {
                        return Err(CliError::Data(format!(
                            "--utopia has {} entries but the cloud has {dim} objectives",
                            utopia.len()
                        )));
                    }
                    (utopia.clone(), true)
                }
                // No explicit lower corner: take the cloud's own minima so
                // the box diagonal (and with it the boundary tolerance)
                // stays on the data scale. The utopia side is only enforced
                // under --use-utopia.
                None => {
                    let lo = (0..dim)
                        .map(|i| points.iter().map(|p| p[i]).fold(nadir[i], f64::min))
                        .collect();
                    (lo, args.use_utopia)
                }
            };
            Ok((
                UtopiaNadirBox::new(
                    ObjectiveVector::new(utopia)?,
                    ObjectiveVector::new(nadir.clone())?,
                )?,
                use_utopia,
            ))
        }
        _ => Err(CliError::Usage(
            "pass exactly one box source: --report FILE or --nadir V1,V2,...".into(),
        )),
    }
}

pub fn cmd_filter(args: &FilterArgs) -> Result<(), CliError> {
    let cloud = Cloud::load(&args.cloud)?;
    let (bounds, use_utopia) = box_from_args(args, cloud.points(), cloud.dim())?;
    let (kept, stats) = filter_box_indices(cloud.points(), &bounds, use_utopia)?;

    match &args.output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            cloud.write_subset(&kept, BufWriter::new(file))?;
            println!(
                "kept {} of {} ({:.2}%)",
                stats.kept,
                stats.total,
                stats.kept_fraction * 100.0
            );
        }
        None => {
            cloud.write_subset(&kept, std::io::stdout().lock())?;
            eprintln!(
                "kept {} of {} ({:.2}%)",
                stats.kept,
                stats.total,
                stats.kept_fraction * 100.0
            );
        }
    }
    Ok(())
}

fn knee_doc(solution: &KneeSolution, cloud_points: Option<&[ObjectiveVector]>) -> KneeDoc {
    KneeDoc {
        weight: solution.weight.weights.clone(),
        has_negative_components: solution.weight.has_negative_components,
        solver_weight: solution.solver_weight.clone(),
        clamped: solution.clamped,
        objectives: solution.objectives.as_slice().to_vec(),
        decision: solution.decision.clone(),
        pareto_guaranteed: solution.pareto_guaranteed,
        dominated_in_cloud: cloud_points.map(|points| {
            points
                .iter()
                .any(|p| neim_core::dominates(p, &solution.objectives))
        }),
    }
}

pub fn cmd_knee(args: &KneeArgs) -> Result<(), CliError> {
    let problem = load_problem(&args.problem, &args.semi_axes, &args.cloud)?;
    let backend = problem.backend();
    let options = KneeOptions {
        strict: args.strict,
        clamp: args.clamp,
    };

    let want_standard = matches!(args.payoff, PayoffChoice::Standard | PayoffChoice::Both);
    let want_nonextreme = matches!(args.payoff, PayoffChoice::NonExtreme | PayoffChoice::Both);

    let mut report = Report {
        problem: Some(problem.descriptor()),
        ..Report::default()
    };

    let mut standard_phi: Option<PayoffMatrix> = None;
    if want_nonextreme {
        let dim = backend.n_objectives();
        let (degrees, alpha) = alpha_from_args(dim, args.alpha, &args.alpha_vec)?;
        reject_zero_alpha(&degrees, false)?;
        let result = neim_with(backend, &alpha, true, DegeneratePolicy::Error)?;
        let knee = knee_point_with(backend, &result.nonextreme_payoff, options)?;
        report.alpha_deg = Some(degrees);
        report.payoff_nonextreme = Some(
            result
                .nonextreme_payoff
                .columns()
                .iter()
                .map(|c| c.as_slice().to_vec())
                .collect(),
        );
        report.box_nonextreme = Some(BoxDoc::from(&result.nonextreme_box));
        report.knee_nonextreme = Some(knee_doc(&knee, problem.cloud_points()));
        standard_phi = Some(result.standard_payoff);
    }
    if want_standard {
        let phi = match standard_phi {
            Some(phi) => phi,
            None => standard_payoff(backend)?,
        };
        let knee = knee_point_with(backend, &phi, options)?;
        report.payoff_standard = Some(
            phi.columns()
                .iter()
                .map(|c| c.as_slice().to_vec())
                .collect(),
        );
        report.knee_standard = Some(knee_doc(&knee, problem.cloud_points()));
    }

    write_report(&report, &args.output)
}

pub fn cmd_pareto(args: &ParetoArgs) -> Result<(), CliError> {
    let cloud = Cloud::load(&args.cloud)?;
    let kept = pareto_filter_indices(cloud.points());
    let out = open_output(&args.output)?;
    cloud.write_subset(&kept, out)?;
    Ok(())
}

/// Emit a synthetic sphere-front cloud; handy for exercising the pipeline
/// without an external optimizer.
pub fn cmd_generate(args: &GenerateArgs) -> Result<(), CliError> {
    if args.dim < 2 {
        return Err(CliError::Usage("--dim must be at least 2".into()));
    }
    if args.count == 0 {
        return Err(CliError::Usage("--count must be positive".into()));
    }
    let points = sample_sphere_front(args.dim, args.count, args.seed)?;
    let mut out = open_output(&args.output)?;
    let header: Vec<String> = (1..=args.dim).map(|i| format!("J{i}")).collect();
    writeln!(out, "{}", header.join(","))?;
    for p in &points {
        let row: Vec<String> = p.iter().map(f64::to_string).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    out.flush()?;
    Ok(())
}
