//! Image-space data types: objective vectors, payoff matrices, utopia-nadir
//! boxes, and the affine normalization onto the unit box.
//!
//! All values are immutable after construction and safe to share across
//! threads.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point in image space: one finite value per objective.
///
/// Invariants enforced at construction: at least two components, all finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ObjectiveVector(Vec<f64>);

impl ObjectiveVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooFewObjectives { got: values.len() });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "objective vector",
            });
        }
        Ok(Self(values))
    }

    /// Origin of an `n`-dimensional image space.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![0.0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    /// Component-wise `<=` against another vector of the same dimension.
    pub fn le(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl std::ops::Index<usize> for ObjectiveVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Lexicographic order on objective vectors; components are finite by
/// construction, so this is a total order.
pub(crate) fn lex_cmp(a: &ObjectiveVector, b: &ObjectiveVector) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.total_cmp(y) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

impl TryFrom<Vec<f64>> for ObjectiveVector {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<ObjectiveVector> for Vec<f64> {
    fn from(v: ObjectiveVector) -> Vec<f64> {
        v.0
    }
}

impl AsRef<[f64]> for ObjectiveVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Whether a payoff matrix was built from standard or non-extreme
/// individual minima.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PayoffKind {
    Standard,
    NonExtreme,
}

/// Square matrix whose column `i` holds the full objective vector at the
/// `i`-th individual minimum.
///
/// For `PayoffKind::Standard` the diagonal entry `(i, i)` must be the row-`i`
/// minimum of the matrix: column `i` attains the best value of objective `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffMatrix {
    columns: Vec<ObjectiveVector>,
    kind: PayoffKind,
}

impl PayoffMatrix {
    pub fn new(columns: Vec<ObjectiveVector>, kind: PayoffKind) -> Result<Self> {
        let n = columns.len();
        if n < 2 {
            return Err(Error::InvalidPayoff {
                reason: format!("need at least 2 columns, got {n}"),
            });
        }
        for col in &columns {
            if col.len() != n {
                return Err(Error::InvalidPayoff {
                    reason: format!("column of length {} in a {n}-objective matrix", col.len()),
                });
            }
        }
        if kind == PayoffKind::Standard {
            for i in 0..n {
                let row_min = (0..n).map(|c| columns[c][i]).fold(f64::INFINITY, f64::min);
                let diag = columns[i][i];
                let tol = 1e-12 * row_min.abs().max(1.0);
                if diag > row_min + tol {
                    return Err(Error::InvalidPayoff {
                        reason: format!(
                            "standard payoff diagonal ({i}, {i}) = {diag} exceeds row minimum {row_min}"
                        ),
                    });
                }
            }
        }
        Ok(Self { columns, kind })
    }

    pub fn standard(columns: Vec<ObjectiveVector>) -> Result<Self> {
        Self::new(columns, PayoffKind::Standard)
    }

    pub fn non_extreme(columns: Vec<ObjectiveVector>) -> Result<Self> {
        Self::new(columns, PayoffKind::NonExtreme)
    }

    pub fn n_objectives(&self) -> usize {
        self.columns.len()
    }

    pub fn kind(&self) -> PayoffKind {
        self.kind
    }

    pub fn columns(&self) -> &[ObjectiveVector] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &ObjectiveVector {
        &self.columns[i]
    }

    /// Entry in row `row` of column `col`.
    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.columns[col][row]
    }
}

/// Utopia and nadir points bounding a front region, `utopia <= nadir`
/// component-wise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UtopiaNadirBox {
    utopia: ObjectiveVector,
    nadir: ObjectiveVector,
}

impl UtopiaNadirBox {
    pub fn new(utopia: ObjectiveVector, nadir: ObjectiveVector) -> Result<Self> {
        if utopia.len() != nadir.len() {
            return Err(Error::DimensionMismatch {
                expected: utopia.len(),
                got: nadir.len(),
            });
        }
        for i in 0..utopia.len() {
            if utopia[i] > nadir[i] {
                return Err(Error::BoxInverted { objective: i });
            }
        }
        Ok(Self { utopia, nadir })
    }

    pub fn utopia(&self) -> &ObjectiveVector {
        &self.utopia
    }

    pub fn nadir(&self) -> &ObjectiveVector {
        &self.nadir
    }

    pub fn n_objectives(&self) -> usize {
        self.utopia.len()
    }
}

/// Row-wise minimum (utopia) and maximum (nadir) of a payoff matrix.
pub fn utopia_nadir(phi: &PayoffMatrix) -> UtopiaNadirBox {
    let n = phi.n_objectives();
    let mut utopia = vec![f64::INFINITY; n];
    let mut nadir = vec![f64::NEG_INFINITY; n];
    for col in phi.columns() {
        for i in 0..n {
            utopia[i] = utopia[i].min(col[i]);
            nadir[i] = nadir[i].max(col[i]);
        }
    }
    // Finite entries in, finite bounds out; utopia <= nadir by construction.
    UtopiaNadirBox::new(
        ObjectiveVector::new(utopia).expect("finite row minima"),
        ObjectiveVector::new(nadir).expect("finite row maxima"),
    )
    .expect("row-wise min never exceeds row-wise max")
}

/// How to proceed when an objective has zero range over the box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegeneratePolicy {
    /// Fail with [`Error::DegenerateRange`].
    Error,
    /// Substitute unit scale for the degenerate axis and continue.
    UnitScale,
}

/// Affine map taking a source box onto the unit box: shift by the utopia
/// point, then scale each axis by the inverse objective range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Normalization {
    shift: ObjectiveVector,
    scale: Vec<f64>,
}

impl Normalization {
    pub fn new(shift: ObjectiveVector, scale: Vec<f64>) -> Result<Self> {
        if shift.len() != scale.len() {
            return Err(Error::DimensionMismatch {
                expected: shift.len(),
                got: scale.len(),
            });
        }
        if let Some(i) = scale.iter().position(|s| !s.is_finite() || *s <= 0.0) {
            return Err(if scale[i].is_finite() {
                Error::DegenerateRange { objective: i }
            } else {
                Error::NonFinite {
                    context: "normalization scale",
                }
            });
        }
        Ok(Self { shift, scale })
    }

    /// The identity map on an `n`-dimensional image space.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(ObjectiveVector::zeros(n)?, vec![1.0; n])
    }

    pub fn shift(&self) -> &ObjectiveVector {
        &self.shift
    }

    pub fn scale(&self) -> &[f64] {
        &self.scale
    }

    pub fn n_objectives(&self) -> usize {
        self.scale.len()
    }
}

/// Build a [`Normalization`] from a box: shift by the utopia point and scale
/// each axis by `1 / (nadir_i - utopia_i)`.
///
/// An objective whose range is below `1e-12 * max(1, |nadir_i|)` yields
/// [`Error::DegenerateRange`]; it is constant over the individual minima and
/// carries no scale information.
pub fn normalization_from_box(bounds: &UtopiaNadirBox) -> Result<Normalization> {
    normalization_from_box_with(bounds, DegeneratePolicy::Error)
}

/// As [`normalization_from_box`], but with an explicit degenerate-range
/// policy. `DegeneratePolicy::UnitScale` keeps downstream filtering usable on
/// the remaining axes.
pub fn normalization_from_box_with(
    bounds: &UtopiaNadirBox,
    policy: DegeneratePolicy,
) -> Result<Normalization> {
    let n = bounds.n_objectives();
    let mut scale = Vec::with_capacity(n);
    for i in 0..n {
        let range = bounds.nadir()[i] - bounds.utopia()[i];
        let tol = 1e-12 * bounds.nadir()[i].abs().max(1.0);
        if range <= tol {
            match policy {
                DegeneratePolicy::Error => return Err(Error::DegenerateRange { objective: i }),
                DegeneratePolicy::UnitScale => scale.push(1.0),
            }
        } else {
            scale.push(1.0 / range);
        }
    }
    Normalization::new(bounds.utopia().clone(), scale)
}

/// Apply a normalization: `out_i = scale_i * (j_i - shift_i)`.
pub fn apply_normalization(norm: &Normalization, j: &ObjectiveVector) -> Result<ObjectiveVector> {
    if j.len() != norm.n_objectives() {
        return Err(Error::DimensionMismatch {
            expected: norm.n_objectives(),
            got: j.len(),
        });
    }
    let values = j
        .iter()
        .zip(norm.scale())
        .zip(norm.shift().iter())
        .map(|((v, s), c)| s * (v - c))
        .collect();
    ObjectiveVector::new(values)
}
