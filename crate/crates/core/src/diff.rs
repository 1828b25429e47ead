//! Geometric forward and backward difference operators on sampled data.
//!
//! Nodes must be geometrically equidistant, i.e. form a geometric progression
//! in the ordinary sense, so that the common geometric step `h = x_{i+1} ⊖ x_i`
//! is a single number. Tables are built eagerly, column by column, entirely in
//! log coordinates.

use crate::arith::GNum;
use crate::error::{GeoError, Result};

/// Default relative tolerance on log gaps when validating node spacing.
pub const DEFAULT_SPACING_TOLERANCE: f64 = 1e-9;

/// Which end of the table a difference stencil anchors to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }
}

/// Sampled values `f(x_i)` on nodes forming a geometric progression.
#[derive(Debug, Clone, PartialEq)]
pub struct GTable {
    nodes: Vec<GNum>,
    values: Vec<GNum>,
    step: GNum,
}

impl GTable {
    /// Validates and builds a table from geometric numbers.
    ///
    /// The step is taken from the first pair of nodes; every other log gap
    /// must match it to within `spacing_tolerance` (relative). Nodes must
    /// strictly increase in geometric order.
    pub fn new(nodes: Vec<GNum>, values: Vec<GNum>, spacing_tolerance: f64) -> Result<Self> {
        let got = nodes.len().min(values.len());
        if got < 2 {
            return Err(GeoError::TableTooSmall { min: 2, got });
        }
        if nodes.len() != values.len() {
            return Err(GeoError::Domain(format!(
                "node and value counts differ: {} vs {}",
                nodes.len(),
                values.len()
            )));
        }
        let gap0 = nodes[1].log_value() - nodes[0].log_value();
        if gap0 <= 0.0 {
            return Err(GeoError::NodeSpacing(
                "nodes must strictly increase in geometric order".into(),
            ));
        }
        for i in 1..nodes.len() - 1 {
            let gap = nodes[i + 1].log_value() - nodes[i].log_value();
            if (gap - gap0).abs() > spacing_tolerance * gap0.abs() {
                return Err(GeoError::NodeSpacing(format!(
                    "log gap {gap} at position {i} differs from the leading gap {gap0}"
                )));
            }
        }
        Ok(GTable {
            nodes,
            values,
            step: GNum::from_exponent(gap0)?,
        })
    }

    /// Builds a table from positive decimal samples.
    pub fn from_reals(xs: &[f64], fs: &[f64], spacing_tolerance: f64) -> Result<Self> {
        let nodes = xs
            .iter()
            .map(|&v| GNum::from_real(v))
            .collect::<Result<Vec<_>>>()?;
        let values = fs
            .iter()
            .map(|&v| GNum::from_real(v))
            .collect::<Result<Vec<_>>>()?;
        GTable::new(nodes, values, spacing_tolerance)
    }

    pub fn nodes(&self) -> &[GNum] {
        &self.nodes
    }

    pub fn values(&self) -> &[GNum] {
        &self.values
    }

    /// The common geometric step `h = x_{i+1} ⊖ x_i`.
    pub fn step(&self) -> GNum {
        self.step
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Triangular table of iterated geometric differences.
///
/// `columns[0]` holds the sampled values; `columns[k][i]` is the order-k
/// forward difference at node `i`, which for the backward reading is the
/// order-k backward difference at node `i + k`.
#[derive(Debug, Clone)]
pub struct DiffTable {
    direction: Direction,
    columns: Vec<Vec<GNum>>,
    source: GTable,
}

/// Full forward difference table: `columns[k][i] = f(x_{i+1}..) ⊖ ...` by the
/// recurrence `Δ^k f(x_i) = Δ^(k-1) f(x_{i+1}) ⊖ Δ^(k-1) f(x_i)`.
pub fn forward_diff_table(table: &GTable) -> Result<DiffTable> {
    build_columns(table, Direction::Forward)
}

/// Full backward difference table by the recurrence
/// `∇^k f(x_i) = ∇^(k-1) f(x_i) ⊖ ∇^(k-1) f(x_{i-1})`.
pub fn backward_diff_table(table: &GTable) -> Result<DiffTable> {
    build_columns(table, Direction::Backward)
}

fn build_columns(table: &GTable, direction: Direction) -> Result<DiffTable> {
    // Entrywise the two recurrences fill the same triangle; only the node a
    // given entry is attributed to differs.
    let mut columns = vec![table.values().to_vec()];
    while columns.last().unwrap().len() > 1 {
        let prev = columns.last().unwrap();
        let next = prev
            .windows(2)
            .map(|w| w[1].gsub(w[0]))
            .collect::<Result<Vec<_>>>()?;
        columns.push(next);
    }
    Ok(DiffTable {
        direction,
        columns,
        source: table.clone(),
    })
}

impl DiffTable {
    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn columns(&self) -> &[Vec<GNum>] {
        &self.columns
    }

    pub fn column(&self, k: usize) -> &[GNum] {
        &self.columns[k]
    }

    /// Highest difference order held by the table.
    pub fn order(&self) -> usize {
        self.columns.len() - 1
    }

    pub fn source(&self) -> &GTable {
        &self.source
    }

    /// Order-k difference at the interpolation base: the first node for a
    /// forward table, the last node for a backward table.
    pub fn base_diff(&self, k: usize) -> GNum {
        match self.direction {
            Direction::Forward => self.columns[k][0],
            Direction::Backward => *self.columns[k].last().unwrap(),
        }
    }
}

/// Exact binomial coefficient, rejecting values that overflow `u128` or stop
/// being exactly representable in `f64`.
pub(crate) fn binomial(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for j in 0..k {
        c = c
            .checked_mul((n - j) as u128)
            .ok_or(GeoError::Overflow)?
            / (j as u128 + 1);
    }
    if c as f64 as u128 != c {
        return Err(GeoError::Overflow);
    }
    Ok(c)
}

/// Order-n geometric forward difference at node `i` by the closed binomial
/// form: `ln Δ^n f = Σ_k (-1)^k C(n,k) ln f(x_{i+n-k})`.
pub fn nth_forward_diff(table: &GTable, n: usize, i: usize) -> Result<GNum> {
    if i + n >= table.len() {
        return Err(GeoError::Index(format!(
            "forward difference of order {n} at node {i} needs node {} in a table of {}",
            i + n,
            table.len()
        )));
    }
    let values = table.values();
    let mut acc = 0.0;
    for k in 0..=n {
        let weight = binomial(n, k)? as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * weight * values[i + n - k].log_value();
    }
    GNum::from_exponent(acc)
}

/// Order-n geometric backward difference at node `i`:
/// `ln ∇^n f = Σ_k (-1)^k C(n,k) ln f(x_{i-k})`.
pub fn nth_backward_diff(table: &GTable, n: usize, i: usize) -> Result<GNum> {
    if i >= table.len() || n > i {
        return Err(GeoError::Index(format!(
            "backward difference of order {n} at node {i} needs node i - n >= 0"
        )));
    }
    let values = table.values();
    let mut acc = 0.0;
    for k in 0..=n {
        let weight = binomial(n, k)? as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * weight * values[i - k].log_value();
    }
    GNum::from_exponent(acc)
}

/// Factorial function `x^(n_G)`: the geometric product of n factors starting
/// at `x` and stepping down by `h`, i.e. `x ⊙ (x ⊖ e⊙h) ⊙ ... ⊙ (x ⊖ e^(n-1)⊙h)`.
/// The empty product (n = 0) is the geometric identity e.
pub fn factorial_function(x: GNum, n: usize, h: GNum) -> Result<GNum> {
    let lx = x.log_value();
    let lh = h.log_value();
    let mut acc = 1.0;
    for j in 0..n {
        acc *= lx - j as f64 * lh;
    }
    GNum::from_exponent(acc)
}
