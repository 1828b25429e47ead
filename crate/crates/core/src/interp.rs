//! Geometric Newton-Gregory forward and backward interpolation.
//!
//! Both interpolants are geometric polynomials through the table's nodes. In
//! log coordinates they are exactly the classical Newton-Gregory formulas
//! applied to `(ln x_i, ln f_i)`, which is also how the oracle tests check
//! them. The forward form anchors at the first node and consumes leading
//! differences; the backward form anchors at the last node and consumes
//! trailing differences.

use crate::arith::{rel_log_error, GNum};
use crate::diff::{backward_diff_table, forward_diff_table, DiffTable, Direction, GTable};
use crate::error::{GeoError, Result};

/// An evaluated interpolant: the value, the normalized offset `u`, and the
/// per-order geometric terms whose geometric sum is the value.
#[derive(Debug, Clone)]
pub struct InterpResult {
    pub value: GNum,
    pub offset_u: GNum,
    pub terms: Vec<GNum>,
    pub direction: Direction,
    pub extrapolated: bool,
}

impl InterpResult {
    /// Interpolation degree (one less than the number of terms).
    pub fn degree(&self) -> usize {
        self.terms.len() - 1
    }
}

/// Normalized query offset `u = (x ⊖ base) ⊘ h`.
pub fn relative_offset(x: GNum, base: GNum, h: GNum) -> Result<GNum> {
    x.gsub(base)?.gdiv(h)
}

/// Evaluates the degree-`degree` geometric Newton-Gregory forward interpolant
/// at `x`, anchored at the first node.
///
/// Term k is `(u ⊙ (u ⊖ e) ⊙ ... ⊙ (u ⊖ e^(k-1)) ⊘ k!_G) ⊙ Δ^k f(a)`; in log
/// coordinates the value is `Σ_k [Π_j (ln u - j) / k!] · ln Δ^k f(a)`.
pub fn interp_forward(table: &GTable, x: GNum, degree: usize) -> Result<InterpResult> {
    let diffs = forward_diff_table(table)?;
    let base = table.nodes()[0];
    evaluate(table, &diffs, x, base, degree, Direction::Forward)
}

/// Evaluates the geometric Newton-Gregory backward interpolant at `x`,
/// anchored at the last node.
///
/// Term k is `(u ⊙ (u ⊕ e) ⊙ ... ⊙ (u ⊕ e^(k-1)) ⊘ k!_G) ⊙ ∇^k f(last)`.
pub fn interp_backward(table: &GTable, x: GNum, degree: usize) -> Result<InterpResult> {
    let diffs = backward_diff_table(table)?;
    let base = *table.nodes().last().unwrap();
    evaluate(table, &diffs, x, base, degree, Direction::Backward)
}

fn evaluate(
    table: &GTable,
    diffs: &DiffTable,
    x: GNum,
    base: GNum,
    degree: usize,
    direction: Direction,
) -> Result<InterpResult> {
    let max = table.len() - 1;
    if degree < 1 || degree > max {
        return Err(GeoError::Degree { got: degree, max });
    }
    let u = relative_offset(x, base, table.step())?;
    let lu = u.log_value();

    let mut terms = Vec::with_capacity(degree + 1);
    terms.push(diffs.base_diff(0));
    let mut offset_product = 1.0; // Π_j (ln u ∓ j), the log of u^(k_G)
    let mut factorial = 1.0;
    for k in 1..=degree {
        let j = (k - 1) as f64;
        offset_product *= match direction {
            Direction::Forward => lu - j,
            Direction::Backward => lu + j,
        };
        factorial *= k as f64;
        let coefficient = offset_product / factorial;
        let term = GNum::from_exponent(coefficient * diffs.base_diff(k).log_value())?;
        terms.push(term);
    }

    // Accumulate exactly as gsum does so the terms invariant holds bit for bit.
    let mut value_log = 0.0;
    for term in &terms {
        value_log += term.log_value();
    }

    let first = table.nodes()[0].log_value();
    let last = table.nodes().last().unwrap().log_value();
    let extrapolated = x.log_value() < first || x.log_value() > last;

    Ok(InterpResult {
        value: GNum::from_exponent(value_log)?,
        offset_u: u,
        terms,
        direction,
        extrapolated,
    })
}

/// Node-reproduction audit: evaluates both degree-`degree` interpolants at
/// every node and reports the worst relative log error per direction.
#[derive(Debug, Clone, Copy)]
pub struct ExactnessReport {
    pub forward_max_rel_log_error: f64,
    pub backward_max_rel_log_error: f64,
    pub nodes_checked: usize,
}

impl ExactnessReport {
    pub fn max_rel_log_error(&self) -> f64 {
        self.forward_max_rel_log_error
            .max(self.backward_max_rel_log_error)
    }
}

pub fn exactness_check(table: &GTable, degree: usize) -> Result<ExactnessReport> {
    let mut forward_max = 0.0f64;
    let mut backward_max = 0.0f64;
    for (node, value) in table.nodes().iter().zip(table.values()) {
        let f = interp_forward(table, *node, degree)?;
        let b = interp_backward(table, *node, degree)?;
        forward_max = forward_max.max(rel_log_error(f.value, *value));
        backward_max = backward_max.max(rel_log_error(b.value, *value));
    }
    Ok(ExactnessReport {
        forward_max_rel_log_error: forward_max,
        backward_max_rel_log_error: backward_max,
        nodes_checked: table.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{gfactorial, gsum};
    use crate::diff::DEFAULT_SPACING_TOLERANCE;
    use proptest::prelude::*;

    fn g(t: f64) -> GNum {
        GNum::from_exponent(t).unwrap()
    }

    fn sine_table() -> GTable {
        let nodes = [1.0, 1.2, 1.4, 1.6].map(g).to_vec();
        let values = [0.0474, 0.0579, 0.0707, 0.0863]
            .map(|v| GNum::from_real(v).unwrap())
            .to_vec();
        GTable::new(nodes, values, DEFAULT_SPACING_TOLERANCE).unwrap()
    }

    fn log_table() -> GTable {
        GTable::from_reals(
            &[3.0, 6.0, 12.0, 24.0],
            &[1.0986, 1.7918, 2.4849, 3.1781],
            DEFAULT_SPACING_TOLERANCE,
        )
        .unwrap()
    }

    /// Classical Newton-Gregory forward interpolation on plain floats.
    fn newton_forward(xs: &[f64], ys: &[f64], x: f64, degree: usize) -> f64 {
        let mut work = ys.to_vec();
        let mut coeffs = vec![work[0]];
        for _ in 1..=degree {
            for i in 0..work.len() - 1 {
                work[i] = work[i + 1] - work[i];
            }
            work.pop();
            coeffs.push(work[0]);
        }
        let h = xs[1] - xs[0];
        let s = (x - xs[0]) / h;
        let mut acc = coeffs[0];
        let mut num = 1.0;
        let mut fact = 1.0;
        for (k, c) in coeffs.iter().enumerate().skip(1) {
            num *= s - (k as f64 - 1.0);
            fact *= k as f64;
            acc += num / fact * c;
        }
        acc
    }

    /// Classical Newton-Gregory backward interpolation on plain floats.
    fn newton_backward(xs: &[f64], ys: &[f64], x: f64, degree: usize) -> f64 {
        let mut work = ys.to_vec();
        let mut coeffs = vec![*work.last().unwrap()];
        for _ in 1..=degree {
            for i in 0..work.len() - 1 {
                work[i] = work[i + 1] - work[i];
            }
            work.pop();
            coeffs.push(*work.last().unwrap());
        }
        let h = xs[1] - xs[0];
        let s = (x - xs.last().unwrap()) / h;
        let mut acc = coeffs[0];
        let mut num = 1.0;
        let mut fact = 1.0;
        for (k, c) in coeffs.iter().enumerate().skip(1) {
            num *= s + (k as f64 - 1.0);
            fact *= k as f64;
            acc += num / fact * c;
        }
        acc
    }

    /// Barycentric-free Lagrange evaluation, a second independent route.
    fn lagrange(xs: &[f64], ys: &[f64], x: f64) -> f64 {
        let mut acc = 0.0;
        for i in 0..xs.len() {
            let mut w = 1.0;
            for j in 0..xs.len() {
                if i != j {
                    w *= (x - xs[j]) / (xs[i] - xs[j]);
                }
            }
            acc += w * ys[i];
        }
        acc
    }

    #[test]
    fn relative_offset_examples() {
        let u = relative_offset(g(1.3), g(1.0), g(0.2)).unwrap();
        assert!((u.log_value() - 1.5).abs() < 1e-12);

        let u = relative_offset(
            GNum::from_real(22.0).unwrap(),
            GNum::from_real(24.0).unwrap(),
            GNum::from_real(2.0).unwrap(),
        )
        .unwrap();
        let expected = (11.0f64 / 12.0).powf(1.0 / 2.0f64.ln());
        assert!((u.to_real() - expected).abs() < 1e-12);
        assert!((u.to_real() - 0.8820).abs() < 5e-4);

        let x = g(0.8);
        assert_eq!(relative_offset(x, x, g(0.2)).unwrap(), GNum::ZERO);
        assert_eq!(
            relative_offset(x, g(0.1), GNum::ZERO),
            Err(GeoError::GeometricZeroDivisor)
        );
    }

    #[test]
    fn forward_sine_query() {
        let t = sine_table();
        let result = interp_forward(&t, g(1.3), 3).unwrap();
        assert!((result.offset_u.log_value() - 1.5).abs() < 1e-12);
        assert!((result.value.to_real() - 0.0639).abs() < 1e-3);
        assert!(!result.extrapolated);
        assert_eq!(result.terms.len(), 4);
        // The terms geometric-sum to the value exactly.
        assert_eq!(gsum(result.terms.iter().copied()).unwrap(), result.value);
        // Against the classical oracle on logs.
        let xs: Vec<f64> = t.nodes().iter().map(|n| n.log_value()).collect();
        let ys: Vec<f64> = t.values().iter().map(|v| v.log_value()).collect();
        let oracle = newton_forward(&xs, &ys, 1.3, 3);
        assert!((result.value.log_value() - oracle).abs() < 1e-12);
    }

    #[test]
    fn forward_reproduces_interior_node() {
        let t = sine_table();
        let result = interp_forward(&t, g(1.2), 3).unwrap();
        assert!(rel_log_error(result.value, t.values()[1]) < 1e-12);
        assert!((result.value.to_real() - 0.0579).abs() < 1e-12);
    }

    #[test]
    fn backward_log_query() {
        let t = log_table();
        let x = GNum::from_real(22.0).unwrap();
        let result = interp_backward(&t, x, 3).unwrap();
        assert!((result.value.to_real() - 3.0867).abs() < 1e-3);
        assert!((result.offset_u.to_real() - 0.8820).abs() < 5e-4);
        assert!(!result.extrapolated);
        let xs: Vec<f64> = t.nodes().iter().map(|n| n.log_value()).collect();
        let ys: Vec<f64> = t.values().iter().map(|v| v.log_value()).collect();
        let oracle = newton_backward(&xs, &ys, 22.0f64.ln(), 3);
        assert!((result.value.log_value() - oracle).abs() < 1e-12);
    }

    #[test]
    fn backward_reproduces_last_node() {
        let t = log_table();
        let result = interp_backward(&t, GNum::from_real(24.0).unwrap(), 3).unwrap();
        assert!((result.value.to_real() - 3.1781).abs() < 1e-10);
        // u = 1 makes every difference term a geometric zero contribution.
        assert_eq!(result.offset_u, GNum::ZERO);
        for term in &result.terms[1..] {
            assert!(term.log_value().abs() < 1e-12);
        }
    }

    #[test]
    fn degree_validation() {
        let t = sine_table();
        assert!(matches!(
            interp_forward(&t, g(1.1), 0),
            Err(GeoError::Degree { .. })
        ));
        assert!(matches!(
            interp_forward(&t, g(1.1), 4),
            Err(GeoError::Degree { .. })
        ));
    }

    #[test]
    fn extrapolation_is_flagged() {
        let t = sine_table();
        assert!(interp_forward(&t, g(0.9), 3).unwrap().extrapolated);
        assert!(interp_forward(&t, g(1.7), 3).unwrap().extrapolated);
        assert!(!interp_forward(&t, g(1.0), 3).unwrap().extrapolated);
        assert!(!interp_forward(&t, g(1.6), 3).unwrap().extrapolated);
    }

    #[test]
    fn exactness_check_examples() {
        assert!(exactness_check(&sine_table(), 3).unwrap().max_rel_log_error() < 1e-10);
        assert!(exactness_check(&log_table(), 3).unwrap().max_rel_log_error() < 1e-10);
        let two = GTable::from_reals(&[2.0, 4.0], &[5.0, 7.0], 1e-9).unwrap();
        assert!(exactness_check(&two, 1).unwrap().max_rel_log_error() < 1e-12);
    }

    #[test]
    fn coefficient_law_on_small_table() {
        // Expanding the node-form interpolant with coefficients
        // A_k = Δ^k f(a) ⊘ (k!_G ⊙ h^(k_G)) reproduces the offset form.
        let t = sine_table();
        let dt = crate::diff::forward_diff_table(&t).unwrap();
        let la = t.nodes()[0].log_value();
        let lh = t.step().log_value();
        let x = g(1.33);
        let lx = x.log_value();

        let mut acc = 0.0;
        for k in 0..=3usize {
            let denominator =
                gfactorial(k as u32).unwrap().value.log_value() * lh.powi(k as i32);
            let a_k = dt.base_diff(k).log_value() / denominator;
            let mut product = 1.0;
            for j in 0..k {
                product *= lx - la - j as f64 * lh;
            }
            acc += a_k * product;
        }
        let direct = interp_forward(&t, x, 3).unwrap();
        assert!((acc - direct.value.log_value()).abs() < 1e-12);
    }

    fn arb_table() -> impl Strategy<Value = (GTable, f64)> {
        (3usize..=8, -2.0..2.0f64, 0.3..1.0f64).prop_flat_map(|(n, a, h)| {
            (
                proptest::collection::vec(-2.0..2.0f64, n),
                0.0..1.0f64,
            )
                .prop_map(move |(logs, frac)| {
                    let nodes: Vec<GNum> = (0..n).map(|i| g(a + h * i as f64)).collect();
                    let values: Vec<GNum> = logs.into_iter().map(g).collect();
                    let table = GTable::new(nodes, values, DEFAULT_SPACING_TOLERANCE).unwrap();
                    let query = a + frac * h * (n - 1) as f64;
                    (table, query)
                })
        })
    }

    proptest! {
        #[test]
        fn matches_classical_oracles((t, query) in arb_table()) {
            let degree = t.len() - 1;
            let xs: Vec<f64> = t.nodes().iter().map(|n| n.log_value()).collect();
            let ys: Vec<f64> = t.values().iter().map(|v| v.log_value()).collect();
            let f = interp_forward(&t, g(query), degree).unwrap();
            let b = interp_backward(&t, g(query), degree).unwrap();
            prop_assert!((f.value.log_value() - newton_forward(&xs, &ys, query, degree)).abs() <= 1e-10);
            prop_assert!((b.value.log_value() - newton_backward(&xs, &ys, query, degree)).abs() <= 1e-10);
            // Second independent route and mutual agreement.
            prop_assert!((f.value.log_value() - lagrange(&xs, &ys, query)).abs() <= 1e-9);
            prop_assert!((f.value.log_value() - b.value.log_value()).abs() <= 1e-10);
        }

        #[test]
        fn full_degree_reproduces_nodes((t, _q) in arb_table()) {
            let report = exactness_check(&t, t.len() - 1).unwrap();
            prop_assert!(report.max_rel_log_error() <= 1e-10);
        }
    }
}
