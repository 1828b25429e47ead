//! Deterministic report rendering.
//!
//! Text output formats every number to the configured count of significant
//! digits. JSON output always carries full-precision numbers, each geometric
//! quantity as `{"value": ..., "log_value": ...}`.

use crate::config::OutputFormat;
use geocalc_core::{DiffTable, DualReport, GNum, GSeq, GTable, InterpResult};
use serde_json::{json, Value};

/// Formats `v` with `sig` significant digits, fixed-point where reasonable
/// and scientific otherwise (same split as printf `%g`).
pub fn fmt_sig(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    if exponent < -4 || exponent >= sig as i32 {
        format!("{:.*e}", sig - 1, v)
    } else {
        let decimals = (sig as i32 - 1 - exponent).max(0) as usize;
        format!("{:.*}", decimals, v)
    }
}

/// Text form of a geometric number: decimal plus log coordinate.
pub fn gnum_text(g: GNum, sig: usize) -> String {
    format!("{} (log {})", fmt_sig(g.to_real(), sig), fmt_sig(g.log_value(), sig))
}

pub fn gnum_json(g: GNum) -> Value {
    json!({ "value": g.to_real(), "log_value": g.log_value() })
}

fn gnum_list_json(entries: &[GNum]) -> Value {
    Value::Array(entries.iter().map(|g| gnum_json(*g)).collect())
}

/// Renders a table as CSV in log coordinates. At 17 significant digits the
/// log values round-trip bit for bit through `parse_table`.
pub fn table_to_csv(table: &GTable, sig: usize) -> String {
    let mut out = String::from("log_x,log_f\n");
    for (node, value) in table.nodes().iter().zip(table.values()) {
        out.push_str(&fmt_sig(node.log_value(), sig));
        out.push(',');
        out.push_str(&fmt_sig(value.log_value(), sig));
        out.push('\n');
    }
    out
}

pub fn render_difftable(table: &DiffTable, format: OutputFormat, sig: usize) -> String {
    match format {
        OutputFormat::Json => {
            let payload = json!({
                "direction": table.direction().as_str(),
                "h": gnum_json(table.source().step()),
                "nodes": gnum_list_json(table.source().nodes()),
                "columns": table.columns().iter().map(|c| gnum_list_json(c)).collect::<Vec<_>>(),
            });
            format!("{payload:#}\n")
        }
        OutputFormat::Text => difftable_text(table, sig),
    }
}

/// Staggered triangular layout: order-k entries sit on text row `2i + k`,
/// between the two entries they difference.
fn difftable_text(table: &DiffTable, sig: usize) -> String {
    let nodes = table.source().nodes();
    let order = table.order();
    let rows = 2 * nodes.len() - 1;

    let mut grid: Vec<Vec<String>> = vec![vec![String::new(); order + 2]; rows];
    for (i, node) in nodes.iter().enumerate() {
        grid[2 * i][0] = fmt_sig(node.to_real(), sig);
    }
    for (k, column) in table.columns().iter().enumerate() {
        for (i, entry) in column.iter().enumerate() {
            grid[2 * i + k][k + 1] = fmt_sig(entry.to_real(), sig);
        }
    }

    let mut labels = vec!["x".to_string(), "f".to_string()];
    for k in 1..=order {
        labels.push(format!("d{k}"));
    }
    let widths: Vec<usize> = labels
        .iter()
        .enumerate()
        .map(|(c, label)| {
            grid.iter()
                .map(|row| row[c].len())
                .max()
                .unwrap_or(0)
                .max(label.len())
        })
        .collect();

    let mut out = format!(
        "direction: {}\nh: {}\n",
        table.direction().as_str(),
        gnum_text(table.source().step(), sig)
    );
    for (label, width) in labels.iter().zip(&widths) {
        out.push_str(&format!("{label:>width$}  "));
    }
    out.pop();
    out.pop();
    out.push('\n');
    for row in &grid {
        let mut line = String::new();
        for (cell, width) in row.iter().zip(&widths) {
            line.push_str(&format!("{cell:>width$}  "));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_interp(result: &InterpResult, format: OutputFormat, sig: usize) -> String {
    match format {
        OutputFormat::Json => {
            let payload = json!({
                "direction": result.direction.as_str(),
                "degree": result.degree(),
                "u": gnum_json(result.offset_u),
                "terms": gnum_list_json(&result.terms),
                "value": gnum_json(result.value),
                "extrapolated": result.extrapolated,
            });
            format!("{payload:#}\n")
        }
        OutputFormat::Text => {
            let mut out = format!(
                "direction: {}\ndegree: {}\nu: {}\nterms:\n",
                result.direction.as_str(),
                result.degree(),
                gnum_text(result.offset_u, sig)
            );
            for (k, term) in result.terms.iter().enumerate() {
                out.push_str(&format!("  order {k}: {}\n", gnum_text(*term, sig)));
            }
            out.push_str(&format!(
                "value: {}\nextrapolated: {}\n",
                gnum_text(result.value, sig),
                result.extrapolated
            ));
            out
        }
    }
}

pub fn render_norms(
    sequence: &GSeq,
    sup: GNum,
    delta: GNum,
    format: OutputFormat,
    sig: usize,
) -> String {
    match format {
        OutputFormat::Json => {
            let payload = json!({
                "terms": sequence.len(),
                "finite_tail": sequence.finite_tail(),
                "sup_norm": gnum_json(sup),
                "delta_norm": gnum_json(delta),
            });
            format!("{payload:#}\n")
        }
        OutputFormat::Text => format!(
            "terms: {}\nfinite_tail: {}\nsup_norm: {}\ndelta_norm: {}\n",
            sequence.len(),
            sequence.finite_tail(),
            gnum_text(sup, sig),
            gnum_text(delta, sig)
        ),
    }
}

pub fn render_duals(
    sequence: &GSeq,
    report: &DualReport,
    format: OutputFormat,
    sig: usize,
) -> String {
    match format {
        OutputFormat::Json => {
            let payload = json!({
                "exact": report.exact,
                "alpha_partial": gnum_list_json(&report.alpha_partial),
                "beta_partial": gnum_list_json(&report.beta_partial),
                "tail_abs_partial": gnum_list_json(&report.tail_abs_partial),
                "gamma_sup": gnum_json(report.gamma_sup),
            });
            format!("{payload:#}\n")
        }
        OutputFormat::Text => {
            let labels = ["k", "a_k", "alpha_partial", "beta_partial", "tail_abs_partial"];
            let mut cells: Vec<Vec<String>> = Vec::with_capacity(sequence.len());
            for k in 0..sequence.len() {
                cells.push(vec![
                    (k + 1).to_string(),
                    fmt_sig(sequence.prefix()[k].to_real(), sig),
                    fmt_sig(report.alpha_partial[k].to_real(), sig),
                    fmt_sig(report.beta_partial[k].to_real(), sig),
                    fmt_sig(report.tail_abs_partial[k].to_real(), sig),
                ]);
            }
            let widths: Vec<usize> = labels
                .iter()
                .enumerate()
                .map(|(c, label)| {
                    cells
                        .iter()
                        .map(|row| row[c].len())
                        .max()
                        .unwrap_or(0)
                        .max(label.len())
                })
                .collect();
            let mut out = format!("exact: {}\n", report.exact);
            for (label, width) in labels.iter().zip(&widths) {
                out.push_str(&format!("{label:>width$}  "));
            }
            out.pop();
            out.pop();
            out.push('\n');
            for row in &cells {
                let mut line = String::new();
                for (cell, width) in row.iter().zip(&widths) {
                    line.push_str(&format!("{cell:>width$}  "));
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out.push_str(&format!("gamma_sup: {}\n", gnum_text(report.gamma_sup, sig)));
            out
        }
    }
}

pub fn render_check(
    kind: &str,
    n: usize,
    lhs: GNum,
    rhs: GNum,
    format: OutputFormat,
    sig: usize,
) -> String {
    let gap = (lhs.log_value() - rhs.log_value()).abs();
    match format {
        OutputFormat::Json => {
            let payload = json!({
                "check": kind,
                "n": n,
                "lhs": gnum_json(lhs),
                "rhs": gnum_json(rhs),
                "abs_log_gap": gap,
            });
            format!("{payload:#}\n")
        }
        OutputFormat::Text => format!(
            "check: {kind}\nn: {n}\nlhs: {}\nrhs: {}\nabs_log_gap: {}\n",
            gnum_text(lhs, sig),
            gnum_text(rhs, sig),
            fmt_sig(gap, sig)
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.0474, 6), "0.0474000");
        assert_eq!(fmt_sig(7.389056098930650, 6), "7.38906");
        assert_eq!(fmt_sig(1.3041808783936323e52, 6), "1.30418e52");
        assert_eq!(fmt_sig(-2.7491518679857594, 6), "-2.74915");
        assert_eq!(fmt_sig(0.0, 6), "0");
        assert_eq!(fmt_sig(1.5, 4), "1.500");
        assert_eq!(fmt_sig(1e-5, 6), "1.00000e-5");
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for &t in &[1.2, -3.0491283563, 0.2, 1.0 / 3.0, 6.02e23, 1e-7] {
            let printed = fmt_sig(t, 17);
            let back: f64 = printed.parse().unwrap();
            assert_eq!(back, t, "{printed}");
        }
    }
}
