//! Command dispatch: read the input, call the library, render the report.

use crate::config::{CommandKind, Query, RunConfig};
use crate::error::CliError;
use crate::input::{parse_pair, parse_sequence, parse_table};
use crate::render;
use geocalc_core::{
    delta_norm, dual_partial_sums, geometric_abel_sum, interp_backward, interp_forward, sup_norm,
    tail_sum_identity, Direction, GNum, GSeq,
};

pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let source = std::fs::read_to_string(&config.input_path).map_err(|e| {
        CliError::parse(format!(
            "cannot read {}: {e}",
            config.input_path.display()
        ))
    })?;
    let format = config
        .format
        .unwrap_or_else(|| crate::config::infer_format(&config.input_path));
    let sig = config.precision;

    match config.command {
        CommandKind::Difftable => {
            let table = parse_table(&source, format, config.spacing_tolerance)?;
            let diff = match config.direction {
                Direction::Forward => geocalc_core::forward_diff_table(&table)?,
                Direction::Backward => geocalc_core::backward_diff_table(&table)?,
            };
            Ok(render::render_difftable(&diff, config.output_format, sig))
        }
        CommandKind::Interp => {
            let table = parse_table(&source, format, config.spacing_tolerance)?;
            let x = match config.query_x {
                Some(Query::Real(v)) => GNum::from_real(v)?,
                Some(Query::LogReal(t)) => GNum::from_exponent(t)?,
                None => return Err(CliError::parse("interp needs --x or --log-x")),
            };
            let degree = config.degree.unwrap_or(table.len() - 1);
            let result = match config.direction {
                Direction::Forward => interp_forward(&table, x, degree)?,
                Direction::Backward => interp_backward(&table, x, degree)?,
            };
            Ok(render::render_interp(&result, config.output_format, sig))
        }
        CommandKind::Norms => {
            let sequence = parse_sequence(&source, format)?;
            let sup = sup_norm(&sequence);
            let delta = delta_norm(&sequence)?;
            Ok(render::render_norms(
                &sequence,
                sup,
                delta,
                config.output_format,
                sig,
            ))
        }
        CommandKind::Duals => {
            let sequence = parse_sequence(&source, format)?;
            let report = dual_partial_sums(&sequence);
            Ok(render::render_duals(
                &sequence,
                &report,
                config.output_format,
                sig,
            ))
        }
        CommandKind::AbelCheck => {
            let (a, b) = parse_pair(&source, format)?;
            match b {
                Some(b) => {
                    let n = config.degree.unwrap_or_else(|| abel_default_n(&a, &b));
                    let (lhs, rhs) = geometric_abel_sum(&a, &b, n)?;
                    Ok(render::render_check(
                        "abel",
                        n,
                        lhs,
                        rhs,
                        config.output_format,
                        sig,
                    ))
                }
                None => {
                    let n = config.degree.unwrap_or(a.len().saturating_sub(1));
                    let (lhs, rhs) = tail_sum_identity(&a, n)?;
                    Ok(render::render_check(
                        "tail-sum",
                        n,
                        lhs,
                        rhs,
                        config.output_format,
                        sig,
                    ))
                }
            }
        }
    }
}

/// Largest n both sequences can serve: a supplies a_1..a_n, b supplies
/// b_1..b_{n+1}; finite tails remove the corresponding cap.
fn abel_default_n(a: &GSeq, b: &GSeq) -> usize {
    let a_cap = if a.finite_tail() { usize::MAX } else { a.len() };
    let b_cap = if b.finite_tail() {
        usize::MAX
    } else {
        b.len().saturating_sub(1)
    };
    let cap = a_cap.min(b_cap);
    if cap == usize::MAX {
        a.len().max(b.len())
    } else {
        cap
    }
}
