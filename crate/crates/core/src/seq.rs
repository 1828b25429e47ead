//! Geometric sequence-space operations: the difference operator on
//! sequences, the head norm, Abel-style summation identities, tail sums,
//! and the partial-sum diagnostics behind the multiplier-space criteria.
//!
//! Sequences are stored as a finite prefix plus a flag saying whether the
//! tail is known to be all geometric zeros (1s). With the flag set, the
//! series identities here are exact finite computations; without it the
//! diagnostics are truncations and reports say so. Indexing is 1-based to
//! match the usual x_1, x_2, ... convention.

use crate::arith::GNum;
use crate::error::{GeoError, Result};

/// A truncated geometric sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct GSeq {
    prefix: Vec<GNum>,
    finite_tail: bool,
}

impl GSeq {
    pub fn new(prefix: Vec<GNum>, finite_tail: bool) -> Result<Self> {
        if prefix.is_empty() {
            return Err(GeoError::TableTooSmall { min: 1, got: 0 });
        }
        Ok(GSeq {
            prefix,
            finite_tail,
        })
    }

    pub fn from_reals(values: &[f64], finite_tail: bool) -> Result<Self> {
        let prefix = values
            .iter()
            .map(|&v| GNum::from_real(v))
            .collect::<Result<Vec<_>>>()?;
        GSeq::new(prefix, finite_tail)
    }

    pub fn prefix(&self) -> &[GNum] {
        &self.prefix
    }

    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn finite_tail(&self) -> bool {
        self.finite_tail
    }

    /// 1-based entry access; past the prefix a finite-tail sequence reads 1.
    pub fn get(&self, k: usize) -> Result<GNum> {
        if k == 0 {
            return Err(GeoError::Index("sequence indices start at 1".into()));
        }
        match self.prefix.get(k - 1) {
            Some(&x) => Ok(x),
            None if self.finite_tail => Ok(GNum::ZERO),
            None => Err(GeoError::Index(format!(
                "k = {k} is beyond the {}-term prefix of a sequence without a known tail",
                self.prefix.len()
            ))),
        }
    }
}

/// Neumaier-compensated accumulator for log-coordinate sums, so the series
/// identities hold to well under the 1e-12 verification tolerance even on
/// long inputs.
#[derive(Clone, Copy, Default)]
struct LogSum {
    sum: f64,
    compensation: f64,
}

impl LogSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(self) -> f64 {
        self.sum + self.compensation
    }
}

/// Sequence difference `(Δ x)_k = x_k ⊖ x_{k+1}`.
///
/// A finite-tail input keeps its length (the last entry differences against
/// the implicit 1) and stays finite-tail; otherwise the result is one shorter.
pub fn delta_g(x: &GSeq) -> Result<GSeq> {
    if x.len() < 2 && !x.finite_tail() {
        return Err(GeoError::TableTooSmall {
            min: 2,
            got: x.len(),
        });
    }
    let count = if x.finite_tail() {
        x.len()
    } else {
        x.len() - 1
    };
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        out.push(x.get(k)?.gsub(x.get(k + 1)?)?);
    }
    GSeq::new(out, x.finite_tail())
}

/// Geometric sup norm `e^(sup_k |ln x_k|)` over the stored entries.
pub fn sup_norm(x: &GSeq) -> GNum {
    let m = x
        .prefix()
        .iter()
        .map(|g| g.log_value().abs())
        .fold(0.0, f64::max);
    GNum::from_finite_log(m)
}

/// The difference-space norm `|x_1|ᴳ ⊕ sup_k |x_k ⊖ x_{k+1}|ᴳ`.
pub fn delta_norm(x: &GSeq) -> Result<GNum> {
    let differences = delta_g(x)?;
    x.prefix()[0].gabs().gadd(sup_norm(&differences))
}

/// Replaces the first entry by the geometric zero 1, leaving the rest alone.
pub fn head_normalize(x: &GSeq) -> GSeq {
    let mut prefix = x.prefix().to_vec();
    prefix[0] = GNum::ZERO;
    GSeq {
        prefix,
        finite_tail: x.finite_tail,
    }
}

/// Both sides of the geometric Abel partial-summation identity
/// `_G∑_{k=1..n} a_k ⊙ b_k = _G∑_{k=1..n} S_k ⊙ (b_k ⊖ b_{k+1}) ⊕ S_n ⊙ b_{n+1}`,
/// with `S_k` the geometric partial sums of `a`. The two components agree up
/// to log-coordinate rounding.
pub fn geometric_abel_sum(a: &GSeq, b: &GSeq, n: usize) -> Result<(GNum, GNum)> {
    let mut lhs = LogSum::default();
    let mut rhs = LogSum::default();
    let mut partial = LogSum::default();
    let mut last_partial = 0.0;
    for k in 1..=n {
        let la = a.get(k)?.log_value();
        let lb = b.get(k)?.log_value();
        let lb_next = b.get(k + 1)?.log_value();
        lhs.add(la * lb);
        partial.add(la);
        last_partial = partial.value();
        rhs.add(last_partial * (lb - lb_next));
    }
    if n >= 1 {
        rhs.add(last_partial * b.get(n + 1)?.log_value());
    }
    Ok((
        GNum::from_exponent(lhs.value())?,
        GNum::from_exponent(rhs.value())?,
    ))
}

/// Tail sum `R_n = _G∑_{k>n} a_k`, finite because the tail is all 1s.
pub fn tail_sum(a: &GSeq, n: usize) -> Result<GNum> {
    if !a.finite_tail() {
        return Err(GeoError::InfiniteTail);
    }
    let mut acc = LogSum::default();
    for k in (n + 1)..=a.len() {
        acc.add(a.get(k)?.log_value());
    }
    GNum::from_exponent(acc.value())
}

/// Partial-sum traces for the three multiplier-space membership criteria.
///
/// `alpha_partial[m]` traces `_G∑ e^k ⊙ |a_k|ᴳ`, `beta_partial[m]` traces
/// `_G∑ e^k ⊙ a_k` with `tail_abs_partial[m]` tracing `_G∑ |R_k|ᴳ`, and
/// `gamma_sup` is the geometric sup of the absolute beta partials. `exact`
/// is true only for finite-tail input; otherwise these are truncated
/// diagnostics.
#[derive(Debug, Clone)]
pub struct DualReport {
    pub alpha_partial: Vec<GNum>,
    pub beta_partial: Vec<GNum>,
    pub tail_abs_partial: Vec<GNum>,
    pub gamma_sup: GNum,
    pub exact: bool,
}

pub fn dual_partial_sums(a: &GSeq) -> DualReport {
    let n = a.len();
    let mut alpha = LogSum::default();
    let mut beta = LogSum::default();
    let mut sup = 0.0f64;
    let mut alpha_partial = Vec::with_capacity(n);
    let mut beta_partial = Vec::with_capacity(n);
    for (k, entry) in a.prefix().iter().enumerate() {
        let weight = (k + 1) as f64;
        let la = entry.log_value();
        alpha.add(weight * la.abs());
        beta.add(weight * la);
        sup = sup.max(beta.value().abs());
        alpha_partial.push(GNum::from_finite_log(alpha.value()));
        beta_partial.push(GNum::from_finite_log(beta.value()));
    }

    // Tail sums over the stored prefix; exact only when the tail is known.
    let mut tail_abs = LogSum::default();
    let mut tail_abs_partial = Vec::with_capacity(n);
    for k in 1..=n {
        let mut suffix = LogSum::default();
        for i in (k + 1)..=n {
            suffix.add(a.prefix()[i - 1].log_value());
        }
        tail_abs.add(suffix.value().abs());
        tail_abs_partial.push(GNum::from_finite_log(tail_abs.value()));
    }

    DualReport {
        alpha_partial,
        beta_partial,
        tail_abs_partial,
        gamma_sup: GNum::from_finite_log(sup),
        exact: a.finite_tail(),
    }
}

/// Both sides of the identity linking the shifted e^k-weighted series to the
/// tail sums: `_G∑_{k=1..n} e^k ⊙ a_{k+1} = _G∑_{k=1..n} R_k ⊖ e^n ⊙ R_{n+1}`.
pub fn tail_sum_identity(a: &GSeq, n: usize) -> Result<(GNum, GNum)> {
    if !a.finite_tail() {
        return Err(GeoError::InfiniteTail);
    }
    if n + 1 > a.len() {
        return Err(GeoError::Index(format!(
            "identity at n = {n} needs entry {} of a {}-term prefix",
            n + 1,
            a.len()
        )));
    }
    let mut lhs = LogSum::default();
    for k in 1..=n {
        lhs.add(k as f64 * a.get(k + 1)?.log_value());
    }
    let mut rhs = LogSum::default();
    for k in 1..=n {
        rhs.add(tail_sum(a, k)?.log_value());
    }
    rhs.add(-(n as f64) * tail_sum(a, n + 1)?.log_value());
    Ok((
        GNum::from_exponent(lhs.value())?,
        GNum::from_exponent(rhs.value())?,
    ))
}
