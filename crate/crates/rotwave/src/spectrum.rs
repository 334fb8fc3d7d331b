//! Admissible velocity sequence, eigenvalue enumeration of
//! `L = -Δ + α²∂²_θ + m` on the disk, and empirical spectral-gap
//! constants.
//!
//! Eigenvalues are `λ_{ℓ,k} = j_{ℓ,k}² − α²ℓ² + m` with multiplicity two
//! for ℓ ≥ 1 (cos/sin pairs) and one for ℓ = 0.

use crate::asymptotics::iota;
use crate::error::{Error, Result};
use crate::par::par_map_idx;
use crate::specfun::{bessel_zero_row, zero_enclosure};

/// Default kernel classification tolerance: `(ℓ,k)` counts as kernel iff
/// `|λ| ≤ KERNEL_TOL · j_{ℓ,k}`.
pub const KERNEL_TOL: f64 = 1e-9;

/// Sign class of an eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Positive,
    Kernel,
    Negative,
}

impl std::fmt::Display for SignClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SignClass::Positive => "positive",
            SignClass::Kernel => "kernel",
            SignClass::Negative => "negative",
        };
        f.write_str(s)
    }
}

/// Classify `λ` relative to the kernel tolerance scaled by `j`.
pub fn classify(lambda: f64, j: f64, kernel_tol: f64) -> SignClass {
    if lambda.abs() <= kernel_tol * j {
        SignClass::Kernel
    } else if lambda > 0.0 {
        SignClass::Positive
    } else {
        SignClass::Negative
    }
}

/// A velocity for which the eigenvalue gap construction applies.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct AdmissibleAlpha {
    pub n: u32,
    /// `σ = 1/n`.
    pub sigma: f64,
    /// `α_n = ι(1/n)·n`, equivalently the root of
    /// `πn = sqrt(α²−1) − (π/2 − arcsin(1/α))`.
    pub alpha: f64,
    /// `κ_n = −(π/4)e^{1/(3n)} + (α_n − π/2)/n`.
    pub kappa: f64,
    /// Empirical gap-constant estimate, when one has been attached.
    pub c_empirical: Option<GapEstimate>,
}

impl AdmissibleAlpha {
    /// Residual of the defining identity `πn − (sqrt(α²−1) − (π/2 − arcsin(1/α)))`.
    pub fn residual(&self) -> f64 {
        std::f64::consts::PI * self.n as f64 - defining_rhs(self.alpha)
    }
}

fn defining_rhs(alpha: f64) -> f64 {
    (alpha * alpha - 1.0).sqrt() - (std::f64::consts::FRAC_PI_2 - (1.0 / alpha).asin())
}

/// The n-th admissible velocity `α_n`, polished to ~1e−14 residual.
pub fn alpha_n(n: u32) -> Result<AdmissibleAlpha> {
    if n < 1 {
        return Err(Error::domain("alpha_n requires n >= 1"));
    }
    let sigma = 1.0 / n as f64;
    // ι(σ)/σ and a Newton polish on the defining identity
    // (d/dα of the right side is sqrt(α²−1)/α).
    let mut alpha = iota(sigma)?.iota * n as f64;
    for _ in 0..4 {
        let r = defining_rhs(alpha) - std::f64::consts::PI * n as f64;
        let dr = (alpha * alpha - 1.0).sqrt() / alpha;
        alpha -= r / dr;
    }
    Ok(AdmissibleAlpha {
        n,
        sigma,
        alpha,
        kappa: kappa_n_from_alpha(n, alpha),
        c_empirical: None,
    })
}

fn kappa_n_from_alpha(n: u32, alpha: f64) -> f64 {
    let nf = n as f64;
    -std::f64::consts::FRAC_PI_4 * (1.0 / (3.0 * nf)).exp()
        + (alpha - std::f64::consts::FRAC_PI_2) / nf
}

/// `κ_n = −(π/4)e^{1/(3n)} + (α_n − π/2)·(1/n)`.
pub fn kappa_n(n: u32) -> Result<f64> {
    Ok(alpha_n(n)?.kappa)
}

/// One enumerated eigenvalue.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SpectralPoint {
    pub ell: u32,
    pub k: u32,
    /// `j_{ℓ,k}`.
    pub j_value: f64,
    /// `j² − α²ℓ² + m`.
    pub lambda: f64,
    pub sign_class: SignClass,
}

/// Rectangular enumeration window, sorted by eigenvalue.
#[derive(Debug, Clone)]
pub struct SpectrumWindow {
    pub alpha: f64,
    pub m: f64,
    pub ell_max: u32,
    pub k_max: u32,
    pub kernel_tol: f64,
    /// Points sorted ascending by `lambda`.
    pub points: Vec<SpectralPoint>,
    /// `min |λ|` over non-kernel points.
    pub min_abs_nonkernel: f64,
    /// `min |λ|/j` over non-kernel points.
    pub min_gap_ratio: f64,
    /// `(ℓ, k)` attaining `min_gap_ratio`.
    pub argmin: (u32, u32),
}

impl SpectrumWindow {
    /// Eigenfunction count: 2 per ℓ ≥ 1 pair (cos/sin), 1 per ℓ = 0 pair.
    pub fn basis_count(&self) -> usize {
        self.points
            .iter()
            .map(|p| if p.ell == 0 { 1 } else { 2 })
            .sum()
    }

    /// CSV rows `ell,k,j,lambda,class`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ell,k,j,lambda,class\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{:.16e},{:.16e},{}\n",
                p.ell, p.k, p.j_value, p.lambda, p.sign_class
            ));
        }
        out
    }

    /// JSON summary with cutoffs and gap diagnostics.
    pub fn to_json_summary(&self) -> String {
        serde_json::json!({
            "schema": 1,
            "alpha": self.alpha,
            "m": self.m,
            "cutoffs": { "ell_max": self.ell_max, "k_max": self.k_max },
            "min_abs_nonkernel": self.min_abs_nonkernel,
            "min_gap_ratio": self.min_gap_ratio,
            "argmin": { "ell": self.argmin.0, "k": self.argmin.1 },
        })
        .to_string()
    }
}

struct RowScan {
    points: Option<Vec<SpectralPoint>>,
    min_abs: f64,
    min_ratio: f64,
    argmin: (u32, u32),
    max_lambda: f64,
    min_lambda: f64,
}

fn scan_row(
    ell: u32,
    alpha: f64,
    m: f64,
    k_max: u32,
    kernel_tol: f64,
    keep_points: bool,
) -> Result<RowScan> {
    let row = bessel_zero_row(ell as f64, k_max)?;
    let mut points = if keep_points {
        Some(Vec::with_capacity(k_max as usize))
    } else {
        None
    };
    let mut min_abs = f64::INFINITY;
    let mut min_ratio = f64::INFINITY;
    let mut argmin = (0u32, 0u32);
    let mut max_lambda = f64::NEG_INFINITY;
    let mut min_lambda = f64::INFINITY;
    let a2l2 = alpha * alpha * (ell as f64) * (ell as f64);
    for (i, &j) in row.iter().enumerate() {
        let k = i as u32 + 1;
        let lambda = j * j - a2l2 + m;
        let class = classify(lambda, j, kernel_tol);
        max_lambda = max_lambda.max(lambda);
        min_lambda = min_lambda.min(lambda);
        if class != SignClass::Kernel {
            let ratio = lambda.abs() / j;
            if ratio < min_ratio {
                min_ratio = ratio;
                argmin = (ell, k);
            }
            min_abs = min_abs.min(lambda.abs());
        }
        if let Some(v) = points.as_mut() {
            v.push(SpectralPoint {
                ell,
                k,
                j_value: j,
                lambda,
                sign_class: class,
            });
        }
    }
    Ok(RowScan {
        points,
        min_abs,
        min_ratio,
        argmin,
        max_lambda,
        min_lambda,
    })
}

/// Enumerate all `λ_{ℓ,k}` with `ℓ ≤ ell_max`, `k ≤ k_max`, sorted.
///
/// Rows are computed in parallel and merged deterministically.
pub fn enumerate_spectrum(
    alpha: f64,
    m: f64,
    ell_max: u32,
    k_max: u32,
) -> Result<SpectrumWindow> {
    enumerate_with_tol(alpha, m, ell_max, k_max, KERNEL_TOL)
}

/// As [`enumerate_spectrum`] with an explicit kernel tolerance.
pub fn enumerate_with_tol(
    alpha: f64,
    m: f64,
    ell_max: u32,
    k_max: u32,
    kernel_tol: f64,
) -> Result<SpectrumWindow> {
    validate_window(alpha, k_max)?;
    let rows = par_map_idx((ell_max + 1) as usize, |ell| {
        scan_row(ell as u32, alpha, m, k_max, kernel_tol, true)
    });
    let mut points = Vec::with_capacity((ell_max as usize + 1) * k_max as usize);
    let mut min_abs = f64::INFINITY;
    let mut min_ratio = f64::INFINITY;
    let mut argmin = (0, 0);
    for row in rows {
        let row = row?;
        if row.min_ratio < min_ratio {
            min_ratio = row.min_ratio;
            argmin = row.argmin;
        }
        min_abs = min_abs.min(row.min_abs);
        points.extend(row.points.unwrap());
    }
    points.sort_by(|a, b| a.lambda.total_cmp(&b.lambda).then(a.ell.cmp(&b.ell)));
    Ok(SpectrumWindow {
        alpha,
        m,
        ell_max,
        k_max,
        kernel_tol,
        points,
        min_abs_nonkernel: min_abs,
        min_gap_ratio: min_ratio,
        argmin,
    })
}

fn validate_window(alpha: f64, k_max: u32) -> Result<()> {
    if !(alpha > 1.0) || !alpha.is_finite() {
        return Err(Error::domain(format!("alpha must be > 1 (got {alpha})")));
    }
    if k_max < 1 {
        return Err(Error::config("k_max must be >= 1"));
    }
    Ok(())
}

/// Empirical gap-constant estimate over a rectangular cutoff.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct GapEstimate {
    /// `min |λ|/j` over non-kernel pairs in the cutoff.
    pub c_estimate: f64,
    /// `min |λ|` over non-kernel pairs in the cutoff.
    pub min_abs_nonkernel: f64,
    pub argmin: (u32, u32),
    pub ell_max: u32,
    pub k_max: u32,
    /// Extremes of λ in the window (both grow with the cutoffs).
    pub lambda_range: (f64, f64),
}

/// Streaming gap-constant estimation: same minima as a full enumeration,
/// O(k_max) memory, row-parallel. The estimate is an observed minimum
/// over the cutoff, not a proven global bound.
pub fn gap_constant(
    alpha: f64,
    m: f64,
    ell_max: u32,
    k_max: u32,
    kernel_tol: f64,
) -> Result<GapEstimate> {
    validate_window(alpha, k_max)?;
    let rows = par_map_idx((ell_max + 1) as usize, |ell| {
        scan_row(ell as u32, alpha, m, k_max, kernel_tol, false)
    });
    let mut min_abs = f64::INFINITY;
    let mut min_ratio = f64::INFINITY;
    let mut argmin = (0, 0);
    let mut lambda_lo = f64::INFINITY;
    let mut lambda_hi = f64::NEG_INFINITY;
    for row in rows {
        let row = row?;
        if row.min_ratio < min_ratio {
            min_ratio = row.min_ratio;
            argmin = row.argmin;
        }
        min_abs = min_abs.min(row.min_abs);
        lambda_lo = lambda_lo.min(row.min_lambda);
        lambda_hi = lambda_hi.max(row.max_lambda);
    }
    if !min_ratio.is_finite() {
        return Err(Error::config(
            "gap_constant: no non-kernel pairs in the cutoff".to_string(),
        ));
    }
    Ok(GapEstimate {
        c_estimate: min_ratio,
        min_abs_nonkernel: min_abs,
        argmin,
        ell_max,
        k_max,
        lambda_range: (lambda_lo, lambda_hi),
    })
}

/// Eigenvalue branch of the shifted operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Branch {
    Plus,
    Minus,
}

/// One eigenvalue of the μ-shifted operator
/// `λ± = j² − α²ℓ² ± 2μℓ + (m − μ²)`.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ShiftedPoint {
    pub ell: u32,
    pub k: u32,
    pub branch: Branch,
    pub j_value: f64,
    pub lambda: f64,
    pub sign_class: SignClass,
}

/// Shifted-operator window; ℓ = 0 contributes a single branch.
#[derive(Debug, Clone)]
pub struct ShiftedSpectrum {
    pub alpha: f64,
    pub m: f64,
    pub mu: f64,
    pub ell_max: u32,
    pub k_max: u32,
    pub points: Vec<ShiftedPoint>,
    pub min_abs_nonkernel: f64,
    pub min_gap_ratio: f64,
}

/// Enumerate both branches of the μ-shifted operator.
pub fn shifted_spectrum(
    alpha: f64,
    m: f64,
    mu: f64,
    ell_max: u32,
    k_max: u32,
) -> Result<ShiftedSpectrum> {
    validate_window(alpha, k_max)?;
    let rows = par_map_idx((ell_max + 1) as usize, |ell| -> Result<Vec<ShiftedPoint>> {
        let ellf = ell as f64;
        let row = bessel_zero_row(ellf, k_max)?;
        let mut pts = Vec::with_capacity(2 * k_max as usize);
        for (i, &j) in row.iter().enumerate() {
            let base = j * j - alpha * alpha * ellf * ellf + (m - mu * mu);
            let branches: &[Branch] = if ell == 0 {
                &[Branch::Plus]
            } else {
                &[Branch::Plus, Branch::Minus]
            };
            for &b in branches {
                let shift = match b {
                    Branch::Plus => 2.0 * mu * ellf,
                    Branch::Minus => -2.0 * mu * ellf,
                };
                let lambda = base + shift;
                pts.push(ShiftedPoint {
                    ell: ell as u32,
                    k: i as u32 + 1,
                    branch: b,
                    j_value: j,
                    lambda,
                    sign_class: classify(lambda, j, KERNEL_TOL),
                });
            }
        }
        Ok(pts)
    });
    let mut points = Vec::new();
    for r in rows {
        points.extend(r?);
    }
    let mut min_abs = f64::INFINITY;
    let mut min_ratio = f64::INFINITY;
    for p in &points {
        if p.sign_class != SignClass::Kernel {
            min_abs = min_abs.min(p.lambda.abs());
            min_ratio = min_ratio.min(p.lambda.abs() / p.j_value);
        }
    }
    points.sort_by(|a, b| a.lambda.total_cmp(&b.lambda).then(a.ell.cmp(&b.ell)));
    Ok(ShiftedSpectrum {
        alpha,
        m,
        mu,
        ell_max,
        k_max,
        points,
        min_abs_nonkernel: min_abs,
        min_gap_ratio: min_ratio,
    })
}

/// Two-sided bracket for `j_{ℓ,k}/ℓ − α` from the closed-form enclosure,
/// together with the computed value.
pub fn ratio_bound_check(alpha: f64, ell: u32, k: u32) -> Result<(f64, f64, f64)> {
    if ell < 1 {
        return Err(Error::domain("ratio_bound_check requires ell >= 1"));
    }
    let (j_lo, j_hi) = zero_enclosure(ell as f64, k)?;
    let j = crate::specfun::bessel_j_zero(ell as f64, k)?.value;
    let ellf = ell as f64;
    Ok((j_lo / ellf - alpha, j / ellf - alpha, j_hi / ellf - alpha))
}

/// `α_n` table over a range of n, optionally with gap estimates attached.
pub fn alpha_sequence(n_lo: u32, n_hi: u32, gap_cutoff: Option<(u32, u32)>) -> Result<Vec<AdmissibleAlpha>> {
    if n_lo < 1 || n_hi < n_lo {
        return Err(Error::domain("alpha_sequence requires 1 <= n_lo <= n_hi"));
    }
    let mut out = Vec::with_capacity((n_hi - n_lo + 1) as usize);
    for n in n_lo..=n_hi {
        let mut a = alpha_n(n)?;
        if let Some((ell_max, k_max)) = gap_cutoff {
            a.c_empirical = Some(gap_constant(a.alpha, 0.0, ell_max, k_max, KERNEL_TOL)?);
        }
        out.push(a);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_2_value() {
        // fixed-point oracle: α ← sqrt(1 + (2π + π/2 − arcsin(1/α))²)
        let mut a = 7.0_f64;
        for _ in 0..60 {
            a = (1.0
                + (2.0 * std::f64::consts::PI + std::f64::consts::FRAC_PI_2 - (1.0 / a).asin())
                    .powi(2))
            .sqrt();
        }
        let got = alpha_n(2).unwrap().alpha;
        assert!((got - a).abs() < 1e-12, "alpha_2 = {got} vs oracle {a}");
        assert!((got - 7.79).abs() < 0.01, "alpha_2 = {got}");
    }

    #[test]
    fn residual_and_rearranged_identity() {
        for n in 1..=50 {
            let a = alpha_n(n).unwrap();
            assert!(a.residual().abs() <= 1e-12, "n={n}: residual {}", a.residual());
            let rhs = 1.0
                + (std::f64::consts::PI * n as f64 + std::f64::consts::FRAC_PI_2
                    - (1.0 / a.alpha).asin())
                .powi(2);
            assert!(
                (a.alpha * a.alpha - rhs).abs() <= 1e-9 * rhs,
                "n={n}: rearranged identity off by {}",
                a.alpha * a.alpha - rhs
            );
        }
    }

    #[test]
    fn kappa_positive_and_alpha_above_n() {
        for n in 1..=100 {
            let a = alpha_n(n).unwrap();
            assert!(a.alpha > n as f64, "alpha_{n} = {} <= n", a.alpha);
            assert!(a.kappa > 0.0, "kappa_{n} = {}", a.kappa);
            // paper-style lower bound after substituting alpha_n > n
            let nf = n as f64;
            let lower = 1.0
                - std::f64::consts::PI * (0.5 / nf + (1.0 / (3.0 * nf)).exp() / 4.0);
            assert!(a.kappa >= lower - 1e-12, "n={n}: {} < {lower}", a.kappa);
        }
        // the substituted bound tends to 1 − π/4
        let nf = 100.0_f64;
        let lower = 1.0 - std::f64::consts::PI * (0.5 / nf + (1.0 / (3.0 * nf)).exp() / 4.0);
        assert!((lower - (1.0 - std::f64::consts::FRAC_PI_4)).abs() < 0.02);
    }

    #[test]
    fn small_window_classification() {
        let w = enumerate_spectrum(alpha_n(2).unwrap().alpha, 0.0, 6, 6).unwrap();
        assert_eq!(w.points.len(), 7 * 6);
        // ℓ = 0 row all positive for m = 0
        for p in w.points.iter().filter(|p| p.ell == 0) {
            assert_eq!(p.sign_class, SignClass::Positive);
            assert!((p.lambda - p.j_value * p.j_value).abs() < 1e-9);
        }
        // sorted
        for w2 in w.points.windows(2) {
            assert!(w2[0].lambda <= w2[1].lambda);
        }
        // basis count bookkeeping
        assert_eq!(w.basis_count(), 6 + 6 * 6 * 2);
    }

    #[test]
    fn gap_matches_enumeration() {
        let alpha = alpha_n(3).unwrap().alpha;
        let w = enumerate_spectrum(alpha, 7.0, 30, 30).unwrap();
        let g = gap_constant(alpha, 7.0, 30, 30, KERNEL_TOL).unwrap();
        assert_eq!(g.c_estimate, w.min_gap_ratio);
        assert_eq!(g.min_abs_nonkernel, w.min_abs_nonkernel);
        assert_eq!(g.argmin, w.argmin);
    }

    #[test]
    fn shifted_reduces_to_plain_at_mu_zero() {
        let alpha = alpha_n(2).unwrap().alpha;
        let s = shifted_spectrum(alpha, 1.0, 0.0, 5, 5).unwrap();
        let w = enumerate_spectrum(alpha, 1.0, 5, 5).unwrap();
        // every plain eigenvalue appears; ℓ ≥ 1 appear on both branches
        for p in &w.points {
            let hits = s
                .points
                .iter()
                .filter(|q| q.ell == p.ell && q.k == p.k && (q.lambda - p.lambda).abs() < 1e-12)
                .count();
            assert_eq!(hits, if p.ell == 0 { 1 } else { 2 });
        }
    }

    #[test]
    fn shifted_branch_symmetry() {
        let alpha = alpha_n(2).unwrap().alpha;
        let plus = shifted_spectrum(alpha, 2.0, 0.7, 4, 4).unwrap();
        let minus = shifted_spectrum(alpha, 2.0, -0.7, 4, 4).unwrap();
        for p in plus.points.iter().filter(|p| p.branch == Branch::Minus) {
            let q = minus
                .points
                .iter()
                .find(|q| q.ell == p.ell && q.k == p.k && q.branch == Branch::Plus)
                .unwrap();
            assert!((p.lambda - q.lambda).abs() < 1e-12);
        }
    }

    #[test]
    fn ratio_bracket_contains_value() {
        let alpha = alpha_n(2).unwrap().alpha;
        for &(ell, k) in &[(1u32, 1u32), (3, 2), (10, 5), (40, 3), (5, 40)] {
            let (lo, v, hi) = ratio_bound_check(alpha, ell, k).unwrap();
            assert!(lo < v && v < hi, "({ell},{k}): {lo} {v} {hi}");
        }
        // ℓ >> k gives negative values, k >> ℓ positive
        let (_, v, _) = ratio_bound_check(alpha, 60, 1).unwrap();
        assert!(v < 0.0);
        let (_, v, _) = ratio_bound_check(alpha, 1, 60).unwrap();
        assert!(v > 0.0);
    }
}
