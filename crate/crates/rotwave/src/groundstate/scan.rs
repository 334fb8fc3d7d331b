//! Mass sweep comparing the ground-state level against the radial level to
//! locate the nonradiality crossover.

use super::basis::{assemble_basis, DiskQuadrature, GalerkinBasis};
use super::nehari::{ground_state, upper_bound_c, GroundStateOptions, NehariResult};
use super::radial::radial_ground_state;
use crate::error::Result;

/// One mass point of the sweep.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ScanRow {
    pub m: f64,
    /// Computed ground-state level on the truncated basis, when the solver
    /// converged.
    pub c_energy: Option<f64>,
    /// Closed-form half-space bound on the level.
    pub upper_bound: f64,
    /// Radial level.
    pub beta_rad: f64,
    /// `min(c, upper_bound) < beta_rad` — the ground state is certified
    /// below the radial branch.
    pub crossed: bool,
    pub nonradial_energy_fraction: Option<f64>,
    pub kkt_residual: Option<f64>,
}

/// Sweep report.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CrossoverReport {
    pub alpha: f64,
    pub p: f64,
    pub j_cut: f64,
    pub rows: Vec<ScanRow>,
    /// Smallest scanned mass with `crossed`.
    pub crossover_m: Option<f64>,
}

impl CrossoverReport {
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "schema": 1,
            "alpha": self.alpha,
            "p": self.p,
            "j_cut": self.j_cut,
            "crossover_m": self.crossover_m,
            "rows": self.rows,
        })
        .to_string()
    }
}

/// For each mass in `m_grid`: ground-state level (or its bound), radial
/// level, and the comparison verdict.
pub fn nonradiality_scan(
    alpha: f64,
    p: f64,
    m_grid: &[f64],
    j_cut: f64,
    bound_cutoff: (u32, u32),
    opts: &GroundStateOptions,
) -> Result<CrossoverReport> {
    let mut rows = Vec::with_capacity(m_grid.len());
    for &m in m_grid {
        let ub = upper_bound_c(alpha, m, p, bound_cutoff.0, bound_cutoff.1)?;
        let beta = radial_ground_state(m.max(0.0), p)?.beta;
        let gs = solve_at(alpha, m, p, j_cut, opts).ok();
        let (c_energy, fraction, kkt) = match &gs {
            Some(r) => (
                Some(r.energy),
                Some(r.nonradial_energy_fraction),
                Some(r.kkt_residual),
            ),
            None => (None, None, None),
        };
        let best = c_energy.map_or(ub, |c| c.min(ub));
        rows.push(ScanRow {
            m,
            c_energy,
            upper_bound: ub,
            beta_rad: beta,
            crossed: best < beta,
            nonradial_energy_fraction: fraction,
            kkt_residual: kkt,
        });
    }
    let crossover_m = rows
        .iter()
        .filter(|r| r.crossed)
        .map(|r| r.m)
        .fold(None, |acc: Option<f64>, m| {
            Some(acc.map_or(m, |a| a.min(m)))
        });
    Ok(CrossoverReport {
        alpha,
        p,
        j_cut,
        rows,
        crossover_m,
    })
}

/// Assemble and solve one ground state at `(α, m, p, j_cut)`.
pub fn solve_at(
    alpha: f64,
    m: f64,
    p: f64,
    j_cut: f64,
    opts: &GroundStateOptions,
) -> Result<NehariResult> {
    let basis = assemble_basis(alpha, m, j_cut)?;
    let quad = DiskQuadrature::for_basis(&basis)?;
    ground_state(&basis, &quad, p, opts)
}

/// Radial level recomputed through the spectral machinery restricted to
/// the ℓ = 0 block; independent cross-check of the finite-difference
/// radial solver.
pub fn radial_level_via_galerkin(m: f64, p: f64, j_cut: f64) -> Result<f64> {
    // Restrict by assembling at a velocity whose negative block is empty
    // on ℓ = 0 (always true for m ≥ 0) and zeroing out ℓ ≥ 1.
    let alpha = crate::spectrum::alpha_n(2)?.alpha;
    let basis = assemble_basis(alpha, m, j_cut)?;
    let radial_basis = restrict_to_radial(&basis);
    let quad = DiskQuadrature::for_basis(&radial_basis)?;
    let opts = GroundStateOptions {
        multi_starts: 4,
        ..GroundStateOptions::default()
    };
    Ok(ground_state(&radial_basis, &quad, p, &opts)?.energy)
}

fn restrict_to_radial(basis: &GalerkinBasis) -> GalerkinBasis {
    let entries: Vec<_> = basis
        .entries
        .iter()
        .filter(|e| e.ell == 0)
        .cloned()
        .collect();
    let mut plus = Vec::new();
    let mut zero = Vec::new();
    let mut minus = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        match e.sign_class {
            crate::spectrum::SignClass::Positive => plus.push(i),
            crate::spectrum::SignClass::Kernel => zero.push(i),
            crate::spectrum::SignClass::Negative => minus.push(i),
        }
    }
    GalerkinBasis {
        alpha: basis.alpha,
        m: basis.m,
        j_cut: basis.j_cut,
        entries,
        plus,
        zero,
        minus,
        ell_max: 0,
    }
}
