//! Truncated disk eigenbasis and the polar quadrature used to evaluate the
//! nonlinear term on it.

use crate::error::{Error, Result};
use crate::par::par_map_idx;
use crate::quadrature::gauss_legendre_on;
use crate::specfun::{bessel_j, bessel_zero_row};
use crate::spectrum::{classify, SignClass, KERNEL_TOL};

/// Angular factor of a basis function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Cos,
    Sin,
}

/// One L²-normalized eigenfunction `A·trig(ℓθ)·J_ℓ(j r)`.
#[derive(Debug, Clone, Copy)]
pub struct BasisEntry {
    pub ell: u32,
    pub k: u32,
    pub parity: Parity,
    /// `j_{ℓ,k}`.
    pub j: f64,
    /// Raw eigenvalue `j² − α²ℓ² + m`.
    pub lambda: f64,
    /// Eigenvalue used by the quadratic form: 0 on the kernel.
    pub lambda_eff: f64,
    /// Norm weight of the scalar product: `|λ|` off the kernel, 1 on it.
    pub weight: f64,
    pub sign_class: SignClass,
    /// L² normalization constant `A`.
    pub norm: f64,
}

/// Truncated eigenbasis of the operator at `(α, m)`, cut by `j_{ℓ,k} ≤ j_cut`.
#[derive(Debug, Clone)]
pub struct GalerkinBasis {
    pub alpha: f64,
    pub m: f64,
    pub j_cut: f64,
    pub entries: Vec<BasisEntry>,
    /// Indices of positive entries (the `E⁺` block).
    pub plus: Vec<usize>,
    /// Indices of kernel entries.
    pub zero: Vec<usize>,
    /// Indices of negative entries.
    pub minus: Vec<usize>,
    pub ell_max: u32,
}

impl GalerkinBasis {
    /// `‖u‖²_{α,m} = Σ w_e c_e²`.
    pub fn norm_sq(&self, coeffs: &[f64]) -> f64 {
        self.entries
            .iter()
            .zip(coeffs)
            .map(|(e, &c)| e.weight * c * c)
            .sum()
    }

    /// Share of `‖u‖²_{α,m}` carried by entries with ℓ ≥ 1.
    pub fn nonradial_energy_fraction(&self, coeffs: &[f64]) -> f64 {
        let total = self.norm_sq(coeffs);
        if total == 0.0 {
            return 0.0;
        }
        let nonradial: f64 = self
            .entries
            .iter()
            .zip(coeffs)
            .filter(|(e, _)| e.ell >= 1)
            .map(|(e, &c)| e.weight * c * c)
            .sum();
        nonradial / total
    }

    /// Indices of the F-block (kernel ∪ negative).
    pub fn f_block(&self) -> Vec<usize> {
        let mut v = self.zero.clone();
        v.extend_from_slice(&self.minus);
        v
    }
}

/// Assemble the truncated eigenbasis at `(α, m)` with `j_{ℓ,k} ≤ j_cut`.
///
/// Normalization uses `∫₀¹ J_ℓ(j r)² r dr = J_{ℓ+1}(j)²/2`.
pub fn assemble_basis(alpha: f64, m: f64, j_cut: f64) -> Result<GalerkinBasis> {
    if !(alpha > 1.0) {
        return Err(Error::domain(format!("alpha must be > 1 (got {alpha})")));
    }
    let j01 = crate::specfun::bessel_j_zero(0.0, 1)?.value;
    if !(j_cut > j01) {
        return Err(Error::config(format!(
            "j_cut = {j_cut} must exceed the smallest zero {j01:.3}"
        )));
    }
    let mut entries = Vec::new();
    let mut ell_max = 0u32;
    for ell in 0u32.. {
        let ellf = ell as f64;
        // Smallest zero of the row grows with ℓ; stop once it passes j_cut.
        let k_estimate = (j_cut / 2.0) as u32 + 4;
        let row = bessel_zero_row(ellf, k_estimate)?;
        if row[0] > j_cut {
            break;
        }
        ell_max = ell;
        for (i, &j) in row.iter().enumerate() {
            if j > j_cut {
                break;
            }
            let lambda = j * j - alpha * alpha * ellf * ellf + m;
            let class = classify(lambda, j, KERNEL_TOL);
            let (lambda_eff, weight) = match class {
                SignClass::Kernel => (0.0, 1.0),
                _ => (lambda, lambda.abs()),
            };
            let j_next = bessel_j((ell + 1) as f64, j)?;
            let norm = if ell == 0 {
                1.0 / (std::f64::consts::PI.sqrt() * j_next.abs())
            } else {
                (2.0 / std::f64::consts::PI).sqrt() / j_next.abs()
            };
            let parities: &[Parity] = if ell == 0 {
                &[Parity::Cos]
            } else {
                &[Parity::Cos, Parity::Sin]
            };
            for &parity in parities {
                entries.push(BasisEntry {
                    ell,
                    k: i as u32 + 1,
                    parity,
                    j,
                    lambda,
                    lambda_eff,
                    weight,
                    sign_class: class,
                    norm,
                });
            }
        }
    }
    let mut plus = Vec::new();
    let mut zero = Vec::new();
    let mut minus = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        match e.sign_class {
            SignClass::Positive => plus.push(i),
            SignClass::Kernel => zero.push(i),
            SignClass::Negative => minus.push(i),
        }
    }
    if plus.is_empty() {
        return Err(Error::config(
            "assembled basis has an empty positive block".to_string(),
        ));
    }
    Ok(GalerkinBasis {
        alpha,
        m,
        j_cut,
        entries,
        plus,
        zero,
        minus,
        ell_max,
    })
}

/// Tensor quadrature on the unit disk with per-basis cached tables.
///
/// Radial: Gauss–Legendre on (0,1) against the weight `r dr`; angular:
/// equispaced trapezoid (exact for trigonometric polynomials below the
/// node count).
pub struct DiskQuadrature {
    pub n_r: usize,
    pub n_theta: usize,
    pub r_nodes: Vec<f64>,
    /// Radial weights including the `r` Jacobian.
    pub r_weights: Vec<f64>,
    /// Angular weight (uniform).
    pub w_theta: f64,
    /// `radial_tab[e][i] = A_e · J_{ℓ_e}(j_e r_i)`.
    radial_tab: Vec<Vec<f64>>,
    /// `cos_tab[ℓ][q]`, `sin_tab[ℓ][q]`.
    cos_tab: Vec<Vec<f64>>,
    sin_tab: Vec<Vec<f64>>,
}

impl DiskQuadrature {
    /// Build tables for `basis` with the resolution rule
    /// `N_r = ⌈1.5·j_cut⌉`, `N_θ = 4·ℓ_max + 16`.
    pub fn for_basis(basis: &GalerkinBasis) -> Result<DiskQuadrature> {
        let n_r = (1.5 * basis.j_cut).ceil() as usize;
        let n_theta = (4 * basis.ell_max + 16) as usize;
        Self::with_sizes(basis, n_r, n_theta)
    }

    /// Build tables with explicit node counts.
    pub fn with_sizes(basis: &GalerkinBasis, n_r: usize, n_theta: usize) -> Result<DiskQuadrature> {
        let (nodes, base_w) = gauss_legendre_on(n_r, 0.0, 1.0);
        let r_weights: Vec<f64> = nodes.iter().zip(&base_w).map(|(&r, &w)| w * r).collect();
        let radial_tab = par_map_idx(basis.entries.len(), |e| {
            let entry = &basis.entries[e];
            nodes
                .iter()
                .map(|&r| entry.norm * bessel_j(entry.ell as f64, entry.j * r).unwrap_or(0.0))
                .collect::<Vec<f64>>()
        });
        let mut cos_tab = Vec::with_capacity(basis.ell_max as usize + 1);
        let mut sin_tab = Vec::with_capacity(basis.ell_max as usize + 1);
        for ell in 0..=basis.ell_max as usize {
            let mut c = Vec::with_capacity(n_theta);
            let mut s = Vec::with_capacity(n_theta);
            for q in 0..n_theta {
                let th = -std::f64::consts::PI
                    + 2.0 * std::f64::consts::PI * q as f64 / n_theta as f64;
                c.push((ell as f64 * th).cos());
                s.push((ell as f64 * th).sin());
            }
            cos_tab.push(c);
            sin_tab.push(s);
        }
        Ok(DiskQuadrature {
            n_r,
            n_theta,
            r_nodes: nodes,
            r_weights,
            w_theta: 2.0 * std::f64::consts::PI / n_theta as f64,
            radial_tab,
            cos_tab,
            sin_tab,
        })
    }

    /// Evaluate `u = Σ c_e φ_e` on the node grid (row-major in `r`).
    pub fn synthesize(&self, basis: &GalerkinBasis, coeffs: &[f64]) -> Vec<f64> {
        let n_ell = basis.ell_max as usize + 1;
        // per-(ℓ, parity) radial profiles
        let mut prof_cos = vec![0.0; n_ell * self.n_r];
        let mut prof_sin = vec![0.0; n_ell * self.n_r];
        for (e, entry) in basis.entries.iter().enumerate() {
            let c = coeffs[e];
            if c == 0.0 {
                continue;
            }
            let target = match entry.parity {
                Parity::Cos => &mut prof_cos,
                Parity::Sin => &mut prof_sin,
            };
            let base = entry.ell as usize * self.n_r;
            for (i, &v) in self.radial_tab[e].iter().enumerate() {
                target[base + i] += c * v;
            }
        }
        let mut u = vec![0.0; self.n_r * self.n_theta];
        for ell in 0..n_ell {
            let ct = &self.cos_tab[ell];
            let st = &self.sin_tab[ell];
            for i in 0..self.n_r {
                let pc = prof_cos[ell * self.n_r + i];
                let ps = prof_sin[ell * self.n_r + i];
                if pc == 0.0 && ps == 0.0 {
                    continue;
                }
                let row = &mut u[i * self.n_theta..(i + 1) * self.n_theta];
                for (q, uv) in row.iter_mut().enumerate() {
                    *uv += pc * ct[q] + ps * st[q];
                }
            }
        }
        u
    }

    /// Project nodal values `g` onto every basis entry: `∫_B g φ_e`.
    pub fn project(&self, basis: &GalerkinBasis, g: &[f64]) -> Vec<f64> {
        let n_ell = basis.ell_max as usize + 1;
        // angular analysis first: T[ℓ][i] for each parity
        let mut t_cos = vec![0.0; n_ell * self.n_r];
        let mut t_sin = vec![0.0; n_ell * self.n_r];
        for i in 0..self.n_r {
            let row = &g[i * self.n_theta..(i + 1) * self.n_theta];
            for ell in 0..n_ell {
                let ct = &self.cos_tab[ell];
                let st = &self.sin_tab[ell];
                let mut ac = 0.0;
                let mut as_ = 0.0;
                for q in 0..self.n_theta {
                    ac += row[q] * ct[q];
                    as_ += row[q] * st[q];
                }
                t_cos[ell * self.n_r + i] = ac * self.w_theta;
                t_sin[ell * self.n_r + i] = as_ * self.w_theta;
            }
        }
        basis
            .entries
            .iter()
            .enumerate()
            .map(|(e, entry)| {
                let t = match entry.parity {
                    Parity::Cos => &t_cos,
                    Parity::Sin => &t_sin,
                };
                let base = entry.ell as usize * self.n_r;
                self.radial_tab[e]
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| v * t[base + i] * self.r_weights[i])
                    .sum()
            })
            .collect()
    }

    /// `∫_B f(u(x)) dx` for nodal values of `f(u)`.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        let mut total = 0.0;
        for i in 0..self.n_r {
            let row = &values[i * self.n_theta..(i + 1) * self.n_theta];
            let s: f64 = row.iter().sum();
            total += s * self.r_weights[i];
        }
        total * self.w_theta
    }
}
