//! Generalized-Nehari ground states: for each positive direction `w` the
//! energy has a unique maximum on the half-space `R⁺w ⊕ F`; the ground
//! state is the minimum of that inner maximum over the unit sphere of the
//! positive block.

use super::basis::{DiskQuadrature, GalerkinBasis, Parity};
use crate::error::{Error, Result};
use crate::par::par_map_slice;
use crate::spectrum::SignClass;

/// Converged ground-state data.
#[derive(Debug, Clone)]
pub struct NehariResult {
    pub alpha: f64,
    pub m: f64,
    pub p: f64,
    pub j_cut: f64,
    /// Coefficients on the assembled basis.
    pub coefficients: Vec<f64>,
    /// Energy value at the critical point.
    pub energy: f64,
    /// `max(|Φ'(u)u|, max_F |Φ'(u)v|/‖v‖)`.
    pub kkt_residual: f64,
    /// Share of `‖u‖²` on ℓ ≥ 1 entries.
    pub nonradial_energy_fraction: f64,
    pub converged: bool,
}

impl NehariResult {
    pub fn to_json(&self, basis: &GalerkinBasis) -> String {
        let coeffs: Vec<serde_json::Value> = basis
            .entries
            .iter()
            .zip(&self.coefficients)
            .filter(|(_, &c)| c != 0.0)
            .map(|(e, &c)| {
                serde_json::json!([
                    e.ell,
                    e.k,
                    match e.parity {
                        Parity::Cos => "cos",
                        Parity::Sin => "sin",
                    },
                    c
                ])
            })
            .collect();
        serde_json::json!({
            "schema": 1,
            "alpha": self.alpha,
            "m": self.m,
            "p": self.p,
            "j_cut": self.j_cut,
            "energy": self.energy,
            "kkt_residual": self.kkt_residual,
            "nonradial_energy_fraction": self.nonradial_energy_fraction,
            "converged": self.converged,
            "coefficients": coeffs,
        })
        .to_string()
    }
}

/// Workspace bundling the basis, quadrature tables and the exponent.
pub struct NehariProblem<'a> {
    pub basis: &'a GalerkinBasis,
    pub quad: &'a DiskQuadrature,
    pub p: f64,
}

impl<'a> NehariProblem<'a> {
    pub fn new(basis: &'a GalerkinBasis, quad: &'a DiskQuadrature, p: f64) -> Result<Self> {
        if !(p > 2.0) {
            return Err(Error::domain(format!("exponent p must exceed 2 (got {p})")));
        }
        Ok(NehariProblem { basis, quad, p })
    }

    /// `Φ(u) = ½ Σ λ_eff c² − (1/p)∫|u|^p`.
    pub fn energy(&self, coeffs: &[f64]) -> f64 {
        let quadratic: f64 = self
            .basis
            .entries
            .iter()
            .zip(coeffs)
            .map(|(e, &c)| e.lambda_eff * c * c)
            .sum();
        let u = self.quad.synthesize(self.basis, coeffs);
        let pw: Vec<f64> = u.iter().map(|&v| v.abs().powf(self.p)).collect();
        0.5 * quadratic - self.quad.integrate(&pw) / self.p
    }

    /// Full Euclidean gradient of `Φ` in coefficient space:
    /// `(∇Φ)_e = λ_eff c_e − ∫ |u|^{p−2}u φ_e`.
    pub fn gradient(&self, coeffs: &[f64]) -> Vec<f64> {
        let u = self.quad.synthesize(self.basis, coeffs);
        let nl: Vec<f64> = u
            .iter()
            .map(|&v| v.abs().powf(self.p - 2.0) * v)
            .collect();
        let proj = self.quad.project(self.basis, &nl);
        self.basis
            .entries
            .iter()
            .zip(coeffs)
            .zip(&proj)
            .map(|((e, &c), &pr)| e.lambda_eff * c - pr)
            .collect()
    }

    /// Energy and gradient in one pass.
    fn energy_grad(&self, coeffs: &[f64]) -> (f64, Vec<f64>) {
        let u = self.quad.synthesize(self.basis, coeffs);
        let mut ip = 0.0;
        let nl: Vec<f64> = u
            .iter()
            .map(|&v| {
                let a = v.abs().powf(self.p - 2.0);
                ip += 0.0; // placeholder, integral computed below
                a * v
            })
            .collect();
        let pw: Vec<f64> = u.iter().map(|&v| v.abs().powf(self.p)).collect();
        ip = self.quad.integrate(&pw) / self.p;
        let proj = self.quad.project(self.basis, &nl);
        let quadratic: f64 = self
            .basis
            .entries
            .iter()
            .zip(coeffs)
            .map(|(e, &c)| e.lambda_eff * c * c)
            .sum();
        let grad: Vec<f64> = self
            .basis
            .entries
            .iter()
            .zip(coeffs)
            .zip(&proj)
            .map(|((e, &c), &pr)| e.lambda_eff * c - pr)
            .collect();
        (0.5 * quadratic - ip, grad)
    }

    /// `Φ'(u)u` and the scaled F-block residual `max_F |Φ'(u)ê|/‖ê‖`.
    pub fn kkt_residual(&self, coeffs: &[f64]) -> f64 {
        let grad = self.gradient(coeffs);
        let phi_u: f64 = grad.iter().zip(coeffs).map(|(g, c)| g * c).sum();
        let mut worst = phi_u.abs();
        for &f in self.basis.f_block().iter() {
            let scale = self.basis.entries[f].weight.sqrt();
            worst = worst.max(grad[f].abs() / scale);
        }
        worst
    }
}

/// Result of the inner maximization over one half-space.
#[derive(Debug, Clone)]
pub struct InnerMax {
    /// Ray coordinate along the positive direction.
    pub t: f64,
    /// Coefficients on the F-block (aligned with `basis.f_block()`).
    pub v: Vec<f64>,
    /// Maximum value of the energy on the half-space.
    pub value: f64,
    /// Subspace gradient norm at the maximizer.
    pub grad_norm: f64,
}

/// Build full coefficients from `(t, v)` for a given direction.
fn compose(
    basis: &GalerkinBasis,
    f_idx: &[usize],
    w_plus: &[f64],
    t: f64,
    v: &[f64],
) -> Vec<f64> {
    let mut coeffs = vec![0.0; basis.entries.len()];
    for (slot, &e) in basis.plus.iter().enumerate() {
        coeffs[e] = t * w_plus[slot];
    }
    for (slot, &e) in f_idx.iter().enumerate() {
        coeffs[e] += v[slot];
    }
    coeffs
}

/// Bounded-memory quasi-Newton direction (two-loop recursion) with a
/// diagonal seed.
struct LbfgsBuf {
    cap: usize,
    s: std::collections::VecDeque<Vec<f64>>,
    y: std::collections::VecDeque<Vec<f64>>,
    rho: std::collections::VecDeque<f64>,
}

impl LbfgsBuf {
    fn new(cap: usize) -> Self {
        LbfgsBuf {
            cap,
            s: Default::default(),
            y: Default::default(),
            rho: Default::default(),
        }
    }

    fn push(&mut self, s: Vec<f64>, y: Vec<f64>) {
        let sy: f64 = s.iter().zip(&y).map(|(a, b)| a * b).sum();
        let ss: f64 = s.iter().map(|a| a * a).sum();
        let yy: f64 = y.iter().map(|a| a * a).sum();
        if sy > 1e-12 * (ss * yy).sqrt() && sy.is_finite() {
            if self.s.len() == self.cap {
                self.s.pop_front();
                self.y.pop_front();
                self.rho.pop_front();
            }
            self.s.push_back(s);
            self.y.push_back(y);
            self.rho.push_back(1.0 / sy);
        }
    }

    /// `H·g` with the stored curvature pairs and diagonal seed `h0`.
    fn apply(&self, g: &[f64], h0: &[f64]) -> Vec<f64> {
        let mut q = g.to_vec();
        let k = self.s.len();
        let mut alpha = vec![0.0; k];
        for i in (0..k).rev() {
            let a = self.rho[i] * dot(&self.s[i], &q);
            alpha[i] = a;
            for (qj, yj) in q.iter_mut().zip(&self.y[i]) {
                *qj -= a * yj;
            }
        }
        for (qj, h) in q.iter_mut().zip(h0) {
            *qj *= h;
        }
        for i in 0..k {
            let b = self.rho[i] * dot(&self.y[i], &q);
            for (qj, sj) in q.iter_mut().zip(&self.s[i]) {
                *qj += (alpha[i] - b) * sj;
            }
        }
        q
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Maximize the energy over `{t·w + v : t ≥ 0, v ∈ F}` by L-BFGS ascent
/// with a diagonal seed from the eigenvalue weights. `w_plus` is a
/// coefficient vector over the positive block, normalized in the energy
/// norm.
///
/// Fails with a coercivity diagnostic when no positive maximum is found.
pub fn inner_maximize(
    prob: &NehariProblem,
    w_plus: &[f64],
    warm: Option<(f64, Vec<f64>)>,
    gtol: f64,
) -> Result<InnerMax> {
    let basis = prob.basis;
    let f_idx = basis.f_block();
    let nf = f_idx.len();
    // starting ray coordinate from the pure-ray closed form
    let (t0, v0) = match warm {
        Some((t0, v0)) if v0.len() == nf && t0 > 0.0 => (t0, v0),
        _ => {
            let coeffs = compose(basis, &f_idx, w_plus, 1.0, &vec![0.0; nf]);
            let u = prob.quad.synthesize(basis, &coeffs);
            let pw: Vec<f64> = u.iter().map(|&x| x.abs().powf(prob.p)).collect();
            let wp = prob.quad.integrate(&pw);
            ((1.0 / wp).powf(1.0 / (prob.p - 2.0)), vec![0.0; nf])
        }
    };
    // z = [t, v...]; maximize ψ(z); inverse-curvature diagonal seed
    let mut h0 = vec![1.0; nf + 1];
    for (slot, &e) in f_idx.iter().enumerate() {
        h0[slot + 1] = 1.0 / basis.entries[e].weight.max(1.0);
    }
    let mut z = Vec::with_capacity(nf + 1);
    z.push(t0);
    z.extend_from_slice(&v0);
    let eval = |z: &[f64]| -> (f64, Vec<f64>) {
        let coeffs = compose(basis, &f_idx, w_plus, z[0], &z[1..]);
        let (val, grad) = prob.energy_grad(&coeffs);
        let mut gz = Vec::with_capacity(nf + 1);
        gz.push(
            basis
                .plus
                .iter()
                .enumerate()
                .map(|(slot, &e)| grad[e] * w_plus[slot])
                .sum(),
        );
        gz.extend(f_idx.iter().map(|&e| grad[e]));
        (val, gz)
    };
    let (mut value, mut grad) = eval(&z);
    let mut buf = LbfgsBuf::new(10);
    for _ in 0..600 {
        let grad_norm = dot(&grad, &grad).sqrt();
        if grad_norm <= gtol {
            break;
        }
        let dir = buf.apply(&grad, &h0); // ascent direction (H·g)
        let slope = dot(&dir, &grad);
        let dir = if slope <= 0.0 {
            // curvature went bad; fall back to the preconditioned gradient
            buf.s.clear();
            buf.y.clear();
            buf.rho.clear();
            grad.iter().zip(&h0).map(|(g, h)| g * h).collect()
        } else {
            dir
        };
        let slope = dot(&dir, &grad);
        let noise = 1e-14 * (1.0 + value.abs());
        let mut eta = 1.0;
        let mut accepted = false;
        for _ in 0..50 {
            let mut z_try: Vec<f64> = z
                .iter()
                .zip(&dir)
                .map(|(&zi, &di)| zi + eta * di)
                .collect();
            if z_try[0] <= 0.0 {
                z_try[0] = 0.5 * z[0];
            }
            let (val_try, grad_try) = eval(&z_try);
            if val_try > value + 1e-4 * eta * slope - noise {
                let s: Vec<f64> = z_try.iter().zip(&z).map(|(a, b)| a - b).collect();
                // minimize −ψ: curvature pair uses y = −(g_try − g)
                let y: Vec<f64> = grad.iter().zip(&grad_try).map(|(a, b)| a - b).collect();
                buf.push(s, y);
                z = z_try;
                value = val_try;
                grad = grad_try;
                accepted = true;
                break;
            }
            eta *= 0.4;
        }
        if !accepted {
            break;
        }
    }
    let grad_norm = dot(&grad, &grad).sqrt();
    let t = z[0];
    let v = z[1..].to_vec();
    if grad_norm <= 1e4 * gtol.max(1e-12) && value > 0.0 {
        Ok(InnerMax {
            t,
            v,
            value,
            grad_norm,
        })
    } else if value <= 0.0 {
        Err(coercivity_diagnostic(prob, w_plus, &f_idx, value))
    } else {
        Err(Error::convergence(format!(
            "inner maximization stalled: grad_norm={grad_norm:.3e}, value={value:.6e}"
        )))
    }
}

/// When the inner maximization fails, estimate the coercivity radius R
/// with Φ ≤ 0 outside it along the failing ray.
fn coercivity_diagnostic(
    prob: &NehariProblem,
    w_plus: &[f64],
    f_idx: &[usize],
    value: f64,
) -> Error {
    let mut r = 1.0;
    for _ in 0..60 {
        let coeffs = compose(prob.basis, f_idx, w_plus, r, &vec![0.0; f_idx.len()]);
        if prob.energy(&coeffs) <= 0.0 {
            break;
        }
        r *= 2.0;
    }
    Error::convergence(format!(
        "no positive-value critical point found (last value {value:.3e}); \
         energy is nonpositive beyond radius ~{r:.3e} on this ray"
    ))
}

/// Options for the outer minimization.
#[derive(Debug, Clone, Copy)]
pub struct GroundStateOptions {
    pub inner_gtol: f64,
    pub kkt_tol: f64,
    pub outer_budget: usize,
    pub multi_starts: usize,
}

impl Default for GroundStateOptions {
    fn default() -> Self {
        GroundStateOptions {
            inner_gtol: 1e-9,
            kkt_tol: 1e-6,
            outer_budget: 400,
            multi_starts: 10,
        }
    }
}

fn normalize_plus(basis: &GalerkinBasis, w: &mut [f64]) {
    let n2: f64 = basis
        .plus
        .iter()
        .enumerate()
        .map(|(slot, &e)| basis.entries[e].weight * w[slot] * w[slot])
        .sum();
    let inv = 1.0 / n2.sqrt();
    for x in w.iter_mut() {
        *x *= inv;
    }
}

/// Minimize the inner-max energy over the positive-block unit sphere
/// starting from one direction. Returns the refined direction with its
/// inner data.
fn outer_descent(
    prob: &NehariProblem,
    w0: Vec<f64>,
    opts: &GroundStateOptions,
) -> Result<(Vec<f64>, InnerMax)> {
    let basis = prob.basis;
    let f_idx = basis.f_block();
    let mut w = w0;
    normalize_plus(basis, &mut w);
    // loose inner tolerance during the search; tight polish at the end
    let loose = |val: f64| (1e-6 * (1.0 + val.abs())).max(opts.inner_gtol);
    let mut inner = inner_maximize(prob, &w, None, 1e-6)?;
    let metric_grad = |inner: &InnerMax, w: &[f64]| {
        let coeffs = compose(basis, &f_idx, w, inner.t, &inner.v);
        let grad_full = prob.gradient(&coeffs);
        let mut g: Vec<f64> = basis
            .plus
            .iter()
            .map(|&e| inner.t * grad_full[e] / basis.entries[e].weight)
            .collect();
        let ip: f64 = basis
            .plus
            .iter()
            .enumerate()
            .map(|(slot, &e)| basis.entries[e].weight * g[slot] * w[slot])
            .sum();
        for (slot, gi) in g.iter_mut().enumerate() {
            *gi -= ip * w[slot];
        }
        g
    };
    // inexact descent: one warm inner solve per step, adaptive step size
    let mut g = metric_grad(&inner, &w);
    let mut eta = 0.2;
    let mut stagnant = 0usize;
    for _ in 0..opts.outer_budget {
        let g2: f64 = basis
            .plus
            .iter()
            .enumerate()
            .map(|(slot, &e)| basis.entries[e].weight * g[slot] * g[slot])
            .sum();
        if g2.sqrt() <= 1e-10 * (1.0 + inner.value.abs()) {
            break;
        }
        let mut w_try: Vec<f64> = w
            .iter()
            .zip(&g)
            .map(|(&wi, &gi)| wi - eta * gi)
            .collect();
        normalize_plus(basis, &mut w_try);
        let trial = inner_maximize(
            prob,
            &w_try,
            Some((inner.t, inner.v.clone())),
            loose(inner.value),
        );
        let noise = 1e-13 * (1.0 + inner.value.abs());
        match trial {
            Ok(trial) if trial.value < inner.value + noise => {
                let gain = inner.value - trial.value;
                stagnant = if gain <= 1e-12 * (1.0 + inner.value.abs()) {
                    stagnant + 1
                } else {
                    0
                };
                w = w_try;
                inner = trial;
                g = metric_grad(&inner, &w);
                eta = (eta * 1.3).min(5.0);
                if stagnant >= 5 {
                    break;
                }
            }
            _ => {
                eta *= 0.35;
                if eta < 1e-9 {
                    break;
                }
            }
        }
    }
    // final polish at the requested tolerance
    inner = inner_maximize(prob, &w, Some((inner.t, inner.v.clone())), opts.inner_gtol)?;
    Ok((w, inner))
}

/// Ground state of the reduced equation on the truncated basis.
///
/// Outer minimization over the positive-block sphere with multi-start from
/// the lowest positive modes; inner maximization on each half-space.
pub fn ground_state(
    basis: &GalerkinBasis,
    quad: &DiskQuadrature,
    p: f64,
    opts: &GroundStateOptions,
) -> Result<NehariResult> {
    if !(p > 2.0 && p < 4.0) {
        return Err(Error::domain(format!(
            "ground_state requires p in (2,4) (got {p})"
        )));
    }
    let prob = NehariProblem::new(basis, quad, p)?;
    // starting directions: lowest-λ positive modes
    let mut order: Vec<usize> = (0..basis.plus.len()).collect();
    order.sort_by(|&a, &b| {
        basis.entries[basis.plus[a]]
            .lambda
            .total_cmp(&basis.entries[basis.plus[b]].lambda)
    });
    let starts: Vec<Vec<f64>> = order
        .iter()
        .take(opts.multi_starts)
        .map(|&slot| {
            let mut w = vec![0.0; basis.plus.len()];
            w[slot] = 1.0;
            w
        })
        .collect();
    let runs = par_map_slice(&starts, |w0| outer_descent(&prob, w0.clone(), opts));
    let mut best: Option<(Vec<f64>, InnerMax)> = None;
    let mut errors = Vec::new();
    for r in runs {
        match r {
            Ok((w, inner)) => {
                if best.as_ref().map_or(true, |(_, b)| inner.value < b.value) {
                    best = Some((w, inner));
                }
            }
            Err(e) => errors.push(e),
        }
    }
    let (w, inner) = best.ok_or_else(|| {
        errors
            .pop()
            .unwrap_or_else(|| Error::convergence("all multi-starts failed".to_string()))
    })?;
    let f_idx = basis.f_block();
    let coefficients = compose(basis, &f_idx, &w, inner.t, &inner.v);
    let kkt = prob.kkt_residual(&coefficients);
    Ok(NehariResult {
        alpha: basis.alpha,
        m: basis.m,
        p,
        j_cut: basis.j_cut,
        energy: inner.value,
        kkt_residual: kkt,
        nonradial_energy_fraction: basis.nonradial_energy_fraction(&coefficients),
        coefficients,
        converged: kkt <= opts.kkt_tol,
    })
}

/// Half-space energy bound from the lowest positive mode:
/// `(½ − 1/p)·π·(min_{I⁺} λ)^{p/(p−2)}`.
pub fn upper_bound_c(alpha: f64, m: f64, p: f64, ell_max: u32, k_max: u32) -> Result<f64> {
    if !(p > 2.0) {
        return Err(Error::domain("upper_bound_c requires p > 2"));
    }
    let (min_pos, _) = min_positive_lambda(alpha, m, ell_max, k_max)?;
    Ok((0.5 - 1.0 / p) * std::f64::consts::PI * min_pos.powf(p / (p - 2.0)))
}

/// Smallest positive eigenvalue in the cutoff rectangle and its index pair.
pub fn min_positive_lambda(
    alpha: f64,
    m: f64,
    ell_max: u32,
    k_max: u32,
) -> Result<(f64, (u32, u32))> {
    let mut best = f64::INFINITY;
    let mut arg = (0u32, 0u32);
    let rows = crate::par::par_map_idx((ell_max + 1) as usize, |ell| {
        let ellf = ell as f64;
        let row = crate::specfun::bessel_zero_row(ellf, k_max)?;
        let mut local = (f64::INFINITY, (0u32, 0u32));
        for (i, &j) in row.iter().enumerate() {
            let lambda = j * j - alpha * alpha * ellf * ellf + m;
            if crate::spectrum::classify(lambda, j, crate::spectrum::KERNEL_TOL)
                == SignClass::Positive
                && lambda < local.0
            {
                local = (lambda, (ell as u32, i as u32 + 1));
            }
        }
        Ok::<_, Error>(local)
    });
    for r in rows {
        let (v, a) = r?;
        if v < best {
            best = v;
            arg = a;
        }
    }
    if !best.is_finite() {
        return Err(Error::config(
            "no positive eigenvalue found in the cutoff".to_string(),
        ));
    }
    Ok((best, arg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groundstate::basis::assemble_basis;
    use crate::spectrum::alpha_n;

    /// With m large enough that every truncated eigenvalue is positive,
    /// the half-space reduces to the ray and the maximum has the closed
    /// form `(½ − 1/p)(λ/‖φ‖_p²)^{p/(p−2)}`.
    #[test]
    fn inner_max_closed_form_when_f_trivial() {
        let alpha = alpha_n(2).unwrap().alpha;
        let basis = assemble_basis(alpha, 4000.0, 10.0).unwrap();
        assert!(basis.minus.is_empty() && basis.zero.is_empty());
        let quad = DiskQuadrature::for_basis(&basis).unwrap();
        let p = 3.0;
        let prob = NehariProblem::new(&basis, &quad, p).unwrap();
        // direction: lowest mode
        let slot = basis
            .plus
            .iter()
            .position(|&e| basis.entries[e].ell == 0 && basis.entries[e].k == 1)
            .unwrap();
        let mut w = vec![0.0; basis.plus.len()];
        w[slot] = 1.0 / basis.entries[basis.plus[slot]].weight.sqrt();
        let inner = inner_maximize(&prob, &w, None, 1e-10).unwrap();
        // closed form with φ the normalized lowest mode
        let e = basis.plus[slot];
        let lambda = basis.entries[e].lambda;
        let mut c = vec![0.0; basis.entries.len()];
        c[e] = 1.0;
        let u = quad.synthesize(&basis, &c);
        let pw: Vec<f64> = u.iter().map(|&v| v.abs().powf(p)).collect();
        let norm_p_sq = quad.integrate(&pw).powf(2.0 / p);
        let expect = (0.5 - 1.0 / p) * (lambda / norm_p_sq).powf(p / (p - 2.0));
        assert!(
            (inner.value - expect).abs() < 1e-8 * expect,
            "inner max {} vs closed form {expect}",
            inner.value
        );
        assert!(inner.t > 0.0 && inner.value > 0.0);
    }

    #[test]
    fn inner_max_unique_across_restarts() {
        use rand::{Rng, SeedableRng};
        let alpha = alpha_n(3).unwrap().alpha;
        let basis = assemble_basis(alpha, 20.0, 16.0).unwrap();
        assert!(!basis.minus.is_empty());
        let quad = DiskQuadrature::for_basis(&basis).unwrap();
        let prob = NehariProblem::new(&basis, &quad, 3.0).unwrap();
        let mut w = vec![0.0; basis.plus.len()];
        let second = 1 % w.len();
        w[0] = 1.0;
        w[second] = 0.4;
        normalize_plus(&basis, &mut w);
        let reference = inner_maximize(&prob, &w, None, 1e-10).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let nf = basis.f_block().len();
            let t0 = 0.2 + rng.gen::<f64>() * 2.0;
            let v0: Vec<f64> = (0..nf).map(|_| 0.3 * (rng.gen::<f64>() - 0.5)).collect();
            let run = inner_maximize(&prob, &w, Some((t0, v0)), 1e-10).unwrap();
            assert!(
                (run.value - reference.value).abs() <= 1e-6 * (1.0 + reference.value.abs()),
                "restart value {} vs {}",
                run.value,
                reference.value
            );
        }
    }

    #[test]
    fn zero_function_has_zero_energy() {
        let alpha = alpha_n(2).unwrap().alpha;
        let basis = assemble_basis(alpha, 1.0, 10.0).unwrap();
        let quad = DiskQuadrature::for_basis(&basis).unwrap();
        let prob = NehariProblem::new(&basis, &quad, 3.0).unwrap();
        let c = vec![0.0; basis.entries.len()];
        assert_eq!(prob.energy(&c), 0.0);
    }

    #[test]
    fn pure_negative_mode_has_negative_quadratic_part() {
        let alpha = alpha_n(2).unwrap().alpha;
        let basis = assemble_basis(alpha, 0.0, 14.0).unwrap();
        let quad = DiskQuadrature::for_basis(&basis).unwrap();
        let prob = NehariProblem::new(&basis, &quad, 3.0).unwrap();
        let e = *basis.minus.first().expect("negative block nonempty");
        let mut c = vec![0.0; basis.entries.len()];
        c[e] = 0.5;
        // quadratic part = Φ + I_p must be negative
        let u = quad.synthesize(&basis, &c);
        let pw: Vec<f64> = u.iter().map(|&v| v.abs().powi(3)).collect();
        let ip = quad.integrate(&pw) / 3.0;
        assert!(prob.energy(&c) + ip < 0.0);
    }
}
