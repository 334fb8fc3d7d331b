//! The limit function `ι(x) = lim_{k→∞} j_{xk,k}/k`, its inverse relation,
//! the limiting ODE, and the two-sided sandwich bound for the approach of
//! `ι_k(x) = j_{xk,k}/k` to `ι(x)`.

use crate::error::{Error, Result};
use crate::ode;
use crate::par::par_map_slice;
use crate::quadrature::tanh_sinh;
use crate::specfun;

/// Solution of the transcendental angle equation behind `ι`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct IotaPoint {
    /// Order/index ratio, > −1.
    pub x: f64,
    /// Angle in `[−π/2, π/2]` with `sinφ/(cosφ − (π/2−φ)sinφ) = x/π`.
    pub phi: f64,
    /// The limit value `ι(x)`; equals `x/sinφ` for x ≠ 0 and π at x = 0.
    pub iota: f64,
}

/// `h(φ) = π sinφ − x cosφ + x(π/2−φ) sinφ`, strictly increasing on
/// `(−π/2, π/2)`; its root gives the angle of `ι(x)`.
fn angle_equation(phi: f64, x: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    std::f64::consts::PI * s - x * c + x * (std::f64::consts::FRAC_PI_2 - phi) * s
}

/// The limit `ι(x)` for `x > −1`.
pub fn iota(x: f64) -> Result<IotaPoint> {
    if !(x > -1.0) || !x.is_finite() {
        return Err(Error::domain(format!("iota requires x > -1 (got {x})")));
    }
    if x == 0.0 {
        return Ok(IotaPoint {
            x,
            phi: 0.0,
            iota: std::f64::consts::PI,
        });
    }
    let mut lo = -std::f64::consts::FRAC_PI_2 + 1e-12;
    let mut hi = std::f64::consts::FRAC_PI_2 - 1e-12;
    // h(lo) < 0 < h(hi) for every x > −1; bisection then a Newton polish.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if angle_equation(mid, x) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    let mut phi = 0.5 * (lo + hi);
    for _ in 0..4 {
        let h = angle_equation(phi, x);
        let dh = (std::f64::consts::PI + x * (std::f64::consts::FRAC_PI_2 - phi)) * phi.cos();
        if dh == 0.0 {
            break;
        }
        phi -= h / dh;
    }
    Ok(IotaPoint {
        x,
        phi,
        iota: x / phi.sin(),
    })
}

/// Inverse of `x ↦ ι(x)/x` on `(1, ∞)`:
/// `f⁻¹(y) = π / (sqrt(y²−1) − (π/2 − arcsin(1/y)))`.
pub fn f_inverse(y: f64) -> Result<f64> {
    if !(y > 1.0) {
        return Err(Error::domain(format!(
            "f_inverse requires y > 1 (got {y}); the ratio never attains values <= 1"
        )));
    }
    let denom = (y * y - 1.0).sqrt() - (std::f64::consts::FRAC_PI_2 - (1.0 / y).asin());
    Ok(std::f64::consts::PI / denom)
}

/// Closed form of the kernel transform
/// `2y ∫_0^∞ K₀(2yt) e^{−2xt} dt = arccos(x/y)/sqrt(1−(x/y)²)` for |x/y| < 1.
pub fn g_closed(y: f64, x: f64) -> Result<f64> {
    if !(y > 0.0) || !((x / y).abs() < 1.0) {
        return Err(Error::domain(format!(
            "g_closed requires y > 0 and |x/y| < 1 (got x={x}, y={y})"
        )));
    }
    if x == 0.0 {
        return Ok(std::f64::consts::FRAC_PI_2);
    }
    let r = x / y;
    Ok(r.acos() / (1.0 - r * r).sqrt())
}

/// Same transform evaluated by quadrature; used as a cross-check of the
/// closed form.
pub fn g_by_quadrature(y: f64, x: f64, tol: f64) -> Result<f64> {
    let t_max = 30.0 / (2.0 * y) + 5.0 / (1.0 + 2.0 * x);
    let v = tanh_sinh(
        |t| {
            let k0 = specfun::mod_bessel_k(0, 2.0 * y * t).unwrap_or(0.0);
            k0 * (-2.0 * x * t).exp()
        },
        0.0,
        t_max,
        tol,
    )?;
    Ok(2.0 * y * v)
}

/// Dense table of `ι` on `[0, x_max]`.
#[derive(Debug, Clone)]
pub struct IotaTable {
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
}

/// Integrate `dι/dx = arccos(x/ι)/sqrt(1−(x/ι)²)`, `ι(0) = π`, with an
/// adaptive embedded pair, tabulating every `dx`.
pub fn iota_via_ode(x_max: f64, dx: f64, rtol: f64) -> Result<IotaTable> {
    if !(x_max > 0.0) || !(dx > 0.0) {
        return Err(Error::domain("iota_via_ode requires x_max > 0 and dx > 0"));
    }
    let rhs = |x: f64, y: f64| g_closed(y, x);
    let n = (x_max / dx).round() as usize;
    let mut xs = Vec::with_capacity(n + 1);
    let mut values = Vec::with_capacity(n + 1);
    let mut y = std::f64::consts::PI;
    xs.push(0.0);
    values.push(y);
    for i in 1..=n {
        let x0 = (i - 1) as f64 * dx;
        let x1 = i as f64 * dx;
        y = ode::integrate_to(&rhs, x0, y, x1, rtol, 1e-13, 1e-12)?;
        xs.push(x1);
        values.push(y);
    }
    Ok(IotaTable { xs, values })
}

/// `ι_k(x) = j_{xk,k}/k` from a certified Bessel zero.
pub fn iota_k(x: f64, k: u32) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("iota_k requires x > 0 (got {x})")));
    }
    let nu = x * k as f64;
    Ok(specfun::bessel_j_zero(nu, k)?.value / k as f64)
}

/// One scanned index of a sandwich verification.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SandwichMargin {
    pub k: u32,
    /// `j_{xk,k}/k − ι(x)` (negative).
    pub ratio_minus_iota: f64,
    /// Lower bound `−e^{(1/3+ε)x}·π/(4k)`.
    pub lower_bound: f64,
    /// Upper bound `−(1−ε)·π/(4k)`.
    pub upper_bound: f64,
    /// Both inequalities hold at this k.
    pub ok: bool,
}

/// Result of scanning the two-sided bound over an index window.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SandwichReport {
    pub x: f64,
    pub epsilon: f64,
    pub k_min: u32,
    pub k_max: u32,
    /// Smallest k₀ such that the bound holds for all k in `[k₀, k_max]`,
    /// if one exists in the scanned window.
    pub observed_k0: Option<u32>,
    pub margins: Vec<SandwichMargin>,
}

impl SandwichReport {
    /// Row-per-k CSV: `k,ratio_minus_iota,lower_bound,upper_bound,ok`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,ratio_minus_iota,lower_bound,upper_bound,ok\n");
        for m in &self.margins {
            out.push_str(&format!(
                "{},{:.16e},{:.16e},{:.16e},{}\n",
                m.k, m.ratio_minus_iota, m.lower_bound, m.upper_bound, m.ok
            ));
        }
        out
    }
}

/// Scan `k ∈ [k_min, k_max]` and report where
/// `−e^{(1/3+ε)x}π/(4k) ≤ j_{xk,k}/k − ι(x) ≤ −(1−ε)π/(4k)` holds.
pub fn verify_sandwich(x: f64, epsilon: f64, k_min: u32, k_max: u32) -> Result<SandwichReport> {
    if !(x > 0.0) {
        return Err(Error::domain("verify_sandwich requires x > 0"));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::domain("verify_sandwich requires epsilon in (0,1)"));
    }
    if k_min < 1 || k_max < k_min {
        return Err(Error::domain("verify_sandwich requires 1 <= k_min <= k_max"));
    }
    let iota_x = iota(x)?.iota;
    let ks: Vec<u32> = (k_min..=k_max).collect();
    let margins_res = par_map_slice(&ks, |&k| -> Result<SandwichMargin> {
        let u = iota_k(x, k)? - iota_x;
        let lower = -((1.0 / 3.0 + epsilon) * x).exp() * std::f64::consts::PI / (4.0 * k as f64);
        let upper = -(1.0 - epsilon) * std::f64::consts::PI / (4.0 * k as f64);
        Ok(SandwichMargin {
            k,
            ratio_minus_iota: u,
            lower_bound: lower,
            upper_bound: upper,
            ok: lower <= u && u <= upper,
        })
    });
    let mut margins = Vec::with_capacity(margins_res.len());
    for m in margins_res {
        margins.push(m?);
    }
    let mut observed_k0 = None;
    for m in margins.iter().rev() {
        if m.ok {
            observed_k0 = Some(m.k);
        } else {
            break;
        }
    }
    Ok(SandwichReport {
        x,
        epsilon,
        k_min,
        k_max,
        observed_k0,
        margins,
    })
}

/// Rational-ratio extension criterion for `σ = m/n`:
/// `sqrt(1/n² + π²/m²) − π(1/(2n) + e^{m/(3n)}/4)`; positive means the
/// spectral-gap argument extends to this σ.
pub fn admissible_sigma_condition(m: u32, n: u32) -> f64 {
    let (mf, nf) = (m as f64, n as f64);
    (1.0 / (nf * nf) + std::f64::consts::PI.powi(2) / (mf * mf)).sqrt()
        - std::f64::consts::PI * (0.5 / nf + (mf / (3.0 * nf)).exp() / 4.0)
}
