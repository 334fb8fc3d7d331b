//! Positive zeros of `J_ν` with rigorous enclosures, row enumeration, and
//! the order-derivative of a zero.

use super::airy::airy_zero;
use super::besselk::mod_bessel_k;
use super::debye::{debye_eval, debye_valid};
use super::j_and_jp;
use crate::error::{Error, Result};
use crate::quadrature::tanh_sinh;

/// Validated order range.
pub const MAX_ORDER: f64 = 4200.0;
/// Validated zero-index range.
pub const MAX_INDEX: u32 = 20_000;

const CBRT_HALF: f64 = 0.793_700_525_984_099_7; // 2^{-1/3}
const CBRT_TWO: f64 = 1.259_921_049_894_873_2; // 2^{1/3}

/// A certified Bessel-function zero `j_{ν,k}` with its enclosure.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct BesselZero {
    /// Order ν ≥ 0.
    pub order: f64,
    /// 1-based zero index.
    pub index: u32,
    /// The zero itself.
    pub value: f64,
    /// Lower enclosure endpoint.
    pub lower: f64,
    /// Upper enclosure endpoint.
    pub upper: f64,
}

fn check_range(nu: f64, k: u32) -> Result<()> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(Error::domain(format!("order must be finite and >= 0 (got {nu})")));
    }
    if nu > MAX_ORDER {
        return Err(Error::range(format!("order {nu} exceeds validated range {MAX_ORDER}")));
    }
    if k < 1 || k > MAX_INDEX {
        return Err(Error::range(format!("zero index {k} outside 1..={MAX_INDEX}")));
    }
    Ok(())
}

/// Airy-based enclosure of `j_{ν,k}` for ν > 0, and the exact interlacing
/// bracket `πk − π/4 < j_{0,k} ≤ πk − π/4 + 1/(8π(k−¼))` for ν = 0.
pub fn prop_bracket(nu: f64, k: u32) -> Result<(f64, f64)> {
    check_range(nu, k)?;
    if nu == 0.0 {
        let lo = std::f64::consts::PI * (k as f64 - 0.25);
        let hi = lo + 1.0 / (8.0 * std::f64::consts::PI * (k as f64 - 0.25));
        Ok((lo, hi))
    } else {
        let a = airy_zero(k)?.magnitude;
        let lo = nu + a * CBRT_HALF * nu.cbrt();
        let hi = lo + 0.15 * a * a * CBRT_TWO / nu.cbrt();
        Ok((lo, hi))
    }
}

/// Fully closed-form enclosure with the Airy zero replaced by its own
/// two-sided estimate; requires ν > 0 (ν = 0 falls back to the exact
/// interlacing bracket).
pub fn zero_enclosure(nu: f64, k: u32) -> Result<(f64, f64)> {
    check_range(nu, k)?;
    if nu == 0.0 {
        return prop_bracket(0.0, k);
    }
    let c = 3.0 * std::f64::consts::PI / 8.0;
    let kf = k as f64;
    let a_lo = (c * (4.0 * kf - 2.0)).powf(2.0 / 3.0);
    let a_hi = (4.0 * c * kf).powf(2.0 / 3.0);
    let lo = nu + a_lo * CBRT_HALF * nu.cbrt();
    let hi = nu + a_hi * CBRT_HALF * nu.cbrt() + 0.15 * a_hi * a_hi * CBRT_TWO / nu.cbrt();
    Ok((lo, hi))
}

/// McMahon large-index expansion of `j_{ν,k}`.
fn mcmahon(nu: f64, k: u32) -> f64 {
    let beta = (k as f64 + 0.5 * nu - 0.25) * std::f64::consts::PI;
    let mu = 4.0 * nu * nu;
    let b8 = 8.0 * beta;
    let t1 = (mu - 1.0) / b8;
    let t2 = 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3));
    let t3 = 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8.powi(5));
    let t4 = 64.0 * (mu - 1.0)
        * (6949.0 * mu.powi(3) - 153855.0 * mu * mu + 1585743.0 * mu - 6277237.0)
        / (105.0 * b8.powi(7));
    beta - t1 - t2 - t3 - t4
}

/// Cheap location estimate used to pick the evaluation regime.
fn estimate(nu: f64, k: u32) -> f64 {
    if nu == 0.0 {
        return std::f64::consts::PI * (k as f64 - 0.25);
    }
    if (k as f64) >= nu {
        mcmahon(nu, k)
    } else {
        // The upper endpoint of the Airy bracket matches the third term of
        // the uniform expansion, so the zero sits just below it.
        match prop_bracket(nu, k) {
            Ok((lo, hi)) => hi - 0.02 * (hi - lo),
            Err(_) => mcmahon(nu, k),
        }
    }
}

/// Smallest x at which the oscillatory expansion is accepted for order ν.
fn debye_boundary(nu: f64) -> f64 {
    let s2 = 324.0_f64.max((91.0 * nu * nu).powf(2.0 / 3.0));
    (nu * nu + s2).sqrt() * (1.0 + 1e-12)
}

/// Solve `Θ(x) = (k−½)π` by safeguarded Newton on the monotone phase.
/// Returns `None` when the k-th zero lies below the valid region.
fn phase_zero(nu: f64, k: u32, seed: f64) -> Result<Option<f64>> {
    let target = (k as f64 - 0.5) * std::f64::consts::PI;
    let x_min = debye_boundary(nu);
    let e_min = debye_eval(nu, x_min);
    if e_min.theta >= target {
        return Ok(None);
    }
    let mut lo = x_min;
    let mut hi = seed.max(x_min * (1.0 + 1e-9));
    let mut e = debye_eval(nu, hi);
    let mut guard = 0;
    while e.theta < target {
        let step = ((target - e.theta) / e.dtheta).max(1.0) * 1.25;
        hi += step;
        e = debye_eval(nu, hi);
        guard += 1;
        if guard > 200 {
            return Err(Error::convergence(format!(
                "phase bracketing stalled at nu={nu}, k={k} (x={hi:.6e})"
            )));
        }
    }
    let mut x = hi.min(seed.max(lo));
    for _ in 0..60 {
        let e = debye_eval(nu, x);
        let f = e.theta - target;
        if f > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let step = f / e.dtheta;
        let mut next = x - step;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-14 * x {
            return Ok(Some(next));
        }
        x = next;
    }
    Ok(Some(x))
}

/// Newton on `J_ν` confined to a sign-changing bracket.
/// `sign_lo` is the sign of `J_ν` just below the zero.
fn newton_j(nu: f64, mut lo: f64, mut hi: f64, seed: f64, sign_lo: f64) -> Result<f64> {
    let mut x = seed.clamp(lo, hi);
    for it in 0..120 {
        let (j, jp) = j_and_jp(nu, x)?;
        if j * sign_lo > 0.0 {
            lo = x;
        } else if j != 0.0 {
            hi = x;
        } else {
            return Ok(x);
        }
        let step = j / jp;
        let mut next = x - step;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-15 * x && it > 1 {
            return Ok(next);
        }
        x = next;
    }
    if (hi - lo).abs() <= 1e-12 * hi {
        Ok(0.5 * (lo + hi))
    } else {
        Err(Error::convergence(format!(
            "zero refinement stalled for nu={nu} in bracket [{lo}, {hi}]"
        )))
    }
}

/// Zeros in the turning-point band of a positive order, found by marching
/// (sign steps shorter than the minimal zero spacing) from below the first
/// zero. Appends to `out` until it holds `k_goal` zeros or the march
/// enters the oscillatory-expansion region; returns the final march point.
fn tp_band_march(nu: f64, k_goal: u32, out: &mut Vec<f64>) -> Result<f64> {
    let (first_lo, _) = prop_bracket(nu, 1)?;
    let mut x = first_lo;
    let step = (0.34 * nu.cbrt()).clamp(0.9, 2.9);
    let mut sign = 1.0; // J_ν > 0 on (0, j_{ν,1})
    let mut guard = 0usize;
    while (out.len() as u32) < k_goal {
        if debye_valid(nu, x) {
            break;
        }
        let x_next = x + step;
        let (j, _) = j_and_jp(nu, x_next)?;
        if j == 0.0 {
            out.push(x_next);
            sign = -sign;
        } else if j * sign < 0.0 {
            let z = newton_j(nu, x, x_next, 0.5 * (x + x_next), sign)?;
            out.push(z);
            sign = -sign;
        }
        x = x_next;
        guard += 1;
        if guard > 100_000 {
            return Err(Error::convergence(format!(
                "turning-point march stalled at nu={nu}, x={x}"
            )));
        }
    }
    Ok(x)
}

/// The k-th positive zero of `J_ν` (value only).
pub(crate) fn zero_value(nu: f64, k: u32) -> Result<f64> {
    check_range(nu, k)?;
    if nu == 0.0 {
        let (lo, hi) = prop_bracket(0.0, k)?;
        let sign_lo = if k % 2 == 1 { 1.0 } else { -1.0 };
        return newton_j(0.0, lo, hi, 0.5 * (lo + hi), sign_lo);
    }
    let guess = estimate(nu, k);
    if debye_valid(nu, guess) {
        if let Some(z) = phase_zero(nu, k, guess)? {
            return Ok(z);
        }
    }
    // Turning-point band: march from the first zero (band is short).
    let mut band = Vec::new();
    let x_end = tp_band_march(nu, k, &mut band)?;
    if let Some(&z) = band.get((k - 1) as usize) {
        return Ok(z);
    }
    // March entered the oscillatory region before reaching k.
    let warm = x_end + std::f64::consts::PI;
    match phase_zero(nu, k, warm)? {
        Some(z) if z > *band.last().unwrap_or(&0.0) => Ok(z),
        _ => Err(Error::convergence(format!(
            "index continuity lost at nu={nu}, k={k}"
        ))),
    }
}

/// The k-th positive zero of `J_ν` with its enclosure.
pub fn bessel_j_zero(nu: f64, k: u32) -> Result<BesselZero> {
    let value = zero_value(nu, k)?;
    let (lower, upper) = prop_bracket(nu, k)?;
    Ok(BesselZero {
        order: nu,
        index: k,
        value,
        lower,
        upper,
    })
}

/// All zeros `j_{ν,1} .. j_{ν,k_max}` of one order, computed sequentially
/// with warm starts. This is the workhorse of spectrum enumeration.
pub fn bessel_zero_row(nu: f64, k_max: u32) -> Result<Vec<f64>> {
    if k_max == 0 {
        return Ok(Vec::new());
    }
    check_range(nu, k_max)?;
    let mut zeros: Vec<f64> = Vec::with_capacity(k_max as usize);
    if nu == 0.0 {
        for k in 1..=k_max {
            zeros.push(zero_value(0.0, k)?);
        }
        return Ok(zeros);
    }
    let x_end = tp_band_march(nu, k_max, &mut zeros)?;
    let mut prev = zeros.last().copied().unwrap_or(x_end);
    let mut spacing = std::f64::consts::PI;
    for k in (zeros.len() as u32 + 1)..=k_max {
        let seed = prev + spacing;
        let z = match phase_zero(nu, k, seed)? {
            Some(z) => z,
            None => {
                return Err(Error::convergence(format!(
                    "phase region retreated at nu={nu}, k={k}"
                )))
            }
        };
        if z <= prev + 2.5 && !zeros.is_empty() {
            return Err(Error::convergence(format!(
                "zero spacing collapsed at nu={nu}, k={k}: {prev} -> {z}"
            )));
        }
        if !zeros.is_empty() {
            spacing = z - prev;
        }
        prev = z;
        zeros.push(z);
    }
    Ok(zeros)
}

/// `dj_{ν,k}/dν` by the order-derivative integral
/// `2 j ∫_0^∞ K₀(2 j sinh t) e^{−2νt} dt`.
pub fn bessel_zero_derivative(nu: f64, k: u32) -> Result<f64> {
    check_range(nu, k)?;
    let j = zero_value(nu, k)?;
    let t_max = (26.0 / j).asinh();
    let integral = tanh_sinh(
        |t| {
            let arg = 2.0 * j * t.sinh();
            let k0 = mod_bessel_k(0, arg).unwrap_or(0.0);
            k0 * (-2.0 * nu * t).exp()
        },
        0.0,
        t_max,
        1e-12,
    )?;
    Ok(2.0 * j * integral)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_zeros() {
        let cases = [
            (0.0, 1, 2.404825557695773),
            (0.0, 2, 5.520078110286311),
            (0.0, 3, 8.653727912911012),
            (1.0, 1, 3.831705970207512),
            (1.0, 2, 7.015586669815619),
            (2.0, 1, 5.135622301840683),
        ];
        for (nu, k, expected) in cases {
            let z = bessel_j_zero(nu, k).unwrap();
            assert!(
                (z.value - expected).abs() < 1e-12,
                "j_{{{nu},{k}}} = {} vs {expected}",
                z.value
            );
        }
    }

    #[test]
    fn enclosures_contain_zero() {
        for &nu in &[0.0, 0.5, 1.0, 5.0, 20.0, 150.0] {
            for k in [1u32, 2, 5, 20, 80] {
                let z = bessel_j_zero(nu, k).unwrap();
                assert!(z.lower < z.value && z.value < z.upper, "prop bracket fails at ({nu},{k})");
                let (lo, hi) = zero_enclosure(nu, k).unwrap();
                assert!(lo < z.value && z.value < hi, "closed-form bracket fails at ({nu},{k})");
            }
        }
    }

    #[test]
    fn row_matches_point_queries() {
        for &nu in &[0.5, 3.0, 17.0, 64.0] {
            let row = bessel_zero_row(nu, 40).unwrap();
            for &k in &[1u32, 7, 23, 40] {
                let z = zero_value(nu, k).unwrap();
                assert!(
                    (row[(k - 1) as usize] - z).abs() < 1e-11 * z,
                    "row/point mismatch at ({nu},{k}): {} vs {z}",
                    row[(k - 1) as usize]
                );
            }
        }
    }

    #[test]
    fn rows_interlace_in_order() {
        // j_{ν,k} < j_{ν+1,k} < j_{ν,k+1}
        for &nu in &[0.0, 1.0, 4.0, 33.0] {
            let a = bessel_zero_row(nu, 30).unwrap();
            let b = bessel_zero_row(nu + 1.0, 30).unwrap();
            for k in 0..29 {
                assert!(a[k] < b[k] && b[k] < a[k + 1], "interlacing fails at nu={nu}, k={}", k + 1);
            }
        }
    }

    #[test]
    fn derivative_in_interval() {
        for &(nu, k) in &[(1.0, 1), (0.5, 3), (10.0, 2), (50.0, 10)] {
            let d = bessel_zero_derivative(nu, k).unwrap();
            assert!(d > 1.0 && d < std::f64::consts::FRAC_PI_2, "d={d} at ({nu},{k})");
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        for &(nu, k) in &[(1.0, 1u32), (3.0, 5), (12.0, 2)] {
            let h = 1e-4;
            let d = bessel_zero_derivative(nu, k).unwrap();
            let fd = (zero_value(nu + h, k).unwrap() - zero_value(nu - h, k).unwrap()) / (2.0 * h);
            assert!((d - fd).abs() < 1e-5, "({nu},{k}): watson {d} vs fd {fd}");
        }
    }
}
