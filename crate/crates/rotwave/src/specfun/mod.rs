//! Special-function kernel: Bessel `J_ν` of real nonnegative order, its
//! positive zeros with rigorous enclosures, negative zeros of the Airy
//! function, and modified Bessel `K₀`/`K₁`.
//!
//! All routines are pure functions; evaluation picks one of four regimes:
//!
//! * ascending power series where it is cancellation-free (`x² ≤ 4(ν+1)`),
//! * Steed's continued fractions for moderate arguments,
//! * backward recurrence anchored on the oscillatory expansion near the
//!   turning point of a large order,
//! * the Debye/Hankel oscillatory expansion past the turning point.

mod airy;
mod besselk;
mod debye;
mod series;
mod steed;
mod zeros;

pub use airy::{airy_zero, AiryZero};
pub use besselk::mod_bessel_k;
pub use zeros::{
    bessel_j_zero, bessel_zero_derivative, bessel_zero_row, prop_bracket, zero_enclosure,
    BesselZero, MAX_INDEX, MAX_ORDER,
};



use crate::error::{Error, Result};

/// Largest argument accepted by `bessel_j`.
pub const MAX_ARG: f64 = 80_000.0;

/// `(J_ν(x), J_ν'(x))` for x > 0 in the validated range.
pub(crate) fn j_and_jp(nu: f64, x: f64) -> Result<(f64, f64)> {
    debug_assert!(x > 0.0 && nu >= 0.0);
    if x < 2.0 || x * x <= 4.0 * (nu + 1.0) {
        Ok(series::series_j_jp(nu, x))
    } else if debye::debye_valid(nu, x) {
        let e = debye::debye_eval(nu, x);
        Ok((e.j, e.jp))
    } else if x >= 20.0 && nu >= 2.0 {
        steed::miller_jjp(nu, x)
    } else {
        steed::steed_jjp(nu, x)
    }
}

/// The Bessel function of the first kind `J_ν(x)` for `ν ≥ 0`, `x ≥ 0`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !nu.is_finite() || !x.is_finite() || nu < 0.0 || x < 0.0 {
        return Err(Error::domain(format!(
            "bessel_j requires finite nu >= 0 and x >= 0 (got nu={nu}, x={x})"
        )));
    }
    if nu > MAX_ORDER || x > MAX_ARG {
        return Err(Error::range(format!(
            "bessel_j outside validated range (nu={nu} <= {MAX_ORDER}, x={x} <= {MAX_ARG})"
        )));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    j_and_jp(nu, x).map(|(j, _)| j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_points() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1.0, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j(0.5, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn vanishes_at_first_zero() {
        let v = bessel_j(0.0, 2.404825557695773).unwrap();
        assert!(v.abs() < 1e-12, "J0 at its zero: {v}");
    }

    #[test]
    fn range_errors() {
        assert!(bessel_j(-1.0, 1.0).is_err());
        assert!(bessel_j(5000.0, 1.0).is_err());
        assert!(bessel_j(1.0, 1e6).is_err());
        assert!(bessel_j(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn half_order_closed_form() {
        // J_{1/2}(x) = sqrt(2/(πx)) sin x
        for &x in &[0.7, 2.5, 9.0, 31.0, 200.0] {
            let v = bessel_j(0.5, x).unwrap();
            let exact = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin();
            assert!((v - exact).abs() < 2e-13 * (1.0 + exact.abs()), "x={x}: {v} vs {exact}");
        }
    }

    #[test]
    fn regime_seams_consistent() {
        // Evaluate across the series/Steed and Steed/Miller/Debye seams on
        // rays x = c·ν and check smoothness via three-point second
        // differences staying small relative to the oscillation scale.
        for &nu in &[7.0, 30.0, 111.0] {
            let xs: Vec<f64> = (0..400).map(|i| 2.0 + 0.25 * i as f64).collect();
            let vals: Vec<f64> = xs.iter().map(|&x| bessel_j(nu, x).unwrap()).collect();
            for w in vals.windows(3) {
                let dd = w[0] - 2.0 * w[1] + w[2];
                assert!(dd.abs() < 0.1, "kink detected at nu={nu}");
            }
        }
    }
}
