//! Adaptive embedded Runge–Kutta integration (Dormand–Prince 5(4)).

use crate::error::{Error, Result};

/// Integrate the scalar IVP `y' = f(x, y)`, `y(x0) = y0` up to `x_end`,
/// returning `y(x_end)`.
///
/// Step size is controlled by the embedded 4th-order error estimate with a
/// standard PI controller. `rtol`/`atol` are the relative and absolute
/// tolerances; `min_step` aborts with an error when the controller would
/// shrink below it.
pub fn integrate_to<F: Fn(f64, f64) -> Result<f64>>(
    f: &F,
    x0: f64,
    y0: f64,
    x_end: f64,
    rtol: f64,
    atol: f64,
    min_step: f64,
) -> Result<f64> {
    // Dormand–Prince coefficients.
    const A21: f64 = 1.0 / 5.0;
    const A31: f64 = 3.0 / 40.0;
    const A32: f64 = 9.0 / 40.0;
    const A41: f64 = 44.0 / 45.0;
    const A42: f64 = -56.0 / 15.0;
    const A43: f64 = 32.0 / 9.0;
    const A51: f64 = 19372.0 / 6561.0;
    const A52: f64 = -25360.0 / 2187.0;
    const A53: f64 = 64448.0 / 6561.0;
    const A54: f64 = -212.0 / 729.0;
    const A61: f64 = 9017.0 / 3168.0;
    const A62: f64 = -355.0 / 33.0;
    const A63: f64 = 46732.0 / 5247.0;
    const A64: f64 = 49.0 / 176.0;
    const A65: f64 = -5103.0 / 18656.0;
    const B1: f64 = 35.0 / 384.0;
    const B3: f64 = 500.0 / 1113.0;
    const B4: f64 = 125.0 / 192.0;
    const B5: f64 = -2187.0 / 6784.0;
    const B6: f64 = 11.0 / 84.0;
    // 4th-order weights (with the FSAL 7th stage).
    const E1: f64 = 71.0 / 57600.0;
    const E3: f64 = -71.0 / 16695.0;
    const E4: f64 = 71.0 / 1920.0;
    const E5: f64 = -17253.0 / 339200.0;
    const E6: f64 = 22.0 / 525.0;
    const E7: f64 = -1.0 / 40.0;
    const C2: f64 = 1.0 / 5.0;
    const C3: f64 = 3.0 / 10.0;
    const C4: f64 = 4.0 / 5.0;
    const C5: f64 = 8.0 / 9.0;

    if x_end == x0 {
        return Ok(y0);
    }
    let mut x = x0;
    let mut y = y0;
    let mut k1 = f(x, y)?;
    let mut h = ((x_end - x0) / 64.0).abs().min(0.1).max(1e-6);
    let dir = (x_end - x0).signum();
    h *= dir;
    let mut err_prev: f64 = 1.0;
    let mut steps = 0usize;
    while (x_end - x) * dir > 0.0 {
        if (x + h - x_end) * dir > 0.0 {
            h = x_end - x;
        }
        steps += 1;
        if steps > 1_000_000 {
            return Err(Error::convergence("ODE step budget exhausted".to_string()));
        }
        let k2 = f(x + C2 * h, y + h * A21 * k1)?;
        let k3 = f(x + C3 * h, y + h * (A31 * k1 + A32 * k2))?;
        let k4 = f(x + C4 * h, y + h * (A41 * k1 + A42 * k2 + A43 * k3))?;
        let k5 = f(x + C5 * h, y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4))?;
        let k6 = f(
            x + h,
            y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5),
        )?;
        let y_new = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
        let k7 = f(x + h, y_new)?;
        let err_est =
            h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
        let scale = atol + rtol * y.abs().max(y_new.abs());
        let err = (err_est / scale).abs().max(1e-30);
        if err <= 1.0 {
            x += h;
            y = y_new;
            k1 = k7; // FSAL
            // PI controller.
            let fac = 0.9 * err.powf(-0.7 / 5.0) * err_prev.powf(0.4 / 5.0);
            h *= fac.clamp(0.2, 5.0);
            err_prev = err;
        } else {
            h *= (0.9 * err.powf(-0.2)).clamp(0.1, 1.0);
        }
        if h.abs() < min_step {
            return Err(Error::convergence(format!(
                "ODE step underflow at x={x:.6e} (h={:.3e})",
                h.abs()
            )));
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_growth() {
        let f = |_x: f64, y: f64| Ok(y);
        let y = integrate_to(&f, 0.0, 1.0, 1.0, 1e-12, 1e-14, 1e-13).unwrap();
        assert!((y - std::f64::consts::E).abs() < 1e-10);
    }

    #[test]
    fn nonautonomous() {
        // y' = 2x, y(0)=0 -> y(3)=9
        let f = |x: f64, _y: f64| Ok(2.0 * x);
        let y = integrate_to(&f, 0.0, 0.0, 3.0, 1e-12, 1e-14, 1e-13).unwrap();
        assert!((y - 9.0).abs() < 1e-10);
    }
}
