//! Modified Bessel functions `K₀` and `K₁`.
//!
//! Ascending series for `x ≤ 2`; for `x > 2` the Temme continued fraction
//! for `K_μ` at `μ = 0`, which is table-free and accurate to ~1e−14.

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.5772156649015328606;

/// `(K₀(x), K₁(x))` by the ascending series, for `0 < x ≤ 2`.
fn series_k0_k1(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let lg = (0.5 * x).ln();

    // I0 and the companion sum Σ H_m q^m/(m!)²
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut s0 = 0.0;
    let mut h = 0.0;
    for m in 1..200 {
        let mf = m as f64;
        term *= q / (mf * mf);
        h += 1.0 / mf;
        i0 += term;
        s0 += term * h;
        if term < 1e-18 {
            break;
        }
    }
    let k0 = -(lg + EULER_GAMMA) * i0 + s0;

    // K₁ = 1/x + ln(x/2)·I₁ − (x/4)·Σ (ψ(m+1)+ψ(m+2)) q^m/(m!(m+1)!)
    let mut term = 1.0; // q^m/(m!(m+1)!)
    let mut i1s = 1.0; // Σ q^m/(m!(m+1)!)
    let mut s1 = -2.0 * EULER_GAMMA + 1.0; // ψ(1)+ψ(2) = −2γ+1 at m=0
    let mut acc = term * s1;
    for m in 1..200 {
        let mf = m as f64;
        term *= q / (mf * (mf + 1.0));
        s1 += 1.0 / mf + 1.0 / (mf + 1.0);
        acc += term * s1;
        i1s += term;
        if term < 1e-18 {
            break;
        }
    }
    let i1 = 0.5 * x * i1s;
    let k1 = 1.0 / x + lg * i1 - 0.25 * x * acc;
    (k0, k1)
}

/// `(K₀(x), K₁(x))` by the Temme continued fraction, for `x ≥ 2`.
fn temme_k0_k1(x: f64) -> Result<(f64, f64)> {
    let a1 = 0.25; // ¼ − μ² at μ = 0
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = delh;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut a = -a1;
    let mut c = a1;
    let mut q = c;
    let mut s = 1.0 + q * delh;
    let mut converged = false;
    for i in 2..20_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-16 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::convergence(format!("Temme CF stalled at x={x}")));
    }
    h *= a1;
    let k0 = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    Ok((k0, k1))
}

/// `K₀(x)` or `K₁(x)` for `x > 0`; relative accuracy ~1e−13.
pub fn mod_bessel_k(order: u8, x: f64) -> Result<f64> {
    if !(order == 0 || order == 1) {
        return Err(Error::domain("mod_bessel_k: order must be 0 or 1"));
    }
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "mod_bessel_k: x must be positive (got {x})"
        )));
    }
    let (k0, k1) = if x <= 2.0 {
        series_k0_k1(x)
    } else if x > 740.0 {
        (0.0, 0.0) // below the f64 underflow threshold of e^{-x}/sqrt(x)
    } else {
        temme_k0_k1(x)?
    };
    Ok(if order == 0 { k0 } else { k1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::tanh_sinh;

    /// Independent oracle: K_n(x) = e^{−x} ∫_0^∞ e^{−x(cosh t − 1)} cosh(nt) dt,
    /// scaled so the quadrature works at O(1) magnitudes.
    fn k_by_integral(n: u8, x: f64) -> f64 {
        let t_max = (60.0_f64 / x).max(2.0).acosh() + 1.0;
        (-x).exp()
            * tanh_sinh(
                |t| (-x * (t.cosh() - 1.0)).exp() * if n == 0 { 1.0 } else { t.cosh() },
                0.0,
                t_max,
                1e-13,
            )
            .unwrap()
    }

    #[test]
    fn matches_integral_representation() {
        for &x in &[0.1, 0.5, 1.0, 1.9, 2.0, 2.1, 3.0, 7.5, 20.0, 55.0] {
            for n in [0u8, 1u8] {
                let v = mod_bessel_k(n, x).unwrap();
                let oracle = k_by_integral(n, x);
                assert!(
                    (v - oracle).abs() <= 1e-12 * oracle.abs(),
                    "K{n}({x}): {v} vs {oracle}"
                );
            }
        }
    }

    #[test]
    fn domain_error_at_zero() {
        assert!(mod_bessel_k(0, 0.0).is_err());
        assert!(mod_bessel_k(1, -1.0).is_err());
        assert!(mod_bessel_k(2, 1.0).is_err());
    }

    #[test]
    fn k0_below_half_order_envelope() {
        // K₀(t) ≤ sqrt(π/(2t)) e^{−t}
        for i in 1..200 {
            let t = 0.05 * i as f64;
            let k0 = mod_bessel_k(0, t).unwrap();
            let env = (std::f64::consts::PI / (2.0 * t)).sqrt() * (-t).exp();
            assert!(k0 <= env, "t={t}: {k0} > {env}");
        }
    }
}
