//! Power-series evaluation of `J_ν` and the log-gamma function.

/// `ln Γ(z)` for `z > 0` via Stirling's expansion with Bernoulli
/// corrections, shifting `z` above 12 by the recurrence first.
pub(crate) fn ln_gamma(z: f64) -> f64 {
    debug_assert!(z > 0.0);
    // Bernoulli numbers B_2..B_16 over 2j(2j-1).
    const COEF: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360360.0,
        7.0 / 1092.0,
        -3617.0 / 122400.0,
    ];
    let mut shift = 0.0;
    let mut zz = z;
    while zz < 12.0 {
        shift += zz.ln();
        zz += 1.0;
    }
    let inv = 1.0 / zz;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for c in COEF {
        corr += c * p;
        p *= inv2;
    }
    (zz - 0.5) * zz.ln() - zz + 0.5 * (2.0 * std::f64::consts::PI).ln() + corr - shift
}

/// `(J_ν(x), J_ν'(x))` by the ascending power series.
///
/// Safe (no cancellation) whenever `x² ≤ 4(ν+1)` or `x < 2`: the term
/// magnitudes are then non-increasing from the start.
pub(crate) fn series_j_jp(nu: f64, x: f64) -> (f64, f64) {
    debug_assert!(x > 0.0);
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut dsum = nu; // Σ term_m (ν+2m), later divided by x and scaled
    for m in 0..400 {
        let mf = m as f64;
        term *= q / ((mf + 1.0) * (nu + mf + 1.0));
        sum += term;
        dsum += term * (nu + 2.0 * (mf + 1.0));
        if term.abs() <= 1e-18 * sum.abs().max(1e-240) {
            break;
        }
    }
    // prefactor (x/2)^ν / Γ(ν+1); exact factorial for small integer orders
    let pref = if nu == nu.floor() && nu <= 20.0 {
        let mut fact = 1.0;
        for i in 2..=(nu as i32) {
            fact *= i as f64;
        }
        (0.5 * x).powi(nu as i32) / fact
    } else {
        let logp = nu * (0.5 * x).ln() - ln_gamma(nu + 1.0);
        if logp < -700.0 {
            0.0
        } else {
            logp.exp()
        }
    };
    (pref * sum, pref * dsum / x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_gamma_known_values() {
        assert!((ln_gamma(1.0)).abs() < 1e-14);
        assert!((ln_gamma(2.0)).abs() < 1e-14);
        // Γ(0.5) = sqrt(pi)
        let v = ln_gamma(0.5) - 0.5 * std::f64::consts::PI.ln();
        assert!(v.abs() < 1e-14, "{v}");
        // Γ(11) = 10!
        let v = ln_gamma(11.0) - (3628800.0f64).ln();
        assert!(v.abs() < 1e-13, "{v}");
    }

    #[test]
    fn series_small_argument() {
        // J_0(0.5) = 0.93846980724081290423, J_1(0.5) = 0.24226845767487388638
        let (j0, j0p) = series_j_jp(0.0, 0.5);
        assert!((j0 - 0.93846980724081290423).abs() < 2e-15);
        let (j1, _) = series_j_jp(1.0, 0.5);
        assert!((j1 - 0.24226845767487388638).abs() < 2e-15);
        // J_0' = -J_1
        assert!((j0p + j1).abs() < 2e-15);
    }
}
