//! `J_ν` in the transition region: Steed's continued-fraction method for
//! moderate arguments, and a downward-recurrence (Miller) scheme anchored
//! on the oscillatory expansion for large orders near the turning point.

use super::debye::{debye_eval, debye_valid};
use crate::error::{Error, Result};

const FPMIN: f64 = 1e-300;
const EPS: f64 = 8e-16;

/// CF1: `f = J'_ν/J_ν` by modified Lentz; also returns the sign of `J_ν`.
fn cf1(nu: f64, x: f64) -> Result<(f64, f64)> {
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let max_it = (20_000.0 + 20.0 * (nu + x)) as usize;
    let mut isign = 1.0;
    let mut h = nu * xi;
    if h.abs() < FPMIN {
        h = FPMIN;
    }
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..max_it {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            return Ok((h, isign));
        }
    }
    Err(Error::convergence(format!(
        "CF1 stalled at nu={nu}, x={x}"
    )))
}

/// CF2: `p + iq = (J'_μ + iY'_μ)/(J_μ + iY_μ)` by complex modified Lentz.
///
/// `p + iq = −1/(2x) + i + (i/x)·K`, `K = a₁/(b₁ + a₂/(b₂ + …))` with
/// `a_n = (n−½)² − μ²` and `b_n = 2(x + n·i)`. Requires `x ≳ 2`.
fn cf2(mu: f64, x: f64) -> Result<(f64, f64)> {
    let mu2 = mu * mu;
    let max_it = (40_000.0 + 10.0 * mu) as usize;
    // complex helpers on (re, im) pairs
    let cdiv = |ar: f64, ai: f64, br: f64, bi: f64| {
        let den = br * br + bi * bi;
        ((ar * br + ai * bi) / den, (ai * br - ar * bi) / den)
    };
    // Lentz tiny seed; large enough that its square stays normal.
    let mut fr = 1e-30;
    let mut fi = 0.0;
    let mut cr = fr;
    let mut ci = fi;
    let mut dr = 0.0;
    let mut di = 0.0;
    let mut converged = false;
    for n in 1..=max_it {
        let nf = n as f64;
        let a = (nf - 0.5) * (nf - 0.5) - mu2;
        let br = 2.0 * x;
        let bi = 2.0 * nf;
        // D = 1/(b + a·D)
        let mut tr = br + a * dr;
        let ti = bi + a * di;
        if tr.abs() + ti.abs() < FPMIN {
            tr = FPMIN;
        }
        let (ndr, ndi) = cdiv(1.0, 0.0, tr, ti);
        dr = ndr;
        di = ndi;
        // C = b + a/C
        let (qr, qi) = cdiv(a, 0.0, cr, ci);
        cr = br + qr;
        ci = bi + qi;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        // delta = C·D
        let delr = cr * dr - ci * di;
        let deli = cr * di + ci * dr;
        let nfr = fr * delr - fi * deli;
        let nfi = fr * deli + fi * delr;
        fr = nfr;
        fi = nfi;
        if (delr - 1.0).abs() + deli.abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::convergence(format!(
            "CF2 stalled at mu={mu}, x={x}"
        )));
    }
    // p + iq = −1/(2x) + i + (i/x)(fr + i·fi)
    let p = -0.5 / x - fi / x;
    let q = 1.0 + fr / x;
    Ok((p, q))
}

/// `(J_ν, J_ν')` by Steed's method. Requires `x ≥ 2`.
pub(crate) fn steed_jjp(nu: f64, x: f64) -> Result<(f64, f64)> {
    debug_assert!(x >= 2.0 && nu >= 0.0);
    let (f, isign) = cf1(nu, x)?;
    // Downward recurrence to μ = ν − nl with μ near x when x < ν.
    let nl = ((nu - x + 1.5).floor().max(0.0)) as usize;
    let mu = nu - nl as f64;
    let mut rjl = isign * FPMIN * 1e50;
    let mut rjpl = f * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut scale_drop = 0i64; // powers of 1e-250 applied
    let mut l = nu;
    for _ in 0..nl {
        let rjtemp = (l / x) * rjl + rjpl;
        rjpl = ((l - 1.0) / x) * rjtemp - rjl;
        rjl = rjtemp;
        l -= 1.0;
        if rjl.abs() > 1e250 {
            rjl *= 1e-250;
            rjpl *= 1e-250;
            scale_drop += 1;
        }
    }
    if rjl == 0.0 {
        rjl = FPMIN;
    }
    let fmu = rjpl / rjl;
    let (p, q) = cf2(mu, x)?;
    let w = 2.0 / (std::f64::consts::PI * x);
    let gam = (p - fmu) / q;
    let mut jmu = (w / ((p - fmu) * gam + q)).sqrt();
    if rjl < 0.0 {
        jmu = -jmu;
    }
    // Undo the internal scaling: true J_ν = rjl1 · (jmu/rjl) · 1e-250^{scale_drop}
    let factor = jmu / rjl;
    let damp = if scale_drop == 0 {
        1.0
    } else {
        (1e-250f64).powi(scale_drop as i32)
    };
    Ok((rjl1 * factor * damp, rjp1 * factor * damp))
}

/// `(J_ν, J_ν')` near/below the turning point of a large order, by backward
/// recurrence from a decayed seed down to an order where the oscillatory
/// expansion is valid, then rescaling to match it there.
pub(crate) fn miller_jjp(nu: f64, x: f64) -> Result<(f64, f64)> {
    debug_assert!(nu >= 2.0 && x >= 20.0);
    // Anchor order: largest μ ≤ min(ν, x) − 1 with a valid expansion,
    // reached from ν by an integer number of steps.
    let mut lo = 0.0f64;
    let mut hi = nu.min(x - 1.0);
    if !debye_valid(lo, x) {
        return Err(Error::range(format!(
            "no oscillatory anchor below nu={nu} at x={x}"
        )));
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if debye_valid(mid, x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let n_down = (nu - lo).ceil().max(1.0) as usize;
    let mu = nu - n_down as f64; // anchor order; validity is monotone in μ
    if mu < 1.0 || !debye_valid(mu, x) {
        return Err(Error::range(format!(
            "anchor search failed at nu={nu}, x={x}"
        )));
    }
    // Seed high enough that the unwanted solution has decayed; the ladder
    // stays on orders ν + integer so it passes through ν and μ exactly.
    let m_up = ((x + 12.5 * x.powf(2.0 / 3.0) + 30.0 - nu).ceil()).max(30.0) as usize;
    let n_total = m_up + n_down;
    let mut p_hi = 0.0f64; // J at order l+1 (scaled)
    let mut p = FPMIN * 1e30; // J at order l (scaled)
    let mut scale_drop = 0i64;
    let mut p_nu = 0.0;
    let mut p_nu_m1 = 0.0;
    let mut drop_at_nu = 0i64;
    let mut drop_at_nu_m1 = 0i64;
    let mut l = nu + m_up as f64;
    for step in 1..=n_total {
        let p_lo = (2.0 * l / x) * p - p_hi;
        p_hi = p;
        p = p_lo;
        l -= 1.0;
        if step == m_up {
            p_nu = p;
            drop_at_nu = scale_drop;
        }
        if step == m_up + 1 {
            p_nu_m1 = p;
            drop_at_nu_m1 = scale_drop;
        }
        if p.abs() > 1e250 {
            p *= 1e-250;
            p_hi *= 1e-250;
            scale_drop += 1;
        }
    }
    // l == mu now. Anchor on whichever of J_μ, J_{μ−1} is farther from a
    // zero (they cannot both be small); μ−1 is one extra recurrence step
    // and is valid whenever μ is.
    let p_mu = p;
    let p_mu_m1 = (2.0 * mu / x) * p - p_hi;
    let anchor0 = debye_eval(mu, x);
    let anchor1 = debye_eval(mu - 1.0, x);
    let (j_anchor, p_anchor) = if anchor0.j.abs() >= anchor1.j.abs() {
        (anchor0.j, p_mu)
    } else {
        (anchor1.j, p_mu_m1)
    };
    if p_anchor == 0.0 {
        return Err(Error::convergence(format!(
            "degenerate recurrence anchor at nu={nu}, x={x}"
        )));
    }
    let rescale = |v: f64, drop_at: i64| -> f64 {
        let d = scale_drop - drop_at;
        if d == 0 {
            v
        } else {
            v * (1e-250f64).powi(d as i32)
        }
    };
    let j_nu = rescale(p_nu, drop_at_nu) / p_anchor * j_anchor;
    let j_nu_m1 = rescale(p_nu_m1, drop_at_nu_m1) / p_anchor * j_anchor;
    let jp = j_nu_m1 - (nu / x) * j_nu;
    Ok((j_nu, jp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::series::series_j_jp;

    #[test]
    fn steed_matches_series_at_seam() {
        // Points where both the series (x² ≤ 4(ν+1)) and Steed (x ≥ 2) apply.
        for &(nu, x) in &[
            (0.0, 2.0),
            (0.5, 2.2),
            (1.0, 2.5),
            (3.0, 3.9),
            (8.0, 5.5),
            (24.0, 9.8),
            (99.0, 19.9),
            (350.0, 37.0),
        ] {
            let (js, jps) = series_j_jp(nu, x);
            let (jc, jpc) = steed_jjp(nu, x).unwrap();
            assert!(
                (js - jc).abs() < 1e-13 * (1.0 + js.abs()),
                "J mismatch at nu={nu} x={x}: series {js} vs steed {jc}"
            );
            assert!(
                (jps - jpc).abs() < 1e-13 * (1.0 + jps.abs()),
                "J' mismatch at nu={nu} x={x}: {jps} vs {jpc}"
            );
        }
    }

    #[test]
    fn steed_matches_debye_at_seam() {
        for &(nu, x) in &[
            (0.0, 20.0),
            (0.0, 45.0),
            (1.0, 25.0),
            (2.5, 33.0),
            (10.0, 40.0),
            (20.0, 80.0),
        ] {
            assert!(debye_valid(nu, x), "expected valid at nu={nu} x={x}");
            let d = debye_eval(nu, x);
            let (jc, jpc) = steed_jjp(nu, x).unwrap();
            let amp = (2.0 / (std::f64::consts::PI * x)).sqrt();
            assert!(
                (d.j - jc).abs() < 2e-13 * amp.max(jc.abs()),
                "J mismatch at nu={nu} x={x}: debye {} vs steed {jc}",
                d.j
            );
            assert!(
                (d.jp - jpc).abs() < 5e-13 * amp.max(jpc.abs()),
                "J' mismatch at nu={nu} x={x}: {} vs {jpc}",
                d.jp
            );
        }
    }

    #[test]
    fn miller_matches_steed_near_turning_point() {
        for &(nu, x) in &[(40.0, 45.0), (60.0, 62.0), (120.0, 125.0), (300.0, 306.0)] {
            let (jm, jpm) = miller_jjp(nu, x).unwrap();
            let (jc, jpc) = steed_jjp(nu, x).unwrap();
            let scale = jc.abs().max(1e-3);
            assert!(
                (jm - jc).abs() < 1e-12 * scale,
                "J mismatch at nu={nu} x={x}: miller {jm} vs steed {jc}"
            );
            assert!(
                (jpm - jpc).abs() < 1e-11 * scale,
                "J' mismatch at nu={nu} x={x}: {jpm} vs {jpc}"
            );
        }
    }
}
