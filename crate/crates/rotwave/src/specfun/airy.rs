//! Negative zeros of the Airy function `Ai`.
//!
//! `Ai(−z) = (√z/3)(J_{1/3}(ζ) + J_{−1/3}(ζ))` with `ζ = (2/3)z^{3/2}`, so
//! the magnitudes `|a_k|` are recovered from the zeros of the Bessel
//! cross-sum `h(ζ) = J_{1/3}(ζ) + J_{−1/3}(ζ)`. Small k are refined by
//! Newton on `h`; for large k the asymptotic expansion of the zeros is
//! already below 1e−13 and is used directly.

use super::steed::steed_jjp;
use crate::error::{Error, Result};
use std::sync::OnceLock;

/// A negative Airy-function zero, stored by magnitude.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct AiryZero {
    /// 1-based index.
    pub index: u32,
    /// `|a_k|`, the magnitude of the k-th negative zero.
    pub magnitude: f64,
}

impl AiryZero {
    /// Bracket `((3π/8)(4k−1.4))^{2/3} < |a_k| < ((3π/8)(4k−0.965))^{2/3}`.
    pub fn bracket(k: u32) -> (f64, f64) {
        let c = 3.0 * std::f64::consts::PI / 8.0;
        let kf = k as f64;
        (
            (c * (4.0 * kf - 1.4)).powf(2.0 / 3.0),
            (c * (4.0 * kf - 0.965)).powf(2.0 / 3.0),
        )
    }
}

/// Asymptotic magnitude of the k-th zero: `T(t)` at `t = 3π(4k−1)/8`.
fn airy_asymptotic(k: u32) -> f64 {
    let t = 3.0 * std::f64::consts::PI * (4.0 * k as f64 - 1.0) / 8.0;
    let t2 = 1.0 / (t * t);
    t.powf(2.0 / 3.0)
        * (1.0
            + t2 * (5.0 / 48.0
                + t2 * (-5.0 / 36.0
                    + t2 * (77125.0 / 82944.0 + t2 * (-108056875.0 / 6967296.0)))))
}

/// `h(ζ) = J_{1/3} + J_{−1/3}` and `h'(ζ)` from two Steed evaluations.
fn cross_sum(z: f64) -> Result<(f64, f64)> {
    let (j13, jp13) = steed_jjp(1.0 / 3.0, z)?;
    let (j23, jp23) = steed_jjp(2.0 / 3.0, z)?;
    // J_{−1/3} = J'_{2/3} + (2/(3ζ)) J_{2/3};  J'_{−1/3} = −(1/(3ζ)) J_{−1/3} − J_{2/3}
    let jm13 = jp23 + 2.0 / (3.0 * z) * j23;
    let jpm13 = -jm13 / (3.0 * z) - j23;
    Ok((j13 + jm13, jp13 + jpm13))
}

fn refined_zero(k: u32) -> Result<f64> {
    let z0 = airy_asymptotic(k);
    let mut zeta = 2.0 / 3.0 * z0.powf(1.5);
    for _ in 0..40 {
        let (h, hp) = cross_sum(zeta)?;
        let step = h / hp;
        zeta -= step;
        if step.abs() < 1e-15 * zeta {
            break;
        }
    }
    Ok((1.5 * zeta).powf(2.0 / 3.0))
}

/// The k-th negative zero of `Ai`, `|a_k|` accurate to ~1e−13.
pub fn airy_zero(k: u32) -> Result<AiryZero> {
    if k < 1 {
        return Err(Error::domain("airy_zero: k must be >= 1"));
    }
    const N_REFINED: u32 = 32;
    static SMALL: OnceLock<Vec<f64>> = OnceLock::new();
    let magnitude = if k <= N_REFINED {
        let table = SMALL.get_or_init(|| {
            (1..=N_REFINED)
                .map(|i| refined_zero(i).expect("airy refinement converges"))
                .collect()
        });
        table[(k - 1) as usize]
    } else {
        airy_asymptotic(k)
    };
    Ok(AiryZero { index: k, magnitude })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zeros() {
        // |a_1| = 2.33810741045976704, |a_2| = 4.08794944413097062
        assert!((airy_zero(1).unwrap().magnitude - 2.33810741045976704).abs() < 1e-12);
        assert!((airy_zero(2).unwrap().magnitude - 4.08794944413097062).abs() < 1e-12);
    }

    #[test]
    fn breen_bracket_holds() {
        for k in 1..=200 {
            let z = airy_zero(k).unwrap().magnitude;
            let (lo, hi) = AiryZero::bracket(k);
            assert!(lo < z && z < hi, "k={k}: {lo} < {z} < {hi} violated");
        }
    }

    #[test]
    fn asymptotic_agrees_with_refined_at_handover() {
        for k in 20..=32 {
            let a = airy_asymptotic(k);
            let r = refined_zero(k).unwrap();
            assert!((a - r).abs() < 1e-12, "k={k}: {a} vs {r}");
        }
    }

    #[test]
    fn ordered() {
        let mut prev = 0.0;
        for k in 1..=60 {
            let z = airy_zero(k).unwrap().magnitude;
            assert!(z > prev);
            prev = z;
        }
    }
}
