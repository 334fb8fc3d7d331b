//! Test-only helpers: double-double arithmetic and an independent
//! bisection oracle for Bessel-function zeros built on the prefactor-free
//! ascending series. Nothing here shares code with the library's
//! evaluation paths.

#![allow(dead_code)]

/// Unevaluated sum of two doubles (~31 significant digits).
#[derive(Debug, Clone, Copy)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub fn from(a: f64) -> Dd {
        Dd { hi: a, lo: 0.0 }
    }

    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s1, e1) = two_sum(self.hi, other.hi);
        let (s2, e2) = two_sum(self.lo, other.lo);
        let (s1, e1) = quick_two_sum(s1, e1 + s2);
        let (hi, lo) = quick_two_sum(s1, e1 + e2);
        Dd { hi, lo }
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from(q1)));
        let q2 = (r.hi + r.lo) / other.hi;
        let r2 = r.sub(other.mul(Dd::from(q2)));
        let q3 = (r2.hi + r2.lo) / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, c: f64) -> Dd {
        self.mul(Dd::from(c))
    }
}

/// Sign-carrying series `S(ν, x) = Σ (−x²/4)^m / (m! (ν+1)⋯(ν+m))`,
/// proportional to `J_ν(x)` with a positive prefactor, in double-double.
pub fn bessel_series_sign(nu: f64, x: f64) -> Dd {
    let q = Dd::from(x).mul(Dd::from(x)).mul_f64(-0.25);
    let mut term = Dd::from(1.0);
    let mut sum = Dd::from(1.0);
    for m in 0..500 {
        let mf = m as f64;
        term = term.mul(q).div(Dd::from((mf + 1.0) * (nu + mf + 1.0)));
        sum = sum.add(term);
        if term.hi.abs() < 1e-40 * (1.0 + sum.hi.abs()) {
            break;
        }
    }
    sum
}

/// The k-th positive zero of `J_ν` by sign-marching plus bisection on the
/// double-double series.
pub fn oracle_zero(nu: f64, k: u32) -> f64 {
    let f = |x: f64| bessel_series_sign(nu, x).value();
    let mut x = 0.25;
    let mut sign = 1.0; // series is +1 at x = 0
    let mut flips = 0;
    let step = 0.5;
    let mut lo = 0.0;
    let mut hi = 0.0;
    loop {
        let x_next = x + step;
        let v = f(x_next);
        if v * sign < 0.0 {
            flips += 1;
            if flips == k {
                lo = x;
                hi = x_next;
                break;
            }
            sign = -sign;
        }
        x = x_next;
        assert!(x < 500.0, "oracle marched too far at nu={nu}, k={k}");
    }
    let sign_lo = f(lo).signum();
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if f(mid).signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod sanity {
    use super::*;

    #[test]
    fn dd_arithmetic() {
        // (1e20 + 1) − 1e20 = 1 exactly in dd
        let v = Dd::from(1e20).add(Dd::from(1.0)).sub(Dd::from(1e20));
        assert_eq!(v.value(), 1.0);
        let third = Dd::from(1.0).div(Dd::from(3.0));
        let one = third.mul_f64(3.0);
        assert!((one.value() - 1.0).abs() < 1e-30);
    }
}
