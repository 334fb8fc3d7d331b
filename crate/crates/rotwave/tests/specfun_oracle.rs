//! Oracle-backed verification of the special-function kernel.

mod common;

use rotwave::specfun::*;

/// Refined zeros match the independent extended-precision bisection
/// oracle to 1e−12 across the full oracle grid.
#[test]
fn zeros_match_bisection_oracle() {
    for &nu in &[0.0, 0.5, 1.0, 2.0, 5.0, 10.0] {
        for k in 1..=10u32 {
            let fast = bessel_j_zero(nu, k).unwrap().value;
            let oracle = common::oracle_zero(nu, k);
            assert!(
                (fast - oracle).abs() <= 1e-12,
                "({nu},{k}): fast {fast:.15} vs oracle {oracle:.15}"
            );
        }
    }
}

#[test]
fn first_j0_zero_from_series_bisection() {
    // sanity anchor for the oracle itself
    let oracle = common::oracle_zero(0.0, 1);
    assert!((oracle - 2.404825557695773).abs() < 1e-12);
    let v = bessel_j(0.0, 2.404825557695773).unwrap();
    assert!(v.abs() < 1e-12);
}

#[test]
fn ratio_monotone_in_order() {
    // j_{ν,k}/ν strictly decreasing in ν at fixed k
    for k in [1u32, 3, 10, 25] {
        let mut prev = f64::INFINITY;
        for &nu in &[0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 64.0, 256.0] {
            let r = bessel_j_zero(nu, k).unwrap().value / nu;
            assert!(r < prev, "ratio not decreasing at nu={nu}, k={k}");
            prev = r;
        }
    }
}

#[test]
fn interleaving_in_index_and_order() {
    for &nu in &[0.0, 0.3, 1.0, 7.0, 29.0, 143.0] {
        let row = bessel_zero_row(nu, 60).unwrap();
        let next = bessel_zero_row(nu + 1.0, 60).unwrap();
        for k in 0..59 {
            assert!(row[k] < row[k + 1], "index order at nu={nu}");
            assert!(
                row[k] < next[k] && next[k] < row[k + 1],
                "order interleaving at nu={nu}, k={k}"
            );
        }
    }
}

#[test]
fn enclosures_on_a_wide_grid() {
    for &nu in &[0.0, 0.5, 2.0, 10.0, 100.0, 900.0] {
        for &k in &[1u32, 2, 7, 40, 300] {
            let z = bessel_j_zero(nu, k).unwrap();
            assert!(
                z.lower < z.value && z.value < z.upper,
                "prop bracket at ({nu},{k})"
            );
            let (lo, hi) = zero_enclosure(nu, k).unwrap();
            assert!(lo < z.value && z.value < hi, "combined bracket at ({nu},{k})");
        }
    }
}

#[test]
fn derivative_interval_and_fd_agreement() {
    // dj/dν ∈ (1, π/2) and matches central differences
    let nus = [0.1, 0.5, 1.0, 3.0, 10.0, 33.0, 100.0];
    let ks = [1u32, 2, 5, 17, 50];
    for &nu in &nus {
        for &k in &ks {
            let d = bessel_zero_derivative(nu, k).unwrap();
            assert!(
                d > 1.0 && d < std::f64::consts::FRAC_PI_2,
                "interval violated at ({nu},{k}): {d}"
            );
        }
    }
    for &(nu, k) in &[(0.5, 1u32), (3.0, 7), (10.0, 2), (33.0, 20)] {
        let h = 1e-4;
        let d = bessel_zero_derivative(nu, k).unwrap();
        let a = bessel_j_zero(nu + h, k).unwrap().value;
        let b = bessel_j_zero(nu - h, k).unwrap().value;
        let fd = (a - b) / (2.0 * h);
        assert!((d - fd).abs() < 1e-5, "({nu},{k}): {d} vs fd {fd}");
    }
}

#[test]
fn modified_bessel_integral_identity() {
    // ∫_0^∞ K₁(t)·t dt = π/2
    let integral = rotwave::quadrature::tanh_sinh(
        |t| mod_bessel_k(1, t).unwrap_or(0.0) * t,
        0.0,
        60.0,
        1e-11,
    )
    .unwrap();
    assert!(
        (integral - std::f64::consts::FRAC_PI_2).abs() < 1e-8,
        "∫K₁ t dt = {integral}"
    );
}

#[test]
fn k0_monotone_decreasing() {
    let mut prev = f64::INFINITY;
    for i in 1..=120 {
        let t = 0.1 * i as f64;
        let v = mod_bessel_k(0, t).unwrap();
        assert!(v < prev);
        prev = v;
    }
}

#[test]
fn airy_bracket_example() {
    // k = 1 inside the closed-form bracket with 4k−1.4, 4k−0.965
    let a1 = airy_zero(1).unwrap().magnitude;
    let c = 3.0 * std::f64::consts::PI / 8.0;
    assert!(a1 > (c * 2.6).powf(2.0 / 3.0) && a1 < (c * 3.035).powf(2.0 / 3.0));
    assert!((a1 - 2.338107410459767).abs() < 1e-12);
    assert!(airy_zero(2).unwrap().magnitude > a1);
}

/// Plain-f64 Newton on the Airy Maclaurin series, independent of the
/// library's Bessel-based route (safe this close to the origin).
#[test]
fn airy_first_zero_against_maclaurin_newton() {
    let c1 = 0.3550280538878172_f64;
    let c2 = 0.2588194037928068_f64;
    let ai = |x: f64| {
        let mut f = 1.0;
        let mut tf = 1.0;
        let mut g = x;
        let mut tg = x;
        for m in 0..60 {
            let mf = m as f64;
            tf *= x * x * x / ((3.0 * mf + 2.0) * (3.0 * mf + 3.0));
            f += tf;
            tg *= x * x * x / ((3.0 * mf + 3.0) * (3.0 * mf + 4.0));
            g += tg;
        }
        c1 * f - c2 * g
    };
    let mut z = -2.34_f64;
    for _ in 0..60 {
        let h = 1e-7;
        let d = (ai(z + h) - ai(z - h)) / (2.0 * h);
        z -= ai(z) / d;
    }
    let lib = airy_zero(1).unwrap().magnitude;
    assert!((lib + z).abs() < 1e-9, "lib {lib} vs newton {}", -z);
}

mod proptests {
    use proptest::prelude::*;
    use rotwave::specfun::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        /// Every computed zero respects its rigorous brackets.
        #[test]
        fn zero_in_brackets(nu in 0.0f64..300.0, k in 1u32..80) {
            let z = bessel_j_zero(nu, k).unwrap();
            prop_assert!(z.lower < z.value && z.value < z.upper);
            if nu > 0.0 {
                let (lo, hi) = zero_enclosure(nu, k).unwrap();
                prop_assert!(lo < z.value && z.value < hi);
            }
        }

        /// Zeros increase strictly in both index and order.
        #[test]
        fn zero_monotonicity(nu in 0.0f64..200.0, k in 1u32..50) {
            let a = bessel_j_zero(nu, k).unwrap().value;
            let b = bessel_j_zero(nu, k + 1).unwrap().value;
            let c = bessel_j_zero(nu + 0.5, k).unwrap().value;
            prop_assert!(a < b);
            prop_assert!(a < c);
        }
    }
}
