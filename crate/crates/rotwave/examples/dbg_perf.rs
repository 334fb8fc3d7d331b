use rotwave::specfun::*;
use std::time::Instant;
fn main() {
    // big-row throughput
    let t0 = Instant::now();
    let mut n = 0usize;
    for &nu in &[500.0f64, 1500.0, 3000.0, 4000.0] {
        let row = bessel_zero_row(nu, 4000).unwrap();
        n += row.len();
        // spot-check monotonicity + enclosure of a few
        for k in [1u32, 2, 10, 100, 1000, 4000] {
            let v = row[(k-1) as usize];
            let (lo, hi) = zero_enclosure(nu, k).unwrap();
            assert!(lo < v && v < hi, "enclosure violated nu={nu} k={k}: {lo} {v} {hi}");
            let (plo, phi) = prop_bracket(nu, k).unwrap();
            assert!(plo < v && v < phi, "prop violated nu={nu} k={k}: {plo} {v} {phi}");
        }
        for w in row.windows(2) { assert!(w[1] > w[0] + 2.5); }
    }
    println!("4 rows x 4000 zeros ({n}) in {:?}", t0.elapsed());
    let t0 = Instant::now();
    let row0 = bessel_zero_row(0.0, 4000).unwrap();
    println!("nu=0 row 4000 in {:?} (j_0_4000 = {})", t0.elapsed(), row0[3999]);
}
