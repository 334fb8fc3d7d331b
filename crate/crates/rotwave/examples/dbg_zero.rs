use rotwave::specfun::*;
fn main() {
    for nu in [11.9999f64, 12.0, 12.0001] {
        let row = bessel_zero_row(nu, 3).unwrap();
        println!("nu={nu}: {:?}", row);
    }
    // scan J around x in [19.5, 21.0] for nu=12.0001
    for i in 0..16 {
        let x = 19.5 + 0.1 * i as f64;
        let j = bessel_j(12.0001, x).unwrap();
        println!("J(12.0001, {x:.2}) = {j:.6e}");
    }
}
