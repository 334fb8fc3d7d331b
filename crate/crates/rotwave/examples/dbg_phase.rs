use rotwave::specfun::*;
fn main() {
    let oracle = 18.980133875179924_f64; // independent dd bisection
    let fast = bessel_j_zero(5.0, 4).unwrap().value;
    println!("fast zero {fast:.15}, diff {:.3e}", fast - oracle);
    // J at both via steed-accurate bessel_j (x=19 > 2 and not debye? s=18.3>=18 → debye...)
    // force steed via a tiny order perturbation below the validity edge? instead
    // evaluate J_5 near both points using the series-safe? not available.
    // use central finite structure: J(oracle) from the large-argument code:
    for x in [oracle - 1e-6, oracle, oracle + 1e-6, fast] {
        println!("J(5,{x:.12}) = {:.6e}", bessel_j(5.0, x).unwrap());
    }
}
