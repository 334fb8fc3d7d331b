use rotwave::groundstate::*;
use rotwave::spectrum::alpha_n;
use std::time::Instant;
fn main() {
    let alpha = alpha_n(3).unwrap().alpha;
    let basis = assemble_basis(alpha, 50.0, 40.0).unwrap();
    let quad = DiskQuadrature::for_basis(&basis).unwrap();
    let prob = NehariProblem::new(&basis, &quad, 3.0).unwrap();
    // time one energy+gradient via public pieces
    let c = vec![0.01; basis.entries.len()];
    let t0 = Instant::now();
    let mut acc = 0.0;
    for _ in 0..100 { acc += prob.energy(&c); }
    println!("100 energy evals in {:?} (acc={acc:.3e})", t0.elapsed());
    let mut w = vec![0.0; basis.plus.len()];
    w[0] = 1.0;
    let n2: f64 = basis.plus.iter().enumerate().map(|(s,&e)| basis.entries[e].weight*w[s]*w[s]).sum();
    for x in w.iter_mut() { *x /= n2.sqrt(); }
    let t0 = Instant::now();
    let im = inner_maximize(&prob, &w, None, 1e-9).unwrap();
    println!("cold inner solve: value={:.6e} grad={:.2e} in {:?}", im.value, im.grad_norm, t0.elapsed());
    let t0 = Instant::now();
    let im2 = inner_maximize(&prob, &w, Some((im.t, im.v.clone())), 1e-9).unwrap();
    println!("warm inner solve: value={:.6e} in {:?}", im2.value, t0.elapsed());
}
