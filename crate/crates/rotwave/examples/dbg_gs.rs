use rotwave::groundstate::*;
use rotwave::spectrum::alpha_n;
use std::time::Instant;
fn main() {
    let alpha = alpha_n(3).unwrap().alpha;
    println!("alpha_3 = {alpha}");
    for j_cut in [25.0, 40.0, 60.0] {
        let t0 = Instant::now();
        let basis = assemble_basis(alpha, 50.0, j_cut).unwrap();
        println!("j_cut={j_cut}: basis {} entries (+{} 0:{} -{})",
            basis.entries.len(), basis.plus.len(), basis.zero.len(), basis.minus.len());
        let quad = DiskQuadrature::for_basis(&basis).unwrap();
        let opts = GroundStateOptions { multi_starts: 6, ..Default::default() };
        let gs = ground_state(&basis, &quad, 3.0, &opts).unwrap();
        println!("  energy={:.8e} kkt={:.3e} nonrad={:.4} conv={} in {:?}",
            gs.energy, gs.kkt_residual, gs.nonradial_energy_fraction, gs.converged, t0.elapsed());
        let ub = upper_bound_c(alpha, 50.0, 3.0, 200, 200).unwrap();
        println!("  upper bound = {ub:.6e}");
    }
}
