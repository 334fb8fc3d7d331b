//! Spectral-Galerkin discretization on the disk eigenbasis, generalized
//! Nehari ground states, the radial reference solver, and the
//! nonradiality crossover scan.

mod basis;
mod nehari;
mod radial;
mod scan;

pub use basis::{assemble_basis, BasisEntry, DiskQuadrature, GalerkinBasis, Parity};
pub use nehari::{
    ground_state, inner_maximize, min_positive_lambda, upper_bound_c, GroundStateOptions,
    InnerMax, NehariProblem, NehariResult,
};
pub use radial::{
    complex_vk_minimizer, radial_ground_state, radial_ground_state_with_grid, RadialResult,
    VkResult,
};
pub use scan::{
    nonradiality_scan, radial_level_via_galerkin, solve_at, CrossoverReport, ScanRow,
};
