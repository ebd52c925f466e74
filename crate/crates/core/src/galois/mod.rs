mod calc;
mod descriptor;
mod spec;

pub use calc::{
    affine_galois_pi1, finite_check, galois_h1, galois_pi1_quotient, h1_affine, h1_affine_galois, h1_surface,
    h2_affine, kappa_kernel, pi1_affine_model, structure_report, ReportOptions, StructureReport, CAFF_ASSUMPTION,
};
pub use descriptor::{Extension, ExtensionTower, GroupDescriptor, ProjectiveGalois, TowerLayer, TOWER_LABELS};
pub use spec::{SpecError, SurfaceSpec, MAX_DEGREE};
