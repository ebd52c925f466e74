mod kgroup;
mod ktilde;
mod tuple;
mod verify;

pub use kgroup::{
    commutator_with_symmetric, k_group_abelian, k_group_finite, psi_map, recover_quotient, KGroup, Psi,
    RecoveredQuotient, MIN_N,
};
pub use ktilde::{ktilde_structure, GroupOrder, KTildeDescriptor};
pub use tuple::{EElement, TupleElement};
pub use verify::{
    phi, phi_generator, verify_phi_relators, RelatorFailure, VerificationReport, VerifyOptions, PHI_ISO_MIN_N,
};
