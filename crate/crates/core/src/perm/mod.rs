mod group;
pub mod named;
#[allow(clippy::module_inception)]
mod perm;

pub use group::{Abelianization, ElementSet, LowerCentralSeries, PermGroup, DEFAULT_ELEMENT_CAP};
pub use perm::Perm;
