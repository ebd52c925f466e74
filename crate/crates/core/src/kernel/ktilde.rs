//! Descriptor of `K̃(A, n)` for abelian `A`: a central extension of
//! `H_2(A) = Λ²A` by `K(A, n) = A^{n-1}`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::kgroup::k_group_abelian;
use crate::abelian::{exterior_square, FgAbelianGroup};
use crate::error::ConstructionError;

/// Order of a group: an integer, or `"infinite"` in JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigInt),
    Infinite,
}

impl GroupOrder {
    pub fn of(a: &FgAbelianGroup) -> Self {
        a.order().map_or(GroupOrder::Infinite, GroupOrder::Finite)
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for GroupOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GroupOrder::Finite(n) => crate::serde_int::serialize(n, s),
            GroupOrder::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for GroupOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(#[serde(with = "crate::serde_int")] BigInt),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(GroupOrder::Finite(n)),
            Raw::Text(t) if t == "infinite" => Ok(GroupOrder::Infinite),
            Raw::Text(t) => t
                .parse::<BigInt>()
                .map(GroupOrder::Finite)
                .map_err(|_| serde::de::Error::custom(format!("bad group order `{t}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTildeDescriptor {
    pub base_group: FgAbelianGroup,
    pub n: usize,
    pub h2: FgAbelianGroup,
    pub k_part: FgAbelianGroup,
    pub abelianization: FgAbelianGroup,
    pub order: GroupOrder,
    /// Present exactly when the base group is cyclic; then `H_2` vanishes
    /// and the extension is `A^{n-1}` itself.
    pub exact_iso: Option<FgAbelianGroup>,
}

pub fn ktilde_structure(a: &FgAbelianGroup, n: usize) -> Result<KTildeDescriptor, ConstructionError> {
    let k_part = k_group_abelian(a, n)?;
    let h2 = exterior_square(a);
    let order = match (h2.order(), k_part.order()) {
        (Some(x), Some(y)) => GroupOrder::Finite(x * y),
        _ => GroupOrder::Infinite,
    };
    let exact_iso = a.is_cyclic().then(|| k_part.clone());
    Ok(KTildeDescriptor {
        base_group: a.clone(),
        n,
        h2,
        abelianization: k_part.clone(),
        k_part,
        order,
        exact_iso,
    })
}
