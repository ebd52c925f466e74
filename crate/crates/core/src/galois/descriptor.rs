use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::FgAbelianGroup;

/// What is known about a group: its exact abelian type, an extension of
/// two described groups, or only a name with whatever invariants are known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupDescriptor {
    FgAbelian {
        abelian: FgAbelianGroup,
    },
    Extension {
        extension: Box<Extension>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        abelianization: Option<FgAbelianGroup>,
        /// `Some(true)` when the extension is known to split; `None` when
        /// no splitting criterion applies.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        split: Option<bool>,
    },
    Named {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        abelianization: Option<FgAbelianGroup>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        finite: Option<bool>,
    },
}

/// `1 -> kernel -> E -> quotient -> 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub kernel: GroupDescriptor,
    pub quotient: GroupDescriptor,
    pub central: bool,
}

impl GroupDescriptor {
    pub fn abelian(a: FgAbelianGroup) -> Self {
        GroupDescriptor::FgAbelian { abelian: a }
    }

    pub fn named(name: impl Into<String>, abelianization: Option<FgAbelianGroup>, finite: Option<bool>) -> Self {
        GroupDescriptor::Named {
            name: name.into(),
            abelianization,
            finite,
        }
    }

    pub fn as_abelian(&self) -> Option<&FgAbelianGroup> {
        match self {
            GroupDescriptor::FgAbelian { abelian } => Some(abelian),
            _ => None,
        }
    }

    /// Abelianization when it is known.
    pub fn abelianization(&self) -> Option<&FgAbelianGroup> {
        match self {
            GroupDescriptor::FgAbelian { abelian } => Some(abelian),
            GroupDescriptor::Extension { abelianization, .. } | GroupDescriptor::Named { abelianization, .. } => {
                abelianization.as_ref()
            }
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::FgAbelian { abelian } => write!(f, "{abelian}"),
            GroupDescriptor::Extension {
                extension,
                abelianization,
                split,
            } => {
                let kind = if extension.central { "central extension" } else { "extension" };
                write!(f, "{kind} 1 -> {} -> * -> {} -> 1", extension.kernel, extension.quotient)?;
                if *split == Some(true) {
                    f.write_str(", split")?;
                }
                if let Some(ab) = abelianization {
                    write!(f, ", abelianization {ab}")?;
                }
                Ok(())
            }
            GroupDescriptor::Named {
                name, abelianization, ..
            } => {
                write!(f, "{name}")?;
                if let Some(ab) = abelianization {
                    write!(f, " (abelianization {ab})")?;
                }
                Ok(())
            }
        }
    }
}

pub const TOWER_LABELS: [&str; 3] = ["H2(pi1 affine)/Z", "ker kappa_{n-1}", "K(pi1(X), n)"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerLayer {
    pub label: String,
    pub group: GroupDescriptor,
}

/// Successive central layers, top kernel first: the group is an extension
/// of layer 2 by layer 1, which in turn extends layer 3 by layer 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionTower {
    pub layers: Vec<TowerLayer>,
    pub abelianization: FgAbelianGroup,
}

impl ExtensionTower {
    pub fn labels_are_canonical(&self) -> bool {
        self.layers.iter().map(|l| l.label.as_str()).eq(TOWER_LABELS)
    }
}

impl fmt::Display for ExtensionTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "extension tower:")?;
        for (depth, layer) in self.layers.iter().enumerate() {
            writeln!(f, "{:indent$}{}: {}", "", layer.label, layer.group, indent = 2 + 2 * depth)?;
        }
        write!(f, "  abelianization: {}", self.abelianization)
    }
}

/// The projective Galois quotient: an explicit group or a tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProjectiveGalois {
    Group(GroupDescriptor),
    Tower(ExtensionTower),
}

impl ProjectiveGalois {
    pub fn as_abelian(&self) -> Option<&FgAbelianGroup> {
        match self {
            ProjectiveGalois::Group(g) => g.as_abelian(),
            ProjectiveGalois::Tower(_) => None,
        }
    }
}

impl fmt::Display for ProjectiveGalois {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectiveGalois::Group(g) => write!(f, "{g}"),
            ProjectiveGalois::Tower(t) => write!(f, "{t}"),
        }
    }
}
