//! Closed-form group structures attached to a generic projection.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::descriptor::{Extension, ExtensionTower, GroupDescriptor, ProjectiveGalois, TowerLayer, TOWER_LABELS};
use super::spec::{SpecError, SurfaceSpec};
use crate::abelian::{hom_kernel, quotient_by_diagonal, AbHom, FgAbelianGroup};
use crate::error::AbelianError;
use crate::kernel::{k_group_abelian, ktilde_structure};

pub const CAFF_ASSUMPTION: &str = "C^aff assumed trivial";

fn cyclic(d: u64) -> FgAbelianGroup {
    FgAbelianGroup::cyclic(BigInt::from(d))
}

/// `H_1(X, Z)`: free of rank `2g` for `C x P^1`, trivial otherwise.
pub fn h1_surface(s: &SurfaceSpec) -> FgAbelianGroup {
    FgAbelianGroup::free(2 * s.genus() as usize)
}

/// `H_1(X^aff, Z) = Z/div + H_1(X, Z)`.
pub fn h1_affine(s: &SurfaceSpec) -> Result<FgAbelianGroup, SpecError> {
    Ok(cyclic(s.divisibility_index()?).direct_sum(&h1_surface(s)))
}

/// `pi_1(X^aff)`: cyclic of order `div` for simply connected `X`; for
/// `C x P^1` a central extension of `pi_1(C)` by `Z/d`.
pub fn pi1_affine_model(s: &SurfaceSpec) -> Result<GroupDescriptor, SpecError> {
    let div = s.divisibility_index()?;
    match *s {
        SurfaceSpec::CurveCrossLine { g, d, k } => {
            let surface = GroupDescriptor::named(format!("pi1(C_{g})"), Some(h1_surface(s)), Some(false));
            Ok(GroupDescriptor::Extension {
                extension: Box::new(Extension {
                    kernel: GroupDescriptor::abelian(cyclic(d)),
                    quotient: surface,
                    central: true,
                }),
                abelianization: Some(h1_affine(s)?),
                split: (k % d == 0).then_some(true),
            })
        }
        _ => Ok(GroupDescriptor::abelian(cyclic(div))),
    }
}

/// `H_2(pi_1(X^aff), Z)`.
pub fn h2_affine(s: &SurfaceSpec) -> Result<FgAbelianGroup, SpecError> {
    s.validate()?;
    Ok(match *s {
        SurfaceSpec::CurveCrossLine { g, d, .. } => cyclic(d).power(2 * g as usize).direct_sum(&FgAbelianGroup::free(1)),
        _ => FgAbelianGroup::trivial(),
    })
}

/// Kernel of `(Z/d)^m -> Z/t`, sum of reductions.
pub fn kappa_kernel(d: &BigInt, t: &BigInt, m: usize) -> Result<FgAbelianGroup, AbelianError> {
    Ok(hom_kernel(&AbHom::reduction_sum(d, t, m)?))
}

/// `pi_1(X_gal^aff) / C^aff ≅ K̃(pi_1(X^aff), n)`.
pub fn affine_galois_pi1(s: &SurfaceSpec) -> Result<GroupDescriptor, SpecError> {
    let n = s.projection_degree()?;
    let div = s.divisibility_index()?;
    match *s {
        SurfaceSpec::CurveCrossLine { .. } => {
            let h1 = h1_affine(s)?;
            let k_ab = k_group_abelian(&h1, n).map_err(|e| SpecError::Inconsistent(e.to_string()))?;
            Ok(GroupDescriptor::Extension {
                extension: Box::new(Extension {
                    kernel: GroupDescriptor::abelian(h2_affine(s)?),
                    quotient: GroupDescriptor::named(format!("K(pi1(X^aff), {n})"), Some(k_ab.clone()), Some(false)),
                    central: true,
                }),
                abelianization: Some(k_ab),
                split: None,
            })
        }
        _ => {
            let kt = ktilde_structure(&cyclic(div), n).map_err(|e| SpecError::Inconsistent(e.to_string()))?;
            let exact = kt
                .exact_iso
                .ok_or_else(|| SpecError::Inconsistent("cyclic base without exact type".into()))?;
            Ok(GroupDescriptor::abelian(exact))
        }
    }
}

/// `H_1(X_gal^aff) / C^aff ≅ H_1(X^aff)^{n-1}`.
pub fn h1_affine_galois(s: &SurfaceSpec) -> Result<FgAbelianGroup, SpecError> {
    Ok(h1_affine(s)?.power(s.projection_degree()? - 1))
}

/// `H_1(X_gal) / C^proj ≅ H_1(X^aff)^{n-1} / Δ(<δ>)` where `δ` generates the
/// cyclic torsion of `H_1(X^aff)`.
pub fn galois_h1(s: &SurfaceSpec) -> Result<FgAbelianGroup, SpecError> {
    let n = s.projection_degree()?;
    let h1 = h1_affine(s)?;
    let mut delta = vec![BigInt::zero(); h1.generator_count()];
    if !h1.torsion().is_empty() {
        delta[0] = BigInt::one();
    }
    quotient_by_diagonal(&h1, n - 1, &delta).map_err(|e| SpecError::Inconsistent(e.to_string()))
}

/// `pi_1(X_gal) / C^proj`: explicit for simply connected `X`, otherwise the
/// three-layer tower.
pub fn galois_pi1_quotient(s: &SurfaceSpec) -> Result<ProjectiveGalois, SpecError> {
    let n = s.projection_degree()?;
    let div = s.divisibility_index()?;
    let SurfaceSpec::CurveCrossLine { g, d, .. } = *s else {
        return Ok(ProjectiveGalois::Group(GroupDescriptor::abelian(cyclic(div).power(n - 2))));
    };
    let h2 = h2_affine(s)?;
    let top = GroupDescriptor::named(format!("({h2}) / Z, Z an undetermined cyclic subgroup"), None, None);
    let kappa = kappa_kernel(&BigInt::from(d), &BigInt::from(div), n - 1)
        .map_err(|e| SpecError::Inconsistent(e.to_string()))?;
    let k_ab = h1_surface(s).power(n - 1);
    let bottom = if g == 1 {
        // pi_1 of an elliptic curve is Z^2, so K(Z^2, n) = Z^{2(n-1)} exactly
        GroupDescriptor::abelian(k_ab)
    } else {
        GroupDescriptor::named(format!("K(pi1(C_{g}), {n})"), Some(k_ab), Some(false))
    };
    let layers = TOWER_LABELS
        .iter()
        .zip([top, GroupDescriptor::abelian(kappa), bottom])
        .map(|(label, group)| TowerLayer {
            label: label.to_string(),
            group,
        })
        .collect();
    Ok(ProjectiveGalois::Tower(ExtensionTower {
        layers,
        abelianization: galois_h1(s)?,
    }))
}

/// Whether `pi_1(X)` is finite; when it is, also confirms that the computed
/// projective quotient is a finite group.
pub fn finite_check(s: &SurfaceSpec) -> Result<bool, SpecError> {
    if !s.is_simply_connected() {
        s.validate()?;
        return Ok(false);
    }
    match galois_pi1_quotient(s)?.as_abelian() {
        Some(a) if a.is_finite() => Ok(true),
        _ => Err(SpecError::Inconsistent(format!("{s}: finite pi1(X) but infinite quotient"))),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// The user vouches that `C^aff` is trivial for this projection.
    pub known_trivial_caff: bool,
}

mod h1_format {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::abelian::FgAbelianGroup;

    #[derive(Serialize, Deserialize)]
    struct H1 {
        #[serde(with = "crate::serde_int::vec")]
        torsion: Vec<BigInt>,
        rank: usize,
    }

    pub fn serialize<S: Serializer>(a: &FgAbelianGroup, s: S) -> Result<S::Ok, S::Error> {
        H1 {
            torsion: a.torsion().to_vec(),
            rank: a.free_rank(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<FgAbelianGroup, D::Error> {
        let h = H1::deserialize(d)?;
        let normalized = FgAbelianGroup::from_cyclic_factors(h.torsion.clone(), h.rank);
        if normalized.torsion() != h.torsion.as_slice() {
            return Err(serde::de::Error::custom("torsion is not in invariant-factor form"));
        }
        Ok(normalized)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    #[serde(flatten)]
    pub spec: SurfaceSpec,
    pub degree: usize,
    pub divisibility: u64,
    pub affine_pi1: GroupDescriptor,
    pub affine_galois: GroupDescriptor,
    pub projective_galois: ProjectiveGalois,
    #[serde(with = "h1_format")]
    pub h1_galois: FgAbelianGroup,
    #[serde(with = "h1_format")]
    pub h1_affine_galois: FgAbelianGroup,
    pub assumptions: Vec<String>,
    pub annotations: Vec<String>,
}

pub fn structure_report(s: &SurfaceSpec, options: &ReportOptions) -> Result<StructureReport, SpecError> {
    let mut annotations = s.validate()?;
    if let SurfaceSpec::CurveCrossLine { g, d, k } = *s {
        annotations.push("Z is an undetermined cyclic subgroup of H2(pi1 affine)".into());
        annotations.push("in the computed cases g=1, d=1, Z kills the kernel H2(pi1 affine)/Z".into());
        if k % d != 0 {
            annotations.push(format!("d={d} does not divide k={k}: splitting of pi1(X^aff) not determined"));
        }
        if g >= 2 {
            annotations.push("pi1(C) is not abelian for g >= 2: K(pi1(C), n) is described by its abelianization".into());
        }
    }
    if options.known_trivial_caff {
        annotations.push("C^aff declared trivial: the quotients equal pi1(X_gal^aff) and pi1(X_gal)".into());
    }
    Ok(StructureReport {
        spec: *s,
        degree: s.projection_degree()?,
        divisibility: s.divisibility_index()?,
        affine_pi1: pi1_affine_model(s)?,
        affine_galois: affine_galois_pi1(s)?,
        projective_galois: galois_pi1_quotient(s)?,
        h1_galois: galois_h1(s)?,
        h1_affine_galois: h1_affine_galois(s)?,
        assumptions: vec![CAFF_ASSUMPTION.to_string()],
        annotations,
    })
}
