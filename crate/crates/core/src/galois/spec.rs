use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest projection degree the calculator will materialize; reports list
/// one cyclic factor per copy.
pub const MAX_DEGREE: u64 = 2_000_000;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("{family}: {message}")]
    InvalidParameter { family: &'static str, message: String },
    #[error("projection degree {degree} exceeds the supported maximum {limit}")]
    DegreeTooLarge { degree: String, limit: u64 },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// A surface together with the numeric data of the line bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum SurfaceSpec {
    /// `P^2` with `O(k)`.
    #[serde(rename = "p2")]
    ProjectivePlane { k: u64 },
    /// `P^1 x P^1` with `O(a, b)`.
    #[serde(rename = "quadric")]
    Quadric { a: u64, b: u64 },
    /// Hirzebruch surface `F_e` with `O(aH + bF)`.
    #[serde(rename = "hirzebruch")]
    Hirzebruch { e: u64, a: u64, b: u64 },
    /// `C x P^1` for a genus-`g` curve, with a degree-`k` bundle on `C`
    /// boxed with `O(d)`.
    #[serde(rename = "cxp1")]
    CurveCrossLine { g: u64, d: u64, k: u64 },
    /// Any simply connected surface, given by degree and divisibility index.
    #[serde(rename = "custom")]
    SimplyConnectedCustom { n: u64, div: u64 },
}

fn invalid(family: &'static str, message: impl Into<String>) -> SpecError {
    SpecError::InvalidParameter {
        family,
        message: message.into(),
    }
}

impl SurfaceSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            SurfaceSpec::ProjectivePlane { .. } => "p2",
            SurfaceSpec::Quadric { .. } => "quadric",
            SurfaceSpec::Hirzebruch { .. } => "hirzebruch",
            SurfaceSpec::CurveCrossLine { .. } => "cxp1",
            SurfaceSpec::SimplyConnectedCustom { .. } => "custom",
        }
    }

    pub fn is_simply_connected(&self) -> bool {
        !matches!(self, SurfaceSpec::CurveCrossLine { .. })
    }

    /// Genus of the curve factor, 0 for the simply connected families.
    pub fn genus(&self) -> u64 {
        match self {
            SurfaceSpec::CurveCrossLine { g, .. } => *g,
            _ => 0,
        }
    }

    fn raw_degree(&self) -> Option<u64> {
        match *self {
            SurfaceSpec::ProjectivePlane { k } => k.checked_mul(k),
            SurfaceSpec::Quadric { a, b } => a.checked_mul(b)?.checked_mul(2),
            SurfaceSpec::Hirzebruch { e, a, b } => {
                let ab2 = a.checked_mul(b)?.checked_mul(2)?;
                let ea2 = e.checked_mul(a)?.checked_mul(a)?;
                ab2.checked_add(ea2)
            }
            SurfaceSpec::CurveCrossLine { d, k, .. } => d.checked_mul(k)?.checked_mul(2),
            SurfaceSpec::SimplyConnectedCustom { n, .. } => Some(n),
        }
    }

    fn raw_divisibility(&self) -> u64 {
        match *self {
            SurfaceSpec::ProjectivePlane { k } => k,
            SurfaceSpec::Quadric { a, b } | SurfaceSpec::Hirzebruch { a, b, .. } => a.gcd(&b),
            SurfaceSpec::CurveCrossLine { d, k, .. } => k.gcd(&d),
            SurfaceSpec::SimplyConnectedCustom { div, .. } => div,
        }
    }

    /// Checks the parameter ranges. Returns warnings for accepted but
    /// possibly not sufficiently ample parameters.
    pub fn validate(&self) -> Result<Vec<String>, SpecError> {
        let family = self.family_name();
        let mut warnings = Vec::new();
        match *self {
            SurfaceSpec::ProjectivePlane { k } => {
                if k < 5 {
                    return Err(invalid(family, format!("k must be at least 5, got {k}")));
                }
            }
            SurfaceSpec::Quadric { a, b } => {
                if a < 5 || b < 5 {
                    return Err(invalid(family, format!("a and b must be at least 5, got a={a}, b={b}")));
                }
            }
            SurfaceSpec::Hirzebruch { a, b, .. } => {
                if a == 0 || b == 0 {
                    return Err(invalid(family, "a and b must be positive"));
                }
                if a < 5 || b < 5 {
                    warnings.push(format!(
                        "a={a}, b={b}: aH+bF may not be sufficiently ample (a,b >= 5 expected)"
                    ));
                }
            }
            SurfaceSpec::CurveCrossLine { g, d, k } => {
                if g == 0 {
                    return Err(invalid(family, "genus must be at least 1"));
                }
                if d == 0 || k == 0 {
                    return Err(invalid(family, "d and k must be positive"));
                }
            }
            SurfaceSpec::SimplyConnectedCustom { n, div } => {
                if div == 0 {
                    return Err(invalid(family, "divisibility index must be positive"));
                }
                if n % div != 0 {
                    return Err(invalid(
                        family,
                        format!("divisibility index {div} must divide the degree {n}"),
                    ));
                }
            }
        }
        let degree = self.raw_degree().ok_or_else(|| SpecError::DegreeTooLarge {
            degree: "overflow".into(),
            limit: MAX_DEGREE,
        })?;
        if degree < 5 {
            return Err(invalid(family, format!("projection degree must be at least 5, got {degree}")));
        }
        if degree > MAX_DEGREE {
            return Err(SpecError::DegreeTooLarge {
                degree: degree.to_string(),
                limit: MAX_DEGREE,
            });
        }
        Ok(warnings)
    }

    /// Degree `n` of the generic projection: the self-intersection number.
    pub fn projection_degree(&self) -> Result<usize, SpecError> {
        self.validate()?;
        Ok(self.raw_degree().expect("validated") as usize)
    }

    /// Divisibility index of the line bundle in `Pic(X)`; for `C x P^1` the
    /// torsion order `gcd(k, d)` of `H_1` of the affine part.
    pub fn divisibility_index(&self) -> Result<u64, SpecError> {
        self.validate()?;
        Ok(self.raw_divisibility())
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceSpec::ProjectivePlane { k } => write!(f, "P2, O({k})"),
            SurfaceSpec::Quadric { a, b } => write!(f, "P1xP1, O({a},{b})"),
            SurfaceSpec::Hirzebruch { e, a, b } => write!(f, "F_{e}, O({a}H+{b}F)"),
            SurfaceSpec::CurveCrossLine { g, d, k } => write!(f, "C_{g} x P1, degree {k} on C, O({d})"),
            SurfaceSpec::SimplyConnectedCustom { n, div } => write!(f, "simply connected, n={n}, div={div}"),
        }
    }
}
