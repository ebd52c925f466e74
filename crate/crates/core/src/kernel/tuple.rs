use std::fmt;

use crate::error::ConstructionError;
use crate::perm::Perm;
use crate::GroupElement;

/// An element `(g_1, ..., g_n)` of `G^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TupleElement<T> {
    coords: Vec<T>,
}

impl<T: GroupElement> TupleElement<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn identity(identity: &T, n: usize) -> Self {
        Self {
            coords: vec![identity.clone(); n],
        }
    }

    /// `x` at position `i`, `identity` elsewhere.
    pub fn single(identity: &T, n: usize, i: usize, x: T) -> Self {
        let mut t = Self::identity(identity, n);
        t.coords[i] = x;
        t
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, ConstructionError> {
        if self.len() != other.len() {
            return Err(ConstructionError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.op(b)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            coords: self.coords.iter().map(GroupElement::inverse).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(GroupElement::is_identity)
    }

    /// Coordinate action of `Sym(n)`: `(sigma . h)_{sigma(i)} = h_i`.
    pub fn permuted(&self, sigma: &Perm) -> Result<Self, ConstructionError> {
        if sigma.degree() != self.len() {
            return Err(ConstructionError::LengthMismatch {
                left: self.len(),
                right: sigma.degree(),
            });
        }
        let mut coords = self.coords.clone();
        for (i, h) in self.coords.iter().enumerate() {
            coords[sigma.image(i)] = h.clone();
        }
        Ok(Self { coords })
    }

    /// Ordered product `g_1 ... g_n`.
    pub fn product(&self, identity: &T) -> T {
        self.coords.iter().fold(identity.clone(), |acc, g| acc.op(g))
    }
}

impl<T: fmt::Display> fmt::Display for TupleElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// An element `(g, sigma)` of `G^n ⋊ Sym(n)`, multiplied as
/// `(g, sigma)(h, tau) = (g * sigma(h), sigma tau)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EElement<T> {
    pub tuple: TupleElement<T>,
    pub perm: Perm,
}

impl<T: GroupElement> EElement<T> {
    pub fn new(tuple: TupleElement<T>, perm: Perm) -> Result<Self, ConstructionError> {
        if tuple.len() != perm.degree() {
            return Err(ConstructionError::LengthMismatch {
                left: tuple.len(),
                right: perm.degree(),
            });
        }
        Ok(Self { tuple, perm })
    }

    pub fn identity(identity: &T, n: usize) -> Self {
        Self {
            tuple: TupleElement::identity(identity, n),
            perm: Perm::identity(n),
        }
    }

    pub fn from_perm(identity: &T, perm: Perm) -> Self {
        Self {
            tuple: TupleElement::identity(identity, perm.degree()),
            perm,
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, ConstructionError> {
        let moved = other.tuple.permuted(&self.perm)?;
        Ok(Self {
            tuple: self.tuple.multiply(&moved)?,
            perm: self.perm.op(&other.perm),
        })
    }

    /// `(g, sigma)^-1 = (sigma^-1(g^-1), sigma^-1)`
    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        Self {
            tuple: self.tuple.inverse().permuted(&inv).expect("same length"),
            perm: inv,
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self {
            tuple: TupleElement {
                coords: self.tuple.coords.iter().map(|c| c.op(&c.inverse())).collect(),
            },
            perm: Perm::identity(self.perm.degree()),
        };
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base).expect("same length");
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.tuple.is_identity()
    }
}

impl<T: fmt::Display> fmt::Display for EElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} . {}", self.tuple, self.perm)
    }
}
