use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::GroupError;
use crate::GroupElement;

/// A permutation of `{0, .., degree-1}` in image form.
///
/// Products compose as functions: `a.op(&b)` maps `x` to `a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Product of the given 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut p = Self::identity(degree);
        for c in cycles {
            let q = Self::cycle(degree, c)?;
            p = p.op(&q);
        }
        Ok(p)
    }

    /// A single 0-based cycle.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for (k, &x) in points.iter().enumerate() {
            if x >= degree || seen[x] {
                return Err(GroupError::CycleSyntax(format!("bad cycle {points:?} for degree {degree}")));
            }
            seen[x] = true;
            images[x] = points[(k + 1) % points.len()];
        }
        Ok(Self { images })
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Self { images }
    }

    /// Parses disjoint-cycle notation with 1-based points, e.g. `(1 2)(3 4 5)`.
    /// Points may be separated by spaces or commas; `()` is the identity.
    /// Without an explicit degree, the largest point mentioned is used.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self, GroupError> {
        let err = || GroupError::CycleSyntax(text.to_string());
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(err)?;
            if !rest.starts_with('(') {
                return Err(err());
            }
            let inner = &rest[1..inner_end];
            let points = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| match s.parse::<usize>() {
                    Ok(p) if p >= 1 => Ok(p - 1),
                    _ => Err(err()),
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(points);
            rest = rest[inner_end + 1..].trim_start();
        }
        let max_point = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
        let degree = match degree {
            Some(d) if d < max_point => {
                return Err(GroupError::CycleSyntax(format!("{text} exceeds degree {d}")))
            }
            Some(d) => d,
            None => max_point,
        };
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.images[x] != x).collect()
    }

    /// `Some((a, b))` with `a < b` when this is the transposition `(a b)`.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        match self.support().as_slice() {
            &[a, b] => Some((a, b)),
            _ => None,
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            out = out.op(&base);
        }
        out
    }

    /// `self * other * self^-1`
    pub fn conjugate(&self, other: &Self) -> Self {
        self.op(other).op(&self.inverse())
    }

    /// Group commutator `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.op(b).op(&a.inverse()).op(&b.inverse())
    }

    /// Every permutation of the given degree, in lexicographic image order.
    pub fn all(degree: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..degree).collect();
        loop {
            out.push(Perm {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..degree).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..degree).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl GroupElement for Perm {
    fn op(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Self { images }
    }

    fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Perm {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        Self::parse(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse("(1 2)(3 4 5)", None).unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        assert_eq!(Perm::parse("()", Some(3)).unwrap().to_string(), "()");
        assert_eq!(Perm::parse("(3,1)", Some(4)).unwrap().to_string(), "(1 3)");
        assert!(Perm::parse("(1 2", None).is_err());
        assert!(Perm::parse("(1 1)", None).is_err());
        assert!(Perm::parse("(0 1)", None).is_err());
        assert!(Perm::parse("(1 5)", Some(3)).is_err());
    }

    #[test]
    fn composition_is_functional() {
        let a = Perm::parse("(1 2)", Some(3)).unwrap();
        let b = Perm::parse("(2 3)", Some(3)).unwrap();
        let ab = a.op(&b);
        assert_eq!(ab.images(), &[1, 2, 0]);
        assert_eq!(ab.to_string(), "(1 2 3)");
        assert!(ab.op(&ab.inverse()).is_identity());
    }

    #[test]
    fn orders_and_all() {
        assert_eq!(Perm::parse("(1 2)(3 4 5)", None).unwrap().order(), 6);
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(Perm::all(0).len(), 1);
        let t = Perm::transposition(5, 3, 1);
        assert_eq!(t.as_transposition(), Some((1, 3)));
    }
}
