//! `K(G, n) = ker(G^n -> G^ab)` for finite and abelian `G`, and the
//! recovery quotient `K / [K, Sym(n-1)]`.

use num_bigint::BigInt;
use num_traits::Pow;

use super::tuple::TupleElement;
use crate::abelian::FgAbelianGroup;
use crate::error::ConstructionError;
use crate::perm::{Abelianization, Perm, PermGroup};
use crate::GroupElement;

pub const MIN_N: usize = 3;

fn check_n(n: usize) -> Result<(), ConstructionError> {
    if n < MIN_N {
        return Err(ConstructionError::SmallN { n, min: MIN_N });
    }
    Ok(())
}

/// `psi`: ordered product followed by abelianization.
#[derive(Debug)]
pub struct Psi {
    base: PermGroup,
    ab: Abelianization,
}

impl Psi {
    pub fn new(g: &PermGroup) -> Result<Self, ConstructionError> {
        Ok(Self {
            base: g.clone(),
            ab: Abelianization::compute(g)?,
        })
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.ab.group
    }

    pub fn apply(&self, t: &TupleElement<Perm>) -> Result<Vec<BigInt>, ConstructionError> {
        for (index, c) in t.coords().iter().enumerate() {
            if !self.base.contains(c)? {
                return Err(ConstructionError::CoordinateOutsideGroup { index });
            }
        }
        let product = t.product(&self.base.identity());
        Ok(self.ab.class_of(&product).expect("product lies in the group").to_vec())
    }
}

/// Class of `g_1 ... g_n` in `G^ab`, in the coordinates of
/// `g.abelianization()`.
pub fn psi_map(t: &TupleElement<Perm>, g: &PermGroup) -> Result<Vec<BigInt>, ConstructionError> {
    Psi::new(g)?.apply(t)
}

/// `K(G, n)` realized on `n` disjoint copies of the domain of `G`:
/// copy `b` occupies points `b*m .. (b+1)*m` where `m = deg G`.
#[derive(Clone, Debug)]
pub struct KGroup {
    base: PermGroup,
    n: usize,
    group: PermGroup,
}

impl KGroup {
    pub fn base(&self) -> &PermGroup {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    fn block(&self) -> usize {
        self.base.degree()
    }

    /// Embeds a tuple of `G`-elements as one permutation of `G^n`.
    pub fn embed(&self, t: &TupleElement<Perm>) -> Result<Perm, ConstructionError> {
        embed(self.block(), t)
    }

    /// Splits a permutation of the realized group back into coordinates.
    pub fn to_tuple(&self, p: &Perm) -> TupleElement<Perm> {
        let m = self.block();
        TupleElement::new(
            (0..self.n)
                .map(|b| {
                    let images = (0..m).map(|x| p.image(b * m + x) - b * m).collect();
                    Perm::from_images(images).expect("block preserved")
                })
                .collect(),
        )
    }

    /// The permutation of `n*m` points that moves copy `b` to copy `sigma(b)`;
    /// conjugating by it realizes the coordinate action of `sigma`.
    pub fn coordinate_action(&self, sigma: &Perm) -> Perm {
        let m = self.block();
        let images = (0..self.n * m)
            .map(|p| sigma.image(p / m) * m + p % m)
            .collect();
        Perm::from_images(images).expect("bijection")
    }

    /// `sigma(x)` for `x` in the realized group.
    pub fn act(&self, sigma: &Perm, x: &Perm) -> Perm {
        self.coordinate_action(sigma).conjugate(x)
    }
}

fn embed(m: usize, t: &TupleElement<Perm>) -> Result<Perm, ConstructionError> {
    let n = t.len();
    let mut images = Vec::with_capacity(n * m);
    for (b, g) in t.coords().iter().enumerate() {
        if g.degree() != m {
            return Err(ConstructionError::CoordinateOutsideGroup { index: b });
        }
        images.extend(g.images().iter().map(|&y| b * m + y));
    }
    Ok(Perm::from_images(images)?)
}

/// Realizes `K(G, n)` from the elements `(g, g^-1, 1, ..., 1)` and their
/// `Sym(n)`-conjugates (`g` at position `i`, `g^-1` at position `j`, over
/// generators `g` and ordered pairs `i != j`), then checks the order against
/// `|G|^n / |G^ab|`.
pub fn k_group_finite(g: &PermGroup, n: usize) -> Result<KGroup, ConstructionError> {
    check_n(n)?;
    let m = g.degree();
    let id = g.identity();
    let mut gens = Vec::new();
    for x in g.generators().iter().filter(|x| !x.is_identity()) {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut t = TupleElement::single(&id, n, i, x.clone()).coords().to_vec();
                t[j] = x.inverse();
                gens.push(embed(m, &TupleElement::new(t))?);
            }
        }
    }
    let group = PermGroup::with_cap(n * m, gens, g.cap())?;
    let order = BigInt::from(group.order()?);
    let g_order = BigInt::from(g.order()?);
    let ab_order = g.abelianization()?.order().expect("finite group");
    let expected = Pow::pow(&g_order, n) / ab_order;
    if order != expected {
        return Err(ConstructionError::OrderMismatch {
            expected: expected.to_string(),
            found: order.to_string(),
        });
    }
    Ok(KGroup {
        base: g.clone(),
        n,
        group,
    })
}

/// `K(A, n) ≅ A^{n-1}` for abelian `A`.
pub fn k_group_abelian(a: &FgAbelianGroup, n: usize) -> Result<FgAbelianGroup, ConstructionError> {
    check_n(n)?;
    Ok(a.power(n - 1))
}

/// `[K, S]` where `S = Sym(n)`, or the copy of `Sym(n-1)` fixing the first
/// coordinate when `fix_first` is set: the subgroup generated by
/// `x sigma(x^-1)` over all `x` in `K` and `sigma` in `S`.
pub fn commutator_with_symmetric(k: &KGroup, fix_first: bool) -> Result<PermGroup, ConstructionError> {
    let n = k.n;
    let sigmas: Vec<Perm> = if fix_first {
        Perm::all(n - 1)
            .into_iter()
            .map(|p| {
                let mut images = vec![0];
                images.extend(p.images().iter().map(|&y| y + 1));
                Perm::from_images(images).expect("bijection")
            })
            .collect()
    } else {
        Perm::all(n)
    };
    // [xy, s] = x [y, s] x^-1 [x, s], so the normal closure in K of the
    // generator commutators is the whole subgroup.
    let mut seeds = Vec::new();
    for x in k.group.generators() {
        for s in &sigmas {
            let c = x.op(&k.act(s, &x.inverse()));
            if !c.is_identity() && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    Ok(k.group.normal_closure(&seeds)?)
}

/// `K(G, n) / [K(G, n), Sym(n-1)]` together with the invariants used to
/// compare it with `G`.
#[derive(Clone, Debug)]
pub struct RecoveredQuotient {
    pub quotient: PermGroup,
    pub order: usize,
    pub abelianization: FgAbelianGroup,
    pub exponent: usize,
}

impl RecoveredQuotient {
    /// Order, abelianization and exponent agree with `g`, and for
    /// `|g| <= iso_limit` an explicit isomorphism exists.
    pub fn matches(&self, g: &PermGroup, iso_limit: usize) -> Result<bool, ConstructionError> {
        let order = g.order()?;
        if order != self.order || g.abelianization()? != self.abelianization || g.exponent()? != self.exponent {
            return Ok(false);
        }
        if order <= iso_limit {
            return Ok(g.is_isomorphic(&self.quotient)?);
        }
        Ok(true)
    }
}

pub fn recover_quotient(g: &PermGroup, n: usize) -> Result<RecoveredQuotient, ConstructionError> {
    let k = k_group_finite(g, n)?;
    let sub = commutator_with_symmetric(&k, true)?;
    let quotient = k.group.quotient_group(&sub)?;
    Ok(RecoveredQuotient {
        order: quotient.order()?,
        abelianization: quotient.abelianization()?,
        exponent: quotient.exponent()?,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named;

    fn p(s: &str, deg: usize) -> Perm {
        Perm::parse(s, Some(deg)).unwrap()
    }

    #[test]
    fn psi_examples() {
        let s3 = named::symmetric(3);
        let id = s3.identity();
        let zero = psi_map(&TupleElement::identity(&id, 3), &s3).unwrap();
        assert!(zero.iter().all(|x| x == &BigInt::from(0)));
        let t = TupleElement::new(vec![p("(1 2)", 3), p("(1 2)", 3), id.clone()]);
        assert_eq!(psi_map(&t, &s3).unwrap(), vec![BigInt::from(0)]);
        let t = TupleElement::new(vec![p("(1 2)", 3), id.clone(), id]);
        assert_eq!(psi_map(&t, &s3).unwrap(), vec![BigInt::from(1)]);

        let z4 = named::cyclic(4);
        let c = z4.generators()[0].clone();
        let t = TupleElement::new(vec![c.clone(), c.clone(), c]);
        assert_eq!(psi_map(&t, &z4).unwrap(), vec![BigInt::from(3)]);

        let outside = TupleElement::new(vec![p("(1 2)", 4), Perm::identity(4), Perm::identity(4)]);
        assert!(matches!(
            psi_map(&outside, &z4),
            Err(ConstructionError::CoordinateOutsideGroup { index: 0 })
        ));
    }

    #[test]
    fn small_k_groups() {
        let k = k_group_finite(&named::cyclic(2), 3).unwrap();
        assert_eq!(k.group().order().unwrap(), 4);
        assert_eq!(k.group().abelianization().unwrap(), FgAbelianGroup::cyclic(2).power(2));
        assert_eq!(k_group_finite(&named::symmetric(3), 3).unwrap().group().order().unwrap(), 108);
        assert_eq!(k_group_finite(&named::trivial(), 3).unwrap().group().order().unwrap(), 1);
        assert!(matches!(
            k_group_finite(&named::cyclic(2), 2),
            Err(ConstructionError::SmallN { n: 2, min: 3 })
        ));
    }

    #[test]
    fn abelian_k_groups() {
        let a = FgAbelianGroup::cyclic(5);
        assert_eq!(k_group_abelian(&a, 4).unwrap(), a.power(3));
        assert!(k_group_abelian(&FgAbelianGroup::trivial(), 3).unwrap().is_trivial());
        let a = FgAbelianGroup::free(1).direct_sum(&FgAbelianGroup::cyclic(2));
        let k = k_group_abelian(&a, 4).unwrap();
        assert_eq!(k, FgAbelianGroup::from_cyclic_factors([2, 2, 2].map(BigInt::from), 3));
    }

    #[test]
    fn tuple_round_trip_and_action() {
        let k = k_group_finite(&named::symmetric(3), 3).unwrap();
        let t = TupleElement::new(vec![p("(1 2)", 3), p("(1 3)", 3), p("(1 2 3)", 3)]);
        let x = k.embed(&t).unwrap();
        assert_eq!(k.to_tuple(&x), t);
        let sigma = p("(1 2 3)", 3);
        assert_eq!(k.to_tuple(&k.act(&sigma, &x)), t.permuted(&sigma).unwrap());
    }

    #[test]
    fn symmetric_commutators() {
        let k = k_group_finite(&named::cyclic(2), 3).unwrap();
        let c = commutator_with_symmetric(&k, true).unwrap();
        assert_eq!(c.order().unwrap(), 2);
        let el = &c.elements().unwrap()[1];
        let t = k.to_tuple(el);
        assert!(t.coords()[0].is_identity());
        assert_eq!(t.coords()[1], t.coords()[2]);

        let k = k_group_finite(&named::trivial(), 3).unwrap();
        assert_eq!(commutator_with_symmetric(&k, true).unwrap().order().unwrap(), 1);

        let k = k_group_finite(&named::cyclic(4), 3).unwrap();
        let c = commutator_with_symmetric(&k, true).unwrap();
        assert_eq!(k.group().order().unwrap() / c.order().unwrap(), 4);
    }

    #[test]
    fn recovery() {
        let z4 = named::cyclic(4);
        let r = recover_quotient(&z4, 3).unwrap();
        assert_eq!(r.abelianization, FgAbelianGroup::cyclic(4));
        assert!(r.matches(&z4, 8).unwrap());
        let z2 = named::cyclic(2);
        assert!(recover_quotient(&z2, 4).unwrap().matches(&z2, 8).unwrap());
        let s3 = named::symmetric(3);
        let r = recover_quotient(&s3, 3).unwrap();
        assert_eq!(r.order, 6);
        assert!(!r.quotient.is_abelian());
        assert!(r.matches(&s3, 8).unwrap());
    }
}
