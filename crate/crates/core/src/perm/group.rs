use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::perm::Perm;
use crate::abelian::{cokernel_map, FgAbelianGroup, IntMatrix};
use crate::error::GroupError;
use crate::GroupElement;

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// Enumerated elements with an index for membership tests.
#[derive(Debug)]
pub struct ElementSet {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl ElementSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn as_slice(&self) -> &[Perm] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Perm> {
        self.elements.iter()
    }
}

/// A finite group given by permutation generators, enumerated on demand.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    cap: usize,
    cache: OnceLock<Arc<ElementSet>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        Self::with_cap(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self, GroupError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self {
            degree,
            generators,
            cap,
            cache: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("no generators")
    }

    fn derived(&self, generators: Vec<Perm>) -> Self {
        Self {
            degree: self.degree,
            generators,
            cap: self.cap,
            cache: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Same group with a different element cap.
    pub fn set_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// Breadth-first closure under right multiplication by the generators.
    pub fn element_set(&self) -> Result<Arc<ElementSet>, GroupError> {
        if let Some(set) = self.cache.get() {
            return Ok(set.clone());
        }
        let id = self.identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &self.generators {
                let next = elements[i].op(g);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= self.cap {
                    return Err(GroupError::CapExceeded { cap: self.cap });
                }
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
        let set = Arc::new(ElementSet { elements, index });
        Ok(self.cache.get_or_init(|| set).clone())
    }

    pub fn elements(&self) -> Result<Vec<Perm>, GroupError> {
        Ok(self.element_set()?.as_slice().to_vec())
    }

    pub fn order(&self) -> Result<usize, GroupError> {
        Ok(self.element_set()?.len())
    }

    pub fn contains(&self, p: &Perm) -> Result<bool, GroupError> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.element_set()?.contains(p))
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Perm::is_identity)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.op(b) == b.op(a)))
    }

    /// Lowest common multiple of the element orders.
    pub fn exponent(&self) -> Result<usize, GroupError> {
        Ok(self
            .element_set()?
            .iter()
            .fold(1, |acc, p| acc.lcm(&p.order())))
    }

    /// Closure of `elems`, which must lie in this group.
    pub fn subgroup_generated(&self, elems: &[Perm]) -> Result<PermGroup, GroupError> {
        let set = self.element_set()?;
        if elems.iter().any(|e| e.degree() != self.degree || !set.contains(e)) {
            return Err(GroupError::NotInGroup);
        }
        let h = self.derived(elems.to_vec());
        h.element_set()?;
        Ok(h)
    }

    /// Whether `h` (same degree) is a subgroup normalized by every generator.
    pub fn normalizes(&self, h: &PermGroup) -> Result<bool, GroupError> {
        let set = h.element_set()?;
        Ok(self
            .generators
            .iter()
            .all(|x| h.generators.iter().all(|y| set.contains(&x.conjugate(y)))))
    }

    pub fn is_normal_subgroup(&self, h: &PermGroup) -> Result<bool, GroupError> {
        let mine = self.element_set()?;
        if h.degree != self.degree || !h.generators.iter().all(|g| mine.contains(g)) {
            return Ok(false);
        }
        self.normalizes(h)
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> Result<PermGroup, GroupError> {
        let mut gens: Vec<Perm> = Vec::new();
        for s in seeds {
            if !s.is_identity() && !gens.contains(s) {
                gens.push(s.clone());
            }
        }
        loop {
            let h = self.derived(gens.clone());
            let set = h.element_set()?;
            let mut missing = Vec::new();
            for x in &self.generators {
                for y in &gens {
                    let c = x.conjugate(y);
                    if !set.contains(&c) && !missing.contains(&c) {
                        missing.push(c);
                    }
                }
            }
            if missing.is_empty() {
                return Ok(h);
            }
            gens.extend(missing);
        }
    }

    /// `[A, B]` for `B` normal in this group `A`: normal closure of the
    /// commutators of generator pairs.
    pub fn commutator_with(&self, b: &PermGroup) -> Result<PermGroup, GroupError> {
        let mut seeds = Vec::new();
        for x in &self.generators {
            for y in &b.generators {
                seeds.push(Perm::commutator(x, y));
            }
        }
        self.normal_closure(&seeds)
    }

    pub fn derived_subgroup(&self) -> Result<PermGroup, GroupError> {
        self.commutator_with(self)
    }

    /// `g / [g, g]` in invariant-factor form.
    pub fn abelianization(&self) -> Result<FgAbelianGroup, GroupError> {
        Ok(Abelianization::compute(self)?.group)
    }

    /// `γ_1 = g`, `γ_{i+1} = [g, γ_i]`, until the series stabilizes.
    pub fn lower_central_series(&self) -> Result<LowerCentralSeries, GroupError> {
        let mut terms = vec![self.clone()];
        let mut last_order = self.order()?;
        loop {
            let next = self.commutator_with(terms.last().unwrap())?;
            let order = next.order()?;
            if order == 1 {
                let class = terms.len();
                terms.push(next);
                return Ok(LowerCentralSeries {
                    terms,
                    class: Some(if last_order == 1 { 0 } else { class }),
                });
            }
            if order == last_order {
                return Ok(LowerCentralSeries { terms, class: None });
            }
            last_order = order;
            terms.push(next);
        }
    }

    pub fn nilpotency_class(&self) -> Result<Option<usize>, GroupError> {
        Ok(self.lower_central_series()?.class)
    }

    /// `g / n` acting on the left cosets of `n`.
    pub fn quotient_group(&self, n: &PermGroup) -> Result<PermGroup, GroupError> {
        if !self.is_normal_subgroup(n)? {
            return Err(GroupError::NotNormal);
        }
        let cosets = CosetTable::build(self, n)?;
        let m = cosets.reps.len();
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let images = (0..m)
                    .map(|c| cosets.label_of(&g.op(&cosets.reps[c])))
                    .collect();
                Perm::from_images(images)
            })
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::with_cap(m, gens, self.cap)
    }

    /// A generating set found greedily from the generators and then the
    /// elements; each new member strictly enlarges the subgroup.
    pub fn small_generating_set(&self) -> Result<Vec<Perm>, GroupError> {
        let set = self.element_set()?;
        let mut gens: Vec<Perm> = Vec::new();
        let mut current: HashSet<Perm> = HashSet::from([self.identity()]);
        for candidate in self.generators.iter().chain(set.iter()) {
            if current.len() == set.len() {
                break;
            }
            if current.contains(candidate) {
                continue;
            }
            gens.push(candidate.clone());
            current = self.derived(gens.clone()).element_set()?.iter().cloned().collect();
        }
        Ok(gens)
    }

    /// Brute-force isomorphism test: tries every assignment of a small
    /// generating set of `self` into `other` and checks it extends to a
    /// bijective homomorphism.
    pub fn is_isomorphic(&self, other: &PermGroup) -> Result<bool, GroupError> {
        let a = self.element_set()?;
        let b = other.element_set()?;
        if a.len() != b.len() {
            return Ok(false);
        }
        if order_profile(&a) != order_profile(&b) {
            return Ok(false);
        }
        let gens = self.small_generating_set()?;
        let candidates: Vec<Vec<&Perm>> = gens
            .iter()
            .map(|g| b.iter().filter(|x| x.order() == g.order()).collect())
            .collect();
        let mut choice = vec![0usize; gens.len()];
        loop {
            let images: Vec<&Perm> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
            if extends_to_isomorphism(self, &gens, &images, &a, other.degree) {
                return Ok(true);
            }
            // odometer
            let mut k = 0;
            loop {
                if k == choice.len() {
                    return Ok(gens.is_empty() && a.len() == 1);
                }
                choice[k] += 1;
                if choice[k] < candidates[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }

    /// `a × b` on disjoint supports: `a` on the first points, `b` shifted after.
    pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup, GroupError> {
        let degree = a.degree + b.degree;
        let mut gens = Vec::new();
        for g in &a.generators {
            let mut images: Vec<usize> = (0..degree).collect();
            images[..a.degree].copy_from_slice(g.images());
            gens.push(Perm::from_images(images)?);
        }
        for g in &b.generators {
            let mut images: Vec<usize> = (0..degree).collect();
            for (x, &y) in g.images().iter().enumerate() {
                images[a.degree + x] = a.degree + y;
            }
            gens.push(Perm::from_images(images)?);
        }
        PermGroup::with_cap(degree, gens, a.cap.max(b.cap))
    }
}

fn order_profile(set: &ElementSet) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().map(Perm::order).collect();
    v.sort_unstable();
    v
}

fn extends_to_isomorphism(
    g: &PermGroup,
    gens: &[Perm],
    images: &[&Perm],
    elements: &ElementSet,
    target_degree: usize,
) -> bool {
    let mut map: HashMap<Perm, Perm> = HashMap::new();
    map.insert(g.identity(), Perm::identity(target_degree));
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[&x].clone();
        for (s, &fs) in gens.iter().zip(images) {
            let y = x.op(s);
            let fy = fx.op(fs);
            match map.get(&y) {
                Some(existing) if *existing != fy => return false,
                Some(_) => {}
                None => {
                    map.insert(y.clone(), fy);
                    queue.push_back(y);
                }
            }
        }
    }
    let distinct: HashSet<&Perm> = map.values().collect();
    map.len() == elements.len() && distinct.len() == elements.len()
}

/// Labels the cosets of a normal subgroup.
#[derive(Debug)]
pub(crate) struct CosetTable {
    label: HashMap<Perm, usize>,
    pub reps: Vec<Perm>,
}

impl CosetTable {
    pub fn build(g: &PermGroup, n: &PermGroup) -> Result<Self, GroupError> {
        let all = g.element_set()?;
        let sub = n.element_set()?;
        let mut label = HashMap::with_capacity(all.len());
        let mut reps = Vec::new();
        for x in all.iter() {
            if label.contains_key(x) {
                continue;
            }
            if reps.len() >= g.cap {
                return Err(GroupError::CapExceeded { cap: g.cap });
            }
            let c = reps.len();
            for h in sub.iter() {
                label.insert(x.op(h), c);
            }
            reps.push(x.clone());
        }
        Ok(Self { label, reps })
    }

    pub fn label_of(&self, x: &Perm) -> usize {
        self.label[x]
    }
}

/// Abelianization together with the class map `g -> g^ab`.
#[derive(Debug)]
pub struct Abelianization {
    pub group: FgAbelianGroup,
    table: CosetTable,
    coords: Vec<Vec<BigInt>>,
}

impl Abelianization {
    /// Cosets of `[g, g]` are explored breadth-first along the generators;
    /// every non-tree edge contributes one relation among the generator
    /// classes, and the relation lattice's cokernel is `g^ab`.
    pub fn compute(g: &PermGroup) -> Result<Self, GroupError> {
        let derived = g.derived_subgroup()?;
        let table = CosetTable::build(g, &derived)?;
        let k = g.generators.len();
        let m = table.reps.len();
        let mut vectors: Vec<Option<Vec<BigInt>>> = vec![None; m];
        let start = table.label_of(&g.identity());
        vectors[start] = Some(vec![BigInt::zero(); k]);
        let mut queue = VecDeque::from([start]);
        let mut relations: HashSet<Vec<BigInt>> = HashSet::new();
        while let Some(c) = queue.pop_front() {
            let v = vectors[c].clone().unwrap();
            for (i, s) in g.generators.iter().enumerate() {
                let next = table.label_of(&table.reps[c].op(s));
                let mut w = v.clone();
                w[i] += 1;
                match &vectors[next] {
                    None => {
                        vectors[next] = Some(w);
                        queue.push_back(next);
                    }
                    Some(existing) => {
                        let rel: Vec<BigInt> = w.iter().zip(existing).map(|(a, b)| a - b).collect();
                        if rel.iter().any(|x| !x.is_zero()) {
                            relations.insert(rel);
                        }
                    }
                }
            }
        }
        let mut rels: Vec<Vec<BigInt>> = relations.into_iter().collect();
        rels.sort();
        let coker = cokernel_map(&IntMatrix::from_columns(k, &rels));
        let coords = vectors
            .into_iter()
            .map(|v| coker.class_of(&v.expect("every coset reached")))
            .collect();
        Ok(Self {
            group: coker.group,
            table,
            coords,
        })
    }

    /// Coordinates of the class of `x` in `group`.
    pub fn class_of(&self, x: &Perm) -> Option<&[BigInt]> {
        self.table.label.get(x).map(|&c| self.coords[c].as_slice())
    }
}

/// Terms `γ_1 ⊇ γ_2 ⊇ ...` and the nilpotency class, `None` when the series
/// stabilizes at a nontrivial term.
#[derive(Clone, Debug)]
pub struct LowerCentralSeries {
    pub terms: Vec<PermGroup>,
    pub class: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named;

    fn p(s: &str, deg: usize) -> Perm {
        Perm::parse(s, Some(deg)).unwrap()
    }

    #[test]
    fn element_counts() {
        let g = PermGroup::new(2, vec![p("(1 2)", 2)]).unwrap();
        assert_eq!(g.order().unwrap(), 2);
        let s3 = PermGroup::new(3, vec![p("(1 2)", 3), p("(1 2 3)", 3)]).unwrap();
        assert_eq!(s3.order().unwrap(), 6);
        assert_eq!(PermGroup::trivial(4).order().unwrap(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let s5 = named::symmetric(5).set_cap(100);
        assert_eq!(s5.order(), Err(GroupError::CapExceeded { cap: 100 }));
        assert_eq!(named::symmetric(5).order().unwrap(), 120);
    }

    #[test]
    fn degree_mismatch_rejected() {
        assert!(PermGroup::new(3, vec![p("(1 2)", 2)]).is_err());
    }

    #[test]
    fn subgroups() {
        let s3 = named::symmetric(3);
        let id = s3.subgroup_generated(&[s3.identity()]).unwrap();
        assert_eq!(id.order().unwrap(), 1);
        let a3 = s3.subgroup_generated(&[p("(1 2 3)", 3)]).unwrap();
        assert_eq!(a3.order().unwrap(), 3);
        let s4 = named::symmetric(4);
        let v4 = s4
            .subgroup_generated(&[p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4), p("(1 4)(2 3)", 4)])
            .unwrap();
        assert_eq!(v4.order().unwrap(), 4);
        assert_eq!(
            a3.subgroup_generated(&[p("(1 2)", 3)]).unwrap_err(),
            GroupError::NotInGroup
        );
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(named::cyclic(6).derived_subgroup().unwrap().order().unwrap(), 1);
        let d = named::symmetric(3).derived_subgroup().unwrap();
        assert_eq!(d.order().unwrap(), 3);
        let q = named::quaternion();
        let d = q.derived_subgroup().unwrap();
        assert_eq!(d.order().unwrap(), 2);
        // brute force: all element-pair commutators of Q8 are {1, -1}
        let els = q.elements().unwrap();
        let comms: HashSet<Perm> = els
            .iter()
            .flat_map(|a| els.iter().map(move |b| Perm::commutator(a, b)))
            .collect();
        assert_eq!(comms.len(), 2);
        assert!(comms.iter().all(|c| d.contains(c).unwrap()));
    }

    #[test]
    fn abelianizations() {
        assert_eq!(named::symmetric(3).abelianization().unwrap(), FgAbelianGroup::cyclic(2));
        assert_eq!(named::cyclic(6).abelianization().unwrap(), FgAbelianGroup::cyclic(6));
        assert_eq!(
            named::klein_four().abelianization().unwrap(),
            FgAbelianGroup::cyclic(2).power(2)
        );
        assert_eq!(
            named::quaternion().abelianization().unwrap(),
            FgAbelianGroup::cyclic(2).power(2)
        );
        assert_eq!(PermGroup::trivial(3).abelianization().unwrap(), FgAbelianGroup::trivial());
    }

    #[test]
    fn central_series() {
        assert_eq!(named::cyclic(4).nilpotency_class().unwrap(), Some(1));
        assert_eq!(named::dihedral(4).nilpotency_class().unwrap(), Some(2));
        assert_eq!(named::quaternion().nilpotency_class().unwrap(), Some(2));
        assert_eq!(named::symmetric(3).nilpotency_class().unwrap(), None);
        assert_eq!(PermGroup::trivial(2).nilpotency_class().unwrap(), Some(0));
        let d4 = named::dihedral(4).lower_central_series().unwrap();
        assert_eq!(d4.terms[1].order().unwrap(), 2);
        let s3 = named::symmetric(3).lower_central_series().unwrap();
        assert_eq!(s3.terms.last().unwrap().order().unwrap(), 3);
    }

    #[test]
    fn quotients() {
        let s3 = named::symmetric(3);
        assert_eq!(s3.quotient_group(&s3).unwrap().order().unwrap(), 1);
        let a3 = s3.derived_subgroup().unwrap();
        assert_eq!(s3.quotient_group(&a3).unwrap().order().unwrap(), 2);
        let not_normal = s3.subgroup_generated(&[p("(1 2)", 3)]).unwrap();
        assert_eq!(s3.quotient_group(&not_normal).unwrap_err(), GroupError::NotNormal);

        let z4 = named::cyclic(4);
        let zz = PermGroup::direct_product(&z4, &z4).unwrap();
        let diag = zz.subgroup_generated(&[p("(1 2 3 4)(5 6 7 8)", 8)]).unwrap();
        let q = zz.quotient_group(&diag).unwrap();
        assert_eq!(q.order().unwrap(), 4);
        assert_eq!(q.abelianization().unwrap(), FgAbelianGroup::cyclic(4));
    }

    #[test]
    fn isomorphism_checks() {
        let s3 = named::symmetric(3);
        let d3 = named::dihedral(3);
        assert!(s3.is_isomorphic(&d3).unwrap());
        assert!(!named::cyclic(6).is_isomorphic(&s3).unwrap());
        assert!(!named::dihedral(4).is_isomorphic(&named::quaternion()).unwrap());
        let z2 = named::cyclic(2);
        assert!(named::klein_four()
            .is_isomorphic(&PermGroup::direct_product(&z2, &z2).unwrap())
            .unwrap());
        assert!(PermGroup::trivial(1).is_isomorphic(&PermGroup::trivial(3)).unwrap());
    }
}
