mod oracle;

use std::collections::HashSet;

use kgroup::abelian::FgAbelianGroup;
use kgroup::kernel::{
    k_group_abelian, k_group_finite, ktilde_structure, phi, recover_quotient, verify_phi_relators, EElement,
    GroupOrder, TupleElement, VerifyOptions,
};
use kgroup::perm::{named, Perm, PermGroup};
use kgroup::words::{generate_snd_relators, SndOptions, Word};
use kgroup::{ConstructionError, GroupElement};
use num_bigint::BigInt;
use proptest::prelude::*;

fn suite() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("Z/2", named::cyclic(2)),
        ("Z/4", named::cyclic(4)),
        ("V4", named::klein_four()),
        ("S3", named::symmetric(3)),
        ("D4", named::dihedral(4)),
        ("Q8", named::quaternion()),
    ]
}

#[test]
fn order_formula_by_tuple_enumeration() {
    for (name, g) in suite() {
        let elements = g.elements().unwrap();
        let derived: HashSet<Perm> = oracle::derived_by_pairs(&elements);
        let ab = g.abelianization().unwrap().order().unwrap();
        for n in [3, 4] {
            let k = k_group_finite(&g, n).unwrap();
            let brute = oracle::count_tuples_with_product_in(&elements, &derived, n);
            assert_eq!(k.group().order().unwrap(), brute, "{name}, n = {n}");
            assert_eq!(
                BigInt::from(brute) * &ab,
                num_traits::pow(BigInt::from(elements.len()), n),
                "{name}, n = {n}"
            );
        }
    }
}

#[test]
fn realized_kernel_is_the_product_kernel() {
    for (name, g) in suite() {
        let derived: HashSet<Perm> = g.derived_subgroup().unwrap().elements().unwrap().into_iter().collect();
        let k = k_group_finite(&g, 3).unwrap();
        for x in k.group().elements().unwrap() {
            let t = k.to_tuple(&x);
            assert!(derived.contains(&t.product(&g.identity())), "{name}");
            assert_eq!(k.embed(&t).unwrap(), x);
        }
    }
}

#[test]
fn first_projection_is_surjective() {
    for (name, g) in suite() {
        let k = k_group_finite(&g, 3).unwrap();
        let firsts: HashSet<Perm> = k
            .group()
            .elements()
            .unwrap()
            .iter()
            .map(|x| k.to_tuple(x).coords()[0].clone())
            .collect();
        assert_eq!(firsts.len(), g.order().unwrap(), "{name}");
        // witnessed by (g, g^-1, 1)
        for x in g.elements().unwrap() {
            let t = TupleElement::new(vec![x.clone(), x.inverse(), g.identity()]);
            assert!(k.group().contains(&k.embed(&t).unwrap()).unwrap(), "{name}");
        }
    }
}

#[test]
fn abelianization_is_coherent() {
    for (name, g) in suite() {
        for n in [3, 4] {
            let k = k_group_finite(&g, n).unwrap();
            let gab = g.abelianization().unwrap();
            let expected = k_group_abelian(&gab, n).unwrap();
            assert_eq!(expected, gab.power(n - 1));
            assert_eq!(k.group().abelianization().unwrap(), expected, "{name}, n = {n}");
        }
    }
}

#[test]
fn invariant_under_coordinate_permutations() {
    for (name, g) in suite() {
        for n in [3, 4] {
            let k = k_group_finite(&g, n).unwrap();
            for sigma in Perm::all(n) {
                for x in k.group().generators() {
                    assert!(k.group().contains(&k.act(&sigma, x)).unwrap(), "{name}, n = {n}");
                }
            }
        }
    }
}

#[test]
fn nilpotency_class_is_preserved() {
    for (name, g, class) in [
        ("Z/4", named::cyclic(4), 1),
        ("D4", named::dihedral(4), 2),
        ("Q8", named::quaternion(), 2),
    ] {
        assert_eq!(g.nilpotency_class().unwrap(), Some(class));
        let k = k_group_finite(&g, 3).unwrap();
        assert_eq!(k.group().nilpotency_class().unwrap(), Some(class), "{name}");
    }
}

#[test]
fn quotient_recovers_the_group() {
    for (name, g) in suite() {
        let r = recover_quotient(&g, 3).unwrap();
        assert_eq!(r.order, g.order().unwrap(), "{name}");
        assert_eq!(r.abelianization, g.abelianization().unwrap(), "{name}");
        assert!(r.matches(&g, 8).unwrap(), "{name}");
    }
    let r = recover_quotient(&named::symmetric(3), 4).unwrap();
    assert!(r.matches(&named::symmetric(3), 8).unwrap());
}

#[test]
fn small_n_is_rejected() {
    assert!(matches!(
        k_group_finite(&named::cyclic(2), 2),
        Err(ConstructionError::SmallN { n: 2, .. })
    ));
    assert!(k_group_abelian(&FgAbelianGroup::cyclic(2), 1).is_err());
}

#[test]
fn phi_kills_every_relator() {
    for (n, d) in [(5, 1), (5, 2), (5, 3), (6, 2)] {
        let report = verify_phi_relators(n, d, &VerifyOptions::default()).unwrap();
        assert!(report.all_identity, "n = {n}, d = {d}: {:?}", report.failures.first());
        assert!(report.failures.is_empty());
        let expected = generate_snd_relators(n, d, &SndOptions::default()).unwrap().len();
        assert_eq!(report.relator_count, expected);
    }
}

#[test]
fn phi_below_the_isomorphism_range() {
    assert!(verify_phi_relators(4, 2, &VerifyOptions::default()).is_err());
    let opts = VerifyOptions {
        allow_small_n: true,
        ..Default::default()
    };
    let report = verify_phi_relators(4, 2, &opts).unwrap();
    assert_eq!(report.n, 4);
}

#[test]
fn phi_of_single_relator() {
    let rels = generate_snd_relators(5, 2, &SndOptions::default()).unwrap();
    let r = rels.iter().find(|r| r.label == "<s2, (2 3)>").unwrap();
    assert!(phi(&r.word).is_identity());
    let s2 = rels.iter().find(|r| r.label == "s2^2").unwrap();
    assert!(phi(&s2.word).is_identity());
}

#[test]
fn ktilde_orders() {
    for m in 1i64..=6 {
        let a = FgAbelianGroup::cyclic(m);
        let d = ktilde_structure(&a, 4).unwrap();
        assert_eq!(d.exact_iso, Some(a.power(3)));
        assert_eq!(d.order, GroupOrder::Finite(BigInt::from(m.pow(3))));
    }
    let a = FgAbelianGroup::from_cyclic_factors([BigInt::from(2), BigInt::from(6)], 0);
    let d = ktilde_structure(&a, 3).unwrap();
    assert_eq!(d.h2, FgAbelianGroup::cyclic(2));
    assert_eq!(d.order, GroupOrder::Finite(BigInt::from(144 * 2)));
    assert!(d.exact_iso.is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn semidirect_product_is_associative(
        raw in proptest::collection::vec(
            (proptest::collection::vec((0usize..2, -2i64..=2), 0..4), Just((0..4usize).collect::<Vec<_>>()).prop_shuffle()),
            3,
        ),
    ) {
        let names = ["a", "b"];
        let elems: Vec<EElement<Word>> = raw
            .iter()
            .map(|(w, images)| {
                let coords = (0..4)
                    .map(|i| kgroup::words::reduce(w.iter().map(|&(g, e)| (names[(g + i) % 2], e))))
                    .collect();
                EElement::new(TupleElement::new(coords), Perm::from_images(images.clone()).unwrap()).unwrap()
            })
            .collect();
        let (x, y, z) = (&elems[0], &elems[1], &elems[2]);
        let left = x.multiply(y).unwrap().multiply(z).unwrap();
        let right = x.multiply(&y.multiply(z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(x.multiply(&x.inverse()).unwrap().is_identity());
    }

    #[test]
    fn tuple_product_class_is_additive(
        a in proptest::collection::vec(0i64..4, 3),
        b in proptest::collection::vec(0i64..4, 3),
    ) {
        let z4 = named::cyclic(4);
        let c = z4.generators()[0].clone();
        let psi = kgroup::kernel::Psi::new(&z4).unwrap();
        let mk = |v: &[i64]| TupleElement::new(v.iter().map(|&e| c.pow(e)).collect());
        let (ta, tb) = (mk(&a), mk(&b));
        let sum = psi.apply(&ta.multiply(&tb).unwrap()).unwrap();
        let expected = (a.iter().sum::<i64>() + b.iter().sum::<i64>()).rem_euclid(4);
        prop_assert_eq!(sum, vec![BigInt::from(expected)]);
    }
}
