//! Small named groups as permutation groups.

use super::{Perm, PermGroup};

fn group(degree: usize, gens: Vec<Perm>) -> PermGroup {
    PermGroup::new(degree, gens).expect("generators have the declared degree")
}

fn cycle(degree: usize, points: &[usize]) -> Perm {
    Perm::cycle(degree, points).expect("valid cycle")
}

pub fn trivial() -> PermGroup {
    PermGroup::trivial(1)
}

/// `Z/n` as the span of one `n`-cycle.
pub fn cyclic(n: usize) -> PermGroup {
    let n = n.max(1);
    let points: Vec<usize> = (0..n).collect();
    group(n, vec![cycle(n, &points)])
}

/// `S_n` generated by `(1 2)` and `(1 2 ... n)`.
pub fn symmetric(n: usize) -> PermGroup {
    let n = n.max(1);
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let points: Vec<usize> = (0..n).collect();
    group(n, vec![Perm::transposition(n, 0, 1), cycle(n, &points)])
}

/// `{e, (1 2)(3 4), (1 3)(2 4), (1 4)(2 3)}`.
pub fn klein_four() -> PermGroup {
    group(
        4,
        vec![
            Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
        ],
    )
}

/// Dihedral group of order `2m` acting on the vertices of an `m`-gon.
pub fn dihedral(m: usize) -> PermGroup {
    assert!(m >= 3, "dihedral group needs m >= 3");
    let rotation: Vec<usize> = (0..m).collect();
    let reflection = Perm::from_images((0..m).map(|i| (m - i) % m).collect()).unwrap();
    group(m, vec![cycle(m, &rotation), reflection])
}

/// Quaternion group in its regular representation on 8 points.
///
/// Points are `±1, ±i, ±j, ±k` encoded as `sign * 4 + unit`; the generators
/// act by left multiplication with `i` and `j`.
pub fn quaternion() -> PermGroup {
    // unit products: UNIT_MUL[a][b] = (sign, unit) for basis units 1,i,j,k
    const UNIT_MUL: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let left = |unit: usize| {
        let images = (0..8)
            .map(|p| {
                let (neg, u) = (p >= 4, p % 4);
                let (s, w) = UNIT_MUL[unit][u];
                if neg ^ s {
                    4 + w
                } else {
                    w
                }
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    group(8, vec![left(1), left(2)])
}

/// Looks up one of the short names accepted on the command line:
/// `trivial`, `z<n>`, `s<n>`, `d<m>` (order `2m`), `v4`, `q8`.
pub fn by_name(name: &str) -> Option<PermGroup> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "trivial" | "1" => return Some(trivial()),
        "v4" | "klein" => return Some(klein_four()),
        "q8" => return Some(quaternion()),
        _ => {}
    }
    let (head, tail) = lower.split_at(1);
    let k: usize = tail.parse().ok()?;
    match head {
        "z" | "c" if k >= 1 => Some(cyclic(k)),
        "s" if (1..=8).contains(&k) => Some(symmetric(k)),
        "d" if k >= 3 => Some(dihedral(k)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GroupElement;

    #[test]
    fn orders() {
        assert_eq!(trivial().order().unwrap(), 1);
        assert_eq!(cyclic(4).order().unwrap(), 4);
        assert_eq!(symmetric(4).order().unwrap(), 24);
        assert_eq!(klein_four().order().unwrap(), 4);
        assert_eq!(dihedral(4).order().unwrap(), 8);
        assert_eq!(quaternion().order().unwrap(), 8);
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion();
        let (i, j) = (&q.generators()[0], &q.generators()[1]);
        let minus_one = i.op(i);
        assert_eq!(minus_one, j.op(j));
        assert_eq!(minus_one, i.op(j).op(&i.op(j)));
        assert!(!minus_one.is_identity());
        assert!(minus_one.op(&minus_one).is_identity());
        // exactly one element of order 2
        let involutions = q.elements().unwrap().iter().filter(|p| p.order() == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn names() {
        assert_eq!(by_name("S3").unwrap().order().unwrap(), 6);
        assert_eq!(by_name("d4").unwrap().order().unwrap(), 8);
        assert_eq!(by_name("z6").unwrap().order().unwrap(), 6);
        assert!(by_name("x2").is_none());
        assert!(by_name("z").is_none());
    }
}
