//! Brute-force reference computations. They only use `Perm` products and
//! plain integer arithmetic, never the library's normal-form machinery.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use kgroup::abelian::{FgAbelianGroup, IntMatrix};
use kgroup::perm::Perm;
use kgroup::GroupElement;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Closure of `gens` under products, by breadth-first search.
pub fn closure(identity: &Perm, gens: &[Perm]) -> Vec<Perm> {
    let mut seen: HashSet<Perm> = HashSet::from([identity.clone()]);
    let mut out = vec![identity.clone()];
    let mut queue = VecDeque::from([identity.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.op(g);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

/// Subgroup generated by all commutators of element pairs.
pub fn derived_by_pairs(elements: &[Perm]) -> HashSet<Perm> {
    let comms: HashSet<Perm> = elements
        .iter()
        .flat_map(|a| elements.iter().map(move |b| Perm::commutator(a, b)))
        .collect();
    let comms: Vec<Perm> = comms.into_iter().collect();
    closure(&elements[0].op(&elements[0].inverse()), &comms).into_iter().collect()
}

/// Number of `n`-tuples over `elements` whose ordered product lies in `sub`.
pub fn count_tuples_with_product_in(elements: &[Perm], sub: &HashSet<Perm>, n: usize) -> usize {
    fn go(elements: &[Perm], sub: &HashSet<Perm>, left: usize, acc: &Perm) -> usize {
        if left == 0 {
            return usize::from(sub.contains(acc));
        }
        elements.iter().map(|g| go(elements, sub, left - 1, &acc.op(g))).sum()
    }
    let id = elements[0].op(&elements[0].inverse());
    go(elements, sub, n, &id)
}

/// `#{x in A : k x = 0}` for `k = 1..=kmax`, read off the invariant factors.
pub fn torsion_counts(a: &FgAbelianGroup, kmax: u64) -> Vec<BigInt> {
    (1..=kmax)
        .map(|k| {
            a.torsion()
                .iter()
                .fold(BigInt::from(1), |acc, d| acc * d.gcd(&BigInt::from(k)))
        })
        .collect()
}

/// The same counts for an explicit finite abelian group, given as a set of
/// elements of `Z/m_1 + ... + Z/m_r` (coordinate vectors).
pub fn torsion_counts_of_elements(elements: &[Vec<u64>], moduli: &[u64], kmax: u64) -> Vec<BigInt> {
    (1..=kmax)
        .map(|k| {
            let c = elements
                .iter()
                .filter(|x| x.iter().zip(moduli).all(|(xi, m)| (xi * k) % m == 0))
                .count();
            BigInt::from(c)
        })
        .collect()
}

/// All vectors of `Z/m_1 + ... + Z/m_r`.
pub fn all_vectors(moduli: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &m in moduli {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..m).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Kernel of `(Z/d)^m -> Z/t`, sum of reductions, by enumeration.
pub fn kappa_kernel_elements(d: u64, t: u64, m: usize) -> Vec<Vec<u64>> {
    all_vectors(&vec![d; m])
        .into_iter()
        .filter(|x| x.iter().sum::<u64>() % t == 0)
        .collect()
}

/// Determinant by cofactor expansion.
pub fn det_cofactor(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[(0, j)].is_zero() {
            continue;
        }
        let minor_rows: Vec<Vec<i64>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[(i, c)].to_i64().unwrap()).collect())
            .collect();
        let minor = if n == 1 {
            IntMatrix::zeros(0, 0)
        } else {
            IntMatrix::from_rows(&minor_rows)
        };
        let term = &m[(0, j)] * det_cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Rank over the rationals by fraction-free elimination on `i128`.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..a.len() {
            let (f, g) = (a[i][c], a[rank][c]);
            let pivot = a[rank].clone();
            for (x, y) in a[i].iter_mut().zip(&pivot) {
                *x = *x * g - y * f;
            }
            let gcd = a[i].iter().fold(0i128, |acc, &x| acc.gcd(&x));
            if gcd > 1 {
                a[i].iter_mut().for_each(|x| *x /= gcd);
            }
        }
        rank += 1;
    }
    rank
}

/// `Z^r / span(columns)` for a full-rank integer matrix: elements of
/// `(Z/N)^r / (span mod N)` where `N` is the absolute determinant of a
/// nonsingular `r x r` column minor (so `N Z^r` lies in the span).
/// Returns `(order, torsion counts for k = 1..=kmax)` or `None` if the
/// enumeration would exceed `limit` points.
pub fn finite_cokernel_counts(rows: &[Vec<i64>], kmax: u64, limit: usize) -> Option<(usize, Vec<BigInt>)> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    let columns: Vec<Vec<i64>> = (0..c).map(|j| (0..r).map(|i| rows[i][j]).collect()).collect();
    if r > c {
        return None;
    }
    // smallest nonzero |det| over r-subsets of columns
    let best = combinations(c, r)
        .into_iter()
        .map(|subset| {
            let sub: Vec<Vec<i64>> = (0..r).map(|i| subset.iter().map(|&j| rows[i][j]).collect()).collect();
            det_cofactor(&IntMatrix::from_rows(&sub)).abs().to_u64().unwrap()
        })
        .filter(|&d| d != 0)
        .min();
    let n = best?;
    if (n as usize).checked_pow(r as u32)? > limit {
        return None;
    }
    let moduli = vec![n; r];
    // span mod N by closure
    let reduce = |v: Vec<i64>| -> Vec<u64> { v.into_iter().map(|x| x.rem_euclid(n as i64) as u64).collect() };
    let gens: Vec<Vec<u64>> = columns.into_iter().map(reduce).collect();
    let zero = vec![0u64; r];
    let mut span: HashSet<Vec<u64>> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y: Vec<u64> = x.iter().zip(g).map(|(a, b)| (a + b) % n).collect();
            if span.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let all = all_vectors(&moduli);
    let order = all.len() / span.len();
    let counts = (1..=kmax)
        .map(|k| {
            let killed = all
                .iter()
                .filter(|x| span.contains(&x.iter().map(|v| (v * k) % n).collect::<Vec<u64>>()))
                .count();
            BigInt::from(killed / span.len())
        })
        .collect();
    Some((order, counts))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out.sort();
    out
}
