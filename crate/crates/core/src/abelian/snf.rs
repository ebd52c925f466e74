//! Smith normal form over the integers.
//!
//! Elementary row and column operations with a smallest-nonzero-pivot
//! strategy. Both transforms and their inverses are accumulated so callers
//! can move between the original and diagonal coordinates without a second
//! inversion pass.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u * m * v == s` with `u`, `v` unimodular and `s` diagonal, non-negative,
/// each diagonal entry dividing the next (zeros last).
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `s[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of the smallest nonzero |entry| in the block `[t.., t..]`.
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    let is_one = ax == BigInt::from(1);
                    best = Some((i, j, ax));
                    if is_one {
                        break;
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Smallest nonzero entry in row t / column t outside the pivot.
    fn smallest_in_cross(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        let mut consider = |i: usize, j: usize, x: &BigInt| {
            if !x.is_zero() {
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    best = Some((i, j, ax));
                }
            }
        };
        for i in t + 1..self.a.rows() {
            consider(i, t, &self.a[(i, t)]);
        }
        for j in t + 1..self.a.cols() {
            consider(t, j, &self.a[(t, j)]);
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Clears row t and column t, leaving a pivot that divides the rest of
    /// the trailing block.
    fn reduce_pivot(&mut self, t: usize) {
        loop {
            // Division pass over the cross.
            let p = self.a[(t, t)].clone();
            for i in t + 1..self.a.rows() {
                if !self.a[(i, t)].is_zero() {
                    let q = self.a[(i, t)].div_floor(&p);
                    self.add_row(i, t, &-q);
                }
            }
            for j in t + 1..self.a.cols() {
                if !self.a[(t, j)].is_zero() {
                    let q = self.a[(t, j)].div_floor(&p);
                    self.add_col(j, t, &-q);
                }
            }
            if let Some((i, j)) = self.smallest_in_cross(t) {
                // A remainder smaller than the pivot survived: promote it.
                if i != t {
                    self.swap_rows(t, i);
                } else {
                    self.swap_cols(t, j);
                }
                continue;
            }
            // Cross is clear; enforce divisibility of the trailing block.
            let p = self.a[(t, t)].clone();
            let bad_row = (t + 1..self.a.rows())
                .find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(&p)));
            match bad_row {
                Some(i) => {
                    self.add_row(t, i, &BigInt::from(1));
                }
                None => break,
            }
        }
        if self.a[(t, t)].is_negative() {
            self.negate_row(t);
        }
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut r = Reducer {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        let Some((i, j)) = r.smallest_in_block(t) else {
            break;
        };
        r.swap_rows(t, i);
        r.swap_cols(t, j);
        r.reduce_pivot(t);
    }
    SmithForm {
        u: r.u,
        s: r.a,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(m: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(m);
        assert_eq!(&(&f.u * m) * &f.v, f.s);
        assert_eq!(&f.u * &f.u_inv, IntMatrix::identity(m.rows()));
        assert_eq!(&f.v * &f.v_inv, IntMatrix::identity(m.cols()));
        f
    }

    #[test]
    fn identity_is_fixed() {
        let f = check(&IntMatrix::identity(2));
        assert_eq!(f.s, IntMatrix::identity(2));
        assert_eq!(f.u, IntMatrix::identity(2));
        assert_eq!(f.v, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two_example() {
        let f = check(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(f.s, IntMatrix::from_rows(&[[2, 0], [0, 4]]));
    }

    #[test]
    fn zero_and_empty() {
        let f = check(&IntMatrix::zeros(1, 3));
        assert!(f.s.is_zero());
        let f = check(&IntMatrix::zeros(0, 2));
        assert_eq!(f.s.rows(), 0);
        let f = check(&IntMatrix::zeros(3, 0));
        assert_eq!(f.u, IntMatrix::identity(3));
    }

    #[test]
    fn negative_and_rectangular() {
        let f = check(&IntMatrix::from_rows(&[[-3, 0, 6], [0, 9, -12]]));
        assert_eq!(f.diagonal(), vec![BigInt::from(3), BigInt::from(3)]);
        let f = check(&IntMatrix::from_rows(&[[4], [6]]));
        assert_eq!(f.diagonal(), vec![BigInt::from(2)]);
        assert_eq!(f.rank(), 1);
    }

    #[test]
    fn coprime_diagonal_merges() {
        let f = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(f.diagonal(), vec![BigInt::one(), BigInt::from(6)]);
    }
}
