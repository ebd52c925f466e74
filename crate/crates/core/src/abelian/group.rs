use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::AbelianError;

/// A finitely generated abelian group `Z/d_1 + ... + Z/d_t + Z^r` in
/// invariant-factor form: every `d_i >= 2` and `d_i | d_{i+1}`.
///
/// Generators are ordered torsion first, then free. Equality is structural
/// on the normalized factors, i.e. abstract isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup")]
pub struct FgAbelianGroup {
    #[serde(with = "crate::serde_int::vec")]
    torsion: Vec<BigInt>,
    free_rank: usize,
}

#[derive(Deserialize)]
struct RawGroup {
    #[serde(with = "crate::serde_int::vec")]
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl TryFrom<RawGroup> for FgAbelianGroup {
    type Error = String;

    fn try_from(raw: RawGroup) -> Result<Self, String> {
        let g = FgAbelianGroup::from_cyclic_factors(raw.torsion.iter().cloned(), raw.free_rank);
        if g.torsion != raw.torsion {
            return Err("torsion coefficients are not in invariant-factor form".into());
        }
        Ok(g)
    }
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        Self {
            torsion: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn free(rank: usize) -> Self {
        Self {
            torsion: Vec::new(),
            free_rank: rank,
        }
    }

    /// `Z/d`; `d = 0` gives `Z` and `d = ±1` the trivial group.
    pub fn cyclic(d: impl Into<BigInt>) -> Self {
        Self::from_cyclic_factors([d.into()], 0)
    }

    /// Normalizes an arbitrary direct sum of cyclic groups `Z/a_i` plus `Z^free`.
    /// Factors equal to 0 count as copies of `Z`; signs are ignored.
    pub fn from_cyclic_factors<I: IntoIterator<Item = BigInt>>(factors: I, free: usize) -> Self {
        let mut free_rank = free;
        let mut t: Vec<BigInt> = Vec::new();
        for a in factors {
            let a = a.abs();
            if a.is_zero() {
                free_rank += 1;
            } else if !a.is_one() {
                t.push(a);
            }
        }
        t.sort();
        if !t.windows(2).all(|w| w[1].is_multiple_of(&w[0])) {
            // (a, b) -> (gcd, lcm) sweeps; after pass i, t[i] divides every later entry.
            for i in 0..t.len() {
                for j in i + 1..t.len() {
                    if t[j].is_multiple_of(&t[i]) {
                        continue;
                    }
                    let g = t[i].gcd(&t[j]);
                    let l = &t[i] / &g * &t[j];
                    t[i] = g;
                    t[j] = l;
                }
            }
            t.retain(|x| !x.is_one());
        }
        Self {
            torsion: t,
            free_rank,
        }
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn generator_count(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// At most one invariant factor (finite or infinite cyclic).
    pub fn is_cyclic(&self) -> bool {
        self.generator_count() <= 1
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    /// Exponent of the torsion subgroup (1 when torsion-free).
    pub fn torsion_exponent(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// Order of each generator; 0 marks a free generator.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        self.torsion
            .iter()
            .cloned()
            .chain(std::iter::repeat_n(BigInt::zero(), self.free_rank))
            .collect()
    }

    /// Relation matrix: one column `d_i e_i` per torsion generator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.generator_count();
        let mut m = IntMatrix::zeros(n, self.torsion.len());
        for (i, d) in self.torsion.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_cyclic_factors(
            self.torsion.iter().chain(&other.torsion).cloned(),
            self.free_rank + other.free_rank,
        )
    }

    /// `self^copies`.
    pub fn power(&self, copies: usize) -> Self {
        let torsion = (0..copies).flat_map(|_| self.torsion.iter().cloned());
        Self::from_cyclic_factors(torsion, self.free_rank * copies)
    }

    /// Canonical representative: torsion coordinates reduced into `[0, d_i)`.
    pub fn reduce_element(&self, x: &[BigInt]) -> Result<Vec<BigInt>, AbelianError> {
        if x.len() != self.generator_count() {
            return Err(AbelianError::ElementShape {
                expected: self.generator_count(),
                found: x.len(),
            });
        }
        Ok(x.iter()
            .zip(self.generator_orders())
            .map(|(c, d)| if d.is_zero() { c.clone() } else { c.mod_floor(&d) })
            .collect())
    }

    /// Order of an element, `None` if it has infinite order.
    pub fn element_order(&self, x: &[BigInt]) -> Result<Option<BigInt>, AbelianError> {
        let x = self.reduce_element(x)?;
        let mut order = BigInt::one();
        for (c, d) in x.iter().zip(self.generator_orders()) {
            if c.is_zero() {
                continue;
            }
            if d.is_zero() {
                return Ok(None);
            }
            order = order.lcm(&(&d / c.gcd(&d)));
        }
        Ok(Some(order))
    }
}

impl Default for FgAbelianGroup {
    fn default() -> Self {
        Self::trivial()
    }
}

impl fmt::Display for FgAbelianGroup {
    /// `(Z/5)^23 + Z/10 + Z^4`; the trivial group prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            parts.push(if run == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{run}")
            });
            i += run;
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        f.write_str(&parts.join(" + "))
    }
}

/// The quotient `Z^r / im(m)` together with the coordinate map into it.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub group: FgAbelianGroup,
    /// `group.generator_count() x r` matrix sending a vector of `Z^r` to
    /// (unreduced) coordinates in `group`.
    pub projection: IntMatrix,
}

impl Cokernel {
    /// Reduced coordinates of the class of `x`.
    pub fn class_of(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.group
            .reduce_element(&self.projection.mul_vec(x))
            .expect("projection shape matches group")
    }
}

/// Cokernel with its projection map.
pub fn cokernel_map(m: &IntMatrix) -> Cokernel {
    let r = m.rows();
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let mut torsion_rows = Vec::new();
    let mut torsion = Vec::new();
    let mut free_rows = Vec::new();
    for i in 0..r {
        match diag.get(i) {
            Some(d) if d.is_zero() => free_rows.push(i),
            None => free_rows.push(i),
            Some(d) if d.is_one() => {}
            Some(d) => {
                torsion_rows.push(i);
                torsion.push(d.clone());
            }
        }
    }
    let rows: Vec<usize> = torsion_rows.iter().chain(&free_rows).copied().collect();
    let mut projection = IntMatrix::zeros(rows.len(), r);
    for (k, &i) in rows.iter().enumerate() {
        for j in 0..r {
            projection[(k, j)] = snf.u[(i, j)].clone();
        }
    }
    // SNF diagonals already form a divisibility chain, so no renormalization.
    let group = FgAbelianGroup {
        torsion,
        free_rank: free_rows.len(),
    };
    Cokernel { group, projection }
}

/// `Z^rows / column space of m`, in invariant-factor form.
pub fn cokernel(m: &IntMatrix) -> FgAbelianGroup {
    cokernel_map(m).group
}

/// A homomorphism between finitely generated abelian groups, given on
/// generators: column `j` holds the target coordinates of source generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbHom {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    matrix: IntMatrix,
}

impl AbHom {
    pub fn new(
        source: FgAbelianGroup,
        target: FgAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<Self, AbelianError> {
        let (rows, cols) = (target.generator_count(), source.generator_count());
        if matrix.rows() != rows || matrix.cols() != cols {
            return Err(AbelianError::HomShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: rows,
                expected_cols: cols,
            });
        }
        let target_orders = target.generator_orders();
        for (j, d) in source.torsion.iter().enumerate() {
            for (i, t) in target_orders.iter().enumerate() {
                let image = d * &matrix[(i, j)];
                let ok = if t.is_zero() {
                    image.is_zero()
                } else {
                    image.is_multiple_of(t)
                };
                if !ok {
                    return Err(AbelianError::TorsionNotRespected {
                        generator: j,
                        order: d.to_string(),
                    });
                }
            }
        }
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    /// `(Z/d)^m -> Z/t`, `(x_1..x_m) -> sum of reductions mod t`; needs `t | d`.
    pub fn reduction_sum(d: &BigInt, t: &BigInt, m: usize) -> Result<Self, AbelianError> {
        if t.is_zero() || (!d.is_zero() && !d.is_multiple_of(t)) {
            return Err(AbelianError::NotADivisor {
                divisor: t.to_string(),
                modulus: d.to_string(),
            });
        }
        let source = FgAbelianGroup::cyclic(d.clone()).power(m);
        let target = FgAbelianGroup::cyclic(t.clone());
        let ones = if target.is_trivial() { 0 } else { 1 };
        let cols = source.generator_count();
        let matrix = IntMatrix::new(ones, cols, vec![BigInt::one(); ones * cols])?;
        Self::new(source, target, matrix)
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Result<Vec<BigInt>, AbelianError> {
        let x = self.source.reduce_element(x)?;
        self.target.reduce_element(&self.matrix.mul_vec(&x))
    }
}

/// Integer kernel of `m` as columns spanning `{x : m x = 0}`.
fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let cols: Vec<Vec<BigInt>> = (rank..m.cols()).map(|j| snf.v.column(j)).collect();
    IntMatrix::from_columns(m.cols(), &cols)
}

/// Abstract type of `ker f`.
///
/// The lattice `L = {x in Z^a : f x in im(target relations)}` is found as
/// the projection of the integer kernel of `[M | T]`; then
/// `ker f = L / im(source relations)`, computed in a basis of `L`.
pub fn hom_kernel(f: &AbHom) -> FgAbelianGroup {
    let a = f.source.generator_count();
    let augmented = f.matrix.hconcat(&f.target.relation_matrix());
    let spanning = integer_kernel(&augmented).row_block(0, a);

    // Basis of L: columns s_i * u_inv[:, i] of the SNF of the spanning set.
    let snf = smith_normal_form(&spanning);
    let diag = snf.diagonal();
    let rank = snf.rank();

    // Coordinates of each source relation in that basis.
    let relations = f.source.relation_matrix();
    let mut coords = IntMatrix::zeros(rank, relations.cols());
    for j in 0..relations.cols() {
        let r = relations.column(j);
        let ur = snf.u.mul_vec(&r);
        for i in 0..rank {
            debug_assert!(ur[i].is_multiple_of(&diag[i]));
            coords[(i, j)] = &ur[i] / &diag[i];
        }
        debug_assert!(ur[rank..].iter().all(Zero::is_zero));
    }
    cokernel(&coords)
}

/// Second exterior power `Λ²A`, which is `H_2(A, Z)` for abelian `A`.
pub fn exterior_square(a: &FgAbelianGroup) -> FgAbelianGroup {
    let t = &a.torsion;
    let r = a.free_rank;
    let mut factors = Vec::new();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            factors.push(t[i].gcd(&t[j]));
        }
    }
    for d in t {
        factors.extend(std::iter::repeat_n(d.clone(), r));
    }
    FgAbelianGroup::from_cyclic_factors(factors, r * r.saturating_sub(1) / 2)
}

/// `A / N` for the cyclic subgroup `N = <generator>`.
pub fn quotient_by_element(a: &FgAbelianGroup, generator: &[BigInt]) -> Result<FgAbelianGroup, AbelianError> {
    let g = a.reduce_element(generator)?;
    let rel = a.relation_matrix();
    let col = IntMatrix::from_columns(a.generator_count(), &[g]);
    Ok(cokernel(&rel.hconcat(&col)))
}

/// `A^copies / Δ(N)` where `N = <generator>` and `Δ` is the diagonal embedding.
///
/// Uses `A^copies / Δ(N) ≅ A^(copies-1) + A/N`, so only the small quotient
/// `A/N` needs a normal-form computation.
pub fn quotient_by_diagonal(
    a: &FgAbelianGroup,
    copies: usize,
    generator: &[BigInt],
) -> Result<FgAbelianGroup, AbelianError> {
    if copies < 2 {
        return Err(AbelianError::TooFewCopies(copies));
    }
    let tail = quotient_by_element(a, generator)?;
    Ok(a.power(copies - 1).direct_sum(&tail))
}

/// Same quotient by a single normal form over the full `copies * gens`
/// relation matrix. Slow for many copies; kept as an independent route.
pub fn quotient_by_diagonal_direct(
    a: &FgAbelianGroup,
    copies: usize,
    generator: &[BigInt],
) -> Result<FgAbelianGroup, AbelianError> {
    if copies < 2 {
        return Err(AbelianError::TooFewCopies(copies));
    }
    let g = a.reduce_element(generator)?;
    let k = a.generator_count();
    let orders = a.generator_orders();
    let mut columns = Vec::new();
    for c in 0..copies {
        for (i, d) in orders.iter().enumerate() {
            if !d.is_zero() {
                let mut v = vec![BigInt::zero(); k * copies];
                v[c * k + i] = d.clone();
                columns.push(v);
            }
        }
    }
    columns.push((0..copies).flat_map(|_| g.iter().cloned()).collect());
    Ok(cokernel(&IntMatrix::from_columns(k * copies, &columns)))
}
