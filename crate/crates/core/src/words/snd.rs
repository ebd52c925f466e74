//! Relators of `S_n(d) = (S_d * Sym(n)) / R`, where `S_d` is free on
//! `s_1..s_d` and `psi` sends every `s_i` to `(1 2)`.

use std::fmt;

use thiserror::Error;

use crate::perm::Perm;
use crate::GroupElement;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SndError {
    #[error("S_n(d) needs n >= 3, got {0}")]
    SmallN(usize),
    #[error("S_n(d) needs d >= 1, got {0}")]
    SmallD(usize),
    #[error("n = {0} needs an explicit sigma range: full enumeration of Sym(n) is only automatic up to n = 6")]
    SigmaTooLarge(usize),
}

/// A letter of the free product: a power of some `s_i` or a permutation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ELetter {
    /// `s_index^exp`, `index` is 1-based.
    S { index: usize, exp: i64 },
    P(Perm),
}

/// A word in `S_d * Sym(n)` in free-product normal form: adjacent
/// permutations are multiplied, identity permutations dropped and adjacent
/// powers of the same `s_i` merged.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EWord {
    degree: usize,
    letters: Vec<ELetter>,
}

impl EWord {
    pub fn identity(degree: usize) -> Self {
        Self {
            degree,
            letters: Vec::new(),
        }
    }

    pub fn s(index: usize, degree: usize) -> Self {
        Self {
            degree,
            letters: vec![ELetter::S { index, exp: 1 }],
        }
    }

    pub fn perm(p: Perm) -> Self {
        let mut w = Self::identity(p.degree());
        w.push(ELetter::P(p));
        w
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[ELetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, letter: ELetter) {
        match letter {
            ELetter::S { exp: 0, .. } => {}
            ELetter::P(ref p) if p.is_identity() => {}
            ELetter::S { index, exp } => {
                if let Some(ELetter::S { index: i, exp: e }) = self.letters.last_mut() {
                    if *i == index {
                        *e += exp;
                        if *e == 0 {
                            self.letters.pop();
                        }
                        return;
                    }
                }
                self.letters.push(ELetter::S { index, exp });
            }
            ELetter::P(p) => {
                if let Some(ELetter::P(q)) = self.letters.last_mut() {
                    let r = q.op(&p);
                    if r.is_identity() {
                        self.letters.pop();
                    } else {
                        *q = r;
                    }
                    return;
                }
                self.letters.push(ELetter::P(p));
            }
        }
    }

    pub fn op(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for l in &other.letters {
            out.push(l.clone());
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self::identity(self.degree);
        for l in self.letters.iter().rev() {
            out.push(match l {
                ELetter::S { index, exp } => ELetter::S {
                    index: *index,
                    exp: -exp,
                },
                ELetter::P(p) => ELetter::P(p.inverse()),
            });
        }
        out
    }

    pub fn conjugate_by(&self, sigma: &Perm) -> Self {
        let s = EWord::perm(sigma.clone());
        s.op(self).op(&s.inverse())
    }

    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.op(b).op(&a.inverse()).op(&b.inverse())
    }

    pub fn triple_commutator(a: &Self, b: &Self) -> Self {
        a.op(b).op(a).op(&b.inverse()).op(&a.inverse()).op(&b.inverse())
    }

    /// Image under `psi`: every `s_i` goes to `(1 2)`.
    pub fn psi(&self) -> Perm {
        let t = Perm::transposition(self.degree, 0, 1);
        self.letters.iter().fold(Perm::identity(self.degree), |acc, l| match l {
            ELetter::S { exp, .. } => acc.op(&t.pow(*exp)),
            ELetter::P(p) => acc.op(p),
        })
    }
}

impl fmt::Display for EWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match l {
                ELetter::S { index, exp: 1 } => write!(f, "s{index}")?,
                ELetter::S { index, exp } => write!(f, "s{index}^{exp}")?,
                ELetter::P(p) => write!(f, "{p}")?,
            }
        }
        Ok(())
    }
}

/// Which permutations `sigma` the conjugated families range over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SigmaRange {
    /// All of `Sym(n)` for `n <= 6`, an error above.
    #[default]
    Auto,
    /// All of `Sym(n)` regardless of `n`.
    Full,
    /// The first `k` permutations in lexicographic order.
    FirstN(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SndOptions {
    pub sigma: SigmaRange,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SndRelator {
    /// 1 to 6, in the order `s_i^2`, `s_1 (1 2)^-1`, `[s_i, tau]`,
    /// `<s_i, tau>`, `[sigma s_i sigma^-1, s_j]`, `<sigma s_i sigma^-1, s_j>`.
    pub family: u8,
    pub label: String,
    pub word: EWord,
}

/// How a transposition `(a b)` sits relative to `(1 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Overlap {
    Equal,
    OneIndex,
    Disjoint,
}

fn overlap(a: usize, b: usize) -> Overlap {
    match [a, b].iter().filter(|&&x| x < 2).count() {
        2 => Overlap::Equal,
        1 => Overlap::OneIndex,
        _ => Overlap::Disjoint,
    }
}

/// All relators of the six families, in a fixed order: by family, then
/// `i`, then `tau` (lexicographic) or `sigma` (lexicographic), then `j`.
pub fn generate_snd_relators(n: usize, d: usize, options: &SndOptions) -> Result<Vec<SndRelator>, SndError> {
    if n < 3 {
        return Err(SndError::SmallN(n));
    }
    if d < 1 {
        return Err(SndError::SmallD(d));
    }
    let sigmas: Vec<Perm> = match options.sigma {
        SigmaRange::Auto if n > 6 => return Err(SndError::SigmaTooLarge(n)),
        SigmaRange::Auto | SigmaRange::Full => Perm::all(n),
        SigmaRange::FirstN(k) => Perm::all(n).into_iter().take(k).collect(),
    };
    let s = |i: usize| EWord::s(i, n);
    let t12 = Perm::transposition(n, 0, 1);
    let mut out = Vec::new();

    for i in 1..=d {
        out.push(SndRelator {
            family: 1,
            label: format!("s{i}^2"),
            word: s(i).op(&s(i)),
        });
    }
    out.push(SndRelator {
        family: 2,
        label: "s1 (1 2)^-1".into(),
        word: s(1).op(&EWord::perm(t12.inverse())),
    });

    let transpositions: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    for (family, kind) in [(3u8, Overlap::Disjoint), (4u8, Overlap::OneIndex)] {
        for i in 1..=d {
            for &(a, b) in transpositions.iter().filter(|&&(a, b)| overlap(a, b) == kind) {
                let tau = Perm::transposition(n, a, b);
                let tw = EWord::perm(tau.clone());
                let (word, label) = if family == 3 {
                    (EWord::commutator(&s(i), &tw), format!("[s{i}, {tau}]"))
                } else {
                    (EWord::triple_commutator(&s(i), &tw), format!("<s{i}, {tau}>"))
                };
                out.push(SndRelator { family, label, word });
            }
        }
    }

    for (family, kind) in [(5u8, Overlap::Disjoint), (6u8, Overlap::OneIndex)] {
        for sigma in &sigmas {
            // psi(sigma s_i sigma^-1) = (sigma(1) sigma(2))
            if overlap(sigma.image(0), sigma.image(1)) != kind {
                continue;
            }
            for i in 1..=d {
                let conj = s(i).conjugate_by(sigma);
                for j in 1..=d {
                    let (word, label) = if family == 5 {
                        (EWord::commutator(&conj, &s(j)), format!("[{sigma} s{i} {sigma}^-1, s{j}]"))
                    } else {
                        (EWord::triple_commutator(&conj, &s(j)), format!("<{sigma} s{i} {sigma}^-1, s{j}>"))
                    };
                    out.push(SndRelator { family, label, word });
                }
            }
        }
    }
    Ok(out)
}
