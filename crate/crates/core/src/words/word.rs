use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::GroupElement;

/// A freely reduced word in a free group over named generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    syllables: Vec<(Arc<str>, i64)>,
}

/// Free reduction of an arbitrary syllable sequence.
///
/// Zero exponents vanish, neighbours with the same generator merge, and
/// merges that cancel expose the previous syllable for further merging.
pub fn reduce<N, I>(syllables: I) -> Word
where
    N: AsRef<str>,
    I: IntoIterator<Item = (N, i64)>,
{
    let mut out: Vec<(Arc<str>, i64)> = Vec::new();
    for (name, e) in syllables {
        push_syllable(&mut out, Arc::from(name.as_ref()), e);
    }
    Word { syllables: out }
}

fn push_syllable(out: &mut Vec<(Arc<str>, i64)>, name: Arc<str>, e: i64) {
    if e == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.0 == name {
            last.1 += e;
            if last.1 == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push((name, e));
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The single generator `name`.
    pub fn generator(name: &str) -> Self {
        Self::power_of(name, 1)
    }

    /// `name^e`.
    pub fn power_of(name: &str, e: i64) -> Self {
        reduce([(name, e)])
    }

    pub fn syllables(&self) -> &[(Arc<str>, i64)] {
        &self.syllables
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Letter length: the sum of absolute exponents.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Already reduced; present for symmetry with [`reduce`].
    pub fn reduced(&self) -> Self {
        reduce(self.syllables.iter().map(|(n, e)| (n.as_ref(), *e)))
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.op(&base);
        }
        out
    }

    /// `[a, b] = a b a^-1 b^-1`
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.op(b).op(&a.inverse()).op(&b.inverse())
    }

    /// `<a, b> = a b a b^-1 a^-1 b^-1`
    pub fn triple_commutator(a: &Word, b: &Word) -> Word {
        a.op(b).op(a).op(&b.inverse()).op(&a.inverse()).op(&b.inverse())
    }

    pub fn exponent_sum(&self, name: &str) -> i64 {
        self.syllables
            .iter()
            .filter(|(n, _)| n.as_ref() == name)
            .map(|(_, e)| e)
            .sum()
    }

    /// Exponent sums of every generator that occurs, zero sums dropped.
    pub fn exponent_sums(&self) -> BTreeMap<String, i64> {
        let mut sums: BTreeMap<String, i64> = BTreeMap::new();
        for (n, e) in &self.syllables {
            *sums.entry(n.to_string()).or_default() += e;
        }
        sums.retain(|_, e| *e != 0);
        sums
    }

    /// Generator names in order of first occurrence.
    pub fn generators(&self) -> Vec<&str> {
        let mut seen: Vec<&str> = Vec::new();
        for (n, _) in &self.syllables {
            if !seen.contains(&n.as_ref()) {
                seen.push(n);
            }
        }
        seen
    }

    /// Image under the homomorphism sending each generator to `assign(name)`.
    /// Returns `None` if some generator has no image.
    pub fn evaluate<G, F>(&self, identity: &G, mut assign: F) -> Option<G>
    where
        G: GroupElement,
        F: FnMut(&str) -> Option<G>,
    {
        let mut acc = identity.clone();
        for (n, e) in &self.syllables {
            let g = assign(n)?;
            let g = if *e < 0 { g.inverse() } else { g };
            for _ in 0..e.unsigned_abs() {
                acc = acc.op(&g);
            }
        }
        Some(acc)
    }
}

impl GroupElement for Word {
    fn op(&self, other: &Self) -> Self {
        let mut out = self.syllables.clone();
        for (n, e) in &other.syllables {
            push_syllable(&mut out, n.clone(), *e);
        }
        Word { syllables: out }
    }

    fn inverse(&self) -> Self {
        Word {
            syllables: self.syllables.iter().rev().map(|(n, e)| (n.clone(), -e)).collect(),
        }
    }

    fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }
}

/// Space-separated syllables such as `a^2 b a^-1`; the empty word is `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (k, (n, e)) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{n}")?;
            } else {
                write!(f, "{n}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
