//! Pushes every `S_n(d)` relator through
//! `phi: s_1 -> (1 2)`, `s_i -> (f_i, f_i^-1, 1, ..., 1)(1 2)`, `sigma -> sigma`
//! into `(F_{d-1})^n ⋊ Sym(n)` and checks that it dies.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::tuple::{EElement, TupleElement};
use crate::error::ConstructionError;
use crate::perm::Perm;
use crate::words::{generate_snd_relators, ELetter, EWord, SigmaRange, SndOptions, Word};

/// Smallest `n` for which `phi` is known to be an isomorphism.
pub const PHI_ISO_MIN_N: usize = 5;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Run for `3 <= n < 5` as well.
    pub allow_small_n: bool,
    pub sigma: SigmaRange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorFailure {
    pub relator: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub d: usize,
    pub relator_count: usize,
    pub failures: Vec<RelatorFailure>,
    pub all_identity: bool,
}

/// Image of `s_index` under `phi`.
pub fn phi_generator(index: usize, n: usize) -> EElement<Word> {
    let one = Word::empty();
    let swap = Perm::transposition(n, 0, 1);
    if index == 1 {
        return EElement::from_perm(&one, swap);
    }
    let f = format!("f{index}");
    let mut coords = vec![one; n];
    coords[0] = Word::generator(&f);
    coords[1] = Word::power_of(&f, -1);
    EElement::new(TupleElement::new(coords), swap).expect("matching lengths")
}

pub fn phi(word: &EWord) -> EElement<Word> {
    let n = word.degree();
    let one = Word::empty();
    let mut acc = EElement::identity(&one, n);
    for letter in word.letters() {
        let x = match letter {
            ELetter::S { index, exp } => phi_generator(*index, n).pow(*exp),
            ELetter::P(p) => EElement::from_perm(&one, p.clone()),
        };
        acc = acc.multiply(&x).expect("matching lengths");
    }
    acc
}

pub fn verify_phi_relators(n: usize, d: usize, options: &VerifyOptions) -> Result<VerificationReport, ConstructionError> {
    if n < PHI_ISO_MIN_N && !options.allow_small_n {
        return Err(ConstructionError::SmallN { n, min: PHI_ISO_MIN_N });
    }
    let relators = generate_snd_relators(n, d, &SndOptions { sigma: options.sigma })?;
    let images: Vec<EElement<Word>> = relators.par_iter().map(|r| phi(&r.word)).collect();
    let failures: Vec<RelatorFailure> = relators
        .iter()
        .zip(&images)
        .filter(|(_, img)| !img.is_identity())
        .map(|(r, img)| RelatorFailure {
            relator: r.label.clone(),
            image: img.to_string(),
        })
        .collect();
    Ok(VerificationReport {
        n,
        d,
        relator_count: relators.len(),
        all_identity: failures.is_empty(),
        failures,
    })
}
