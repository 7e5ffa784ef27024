//! Explicit morphisms that map a chosen word to a high power.
//!
//! Two constructions are provided. For a primitive word containing some
//! letter exactly once, an injective endomorphism raises the word to any
//! requested power. For every even `n >= 4` there is a primitive word of
//! length `2n` over `n` letters, each occurring exactly twice, together with
//! an injective morphism mapping it to an `(n - 1)`-th power; this exhibits
//! how large the reachable exponent can be for words with no
//! single-occurrence letter.

use crate::{Alphabet, Error, Letter, Morphism, Result, Word};

/// A morphism together with the power it maps a word onto:
/// `morphism(word) = base^exponent`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HighPowerWitness {
    pub word: Word,
    pub morphism: Morphism,
    pub exponent: usize,
    pub base: Word,
}

impl HighPowerWitness {
    /// Recomputes the defining identity.
    pub fn is_valid(&self) -> bool {
        match self.morphism.apply(&self.word) {
            Ok(image) => image == self.base.repeated(self.exponent),
            Err(_) => false,
        }
    }
}

/// For a primitive word `w` containing `letter` exactly once, builds the
/// injective endomorphism of `w`'s alphabet that fixes every other letter and
/// maps `w` to `w^n`.
///
/// Writing `w = u letter v`, the image of `letter` is
/// `letter (v u letter)^(n-1)`.
pub fn construct_unique_letter_morphism(
    w: &Word,
    letter: Letter,
    n: usize,
) -> Result<HighPowerWitness> {
    if !w.is_primitive()? {
        return Err(Error::Precondition(format!("{w} is not primitive")));
    }
    let witness = construct_unique_letter_morphism_unchecked(w, letter, n)?;
    assert!(
        witness.morphism.is_injective(),
        "unique-letter morphism must be injective"
    );
    Ok(witness)
}

/// [`construct_unique_letter_morphism`] without the primitivity check and
/// injectivity assertion. The power identity `morphism(word) = word^n` holds
/// for any word with a single occurrence of `letter`, but the base is only
/// primitive when the word is.
pub fn construct_unique_letter_morphism_unchecked(
    w: &Word,
    letter: Letter,
    n: usize,
) -> Result<HighPowerWitness> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if n == 0 {
        return Err(Error::Precondition("exponent must be at least 1".into()));
    }
    let alphabet = w.alphabet().clone();
    if letter.index() >= alphabet.len() {
        return Err(Error::Precondition("letter outside the alphabet".into()));
    }
    let count = w.count_of(letter);
    if count != 1 {
        return Err(Error::Precondition(format!(
            "letter {:?} occurs {count} times in {w}, need exactly one occurrence",
            alphabet.name(letter)
        )));
    }
    let pos = w
        .letters()
        .iter()
        .position(|&l| l == letter)
        .expect("letter occurs");
    let u = Word::from_letters(&alphabet, w.letters()[..pos].to_vec());
    let v = Word::from_letters(&alphabet, w.letters()[pos + 1..].to_vec());
    let single = Word::from_letters(&alphabet, vec![letter]);
    let vua = v.concat(&u).concat(&single);
    let big_image = single.concat(&vua.repeated(n - 1));
    let images = alphabet
        .letters()
        .map(|c| {
            if c == letter {
                big_image.clone()
            } else {
                Word::from_letters(&alphabet, vec![c])
            }
        })
        .collect();
    let morphism = Morphism::new(&alphabet, &alphabet, images)?;
    let witness = HighPowerWitness {
        word: w.clone(),
        morphism,
        exponent: n,
        base: w.clone(),
    };
    assert!(witness.is_valid(), "power identity must hold");
    Ok(witness)
}

/// For even `n >= 4`, builds the word
/// `x1 x1 x2 x2 ... x(n-2) x(n-2) x(n-1) xn xn x(n-1)` over `{x1, ..., xn}`,
/// in which every letter occurs exactly twice, together with an injective
/// morphism into `{a, b}` mapping it to an `(n - 1)`-th power of a primitive
/// base.
pub fn construct_lower_bound_instance(n: usize) -> Result<HighPowerWitness> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "instance is defined for even n >= 4, got {n}"
        )));
    }
    let domain = Alphabet::indexed("x", n)?;
    let binary = Alphabet::binary();
    let a = binary.letter_at(0);
    let b = binary.letter_at(1);
    let block = |a_before: usize, a_after: usize| {
        let mut letters = vec![a; a_before];
        letters.push(b);
        letters.extend(std::iter::repeat_n(a, a_after));
        Word::from_letters(&binary, letters)
    };

    let mut word_letters = Vec::with_capacity(2 * n);
    for i in 1..=n - 2 {
        let x = domain.letter_at(i - 1);
        word_letters.push(x);
        word_letters.push(x);
    }
    let pen = domain.letter_at(n - 2);
    let last = domain.letter_at(n - 1);
    word_letters.extend([pen, last, last, pen]);
    let word = Word::from_letters(&domain, word_letters);

    let images = domain
        .letters()
        .map(|x| {
            let i = x.index() + 1;
            if i <= n - 2 {
                block(2 * n - 2 * i - 2, 2 * i)
            } else if i == n - 1 {
                Word::from_letters(&binary, vec![b])
            } else {
                Word::from_letters(&binary, vec![a; n - 1])
            }
        })
        .collect();
    let morphism = Morphism::new(&domain, &binary, images)?;

    let mut base_letters = vec![a; 2 * n - 4];
    base_letters.push(b);
    base_letters.extend(std::iter::repeat_n(a, 2 * n - 2));
    base_letters.push(b);
    let base = Word::from_letters(&binary, base_letters);

    let witness = HighPowerWitness {
        word,
        morphism,
        exponent: n - 1,
        base,
    };
    assert!(witness.is_valid(), "power identity must hold");
    assert!(
        witness.word.is_primitive()?,
        "instance word must be primitive"
    );
    assert!(witness.base.is_primitive()?, "power base must be primitive");
    assert!(
        witness.morphism.is_injective(),
        "instance morphism must be injective"
    );
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unique_letter_examples() {
        let binary = Alphabet::binary();
        let w = Word::parse(&binary, "aab").unwrap();
        let witness = construct_unique_letter_morphism(&w, binary.letter("b").unwrap(), 2).unwrap();
        assert_eq!(witness.morphism.to_string(), "a->a;b->baab");
        assert_eq!(
            witness.morphism.apply(&w).unwrap(),
            Word::parse(&binary, "aabaab").unwrap()
        );
        assert_eq!(witness.base, w);
        assert_eq!(witness.exponent, 2);

        let ternary = Alphabet::new(&["a", "b", "c"]).unwrap();
        let w = Word::parse(&ternary, "abc").unwrap();
        let witness =
            construct_unique_letter_morphism(&w, ternary.letter("b").unwrap(), 3).unwrap();
        assert_eq!(witness.morphism.to_string(), "a->a;b->bcabcab;c->c");
        assert_eq!(witness.morphism.apply(&w).unwrap(), w.repeated(3));
    }

    #[test]
    fn unique_letter_requires_single_occurrence() {
        let binary = Alphabet::binary();
        let w = Word::parse(&binary, "aab").unwrap();
        assert!(construct_unique_letter_morphism(&w, binary.letter("a").unwrap(), 2).is_err());
        assert!(construct_unique_letter_morphism(&w, binary.letter("b").unwrap(), 0).is_err());
        let empty = Word::empty(&binary);
        assert!(construct_unique_letter_morphism(&empty, binary.letter("b").unwrap(), 2).is_err());
    }

    #[test]
    fn unique_letter_exponent_one_is_identity() {
        let binary = Alphabet::binary();
        let w = Word::parse(&binary, "ab").unwrap();
        let witness = construct_unique_letter_morphism(&w, binary.letter("a").unwrap(), 1).unwrap();
        assert_eq!(witness.morphism, Morphism::identity(&binary));
    }

    #[test]
    fn unique_letter_sweep() {
        for alphabet in [Alphabet::binary(), Alphabet::new(&["a", "b", "c"]).unwrap()] {
            for len in 1..=7 {
                if alphabet.len() == 3 && len > 6 {
                    continue;
                }
                for w in crate::words::all_words(&alphabet, len) {
                    for letter in alphabet.letters() {
                        if w.count_of(letter) != 1 {
                            continue;
                        }
                        for n in 1..=5 {
                            let witness = construct_unique_letter_morphism(&w, letter, n).unwrap();
                            assert!(witness.is_valid());
                            assert!(witness.morphism.is_injective());
                            assert_eq!(witness.base, w);
                            assert_eq!(witness.exponent, n);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spare_letters_stay_fixed_and_injective() {
        let ternary = Alphabet::new(&["a", "b", "c"]).unwrap();
        let w = Word::parse(&ternary, "aab").unwrap();
        let witness =
            construct_unique_letter_morphism(&w, ternary.letter("b").unwrap(), 2).unwrap();
        assert_eq!(witness.morphism.to_string(), "a->a;b->baab;c->c");
        assert!(witness.morphism.is_injective());
    }

    #[test]
    fn lower_bound_instance_for_n_four() {
        let witness = construct_lower_bound_instance(4).unwrap();
        assert_eq!(witness.word.to_string(), "x1x1x2x2x3x4x4x3");
        assert_eq!(
            witness.morphism.to_string(),
            "x1->aaaabaa;x2->aabaaaa;x3->b;x4->aaa"
        );
        assert_eq!(witness.base.to_string(), "aaaabaaaaaab");
        assert_eq!(witness.exponent, 3);
    }

    #[test]
    fn lower_bound_instance_properties() {
        for n in [4usize, 6, 8, 10] {
            let witness = construct_lower_bound_instance(n).unwrap();
            assert_eq!(witness.word.len(), 2 * n);
            assert_eq!(witness.word.alphabet().len(), n);
            assert!(witness.word.counts().iter().all(|&c| c == 2));
            assert!(witness.word.is_primitive().unwrap());
            assert!(witness.morphism.is_injective());
            assert_eq!(witness.exponent, n - 1);
            assert!(witness.base.is_primitive().unwrap());
            let image = witness.morphism.apply(&witness.word).unwrap();
            assert_eq!(image.len(), (n - 1) * (4 * n - 4));
            if n == 6 {
                assert_eq!(image.len(), 100);
            }
        }
    }

    #[test]
    fn lower_bound_instance_rejects_other_sizes() {
        for n in [0usize, 1, 2, 3, 5, 7] {
            assert!(construct_lower_bound_instance(n).is_err());
        }
    }
}
