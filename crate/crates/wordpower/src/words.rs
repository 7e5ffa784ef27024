//! Alphabets, letters, and words, together with the fundamental word
//! operations: primitive roots, primitivity, conjugacy, internal factors, and
//! common-root extraction for words that agree on a long prefix.
//!
//! A [`Word`] always carries the [`Alphabet`] it was declared over, and words
//! over different alphabets are never equal. Letter names may consist of
//! several characters (`x1`, `x2`, ...); rendering is juxtaposed when the name
//! set is prefix-free and space-separated otherwise.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Characters that may not occur in letter names because the text formats for
/// words, morphisms, and equation systems use them as structure.
const RESERVED_NAME_CHARS: &[char] = &[';', ',', '=', ':', '-', '>', 'ε'];

#[derive(Debug)]
struct AlphabetInner {
    names: Vec<String>,
    prefix_free: bool,
}

/// An ordered set of distinct letter names.
///
/// The declaration order is canonical: it determines letter indices, the
/// lexicographic order used by deterministic searches, and rendering. An
/// alphabet may be empty; that is useful for the constant alphabet of a
/// constant-free equation system, over which only the empty word exists.
#[derive(Clone)]
pub struct Alphabet {
    inner: Arc<AlphabetInner>,
}

impl Alphabet {
    /// Builds an alphabet from letter names in declaration order.
    ///
    /// Names must be distinct, nonempty, and free of whitespace and the
    /// punctuation used by the text formats.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        for name in &names {
            if name.is_empty() {
                return Err(Error::BadAlphabet("letter names must be nonempty".into()));
            }
            if name
                .chars()
                .any(|c| c.is_whitespace() || RESERVED_NAME_CHARS.contains(&c))
            {
                return Err(Error::BadAlphabet(format!(
                    "letter name {name:?} contains whitespace or a reserved character"
                )));
            }
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(Error::BadAlphabet(format!(
                    "duplicate letter name {name:?}"
                )));
            }
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::BadAlphabet("too many letters".into()));
        }
        let prefix_free = names.iter().enumerate().all(|(i, a)| {
            names
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !b.starts_with(a.as_str()))
        });
        Ok(Self {
            inner: Arc::new(AlphabetInner { names, prefix_free }),
        })
    }

    /// The fixed binary alphabet `{a, b}` used as the canonical codomain.
    pub fn binary() -> Self {
        Self::new(&["a", "b"]).expect("binary alphabet is valid")
    }

    /// Builds the alphabet `{prefix1, ..., prefixn}`, e.g. `x1..x4`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names)
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    /// True when the alphabet has no letters.
    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    /// Looks a letter up by name.
    pub fn letter(&self, name: &str) -> Result<Letter> {
        match self.inner.names.iter().position(|n| n == name) {
            Some(i) => Ok(Letter(i as u16)),
            None => Err(Error::UnknownLetter {
                name: name.to_owned(),
                alphabet: self.to_string(),
            }),
        }
    }

    /// The letter at a declaration-order index.
    ///
    /// Panics if the index is out of range.
    pub fn letter_at(&self, index: usize) -> Letter {
        assert!(index < self.len(), "letter index out of range");
        Letter(index as u16)
    }

    /// The name of a letter of this alphabet.
    pub fn name(&self, letter: Letter) -> &str {
        &self.inner.names[letter.index()]
    }

    /// True when a name belongs to this alphabet.
    pub fn contains_name(&self, name: &str) -> bool {
        self.inner.names.iter().any(|n| n == name)
    }

    /// Letter names in declaration order.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.inner.names.iter().map(|s| s.as_str())
    }

    /// Letters in declaration order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.len() as u16).map(Letter)
    }

    /// True when every name of `other` also names a letter here.
    pub fn contains_all(&self, other: &Self) -> bool {
        other.names().all(|n| self.contains_name(n))
    }

    pub(crate) fn is_prefix_free(&self) -> bool {
        self.inner.prefix_free
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.names.hash(state);
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, name) in self.inner.names.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{self}")
    }
}

/// A letter, identified by its index in the declaring alphabet.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(u16);

impl Letter {
    /// Declaration-order index of the letter in its alphabet.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite word over a declared alphabet. The empty word is permitted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

/// The unique primitive word `root` with `root^exponent = w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimitiveRoot {
    pub root: Word,
    pub exponent: usize,
}

impl Word {
    /// The empty word over an alphabet.
    pub fn empty(alphabet: &Alphabet) -> Self {
        Self {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    /// Builds a word from letters of the given alphabet.
    ///
    /// Panics if a letter index falls outside the alphabet.
    pub fn from_letters(alphabet: &Alphabet, letters: Vec<Letter>) -> Self {
        assert!(
            letters.iter().all(|l| l.index() < alphabet.len()),
            "letter outside the declared alphabet"
        );
        Self {
            alphabet: alphabet.clone(),
            letters,
        }
    }

    /// Parses a word literal.
    ///
    /// An empty or all-whitespace string, or `ε`, is the empty word. A literal
    /// with whitespace is read as space-separated letter names. Otherwise the
    /// literal is read as juxtaposed names: scanned greedily when the name set
    /// is prefix-free, and accepted as a single exact name when it is not.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Self::empty(alphabet));
        }
        if text.split_whitespace().nth(1).is_some() {
            let letters = text
                .split_whitespace()
                .map(|tok| alphabet.letter(tok))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Self {
                alphabet: alphabet.clone(),
                letters,
            });
        }
        if let Ok(letter) = alphabet.letter(text) {
            return Ok(Self {
                alphabet: alphabet.clone(),
                letters: vec![letter],
            });
        }
        if !alphabet.is_prefix_free() {
            return Err(Error::Parse(format!(
                "cannot split {text:?} unambiguously; separate letters of {alphabet} with spaces"
            )));
        }
        let mut letters = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let hit = alphabet
                .names()
                .position(|name| rest.starts_with(name))
                .ok_or_else(|| {
                    Error::Parse(format!("no letter of {alphabet} matches at {rest:?}"))
                })?;
            letters.push(alphabet.letter_at(hit));
            rest = &rest[alphabet.inner.names[hit].len()..];
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    /// The alphabet the word was declared over.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Length in letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The letters in order.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of occurrences of a letter.
    pub fn count_of(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Occurrence counts for every letter of the declared alphabet, in
    /// declaration order.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.alphabet.len()];
        for l in &self.letters {
            counts[l.index()] += 1;
        }
        counts
    }

    /// The sub-alphabet of letters that occur in the word, in declaration
    /// order.
    pub fn occurring_alphabet(&self) -> Alphabet {
        let counts = self.counts();
        let names: Vec<&str> = self
            .alphabet
            .letters()
            .filter(|l| counts[l.index()] > 0)
            .map(|l| self.alphabet.name(l))
            .collect();
        Alphabet::new(&names).expect("occurring letters form a valid alphabet")
    }

    /// Concatenation. Panics if the alphabets differ.
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(
            self.alphabet, other.alphabet,
            "cannot concatenate words over different alphabets"
        );
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Self {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    /// The `n`-th power of the word; `n = 0` gives the empty word.
    pub fn repeated(&self, n: usize) -> Self {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Self {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    /// The prefix of the first `n` letters. Panics if `n` exceeds the length.
    pub fn prefix(&self, n: usize) -> Self {
        assert!(n <= self.len(), "prefix longer than the word");
        Self {
            alphabet: self.alphabet.clone(),
            letters: self.letters[..n].to_vec(),
        }
    }

    /// The unique primitive root and maximal exponent of a nonempty word.
    pub fn primitive_root(&self) -> Result<PrimitiveRoot> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let (root_len, exponent) = root_len_and_exponent(&self.letters);
        Ok(PrimitiveRoot {
            root: self.prefix(root_len),
            exponent,
        })
    }

    /// True iff the nonempty word is not a power of a shorter word.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.primitive_root()?.exponent == 1)
    }

    /// True iff the word equals `v` after renaming letters by index, i.e. the
    /// letter index sequences agree. Used for words over alphabets that differ
    /// only in naming.
    pub fn same_letter_indices(&self, v: &Self) -> bool {
        self.letters == v.letters
    }

    /// The same word re-declared over `target`, matching letters by name.
    /// Fails if an occurring letter has no namesake in `target`.
    pub fn over_alphabet(&self, target: &Alphabet) -> Result<Self> {
        if self.alphabet == *target {
            return Ok(self.clone());
        }
        let mut mapping: Vec<Option<Letter>> = vec![None; self.alphabet.len()];
        let letters = self
            .letters
            .iter()
            .map(|l| match mapping[l.index()] {
                Some(t) => Ok(t),
                None => {
                    let t = target.letter(self.alphabet.name(*l))?;
                    mapping[l.index()] = Some(t);
                    Ok(t)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_letters(target, letters))
    }

    /// Applies an index-to-letter substitution, producing a word over
    /// `target`. `mapping[i]` is the image of the letter with index `i`.
    pub(crate) fn permuted(&self, mapping: &[Letter], target: &Alphabet) -> Self {
        let letters = self.letters.iter().map(|l| mapping[l.index()]).collect();
        Word::from_letters(target, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        let spaced = !self.alphabet.is_prefix_free();
        for (i, l) in self.letters.iter().enumerate() {
            if spaced && i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.alphabet.name(*l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Longest-proper-border lengths for every prefix, `border[i]` covering the
/// prefix of length `i + 1`.
fn border_table(s: &[Letter]) -> Vec<usize> {
    let mut border = vec![0usize; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// Primitive-root length and exponent of a nonempty letter slice: the
/// shortest period divides the length exactly iff the word is a power of its
/// length-`p` prefix.
pub(crate) fn root_len_and_exponent(s: &[Letter]) -> (usize, usize) {
    debug_assert!(!s.is_empty());
    let border = border_table(s);
    let n = s.len();
    let p = n - border[n - 1];
    if n.is_multiple_of(p) {
        (p, n / p)
    } else {
        (n, 1)
    }
}

/// Exponent of a letter slice, with the empty slice reported as 0.
pub(crate) fn exponent_of(s: &[Letter]) -> usize {
    if s.is_empty() {
        0
    } else {
        root_len_and_exponent(s).1
    }
}

/// True iff `u = xy` and `v = yx` for some words `x, y`. The empty word is
/// conjugate only to itself, and words over different alphabets are never
/// conjugate.
pub fn are_conjugate(u: &Word, v: &Word) -> bool {
    if u.alphabet != v.alphabet || u.len() != v.len() {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    let doubled: Vec<Letter> = u.letters.iter().chain(u.letters.iter()).copied().collect();
    doubled.windows(v.len()).any(|win| win == v.letters())
}

/// True iff `v = xuy` with both `x` and `y` nonempty.
pub fn is_internal_factor(u: &Word, v: &Word) -> bool {
    if u.alphabet != v.alphabet {
        return false;
    }
    if u.is_empty() {
        return v.len() >= 2;
    }
    if v.len() < u.len() + 2 {
        return false;
    }
    v.letters[1..v.len() - 1]
        .windows(u.len())
        .any(|win| win == u.letters())
}

/// Extracts the common root of two nonempty words whose infinite repetitions
/// agree on a prefix of length `|uv| - gcd(|u|, |v|)`; returns `None` when the
/// repetitions disagree before that threshold.
pub fn fine_wilf_root(u: &Word, v: &Word) -> Result<Option<Word>> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    if u.alphabet != v.alphabet {
        return Err(Error::AlphabetMismatch(
            "common-root extraction needs words over one alphabet".into(),
        ));
    }
    let g = gcd(u.len(), v.len());
    let threshold = u.len() + v.len() - g;
    for i in 0..threshold {
        if u.letters[i % u.len()] != v.letters[i % v.len()] {
            return Ok(None);
        }
    }
    let root = u.prefix(g);
    debug_assert_eq!(root.repeated(u.len() / g), *u);
    debug_assert_eq!(root.repeated(v.len() / g), *v);
    Ok(Some(root))
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All words of the given length over the alphabet, in lexicographic order.
/// Shared by the test modules of several sibling modules.
#[cfg(test)]
pub(crate) fn all_words(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    let m = alphabet.len();
    let count = m.pow(len as u32);
    (0..count)
        .map(|mut code| {
            let mut letters = vec![alphabet.letter_at(0); len];
            for slot in letters.iter_mut().rev() {
                *slot = alphabet.letter_at(code % m);
                code /= m;
            }
            Word::from_letters(alphabet, letters)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(text: &str) -> Word {
        Word::parse(&Alphabet::binary(), text).unwrap()
    }

    #[test]
    fn primitive_root_examples() {
        let r = w("abab").primitive_root().unwrap();
        assert_eq!(r.root, w("ab"));
        assert_eq!(r.exponent, 2);
        let r = w("aab").primitive_root().unwrap();
        assert_eq!(r.root, w("aab"));
        assert_eq!(r.exponent, 1);
        let r = w("aaa").primitive_root().unwrap();
        assert_eq!(r.root, w("a"));
        assert_eq!(r.exponent, 3);
    }

    #[test]
    fn primitive_root_of_empty_word_is_an_error() {
        let err = w("").primitive_root().unwrap_err();
        assert!(err.to_string().contains("empty word has no primitive root"));
        assert!(w("").is_primitive().is_err());
    }

    #[test]
    fn primitivity_examples() {
        assert!(w("aabb").is_primitive().unwrap());
        assert!(!w("abab").is_primitive().unwrap());
        assert!(w("a").is_primitive().unwrap());
    }

    #[test]
    fn root_power_reconstructs_word() {
        let binary = Alphabet::binary();
        for len in 1..=8 {
            for word in all_words(&binary, len) {
                let r = word.primitive_root().unwrap();
                assert_eq!(r.root.repeated(r.exponent), word);
                assert!(r.root.is_primitive().unwrap());
            }
        }
    }

    #[test]
    fn conjugacy_examples() {
        assert!(are_conjugate(&w("aab"), &w("aba")));
        assert!(!are_conjugate(&w("aab"), &w("abb")));
        assert!(are_conjugate(&w(""), &w("")));
    }

    #[test]
    fn conjugates_of_primitive_words_are_primitive() {
        let binary = Alphabet::binary();
        for len in 1..=6 {
            for word in all_words(&binary, len) {
                if !word.is_primitive().unwrap() {
                    continue;
                }
                for split in 0..word.len() {
                    let rotated = Word::from_letters(
                        &binary,
                        word.letters()[split..]
                            .iter()
                            .chain(&word.letters()[..split])
                            .copied()
                            .collect(),
                    );
                    assert!(are_conjugate(&word, &rotated));
                    assert!(rotated.is_primitive().unwrap(), "rotation of {word}");
                }
            }
        }
    }

    #[test]
    fn internal_factor_examples() {
        assert!(is_internal_factor(&w("ab"), &w("aabb")));
        assert!(!is_internal_factor(&w("ab"), &w("abab")));
        assert!(!is_internal_factor(&w("aba"), &w("abab")));
    }

    #[test]
    fn primitive_word_is_not_an_internal_factor_of_its_square() {
        let binary = Alphabet::binary();
        for len in 1..=6 {
            for word in all_words(&binary, len) {
                if word.is_primitive().unwrap() {
                    assert!(!is_internal_factor(&word, &word.repeated(2)), "{word}");
                }
            }
        }
    }

    #[test]
    fn commutation_is_equivalent_to_equal_roots() {
        let binary = Alphabet::binary();
        let mut words = Vec::new();
        for len in 1..=6 {
            words.extend(all_words(&binary, len));
        }
        for u in &words {
            for v in &words {
                let commute = u.concat(v) == v.concat(u);
                let same_root =
                    u.primitive_root().unwrap().root == v.primitive_root().unwrap().root;
                assert_eq!(commute, same_root, "u = {u}, v = {v}");
            }
        }
    }

    #[test]
    fn fine_wilf_examples() {
        assert_eq!(fine_wilf_root(&w("abab"), &w("ab")).unwrap(), Some(w("ab")));
        assert_eq!(fine_wilf_root(&w("ab"), &w("ba")).unwrap(), None);
        assert!(fine_wilf_root(&w(""), &w("ab")).is_err());
    }

    /// Oracle that materializes actual powers of `u` and `v` up to the
    /// agreement threshold and compares them letter by letter.
    fn fine_wilf_oracle(u: &Word, v: &Word) -> Option<Word> {
        let g = gcd(u.len(), v.len());
        let threshold = u.len() + v.len() - g;
        let u_power = u.repeated(threshold.div_ceil(u.len()));
        let v_power = v.repeated(threshold.div_ceil(v.len()));
        if u_power.letters()[..threshold] == v_power.letters()[..threshold] {
            Some(u.prefix(g))
        } else {
            None
        }
    }

    #[test]
    fn fine_wilf_matches_brute_force_expansion() {
        let binary = Alphabet::binary();
        let mut words = Vec::new();
        for len in 1..=4 {
            words.extend(all_words(&binary, len));
        }
        for u in &words {
            for v in &words {
                assert_eq!(
                    fine_wilf_root(u, v).unwrap(),
                    fine_wilf_oracle(u, v),
                    "u = {u}, v = {v}"
                );
            }
        }
        let u = w("aabaa");
        let v = w("aabaaaab");
        assert_eq!(fine_wilf_root(&u, &v).unwrap(), fine_wilf_oracle(&u, &v));
    }

    proptest! {
        #[test]
        fn fine_wilf_success_means_both_are_powers(
            u_bits in proptest::collection::vec(0u16..2, 1..8),
            v_bits in proptest::collection::vec(0u16..2, 1..8),
        ) {
            let binary = Alphabet::binary();
            let u = Word::from_letters(&binary, u_bits.iter().map(|&b| binary.letter_at(b as usize)).collect());
            let v = Word::from_letters(&binary, v_bits.iter().map(|&b| binary.letter_at(b as usize)).collect());
            if let Some(root) = fine_wilf_root(&u, &v).unwrap() {
                prop_assert_eq!(root.repeated(u.len() / root.len()), u);
                prop_assert_eq!(root.repeated(v.len() / root.len()), v);
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let binary = Alphabet::binary();
        assert_eq!(w("abba").to_string(), "abba");
        assert_eq!(w("ε"), Word::empty(&binary));
        assert_eq!(w("").to_string(), "ε");
        assert_eq!(Word::parse(&binary, "a b a").unwrap(), w("aba"));

        let vars = Alphabet::indexed("x", 4).unwrap();
        let word = Word::parse(&vars, "x1x1x2x2x3x4x4x3").unwrap();
        assert_eq!(word.to_string(), "x1x1x2x2x3x4x4x3");
        assert_eq!(Word::parse(&vars, "x1 x2").unwrap().len(), 2);

        let wide = Alphabet::indexed("x", 10).unwrap();
        assert!(!wide.is_prefix_free());
        let word = Word::parse(&wide, "x1 x10 x2").unwrap();
        assert_eq!(word.to_string(), "x1 x10 x2");
        assert_eq!(Word::parse(&wide, "x10").unwrap().len(), 1);
        assert!(Word::parse(&wide, "x1x10").is_err());
    }

    #[test]
    fn parse_rejects_unknown_letters() {
        assert!(Word::parse(&Alphabet::binary(), "abc").is_err());
        assert!(Word::parse(&Alphabet::binary(), "a c").is_err());
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(&["a", "a"]).is_err());
        assert!(Alphabet::new(&[""]).is_err());
        assert!(Alphabet::new(&["a b"]).is_err());
        assert!(Alphabet::new(&["x;y"]).is_err());
        let empty = Alphabet::new::<&str>(&[]).unwrap();
        assert!(empty.is_empty());
        assert_eq!(Word::empty(&empty).to_string(), "ε");
    }

    #[test]
    fn words_over_different_alphabets_are_unequal() {
        let ab = Alphabet::binary();
        let ba = Alphabet::new(&["b", "a"]).unwrap();
        assert_ne!(
            Word::parse(&ab, "ab").unwrap(),
            Word::parse(&ba, "ab").unwrap()
        );
        assert!(Word::parse(&ab, "ab")
            .unwrap()
            .same_letter_indices(&Word::parse(&ba, "ba").unwrap()));
    }

    #[test]
    fn over_alphabet_matches_by_name() {
        let binary = Alphabet::binary();
        let ternary = Alphabet::new(&["c", "b", "a"]).unwrap();
        let word = w("abba");
        let moved = word.over_alphabet(&ternary).unwrap();
        assert_eq!(moved.to_string(), "abba");
        assert_eq!(moved.alphabet(), &ternary);
        assert_eq!(moved.over_alphabet(&binary).unwrap(), word);
        assert!(w("ab")
            .over_alphabet(&Alphabet::new(&["a"]).unwrap())
            .is_err());
    }

    #[test]
    fn occurring_alphabet_and_counts() {
        let ternary = Alphabet::new(&["a", "b", "c"]).unwrap();
        let word = Word::parse(&ternary, "caca").unwrap();
        assert_eq!(word.counts(), vec![2, 0, 2]);
        assert_eq!(
            word.occurring_alphabet(),
            Alphabet::new(&["a", "c"]).unwrap()
        );
        assert_eq!(word.count_of(ternary.letter("c").unwrap()), 2);
    }
}
