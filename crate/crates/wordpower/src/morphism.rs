//! Morphisms between free monoids and the two restricted families the crate
//! searches over: nonperiodic morphisms and injective morphisms.
//!
//! A morphism is determined by the images of its domain letters. Periodicity
//! and injectivity checks are cached on first use, so repeated family tests
//! during large sweeps stay cheap. Injectivity is decided with the
//! Sardinas-Patterson procedure on the set of images.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::words::{exponent_of, root_len_and_exponent};
use crate::{Alphabet, Error, Letter, Result, Word};

/// The morphism families searches can be restricted to.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum MorphismFamily {
    /// Every morphism.
    All,
    /// Morphisms whose images do not all lie in `r*` for one word `r`.
    Nonperiodic,
    /// Morphisms injective on all words.
    Injective,
}

impl fmt::Display for MorphismFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::All => write!(f, "all"),
            Self::Nonperiodic => write!(f, "nonperiodic"),
            Self::Injective => write!(f, "injective"),
        }
    }
}

#[derive(Debug)]
struct MorphismInner {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
    periodic: OnceLock<bool>,
    injective: OnceLock<bool>,
}

/// A monoid morphism, given by one image word per domain letter.
#[derive(Clone)]
pub struct Morphism {
    inner: Arc<MorphismInner>,
}

impl Morphism {
    /// Builds a morphism from images listed in domain declaration order.
    pub fn new(domain: &Alphabet, codomain: &Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != domain.len() {
            return Err(Error::Precondition(format!(
                "expected {} images for domain {domain}, got {}",
                domain.len(),
                images.len()
            )));
        }
        for image in &images {
            if image.alphabet() != codomain {
                return Err(Error::AlphabetMismatch(format!(
                    "image {image} is not a word over {codomain}"
                )));
            }
        }
        Ok(Self {
            inner: Arc::new(MorphismInner {
                domain: domain.clone(),
                codomain: codomain.clone(),
                images,
                periodic: OnceLock::new(),
                injective: OnceLock::new(),
            }),
        })
    }

    /// The identity morphism on an alphabet.
    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = alphabet
            .letters()
            .map(|l| Word::from_letters(alphabet, vec![l]))
            .collect();
        Self::new(alphabet, alphabet, images).expect("identity images are valid")
    }

    /// The injective morphism into `{a, b}` sending the letter with index `i`
    /// to `a^(i+1) b`. It maps primitive words to primitive words.
    pub fn binary_embedding(domain: &Alphabet) -> Self {
        let binary = Alphabet::binary();
        let a = binary.letter_at(0);
        let b = binary.letter_at(1);
        let images = domain
            .letters()
            .map(|l| {
                let mut letters = vec![a; l.index() + 1];
                letters.push(b);
                Word::from_letters(&binary, letters)
            })
            .collect();
        Self::new(domain, &binary, images).expect("embedding images are valid")
    }

    /// Domain alphabet.
    pub fn domain(&self) -> &Alphabet {
        &self.inner.domain
    }

    /// Codomain alphabet.
    pub fn codomain(&self) -> &Alphabet {
        &self.inner.codomain
    }

    /// The image of a domain letter.
    pub fn image(&self, letter: Letter) -> &Word {
        &self.inner.images[letter.index()]
    }

    /// Images in domain declaration order.
    pub fn images(&self) -> &[Word] {
        &self.inner.images
    }

    /// Applies the morphism to a word over its domain.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet() != self.domain() {
            return Err(Error::AlphabetMismatch(format!(
                "cannot apply a morphism with domain {} to a word over {}",
                self.domain(),
                w.alphabet()
            )));
        }
        let total: usize = w.letters().iter().map(|l| self.image(*l).len()).sum();
        let mut letters = Vec::with_capacity(total);
        for l in w.letters() {
            letters.extend_from_slice(self.image(*l).letters());
        }
        Ok(Word::from_letters(self.codomain(), letters))
    }

    /// True iff all images are powers of one common word. Morphisms whose
    /// images are all empty count as periodic.
    pub fn is_periodic(&self) -> bool {
        *self.inner.periodic.get_or_init(|| {
            let mut common_root: Option<Word> = None;
            for image in &self.inner.images {
                if image.is_empty() {
                    continue;
                }
                let root = image.primitive_root().expect("image is nonempty").root;
                match &common_root {
                    None => common_root = Some(root),
                    Some(r) if *r == root => {}
                    Some(_) => return false,
                }
            }
            true
        })
    }

    /// True iff the morphism is injective on all words, i.e. the images form
    /// a uniquely decodable code and are distinct and nonempty.
    pub fn is_injective(&self) -> bool {
        *self.inner.injective.get_or_init(|| {
            let images = &self.inner.images;
            if images.iter().any(|im| im.is_empty()) {
                return false;
            }
            for (i, u) in images.iter().enumerate() {
                for v in &images[i + 1..] {
                    if u == v {
                        return false;
                    }
                }
            }
            is_code(images)
        })
    }

    /// True iff the morphism belongs to the family.
    pub fn in_family(&self, family: MorphismFamily) -> bool {
        match family {
            MorphismFamily::All => true,
            MorphismFamily::Nonperiodic => !self.is_periodic(),
            MorphismFamily::Injective => self.is_injective(),
        }
    }

    /// The composition `self ∘ inner`, applying `inner` first.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.codomain() != self.domain() {
            return Err(Error::AlphabetMismatch(format!(
                "cannot compose: inner codomain {} differs from outer domain {}",
                inner.codomain(),
                self.domain()
            )));
        }
        let images = inner
            .images()
            .iter()
            .map(|im| self.apply(im))
            .collect::<Result<Vec<_>>>()?;
        Self::new(inner.domain(), self.codomain(), images)
    }

    /// Extends the morphism to a larger domain, sending every new letter to
    /// the empty word.
    pub fn extended(&self, superdomain: &Alphabet) -> Result<Self> {
        if !superdomain.contains_all(self.domain()) {
            return Err(Error::AlphabetMismatch(format!(
                "{superdomain} does not contain the domain {}",
                self.domain()
            )));
        }
        let images = superdomain
            .letters()
            .map(|l| match self.domain().letter(superdomain.name(l)) {
                Ok(orig) => self.image(orig).clone(),
                Err(_) => Word::empty(self.codomain()),
            })
            .collect();
        Self::new(superdomain, self.codomain(), images)
    }

    /// Restricts the morphism to a sub-alphabet of its domain.
    pub fn restricted(&self, subdomain: &Alphabet) -> Result<Self> {
        let images = subdomain
            .names()
            .map(|name| {
                self.domain()
                    .letter(name)
                    .map(|orig| self.image(orig).clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(subdomain, self.codomain(), images)
    }

    /// Parses the `a->abb;b->ba;c->` format. Every domain letter must appear
    /// exactly once; whitespace around entries is ignored.
    pub fn parse(domain: &Alphabet, codomain: &Alphabet, text: &str) -> Result<Self> {
        let mut images: Vec<Option<Word>> = vec![None; domain.len()];
        for entry in text.split(';') {
            let entry = entry.trim();
            if entry.is_empty() {
                continue;
            }
            let (name, image_text) = entry.split_once("->").ok_or_else(|| {
                Error::Parse(format!("morphism entry {entry:?} is missing \"->\""))
            })?;
            let letter = domain.letter(name.trim())?;
            if images[letter.index()].is_some() {
                return Err(Error::Parse(format!(
                    "duplicate image for letter {:?}",
                    name.trim()
                )));
            }
            images[letter.index()] = Some(Word::parse(codomain, image_text)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, im)| {
                im.ok_or_else(|| {
                    Error::Parse(format!(
                        "missing image for letter {:?}",
                        domain.name(domain.letter_at(i))
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, images)
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.domain() == other.domain()
            && self.codomain() == other.codomain()
            && self.images() == other.images()
    }
}

impl Eq for Morphism {}

impl std::hash::Hash for Morphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.domain().hash(state);
        self.codomain().hash(state);
        self.images().hash(state);
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.domain().letters().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            let image = self.image(l);
            write!(f, "{}->", self.domain().name(l))?;
            if !image.is_empty() {
                write!(f, "{image}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({self})")
    }
}

/// Sardinas-Patterson test: the set of nonempty words is a uniquely decodable
/// code iff no dangling suffix reachable from the codeword pairs equals a
/// codeword. Callers have already ruled out empty and duplicate images.
fn is_code(images: &[Word]) -> bool {
    let code: BTreeSet<&[Letter]> = images.iter().map(|im| im.letters()).collect();
    let mut pending: Vec<Vec<Letter>> = Vec::new();
    let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
    for u in &code {
        for v in &code {
            if u.len() < v.len() && v.starts_with(u) {
                let suffix = v[u.len()..].to_vec();
                if seen.insert(suffix.clone()) {
                    pending.push(suffix);
                }
            }
        }
    }
    while let Some(suffix) = pending.pop() {
        if code.contains(suffix.as_slice()) {
            return false;
        }
        for u in &code {
            let next = if suffix.len() <= u.len() && u.starts_with(suffix.as_slice()) {
                Some(u[suffix.len()..].to_vec())
            } else if suffix.starts_with(u) {
                Some(suffix[u.len()..].to_vec())
            } else {
                None
            };
            if let Some(next) = next {
                if !next.is_empty() && seen.insert(next.clone()) {
                    pending.push(next);
                }
            }
        }
    }
    true
}

/// Exponent of the image `h(w)` without materializing intermediate words,
/// with the empty image reported as exponent 0.
pub fn image_exponent(h: &Morphism, w: &Word) -> Result<usize> {
    Ok(exponent_of(h.apply(w)?.letters()))
}

/// Primitive root length and exponent of a nonempty image `h(w)`.
pub(crate) fn image_root(h: &Morphism, w: &Word) -> Result<(Word, usize)> {
    let image = h.apply(w)?;
    if image.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (root_len, exp) = root_len_and_exponent(image.letters());
    Ok((image.prefix(root_len), exp))
}
