//! Exponent sets of words under morphism families.
//!
//! For a word `w` over `Σ` and a family of morphisms, the strict exponent set
//! collects every `n` such that some family member maps `w` onto the `n`-th
//! power of a primitive word; the loose exponent set collects every `n` such
//! that some family member maps `w` onto an `n`-th power of any nonempty
//! word. [`pex_bounded`] computes both within a window `[1, N]`, preferring
//! closed forms (which yield provenly complete answers with constructed
//! witnesses) and falling back to exhaustive bounded enumeration over a
//! binary codomain otherwise. Every reported exponent carries a verifiable
//! witness morphism.

use std::collections::{BTreeMap, BTreeSet};

use crate::construct::construct_unique_letter_morphism;
use crate::enumerate::{length_vectors, min_index_per_key, Budget, SearchOptions, VectorSpace};
use crate::morphism::image_root;
use crate::words::exponent_of;
use crate::{Alphabet, Error, Morphism, MorphismFamily, Result, Word};

/// Input to [`pex_bounded`].
#[derive(Clone, Debug)]
pub struct PexQuery {
    /// The word whose exponent sets are requested.
    pub word: Word,
    /// The morphism family to draw from.
    pub family: MorphismFamily,
    /// The domain alphabet of candidate morphisms; must contain every letter
    /// occurring in the word. Defaults to the word's declared alphabet.
    pub domain: Alphabet,
    /// Upper end `N` of the reported exponent window `[1, N]`.
    pub max_exponent: usize,
    /// Per-image length bound for the enumeration fallback; closed-form
    /// branches ignore it.
    pub max_image_len: usize,
}

impl PexQuery {
    /// Query over the word's own declared alphabet.
    pub fn new(
        word: &Word,
        family: MorphismFamily,
        max_exponent: usize,
        max_image_len: usize,
    ) -> Self {
        Self {
            word: word.clone(),
            family,
            domain: word.alphabet().clone(),
            max_exponent,
            max_image_len,
        }
    }
}

/// A morphism mapping the queried word onto `base^n` for the exponent `n` it
/// is stored under.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerWitness {
    pub morphism: Morphism,
    pub base: Word,
}

/// How much of the true exponent set a report covers.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Completeness {
    /// The reported sets equal the true sets intersected with `[1, N]`.
    ProvenComplete,
    /// Exhaustive over all binary-codomain morphisms within the image-length
    /// bound; larger images might realize further exponents.
    CompleteUpToBound,
    /// The search was truncated by a candidate cap; absences prove nothing.
    Unknown,
}

impl std::fmt::Display for Completeness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::ProvenComplete => write!(f, "proven-complete"),
            Self::CompleteUpToBound => write!(f, "complete-up-to-bound"),
            Self::Unknown => write!(f, "unknown"),
        }
    }
}

/// Result of [`pex_bounded`].
#[derive(Clone, Debug)]
pub struct PexReport {
    /// Exponents `n ≤ N` with a family morphism mapping the word onto an
    /// `n`-th power of a primitive word.
    pub observed_pex: BTreeSet<usize>,
    /// Exponents `n ≤ N` with a family morphism mapping the word onto an
    /// `n`-th power of some nonempty word; a superset of `observed_pex`.
    pub observed_gex: BTreeSet<usize>,
    /// One witness per element of `observed_gex`; entries for `observed_pex`
    /// elements have a primitive base.
    pub witnesses: BTreeMap<usize, PowerWitness>,
    /// Completeness of both sets over the window.
    pub complete: Completeness,
}

impl PexReport {
    /// Recomputes every stored witness against the word and family.
    pub fn verify_witnesses(&self, word: &Word, family: MorphismFamily) -> bool {
        if !self.observed_pex.is_subset(&self.observed_gex) {
            return false;
        }
        let keys: BTreeSet<usize> = self.witnesses.keys().copied().collect();
        if keys != self.observed_gex {
            return false;
        }
        for (&n, witness) in &self.witnesses {
            if witness.base.is_empty() || !witness.morphism.in_family(family) {
                return false;
            }
            let image = match word
                .over_alphabet(witness.morphism.domain())
                .and_then(|w| witness.morphism.apply(&w))
            {
                Ok(image) => image,
                Err(_) => return false,
            };
            if image != witness.base.repeated(n) {
                return false;
            }
            if self.observed_pex.contains(&n) && !witness.base.is_primitive().unwrap_or(false) {
                return false;
            }
        }
        true
    }
}

/// Whether arbitrarily large exponents are reachable by injective morphisms.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum InjKind {
    Infinite,
    FiniteBounded,
}

/// The structural fact the classification rests on.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum InjReason {
    /// The primitive root contains some letter exactly once, so every
    /// exponent is reachable.
    LetterOnceInRoot,
    /// Every reachable exponent is below the root length, scaled by the
    /// word's own exponent.
    UpperBoundTheorem,
    /// Two-letter root with all letter counts at least two: the root reaches
    /// exponent 1 only.
    BinaryExact,
}

/// Shape of the injective-family exponent set of a word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InjClassification {
    pub kind: InjKind,
    pub reason: InjReason,
    /// Inclusive upper bound on reachable exponents, when finite.
    pub upper_bound: Option<usize>,
    /// The exact exponent set, when known in full.
    pub known_exact: Option<BTreeSet<usize>>,
}

/// Classifies the injective-family exponent set of a nonempty word by the
/// shape of its primitive root.
pub fn classify_injective(w: &Word) -> Result<InjClassification> {
    let root = w.primitive_root()?;
    let r = &root.root;
    let k = root.exponent;
    if r.counts().contains(&1) {
        return Ok(InjClassification {
            kind: InjKind::Infinite,
            reason: InjReason::LetterOnceInRoot,
            upper_bound: None,
            known_exact: None,
        });
    }
    if r.occurring_alphabet().len() == 2 {
        return Ok(InjClassification {
            kind: InjKind::FiniteBounded,
            reason: InjReason::BinaryExact,
            upper_bound: Some(k),
            known_exact: Some(BTreeSet::from([k])),
        });
    }
    Ok(InjClassification {
        kind: InjKind::FiniteBounded,
        reason: InjReason::UpperBoundTheorem,
        upper_bound: Some(k * (r.len() - 1)),
        known_exact: None,
    })
}

/// The divisor closure of a set, truncated to `[1, n_max]`: every `d ≤ n_max`
/// dividing some element.
pub fn gex_from_pex(pex: &BTreeSet<usize>, n_max: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &e in pex {
        for d in 1..=e.min(n_max) {
            if e.is_multiple_of(d) {
                out.insert(d);
            }
        }
    }
    out
}

/// Transfers exponent sets from a primitive root `r` to its power `r^k`:
/// strict exponents scale by `k`, and loose exponents combine divisors of `k`
/// with the divisor closure of the root's strict set.
pub fn pex_scale_by_primitive_power(
    pex_of_root: &BTreeSet<usize>,
    k: usize,
    n_max: usize,
) -> (BTreeSet<usize>, BTreeSet<usize>) {
    assert!(k >= 1, "exponent must be positive");
    let pex: BTreeSet<usize> = pex_of_root
        .iter()
        .map(|&n| n * k)
        .filter(|&n| n >= 1 && n <= n_max)
        .collect();
    let closure = gex_from_pex(pex_of_root, n_max);
    let mut gex = BTreeSet::new();
    for kp in 1..=k {
        if !k.is_multiple_of(kp) {
            continue;
        }
        for &np in &closure {
            let d = kp * np;
            if d <= n_max {
                gex.insert(d);
            }
        }
    }
    (pex, gex)
}

/// Smallest representation of each value `t ≤ n_max` as a nonnegative
/// combination `Σ kᵢ·countsᵢ`, or `None` when unreachable. Index 0 holds the
/// all-zero combination.
fn semigroup_representations(counts: &[usize], n_max: usize) -> Vec<Option<Vec<usize>>> {
    let mut reps: Vec<Option<Vec<usize>>> = vec![None; n_max + 1];
    reps[0] = Some(vec![0; counts.len()]);
    for t in 1..=n_max {
        for (i, &c) in counts.iter().enumerate() {
            if c == 0 || c > t {
                continue;
            }
            if reps[t - c].is_some() {
                let mut rep = reps[t - c].clone().expect("checked");
                rep[i] += 1;
                reps[t] = Some(rep);
                break;
            }
        }
    }
    reps
}

/// Exponents reachable when every morphism is allowed: the union of the
/// nonperiodic-family set with all positive values `Σ kᵢ·|w|_{aᵢ}` reachable
/// by sending each letter to a power of one fixed letter.
pub fn pex_all_morphisms_closed_form(
    w: &Word,
    domain: &Alphabet,
    pex_nonperiodic: &BTreeSet<usize>,
    n_max: usize,
) -> BTreeSet<usize> {
    debug_assert!(domain.contains_all(&w.occurring_alphabet()));
    let mut out: BTreeSet<usize> = pex_nonperiodic
        .iter()
        .copied()
        .filter(|&n| n >= 1 && n <= n_max)
        .collect();
    let reps = semigroup_representations(&w.counts(), n_max);
    for (t, rep) in reps.iter().enumerate().skip(1) {
        if rep.is_some() {
            out.insert(t);
        }
    }
    out
}

/// Exponent sets of `w` under nonperiodic morphisms on a strictly larger
/// domain: spare letters absorb the nonperiodicity requirement, making every
/// loose exponent reachable and adding all letter-count combinations to the
/// strict set.
pub fn pex_enlarged_domain_closed_form(
    w: &Word,
    domain: &Alphabet,
    pex_restricted: &BTreeSet<usize>,
    n_max: usize,
) -> Result<(BTreeSet<usize>, BTreeSet<usize>)> {
    let occurring = w.occurring_alphabet();
    if !domain.contains_all(&occurring) {
        return Err(Error::AlphabetMismatch(format!(
            "{domain} does not contain every letter of {w}"
        )));
    }
    if occurring.len() == domain.len() {
        return Err(Error::Precondition(format!(
            "theorem precondition violated: every letter of {domain} occurs in {w}"
        )));
    }
    let mut pex: BTreeSet<usize> = pex_restricted
        .iter()
        .copied()
        .filter(|&n| n >= 1 && n <= n_max)
        .collect();
    let reps = semigroup_representations(&w.counts(), n_max);
    for (t, rep) in reps.iter().enumerate().skip(1) {
        if rep.is_some() {
            pex.insert(t);
        }
    }
    Ok((pex, (1..=n_max).collect()))
}

/// Computes both exponent sets of `q.word` over `[1, q.max_exponent]` with
/// default search options.
pub fn pex_bounded(q: &PexQuery) -> Result<PexReport> {
    pex_bounded_with(q, &SearchOptions::default())
}

/// [`pex_bounded`] with explicit search options (candidate cap, forced
/// sequential scanning).
pub fn pex_bounded_with(q: &PexQuery, opts: &SearchOptions) -> Result<PexReport> {
    if q.word.is_empty() {
        return Err(Error::EmptyWord);
    }
    if q.max_exponent < 1 {
        return Err(Error::Precondition("exponent window must reach 1".into()));
    }
    if q.max_image_len < 1 {
        return Err(Error::Precondition(
            "image length bound must reach 1".into(),
        ));
    }
    let word = q.word.over_alphabet(&q.domain)?;
    let mut budget = Budget::new(opts.max_candidates);
    let mut report = analyze(
        &word,
        q.family,
        q.max_exponent,
        q.max_image_len,
        opts,
        &mut budget,
    );
    if budget.truncated() {
        report.complete = Completeness::Unknown;
    }
    debug_assert!(report.verify_witnesses(&word, q.family));
    Ok(report)
}

fn analyze(
    w: &Word,
    family: MorphismFamily,
    n_max: usize,
    l_max: usize,
    opts: &SearchOptions,
    budget: &mut Budget,
) -> PexReport {
    match family {
        MorphismFamily::All => analyze_all(w, n_max, l_max, opts, budget),
        MorphismFamily::Nonperiodic | MorphismFamily::Injective => {
            let sigma = w.alphabet().clone();
            let occurring = w.occurring_alphabet();
            if sigma.len() == 1 {
                return analyze_unary_domain(w, family, n_max);
            }
            if occurring.len() < sigma.len() {
                return analyze_enlarged_domain(w, family, n_max, l_max, opts, budget);
            }
            analyze_full_alphabet(w, family, n_max, l_max, opts, budget)
        }
    }
}

/// Builds the morphism on `domain` sending the letter at each index to
/// `a^{powers[index]}`, with the binary codomain.
fn letter_power_morphism(domain: &Alphabet, powers: &[usize]) -> Morphism {
    let binary = Alphabet::binary();
    let a = binary.letter_at(0);
    let images = powers
        .iter()
        .map(|&p| Word::from_letters(&binary, vec![a; p]))
        .collect();
    Morphism::new(domain, &binary, images).expect("powers of one letter are valid images")
}

fn a_power(n: usize) -> Word {
    let binary = Alphabet::binary();
    Word::from_letters(&binary, vec![binary.letter_at(0); n])
}

/// Every morphism allowed: the nonperiodic answer plus the letter-count
/// semigroup; every loose exponent is reachable by collapsing all letters
/// onto powers of one letter.
fn analyze_all(
    w: &Word,
    n_max: usize,
    l_max: usize,
    opts: &SearchOptions,
    budget: &mut Budget,
) -> PexReport {
    let sigma = w.alphabet().clone();
    let inner = analyze(w, MorphismFamily::Nonperiodic, n_max, l_max, opts, budget);
    let mut witnesses: BTreeMap<usize, PowerWitness> = BTreeMap::new();
    for d in 1..=n_max {
        let h = letter_power_morphism(&sigma, &vec![d; sigma.len()]);
        witnesses.insert(
            d,
            PowerWitness {
                morphism: h,
                base: a_power(w.len()),
            },
        );
    }
    let mut pex: BTreeSet<usize> = inner.observed_pex.clone();
    let reps = semigroup_representations(&w.counts(), n_max);
    for (t, rep) in reps.iter().enumerate().skip(1) {
        if let Some(rep) = rep {
            pex.insert(t);
            witnesses.insert(
                t,
                PowerWitness {
                    morphism: letter_power_morphism(&sigma, rep),
                    base: a_power(1),
                },
            );
        }
    }
    for (&e, wit) in &inner.witnesses {
        if inner.observed_pex.contains(&e) {
            witnesses.insert(e, wit.clone());
        }
    }
    PexReport {
        observed_pex: pex,
        observed_gex: (1..=n_max).collect(),
        witnesses,
        complete: inner.complete,
    }
}

/// On a one-letter domain no morphism is nonperiodic, and an injective
/// morphism is exactly a nonempty image, which realizes precisely the
/// multiples of the word length as strict exponents.
fn analyze_unary_domain(w: &Word, family: MorphismFamily, n_max: usize) -> PexReport {
    let sigma = w.alphabet().clone();
    if family == MorphismFamily::Nonperiodic {
        return PexReport {
            observed_pex: BTreeSet::new(),
            observed_gex: BTreeSet::new(),
            witnesses: BTreeMap::new(),
            complete: Completeness::ProvenComplete,
        };
    }
    let m = w.len();
    let mut witnesses = BTreeMap::new();
    let mut pex = BTreeSet::new();
    for d in 1..=n_max {
        if d % m == 0 {
            pex.insert(d);
            witnesses.insert(
                d,
                PowerWitness {
                    morphism: letter_power_morphism(&sigma, &[d / m]),
                    base: a_power(1),
                },
            );
        } else {
            witnesses.insert(
                d,
                PowerWitness {
                    morphism: letter_power_morphism(&sigma, &[d]),
                    base: a_power(m),
                },
            );
        }
    }
    PexReport {
        observed_pex: pex,
        observed_gex: (1..=n_max).collect(),
        witnesses,
        complete: Completeness::ProvenComplete,
    }
}

/// Distinct names not colliding with any name of `taken`.
fn fresh_names(taken: &Alphabet, count: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    for i in 1..=count {
        let mut name = format!("s{i}");
        while taken.contains_name(&name) {
            name.insert(0, '_');
        }
        out.push(name);
    }
    out
}

/// Re-expresses an injective witness on a sub-alphabet as one on the full
/// domain: spare letters map to fresh letters of an intermediate alphabet,
/// which is then embedded back into the binary codomain. The embedding sends
/// primitive words to primitive words, so the witnessed exponent is
/// unchanged.
fn extend_injective_witness(
    wit: &PowerWitness,
    exponent: usize,
    sigma: &Alphabet,
    w: &Word,
) -> PowerWitness {
    let inner_domain = wit.morphism.domain();
    let codomain = wit.morphism.codomain();
    let spares: Vec<&str> = sigma
        .names()
        .filter(|name| !inner_domain.contains_name(name))
        .collect();
    let fresh = fresh_names(codomain, spares.len());
    let mut mid_names: Vec<String> = codomain.names().map(str::to_owned).collect();
    mid_names.extend(fresh.iter().cloned());
    let mid = Alphabet::new(&mid_names).expect("fresh names are distinct");
    let images = sigma
        .names()
        .map(|name| match inner_domain.letter(name) {
            Ok(l) => wit
                .morphism
                .image(l)
                .over_alphabet(&mid)
                .expect("codomain embeds in the intermediate alphabet"),
            Err(_) => {
                let idx = spares.iter().position(|s| *s == name).expect("spare");
                Word::parse(&mid, &fresh[idx]).expect("fresh letter exists")
            }
        })
        .collect();
    let h1 = Morphism::new(sigma, &mid, images).expect("images are valid");
    let embed = Morphism::binary_embedding(&mid);
    let extended = embed.compose(&h1).expect("alphabets chain");
    let base = embed
        .apply(&wit.base.over_alphabet(&mid).expect("base embeds"))
        .expect("base maps");
    debug_assert!(extended.is_injective());
    debug_assert_eq!(
        extended.apply(w).expect("domain matches"),
        base.repeated(exponent)
    );
    PowerWitness {
        morphism: extended,
        base,
    }
}

/// Some domain letter never occurs in the word. For nonperiodic morphisms the
/// spare letter unlocks every loose exponent and the letter-count semigroup;
/// for injective morphisms the spare letters change nothing.
fn analyze_enlarged_domain(
    w: &Word,
    family: MorphismFamily,
    n_max: usize,
    l_max: usize,
    opts: &SearchOptions,
    budget: &mut Budget,
) -> PexReport {
    let sigma = w.alphabet().clone();
    let occurring = w.occurring_alphabet();
    let w_inner = w.over_alphabet(&occurring).expect("occurring letters map");
    let inner = analyze(&w_inner, family, n_max, l_max, opts, budget);

    if family == MorphismFamily::Injective {
        let witnesses = inner
            .witnesses
            .iter()
            .map(|(&e, wit)| (e, extend_injective_witness(wit, e, &sigma, w)))
            .collect();
        return PexReport {
            observed_pex: inner.observed_pex,
            observed_gex: inner.observed_gex,
            witnesses,
            complete: inner.complete,
        };
    }

    let binary = Alphabet::binary();
    let b = binary.letter_at(1);
    let spare_aware = |occ_powers: &BTreeMap<&str, usize>| -> Morphism {
        let images = sigma
            .names()
            .map(|name| match occ_powers.get(name) {
                Some(&p) => a_power(p),
                None => Word::from_letters(&binary, vec![b]),
            })
            .collect();
        Morphism::new(&sigma, &binary, images).expect("images are valid")
    };

    let mut witnesses: BTreeMap<usize, PowerWitness> = BTreeMap::new();
    let first = occurring.name(occurring.letter_at(0));
    let first_count = w_inner.count_of(occurring.letter_at(0));
    for d in 1..=n_max {
        let mut powers: BTreeMap<&str, usize> = occurring.names().map(|n| (n, 0)).collect();
        powers.insert(first, d);
        witnesses.insert(
            d,
            PowerWitness {
                morphism: spare_aware(&powers),
                base: a_power(first_count),
            },
        );
    }

    let mut pex: BTreeSet<usize> = inner.observed_pex.clone();
    let occ_counts = w_inner.counts();
    let reps = semigroup_representations(&occ_counts, n_max);
    for (t, rep) in reps.iter().enumerate().skip(1) {
        if let Some(rep) = rep {
            pex.insert(t);
            let powers: BTreeMap<&str, usize> = occurring
                .letters()
                .map(|l| (occurring.name(l), rep[l.index()]))
                .collect();
            witnesses.insert(
                t,
                PowerWitness {
                    morphism: spare_aware(&powers),
                    base: a_power(1),
                },
            );
        }
    }

    for (&e, wit) in &inner.witnesses {
        if inner.observed_pex.contains(&e) {
            let extended = wit
                .morphism
                .extended(&sigma)
                .expect("domain contains the occurring letters");
            witnesses.insert(
                e,
                PowerWitness {
                    morphism: extended,
                    base: wit.base.clone(),
                },
            );
        }
    }

    PexReport {
        observed_pex: pex,
        observed_gex: (1..=n_max).collect(),
        witnesses,
        complete: inner.complete,
    }
}

/// Every domain letter occurs. Closed forms cover a single-occurrence letter
/// in the root (all exponents scale up) and a two-letter domain (exponent
/// exactly the word's own); otherwise the bounded enumeration runs.
fn analyze_full_alphabet(
    w: &Word,
    family: MorphismFamily,
    n_max: usize,
    l_max: usize,
    opts: &SearchOptions,
    budget: &mut Budget,
) -> PexReport {
    let sigma = w.alphabet().clone();
    let root = w.primitive_root().expect("word is nonempty");
    let r = root.root;
    let k = root.exponent;

    if let Some(unique) = sigma.letters().find(|&l| r.count_of(l) == 1) {
        let mut witnesses = BTreeMap::new();
        let mut pex = BTreeSet::new();
        for d in 1..=n_max {
            let witness = if d % k == 0 {
                pex.insert(d);
                let built = construct_unique_letter_morphism(&r, unique, d / k)
                    .expect("root is primitive with a unique letter");
                PowerWitness {
                    morphism: built.morphism,
                    base: r.clone(),
                }
            } else {
                let built = construct_unique_letter_morphism(&r, unique, d)
                    .expect("root is primitive with a unique letter");
                PowerWitness {
                    morphism: built.morphism,
                    base: r.repeated(k),
                }
            };
            witnesses.insert(d, witness);
        }
        return PexReport {
            observed_pex: pex,
            observed_gex: (1..=n_max).collect(),
            witnesses,
            complete: Completeness::ProvenComplete,
        };
    }

    if sigma.len() == 2 {
        let identity = Morphism::identity(&sigma);
        let mut witnesses = BTreeMap::new();
        let mut gex = BTreeSet::new();
        for d in 1..=n_max.min(k) {
            if !k.is_multiple_of(d) {
                continue;
            }
            gex.insert(d);
            witnesses.insert(
                d,
                PowerWitness {
                    morphism: identity.clone(),
                    base: r.repeated(k / d),
                },
            );
        }
        let pex = if k <= n_max {
            BTreeSet::from([k])
        } else {
            BTreeSet::new()
        };
        return PexReport {
            observed_pex: pex,
            observed_gex: gex,
            witnesses,
            complete: Completeness::ProvenComplete,
        };
    }

    let inj_cap = (family == MorphismFamily::Injective).then(|| k * r.len());
    enumerate_power_hits(w, k, inj_cap, family, n_max, l_max, opts, budget)
}

/// Exhaustive scan over all binary-codomain morphisms with per-image length
/// at most `l_max`, collecting for every realized full exponent the first
/// candidate in canonical order.
#[allow(clippy::too_many_arguments)]
fn enumerate_power_hits(
    w: &Word,
    k: usize,
    inj_exponent_cap: Option<usize>,
    family: MorphismFamily,
    n_max: usize,
    l_max: usize,
    opts: &SearchOptions,
    budget: &mut Budget,
) -> PexReport {
    let sigma = w.alphabet().clone();
    let binary = Alphabet::binary();
    let counts = w.counts();
    let vectors = length_vectors(sigma.len(), l_max, sigma.len() * l_max);
    let spaces: Vec<VectorSpace> = vectors
        .iter()
        .map(|lens| VectorSpace::new(lens, binary.len()))
        .collect();

    let mut found: BTreeMap<usize, (usize, u64)> = BTreeMap::new();
    for (vi, lens) in vectors.iter().enumerate() {
        let weighted: usize = lens.iter().zip(&counts).map(|(l, c)| l * c).sum();
        if weighted == 0 {
            continue;
        }
        if family == MorphismFamily::Injective && lens.contains(&0) {
            continue;
        }
        let space = &spaces[vi];
        let allowed = budget.take(space.count());
        let hits = min_index_per_key(allowed, opts, |rank| {
            let h = space.morphism(u128::from(rank), &sigma, &binary);
            if !h.in_family(family) {
                return None;
            }
            let image = h.apply(w).expect("domain matches");
            let e = exponent_of(image.letters());
            debug_assert!(
                e >= 1 && e.is_multiple_of(k),
                "image exponent must scale with the root"
            );
            if let Some(cap) = inj_exponent_cap {
                debug_assert!(e < cap, "injective exponent exceeds the theoretical bound");
            }
            Some(e)
        });
        for (e, rank) in hits {
            found.entry(e).or_insert((vi, rank));
        }
        if budget.truncated() {
            break;
        }
    }

    let candidate = |vi: usize, rank: u64| spaces[vi].morphism(u128::from(rank), &sigma, &binary);
    let mut witnesses: BTreeMap<usize, PowerWitness> = BTreeMap::new();
    let mut observed_gex = BTreeSet::new();
    for d in 1..=n_max {
        let best = found
            .iter()
            .filter(|(e, _)| *e % d == 0)
            .map(|(e, &(vi, rank))| ((vi, rank), *e))
            .min();
        if let Some(((vi, rank), e)) = best {
            observed_gex.insert(d);
            let h = candidate(vi, rank);
            let (root, exp) = image_root(&h, w).expect("image is nonempty");
            debug_assert_eq!(exp, e);
            witnesses.insert(
                d,
                PowerWitness {
                    morphism: h,
                    base: root.repeated(e / d),
                },
            );
        }
    }
    let observed_pex: BTreeSet<usize> = found.keys().copied().filter(|&e| e <= n_max).collect();
    for &e in &observed_pex {
        let (vi, rank) = found[&e];
        let h = candidate(vi, rank);
        let (root, exp) = image_root(&h, w).expect("image is nonempty");
        debug_assert_eq!(exp, e);
        witnesses.insert(
            e,
            PowerWitness {
                morphism: h,
                base: root,
            },
        );
    }

    PexReport {
        observed_pex,
        observed_gex,
        witnesses,
        complete: Completeness::CompleteUpToBound,
    }
}
