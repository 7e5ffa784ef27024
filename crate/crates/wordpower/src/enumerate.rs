//! Deterministic enumeration of morphisms.
//!
//! Candidates are ordered by image-length vector first (total length
//! ascending, then lexicographically, with earlier domain letters more
//! significant) and within a fixed vector by reading the concatenated images
//! as a base-`m` numeral over the codomain, most significant letter first.
//! Every search in the crate visits candidates in this order or computes
//! order-independent aggregates over it, so results never depend on thread
//! count.

use std::collections::BTreeMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::{Alphabet, Letter, Morphism, Word};

/// Tuning knobs for bounded searches.
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Cap on the number of candidate morphisms a search may examine.
    /// Exceeding it truncates the search, which is reported by the caller as
    /// an inconclusive result, never as a wrong one.
    pub max_candidates: Option<u64>,
    /// Run on the current thread even when the `parallel` feature is active.
    pub force_sequential: bool,
}

/// All image-length vectors for `m` slots with each entry at most `per_cap`
/// and the sum at most `total_cap`, ordered by total ascending and then
/// lexicographically.
pub(crate) fn length_vectors(m: usize, per_cap: usize, total_cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; m];
    fn rec(
        slot: usize,
        remaining: usize,
        per_cap: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slot == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=per_cap.min(remaining) {
            current[slot] = v;
            rec(slot + 1, remaining - v, per_cap, current, out);
        }
    }
    rec(0, total_cap, per_cap, &mut current, &mut out);
    out.sort_by(|a, b| {
        let (sa, sb) = (a.iter().sum::<usize>(), b.iter().sum::<usize>());
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    out
}

/// The candidate space for one image-length vector: every assignment of
/// codomain letters to the image slots, ranked in base `m` with the earlier
/// slots more significant.
pub(crate) struct VectorSpace {
    lens: Vec<usize>,
    total: usize,
    m: usize,
    count: u128,
}

impl VectorSpace {
    pub(crate) fn new(lens: &[usize], codomain_size: usize) -> Self {
        let total: usize = lens.iter().sum();
        let count = if total == 0 {
            1u128
        } else {
            let mut c = 1u128;
            for _ in 0..total {
                c = c.saturating_mul(codomain_size as u128);
            }
            c
        };
        Self {
            lens: lens.to_vec(),
            total,
            m: codomain_size,
            count,
        }
    }

    /// Number of candidates, saturating at `u128::MAX`.
    pub(crate) fn count(&self) -> u128 {
        self.count
    }

    /// Writes the concatenated images of candidate `rank` into `buf`.
    pub(crate) fn decode_flat(&self, rank: u128, buf: &mut Vec<Letter>, codomain: &Alphabet) {
        debug_assert!(rank < self.count);
        buf.clear();
        if self.total == 0 {
            return;
        }
        buf.resize(self.total, codomain.letter_at(0));
        let mut r = rank;
        for slot in (0..self.total).rev() {
            let digit = (r % self.m as u128) as usize;
            r /= self.m as u128;
            buf[slot] = codomain.letter_at(digit);
        }
    }

    /// The morphism for candidate `rank`.
    pub(crate) fn morphism(&self, rank: u128, domain: &Alphabet, codomain: &Alphabet) -> Morphism {
        let mut flat = Vec::new();
        self.decode_flat(rank, &mut flat, codomain);
        let mut images = Vec::with_capacity(self.lens.len());
        let mut offset = 0;
        for &len in &self.lens {
            images.push(Word::from_letters(
                codomain,
                flat[offset..offset + len].to_vec(),
            ));
            offset += len;
        }
        Morphism::new(domain, codomain, images).expect("decoded images are valid")
    }
}

/// All morphisms from `domain` to `codomain` whose images have total length
/// at most `max_total_image_len`, in the canonical search order.
pub fn enumerate_morphisms(
    domain: &Alphabet,
    codomain: &Alphabet,
    max_total_image_len: usize,
) -> impl Iterator<Item = Morphism> {
    let domain = domain.clone();
    let codomain = codomain.clone();
    let vectors = length_vectors(domain.len(), max_total_image_len, max_total_image_len);
    vectors.into_iter().flat_map(move |lens| {
        let space = VectorSpace::new(&lens, codomain.len());
        let domain = domain.clone();
        let codomain = codomain.clone();
        (0..space.count()).map(move |rank| space.morphism(rank, &domain, &codomain))
    })
}

/// Tracks how many candidates a multi-stage search may still examine.
pub(crate) struct Budget {
    cap: Option<u64>,
    used: u64,
    truncated: bool,
}

impl Budget {
    pub(crate) fn new(cap: Option<u64>) -> Self {
        Self {
            cap,
            used: 0,
            truncated: false,
        }
    }

    /// Grants up to `want` candidates, recording truncation when short.
    pub(crate) fn take(&mut self, want: u128) -> u64 {
        let available = match self.cap {
            Some(cap) => u128::from(cap.saturating_sub(self.used)),
            None => u128::from(u64::MAX),
        };
        let granted = want.min(available);
        if granted < want {
            self.truncated = true;
        }
        self.used = self.used.saturating_add(granted as u64);
        granted as u64
    }

    pub(crate) fn truncated(&self) -> bool {
        self.truncated
    }
}

pub(crate) fn run_parallel(opts: &SearchOptions) -> bool {
    cfg!(feature = "parallel") && !opts.force_sequential
}

/// Smallest index in `0..n` accepted by `pred`, independent of scheduling.
pub(crate) fn first_match<F>(n: u64, opts: &SearchOptions, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    if run_parallel(opts) {
        return (0..n).into_par_iter().find_first(|&r| pred(r));
    }
    let _ = opts;
    (0..n).find(|&r| pred(r))
}

/// For every key produced by `key_of`, the smallest index in `0..n` that
/// produces it. Aggregation commutes, so the result is scheduling-independent.
pub(crate) fn min_index_per_key<K, F>(n: u64, opts: &SearchOptions, key_of: F) -> BTreeMap<K, u64>
where
    K: Ord + Send,
    F: Fn(u64) -> Option<K> + Sync,
{
    #[cfg(feature = "parallel")]
    if run_parallel(opts) {
        return (0..n)
            .into_par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<K, u64>, r| {
                if let Some(k) = key_of(r) {
                    acc.entry(k).or_insert(r);
                }
                acc
            })
            .reduce(BTreeMap::new, |mut left, right| {
                for (k, r) in right {
                    left.entry(k)
                        .and_modify(|cur| *cur = (*cur).min(r))
                        .or_insert(r);
                }
                left
            });
    }
    let _ = opts;
    let mut acc = BTreeMap::new();
    for r in 0..n {
        if let Some(k) = key_of(r) {
            acc.entry(k).or_insert(r);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary() -> Alphabet {
        Alphabet::binary()
    }

    #[test]
    fn length_vector_order() {
        assert_eq!(
            length_vectors(2, 2, 2),
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![0, 2],
                vec![1, 1],
                vec![2, 0],
            ]
        );
        assert_eq!(length_vectors(0, 3, 3), vec![Vec::<usize>::new()]);
        assert_eq!(length_vectors(1, 2, 5), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn enumeration_counts() {
        for (bound, expected) in [(0usize, 1usize), (1, 5), (2, 17)] {
            let count = enumerate_morphisms(&binary(), &binary(), bound).count();
            assert_eq!(count, expected, "bound {bound}");
        }
    }

    #[test]
    fn enumeration_prefix_stability_and_uniqueness() {
        let small: Vec<Morphism> = enumerate_morphisms(&binary(), &binary(), 2).collect();
        let large: Vec<Morphism> = enumerate_morphisms(&binary(), &binary(), 3).collect();
        assert_eq!(&large[..small.len()], &small[..]);
        let mut seen = std::collections::HashSet::new();
        for h in &large {
            assert!(seen.insert(h.to_string()), "duplicate {h}");
        }
    }

    #[test]
    fn enumeration_initial_segment() {
        let first: Vec<String> = enumerate_morphisms(&binary(), &binary(), 1)
            .map(|h| h.to_string())
            .collect();
        assert_eq!(
            first,
            vec!["a->;b->", "a->;b->a", "a->;b->b", "a->a;b->", "a->b;b->"]
        );
    }

    #[test]
    fn vector_space_rank_order() {
        let space = VectorSpace::new(&[2, 1], 2);
        assert_eq!(space.count(), 8);
        let images: Vec<String> = (0..8)
            .map(|r| space.morphism(r, &binary(), &binary()).to_string())
            .collect();
        assert_eq!(
            images,
            vec![
                "a->aa;b->a",
                "a->aa;b->b",
                "a->ab;b->a",
                "a->ab;b->b",
                "a->ba;b->a",
                "a->ba;b->b",
                "a->bb;b->a",
                "a->bb;b->b",
            ]
        );
    }

    #[test]
    fn scan_helpers_match_sequential() {
        let seq = SearchOptions {
            force_sequential: true,
            ..Default::default()
        };
        let par = SearchOptions::default();
        let pred = |r: u64| r % 7 == 3;
        assert_eq!(first_match(100, &seq, pred), Some(3));
        assert_eq!(first_match(100, &par, pred), Some(3));
        assert_eq!(first_match(3, &par, pred), None);

        let key = |r: u64| {
            if r.is_multiple_of(2) {
                Some(r % 10)
            } else {
                None
            }
        };
        let a = min_index_per_key(1000, &seq, key);
        let b = min_index_per_key(1000, &par, key);
        assert_eq!(a, b);
        assert_eq!(a.get(&4), Some(&4));
        assert_eq!(a.get(&0), Some(&0));
        assert_eq!(a.len(), 5);
    }
}
