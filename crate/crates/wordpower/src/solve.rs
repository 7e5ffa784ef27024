//! Bounded satisfiability search for word-equation systems.
//!
//! [`solve_bounded`] enumerates candidate solutions in the canonical order
//! (image-length vectors by total then lexicographically, candidates within a
//! vector by rank) with every variable image capped at a given length.
//! Finding a solution settles satisfiability; exhausting the bound does not,
//! so the negative outcome is reported as unknown rather than unsatisfiable.
//! [`find_power_witness`] and [`find_nonprim_witness`] run the same search
//! directly on the image of a single word.

use crate::enumerate::{first_match, length_vectors, Budget, SearchOptions, VectorSpace};
use crate::words::exponent_of;
use crate::{Alphabet, EquationSystem, Error, Morphism, MorphismFamily, Result, Word};

/// Outcome status of a bounded search.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SolveStatus {
    /// A witness was found; the instance is satisfiable.
    Sat,
    /// No witness exists within the bound; satisfiability is undecided.
    UnknownAtBound,
}

/// Outcome of a bounded search.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// The first witness in canonical order, when one was found.
    pub witness: Option<Morphism>,
    /// The per-image length bound the search ran with.
    pub bound_used: usize,
    /// Whether a candidate cap cut the scan short of the full bound.
    pub hit_search_cap: bool,
}

/// Searches for a family morphism solving the system, with every variable
/// image at most `max_image_len` letters long, using default options.
pub fn solve_bounded(
    s: &EquationSystem,
    family: MorphismFamily,
    max_image_len: usize,
    codomain: &Alphabet,
) -> Result<SolveOutcome> {
    solve_bounded_with(
        s,
        family,
        max_image_len,
        codomain,
        &SearchOptions::default(),
    )
}

/// [`solve_bounded`] with explicit search options.
pub fn solve_bounded_with(
    s: &EquationSystem,
    family: MorphismFamily,
    max_image_len: usize,
    codomain: &Alphabet,
    opts: &SearchOptions,
) -> Result<SolveOutcome> {
    if !s.constants().is_empty() {
        if family != MorphismFamily::All {
            return Err(Error::Precondition(
                "systems with constants are only searched over the unrestricted family".into(),
            ));
        }
        for name in s.constants().names() {
            codomain.letter(name)?;
        }
    }
    let vars = s.variables();
    let symbols = s.symbols();
    let m = vars.len();
    let const_images: Vec<Word> = s
        .constants()
        .names()
        .map(|name| {
            let l = codomain.letter(name).expect("checked above");
            Word::from_letters(codomain, vec![l])
        })
        .collect();
    let side_counts: Vec<(Vec<usize>, Vec<usize>)> = s
        .equations()
        .iter()
        .map(|eq| (eq.lhs.counts(), eq.rhs.counts()))
        .collect();
    let side_len = |counts: &[usize], lens: &[usize]| -> usize {
        counts
            .iter()
            .enumerate()
            .map(|(j, &c)| if j < m { c * lens[j] } else { c })
            .sum()
    };

    let mut budget = Budget::new(opts.max_candidates);
    let vectors = length_vectors(m, max_image_len, m * max_image_len);
    for lens in &vectors {
        if side_counts
            .iter()
            .any(|(l, r)| side_len(l, lens) != side_len(r, lens))
        {
            continue;
        }
        if family == MorphismFamily::Injective && lens.contains(&0) {
            continue;
        }
        let space = VectorSpace::new(lens, codomain.len());
        let allowed = budget.take(space.count());
        let build = |rank: u64| {
            let var_part = space.morphism(u128::from(rank), vars, codomain);
            let mut images = var_part.images().to_vec();
            images.extend(const_images.iter().cloned());
            Morphism::new(symbols, codomain, images).expect("variable and constant images line up")
        };
        let found = first_match(allowed, opts, |rank| {
            let h = build(rank);
            if !h.in_family(family) {
                return false;
            }
            s.equations().iter().all(|eq| {
                h.apply(&eq.lhs)
                    .expect("equation sides are over the symbols")
                    == h.apply(&eq.rhs)
                        .expect("equation sides are over the symbols")
            })
        });
        if let Some(rank) = found {
            let h = build(rank);
            debug_assert!(s.check_solution(&h).unwrap_or(false));
            debug_assert!(h.in_family(family));
            return Ok(SolveOutcome {
                status: SolveStatus::Sat,
                witness: Some(h),
                bound_used: max_image_len,
                hit_search_cap: budget.truncated(),
            });
        }
        if budget.truncated() {
            break;
        }
    }
    Ok(SolveOutcome {
        status: SolveStatus::UnknownAtBound,
        witness: None,
        bound_used: max_image_len,
        hit_search_cap: budget.truncated(),
    })
}

/// Searches the word's own alphabet for a family morphism into the binary
/// alphabet whose image of `w` satisfies `accept` on its exponent, skipping
/// length vectors whose image length fails `feasible_len`.
fn search_image_condition(
    w: &Word,
    family: MorphismFamily,
    max_image_len: usize,
    accept: impl Fn(usize) -> bool + Sync,
    feasible_len: impl Fn(usize) -> bool,
) -> Result<SolveOutcome> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let opts = SearchOptions::default();
    let sigma = w.alphabet();
    let binary = Alphabet::binary();
    let counts = w.counts();
    let mut budget = Budget::new(opts.max_candidates);
    let vectors = length_vectors(sigma.len(), max_image_len, sigma.len() * max_image_len);
    for lens in &vectors {
        let t: usize = lens.iter().zip(&counts).map(|(l, c)| l * c).sum();
        if !feasible_len(t) {
            continue;
        }
        if family == MorphismFamily::Injective && lens.contains(&0) {
            continue;
        }
        let space = VectorSpace::new(lens, binary.len());
        let allowed = budget.take(space.count());
        let found = first_match(allowed, &opts, |rank| {
            let h = space.morphism(u128::from(rank), sigma, &binary);
            if !h.in_family(family) {
                return false;
            }
            accept(exponent_of(h.apply(w).expect("domain matches").letters()))
        });
        if let Some(rank) = found {
            let h = space.morphism(u128::from(rank), sigma, &binary);
            return Ok(SolveOutcome {
                status: SolveStatus::Sat,
                witness: Some(h),
                bound_used: max_image_len,
                hit_search_cap: budget.truncated(),
            });
        }
        if budget.truncated() {
            break;
        }
    }
    Ok(SolveOutcome {
        status: SolveStatus::UnknownAtBound,
        witness: None,
        bound_used: max_image_len,
        hit_search_cap: budget.truncated(),
    })
}

/// First family morphism in canonical order mapping `w` onto a nonempty
/// `n`-th power, with per-image lengths at most `max_image_len`.
pub fn find_power_witness(
    w: &Word,
    n: usize,
    family: MorphismFamily,
    max_image_len: usize,
) -> Result<SolveOutcome> {
    if n < 1 {
        return Err(Error::Precondition("power index must be positive".into()));
    }
    search_image_condition(
        w,
        family,
        max_image_len,
        |e| e >= 1 && e % n == 0,
        |t| t >= 1 && t % n == 0,
    )
}

/// First family morphism in canonical order mapping `w` onto a proper power
/// of a nonempty word, with per-image lengths at most `max_image_len`.
pub fn find_nonprim_witness(
    w: &Word,
    family: MorphismFamily,
    max_image_len: usize,
) -> Result<SolveOutcome> {
    search_image_condition(w, family, max_image_len, |e| e >= 2, |t| t >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary() -> Alphabet {
        Alphabet::binary()
    }

    fn system(text: &str) -> EquationSystem {
        EquationSystem::parse(text).unwrap()
    }

    fn witness_text(outcome: &SolveOutcome) -> String {
        outcome.witness.as_ref().unwrap().to_string()
    }

    #[test]
    fn commutation_equation_first_witness() {
        let s = system("vars:x,y,z\nconsts:\nxx = yzy\n");
        let outcome = solve_bounded(&s, MorphismFamily::Nonperiodic, 4, &binary()).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
        assert_eq!(witness_text(&outcome), "x->aba;y->a;z->baab");
        assert!(s.check_solution(outcome.witness.as_ref().unwrap()).unwrap());
        assert_eq!(outcome.bound_used, 4);
        assert!(!outcome.hit_search_cap);
    }

    #[test]
    fn shift_equations_first_witnesses() {
        let s = system("vars:x,y,z\nconsts:\nxy = yz\n");
        let outcome = solve_bounded(&s, MorphismFamily::Nonperiodic, 2, &binary()).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
        assert_eq!(witness_text(&outcome), "x->ab;y->a;z->ba");

        let s = system("vars:x,y,z\nconsts:\nxz = zy\n");
        let outcome = solve_bounded(&s, MorphismFamily::Nonperiodic, 2, &binary()).unwrap();
        assert_eq!(witness_text(&outcome), "x->ab;y->ba;z->a");

        let s = system("vars:x,y,z\nconsts:\nxyz = zyx\n");
        let outcome = solve_bounded(&s, MorphismFamily::Nonperiodic, 1, &binary()).unwrap();
        assert_eq!(witness_text(&outcome), "x->a;y->b;z->a");
    }

    #[test]
    fn square_equations_first_witnesses() {
        let s = system("vars:x,y,z\nconsts:\nxy = zz\n");
        let outcome = solve_bounded(&s, MorphismFamily::Nonperiodic, 3, &binary()).unwrap();
        assert_eq!(witness_text(&outcome), "x->a;y->bab;z->ab");

        let s = system("vars:x,y,z\nconsts:\nxyx = zz\n");
        let outcome = solve_bounded(&s, MorphismFamily::Nonperiodic, 4, &binary()).unwrap();
        assert_eq!(witness_text(&outcome), "x->a;y->baab;z->aba");
    }

    #[test]
    fn periodic_only_systems_stay_unknown() {
        for text in [
            "vars:x,y\nconsts:\nxy = yx\n",
            "vars:x,y,z\nconsts:\nxxx = yyzz\n",
            "vars:x,y\nconsts:\nxx = yy\n",
            "vars:x,y\nconsts:\nx = yy\n",
            "vars:x,y\nconsts:\nxxy = yxx\n",
        ] {
            let s = system(text);
            let outcome = solve_bounded(&s, MorphismFamily::Nonperiodic, 3, &binary()).unwrap();
            assert_eq!(outcome.status, SolveStatus::UnknownAtBound, "{text}");
            assert!(outcome.witness.is_none());
            assert!(!outcome.hit_search_cap);
        }
    }

    #[test]
    fn constants_pin_their_letters() {
        let s = system("vars:x\nconsts:a\nxa = ax\n");
        let outcome = solve_bounded(&s, MorphismFamily::All, 2, &binary()).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
        assert_eq!(witness_text(&outcome), "x->;a->a");

        let err = solve_bounded(&s, MorphismFamily::Nonperiodic, 2, &binary()).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));

        let wrong = Alphabet::new(&["c", "d"]).unwrap();
        assert!(solve_bounded(&s, MorphismFamily::All, 2, &wrong).is_err());
    }

    #[test]
    fn empty_images_can_solve_under_the_unrestricted_family() {
        let s = system("vars:x,y\nconsts:\nx = y\n");
        let outcome = solve_bounded(&s, MorphismFamily::All, 0, &binary()).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
        assert_eq!(witness_text(&outcome), "x->;y->");
    }

    #[test]
    fn injective_solutions_exist_only_for_identical_sides() {
        let s = system("vars:x,y\nconsts:\nxy = yx\n");
        let outcome = solve_bounded(&s, MorphismFamily::Injective, 3, &binary()).unwrap();
        assert_eq!(outcome.status, SolveStatus::UnknownAtBound);

        let s = system("vars:x,y,z\nconsts:\nxy = yz\n");
        let outcome = solve_bounded(&s, MorphismFamily::Injective, 2, &binary()).unwrap();
        assert_eq!(outcome.status, SolveStatus::UnknownAtBound);

        let s = system("vars:x\nconsts:\nx = x\n");
        let outcome = solve_bounded(&s, MorphismFamily::Injective, 1, &binary()).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
        assert_eq!(witness_text(&outcome), "x->a");
    }

    #[test]
    fn sat_persists_as_the_bound_grows() {
        let s = system("vars:x,y,z\nconsts:\nxx = yzy\n");
        for bound in 4..=6 {
            let outcome = solve_bounded(&s, MorphismFamily::Nonperiodic, bound, &binary()).unwrap();
            assert_eq!(outcome.status, SolveStatus::Sat, "bound {bound}");
            assert!(s.check_solution(outcome.witness.as_ref().unwrap()).unwrap());
        }
    }

    #[test]
    fn candidate_cap_reports_truncation() {
        let s = system("vars:x,y,z\nconsts:\nxx = yzy\n");
        let outcome = solve_bounded_with(
            &s,
            MorphismFamily::Nonperiodic,
            4,
            &binary(),
            &SearchOptions {
                max_candidates: Some(5),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(outcome.status, SolveStatus::UnknownAtBound);
        assert!(outcome.hit_search_cap);
    }

    #[test]
    fn sequential_and_parallel_witnesses_agree() {
        let s = system("vars:x,y,z\nconsts:\nxx = yzy\n");
        let par = solve_bounded(&s, MorphismFamily::Nonperiodic, 4, &binary()).unwrap();
        let seq = solve_bounded_with(
            &s,
            MorphismFamily::Nonperiodic,
            4,
            &binary(),
            &SearchOptions {
                force_sequential: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(par.witness, seq.witness);
    }

    #[test]
    fn power_witness_examples() {
        let w = Word::parse(&binary(), "aa").unwrap();
        let outcome = find_power_witness(&w, 2, MorphismFamily::Nonperiodic, 1).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
        assert_eq!(witness_text(&outcome), "a->a;b->b");

        let w = Word::parse(&binary(), "aabb").unwrap();
        let outcome = find_power_witness(&w, 2, MorphismFamily::Nonperiodic, 3).unwrap();
        assert_eq!(outcome.status, SolveStatus::UnknownAtBound);

        let ternary = Alphabet::new(&["a", "b", "c"]).unwrap();
        let w = Word::parse(&ternary, "abbacc").unwrap();
        let outcome = find_power_witness(&w, 2, MorphismFamily::Nonperiodic, 4).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
        assert_eq!(witness_text(&outcome), "a->a;b->b;c->b");
        let h = outcome.witness.unwrap();
        let image = h.apply(&w).unwrap();
        assert_eq!(image.to_string(), "abbabb");
        assert!(!h.is_periodic());
    }

    #[test]
    fn power_witness_validation() {
        let w = Word::parse(&binary(), "aa").unwrap();
        assert!(find_power_witness(&w, 0, MorphismFamily::All, 2).is_err());
        let empty = Word::empty(&binary());
        assert!(find_power_witness(&empty, 2, MorphismFamily::All, 2).is_err());
        assert!(find_nonprim_witness(&empty, MorphismFamily::All, 2).is_err());
    }

    #[test]
    fn nonprim_witness_examples() {
        let w = Word::parse(&binary(), "aa").unwrap();
        let outcome = find_nonprim_witness(&w, MorphismFamily::Nonperiodic, 1).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
        assert_eq!(witness_text(&outcome), "a->a;b->b");

        let w = Word::parse(&binary(), "aabb").unwrap();
        let outcome = find_nonprim_witness(&w, MorphismFamily::Nonperiodic, 3).unwrap();
        assert_eq!(outcome.status, SolveStatus::UnknownAtBound);

        let w = Word::parse(&binary(), "ab").unwrap();
        let outcome = find_nonprim_witness(&w, MorphismFamily::Injective, 2).unwrap();
        assert_eq!(outcome.status, SolveStatus::UnknownAtBound);
        let outcome = find_nonprim_witness(&w, MorphismFamily::Injective, 3).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
        assert_eq!(witness_text(&outcome), "a->a;b->bab");
        let h = outcome.witness.unwrap();
        assert!(h.is_injective());
        let e = exponent_of(h.apply(&w).unwrap().letters());
        assert!(e >= 2);
    }

    #[test]
    fn solutions_at_zero_bound_without_variables() {
        let vars = Alphabet::new::<&str>(&[]).unwrap();
        let consts = Alphabet::new(&["a"]).unwrap();
        let mut s = EquationSystem::new(&vars, &consts).unwrap();
        s.push_equation_text("a", "a").unwrap();
        let outcome = solve_bounded(&s, MorphismFamily::All, 0, &binary()).unwrap();
        assert_eq!(outcome.status, SolveStatus::Sat);
    }
}
