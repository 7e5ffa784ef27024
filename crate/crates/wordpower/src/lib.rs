//! Words, morphisms, and bounded searches for power-mapping morphisms.
//!
//! The library answers questions of the form: given a finite word `w`, which
//! exponents `n` admit a morphism `h` (drawn from a restricted family) with
//! `h(w) = u^n` for some `u`, or with `h(w)` a nontrivial power? It provides
//!
//! * combinatorics on words: primitive roots, conjugacy, periodicity
//!   ([`words`]),
//! * morphism families and their membership tests ([`morphism`]),
//! * deterministic bounded enumeration of morphisms ([`enumerate`]),
//! * exponent-set computation with closed forms where available ([`pex`]),
//! * explicit constructions of morphisms mapping a word to a high power
//!   ([`construct`]),
//! * word equations, bounded satisfiability search ([`equation`], [`solve`]),
//!   and polynomial reductions between the decision problems ([`reduce`]).
//!
//! All searches are deterministic: results do not depend on thread count or
//! on whether the `parallel` feature is enabled.

pub mod construct;
pub mod enumerate;
pub mod equation;
pub mod morphism;
pub mod pex;
pub mod reduce;
pub mod solve;
pub mod words;

pub use construct::{
    construct_lower_bound_instance, construct_unique_letter_morphism,
    construct_unique_letter_morphism_unchecked, HighPowerWitness,
};
pub use enumerate::{enumerate_morphisms, SearchOptions};
pub use equation::{xy_words, Equation, EquationSystem};
pub use morphism::{Morphism, MorphismFamily};
pub use pex::{
    classify_injective, gex_from_pex, pex_all_morphisms_closed_form, pex_bounded, pex_bounded_with,
    pex_enlarged_domain_closed_form, pex_scale_by_primitive_power, Completeness, InjClassification,
    InjKind, InjReason, PexQuery, PexReport, PowerWitness,
};
pub use reduce::{
    balance_system, balance_witness_back, balance_witness_forward, balanced_system_of,
    eqsat_witness_back, eqsat_witness_forward, eqsatcf_to_eqsat, eqsatcf_to_nonprim,
    eqsatcf_to_pow, nonprim_system_witness_back, nonprim_system_witness_forward, nonprim_to_system,
    nonprim_word_witness_back, nonprim_word_witness_forward, pow_to_equation, pow_witness_back,
    pow_witness_forward,
};
pub use solve::{
    find_nonprim_witness, find_power_witness, solve_bounded, solve_bounded_with, SolveOutcome,
    SolveStatus,
};
pub use words::{
    are_conjugate, fine_wilf_root, is_internal_factor, Alphabet, Letter, PrimitiveRoot, Word,
};

/// Errors reported by fallible operations across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The empty word has no primitive root and no exponent.
    #[error("empty word has no primitive root")]
    EmptyWord,
    /// A letter name was not found in the relevant alphabet.
    #[error("unknown letter {name:?} in alphabet {alphabet}")]
    UnknownLetter { name: String, alphabet: String },
    /// An alphabet could not be built as requested.
    #[error("invalid alphabet: {0}")]
    BadAlphabet(String),
    /// Two values that must share an alphabet do not.
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    /// Text input did not match the expected format.
    #[error("parse error: {0}")]
    Parse(String),
    /// A precondition of the requested operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
