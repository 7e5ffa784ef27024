//! Reductions between power conditions and word-equation satisfiability.
//!
//! Every construction in this module rewrites an instance of one decision
//! problem into an instance of another, growing at most polynomially, and is
//! paired with transport functions that carry a concrete witness morphism
//! across the rewrite in each direction. A transport re-verifies the morphism
//! it returns against the target instance and reports a precondition error
//! instead of handing back an unchecked witness.
//!
//! The rewrites:
//!
//! * [`balance_system`] turns a constant-free system into a single balanced
//!   equation with the same nonperiodic solutions.
//! * [`eqsatcf_to_eqsat`] trades the nonperiodicity restriction for two fresh
//!   constants, pinning the images of the variable-shuffle words apart.
//! * [`pow_to_equation`] expresses "some morphism maps this word onto an
//!   n-th power" as a system with one fresh variable.
//! * [`nonprim_to_system`] expresses "some morphism maps this word onto a
//!   proper power" with two fresh variables.
//! * [`eqsatcf_to_pow`] and [`eqsatcf_to_nonprim`] go the other way, from a
//!   constant-free system to a single word whose power condition is
//!   equivalent to nonperiodic solvability.

use crate::equation::xy_words;
use crate::words::exponent_of;
use crate::{Alphabet, Equation, EquationSystem, Error, Morphism, Result, Word};

/// Variable names reserved by the constructions in this module.
const FRESH_X: &str = "_x";
const FRESH_Y: &str = "_y";
const FRESH_Z: &str = "_z";
/// Constant names reserved by [`eqsatcf_to_eqsat`].
const FRESH_A: &str = "_a";
const FRESH_B: &str = "_b";

fn require_fresh(taken: &Alphabet, wanted: &[&str]) -> Result<()> {
    for name in wanted {
        if taken.contains_name(name) {
            return Err(Error::Precondition(format!(
                "symbol name {name:?} is reserved by the construction but already taken"
            )));
        }
    }
    Ok(())
}

fn extended_names(base: &Alphabet, fresh: &[&str]) -> Result<Alphabet> {
    require_fresh(base, fresh)?;
    let names: Vec<&str> = base.names().chain(fresh.iter().copied()).collect();
    Alphabet::new(&names)
}

/// Restricts `h` to the symbols of `s` and verifies that the restriction is a
/// nonperiodic solution of `s`.
fn verified_nonperiodic_solution(s: &EquationSystem, h: &Morphism) -> Result<Morphism> {
    let eval = h.restricted(s.symbols())?;
    if eval.is_periodic() {
        return Err(Error::Precondition("witness morphism is periodic".into()));
    }
    if !s.check_solution(&eval)? {
        return Err(Error::Precondition(
            "witness morphism does not solve the system".into(),
        ));
    }
    Ok(eval)
}

fn word_tail(w: &Word, from: usize) -> Word {
    Word::from_letters(w.alphabet(), w.letters()[from..].to_vec())
}

/// Concatenates a constant-free system into one balanced equation with
/// exactly the same nonperiodic solutions.
///
/// Each equation contributes its left side, a long separator block, and its
/// right side to one side of the result, and the same pieces in swapped
/// order to the other, so both sides use every symbol equally often. The
/// separator is built from the variable-shuffle words of the system's
/// variables, repeated past the total length of the system. Requires a
/// constant-free system with at least one equation and no empty side.
pub fn balance_system(s: &EquationSystem) -> Result<Equation> {
    if !s.is_constant_free() {
        return Err(Error::Precondition(
            "balancing is defined for constant-free systems".into(),
        ));
    }
    if s.equations().is_empty() {
        return Err(Error::Precondition(
            "balancing needs at least one equation".into(),
        ));
    }
    if s.equations()
        .iter()
        .any(|eq| eq.lhs.is_empty() || eq.rhs.is_empty())
    {
        return Err(Error::Precondition(
            "balancing needs every equation side nonempty".into(),
        ));
    }
    let symbols = s.symbols();
    let (x, y) = xy_words(s.variables());
    let x = x.over_alphabet(symbols)?;
    let y = y.over_alphabet(symbols)?;
    let n = s.length();
    let block = x.repeated(n).concat(&y.repeated(n)).repeated(2);
    let mut lhs = Word::empty(symbols);
    let mut rhs = Word::empty(symbols);
    for eq in s.equations() {
        lhs = lhs.concat(&eq.lhs).concat(&block).concat(&eq.rhs);
        rhs = rhs.concat(&eq.rhs).concat(&block).concat(&eq.lhs);
    }
    Equation::new(lhs, rhs)
}

/// Wraps the [`balance_system`] equation as a single-equation constant-free
/// system over the same variables.
pub fn balanced_system_of(s: &EquationSystem) -> Result<EquationSystem> {
    let eq = balance_system(s)?;
    let consts = Alphabet::new::<&str>(&[])?;
    let mut out = EquationSystem::new(s.variables(), &consts)?;
    out.push_equation(eq)?;
    Ok(out)
}

/// Carries a nonperiodic solution of `s` over to the balanced equation.
///
/// The same morphism solves both, so this verifies the restriction of `h` to
/// the symbols of `s` against both systems and returns it.
pub fn balance_witness_forward(s: &EquationSystem, h: &Morphism) -> Result<Morphism> {
    let eval = verified_nonperiodic_solution(s, h)?;
    let balanced = balanced_system_of(s)?;
    if !balanced.check_solution(&eval)? {
        return Err(Error::Precondition(
            "solution does not carry over to the balanced equation".into(),
        ));
    }
    Ok(eval)
}

/// Carries a nonperiodic solution of the balanced equation back to `s`.
pub fn balance_witness_back(s: &EquationSystem, h: &Morphism) -> Result<Morphism> {
    let balanced = balanced_system_of(s)?;
    let eval = verified_nonperiodic_solution(&balanced, h)?;
    if !s.check_solution(&eval)? {
        return Err(Error::Precondition(
            "balanced-equation solution does not solve the original system".into(),
        ));
    }
    Ok(eval)
}

/// Rewrites a constant-free system into a system with constants whose
/// unrestricted solutions correspond to the nonperiodic solutions of `s`.
///
/// Fresh variables `_x`, `_y`, `_z` and fresh constants `_a`, `_b` are
/// appended; any of those names already being taken is an error. Two extra
/// equations pin the images of the variable-shuffle words apart at a marked
/// position, which holds exactly for solutions whose restriction to the
/// original variables is nonperiodic.
pub fn eqsatcf_to_eqsat(s: &EquationSystem) -> Result<EquationSystem> {
    if !s.is_constant_free() {
        return Err(Error::Precondition(
            "the rewrite expects a constant-free system".into(),
        ));
    }
    if s.variables().is_empty() {
        return Err(Error::Precondition(
            "the rewrite needs at least one variable".into(),
        ));
    }
    require_fresh(s.symbols(), &[FRESH_X, FRESH_Y, FRESH_Z, FRESH_A, FRESH_B])?;
    let vars = extended_names(s.variables(), &[FRESH_X, FRESH_Y, FRESH_Z])?;
    let consts = Alphabet::new(&[FRESH_A, FRESH_B])?;
    let mut out = EquationSystem::new(&vars, &consts)?;
    let symbols = out.symbols().clone();
    for eq in s.equations() {
        let lhs = eq.lhs.over_alphabet(&symbols)?;
        let rhs = eq.rhs.over_alphabet(&symbols)?;
        out.push_equation(Equation::new(lhs, rhs)?)?;
    }
    let (x, y) = xy_words(s.variables());
    let x = x.over_alphabet(&symbols)?;
    let y = y.over_alphabet(&symbols)?;
    let pinned_x = Word::parse(&symbols, &format!("{FRESH_X} {FRESH_A} {FRESH_Y}"))?;
    let pinned_y = Word::parse(&symbols, &format!("{FRESH_X} {FRESH_B} {FRESH_Z}"))?;
    out.push_equation(Equation::new(x, pinned_x)?)?;
    out.push_equation(Equation::new(y, pinned_y)?)?;
    Ok(out)
}

/// Builds an unrestricted solution of [`eqsatcf_to_eqsat`]`(s)` out of a
/// nonperiodic solution of `s`.
///
/// Every codomain letter is collapsed onto the two constants: at the first
/// position where the shuffle-word images differ, the letter on the second
/// image becomes `_b` wherever it occurs and every other letter becomes
/// `_a`. Collapsing a solution letter by letter preserves the original
/// equations, and the fresh variables take the pieces around the marked
/// position.
pub fn eqsat_witness_forward(s: &EquationSystem, h: &Morphism) -> Result<Morphism> {
    let eval = verified_nonperiodic_solution(s, h)?;
    let out_system = eqsatcf_to_eqsat(s)?;
    let (x, y) = xy_words(s.variables());
    let hx = eval.apply(&x.over_alphabet(s.symbols())?)?;
    let hy = eval.apply(&y.over_alphabet(s.symbols())?)?;
    let p = hx
        .letters()
        .iter()
        .zip(hy.letters())
        .position(|(l, r)| l != r)
        .ok_or_else(|| {
            Error::Precondition("shuffle-word images of a nonperiodic solution must differ".into())
        })?;
    let marked = hy.letters()[p];
    let target = Alphabet::new(&[FRESH_A, FRESH_B])?;
    let const_a = target.letter_at(0);
    let const_b = target.letter_at(1);
    let mapping: Vec<_> = eval
        .codomain()
        .letters()
        .map(|l| if l == marked { const_b } else { const_a })
        .collect();
    let collapse = |w: &Word| w.permuted(&mapping, &target);
    let images = out_system
        .symbols()
        .names()
        .map(|name| match name {
            FRESH_X => Ok(collapse(&hx.prefix(p))),
            FRESH_Y => Ok(collapse(&word_tail(&hx, p + 1))),
            FRESH_Z => Ok(collapse(&word_tail(&hy, p + 1))),
            FRESH_A => Ok(Word::from_letters(&target, vec![const_a])),
            FRESH_B => Ok(Word::from_letters(&target, vec![const_b])),
            _ => Ok(collapse(eval.image(s.symbols().letter(name)?))),
        })
        .collect::<Result<Vec<_>>>()?;
    let out = Morphism::new(out_system.symbols(), &target, images)?;
    if !out_system.check_solution(&out)? {
        return Err(Error::Precondition(
            "collapsed solution fails the constructed system".into(),
        ));
    }
    Ok(out)
}

/// Extracts a nonperiodic solution of `s` from a solution of
/// [`eqsatcf_to_eqsat`]`(s)` by dropping the fresh symbols.
pub fn eqsat_witness_back(s: &EquationSystem, h: &Morphism) -> Result<Morphism> {
    let out_system = eqsatcf_to_eqsat(s)?;
    if !out_system.check_solution(h)? {
        return Err(Error::Precondition(
            "morphism does not solve the constructed system".into(),
        ));
    }
    let eval = h.restricted(s.symbols())?;
    if eval.is_periodic() {
        return Err(Error::Precondition(
            "restriction to the original variables is periodic".into(),
        ));
    }
    if !s.check_solution(&eval)? {
        return Err(Error::Precondition(
            "restriction does not solve the original system".into(),
        ));
    }
    Ok(eval)
}

/// Expresses "the image of `w` is an `n`-th power" as an equation system.
///
/// The result has one variable per letter of the alphabet of `w` plus a
/// fresh variable `_x`, and the single equation `w = _x^n`. Morphisms on
/// the alphabet of `w` mapping `w` onto an `n`-th power correspond to
/// solutions that keep the letter images and send `_x` to the power base.
pub fn pow_to_equation(w: &Word, n: usize) -> Result<EquationSystem> {
    if n == 0 {
        return Err(Error::Precondition("power index must be positive".into()));
    }
    let vars = extended_names(w.alphabet(), &[FRESH_X])?;
    let consts = Alphabet::new::<&str>(&[])?;
    let mut out = EquationSystem::new(&vars, &consts)?;
    let symbols = out.symbols().clone();
    let x = Word::parse(&symbols, FRESH_X)?;
    out.push_equation(Equation::new(w.over_alphabet(&symbols)?, x.repeated(n))?)?;
    Ok(out)
}

/// Extends a nonperiodic morphism whose image of `w` is a nonempty `n`-th
/// power to a solution of [`pow_to_equation`]`(w, n)`.
pub fn pow_witness_forward(w: &Word, n: usize, h: &Morphism) -> Result<Morphism> {
    let s = pow_to_equation(w, n)?;
    let eval = h.restricted(w.alphabet())?;
    if eval.is_periodic() {
        return Err(Error::Precondition("witness morphism is periodic".into()));
    }
    let image = eval.apply(w)?;
    if image.is_empty() {
        return Err(Error::Precondition("the image of the word is empty".into()));
    }
    let root = image.primitive_root()?;
    if root.exponent % n != 0 {
        return Err(Error::Precondition(format!(
            "the image exponent {} is not divisible by {n}",
            root.exponent
        )));
    }
    let base = root.root.repeated(root.exponent / n);
    let mut images = eval.images().to_vec();
    images.push(base);
    let out = Morphism::new(s.symbols(), eval.codomain(), images)?;
    if !s.check_solution(&out)? {
        return Err(Error::Precondition(
            "extended morphism fails the constructed system".into(),
        ));
    }
    Ok(out)
}

/// Recovers a nonperiodic morphism mapping `w` onto an `n`-th power from a
/// nonperiodic solution of [`pow_to_equation`]`(w, n)`.
///
/// Fails when the solution sends `_x` to the empty word. Such a solution
/// exists only when some letters of the alphabet do not occur in `w`, and it
/// carries no power information, so it is rejected rather than repaired.
pub fn pow_witness_back(w: &Word, n: usize, h: &Morphism) -> Result<Morphism> {
    let s = pow_to_equation(w, n)?;
    let whole = verified_nonperiodic_solution(&s, h)?;
    let x_image = whole.image(s.symbols().letter(FRESH_X)?);
    if x_image.is_empty() {
        return Err(Error::Precondition(
            "the power variable maps to the empty word".into(),
        ));
    }
    let eval = whole.restricted(w.alphabet())?;
    if eval.is_periodic() {
        return Err(Error::Precondition(
            "restriction to the letter variables is periodic".into(),
        ));
    }
    debug_assert_eq!(exponent_of(eval.apply(w)?.letters()) % n, 0);
    Ok(eval)
}

/// Expresses "the image of `w` is a proper power" as an equation system.
///
/// Two fresh variables `_x` and `_y` are appended and the equations read
/// `w = _x^2 _y^3` and `_x _y = _y _x`. The second equation forces the
/// fresh images onto a common root, so the first holds exactly when the
/// image of `w` is a power of that root with exponent `2i + 3j`, and every
/// exponent at least two has that form.
pub fn nonprim_to_system(w: &Word) -> Result<EquationSystem> {
    let vars = extended_names(w.alphabet(), &[FRESH_X, FRESH_Y])?;
    let consts = Alphabet::new::<&str>(&[])?;
    let mut out = EquationSystem::new(&vars, &consts)?;
    let symbols = out.symbols().clone();
    let x = Word::parse(&symbols, FRESH_X)?;
    let y = Word::parse(&symbols, FRESH_Y)?;
    out.push_equation(Equation::new(
        w.over_alphabet(&symbols)?,
        x.repeated(2).concat(&y.repeated(3)),
    )?)?;
    out.push_equation(Equation::new(x.concat(&y), y.concat(&x))?)?;
    Ok(out)
}

/// Writes `m >= 2` as `2i + 3j` with `i` minimal, then `j` minimal.
fn two_three_split(m: usize) -> (usize, usize) {
    debug_assert!(m >= 2);
    match m % 3 {
        0 => (0, m / 3),
        1 => (2, (m - 4) / 3),
        _ => (1, (m - 2) / 3),
    }
}

/// Extends a nonperiodic morphism whose image of `w` is a proper power to a
/// solution of [`nonprim_to_system`]`(w)`.
///
/// With the image exponent split as `2i + 3j`, the fresh variables receive
/// the `i`-th and `j`-th powers of the image's primitive root.
pub fn nonprim_system_witness_forward(w: &Word, h: &Morphism) -> Result<Morphism> {
    let s = nonprim_to_system(w)?;
    let eval = h.restricted(w.alphabet())?;
    if eval.is_periodic() {
        return Err(Error::Precondition("witness morphism is periodic".into()));
    }
    let image = eval.apply(w)?;
    if image.is_empty() {
        return Err(Error::Precondition("the image of the word is empty".into()));
    }
    let root = image.primitive_root()?;
    if root.exponent < 2 {
        return Err(Error::Precondition(
            "the image of the word is primitive".into(),
        ));
    }
    let (i, j) = two_three_split(root.exponent);
    let mut images = eval.images().to_vec();
    images.push(root.root.repeated(i));
    images.push(root.root.repeated(j));
    let out = Morphism::new(s.symbols(), eval.codomain(), images)?;
    if !s.check_solution(&out)? {
        return Err(Error::Precondition(
            "extended morphism fails the constructed system".into(),
        ));
    }
    Ok(out)
}

/// Recovers a nonperiodic morphism mapping `w` onto a proper power from a
/// nonperiodic solution of [`nonprim_to_system`]`(w)`.
///
/// Fails when the solution maps `w` to the empty word, which can only happen
/// when some letters of the alphabet do not occur in `w`.
pub fn nonprim_system_witness_back(w: &Word, h: &Morphism) -> Result<Morphism> {
    let s = nonprim_to_system(w)?;
    let whole = verified_nonperiodic_solution(&s, h)?;
    let image = whole.apply(&w.over_alphabet(s.symbols())?)?;
    if image.is_empty() {
        return Err(Error::Precondition(
            "the solution maps the word to the empty word".into(),
        ));
    }
    if exponent_of(image.letters()) < 2 {
        return Err(Error::Precondition(
            "the solution maps the word to a primitive word".into(),
        ));
    }
    let eval = whole.restricted(w.alphabet())?;
    if eval.is_periodic() {
        return Err(Error::Precondition(
            "restriction to the letter variables is periodic".into(),
        ));
    }
    Ok(eval)
}

/// Builds a word whose `n`-th-power condition is equivalent to nonperiodic
/// solvability of the constant-free system.
///
/// The word is `u v^(n-1)` for the balanced equation `(u, v)` of the system.
/// Both sides have equal images under any morphism candidate, so the image
/// is an `n`-th power exactly when the images of `u` and `v` coincide;
/// `n >= 2` is required for the power condition to say anything.
pub fn eqsatcf_to_pow(s: &EquationSystem, n: usize) -> Result<Word> {
    if n < 2 {
        return Err(Error::Precondition("power index must be at least 2".into()));
    }
    let eq = balance_system(s)?;
    Ok(eq.lhs.concat(&eq.rhs.repeated(n - 1)))
}

/// Builds a word whose proper-power condition is equivalent to nonperiodic
/// solvability of the constant-free system.
///
/// For the balanced equation `(u, v)` and the variable-shuffle words `X` and
/// `Y`, the result is `Z^4 u Z^4 v` with `Z = X^|uv| Y^|uv|`. The long
/// separator blocks keep unaligned factorizations of the image from forming
/// accidental powers.
pub fn eqsatcf_to_nonprim(s: &EquationSystem) -> Result<Word> {
    let eq = balance_system(s)?;
    let symbols = s.symbols();
    let (x, y) = xy_words(s.variables());
    let x = x.over_alphabet(symbols)?;
    let y = y.over_alphabet(symbols)?;
    let sep = eq.lhs.len() + eq.rhs.len();
    let z4 = x.repeated(sep).concat(&y.repeated(sep)).repeated(4);
    Ok(z4.concat(&eq.lhs).concat(&z4).concat(&eq.rhs))
}

/// Checks that a nonperiodic solution of `s` maps the word from
/// [`eqsatcf_to_nonprim`]`(s)` onto a proper power, and returns it.
pub fn nonprim_word_witness_forward(s: &EquationSystem, h: &Morphism) -> Result<Morphism> {
    let eval = verified_nonperiodic_solution(s, h)?;
    let word = eqsatcf_to_nonprim(s)?;
    let image = eval.apply(&word)?;
    if exponent_of(image.letters()) < 2 {
        return Err(Error::Precondition(
            "solution does not map the constructed word onto a proper power".into(),
        ));
    }
    Ok(eval)
}

/// Recovers a nonperiodic solution of `s` from a nonperiodic morphism that
/// maps the word from [`eqsatcf_to_nonprim`]`(s)` onto a proper power.
pub fn nonprim_word_witness_back(s: &EquationSystem, h: &Morphism) -> Result<Morphism> {
    let word = eqsatcf_to_nonprim(s)?;
    let eval = h.restricted(s.symbols())?;
    if eval.is_periodic() {
        return Err(Error::Precondition("witness morphism is periodic".into()));
    }
    let image = eval.apply(&word)?;
    if exponent_of(image.letters()) < 2 {
        return Err(Error::Precondition(
            "the image of the constructed word is not a proper power".into(),
        ));
    }
    let eq = balance_system(s)?;
    if eval.apply(&eq.lhs)? != eval.apply(&eq.rhs)? {
        return Err(Error::Precondition(
            "the halves of the constructed word have different images".into(),
        ));
    }
    if !s.check_solution(&eval)? {
        return Err(Error::Precondition(
            "witness morphism does not solve the system".into(),
        ));
    }
    Ok(eval)
}
