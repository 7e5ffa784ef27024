//! Word equations and systems of word equations.
//!
//! A system declares variables and constants; each equation relates two words
//! over the combined symbol alphabet. A solution is a morphism on the symbols
//! that fixes every constant and makes both sides of every equation equal.

use std::fmt;

use crate::{Alphabet, Error, Morphism, Result, Word};

/// One equation between two words over a system's symbol alphabet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Equation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Equation {
    /// Pairs two words over one alphabet into an equation.
    pub fn new(lhs: Word, rhs: Word) -> Result<Self> {
        if lhs.alphabet() != rhs.alphabet() {
            return Err(Error::AlphabetMismatch(
                "equation sides must share an alphabet".into(),
            ));
        }
        Ok(Self { lhs, rhs })
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// A finite system of word equations over declared variables and constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquationSystem {
    variables: Alphabet,
    constants: Alphabet,
    symbols: Alphabet,
    equations: Vec<Equation>,
}

impl EquationSystem {
    /// Creates an empty system over disjoint variable and constant alphabets.
    pub fn new(variables: &Alphabet, constants: &Alphabet) -> Result<Self> {
        let names: Vec<&str> = variables.names().chain(constants.names()).collect();
        let symbols = Alphabet::new(&names)
            .map_err(|_| Error::BadAlphabet("variables and constants must be disjoint".into()))?;
        Ok(Self {
            variables: variables.clone(),
            constants: constants.clone(),
            symbols,
            equations: Vec::new(),
        })
    }

    /// The declared variables.
    pub fn variables(&self) -> &Alphabet {
        &self.variables
    }

    /// The declared constants.
    pub fn constants(&self) -> &Alphabet {
        &self.constants
    }

    /// Variables followed by constants; the alphabet every equation side is a
    /// word over.
    pub fn symbols(&self) -> &Alphabet {
        &self.symbols
    }

    /// The equations in declaration order.
    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    /// Appends an equation whose sides are words over [`Self::symbols`].
    pub fn push_equation(&mut self, equation: Equation) -> Result<()> {
        if equation.lhs.alphabet() != equation.rhs.alphabet() {
            return Err(Error::AlphabetMismatch(
                "equation sides must share an alphabet".into(),
            ));
        }
        if equation.lhs.alphabet() != &self.symbols {
            return Err(Error::AlphabetMismatch(format!(
                "equation {equation} is not over the symbol alphabet {}",
                self.symbols
            )));
        }
        self.equations.push(equation);
        Ok(())
    }

    /// Parses an equation side pair `lhs = rhs` and appends it.
    pub fn push_equation_text(&mut self, lhs: &str, rhs: &str) -> Result<()> {
        let lhs = Word::parse(&self.symbols, lhs)?;
        let rhs = Word::parse(&self.symbols, rhs)?;
        self.push_equation(Equation::new(lhs, rhs)?)
    }

    /// Total length of the system: the summed lengths of all sides.
    pub fn length(&self) -> usize {
        self.equations
            .iter()
            .map(|eq| eq.lhs.len() + eq.rhs.len())
            .sum()
    }

    /// True when the system declares no constants.
    pub fn is_constant_free(&self) -> bool {
        self.constants.is_empty()
    }

    /// Names of declared variables that occur in no equation.
    pub fn unused_variables(&self) -> Vec<String> {
        self.variables
            .letters()
            .filter(|v| {
                let name = self.variables.name(*v);
                let sym = self.symbols.letter(name).expect("variable is a symbol");
                self.equations
                    .iter()
                    .all(|eq| eq.lhs.count_of(sym) == 0 && eq.rhs.count_of(sym) == 0)
            })
            .map(|v| self.variables.name(v).to_owned())
            .collect()
    }

    /// True iff every variable occurs equally often on both sides of every
    /// equation. Only defined for constant-free systems.
    pub fn is_balanced(&self) -> Result<bool> {
        if !self.is_constant_free() {
            return Err(Error::Precondition(
                "balance is defined for constant-free systems".into(),
            ));
        }
        Ok(self.equations.iter().all(|eq| {
            self.symbols
                .letters()
                .all(|s| eq.lhs.count_of(s) == eq.rhs.count_of(s))
        }))
    }

    /// Checks whether `h` solves the system: applied to every equation it
    /// must equate the sides, and it must fix every constant. The domain of
    /// `h` must cover all symbols by name.
    pub fn check_solution(&self, h: &Morphism) -> Result<bool> {
        let images: Vec<Word> = self
            .symbols
            .names()
            .map(|name| {
                h.domain()
                    .letter(name)
                    .map(|l| h.image(l).clone())
                    .map_err(|_| {
                        Error::Precondition(format!(
                            "candidate solution assigns no image to symbol {name:?}"
                        ))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let eval = Morphism::new(&self.symbols, h.codomain(), images)?;
        for name in self.constants.names() {
            let sym = self.symbols.letter(name).expect("constant is a symbol");
            let fixed = match h.codomain().letter(name) {
                Ok(target) => eval.image(sym) == &Word::from_letters(h.codomain(), vec![target]),
                Err(_) => false,
            };
            if !fixed {
                return Ok(false);
            }
        }
        for eq in &self.equations {
            if eval.apply(&eq.lhs)? != eval.apply(&eq.rhs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Parses the text format produced by [`fmt::Display`]:
    ///
    /// ```text
    /// vars:x,y,z
    /// consts:
    /// xx = yzy
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let vars = parse_decl_line(lines.next(), "vars")?;
        let consts = parse_decl_line(lines.next(), "consts")?;
        let mut system = Self::new(&vars, &consts)?;
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("equation line {line:?} is missing \"=\"")))?;
            system.push_equation_text(lhs, rhs)?;
        }
        Ok(system)
    }
}

fn parse_decl_line(line: Option<&str>, keyword: &str) -> Result<Alphabet> {
    let line = line
        .ok_or_else(|| Error::Parse(format!("missing {keyword:?} line")))?
        .trim();
    let rest = line
        .strip_prefix(keyword)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .ok_or_else(|| Error::Parse(format!("expected a {keyword}: line, got {line:?}")))?;
    let names: Vec<&str> = rest
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    Alphabet::new(&names)
}

impl fmt::Display for EquationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vars:")?;
        for (i, name) in self.variables.names().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}")?;
        }
        write!(f, "\nconsts:")?;
        for (i, name) in self.constants.names().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}")?;
        }
        writeln!(f)?;
        for eq in &self.equations {
            writeln!(f, "{eq}")?;
        }
        Ok(())
    }
}

/// The pair `(X, Y)` over `vars`: `X` concatenates `x_i x_j` and `Y`
/// concatenates `x_j x_i` over all ordered pairs `(i, j)` with the first
/// index outermost. A morphism equates `X` and `Y` iff all its images
/// commute pairwise, so `h(X) = h(Y)` iff `h` is periodic.
pub fn xy_words(vars: &Alphabet) -> (Word, Word) {
    let mut x_letters = Vec::new();
    let mut y_letters = Vec::new();
    for i in vars.letters() {
        for j in vars.letters() {
            x_letters.push(i);
            x_letters.push(j);
            y_letters.push(j);
            y_letters.push(i);
        }
    }
    (
        Word::from_letters(vars, x_letters),
        Word::from_letters(vars, y_letters),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_system() -> EquationSystem {
        let vars = Alphabet::new(&["x", "y", "z"]).unwrap();
        let consts = Alphabet::new::<&str>(&[]).unwrap();
        let mut s = EquationSystem::new(&vars, &consts).unwrap();
        s.push_equation_text("xx", "yzy").unwrap();
        s
    }

    #[test]
    fn parse_display_round_trip() {
        let text = "vars:x,y,z\nconsts:\nxx = yzy\n";
        let s = EquationSystem::parse(text).unwrap();
        assert_eq!(s.to_string(), text);
        assert_eq!(s, example_system());

        let with_consts = "vars:x,y\nconsts:a,b\nxay = bx\n";
        let s = EquationSystem::parse(with_consts).unwrap();
        assert_eq!(s.to_string(), with_consts);
        assert!(!s.is_constant_free());
        assert_eq!(s.length(), 5);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(EquationSystem::parse("").is_err());
        assert!(EquationSystem::parse("vars:x\n").is_err());
        assert!(EquationSystem::parse("vars:x\nconsts:\nxx yy\n").is_err());
        assert!(EquationSystem::parse("vars:x\nconsts:x\n").is_err());
        assert!(EquationSystem::parse("vars:x\nconsts:\nxw = x\n").is_err());
    }

    #[test]
    fn check_solution_example() {
        let s = example_system();
        let binary = Alphabet::binary();
        let h = Morphism::parse(s.symbols(), &binary, "x->aba;y->a;z->baab").unwrap();
        assert!(s.check_solution(&h).unwrap());
        let bad = Morphism::parse(s.symbols(), &binary, "x->a;y->a;z->b").unwrap();
        assert!(!s.check_solution(&bad).unwrap());
        let partial =
            Morphism::parse(&Alphabet::new(&["x", "y"]).unwrap(), &binary, "x->a;y->a").unwrap();
        assert!(s.check_solution(&partial).is_err());
    }

    #[test]
    fn check_solution_requires_fixed_constants() {
        let s = EquationSystem::parse("vars:x\nconsts:a\nxa = ax\n").unwrap();
        let binary = Alphabet::binary();
        let good = Morphism::parse(s.symbols(), &binary, "x->aa;a->a").unwrap();
        assert!(s.check_solution(&good).unwrap());
        let moved = Morphism::parse(s.symbols(), &binary, "x->bb;a->b").unwrap();
        assert!(!s.check_solution(&moved).unwrap());
        let wrong_codomain = Morphism::parse(
            s.symbols(),
            &Alphabet::new(&["c", "d"]).unwrap(),
            "x->cc;a->c",
        )
        .unwrap();
        assert!(!s.check_solution(&wrong_codomain).unwrap());
    }

    #[test]
    fn balance_and_unused_variables() {
        let s = example_system();
        assert!(!s.is_balanced().unwrap());
        let balanced = EquationSystem::parse("vars:x,y\nconsts:\nxy = yx\n").unwrap();
        assert!(balanced.is_balanced().unwrap());
        let with_consts = EquationSystem::parse("vars:x\nconsts:a\nxa = ax\n").unwrap();
        assert!(with_consts.is_balanced().is_err());

        let lazy = EquationSystem::parse("vars:x,y,z\nconsts:\nxx = x\n").unwrap();
        assert_eq!(
            lazy.unused_variables(),
            vec!["y".to_owned(), "z".to_owned()]
        );
        assert!(example_system().unused_variables().is_empty());
    }

    #[test]
    fn xy_word_shapes() {
        let vars = Alphabet::new(&["x", "y"]).unwrap();
        let (x, y) = xy_words(&vars);
        assert_eq!(x.to_string(), "xxxyyxyy");
        assert_eq!(y.to_string(), "xxyxxyyy");
        for n in 1..=4usize {
            let vars = Alphabet::indexed("v", n).unwrap();
            let (x, y) = xy_words(&vars);
            assert_eq!(x.len(), 2 * n * n);
            assert_eq!(y.len(), 2 * n * n);
            for v in vars.letters() {
                assert_eq!(x.count_of(v), 2 * n);
                assert_eq!(y.count_of(v), 2 * n);
            }
        }
    }

    #[test]
    fn xy_words_detect_periodicity() {
        let vars = Alphabet::new(&["x", "y"]).unwrap();
        let (x, y) = xy_words(&vars);
        let binary = Alphabet::binary();
        for u in crate::words::all_words(&binary, 2) {
            for v in crate::words::all_words(&binary, 3) {
                let h = Morphism::new(&vars, &binary, vec![u.clone(), v.clone()]).unwrap();
                assert_eq!(
                    h.apply(&x).unwrap() == h.apply(&y).unwrap(),
                    h.is_periodic(),
                    "images {u}, {v}"
                );
            }
        }
    }

    #[test]
    fn empty_variable_list() {
        let empty = Alphabet::new::<&str>(&[]).unwrap();
        let (x, y) = xy_words(&empty);
        assert!(x.is_empty() && y.is_empty());
        let s = EquationSystem::new(&empty, &empty).unwrap();
        assert_eq!(s.to_string(), "vars:\nconsts:\n");
        assert_eq!(EquationSystem::parse("vars:\nconsts:\n").unwrap(), s);
    }
}
