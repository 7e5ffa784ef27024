//! `word`: command-line access to exponent scans, witness constructions,
//! equation reductions, and bounded equation solving.
//!
//! Every subcommand prints one [`Report`] document on standard output and
//! exits 0. Domain errors (bad literals, unreadable files, violated
//! preconditions) print a message on standard error and exit 1; command-line
//! usage errors exit 2. Any witness included in a report is re-validated
//! before printing, so a successful run never shows an unchecked claim.

mod inputs;
mod report;

use std::path::PathBuf;

use anyhow::{ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wordpower::{
    balanced_system_of, classify_injective, construct_lower_bound_instance,
    construct_unique_letter_morphism, eqsatcf_to_eqsat, eqsatcf_to_nonprim, eqsatcf_to_pow,
    nonprim_to_system, pex_bounded_with, pow_to_equation, solve_bounded_with, xy_words, Alphabet,
    Completeness, EquationSystem, HighPowerWitness, InjKind, InjReason, Morphism, MorphismFamily,
    PexQuery, SearchOptions, SolveStatus, Word,
};

use report::Report;

#[derive(Parser)]
#[command(
    name = "word",
    version,
    about = "Map words onto powers: exponent windows, witness constructions, equation reductions"
)]
struct Cli {
    /// Output format for the report document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    All,
    Nonperiodic,
    Injective,
}

impl FamilyArg {
    fn family(self) -> MorphismFamily {
        match self {
            Self::All => MorphismFamily::All,
            Self::Nonperiodic => MorphismFamily::Nonperiodic,
            Self::Injective => MorphismFamily::Injective,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Nonperiodic => "nonperiodic",
            Self::Injective => "injective",
        }
    }
}

#[derive(Args)]
struct WordArg {
    /// Word literal: juxtaposed single-character letters, or space-separated
    /// letter names.
    #[arg(long)]
    word: String,
    /// Comma-separated letter names; defaults to the word's distinct
    /// characters in first-occurrence order.
    #[arg(long)]
    alphabet: Option<String>,
}

impl WordArg {
    fn parse(&self) -> Result<(Alphabet, Word)> {
        inputs::parse_word(&self.word, self.alphabet.as_deref())
    }
}

#[derive(Args)]
struct MorphismArg {
    /// Morphism literal with one entry per domain letter, e.g. "a->ab;b->ba".
    #[arg(long)]
    morphism: String,
    /// Comma-separated domain letter names; defaults to the entry names in
    /// order of appearance.
    #[arg(long)]
    domain: Option<String>,
    /// Comma-separated codomain letter names; defaults to the distinct image
    /// characters in first-occurrence order.
    #[arg(long)]
    codomain: Option<String>,
}

impl MorphismArg {
    fn parse(&self) -> Result<Morphism> {
        inputs::parse_morphism(
            &self.morphism,
            self.domain.as_deref(),
            self.codomain.as_deref(),
        )
    }
}

#[derive(Args)]
struct SystemArg {
    /// Path to an equation-system file (`vars:` line, `consts:` line, one
    /// `lhs = rhs` equation per following line).
    #[arg(long)]
    system: PathBuf,
}

impl SystemArg {
    fn read(&self) -> Result<EquationSystem> {
        inputs::read_system(&self.system)
    }

    fn echo(&self, s: &EquationSystem) -> Value {
        json!({
            "path": self.system.display().to_string(),
            "system": s.to_string(),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Scan which exponents in a window some family morphism maps a word onto.
    Pex {
        #[command(flatten)]
        word: WordArg,
        /// Morphism family candidates are drawn from.
        #[arg(long, value_enum, default_value_t = FamilyArg::Nonperiodic)]
        family: FamilyArg,
        /// Upper end of the inspected exponent window.
        #[arg(long)]
        max_exp: usize,
        /// Per-letter image length bound for the enumeration fallback.
        #[arg(long)]
        max_len: usize,
    },
    /// Classify whether injective morphisms can map a word onto unboundedly
    /// high powers.
    ClassifyInj {
        #[command(flatten)]
        word: WordArg,
    },
    /// Build a verified witness morphism mapping a word onto a high power.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Translate between power-mapping questions and equation solvability.
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Search for a family morphism solving an equation system.
    Solve {
        #[command(flatten)]
        system: SystemArg,
        /// Morphism family candidate solutions are drawn from.
        #[arg(long, value_enum, default_value_t = FamilyArg::Nonperiodic)]
        family: FamilyArg,
        /// Per-variable image length bound for candidate solutions.
        #[arg(long)]
        max_len: usize,
        /// Comma-separated codomain letter names; defaults to a,b plus the
        /// system's constants.
        #[arg(long)]
        codomain: Option<String>,
    },
    /// Decide one property of a word, a morphism, or a candidate solution.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Print the two block-shuffle words whose images coincide exactly under
    /// periodic morphisms.
    XyWords {
        /// Comma-separated variable names.
        #[arg(long)]
        vars: String,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Map a primitive word onto its n-th power by stretching one letter that
    /// occurs exactly once.
    UniqueLetter {
        #[command(flatten)]
        word: WordArg,
        /// The letter occurring exactly once in the word.
        #[arg(long)]
        letter: String,
        /// Target exponent.
        #[arg(long)]
        n: usize,
    },
    /// Build the primitive word on n letters (n even, at least 4) whose
    /// injective witness reaches exponent n - 1.
    LowerBound {
        /// Number of distinct letters; must be even and at least 4.
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// Emit a system solvable by a nonperiodic morphism exactly when the word
    /// maps onto an n-th power.
    PowToEq {
        #[command(flatten)]
        word: WordArg,
        /// Power index, at least 2.
        #[arg(long)]
        n: usize,
    },
    /// Emit a word mapped onto an n-th power by a nonperiodic morphism
    /// exactly when the constant-free system is solvable.
    EqToPow {
        #[command(flatten)]
        system: SystemArg,
        /// Power index, at least 2.
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Emit a system solvable by a nonperiodic morphism exactly when the word
    /// maps onto a nonprimitive image.
    NonprimToEq {
        #[command(flatten)]
        word: WordArg,
    },
    /// Emit a word with a nonprimitive image under some nonperiodic morphism
    /// exactly when the constant-free system is solvable.
    EqToNonprim {
        #[command(flatten)]
        system: SystemArg,
    },
    /// Rewrite a constant-free system as an equisolvable system over two
    /// constants.
    CfToConst {
        #[command(flatten)]
        system: SystemArg,
    },
    /// Replace a system by one balanced equation with the same nonperiodic
    /// solutions.
    Balance {
        #[command(flatten)]
        system: SystemArg,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Whether the image set decodes uniquely, i.e. the morphism is a code.
    Injective {
        #[command(flatten)]
        morphism: MorphismArg,
    },
    /// Whether every image is a power of one common root.
    Periodic {
        #[command(flatten)]
        morphism: MorphismArg,
    },
    /// Whether the word is not a proper power of a shorter word.
    Primitive {
        #[command(flatten)]
        word: WordArg,
    },
    /// Whether the morphism solves every equation of the system.
    Solution {
        #[command(flatten)]
        system: SystemArg,
        #[command(flatten)]
        morphism: MorphismArg,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Json => report.render_json(),
                Format::Text => report.render_text(),
            };
            print!("{rendered}");
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Pex {
            word,
            family,
            max_exp,
            max_len,
        } => run_pex(word, *family, *max_exp, *max_len),
        Command::ClassifyInj { word } => run_classify(word),
        Command::Construct(cmd) => run_construct(cmd),
        Command::Reduce(cmd) => run_reduce(cmd),
        Command::Solve {
            system,
            family,
            max_len,
            codomain,
        } => run_solve(system, *family, *max_len, codomain.as_deref()),
        Command::Check(cmd) => run_check(cmd),
        Command::XyWords { vars } => run_xy_words(vars),
    }
}

/// Reads the enumeration cap from `WORDPOWER_MAX_SEARCH` when set.
fn search_options() -> Result<SearchOptions> {
    let mut opts = SearchOptions::default();
    if let Ok(raw) = std::env::var("WORDPOWER_MAX_SEARCH") {
        let cap: u64 = raw.trim().parse().with_context(|| {
            format!("WORDPOWER_MAX_SEARCH={raw:?} is not a nonnegative integer")
        })?;
        opts.max_candidates = Some(cap);
    }
    Ok(opts)
}

fn alphabet_names(alphabet: &Alphabet) -> Value {
    Value::from(alphabet.names().collect::<Vec<_>>())
}

fn system_payload(s: &EquationSystem) -> Value {
    json!({
        "system": s.to_string(),
        "variables": alphabet_names(s.variables()),
        "constants": alphabet_names(s.constants()),
        "length": s.length(),
    })
}

fn flag_unused_variables(report: Report, s: &EquationSystem) -> Report {
    let unused = s.unused_variables();
    if unused.is_empty() {
        report
    } else {
        report.caveat(format!("unused variables: {}", unused.join(", ")))
    }
}

fn run_pex(word: &WordArg, family: FamilyArg, max_exp: usize, max_len: usize) -> Result<Report> {
    let (alphabet, w) = word.parse()?;
    let opts = search_options()?;
    let query = PexQuery::new(&w, family.family(), max_exp, max_len);
    let pex_report = pex_bounded_with(&query, &opts)?;
    ensure!(
        pex_report.verify_witnesses(&w, family.family()),
        "internal error: a reported power witness failed re-validation"
    );
    let witnesses: Value = pex_report
        .witnesses
        .iter()
        .map(|(n, witness)| {
            (
                n.to_string(),
                json!({
                    "morphism": witness.morphism.to_string(),
                    "base": witness.base.to_string(),
                }),
            )
        })
        .collect::<serde_json::Map<_, _>>()
        .into();
    let mut report = Report::new(
        "pex",
        json!({
            "word": w.to_string(),
            "alphabet": alphabet_names(&alphabet),
            "family": family.label(),
            "max_exp": max_exp,
            "max_len": max_len,
        }),
        json!({
            "observed_pex": pex_report.observed_pex,
            "observed_gex": pex_report.observed_gex,
            "complete": pex_report.complete.to_string(),
            "witnesses": witnesses,
        }),
    );
    match pex_report.complete {
        Completeness::ProvenComplete => {}
        Completeness::CompleteUpToBound => {
            report = report.caveat(format!("complete-up-to-bound L={max_len}"));
        }
        Completeness::Unknown => {
            report = report.caveat("search cap");
        }
    }
    Ok(report)
}

fn run_classify(word: &WordArg) -> Result<Report> {
    let (alphabet, w) = word.parse()?;
    let classification = classify_injective(&w)?;
    let kind = match classification.kind {
        InjKind::Infinite => "infinite",
        InjKind::FiniteBounded => "finite-bounded",
    };
    let reason = match classification.reason {
        InjReason::LetterOnceInRoot => "letter-once-in-root",
        InjReason::UpperBoundTheorem => "upper-bound-theorem",
        InjReason::BinaryExact => "binary-exact",
    };
    Ok(Report::new(
        "classify-inj",
        json!({ "word": w.to_string(), "alphabet": alphabet_names(&alphabet) }),
        json!({
            "kind": kind,
            "reason": reason,
            "upper_bound": classification.upper_bound,
            "known_exact": classification.known_exact,
        }),
    ))
}

fn high_power_payload(witness: &HighPowerWitness) -> Result<Value> {
    ensure!(
        witness.is_valid(),
        "internal error: a constructed witness failed re-validation"
    );
    ensure!(
        witness.morphism.is_injective(),
        "internal error: a constructed morphism is not injective"
    );
    Ok(json!({
        "word": witness.word.to_string(),
        "morphism": witness.morphism.to_string(),
        "base": witness.base.to_string(),
        "exponent": witness.exponent,
    }))
}

fn run_construct(cmd: &ConstructCmd) -> Result<Report> {
    match cmd {
        ConstructCmd::UniqueLetter { word, letter, n } => {
            let (alphabet, w) = word.parse()?;
            let l = alphabet.letter(letter)?;
            let witness = construct_unique_letter_morphism(&w, l, *n)?;
            let payload = high_power_payload(&witness)?;
            Ok(Report::new(
                "construct unique-letter",
                json!({
                    "word": w.to_string(),
                    "alphabet": alphabet_names(&alphabet),
                    "letter": letter,
                    "n": n,
                }),
                payload,
            ))
        }
        ConstructCmd::LowerBound { n } => {
            let witness = construct_lower_bound_instance(*n)?;
            let payload = high_power_payload(&witness)?;
            Ok(Report::new(
                "construct lower-bound",
                json!({ "n": n }),
                payload,
            ))
        }
    }
}

fn run_reduce(cmd: &ReduceCmd) -> Result<Report> {
    match cmd {
        ReduceCmd::PowToEq { word, n } => {
            let (alphabet, w) = word.parse()?;
            let s = pow_to_equation(&w, *n)?;
            let report = Report::new(
                "reduce pow-to-eq",
                json!({
                    "word": w.to_string(),
                    "alphabet": alphabet_names(&alphabet),
                    "n": n,
                }),
                system_payload(&s),
            );
            Ok(flag_unused_variables(report, &s))
        }
        ReduceCmd::EqToPow { system, n } => {
            let s = system.read()?;
            let w = eqsatcf_to_pow(&s, *n)?;
            Ok(Report::new(
                "reduce eq-to-pow",
                json!({ "path": system.system.display().to_string(), "system": s.to_string(), "n": n }),
                json!({
                    "word": w.to_string(),
                    "alphabet": alphabet_names(w.alphabet()),
                    "length": w.len(),
                }),
            ))
        }
        ReduceCmd::NonprimToEq { word } => {
            let (alphabet, w) = word.parse()?;
            let s = nonprim_to_system(&w)?;
            let report = Report::new(
                "reduce nonprim-to-eq",
                json!({ "word": w.to_string(), "alphabet": alphabet_names(&alphabet) }),
                system_payload(&s),
            );
            Ok(flag_unused_variables(report, &s))
        }
        ReduceCmd::EqToNonprim { system } => {
            let s = system.read()?;
            let w = eqsatcf_to_nonprim(&s)?;
            Ok(Report::new(
                "reduce eq-to-nonprim",
                system.echo(&s),
                json!({
                    "word": w.to_string(),
                    "alphabet": alphabet_names(w.alphabet()),
                    "length": w.len(),
                }),
            ))
        }
        ReduceCmd::CfToConst { system } => {
            let s = system.read()?;
            let out = eqsatcf_to_eqsat(&s)?;
            Ok(Report::new(
                "reduce cf-to-const",
                system.echo(&s),
                system_payload(&out),
            ))
        }
        ReduceCmd::Balance { system } => {
            let s = system.read()?;
            let balanced = balanced_system_of(&s)?;
            ensure!(
                balanced.is_balanced()?,
                "internal error: the balanced form failed re-validation"
            );
            Ok(Report::new(
                "reduce balance",
                system.echo(&s),
                system_payload(&balanced),
            ))
        }
    }
}

/// Binary letters a, b extended with the system's constant names.
fn default_codomain(s: &EquationSystem) -> Result<Alphabet> {
    let mut names: Vec<String> = vec!["a".into(), "b".into()];
    for name in s.constants().names() {
        if !names.iter().any(|n| n == name) {
            names.push(name.to_string());
        }
    }
    Ok(Alphabet::new(&names)?)
}

fn run_solve(
    system: &SystemArg,
    family: FamilyArg,
    max_len: usize,
    codomain: Option<&str>,
) -> Result<Report> {
    let s = system.read()?;
    let gamma = match codomain {
        Some(list) => inputs::alphabet_from_list(list)?,
        None => default_codomain(&s)?,
    };
    let opts = search_options()?;
    let outcome = solve_bounded_with(&s, family.family(), max_len, &gamma, &opts)?;
    let witness_text = match &outcome.witness {
        Some(h) => {
            ensure!(
                s.check_solution(h)? && h.in_family(family.family()),
                "internal error: the found solution failed re-validation"
            );
            Some(h.to_string())
        }
        None => None,
    };
    let status = match outcome.status {
        SolveStatus::Sat => "sat",
        SolveStatus::UnknownAtBound => "unknown-at-bound",
    };
    let mut report = Report::new(
        "solve",
        json!({
            "path": system.system.display().to_string(),
            "system": s.to_string(),
            "family": family.label(),
            "max_len": max_len,
            "codomain": alphabet_names(&gamma),
        }),
        json!({
            "status": status,
            "witness": witness_text,
            "bound_used": outcome.bound_used,
            "hit_search_cap": outcome.hit_search_cap,
        }),
    );
    if outcome.hit_search_cap {
        report = report.caveat("search cap");
    }
    Ok(report)
}

fn morphism_echo(h: &Morphism) -> Value {
    json!({
        "morphism": h.to_string(),
        "domain": alphabet_names(h.domain()),
        "codomain": alphabet_names(h.codomain()),
    })
}

fn run_check(cmd: &CheckCmd) -> Result<Report> {
    match cmd {
        CheckCmd::Injective { morphism } => {
            let h = morphism.parse()?;
            Ok(Report::new(
                "check injective",
                morphism_echo(&h),
                json!({ "holds": h.is_injective() }),
            ))
        }
        CheckCmd::Periodic { morphism } => {
            let h = morphism.parse()?;
            Ok(Report::new(
                "check periodic",
                morphism_echo(&h),
                json!({ "holds": h.is_periodic() }),
            ))
        }
        CheckCmd::Primitive { word } => {
            let (alphabet, w) = word.parse()?;
            let holds = w.is_primitive()?;
            Ok(Report::new(
                "check primitive",
                json!({ "word": w.to_string(), "alphabet": alphabet_names(&alphabet) }),
                json!({ "holds": holds }),
            ))
        }
        CheckCmd::Solution { system, morphism } => {
            let s = system.read()?;
            let h = morphism.parse()?;
            let holds = s.check_solution(&h)?;
            let mut echo = system.echo(&s);
            if let Value::Object(map) = &mut echo {
                map.insert("morphism".to_string(), Value::from(h.to_string()));
            }
            Ok(Report::new(
                "check solution",
                echo,
                json!({ "holds": holds }),
            ))
        }
    }
}

fn run_xy_words(vars: &str) -> Result<Report> {
    let alphabet = inputs::alphabet_from_list(vars)?;
    let (x, y) = xy_words(&alphabet);
    Ok(Report::new(
        "xy-words",
        json!({ "vars": alphabet_names(&alphabet) }),
        json!({
            "x": x.to_string(),
            "y": y.to_string(),
            "length": x.len(),
        }),
    ))
}
