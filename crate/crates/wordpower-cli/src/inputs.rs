//! Parsing of command-line literals into library values.
//!
//! Words and morphisms arrive as flat strings, so the alphabets involved are
//! inferred from the literal itself unless the caller names them explicitly.

use std::path::Path;

use anyhow::{bail, Context, Result};
use wordpower::{Alphabet, EquationSystem, Morphism, Word};

/// Builds an alphabet from a comma-separated list of letter names.
pub fn alphabet_from_list(list: &str) -> Result<Alphabet> {
    let names: Vec<&str> = list
        .split(',')
        .map(str::trim)
        .filter(|name| !name.is_empty())
        .collect();
    if names.is_empty() {
        bail!("the alphabet list {list:?} names no letters");
    }
    Ok(Alphabet::new(&names)?)
}

/// Builds an alphabet whose letters are the distinct characters of `text` in
/// first-occurrence order. Whitespace separates letters and is skipped.
pub fn alphabet_from_chars(text: &str) -> Result<Alphabet> {
    let mut names: Vec<String> = Vec::new();
    for c in text.chars() {
        if c.is_whitespace() {
            continue;
        }
        let name = c.to_string();
        if !names.contains(&name) {
            names.push(name);
        }
    }
    if names.is_empty() {
        bail!("cannot infer an alphabet from an empty word; pass --alphabet");
    }
    Ok(Alphabet::new(&names)?)
}

/// Parses a word literal together with its alphabet.
pub fn parse_word(text: &str, alphabet: Option<&str>) -> Result<(Alphabet, Word)> {
    let alphabet = match alphabet {
        Some(list) => alphabet_from_list(list)?,
        None => alphabet_from_chars(text)?,
    };
    let word = Word::parse(&alphabet, text)?;
    Ok((alphabet, word))
}

/// Parses a morphism literal such as `a->ab;b->ba`, inferring the domain from
/// the entry names and the codomain from the image characters unless either is
/// given explicitly.
pub fn parse_morphism(
    text: &str,
    domain: Option<&str>,
    codomain: Option<&str>,
) -> Result<Morphism> {
    let domain = match domain {
        Some(list) => alphabet_from_list(list)?,
        None => {
            let mut names: Vec<String> = Vec::new();
            for entry in text.split(';') {
                let entry = entry.trim();
                if entry.is_empty() {
                    continue;
                }
                let Some((name, _)) = entry.split_once("->") else {
                    bail!("morphism entry {entry:?} is missing \"->\"");
                };
                let name = name.trim().to_string();
                if names.contains(&name) {
                    bail!("the morphism literal maps letter {name:?} twice");
                }
                names.push(name);
            }
            if names.is_empty() {
                bail!("the morphism literal {text:?} has no entries");
            }
            Alphabet::new(&names)?
        }
    };
    let codomain = match codomain {
        Some(list) => alphabet_from_list(list)?,
        None => {
            let mut chars = String::new();
            for entry in text.split(';') {
                if let Some((_, image)) = entry.split_once("->") {
                    chars.push_str(image.trim());
                }
            }
            if chars.is_empty() {
                bail!("cannot infer a codomain from empty images; pass --codomain");
            }
            alphabet_from_chars(&chars)?
        }
    };
    Ok(Morphism::parse(&domain, &codomain, text)?)
}

/// Reads and parses an equation-system file.
pub fn read_system(path: &Path) -> Result<EquationSystem> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read system file {}", path.display()))?;
    Ok(EquationSystem::parse(&text)?)
}
