use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt::Write;

use crate::prelude::*;

/// A generator or its inverse.
///
/// Letters order by generator index first, with the generator before its
/// inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A freely reduced word in the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word, cancelling adjacent inverse pairs.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    pub fn generator(index: usize) -> Self {
        Word(alloc::vec![Letter::new(index, false)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        Word::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&f), Some(&l)) if self.0.len() > 1 => !f.cancels(l),
            _ => true,
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex: by length, then lexicographically by letter.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// Generator names and relators.
///
/// In text form a generator is written by its name and its inverse by the
/// uppercased name, so names must be lowercase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidPresentation("no generators"));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.chars().any(|c| !c.is_ascii_lowercase() && !c.is_ascii_digit())
                || !n.starts_with(|c: char| c.is_ascii_lowercase())
            {
                return Err(Error::InvalidPresentation("generator names must be lowercase identifiers"));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidPresentation("duplicate generator name"));
            }
        }
        for r in &relators {
            if r.is_empty() {
                return Err(Error::InvalidPresentation("empty relator"));
            }
            if r.letters().iter().any(|l| l.generator >= names.len()) {
                return Err(Error::InvalidPresentation("relator uses an unknown generator"));
            }
        }
        Ok(GroupPresentation { names, relators })
    }

    /// Free group on the given names.
    pub fn free(names: &[&str]) -> Result<Self> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), Vec::new())
    }

    /// Presentation with relators given in text form.
    pub fn with_relators(names: &[&str], relators: &[&str]) -> Result<Self> {
        let free = Self::free(names)?;
        let rels = relators
            .iter()
            .map(|r| free.parse_word(r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(free.names, rels)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses a word like `"a b A B"` or, when every name is a single
    /// character, `"abAB"`. A word that reduces to nothing is allowed.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let single = self.names.iter().all(|n| n.len() == 1);
        let mut letters = Vec::new();
        let mut push = |tok: &str| -> Result<()> {
            if tok == "1" {
                return Ok(());
            }
            if let Some(i) = self.index_of(tok) {
                letters.push(Letter::new(i, false));
                return Ok(());
            }
            let lower = tok.to_ascii_lowercase();
            if tok.chars().all(|c| !c.is_ascii_lowercase()) {
                if let Some(i) = self.index_of(&lower) {
                    letters.push(Letter::new(i, true));
                    return Ok(());
                }
            }
            Err(Error::InvalidWord("unknown generator in word"))
        };
        for tok in text.split_whitespace() {
            if single && tok.len() > 1 {
                let mut buf = [0u8; 4];
                for c in tok.chars() {
                    push(c.encode_utf8(&mut buf))?;
                }
            } else {
                push(tok)?;
            }
        }
        Ok(Word::from_letters(letters))
    }

    /// Space-separated text form; the empty word is `"1"`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (k, l) in w.letters().iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let name = &self.names[l.generator];
            if l.inverse {
                let _ = write!(out, "{}", name.to_ascii_uppercase());
            } else {
                out.push_str(name);
            }
        }
        out
    }
}
