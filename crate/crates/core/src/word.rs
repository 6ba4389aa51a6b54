//! Path words over Π = π².

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::{Port, PortAlphabet};
use crate::error::{Error, Result};

/// One step of a walk: leave the current vertex by the first port, arrive by the second.
pub type Letter = (Port, Port);

/// A finite sequence of port pairs. Ordered by length first, then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PathWord(Vec<Letter>);

impl PathWord {
    pub fn empty() -> Self {
        PathWord(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        PathWord(letters)
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

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn with(&self, letter: Letter) -> Self {
        let mut w = self.clone();
        w.0.push(letter);
        w
    }

    pub fn concat(&self, other: &PathWord) -> Self {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        PathWord(letters)
    }

    pub fn prefix(&self, len: usize) -> Self {
        PathWord(self.0[..len].to_vec())
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// The word walking the same edges backwards.
    pub fn reversed(&self) -> Self {
        PathWord(self.0.iter().rev().map(|&(a, b)| (b, a)).collect())
    }

    /// Parses `ab.ba` style text; the empty string and `ε` denote the empty word.
    pub fn parse(text: &str, ports: &PortAlphabet) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(PathWord::empty());
        }
        let mut letters = Vec::new();
        for piece in text.split('.') {
            let chars: Vec<char> = piece.chars().collect();
            if chars.len() != 2 {
                return Err(Error::Parse(format!("`{piece}` is not a port pair")));
            }
            let a = ports
                .port(chars[0])
                .ok_or_else(|| Error::Parse(format!("unknown port `{}`", chars[0])))?;
            let b = ports
                .port(chars[1])
                .ok_or_else(|| Error::Parse(format!("unknown port `{}`", chars[1])))?;
            letters.push((a, b));
        }
        Ok(PathWord(letters))
    }

    /// Text form used in files; the empty word is the empty string.
    pub fn encode(&self, ports: &PortAlphabet) -> String {
        let mut out = String::with_capacity(self.0.len() * 3);
        for (i, &(a, b)) in self.0.iter().enumerate() {
            if i > 0 {
                out.push('.');
            }
            out.push(ports.symbol(a));
            out.push(ports.symbol(b));
        }
        out
    }

    /// Human-readable form; the empty word prints as `ε`.
    pub fn display<'a>(&'a self, ports: &'a PortAlphabet) -> impl fmt::Display + 'a {
        WordDisplay { word: self, ports }
    }
}

struct WordDisplay<'a> {
    word: &'a PathWord,
    ports: &'a PortAlphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.word.encode(self.ports))
        }
    }
}

impl Ord for PathWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PathWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
