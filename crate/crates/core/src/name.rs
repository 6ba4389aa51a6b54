//! Vertex names: non-empty sets of (base, suffix) atoms.

use std::fmt;

use crate::alphabet::PortAlphabet;
use crate::error::{Error, Result};
use crate::word::PathWord;

/// The base of a name atom: a vertex of some generalized Cayley graph, or an opaque id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    Word(PathWord),
    Id(String),
}

/// Suffix from S = {ε, 1, ..., b}. Zero is ε.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Suffix(pub u16);

impl Suffix {
    pub const EPSILON: Suffix = Suffix(0);

    pub fn is_epsilon(self) -> bool {
        self.0 == 0
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Suffix::EPSILON);
        }
        text.parse::<u16>()
            .ok()
            .filter(|&k| k > 0)
            .map(Suffix)
            .ok_or_else(|| Error::Parse(format!("bad suffix `{text}`")))
    }

    pub fn encode(self) -> String {
        if self.is_epsilon() {
            String::new()
        } else {
            self.0.to_string()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub base: Base,
    pub suffix: Suffix,
}

impl Atom {
    pub fn new(base: Base, suffix: Suffix) -> Self {
        Atom { base, suffix }
    }

    pub fn word(word: PathWord, suffix: Suffix) -> Self {
        Atom {
            base: Base::Word(word),
            suffix,
        }
    }

    pub fn id(id: impl Into<String>) -> Self {
        Atom {
            base: Base::Id(id.into()),
            suffix: Suffix::EPSILON,
        }
    }

    /// The atom (ε, ε).
    pub fn origin() -> Self {
        Atom::word(PathWord::empty(), Suffix::EPSILON)
    }

    pub fn as_word(&self) -> Option<&PathWord> {
        match &self.base {
            Base::Word(w) => Some(w),
            Base::Id(_) => None,
        }
    }

    /// Base text for files. Opaque ids that would parse as a word are written with a `#` prefix.
    pub fn encode_base(&self, ports: &PortAlphabet) -> String {
        match &self.base {
            Base::Word(w) => w.encode(ports),
            Base::Id(id) => {
                if id.starts_with('#') || PathWord::parse(id, ports).is_ok() {
                    format!("#{id}")
                } else {
                    id.clone()
                }
            }
        }
    }

    /// Inverse of [`Atom::encode_base`] combined with suffix parsing.
    pub fn decode(base: &str, suffix: &str, ports: &PortAlphabet) -> Result<Self> {
        let suffix = Suffix::parse(suffix)?;
        let base = if let Some(id) = base.strip_prefix('#') {
            Base::Id(id.to_string())
        } else if let Ok(w) = PathWord::parse(base, ports) {
            Base::Word(w)
        } else {
            Base::Id(base.to_string())
        };
        Ok(Atom { base, suffix })
    }

    pub fn display<'a>(&'a self, ports: &'a PortAlphabet) -> impl fmt::Display + 'a {
        AtomDisplay { atom: self, ports }
    }
}

struct AtomDisplay<'a> {
    atom: &'a Atom,
    ports: &'a PortAlphabet,
}

impl fmt::Display for AtomDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.atom.base {
            Base::Word(w) => write!(f, "{}", w.display(self.ports))?,
            Base::Id(id) => f.write_str(id)?,
        }
        if !self.atom.suffix.is_epsilon() {
            write!(f, ".{}", self.atom.suffix.0)?;
        }
        Ok(())
    }
}

/// A non-empty set of atoms, stored sorted so that set equality is syntactic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexName(Vec<Atom>);

impl VertexName {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Result<Self> {
        let mut atoms: Vec<Atom> = atoms.into_iter().collect();
        if atoms.is_empty() {
            return Err(Error::Parse("vertex name has no atoms".into()));
        }
        atoms.sort();
        atoms.dedup();
        Ok(VertexName(atoms))
    }

    pub fn single(atom: Atom) -> Self {
        VertexName(vec![atom])
    }

    pub fn id(id: impl Into<String>) -> Self {
        VertexName::single(Atom::id(id))
    }

    pub fn word(word: PathWord) -> Self {
        VertexName::single(Atom::word(word, Suffix::EPSILON))
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.0.binary_search(atom).is_ok()
    }

    pub fn display<'a>(&'a self, ports: &'a PortAlphabet) -> impl fmt::Display + 'a {
        NameDisplay { name: self, ports }
    }
}

struct NameDisplay<'a> {
    name: &'a VertexName,
    ports: &'a PortAlphabet,
}

impl fmt::Display for NameDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.name.0.len() > 1 {
            f.write_str("{")?;
        }
        for (i, atom) in self.name.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", atom.display(self.ports))?;
        }
        if self.name.0.len() > 1 {
            f.write_str("}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_sorted_sets() {
        let x = VertexName::new([Atom::id("v"), Atom::id("u"), Atom::id("v")]).unwrap();
        let y = VertexName::new([Atom::id("u"), Atom::id("v")]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.atoms().len(), 2);
        assert!(VertexName::new([]).is_err());
    }

    #[test]
    fn atom_codec() {
        let p = PortAlphabet::new("ab".chars()).unwrap();
        let a = Atom::decode("ab.ba", "3", &p).unwrap();
        assert_eq!(a.display(&p).to_string(), "ab.ba.3");
        assert_eq!(a.encode_base(&p), "ab.ba");
        let id = Atom::id("ab");
        assert_eq!(id.encode_base(&p), "#ab");
        assert_eq!(Atom::decode("#ab", "", &p).unwrap(), id);
        assert_eq!(Atom::decode("v7", "", &p).unwrap(), Atom::id("v7"));
        assert!(Suffix::parse("0").is_err());
    }
}
