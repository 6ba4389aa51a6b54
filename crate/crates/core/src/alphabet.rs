//! Port symbols and state sets shared by every graph of a given kind.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a port symbol in its [`PortAlphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Port(pub u8);

impl Port {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Index of a state in Σ (vertices) or Δ (edges).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State(pub u8);

impl State {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The ordered port set. Symbol order fixes every canonical choice in the crate.
///
/// Ports are single characters so that path words print unambiguously as
/// dot-separated pairs, e.g. `ab.ba`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PortAlphabet {
    symbols: Vec<char>,
}

impl PortAlphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::Alphabet("port alphabet is empty".into()));
        }
        if symbols.len() > u8::MAX as usize {
            return Err(Error::Alphabet("too many ports".into()));
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::Alphabet(format!("duplicate port `{c}`")));
            }
            if *c == '.' || c.is_whitespace() || c.is_ascii_digit() || *c == 'ε' {
                return Err(Error::Alphabet(format!("`{c}` cannot be a port symbol")));
            }
        }
        Ok(PortAlphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, port: Port) -> char {
        self.symbols[port.index()]
    }

    pub fn port(&self, symbol: char) -> Option<Port> {
        self.symbols
            .iter()
            .position(|&c| c == symbol)
            .map(|i| Port(i as u8))
    }

    pub fn ports(&self) -> impl Iterator<Item = Port> + Clone {
        (0..self.symbols.len() as u8).map(Port)
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }
}

impl fmt::Display for PortAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Ports π together with the vertex states Σ and edge states Δ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    ports: PortAlphabet,
    sigma: Vec<String>,
    delta: Vec<String>,
}

fn check_states(kind: &str, states: &[String]) -> Result<()> {
    if states.len() > u8::MAX as usize {
        return Err(Error::Alphabet(format!("too many {kind} states")));
    }
    for (i, s) in states.iter().enumerate() {
        if states[..i].contains(s) {
            return Err(Error::Alphabet(format!("duplicate {kind} state `{s}`")));
        }
    }
    Ok(())
}

impl Signature {
    pub fn new(ports: PortAlphabet, sigma: Vec<String>, delta: Vec<String>) -> Result<Arc<Self>> {
        check_states("vertex", &sigma)?;
        check_states("edge", &delta)?;
        Ok(Arc::new(Signature {
            ports,
            sigma,
            delta,
        }))
    }

    /// Unlabelled signature over the given port characters.
    ///
    /// Panics if `ports` is not a valid alphabet; intended for literals.
    pub fn unlabeled(ports: &str) -> Arc<Self> {
        Self::labeled(ports, &[], &[])
    }

    /// Panics if the arguments do not form a valid signature; intended for literals.
    pub fn labeled(ports: &str, sigma: &[&str], delta: &[&str]) -> Arc<Self> {
        let alphabet = PortAlphabet::new(ports.chars()).expect("valid port literal");
        Signature::new(
            alphabet,
            sigma.iter().map(|s| s.to_string()).collect(),
            delta.iter().map(|s| s.to_string()).collect(),
        )
        .expect("valid signature literal")
    }

    pub fn ports(&self) -> &PortAlphabet {
        &self.ports
    }

    pub fn arity(&self) -> usize {
        self.ports.len()
    }

    pub fn sigma(&self) -> &[String] {
        &self.sigma
    }

    pub fn delta(&self) -> &[String] {
        &self.delta
    }

    pub fn vertex_state(&self, name: &str) -> Option<State> {
        self.sigma
            .iter()
            .position(|s| s == name)
            .map(|i| State(i as u8))
    }

    pub fn edge_state(&self, name: &str) -> Option<State> {
        self.delta
            .iter()
            .position(|s| s == name)
            .map(|i| State(i as u8))
    }

    pub fn vertex_state_name(&self, state: State) -> &str {
        &self.sigma[state.index()]
    }

    pub fn edge_state_name(&self, state: State) -> &str {
        &self.delta[state.index()]
    }

    /// The same ports without any states.
    pub fn without_states(&self) -> Arc<Self> {
        Arc::new(Signature {
            ports: self.ports.clone(),
            sigma: Vec::new(),
            delta: Vec::new(),
        })
    }
}
