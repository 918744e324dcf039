use std::collections::HashMap;
use std::fmt;

use super::SuperSymbol;

/// A word `e_{a_1 b_1} ⋯ e_{a_m b_m}` of superpolarizations, stored left to
/// right as `(creator, annihilator)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    pairs: Vec<(SuperSymbol, SuperSymbol)>,
}

impl OperatorWord {
    pub fn new(pairs: Vec<(SuperSymbol, SuperSymbol)>) -> Self {
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(SuperSymbol, SuperSymbol)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (a, b) in &self.pairs {
            write!(f, "e[{a},{b}]")?;
        }
        Ok(())
    }
}

/// True when, reading from the right, some factor annihilates a virtual
/// symbol more often than the factors to its right have created it.
pub fn is_irregular(w: &OperatorWord) -> bool {
    let mut created: HashMap<SuperSymbol, usize> = HashMap::new();
    let mut annihilated: HashMap<SuperSymbol, usize> = HashMap::new();
    for &(a, b) in w.pairs.iter().rev() {
        if b.is_virtual() {
            let n = annihilated.entry(b).or_default();
            *n += 1;
            if *n > created.get(&b).copied().unwrap_or(0) {
                return true;
            }
        }
        if a.is_virtual() {
            *created.entry(a).or_default() += 1;
        }
    }
    false
}
