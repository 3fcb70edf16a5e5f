use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Declared generator names; a generator is identified by its position.
#[derive(Clone, Debug)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name == "1" {
                return Err(Error::InvalidInput(format!("`{name}` cannot name a generator")));
            }
            if index.insert(name.clone(), i as u32).is_some() {
                return Err(Error::InvalidInput(format!("generator `{name}` declared twice")));
            }
        }
        Ok(Alphabet { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, id: u32) -> &str {
        &self.names[id as usize]
    }

    pub fn id(&self, name: &str) -> Result<u32> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Parses a word given as generator names.
    pub fn word<S: AsRef<str>>(&self, names: &[S]) -> Result<Word> {
        names.iter().map(|s| self.id(s.as_ref())).collect::<Result<Vec<_>>>().map(Word)
    }

    /// Every word of degree at most `d`, in increasing order.
    pub fn words_up_to(&self, d: usize) -> Vec<Word> {
        let mut out = vec![Word::one()];
        let mut layer = vec![Word::one()];
        for _ in 0..d {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for g in 0..self.len() as u32 {
                    let mut v = w.0.clone();
                    v.push(g);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub fn render(&self, w: &Word) -> String {
        if w.is_one() {
            return "1".to_string();
        }
        let parts: Vec<&str> = w.0.iter().map(|&g| self.name(g)).collect();
        if parts.iter().all(|p| p.chars().count() == 1) {
            parts.concat()
        } else {
            parts.join("·")
        }
    }
}

/// A monomial of the free algebra. Ordered by degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: u32) -> Self {
        Word(vec![g])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let ids: Vec<String> = self.0.iter().map(|g| format!("g{g}")).collect();
        f.write_str(&ids.join("·"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_first_ordering() {
        let a = Word(vec![1]);
        let b = Word(vec![0, 0]);
        assert!(a < b);
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
        assert!(Word::one() < Word(vec![0]));
    }

    #[test]
    fn words_are_enumerated_in_order() {
        let al = Alphabet::new(["x", "y"]).unwrap();
        let ws = al.words_up_to(3);
        assert_eq!(ws.len(), 1 + 2 + 4 + 8);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn names_are_validated() {
        assert!(Alphabet::new(["x", "x"]).is_err());
        assert!(Alphabet::new(["1"]).is_err());
        let al = Alphabet::new(["c11", "c12"]).unwrap();
        assert_eq!(al.render(&al.word(&["c11", "c12"]).unwrap()), "c11·c12");
        assert!(matches!(al.id("c21"), Err(Error::UnknownGenerator(_))));
    }
}
