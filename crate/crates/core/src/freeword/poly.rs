use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::kernel::{render_sum, Field, Scalar};

/// An element of the free algebra on an alphabet: word → coefficient,
/// zero coefficients never stored.
#[derive(Clone, Debug)]
pub struct NCPoly {
    alphabet: Arc<Alphabet>,
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.alphabet == other.alphabet && self.terms == other.terms
    }
}

impl Eq for NCPoly {}

impl NCPoly {
    pub fn zero(alphabet: Arc<Alphabet>, field: Field) -> Self {
        NCPoly { alphabet, field, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Arc<Alphabet>, field: Field) -> Self {
        Self::monomial(alphabet, field, Word::one(), field.one())
    }

    pub fn constant(alphabet: Arc<Alphabet>, field: Field, c: Scalar) -> Self {
        Self::monomial(alphabet, field, Word::one(), c)
    }

    pub fn monomial(alphabet: Arc<Alphabet>, field: Field, w: Word, c: Scalar) -> Self {
        let mut p = Self::zero(alphabet, field);
        p.add_term(w, c);
        p
    }

    /// The generator called `name`.
    pub fn generator(alphabet: Arc<Alphabet>, field: Field, name: &str) -> Result<Self> {
        let id = alphabet.id(name)?;
        Ok(Self::monomial(alphabet, field, Word::letter(id), field.one()))
    }

    pub fn from_terms(alphabet: Arc<Alphabet>, field: Field, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = Self::zero(alphabet, field);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Highest degree present; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::degree)
    }

    /// Largest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }

    fn compatible(&self, other: &NCPoly) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field.spec(), other.field.spec())));
        }
        Ok(())
    }

    pub fn add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return Self::zero(self.alphabet.clone(), self.field);
        }
        let terms = self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect();
        NCPoly { alphabet: self.alphabet.clone(), field: self.field, terms }
    }

    /// Concatenation product, extended bilinearly.
    pub fn mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.compatible(other)?;
        let mut out = Self::zero(self.alphabet.clone(), self.field);
        for (w1, a) in &self.terms {
            for (w2, b) in &other.terms {
                out.add_term(w1.concat(w2), a * b);
            }
        }
        Ok(out)
    }

    /// `w₁ · self · w₂`.
    pub fn sandwich(&self, w1: &Word, w2: &Word) -> NCPoly {
        let terms = self.terms.iter().map(|(w, c)| (w1.concat(w).concat(w2), c.clone())).collect();
        NCPoly { alphabet: self.alphabet.clone(), field: self.field, terms }
    }

    /// Substitutes `images[g]` for every generator `g`, multiplying in an
    /// arbitrary target through `mul`/`add`.
    pub fn evaluate<T: Clone>(
        &self,
        one: &T,
        zero: &T,
        images: &[T],
        mut mul: impl FnMut(&T, &T) -> Result<T>,
        mut add: impl FnMut(&T, &T, &Scalar) -> Result<T>,
    ) -> Result<T> {
        let mut acc = zero.clone();
        for (w, c) in &self.terms {
            let mut v = one.clone();
            for &g in w.letters() {
                v = mul(&v, &images[g as usize])?;
            }
            acc = add(&acc, &v, c)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.terms.iter().rev().map(|(w, c)| (c.clone(), self.alphabet.render(w)));
        f.write_str(&render_sum(parts))
    }
}
