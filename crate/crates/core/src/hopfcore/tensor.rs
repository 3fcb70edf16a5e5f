use std::collections::BTreeMap;

use crate::freeword::{NCPoly, Word};
use crate::kernel::{Field, Scalar};

/// A formal sum of pure tensors `w₁⊗…⊗w_k` of words, i.e. an element of
/// `T^{⊗k}` for the free algebra `T` on a host's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    rank: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl Tensor {
    pub fn zero(field: Field, rank: usize) -> Self {
        Tensor { field, rank, terms: BTreeMap::new() }
    }

    /// `1⊗…⊗1`.
    pub fn unit(field: Field, rank: usize) -> Self {
        Self::pure(field, vec![Word::one(); rank], field.one())
    }

    pub fn pure(field: Field, words: Vec<Word>, c: Scalar) -> Self {
        let mut t = Self::zero(field, words.len());
        t.add_term(words, c);
        t
    }

    /// `p₁⊗…⊗p_k`.
    pub fn from_polys(field: Field, polys: &[&NCPoly]) -> Self {
        let mut t = Self::unit(field, 0);
        for p in polys {
            t = t.otimes(&Self::from_poly(p));
        }
        t
    }

    pub fn from_poly(p: &NCPoly) -> Self {
        let mut t = Self::zero(p.field(), 1);
        for (w, c) in p.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest word degree appearing in any slot.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().flat_map(|ws| ws.iter().map(Word::degree)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: Scalar) {
        debug_assert_eq!(words.len(), self.rank);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(words) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.rank, other.rank, "tensor ranks differ");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut out = Self::zero(self.field, self.rank);
        if c.is_zero() {
            return out;
        }
        for (w, a) in &self.terms {
            out.terms.insert(w.clone(), a * c);
        }
        out
    }

    /// Slotwise product in `T^{⊗k}`.
    pub fn mul(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.rank, other.rank, "tensor ranks differ");
        let mut out = Self::zero(self.field, self.rank);
        for (w1, a) in &self.terms {
            for (w2, b) in &other.terms {
                let words = w1.iter().zip(w2).map(|(x, y)| x.concat(y)).collect();
                out.add_term(words, a * b);
            }
        }
        out
    }

    /// `self ⊗ other`, of rank `self.rank + other.rank`.
    pub fn otimes(&self, other: &Tensor) -> Tensor {
        let mut out = Self::zero(self.field, self.rank + other.rank);
        for (w1, a) in &self.terms {
            for (w2, b) in &other.terms {
                let mut words = w1.clone();
                words.extend(w2.iter().cloned());
                out.add_term(words, a * b);
            }
        }
        out
    }

    /// Slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.rank);
        let mut out = Self::zero(self.field, self.rank);
        for (w, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| w[p].clone()).collect(), c.clone());
        }
        out
    }

    /// Places the slots of `self` at positions `at` of a rank-`rank` tensor,
    /// filling the remaining slots with `1`.
    pub fn embed(&self, rank: usize, at: &[usize]) -> Tensor {
        assert_eq!(at.len(), self.rank);
        let mut out = Self::zero(self.field, rank);
        for (w, c) in &self.terms {
            let mut words = vec![Word::one(); rank];
            for (slot, &pos) in at.iter().enumerate() {
                words[pos] = w[slot].clone();
            }
            out.add_term(words, c.clone());
        }
        out
    }

    /// Replaces every word in slot `slot` by the tensor `f(word)`, splicing
    /// its slots in place.
    pub fn expand_slot(&self, slot: usize, mut f: impl FnMut(&Word) -> Tensor) -> Tensor {
        let mut out: Option<Tensor> = None;
        for (w, c) in &self.terms {
            let image = f(&w[slot]);
            let left = Tensor::pure(self.field, w[..slot].to_vec(), self.field.one());
            let right = Tensor::pure(self.field, w[slot + 1..].to_vec(), self.field.one());
            let piece = left.otimes(&image).otimes(&right).scale(c);
            out = Some(match out {
                None => piece,
                Some(acc) => acc.add(&piece),
            });
        }
        out.unwrap_or_else(|| Tensor::zero(self.field, self.rank))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slotwise_product_and_permutation() {
        let q = Field::rationals();
        let a = Tensor::pure(q, vec![Word(vec![0]), Word(vec![1])], q.one());
        let b = Tensor::pure(q, vec![Word(vec![1]), Word::one()], q.from_i64(2));
        let ab = a.mul(&b);
        assert_eq!(ab.terms().len(), 1);
        let (w, c) = ab.terms().iter().next().unwrap();
        assert_eq!(w, &vec![Word(vec![0, 1]), Word(vec![1])]);
        assert_eq!(c, &q.from_i64(2));
        let swapped = ab.permute(&[1, 0]);
        assert_eq!(swapped.terms().keys().next().unwrap()[0], Word(vec![1]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn embedding_fills_units() {
        let q = Field::rationals();
        let a = Tensor::pure(q, vec![Word(vec![0]), Word(vec![1])], q.one());
        let e = a.embed(3, &[0, 2]);
        assert_eq!(e.terms().keys().next().unwrap(), &vec![Word(vec![0]), Word::one(), Word(vec![1])]);
    }
}
