use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::{Alphabet, NCPoly, Word};
use crate::error::{Error, Result};
use crate::kernel::{Field, Scalar};

/// Truncation bound used when none is given.
pub const DEFAULT_BOUND: usize = 4;
/// Extra degrees allowed above a query before membership is decided.
pub const DEFAULT_SLACK: usize = 2;

/// `max(DEFAULT_BOUND, query_degree + DEFAULT_SLACK)`.
pub fn default_bound(query_degree: usize) -> usize {
    DEFAULT_BOUND.max(query_degree + DEFAULT_SLACK)
}

type Combination = BTreeMap<(Word, usize, Word), Scalar>;

/// One summand `c · w₁ · r · w₂` of a membership certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub coeff: Scalar,
    pub left: Word,
    pub relation: usize,
    pub right: Word,
}

/// An explicit combination `Σ c · w₁ · rᵢ · w₂` of relations.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Certificate {
    pub products: Vec<Product>,
}

impl Certificate {
    fn from_combination(comb: Combination) -> Self {
        let products = comb
            .into_iter()
            .map(|((left, relation, right), coeff)| Product { coeff, left, relation, right })
            .collect();
        Certificate { products }
    }

    /// Multiplies the combination out.
    pub fn expand(&self, relations: &[NCPoly], alphabet: Arc<Alphabet>, field: Field) -> Result<NCPoly> {
        let mut acc = NCPoly::zero(alphabet, field);
        for p in &self.products {
            let r = relations
                .get(p.relation)
                .ok_or_else(|| Error::InvalidInput(format!("certificate names relation {}", p.relation)))?;
            acc = acc.add(&r.sandwich(&p.left, &p.right).scale(&p.coeff))?;
        }
        Ok(acc)
    }
}

/// Outcome of a bounded membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// The polynomial is a combination of relation products; definitive.
    Yes(Certificate),
    /// No combination of degree at most the bound exists. Bounded evidence only.
    NotUpTo(usize),
}

impl Membership {
    pub fn is_yes(&self) -> bool {
        matches!(self, Membership::Yes(_))
    }
}

/// Echelon basis of `span{w₁·r·w₂ : deg ≤ D}` with monic rows and
/// distinct leading words.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    alphabet: Arc<Alphabet>,
    field: Field,
    bound: usize,
    relations: Vec<NCPoly>,
    rows: Vec<NCPoly>,
    lead: HashMap<Word, usize>,
    certs: Option<Vec<Combination>>,
}

impl IdealBasis {
    /// Builds the basis; with `track` set every row remembers how it was
    /// obtained from the relations.
    pub fn new(
        alphabet: Arc<Alphabet>,
        field: Field,
        relations: &[NCPoly],
        bound: usize,
        track: bool,
    ) -> Result<Self> {
        let mut needed = 0;
        for r in relations {
            if *r.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch);
            }
            if r.field() != field {
                return Err(Error::FieldMismatch(format!("relation over {}, ideal over {}", r.field().spec(), field.spec())));
            }
            needed = needed.max(r.degree().unwrap_or(0));
        }
        if bound < needed {
            return Err(Error::DegreeBound { bound, needed });
        }
        let mut ib = IdealBasis {
            alphabet: alphabet.clone(),
            field,
            bound,
            relations: relations.to_vec(),
            rows: Vec::new(),
            lead: HashMap::new(),
            certs: track.then(Vec::new),
        };
        let pads = alphabet.words_up_to(bound);
        for (ri, r) in relations.iter().enumerate() {
            let Some(dr) = r.degree() else { continue };
            for w1 in pads.iter().take_while(|w| w.degree() + dr <= bound) {
                for w2 in pads.iter().take_while(|w| w.degree() + w1.degree() + dr <= bound) {
                    let mut comb = Combination::new();
                    if track {
                        comb.insert((w1.clone(), ri, w2.clone()), field.one());
                    }
                    ib.insert(r.sandwich(w1, w2), comb);
                }
            }
        }
        Ok(ib)
    }

    fn insert(&mut self, p: NCPoly, comb: Combination) {
        let (residue, comb) = self.reduce_inner(p, comb);
        let Some((w, c)) = residue.leading() else { return };
        let w = w.clone();
        let inv = c.inverse().expect("nonzero leading coefficient");
        let row = residue.scale(&inv);
        if let Some(certs) = self.certs.as_mut() {
            certs.push(comb.into_iter().map(|(k, v)| (k, v * &inv)).collect());
        }
        self.lead.insert(w, self.rows.len());
        self.rows.push(row);
    }

    /// Reduces `p` and tracks `comb` so that `p_original − residue` stays
    /// equal to the combination (relative to what `comb` held on entry).
    fn reduce_inner(&self, p: NCPoly, mut comb: Combination) -> (NCPoly, Combination) {
        let mut work = p;
        let mut residue = NCPoly::zero(self.alphabet.clone(), self.field);
        while let Some((w, c)) = work.pop_leading() {
            match self.lead.get(&w) {
                None => residue.add_term(w, c),
                Some(&idx) => {
                    for (v, a) in self.rows[idx].terms().iter().rev().skip(1) {
                        work.add_term(v.clone(), -(a * &c));
                    }
                    if let Some(certs) = &self.certs {
                        for (k, a) in &certs[idx] {
                            let e = comb.entry(k.clone()).or_insert_with(|| self.field.zero());
                            *e = &*e - &(a * &c);
                        }
                        comb.retain(|_, v| !v.is_zero());
                    }
                }
            }
        }
        (residue, comb)
    }

    fn admit(&self, p: &NCPoly) -> Result<()> {
        if **p.alphabet() != *self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if p.field() != self.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", p.field().spec(), self.field.spec())));
        }
        match p.degree() {
            Some(d) if d > self.bound => Err(Error::DegreeOverflow { degree: d, bound: self.bound }),
            _ => Ok(()),
        }
    }

    /// Normal form of `p`: no word of the result is a leading word.
    pub fn reduce(&self, p: &NCPoly) -> Result<NCPoly> {
        self.admit(p)?;
        Ok(self.reduce_inner(p.clone(), Combination::new()).0)
    }

    /// Normal form together with a certificate for `p − residue`.
    /// Needs a basis built with tracking.
    pub fn reduce_with_certificate(&self, p: &NCPoly) -> Result<(NCPoly, Certificate)> {
        self.admit(p)?;
        if self.certs.is_none() {
            return Err(Error::InvalidInput("ideal basis was built without certificate tracking".into()));
        }
        let (residue, comb) = self.reduce_inner(p.clone(), Combination::new());
        // comb holds −(p − residue).
        let neg = -self.field.one();
        Ok((residue, Certificate::from_combination(comb.into_iter().map(|(k, v)| (k, v * &neg)).collect())))
    }

    pub fn contains(&self, p: &NCPoly) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    pub fn rows(&self) -> &[NCPoly] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn leading_words(&self) -> Vec<&Word> {
        self.rows.iter().map(|r| r.leading().expect("rows are nonzero").0).collect()
    }
}

/// Echelon basis of the degree-`d` truncation of the ideal generated by `relations`.
pub fn ideal_basis(alphabet: Arc<Alphabet>, field: Field, relations: &[NCPoly], d: usize) -> Result<IdealBasis> {
    IdealBasis::new(alphabet, field, relations, d, false)
}

pub fn reduce_mod_ideal(p: &NCPoly, ib: &IdealBasis) -> Result<NCPoly> {
    ib.reduce(p)
}

/// Decides whether `p` is a combination of products `w₁·r·w₂` of degree at most `d`.
pub fn ideal_member(p: &NCPoly, relations: &[NCPoly], d: usize) -> Result<Membership> {
    let ib = IdealBasis::new(p.alphabet().clone(), p.field(), relations, d, true)?;
    let (residue, cert) = ib.reduce_with_certificate(p)?;
    Ok(if residue.is_zero() { Membership::Yes(cert) } else { Membership::NotUpTo(d) })
}
