use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::Tensor;
use crate::error::{Error, Result};
use crate::freeword::{Alphabet, IdealBasis, NCPoly, Word};
use crate::kernel::{Field, Scalar, Verdict, Witness};

/// Name-based description of a finitely presented bialgebra. Generator
/// names `"1"` in `delta_gen` stand for the unit.
#[derive(Clone, Debug)]
pub struct PresentedSpec {
    pub field: Field,
    pub generators: Vec<String>,
    /// `(label, Σ c·word)`.
    pub relations: Vec<(String, Vec<(Scalar, Vec<String>)>)>,
    pub delta_gen: Vec<(String, Vec<(String, String, Scalar)>)>,
    pub eps_gen: Vec<(String, Scalar)>,
}

/// `T(V)/I` with `Δ`, `ε` given on generators and extended multiplicatively.
/// Normal forms come from the ideal truncated at a degree bound.
#[derive(Debug)]
pub struct PresentedBialgebra {
    field: Field,
    alphabet: Arc<Alphabet>,
    relations: Vec<(String, NCPoly)>,
    delta_gen: Vec<Tensor>,
    eps_gen: Vec<Scalar>,
    ideal: IdealBasis,
    normal_forms: Mutex<HashMap<Word, NCPoly>>,
}

impl Clone for PresentedBialgebra {
    fn clone(&self) -> Self {
        PresentedBialgebra {
            field: self.field,
            alphabet: self.alphabet.clone(),
            relations: self.relations.clone(),
            delta_gen: self.delta_gen.clone(),
            eps_gen: self.eps_gen.clone(),
            ideal: self.ideal.clone(),
            normal_forms: Mutex::new(HashMap::new()),
        }
    }
}

/// Result of deciding whether a tensor vanishes in `H^{⊗k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Zero,
    /// Definitely nonzero; carries the normal form.
    Nonzero(Tensor),
    /// Not decided at the truncation bound.
    Unknown(String),
}

impl PresentedBialgebra {
    pub fn new(spec: PresentedSpec, bound: usize) -> Result<Self> {
        let alphabet = Arc::new(Alphabet::new(spec.generators.clone())?);
        let field = spec.field;
        let mut relations = Vec::new();
        for (label, terms) in &spec.relations {
            let mut p = NCPoly::zero(alphabet.clone(), field);
            for (c, names) in terms {
                if !field.owns(c) {
                    return Err(Error::FieldMismatch(format!("scalar {c} in relation {label}")));
                }
                p.add_term(alphabet.word(names)?, c.clone());
            }
            relations.push((label.clone(), p));
        }
        let word_or_unit = |name: &str| if name == "1" { Ok(Word::one()) } else { alphabet.id(name).map(Word::letter) };
        let mut delta_gen = vec![None; alphabet.len()];
        for (g, terms) in &spec.delta_gen {
            let id = alphabet.id(g)? as usize;
            let mut t = Tensor::zero(field, 2);
            for (l, r, c) in terms {
                t.add_term(vec![word_or_unit(l)?, word_or_unit(r)?], c.clone());
            }
            delta_gen[id] = Some(t);
        }
        let delta_gen = delta_gen
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| Error::InvalidInput(format!("Δ({}) missing", alphabet.name(i as u32)))))
            .collect::<Result<Vec<_>>>()?;
        let mut eps_gen = vec![None; alphabet.len()];
        for (g, c) in &spec.eps_gen {
            eps_gen[alphabet.id(g)? as usize] = Some(c.clone());
        }
        let eps_gen = eps_gen
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| Error::InvalidInput(format!("ε({}) missing", alphabet.name(i as u32)))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(alphabet, field, relations, delta_gen, eps_gen, bound)
    }

    /// Validates and assembles a presentation.
    ///
    /// Checks, in order: the bound covers twice the largest relation degree;
    /// `Δ` of each generator lies in `(V+k)⊗(V+k)`; coassociativity and the
    /// counit law on generators (exactly, in the free algebra); then for
    /// every relation `ε(r)=0` and `Δ(r) ≡ 0` modulo the truncated ideal.
    pub fn from_parts(
        alphabet: Arc<Alphabet>,
        field: Field,
        relations: Vec<(String, NCPoly)>,
        delta_gen: Vec<Tensor>,
        eps_gen: Vec<Scalar>,
        bound: usize,
    ) -> Result<Self> {
        let max_deg = relations.iter().filter_map(|(_, r)| r.degree()).max().unwrap_or(0);
        if bound < 2 * max_deg {
            return Err(Error::DegreeBound { bound, needed: 2 * max_deg });
        }
        if delta_gen.len() != alphabet.len() || eps_gen.len() != alphabet.len() {
            return Err(Error::Dimension("Δ and ε must be given on every generator".into()));
        }
        for (g, t) in delta_gen.iter().enumerate() {
            if t.rank() != 2 || t.max_degree() > 1 {
                return Err(Error::InvalidInput(format!(
                    "Δ({}) must be a sum of (generator or 1)⊗(generator or 1)",
                    alphabet.name(g as u32)
                )));
            }
        }
        let polys: Vec<NCPoly> = relations.iter().map(|(_, r)| r.clone()).collect();
        let ideal = IdealBasis::new(alphabet.clone(), field, &polys, bound, false)?;
        let b = PresentedBialgebra {
            field,
            alphabet,
            relations,
            delta_gen,
            eps_gen,
            ideal,
            normal_forms: Mutex::new(HashMap::new()),
        };
        for what in ["coassociativity", "counit law"] {
            let v = if what == "coassociativity" { b.check_coassociativity() } else { b.check_counit() };
            if !v.is_pass() {
                return Err(Error::axiom(what, v));
            }
        }
        let v = b.check_relations();
        if !v.is_pass() {
            return Err(Error::axiom("relations form a biideal", v));
        }
        Ok(b)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn relations(&self) -> &[(String, NCPoly)] {
        &self.relations
    }

    pub fn bound(&self) -> usize {
        self.ideal.bound()
    }

    pub fn ideal(&self) -> &IdealBasis {
        &self.ideal
    }

    pub fn delta_generator(&self, g: u32) -> &Tensor {
        &self.delta_gen[g as usize]
    }

    pub fn eps_generator(&self, g: u32) -> &Scalar {
        &self.eps_gen[g as usize]
    }

    /// `Δ(w)`, the product of the generators' coproducts.
    pub fn delta_word(&self, w: &Word) -> Tensor {
        w.letters()
            .iter()
            .fold(Tensor::unit(self.field, 2), |acc, &g| acc.mul(&self.delta_gen[g as usize]))
    }

    pub fn eps_word(&self, w: &Word) -> Scalar {
        w.letters().iter().fold(self.field.one(), |acc, &g| acc * &self.eps_gen[g as usize])
    }

    /// Normal form of a word modulo the truncated ideal.
    pub fn normal_word(&self, w: &Word) -> Result<NCPoly> {
        if let Some(p) = self.normal_forms.lock().expect("cache poisoned").get(w) {
            return Ok(p.clone());
        }
        let p = NCPoly::monomial(self.alphabet.clone(), self.field, w.clone(), self.field.one());
        let nf = self.ideal.reduce(&p)?;
        self.normal_forms.lock().expect("cache poisoned").insert(w.clone(), nf.clone());
        Ok(nf)
    }

    /// Whether a nonzero normal form proves a nonzero element: only when
    /// there are no relations.
    pub fn residues_are_definitive(&self) -> bool {
        self.relations.iter().all(|(_, r)| r.is_zero())
    }

    fn check_coassociativity(&self) -> Verdict {
        let mut ws = Vec::new();
        for g in 0..self.alphabet.len() as u32 {
            let d = &self.delta_gen[g as usize];
            let left = d.expand_slot(0, |w| self.delta_word(w));
            let right = d.expand_slot(1, |w| self.delta_word(w));
            if left != right {
                ws.push(Witness::new(
                    format!("coassociativity at {}", self.alphabet.name(g)),
                    render_raw(&self.alphabet, &left),
                    render_raw(&self.alphabet, &right),
                ));
            }
        }
        finish(ws, "coassociativity on generators")
    }

    fn check_counit(&self) -> Verdict {
        let mut ws = Vec::new();
        for g in 0..self.alphabet.len() as u32 {
            let gen = Tensor::pure(self.field, vec![Word::letter(g)], self.field.one());
            let d = &self.delta_gen[g as usize];
            for (slot, label) in [(0usize, "(ε⊗I)Δ"), (1, "(I⊗ε)Δ")] {
                let mut t = Tensor::zero(self.field, 1);
                for (ws2, c) in d.terms() {
                    t.add_term(vec![ws2[1 - slot].clone()], c * &self.eps_word(&ws2[slot]));
                }
                if t != gen {
                    ws.push(Witness::new(
                        format!("{label}({})", self.alphabet.name(g)),
                        render_raw(&self.alphabet, &gen),
                        render_raw(&self.alphabet, &t),
                    ));
                }
            }
        }
        finish(ws, "counit law on generators")
    }

    fn check_relations(&self) -> Verdict {
        let mut parts = Vec::new();
        for (label, r) in &self.relations {
            let e = r.terms().iter().fold(self.field.zero(), |acc, (w, c)| acc + c * &self.eps_word(w));
            if !e.is_zero() {
                parts.push(Verdict::fail(Witness::new(format!("ε({label})"), 0, e), "ε vanishes on relations"));
                continue;
            }
            let mut d = Tensor::zero(self.field, 2);
            for (w, c) in r.terms() {
                d = d.add(&self.delta_word(w).scale(c));
            }
            parts.push(match self.decide(&d) {
                Decision::Zero => Verdict::pass(format!("Δ({label})")),
                Decision::Nonzero(nf) => Verdict::fail(
                    Witness::new(format!("Δ({label})"), 0, render_raw(&self.alphabet, &nf)),
                    "Δ maps relations into I⊗H + H⊗I",
                ),
                Decision::Unknown(why) => Verdict::inconclusive_at(
                    Witness::new(format!("Δ({label})"), 0, render_raw(&self.alphabet, &d)),
                    why,
                ),
            });
        }
        Verdict::all("relations form a biideal", parts)
    }

    /// Slotwise normal form of a tensor.
    pub fn normalize(&self, t: &Tensor) -> Result<Tensor> {
        let mut out = Tensor::zero(self.field, t.rank());
        for (words, c) in t.terms() {
            let mut piece = Tensor::pure(self.field, vec![], c.clone());
            for w in words {
                piece = piece.otimes(&Tensor::from_poly(&self.normal_word(w)?));
            }
            out = out.add(&piece);
        }
        Ok(out)
    }

    pub fn decide(&self, t: &Tensor) -> Decision {
        match self.normalize(t) {
            Ok(nf) if nf.is_zero() => Decision::Zero,
            Ok(nf) if self.residues_are_definitive() => Decision::Nonzero(nf),
            Ok(_) => Decision::Unknown(format!("nonzero residue at degree bound {}", self.bound())),
            Err(e) => Decision::Unknown(e.to_string()),
        }
    }
}

fn finish(ws: Vec<Witness>, what: &str) -> Verdict {
    if ws.is_empty() {
        Verdict::pass(what)
    } else {
        Verdict::fail_many(ws, what)
    }
}

/// Renders a tensor over an alphabet without normalizing.
pub fn render_raw(alphabet: &Alphabet, t: &Tensor) -> String {
    crate::kernel::render_sum(t.terms().iter().map(|(ws, c)| {
        let labels: Vec<String> = ws.iter().map(|w| alphabet.render(w)).collect();
        (c.clone(), labels.join("⊗"))
    }))
}
