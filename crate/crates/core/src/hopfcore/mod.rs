//! Bialgebras given by tables or by presentations, comodules, module
//! actions, Hopf modules and bialgebra maps.

mod comodule;
mod map;
mod presented;
mod subcoalgebra;
mod table;
mod tensor;

use std::sync::Arc;

pub use comodule::{check_hopf_module, check_hopf_module_words, r_from_hopf_module, Comodule, ModuleAction};
pub use map::check_bialgebra_map;
pub use presented::{render_raw, Decision, PresentedBialgebra, PresentedSpec};
pub use subcoalgebra::SubcoalgebraView;
pub use table::{TableBialgebra, TableSpec};
pub use tensor::Tensor;

use crate::error::{Error, Result};
use crate::freeword::{Alphabet, NCPoly, Word};
use crate::kernel::{render_sum, Field, Scalar, Verdict, Witness};

/// A bialgebra in either representation. Elements are polynomials in the
/// generators: the non-unit basis vectors of a table, or the declared
/// generators of a presentation.
#[derive(Clone, Debug)]
pub enum Bialgebra {
    Table(TableBialgebra),
    Presented(PresentedBialgebra),
}

impl From<TableBialgebra> for Bialgebra {
    fn from(t: TableBialgebra) -> Self {
        Bialgebra::Table(t)
    }
}

impl From<PresentedBialgebra> for Bialgebra {
    fn from(p: PresentedBialgebra) -> Self {
        Bialgebra::Presented(p)
    }
}

impl Bialgebra {
    pub fn field(&self) -> Field {
        match self {
            Bialgebra::Table(t) => t.field(),
            Bialgebra::Presented(p) => p.field(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        match self {
            Bialgebra::Table(t) => t.alphabet(),
            Bialgebra::Presented(p) => p.alphabet(),
        }
    }

    pub fn generators(&self) -> &[String] {
        self.alphabet().names()
    }

    pub fn as_table(&self) -> Option<&TableBialgebra> {
        match self {
            Bialgebra::Table(t) => Some(t),
            Bialgebra::Presented(_) => None,
        }
    }

    pub fn as_presented(&self) -> Option<&PresentedBialgebra> {
        match self {
            Bialgebra::Table(_) => None,
            Bialgebra::Presented(p) => Some(p),
        }
    }

    /// Truncation bound of a presented host.
    pub fn bound(&self) -> Option<usize> {
        self.as_presented().map(PresentedBialgebra::bound)
    }

    pub fn one(&self) -> NCPoly {
        NCPoly::one(self.alphabet().clone(), self.field())
    }

    pub fn zero(&self) -> NCPoly {
        NCPoly::zero(self.alphabet().clone(), self.field())
    }

    /// The generator or table basis element called `name`; `"1"` is the unit.
    pub fn element(&self, name: &str) -> Result<NCPoly> {
        match self {
            Bialgebra::Table(t) => Ok(t.basis_element(t.index_of(name)?)),
            Bialgebra::Presented(_) if name == "1" => Ok(self.one()),
            Bialgebra::Presented(p) => NCPoly::generator(p.alphabet().clone(), p.field(), name),
        }
    }

    pub fn word_poly(&self, w: &Word) -> NCPoly {
        NCPoly::monomial(self.alphabet().clone(), self.field(), w.clone(), self.field().one())
    }

    fn admit(&self, p: &NCPoly) -> Result<()> {
        if p.alphabet() != self.alphabet() && **p.alphabet() != **self.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        if p.field() != self.field() {
            return Err(Error::FieldMismatch(format!("{} vs {}", p.field().spec(), self.field().spec())));
        }
        Ok(())
    }

    pub fn delta_word(&self, w: &Word) -> Tensor {
        match self {
            Bialgebra::Table(t) => {
                let f = t.field();
                let mut out = Tensor::zero(f, 2);
                for (i, a) in t.word_vector(w).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (l, r, c) in t.delta_of(i) {
                        out.add_term(vec![t.word_of(*l), t.word_of(*r)], a * c);
                    }
                }
                out
            }
            Bialgebra::Presented(p) => p.delta_word(w),
        }
    }

    pub fn eps_word(&self, w: &Word) -> Scalar {
        match self {
            Bialgebra::Table(t) => t.eps_vec(&t.word_vector(w)),
            Bialgebra::Presented(p) => p.eps_word(w),
        }
    }

    /// `Δ(p) = Σ p₍₁₎⊗p₍₂₎`.
    pub fn delta(&self, p: &NCPoly) -> Result<Tensor> {
        self.admit(p)?;
        let mut out = Tensor::zero(self.field(), 2);
        for (w, c) in p.terms() {
            out = out.add(&self.delta_word(w).scale(c));
        }
        Ok(out)
    }

    pub fn counit(&self, p: &NCPoly) -> Result<Scalar> {
        self.admit(p)?;
        Ok(p.terms().iter().fold(self.field().zero(), |acc, (w, c)| acc + c * &self.eps_word(w)))
    }

    /// `Δ` applied to one slot of a tensor.
    pub fn delta_slot(&self, t: &Tensor, slot: usize) -> Tensor {
        t.expand_slot(slot, |w| self.delta_word(w))
    }

    /// `ε` applied to one slot, removing it.
    pub fn eps_slot(&self, t: &Tensor, slot: usize) -> Tensor {
        let mut out = Tensor::zero(self.field(), t.rank() - 1);
        for (ws, c) in t.terms() {
            let e = self.eps_word(&ws[slot]);
            let mut rest = ws.clone();
            rest.remove(slot);
            out.add_term(rest, c * &e);
        }
        out
    }

    /// Normal form of a word: basis coordinates for tables, reduction
    /// modulo the truncated ideal for presentations.
    pub fn normal_word(&self, w: &Word) -> Result<NCPoly> {
        match self {
            Bialgebra::Table(t) => Ok(t.from_vector(&t.word_vector(w))),
            Bialgebra::Presented(p) => p.normal_word(w),
        }
    }

    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        self.admit(p)?;
        let mut out = self.zero();
        for (w, c) in p.terms() {
            out = out.add(&self.normal_word(w)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn normalize(&self, t: &Tensor) -> Result<Tensor> {
        match self {
            Bialgebra::Table(tb) => {
                let mut out = Tensor::zero(tb.field(), t.rank());
                for (words, c) in t.terms() {
                    let mut piece = Tensor::pure(tb.field(), vec![], c.clone());
                    for w in words {
                        piece = piece.otimes(&Tensor::from_poly(&tb.from_vector(&tb.word_vector(w))));
                    }
                    out = out.add(&piece);
                }
                Ok(out)
            }
            Bialgebra::Presented(p) => p.normalize(t),
        }
    }

    /// Whether `t` vanishes in `H^{⊗k}`.
    pub fn decide(&self, t: &Tensor) -> Decision {
        match self {
            Bialgebra::Table(_) => {
                let nf = self.normalize(t).expect("table normal forms always exist");
                if nf.is_zero() {
                    Decision::Zero
                } else {
                    Decision::Nonzero(nf)
                }
            }
            Bialgebra::Presented(p) => p.decide(t),
        }
    }

    pub fn render_tensor(&self, t: &Tensor) -> String {
        let shown = self.normalize(t).unwrap_or_else(|_| t.clone());
        render_sum(shown.terms().iter().map(|(ws, c)| {
            let labels: Vec<String> = ws.iter().map(|w| self.render_word(w)).collect();
            (c.clone(), labels.join("⊗"))
        }))
    }

    pub fn render(&self, p: &NCPoly) -> String {
        self.render_tensor(&Tensor::from_poly(p))
    }

    pub fn render_word(&self, w: &Word) -> String {
        match self {
            Bialgebra::Table(t) if w.is_one() => t.basis()[t.unit_index()].clone(),
            _ => self.alphabet().render(w),
        }
    }

    /// Compares two tensors in `H^{⊗k}`: pass, fail with both sides rendered,
    /// or inconclusive when a presented host cannot decide.
    pub fn compare(&self, lhs: &Tensor, rhs: &Tensor, location: impl Into<String>, detail: &str) -> Verdict {
        match self.decide(&lhs.sub(rhs)) {
            Decision::Zero => Verdict::pass(detail),
            Decision::Nonzero(_) => {
                Verdict::fail(Witness::new(location, self.render_tensor(lhs), self.render_tensor(rhs)), detail)
            }
            Decision::Unknown(why) => Verdict::inconclusive_at(
                Witness::new(location, self.render_tensor(lhs), self.render_tensor(rhs)),
                format!("{detail}: {why}"),
            ),
        }
    }

    pub fn compare_elems(&self, lhs: &NCPoly, rhs: &NCPoly, location: impl Into<String>, detail: &str) -> Verdict {
        self.compare(&Tensor::from_poly(lhs), &Tensor::from_poly(rhs), location, detail)
    }

    /// Relations presenting the algebra on its generators.
    pub fn relations(&self) -> Vec<(String, NCPoly)> {
        match self {
            Bialgebra::Table(t) => t.relations(),
            Bialgebra::Presented(p) => p.relations().to_vec(),
        }
    }

    /// Re-runs the structural axiom checks.
    pub fn axiom_report(&self) -> Vec<(String, Verdict)> {
        match self {
            Bialgebra::Table(t) => t.axiom_report(),
            Bialgebra::Presented(p) => {
                let fresh = PresentedBialgebra::from_parts(
                    p.alphabet().clone(),
                    p.field(),
                    p.relations().to_vec(),
                    (0..p.alphabet().len() as u32).map(|g| p.delta_generator(g).clone()).collect(),
                    (0..p.alphabet().len() as u32).map(|g| p.eps_generator(g).clone()).collect(),
                    p.bound(),
                );
                let v = match fresh {
                    Ok(_) => Verdict::pass("presentation axioms"),
                    Err(e) => e.verdict().cloned().unwrap_or_else(|| Verdict::inconclusive(e.to_string())),
                };
                vec![("presentation axioms".to_string(), v)]
            }
        }
    }
}

/// `Δ(element)` for either representation.
pub fn delta_eval(b: &Bialgebra, element: &NCPoly) -> Result<Tensor> {
    b.delta(element)
}

pub fn counit_eval(b: &Bialgebra, element: &NCPoly) -> Result<Scalar> {
    b.counit(element)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn tk(field: Field) -> TableBialgebra {
        let s = |v: i64| field.from_i64(v);
        TableBialgebra::new(TableSpec {
            field,
            basis: vec!["1".into(), "x".into(), "z".into()],
            unit: "1".into(),
            mult: vec![("x".into(), "x".into(), vec![("x".into(), s(1))])],
            delta: vec![
                ("1".into(), vec![("1".into(), "1".into(), s(1))]),
                ("x".into(), vec![("x".into(), "x".into(), s(1))]),
                ("z".into(), vec![("x".into(), "z".into(), s(1)), ("z".into(), "1".into(), s(1))]),
            ],
            eps: vec![("1".into(), s(1)), ("x".into(), s(1)), ("z".into(), s(0))],
        })
        .unwrap()
    }

    pub fn kz2(field: Field) -> TableBialgebra {
        let one = field.one();
        TableBialgebra::new(TableSpec {
            field,
            basis: vec!["e".into(), "g".into()],
            unit: "e".into(),
            mult: vec![("g".into(), "g".into(), vec![("e".into(), one.clone())])],
            delta: vec![
                ("e".into(), vec![("e".into(), "e".into(), one.clone())]),
                ("g".into(), vec![("g".into(), "g".into(), one.clone())]),
            ],
            eps: vec![("e".into(), one.clone()), ("g".into(), one)],
        })
        .unwrap()
    }

    pub fn fk_spec(field: Field) -> TableSpec {
        let s = |v: i64| field.from_i64(v);
        let m = |a: &str, b: &str, r: &[&str]| (a.to_string(), b.to_string(), r.iter().map(|n| (n.to_string(), s(1))).collect());
        let d = |a: &str, r: &[(&str, &str)]| {
            (a.to_string(), r.iter().map(|(l, r)| (l.to_string(), r.to_string(), s(1))).collect())
        };
        TableSpec {
            field,
            basis: ["1", "x", "y", "z", "t"].map(String::from).to_vec(),
            unit: "1".into(),
            mult: vec![
                m("x", "x", &["x"]),
                m("x", "y", &["y"]),
                m("x", "z", &["z"]),
                m("x", "t", &["t"]),
                m("z", "x", &["z"]),
                m("z", "y", &["x", "t"]),
                m("z", "t", &["z"]),
                m("t", "x", &["x"]),
                m("t", "y", &["y"]),
                m("t", "z", &["z"]),
                m("t", "t", &["t"]),
            ],
            delta: vec![
                d("1", &[("1", "1")]),
                d("x", &[("x", "x"), ("y", "z")]),
                d("y", &[("x", "y"), ("y", "t")]),
                d("z", &[("z", "x"), ("t", "z")]),
                d("t", &[("z", "y"), ("t", "t")]),
            ],
            eps: vec![("1".into(), s(1)), ("x".into(), s(1)), ("y".into(), s(0)), ("z".into(), s(0)), ("t".into(), s(1))],
        }
    }
}
