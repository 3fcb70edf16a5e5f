//! JSON file formats for matrices, bialgebras, pairings and tensor elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeword::{Alphabet, NCPoly, Word};
use crate::hopfcore::{Bialgebra, PresentedBialgebra, PresentedSpec, SubcoalgebraView, TableBialgebra, TableSpec};
use crate::hopfelement::TensorElement;
use crate::kernel::{Field, FieldSpec, Matrix, Scalar};
use crate::pairing::{Extension, Pairing};
use crate::tensorlab::{endo_from_matrix, EndoTensor};

/// `"Q"` or `{"GF": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    Named(String),
    Prime {
        #[serde(rename = "GF")]
        gf: u64,
    },
}

impl FieldJson {
    pub fn field(&self) -> Result<Field> {
        match self {
            FieldJson::Named(s) => Field::new(s.parse()?),
            FieldJson::Prime { gf } => Field::new(FieldSpec::Prime(*gf)),
        }
    }
}

impl From<Field> for FieldJson {
    fn from(f: Field) -> Self {
        match f.spec() {
            FieldSpec::Rationals => FieldJson::Named("Q".into()),
            FieldSpec::Prime(p) => FieldJson::Prime { gf: p },
        }
    }
}

/// A scalar as a JSON integer or as text `n` / `a/b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(i64),
    Text(String),
}

impl ScalarJson {
    pub fn parse(&self, field: Field) -> Result<Scalar> {
        match self {
            ScalarJson::Int(v) => field.parse_scalar(&v.to_string()),
            ScalarJson::Text(t) => field.parse_scalar(t),
        }
    }
}

impl From<&Scalar> for ScalarJson {
    fn from(s: &Scalar) -> Self {
        ScalarJson::Text(s.to_string())
    }
}

/// `{"field", "n", "matrix"}`: row-major `n²×n²` matrix on the
/// lexicographic basis of `M⊗M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub field: FieldJson,
    pub n: usize,
    pub matrix: Vec<Vec<ScalarJson>>,
}

impl MatrixFile {
    pub fn to_endo(&self) -> Result<EndoTensor> {
        let f = self.field.field()?;
        let d = self.n * self.n;
        if self.matrix.len() != d || self.matrix.iter().any(|r| r.len() != d) {
            return Err(Error::Dimension(format!("matrix must be {d}×{d} for n = {}", self.n)));
        }
        let rows = self
            .matrix
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .map(|(j, s)| s.parse(f).map_err(|e| Error::Parse(format!("matrix[{i}][{j}]: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        endo_from_matrix(self.n, Matrix::from_rows(f, rows)?)
    }

    pub fn from_endo(r: &EndoTensor) -> Self {
        MatrixFile {
            field: r.field().into(),
            n: r.n(),
            matrix: r.matrix().to_rows().iter().map(|row| row.iter().map(ScalarJson::from).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductTerm {
    pub b: String,
    pub c: ScalarJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoproductTerm {
    pub l: String,
    pub r: String,
    pub c: ScalarJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTerm {
    pub c: ScalarJson,
    pub w: Vec<String>,
}

/// Structure tables on a named basis; `mult[i][j]` lists the terms of
/// `b_i·b_j`, `delta[i]` the terms of `Δ(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub field: FieldJson,
    pub basis: Vec<String>,
    pub unit: String,
    pub mult: Vec<Vec<Vec<ProductTerm>>>,
    pub delta: Vec<Vec<CoproductTerm>>,
    pub eps: Vec<ScalarJson>,
}

/// Generators, relations (each a list of terms, equal to zero), and `Δ`,
/// `ε` on generators in generator order. `"1"` in `delta_gen` is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub field: FieldJson,
    pub generators: Vec<String>,
    pub relations: Vec<Vec<WordTerm>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub delta_gen: Vec<Vec<CoproductTerm>>,
    pub eps_gen: Vec<ScalarJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BialgebraFile {
    Table(TableFile),
    Presented(PresentationFile),
}

impl BialgebraFile {
    /// Builds and validates; `bound` is the truncation degree for presentations.
    pub fn build(&self, bound: usize) -> Result<Bialgebra> {
        match self {
            BialgebraFile::Table(t) => Ok(Bialgebra::from(TableBialgebra::new(t.spec()?)?)),
            BialgebraFile::Presented(p) => Ok(Bialgebra::from(PresentedBialgebra::new(p.spec()?, bound)?)),
        }
    }

    pub fn from_bialgebra(b: &Bialgebra) -> Self {
        match b {
            Bialgebra::Table(t) => BialgebraFile::Table(TableFile::from_table(t)),
            Bialgebra::Presented(p) => BialgebraFile::Presented(PresentationFile::from_presented(p)),
        }
    }
}

impl TableFile {
    pub fn spec(&self) -> Result<TableSpec> {
        let f = self.field.field()?;
        let d = self.basis.len();
        if self.mult.len() != d || self.mult.iter().any(|r| r.len() != d) || self.delta.len() != d || self.eps.len() != d {
            return Err(Error::Dimension(format!("tables must match the {d} basis elements")));
        }
        let mut mult = Vec::new();
        for (i, row) in self.mult.iter().enumerate() {
            for (j, terms) in row.iter().enumerate() {
                let terms = terms.iter().map(|t| Ok((t.b.clone(), t.c.parse(f)?))).collect::<Result<Vec<_>>>()?;
                mult.push((self.basis[i].clone(), self.basis[j].clone(), terms));
            }
        }
        let delta = self
            .delta
            .iter()
            .enumerate()
            .map(|(i, terms)| {
                let terms = terms.iter().map(|t| Ok((t.l.clone(), t.r.clone(), t.c.parse(f)?))).collect::<Result<Vec<_>>>()?;
                Ok((self.basis[i].clone(), terms))
            })
            .collect::<Result<Vec<_>>>()?;
        let eps = self.eps.iter().enumerate().map(|(i, c)| Ok((self.basis[i].clone(), c.parse(f)?))).collect::<Result<_>>()?;
        Ok(TableSpec { field: f, basis: self.basis.clone(), unit: self.unit.clone(), mult, delta, eps })
    }

    pub fn from_table(t: &TableBialgebra) -> Self {
        let d = t.dim();
        let name = |i: usize| t.basis()[i].clone();
        let mult = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        t.product(i, j)
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| ProductTerm { b: name(k), c: c.into() })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let delta = (0..d)
            .map(|i| t.delta_of(i).iter().map(|(l, r, c)| CoproductTerm { l: name(*l), r: name(*r), c: c.into() }).collect())
            .collect();
        TableFile {
            field: t.field().into(),
            basis: t.basis().to_vec(),
            unit: name(t.unit_index()),
            mult,
            delta,
            eps: (0..d).map(|i| t.eps_of(i).into()).collect(),
        }
    }
}

fn word_names(al: &Alphabet, w: &Word) -> Vec<String> {
    w.letters().iter().map(|&g| al.name(g).to_string()).collect()
}

fn slot_name(al: &Alphabet, w: &Word) -> String {
    if w.is_one() {
        "1".into()
    } else {
        word_names(al, w).join("")
    }
}

impl PresentationFile {
    pub fn spec(&self) -> Result<PresentedSpec> {
        let f = self.field.field()?;
        let g = self.generators.len();
        if self.delta_gen.len() != g || self.eps_gen.len() != g {
            return Err(Error::Dimension(format!("Δ and ε must be given for all {g} generators")));
        }
        if !self.labels.is_empty() && self.labels.len() != self.relations.len() {
            return Err(Error::Dimension("one label per relation".into()));
        }
        let relations = self
            .relations
            .iter()
            .enumerate()
            .map(|(i, terms)| {
                let label = self.labels.get(i).cloned().unwrap_or_else(|| format!("r{}", i + 1));
                let terms = terms.iter().map(|t| Ok((t.c.parse(f)?, t.w.clone()))).collect::<Result<Vec<_>>>()?;
                Ok((label, terms))
            })
            .collect::<Result<Vec<_>>>()?;
        let delta_gen = self
            .delta_gen
            .iter()
            .enumerate()
            .map(|(i, terms)| {
                let terms = terms.iter().map(|t| Ok((t.l.clone(), t.r.clone(), t.c.parse(f)?))).collect::<Result<Vec<_>>>()?;
                Ok((self.generators[i].clone(), terms))
            })
            .collect::<Result<Vec<_>>>()?;
        let eps_gen =
            self.eps_gen.iter().enumerate().map(|(i, c)| Ok((self.generators[i].clone(), c.parse(f)?))).collect::<Result<_>>()?;
        Ok(PresentedSpec { field: f, generators: self.generators.clone(), relations, delta_gen, eps_gen })
    }

    pub fn from_presented(p: &PresentedBialgebra) -> Self {
        let al = p.alphabet();
        let relations = p
            .relations()
            .iter()
            .map(|(_, r)| r.terms().iter().map(|(w, c)| WordTerm { c: c.into(), w: word_names(al, w) }).collect())
            .collect();
        let delta_gen = (0..al.len() as u32)
            .map(|g| {
                p.delta_generator(g)
                    .terms()
                    .iter()
                    .map(|(ws, c)| CoproductTerm { l: slot_name(al, &ws[0]), r: slot_name(al, &ws[1]), c: c.into() })
                    .collect()
            })
            .collect();
        PresentationFile {
            field: p.field().into(),
            generators: al.names().to_vec(),
            relations,
            labels: p.relations().iter().map(|(l, _)| l.clone()).collect(),
            delta_gen,
            eps_gen: (0..al.len() as u32).map(|g| p.eps_generator(g).into()).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtensionJson {
    #[default]
    Multiplicative,
    Linear,
}

/// `{"C": [names], "table": {c: {h or "1": scalar}}}`. Missing generator
/// entries are zero and a missing `"1"` entry is `ε(c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaFile {
    #[serde(rename = "C")]
    pub c: Vec<String>,
    pub table: BTreeMap<String, BTreeMap<String, ScalarJson>>,
    #[serde(default)]
    pub extension: ExtensionJson,
}

impl SigmaFile {
    pub fn build(&self, host: Arc<Bialgebra>) -> Result<Pairing> {
        let f = host.field();
        let names: Vec<&str> = self.c.iter().map(String::as_str).collect();
        let c = SubcoalgebraView::from_names(host, &names)?;
        let mut entries = Vec::new();
        for (cn, row) in &self.table {
            for (h, v) in row {
                entries.push((cn.clone(), h.clone(), v.parse(f)?));
            }
        }
        let ext = match self.extension {
            ExtensionJson::Multiplicative => Extension::Multiplicative,
            ExtensionJson::Linear => Extension::Linear,
        };
        Pairing::from_entries(c, &entries, ext)
    }

    pub fn from_pairing(sigma: &Pairing) -> Self {
        let c = sigma.coalgebra();
        let mut table = BTreeMap::new();
        for (i, row) in sigma.table().iter().enumerate() {
            let entries = row.iter().enumerate().map(|(col, v)| (sigma.column_name(col), v.into())).collect();
            table.insert(c.names()[i].clone(), entries);
        }
        let extension = match sigma.extension() {
            Extension::Multiplicative => ExtensionJson::Multiplicative,
            Extension::Linear => ExtensionJson::Linear,
        };
        SigmaFile { c: c.names().to_vec(), table, extension }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementTerm {
    /// First slot as a word in the generators of `A` (empty for `1`).
    pub a: Vec<String>,
    /// Second slot as a word in the host generators (empty for `1`).
    pub h: Vec<String>,
    pub c: ScalarJson,
}

/// `{"A": [host generator names], "terms": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementFile {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    pub terms: Vec<ElementTerm>,
}

impl ElementFile {
    pub fn build(&self, host: Arc<Bialgebra>) -> Result<TensorElement> {
        let f = host.field();
        let a_gens = self.a.iter().map(|g| Ok((g.clone(), host.element(g)?))).collect::<Result<Vec<_>>>()?;
        let al = Arc::new(Alphabet::new(self.a.iter().cloned())?);
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let a = NCPoly::monomial(al.clone(), f, al.word(&t.a)?, f.one());
                let h = host.word_poly(&host.alphabet().word(&t.h)?);
                Ok((a, h, t.c.parse(f)?))
            })
            .collect::<Result<Vec<_>>>()?;
        TensorElement::new(host, a_gens, terms)
    }

    pub fn from_element(r: &TensorElement) -> Self {
        let al = r.a_alphabet();
        let hal = r.host().alphabet();
        let mut terms = Vec::new();
        for (a, h, c) in r.raw_terms() {
            for (wa, x) in a.terms() {
                for (wh, y) in h.terms() {
                    let coeff = &(c * x) * y;
                    terms.push(ElementTerm { a: word_names(al, wa), h: word_names(hal, wh), c: (&coeff).into() });
                }
            }
        }
        ElementFile { a: al.names().to_vec(), terms }
    }
}

/// Parses a file body as JSON, mapping errors to [`Error::Json`].
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}
