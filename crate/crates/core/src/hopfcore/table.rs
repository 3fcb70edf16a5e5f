use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::freeword::{Alphabet, NCPoly, Word};
use crate::kernel::{render_sum, Field, Scalar, Verdict, Witness};

/// Name-based description of a finite-dimensional bialgebra.
///
/// Products not listed are zero, except products with the unit, which
/// default to the unit law when absent.
#[derive(Clone, Debug)]
pub struct TableSpec {
    pub field: Field,
    pub basis: Vec<String>,
    pub unit: String,
    pub mult: Vec<(String, String, Vec<(String, Scalar)>)>,
    pub delta: Vec<(String, Vec<(String, String, Scalar)>)>,
    pub eps: Vec<(String, Scalar)>,
}

/// A bialgebra given by structure tables on a named basis. The unit is a
/// basis vector; the other basis vectors serve as generators.
#[derive(Clone, Debug)]
pub struct TableBialgebra {
    field: Field,
    basis: Vec<String>,
    unit: usize,
    alphabet: Arc<Alphabet>,
    letter_of: Vec<Option<u32>>,
    basis_of: Vec<usize>,
    mult: Vec<Vec<Vec<Scalar>>>,
    delta: Vec<Vec<(usize, usize, Scalar)>>,
    eps: Vec<Scalar>,
}

impl TableBialgebra {
    /// Builds the tables and verifies every axiom on the basis.
    pub fn new(spec: TableSpec) -> Result<Self> {
        let b = Self::unchecked(spec)?;
        for (what, v) in b.axiom_report() {
            if !v.is_pass() {
                return Err(Error::axiom(what, v));
            }
        }
        Ok(b)
    }

    /// Builds the tables without checking the axioms.
    pub fn unchecked(spec: TableSpec) -> Result<Self> {
        let TableSpec { field, basis, unit, mult, delta, eps } = spec;
        let d = basis.len();
        let mut index = HashMap::new();
        for (i, name) in basis.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("basis element `{name}` listed twice")));
            }
        }
        let idx = |name: &str| index.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()));
        let unit = idx(&unit)?;
        let own = |c: &Scalar| {
            if field.owns(c) {
                Ok(())
            } else {
                Err(Error::FieldMismatch(format!("scalar {c} is not in {}", field.spec())))
            }
        };

        let mut table = vec![vec![None::<Vec<Scalar>>; d]; d];
        for (a, b, terms) in &mult {
            let (i, j) = (idx(a)?, idx(b)?);
            if table[i][j].is_some() {
                return Err(Error::InvalidInput(format!("product {a}·{b} given twice")));
            }
            let mut v = vec![field.zero(); d];
            for (name, c) in terms {
                own(c)?;
                let k = idx(name)?;
                v[k] = &v[k] + c;
            }
            table[i][j] = Some(v);
        }
        let unit_vec = |k: usize| {
            let mut v = vec![field.zero(); d];
            v[k] = field.one();
            v
        };
        let mult: Vec<Vec<Vec<Scalar>>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        table[i][j].clone().unwrap_or_else(|| {
                            if i == unit {
                                unit_vec(j)
                            } else if j == unit {
                                unit_vec(i)
                            } else {
                                vec![field.zero(); d]
                            }
                        })
                    })
                    .collect()
            })
            .collect();

        let mut dl = vec![None; d];
        for (name, terms) in &delta {
            let i = idx(name)?;
            if dl[i].is_some() {
                return Err(Error::InvalidInput(format!("Δ({name}) given twice")));
            }
            let mut v = Vec::new();
            for (l, r, c) in terms {
                own(c)?;
                v.push((idx(l)?, idx(r)?, c.clone()));
            }
            dl[i] = Some(v);
        }
        let delta = dl
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::InvalidInput(format!("Δ({}) missing", basis[i]))))
            .collect::<Result<Vec<_>>>()?;

        let mut ev = vec![None; d];
        for (name, c) in &eps {
            own(c)?;
            ev[idx(name)?] = Some(c.clone());
        }
        let eps = ev
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::InvalidInput(format!("ε({}) missing", basis[i]))))
            .collect::<Result<Vec<_>>>()?;

        let letters: Vec<String> = basis.iter().enumerate().filter(|&(i, _)| i != unit).map(|(_, n)| n.clone()).collect();
        let alphabet = Arc::new(Alphabet::new(letters)?);
        let mut letter_of = vec![None; d];
        let mut basis_of = Vec::new();
        for i in (0..d).filter(|&i| i != unit) {
            letter_of[i] = Some(basis_of.len() as u32);
            basis_of.push(i);
        }
        Ok(TableBialgebra { field, basis, unit, alphabet, letter_of, basis_of, mult, delta, eps })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis.iter().position(|b| b == name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Structure constants of `b_i · b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mult[i][j]
    }

    pub fn delta_of(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.delta[i]
    }

    pub fn eps_of(&self, i: usize) -> &Scalar {
        &self.eps[i]
    }

    /// The word standing for basis element `i` (empty for the unit).
    pub fn word_of(&self, i: usize) -> Word {
        self.letter_of[i].map(Word::letter).unwrap_or_default()
    }

    pub fn basis_element(&self, i: usize) -> NCPoly {
        NCPoly::monomial(self.alphabet.clone(), self.field, self.word_of(i), self.field.one())
    }

    /// Coordinates of a basis-index vector as a polynomial in the generators.
    pub fn from_vector(&self, v: &[Scalar]) -> NCPoly {
        NCPoly::from_terms(self.alphabet.clone(), self.field, v.iter().enumerate().map(|(i, c)| (self.word_of(i), c.clone())))
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![self.field.zero(); d];
        for i in (0..d).filter(|&i| !a[i].is_zero()) {
            for j in (0..d).filter(|&j| !b[j].is_zero()) {
                let ab = &a[i] * &b[j];
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Basis coordinates of a word.
    pub fn word_vector(&self, w: &Word) -> Vec<Scalar> {
        let mut v = self.unit_vector(self.unit);
        for &g in w.letters() {
            v = self.mul_vec(&v, &self.unit_vector(self.basis_of[g as usize]));
        }
        v
    }

    /// Basis coordinates of a polynomial in the generators.
    pub fn vector(&self, p: &NCPoly) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (w, c) in p.terms() {
            for (k, a) in self.word_vector(w).iter().enumerate() {
                if !a.is_zero() {
                    out[k] = &out[k] + &(a * c);
                }
            }
        }
        out
    }

    /// `Δ` of a coordinate vector, as a dense `d×d` array.
    pub fn delta_vec(&self, a: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![self.field.zero(); d * d];
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (l, r, c) in &self.delta[i] {
                out[l * d + r] = &out[l * d + r] + &(ai * c);
            }
        }
        out
    }

    pub fn eps_vec(&self, a: &[Scalar]) -> Scalar {
        a.iter().zip(&self.eps).fold(self.field.zero(), |acc, (x, e)| acc + x * e)
    }

    pub fn render_vector(&self, v: &[Scalar]) -> String {
        render_sum(v.iter().enumerate().map(|(i, c)| (c.clone(), self.basis[i].clone())))
    }

    fn render_tensor(&self, v: &[Scalar], rank: usize) -> String {
        let d = self.dim();
        render_sum(v.iter().enumerate().map(|(mut k, c)| {
            let mut parts = vec![String::new(); rank];
            for slot in (0..rank).rev() {
                parts[slot] = self.basis[k % d].clone();
                k /= d;
            }
            (c.clone(), parts.join("⊗"))
        }))
    }

    fn compare_vec(&self, lhs: &[Scalar], rhs: &[Scalar], rank: usize, location: impl FnOnce() -> String) -> Option<Witness> {
        (lhs != rhs).then(|| Witness::new(location(), self.render_tensor(lhs, rank), self.render_tensor(rhs, rank)))
    }

    /// Each axiom family with its verdict on the basis.
    pub fn axiom_report(&self) -> Vec<(String, Verdict)> {
        let d = self.dim();
        let f = self.field;
        let n = &self.basis;
        let e = |i: usize| self.unit_vector(i);
        let collect = |what: &str, ws: Vec<Witness>| {
            let v = if ws.is_empty() { Verdict::pass(what) } else { Verdict::fail_many(ws, what) };
            (what.to_string(), v)
        };

        let mut unit_ws = Vec::new();
        for i in 0..d {
            let li = self.mul_vec(&e(self.unit), &e(i));
            let ri = self.mul_vec(&e(i), &e(self.unit));
            unit_ws.extend(self.compare_vec(&li, &e(i), 1, || format!("1·{}", n[i])));
            unit_ws.extend(self.compare_vec(&ri, &e(i), 1, || format!("{}·1", n[i])));
        }

        let mut counit_ws = Vec::new();
        let mut coassoc_ws = Vec::new();
        for i in 0..d {
            let mut left = vec![f.zero(); d];
            let mut right = vec![f.zero(); d];
            for (l, r, c) in &self.delta[i] {
                left[*r] = &left[*r] + &(&self.eps[*l] * c);
                right[*l] = &right[*l] + &(&self.eps[*r] * c);
            }
            counit_ws.extend(self.compare_vec(&left, &e(i), 1, || format!("(ε⊗I)Δ({})", n[i])));
            counit_ws.extend(self.compare_vec(&right, &e(i), 1, || format!("(I⊗ε)Δ({})", n[i])));

            let mut a = vec![f.zero(); d * d * d];
            let mut b = vec![f.zero(); d * d * d];
            for (l, r, c) in &self.delta[i] {
                for (l2, r2, c2) in &self.delta[*l] {
                    let k = (l2 * d + r2) * d + r;
                    a[k] = &a[k] + &(c * c2);
                }
                for (l2, r2, c2) in &self.delta[*r] {
                    let k = (l * d + l2) * d + r2;
                    b[k] = &b[k] + &(c * c2);
                }
            }
            coassoc_ws.extend(self.compare_vec(&a, &b, 3, || format!("coassociativity at {}", n[i])));
        }

        let mut dmul_ws = Vec::new();
        let mut emul_ws = Vec::new();
        let mut assoc_ws = Vec::new();
        let one_one = {
            let mut v = vec![f.zero(); d * d];
            v[self.unit * d + self.unit] = f.one();
            v
        };
        dmul_ws.extend(self.compare_vec(&self.delta_vec(&e(self.unit)), &one_one, 2, || "Δ(1)".to_string()));
        if !self.eps[self.unit].is_one() {
            emul_ws.push(Witness::new("ε(1)", f.one(), &self.eps[self.unit]));
        }
        for i in 0..d {
            for j in 0..d {
                let prod = &self.mult[i][j];
                let lhs = self.delta_vec(prod);
                let (di, dj) = (self.delta_vec(&e(i)), self.delta_vec(&e(j)));
                let mut rhs = vec![f.zero(); d * d];
                for (k1, a) in di.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (k2, b) in dj.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        let l = self.mul_vec(&e(k1 / d), &e(k2 / d));
                        let r = self.mul_vec(&e(k1 % d), &e(k2 % d));
                        let ab = a * b;
                        for (x, lx) in l.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            for (y, ry) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                                rhs[x * d + y] = &rhs[x * d + y] + &(&ab * &(lx * ry));
                            }
                        }
                    }
                }
                dmul_ws.extend(self.compare_vec(&lhs, &rhs, 2, || format!("Δ({}·{})", n[i], n[j])));
                let el = self.eps_vec(prod);
                let er = &self.eps[i] * &self.eps[j];
                if el != er {
                    emul_ws.push(Witness::new(format!("ε({}·{})", n[i], n[j]), el, er));
                }
                for k in 0..d {
                    let ab_c = self.mul_vec(prod, &e(k));
                    let a_bc = self.mul_vec(&e(i), &self.mult[j][k]);
                    assoc_ws.extend(self.compare_vec(&ab_c, &a_bc, 1, || format!("({}·{})·{}", n[i], n[j], n[k])));
                }
            }
        }

        vec![
            collect("unit law", unit_ws),
            collect("counit law", counit_ws),
            collect("coassociativity", coassoc_ws),
            collect("Δ is multiplicative", dmul_ws),
            collect("ε is multiplicative", emul_ws),
            collect("associativity", assoc_ws),
        ]
    }

    /// The multiplication table as relations `b_i b_j − Σ c b_k` on the generators.
    pub fn relations(&self) -> Vec<(String, NCPoly)> {
        let mut out = Vec::new();
        for &i in &self.basis_of {
            for &j in &self.basis_of {
                let w = self.word_of(i).concat(&self.word_of(j));
                let lhs = NCPoly::monomial(self.alphabet.clone(), self.field, w, self.field.one());
                let rel = lhs.sub(&self.from_vector(&self.mult[i][j])).expect("same alphabet");
                out.push((format!("{}·{}", self.basis[i], self.basis[j]), rel));
            }
        }
        out
    }
}
