use super::{Bialgebra, Tensor};
use crate::error::{Error, Result};
use crate::freeword::{NCPoly, Word};
use crate::kernel::{Matrix, Verdict, Witness};
use crate::tensorlab::EndoTensor;

/// A right comodule structure on `k^n`: `ρ(m_l) = Σ_v m_v ⊗ g_vl`.
#[derive(Clone, Debug)]
pub struct Comodule {
    entries: Vec<Vec<NCPoly>>,
}

impl Comodule {
    /// `entries[v][l] = g_vl`.
    pub fn new(entries: Vec<Vec<NCPoly>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension("coaction matrix must be square and nonempty".into()));
        }
        Ok(Comodule { entries })
    }

    /// Coaction matrix given by element names (`"0"` for zero, `"1"` for the unit).
    pub fn from_names(b: &Bialgebra, rows: &[&[&str]]) -> Result<Self> {
        let entries = rows
            .iter()
            .map(|row| row.iter().map(|&name| if name == "0" { Ok(b.zero()) } else { b.element(name) }).collect())
            .collect::<Result<Vec<Vec<NCPoly>>>>()?;
        Self::new(entries)
    }

    /// `ρ(m) = m⊗1`.
    pub fn trivial(b: &Bialgebra, n: usize) -> Self {
        let entries = (0..n).map(|v| (0..n).map(|l| if v == l { b.one() } else { b.zero() }).collect()).collect();
        Comodule { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, v: usize, l: usize) -> &NCPoly {
        &self.entries[v][l]
    }

    pub fn entries(&self) -> &[Vec<NCPoly>] {
        &self.entries
    }

    /// `ρ(m_l)` as `(v, g_vl)` pairs with nonzero `g_vl`.
    pub fn rho(&self, l: usize) -> Vec<(usize, &NCPoly)> {
        (0..self.n()).map(|v| (v, &self.entries[v][l])).filter(|(_, g)| !g.is_zero()).collect()
    }

    /// Coassociativity `Δ(g_vl) = Σ_k g_vk ⊗ g_kl` and counit `ε(g_vl) = δ_vl`.
    pub fn check(&self, b: &Bialgebra) -> Result<Verdict> {
        let n = self.n();
        let f = b.field();
        let mut parts = Vec::new();
        for v in 0..n {
            for l in 0..n {
                let g = &self.entries[v][l];
                let lhs = b.delta(g)?;
                let mut rhs = Tensor::zero(f, 2);
                for k in 0..n {
                    rhs = rhs.add(&Tensor::from_polys(f, &[&self.entries[v][k], &self.entries[k][l]]));
                }
                parts.push(b.compare(&lhs, &rhs, format!("Δ(g{}{})", v + 1, l + 1), "comodule coassociativity"));
                let e = b.counit(g)?;
                let want = if v == l { f.one() } else { f.zero() };
                if e != want {
                    parts.push(Verdict::fail(Witness::new(format!("ε(g{}{})", v + 1, l + 1), want, e), "comodule counit"));
                }
            }
        }
        Ok(Verdict::all("comodule axioms", parts))
    }
}

/// A left module structure on `k^n`: one matrix per generator, with
/// `h·m_l = Σ_v A_h[v][l] m_v`. The unit acts as the identity.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    n: usize,
    matrices: Vec<Matrix>,
}

impl ModuleAction {
    /// Checks dimensions and that the matrices respect the host's relations.
    pub fn new(b: &Bialgebra, matrices: Vec<Matrix>) -> Result<Self> {
        let a = Self::unchecked(b, matrices)?;
        let v = a.check_representation(b);
        if !v.is_pass() {
            return Err(Error::axiom("module action respects the relations", v));
        }
        Ok(a)
    }

    pub fn unchecked(b: &Bialgebra, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != b.generators().len() {
            return Err(Error::Dimension(format!(
                "{} action matrices for {} generators",
                matrices.len(),
                b.generators().len()
            )));
        }
        let n = matrices.first().map(Matrix::rows).unwrap_or(0);
        for m in &matrices {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Dimension("action matrices must all be n×n".into()));
            }
            if m.field() != b.field() {
                return Err(Error::FieldMismatch("action matrix over a different field".into()));
            }
        }
        Ok(ModuleAction { n, matrices })
    }

    /// `h·m = ε(h)m`.
    pub fn trivial(b: &Bialgebra, n: usize) -> Self {
        let f = b.field();
        let matrices = (0..b.generators().len() as u32)
            .map(|g| {
                let e = b.eps_word(&Word::letter(g));
                Matrix::from_fn(f, n, n, |i, j| if i == j { e.clone() } else { f.zero() })
            })
            .collect();
        ModuleAction { n, matrices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self, g: u32) -> &Matrix {
        &self.matrices[g as usize]
    }

    pub fn act_word(&self, w: &Word) -> Matrix {
        let field = self.matrices.first().map(Matrix::field);
        let mut m = match field {
            Some(f) => Matrix::identity(f, self.n),
            None => return Matrix::zeros(crate::kernel::Field::rationals(), 0, 0),
        };
        for &g in w.letters() {
            m = m.mul(&self.matrices[g as usize]).expect("square");
        }
        m
    }

    pub fn act(&self, p: &NCPoly) -> Matrix {
        let f = p.field();
        let mut out = Matrix::zeros(f, self.n, self.n);
        for (w, c) in p.terms() {
            let m = self.act_word(w);
            for i in 0..self.n {
                for j in 0..self.n {
                    out[(i, j)] = &out[(i, j)] + &(c * &m[(i, j)]);
                }
            }
        }
        out
    }

    /// Every relation of the host acts as zero.
    pub fn check_representation(&self, b: &Bialgebra) -> Verdict {
        let mut ws = Vec::new();
        for (label, r) in b.relations() {
            let m = self.act(&r);
            if let Some((i, j)) = m.first_difference(&Matrix::zeros(b.field(), self.n, self.n)) {
                ws.push(Witness::new(format!("relation {label} at entry ({},{})", i + 1, j + 1), 0, &m[(i, j)]));
            }
        }
        if ws.is_empty() {
            Verdict::pass("relations act as zero")
        } else {
            Verdict::fail_many(ws, "relations act as zero")
        }
    }
}

fn hopf_module_on(b: &Bialgebra, action: &ModuleAction, coaction: &Comodule, words: &[Word]) -> Result<Verdict> {
    let n = coaction.n();
    if action.n() != n {
        return Err(Error::Dimension(format!("module has dimension {}, comodule {}", action.n(), n)));
    }
    let mut parts = Vec::new();
    for h in words {
        let ah = action.act_word(h);
        let dh = b.delta_word(h);
        let pieces: Vec<(Matrix, NCPoly, crate::kernel::Scalar)> = dh
            .terms()
            .iter()
            .map(|(ws, c)| (action.act_word(&ws[0]), b.word_poly(&ws[1]), c.clone()))
            .collect();
        for l in 0..n {
            for k in 0..n {
                // ρ(h·m_l) and Σ h₍₁₎·m_l₍₀₎ ⊗ h₍₂₎m_l₍₁₎, coefficient of m_k.
                let mut lhs = b.zero();
                for v in 0..n {
                    if !ah[(v, l)].is_zero() {
                        lhs = lhs.add(&coaction.entry(k, v).scale(&ah[(v, l)]))?;
                    }
                }
                let mut rhs = b.zero();
                for (aa, bb, c) in &pieces {
                    for w in 0..n {
                        let coef = &aa[(k, w)] * c;
                        if !coef.is_zero() {
                            rhs = rhs.add(&bb.mul(coaction.entry(w, l))?.scale(&coef))?;
                        }
                    }
                }
                let loc = format!("h={} m=m{} [m{}]", b.render_word(h), l + 1, k + 1);
                parts.push(b.compare_elems(&lhs, &rhs, loc, "Hopf module compatibility"));
            }
        }
    }
    Ok(Verdict::all("ρ(h·m) = Σ h₍₁₎·m₍₀₎ ⊗ h₍₂₎m₍₁₎", parts))
}

/// Checks `ρ(h·m) = Σ h₍₁₎·m₍₀₎ ⊗ h₍₂₎m₍₁₎` for every generator `h`; both
/// sides are multiplicative in `h`, so generators suffice.
pub fn check_hopf_module(b: &Bialgebra, action: &ModuleAction, coaction: &Comodule) -> Result<Verdict> {
    let words: Vec<Word> = (0..b.generators().len() as u32).map(Word::letter).collect();
    hopf_module_on(b, action, coaction, &words)
}

/// The same compatibility on every word of degree at most `degree`.
pub fn check_hopf_module_words(b: &Bialgebra, action: &ModuleAction, coaction: &Comodule, degree: usize) -> Result<Verdict> {
    hopf_module_on(b, action, coaction, &b.alphabet().words_up_to(degree))
}

/// `R(m⊗n) = Σ n₍₁₎·m ⊗ n₍₀₎`.
pub fn r_from_hopf_module(action: &ModuleAction, coaction: &Comodule) -> Result<EndoTensor> {
    let n = coaction.n();
    if action.n() != n {
        return Err(Error::Dimension(format!("module has dimension {}, comodule {}", action.n(), n)));
    }
    let field = coaction.entry(0, 0).field();
    let acts: Vec<Vec<Matrix>> =
        (0..n).map(|j| (0..n).map(|u| action.act(coaction.entry(j, u))).collect()).collect();
    Ok(EndoTensor::from_coefficients(field, n, |u, v, j, i| acts[j][u][(i, v)].clone()))
}
