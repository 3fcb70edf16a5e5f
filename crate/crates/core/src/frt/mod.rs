//! The bialgebra `B(R)`: comatrix generators modulo the χ relations
//! extracted from `R`, with its canonical comodule.

use std::sync::Arc;

use crate::error::Result;
use crate::freeword::{Alphabet, NCPoly, Word, DEFAULT_BOUND};
use crate::hopfcore::{Bialgebra, Comodule, PresentedBialgebra, SubcoalgebraView, Tensor};
use crate::kernel::{Field, Verdict, Witness};
use crate::tensorlab::EndoTensor;

/// Name of the comatrix generator `c_ij` (0-based indices).
pub fn comatrix_name(n: usize, i: usize, j: usize) -> String {
    if n <= 9 {
        format!("c{}{}", i + 1, j + 1)
    } else {
        format!("c{}_{}", i + 1, j + 1)
    }
}

/// Generators `c_ij` in row-major order.
pub fn comatrix_alphabet(n: usize) -> Arc<Alphabet> {
    let names = (0..n).flat_map(|i| (0..n).map(move |j| comatrix_name(n, i, j)));
    Arc::new(Alphabet::new(names).expect("distinct names"))
}

fn gen_word(n: usize, i: usize, j: usize) -> Word {
    Word::letter((i * n + j) as u32)
}

fn comatrix_structure(n: usize, field: Field) -> (Vec<Tensor>, Vec<crate::kernel::Scalar>) {
    let mut delta = Vec::with_capacity(n * n);
    let mut eps = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            let mut t = Tensor::zero(field, 2);
            for u in 0..n {
                t.add_term(vec![gen_word(n, j, u), gen_word(n, u, k)], field.one());
            }
            delta.push(t);
            eps.push(if j == k { field.one() } else { field.zero() });
        }
    }
    (delta, eps)
}

/// The comatrix coalgebra `Δ(c_jk) = Σ_u c_ju⊗c_uk`, `ε(c_jk) = δ_jk`,
/// viewed inside the free bialgebra on its generators.
pub fn comatrix_coalgebra(field: Field, n: usize) -> Result<SubcoalgebraView> {
    let alphabet = comatrix_alphabet(n);
    let (delta, eps) = comatrix_structure(n, field);
    let free = PresentedBialgebra::from_parts(alphabet.clone(), field, Vec::new(), delta, eps, DEFAULT_BOUND)?;
    let host = Arc::new(Bialgebra::from(free));
    comatrix_view(host, n)
}

fn comatrix_view(host: Arc<Bialgebra>, n: usize) -> Result<SubcoalgebraView> {
    let elements = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (comatrix_name(n, i, j), host.word_poly(&gen_word(n, i, j))))
        .collect();
    SubcoalgebraView::new(host, elements)
}

/// The `n⁴` polynomials
/// `χ(i,j,k,l) = Σ_{u,v} x_uv^ji c_uk c_vl − Σ_α x_kl^jα c_iα`.
#[derive(Clone, Debug)]
pub struct ChiRelationSet {
    n: usize,
    chi: Vec<NCPoly>,
}

impl ChiRelationSet {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `χ(i,j,k,l)`, 0-based indices.
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &NCPoly {
        let n = self.n;
        &self.chi[((i * n + j) * n + k) * n + l]
    }

    /// All relations with labels `χ(i,j,k,l)` (1-based), in index order.
    pub fn labelled(&self) -> Vec<(String, NCPoly)> {
        let n = self.n;
        let mut out = Vec::with_capacity(self.chi.len());
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        out.push((chi_label(i, j, k, l), self.get(i, j, k, l).clone()));
                    }
                }
            }
        }
        out
    }

    pub fn polys(&self) -> &[NCPoly] {
        &self.chi
    }

    /// `ε(χ) = 0` for every relation, evaluated with `ε(c_jk) = δ_jk`.
    pub fn check_counit(&self) -> Verdict {
        let n = self.n;
        let mut ws = Vec::new();
        for (label, p) in self.labelled() {
            let e = p.terms().iter().fold(p.field().zero(), |acc, (w, c)| {
                let on_diag = w.letters().iter().all(|&g| g as usize / n == g as usize % n);
                if on_diag {
                    acc + c.clone()
                } else {
                    acc
                }
            });
            if !e.is_zero() {
                ws.push(Witness::new(format!("ε({label})"), 0, e));
            }
        }
        if ws.is_empty() {
            Verdict::pass("ε(χ) = 0")
        } else {
            Verdict::fail_many(ws, "ε(χ) = 0")
        }
    }
}

pub fn chi_label(i: usize, j: usize, k: usize, l: usize) -> String {
    format!("χ({},{},{},{})", i + 1, j + 1, k + 1, l + 1)
}

pub fn chi_relations(r: &EndoTensor) -> ChiRelationSet {
    let n = r.n();
    let field = r.field();
    let alphabet = comatrix_alphabet(n);
    let mut chi = Vec::with_capacity(n * n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut p = NCPoly::zero(alphabet.clone(), field);
                    for u in 0..n {
                        for v in 0..n {
                            let x = r.coeff(u, v, j, i);
                            if !x.is_zero() {
                                p.add_term(Word(vec![(u * n + k) as u32, (v * n + l) as u32]), x.clone());
                            }
                        }
                    }
                    for a in 0..n {
                        let x = r.coeff(k, l, j, a);
                        if !x.is_zero() {
                            p.add_term(gen_word(n, i, a), -x);
                        }
                    }
                    chi.push(p);
                }
            }
        }
    }
    ChiRelationSet { n, chi }
}

/// `B(R)`: comatrix generators modulo the χ relations, validated at `bound`.
pub fn build_br(r: &EndoTensor, bound: usize) -> Result<PresentedBialgebra> {
    let n = r.n();
    let (delta, eps) = comatrix_structure(n, r.field());
    PresentedBialgebra::from_parts(comatrix_alphabet(n), r.field(), chi_relations(r).labelled(), delta, eps, bound)
}

/// The comatrix generators as a subcoalgebra of `B(R)`.
pub fn br_comatrix(br: Arc<Bialgebra>, n: usize) -> Result<SubcoalgebraView> {
    comatrix_view(br, n)
}

/// `ρ(m_l) = Σ_v m_v ⊗ c_vl`.
pub fn canonical_comodule(b: &Bialgebra, n: usize) -> Result<Comodule> {
    let entries = (0..n).map(|v| (0..n).map(|l| b.word_poly(&gen_word(n, v, l))).collect()).collect();
    Comodule::new(entries)
}
