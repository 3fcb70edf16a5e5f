use std::collections::HashMap;

use super::Pairing;
use crate::freeword::Word;
use crate::hopfcore::SubcoalgebraView;
use crate::kernel::{Scalar, Verdict, Witness};

/// The three ways of lifting `σ` to `C⊗C⊗H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lift {
    /// `σ₁₂(c⊗d⊗x) = ε(x)σ(c⊗d)`
    S12,
    /// `σ₁₃(c⊗d⊗x) = ε(d)σ(c⊗x)`
    S13,
    /// `σ₂₃(c⊗d⊗x) = ε(c)σ(d⊗x)`
    S23,
}

/// A functional on `C⊗C⊗H`, stored on `C`-basis × `C`-basis × words up
/// to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleFunctional {
    c_len: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    values: Vec<Scalar>,
}

impl TripleFunctional {
    fn build(c_len: usize, words: Vec<Word>, mut f: impl FnMut(usize, usize, &Word) -> Scalar) -> Self {
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut values = Vec::with_capacity(c_len * c_len * words.len());
        for c in 0..c_len {
            for d in 0..c_len {
                for w in &words {
                    values.push(f(c, d, w));
                }
            }
        }
        TripleFunctional { c_len, words, index, values }
    }

    /// `ε⊗ε⊗ε`, the convolution unit.
    pub fn unit(c: &SubcoalgebraView, degree: usize) -> Self {
        let host = c.host();
        let words = host.alphabet().words_up_to(degree);
        Self::build(c.len(), words, |i, j, w| &(c.counit(i) * c.counit(j)) * &host.eps_word(w))
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn value(&self, c: usize, d: usize, w: &Word) -> &Scalar {
        let k = self.index[w];
        &self.values[(c * self.c_len + d) * self.words.len() + k]
    }

    /// First triple `(c, d, word)` where the two functionals differ.
    pub fn first_difference(&self, other: &TripleFunctional) -> Option<(usize, usize, Word)> {
        let nw = self.words.len();
        (0..self.values.len())
            .find(|&k| self.values[k] != other.values[k])
            .map(|k| (k / nw / self.c_len, (k / nw) % self.c_len, self.words[k % nw].clone()))
    }
}

pub fn lift(kind: Lift, sigma: &Pairing, degree: usize) -> TripleFunctional {
    let c = sigma.coalgebra();
    let host = sigma.host();
    let words = host.alphabet().words_up_to(degree);
    TripleFunctional::build(c.len(), words, |i, j, w| match kind {
        Lift::S12 => &host.eps_word(w) * &sigma.value(i, c.element(j)),
        Lift::S13 => c.counit(j) * &sigma.value_word(i, w),
        Lift::S23 => c.counit(i) * &sigma.value_word(j, w),
    })
}

/// `(f∗g)(c⊗d⊗x) = Σ f(c₍₁₎⊗d₍₁₎⊗x₍₁₎) g(c₍₂₎⊗d₍₂₎⊗x₍₂₎)`.
pub fn convolve(c: &SubcoalgebraView, f: &TripleFunctional, g: &TripleFunctional) -> TripleFunctional {
    let host = c.host();
    let field = host.field();
    let deltas: Vec<Vec<(Word, Word, Scalar)>> = f
        .words
        .iter()
        .map(|w| host.delta_word(w).terms().iter().map(|(ws, a)| (ws[0].clone(), ws[1].clone(), a.clone())).collect())
        .collect();
    let words = f.words.clone();
    TripleFunctional::build(f.c_len, words, |i, j, w| {
        let mut acc = field.zero();
        for (i1, i2, a) in c.delta(i) {
            for (j1, j2, b) in c.delta(j) {
                let ab = a * b;
                for (x1, x2, e) in &deltas[f.index[w]] {
                    let l = f.value(*i1, *j1, x1);
                    if l.is_zero() {
                        continue;
                    }
                    acc = acc + &(&ab * e) * &(l * g.value(*i2, *j2, x2));
                }
            }
        }
        acc
    })
}

/// Convolution product of lifts, left to right.
pub fn lift_and_convolve(pattern: &[Lift], sigma: &Pairing, degree: usize) -> TripleFunctional {
    let c = sigma.coalgebra();
    pattern
        .iter()
        .fold(TripleFunctional::unit(c, degree), |acc, &k| convolve(c, &acc, &lift(k, sigma, degree)))
}

/// `σ₂₃∗σ₁₃∗σ₁₂ = σ₁₂∗σ₂₃` on every basis triple with word degree at most `degree`.
pub fn check_dec_identity(sigma: &Pairing, degree: usize) -> Verdict {
    let lhs = lift_and_convolve(&[Lift::S23, Lift::S13, Lift::S12], sigma, degree);
    let rhs = lift_and_convolve(&[Lift::S12, Lift::S23], sigma, degree);
    let detail = "σ23∗σ13∗σ12 = σ12∗σ23";
    match lhs.first_difference(&rhs) {
        None => Verdict::pass(detail),
        Some((i, j, w)) => {
            let names = sigma.coalgebra().names();
            Verdict::fail(
                Witness::new(
                    format!("(c,d,x)=({},{},{})", names[i], names[j], sigma.host().render_word(&w)),
                    lhs.value(i, j, &w),
                    rhs.value(i, j, &w),
                ),
                detail,
            )
        }
    }
}

/// `σ∗τ = τ∗σ = ε⊗ε` on `C`-basis × words up to `degree`.
pub fn check_convolution_inverse(sigma: &Pairing, tau: &Pairing, degree: usize) -> Verdict {
    let c = sigma.coalgebra();
    let host = sigma.host();
    let f = host.field();
    let mut ws = Vec::new();
    for h in host.alphabet().words_up_to(degree) {
        let dh = host.delta_word(&h);
        for i in 0..c.len() {
            let unit = c.counit(i) * &host.eps_word(&h);
            for (first, second, order) in [(sigma, tau, "σ∗σ'"), (tau, sigma, "σ'∗σ")] {
                let mut acc = f.zero();
                for (i1, i2, a) in c.delta(i) {
                    for (hw, b) in dh.terms() {
                        let l = first.value_word(*i1, &hw[0]);
                        if !l.is_zero() {
                            acc = acc + &(a * b) * &(l * second.value_word(*i2, &hw[1]));
                        }
                    }
                }
                if acc != unit {
                    ws.push(Witness::new(
                        format!("{order} at c={} h={}", c.names()[i], host.render_word(&h)),
                        &unit,
                        acc,
                    ));
                }
            }
        }
    }
    if ws.is_empty() {
        Verdict::pass("convolution inverse")
    } else {
        Verdict::fail_many(ws, "convolution inverse")
    }
}
