//! Hopf elements `R ∈ A⊗H` for a subalgebra `A` given by generators,
//! their axioms, the induced solution on a module, and the
//! quasitriangular axioms for contrast.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::freeword::{Alphabet, NCPoly};
use crate::hopfcore::{Bialgebra, ModuleAction, Tensor};
use crate::kernel::{Scalar, Verdict};
use crate::tensorlab::EndoTensor;

/// `R = Σ c·R¹⊗R²`, each `R¹` written as a polynomial in the generators
/// of `A`, so membership in `A` holds by construction.
#[derive(Clone, Debug)]
pub struct TensorElement {
    host: Arc<Bialgebra>,
    a_alphabet: Arc<Alphabet>,
    a_images: Vec<NCPoly>,
    terms: Vec<(NCPoly, NCPoly, Scalar)>,
}

impl TensorElement {
    /// `a_generators` names the generators of `A` and their images in the
    /// host; each term gives `R¹` over those names, `R²` in the host, and a
    /// coefficient. An empty generator list means `A = k`.
    pub fn new(
        host: Arc<Bialgebra>,
        a_generators: Vec<(String, NCPoly)>,
        terms: Vec<(NCPoly, NCPoly, Scalar)>,
    ) -> Result<Self> {
        let (names, a_images): (Vec<String>, Vec<NCPoly>) = a_generators.into_iter().unzip();
        let a_alphabet = Arc::new(Alphabet::new(names)?);
        let f = host.field();
        for img in &a_images {
            if img.alphabet() != host.alphabet() || img.field() != f {
                return Err(Error::AlphabetMismatch);
            }
        }
        for (r1, r2, c) in &terms {
            if r1.alphabet().as_ref() != a_alphabet.as_ref() || r2.alphabet() != host.alphabet() {
                return Err(Error::AlphabetMismatch);
            }
            if r1.field() != f || r2.field() != f || !f.owns(c) {
                return Err(Error::FieldMismatch("tensor element over a different field".into()));
            }
        }
        Ok(TensorElement { host, a_alphabet, a_images, terms })
    }

    /// Convenience constructor from names: `R¹` words are sequences of
    /// `A`-generator names (empty for `1`), `R²` is a host element name.
    pub fn from_names(
        host: Arc<Bialgebra>,
        a_generators: &[&str],
        terms: &[(&[&str], &str, Scalar)],
    ) -> Result<Self> {
        let a_gens: Vec<(String, NCPoly)> =
            a_generators.iter().map(|g| Ok((g.to_string(), host.element(g)?))).collect::<Result<_>>()?;
        let al = Arc::new(Alphabet::new(a_generators.iter().copied())?);
        let f = host.field();
        let terms = terms
            .iter()
            .map(|(w, h, c)| {
                let word = al.word(w)?;
                Ok((NCPoly::monomial(al.clone(), f, word, f.one()), host.element(h)?, c.clone()))
            })
            .collect::<Result<_>>()?;
        Self::new(host, a_gens, terms)
    }

    pub fn host(&self) -> &Arc<Bialgebra> {
        &self.host
    }

    pub fn a_alphabet(&self) -> &Arc<Alphabet> {
        &self.a_alphabet
    }

    /// Host image of a polynomial in the `A` generators.
    pub fn a_image(&self, p: &NCPoly) -> Result<NCPoly> {
        let one = self.host.one();
        let zero = self.host.zero();
        p.evaluate(&one, &zero, &self.a_images, |a, b| a.mul(b), |acc, v, c| acc.add(&v.scale(c)))
    }

    /// Terms as stored: `R¹` over the `A` generators.
    pub fn raw_terms(&self) -> &[(NCPoly, NCPoly, Scalar)] {
        &self.terms
    }

    /// `Σ c·R¹⊗R²` with `R¹` mapped into the host.
    pub fn terms(&self) -> Result<Vec<(NCPoly, NCPoly, Scalar)>> {
        self.terms.iter().map(|(a, h, c)| Ok((self.a_image(a)?, h.clone(), c.clone()))).collect()
    }

    pub fn tensor(&self) -> Result<Tensor> {
        let f = self.host.field();
        let mut t = Tensor::zero(f, 2);
        for (a, h, c) in self.terms()? {
            t = t.add(&Tensor::from_polys(f, &[&a, &h]).scale(&c));
        }
        Ok(t)
    }

    pub fn render(&self) -> Result<String> {
        Ok(self.host.render_tensor(&self.tensor()?))
    }
}

fn a_words(r: &TensorElement, degree: usize) -> Vec<(String, NCPoly)> {
    let f = r.host.field();
    r.a_alphabet
        .words_up_to(degree)
        .into_iter()
        .filter(|w| !w.is_one())
        .map(|w| (r.a_alphabet.render(&w), NCPoly::monomial(r.a_alphabet.clone(), f, w, f.one())))
        .collect()
}

fn he1(r: &TensorElement, t: &Tensor, label: &str) -> Verdict {
    let host = &r.host;
    let lhs = host.delta_slot(t, 0);
    let rhs = t.embed(3, &[0, 2]).mul(&t.embed(3, &[1, 2]));
    host.compare(&lhs, &rhs, label, label)
}

fn he2(r: &TensorElement, t: &Tensor, label: &str) -> Verdict {
    let host = &r.host;
    let lhs = host.eps_slot(t, 0);
    host.compare(&lhs, &Tensor::unit(host.field(), 1), label, label)
}

fn cop(host: &Bialgebra, a: &NCPoly) -> Result<Tensor> {
    Ok(host.delta(a)?.permute(&[1, 0]))
}

fn he3_on(r: &TensorElement, t: &Tensor, words: &[(String, NCPoly)]) -> Result<Verdict> {
    let host = &r.host;
    let mut parts = Vec::new();
    for (name, a) in words {
        let a = r.a_image(a)?;
        let lhs = cop(host, &a)?.mul(t);
        let rhs = t.mul(&Tensor::from_poly(&a).embed(2, &[1]));
        parts.push(host.compare(&lhs, &rhs, format!("(HE3) a={name}"), "(HE3)"));
    }
    Ok(Verdict::all("(HE3)", parts))
}

/// (HE1), (HE2), and (HE3) on the generators of `A`.
pub fn check_hopf_element(r: &TensorElement) -> Result<Verdict> {
    let parts = hopf_element_report(r, 1)?;
    Ok(Verdict::all("Hopf element", parts.into_iter().map(|(_, v)| v)))
}

/// Per-axiom verdicts, with (HE3) checked on every product of at most
/// `he3_degree` generators of `A`.
pub fn hopf_element_report(r: &TensorElement, he3_degree: usize) -> Result<Vec<(String, Verdict)>> {
    let t = r.tensor()?;
    Ok(vec![
        ("HE1".into(), he1(r, &t, "(HE1)")),
        ("HE2".into(), he2(r, &t, "(HE2)")),
        ("HE3".into(), he3_on(r, &t, &a_words(r, he3_degree.max(1)))?),
    ])
}

/// `R²³R¹³R¹² = R¹²R²³` in `H⊗H⊗H`.
pub fn check_identity_101(r: &TensorElement) -> Result<Verdict> {
    let t = r.tensor()?;
    let (r12, r13, r23) = (t.embed(3, &[0, 1]), t.embed(3, &[0, 2]), t.embed(3, &[1, 2]));
    let lhs = r23.mul(&r13).mul(&r12);
    let rhs = r12.mul(&r23);
    Ok(r.host.compare(&lhs, &rhs, "R23 R13 R12 vs R12 R23", "R23 R13 R12 = R12 R23"))
}

/// `𝓡(m⊗n) = Σ R¹·m ⊗ R²·n`.
pub fn r_from_element(r: &TensorElement, action: &ModuleAction) -> Result<EndoTensor> {
    let n = action.n();
    let f = r.host.field();
    let mats: Vec<_> = r
        .terms()?
        .into_iter()
        .map(|(a, h, c)| (action.act(&a), action.act(&h), c))
        .collect();
    Ok(EndoTensor::from_coefficients(f, n, |u, v, j, i| {
        mats.iter().fold(f.zero(), |acc, (a, h, c)| acc + &(c * &a[(i, v)]) * &h[(j, u)])
    }))
}

/// `t = Σ R¹ε(R²)`, with `a·t = ε(a)t` on the generators of `A` and `t² = t`.
pub fn integral_t(r: &TensorElement) -> Result<(NCPoly, Verdict)> {
    let host = &r.host;
    let mut t = host.zero();
    for (a, h, c) in r.terms()? {
        t = t.add(&a.scale(&(c * &host.counit(&h)?)))?;
    }
    let mut parts = Vec::new();
    for (name, a) in a_words(r, 1) {
        let a = r.a_image(&a)?;
        let lhs = a.mul(&t)?;
        let rhs = t.scale(&host.counit(&a)?);
        parts.push(host.compare_elems(&lhs, &rhs, format!("a·t at a={name}"), "left integral"));
    }
    parts.push(host.compare_elems(&t.mul(&t)?, &t, "t·t", "idempotent"));
    Ok((t, Verdict::all("t is an idempotent left integral", parts)))
}

/// Per-axiom verdicts for (QT1)–(QT5); (QT5) runs over the host generators.
pub fn check_quasitriangular(r: &TensorElement) -> Result<Vec<(String, Verdict)>> {
    let host = &r.host;
    let t = r.tensor()?;
    let f = host.field();
    let qt3 = {
        let lhs = host.delta_slot(&t, 1);
        let rhs = t.embed(3, &[0, 2]).mul(&t.embed(3, &[0, 1]));
        host.compare(&lhs, &rhs, "(QT3)", "(QT3)")
    };
    let qt4 = host.compare(&host.eps_slot(&t, 1), &Tensor::unit(f, 1), "(QT4)", "(QT4)");
    let mut qt5 = Vec::new();
    for (g, name) in host.generators().iter().enumerate() {
        let h = host.word_poly(&crate::freeword::Word::letter(g as u32));
        let lhs = cop(host, &h)?.mul(&t);
        let rhs = t.mul(&host.delta(&h)?);
        qt5.push(host.compare(&lhs, &rhs, format!("(QT5) h={name}"), "(QT5)"));
    }
    Ok(vec![
        ("QT1".into(), he1(r, &t, "(QT1)")),
        ("QT2".into(), he2(r, &t, "(QT2)")),
        ("QT3".into(), qt3),
        ("QT4".into(), qt4),
        ("QT5".into(), Verdict::all("(QT5)", qt5)),
    ])
}
