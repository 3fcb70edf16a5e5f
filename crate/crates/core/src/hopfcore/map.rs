use super::{Bialgebra, TableBialgebra};
use crate::error::{Error, Result};
use crate::freeword::NCPoly;
use crate::kernel::{Scalar, Verdict, Witness};

/// Checks that generator images `assignment` define a bialgebra map from
/// `source` to the table bialgebra `target`: every relation maps to zero,
/// `Δ∘f = (f⊗f)∘Δ` and `ε∘f = ε` on generators. `f(1)=1` holds by
/// construction.
pub fn check_bialgebra_map(source: &Bialgebra, target: &TableBialgebra, assignment: &[(String, NCPoly)]) -> Result<Verdict> {
    let gens = source.generators();
    let mut images: Vec<Option<Vec<Scalar>>> = vec![None; gens.len()];
    for (name, img) in assignment {
        let g = source.alphabet().id(name)? as usize;
        if **img.alphabet() != **target.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        images[g] = Some(target.vector(img));
    }
    let images: Vec<Vec<Scalar>> = images
        .into_iter()
        .enumerate()
        .map(|(g, v)| v.ok_or_else(|| Error::InvalidInput(format!("no image for generator {}", gens[g]))))
        .collect::<Result<_>>()?;
    let d = target.dim();
    let f = target.field();
    let unit = {
        let mut v = vec![f.zero(); d];
        v[target.unit_index()] = f.one();
        v
    };
    let image_of_word = |w: &crate::freeword::Word| {
        w.letters().iter().fold(unit.clone(), |acc, &g| target.mul_vec(&acc, &images[g as usize]))
    };

    let mut ws = Vec::new();
    for (label, r) in source.relations() {
        let mut v = vec![f.zero(); d];
        for (w, c) in r.terms() {
            for (k, a) in image_of_word(w).iter().enumerate() {
                v[k] = &v[k] + &(a * c);
            }
        }
        if v.iter().any(|c| !c.is_zero()) {
            ws.push(Witness::new(format!("relation {label}"), 0, target.render_vector(&v)));
        }
    }
    for (g, img) in images.iter().enumerate() {
        let lhs = target.delta_vec(img);
        let mut rhs = vec![f.zero(); d * d];
        let dg = source.delta_word(&crate::freeword::Word::letter(g as u32));
        for (words, c) in dg.terms() {
            let (l, r) = (image_of_word(&words[0]), image_of_word(&words[1]));
            for (i, a) in l.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (j, b) in r.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                    rhs[i * d + j] = &rhs[i * d + j] + &(c * &(a * b));
                }
            }
        }
        if lhs != rhs {
            let render = |v: &[Scalar]| {
                crate::kernel::render_sum(
                    v.iter().enumerate().map(|(k, c)| (c.clone(), format!("{}⊗{}", target.basis()[k / d], target.basis()[k % d]))),
                )
            };
            ws.push(Witness::new(format!("Δ(f({}))", gens[g]), render(&rhs), render(&lhs)));
        }
        let (el, er) = (target.eps_vec(img), source.eps_word(&crate::freeword::Word::letter(g as u32)));
        if el != er {
            ws.push(Witness::new(format!("ε(f({}))", gens[g]), er, el));
        }
    }
    Ok(if ws.is_empty() { Verdict::pass("bialgebra map") } else { Verdict::fail_many(ws, "bialgebra map") })
}
