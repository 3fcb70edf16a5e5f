use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Bialgebra, Tensor};
use crate::error::{Error, Result};
use crate::freeword::{NCPoly, Word};
use crate::kernel::{Matrix, Scalar};

/// A finite list of linearly independent host elements whose span is
/// closed under `Δ`, with its structure constants.
///
/// Closure is checked syntactically: on basis coordinates for a table
/// host, on words of the free algebra for a presented one.
#[derive(Clone, Debug)]
pub struct SubcoalgebraView {
    host: Arc<Bialgebra>,
    names: Vec<String>,
    elements: Vec<NCPoly>,
    delta: Vec<Vec<(usize, usize, Scalar)>>,
    eps: Vec<Scalar>,
}

fn coordinates(host: &Bialgebra, t: &Tensor) -> BTreeMap<Vec<Word>, Scalar> {
    let t = match host {
        Bialgebra::Table(_) => host.normalize(t).expect("table normal forms always exist"),
        Bialgebra::Presented(_) => t.clone(),
    };
    t.terms().clone()
}

/// Solves `Σ x_k cols[k] = target` over sparse coordinate maps.
fn solve_sparse(
    field: crate::kernel::Field,
    cols: &[BTreeMap<Vec<Word>, Scalar>],
    target: &BTreeMap<Vec<Word>, Scalar>,
) -> Option<Vec<Scalar>> {
    let mut keys: Vec<&Vec<Word>> = cols.iter().flat_map(|c| c.keys()).chain(target.keys()).collect();
    keys.sort();
    keys.dedup();
    if cols.is_empty() {
        return target.is_empty().then(Vec::new);
    }
    let m = Matrix::from_fn(field, keys.len(), cols.len(), |r, c| cols[c].get(keys[r]).cloned().unwrap_or_else(|| field.zero()));
    let b: Vec<Scalar> = keys.iter().map(|k| target.get(*k).cloned().unwrap_or_else(|| field.zero())).collect();
    m.solve(&b)
}

impl SubcoalgebraView {
    pub fn new(host: Arc<Bialgebra>, elements: Vec<(String, NCPoly)>) -> Result<Self> {
        let f = host.field();
        let (names, elements): (Vec<String>, Vec<NCPoly>) = elements.into_iter().unzip();
        if elements.is_empty() {
            return Err(Error::InvalidInput("a subcoalgebra needs at least one element".into()));
        }
        let single: Vec<_> = elements.iter().map(|e| coordinates(&host, &Tensor::from_poly(e))).collect();
        let mut keys: Vec<&Vec<Word>> = single.iter().flat_map(|c| c.keys()).collect();
        keys.sort();
        keys.dedup();
        let m = Matrix::from_fn(f, keys.len(), single.len(), |r, c| single[c].get(keys[r]).cloned().unwrap_or_else(|| f.zero()));
        if m.rank() < elements.len() {
            return Err(Error::InvalidInput(format!("subcoalgebra elements {names:?} are linearly dependent")));
        }

        let k = elements.len();
        let mut pair_cols = Vec::with_capacity(k * k);
        for a in &elements {
            for b in &elements {
                pair_cols.push(coordinates(&host, &Tensor::from_polys(f, &[a, b])));
            }
        }
        let mut delta = Vec::with_capacity(k);
        let mut eps = Vec::with_capacity(k);
        for (i, e) in elements.iter().enumerate() {
            let d = host.delta(e)?;
            let x = solve_sparse(f, &pair_cols, &coordinates(&host, &d))
                .ok_or_else(|| Error::NotClosed(format!("Δ({}) = {} leaves the span", names[i], host.render_tensor(&d))))?;
            delta.push(
                x.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(p, c)| (p / k, p % k, c))
                    .collect(),
            );
            eps.push(host.counit(e)?);
        }
        Ok(SubcoalgebraView { host, names, elements, delta, eps })
    }

    /// Elements named by generator or basis names; `"1"` is the unit.
    pub fn from_names(host: Arc<Bialgebra>, names: &[&str]) -> Result<Self> {
        let elements = names.iter().map(|&n| Ok((n.to_string(), host.element(n)?))).collect::<Result<Vec<_>>>()?;
        Self::new(host, elements)
    }

    /// The whole of a table host, in basis order.
    pub fn whole(host: Arc<Bialgebra>) -> Result<Self> {
        let t = host
            .as_table()
            .ok_or_else(|| Error::InvalidInput("only a table host is its own finite subcoalgebra".into()))?;
        let names: Vec<String> = t.basis().to_vec();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::from_names(host.clone(), &refs)
    }

    pub fn host(&self) -> &Arc<Bialgebra> {
        &self.host
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, i: usize) -> &NCPoly {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[NCPoly] {
        &self.elements
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// `Δ(c_i) = Σ coeff · c_j ⊗ c_k` as `(j, k, coeff)`.
    pub fn delta(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.delta[i]
    }

    pub fn counit(&self, i: usize) -> &Scalar {
        &self.eps[i]
    }

    /// Coordinates of a host element in the span of `C`, if it lies there.
    pub fn coordinates(&self, p: &NCPoly) -> Option<Vec<Scalar>> {
        let cols: Vec<_> = self.elements.iter().map(|e| coordinates(&self.host, &Tensor::from_poly(e))).collect();
        solve_sparse(self.host.field(), &cols, &coordinates(&self.host, &Tensor::from_poly(p)))
    }

    /// Index of the unit of the host among the listed elements.
    pub fn unit_index(&self) -> Option<usize> {
        let one = self.host.one();
        self.elements.iter().position(|e| {
            let d = self.host.decide(&Tensor::from_poly(e).sub(&Tensor::from_poly(&one)));
            d == super::Decision::Zero
        })
    }

    /// Whether `C` spans a whole table host.
    pub fn spans_host(&self) -> bool {
        self.host.as_table().map(|t| t.dim() == self.len()).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::kernel::Field;

    #[test]
    fn tk_subcoalgebras() {
        let host = Arc::new(Bialgebra::from(tk(Field::rationals())));
        let c = SubcoalgebraView::from_names(host.clone(), &["x"]).unwrap();
        assert_eq!(c.delta(0), &[(0, 0, Field::rationals().one())]);
        assert!(matches!(SubcoalgebraView::from_names(host.clone(), &["z"]), Err(Error::NotClosed(_))));
        let all = SubcoalgebraView::whole(host).unwrap();
        assert_eq!(all.unit_index(), Some(0));
        assert!(all.spans_host());
    }
}
