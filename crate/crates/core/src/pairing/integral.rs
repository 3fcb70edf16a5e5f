use std::sync::Arc;

use super::{Extension, Pairing};
use crate::error::{Error, Result};
use crate::hopfcore::{Bialgebra, SubcoalgebraView, TableBialgebra};
use crate::kernel::{Matrix, Scalar, Verdict, Witness};

/// A functional on a table host, one value per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralFunctional {
    pub values: Vec<Scalar>,
}

impl IntegralFunctional {
    pub fn new(values: Vec<Scalar>) -> Self {
        IntegralFunctional { values }
    }

    pub fn zero(h: &TableBialgebra) -> Self {
        IntegralFunctional { values: vec![h.field().zero(); h.dim()] }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// `Σ T(h₍₁₎)h₍₂₎ = T(h)1` on every basis element.
    pub fn is_right_integral(&self, h: &TableBialgebra) -> Result<Verdict> {
        if self.values.len() != h.dim() {
            return Err(Error::Dimension(format!("{} values for a {}-dimensional host", self.values.len(), h.dim())));
        }
        let f = h.field();
        let mut ws = Vec::new();
        for b in 0..h.dim() {
            let mut lhs = vec![f.zero(); h.dim()];
            for (i, j, a) in h.delta_of(b) {
                lhs[*j] = lhs[*j].clone() + a * &self.values[*i];
            }
            let mut rhs = vec![f.zero(); h.dim()];
            rhs[h.unit_index()] = self.values[b].clone();
            if lhs != rhs {
                ws.push(Witness::new(
                    format!("right integral at h={}", h.basis()[b]),
                    h.render_vector(&lhs),
                    h.render_vector(&rhs),
                ));
            }
        }
        Ok(if ws.is_empty() { Verdict::pass("right integral") } else { Verdict::fail_many(ws, "right integral") })
    }

    pub fn render(&self, h: &TableBialgebra) -> String {
        let parts: Vec<String> = h.basis().iter().zip(&self.values).map(|(b, v)| format!("T({b})={v}")).collect();
        parts.join(", ")
    }
}

/// A basis of the right integrals on `h`.
pub fn right_integral_space(h: &TableBialgebra) -> Vec<IntegralFunctional> {
    let d = h.dim();
    let f = h.field();
    // Unknown T(a); one equation per (basis h, output coordinate m).
    let mut m = Matrix::zeros(f, d * d, d);
    let mut rows = m.to_rows();
    for b in 0..d {
        for (i, j, a) in h.delta_of(b) {
            let r = b * d + j;
            rows[r][*i] = rows[r][*i].clone() + a.clone();
        }
        let r = b * d + h.unit_index();
        rows[r][b] = rows[r][b].clone() - f.one();
    }
    m = Matrix::from_rows(f, rows).expect("rectangular");
    m.nullspace().into_iter().map(IntegralFunctional::new).collect()
}

/// `σ_T(c⊗h) = ε(c)T(h)`, extended linearly over the basis.
pub fn sigma_from_integral(t: &IntegralFunctional, c: SubcoalgebraView) -> Result<Pairing> {
    let h = c
        .host()
        .as_table()
        .ok_or_else(|| Error::InvalidInput("integrals need a table host".into()))?
        .clone();
    if t.values.len() != h.dim() {
        return Err(Error::Dimension(format!("{} values for a {}-dimensional host", t.values.len(), h.dim())));
    }
    let mut cols = vec![h.field().zero(); h.dim()];
    for i in 0..h.dim() {
        let col = if i == h.unit_index() { 0 } else { h.word_of(i).letters()[0] as usize + 1 };
        cols[col] = t.values[i].clone();
    }
    let table = (0..c.len()).map(|k| cols.iter().map(|v| c.counit(k) * v).collect()).collect();
    Pairing::new(c, table, Extension::Linear)
}

/// `T_σ(h) = σ(1⊗h)`; needs `1 ∈ C`.
pub fn integral_from_sigma(sigma: &Pairing) -> Result<IntegralFunctional> {
    let h = sigma
        .host()
        .as_table()
        .ok_or_else(|| Error::InvalidInput("integrals need a table host".into()))?;
    let one = sigma
        .coalgebra()
        .unit_index()
        .ok_or_else(|| Error::InvalidInput("the unit is not in C".into()))?;
    Ok(IntegralFunctional::new((0..h.dim()).map(|i| sigma.value(one, &h.basis_element(i))).collect()))
}

/// Outcome of `T → σ_T → T_{σ_T}`.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub sigma: Pairing,
    /// `(H1)` for `σ_T`, on generators.
    pub h1: Verdict,
    pub recovered: IntegralFunctional,
    /// Right-integral predicate for the recovered functional.
    pub recovered_is_integral: Verdict,
    pub matches: bool,
}

/// Runs `T → σ_T → T_{σ_T}` with `C` the whole host.
pub fn integral_round_trip(h: &TableBialgebra, t: &IntegralFunctional) -> Result<RoundTrip> {
    let host = Arc::new(Bialgebra::from(h.clone()));
    let c = SubcoalgebraView::whole(host)?;
    let sigma = sigma_from_integral(t, c)?;
    let h1 = sigma.check_h1(super::Mode::Generators);
    let recovered = integral_from_sigma(&sigma)?;
    let recovered_is_integral = recovered.is_right_integral(h)?;
    let matches = &recovered == t;
    Ok(RoundTrip { sigma, h1, recovered, recovered_is_integral, matches })
}
