use std::sync::Arc;

use super::{Extension, Pairing};
use crate::error::{Error, Result};
use crate::frt::{br_comatrix, build_br};
use crate::hopfcore::{Bialgebra, Comodule, ModuleAction, SubcoalgebraView};
use crate::kernel::{Matrix, Verdict};
use crate::tensorlab::{check_equation, invert_endo, EndoTensor, Equation};

/// Result of building `σ'` from `R⁻¹`.
#[derive(Clone, Debug)]
pub enum InverseOutcome {
    /// `σ'` vanishes on every χ relation.
    Inverse(Pairing),
    /// `σ'` does not factor through `B(R)`; carries the failing
    /// well-definedness verdict and the `R¹²R¹³ = R¹³R¹²` verdict.
    Obstruction { well_defined: Verdict, commute13: Verdict },
}

/// `σ(c_iv⊗c_ju) = y_uv^ji` for the tensor `y`, on the comatrix generators of `host`.
fn comatrix_pairing(c: SubcoalgebraView, y: &EndoTensor) -> Result<Pairing> {
    let n = y.n();
    let f = y.field();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for v in 0..n {
            let mut row = vec![if i == v { f.one() } else { f.zero() }];
            for j in 0..n {
                for u in 0..n {
                    row.push(y.coeff(u, v, j, i).clone());
                }
            }
            table.push(row);
        }
    }
    Pairing::new(c, table, Extension::Multiplicative)
}

fn br_setup(r: &EndoTensor, bound: usize) -> Result<SubcoalgebraView> {
    let host = Arc::new(Bialgebra::from(build_br(r, bound)?));
    br_comatrix(host, r.n())
}

/// The Hopf function on `C⊗B(R)` with `σ(c_iv⊗c_ju) = x_uv^ji`.
///
/// Fails with [`Error::Axiom`] when `σ` does not vanish on the χ relations,
/// which happens exactly when `R` is not a solution.
pub fn sigma_from_r(r: &EndoTensor, bound: usize) -> Result<Pairing> {
    let sigma = comatrix_pairing(br_setup(r, bound)?, r)?;
    let v = sigma.check_well_defined_on_host();
    if !v.is_pass() {
        return Err(Error::axiom("σ vanishes on the χ relations", v));
    }
    Ok(sigma)
}

/// `σ'(c_iv⊗c_ju) = y_uv^ji` from `S = R⁻¹`, on the same `C⊗B(R)`.
pub fn sigma_inverse_from_rinv(r: &EndoTensor, bound: usize) -> Result<InverseOutcome> {
    let s = invert_endo(r)?;
    let sigma = comatrix_pairing(br_setup(r, bound)?, &s)?;
    let well_defined = sigma.check_well_defined_on_host();
    if well_defined.is_pass() {
        return Ok(InverseOutcome::Inverse(sigma));
    }
    let commute13 = check_equation(Equation::Commute13, r, None)?;
    Ok(InverseOutcome::Obstruction { well_defined, commute13 })
}

/// `R_σ(m_v⊗m_u) = Σ σ(g_iv⊗g_ju) m_i⊗m_j` for a comodule with entries in `C`.
pub fn r_sigma(sigma: &Pairing, comodule: &Comodule) -> Result<EndoTensor> {
    let n = comodule.n();
    let f = sigma.host().field();
    let mut x = vec![f.zero(); n * n * n * n];
    let at = |u: usize, v: usize, j: usize, i: usize| ((u * n + v) * n + j) * n + i;
    for i in 0..n {
        for v in 0..n {
            let g = comodule.entry(i, v);
            for j in 0..n {
                for u in 0..n {
                    x[at(u, v, j, i)] = sigma.value_on(g, comodule.entry(j, u))?;
                }
            }
        }
    }
    Ok(EndoTensor::from_coefficients(f, n, |u, v, j, i| x[at(u, v, j, i)].clone()))
}

/// `h·m = Σ σ(m₍₁₎⊗h)m₍₀₎`, i.e. `A_h[v][l] = σ(g_vl⊗h)` for each generator `h`.
pub fn module_from_sigma(sigma: &Pairing, comodule: &Comodule) -> Result<ModuleAction> {
    let host = sigma.host();
    let f = host.field();
    let n = comodule.n();
    let mut matrices = Vec::with_capacity(host.generators().len());
    for g in 0..host.generators().len() as u32 {
        let h = host.word_poly(&crate::freeword::Word::letter(g));
        let mut rows = vec![vec![f.zero(); n]; n];
        for (v, row) in rows.iter_mut().enumerate() {
            for (l, slot) in row.iter_mut().enumerate() {
                *slot = sigma.value_on(comodule.entry(v, l), &h)?;
            }
        }
        matrices.push(Matrix::from_rows(f, rows)?);
    }
    ModuleAction::unchecked(host, matrices)
}
