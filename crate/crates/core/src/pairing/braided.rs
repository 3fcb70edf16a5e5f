use super::Pairing;
use crate::error::{Error, Result};
use crate::hopfcore::TableBialgebra;
use crate::kernel::{Scalar, Verdict, Witness};
use crate::tensorlab::{check_equation, EndoTensor, Equation};

fn check_shape(h: &TableBialgebra, sigma: &[Vec<Scalar>]) -> Result<()> {
    let d = h.dim();
    if sigma.len() != d || sigma.iter().any(|r| r.len() != d) {
        return Err(Error::Dimension(format!("a full pairing on a {d}-dimensional host is {d}×{d}")));
    }
    if sigma.iter().flatten().any(|s| !h.field().owns(s)) {
        return Err(Error::FieldMismatch("pairing value outside the host field".into()));
    }
    Ok(())
}

/// Bilinear value on two coordinate vectors.
fn pair(sigma: &[Vec<Scalar>], a: &[Scalar], b: &[Scalar], zero: &Scalar) -> Scalar {
    let mut acc = zero.clone();
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            acc = acc + &(x * y) * &sigma[i][j];
        }
    }
    acc
}

/// Checks (B1)–(B5) on basis elements for a pairing given on every basis
/// pair, `sigma[i][j] = σ(b_i⊗b_j)`.
pub fn check_braided(h: &TableBialgebra, sigma: &[Vec<Scalar>]) -> Result<Verdict> {
    check_shape(h, sigma)?;
    let d = h.dim();
    let f = h.field();
    let zero = f.zero();
    let unit = h.unit_index();
    let e = |i: usize| -> Vec<Scalar> { (0..d).map(|k| if k == i { f.one() } else { f.zero() }).collect() };
    let add_into = |acc: &mut Vec<Scalar>, v: &[Scalar], c: &Scalar| {
        for (s, x) in acc.iter_mut().zip(v) {
            *s = s.clone() + c * x;
        }
    };
    let mut ws = Vec::new();
    let name = |i: usize| h.basis()[i].clone();
    for x in 0..d {
        for y in 0..d {
            // (B1) Σσ(x₁⊗y₁)y₂x₂ = Σσ(x₂⊗y₂)x₁y₁
            let mut lhs = vec![zero.clone(); d];
            let mut rhs = vec![zero.clone(); d];
            for (x1, x2, a) in h.delta_of(x) {
                for (y1, y2, b) in h.delta_of(y) {
                    let ab = a * b;
                    let l = &ab * &sigma[*x1][*y1];
                    if !l.is_zero() {
                        add_into(&mut lhs, h.product(*y2, *x2), &l);
                    }
                    let r = &ab * &sigma[*x2][*y2];
                    if !r.is_zero() {
                        add_into(&mut rhs, h.product(*x1, *y1), &r);
                    }
                }
            }
            if lhs != rhs {
                ws.push(Witness::new(
                    format!("(B1) x={} y={}", name(x), name(y)),
                    h.render_vector(&lhs),
                    h.render_vector(&rhs),
                ));
            }
        }
        // (B2) σ(x⊗1) = ε(x), (B4) σ(1⊗x) = ε(x)
        if &sigma[x][unit] != h.eps_of(x) {
            ws.push(Witness::new(format!("(B2) x={}", name(x)), &sigma[x][unit], h.eps_of(x)));
        }
        if &sigma[unit][x] != h.eps_of(x) {
            ws.push(Witness::new(format!("(B4) x={}", name(x)), &sigma[unit][x], h.eps_of(x)));
        }
    }
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                // (B3) σ(x⊗yz) = Σσ(x₁⊗y)σ(x₂⊗z)
                let lhs = pair(sigma, &e(x), h.product(y, z), &zero);
                let rhs = h
                    .delta_of(x)
                    .iter()
                    .fold(zero.clone(), |acc, (x1, x2, a)| acc + &(a * &sigma[*x1][y]) * &sigma[*x2][z]);
                if lhs != rhs {
                    ws.push(Witness::new(format!("(B3) x={} y={} z={}", name(x), name(y), name(z)), lhs, rhs));
                }
                // (B5) σ(xy⊗z) = Σσ(y⊗z₁)σ(x⊗z₂)
                let lhs = pair(sigma, h.product(x, y), &e(z), &zero);
                let rhs = h
                    .delta_of(z)
                    .iter()
                    .fold(zero.clone(), |acc, (z1, z2, a)| acc + &(a * &sigma[y][*z1]) * &sigma[x][*z2]);
                if lhs != rhs {
                    ws.push(Witness::new(format!("(B5) x={} y={} z={}", name(x), name(y), name(z)), lhs, rhs));
                }
            }
        }
    }
    Ok(if ws.is_empty() { Verdict::pass("(B1)-(B5)") } else { Verdict::fail_many(ws, "(B1)-(B5)") })
}

/// `R_σ` on the regular comodule `ρ = Δ` and its QYBE verdict.
pub fn check_qybe_from_braided(h: &TableBialgebra, sigma: &[Vec<Scalar>]) -> Result<(EndoTensor, Verdict)> {
    check_shape(h, sigma)?;
    let d = h.dim();
    let f = h.field();
    // ρ(b_l) = Σ_v b_v ⊗ g_vl
    let mut g = vec![vec![vec![f.zero(); d]; d]; d];
    for l in 0..d {
        for (v, k, a) in h.delta_of(l) {
            g[*v][l][*k] = g[*v][l][*k].clone() + a.clone();
        }
    }
    let zero = f.zero();
    let r = EndoTensor::from_coefficients(f, d, |u, v, j, i| pair(sigma, &g[i][v], &g[j][u], &zero));
    let verdict = check_equation(Equation::Qybe, &r, None)?;
    Ok((r, verdict))
}

/// The full table of `σ` on a table host, zero on rows outside `C`.
///
/// Every element of `C` must be a basis vector of the host.
pub fn extend_by_zero(sigma: &Pairing) -> Result<Vec<Vec<Scalar>>> {
    let h = sigma
        .host()
        .as_table()
        .ok_or_else(|| Error::InvalidInput("extension by zero needs a table host".into()))?;
    let f = h.field();
    let mut full = vec![vec![f.zero(); h.dim()]; h.dim()];
    for (k, e) in sigma.coalgebra().elements().iter().enumerate() {
        let v = h.vector(e);
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        if nz.len() != 1 || !v[nz[0]].is_one() {
            return Err(Error::InvalidInput(format!("{} is not a basis vector", sigma.coalgebra().names()[k])));
        }
        for (j, slot) in full[nz[0]].iter_mut().enumerate() {
            *slot = sigma.value(k, &h.basis_element(j));
        }
    }
    Ok(full)
}
