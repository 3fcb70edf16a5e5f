use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{leg_embed, EndoTensor, Legs, TripleEndo};
use crate::error::{Error, Result};
use crate::kernel::{Scalar, Verdict, Witness};

/// Operator identities on `M⊗M⊗M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Equation {
    /// `R²³R¹³R¹² = R¹²R²³`
    Hopf,
    /// `R¹²R¹³R²³ = R²³R¹³R¹²`
    Qybe,
    /// `S¹²S¹³S²³ = S²³S¹²`, satisfied by inverses of Hopf solutions.
    InverseEq,
    /// `R¹²R¹³ = R¹³R¹²`
    Commute13,
    /// `R²³S¹³S¹² = S¹²R²³` for a pair `(R, S)`.
    Mixed,
}

impl Equation {
    pub fn needs_second(self) -> bool {
        self == Equation::Mixed
    }

    pub fn statement(self) -> &'static str {
        match self {
            Equation::Hopf => "R23 R13 R12 = R12 R23",
            Equation::Qybe => "R12 R13 R23 = R23 R13 R12",
            Equation::InverseEq => "S12 S13 S23 = S23 S12",
            Equation::Commute13 => "R12 R13 = R13 R12",
            Equation::Mixed => "R23 S13 S12 = S12 R23",
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equation::Hopf => "hopf",
            Equation::Qybe => "qybe",
            Equation::InverseEq => "inverse-eq",
            Equation::Commute13 => "commute13",
            Equation::Mixed => "mixed",
        })
    }
}

impl FromStr for Equation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "hopf" => Ok(Equation::Hopf),
            "qybe" => Ok(Equation::Qybe),
            "inverse-eq" => Ok(Equation::InverseEq),
            "commute13" => Ok(Equation::Commute13),
            "mixed" => Ok(Equation::Mixed),
            other => Err(Error::Parse(format!("unknown equation `{other}`"))),
        }
    }
}

/// Both sides of an equation as operators on `M⊗M⊗M`.
pub(crate) fn sides(kind: Equation, r: &EndoTensor, s: Option<&EndoTensor>) -> Result<(TripleEndo, TripleEndo)> {
    let l = |t: &EndoTensor, legs| leg_embed(t, legs);
    Ok(match kind {
        Equation::Hopf => {
            let (r12, r13, r23) = (l(r, Legs::L12), l(r, Legs::L13), l(r, Legs::L23));
            (TripleEndo::chain(&[&r23, &r13, &r12]), TripleEndo::chain(&[&r12, &r23]))
        }
        Equation::Qybe => {
            let (r12, r13, r23) = (l(r, Legs::L12), l(r, Legs::L13), l(r, Legs::L23));
            (TripleEndo::chain(&[&r12, &r13, &r23]), TripleEndo::chain(&[&r23, &r13, &r12]))
        }
        Equation::InverseEq => {
            let (s12, s13, s23) = (l(r, Legs::L12), l(r, Legs::L13), l(r, Legs::L23));
            (TripleEndo::chain(&[&s12, &s13, &s23]), TripleEndo::chain(&[&s23, &s12]))
        }
        Equation::Commute13 => {
            let (r12, r13) = (l(r, Legs::L12), l(r, Legs::L13));
            (TripleEndo::chain(&[&r12, &r13]), TripleEndo::chain(&[&r13, &r12]))
        }
        Equation::Mixed => {
            let s = s.ok_or_else(|| Error::InvalidInput("the mixed equation needs a second operator".into()))?;
            r.same_shape(s)?;
            let (r23, s13, s12) = (l(r, Legs::L23), l(s, Legs::L13), l(s, Legs::L12));
            (TripleEndo::chain(&[&r23, &s13, &s12]), TripleEndo::chain(&[&s12, &r23]))
        }
    })
}

/// Checks an operator identity on every basis triple of `M⊗M⊗M`.
///
/// A failing verdict names the first basis triple (lexicographic) on which
/// the two sides differ, with both images.
pub fn check_equation(kind: Equation, r: &EndoTensor, s: Option<&EndoTensor>) -> Result<Verdict> {
    let (lhs, rhs) = sides(kind, r, s)?;
    let detail = kind.statement();
    Ok(match lhs.matrix().first_difference(rhs.matrix()) {
        None => Verdict::pass(detail),
        Some((_, col)) => Verdict::fail(
            Witness::new(
                format!("{kind} at {}", TripleEndo::basis_label(r.n(), col)),
                lhs.render_column(col),
                rhs.render_column(col),
            ),
            detail,
        ),
    })
}

fn component_check(r: &EndoTensor, s: &EndoTensor, label: &str) -> Verdict {
    let n = r.n();
    let field = r.field();
    let x = |u, v, j, i| r.coeff(u, v, j, i);
    let y = |u, v, j, i| s.coeff(u, v, j, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for p in 0..n {
                        for q in 0..n {
                            let mut lhs = field.zero();
                            for u in 0..n {
                                for v in 0..n {
                                    let a = x(u, v, j, i);
                                    if a.is_zero() {
                                        continue;
                                    }
                                    for b in 0..n {
                                        let t = y(k, b, u, p) * y(l, q, v, b);
                                        if !t.is_zero() {
                                            lhs = lhs + a * &t;
                                        }
                                    }
                                }
                            }
                            let rhs = (0..n).fold(field.zero(), |acc: Scalar, a| acc + x(k, l, j, a) * y(a, q, i, p));
                            if lhs != rhs {
                                return Verdict::fail(
                                    Witness::new(
                                        format!(
                                            "{label} at (i,j,k,l,p,q)=({},{},{},{},{},{})",
                                            i + 1,
                                            j + 1,
                                            k + 1,
                                            l + 1,
                                            p + 1,
                                            q + 1
                                        ),
                                        lhs,
                                        rhs,
                                    ),
                                    "componentwise identity",
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    Verdict::pass("componentwise identity")
}

/// The Hopf equation in structure constants:
/// `Σ_{u,v,β} x_uv^ji x_kβ^up x_lq^vβ = Σ_α x_kl^jα x_αq^ip` for all indices.
pub fn component_check_hopf(r: &EndoTensor) -> Verdict {
    component_check(r, r, "hopf")
}

/// The mixed identity `R²³S¹³S¹² = S¹²R²³` in structure constants:
/// `Σ_{u,v,β} x_uv^ji y_kβ^up y_lq^vβ = Σ_α x_kl^jα y_αq^ip`.
pub fn component_check_mixed(r: &EndoTensor, s: &EndoTensor) -> Result<Verdict> {
    r.same_shape(s)?;
    Ok(component_check(r, s, "mixed"))
}
