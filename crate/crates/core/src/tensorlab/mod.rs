//! Endomorphisms of `M⊗M` by structure constants, their leg embeddings
//! into `End(M⊗M⊗M)`, the equation checkers and exhaustive search.
//!
//! Basis convention: `M⊗M` and `M⊗M⊗M` are ordered lexicographically with
//! the leftmost factor most significant, so `m_a⊗m_b` has index `a*n + b`.
//! Matrix entry `(row, col)` is the coefficient of basis vector `row` in
//! the image of basis vector `col`. All indices are 0-based in code and
//! 1-based in rendered output.

mod equations;
mod search;

pub use equations::{check_equation, component_check_hopf, component_check_mixed, Equation};
pub use search::{candidate_count, endo_from_index, search_endos, search_endos_range, SEARCH_LIMIT};

use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{render_sum, Field, Matrix, Scalar};

/// `R ∈ End(M⊗M)` for `dim M = n`, stored as its `n²×n²` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoTensor {
    n: usize,
    matrix: Matrix,
}

impl EndoTensor {
    /// Wraps an `n²×n²` matrix in the lexicographic basis.
    pub fn from_matrix(n: usize, matrix: Matrix) -> Result<Self> {
        if n == 0 || matrix.rows() != n * n || matrix.cols() != n * n {
            return Err(Error::Dimension(format!(
                "expected a {0}x{0} matrix for n = {n}, got {1}x{2}",
                n * n,
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(EndoTensor { n, matrix })
    }

    /// Builds `R` from its structure constants: `coeff(u, v, j, i)` is the
    /// coefficient of `m_i⊗m_j` in `R(m_v⊗m_u)`.
    pub fn from_coefficients(field: Field, n: usize, mut coeff: impl FnMut(usize, usize, usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(field, n * n, n * n);
        for u in 0..n {
            for v in 0..n {
                for j in 0..n {
                    for i in 0..n {
                        m[(i * n + j, v * n + u)] = coeff(u, v, j, i);
                    }
                }
            }
        }
        EndoTensor { n, matrix: m }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        EndoTensor { n, matrix: Matrix::identity(field, n * n) }
    }

    pub fn zero(field: Field, n: usize) -> Self {
        EndoTensor { n, matrix: Matrix::zeros(field, n * n, n * n) }
    }

    /// The flip `τ(a⊗b) = b⊗a`.
    pub fn switch(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n * n, n * n);
        for a in 0..n {
            for b in 0..n {
                m[(b * n + a, a * n + b)] = field.one();
            }
        }
        EndoTensor { n, matrix: m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn to_matrix(&self) -> Matrix {
        self.matrix.clone()
    }

    /// Structure constant `x_{uv}^{ji}`: coefficient of `m_i⊗m_j` in `R(m_v⊗m_u)`.
    #[inline]
    pub fn coeff(&self, u: usize, v: usize, j: usize, i: usize) -> &Scalar {
        &self.matrix[(i * self.n + j, v * self.n + u)]
    }

    /// Image of the basis vector `m_a⊗m_b`.
    pub fn apply_basis(&self, a: usize, b: usize) -> Vec<Scalar> {
        self.matrix.column(a * self.n + b)
    }

    pub fn compose(&self, other: &EndoTensor) -> Result<EndoTensor> {
        self.same_shape(other)?;
        Ok(EndoTensor { n: self.n, matrix: self.matrix.mul(&other.matrix)? })
    }

    pub(crate) fn same_shape(&self, other: &EndoTensor) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension(format!("n = {} vs n = {}", self.n, other.n)));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field(), other.field())));
        }
        Ok(())
    }

    /// Nonzero structure constants as `((u, v, j, i), x_uv^ji)`, 0-based.
    pub fn nonzero_coefficients(&self) -> Vec<((usize, usize, usize, usize), Scalar)> {
        let n = self.n;
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                for j in 0..n {
                    for i in 0..n {
                        let c = self.coeff(u, v, j, i);
                        if !c.is_zero() {
                            out.push(((u, v, j, i), c.clone()));
                        }
                    }
                }
            }
        }
        out
    }

    /// Re-reads the same integer pattern in another field (prime-field residues
    /// are lifted to their representatives in `0..p`).
    pub fn reinterpret(&self, field: Field) -> Result<EndoTensor> {
        let m = Matrix::from_fn(field, self.n * self.n, self.n * self.n, |r, c| {
            let s = &self.matrix[(r, c)];
            match s.residue_value() {
                Some(v) => field.from_i64(v as i64),
                None => field.parse_scalar(&s.to_string()).expect("rational entry"),
            }
        });
        Ok(EndoTensor { n: self.n, matrix: m })
    }
}

/// Builds an [`EndoTensor`] from an `n²×n²` matrix (lexicographic basis).
pub fn endo_from_matrix(n: usize, m: Matrix) -> Result<EndoTensor> {
    EndoTensor::from_matrix(n, m)
}

/// Inverse of `R` as a structure-constant tensor (the `y_uv^ji` family).
pub fn invert_endo(r: &EndoTensor) -> Result<EndoTensor> {
    Ok(EndoTensor { n: r.n, matrix: r.matrix.inverse()? })
}

impl fmt::Display for EndoTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

/// Which tensor factors an embedded operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Legs {
    L12,
    L13,
    L23,
}

/// An endomorphism of `M⊗M⊗M` as a dense `n³×n³` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleEndo {
    n: usize,
    matrix: Matrix,
}

impl TripleEndo {
    pub fn identity(field: Field, n: usize) -> Self {
        TripleEndo { n, matrix: Matrix::identity(field, n * n * n) }
    }

    pub fn from_matrix(n: usize, matrix: Matrix) -> Result<Self> {
        let d = n * n * n;
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::Dimension(format!("expected {d}x{d}")));
        }
        Ok(TripleEndo { n, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Operator composition `self ∘ rhs`.
    pub fn then_after(&self, rhs: &TripleEndo) -> TripleEndo {
        TripleEndo { n: self.n, matrix: self.matrix.mul(&rhs.matrix).expect("same shape") }
    }

    /// Composition of a chain written left to right as operators, e.g.
    /// `[R23, R13, R12]` is `R23∘R13∘R12`.
    pub fn chain(ops: &[&TripleEndo]) -> TripleEndo {
        let mats: Vec<&Matrix> = ops.iter().map(|t| &t.matrix).collect();
        TripleEndo { n: ops[0].n, matrix: Matrix::product(&mats).expect("same shape") }
    }

    pub fn basis_label(n: usize, idx: usize) -> String {
        let (a, b, c) = (idx / (n * n), (idx / n) % n, idx % n);
        format!("m{}⊗m{}⊗m{}", a + 1, b + 1, c + 1)
    }

    pub fn render_column(&self, col: usize) -> String {
        let terms = (0..self.matrix.rows())
            .map(|r| (self.matrix[(r, col)].clone(), TripleEndo::basis_label(self.n, r)));
        render_sum(terms)
    }
}

/// `R¹²`, `R¹³` or `R²³`; `R¹³ = (I⊗τ)(R⊗I)(I⊗τ)`.
pub fn leg_embed(r: &EndoTensor, legs: Legs) -> TripleEndo {
    let n = r.n;
    let field = r.field();
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    let mut m = Matrix::zeros(field, n * n * n, n * n * n);
    let pair = |p: usize, q: usize| p * n + q;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let col = idx(a, b, c);
                for x in 0..n {
                    for y in 0..n {
                        match legs {
                            Legs::L12 => {
                                let s = &r.matrix[(pair(x, y), pair(a, b))];
                                if !s.is_zero() {
                                    m[(idx(x, y, c), col)] = s.clone();
                                }
                            }
                            Legs::L23 => {
                                let s = &r.matrix[(pair(x, y), pair(b, c))];
                                if !s.is_zero() {
                                    m[(idx(a, x, y), col)] = s.clone();
                                }
                            }
                            Legs::L13 => {
                                let s = &r.matrix[(pair(x, y), pair(a, c))];
                                if !s.is_zero() {
                                    m[(idx(x, b, y), col)] = s.clone();
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    TripleEndo { n, matrix: m }
}
