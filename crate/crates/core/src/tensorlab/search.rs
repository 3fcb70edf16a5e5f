use std::ops::Range;

use rayon::prelude::*;

use super::{check_equation, EndoTensor, Equation};
use crate::error::{Error, Result};
use crate::kernel::{Field, Matrix};

/// Largest candidate count any exhaustive search will enumerate.
pub const SEARCH_LIMIT: u64 = 1 << 24;

const CHUNK: u64 = 1 << 12;

/// `p^(n⁴)`, the number of candidate tensors over GF(p).
pub fn candidate_count(field: Field, n: usize) -> Result<u64> {
    let p = field
        .modulus()
        .ok_or_else(|| Error::InvalidInput("exhaustive search needs a prime field".into()))?;
    let exponent = (n * n * n * n) as u32;
    p.checked_pow(exponent)
        .ok_or(Error::SearchTooLarge { candidates: (p as f64).powi(exponent as i32) })
}

/// Candidate number `index`: the matrix whose row-major entries are the
/// base-`p` digits of `index`, first entry most significant.
pub fn endo_from_index(field: Field, n: usize, index: u64) -> EndoTensor {
    let p = field.modulus().expect("prime field");
    let d = n * n;
    let mut digits = vec![0u64; d * d];
    let mut rest = index;
    for slot in digits.iter_mut().rev() {
        *slot = rest % p;
        rest /= p;
    }
    let m = Matrix::from_fn(field, d, d, |r, c| field.residue(digits[r * d + c]));
    EndoTensor::from_matrix(n, m).expect("square")
}

/// All `R` over GF(p) with `dim M = n` satisfying `kind`, in candidate order.
pub fn search_endos(field: Field, n: usize, kind: Equation) -> Result<Vec<EndoTensor>> {
    let total = candidate_count(field, n)?;
    if total > SEARCH_LIMIT {
        return Err(Error::SearchTooLarge { candidates: total as f64 });
    }
    search_endos_range(field, n, kind, 0..total)
}

/// Same as [`search_endos`] restricted to candidate indices in `range`.
///
/// Ranges may be processed independently; concatenating the results of
/// consecutive ranges reproduces the full search. The limit applies to the
/// range length, so larger spaces can be covered by partitions.
pub fn search_endos_range(field: Field, n: usize, kind: Equation, range: Range<u64>) -> Result<Vec<EndoTensor>> {
    if kind.needs_second() {
        return Err(Error::InvalidInput(format!("cannot search for `{kind}`: it relates two operators")));
    }
    let total = candidate_count(field, n)?;
    if range.end > total || range.start > range.end {
        return Err(Error::InvalidInput(format!("range {}..{} outside 0..{total}", range.start, range.end)));
    }
    if range.end - range.start > SEARCH_LIMIT {
        return Err(Error::SearchTooLarge { candidates: (range.end - range.start) as f64 });
    }
    let chunks: Vec<Range<u64>> = (range.start..range.end)
        .step_by(CHUNK as usize)
        .map(|s| s..(s + CHUNK).min(range.end))
        .collect();
    let hits: Vec<Vec<EndoTensor>> = chunks
        .into_par_iter()
        .map(|chunk| {
            chunk
                .map(|idx| endo_from_index(field, n, idx))
                .filter(|r| check_equation(kind, r, None).expect("single-operator equation").is_pass())
                .collect()
        })
        .collect();
    Ok(hits.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_solutions() {
        for p in [2, 3] {
            let f = Field::prime(p);
            let hits = search_endos(f, 1, Equation::Hopf).unwrap();
            let vals: Vec<u64> = hits.iter().map(|r| r.coeff(0, 0, 0, 0).residue_value().unwrap()).collect();
            assert_eq!(vals, vec![0, 1], "GF({p})");
        }
    }

    #[test]
    fn index_order_is_lexicographic() {
        let f = Field::prime(3);
        let r = endo_from_index(f, 1, 2);
        assert_eq!(r.coeff(0, 0, 0, 0).residue_value(), Some(2));
        let f2 = Field::prime(2);
        // index 1 sets only the last row-major entry.
        let r = endo_from_index(f2, 2, 1);
        assert!(r.matrix()[(3, 3)].is_one());
        assert_eq!(r.nonzero_coefficients().len(), 1);
        let r = endo_from_index(f2, 2, 1 << 15);
        assert!(r.matrix()[(0, 0)].is_one());
    }

    #[test]
    fn guards() {
        assert_eq!(candidate_count(Field::prime(3), 2).unwrap(), 43_046_721);
        assert!(matches!(search_endos(Field::prime(3), 2, Equation::Hopf), Err(Error::SearchTooLarge { .. })));
        let head = search_endos_range(Field::prime(3), 2, Equation::Hopf, 0..10).unwrap();
        assert_eq!(head[0], EndoTensor::zero(Field::prime(3), 2));
        assert!(matches!(candidate_count(Field::prime(5), 4), Err(Error::SearchTooLarge { .. })));
        assert!(candidate_count(Field::rationals(), 1).is_err());
        assert!(search_endos(Field::prime(2), 1, Equation::Mixed).is_err());
        assert!(search_endos_range(Field::prime(2), 1, Equation::Hopf, 0..3).is_err());
    }

    #[test]
    fn partitions_concatenate() {
        let f = Field::prime(2);
        let full = search_endos_range(f, 2, Equation::Hopf, 0..20000).unwrap();
        let mut parts = search_endos_range(f, 2, Equation::Hopf, 0..7000).unwrap();
        parts.extend(search_endos_range(f, 2, Equation::Hopf, 7000..20000).unwrap());
        assert_eq!(full, parts);
    }
}
