use std::ops::Range;

use rayon::prelude::*;

use super::{Extension, Mode, Pairing};
use crate::error::{Error, Result};
use crate::hopfcore::SubcoalgebraView;
use crate::tensorlab::SEARCH_LIMIT;

const CHUNK: u64 = 1 << 10;

fn shape(c: &SubcoalgebraView) -> Result<(u64, usize, usize)> {
    let host = c.host();
    if host.as_table().is_none() {
        return Err(Error::InvalidInput("σ search needs a table host".into()));
    }
    let p = host
        .field()
        .modulus()
        .ok_or_else(|| Error::InvalidInput("exhaustive search needs a prime field".into()))?;
    let cols = host.generators().len() + 1;
    let slots = (c.len() * cols) as u32;
    let total = p.checked_pow(slots).ok_or(Error::SearchTooLarge { candidates: (p as f64).powi(slots as i32) })?;
    Ok((total, c.len(), cols))
}

fn candidate(c: &SubcoalgebraView, rows: usize, cols: usize, index: u64) -> Pairing {
    let f = c.host().field();
    let p = f.modulus().expect("prime field");
    let mut digits = vec![0u64; rows * cols];
    let mut rest = index;
    for slot in digits.iter_mut().rev() {
        *slot = rest % p;
        rest /= p;
    }
    let table = digits.chunks(cols).map(|r| r.iter().map(|&d| f.residue(d)).collect()).collect();
    Pairing::new(c.clone(), table, Extension::Multiplicative).expect("well-shaped table")
}

fn accepts(sigma: &Pairing) -> bool {
    sigma.check_well_defined_on_host().is_pass()
        && sigma.check_h2().is_pass()
        && sigma.check_h3(Mode::Generators).is_pass()
        && sigma.check_h1(Mode::Generators).is_pass()
}

/// Every generator table on `C⊗H` over GF(p) that is well defined and
/// satisfies (H1)–(H3). Tables are enumerated with the row-major entries
/// (columns `1` then generators) as base-`p` digits, first most significant.
pub fn search_hopf_functions(c: &SubcoalgebraView) -> Result<Vec<Pairing>> {
    let (total, _, _) = shape(c)?;
    if total > SEARCH_LIMIT {
        return Err(Error::SearchTooLarge { candidates: total as f64 });
    }
    search_hopf_functions_with(c, 0..total)
}

/// [`search_hopf_functions`] restricted to candidate indices in `range`.
pub fn search_hopf_functions_with(c: &SubcoalgebraView, range: Range<u64>) -> Result<Vec<Pairing>> {
    let (total, rows, cols) = shape(c)?;
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
    let hits: Vec<Vec<Pairing>> = chunks
        .into_par_iter()
        .map(|chunk| chunk.map(|i| candidate(c, rows, cols, i)).filter(accepts).collect())
        .collect();
    Ok(hits.into_iter().flatten().collect())
}
