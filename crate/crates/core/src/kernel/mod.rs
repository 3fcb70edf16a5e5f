//! Exact field arithmetic, dense linear algebra and the verdict type.

pub mod field;
pub mod matrix;
pub mod verdict;

pub use field::{format_scalar, is_prime, make_field, parse_scalar, Field, FieldSpec, Scalar};
pub use matrix::Matrix;
pub use verdict::{Status, Verdict, Witness};

/// Renders `Σ c·label` with unit coefficients elided; `0` when empty.
pub fn render_sum(terms: impl IntoIterator<Item = (Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.displays_negative();
        let mag = if neg { -c } else { c };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(&label);
        } else if label == "1" {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{mag}·{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
