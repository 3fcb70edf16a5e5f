//! The free algebra on named generators and bounded two-sided ideal membership.

mod ideal;
mod poly;
mod word;

pub use ideal::{
    default_bound, ideal_basis, ideal_member, reduce_mod_ideal, Certificate, IdealBasis, Membership, Product,
    DEFAULT_BOUND, DEFAULT_SLACK,
};
pub use poly::NCPoly;
pub use word::{Alphabet, Word};
