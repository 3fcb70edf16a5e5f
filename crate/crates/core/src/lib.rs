//! Exact tools for the Hopf equation `R²³R¹³R¹² = R¹²R²³`: solution checks
//! and searches, the bialgebra `B(R)`, Hopf functions and Hopf elements.

pub mod catalog;
pub mod error;
pub mod formats;
pub mod freeword;
pub mod frt;
pub mod hopfcore;
pub mod hopfelement;
pub mod kernel;
pub mod pairing;
pub mod tensorlab;

pub use error::{Error, Result};
pub use kernel::{Field, FieldSpec, Matrix, Scalar, Status, Verdict, Witness};
pub use tensorlab::{check_equation, EndoTensor, Equation};
