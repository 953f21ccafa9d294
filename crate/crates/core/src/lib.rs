pub mod certify;
pub mod cyclotomic;
pub mod error;
pub mod fatou;
pub mod height;
pub mod irreducible;
pub mod matrix;
pub mod modp;
pub mod multipoly;
pub mod nfpoly;
pub mod numfield;
pub mod poly;
pub mod rational;
pub mod unity;
pub mod valuation;

pub use error::{Error, Result};
pub use matrix::RatMatrix;
pub use numfield::{Field, NFElement, NumberField};
pub use poly::UniPoly;
pub use rational::Rational;
pub use nfpoly::NfPoly;
