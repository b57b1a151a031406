//! Exact symbolic geometry of algebraic ovals: segment areas from rational
//! parametrizations, Puiseux branches via the Newton polygon, and
//! squarability certificates by resultant elimination.

pub mod algebra;
pub mod parse;
pub mod elimination;
pub mod puiseux;
pub mod curves;
pub mod quadrature;
pub mod certify;
