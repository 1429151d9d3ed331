//! Gröbner bases for submodules of free modules over the Weyl algebra `A_n(Q)`,
//! and the Bernstein polynomial of finitely presented `A_n`-modules.
//!
//! The pipeline is: relations → [`groebner::buchberger`] → leading exponents per
//! generator → [`numpoly::kolchin_polynomial`] → `χ(t)` with its invariants
//! ([`bernstein::bernstein_polynomial`]). The [`oracle`] module recomputes
//! `dim_K M_r` by brute force.

pub mod bernstein;
pub mod error;
pub mod free_module;
pub mod groebner;
pub mod numpoly;
pub mod oracle;
mod scaled;
pub mod weyl;

pub use bernstein::{
    bernstein_polynomial, bernstein_polynomial_with, invariants, krull_report, leading_exponent_sets, BernsteinReport,
    Invariants, KrullReport, KrullType, ModulePresentation,
};
pub use error::{Error, Result};
pub use free_module::{act, ModuleElement, ModuleMonomial};
pub use groebner::{
    buchberger, buchberger_with, is_member, reduce_full, s_polynomial, Basis, BuchbergerOptions, DivisionResult,
};
pub use numpoly::{
    count_v_points, kolchin_polynomial, minimal_points, NumericalPolynomial, PointSet, RationalPolynomial,
};
pub use oracle::{count_standard_monomials, rank_dimension, verify_presentation, DimensionTable};
pub use weyl::{weyl_mul, MultiIndex, Polynomial, Rational, WeylElement, WeylMonomial};
