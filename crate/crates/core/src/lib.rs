//! Exact arithmetic kernel for congruence verification on unitary-group
//! Eisenstein data.
//!
//! Everything in this crate is computed over exact domains: arbitrary
//! precision rationals, cyclotomic number fields, residue rings `Z/p^m` and
//! formal (truncated) power series. There is no floating point anywhere.
//!
//! The crate is organised around the verification pipeline:
//!
//! * [`arith`] — rationals, cyclotomic numbers, polynomials, Smith normal form;
//! * [`hermitian`] — hermitian matrices over a local quadratic étale algebra,
//!   lattice membership, denominator ideals and coset enumeration;
//! * [`local_series`] — the coefficient series `A_zeta`, its closed rational
//!   factor `f_zeta` and polynomial part `g_zeta`, with degree-p extension
//!   models for the coefficient congruences;
//! * [`characters`] — finite abelian and local multiplicative characters,
//!   Gauss sums, local L-, epsilon- and Tate factors;
//! * [`zeta`] — exact p-adic integrals: Tate, Godement–Jacquet, Whittaker
//!   coefficients and the doubling-method section;
//! * [`qexp`] — formal q-expansions, trace-fiber pull-back, Frobenius twist
//!   and the Eisenstein coefficient congruence checker;
//! * [`iwasawa`] — finite-level group rings, transfer map, trace ideal and
//!   the Ritter–Weiss equivalence;
//! * [`pipeline`] — the end-to-end torsion-congruence verification.

pub mod arith;
pub mod characters;
pub mod hermitian;
pub mod iwasawa;
pub mod local_series;
pub mod pipeline;
pub mod qexp;
pub mod zeta;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
