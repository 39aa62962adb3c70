//! Exact-arithmetic toolkit for Tanisaki–Garsia–Procesi (TGP) quotient
//! algebras and their multiparameter deformations.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: partitions, semistandard tableaux, cocharge and the
//!   modified Kostka–Foulkes polynomials.
//! * [`polyring`]: sparse multivariate polynomials over `BigRational`.
//! * [`groebner`]: Buchberger's algorithm, normal forms and finite-dimensional
//!   quotients.
//! * [`linalg`]: small dense matrices over the rationals.
//! * [`symgrp`]: permutations, the character table of `S_d`, induction.
//! * [`tgp`]: the (deformed) Tanisaki generators, the quotient algebras, their
//!   characters and representation matrices, and the structural checks.
//! * [`schurweyl`]: highest-weight decompositions on the `sl_{n+1}` side.
//! * [`suite`]: the batch verification driver used by the CLI.

pub mod error;
pub mod groebner;
pub mod linalg;
pub mod partitions;
pub mod polyring;
pub mod schurweyl;
pub mod suite;
pub mod symgrp;
pub mod tgp;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, QuotientBasis};
pub use linalg::Matrix;
pub use partitions::{Partition, QPoly, Tableau, Word};
pub use polyring::{MPoly, Monomial, MonomialOrder, Rational};
pub use symgrp::{CharacterTable, CharacterVector, ClassFunction, Permutation};
pub use tgp::{EvalParams, RepMatrices, TanisakiSet, TgpAlgebra};
