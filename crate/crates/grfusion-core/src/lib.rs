//! Exact arithmetic for the small quantum cohomology ring `qH*(Gr_{n,n+k})`
//! and the level-k sl(n) fusion (Verlinde) ring.
//!
//! The crate computes three-point genus-zero Gromov-Witten invariants and
//! WZNW fusion coefficients through several independent algorithms that can
//! be cross-checked against each other:
//!
//! * a free-fermion (finite Clifford algebra) product formula,
//! * a quantum Racah-Speiser sum over Kostka numbers,
//! * vacuum expectation values of Clifford monomials,
//! * the rim-hook and dual rim-hook reductions of Littlewood-Richardson
//!   expansions,
//! * floating-point root-of-unity evaluations (Bertram-Vafa-Intriligator
//!   and Verlinde sums) used as numeric oracles.
//!
//! All ring arithmetic is exact: coefficients are integer polynomials in the
//! deformation parameter `q` with [`num_bigint::BigInt`] coefficients. The
//! numeric oracles are the only place floating point appears.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command
//! line front end live in the companion `grfusion-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod fock;
pub mod fusion;
pub mod oracle;
pub mod partitions;
pub mod qh;
pub mod tableaux;

pub use fock::{FockState, OperatorKind, QPoly};
pub use fusion::{AffineWeight, FusionAlgorithm, FusionExpansion};
pub use oracle::{OracleError, RoundedValue};
pub use partitions::{BitWord, BoundingBox, Partition};
pub use qh::{GwAlgorithm, GwQuery, QExpansion};
