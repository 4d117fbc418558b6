//! Exact combinatorics of shifted tableaux and Schur Q-functions.
//!
//! The crate computes principal and bi-graded specializations of Schur
//! Q-functions by independent routes (shifted hook products, a product
//! formula over pairs of rows, and explicit tableau sums), implements the
//! weight-preserving exchange bijection between marked and colored shifted
//! tableaux, and derives graded multiplicities of simple modules of the
//! Hecke–Clifford and spin symmetric group algebras in polynomial and
//! exterior algebras. Every closed formula has a brute-force counterpart.
//!
//! All arithmetic is exact; see [`series`] for the series types.

pub mod bijection;
pub mod classical;
pub mod error;
pub mod multiplicities;
pub mod partitions;
pub mod qfunctions;
pub mod series;
pub mod specializations;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Cell, Composition, FrobeniusCoords, Partition, StrictPartition};
pub use series::{BiSeries, MultiPoly, Rational, Series};
