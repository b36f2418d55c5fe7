//! Exact computation of the irreducible characters of the symmetric groups
//! together with the Kostka and inverse Kostka matrices.
//!
//! Two independent routes are provided:
//!
//! * [`triangular`] inverts the unitriangular coupling between the Frobenius
//!   compound characters and the irreducible characters row by row. It yields
//!   the Kostka matrix, its inverse and the character table in one pass.
//! * [`monomial`] expands determinants of complete homogeneous symmetric
//!   polynomials on the monomial basis and reads the Kostka matrix off the
//!   coefficients, never touching a character.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and the
//! class-function inner product is evaluated over the rationals.
//!
//! ```
//! use kostka::{frobenius, partitions::SymmetricGroupContext, triangular};
//!
//! let ctx = SymmetricGroupContext::new(3).unwrap();
//! let phi = frobenius::frobenius_table(&ctx).unwrap();
//! let solved = triangular::triangular_solve(&phi, &ctx).unwrap();
//! assert_eq!(solved.kostka.to_i64_rows(), vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 2, 1]]);
//! ```

pub mod bench;
pub mod cache;
pub mod cli;
pub mod error;
pub mod frobenius;
pub mod monomial;
pub mod partitions;
pub mod symfunc;
pub mod table;
pub mod triangular;
pub mod verification;

pub use error::{Error, Result};
pub use partitions::{CycleType, Partition, SymmetricGroupContext};
pub use symfunc::{RawPolynomial, SymmetricPolynomial};
pub use table::{IntegerTable, TableKind};
