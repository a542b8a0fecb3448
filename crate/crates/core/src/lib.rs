//! Exact computational algebra for quadratic algebras and their Koszul duals,
//! specialised to the pure virtual braid family.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is computed over
//! arbitrary-precision rationals; there is no floating point anywhere.
//!
//! Layout:
//!
//! * [`word`], [`free`], [`linalg`]: words in indexed generators, the free
//!   associative algebra, and sparse exact linear algebra.
//! * [`quad`]: quadratic presentations, quadratic duals, graded dimensions,
//!   the degree-3 intersection `R⊗V ∩ V⊗R` and the Euler-characteristic test.
//! * [`family`]: the `pvb_n`, `pfb_n` and `pb_n` presentations, their group
//!   relators and the comparison map `a_ij ↦ r_ij + r_ji`.
//! * [`wedge`], [`prune`], [`lex`], [`forests`], [`combinatorics`]: the
//!   exterior-algebra model of the dual algebra, its graph-indexed bases and
//!   the two rewriting systems (pruning and the quadratic Gröbner basis).
//! * [`syzygy`], [`pvh`]: relator modules, global and infinitesimal syzygies
//!   and the degree-2/degree-3 quadraticity verdict.
//! * [`report`]: structured verification reports.
#![no_std]

extern crate alloc;

pub mod combinatorics;
pub mod error;
pub mod family;
pub mod forests;
pub mod free;
pub mod lex;
pub mod linalg;
pub mod prune;
pub mod pvh;
pub mod quad;
pub mod report;
pub mod syzygy;
pub mod wedge;
pub mod word;

pub use error::{Error, Result};
pub use family::{AlgebraFamily, FamilyTag, RelatorSymbol};
pub use free::FreeElement;
pub use quad::{DualPresentation, QuadraticPresentation};
pub use report::{Check, Value, Verdict, VerificationReport};
pub use wedge::{Monomial, WedgeElement, WedgeMonomial};
pub use word::{Generator, Word};

/// Arbitrary-precision rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Default cap on the dimension of the largest tensor space a job may touch.
pub const DEFAULT_BUDGET: usize = 200_000;
