//! An exact-arithmetic workbench for augmented differential graded algebras
//! and coalgebras.
//!
//! The crate builds bar and cobar resolutions of small catalog algebras,
//! validates twisting cochains and homotopies, synthesizes contracting
//! homotopies by constrained linear solving, and compares the three products
//! on differential Tor (the two-sided bar product, and the two composites
//! through the cobar-bar adjunction) against an independent small-resolution
//! oracle.  All arithmetic is exact, over the rationals or a prime field.
//!
//! Layering, bottom to top:
//!
//! * [`scalar`], [`linalg`] — exact scalars and sparse elimination;
//! * [`graded`] — based graded modules, graded maps, and the Koszul sign
//!   engine (every structural sign in the crate comes from here);
//! * [`dg`], [`solve`] — complexes, (co)algebras, the hom-complex with its
//!   cup product, twisting-cochain and homotopy checkers, linear homotopy
//!   solvers;
//! * [`barcobar`], [`shuffle`], [`transfer`] — the bar/cobar functors and
//!   their universal properties, shuffle maps, homotopy transfer and the
//!   comparison map of cobar-bar tensor squares;
//! * [`twisted`], [`homology`], [`products`] — twisted tensor products,
//!   two-sided bar constructions, homology presentations, and the product
//!   pipelines on Tor;
//! * [`catalog`], [`oracle`], [`seeded`] — the input catalog, the independent
//!   Koszul-resolution oracle, and seeded generators of non-strict maps;
//! * [`report`], [`suites`] — verification suites and deterministic reports.

pub mod barcobar;
pub mod catalog;
pub mod dg;
pub mod error;
pub mod graded;
pub mod homology;
pub mod linalg;
pub mod oracle;
pub mod products;
pub mod report;
pub mod scalar;
pub mod seeded;
pub mod shuffle;
pub mod solve;
pub mod suites;
pub mod transfer;
pub mod twisted;

pub use error::Error;
pub use scalar::{Field, Scalar};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
