//! Exact multiplicities, Hilbert series and associated primes of (powers of)
//! squarefree monomial ideals.
//!
//! The crate has two independent routes to the multiplicity e0 of S/I:
//! closed-form counting over the minimal primes ([`formulas`], [`cycles`])
//! and a Hilbert series engine that expands the numerator K-polynomial by
//! pivot recursion ([`hilbert`]). Agreement of the two routes on the same
//! input is the correctness argument, and the test suites of the modules
//! cross-check them against brute-force enumeration oracles.
//!
//! All counts and coefficients are arbitrary-precision integers; nothing in
//! the public API rounds or approximates.

pub mod cycles;
pub mod error;
pub mod formulas;
pub mod hilbert;
pub mod monomial;
pub mod primes;
pub mod sampling;

pub use error::{Error, Result};
pub use hilbert::{KPolynomial, PivotRule, SeriesProfile};
pub use monomial::{Monomial, MonomialIdeal, PrimeSupport};
pub use primes::{DimProfile, PrimeList};
