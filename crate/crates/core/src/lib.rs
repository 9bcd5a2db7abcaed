//! Exact symbolic computation of the triply graded (Khovanov–Rozansky) homology
//! Poincaré series of `(n,n)` torus links and related q,t-combinatorics.
//!
//! The crate is organised in layers:
//!
//! * [`polycore`]: sparse Laurent polynomials in `q, a, t` on a quarter-integer
//!   exponent lattice, rational functions with factored binomial denominators,
//!   power-series truncation, substitution and canonical serialization.
//! * [`seqrec`]: the binary-sequence recursions computing `f_v` and its
//!   normalisation `f̃_v = (1-q)^k f_v`, by two independent routes.
//! * [`closedform`]: direct enumeration of the Hochschild-degree-zero series.
//! * [`hilb`]: partitions, standard tableaux and the flag-Hilbert-scheme
//!   tableau sum.
//! * [`linkinv`]: superpolynomial normalisation, specialisations and the
//!   q,t-Catalan cross-check.
//! * [`verify`]: theorem and conjecture check suites, and [`cli`] on top.

pub mod cli;
pub mod closedform;
pub mod error;
pub mod hilb;
pub mod linkinv;
pub mod polycore;
pub mod seqrec;
pub mod verify;

pub use error::{Error, Result};
pub use polycore::{BinomialFactor, Exponent, Format, FracPoly, Polynomial, SubstRule};
