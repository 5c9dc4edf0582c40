//! Waiting times for the emergence of a k-mer in a random sequence that evolves
//! by single-letter substitutions.
//!
//! A sequence `S(0)` of length `n` is drawn letter by letter from a distribution
//! `nu` and conditioned on avoiding a word `b`; one generation later every letter
//! has mutated independently according to a substitution matrix `P(1)`. The
//! probability `p_n` that `b` now occurs drives a geometric waiting time with
//! mean `1/p_n`. The crate computes `p_n` three ways:
//!
//! * [`evolution::bv_probability`]: inclusion-exclusion that ignores self-overlap;
//! * [`evolution::bnn_probability`]: a weighted product of Knuth-Morris-Pratt automata;
//! * [`evolution::clump_probability`]: expected counts of putative-hit positions,
//!   obtained from the bivariate generating function `F_b(z,t)` of texts avoiding
//!   `b`, with `t` marking positions where one substitution would create `b`.
//!
//! `F_b(z,t)` itself is built exactly twice over: by clump decomposition of the
//! neighbour set `d(b)` ([`languages`]) and by a transfer matrix on the clump
//! automaton ([`automata`]). The [`oracle`] module enumerates texts to certify both.

pub mod automata;
pub mod cli;
mod error;
pub mod evolution;
pub mod gfcore;
pub mod languages;
pub mod numeric;
pub mod oracle;
pub mod words;

pub use error::{Error, Result};
pub use gfcore::{Poly, RFMatrix, RatFun, Rational, UPoly};
pub use words::{Alphabet, HitFilter, MutationType, Word, WordSet};
