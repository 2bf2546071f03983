//! Classification engine for families of Galois covers of curves.
//!
//! The library enumerates data `(G, theta)` — a finite group together with an
//! epimorphism from an orbifold surface group, equivalently a family of
//! `G`-Galois covers `C -> C'` of a genus-`g'` curve branched over `r` points —
//! and decides which families satisfy the Shimura condition
//! `N = dim (S^2 H^0(K_C))^G = 3g' - 3 + r`.
//!
//! Everything is exact: group arithmetic over a shipped catalog of permutation
//! groups of order 2..24, character tables over cyclotomic fields with rational
//! coefficients, Chevalley-Weil multiplicities with rational weights, and
//! combinatorial double-coset counts.  No floating point enters any verdict.

pub mod catalog;
pub mod chartab;
pub mod cover;
pub mod cyclotomic;
pub mod decomp;
pub mod error;
pub mod group;
pub mod hodge;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod scan;

pub use error::Error;
