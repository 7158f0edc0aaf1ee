//! Exact engines for long cycles in bipartite graphs whose `X` side has large
//! minimum degree, and for Berge cycles in the multihypergraphs those graphs
//! encode.
//!
//! * [`model`]: bipartite graphs, multihypergraphs, incidence and dual
//!   incidence graphs, cycle witnesses.
//! * [`cycle`] and [`berge`]: exact search for cycles covering a prescribed
//!   `X`-set, longest cycles, Hamiltonian and super-pancyclic checks.
//! * [`structure`]: 2-connectivity, condition (2), tight pairs, crossing
//!   pairs and the audits built on them.
//! * [`constructions`]: the extremal families with certificates.
//! * [`verify`]: canonical enumeration of small graph classes and exhaustive
//!   theorem checks.
//! * [`cli`]: the `pancyclic` command-line front end.

pub mod berge;
pub mod bitset;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod cycle;
pub mod error;
pub mod format;
pub mod model;
pub mod oracle;
pub mod structure;
pub mod verify;

pub use berge::BergeCycleWitness;
pub use bitset::BitSet;
pub use canon::{canonical_form, is_isomorphic, CanonLimits, CanonicalForm};
pub use error::{Error, Result};
pub use format::GraphFile;
pub use model::{BipartiteGraph, CycleWitness, Hypergraph};
