//! Exact computation of the extremal accessing / non-accessing parameters
//! of simple graphs: the largest non-accessing set size, the smallest
//! accessing set size, and their combination that sets the threshold of
//! graph-based secret sharing schemes.
//!
//! The crate provides:
//! - polynomial-time GF(2) membership checks with verifiable certificates,
//! - exponential exact solvers with pruning plus definition-level oracles,
//! - perfect-code detection and the equality characterizations,
//! - executable reduction constructions verified on small instances,
//! - graph family generators and graph6 / edge-list I/O.

pub mod access;
pub mod bitset;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod gf2;
pub mod graph;
pub mod graph6;
pub mod perfect_code;
pub mod reductions;
pub mod suites;

pub use access::{accessing_witness, is_accessing, non_accessing_witness, Certificate, CertificateKind};
pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use extremal::{
    bounds_report, kappa_exact, kappa_oracle, kappa_prime_exact, kappa_prime_oracle, kappa_q,
    param_report, BoundLadder, ParamReport, Witness,
};
pub use graph::{FamilySpec, Graph};
pub use perfect_code::{find_perfect_code, PerfectCode};
pub use reductions::{
    reduce_pc_to_kappa_ge, reduce_pc_to_kappa_prime_le, reduce_to_qkappa, verify_reduction,
    DecisionInstance, Problem,
};
