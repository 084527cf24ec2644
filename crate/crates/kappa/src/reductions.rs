//! Executable reduction constructions from perfect-code on cubic graphs to
//! the decision problems on the extremal parameters, with exact
//! small-instance verification of each construction's iff claim.

use crate::error::{Error, Result};
use crate::extremal::{kappa_exact_capped, kappa_prime_exact_capped, kappa_q_capped};
use crate::graph::Graph;
use crate::perfect_code::find_perfect_code;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Problem {
    /// Decide κ(G) >= k.
    KappaGe,
    /// Decide κ'(G) <= k.
    KappaPrimeLe,
    /// Decide κ_Q(G) <= k.
    QKappa,
}

/// A constructed decision instance, self-describing for debuggability.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecisionInstance {
    pub problem: Problem,
    pub graph: Graph,
    pub k: usize,
    pub provenance: String,
}

fn require_cubic(g: &Graph) -> Result<()> {
    if g.degree_stats()? != (3, 3) {
        return Err(Error::InvalidParameter("source graph must be 3-regular".into()));
    }
    if g.n() % 4 != 0 {
        return Err(Error::InvalidParameter(
            "source order must be divisible by 4 (target value 3n/4 must be integral)".into(),
        ));
    }
    Ok(())
}

/// Perfect code on a cubic graph `g` (4 | n) holds iff κ(g) >= 3n/4.
pub fn reduce_pc_to_kappa_ge(g: &Graph) -> Result<DecisionInstance> {
    require_cubic(g)?;
    let n = g.n();
    Ok(DecisionInstance {
        problem: Problem::KappaGe,
        graph: g.clone(),
        k: 3 * n / 4,
        provenance: format!("perfect-code source on {n} vertices, threshold 3n/4"),
    })
}

/// Perfect code on a cubic graph `g` (4 | n) holds iff κ' of the complement
/// of `g` (with a K4 added first when n/4 is even) equals n'/4, which is the
/// hard lower bound n'/(n'−δ) of that complement.
pub fn reduce_pc_to_kappa_prime_le(g: &Graph) -> Result<DecisionInstance> {
    require_cubic(g)?;
    let n = g.n();
    let (padded, note) = if (n / 4) % 2 == 1 {
        (g.clone(), "no gadget (n/4 odd)".to_string())
    } else {
        let mut edges = g.edges();
        for (u, v) in Graph::complete(4).edges() {
            edges.push((n + u, n + v));
        }
        (
            Graph::from_edge_list(n + 4, &edges)?,
            "K4 gadget added (n/4 even)".to_string(),
        )
    };
    let n_padded = padded.n();
    Ok(DecisionInstance {
        problem: Problem::KappaPrimeLe,
        graph: padded.complement(),
        k: n_padded / 4,
        provenance: format!("perfect-code source on {n} vertices, {note}, complement taken"),
    })
}

/// κ_Q of `k` disjoint copies of `g` is at most kn−k iff κ'(g) >= k.
pub fn reduce_to_qkappa(g: &Graph, k: usize) -> Result<DecisionInstance> {
    if k == 0 {
        return Err(Error::InvalidParameter("copy count k must be >= 1".into()));
    }
    let n = g.n();
    Ok(DecisionInstance {
        problem: Problem::QKappa,
        graph: g.disjoint_copies(k)?,
        k: k * n - k,
        provenance: format!("{k} copies of a {n}-vertex source, threshold k(n-1)"),
    })
}

/// The two sides of a reduction's iff claim, both computed exactly.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReductionCheck {
    pub source_holds: bool,
    pub target_holds: bool,
}

impl ReductionCheck {
    pub fn agrees(&self) -> bool {
        self.source_holds == self.target_holds
    }
}

pub fn check_reduction(inst: &DecisionInstance, source: &Graph, cap: usize) -> Result<ReductionCheck> {
    let (source_holds, target_holds) = match inst.problem {
        Problem::KappaGe => {
            let code = find_perfect_code(source)?.is_some();
            let (kappa, _) = kappa_exact_capped(&inst.graph, cap)?;
            (code, kappa >= inst.k)
        }
        Problem::KappaPrimeLe => {
            let code = find_perfect_code(source)?.is_some();
            let (kappa_prime, _) = kappa_prime_exact_capped(&inst.graph, cap)?;
            // <= k coincides with = k: k is the complement's hard lower bound
            (code, kappa_prime == inst.k)
        }
        Problem::QKappa => {
            let copies = inst.graph.n() / source.n();
            let (kappa_prime, _) = kappa_prime_exact_capped(source, cap)?;
            let q = kappa_q_capped(&inst.graph, cap)?;
            (kappa_prime >= copies, q <= inst.k)
        }
    };
    Ok(ReductionCheck {
        source_holds,
        target_holds,
    })
}

/// True when the constructed instance's decision matches the source
/// property exactly.
pub fn verify_reduction(inst: &DecisionInstance, source: &Graph, cap: usize) -> Result<bool> {
    Ok(check_reduction(inst, source, cap)?.agrees())
}
