//! Perfect codes (efficient dominating sets) by exact cover over closed
//! neighborhoods, and the equality characterizations tying them to the
//! extremal parameters.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::extremal::{kappa_exact_capped, kappa_prime_exact_capped};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// An independent set dominating every outside vertex exactly once.
/// Isolated vertices are necessarily code members; on the edgeless graph
/// the code is all of `V`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PerfectCode {
    pub code: VertexSet,
}

impl PerfectCode {
    pub fn validates(&self, g: &Graph) -> bool {
        let n = g.n();
        for v in 0..n {
            let hits = g.neighbors(v).intersection(&self.code).len();
            let expected = if self.code.contains(v) { 0 } else { 1 };
            if hits != expected {
                return false;
            }
        }
        true
    }
}

/// Find a perfect code, or `None` when no exact cover of the closed
/// neighborhoods exists. Deterministic: branches on the lowest-index
/// undominated vertex, candidates in index order.
pub fn find_perfect_code(g: &Graph) -> Result<Option<PerfectCode>> {
    find_perfect_code_in(g, &VertexSet::full(g.n()))
}

/// Same search with code vertices restricted to `allowed`.
pub fn find_perfect_code_in(g: &Graph, allowed: &VertexSet) -> Result<Option<PerfectCode>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "perfect-code search requires at least one vertex".into(),
        ));
    }
    if n > crate::extremal::DEFAULT_SOLVER_CAP {
        return Err(Error::SizeCap {
            n,
            cap: crate::extremal::DEFAULT_SOLVER_CAP,
        });
    }

    fn backtrack(g: &Graph, allowed: &VertexSet, code: &mut VertexSet, dominated: &VertexSet) -> bool {
        let Some(v) = dominated.complement().min_element() else {
            return true;
        };
        // v must be dominated by exactly one code vertex from N[v]
        for u in g.closed_neighborhood(v).intersection(allowed).iter() {
            if g.closed_neighborhood(u).is_disjoint_from(dominated) {
                code.insert(u);
                if backtrack(g, allowed, code, &dominated.union(&g.closed_neighborhood(u))) {
                    return true;
                }
                code.remove(u);
            }
        }
        false
    }

    let mut code = VertexSet::empty(n);
    if backtrack(g, allowed, &mut code, &VertexSet::empty(n)) {
        let pc = PerfectCode { code };
        debug_assert!(pc.validates(g));
        Ok(Some(pc))
    } else {
        Ok(None)
    }
}

/// Both sides of the κ-equality characterization: does κ reach `nΔ/(Δ+1)`
/// exactly, and does a perfect code of maximum-degree vertices exist.
/// The two booleans must always agree.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KappaEqualityReport {
    pub kappa_hits_bound: bool,
    pub has_qualifying_code: bool,
}

pub fn check_kappa_equality(g: &Graph, cap: usize) -> Result<KappaEqualityReport> {
    let n = g.n();
    let (max_deg, _) = g.degree_stats()?;
    let (kappa, _) = kappa_exact_capped(g, cap)?;
    // exact rational equality kappa = nΔ/(Δ+1)
    let kappa_hits_bound = kappa * (max_deg + 1) == n * max_deg;
    let allowed = VertexSet::from_indices(n, (0..n).filter(|&v| g.degree(v) == max_deg));
    let has_qualifying_code = find_perfect_code_in(g, &allowed)?.is_some();
    Ok(KappaEqualityReport {
        kappa_hits_bound,
        has_qualifying_code,
    })
}

/// Both sides of the κ'-equality characterization for δ-regular graphs with
/// `n/(n−δ)` odd; outside that regime `applicable` is false and the
/// booleans are reported unconstrained.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KappaPrimeEqualityReport {
    pub applicable: bool,
    pub kappa_prime_hits_bound: bool,
    pub complement_has_code: bool,
}

pub fn check_kappa_prime_equality(g: &Graph, cap: usize) -> Result<KappaPrimeEqualityReport> {
    let n = g.n();
    let (_, min_deg) = g.degree_stats()?;
    let codeg = n - min_deg;
    let applicable = g.is_regular() && n % codeg == 0 && (n / codeg) % 2 == 1;
    let (kappa_prime, _) = kappa_prime_exact_capped(g, cap)?;
    let kappa_prime_hits_bound = kappa_prime * codeg == n;
    let complement_has_code = find_perfect_code(&g.complement())?.is_some();
    Ok(KappaPrimeEqualityReport {
        applicable,
        kappa_prime_hits_bound,
        complement_has_code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c6_has_code_0_3() {
        let pc = find_perfect_code(&Graph::cycle(6)).unwrap().unwrap();
        assert_eq!(pc.code, VertexSet::from_indices(6, [0, 3]));
        assert!(pc.validates(&Graph::cycle(6)));
    }

    #[test]
    fn c4_has_no_code() {
        assert!(find_perfect_code(&Graph::cycle(4)).unwrap().is_none());
        // exhaustive confirmation over all 16 subsets
        let g = Graph::cycle(4);
        for mask in 0u64..16 {
            let cand = PerfectCode {
                code: VertexSet::from_mask(4, mask),
            };
            assert!(!cand.validates(&g));
        }
    }

    #[test]
    fn k4_single_vertex_code() {
        let pc = find_perfect_code(&Graph::complete(4)).unwrap().unwrap();
        assert_eq!(pc.code.len(), 1);
    }

    #[test]
    fn edgeless_code_is_everything() {
        let pc = find_perfect_code(&Graph::empty(3)).unwrap().unwrap();
        assert_eq!(pc.code, VertexSet::full(3));
    }

    #[test]
    fn kappa_equality_examples() {
        let cap = crate::extremal::DEFAULT_SOLVER_CAP;
        let r = check_kappa_equality(&Graph::cycle(6), cap).unwrap();
        assert_eq!((r.kappa_hits_bound, r.has_qualifying_code), (true, true));
        let r = check_kappa_equality(&Graph::cycle(5), cap).unwrap();
        assert_eq!((r.kappa_hits_bound, r.has_qualifying_code), (false, false));
        let r = check_kappa_equality(&Graph::complete(4), cap).unwrap();
        assert_eq!((r.kappa_hits_bound, r.has_qualifying_code), (true, true));
    }

    #[test]
    fn kappa_prime_equality_examples() {
        let cap = crate::extremal::DEFAULT_SOLVER_CAP;
        // complement of C6 is 3-regular on 6 vertices: 6/3 = 2 even, not applicable
        let r = check_kappa_prime_equality(&Graph::cycle(6).complement(), cap).unwrap();
        assert!(!r.applicable);
        // edgeless on 3: 0-regular, 3/3 = 1 odd; complement K3 has a code
        let r = check_kappa_prime_equality(&Graph::empty(3), cap).unwrap();
        assert!(r.applicable);
        assert_eq!((r.kappa_prime_hits_bound, r.complement_has_code), (true, true));
        // K3: 2-regular, 3/1 = 3 odd; complement is edgeless, code = V
        let r = check_kappa_prime_equality(&Graph::complete(3), cap).unwrap();
        assert!(r.applicable);
        assert_eq!((r.kappa_prime_hits_bound, r.complement_has_code), (true, true));
    }
}
