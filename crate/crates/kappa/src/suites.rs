//! Verification suites: each one turns a proved statement about the
//! parameters into an executable check over a graph corpus. A failure here
//! either falsifies a statement or reveals a solver bug, so failures carry
//! the graph6 form of the offending graph and both computed sides.

use crate::access::{accessing_witness, non_accessing_witness};
use crate::bitset::VertexSet;
use crate::enumerate::{all_graphs, cubic_corpus, random_graphs};
use crate::error::Result;
use crate::extremal::{
    kappa_exact_capped, kappa_oracle_capped, kappa_prime_exact_capped, kappa_prime_oracle_capped,
    param_report,
};
use crate::graph::Graph;
use crate::graph6::encode;
use crate::perfect_code::{check_kappa_equality, check_kappa_prime_equality, find_perfect_code};
use crate::reductions::{
    check_reduction, reduce_pc_to_kappa_ge, reduce_pc_to_kappa_prime_le, reduce_to_qkappa,
};

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub nmax: usize,
    pub samples: usize,
    pub seed: u64,
    pub solver_cap: usize,
    pub oracle_cap: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            nmax: 5,
            samples: 100,
            seed: 0,
            solver_cap: crate::extremal::DEFAULT_SOLVER_CAP,
            oracle_cap: crate::extremal::DEFAULT_ORACLE_CAP,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteKind {
    Duality,
    Bounds,
    Copies,
    Dichotomy,
    PerfectCode,
    Families,
    Reductions,
    Oracle,
}

pub const ALL_SUITES: [SuiteKind; 8] = [
    SuiteKind::Duality,
    SuiteKind::Bounds,
    SuiteKind::Copies,
    SuiteKind::Dichotomy,
    SuiteKind::PerfectCode,
    SuiteKind::Families,
    SuiteKind::Reductions,
    SuiteKind::Oracle,
];

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Duality => "duality",
            SuiteKind::Bounds => "bounds",
            SuiteKind::Copies => "copies",
            SuiteKind::Dichotomy => "dichotomy",
            SuiteKind::PerfectCode => "perfect-code",
            SuiteKind::Families => "families",
            SuiteKind::Reductions => "reductions",
            SuiteKind::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustive small graphs plus seeded random graphs above the exhaustive
/// limit, up to `nmax` vertices.
fn corpus(opts: &SuiteOptions, exhaustive_max: usize) -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 1..=opts.nmax.min(exhaustive_max) {
        graphs.extend(all_graphs(n));
    }
    for n in exhaustive_max + 1..=opts.nmax {
        graphs.extend(random_graphs(n, opts.samples, opts.seed));
    }
    graphs
}

pub fn run_suite(kind: SuiteKind, opts: &SuiteOptions) -> Result<SuiteReport> {
    match kind {
        SuiteKind::Duality => duality(opts),
        SuiteKind::Bounds => bounds(opts),
        SuiteKind::Copies => copies(opts),
        SuiteKind::Dichotomy => dichotomy(opts),
        SuiteKind::PerfectCode => perfect_code(opts),
        SuiteKind::Families => families(opts),
        SuiteKind::Reductions => reductions(opts),
        SuiteKind::Oracle => oracle(opts),
    }
}

/// κ'(G) + κ(complement of G) >= n.
fn duality(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "duality",
        checked: 0,
        failures: Vec::new(),
    };
    for g in corpus(opts, 5) {
        let (kp, _) = kappa_prime_exact_capped(&g, opts.solver_cap)?;
        let (k_comp, _) = kappa_exact_capped(&g.complement(), opts.solver_cap)?;
        report.checked += 1;
        if kp + k_comp < g.n() {
            report.failures.push(format!(
                "{}: kappa'={kp} + kappa(complement)={k_comp} < n={}",
                encode(&g),
                g.n()
            ));
        }
    }
    Ok(report)
}

/// The degree-derived bound ladder sandwiches both solved parameters.
fn bounds(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "bounds",
        checked: 0,
        failures: Vec::new(),
    };
    for g in corpus(opts, 5) {
        // param_report re-checks the ladder internally and fails hard
        match param_report(&g, opts.solver_cap) {
            Ok(_) => report.checked += 1,
            Err(e) => report.failures.push(format!("{}: {e}", encode(&g))),
        }
    }
    Ok(report)
}

/// κ(G^r) = r·κ(G) and κ'(G^r) = κ'(G).
fn copies(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "copies",
        checked: 0,
        failures: Vec::new(),
    };
    for n in 1..=opts.nmax.min(4) {
        for g in all_graphs(n) {
            let (k1, _) = kappa_exact_capped(&g, opts.solver_cap)?;
            let (p1, _) = kappa_prime_exact_capped(&g, opts.solver_cap)?;
            for r in 1..=3usize {
                let gr = g.disjoint_copies(r)?;
                let (kr, _) = kappa_exact_capped(&gr, opts.solver_cap)?;
                let (pr, _) = kappa_prime_exact_capped(&gr, opts.solver_cap)?;
                report.checked += 1;
                if kr != r * k1 || pr != p1 {
                    report.failures.push(format!(
                        "{} r={r}: kappa {kr} vs {}, kappa' {pr} vs {p1}",
                        encode(&g),
                        r * k1
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// For every B, exactly one of the access witness and the block witness
/// exists, and the one that exists validates.
fn dichotomy(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "dichotomy",
        checked: 0,
        failures: Vec::new(),
    };
    let mut graphs = Vec::new();
    for n in 1..=opts.nmax.min(4) {
        graphs.extend(all_graphs(n));
    }
    for n in 5..=opts.nmax.min(6) {
        graphs.extend(random_graphs(n, opts.samples, opts.seed));
    }
    for g in graphs {
        let n = g.n();
        for mask in 0u64..1 << n {
            let b = VertexSet::from_mask(n, mask);
            let d = accessing_witness(&g, &b);
            let c = non_accessing_witness(&g, &b);
            report.checked += 1;
            let ok = match (&d, &c) {
                (Some(d), None) => d.validates(&g, &b),
                (None, Some(c)) => c.validates(&g, &b),
                _ => false,
            };
            if !ok {
                report.failures.push(format!(
                    "{} B={b:?}: access={:?} block={:?}",
                    encode(&g),
                    d.map(|w| w.set),
                    c.map(|w| w.set)
                ));
            }
        }
    }
    Ok(report)
}

/// Perfect-code characterizations: the cycle pattern, the κ equality
/// theorem on the whole corpus, and the κ' equality theorem where it
/// applies.
fn perfect_code(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "perfect-code",
        checked: 0,
        failures: Vec::new(),
    };

    // cycles: perfect code iff 3 | n, and kappa = 2*floor(n/3), hitting the
    // 2n/3 bound exactly iff 3 | n
    for n in 3..=12usize {
        let g = Graph::cycle(n);
        let (kappa, _) = kappa_exact_capped(&g, opts.solver_cap)?;
        let code = find_perfect_code(&g)?.is_some();
        report.checked += 1;
        if kappa != 2 * (n / 3) || code != (n % 3 == 0) || (kappa * 3 == 2 * n) != (n % 3 == 0) {
            report
                .failures
                .push(format!("C{n}: kappa={kappa}, code={code}"));
        }
    }

    for g in equality_corpus()? {
        let r = check_kappa_equality(&g, opts.solver_cap)?;
        report.checked += 1;
        if r.kappa_hits_bound != r.has_qualifying_code {
            report.failures.push(format!(
                "{}: kappa hits bound = {}, qualifying code = {}",
                encode(&g),
                r.kappa_hits_bound,
                r.has_qualifying_code
            ));
        }
        let r = check_kappa_prime_equality(&g, opts.solver_cap)?;
        report.checked += 1;
        if r.applicable && r.kappa_prime_hits_bound != r.complement_has_code {
            report.failures.push(format!(
                "{}: kappa' hits bound = {}, complement code = {}",
                encode(&g),
                r.kappa_prime_hits_bound,
                r.complement_has_code
            ));
        }
    }
    Ok(report)
}

/// Named small graphs for the equality theorems: cycles, complete and
/// edgeless graphs, multipartite families, and the cubic corpus.
fn equality_corpus() -> Result<Vec<Graph>> {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 3..=8usize {
        graphs.push(Graph::cycle(n));
    }
    for n in 1..=8usize {
        graphs.push(Graph::complete(n));
        graphs.push(Graph::empty(n));
    }
    for p in 1..=4usize {
        for q in 1..=4usize {
            if p * q <= 8 {
                graphs.push(Graph::complete_multipartite(p, q)?);
            }
        }
    }
    for n in [4, 6, 8] {
        graphs.extend(cubic_corpus(n)?);
    }
    Ok(graphs)
}

/// Closed forms for the complete multipartite family, all pq <= 12.
fn families(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "families",
        checked: 0,
        failures: Vec::new(),
    };
    for q in [1usize, 3, 5] {
        for p in 1..=12 / q {
            let g = Graph::complete_multipartite(p, q)?;
            let n = p * q;
            let (kappa, _) = kappa_exact_capped(&g, opts.solver_cap)?;
            let (kp, _) = kappa_prime_exact_capped(&g, opts.solver_cap)?;
            report.checked += 1;
            if kappa != n - p || kp != q {
                report.failures.push(format!(
                    "G_{{{p},{q}}}: kappa={kappa} (want {}), kappa'={kp} (want {q})",
                    n - p
                ));
            }
        }
    }
    for q in [2usize, 4] {
        for p in 1..=12 / q {
            let g = Graph::complete_multipartite(p, q)?;
            let n = p * q;
            let (kappa, _) = kappa_exact_capped(&g, opts.solver_cap)?;
            let (kp, _) = kappa_prime_exact_capped(&g, opts.solver_cap)?;
            let kp_oracle = kappa_prime_oracle_capped(&g, opts.oracle_cap)?;
            report.checked += 1;
            // kappa' = p+q-1, the value the even-q proof actually supports
            if kappa != (n - p).max(n - q) || kp != kp_oracle || kp != p + q - 1 {
                report.failures.push(format!(
                    "G_{{{p},{q}}}: kappa={kappa} (want {}), kappa'={kp} (oracle {kp_oracle}, want {})",
                    (n - p).max(n - q),
                    p + q - 1
                ));
            }
        }
    }
    Ok(report)
}

/// Both perfect-code reductions over the cubic corpus, the copies
/// construction over all tiny graphs, and the K4 gadget soundness check.
fn reductions(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "reductions",
        checked: 0,
        failures: Vec::new(),
    };
    for n in [4usize, 8] {
        for g in cubic_corpus(n)? {
            for (label, inst) in [
                ("pc-to-kappa-ge", reduce_pc_to_kappa_ge(&g)?),
                ("pc-to-kappa-prime-le", reduce_pc_to_kappa_prime_le(&g)?),
            ] {
                let check = check_reduction(&inst, &g, opts.solver_cap)?;
                report.checked += 1;
                if !check.agrees() {
                    report.failures.push(format!(
                        "{label} on {}: source={} target={}",
                        encode(&g),
                        check.source_holds,
                        check.target_holds
                    ));
                }
            }
            // gadget soundness: adding K4 never changes code existence
            let mut edges = g.edges();
            for (u, v) in Graph::complete(4).edges() {
                edges.push((n + u, n + v));
            }
            let padded = Graph::from_edge_list(n + 4, &edges)?;
            report.checked += 1;
            if find_perfect_code(&g)?.is_some() != find_perfect_code(&padded)?.is_some() {
                report
                    .failures
                    .push(format!("K4 gadget changes code existence on {}", encode(&g)));
            }
        }
    }
    for n in 1..=opts.nmax.min(4) {
        for g in all_graphs(n) {
            for k in 1..=3usize {
                let inst = reduce_to_qkappa(&g, k)?;
                let check = check_reduction(&inst, &g, opts.solver_cap)?;
                report.checked += 1;
                if !check.agrees() {
                    report.failures.push(format!(
                        "to-qkappa k={k} on {}: source={} target={}",
                        encode(&g),
                        check.source_holds,
                        check.target_holds
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Structured solvers agree with the definition-level oracles.
fn oracle(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "oracle",
        checked: 0,
        failures: Vec::new(),
    };
    for g in corpus(opts, 4) {
        if g.n() > opts.oracle_cap {
            continue;
        }
        let (kappa, _) = kappa_exact_capped(&g, opts.solver_cap)?;
        let (kp, _) = kappa_prime_exact_capped(&g, opts.solver_cap)?;
        let ko = kappa_oracle_capped(&g, opts.oracle_cap)?;
        let po = kappa_prime_oracle_capped(&g, opts.oracle_cap)?;
        report.checked += 1;
        if kappa != ko || kp != po {
            report.failures.push(format!(
                "{}: kappa {kappa} vs oracle {ko}, kappa' {kp} vs oracle {po}",
                encode(&g)
            ));
        }
    }
    Ok(report)
}
