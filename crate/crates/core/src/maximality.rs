//! `(k,l)`-edge-maximality: checking it and generating instances.
//!
//! "Property a" is the first clause of the definition: no vertex set `Y`
//! with `|Y| >= l` induces a subhypergraph with `κ' >= k+1`. Restricting to
//! induced subhypergraphs loses nothing, since dropping edges never raises
//! a cut value.
//!
//! Two independent routes decide property a. The fast route peels
//! low-degree vertices and splits along flow-based minimum cuts
//! ([`high_components`]). The oracle route tabulates, for every vertex
//! subset `Z`, the number of edges inside `Z`; then every cut value of every
//! induced subhypergraph is `e(Y) - e(X) - e(Y \ X)`, and all pairs
//! `X ⊂ Y` are scanned.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{cut_below, edge_masks, high_components, peel, ConnectivityError, ORACLE_MAX_VERTICES};
use crate::hypergraph::{Edge, Hypergraph};
use crate::params::t_param;

/// Vertex count up to which `Method::Auto`-style callers prefer the oracle.
pub const DEFAULT_ORACLE_CAP: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fast,
    Oracle,
}

impl Method {
    /// Oracle when `n <= cap`, fast otherwise.
    pub fn auto(n: usize, cap: usize) -> Method {
        if n <= cap.min(ORACLE_MAX_VERTICES) {
            Method::Oracle
        } else {
            Method::Fast
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MaximalityError {
    #[error("need k >= 1 and l >= 2 (k={k}, l={l})")]
    Params { k: usize, l: usize },
    #[error("need n >= l (n={n}, l={l})")]
    TooFewVertices { n: usize, l: usize },
    #[error("property a fails: vertices {witness:?} induce edge-connectivity above k")]
    PropertyA { witness: Vec<usize> },
    #[error(transparent)]
    Oracle(#[from] ConnectivityError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyA {
    pub holds: bool,
    /// A set of at least `l` vertices inducing `κ' >= k+1`, when `holds` is false.
    pub violating_subset: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalityReport {
    pub property_a: bool,
    pub maximal: bool,
    pub violating_subset: Option<Vec<usize>>,
    /// First complement edge (lexicographic) whose addition keeps property a.
    pub addable_edge: Option<Edge>,
    pub method: Method,
}

fn check_kl(k: usize, l: usize) -> Result<(), MaximalityError> {
    if k >= 1 && l >= 2 {
        Ok(())
    } else {
        Err(MaximalityError::Params { k, l })
    }
}

pub fn property_a(h: &Hypergraph, k: usize, l: usize) -> Result<PropertyA, MaximalityError> {
    property_a_with(h, k, l, Method::Fast)
}

pub fn property_a_with(h: &Hypergraph, k: usize, l: usize, method: Method) -> Result<PropertyA, MaximalityError> {
    check_kl(k, l)?;
    let violating_subset = match method {
        Method::Fast => high_components(h, k).into_iter().find(|c| c.len() >= l),
        Method::Oracle => SubsetTable::new(h)?.dense_subset(k, l, None),
    };
    Ok(PropertyA { holds: violating_subset.is_none(), violating_subset })
}

/// Whether `H + e` still has property a, given that `H` has it.
///
/// Any violating set of `H + e` must contain `e`, so only the piece holding
/// `e` is followed down the cut recursion.
pub fn admits_edge(h: &Hypergraph, e: &Edge, k: usize, l: usize) -> bool {
    let g = h.with_edge(e).expect("e is an absent r-subset");
    let mut set: Vec<usize> = (0..g.n()).collect();
    loop {
        let core = peel(&g, &set, k);
        if core.len() < l || !e.iter().all(|v| core.binary_search(v).is_ok()) {
            return true;
        }
        let sub = g.induced(&core).expect("subset of V(H)");
        let Some(side) = cut_below(&sub.graph, k + 1) else {
            return false;
        };
        let local = |v: &usize| core.binary_search(v).expect("e lies in core");
        let home = side[local(&e[0])];
        if e.iter().any(|v| side[local(v)] != home) {
            return true;
        }
        set = core.iter().enumerate().filter(|&(i, _)| side[i] == home).map(|(_, &v)| v).collect();
    }
}

/// `inside[Z]` = number of edges contained in vertex set `Z` (as a bitmask).
struct SubsetTable {
    n: usize,
    inside: Vec<u32>,
}

impl SubsetTable {
    fn new(h: &Hypergraph) -> Result<Self, ConnectivityError> {
        let n = h.n();
        if n > ORACLE_MAX_VERTICES {
            return Err(ConnectivityError::TooLarge { n, cap: ORACLE_MAX_VERTICES });
        }
        let mut inside = vec![0u32; 1 << n];
        for m in edge_masks(h) {
            inside[m as usize] += 1;
        }
        for bit in 0..n {
            for z in 0..inside.len() {
                if z >> bit & 1 == 1 {
                    inside[z] += inside[z ^ (1 << bit)];
                }
            }
        }
        Ok(SubsetTable { n, inside })
    }

    /// Edges inside `z`, counting `extra` (one added edge) when present.
    fn count(&self, z: u32, extra: Option<u32>) -> u32 {
        self.inside[z as usize] + extra.map_or(0, |e| u32::from(e & !z == 0))
    }

    /// `κ'(H[y]) >= k + 1`, for `|y| >= 2`.
    fn beyond(&self, y: u32, k: u32, extra: Option<u32>) -> bool {
        let total = self.count(y, extra);
        let mut bits = y;
        while bits != 0 {
            let v = bits & bits.wrapping_neg();
            if total - self.count(y ^ v, extra) <= k {
                return false;
            }
            bits ^= v;
        }
        let low = y & y.wrapping_neg();
        let rest = y ^ low;
        // every side containing the lowest vertex, other than y itself
        let mut sub = rest;
        while sub != 0 {
            sub = (sub - 1) & rest;
            let x = low | sub;
            if total - self.count(x, extra) - self.count(y ^ x, extra) <= k {
                return false;
            }
        }
        true
    }

    fn dense_subset(&self, k: usize, l: usize, extra: Option<u32>) -> Option<Vec<usize>> {
        let k = u32::try_from(k).unwrap_or(u32::MAX);
        (0..(1u32 << self.n))
            .filter(|y| y.count_ones() as usize >= l.max(2))
            .find(|&y| self.beyond(y, k, extra))
            .map(|y| (0..self.n).filter(|&v| y >> v & 1 == 1).collect())
    }
}

fn edge_mask(e: &Edge) -> u32 {
    e.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn is_kl_edge_maximal(h: &Hypergraph, k: usize, l: usize) -> Result<MaximalityReport, MaximalityError> {
    is_kl_edge_maximal_with(h, k, l, Method::Fast)
}

/// Property a for `H`, then property a must fail for `H + e` for every
/// absent r-subset `e`. With fewer than `l` vertices, maximal means complete.
pub fn is_kl_edge_maximal_with(
    h: &Hypergraph,
    k: usize,
    l: usize,
    method: Method,
) -> Result<MaximalityReport, MaximalityError> {
    check_kl(k, l)?;
    if h.n() < l {
        return Ok(MaximalityReport {
            property_a: true,
            maximal: h.is_complete(),
            violating_subset: None,
            addable_edge: h.complement_edges().next(),
            method,
        });
    }
    let report = |pa: PropertyA, addable_edge: Option<Edge>| MaximalityReport {
        property_a: pa.holds,
        maximal: pa.holds && addable_edge.is_none(),
        violating_subset: pa.violating_subset,
        addable_edge,
        method,
    };
    match method {
        Method::Fast => {
            let pa = property_a_with(h, k, l, Method::Fast)?;
            if !pa.holds {
                return Ok(report(pa, None));
            }
            let addable = h.complement_edges().find(|e| admits_edge(h, e, k, l));
            Ok(report(pa, addable))
        }
        Method::Oracle => {
            let table = SubsetTable::new(h)?;
            let dense = table.dense_subset(k, l, None);
            let pa = PropertyA { holds: dense.is_none(), violating_subset: dense };
            if !pa.holds {
                return Ok(report(pa, None));
            }
            let addable = h.complement_edges().find(|e| table.dense_subset(k, l, Some(edge_mask(e))).is_none());
            Ok(report(pa, addable))
        }
    }
}

/// Saturates `H0` by adding uniformly random admissible complement edges
/// until none remains. Returns the result and the edges in insertion order.
///
/// Candidates are drawn uniformly from a shrinking pool; a candidate that
/// fails once can never succeed later (adding edges only raises
/// connectivity), so it is discarded. This is rejection sampling and picks
/// uniformly among the admissible edges at every step.
pub fn greedy_maximalize_traced(
    h0: &Hypergraph,
    k: usize,
    l: usize,
    seed: u64,
) -> Result<(Hypergraph, Vec<Edge>), MaximalityError> {
    check_kl(k, l)?;
    if h0.n() < l {
        return Err(MaximalityError::TooFewVertices { n: h0.n(), l });
    }
    let pa = property_a(h0, k, l)?;
    if let Some(witness) = pa.violating_subset {
        return Err(MaximalityError::PropertyA { witness });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<Edge> = h0.complement_edges().collect();
    let mut g = h0.clone();
    let mut added = Vec::new();
    while !pool.is_empty() {
        let e = pool.swap_remove(rng.random_range(0..pool.len()));
        if admits_edge(&g, &e, k, l) {
            g = g.with_edge(&e).expect("pool holds absent edges");
            added.push(e);
        }
    }
    Ok((g, added))
}

pub fn greedy_maximalize(h0: &Hypergraph, k: usize, l: usize, seed: u64) -> Result<Hypergraph, MaximalityError> {
    greedy_maximalize_traced(h0, k, l, seed).map(|(g, _)| g)
}

/// Checks the structure forced on every cut of value exactly `k` in a
/// `(k,l)`-edge-maximal hypergraph (`n >= l >= t+1`):
///
/// * `|X| <= r-1`: every crossing edge contains `X`;
/// * `r <= |X| <= l-1`: `H[X]` is complete and `|X| >= t`;
/// * `|X| >= l`: `H[X]` is itself `(k,l)`-edge-maximal.
///
/// Returns one message per violated condition; empty means all hold.
pub fn cut_structure_violations(
    h: &Hypergraph,
    k: usize,
    l: usize,
    method: Method,
) -> Result<Vec<String>, MaximalityError> {
    check_kl(k, l)?;
    let n = h.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(ConnectivityError::TooLarge { n, cap: ORACLE_MAX_VERTICES }.into());
    }
    let r = h.r();
    let t = t_param(k as u64, r as u64).map_err(|_| MaximalityError::Params { k, l })? as usize;
    let masks = edge_masks(h);
    let full: u32 = (1 << n) - 1;
    let mut problems = Vec::new();
    for x in 1..full {
        let crossing: Vec<u32> = masks.iter().copied().filter(|&m| m & x != 0 && m & !x != 0).collect();
        if crossing.len() != k {
            continue;
        }
        let size = x.count_ones() as usize;
        let side: Vec<usize> = (0..n).filter(|&v| x >> v & 1 == 1).collect();
        if size < r {
            if crossing.iter().any(|&m| m & x != x) {
                problems.push(format!("side {side:?}: a crossing edge misses part of the side"));
            }
        } else if size < l {
            let sub = h.induced(&side).expect("subset").graph;
            if !sub.is_complete() {
                problems.push(format!("side {side:?}: induced part is not complete"));
            }
            if size < t {
                problems.push(format!("side {side:?}: |X|={size} below t={t}"));
            }
        } else {
            let sub = h.induced(&side).expect("subset").graph;
            if !is_kl_edge_maximal_with(&sub, k, l, method)?.maximal {
                problems.push(format!("side {side:?}: induced part is not (k,l)-edge-maximal"));
            }
        }
    }
    Ok(problems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_msh, build_two_halves};

    #[test]
    fn edgeless_has_property_a() {
        let h = Hypergraph::empty(6, 3).unwrap();
        for method in [Method::Fast, Method::Oracle] {
            assert!(property_a_with(&h, 2, 4, method).unwrap().holds);
        }
    }

    #[test]
    fn complete_graph_violates() {
        let h = Hypergraph::complete(10, 2).unwrap();
        for method in [Method::Fast, Method::Oracle] {
            let pa = property_a_with(&h, 2, 4, method).unwrap();
            assert!(!pa.holds);
            let w = pa.violating_subset.unwrap();
            assert!(w.len() >= 4);
            let sub = h.induced(&w).unwrap().graph;
            assert!(crate::kappa_flow(&sub).kappa >= 3);
        }
        let rep = is_kl_edge_maximal(&h, 2, 4).unwrap();
        assert!(!rep.property_a && !rep.maximal && rep.addable_edge.is_none());
    }

    #[test]
    fn msh_is_maximal_both_ways() {
        let h = build_msh(10, 2, 4, 2).unwrap();
        assert!(property_a(&h, 2, 4).unwrap().holds);
        for n in 4..=10 {
            let h = build_msh(n, 2, 4, 2).unwrap();
            for method in [Method::Fast, Method::Oracle] {
                let rep = is_kl_edge_maximal_with(&h, 2, 4, method).unwrap();
                assert!(rep.maximal, "n={n} {method:?}: {rep:?}");
            }
        }
    }

    #[test]
    fn two_halves_is_maximal() {
        let h = build_two_halves(4, 3, 0, 10).unwrap();
        assert!(is_kl_edge_maximal_with(&h, 3, 10, Method::Oracle).unwrap().maximal);
        assert!(is_kl_edge_maximal(&h, 3, 10).unwrap().maximal);
    }

    #[test]
    fn edgeless_is_not_maximal() {
        let h = Hypergraph::empty(5, 3).unwrap();
        for method in [Method::Fast, Method::Oracle] {
            let rep = is_kl_edge_maximal_with(&h, 2, 4, method).unwrap();
            assert!(rep.property_a && !rep.maximal);
            assert_eq!(rep.addable_edge.unwrap().vertices(), &[0, 1, 2]);
        }
    }

    #[test]
    fn below_l_means_complete() {
        let k3 = Hypergraph::complete(3, 2).unwrap();
        assert!(is_kl_edge_maximal(&k3, 2, 4).unwrap().maximal);
        let path = Hypergraph::build(3, 2, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let rep = is_kl_edge_maximal(&path, 2, 4).unwrap();
        assert!(!rep.maximal);
        assert_eq!(rep.addable_edge.unwrap().vertices(), &[0, 2]);
    }

    #[test]
    fn greedy_examples() {
        let h0 = Hypergraph::empty(10, 2).unwrap();
        let g = greedy_maximalize(&h0, 2, 4, 1).unwrap();
        assert!((15..=17).contains(&g.edge_count()), "{}", g.edge_count());
        assert!(is_kl_edge_maximal(&g, 2, 4).unwrap().maximal);
        assert_eq!(greedy_maximalize(&h0, 2, 4, 1).unwrap(), g);

        let msh = build_msh(10, 2, 4, 2).unwrap();
        assert_eq!(greedy_maximalize(&msh, 2, 4, 9).unwrap(), msh);
        let d5 = build_two_halves(4, 3, 0, 10).unwrap();
        assert_eq!(greedy_maximalize(&d5, 3, 10, 9).unwrap(), d5);
    }

    #[test]
    fn greedy_rejects_dense_start() {
        let h0 = Hypergraph::complete(6, 2).unwrap();
        assert!(matches!(greedy_maximalize(&h0, 2, 4, 0), Err(MaximalityError::PropertyA { .. })));
        let tiny = Hypergraph::empty(3, 2).unwrap();
        assert!(matches!(greedy_maximalize(&tiny, 2, 4, 0), Err(MaximalityError::TooFewVertices { .. })));
    }

    #[test]
    fn parameter_checks() {
        let h = Hypergraph::empty(4, 2).unwrap();
        assert_eq!(property_a(&h, 0, 3), Err(MaximalityError::Params { k: 0, l: 3 }));
        assert_eq!(property_a(&h, 2, 1), Err(MaximalityError::Params { k: 2, l: 1 }));
    }

    #[test]
    fn structure_of_k_cuts_in_msh() {
        let h = build_msh(9, 2, 4, 2).unwrap();
        assert!(cut_structure_violations(&h, 2, 4, Method::Oracle).unwrap().is_empty());
        // complete graph minus nothing: cuts of value 2 do not exist, trivially clean
        let k3 = Hypergraph::complete(3, 2).unwrap();
        assert!(cut_structure_violations(&k3, 5, 4, Method::Fast).unwrap().is_empty());
    }
}
