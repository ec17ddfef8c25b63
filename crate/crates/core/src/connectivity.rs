//! Global edge-connectivity `κ'(H)`, canonical minimum cuts, and the
//! decomposition into maximal vertex sets inducing `(k+1)`-edge-connected
//! subhypergraphs.
//!
//! Witness sides always contain vertex 0; among all minimum cuts the side
//! whose sorted vertex list is lexicographically smallest is reported.

use serde::Serialize;
use thiserror::Error;

use crate::flow::CutNetwork;
use crate::hypergraph::{CutWitness, Hypergraph};

/// Largest vertex count `kappa_oracle` will enumerate.
pub const ORACLE_MAX_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// `None` only when `n <= 1`.
    pub witness: Option<CutWitness>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("exhaustive enumeration refused: n={n} exceeds {cap}")]
    TooLarge { n: usize, cap: usize },
}

fn degenerate() -> ConnectivityResult {
    ConnectivityResult { kappa: 0, witness: None }
}

fn witness_from(h: &Hypergraph, inside: &[bool]) -> CutWitness {
    let side: Vec<usize> = (0..h.n()).filter(|&v| inside[v]).collect();
    h.cut_value(&side).expect("witness side is a nonempty proper subset")
}

/// Exact `κ'(H)` through `n - 1` max-flow computations from vertex 0.
///
/// For `n < 2` the result is `kappa = 0` without a witness.
pub fn kappa_flow(h: &Hypergraph) -> ConnectivityResult {
    let n = h.n();
    if n < 2 {
        return degenerate();
    }
    let mut net = CutNetwork::new(n, h.edges());
    let mut kappa = h.degree_list().into_iter().min().unwrap_or(0);
    for v in 1..n {
        let (f, _) = net.min_cut(&[0], &[v], kappa);
        kappa = kappa.min(f);
    }

    // Grow the lexicographically smallest minimum side one vertex at a time:
    // stop as soon as the current prefix is itself a minimum side, otherwise
    // take the next vertex whenever some minimum side still extends the choice.
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut chosen = vec![0];
    let mut rejected: Vec<usize> = Vec::new();
    for v in 1..n {
        if h.cut_size(&inside) == kappa {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(v);
        let feasible = if rejected.is_empty() {
            (v + 1..n).any(|w| net.min_cut(&trial, &[w], kappa + 1).0 == kappa)
        } else {
            net.min_cut(&trial, &rejected, kappa + 1).0 == kappa
        };
        if feasible {
            inside[v] = true;
            chosen.push(v);
        } else {
            rejected.push(v);
        }
    }
    let witness = witness_from(h, &inside);
    debug_assert_eq!(witness.value, kappa);
    ConnectivityResult { kappa, witness: Some(witness) }
}

pub(crate) fn edge_masks(h: &Hypergraph) -> Vec<u32> {
    h.edges().iter().map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v))).collect()
}

fn mask_to_vec(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// `κ'(H)` by direct minimization of `d_H(X)` over every side containing
/// vertex 0. Refuses `n > ORACLE_MAX_VERTICES`.
pub fn kappa_oracle(h: &Hypergraph) -> Result<ConnectivityResult, ConnectivityError> {
    let n = h.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(ConnectivityError::TooLarge { n, cap: ORACLE_MAX_VERTICES });
    }
    if n < 2 {
        return Ok(degenerate());
    }
    let masks = edge_masks(h);
    let full: u32 = (1 << n) - 1;
    let mut best: Option<(usize, Vec<usize>)> = None;
    for rest in 0..(1u32 << (n - 1)) {
        let side = 1 | (rest << 1);
        if side == full {
            continue;
        }
        let value = masks.iter().filter(|&&m| m & side != 0 && m & !side != 0).count();
        let better = match &best {
            None => true,
            Some((b, _)) if value < *b => true,
            Some((b, list)) if value == *b => mask_to_vec(side, n) < *list,
            _ => false,
        };
        if better {
            best = Some((value, mask_to_vec(side, n)));
        }
    }
    let (kappa, side) = best.expect("n >= 2 has at least one side");
    let witness = h.cut_value(&side).expect("proper side");
    Ok(ConnectivityResult { kappa, witness: Some(witness) })
}

/// Some side with `d(X) < threshold`, or `None` when `κ'(H) >= threshold`.
/// Requires `n >= 2`.
pub(crate) fn cut_below(h: &Hypergraph, threshold: usize) -> Option<Vec<bool>> {
    let n = h.n();
    debug_assert!(n >= 2);
    let deg = h.degree_list();
    if let Some(v) = (0..n).find(|&v| deg[v] < threshold) {
        let mut side = vec![false; n];
        side[v] = true;
        return Some(side);
    }
    let mut net = CutNetwork::new(n, h.edges());
    (1..n).find_map(|v| net.min_cut(&[0], &[v], threshold).1)
}

/// Iteratively drops vertices of degree `<= k` inside `H[set]`; such a
/// vertex belongs to no `(k+1)`-edge-connected piece with two or more vertices.
pub(crate) fn peel(h: &Hypergraph, set: &[usize], k: usize) -> Vec<usize> {
    let mut alive = vec![false; h.n()];
    for &v in set {
        alive[v] = true;
    }
    let mut live_edges: Vec<usize> = (0..h.edge_count()).filter(|&i| h.edges()[i].iter().all(|&v| alive[v])).collect();
    loop {
        let mut deg = vec![0usize; h.n()];
        for &i in &live_edges {
            for &v in h.edges()[i].iter() {
                deg[v] += 1;
            }
        }
        let doomed: Vec<usize> = (0..h.n()).filter(|&v| alive[v] && deg[v] <= k).collect();
        if doomed.is_empty() {
            break;
        }
        for v in doomed {
            alive[v] = false;
        }
        live_edges.retain(|&i| h.edges()[i].iter().all(|&v| alive[v]));
    }
    (0..h.n()).filter(|&v| alive[v]).collect()
}

/// Maximal vertex sets `Y`, `|Y| >= 2`, with `κ'(H[Y]) >= k + 1`.
///
/// Sets are disjoint, each sorted, and listed by smallest vertex.
pub fn high_components(h: &Hypergraph, k: usize) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    let mut pending = vec![(0..h.n()).collect::<Vec<usize>>()];
    while let Some(set) = pending.pop() {
        let core = peel(h, &set, k);
        if core.len() < 2 {
            continue;
        }
        let sub = h.induced(&core).expect("subset of V(H)");
        match cut_below(&sub.graph, k + 1) {
            None => found.push(core),
            Some(side) => {
                let mut a = Vec::new();
                let mut b = Vec::new();
                for (&v, &inside) in sub.mapping.iter().zip(&side) {
                    if inside {
                        a.push(v)
                    } else {
                        b.push(v)
                    }
                }
                pending.push(a);
                pending.push(b);
            }
        }
    }
    found.sort();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial;
    use itertools::Itertools;

    fn join(a: &Hypergraph, b: &Hypergraph, links: &[Vec<usize>]) -> Hypergraph {
        let shift = a.n();
        let mut edges: Vec<Vec<usize>> = a.edges().iter().map(|e| e.to_vec()).collect();
        edges.extend(b.edges().iter().map(|e| e.iter().map(|v| v + shift).collect()));
        edges.extend(links.iter().cloned());
        Hypergraph::build(a.n() + b.n(), a.r(), edges).unwrap()
    }

    #[test]
    fn complete_hypergraph_kappa() {
        let k53 = Hypergraph::complete(5, 3).unwrap();
        let res = kappa_flow(&k53);
        assert_eq!(res.kappa, 6);
        assert_eq!(res.witness.as_ref().unwrap().side, vec![0]);
        assert_eq!(kappa_oracle(&k53).unwrap(), res);
        for n in 2..=9 {
            for r in 2..=n {
                let h = Hypergraph::complete(n, r).unwrap();
                assert_eq!(kappa_flow(&h).kappa, binomial(n - 1, r - 1), "K_{n}^{r}");
            }
        }
    }

    #[test]
    fn small_degenerate_cases() {
        assert_eq!(kappa_flow(&Hypergraph::complete(2, 2).unwrap()).kappa, 1);
        assert_eq!(kappa_oracle(&Hypergraph::complete(2, 2).unwrap()).unwrap().kappa, 1);
        let e3 = Hypergraph::empty(3, 2).unwrap();
        assert_eq!(kappa_oracle(&e3).unwrap().kappa, 0);
        assert_eq!(kappa_flow(&e3).witness.unwrap().side, vec![0]);
        let one = Hypergraph::empty(1, 2).unwrap();
        assert_eq!(kappa_flow(&one), ConnectivityResult { kappa: 0, witness: None });
    }

    #[test]
    fn disjoint_union_is_disconnected() {
        let k43 = Hypergraph::complete(4, 3).unwrap();
        let h = join(&k43, &k43, &[]);
        let res = kappa_flow(&h);
        assert_eq!(res.kappa, 0);
        assert_eq!(res.witness.unwrap().side, vec![0, 1, 2, 3]);
    }

    #[test]
    fn oracle_refuses_large_inputs() {
        let h = Hypergraph::empty(21, 2).unwrap();
        assert_eq!(kappa_oracle(&h), Err(ConnectivityError::TooLarge { n: 21, cap: 20 }));
    }

    #[test]
    fn canonical_witness_prefers_prefix_sides() {
        // path 0-1-2-3: cuts {0}, {0,1}, {0,1,2} all have value 1
        let p = Hypergraph::build(4, 2, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(kappa_flow(&p).witness.unwrap().side, vec![0]);
        // star centered at 0: only sides omitting one leaf have value 1
        let s = Hypergraph::build(4, 2, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        let w = kappa_flow(&s).witness.unwrap();
        assert_eq!(w.side, vec![0, 1, 2]);
        assert_eq!(kappa_oracle(&s).unwrap().witness.unwrap(), w);
    }

    #[test]
    fn components_of_complete() {
        let k63 = Hypergraph::complete(6, 3).unwrap();
        assert_eq!(high_components(&k63, 3), vec![(0..6).collect::<Vec<_>>()]);
        assert!(high_components(&k63, 10).is_empty());
    }

    #[test]
    fn components_across_a_thin_bridge() {
        let k53 = Hypergraph::complete(5, 3).unwrap();
        let h = join(&k53, &k53, &[vec![0, 1, 5], vec![2, 6, 7]]);
        assert_eq!(kappa_flow(&h).kappa, 2);
        let comps = high_components(&h, 3);
        assert_eq!(comps, vec![(0..5).collect::<Vec<_>>(), (5..10).collect()]);
    }

    #[test]
    fn peel_removes_low_degree_chains() {
        let k4 = Hypergraph::complete(4, 2).unwrap();
        let h = join(&k4, &Hypergraph::empty(2, 2).unwrap(), &[vec![0, 4], vec![1, 4], vec![4, 5]]);
        assert_eq!(peel(&h, &(0..6).collect_vec(), 2), vec![0, 1, 2, 3]);
        assert_eq!(peel(&h, &(0..6).collect_vec(), 3), Vec::<usize>::new());
    }
}
