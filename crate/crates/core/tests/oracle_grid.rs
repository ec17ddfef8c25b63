use hx_core::maximality::{property_a_with, Method};
use hx_core::sweep::default_grid;
use hx_core::{kappa_flow, Hypergraph};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_hypergraph(n: usize, r: usize, density: f64, rng: &mut ChaCha8Rng) -> Hypergraph {
    let edges: Vec<Vec<usize>> = (0..n).combinations(r).filter(|_| rng.random_bool(density)).collect();
    Hypergraph::build(n, r, edges).unwrap()
}

fn witness_is_dense(h: &Hypergraph, w: &[usize], k: usize, l: usize) -> bool {
    w.len() >= l && kappa_flow(&h.induced(w).unwrap().graph).kappa > k
}

#[test]
fn fast_and_oracle_property_a_agree_on_the_grid() {
    let mut disagreements = Vec::new();
    for (n, k, l, r) in default_grid().into_iter().filter(|&(n, ..)| n <= 11) {
        let mut rng = ChaCha8Rng::seed_from_u64((n * 1000 + k * 100 + l * 10 + r) as u64);
        for i in 0..200 {
            let density = [0.2, 0.5, 0.8][i % 3];
            let h = random_hypergraph(n, r, density, &mut rng);
            let fast = property_a_with(&h, k, l, Method::Fast).unwrap();
            let oracle = property_a_with(&h, k, l, Method::Oracle).unwrap();
            let witnesses_ok = [&fast, &oracle]
                .iter()
                .all(|p| p.violating_subset.as_deref().is_none_or(|w| witness_is_dense(&h, w, k, l)));
            if fast.holds != oracle.holds || !witnesses_ok {
                disagreements.push(format!("(n,k,l,r)=({n},{k},{l},{r}) #{i}"));
            }
        }
    }
    assert!(disagreements.is_empty(), "{disagreements:?}");
}
