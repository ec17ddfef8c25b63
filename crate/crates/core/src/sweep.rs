//! Per-parameter summary rows: bounds, construction sizes and maximality.

use serde::Serialize;

use crate::binomial::binomial;
use crate::constructions::{build_msh, build_two_halves};
use crate::maximality::{is_kl_edge_maximal_with, MaximalityError, Method};
use crate::params::{bounds, t_param, Branch, ParamError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub r: u64,
    pub t: u64,
    pub s: u64,
    pub p: u64,
    pub q: u64,
    pub lower: u128,
    pub lower_branch: Branch,
    pub upper: u128,
    pub upper_branch: Branch,
    pub msh_edges: usize,
    pub msh_maximal: bool,
    pub two_halves_edges: Option<usize>,
    pub two_halves_maximal: Option<bool>,
    pub method: Method,
}

impl SweepRow {
    /// `lower <= msh_edges = upper`, and `two_halves_edges = lower` when present,
    /// with every built instance maximal.
    pub fn consistent(&self) -> bool {
        let msh_ok = self.lower <= self.msh_edges as u128 && self.msh_edges as u128 == self.upper && self.msh_maximal;
        let two_halves_ok = match (self.two_halves_edges, self.two_halves_maximal) {
            (Some(e), Some(m)) => e as u128 == self.lower && m,
            (None, None) => true,
            _ => false,
        };
        msh_ok && two_halves_ok
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Maximality(#[from] MaximalityError),
}

/// The two-halves construction's `p`, when it exists for these parameters.
pub fn two_halves_p(n: usize, k: usize, l: usize, r: usize) -> Option<usize> {
    let t = t_param(k as u64, r as u64).ok()? as usize;
    let fits = r > 2 && t > r && k == binomial(t - 1, r - 1) && k * r >= 2 * t && l >= 2 * t + 2;
    (fits && n >= l && (n - l).is_multiple_of(t)).then(|| (n - l) / t)
}

/// `method` picks the maximality check; `None` means oracle up to `cap` vertices.
pub fn sweep_row(
    n: usize,
    k: usize,
    l: usize,
    r: usize,
    method: Option<Method>,
    cap: usize,
) -> Result<SweepRow, SweepError> {
    let rep = bounds(n as u64, k as u64, l as u64, r as u64)?;
    let method = method.unwrap_or_else(|| Method::auto(n, cap));
    let msh = build_msh(n, k, l, r)?;
    let msh_maximal = is_kl_edge_maximal_with(&msh, k, l, method)?.maximal;
    let (two_halves_edges, two_halves_maximal) = match two_halves_p(n, k, l, r) {
        Some(p) => {
            let h = build_two_halves(rep.query.t as usize, r, p, l)?;
            (Some(h.edge_count()), Some(is_kl_edge_maximal_with(&h, k, l, method)?.maximal))
        }
        None => (None, None),
    };
    let q = rep.query;
    Ok(SweepRow {
        n: q.n,
        k: q.k,
        l: q.l,
        r: q.r,
        t: q.t,
        s: q.s,
        p: q.p,
        q: q.q,
        lower: rep.lower,
        lower_branch: rep.lower_branch,
        upper: rep.upper,
        upper_branch: rep.upper_branch,
        msh_edges: msh.edge_count(),
        msh_maximal,
        two_halves_edges,
        two_halves_maximal,
        method,
    })
}

/// `(n, k, l, r)` for `r ∈ {2,3}`, `k ∈ {2,3,4}`, `t+1 <= l <= t+4`,
/// `l <= n <= min(l+6, 12)`, sorted.
pub fn default_grid() -> Vec<(usize, usize, usize, usize)> {
    let mut grid = Vec::new();
    for r in [2, 3] {
        for k in [2, 3, 4] {
            let t = t_param(k as u64, r as u64).expect("small parameters") as usize;
            for l in t + 1..=t + 4 {
                for n in l..=(l + 6).min(12) {
                    grid.push((n, k, l, r));
                }
            }
        }
    }
    grid.sort_unstable();
    grid
}
