//! Edge-non-decreasing rewriting of star-like satellite spectra.
//!
//! A spectrum records how many satellites of each size hang off the
//! `K_{l-1}^r` nucleus. Four operations rewrite it while keeping the vertex
//! count fixed and never losing edges; run to a fixpoint they reach the
//! spectrum of the canonical maximum star-like hypergraph.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::binomial::checked_binomial;
use crate::constructions::{msh_spec, StarLikeSpec};
use crate::params::{params, ParamError, ParamPair};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatelliteSpectrum {
    pub k: usize,
    pub r: usize,
    pub l: usize,
    /// `counts[i]` = number of satellites on `i` vertices; only `i = 1`
    /// and `r <= i <= l-1` may be nonzero.
    pub counts: Vec<usize>,
    #[serde(skip)]
    pair: ParamPair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Op {
    Split { i: usize },
    Group1 { i: usize, j: usize },
    Group2 { i0: usize },
    Group3,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Split { i } => write!(f, "split({i})"),
            Op::Group1 { i, j } => write!(f, "group1({i},{j})"),
            Op::Group2 { i0 } => write!(f, "group2({i0})"),
            Op::Group3 => write!(f, "group3"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalizeError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("{op} not applicable: {detail}")]
    Precondition { op: Op, detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    #[serde(flatten)]
    pub op: Op,
    pub delta: i128,
    pub edges: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normalized {
    pub initial_edges: u128,
    pub trace: Vec<Step>,
    #[serde(rename = "final")]
    pub result: SatelliteSpectrum,
}

impl SatelliteSpectrum {
    /// Builds a spectrum from a list of satellite sizes.
    pub fn from_sizes(k: usize, r: usize, l: usize, sizes: &[usize]) -> Result<Self, ParamError> {
        StarLikeSpec { k, r, l, satellites: sizes.to_vec() }.validate()?;
        let mut counts = vec![0; l];
        for &i in sizes {
            counts[i] += 1;
        }
        Ok(SatelliteSpectrum { k, r, l, counts, pair: params(k as u64, r as u64)? })
    }

    pub fn from_spec(spec: &StarLikeSpec) -> Result<Self, ParamError> {
        Self::from_sizes(spec.k, spec.r, spec.l, &spec.satellites)
    }

    /// Satellite sizes in ascending order.
    pub fn sizes(&self) -> Vec<usize> {
        self.counts.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i, c)).collect()
    }

    pub fn to_spec(&self) -> StarLikeSpec {
        StarLikeSpec { k: self.k, r: self.r, l: self.l, satellites: self.sizes() }
    }

    pub fn vertex_count(&self) -> usize {
        self.l - 1 + self.counts.iter().enumerate().map(|(i, &c)| i * c).sum::<usize>()
    }

    pub fn s(&self) -> usize {
        self.pair.s as usize
    }

    pub fn t(&self) -> usize {
        self.pair.t as usize
    }

    pub fn count(&self, i: usize) -> usize {
        self.counts.get(i).copied().unwrap_or(0)
    }
}

fn overflow() -> ParamError {
    ParamError::Overflow("spectrum edges")
}

fn c(n: usize, k: usize) -> Result<u128, ParamError> {
    checked_binomial(n as u64, k as u64).ok_or_else(overflow)
}

/// Edges of any star-like hypergraph with this spectrum: the nucleus, plus
/// `k + C(i, r)` per satellite on `i` vertices.
pub fn spectrum_edges(sp: &SatelliteSpectrum) -> Result<u128, ParamError> {
    let k = sp.k as u128;
    let mut total = c(sp.l - 1, sp.r)?;
    for (i, &m) in sp.counts.iter().enumerate().filter(|&(_, &m)| m > 0) {
        let per = c(i, sp.r)?.checked_add(k).ok_or_else(overflow)?;
        let part = per.checked_mul(m as u128).ok_or_else(overflow)?;
        total = total.checked_add(part).ok_or_else(overflow)?;
    }
    Ok(total)
}

fn reject(op: Op, detail: String) -> NormalizeError {
    NormalizeError::Precondition { op, detail }
}

/// Applies one operation, returning the new spectrum and its edge gain.
pub fn apply_op(sp: &SatelliteSpectrum, op: Op) -> Result<(SatelliteSpectrum, i128), NormalizeError> {
    let (s, l, r) = (sp.s(), sp.l, sp.r);
    let mut next = sp.clone();
    match op {
        Op::Split { i } => {
            if !(r <= i && i <= s && i < l) || sp.count(i) == 0 {
                return Err(reject(
                    op,
                    format!("need r <= i <= s and S_{i} >= 1 (r={r}, s={s}, S_{i}={})", sp.count(i)),
                ));
            }
            next.counts[i] -= 1;
            next.counts[1] += i;
        }
        Op::Group1 { i, j } => {
            let have = if i == j { sp.count(i) >= 2 } else { sp.count(i) >= 1 && sp.count(j) >= 1 };
            if !(s < i && i <= j && j + 1 < l) || !have {
                return Err(reject(
                    op,
                    format!(
                        "need s < i <= j < l-1 with both satellites present (s={s}, l={l}, S_{i}={}, S_{j}={})",
                        sp.count(i),
                        sp.count(j)
                    ),
                ));
            }
            next.counts[i] -= 1;
            next.counts[i - 1] += 1;
            next.counts[j] -= 1;
            next.counts[j + 1] += 1;
        }
        Op::Group2 { i0 } => {
            if !(s < i0 && i0 + 1 < l) || sp.count(1) == 0 || sp.count(i0) == 0 {
                return Err(reject(
                    op,
                    format!(
                        "need s < i0 < l-1, S_1 >= 1, S_{i0} >= 1 (s={s}, l={l}, S_1={}, S_{i0}={})",
                        sp.count(1),
                        sp.count(i0)
                    ),
                ));
            }
            next.counts[1] -= 1;
            next.counts[i0] -= 1;
            next.counts[i0 + 1] += 1;
        }
        Op::Group3 => {
            if !(l - 1 > s && sp.count(1) > s) {
                return Err(reject(op, format!("need l-1 > s and S_1 > s (l={l}, s={s}, S_1={})", sp.count(1))));
            }
            let singles = sp.count(1);
            let (p1, q1) = (singles / (l - 1), singles % (l - 1));
            next.counts[l - 1] += p1;
            if q1 <= s {
                next.counts[1] = q1;
            } else {
                next.counts[1] = 0;
                next.counts[q1] += 1;
            }
        }
    }
    let before = spectrum_edges(sp)?;
    let after = spectrum_edges(&next)?;
    let delta = i128::try_from(after).map_err(|_| overflow())? - i128::try_from(before).map_err(|_| overflow())?;
    Ok((next, delta))
}

/// Every operation whose precondition holds, in priority order.
pub fn enabled_ops(sp: &SatelliteSpectrum) -> Vec<Op> {
    let (s, l, r) = (sp.s(), sp.l, sp.r);
    let mut ops: Vec<Op> = (r..l.min(s + 1)).filter(|&i| sp.count(i) > 0).map(|i| Op::Split { i }).collect();
    let mid: Vec<usize> = (s + 1..l.saturating_sub(1)).filter(|&i| sp.count(i) > 0).collect();
    for &i in &mid {
        for &j in mid.iter().rev().filter(|&&j| j >= i) {
            if j > i || sp.count(i) >= 2 {
                ops.push(Op::Group1 { i, j });
            }
        }
    }
    if sp.count(1) > 0 {
        ops.extend(mid.iter().map(|&i0| Op::Group2 { i0 }));
    }
    if l - 1 > s && sp.count(1) > s {
        ops.push(Op::Group3);
    }
    ops
}

/// Runs operations to a fixpoint, choosing with `pick` among the enabled ones.
pub fn normalize_by(
    sp: &SatelliteSpectrum,
    mut pick: impl FnMut(&[Op]) -> usize,
) -> Result<Normalized, NormalizeError> {
    let initial_edges = spectrum_edges(sp)?;
    let mut cur = sp.clone();
    let mut trace = Vec::new();
    loop {
        let ops = enabled_ops(&cur);
        if ops.is_empty() {
            return Ok(Normalized { initial_edges, trace, result: cur });
        }
        let op = ops[pick(&ops)];
        let (next, delta) = apply_op(&cur, op)?;
        cur = next;
        trace.push(Step { op, delta, edges: spectrum_edges(&cur)? });
    }
}

/// Fixpoint under the priority Split > Group1 (smallest `i`, then largest
/// `j`) > Group2 > Group3.
pub fn normalize(sp: &SatelliteSpectrum) -> Result<Normalized, NormalizeError> {
    normalize_by(sp, |_| 0)
}

/// Spectrum of the canonical maximum star-like hypergraph on `n` vertices.
pub fn msh_spectrum(n: usize, k: usize, l: usize, r: usize) -> Result<SatelliteSpectrum, ParamError> {
    SatelliteSpectrum::from_spec(&msh_spec(n, k, l, r)?)
}
