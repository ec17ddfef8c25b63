//! Deterministic builders for the extremal families.
//!
//! Vertex numbering always puts the nucleus first and appends satellites in
//! construction order.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::RngCore;
use serde::Serialize;

use crate::binomial::binomial;
use crate::hypergraph::Hypergraph;
use crate::params::{require, t_param, BoundQuery, ParamError};

/// A star-like hypergraph: nucleus `K_{l-1}^r`, and one satellite per entry
/// of `satellites` (a size of 1 or `r..=l-1`), each joined by `k` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarLikeSpec {
    pub k: usize,
    pub r: usize,
    pub l: usize,
    pub satellites: Vec<usize>,
}

impl StarLikeSpec {
    pub fn validate(&self) -> Result<(), ParamError> {
        let (k, r, l) = (self.k, self.r, self.l);
        let t = t_param(k as u64, r as u64)? as usize;
        require(l > t, || format!("l >= t+1 (l={l}, t={t})"))?;
        require(binomial(l - 1, r - 1) > k, || format!("C(l-1, r-1) > k (C({}, {}) <= {k})", l - 1, r - 1))?;
        for &i in &self.satellites {
            require(i == 1 || (r..l).contains(&i), || {
                format!("satellite size {i} must be 1 or in [r, l-1] = [{r}, {}]", l - 1)
            })?;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.l - 1 + self.satellites.iter().sum::<usize>()
    }
}

/// How the `k` joining edges of each satellite are chosen.
enum Attach<'a> {
    /// Edge `j` takes satellite vertex `j mod i` and the `j`-th
    /// `(r-1)`-subset of the nucleus in lexicographic order.
    Canonical,
    /// `k` distinct edges drawn uniformly among all r-subsets of
    /// nucleus ∪ satellite that meet both.
    Random(&'a mut dyn RngCore),
}

fn starlike(nucleus: usize, k: usize, r: usize, satellites: &[usize], mut attach: Attach<'_>) -> Hypergraph {
    let n = nucleus + satellites.iter().sum::<usize>();
    let mut edges: Vec<Vec<usize>> = (0..nucleus).combinations(r).collect();
    let nucleus_subsets: Vec<Vec<usize>> = (0..nucleus).combinations(r - 1).take(k).collect();
    let mut offset = nucleus;
    for &size in satellites {
        let block = offset..offset + size;
        edges.extend(block.clone().combinations(r));
        match &mut attach {
            Attach::Canonical => {
                for (j, ns) in nucleus_subsets.iter().enumerate() {
                    let mut e = ns.clone();
                    e.push(offset + j % size);
                    edges.push(e);
                }
            }
            Attach::Random(rng) => {
                let mut pool: Vec<Vec<usize>> = (0..nucleus)
                    .chain(block.clone())
                    .combinations(r)
                    .filter(|e| e[0] < nucleus && e[r - 1] >= offset)
                    .collect();
                pool.shuffle(*rng);
                edges.extend(pool.into_iter().take(k));
            }
        }
        offset += size;
    }
    Hypergraph::build(n, r, edges).expect("star-like layout yields distinct valid edges")
}

pub fn build_starlike(spec: &StarLikeSpec) -> Result<Hypergraph, ParamError> {
    spec.validate()?;
    Ok(starlike(spec.l - 1, spec.k, spec.r, &spec.satellites, Attach::Canonical))
}

/// Same layout as [`build_starlike`], but every satellite's `k` joining
/// edges are drawn at random from all admissible ones.
pub fn build_starlike_random(spec: &StarLikeSpec, rng: &mut dyn RngCore) -> Result<Hypergraph, ParamError> {
    spec.validate()?;
    Ok(starlike(spec.l - 1, spec.k, spec.r, &spec.satellites, Attach::Random(rng)))
}

/// Satellite sizes of the maximum star-like family on `n` vertices.
pub fn msh_satellites(q: &BoundQuery) -> Vec<usize> {
    let (l, s, p, rem) = (q.l as usize, q.s as usize, q.p as usize, q.q as usize);
    if l - 1 > s {
        let mut sats = vec![l - 1; p - 1];
        if rem > s {
            sats.push(rem);
        } else {
            sats.extend(std::iter::repeat_n(1, rem));
        }
        sats
    } else {
        vec![1; q.n as usize - (l - 1)]
    }
}

pub fn msh_spec(n: usize, k: usize, l: usize, r: usize) -> Result<StarLikeSpec, ParamError> {
    let q = BoundQuery::new(n as u64, k as u64, l as u64, r as u64)?;
    Ok(StarLikeSpec { k, r, l, satellites: msh_satellites(&q) })
}

/// The canonical member of `MSH(n; k, l, r)`.
pub fn build_msh(n: usize, k: usize, l: usize, r: usize) -> Result<Hypergraph, ParamError> {
    build_starlike(&msh_spec(n, k, l, r)?)
}

/// Parameters of the two-halves construction, as derived from `(t, r, p, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwoHalvesParams {
    pub t: usize,
    pub r: usize,
    pub p: usize,
    pub l: usize,
    pub k: usize,
    pub n: usize,
    pub a: usize,
    pub b: usize,
}

impl TwoHalvesParams {
    pub fn new(t: usize, r: usize, p: usize, l: usize) -> Result<Self, ParamError> {
        require(r > 2, || format!("r > 2 (r={r})"))?;
        require(t > r, || format!("t > r (t={t}, r={r})"))?;
        let k = binomial(t - 1, r - 1);
        require(k * r >= 2 * t, || format!("k*r >= 2t (k={k}, r={r}, t={t})"))?;
        require(l >= 2 * t + 2, || format!("l >= 2t+2 (l={l}, t={t})"))?;
        Ok(TwoHalvesParams { t, r, p, l, k, n: l + p * t, a: l.div_ceil(2), b: l / 2 })
    }
}

/// Nucleus `K_a ∪ K_b` joined by `k` edges, plus `p` satellites `K_t`, each
/// attached so that every satellite vertex lies on an attachment edge and
/// the attachments alternate between the two halves.
pub fn build_two_halves(t: usize, r: usize, p: usize, l: usize) -> Result<Hypergraph, ParamError> {
    let TwoHalvesParams { k, n, a, b, .. } = TwoHalvesParams::new(t, r, p, l)?;
    let mut edges: Vec<Vec<usize>> = (0..a).combinations(r).collect();
    edges.extend((a..a + b).combinations(r));

    // joining edge j: K_a vertex j mod a, K_b vertex j mod b, and r-2 more K_a
    // vertices; repeated candidates are skipped until k distinct edges exist
    let fillers = binomial(a - 1, r - 2);
    let mut joins: Vec<Vec<usize>> = Vec::with_capacity(k);
    let mut j = 0;
    while joins.len() < k {
        let anchor = j % a;
        let extra = (0..a)
            .filter(|&v| v != anchor)
            .combinations(r - 2)
            .nth((j / a) % fillers)
            .expect("index below C(a-1, r-2)");
        let mut e = extra;
        e.push(anchor);
        e.push(a + j % b);
        e.sort_unstable();
        if !joins.contains(&e) {
            joins.push(e);
        }
        j += 1;
    }
    edges.extend(joins);

    for sat in 0..p {
        let offset = l + sat * t;
        edges.extend((offset..offset + t).combinations(r));
        for j in 0..k {
            let group: Vec<usize> =
                if k <= t { (0..t).filter(|v| v % k == j).map(|v| offset + v).collect() } else { vec![offset + j % t] };
            let half = if j % 2 == 0 { 0..a } else { a..a + b };
            let need = r - group.len();
            let choices = binomial(half.len(), need);
            let mut e = half.combinations(need).nth((j / 2) % choices).expect("index below binomial");
            e.extend(group);
            edges.push(e);
        }
    }
    Ok(Hypergraph::build(n, r, edges).expect("two-halves layout yields distinct valid edges"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainVariant {
    /// Nucleus `K_t`, `floor(n/t) - 1` satellites `K_t`, the rest `K_1`.
    I,
    /// Nucleus `K_a`, `floor((n-a)/t)` satellites `K_t`, the rest `K_1`.
    II,
}

pub fn build_chain(n: usize, a: usize, k: usize, r: usize, variant: ChainVariant) -> Result<Hypergraph, ParamError> {
    let t = t_param(k as u64, r as u64)? as usize;
    let (nucleus, blocks, singles) = match variant {
        ChainVariant::I => {
            require(n >= t, || format!("n >= t (n={n}, t={t})"))?;
            (t, n / t - 1, n % t)
        }
        ChainVariant::II => {
            require(a >= t, || format!("a >= t (a={a}, t={t})"))?;
            require(n >= a, || format!("n >= a (n={n}, a={a})"))?;
            (a, (n - a) / t, (n - a) % t)
        }
    };
    let mut sats = vec![t; blocks];
    sats.extend(std::iter::repeat_n(1, singles));
    Ok(starlike(nucleus, k, r, &sats, Attach::Canonical))
}
