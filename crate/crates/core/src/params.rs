//! The thresholds `t(k,r)`, `s(k,r)` and every closed-form size bound.
//!
//! All arithmetic is exact (`i128` with overflow checks); `C(n,k) = 0`
//! whenever `k > n`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::binomial::checked_binomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("parameter constraint violated: {0}")]
    Constraint(String),
    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),
}

pub(crate) fn require(ok: bool, what: impl FnOnce() -> String) -> Result<(), ParamError> {
    if ok {
        Ok(())
    } else {
        Err(ParamError::Constraint(what()))
    }
}

/// Exact `i128` arithmetic that reports the formula it overflowed in.
#[derive(Clone, Copy)]
struct Exact(&'static str);

impl Exact {
    fn c(self, n: u64, k: u64) -> Result<i128, ParamError> {
        checked_binomial(n, k).and_then(|v| i128::try_from(v).ok()).ok_or(ParamError::Overflow(self.0))
    }
    fn mul(self, a: i128, b: i128) -> Result<i128, ParamError> {
        a.checked_mul(b).ok_or(ParamError::Overflow(self.0))
    }
    fn add(self, a: i128, b: i128) -> Result<i128, ParamError> {
        a.checked_add(b).ok_or(ParamError::Overflow(self.0))
    }
    fn sub(self, a: i128, b: i128) -> Result<i128, ParamError> {
        a.checked_sub(b).ok_or(ParamError::Overflow(self.0))
    }
    fn count(self, v: i128) -> Result<u128, ParamError> {
        u128::try_from(v).map_err(|_| ParamError::Overflow(self.0))
    }
}

fn check_kr(k: u64, r: u64) -> Result<(), ParamError> {
    require(k >= 2, || format!("k >= 2 (k={k})"))?;
    require(r >= 2, || format!("r >= 2 (r={r})"))
}

/// `t(k,r)`: the unique `t` with `C(t-1, r-1) <= k < C(t, r-1)`.
pub fn t_param(k: u64, r: u64) -> Result<u64, ParamError> {
    check_kr(k, r)?;
    // C(r-1, r-1) = 1 <= k, so the search starts inside the feasible range
    let mut t = r;
    while checked_binomial(t, r - 1).is_some_and(|c| c <= u128::from(k)) {
        t += 1;
    }
    Ok(t)
}

/// `s(k,r)`: the largest `s` with `k + C(s,r) <= k*s`.
///
/// `k*s - k - C(s,r)` is concave in `s`, so the feasible set is an interval
/// starting at `s = 1` and an upward scan finds its end.
pub fn s_param(k: u64, r: u64) -> Result<u64, ParamError> {
    check_kr(k, r)?;
    let fits = |s: u64| -> bool {
        match checked_binomial(s, r) {
            Some(c) => u128::from(k) + c <= u128::from(k) * u128::from(s),
            None => false,
        }
    };
    let mut s = 1;
    while fits(s + 1) {
        s += 1;
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamPair {
    pub t: u64,
    pub s: u64,
}

pub fn params(k: u64, r: u64) -> Result<ParamPair, ParamError> {
    Ok(ParamPair { t: t_param(k, r)?, s: s_param(k, r)? })
}

/// `(t-1)k - C(t,r)`: edges lost when `t` single-vertex satellites are
/// replaced by one complete `K_t` piece. Never negative.
pub fn block_saving(k: u64, r: u64) -> Result<u128, ParamError> {
    let t = t_param(k, r)?;
    let x = Exact("(t-1)k - C(t,r)");
    let v = x.sub(x.mul(i128::from(t - 1), i128::from(k))?, x.c(t, r)?)?;
    x.count(v)
}

/// A validated `(n, k, l, r)` with its derived quantities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundQuery {
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub r: u64,
    pub t: u64,
    pub s: u64,
    /// `n = p(l-1) + q`, `0 <= q < l-1`.
    pub p: u64,
    pub q: u64,
    /// `ceil(l/2)` and `floor(l/2)`.
    pub a: u64,
    pub b: u64,
}

impl BoundQuery {
    pub fn new(n: u64, k: u64, l: u64, r: u64) -> Result<Self, ParamError> {
        let ParamPair { t, s } = params(k, r)?;
        require(l > t, || format!("l >= t+1 (l={l}, t={t})"))?;
        require(n >= l, || format!("n >= l (n={n}, l={l})"))?;
        Ok(BoundQuery { n, k, l, r, t, s, p: n / (l - 1), q: n % (l - 1), a: l.div_ceil(2), b: l / 2 })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::I => "i",
            Branch::II => "ii",
            Branch::III => "iii",
            Branch::IV => "iv",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u128,
    pub branch: Branch,
}

/// Maximum size of a `(k,l)`-edge-maximal hypergraph on `n` vertices.
///
/// Branches: (i) `l-1 > s`, `q > s`; (ii) `l-1 > s`, `q <= s`; (iii) `l-1 <= s`.
pub fn upper_bound(q: &BoundQuery) -> Result<Bound, ParamError> {
    let x = Exact("upper bound");
    let k = i128::from(q.k);
    let p = i128::from(q.p);
    let nucleus = x.c(q.l - 1, q.r)?;
    let (value, branch) = if q.l - 1 > q.s {
        let blocks = x.mul(p, nucleus)?;
        if q.q > q.s {
            (x.add(x.add(blocks, x.mul(p, k)?)?, x.c(q.q, q.r)?)?, Branch::I)
        } else {
            (x.add(blocks, x.mul(p - 1 + i128::from(q.q), k)?)?, Branch::II)
        }
    } else {
        let singles = i128::from(q.n - q.l + 1);
        (x.add(nucleus, x.mul(singles, k)?)?, Branch::III)
    };
    Ok(Bound { value: x.count(value)?, branch })
}

/// `(m-1)k - saving * floor(m/t)` for `m >= 1`, shared by several branches.
fn chained_blocks(x: Exact, m: u64, k: u64, t: u64, saving: i128) -> Result<i128, ParamError> {
    let linear = x.mul(i128::from(m) - 1, i128::from(k))?;
    x.sub(linear, x.mul(saving, i128::from(m / t))?)
}

/// Minimum size of a `(k,l)`-edge-maximal hypergraph on `n` vertices.
///
/// Branch priority: (i) `n < 2t`; (ii) `l <= 2t`; otherwise (iii) for even
/// `l` and (iv) for odd `l`.
pub fn lower_bound(q: &BoundQuery) -> Result<Bound, ParamError> {
    let x = Exact("lower bound");
    let k = i128::from(q.k);
    let t = q.t;
    let saving = i128::try_from(block_saving(q.k, q.r)?).map_err(|_| ParamError::Overflow("lower bound"))?;
    let (value, branch) = if q.n < 2 * t {
        let singles = i128::from(q.n - q.l + 1);
        (x.add(x.c(q.l - 1, q.r)?, x.mul(singles, k)?)?, Branch::I)
    } else if q.l <= 2 * t {
        (chained_blocks(x, q.n, q.k, t, saving)?, Branch::II)
    } else if q.l.is_multiple_of(2) {
        let a = q.a;
        let rest = q.n - 2 * a;
        let linear = x.mul(i128::from(rest + 1), k)?;
        let halves = x.mul(2, x.c(a, q.r)?)?;
        let v = x.sub(x.add(linear, halves)?, x.mul(saving, i128::from(rest / t))?)?;
        (v, Branch::III)
    } else {
        let b = q.b;
        let rest = q.n - 2 * b - 1;
        let linear = x.mul(i128::from(q.n - 2 * b), k)?;
        let halves = x.add(x.c(b, q.r)?, x.c(b + 1, q.r)?)?;
        let v = x.sub(x.add(linear, halves)?, x.mul(saving, i128::from(rest / t))?)?;
        (v, Branch::IV)
    };
    Ok(Bound { value: x.count(value)?, branch })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    #[serde(flatten)]
    pub query: BoundQuery,
    pub lower: u128,
    pub lower_branch: Branch,
    pub upper: u128,
    pub upper_branch: Branch,
}

pub fn bounds(n: u64, k: u64, l: u64, r: u64) -> Result<BoundsReport, ParamError> {
    let query = BoundQuery::new(n, k, l, r)?;
    let lo = lower_bound(&query)?;
    let hi = upper_bound(&query)?;
    Ok(BoundsReport { query, lower: lo.value, lower_branch: lo.branch, upper: hi.value, upper_branch: hi.branch })
}

/// `(lower, upper)` for `(k,t)`-edge-maximal hypergraphs, i.e. `l = t`.
pub fn kt_bounds(n: u64, k: u64, r: u64) -> Result<(u128, u128), ParamError> {
    let t = t_param(k, r)?;
    require(n >= t, || format!("n >= t (n={n}, t={t})"))?;
    let x = Exact("(k,t) bounds");
    let upper = x.add(x.c(t, r)?, x.mul(i128::from(n - t), i128::from(k))?)?;
    let saving = i128::try_from(block_saving(k, r)?).map_err(|_| ParamError::Overflow("(k,t) bounds"))?;
    let lower = chained_blocks(x, n, k, t, saving)?;
    Ok((x.count(lower)?, x.count(upper)?))
}

/// Edge counts of the two star-like witnesses built around `K_t` and `K_a`
/// nuclei; both are at most `C(n, r)`.
pub fn chain_counts(n: u64, a: u64, k: u64, r: u64) -> Result<(u128, u128), ParamError> {
    let t = t_param(k, r)?;
    require(a >= t, || format!("a >= t (a={a}, t={t})"))?;
    require(n >= a, || format!("n >= a (n={n}, a={a})"))?;
    let x = Exact("star-like witness counts");
    let saving = i128::try_from(block_saving(k, r)?).map_err(|_| ParamError::Overflow("star-like witness counts"))?;
    let first = chained_blocks(x, n, k, t, saving)?;
    let rest = n - a;
    let second =
        x.sub(x.add(x.mul(i128::from(rest), i128::from(k))?, x.c(a, r)?)?, x.mul(saving, i128::from(rest / t))?)?;
    Ok((x.count(first)?, x.count(second)?))
}

/// `g(x) = C(x,r) + C(n-x,r)`, for `1 <= x <= n-1`.
pub fn g_profile(n: u64, r: u64, x: u64) -> Result<u128, ParamError> {
    require(r >= 2, || format!("r >= 2 (r={r})"))?;
    require(n >= r, || format!("n >= r (n={n}, r={r})"))?;
    require(x >= 1 && x < n, || format!("1 <= x <= n-1 (x={x}, n={n})"))?;
    let e = Exact("g(x)");
    e.count(e.add(e.c(x, r)?, e.c(n - x, r)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::checked_binomial as cb;

    /// Literal reading of the definitions: scan a generous range and keep
    /// the largest admissible value.
    fn t_scan(k: u64, r: u64) -> u64 {
        (1..200).filter(|&t| cb(t - 1, r - 1).unwrap() <= k as u128).max().unwrap()
    }

    fn s_scan(k: u64, r: u64) -> u64 {
        (0..200).filter(|&s| k as u128 + cb(s, r).unwrap() <= (k * s) as u128).max().unwrap()
    }

    #[test]
    fn thresholds_match_scans() {
        for k in 2..=12 {
            for r in 2..=12 {
                assert_eq!(t_param(k, r).unwrap(), t_scan(k, r), "t({k},{r})");
                assert_eq!(s_param(k, r).unwrap(), s_scan(k, r), "s({k},{r})");
            }
        }
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(t_param(2, 2), Ok(3));
        assert_eq!(t_param(3, 3), Ok(4));
        assert_eq!(t_param(2, 3), Ok(3));
        assert_eq!(s_param(2, 2), Ok(4));
        assert_eq!(s_param(3, 3), Ok(5));
        assert_eq!(s_param(2, 3), Ok(4));
        assert!(matches!(t_param(1, 3), Err(ParamError::Constraint(_))));
        assert!(matches!(s_param(3, 1), Err(ParamError::Constraint(_))));
    }

    #[test]
    fn query_decomposition() {
        let q = BoundQuery::new(17, 2, 7, 2).unwrap();
        assert_eq!((q.t, q.s, q.p, q.q, q.a, q.b), (3, 4, 2, 5, 4, 3));
        let err = BoundQuery::new(10, 2, 3, 2).unwrap_err();
        assert_eq!(err, ParamError::Constraint("l >= t+1 (l=3, t=3)".into()));
        assert!(BoundQuery::new(3, 2, 4, 2).is_err());
    }

    #[test]
    fn upper_examples() {
        let u = |n, k, l, r| upper_bound(&BoundQuery::new(n, k, l, r).unwrap()).unwrap();
        assert_eq!(u(10, 2, 4, 2), Bound { value: 17, branch: Branch::III });
        assert_eq!(u(13, 2, 6, 2), Bound { value: 28, branch: Branch::II });
        assert_eq!(u(17, 2, 7, 2), Bound { value: 44, branch: Branch::I });
    }

    #[test]
    fn lower_examples() {
        let lo = |n, k, l, r| lower_bound(&BoundQuery::new(n, k, l, r).unwrap()).unwrap();
        assert_eq!(lo(5, 2, 4, 2), Bound { value: 7, branch: Branch::I });
        assert_eq!(lo(10, 2, 4, 2), Bound { value: 15, branch: Branch::II });
        assert_eq!(lo(14, 3, 10, 3), Bound { value: 30, branch: Branch::III });
        assert_eq!(lo(10, 3, 10, 3), Bound { value: 23, branch: Branch::III });
        assert_eq!(lo(11, 3, 11, 3), Bound { value: 33, branch: Branch::IV });
        assert_eq!(lo(15, 3, 11, 3), Bound { value: 40, branch: Branch::IV });
        // n = 2t sits in branch (ii), not (i)
        assert_eq!(lo(6, 2, 4, 2).branch, Branch::II);
    }

    #[test]
    fn kt_examples() {
        assert_eq!(kt_bounds(6, 2, 2), Ok((8, 9)));
        assert_eq!(kt_bounds(3, 2, 2), Ok((3, 3)));
        assert_eq!(kt_bounds(4, 3, 3), Ok((4, 4)));
        assert!(kt_bounds(2, 2, 2).is_err());
    }

    #[test]
    fn chain_examples() {
        assert_eq!(chain_counts(6, 3, 2, 2), Ok((8, 8)));
        assert_eq!(chain_counts(8, 5, 3, 3).unwrap().1, 19);
        for (k, r) in [(2, 2), (3, 3), (5, 3), (4, 2)] {
            let t = t_param(k, r).unwrap();
            assert_eq!(chain_counts(t, t, k, r).unwrap().1, cb(t, r).unwrap());
        }
        assert!(chain_counts(8, 2, 3, 3).is_err());
        assert!(chain_counts(4, 5, 3, 3).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_profile(6, 3, 1), Ok(10));
        assert_eq!(g_profile(6, 3, 2), Ok(4));
        assert_eq!(g_profile(6, 3, 3), Ok(2));
        assert!(g_profile(6, 3, 0).is_err());
        assert!(g_profile(6, 3, 6).is_err());
    }

    #[test]
    fn remark_and_saving_sign() {
        for k in 2..=12 {
            for r in 2..=12 {
                let ParamPair { t, s } = params(k, r).unwrap();
                assert!(t <= s, "t={t} s={s} at k={k} r={r}");
                assert!(block_saving(k, r).is_ok());
            }
        }
    }

    #[test]
    fn huge_values_overflow_cleanly() {
        let q = BoundQuery::new(1_000_000, 2, 400, 150).unwrap();
        assert!(matches!(upper_bound(&q), Err(ParamError::Overflow(_))));
    }
}
