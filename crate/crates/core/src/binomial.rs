//! Exact binomial coefficients.

/// `C(n, k)` as an exact integer, `None` on `u128` overflow.
///
/// Follows the convention `C(n, k) = 0` for `k > n`.
pub fn checked_binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        let num = u128::from(n - i);
        let den = u128::from(i + 1);
        let g = gcd(acc, den);
        acc = (acc / g).checked_mul(num / (den / g))?;
    }
    Some(acc)
}

/// `C(n, k)` for sizes that are known to be small (vertex counts of
/// materialized hypergraphs). Panics on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    let v = checked_binomial(n as u64, k as u64).expect("binomial overflow");
    usize::try_from(v).expect("binomial exceeds usize")
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
