//! Binomial coefficients and fixed-size subset enumeration.

use num_bigint::BigUint;

/// `C(n, k)` in `u64`; exact for every `n <= 62`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

pub fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// All `k`-subsets of `{0, .., n-1}` as bitmasks, in ascending numeric order
/// (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 63, "subset enumeration is limited to 63 elements");
    let limit = 1u64 << n;
    let mut next = if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let x = next?;
        next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let y = (((r ^ x) >> 2) / c) | r;
            (y < limit).then_some(y)
        };
        Some(x)
    })
}
