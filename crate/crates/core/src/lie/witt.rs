//! Dimensions of the free Lie algebra.

/// Number-theoretic Möbius function.
pub fn number_mobius(mut k: u64) -> i64 {
    assert!(k >= 1);
    let mut sign = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

/// Dimension of the degree-`d` component of the free Lie algebra on `n`
/// generators, `(1/d) Σ_{e | d} μ(e) n^{d/e}`.
///
/// Panics if `d == 0` or the intermediate power overflows `i128`.
pub fn witt(n: u64, d: usize) -> u64 {
    assert!(d >= 1, "witt: degree must be positive");
    let n = n as i128;
    let mut total: i128 = 0;
    for e in 1..=d {
        if !d.is_multiple_of(e) {
            continue;
        }
        let mu = number_mobius(e as u64) as i128;
        if mu == 0 {
            continue;
        }
        let power = n
            .checked_pow((d / e) as u32)
            .expect("witt: power overflows i128");
        total += mu * power;
    }
    debug_assert!(total % d as i128 == 0);
    (total / d as i128) as u64
}
