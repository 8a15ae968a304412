//! Ordinary exact integer combinatorics shared by the coefficient modules.

use num_traits::{One, Zero};

use crate::Count;

/// C(n, k), exact. Multiplicative form; every intermediate division is exact.
pub(crate) fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut result = Count::one();
    for i in 0..k {
        result = result * Count::from(n - i) / Count::from(i + 1);
    }
    result
}

/// n! / (b₁!·…·b_k!) where n = Σ bᵢ, as a product of binomials over prefix
/// sums. The empty part list gives 1 (the multinomial of the empty sum).
pub(crate) fn multinomial(parts: &[u64]) -> Count {
    let mut result = Count::one();
    let mut placed = 0u64;
    for &b in parts {
        placed += b;
        result *= binomial(placed, b);
    }
    result
}

/// baseᵉˣᵖ with a u64 exponent.
pub(crate) fn power(base: u64, exp: u64) -> Count {
    if exp == 0 {
        return Count::one();
    }
    let mut result = Count::one();
    let mut square = Count::from(base);
    let mut remaining = exp;
    while remaining > 0 {
        if remaining & 1 == 1 {
            result *= &square;
        }
        remaining >>= 1;
        if remaining > 0 {
            square = &square * &square;
        }
    }
    result
}
