//! Tiling sequences: the two-parameter family with rational generating
//! function `1_F·x / ((1 − αx)(1 − βx))` and the diagonal case `N(α)`.
//!
//! A term counts weighted tilings of a 1×(n−1) board, so the family obeys the
//! two-term linear recurrence `n_F = (α+β)·(n−1)_F − αβ·(n−2)_F` with
//! `0_F = 0`. The diagonal `α = β`, `1_F = 1` collapses to the closed form
//! `n_F = n·α^{n−1}`, the only case whose generalized factorials divide into
//! integer coefficient triangles here.

use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::{arith, Alpha, Count, Error};

/// Parameters of a tiling sequence: the seed term `1_F` and the two
/// geometric factors of the generating function's denominator. The factors
/// are kept to nonnegative integers so every term is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceParams {
    one_f: u64,
    alpha: u64,
    beta: u64,
}

impl SequenceParams {
    pub fn new(one_f: u64, alpha: u64, beta: u64) -> Result<Self, Error> {
        if one_f == 0 {
            return Err(Error::InvalidOneF);
        }
        Ok(Self { one_f, alpha, beta })
    }

    /// The diagonal sequence N(α): `1_F = 1`, both factors equal to α.
    pub fn n_alpha(alpha: Alpha) -> Self {
        let a = alpha.get();
        Self {
            one_f: 1,
            alpha: a,
            beta: a,
        }
    }

    pub fn one_f(&self) -> u64 {
        self.one_f
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }
}

/// n-th term of the sequence, by Horner evaluation of
/// `1_F · Σ_{i=0}^{n−1} α^i β^{n−1−i}` (the power-sum expansion of the
/// generating function's coefficient).
pub fn coefficient(params: SequenceParams, n: u64) -> Count {
    if n == 0 {
        return Count::zero();
    }
    let alpha = Count::from(params.alpha);
    let beta = Count::from(params.beta);
    let mut sum = Count::zero();
    let mut alpha_pow = Count::one();
    for _ in 0..n {
        sum = sum * &beta + &alpha_pow;
        alpha_pow *= &alpha;
    }
    sum * Count::from(params.one_f)
}

/// n-th term of N(α): `n_F = n·α^{n−1}`, with `0_F = 0`.
pub fn n_alpha(alpha: Alpha, n: u64) -> Count {
    if n == 0 {
        return Count::zero();
    }
    Count::from(n) * arith::power(alpha.get(), n - 1)
}

/// The F-factorial `n_F! = Π_{m=1}^{n} m_F` over N(α); empty product for
/// n = 0. The α power is carried incrementally across factors.
pub fn f_factorial(alpha: Alpha, n: u64) -> Count {
    let a = Count::from(alpha.get());
    let mut result = Count::one();
    let mut alpha_pow = Count::one();
    for m in 1..=n {
        result *= Count::from(m) * &alpha_pow;
        alpha_pow *= &a;
    }
    result
}

/// The falling F-factorial `n_F·(n−1)_F·…·(n−k+1)_F = n_F!/(n−k)_F!` over
/// N(α), computed as a product so no division occurs.
pub fn falling_f_factorial(alpha: Alpha, n: u64, k: u64) -> Result<Count, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    if k == 0 {
        return Ok(Count::one());
    }
    let a = Count::from(alpha.get());
    let mut result = Count::one();
    let mut alpha_pow = arith::power(alpha.get(), n - k);
    for m in (n - k + 1)..=n {
        result *= Count::from(m) * &alpha_pow;
        alpha_pow *= &a;
    }
    Ok(result)
}

/// A tiling sequence with memoized terms, filled by the two-term linear
/// recurrence `n_F = (α+β)·(n−1)_F − αβ·(n−2)_F`.
#[derive(Debug)]
pub struct FSequence {
    params: SequenceParams,
    terms: Mutex<Vec<Count>>,
}

impl FSequence {
    pub fn new(params: SequenceParams) -> Self {
        Self {
            params,
            terms: Mutex::new(vec![Count::zero()]),
        }
    }

    pub fn n_alpha(alpha: Alpha) -> Self {
        Self::new(SequenceParams::n_alpha(alpha))
    }

    pub fn params(&self) -> SequenceParams {
        self.params
    }

    pub fn term(&self, n: u64) -> Count {
        let n = n as usize;
        let mut terms = self.terms.lock().unwrap();
        Self::extend(&mut terms, self.params, n);
        terms[n].clone()
    }

    /// Terms `0_F..=n_F` in order.
    pub fn terms_up_to(&self, n: u64) -> Vec<Count> {
        let n = n as usize;
        let mut terms = self.terms.lock().unwrap();
        Self::extend(&mut terms, self.params, n);
        terms[..=n].to_vec()
    }

    fn extend(terms: &mut Vec<Count>, params: SequenceParams, n: usize) {
        if terms.len() <= 1 && n >= 1 {
            terms.push(Count::from(params.one_f));
        }
        let sum = Count::from(params.alpha) + Count::from(params.beta);
        let product = Count::from(params.alpha) * Count::from(params.beta);
        while terms.len() <= n {
            let m = terms.len();
            let next = &sum * &terms[m - 1] - &product * &terms[m - 2];
            terms.push(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn alpha(a: u64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    #[test]
    fn sequence_params_reject_zero_seed() {
        assert_eq!(SequenceParams::new(0, 1, 1), Err(Error::InvalidOneF));
        assert!(SequenceParams::new(2, 0, 3).is_ok());
    }

    #[test]
    fn coefficient_mersenne_case() {
        // α = 1, β = 2 gives (2ⁿ − 1)/(2 − 1).
        let params = SequenceParams::new(1, 1, 2).unwrap();
        let expected = [0u64, 1, 3, 7, 15, 31, 63, 127];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(coefficient(params, n as u64), Count::from(e));
        }
    }

    #[test]
    fn n_alpha_matches_fixture_rows() {
        let rows: [(u64, [u64; 11]); 3] = [
            (2, [0, 1, 4, 12, 32, 80, 192, 448, 1024, 2304, 5120]),
            (3, [0, 1, 6, 27, 108, 405, 1458, 5103, 17496, 59049, 196830]),
            (
                4,
                [0, 1, 8, 48, 256, 1280, 6144, 28672, 131072, 589824, 2621440],
            ),
        ];
        for (a, row) in rows {
            for (n, &e) in row.iter().enumerate() {
                assert_eq!(n_alpha(alpha(a), n as u64), Count::from(e));
            }
        }
    }

    #[test]
    fn f_factorial_small_values() {
        assert_eq!(f_factorial(alpha(2), 0), Count::from(1));
        assert_eq!(f_factorial(alpha(2), 3), Count::from(48));
        assert_eq!(f_factorial(alpha(1), 5), Count::from(120));
        assert_eq!(f_factorial(alpha(3), 3), Count::from(162));
    }

    #[test]
    fn falling_f_factorial_small_values() {
        assert_eq!(falling_f_factorial(alpha(2), 4, 2), Ok(Count::from(384)));
        assert_eq!(falling_f_factorial(alpha(3), 2, 2), Ok(Count::from(6)));
        assert_eq!(falling_f_factorial(alpha(5), 7, 0), Ok(Count::from(1)));
        assert_eq!(
            falling_f_factorial(alpha(2), 3, 4),
            Err(Error::KExceedsN { n: 3, k: 4 })
        );
    }

    #[test]
    fn memoized_sequence_matches_direct_terms() {
        let seq = FSequence::n_alpha(alpha(3));
        assert_eq!(seq.term(7), Count::from(5103));
        assert_eq!(seq.term(2), Count::from(6));
        let terms = seq.terms_up_to(10);
        for (n, term) in terms.iter().enumerate() {
            assert_eq!(*term, n_alpha(alpha(3), n as u64));
        }
    }

    proptest! {
        // The Horner form and the linear recurrence are independent routes
        // to the same sequence.
        #[test]
        fn recurrence_agrees_with_horner(
            one_f in 1u64..6,
            a in 0u64..5,
            b in 0u64..5,
            n in 0u64..25,
        ) {
            let params = SequenceParams::new(one_f, a, b).unwrap();
            let seq = FSequence::new(params);
            prop_assert_eq!(seq.term(n), coefficient(params, n));
        }

        // (k+m)_F = α^m·k_F + α^k·m_F over N(α).
        #[test]
        fn term_addition_law_holds(a in 1u64..6, k in 0u64..21, m in 0u64..21) {
            let lhs = n_alpha(alpha(a), k + m);
            let rhs = arith::power(a, m) * n_alpha(alpha(a), k)
                + arith::power(a, k) * n_alpha(alpha(a), m);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn terms_strictly_increase(a in 1u64..6, n in 1u64..40) {
            prop_assert!(n_alpha(alpha(a), n + 1) > n_alpha(alpha(a), n));
        }

        #[test]
        fn diagonal_closed_form_agrees_with_general_coefficient(
            a in 1u64..6,
            n in 0u64..40,
        ) {
            let params = SequenceParams::n_alpha(alpha(a));
            prop_assert_eq!(coefficient(params, n), n_alpha(alpha(a), n));
        }

        #[test]
        fn falling_factorial_divides_full_factorial(
            a in 1u64..5,
            n in 0u64..15,
            k in 0u64..15,
        ) {
            prop_assume!(k <= n);
            let falling = falling_f_factorial(alpha(a), n, k).unwrap();
            prop_assert_eq!(
                falling * f_factorial(alpha(a), n - k),
                f_factorial(alpha(a), n)
            );
        }
    }
}
