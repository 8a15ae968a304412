//! F-nomial coefficients over N(α) and their multi-index generalization.
//!
//! Three independent routes compute `⟨n k⟩`: the closed form
//! `C(n,k)·α^{k(n−k)}`, the F-factorial quotient, and the Pascal-style
//! recurrence `⟨n k⟩ = α^{n−k}·⟨n−1 k−1⟩ + α^k·⟨n−1 k⟩`. They are kept as
//! separate entry points so each can serve as a cross-check on the others.
//!
//! Combinatorially, `⟨n k⟩` counts labeled bipartite α-multigraphs on n
//! vertices whose distinguished part has size k: choose the part, then put
//! 0..α−1 parallel edges on each of the k(n−k) cross pairs.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{arith, compositions, tiling, Alpha, Count, Error};

/// `⟨n k⟩` by the closed form `C(n,k)·α^{k(n−k)}`.
pub fn fnomial(alpha: Alpha, n: u64, k: u64) -> Result<Count, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let exponent = k
        .checked_mul(n - k)
        .expect("exponent k*(n-k) overflows u64");
    Ok(arith::binomial(n, k) * arith::power(alpha.get(), exponent))
}

/// `⟨n k⟩` by the defining quotient `n_F! / (k_F!·(n−k)_F!)`.
pub fn fnomial_by_factorials(alpha: Alpha, n: u64, k: u64) -> Result<Count, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let numerator = tiling::f_factorial(alpha, n);
    let denominator = tiling::f_factorial(alpha, k) * tiling::f_factorial(alpha, n - k);
    let (quotient, remainder) = numerator.div_rem(&denominator);
    assert!(remainder.is_zero(), "F-factorial quotient must be exact");
    Ok(quotient)
}

/// `⟨n k⟩` by running the addition law up from row 0.
pub fn fnomial_by_recurrence(alpha: Alpha, n: u64, k: u64) -> Result<Count, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let rows = recurrence_rows(alpha, n);
    Ok(rows[n as usize][k as usize].clone())
}

/// Rows 0..=max_n of the coefficient triangle via the addition law, with a
/// shared table of α powers.
pub(crate) fn recurrence_rows(alpha: Alpha, max_n: u64) -> Vec<Vec<Count>> {
    let max_n = max_n as usize;
    let mut alpha_pows: Vec<Count> = Vec::with_capacity(max_n + 1);
    alpha_pows.push(Count::one());
    for _ in 0..max_n {
        let next = alpha_pows.last().unwrap() * alpha.get();
        alpha_pows.push(next);
    }
    let mut rows: Vec<Vec<Count>> = Vec::with_capacity(max_n + 1);
    rows.push(vec![Count::one()]);
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(Count::one());
        for k in 1..n {
            row.push(&alpha_pows[n - k] * &prev[k - 1] + &alpha_pows[k] * &prev[k]);
        }
        row.push(Count::one());
        rows.push(row);
    }
    rows
}

/// Prescribed color-class sizes `b₁,…,b_k` for a colored multigraph family,
/// carried together with their total so callers cannot desynchronize them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorComposition {
    parts: Vec<u64>,
    total: u64,
}

impl ColorComposition {
    pub fn new(parts: Vec<u64>) -> Self {
        let total = parts.iter().sum();
        Self { parts, total }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

/// The multi F-nomial `⟨n | b₁,…,b_k⟩ = multinomial(n; b)·α^{(n² − Σbᵢ²)/2}`.
/// The exponent is the number of bichromatic vertex pairs, so the halving is
/// always exact.
pub fn multi_fnomial(alpha: Alpha, composition: &ColorComposition) -> Count {
    let n = composition.total() as u128;
    let squares: u128 = composition
        .parts()
        .iter()
        .map(|&b| b as u128 * b as u128)
        .sum();
    let doubled = n * n - squares;
    assert!(
        doubled.is_multiple_of(2),
        "bichromatic pair count must be an integer"
    );
    let exponent: u64 = (doubled / 2).try_into().expect("exponent overflows u64");
    arith::multinomial(composition.parts()) * arith::power(alpha.get(), exponent)
}

/// The coefficient triangle for one α, rows 0..=max_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FNomialTriangle {
    alpha: Alpha,
    rows: Vec<Vec<Count>>,
}

impl FNomialTriangle {
    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn max_n(&self) -> u64 {
        (self.rows.len() - 1) as u64
    }

    pub fn rows(&self) -> &[Vec<Count>] {
        &self.rows
    }

    pub fn entry(&self, n: u64, k: u64) -> &Count {
        &self.rows[n as usize][k as usize]
    }
}

/// Build the triangle by the addition law. Debug builds replay every entry
/// against the closed form.
pub fn triangle(alpha: Alpha, max_n: u64) -> FNomialTriangle {
    let rows = recurrence_rows(alpha, max_n);
    #[cfg(debug_assertions)]
    for (n, row) in rows.iter().enumerate() {
        for (k, value) in row.iter().enumerate() {
            debug_assert_eq!(
                value,
                &fnomial(alpha, n as u64, k as u64).unwrap(),
                "addition law and closed form disagree at n = {n}, k = {k}"
            );
        }
    }
    FNomialTriangle { alpha, rows }
}

/// `Σ_k ⟨n k⟩`: labeled bipartite α-multigraphs on n vertices, summed over
/// all sizes of the distinguished part.
pub fn row_sum(alpha: Alpha, n: u64) -> Count {
    (0..=n).map(|k| fnomial(alpha, n, k).unwrap()).sum()
}

/// `Σ ⟨n | b₁,…,b_k⟩` over all weak compositions of n into k parts: labeled
/// k-colored α-multigraphs on n vertices.
pub fn colored_total(alpha: Alpha, n: u64, colors: usize) -> Count {
    compositions::weak_compositions(n, colors)
        .map(|parts| multi_fnomial(alpha, &ColorComposition::new(parts)))
        .sum()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn alpha(a: u64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    fn big(v: i64) -> Count {
        Count::from(v)
    }

    #[test]
    fn closed_form_small_values() {
        assert_eq!(fnomial(alpha(2), 4, 2), Ok(big(96)));
        assert_eq!(fnomial(alpha(2), 7, 3), Ok(big(143360)));
        assert_eq!(fnomial(alpha(3), 3, 1), Ok(big(27)));
        assert_eq!(fnomial(alpha(2), 0, 0), Ok(big(1)));
        assert_eq!(
            fnomial(alpha(2), 2, 3),
            Err(Error::KExceedsN { n: 2, k: 3 })
        );
    }

    #[test]
    fn factorial_route_small_values() {
        assert_eq!(fnomial_by_factorials(alpha(2), 4, 2), Ok(big(96)));
        assert_eq!(fnomial_by_factorials(alpha(2), 7, 3), Ok(big(143360)));
        assert_eq!(fnomial_by_factorials(alpha(1), 5, 2), Ok(big(10)));
    }

    #[test]
    fn recurrence_route_small_values() {
        assert_eq!(fnomial_by_recurrence(alpha(2), 6, 3), Ok(big(10240)));
        assert_eq!(fnomial_by_recurrence(alpha(1), 5, 2), Ok(big(10)));
        assert_eq!(fnomial_by_recurrence(alpha(3), 2, 1), Ok(big(6)));
    }

    #[test]
    fn triangle_rows_for_alpha_two() {
        let t = triangle(alpha(2), 7);
        let expected: Vec<Vec<i64>> = vec![
            vec![1],
            vec![1, 1],
            vec![1, 4, 1],
            vec![1, 12, 12, 1],
            vec![1, 32, 96, 32, 1],
            vec![1, 80, 640, 640, 80, 1],
            vec![1, 192, 3840, 10240, 3840, 192, 1],
            vec![1, 448, 21504, 143360, 143360, 21504, 448, 1],
        ];
        assert_eq!(t.max_n(), 7);
        for (n, row) in expected.iter().enumerate() {
            for (k, &e) in row.iter().enumerate() {
                assert_eq!(t.entry(n as u64, k as u64), &big(e));
            }
        }
    }

    #[test]
    fn triangle_rows_for_alpha_three() {
        let t = triangle(alpha(3), 2);
        assert_eq!(
            t.rows(),
            &[
                vec![big(1)],
                vec![big(1), big(1)],
                vec![big(1), big(6), big(1)]
            ]
        );
    }

    #[test]
    fn multi_fnomial_small_values() {
        let cases: [(u64, &[u64], i64); 5] = [
            (2, &[1, 1, 1], 48),
            (2, &[2, 1], 12),
            (2, &[0, 2], 1),
            (3, &[1, 1], 6),
            (2, &[4], 1),
        ];
        for (a, parts, expected) in cases {
            let c = ColorComposition::new(parts.to_vec());
            assert_eq!(multi_fnomial(alpha(a), &c), big(expected));
        }
    }

    #[test]
    fn row_sums_match_two_color_census() {
        // Row sums for α = 2 count labeled bipartite 2-multigraphs (A047863).
        let expected = [1i64, 2, 6, 26, 162, 1442, 18306, 330626, 8488962];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(row_sum(alpha(2), n as u64), big(e));
        }
        assert_eq!(row_sum(alpha(1), 5), big(32));
    }

    #[test]
    fn colored_totals_small_values() {
        assert_eq!(colored_total(alpha(2), 2, 2), big(6));
        assert_eq!(colored_total(alpha(2), 2, 3), big(15));
        assert_eq!(colored_total(alpha(1), 3, 2), big(8));
        assert_eq!(colored_total(alpha(2), 0, 0), big(1));
    }

    proptest! {
        #[test]
        fn three_routes_agree(a in 1u64..4, n in 0u64..12, k in 0u64..12) {
            prop_assume!(k <= n);
            let closed = fnomial(alpha(a), n, k).unwrap();
            prop_assert_eq!(&closed, &fnomial_by_factorials(alpha(a), n, k).unwrap());
            prop_assert_eq!(&closed, &fnomial_by_recurrence(alpha(a), n, k).unwrap());
        }

        #[test]
        fn coefficients_are_symmetric(a in 1u64..5, n in 0u64..20, k in 0u64..20) {
            prop_assume!(k <= n);
            prop_assert_eq!(fnomial(alpha(a), n, k), fnomial(alpha(a), n, n - k));
        }

        #[test]
        fn alpha_one_specializes_to_binomial(n in 0u64..30, k in 0u64..30) {
            prop_assume!(k <= n);
            prop_assert_eq!(
                fnomial(alpha(1), n, k).unwrap(),
                crate::arith::binomial(n, k)
            );
        }

        #[test]
        fn addition_law_holds(a in 1u64..5, n in 1u64..16, k in 1u64..16) {
            prop_assume!(k < n);
            let lhs = fnomial(alpha(a), n, k).unwrap();
            let rhs = arith::power(a, n - k) * fnomial(alpha(a), n - 1, k - 1).unwrap()
                + arith::power(a, k) * fnomial(alpha(a), n - 1, k).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn two_part_multi_is_the_plain_coefficient(a in 1u64..4, n in 0u64..12, k in 0u64..12) {
            prop_assume!(k <= n);
            let c = ColorComposition::new(vec![k, n - k]);
            prop_assert_eq!(multi_fnomial(alpha(a), &c), fnomial(alpha(a), n, k).unwrap());
        }

        // Peeling one color class at a time factors the multi coefficient
        // into plain coefficients of the running remainder.
        #[test]
        fn multi_factors_into_a_coefficient_chain(
            a in 1u64..4,
            parts in proptest::collection::vec(0u64..5, 1..5),
        ) {
            let c = ColorComposition::new(parts.clone());
            let mut remaining = c.total();
            let mut chain = Count::from(1u64);
            for &b in &parts {
                chain *= fnomial(alpha(a), remaining, b).unwrap();
                remaining -= b;
            }
            prop_assert_eq!(multi_fnomial(alpha(a), &c), chain);
        }

        #[test]
        fn two_colors_reproduce_the_row_sum(a in 1u64..4, n in 0u64..10) {
            prop_assert_eq!(colored_total(alpha(a), n, 2), row_sum(alpha(a), n));
        }

        #[test]
        fn triangle_row_sums_match(a in 1u64..4, n in 0u64..10) {
            let t = triangle(alpha(a), n);
            let total: Count = t.rows()[n as usize].iter().sum();
            prop_assert_eq!(total, row_sum(alpha(a), n));
        }
    }
}
