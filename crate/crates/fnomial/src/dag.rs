//! Counting labeled acyclic α-multi digraphs.
//!
//! Classifying instances by their nonempty set of sources and applying
//! inclusion–exclusion gives the alternating recurrence
//! `A_α(n) = Σ_{k=1}^{n} (−1)^{k+1}·⟨n k⟩·A_α(n−k)` with `A_α(0) = 1`.
//! Separately, `A_α(n) = (−1)^n·⟨n 0⟩⁻¹`: the counting sequence is, up to
//! sign, the first column of the inverse coefficient matrix. Both routes are
//! exposed so they can be played against each other and against the
//! exhaustive enumerator. At α = 2 this is the classic labeled DAG count
//! (A003024).

use num_traits::One;

use crate::{coefficients, inversion, Alpha, Count};

/// `A_α(0..=max_n)` by the alternating source recurrence.
pub fn dag_table(alpha: Alpha, max_n: u64) -> DagCountTable {
    let mut counts: Vec<Count> = Vec::with_capacity(max_n as usize + 1);
    counts.push(Count::one());
    for n in 1..=max_n {
        let mut total = Count::from(0u64);
        for k in 1..=n {
            let term = coefficients::fnomial(alpha, n, k).unwrap() * &counts[(n - k) as usize];
            if k % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        counts.push(total);
    }
    DagCountTable { alpha, counts }
}

/// `A_α(n)` by the alternating source recurrence.
pub fn dag_count(alpha: Alpha, n: u64) -> Count {
    dag_table(alpha, n).counts()[n as usize].clone()
}

/// `A_α(n)` as `(−1)^n·⟨n 0⟩⁻¹`, reading the count off the inverse matrix
/// instead of running the recurrence.
pub fn dag_count_via_inverse(alpha: Alpha, n: u64) -> Count {
    let corner = inversion::inverse_corner(alpha, n);
    let count = if n.is_multiple_of(2) { corner } else { -corner };
    assert!(
        count > Count::from(0u64),
        "an instance count must be positive"
    );
    count
}

/// `A_α(0..=max_n)` for one α.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DagCountTable {
    alpha: Alpha,
    counts: Vec<Count>,
}

impl DagCountTable {
    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn max_n(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    pub fn counts(&self) -> &[Count] {
        &self.counts
    }
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
    fn simple_digraph_counts() {
        let table = dag_table(alpha(2), 6);
        let expected = [1i64, 1, 3, 25, 543, 29281, 3781503];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(table.counts()[n], big(e));
        }
        assert_eq!(table.max_n(), 6);
        assert_eq!(dag_count(alpha(2), 3), big(25));
    }

    #[test]
    fn multiplicity_one_admits_only_the_edgeless_digraph() {
        for n in 0..10 {
            assert_eq!(dag_count(alpha(1), n), big(1));
        }
    }

    #[test]
    fn triple_multiplicity_counts() {
        let table = dag_table(alpha(3), 3);
        assert_eq!(table.counts(), &[big(1), big(1), big(5), big(109)]);
    }

    #[test]
    fn inverse_route_small_values() {
        assert_eq!(dag_count_via_inverse(alpha(2), 4), big(543));
        assert_eq!(dag_count_via_inverse(alpha(2), 5), big(29281));
        assert_eq!(dag_count_via_inverse(alpha(2), 0), big(1));
    }

    proptest! {
        #[test]
        fn recurrence_and_inverse_column_agree(a in 1u64..4, n in 0u64..11) {
            prop_assert_eq!(dag_count(alpha(a), n), dag_count_via_inverse(alpha(a), n));
        }

        #[test]
        fn tables_are_prefix_consistent(a in 1u64..4, n in 0u64..9) {
            let long = dag_table(alpha(a), n + 2);
            let short = dag_table(alpha(a), n);
            prop_assert_eq!(short.counts(), &long.counts()[..=n as usize]);
        }
    }
}
