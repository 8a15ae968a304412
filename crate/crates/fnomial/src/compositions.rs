//! Ordered compositions of an integer into a fixed number of parts.
//!
//! Both iterators walk their compositions in lexicographic order with an
//! in-place successor step, so enumeration is allocation-light and needs no
//! recursion. Weak compositions allow zero parts; strict compositions
//! require every part positive. The two are distinct named operations
//! because they feed different sums: weak compositions index colored-graph
//! totals, strict compositions index the inverse-matrix corner sum.

/// All length-`parts` vectors of nonnegative integers summing to `total`,
/// lexicographically ascending. `weak_compositions(0, 0)` yields the single
/// empty composition; `weak_compositions(t, 0)` for t > 0 yields nothing.
pub fn weak_compositions(total: u64, parts: usize) -> WeakCompositions {
    let first = if parts == 0 {
        if total == 0 {
            Some(Vec::new())
        } else {
            None
        }
    } else {
        let mut c = vec![0; parts];
        c[parts - 1] = total;
        Some(c)
    };
    WeakCompositions { next: first }
}

/// All length-`parts` vectors of positive integers summing to `total`,
/// lexicographically ascending. Empty when `parts > total`.
pub fn strict_compositions(total: u64, parts: usize) -> StrictCompositions {
    let inner = if (parts as u64) <= total {
        weak_compositions(total - parts as u64, parts)
    } else {
        WeakCompositions { next: None }
    };
    StrictCompositions { inner }
}

#[derive(Debug)]
pub struct WeakCompositions {
    next: Option<Vec<u64>>,
}

impl Iterator for WeakCompositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut successor = current.clone();
        if advance(&mut successor) {
            self.next = Some(successor);
        }
        Some(current)
    }
}

/// Lexicographic successor: increment the rightmost position that still has
/// mass to its right, then flush that mass to the end.
fn advance(composition: &mut [u64]) -> bool {
    let parts = composition.len();
    if parts == 0 {
        return false;
    }
    let mut suffix_sum = 0;
    for i in (0..parts - 1).rev() {
        suffix_sum += composition[i + 1];
        if suffix_sum > 0 {
            composition[i] += 1;
            for slot in composition[i + 1..].iter_mut() {
                *slot = 0;
            }
            composition[parts - 1] = suffix_sum - 1;
            return true;
        }
    }
    false
}

#[derive(Debug)]
pub struct StrictCompositions {
    inner: WeakCompositions,
}

impl Iterator for StrictCompositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let mut composition = self.inner.next()?;
        for part in composition.iter_mut() {
            *part += 1;
        }
        Some(composition)
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::arith;
    use crate::Count;

    #[test]
    fn weak_compositions_of_two_into_two() {
        let all: Vec<_> = weak_compositions(2, 2).collect();
        assert_eq!(all, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn weak_compositions_edge_cases() {
        assert_eq!(
            weak_compositions(0, 0).collect::<Vec<_>>(),
            vec![Vec::<u64>::new()]
        );
        assert_eq!(weak_compositions(3, 0).count(), 0);
        assert_eq!(
            weak_compositions(0, 3).collect::<Vec<_>>(),
            vec![vec![0, 0, 0]]
        );
        assert_eq!(weak_compositions(5, 1).collect::<Vec<_>>(), vec![vec![5]]);
    }

    #[test]
    fn strict_compositions_of_four_into_two() {
        let all: Vec<_> = strict_compositions(4, 2).collect();
        assert_eq!(all, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
    }

    #[test]
    fn strict_compositions_edge_cases() {
        assert_eq!(
            strict_compositions(0, 0).collect::<Vec<_>>(),
            vec![Vec::<u64>::new()]
        );
        assert_eq!(strict_compositions(2, 3).count(), 0);
        assert_eq!(
            strict_compositions(3, 3).collect::<Vec<_>>(),
            vec![vec![1, 1, 1]]
        );
    }

    proptest! {
        #[test]
        fn weak_count_is_stars_and_bars(total in 0u64..12, parts in 1usize..6) {
            let count = weak_compositions(total, parts).count();
            let expected = arith::binomial(total + parts as u64 - 1, parts as u64 - 1);
            prop_assert_eq!(Count::from(count), expected);
        }

        #[test]
        fn strict_count_is_bars_between_stars(total in 0u64..12, parts in 1usize..6) {
            let count = strict_compositions(total, parts).count();
            let expected = if total == 0 {
                Count::from(0u64)
            } else {
                arith::binomial(total - 1, parts as u64 - 1)
            };
            prop_assert_eq!(Count::from(count), expected);
        }

        #[test]
        fn weak_enumeration_is_lexicographic_and_sums_correctly(
            total in 0u64..10,
            parts in 1usize..5,
        ) {
            let all: Vec<_> = weak_compositions(total, parts).collect();
            for c in &all {
                prop_assert_eq!(c.len(), parts);
                prop_assert_eq!(c.iter().sum::<u64>(), total);
            }
            for pair in all.windows(2) {
                prop_assert!(pair[0] < pair[1]);
            }
        }

        #[test]
        fn strict_parts_are_positive(total in 1u64..10, parts in 1usize..5) {
            for c in strict_compositions(total, parts) {
                prop_assert!(c.iter().all(|&p| p > 0));
                prop_assert_eq!(c.iter().sum::<u64>(), total);
            }
        }
    }
}
