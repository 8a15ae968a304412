//! Exhaustive enumeration of the counted graph families.
//!
//! Everything here counts by generating each labeled instance and testing it
//! directly; no closed form, recurrence, or factorial is consulted. That
//! independence is the point: these counters are the ground truth the
//! algebraic routes are compared against on small inputs.
//!
//! Every entry point first bounds its instance space and refuses to start
//! when the space exceeds [`INSTANCE_BUDGET`], so a typo'd argument fails
//! fast instead of running for hours.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;

use crate::{Alpha, ColorComposition, Count, Error};

/// Hard ceiling on the number of instances any brute-force counter will
/// walk through.
pub const INSTANCE_BUDGET: u64 = 100_000_000;

/// Edge multiplicities of a labeled multi digraph, indexed by ordered vertex
/// pair. The diagonal is structurally zero (no loops).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityMatrix {
    order: usize,
    entries: Vec<u64>,
}

impl MultiplicityMatrix {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of parallel edges from `from` to `to`.
    pub fn get(&self, from: usize, to: usize) -> u64 {
        self.entries[from * self.order + to]
    }

    pub fn set(&mut self, from: usize, to: usize, multiplicity: u64) {
        assert_ne!(from, to, "loops are not representable");
        self.entries[from * self.order + to] = multiplicity;
    }
}

/// Whether the support digraph has no directed cycle. Debug builds answer
/// twice, by depth-first search and by peeling, and insist the two agree.
pub fn is_acyclic(matrix: &MultiplicityMatrix) -> bool {
    let by_dfs = acyclic_by_dfs(matrix);
    debug_assert_eq!(
        by_dfs,
        acyclic_by_peeling(matrix),
        "acyclicity routes disagree"
    );
    by_dfs
}

/// Iterative depth-first search carrying (vertex, next neighbor to try)
/// frames; a back edge to an on-stack vertex is a cycle.
fn acyclic_by_dfs(matrix: &MultiplicityMatrix) -> bool {
    let n = matrix.order();
    // 0 = unvisited, 1 = on the stack, 2 = finished
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        state[root] = 1;
        let mut stack = vec![(root, 0usize)];
        while let Some(&(v, resume)) = stack.last() {
            let mut child = None;
            let mut w = resume;
            while w < n {
                let candidate = w;
                w += 1;
                if candidate == v || matrix.get(v, candidate) == 0 {
                    continue;
                }
                match state[candidate] {
                    1 => return false,
                    0 => {
                        child = Some(candidate);
                        break;
                    }
                    _ => {}
                }
            }
            stack.last_mut().unwrap().1 = w;
            match child {
                Some(c) => {
                    state[c] = 1;
                    stack.push((c, 0));
                }
                None => {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
    }
    true
}

/// Repeatedly remove vertices of in-degree zero; the digraph is acyclic
/// exactly when everything gets removed.
pub(crate) fn acyclic_by_peeling(matrix: &MultiplicityMatrix) -> bool {
    let n = matrix.order();
    let mut indegree: Vec<usize> = (0..n)
        .map(|j| (0..n).filter(|&i| i != j && matrix.get(i, j) > 0).count())
        .collect();
    let mut ready: Vec<usize> = (0..n).filter(|&j| indegree[j] == 0).collect();
    let mut removed = vec![false; n];
    let mut peeled = 0;
    while let Some(v) = ready.pop() {
        removed[v] = true;
        peeled += 1;
        for w in 0..n {
            if w != v && !removed[w] && matrix.get(v, w) > 0 {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
    }
    peeled == n
}

/// Odometer step over `digits`, all positions sharing one radix, least
/// significant digit last. Returns false when the counter wraps to zero.
pub(crate) fn step_mixed_radix(digits: &mut [u64], radix: u64) -> bool {
    for digit in digits.iter_mut().rev() {
        *digit += 1;
        if *digit < radix {
            return true;
        }
        *digit = 0;
    }
    false
}

/// In-place successor in the lexicographic order of a sequence's distinct
/// rearrangements. Returns false at the final (descending) arrangement.
pub(crate) fn next_multiset_permutation(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

fn checked_pow(base: u64, exp: u64) -> Option<u128> {
    if base == 0 {
        return Some(if exp == 0 { 1 } else { 0 });
    }
    if base == 1 {
        return Some(1);
    }
    if exp > 127 {
        return None;
    }
    (base as u128).checked_pow(exp as u32)
}

fn checked_binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(result)
}

fn checked_multinomial(parts: &[u64]) -> Option<u128> {
    let mut result: u128 = 1;
    let mut placed = 0u64;
    for &b in parts {
        placed = placed.checked_add(b)?;
        result = result.checked_mul(checked_binomial(placed, b)?)?;
    }
    Some(result)
}

/// Err unless the instance space is known to fit the budget. A count that
/// overflows u128 on the way is certainly over.
fn ensure_budget(instances: Option<u128>) -> Result<(), Error> {
    match instances {
        Some(count) if count <= INSTANCE_BUDGET as u128 => Ok(()),
        _ => Err(Error::BudgetExceeded {
            limit: INSTANCE_BUDGET,
        }),
    }
}

/// Count labeled bipartite α-multigraphs on n vertices with a distinguished
/// part of size k: every choice of part, times every assignment of 0..α−1
/// parallel edges to each of the k(n−k) cross pairs, enumerated one by one.
pub fn count_bipartite_bruteforce(alpha: Alpha, n: u64, k: u64) -> Result<Count, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let cross = k * (n - k);
    ensure_budget(
        checked_binomial(n, k)
            .and_then(|parts| checked_pow(alpha.get(), cross).and_then(|a| parts.checked_mul(a))),
    )?;
    let mut total = Count::zero();
    for _part in (0..n as usize).combinations(k as usize) {
        let mut digits = vec![0u64; cross as usize];
        loop {
            total += 1u64;
            if !step_mixed_radix(&mut digits, alpha.get()) {
                break;
            }
        }
    }
    Ok(total)
}

/// Count labeled k-colored α-multigraphs with the given color-class sizes:
/// every arrangement of the colors on the labeled vertices, times every
/// assignment of 0..α−1 parallel edges to each bichromatic pair.
pub fn count_colored_bruteforce(
    alpha: Alpha,
    composition: &ColorComposition,
) -> Result<Count, Error> {
    let n = composition.total();
    let squares: u128 = composition
        .parts()
        .iter()
        .map(|&b| b as u128 * b as u128)
        .sum();
    let doubled = n as u128 * n as u128 - squares;
    assert!(
        doubled.is_multiple_of(2),
        "bichromatic pair count must be an integer"
    );
    let pairs = doubled / 2;
    ensure_budget(
        checked_multinomial(composition.parts()).and_then(|colorings| {
            u64::try_from(pairs)
                .ok()
                .and_then(|p| checked_pow(alpha.get(), p))
                .and_then(|a| colorings.checked_mul(a))
        }),
    )?;
    let mut colors: Vec<usize> = Vec::with_capacity(n as usize);
    for (color, &size) in composition.parts().iter().enumerate() {
        colors.extend(std::iter::repeat_n(color, size as usize));
    }
    let mut total = Count::zero();
    loop {
        let slots = (0..colors.len())
            .flat_map(|i| (i + 1..colors.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| colors[i] != colors[j])
            .count();
        let mut digits = vec![0u64; slots];
        loop {
            total += 1u64;
            if !step_mixed_radix(&mut digits, alpha.get()) {
                break;
            }
        }
        if !next_multiset_permutation(&mut colors) {
            break;
        }
    }
    Ok(total)
}

/// Walk every assignment of 0..α−1 parallel edges to the n(n−1) ordered
/// vertex pairs, in row-major odometer order.
pub(crate) fn for_each_matrix<F>(alpha: Alpha, n: u64, mut visit: F) -> Result<(), Error>
where
    F: FnMut(&MultiplicityMatrix),
{
    let order = n as usize;
    let slots: Vec<(usize, usize)> = (0..order)
        .flat_map(|i| (0..order).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    ensure_budget(checked_pow(alpha.get(), slots.len() as u64))?;
    let mut matrix = MultiplicityMatrix::zero(order);
    loop {
        visit(&matrix);
        if !step_odometer(&mut matrix, &slots, alpha.get()) {
            return Ok(());
        }
    }
}

fn for_each_acyclic<F>(alpha: Alpha, n: u64, mut visit: F) -> Result<(), Error>
where
    F: FnMut(&MultiplicityMatrix),
{
    for_each_matrix(alpha, n, |matrix| {
        if is_acyclic(matrix) {
            visit(matrix);
        }
    })
}

fn step_odometer(matrix: &mut MultiplicityMatrix, slots: &[(usize, usize)], radix: u64) -> bool {
    for &(i, j) in slots.iter().rev() {
        let next = matrix.get(i, j) + 1;
        if next < radix {
            matrix.set(i, j, next);
            return true;
        }
        matrix.set(i, j, 0);
    }
    false
}

/// Count labeled acyclic α-multi digraphs on n vertices by exhaustive
/// enumeration.
pub fn count_dags_bruteforce(alpha: Alpha, n: u64) -> Result<Count, Error> {
    let mut total = Count::zero();
    for_each_acyclic(alpha, n, |_| total += 1u64)?;
    Ok(total)
}

/// The acyclic instances of [`count_dags_bruteforce`], grouped by their
/// number of sources (vertices with no incoming edge).
pub fn source_census(alpha: Alpha, n: u64) -> Result<BTreeMap<u64, Count>, Error> {
    let mut census = BTreeMap::new();
    for_each_acyclic(alpha, n, |matrix| {
        let sources = source_count(matrix);
        *census.entry(sources).or_insert_with(Count::zero) += 1u64;
    })?;
    Ok(census)
}

fn source_count(matrix: &MultiplicityMatrix) -> u64 {
    let n = matrix.order();
    (0..n)
        .filter(|&j| (0..n).all(|i| i == j || matrix.get(i, j) == 0))
        .count() as u64
}
