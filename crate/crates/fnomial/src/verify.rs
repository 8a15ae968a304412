//! The executable check suite: every identity the crate claims, replayed on
//! demand, plus the formula-versus-enumeration comparisons.
//!
//! Each check is timed and reported individually. A mismatch is reported,
//! never panicked, so a run always produces the full list of verdicts; only
//! an over-budget enumeration aborts the run early, as an error.
//!
//! `budget` bounds the instance spaces the enumeration checks will select
//! (per family, not in aggregate). It may be raised past the oracle's own
//! ceiling, in which case the oracle's refusal surfaces as the run's error.

use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::compositions::weak_compositions;
use crate::{
    arith, coefficients, dag, inversion, oracle, tiling, Alpha, ColorComposition, Count, Error,
};

/// Upper vertex count attempted by the enumeration checks regardless of
/// budget, so a permissive budget still terminates.
const MAX_ORACLE_N: u64 = 8;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub alphas: Vec<Alpha>,
    pub budget: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            alphas: [1, 2, 3].iter().map(|&a| Alpha::new(a).unwrap()).collect(),
            budget: 1 << 20,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn pass(detail: String) -> Self {
        Self {
            passed: true,
            detail,
        }
    }

    fn fail(detail: String) -> Self {
        Self {
            passed: false,
            detail,
        }
    }
}

/// Run every check against the configured α values and budget.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport, Error> {
    let checks = vec![
        timed("term-addition-law", || check_term_addition_law(config))?,
        timed("sequence-specialization", || check_specialization(config))?,
        timed("coefficient-triple-route", || check_triple_route(config))?,
        timed("inverse-product-identity", || {
            check_product_identity(config)
        })?,
        timed("corner-triangular-solve", || check_corner_solve(config))?,
        timed("dag-theorem-identity", || check_theorem_identity(config))?,
        timed("oracle-bipartite", || check_oracle_bipartite(config))?,
        timed("oracle-colored", || check_oracle_colored(config))?,
        timed("oracle-dags", || check_oracle_dags(config))?,
        timed("source-census", || check_source_census(config))?,
        timed("acyclicity-two-routes", || check_acyclicity_routes(config))?,
    ];
    Ok(VerifyReport { checks })
}

fn timed<F>(name: &'static str, body: F) -> Result<CheckReport, Error>
where
    F: FnOnce() -> Result<Outcome, Error>,
{
    let start = Instant::now();
    let outcome = body()?;
    Ok(CheckReport {
        name,
        passed: outcome.passed,
        detail: outcome.detail,
        elapsed: start.elapsed(),
    })
}

/// `(k+m)_F = α^m·k_F + α^k·m_F` for k, m ≤ 20.
fn check_term_addition_law(config: &VerifyConfig) -> Result<Outcome, Error> {
    let mut cases = 0u64;
    for &alpha in &config.alphas {
        let a = alpha.get();
        for k in 0..=20u64 {
            for m in 0..=20u64 {
                let lhs = tiling::n_alpha(alpha, k + m);
                let rhs = arith::power(a, m) * tiling::n_alpha(alpha, k)
                    + arith::power(a, k) * tiling::n_alpha(alpha, m);
                if lhs != rhs {
                    return Ok(Outcome::fail(format!(
                        "term addition law fails at alpha={a}, k={k}, m={m}"
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(Outcome::pass(format!("{cases} cases")))
}

/// The general generating-function coefficient collapses to `n·α^{n−1}` on
/// the diagonal, for n ≤ 50.
fn check_specialization(config: &VerifyConfig) -> Result<Outcome, Error> {
    let mut cases = 0u64;
    for &alpha in &config.alphas {
        let params = tiling::SequenceParams::n_alpha(alpha);
        for n in 0..=50u64 {
            if tiling::coefficient(params, n) != tiling::n_alpha(alpha, n) {
                return Ok(Outcome::fail(format!(
                    "diagonal specialization fails at alpha={alpha}, n={n}"
                )));
            }
            cases += 1;
        }
    }
    Ok(Outcome::pass(format!("{cases} cases")))
}

/// Closed form, factorial quotient, and addition-law recurrence agree on
/// every coefficient with n ≤ 30.
fn check_triple_route(config: &VerifyConfig) -> Result<Outcome, Error> {
    const MAX_N: u64 = 30;
    let mut cases = 0u64;
    for &alpha in &config.alphas {
        let rows = coefficients::recurrence_rows(alpha, MAX_N);
        for n in 0..=MAX_N {
            for k in 0..=n {
                let closed = coefficients::fnomial(alpha, n, k).unwrap();
                let by_factorials = coefficients::fnomial_by_factorials(alpha, n, k).unwrap();
                let by_recurrence = &rows[n as usize][k as usize];
                if closed != by_factorials || &closed != by_recurrence {
                    return Ok(Outcome::fail(format!(
                        "coefficient routes disagree at alpha={alpha}, n={n}, k={k}"
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(Outcome::pass(format!("{cases} coefficients x 3 routes")))
}

/// The forward and inverse triangles multiply to the identity, size 21×21.
fn check_product_identity(config: &VerifyConfig) -> Result<Outcome, Error> {
    const SIZE: u64 = 20;
    let mut cases = 0u64;
    for &alpha in &config.alphas {
        let forward = coefficients::triangle(alpha, SIZE);
        let inverse = inversion::inverse_triangle(alpha, SIZE);
        for n in 0..=SIZE {
            for k in 0..=n {
                let product: Count = (k..=n)
                    .map(|j| forward.entry(n, j) * inverse.entry(j, k))
                    .sum();
                let expected = if n == k { Count::one() } else { Count::zero() };
                if product != expected {
                    return Ok(Outcome::fail(format!(
                        "product entry (n={n}, k={k}) is not identity at alpha={alpha}"
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(Outcome::pass(format!("{cases} product entries")))
}

/// Corners from the composition sum equal the column obtained by forward
/// substitution on `M·X = e₀`, an independent linear-algebra route.
fn check_corner_solve(config: &VerifyConfig) -> Result<Outcome, Error> {
    const MAX_N: u64 = 20;
    let mut cases = 0u64;
    for &alpha in &config.alphas {
        let solved = solve_corner_column(alpha, MAX_N);
        let inverse = inversion::inverse_triangle(alpha, MAX_N);
        for n in 0..=MAX_N {
            if &solved[n as usize] != inverse.entry(n, 0) {
                return Ok(Outcome::fail(format!(
                    "composition sum and triangular solve disagree at alpha={alpha}, n={n}"
                )));
            }
            cases += 1;
        }
    }
    Ok(Outcome::pass(format!("{cases} corners")))
}

/// Forward substitution down column 0 of `M·X = I`, using nothing from the
/// inversion module.
pub(crate) fn solve_corner_column(alpha: Alpha, max_n: u64) -> Vec<Count> {
    let forward = coefficients::triangle(alpha, max_n);
    let mut column: Vec<Count> = Vec::with_capacity(max_n as usize + 1);
    for n in 0..=max_n {
        let mut residue = if n == 0 { Count::one() } else { Count::zero() };
        for j in 0..n {
            residue -= forward.entry(n, j) * &column[j as usize];
        }
        let (value, remainder) = residue.div_rem(forward.entry(n, n));
        assert!(remainder.is_zero(), "triangular solve must stay integral");
        column.push(value);
    }
    column
}

/// `A_α(n) = (−1)^n·⟨n 0⟩⁻¹` for n ≤ 15.
fn check_theorem_identity(config: &VerifyConfig) -> Result<Outcome, Error> {
    const MAX_N: u64 = 15;
    let mut cases = 0u64;
    for &alpha in &config.alphas {
        let table = dag::dag_table(alpha, MAX_N);
        let inverse = inversion::inverse_triangle(alpha, MAX_N);
        for n in 0..=MAX_N {
            let corner = inverse.entry(n, 0);
            let signed = if n % 2 == 0 { corner.clone() } else { -corner };
            if table.counts()[n as usize] != signed {
                return Ok(Outcome::fail(format!(
                    "recurrence count and signed corner disagree at alpha={alpha}, n={n}"
                )));
            }
            cases += 1;
        }
    }
    Ok(Outcome::pass(format!("{cases} cases")))
}

/// Closed-form bipartite counts against exhaustive enumeration, on every
/// (n, k) whose instance space fits the budget.
fn check_oracle_bipartite(config: &VerifyConfig) -> Result<Outcome, Error> {
    let budget = Count::from(config.budget);
    let mut cases = 0u64;
    for &alpha in &config.alphas {
        for n in 0..=MAX_ORACLE_N {
            for k in 0..=n {
                let size = arith::binomial(n, k) * arith::power(alpha.get(), k * (n - k));
                if size > budget {
                    continue;
                }
                let enumerated = oracle::count_bipartite_bruteforce(alpha, n, k)?;
                if enumerated != coefficients::fnomial(alpha, n, k).unwrap() {
                    return Ok(Outcome::fail(format!(
                        "bipartite enumeration mismatch at alpha={alpha}, n={n}, k={k}"
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(Outcome::pass(format!("{cases} families enumerated")))
}

/// Multi coefficients against exhaustive enumeration over compositions of
/// n ≤ 5 into at most 4 parts, within budget.
fn check_oracle_colored(config: &VerifyConfig) -> Result<Outcome, Error> {
    let budget = Count::from(config.budget);
    let mut cases = 0u64;
    for &alpha in &config.alphas {
        for n in 0..=5u64 {
            for parts in 1..=4usize {
                for comp in weak_compositions(n, parts) {
                    let composition = ColorComposition::new(comp);
                    let squares: u64 = composition.parts().iter().map(|&b| b * b).sum();
                    let pairs = (n * n - squares) / 2;
                    let size =
                        arith::multinomial(composition.parts()) * arith::power(alpha.get(), pairs);
                    if size > budget {
                        continue;
                    }
                    let enumerated = oracle::count_colored_bruteforce(alpha, &composition)?;
                    if enumerated != coefficients::multi_fnomial(alpha, &composition) {
                        return Ok(Outcome::fail(format!(
                            "colored enumeration mismatch at alpha={alpha}, sizes {:?}",
                            composition.parts()
                        )));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(Outcome::pass(format!("{cases} families enumerated")))
}

/// Vertex counts whose full multiplicity-matrix space fits the budget.
fn dag_sizes_within_budget(alpha: Alpha, budget: &Count) -> Vec<u64> {
    (0..=MAX_ORACLE_N)
        .filter(|&n| &arith::power(alpha.get(), n * n.saturating_sub(1)) <= budget)
        .collect()
}

/// Acyclic-digraph counts from the recurrence against exhaustive
/// enumeration.
fn check_oracle_dags(config: &VerifyConfig) -> Result<Outcome, Error> {
    let budget = Count::from(config.budget);
    let mut cases = 0u64;
    let mut largest = 0u64;
    for &alpha in &config.alphas {
        for n in dag_sizes_within_budget(alpha, &budget) {
            let enumerated = oracle::count_dags_bruteforce(alpha, n)?;
            if enumerated != dag::dag_count(alpha, n) {
                return Ok(Outcome::fail(format!(
                    "acyclic enumeration mismatch at alpha={alpha}, n={n}"
                )));
            }
            cases += 1;
            largest = largest.max(n);
        }
    }
    Ok(Outcome::pass(format!(
        "{cases} counts, largest n={largest}"
    )))
}

/// Census of acyclic instances by source count: key 0 never occurs, values
/// sum to the total, and the pair counts `Σ_{s≥k} C(s,k)·census[s]` match
/// `⟨n k⟩·A_α(n−k)`, the pivot of the counting recurrence.
fn check_source_census(config: &VerifyConfig) -> Result<Outcome, Error> {
    let budget = Count::from(config.budget);
    let mut cases = 0u64;
    for &alpha in &config.alphas {
        for n in dag_sizes_within_budget(alpha, &budget) {
            if n == 0 {
                continue;
            }
            let census = oracle::source_census(alpha, n)?;
            if census.contains_key(&0) {
                return Ok(Outcome::fail(format!(
                    "acyclic instance without a source at alpha={alpha}, n={n}"
                )));
            }
            let total: Count = census.values().sum();
            if total != dag::dag_count(alpha, n) {
                return Ok(Outcome::fail(format!(
                    "census total mismatch at alpha={alpha}, n={n}"
                )));
            }
            for k in 1..=n {
                let pairs: Count = census
                    .iter()
                    .filter(|&(&s, _)| s >= k)
                    .map(|(&s, count)| arith::binomial(s, k) * count)
                    .sum();
                let expected =
                    coefficients::fnomial(alpha, n, k).unwrap() * dag::dag_count(alpha, n - k);
                if pairs != expected {
                    return Ok(Outcome::fail(format!(
                        "source-set pair count mismatch at alpha={alpha}, n={n}, k={k}"
                    )));
                }
            }
            cases += 1;
        }
    }
    Ok(Outcome::pass(format!("{cases} censuses")))
}

/// Depth-first search and topological peeling agree on every enumerated
/// multiplicity matrix, acyclic or not.
fn check_acyclicity_routes(config: &VerifyConfig) -> Result<Outcome, Error> {
    let budget = Count::from(config.budget);
    let mut instances = 0u64;
    let mut disagreements = 0u64;
    for &alpha in &config.alphas {
        for n in dag_sizes_within_budget(alpha, &budget) {
            oracle::for_each_matrix(alpha, n, |matrix| {
                instances += 1;
                if oracle::is_acyclic(matrix) != oracle::acyclic_by_peeling(matrix) {
                    disagreements += 1;
                }
            })?;
        }
    }
    if disagreements > 0 {
        return Ok(Outcome::fail(format!(
            "{disagreements} of {instances} instances classified differently"
        )));
    }
    Ok(Outcome::pass(format!("{instances} instances, both routes")))
}
