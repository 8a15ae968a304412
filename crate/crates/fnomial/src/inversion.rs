//! The inverse of the F-nomial coefficient matrix.
//!
//! The lower-triangular matrix `M[n][k] = ⟨n k⟩` has an integer inverse whose
//! first column determines everything else:
//!
//! * corner: `⟨n 0⟩⁻¹ = Σ_{s=1}^{n} (−1)^s Σ ⟨n | c₁,…,c_s⟩`, the inner sum
//!   over strict compositions of n into s parts (empty sum is 1 at n = 0),
//! * general entry: `⟨n k⟩⁻¹ = ⟨n k⟩·⟨n−k 0⟩⁻¹`.
//!
//! This composition sum is the only place inverse entries come from; the
//! independent route (forward triangular solve of `M·X = I`) lives in the
//! check suite, deliberately outside this module.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::compositions::strict_compositions;
use crate::{coefficients, Alpha, Count, Error};

/// `⟨n 0⟩⁻¹` by the signed composition sum.
pub fn inverse_corner(alpha: Alpha, n: u64) -> Count {
    let caches = CornerCaches::up_to(alpha, n);
    corner_with_caches(n, &caches)
}

/// `⟨n k⟩⁻¹ = ⟨n k⟩·⟨n−k 0⟩⁻¹`.
pub fn inverse_entry(alpha: Alpha, n: u64, k: u64) -> Result<Count, Error> {
    let coefficient = coefficients::fnomial(alpha, n, k)?;
    Ok(coefficient * inverse_corner(alpha, n - k))
}

/// Rows 0..=max_n of the inverse matrix, corners computed once and reused
/// across the column.
pub fn inverse_triangle(alpha: Alpha, max_n: u64) -> InverseTriangle {
    let caches = CornerCaches::up_to(alpha, max_n);
    let corners: Vec<Count> = (0..=max_n)
        .map(|n| corner_with_caches(n, &caches))
        .collect();
    let rows = (0..=max_n)
        .map(|n| {
            (0..=n)
                .map(|k| coefficients::fnomial(alpha, n, k).unwrap() * &corners[(n - k) as usize])
                .collect()
        })
        .collect();
    InverseTriangle { alpha, rows }
}

/// The inverse coefficient triangle for one α, rows 0..=max_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseTriangle {
    alpha: Alpha,
    rows: Vec<Vec<Count>>,
}

impl InverseTriangle {
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

/// Factorials and α powers reused across every composition in a corner sum.
struct CornerCaches {
    factorials: Vec<Count>,
    alpha_pows: Vec<Count>,
}

impl CornerCaches {
    fn up_to(alpha: Alpha, n: u64) -> Self {
        let n = n as usize;
        let mut factorials = Vec::with_capacity(n + 1);
        factorials.push(Count::one());
        for m in 1..=n {
            let next = factorials.last().unwrap() * m as u64;
            factorials.push(next);
        }
        // Largest exponent over compositions of n is (n² − n)/2, at the
        // all-ones composition.
        let max_exp = n * n.saturating_sub(1) / 2;
        let mut alpha_pows = Vec::with_capacity(max_exp + 1);
        alpha_pows.push(Count::one());
        for _ in 0..max_exp {
            let next = alpha_pows.last().unwrap() * alpha.get();
            alpha_pows.push(next);
        }
        Self {
            factorials,
            alpha_pows,
        }
    }
}

/// One corner value. Each term is `multinomial(n; c)·α^{(n² − Σcᵢ²)/2)}`, the
/// multi coefficient of the composition, assembled from the caches.
fn corner_with_caches(n: u64, caches: &CornerCaches) -> Count {
    if n == 0 {
        return Count::one();
    }
    let mut corner = Count::zero();
    for s in 1..=n {
        let mut level = Count::zero();
        for composition in strict_compositions(n, s as usize) {
            let mut denominator = Count::one();
            let mut squares = 0u64;
            for &part in &composition {
                denominator *= &caches.factorials[part as usize];
                squares += part * part;
            }
            let exponent = ((n * n - squares) / 2) as usize;
            let (multinomial, remainder) = caches.factorials[n as usize].div_rem(&denominator);
            debug_assert!(remainder.is_zero(), "multinomial quotient must be exact");
            level += multinomial * &caches.alpha_pows[exponent];
        }
        if s % 2 == 1 {
            corner -= level;
        } else {
            corner += level;
        }
    }
    corner
}
