//! Kronecker coefficients with a two-row or hook argument, computed as
//! consecutive differences of sums of products of LR coefficients.
//!
//! With `a_k(λ, μ) = Σ_{α ⊢ k, β ⊢ n-k} c^λ_{αβ} c^μ_{αβ}`:
//!
//! ```text
//! g(λ, μ, (n-k, k))    = a_k(λ, μ) - a_{k-1}(λ, μ)     1 <= k <= n/2
//! g(λ, μ, (n-k, 1^k))  = B_k(λ, μ) - B_{k-1}(λ, μ)     1 <= k <= n-1
//! ```
//!
//! where `b_k` twists the first LR factor by conjugating `α`, and `B_k`
//! sums `b_k, b_{k-2}, b_{k-4}, ...`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_inside, Partition};
use crate::tableaux::LrCache;

/// A computed sequence together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnimodalSequence {
    pub values: Vec<u64>,
    pub family: String,
    pub lambda: Partition,
    pub mu: Partition,
}

fn check_pair(lambda: &Partition, mu: &Partition) -> Result<usize> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "{lambda} and {mu} have sizes {n} and {}",
            mu.size()
        )));
    }
    Ok(n)
}

fn check_k(k: usize, lo: usize, hi: usize, what: &str) -> Result<()> {
    if k < lo || k > hi {
        return Err(Error::OutOfRange(format!(
            "{what}: k = {k} not in {lo}..={hi}"
        )));
    }
    Ok(())
}

/// `a_k(λ, μ)`. Only `α, β ⊆ λ ∩ μ` can contribute, so the sums run over
/// those partitions only.
pub fn a_k(cache: &LrCache, lambda: &Partition, mu: &Partition, k: usize) -> Result<u64> {
    let n = check_pair(lambda, mu)?;
    check_k(k, 0, n, "a_k")?;
    let common = lambda.intersection(mu);
    let betas = partitions_inside(n - k, &common);
    let mut total: u64 = 0;
    for alpha in partitions_inside(k, &common) {
        for beta in &betas {
            let left = cache.coefficient(lambda, &alpha, beta);
            if left == 0 {
                continue;
            }
            let right = cache.coefficient(mu, &alpha, beta);
            total = left
                .checked_mul(right)
                .and_then(|t| total.checked_add(t))
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

/// `b_k(λ, μ) = Σ c^λ_{αβ} c^μ_{α'β}`. Nonzero terms need `α ⊆ λ`,
/// `α' ⊆ μ` and `β ⊆ λ ∩ μ`.
pub fn b_k(cache: &LrCache, lambda: &Partition, mu: &Partition, k: usize) -> Result<u64> {
    let n = check_pair(lambda, mu)?;
    check_k(k, 0, n, "b_k")?;
    let betas = partitions_inside(n - k, &lambda.intersection(mu));
    let alpha_box = lambda.intersection(&mu.conjugate());
    let mut total: u64 = 0;
    for alpha in partitions_inside(k, &alpha_box) {
        let alpha_conj = alpha.conjugate();
        for beta in &betas {
            let left = cache.coefficient(lambda, &alpha, beta);
            if left == 0 {
                continue;
            }
            let right = cache.coefficient(mu, &alpha_conj, beta);
            total = left
                .checked_mul(right)
                .and_then(|t| total.checked_add(t))
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

/// `B_k(λ, μ) = Σ_{i=0}^{⌊k/2⌋} b_{k-2i}(λ, μ)`.
pub fn b_sum_k(cache: &LrCache, lambda: &Partition, mu: &Partition, k: usize) -> Result<u64> {
    let n = check_pair(lambda, mu)?;
    check_k(k, 0, n, "B_k")?;
    (0..=k / 2).try_fold(0u64, |acc, i| {
        acc.checked_add(b_k(cache, lambda, mu, k - 2 * i)?)
            .ok_or(Error::Overflow)
    })
}

fn nonnegative_difference(hi: u64, lo: u64, what: impl FnOnce() -> String) -> Result<u64> {
    hi.checked_sub(lo)
        .ok_or_else(|| Error::Internal(format!("{} is negative ({hi} - {lo})", what())))
}

/// `g(λ, μ, (n-k, k)) = a_k - a_{k-1}` for `1 <= k <= n/2`.
pub fn g_two_row(cache: &LrCache, lambda: &Partition, mu: &Partition, k: usize) -> Result<u64> {
    let n = check_pair(lambda, mu)?;
    check_k(k, 1, n / 2, "two-row Kronecker coefficient")?;
    let hi = a_k(cache, lambda, mu, k)?;
    let lo = a_k(cache, lambda, mu, k - 1)?;
    nonnegative_difference(hi, lo, || format!("g({lambda}, {mu}, ({}, {k}))", n - k))
}

/// `g(λ, μ, (n-k, 1^k)) = B_k - B_{k-1}` for `1 <= k <= n-1`.
pub fn g_hook(cache: &LrCache, lambda: &Partition, mu: &Partition, k: usize) -> Result<u64> {
    let n = check_pair(lambda, mu)?;
    check_k(k, 1, n.saturating_sub(1), "hook Kronecker coefficient")?;
    let hi = b_sum_k(cache, lambda, mu, k)?;
    let lo = b_sum_k(cache, lambda, mu, k - 1)?;
    nonnegative_difference(hi, lo, || format!("g({lambda}, {mu}, ({}, 1^{k}))", n - k))
}

/// `(a_0, ..., a_n)`.
pub fn a_sequence(cache: &LrCache, lambda: &Partition, mu: &Partition) -> Result<UnimodalSequence> {
    let n = check_pair(lambda, mu)?;
    let values = (0..=n)
        .map(|k| a_k(cache, lambda, mu, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(UnimodalSequence {
        values,
        family: "a".into(),
        lambda: lambda.clone(),
        mu: mu.clone(),
    })
}

/// `(B_0, ..., B_n)`, accumulated from the `b_k` in one pass.
pub fn b_sum_sequence(
    cache: &LrCache,
    lambda: &Partition,
    mu: &Partition,
) -> Result<UnimodalSequence> {
    let n = check_pair(lambda, mu)?;
    let b = (0..=n)
        .map(|k| b_k(cache, lambda, mu, k))
        .collect::<Result<Vec<_>>>()?;
    let mut values: Vec<u64> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let prev = if k >= 2 { values[k - 2] } else { 0 };
        values.push(prev.checked_add(b[k]).ok_or(Error::Overflow)?);
    }
    Ok(UnimodalSequence {
        values,
        family: "B".into(),
        lambda: lambda.clone(),
        mu: mu.clone(),
    })
}

/// The shape `ν` as a two-row `(n-k, k)` with `k <= n/2`, if it is one.
pub fn as_two_row(nu: &Partition) -> Option<usize> {
    match nu.parts() {
        [] => Some(0),
        [_] => Some(0),
        [a, b] if a >= b => Some(*b),
        _ => None,
    }
}

/// The shape `ν` as a hook `(n-k, 1^k)`, returning `k`, if it is one.
pub fn as_hook(nu: &Partition) -> Option<usize> {
    let parts = nu.parts();
    if parts.is_empty() {
        return None;
    }
    parts[1..].iter().all(|&p| p == 1).then(|| parts.len() - 1)
}

/// `g(λ, μ, ν)` for a two-row or hook `ν`, by the LR route. Returns `None`
/// when `ν` is neither.
pub fn kronecker_lr(
    cache: &LrCache,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Option<u64>> {
    let n = check_pair(lambda, mu)?;
    if nu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "{nu} has size {} not {n}",
            nu.size()
        )));
    }
    if let Some(k) = as_two_row(nu) {
        if k == 0 {
            return a_k(cache, lambda, mu, 0).map(Some);
        }
        return g_two_row(cache, lambda, mu, k).map(Some);
    }
    if let Some(k) = as_hook(nu) {
        return g_hook(cache, lambda, mu, k).map(Some);
    }
    Ok(None)
}
