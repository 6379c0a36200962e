//! Exact integer polynomials in `q`, the generating polynomials built from
//! them, and the sequence-shape predicates (symmetry, unimodality, strict
//! unimodality, log-concavity).

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Dense polynomial `Σ c_i q^i` with `i64` coefficients.
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
/// All arithmetic is checked and reports [`Error::Overflow`] instead of
/// wrapping.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `c q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `1 + s q^k` for `s = ±1`.
    pub fn binomial_factor(sign: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[0] += 1;
        coeffs[k] += sign;
        Self::new(coeffs)
    }

    /// `1 + q + ... + q^d`.
    pub fn geometric(d: usize) -> Self {
        IntPolynomial {
            coeffs: vec![1; d + 1],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    /// Coefficient of `q^i`, 0 past the degree.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                self.coeff(i)
                    .checked_add(other.coeff(i))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                self.coeff(i)
                    .checked_sub(other.coeff(i))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self::new(coeffs))
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// Quotient and remainder by long division. The divisor's leading
    /// coefficient must divide every leading coefficient met on the way;
    /// otherwise the quotient is not integral and an internal error results.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Precondition(
                "division by the zero polynomial".into(),
            ));
        };
        let lead = divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(dd);
        let mut quot = vec![0i64; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dd];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(Error::Internal(format!(
                    "leading coefficient {top} not divisible by {lead}"
                )));
            }
            let c = top / lead;
            quot[k] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let t = c.checked_mul(d).ok_or(Error::Overflow)?;
                rem[k + j] = rem[k + j].checked_sub(t).ok_or(Error::Overflow)?;
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient that must leave no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "inexact polynomial division: remainder {r}"
            )));
        }
        Ok(q)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a IntPolynomial>) -> Result<Self> {
        factors
            .into_iter()
            .try_fold(Self::one(), |acc, f| acc.checked_mul(f))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            write!(f, "{sign}")?;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{mag}q")?,
                (_, 1) => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}q^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// JSON form: the coefficient array, index = exponent.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

/// Gaussian binomial `[ℓ+m choose m]_q`, whose coefficient of `q^n` is the
/// number of partitions of `n` inside an `ℓ x m` box.
///
/// Built by the recurrence `G(ℓ, m) = G(ℓ-1, m) + q^ℓ G(ℓ, m-1)`: a box
/// partition either has fewer than `ℓ` parts, or has exactly `ℓ` and loses
/// one column when each part is decreased by one.
pub fn q_binomial(rows: usize, cols: usize) -> IntPolynomial {
    // row[m'] holds G(ℓ', m') for the current ℓ'
    let mut prev: Vec<IntPolynomial> = vec![IntPolynomial::one(); cols + 1];
    for l in 1..=rows {
        let mut cur = Vec::with_capacity(cols + 1);
        cur.push(IntPolynomial::one());
        for m in 1..=cols {
            let next = prev[m]
                .checked_add(&cur[m - 1].shift(l))
                .expect("box counts are bounded by binomial(ℓ+m, m)");
            cur.push(next);
        }
        prev = cur;
    }
    prev.swap_remove(cols)
}

/// `𝒜_m(q) = Π_{i=1}^m (1 + q^{2i-1})`.
pub fn almkvist_poly(m: usize) -> Result<IntPolynomial> {
    let factors: Vec<_> = (1..=m)
        .map(|i| IntPolynomial::binomial_factor(1, 2 * i - 1))
        .collect();
    IntPolynomial::product(&factors)
}

/// `ℬ_m(q) = (1 + q^2 + ... + q^N) 𝒜_m(q)` with `N = m² - 1` for odd `m`
/// and `N = m²` for even `m`.
pub fn b_poly(m: usize) -> Result<IntPolynomial> {
    let top = if m % 2 == 1 { m * m - 1 } else { m * m };
    let mut even = vec![0i64; top + 1];
    for c in even.iter_mut().step_by(2) {
        *c = 1;
    }
    IntPolynomial::new(even).checked_mul(&almkvist_poly(m)?)
}

/// `Π_{i=1}^m (1 + q^i)`.
pub fn hughes_poly(m: usize) -> Result<IntPolynomial> {
    let factors: Vec<_> = (1..=m)
        .map(|i| IntPolynomial::binomial_factor(1, i))
        .collect();
    IntPolynomial::product(&factors)
}

/// `s_λ(1, q, ..., q^m)` by the hook-content formula
/// `q^{n(λ)} Π_cells (1 - q^{m+1+c}) / (1 - q^h)`.
pub fn principal_specialization(lambda: &Partition, m: usize) -> Result<IntPolynomial> {
    if lambda.len() > m + 1 {
        return Ok(IntPolynomial::zero());
    }
    let conj = lambda.conjugate();
    let mut num = IntPolynomial::one();
    let mut den = IntPolynomial::one();
    for (r, c) in lambda.cells() {
        // content c - r is at least -(len-1) >= -m, so the exponent is positive
        let exponent = m + 1 + c - r;
        let hook = (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
        num = num.checked_mul(&IntPolynomial::binomial_factor(-1, exponent))?;
        den = den.checked_mul(&IntPolynomial::binomial_factor(-1, hook))?;
    }
    Ok(num.div_exact(&den)?.shift(lambda.weighted_size()))
}

fn window<T>(s: &[T]) -> Result<()> {
    if s.is_empty() {
        Err(Error::EmptyWindow)
    } else {
        Ok(())
    }
}

/// `s[lo + i] == s[hi - i]` for all `i`, on the inclusive window `lo..=hi`.
pub fn is_symmetric<T: PartialEq>(s: &[T], lo: usize, hi: usize) -> Result<bool> {
    if lo > hi || hi >= s.len() {
        return Err(Error::EmptyWindow);
    }
    let w = &s[lo..=hi];
    Ok(w.iter().eq(w.iter().rev()))
}

/// Weakly increasing up to some index, weakly decreasing after it.
pub fn is_unimodal<T: PartialOrd>(s: &[T]) -> Result<bool> {
    window(s)?;
    let mut i = 1;
    while i < s.len() && s[i - 1] <= s[i] {
        i += 1;
    }
    while i < s.len() && s[i - 1] >= s[i] {
        i += 1;
    }
    Ok(i == s.len())
}

/// Strict unimodality with the peak at the centre:
/// `a_1 < ... < a_k > ... > a_n` when `n = 2k - 1`, and
/// `a_1 < ... < a_k = a_{k+1} > ... > a_n` when `n = 2k`.
///
/// The peak position is fixed by the length, so a sequence that rises and
/// falls strictly around an off-centre peak is rejected.
pub fn is_strictly_unimodal<T: PartialOrd>(s: &[T]) -> Result<bool> {
    window(s)?;
    let n = s.len();
    let (rise_end, fall_start) = if n % 2 == 1 {
        (n / 2, n / 2)
    } else {
        if s[n / 2 - 1] != s[n / 2] {
            return Ok(false);
        }
        (n / 2 - 1, n / 2)
    };
    let rising = s[..=rise_end].windows(2).all(|w| w[0] < w[1]);
    let falling = s[fall_start..].windows(2).all(|w| w[0] > w[1]);
    Ok(rising && falling)
}

/// `a_n² >= a_{n-1} a_{n+1}` for every interior index.
pub fn is_log_concave(s: &[i64]) -> Result<bool> {
    window(s)?;
    Ok(s.windows(3).all(|w| {
        let (a, b, c) = (w[0] as i128, w[1] as i128, w[2] as i128);
        b * b >= a * c
    }))
}

/// Weakly increasing.
pub fn is_weakly_increasing<T: PartialOrd>(s: &[T]) -> Result<bool> {
    window(s)?;
    Ok(s.windows(2).all(|w| w[0] <= w[1]))
}
