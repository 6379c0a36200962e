use std::collections::BTreeSet;
use std::time::Instant;

use kroncomb::kronecker::{a_sequence, b_sum_sequence, g_hook, g_two_row};
use kroncomb::partition::partitions_of;
use kroncomb::qseries::{
    almkvist_poly, b_poly, is_strictly_unimodal, is_symmetric, is_unimodal, is_weakly_increasing,
    q_binomial,
};
use kroncomb::statistics::{
    binomial, corner_pairs, d_count, distinct_odd_to_self_conjugate, enumerate_distinct_odd,
    enumerate_distinct_parts, gamma_stat_exact, p_stat_sequence, phi_injection, q_count,
    self_conjugate_to_distinct_odd, staircase_bijection, staircase_inverse, w_sequence,
};
use kroncomb::{
    enumerate_in_rectangle, mn_character, CharacterCache, CycleType, Error, LrCache, Partition,
    Rectangle,
};
use num::{BigRational, ToPrimitive};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::compute::{LR_GUARD, ORACLE_GUARD};
use crate::report::{Status, VerificationReport};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckId {
    /// Corner statistic sequences are symmetric and unimodal.
    #[value(name = "thm1.1")]
    CornerStatistic,
    /// Diagonal q-binomial coefficients are strictly unimodal.
    #[value(name = "thm1.2")]
    StrictDiagonal,
    /// Distinct odd part counts are strictly unimodal on the inner window.
    #[value(name = "thm5.2")]
    StrictDistinctOdd,
    /// The padded distinct odd product is symmetric and unimodal.
    #[value(name = "thm6.1")]
    PaddedProduct,
    /// a-sequences are symmetric and unimodal.
    #[value(name = "lemma3.1")]
    TwoRowSums,
    /// B-sequences are weakly increasing.
    #[value(name = "lemma6.2")]
    HookSums,
    /// q-binomial coefficients are symmetric and unimodal.
    #[value(name = "cor4.1")]
    Rectangle,
    /// Counts of partitions into distinct bounded parts.
    #[value(name = "cor4.2")]
    DistinctParts,
    /// Self-conjugate counts are weakly increasing.
    #[value(name = "cor6.3")]
    SelfConjugate,
    #[value(name = "oracle-xcheck")]
    OracleCrossCheck,
    #[value(name = "scan-gamma")]
    GammaScan,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::CornerStatistic,
        CheckId::StrictDiagonal,
        CheckId::StrictDistinctOdd,
        CheckId::PaddedProduct,
        CheckId::TwoRowSums,
        CheckId::HookSums,
        CheckId::Rectangle,
        CheckId::DistinctParts,
        CheckId::SelfConjugate,
        CheckId::OracleCrossCheck,
        CheckId::GammaScan,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::CornerStatistic => "thm1.1",
            CheckId::StrictDiagonal => "thm1.2",
            CheckId::StrictDistinctOdd => "thm5.2",
            CheckId::PaddedProduct => "thm6.1",
            CheckId::TwoRowSums => "lemma3.1",
            CheckId::HookSums => "lemma6.2",
            CheckId::Rectangle => "cor4.1",
            CheckId::DistinctParts => "cor4.2",
            CheckId::SelfConjugate => "cor6.3",
            CheckId::OracleCrossCheck => "oracle-xcheck",
            CheckId::GammaScan => "scan-gamma",
        }
    }
}

/// Grid bounds shared by all suites. Unset bounds fall back to per-suite
/// defaults.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct Grid {
    #[arg(long)]
    pub l_min: Option<usize>,
    #[arg(long)]
    pub l_max: Option<usize>,
    #[arg(long)]
    pub m_min: Option<usize>,
    #[arg(long)]
    pub m_max: Option<usize>,
    /// Single value of m; overrides --m-min/--m-max.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub r_max: Option<usize>,
    #[arg(long)]
    pub z: Option<f64>,
}

impl Grid {
    fn rows(&self, lo: usize, hi: usize) -> Vec<usize> {
        (self.l_min.unwrap_or(lo)..=self.l_max.unwrap_or(hi)).collect()
    }

    fn cols(&self, lo: usize, hi: usize) -> Vec<usize> {
        match self.m {
            Some(m) => vec![m],
            None => (self.m_min.unwrap_or(lo)..=self.m_max.unwrap_or(hi)).collect(),
        }
    }

    fn sizes(&self, lo: usize, hi: usize) -> Vec<usize> {
        (self.n_min.unwrap_or(lo)..=self.n_max.unwrap_or(hi)).collect()
    }

    fn has_rows(&self) -> bool {
        self.l_min.is_some() || self.l_max.is_some()
    }
}

type Outcome = Result<(Status, Value), Error>;

fn point(
    id: CheckId,
    params: &[(&str, Value)],
    timing: bool,
    body: impl FnOnce() -> Outcome,
) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(id.as_str());
    for (k, v) in params {
        report = report.param(k, v.clone());
    }
    let report = match body() {
        Ok((status, witness)) => report.status(status).witness(witness),
        Err(e) => report
            .status(Status::Fail)
            .witness(json!({ "error": e.to_string() })),
    };
    if timing {
        VerificationReport {
            elapsed_ms: start.elapsed().as_millis() as u64,
            ..report
        }
    } else {
        report
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// First absolute index `i` at which the pair `(s[i], s[i+1])` breaks strict
/// unimodality, for a window starting at absolute index `offset`.
pub fn first_strict_violation<T: Ord>(s: &[T], offset: usize) -> Option<usize> {
    let n = s.len();
    let (rise_end, fall_start) = if n % 2 == 1 {
        (n / 2, n / 2)
    } else {
        (n / 2 - 1, n / 2)
    };
    (0..n.saturating_sub(1))
        .find(|&i| {
            if i < rise_end {
                s[i] >= s[i + 1]
            } else if i >= fall_start {
                s[i] <= s[i + 1]
            } else {
                s[i] != s[i + 1]
            }
        })
        .map(|i| i + offset)
}

/// Runs one suite over its grid. Grid points are evaluated in parallel and
/// returned in grid order.
pub fn run_check(
    id: CheckId,
    grid: &Grid,
    timing: bool,
    guards_enabled: bool,
) -> Result<Vec<VerificationReport>, CliError> {
    let guard = |name: &str, value: usize, limit: usize| -> Result<(), CliError> {
        if guards_enabled && value > limit {
            return Err(CliError::Guard(format!(
                "{name} guard: size {value} exceeds {limit} (pass --unsafe-no-guard to override)"
            )));
        }
        Ok(())
    };
    let reports = match id {
        CheckId::CornerStatistic => corner_statistic(grid, timing),
        CheckId::StrictDiagonal => strict_diagonal(grid, timing),
        CheckId::StrictDistinctOdd => strict_distinct_odd(grid, timing),
        CheckId::PaddedProduct => padded_product(grid, timing),
        CheckId::TwoRowSums | CheckId::HookSums => {
            let sizes = grid.sizes(1, 8);
            guard("LR", sizes.iter().copied().max().unwrap_or(0), LR_GUARD)?;
            partition_pair_sums(id, &sizes, timing)
        }
        CheckId::Rectangle => rectangle(grid, timing),
        CheckId::DistinctParts => distinct_parts(grid, timing),
        CheckId::SelfConjugate => self_conjugate(grid, timing),
        CheckId::OracleCrossCheck => {
            let sizes = grid.sizes(1, 6);
            guard(
                "oracle Kronecker",
                sizes.iter().copied().max().unwrap_or(0),
                ORACLE_GUARD,
            )?;
            oracle_cross_check(grid, &sizes, timing)
        }
        CheckId::GammaScan => gamma_scan(grid, timing)?,
    };
    Ok(reports)
}

// rectangles small enough for the folded extras in the corner statistic suite
const COMPLEMENT_MAP_SIDE: usize = 5;
const COMPLEMENT_MAP_R: usize = 2;
const LR_IDENTITY_SIDE: usize = 4;
const LR_IDENTITY_R: usize = 2;

fn corner_statistic(grid: &Grid, timing: bool) -> Vec<VerificationReport> {
    let r_max = grid.r_max.unwrap_or(4);
    let mut points = Vec::new();
    for l in grid.rows(1, 8) {
        for m in grid.cols(1, 8) {
            for r in 0..=r_max.min(l * m) {
                points.push((l, m, r));
            }
        }
    }
    let cache = LrCache::new();
    points
        .par_iter()
        .map(|&(l, m, r)| {
            let params = [("l", json!(l)), ("m", json!(m)), ("r", json!(r))];
            point(CheckId::CornerStatistic, &params, timing, || {
                let seq = p_stat_sequence(l, m, r)?;
                let top = l * m;
                let symmetric = is_symmetric(&seq, r, top)?;
                let unimodal = is_unimodal(&seq[r..=top])?;
                let mut witness = json!({
                    "window": [r, top],
                    "sequence": &seq[r..=top],
                    "symmetric": symmetric,
                    "unimodal": unimodal,
                });
                let mut ok = symmetric && unimodal;
                if l <= COMPLEMENT_MAP_SIDE && m <= COMPLEMENT_MAP_SIDE && r <= COMPLEMENT_MAP_R {
                    let bad = complement_map_failure(l, m, r)?;
                    witness["complement_map"] =
                        json!(bad.map_or(json!("bijective"), |n| json!({ "fails_at_n": n })));
                    ok &= bad.is_none();
                }
                if l <= LR_IDENTITY_SIDE && m <= LR_IDENTITY_SIDE && r <= LR_IDENTITY_R {
                    let bad = corner_lr_identity_failure(&cache, l, m, r)?;
                    ok &= bad.is_none();
                    witness["lr_identity"] =
                        json!(bad.map_or(json!("holds"), |a| json!({ "alpha": a })));
                }
                Ok((pass_if(ok), witness))
            })
        })
        .collect()
}

// (α, π) ↦ (π̄, ᾱ) must map the pairs at n exactly onto the pairs at ℓm - n + r
fn complement_map_failure(l: usize, m: usize, r: usize) -> Result<Option<usize>, Error> {
    let rect = Rectangle::new(l, m)?;
    for n in r..=l * m {
        let mut image = corner_pairs(l, m, n, r)?
            .iter()
            .map(|pair| pair.complement(rect))
            .collect::<Result<Vec<_>, _>>()?;
        image.sort();
        let mut target = corner_pairs(l, m, l * m + r - n, r)?;
        target.sort();
        let distinct = image.windows(2).all(|w| w[0] != w[1]);
        if !distinct || image != target {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

// Σ_β c^λ_{αβ} c^μ_{αβ} = binomial(v(α), r) for λ = (m^ℓ, 1^r), μ = (m+r, m^{ℓ-1})
fn corner_lr_identity_failure(
    cache: &LrCache,
    l: usize,
    m: usize,
    r: usize,
) -> Result<Option<Partition>, Error> {
    let mut lam = vec![m; l];
    lam.extend(std::iter::repeat_n(1, r));
    let lam = Partition::new(lam)?;
    let mut mu = vec![m; l];
    mu[0] += r;
    let mu = Partition::new(mu)?;
    let rect = Rectangle::new(l, m)?;
    for size in 0..=l * m {
        for alpha in enumerate_in_rectangle(size, rect) {
            let total: u64 = partitions_of(l * m + r - size)
                .iter()
                .map(|beta| {
                    cache.coefficient(&lam, &alpha, beta) * cache.coefficient(&mu, &alpha, beta)
                })
                .sum();
            if total != binomial(alpha.corner_count() as u64, r as u64) {
                return Ok(Some(alpha));
            }
        }
    }
    Ok(None)
}

/// Diagonal sides where strict unimodality is known to fail.
pub const KNOWN_DIAGONAL_FAILURES: [usize; 3] = [3, 4, 6];
const ORACLE_SPOT_CHECK: [usize; 2] = [3, 4];

enum DiagonalPoint {
    Window(usize, usize),
    Oracle(usize),
}

fn strict_claimed(l: usize, m: usize) -> bool {
    (l == m && (m >= 7 || m == 2 || m == 5)) || (l >= 8 && m >= 8)
}

fn strict_diagonal(grid: &Grid, timing: bool) -> Vec<VerificationReport> {
    let mut points = Vec::new();
    let shapes: Vec<(usize, usize)> = if grid.has_rows() {
        let cols = grid.cols(2, 12);
        grid.rows(2, 12)
            .into_iter()
            .flat_map(|l| cols.iter().map(move |&m| (l, m)))
            .collect()
    } else {
        grid.cols(2, 12).into_iter().map(|m| (m, m)).collect()
    };
    for (l, m) in shapes {
        points.push(DiagonalPoint::Window(l, m));
        if l == m && ORACLE_SPOT_CHECK.contains(&m) {
            points.push(DiagonalPoint::Oracle(m));
        }
    }
    points
        .par_iter()
        .map(|p| match *p {
            DiagonalPoint::Window(l, m) => {
                let params = [("l", json!(l)), ("m", json!(m))];
                point(CheckId::StrictDiagonal, &params, timing, || {
                    let top = l * m;
                    if top < 2 {
                        return Ok((Status::Finding, json!({ "window": "empty" })));
                    }
                    let coeffs = q_binomial(l, m).into_coeffs();
                    let window = &coeffs[1..top];
                    let strict = is_strictly_unimodal(window)?;
                    let expected_failure = l == m && KNOWN_DIAGONAL_FAILURES.contains(&m);
                    let status = match (strict, expected_failure) {
                        (true, false) => Status::Pass,
                        (true, true) => Status::Fail,
                        (false, true) => Status::Finding,
                        (false, false) if strict_claimed(l, m) => Status::Fail,
                        (false, false) => Status::Finding,
                    };
                    let mut witness = json!({ "window": [1, top - 1], "strict": strict });
                    if let Some(i) = first_strict_violation(window, 1) {
                        witness["violation_at"] = json!(i);
                        witness["values"] = json!([coeffs[i], coeffs[i + 1]]);
                    }
                    if expected_failure {
                        witness["expected"] = json!("known failure");
                    }
                    Ok((status, witness))
                })
            }
            DiagonalPoint::Oracle(m) => {
                let params = [("m", json!(m)), ("route", json!("kronecker-oracle"))];
                point(CheckId::StrictDiagonal, &params, timing, || {
                    diagonal_oracle(m)
                })
            }
        })
        .collect()
}

// g(m^m, m^m, (m²-k, k)) = p_k(m,m) - p_{k-1}(m,m) for 2 <= k <= m²/2, by characters
fn diagonal_oracle(m: usize) -> Outcome {
    let n = m * m;
    let square = Partition::rectangle(m, m);
    let coeffs = q_binomial(m, m).into_coeffs();
    let chars = CharacterCache::new();
    let mut values = Vec::new();
    let mut zeros = Vec::new();
    let mut mismatch = None;
    for k in 2..=n / 2 {
        let g = chars.kronecker(&square, &square, &Partition::new(vec![n - k, k])?)?;
        let diff = coeffs[k] - coeffs[k - 1];
        if g as i64 != diff && mismatch.is_none() {
            mismatch = Some(k);
        }
        if g == 0 {
            zeros.push(k);
        }
        values.push(g);
    }
    let ok = mismatch.is_none() && !zeros.is_empty();
    Ok((
        pass_if(ok),
        json!({ "kronecker": values, "zero_at": zeros, "mismatch_at": mismatch }),
    ))
}

const STRICT_WINDOW_START: usize = 26;
const STRICT_WINDOW_FROM_M: usize = 27;
const TIGHTNESS_FROM_M: usize = 13;
const BOUNDARY_FROM_M: usize = 5;
const GAP_FROM_N: usize = 26;

enum OddPoint {
    Product(usize),
    Injection(usize),
}

fn strict_distinct_odd(grid: &Grid, timing: bool) -> Vec<VerificationReport> {
    let mut points: Vec<OddPoint> = grid
        .cols(27, 30)
        .into_iter()
        .map(OddPoint::Product)
        .collect();
    points.extend(
        grid.sizes(3, 60)
            .into_iter()
            .filter(|&n| n >= 3)
            .map(OddPoint::Injection),
    );
    points
        .par_iter()
        .map(|p| match *p {
            OddPoint::Product(m) => point(
                CheckId::StrictDistinctOdd,
                &[("m", json!(m))],
                timing,
                || distinct_odd_product(m),
            ),
            OddPoint::Injection(n) => point(
                CheckId::StrictDistinctOdd,
                &[("n", json!(n))],
                timing,
                || injection(n),
            ),
        })
        .collect()
}

fn distinct_odd_product(m: usize) -> Outcome {
    let a = almkvist_poly(m)?.into_coeffs();
    let top = m * m;
    let mut witness = json!({});
    let mut claimed_ok = true;
    let mut unclaimed_ok = true;
    let (lo, hi) = (STRICT_WINDOW_START, top.saturating_sub(STRICT_WINDOW_START));
    if lo < hi {
        let symmetric = is_symmetric(&a, lo, hi)?;
        let strict = is_strictly_unimodal(&a[lo..=hi])?;
        witness["window"] = json!([lo, hi]);
        witness["symmetric"] = json!(symmetric);
        witness["strict"] = json!(strict);
        if let Some(i) = first_strict_violation(&a[lo..=hi], lo) {
            witness["violation_at"] = json!(i);
            witness["values"] = json!([a[i], a[i + 1]]);
        }
        if m >= STRICT_WINDOW_FROM_M {
            claimed_ok &= symmetric && strict;
        } else {
            unclaimed_ok &= symmetric && strict;
        }
    }
    if m >= TIGHTNESS_FROM_M {
        witness["a_25"] = json!(a[25]);
        witness["a_26"] = json!(a[26]);
        claimed_ok &= a[25] == 12 && a[26] == 12;
    }
    if m >= BOUNDARY_FROM_M {
        let n = 2 * m + 1;
        let q = q_count(n);
        witness["a_2m+1"] = json!(a[n]);
        witness["q_2m+1"] = json!(q);
        claimed_ok &= a[n] as u64 + 1 == q;
    }
    let status = if !claimed_ok {
        Status::Fail
    } else if !unclaimed_ok {
        Status::Finding
    } else {
        Status::Pass
    };
    Ok((status, witness))
}

// φ: 𝒬_n → 𝒬_{n+1} is injective, and misses something once n >= 26
fn injection(n: usize) -> Outcome {
    let domain = enumerate_distinct_odd(n, None);
    let image = domain
        .iter()
        .map(phi_injection)
        .collect::<Result<Vec<_>, _>>()?;
    let valid = image
        .iter()
        .all(|nu| nu.is_distinct_odd() && nu.size() == n + 1);
    let image: BTreeSet<Partition> = image.into_iter().collect();
    let injective = image.len() == domain.len();
    let target = enumerate_distinct_odd(n + 1, None);
    let missed: Vec<&Partition> = target.iter().filter(|nu| !image.contains(*nu)).collect();
    let gap_two = missed
        .iter()
        .find(|nu| nu.len() >= 2 && nu[0] - nu[1] == 2 && nu[nu.len() - 1] >= 3);
    let needs_gap = n >= GAP_FROM_N;
    let ok = valid && injective && (!needs_gap || !missed.is_empty());
    Ok((
        pass_if(ok),
        json!({
            "q_n": domain.len(),
            "q_n+1": target.len(),
            "injective": injective,
            "missed": missed.len(),
            "gap_two_example": gap_two.map(|nu| nu.to_string()),
        }),
    ))
}

fn padded_product(grid: &Grid, timing: bool) -> Vec<VerificationReport> {
    grid.cols(1, 12)
        .par_iter()
        .map(|&m| {
            point(CheckId::PaddedProduct, &[("m", json!(m))], timing, || {
                let b = b_poly(m)?;
                let c = b.coeffs();
                let symmetric = is_symmetric(c, 0, c.len() - 1)?;
                let unimodal = is_unimodal(c)?;
                let w = w_sequence(m);
                let sq = m * m;
                // the upper half mirrors the lower: degree 2m² for even m, 2m² - 1 for odd m
                let top = if m % 2 == 0 { sq } else { sq - 1 };
                let lower = (0..=sq).find(|&n| c.get(n).copied().unwrap_or(0) as u64 != w[n]);
                let upper = (1..=top).find(|&n| b.coeff(n + sq) as u64 != w[top - n]);
                let degree_ok = b.degree() == Some(sq + top);
                let ok = symmetric && unimodal && lower.is_none() && upper.is_none() && degree_ok;
                Ok((
                    pass_if(ok),
                    json!({
                        "degree": b.degree(),
                        "symmetric": symmetric,
                        "unimodal": unimodal,
                        "lower_identity_fails_at": lower,
                        "upper_identity_fails_at": upper,
                    }),
                ))
            })
        })
        .collect()
}

fn partition_pair_sums(id: CheckId, sizes: &[usize], timing: bool) -> Vec<VerificationReport> {
    let cache = LrCache::new();
    sizes
        .iter()
        .map(|&n| {
            point(id, &[("n", json!(n))], timing, || {
                let shapes = partitions_of(n);
                let pairs: Vec<(&Partition, &Partition)> = shapes
                    .iter()
                    .flat_map(|a| shapes.iter().map(move |b| (a, b)))
                    .collect();
                let results = pairs
                    .par_iter()
                    .map(|&(lam, mu)| -> Result<Option<Value>, Error> {
                        let (seq, ok) = if id == CheckId::TwoRowSums {
                            let s = a_sequence(&cache, lam, mu)?.values;
                            let ok = is_symmetric(&s, 0, n)? && is_unimodal(&s)?;
                            (s, ok)
                        } else {
                            let s = b_sum_sequence(&cache, lam, mu)?.values;
                            let ok = is_weakly_increasing(&s)?;
                            (s, ok)
                        };
                        Ok((!ok).then(|| json!({ "lambda": lam, "mu": mu, "sequence": seq })))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let violations: Vec<Value> = results.into_iter().flatten().collect();
                Ok((
                    pass_if(violations.is_empty()),
                    json!({
                        "pairs": pairs.len(),
                        "violations": violations.len(),
                        "first_violation": violations.first(),
                    }),
                ))
            })
        })
        .collect()
}

// rectangles with at most this many cells are also checked through a_k
const RECTANGLE_LR_CELLS: usize = 9;

fn rectangle(grid: &Grid, timing: bool) -> Vec<VerificationReport> {
    let cols = grid.cols(1, 8);
    let shapes: Vec<(usize, usize)> = grid
        .rows(1, 8)
        .into_iter()
        .flat_map(|l| cols.iter().map(move |&m| (l, m)))
        .collect();
    let cache = LrCache::new();
    shapes
        .par_iter()
        .map(|&(l, m)| {
            point(
                CheckId::Rectangle,
                &[("l", json!(l)), ("m", json!(m))],
                timing,
                || {
                    let rect = Rectangle::new(l, m)?;
                    let q = q_binomial(l, m).into_coeffs();
                    let counted: Vec<i64> = (0..=l * m)
                        .map(|n| enumerate_in_rectangle(n, rect).len() as i64)
                        .collect();
                    let symmetric = is_symmetric(&q, 0, l * m)?;
                    let unimodal = is_unimodal(&q)?;
                    let mut witness = json!({
                        "coefficients": q,
                        "matches_enumeration": q == counted,
                        "symmetric": symmetric,
                        "unimodal": unimodal,
                    });
                    let mut ok = q == counted && symmetric && unimodal;
                    if l * m <= RECTANGLE_LR_CELLS {
                        let shape = Partition::rectangle(l, m);
                        let a: Vec<i64> = a_sequence(&cache, &shape, &shape)?
                            .values
                            .iter()
                            .map(|&v| v as i64)
                            .collect();
                        witness["matches_lr_sums"] = json!(a == q);
                        ok &= a == q;
                    }
                    Ok((pass_if(ok), witness))
                },
            )
        })
        .collect()
}

fn distinct_parts(grid: &Grid, timing: bool) -> Vec<VerificationReport> {
    let cols = grid.cols(2, 7);
    let shapes: Vec<(usize, usize)> = grid
        .rows(1, 6)
        .into_iter()
        .flat_map(|l| cols.iter().filter(move |&&m| m > l).map(move |&m| (l, m)))
        .collect();
    shapes
        .par_iter()
        .map(|&(l, m)| {
            point(CheckId::DistinctParts, &[("l", json!(l)), ("m", json!(m))], timing, || {
                let d = (0..=l * m).map(|n| d_count(n, l, m)).collect::<Result<Vec<_>, _>>()?;
                let lo = l * (l + 1) / 2;
                let hi = l * m - l * (l - 1) / 2;
                let symmetric = is_symmetric(&d, lo, hi)?;
                let unimodal = is_unimodal(&d[lo..=hi])?;
                let shifted = q_binomial(l, m - l);
                let matches = (0..=l * m).all(|n| {
                    let want = if n >= lo { shifted.coeff(n - lo) } else { 0 };
                    d[n] as i64 == want
                });
                let bijection = staircase_failure(l, m)?;
                let ok = symmetric && unimodal && matches && bijection.is_none();
                Ok((
                    pass_if(ok),
                    json!({
                        "window": [lo, hi],
                        "sequence": &d[lo..=hi],
                        "symmetric": symmetric,
                        "unimodal": unimodal,
                        "matches_shifted_qbinom": matches,
                        "staircase_round_trip": bijection.map_or(json!("exact"), |nu| json!({ "fails_at": nu })),
                    }),
                ))
            })
        })
        .collect()
}

// the staircase map is a bijection from ℓ distinct parts <= m onto the ℓ x (m-ℓ) box
fn staircase_failure(l: usize, m: usize) -> Result<Option<Partition>, Error> {
    let rect = Rectangle::new(l, m - l)?;
    let lo = l * (l + 1) / 2;
    for n in 0..=l * m {
        let domain = enumerate_distinct_parts(n, l, m);
        let mut image = BTreeSet::new();
        for nu in &domain {
            let alpha = staircase_bijection(nu, l, m)?;
            if !rect.fits(&alpha) || staircase_inverse(&alpha, l, m)? != *nu {
                return Ok(Some(nu.clone()));
            }
            image.insert(alpha);
        }
        let box_count = if n >= lo {
            enumerate_in_rectangle(n - lo, rect).len()
        } else {
            0
        };
        if image.len() != domain.len() || image.len() != box_count {
            return Ok(domain.first().cloned().or(Some(Partition::empty())));
        }
    }
    Ok(None)
}

// squares small enough to compare w_n against B_n by LR sums
const SQUARE_LR_SIDE: usize = 3;

enum SelfConjugatePoint {
    Counts(usize),
    Bijection(usize),
}

fn self_conjugate(grid: &Grid, timing: bool) -> Vec<VerificationReport> {
    let mut points: Vec<SelfConjugatePoint> = grid
        .cols(1, 12)
        .into_iter()
        .map(SelfConjugatePoint::Counts)
        .collect();
    points.extend(
        grid.sizes(0, 20)
            .into_iter()
            .map(SelfConjugatePoint::Bijection),
    );
    let cache = LrCache::new();
    points
        .par_iter()
        .map(|p| match *p {
            SelfConjugatePoint::Counts(m) => {
                point(CheckId::SelfConjugate, &[("m", json!(m))], timing, || {
                    let w = w_sequence(m);
                    let increasing = is_weakly_increasing(&w)?;
                    let mut witness = json!({ "w": w, "weakly_increasing": increasing });
                    let mut ok = increasing;
                    if m <= SQUARE_LR_SIDE {
                        let square = Partition::rectangle(m, m);
                        let b = b_sum_sequence(&cache, &square, &square)?.values;
                        witness["matches_b_sums"] = json!(b == w);
                        ok &= b == w;
                    }
                    Ok((pass_if(ok), witness))
                })
            }
            SelfConjugatePoint::Bijection(n) => {
                point(CheckId::SelfConjugate, &[("n", json!(n))], timing, || {
                    fold_round_trip(n)
                })
            }
        })
        .collect()
}

// diagonal-hook folding is a bijection between self-conjugate partitions of n
// and 𝒬_n, and the largest part is <= 2m-1 exactly when α fits in m x m
fn fold_round_trip(n: usize) -> Outcome {
    let self_conjugate: Vec<Partition> = partitions_of(n)
        .into_iter()
        .filter(|a| a.is_self_conjugate())
        .collect();
    let mut image = BTreeSet::new();
    for alpha in &self_conjugate {
        let nu = self_conjugate_to_distinct_odd(alpha)?;
        let back = distinct_odd_to_self_conjugate(&nu)?;
        let fits = (1..=n.max(1)).all(|m| (nu.first() < 2 * m) == (alpha.first() <= m));
        if back != *alpha || !nu.is_distinct_odd() || nu.size() != n || !fits {
            return Ok((
                Status::Fail,
                json!({ "alpha": alpha, "nu": nu, "back": back }),
            ));
        }
        image.insert(nu);
    }
    let target: BTreeSet<Partition> = enumerate_distinct_odd(n, None).into_iter().collect();
    let onto = image == target;
    Ok((
        pass_if(onto),
        json!({ "self_conjugate": self_conjugate.len(), "distinct_odd": target.len(), "bijective": onto }),
    ))
}

enum OraclePoint {
    Kronecker(usize),
    Character(usize),
}

fn oracle_cross_check(grid: &Grid, sizes: &[usize], timing: bool) -> Vec<VerificationReport> {
    let mut points: Vec<OraclePoint> = sizes.iter().map(|&n| OraclePoint::Kronecker(n)).collect();
    points.extend(grid.cols(3, 5).into_iter().map(OraclePoint::Character));
    let cache = LrCache::new();
    let chars = CharacterCache::new();
    points
        .par_iter()
        .map(|p| match *p {
            OraclePoint::Kronecker(n) => point(
                CheckId::OracleCrossCheck,
                &[("n", json!(n))],
                timing,
                || {
                    let shapes = partitions_of(n);
                    let mut compared = 0usize;
                    for lam in &shapes {
                        for mu in &shapes {
                            for k in 1..=n / 2 {
                                let nu = Partition::new(vec![n - k, k])?;
                                let lr = g_two_row(&cache, lam, mu, k)?;
                                let oracle = chars.kronecker(lam, mu, &nu)?;
                                compared += 1;
                                if lr != oracle {
                                    return Ok((Status::Fail, mismatch(lam, mu, &nu, lr, oracle)));
                                }
                            }
                            for k in 1..n {
                                let nu = Partition::hook(n - k, k);
                                let lr = g_hook(&cache, lam, mu, k)?;
                                let oracle = chars.kronecker(lam, mu, &nu)?;
                                compared += 1;
                                if lr != oracle {
                                    return Ok((Status::Fail, mismatch(lam, mu, &nu, lr, oracle)));
                                }
                            }
                        }
                    }
                    Ok((Status::Pass, json!({ "compared": compared })))
                },
            ),
            OraclePoint::Character(m) => point(
                CheckId::OracleCrossCheck,
                &[("m", json!(m)), ("route", json!("staircase-character"))],
                timing,
                || {
                    // χ^{(m²-k, k)} on the class (2m-1, ..., 3, 1) is a_k - a_{k-1}
                    let a = almkvist_poly(m)?;
                    let rho = CycleType::staircase(m);
                    let n = m * m;
                    let mut values = Vec::new();
                    for k in 1..=n / 2 {
                        let chi = mn_character(&Partition::new(vec![n - k, k])?, &rho)?;
                        let diff = a.coeff(k) - a.coeff(k - 1);
                        if chi != diff {
                            return Ok((
                                Status::Fail,
                                json!({ "k": k, "character": chi, "difference": diff }),
                            ));
                        }
                        values.push(chi);
                    }
                    Ok((Status::Pass, json!({ "characters": values })))
                },
            ),
        })
        .collect()
}

fn mismatch(lam: &Partition, mu: &Partition, nu: &Partition, lr: u64, oracle: u64) -> Value {
    json!({ "lambda": lam, "mu": mu, "nu": nu, "lr_route": lr, "oracle": oracle })
}

fn gamma_scan(grid: &Grid, timing: bool) -> Result<Vec<VerificationReport>, CliError> {
    let z = grid.z.unwrap_or(1.5);
    if !(z >= 1.0 && z.is_finite()) {
        return Err(CliError::Usage(format!(
            "--z must be a finite number >= 1, got {z}"
        )));
    }
    let exact = BigRational::from_float(z).expect("finite z");
    let cols = grid.cols(1, 5);
    let shapes: Vec<(usize, usize)> = grid
        .rows(1, 5)
        .into_iter()
        .flat_map(|l| cols.iter().map(move |&m| (l, m)))
        .collect();
    Ok(shapes
        .par_iter()
        .map(|&(l, m)| {
            let params = [("l", json!(l)), ("m", json!(m)), ("z", json!(z))];
            point(CheckId::GammaScan, &params, timing, || {
                let seq = (0..=l * m)
                    .map(|k| gamma_stat_exact(l, m, k, &exact))
                    .collect::<Result<Vec<_>, _>>()?;
                let unimodal = is_unimodal(&seq)?;
                let approx: Vec<f64> = seq.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect();
                let status = if unimodal {
                    Status::Pass
                } else {
                    Status::Finding
                };
                Ok((status, json!({ "sequence": approx, "unimodal": unimodal })))
            })
        })
        .collect())
}
