//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule, and Kronecker coefficients computed from them.
//!
//! Border strips are removed on the beta-set (abacus) of the shape: removing
//! a strip of length `r` moves one bead from position `b` to a free position
//! `b - r`, with sign `(-1)^(beads jumped over)`.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Cycle type `ρ` of a conjugacy class of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(rho: Partition) -> Self {
        CycleType(rho)
    }

    /// The class `(2m-1, 2m-3, ..., 3, 1)` of `S_{m²}`.
    pub fn staircase(m: usize) -> Self {
        CycleType(Partition::from_unsorted(
            (1..=m).map(|i| 2 * i - 1).collect(),
        ))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `z_ρ = Π i^{m_i} m_i!`, the centralizer order.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        for (i, &m) in self.0.multiplicities().iter().enumerate().skip(1) {
            for j in 1..=m {
                z *= (i as u128) * (j as u128);
            }
        }
        z
    }

    /// `n! / z_ρ`.
    pub fn class_size(&self) -> u128 {
        factorial(self.size()) / self.centralizer_order()
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let len = lambda.len();
    (0..len).map(|i| lambda[i] + len - 1 - i).collect()
}

fn from_beta_set(mut beads: Vec<usize>) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let len = beads.len();
    Partition::from_unsorted(
        beads
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i))
            .collect(),
    )
}

/// All ways to remove a border strip of length `r` from `lambda`, as
/// `(remaining shape, sign)` with sign `(-1)^{height}`.
pub fn remove_border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let beads = beta_set(lambda);
    let mut out = Vec::new();
    for (idx, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beads.clone();
        moved[idx] = target;
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((from_beta_set(moved), sign));
    }
    out
}

type CharKey = (Partition, Partition);

/// Memo table for character values keyed by `(remaining shape, remaining
/// cycles)`. Same sharing contract as the LR cache: thread safe, duplicated
/// work allowed.
#[derive(Debug, Default)]
pub struct CharacterCache {
    table: RwLock<HashMap<CharKey, i64>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ[ρ]`, peeling the largest remaining cycle first.
    pub fn character(&self, lambda: &Partition, rho: &CycleType) -> Result<i64> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(format!(
                "shape {lambda} has size {} but cycle type {} has size {}",
                lambda.size(),
                rho.0,
                rho.size()
            )));
        }
        self.eval(lambda, rho.0.parts())
    }

    fn eval(&self, lambda: &Partition, cycles: &[usize]) -> Result<i64> {
        let Some((&r, rest)) = cycles.split_first() else {
            return Ok(1);
        };
        if lambda.len() == 1 || lambda.first() == 1 {
            // trivial and sign characters
            let sign = if lambda.first() == 1 {
                let even = cycles.iter().filter(|&&c| c % 2 == 0).count();
                if even % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                1
            };
            return Ok(sign);
        }
        let key = (lambda.clone(), Partition::from_canonical(cycles.to_vec()));
        if let Some(&v) = self.table.read().unwrap().get(&key) {
            return Ok(v);
        }
        let mut total: i64 = 0;
        for (shape, sign) in remove_border_strips(lambda, r) {
            let term = self.eval(&shape, rest)?;
            total = total.checked_add(sign * term).ok_or(Error::Overflow)?;
        }
        self.table.write().unwrap().insert(key, total);
        Ok(total)
    }

    /// Kronecker coefficient `g(λ, μ, ν) = Σ_ρ |C_ρ| χ^λ χ^μ χ^ν / n!`.
    ///
    /// The division must be exact and the result nonnegative; anything else
    /// is reported as an internal error.
    pub fn kronecker(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        let n = lambda.size();
        if mu.size() != n || nu.size() != n {
            return Err(Error::SizeMismatch(format!(
                "Kronecker arguments {lambda}, {mu}, {nu} have different sizes"
            )));
        }
        let mut sum: i128 = 0;
        for rho in partitions_of(n) {
            let class = CycleType(rho);
            let chars = [
                self.character(lambda, &class)?,
                self.character(mu, &class)?,
                self.character(nu, &class)?,
            ];
            let product = chars
                .iter()
                .try_fold(1i128, |acc, &c| acc.checked_mul(c as i128))
                .ok_or(Error::Overflow)?;
            let size = i128::try_from(class.class_size()).map_err(|_| Error::Overflow)?;
            let term = product.checked_mul(size).ok_or(Error::Overflow)?;
            sum = sum.checked_add(term).ok_or(Error::Overflow)?;
        }
        let order = i128::try_from(factorial(n)).map_err(|_| Error::Overflow)?;
        if sum % order != 0 {
            return Err(Error::Internal(format!(
                "character sum {sum} for g({lambda}, {mu}, {nu}) is not divisible by {n}!"
            )));
        }
        let g = sum / order;
        u64::try_from(g).map_err(|_| {
            Error::Internal(format!(
                "negative Kronecker coefficient g({lambda}, {mu}, {nu}) = {g}"
            ))
        })
    }
}

/// `χ^λ[ρ]` with a fresh cache.
pub fn mn_character(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    CharacterCache::new().character(lambda, rho)
}

/// `g(λ, μ, ν)` from the character table, with a fresh cache.
pub fn kronecker_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    CharacterCache::new().kronecker(lambda, mu, nu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::new(p(parts))
    }

    #[test]
    fn s4_character_table() {
        // rows: (4), (3,1), (2,2), (2,1,1), (1^4); columns: 1^4, 21^2, 2^2, 31, 4
        let classes = [
            ct(&[1, 1, 1, 1]),
            ct(&[2, 1, 1]),
            ct(&[2, 2]),
            ct(&[3, 1]),
            ct(&[4]),
        ];
        let table: [(&[usize], [i64; 5]); 5] = [
            (&[4], [1, 1, 1, 1, 1]),
            (&[3, 1], [3, 1, -1, 0, -1]),
            (&[2, 2], [2, 0, 2, -1, 0]),
            (&[2, 1, 1], [3, -1, -1, 0, 1]),
            (&[1, 1, 1, 1], [1, -1, 1, 1, -1]),
        ];
        let cache = CharacterCache::new();
        for (shape, row) in table {
            for (class, want) in classes.iter().zip(row) {
                assert_eq!(
                    cache.character(&p(shape), class).unwrap(),
                    want,
                    "{shape:?} {class:?}"
                );
            }
        }
    }

    #[test]
    fn trivial_and_sign() {
        let cache = CharacterCache::new();
        for n in 1..=7 {
            for rho in partitions_of(n) {
                let sign = if (n - rho.len()) % 2 == 0 { 1 } else { -1 };
                let class = CycleType::new(rho);
                assert_eq!(cache.character(&p(&[n]), &class).unwrap(), 1);
                assert_eq!(
                    cache
                        .character(&Partition::rectangle(n, 1), &class)
                        .unwrap(),
                    sign
                );
            }
        }
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(
            mn_character(&p(&[2, 1]), &ct(&[2])),
            Err(Error::SizeMismatch(_))
        ));
        assert!(matches!(
            kronecker_oracle(&p(&[2]), &p(&[1, 1]), &p(&[1])),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=9 {
            let total: u128 = partitions_of(n)
                .into_iter()
                .map(|r| CycleType::new(r).class_size())
                .sum();
            assert_eq!(total, factorial(n));
        }
        assert_eq!(ct(&[2, 2]).class_size(), 3);
        assert_eq!(ct(&[3, 1]).class_size(), 8);
    }

    #[test]
    fn degrees_square_sum() {
        let cache = CharacterCache::new();
        for n in 1..=7 {
            let id = CycleType::new(Partition::rectangle(n, 1));
            let sum: i64 = partitions_of(n)
                .iter()
                .map(|l| cache.character(l, &id).unwrap().pow(2))
                .sum();
            assert_eq!(sum as u128, factorial(n));
        }
    }

    #[test]
    fn conjugation_twists_by_sign() {
        let cache = CharacterCache::new();
        for n in 1..=7 {
            for lam in partitions_of(n) {
                for rho in partitions_of(n) {
                    let sign = if (n - rho.len()) % 2 == 0 { 1 } else { -1 };
                    let class = CycleType::new(rho);
                    assert_eq!(
                        cache.character(&lam, &class).unwrap(),
                        sign * cache.character(&lam.conjugate(), &class).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn kronecker_small_values() {
        // hand-evaluated from the S_4 table above
        assert_eq!(
            kronecker_oracle(&p(&[2, 2]), &p(&[2, 2]), &p(&[2, 2])).unwrap(),
            1
        );
        assert_eq!(
            kronecker_oracle(&p(&[2, 2]), &p(&[2, 2]), &p(&[3, 1])).unwrap(),
            0
        );
        assert_eq!(kronecker_oracle(&p(&[1]), &p(&[1]), &p(&[1])).unwrap(), 1);
        assert_eq!(
            kronecker_oracle(
                &Partition::empty(),
                &Partition::empty(),
                &Partition::empty()
            )
            .unwrap(),
            1
        );
    }

    #[test]
    fn kronecker_with_trivial_and_sign() {
        let cache = CharacterCache::new();
        for n in 1..=6 {
            let shapes = partitions_of(n);
            for l in &shapes {
                for m in &shapes {
                    let triv = cache.kronecker(l, m, &p(&[n])).unwrap();
                    assert_eq!(triv, u64::from(l == m));
                    let sign = cache.kronecker(l, m, &Partition::rectangle(n, 1)).unwrap();
                    assert_eq!(sign, u64::from(*m == l.conjugate()));
                }
            }
        }
    }

    #[test]
    fn kronecker_is_symmetric() {
        let cache = CharacterCache::new();
        for n in 1..=6 {
            let shapes = partitions_of(n);
            for a in &shapes {
                for b in &shapes {
                    for c in &shapes {
                        let g = cache.kronecker(a, b, c).unwrap();
                        assert_eq!(g, cache.kronecker(b, a, c).unwrap());
                        assert_eq!(g, cache.kronecker(a, c, b).unwrap());
                        assert_eq!(g, cache.kronecker(c, b, a).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn border_strips_of_a_hook() {
        // (3,1,1): the whole hook is a 5-strip of height 2, there is no
        // 3-strip, and the 2-strips are the arm end (height 0) and the leg
        // end (height 1)
        let strips = remove_border_strips(&p(&[3, 1, 1]), 5);
        assert_eq!(strips, vec![(Partition::empty(), 1)]);
        assert!(remove_border_strips(&p(&[3, 1, 1]), 3).is_empty());
        let mut strips2 = remove_border_strips(&p(&[3, 1, 1]), 2);
        strips2.sort();
        assert_eq!(strips2, vec![(p(&[1, 1, 1]), 1), (p(&[3]), -1)]);
    }

    #[test]
    fn staircase_class() {
        assert_eq!(CycleType::staircase(3).partition(), &p(&[5, 3, 1]));
        assert_eq!(CycleType::staircase(4).size(), 16);
    }
}
