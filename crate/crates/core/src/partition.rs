//! Integer partitions and the geometry of their Young diagrams.
//!
//! A [`Partition`] is always stored in canonical form: weakly decreasing
//! positive parts with no trailing zeros, so structural equality is equality
//! of partitions. The empty partition is the unique partition of 0.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase between consecutive parts is
    /// rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part before a positive one"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_canonical(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(cols^rows)`, i.e. `rows` parts each equal to `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// The hook `(first, 1^leg)`.
    pub fn hook(first: usize, leg: usize) -> Self {
        let mut parts = Vec::with_capacity(leg + 1);
        if first > 0 {
            parts.push(first);
        }
        parts.extend(std::iter::repeat_n(1, leg));
        Partition::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// The integer being partitioned, `|π|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts, i.e. `π'_1`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `i`-th part (0-based), reading missing parts as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram: `π'_i = #{j : π_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::with_capacity(self.first());
        for i in 1..=self.first() {
            out.push(self.parts.iter().take_while(|&&p| p >= i).count());
        }
        Partition { parts: out }
    }

    /// Complement inside the `rect.rows x rect.cols` rectangle:
    /// `π̄_i = m - π_{ℓ+1-i}`.
    pub fn complement(&self, rect: Rectangle) -> Result<Partition> {
        if !rect.fits(self) {
            return Err(Error::ExceedsRectangle);
        }
        let parts = (0..rect.rows)
            .map(|i| rect.cols - self.part(rect.rows - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        Ok(Partition { parts })
    }

    /// Number of distinct part sizes `v(π)`, which is also the number of
    /// removable corner cells of the diagram.
    pub fn corner_count(&self) -> usize {
        let mut count = 0;
        let mut last = None;
        for &p in &self.parts {
            if last != Some(p) {
                count += 1;
                last = Some(p);
            }
        }
        count
    }

    /// Row indices (0-based) holding a removable corner, top to bottom.
    pub fn corner_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.part(i + 1) < self.parts[i])
            .collect()
    }

    /// Whether the diagram of `inner` sits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum, the diagram of the intersection.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Distinct parts, all odd.
    pub fn is_distinct_odd(&self) -> bool {
        self.has_distinct_parts() && self.parts.iter().all(|p| p % 2 == 1)
    }

    /// `n(π) = Σ (i-1) π_i`.
    pub fn weighted_size(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Cells `(row, col)` of the Young diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
    }

    /// Multiplicity of each part size, `mult[i]` = number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.first() + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Parses the bracketed literal `[5,5,3,2]`; `[]` is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| {
                Error::Parse(format!("expected a bracketed list like [3,1], got {s:?}"))
            })?;
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// An `ℓ x m` box: `rows` parts at most, each at most `cols`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Rectangle {
    pub rows: usize,
    pub cols: usize,
}

impl Rectangle {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidRectangle { rows, cols });
        }
        Ok(Rectangle { rows, cols })
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.len() <= self.rows && p.first() <= self.cols
    }

    /// The full rectangle as a partition, `(m^ℓ)`.
    pub fn full(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in decreasing lexicographic order.
pub fn partitions_in_box(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    let bounds = vec![max_part; max_len];
    partitions_bounded(n, &bounds)
}

/// `𝒫_n(ℓ, m)`: partitions of `n` fitting in `rect`, decreasing lexicographic.
pub fn enumerate_in_rectangle(n: usize, rect: Rectangle) -> Vec<Partition> {
    partitions_in_box(n, rect.rows, rect.cols)
}

/// All partitions of `n`, decreasing lexicographic.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_in_box(n, n, n)
}

/// Partitions of `n` whose diagram lies inside `outer`.
pub fn partitions_inside(n: usize, outer: &Partition) -> Vec<Partition> {
    partitions_bounded(n, outer.parts())
}

// Row i is capped by bounds[i]; bounds must be weakly decreasing so that the
// running minimum with the previous part gives a valid search.
fn partitions_bounded(n: usize, bounds: &[usize]) -> Vec<Partition> {
    let mut out = Vec::new();
    // capacity[i] = max cells placeable in rows i.. (suffix sums of bounds)
    let mut capacity = vec![0usize; bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        capacity[i] = capacity[i + 1] + bounds[i];
    }
    if capacity[0] < n {
        return out;
    }
    let mut current = Vec::new();
    fill_rows(n, bounds, &capacity, usize::MAX, &mut current, &mut out);
    out
}

fn fill_rows(
    remaining: usize,
    bounds: &[usize],
    capacity: &[usize],
    prev: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_canonical(current.clone()));
        return;
    }
    let row = current.len();
    if row == bounds.len() {
        return;
    }
    let hi = remaining.min(prev).min(bounds[row]);
    for p in (1..=hi).rev() {
        // the rows below can hold at most p each, and at most their bound
        let rest = remaining - p;
        let below: usize = bounds[row + 1..]
            .iter()
            .map(|&b| b.min(p))
            .sum::<usize>()
            .min(capacity[row + 1]);
        if below < rest {
            break;
        }
        current.push(p);
        fill_rows(rest, bounds, capacity, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![]).unwrap(), Partition::empty());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 0, 2]), p(&[3, 2, 1]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 5, 3, 2]).conjugate(), p(&[4, 4, 3, 2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
    }

    #[test]
    fn complement_examples() {
        let r = Rectangle::new(4, 6).unwrap();
        assert_eq!(p(&[5, 5, 3, 2]).complement(r).unwrap(), p(&[4, 3, 1, 1]));
        let r3 = Rectangle::new(3, 3).unwrap();
        assert_eq!(Partition::empty().complement(r3).unwrap(), p(&[3, 3, 3]));
        assert_eq!(p(&[3, 3, 3]).complement(r3).unwrap(), Partition::empty());
        assert_eq!(p(&[4]).complement(r3), Err(Error::ExceedsRectangle));
        assert_eq!(
            p(&[1, 1, 1, 1]).complement(r3),
            Err(Error::ExceedsRectangle)
        );
    }

    #[test]
    fn corner_count_examples() {
        let lam = p(&[3, 2, 2]);
        assert_eq!(lam.corner_count(), 2);
        // removable cells: end of a row strictly longer than the next one
        let removable = (0..lam.len()).filter(|&i| lam[i] > lam[i + 1]).count();
        assert_eq!(removable, 2);
        assert_eq!(Partition::rectangle(3, 4).corner_count(), 1);
        assert_eq!(Partition::empty().corner_count(), 0);
        assert_eq!(lam.corner_rows(), vec![0, 2]);
    }

    #[test]
    fn contains_examples() {
        assert!(p(&[5, 5, 3, 2]).contains(&p(&[2, 1])));
        assert!(!p(&[2, 2]).contains(&p(&[3])));
        assert!(p(&[2, 2]).contains(&p(&[2, 2])));
        assert!(!p(&[2, 2]).contains(&p(&[1, 1, 1])));
        assert!(p(&[1]).contains(&Partition::empty()));
    }

    #[test]
    fn enumerate_examples() {
        let r = Rectangle::new(3, 3).unwrap();
        assert_eq!(
            enumerate_in_rectangle(4, r),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
        assert!(enumerate_in_rectangle(10, r).is_empty());
        assert_eq!(enumerate_in_rectangle(9, r), vec![p(&[3, 3, 3])]);
        assert_eq!(enumerate_in_rectangle(0, r), vec![Partition::empty()]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let outer = p(&[3, 1]);
        assert_eq!(partitions_inside(2, &outer), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions_inside(3, &outer), vec![p(&[3]), p(&[2, 1])]);
        assert!(partitions_inside(5, &outer).is_empty());
    }

    #[test]
    fn literal_round_trip() {
        let lam: Partition = "[5,5,3,2]".parse().unwrap();
        assert_eq!(lam, p(&[5, 5, 3, 2]));
        assert_eq!(lam.to_string(), "[5,5,3,2]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" [ 2, 1 ] ".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("2,1".parse::<Partition>().is_err());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn serde_uses_the_literal_form() {
        let lam = p(&[4, 4, 3, 1]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[4,4,3,1]");
        let back: Partition = serde_json::from_str("[4,4,3,1]").unwrap();
        assert_eq!(back, lam);
        assert!(serde_json::from_str::<Partition>("[1,4]").is_err());
    }

    #[test]
    fn rectangle_rejects_zero_sides() {
        assert!(Rectangle::new(0, 3).is_err());
        assert!(Rectangle::new(3, 0).is_err());
    }
}
