//! Littlewood–Richardson coefficients by enumerating LR tableaux.
//!
//! An LR tableau of shape `λ/α` and type `β` is a semistandard filling of
//! the skew diagram with `β_i` entries equal to `i` whose reading word (rows
//! top to bottom, each row right to left) is a lattice word. The search fills
//! cells in reading order, so the lattice condition can be enforced on every
//! prefix as it is built.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Precondition(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Skew cells in reading order: top row first, each row right to left.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.cell_count());
        for r in 0..self.outer.len() {
            for c in (self.inner[r]..self.outer[r]).rev() {
                cells.push((r, c));
            }
        }
        cells
    }

    fn holds(&self, r: usize, c: usize) -> bool {
        c < self.outer[r] && c >= self.inner[r]
    }
}

/// A word read off a tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadingWord(pub Vec<usize>);

impl ReadingWord {
    pub fn is_lattice(&self) -> bool {
        is_lattice_word(&self.0)
    }
}

/// Ballot condition: every prefix has at least as many `i`s as `(i+1)`s.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x > 1 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

/// A filling of a skew shape. `rows[r][c]` is the entry of cell `(r, c)`;
/// cells of the inner shape hold 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Row lists with 0 marking the skipped inner cells.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        self.shape.holds(r, c).then(|| self.rows[r][c])
    }

    pub fn reading_word(&self) -> ReadingWord {
        ReadingWord(
            self.shape
                .reading_cells()
                .into_iter()
                .map(|(r, c)| self.rows[r][c])
                .collect(),
        )
    }

    /// `β_i` = number of entries equal to `i`, as a vector (not canonicalized).
    pub fn type_vector(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for (r, c) in self.shape.reading_cells() {
            let v = self.rows[r][c];
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        counts
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.shape.reading_cells().into_iter().all(|(r, c)| {
            let v = self.rows[r][c];
            let row_ok = !self.shape.holds(r, c + 1) || self.rows[r][c + 1] >= v;
            let col_ok = r == 0 || !self.shape.holds(r - 1, c) || self.rows[r - 1][c] < v;
            v >= 1 && row_ok && col_ok
        })
    }
}

// Precomputed neighbourhood of each cell in reading order.
struct CellInfo {
    row: usize,
    col: usize,
    // index (in reading order) of the cell directly above, if skew
    above: Option<usize>,
    // index of the cell directly to the right, if skew
    right: Option<usize>,
    // skew cells strictly below in the same column
    depth_below: usize,
}

struct LrSearch<'a> {
    cells: Vec<CellInfo>,
    content: &'a [usize],
    values: Vec<usize>,
    counts: Vec<usize>,
}

impl<'a> LrSearch<'a> {
    fn new(shape: &SkewShape, content: &'a [usize]) -> Self {
        let order = shape.reading_cells();
        let index: HashMap<(usize, usize), usize> =
            order.iter().enumerate().map(|(i, &rc)| (rc, i)).collect();
        let cells = order
            .iter()
            .map(|&(r, c)| {
                let above = if r > 0 {
                    index.get(&(r - 1, c)).copied()
                } else {
                    None
                };
                let right = index.get(&(r, c + 1)).copied();
                let depth_below = (r + 1..shape.outer.len())
                    .take_while(|&rr| shape.holds(rr, c))
                    .count();
                CellInfo {
                    row: r,
                    col: c,
                    above,
                    right,
                    depth_below,
                }
            })
            .collect::<Vec<_>>();
        LrSearch {
            values: vec![0; cells.len()],
            counts: vec![0; content.len()],
            cells,
            content,
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize])) {
        self.step(0, visit);
    }

    fn step(&mut self, idx: usize, visit: &mut dyn FnMut(&[usize])) {
        if idx == self.cells.len() {
            visit(&self.values);
            return;
        }
        let cell = &self.cells[idx];
        let lo = cell.above.map_or(1, |a| self.values[a] + 1);
        let mut hi = self.content.len().saturating_sub(cell.depth_below);
        if let Some(rt) = cell.right {
            hi = hi.min(self.values[rt]);
        }
        for v in lo..=hi {
            let k = v - 1;
            if self.counts[k] >= self.content[k] {
                continue;
            }
            if k > 0 && self.counts[k] >= self.counts[k - 1] {
                continue;
            }
            self.counts[k] += 1;
            self.values[idx] = v;
            self.step(idx + 1, visit);
            self.counts[k] -= 1;
        }
        self.values[idx] = 0;
    }
}

fn check_sizes(shape: &SkewShape, content: &Partition) -> Result<()> {
    if shape.cell_count() != content.size() {
        return Err(Error::SizeMismatch(format!(
            "skew shape {}/{} has {} cells but type {} has size {}",
            shape.outer,
            shape.inner,
            shape.cell_count(),
            content,
            content.size()
        )));
    }
    Ok(())
}

/// All LR tableaux of `shape` and type `content`, in search order: cells in
/// reading order, smallest admissible entry first.
pub fn enumerate_lr_tableaux(shape: &SkewShape, content: &Partition) -> Result<Vec<SkewTableau>> {
    check_sizes(shape, content)?;
    let mut search = LrSearch::new(shape, content.parts());
    let mut out = Vec::new();
    let template: Vec<Vec<usize>> = shape.outer.parts().iter().map(|&p| vec![0; p]).collect();
    let positions: Vec<(usize, usize)> = search.cells.iter().map(|c| (c.row, c.col)).collect();
    search.run(&mut |values| {
        let mut rows = template.clone();
        for (&(r, c), &v) in positions.iter().zip(values) {
            rows[r][c] = v;
        }
        out.push(SkewTableau {
            shape: shape.clone(),
            rows,
        });
    });
    Ok(out)
}

/// Number of LR tableaux of `shape` and type `content` without building them.
pub fn count_lr_tableaux(shape: &SkewShape, content: &Partition) -> Result<u64> {
    check_sizes(shape, content)?;
    let mut search = LrSearch::new(shape, content.parts());
    let mut count = 0u64;
    search.run(&mut |_| count += 1);
    Ok(count)
}

/// `c^λ_{αβ}` with no caching. Incompatible sizes or failed containment give 0.
pub fn lr_coefficient(lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if alpha.size() + beta.size() != lambda.size()
        || !lambda.contains(alpha)
        || !lambda.contains(beta)
    {
        return 0;
    }
    let shape = SkewShape {
        outer: lambda.clone(),
        inner: alpha.clone(),
    };
    count_lr_tableaux(&shape, beta).expect("sizes checked above")
}

type LrKey = (Partition, Partition, Partition);

/// Memo table for `c^λ_{αβ}` keyed by the triple `(λ, α, β)`.
///
/// Safe to share between threads. Two threads racing on the same key may
/// both compute it; they store the same value.
#[derive(Debug, Default)]
pub struct LrCache {
    table: RwLock<HashMap<LrKey, u64>>,
}

impl LrCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn coefficient(&self, lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
        if alpha.size() + beta.size() != lambda.size()
            || !lambda.contains(alpha)
            || !lambda.contains(beta)
        {
            return 0;
        }
        // an empty skew shape or empty type admits exactly the trivial filling
        if alpha.is_empty() {
            return u64::from(lambda == beta);
        }
        if beta.is_empty() {
            return u64::from(lambda == alpha);
        }
        let key = (lambda.clone(), alpha.clone(), beta.clone());
        if let Some(&v) = self.table.read().unwrap().get(&key) {
            return v;
        }
        let v = lr_coefficient(lambda, alpha, beta);
        self.table.write().unwrap().insert(key, v);
        v
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
