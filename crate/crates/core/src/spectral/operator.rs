use crate::ball::OrbitBall;
use crate::error::{Error, Result};

use super::genset::is_symmetric;

/// The averaged action `M = (1/|S|) Σ_s λ(s)` compressed to the nodes of a
/// ball (zero boundary condition).
///
/// Entries are stored exactly as `count / denominator`, where `count` is the
/// number of generators carrying one node to the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOperator {
    dimension: usize,
    denominator: u32,
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    counts: Vec<u32>,
}

impl SparseOperator {
    /// Markov operator of the ball's own generator sequence.
    pub fn markov(ball: &OrbitBall) -> Result<SparseOperator> {
        SparseOperator::markov_within(ball, ball.len())
    }

    /// Markov operator compressed to the first `prefix` nodes of `ball`.
    pub(crate) fn markov_within(ball: &OrbitBall, prefix: usize) -> Result<SparseOperator> {
        let gens = ball.generators();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if !is_symmetric(gens) {
            return Err(Error::NotSymmetric);
        }
        let mut row_ptr = Vec::with_capacity(prefix + 1);
        let mut cols = Vec::new();
        let mut counts = Vec::new();
        row_ptr.push(0);
        let mut row: Vec<u32> = Vec::with_capacity(gens.len());
        for src in 0..prefix {
            row.clear();
            row.extend((0..gens.len()).filter_map(|g| ball.target_within(src, g, prefix).map(|t| t as u32)));
            row.sort_unstable();
            let mut i = 0;
            while i < row.len() {
                let col = row[i];
                let run = row[i..].iter().take_while(|&&c| c == col).count();
                cols.push(col);
                counts.push(run as u32);
                i += run;
            }
            row_ptr.push(cols.len());
        }
        Ok(SparseOperator {
            dimension: prefix,
            denominator: gens.len() as u32,
            row_ptr,
            cols,
            counts,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    /// Numerator of entry `(i, j)`; the entry is `count / denominator`.
    pub fn count(&self, i: usize, j: usize) -> u32 {
        let row = self.row_ptr[i]..self.row_ptr[i + 1];
        match self.cols[row.clone()].binary_search(&(j as u32)) {
            Ok(k) => self.counts[row.start + k],
            Err(_) => 0,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        f64::from(self.count(i, j)) / f64::from(self.denominator)
    }

    /// Nonzero entries of row `i` as `(column, count)`.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let row = self.row_ptr[i]..self.row_ptr[i + 1];
        self.cols[row.clone()]
            .iter()
            .zip(&self.counts[row])
            .map(|(&c, &n)| (c as usize, n))
    }

    /// Row sum numerator; equals the denominator for interior nodes.
    pub fn row_count(&self, i: usize) -> u32 {
        self.counts[self.row_ptr[i]..self.row_ptr[i + 1]].iter().sum()
    }

    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    /// Exact comparison of every entry with its transpose.
    pub fn is_symmetric(&self) -> bool {
        (0..self.dimension).all(|i| self.row(i).all(|(j, n)| self.count(j, i) == n))
    }

    /// `out = M x`.
    pub fn apply(&self, x: &[f64], out: &mut [f64]) {
        let scale = 1.0 / f64::from(self.denominator);
        for (i, o) in out.iter_mut().enumerate().take(self.dimension) {
            let mut acc = 0.0;
            for (j, n) in self.row(i) {
                acc += f64::from(n) * x[j];
            }
            *o = acc * scale;
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; self.dimension]; self.dimension];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, _) in self.row(i) {
                row[j] = self.entry(i, j);
            }
        }
        m
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Lower bound on `‖M‖` for a symmetric nonnegative operator.
///
/// Iterates the lazy operator `(I + M)/2` from the uniform vector and reads
/// out the Rayleigh quotient of `M`. The lazy operator has nonnegative
/// spectrum and the same top eigenvector as `M`, so the readout increases
/// monotonically even on bipartite graphs, where plain power iteration
/// oscillates. Stops once an iteration gains less than `tol`.
pub fn norm_lower_bound(op: &SparseOperator, iterations: usize, tol: f64) -> f64 {
    let n = op.dimension();
    if n == 0 {
        return 0.0;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut mx = vec![0.0; n];
    op.apply(&x, &mut mx);
    let mut best = dot(&x, &mx);
    for _ in 0..iterations.max(1) {
        for (xi, mi) in x.iter_mut().zip(&mx) {
            *xi = 0.5 * (*xi + mi);
        }
        let norm = dot(&x, &x).sqrt();
        if norm == 0.0 {
            break;
        }
        x.iter_mut().for_each(|v| *v /= norm);
        op.apply(&x, &mut mx);
        let rq = dot(&x, &mx);
        let gain = rq - best;
        if rq > best {
            best = rq;
        }
        if gain <= tol {
            break;
        }
    }
    best.clamp(0.0, 1.0)
}
