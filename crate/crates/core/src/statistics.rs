//! Statistics on the three families: extrema and site labels on
//! avoiders, zero/bound-hit/right-extreme counts on sequences, weight
//! and corner data on matrices, the modified-sequence procedure, and
//! the polynomial refinements that ride along the bijections.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Error;
use crate::objects::{
    ascent_positions, AscentSequence, FishburnMatrix, Permutation, StatPolynomial,
};
use crate::patterns::active_sites;

/// The increment procedure: walk the ascent positions left to right;
/// at each one, bump every earlier entry that is at least the value
/// right after the ascent. Comparisons see earlier bumps. The result
/// is generally not an ascent sequence.
pub fn modified_sequence(x: &AscentSequence) -> Vec<usize> {
    let mut work = x.elems().to_vec();
    for i in ascent_positions(x.elems()) {
        let threshold = work[i];
        for v in &mut work[..i - 1] {
            if *v >= threshold {
                *v += 1;
            }
        }
    }
    work
}

/// Extremum and site-label statistics of an avoider.
#[derive(Debug, Clone, Serialize)]
pub struct PermStats {
    pub lrmax_values: BTreeSet<usize>,
    pub lrmin_values: BTreeSet<usize>,
    pub rlmax_values: BTreeSet<usize>,
    pub rlmin_values: BTreeSet<usize>,
    /// Multiset, ascending: the largest active-site label right of each
    /// LR-maximum.
    pub lmaxl: Vec<usize>,
    /// Multiset, ascending: the same over the RL-maxima.
    pub rmaxl: Vec<usize>,
    /// Sum of q^l over the lmaxl multiset.
    pub delta: StatPolynomial,
    /// Label of the active site just after the maximal entry.
    pub label_after_max: usize,
    /// Number of active sites.
    pub sites: usize,
}

impl PermStats {
    pub fn lrmax(&self) -> usize {
        self.lrmax_values.len()
    }

    pub fn lrmin(&self) -> usize {
        self.lrmin_values.len()
    }

    pub fn rlmax(&self) -> usize {
        self.rlmax_values.len()
    }

    pub fn rlmin(&self) -> usize {
        self.rlmin_values.len()
    }
}

/// 1-based positions of the left-to-right maxima.
fn lrmax_positions(v: &[usize]) -> Vec<usize> {
    let mut best = 0;
    let mut out = Vec::new();
    for (idx, &x) in v.iter().enumerate() {
        if x > best {
            best = x;
            out.push(idx + 1);
        }
    }
    out
}

fn lrmin_positions(v: &[usize]) -> Vec<usize> {
    let mut best = usize::MAX;
    let mut out = Vec::new();
    for (idx, &x) in v.iter().enumerate() {
        if x < best {
            best = x;
            out.push(idx + 1);
        }
    }
    out
}

fn rlmax_positions(v: &[usize]) -> Vec<usize> {
    let mut best = 0;
    let mut out = Vec::new();
    for idx in (0..v.len()).rev() {
        if v[idx] > best {
            best = v[idx];
            out.push(idx + 1);
        }
    }
    out.reverse();
    out
}

fn rlmin_positions(v: &[usize]) -> Vec<usize> {
    let mut best = usize::MAX;
    let mut out = Vec::new();
    for idx in (0..v.len()).rev() {
        if v[idx] < best {
            best = v[idx];
            out.push(idx + 1);
        }
    }
    out.reverse();
    out
}

/// All permutation statistics. Errors on the empty permutation and on
/// pattern-containing input, where site labels are undefined.
pub fn perm_stats(p: &Permutation) -> Result<PermStats, Error> {
    if p.is_empty() {
        return Err(Error::Empty {
            context: "permutation",
        });
    }
    let sites = active_sites(p)?;
    let v = p.elems();
    let values = |positions: &[usize]| positions.iter().map(|&pos| v[pos - 1]).collect();
    let labels = |positions: &[usize]| {
        let mut ls: Vec<usize> = positions
            .iter()
            .map(|&pos| sites.largest_label_right_of(pos))
            .collect();
        ls.sort_unstable();
        ls
    };
    let lrmax_pos = lrmax_positions(v);
    let rlmax_pos = rlmax_positions(v);
    let lmaxl = labels(&lrmax_pos);
    let rmaxl = labels(&rlmax_pos);
    let delta = StatPolynomial::from_exponents(lmaxl.iter().copied());
    let label_after_max = sites
        .label_of_gap(p.position_of_max())
        .expect("the gap after the maximal entry is active");
    Ok(PermStats {
        lrmax_values: values(&lrmax_pos),
        lrmin_values: values(&lrmin_positions(v)),
        rlmax_values: values(&rlmax_pos),
        rlmin_values: values(&rlmin_positions(v)),
        lmaxl,
        rmaxl,
        delta,
        label_after_max,
        sites: sites.count(),
    })
}

/// Sequence statistics, defined on arbitrary integer sequences so they
/// can run on modified sequences too.
#[derive(Debug, Clone, Serialize)]
pub struct SeqStats {
    /// 1-based positions i with x_i < x_{i+1}.
    pub ascent_positions: Vec<usize>,
    /// Number of zero entries.
    pub zeros: usize,
    /// Number of entries equal to one more than the ascent count of
    /// their prefix; the bound for the first entry is 0, so a leading
    /// zero counts.
    pub max_hits: usize,
    /// 1-based indices strictly below every later entry.
    pub rmin_indices: Vec<usize>,
    /// 1-based indices weakly above every later entry.
    pub rmax_indices: Vec<usize>,
    /// Values at the right-minimum indices; distinct by definition.
    pub rmin_values: BTreeSet<usize>,
    /// Sum of q^{x_i} over the right-maximum indices, with multiplicity.
    pub chi: StatPolynomial,
}

impl SeqStats {
    pub fn rmin(&self) -> usize {
        self.rmin_indices.len()
    }

    pub fn rmax(&self) -> usize {
        self.rmax_indices.len()
    }
}

pub fn seq_stats(xs: &[usize]) -> SeqStats {
    let n = xs.len();
    let zeros = xs.iter().filter(|&&x| x == 0).count();
    let mut max_hits = 0;
    let mut asc = 0;
    for i in 0..n {
        let bound = if i == 0 { 0 } else { asc + 1 };
        if xs[i] == bound {
            max_hits += 1;
        }
        if i > 0 && xs[i] > xs[i - 1] {
            asc += 1;
        }
    }
    let mut rmin_indices = Vec::new();
    let mut rmax_indices = Vec::new();
    for i in 0..n {
        let tail = &xs[i + 1..];
        if tail.iter().all(|&y| xs[i] < y) {
            rmin_indices.push(i + 1);
        }
        if tail.iter().all(|&y| xs[i] >= y) {
            rmax_indices.push(i + 1);
        }
    }
    let rmin_values = rmin_indices.iter().map(|&i| xs[i - 1]).collect();
    let chi = StatPolynomial::from_exponents(rmax_indices.iter().map(|&i| xs[i - 1]));
    SeqStats {
        ascent_positions: ascent_positions(xs),
        zeros,
        max_hits,
        rmin_indices,
        rmax_indices,
        rmin_values,
        chi,
    }
}

/// Weight, trace, and corner statistics of a matrix.
#[derive(Debug, Clone, Serialize)]
pub struct MatrixStats {
    pub dim: usize,
    /// 1-based smallest row with a nonzero entry in the last column.
    pub index: usize,
    pub row_sums: Vec<u64>,
    pub col_sums: Vec<u64>,
    /// Number of nonzero cells on the main diagonal.
    pub trace_nonzeros: usize,
    /// 1-based (row, column) of every weakly-north-east cell: a nonzero
    /// cell with every other cell weakly north-east of it zero.
    pub ne_cells: Vec<(usize, usize)>,
    /// Rows of the wNE cells shifted down by one, comparable to
    /// sequence values.
    pub ne_rows: BTreeSet<usize>,
    /// Last-column entries as coefficients: sum of `A[i][dim] q^(i-1)`.
    pub lambda: StatPolynomial,
}

impl MatrixStats {
    pub fn ne(&self) -> usize {
        self.ne_cells.len()
    }

    pub fn rsum1(&self) -> u64 {
        self.row_sums[0]
    }

    pub fn csum_dim(&self) -> u64 {
        *self.col_sums.last().expect("matrices are nonempty")
    }
}

pub fn matrix_stats(a: &FishburnMatrix) -> MatrixStats {
    let k = a.dim();
    let row_sums: Vec<u64> = (0..k).map(|i| a.row_sum(i)).collect();
    let col_sums: Vec<u64> = (0..k).map(|j| a.col_sum(j)).collect();
    let trace_nonzeros = (0..k).filter(|&i| a.entry(i, i) != 0).count();
    let mut ne_cells = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if a.entry(i, j) == 0 {
                continue;
            }
            let alone = (0..=i).all(|s| (j..k).all(|t| (s, t) == (i, j) || a.entry(s, t) == 0));
            if alone {
                ne_cells.push((i + 1, j + 1));
            }
        }
    }
    let distinct_rows: BTreeSet<usize> = ne_cells.iter().map(|c| c.0).collect();
    let distinct_cols: BTreeSet<usize> = ne_cells.iter().map(|c| c.1).collect();
    assert!(
        distinct_rows.len() == ne_cells.len() && distinct_cols.len() == ne_cells.len(),
        "wNE cells must not share a row or column"
    );
    let ne_rows = ne_cells.iter().map(|&(i, _)| i - 1).collect();
    let mut lambda = StatPolynomial::zero();
    for i in 0..k {
        lambda.add_term(i, a.entry(i, k - 1));
    }
    MatrixStats {
        dim: k,
        index: a.index(),
        row_sums,
        col_sums,
        trace_nonzeros,
        ne_cells,
        ne_rows,
        lambda,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::enumerate_fishburn_matrices;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> AscentSequence {
        s.parse().unwrap()
    }

    fn mat(s: &str) -> FishburnMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn modification_of_the_worked_sequence() {
        let x = seq("0 1 0 1 2 2 1 3");
        assert_eq!(ascent_positions(x.elems()), [1, 3, 4, 7]);
        assert_eq!(modified_sequence(&x), [0, 4, 0, 1, 2, 2, 1, 3]);
    }

    #[test]
    fn modification_fixed_points() {
        assert_eq!(modified_sequence(&seq("0")), [0]);
        assert_eq!(
            modified_sequence(&seq("0 1 1 0 2 1 0 3")),
            [0, 1, 1, 0, 2, 1, 0, 3]
        );
    }

    #[test]
    fn perm_stats_of_the_worked_example() {
        let s = perm_stats(&perm("4 2 1 7 8 5 3 6")).unwrap();
        assert_eq!(s.rmaxl, [0, 2]);
        assert_eq!(s.lmaxl, [2, 2, 3]);
        assert_eq!(s.delta.to_string(), "2q^2 + q^3");
        assert_eq!(s.delta.eval_at_one() as usize, s.lrmax());
    }

    #[test]
    fn perm_stats_of_the_singleton() {
        let s = perm_stats(&perm("1")).unwrap();
        assert_eq!((s.lrmax(), s.lrmin(), s.rlmax(), s.rlmin()), (1, 1, 1, 1));
        assert_eq!(s.delta.to_string(), "1");
        assert_eq!(s.sites, 2);
        assert_eq!(s.label_after_max, 0);
    }

    #[test]
    fn perm_stats_of_the_encoding_example() {
        let s = perm_stats(&perm("8 5 2 3 1 6 4 7")).unwrap();
        assert_eq!(s.lrmax(), 1);
        assert_eq!(s.rlmin(), 3);
        assert_eq!(s.lrmin(), 4);
        assert_eq!(s.rlmax(), 2);
    }

    #[test]
    fn perm_stats_rejects_non_avoiders() {
        assert!(matches!(
            perm_stats(&perm("4 2 5 1 3")),
            Err(Error::ContainsPattern { .. })
        ));
    }

    #[test]
    fn seq_stats_of_the_encoding() {
        let s = seq_stats(&[0, 1, 1, 0, 2, 1, 0, 3]);
        assert_eq!(s.zeros, 3);
        assert_eq!(s.max_hits, 4);
        assert_eq!(s.rmin_indices, [7, 8]);
        assert_eq!(s.rmax_indices, [8]);
    }

    #[test]
    fn seq_stats_of_the_base_case() {
        let s = seq_stats(&[0]);
        assert_eq!((s.zeros, s.max_hits, s.rmin(), s.rmax()), (1, 1, 1, 1));
    }

    #[test]
    fn seq_stats_of_a_modified_sequence() {
        let s = seq_stats(&[0, 4, 0, 1, 2, 2, 1, 3]);
        assert_eq!(s.rmax_indices, [2, 8]);
        assert_eq!(s.rmax(), 2);
        assert_eq!(s.chi.to_string(), "q^3 + q^4");
    }

    #[test]
    fn matrix_stats_small_cases() {
        let s = matrix_stats(&mat("1 1; 0 1"));
        assert_eq!(s.ne(), 1);
        assert_eq!(s.ne_rows.iter().copied().collect::<Vec<_>>(), [0]);
        assert_eq!(s.trace_nonzeros, 2);
        assert_eq!(s.rsum1(), 2);
        assert_eq!(s.csum_dim(), 2);
        assert_eq!(s.lambda.to_string(), "1 + q");

        let s = matrix_stats(&mat("3"));
        assert_eq!(s.ne(), 1);
        assert_eq!(s.trace_nonzeros, 1);
        assert_eq!(s.lambda.to_string(), "3");
    }

    #[test]
    fn lambda_of_the_five_by_five_example() {
        let s = matrix_stats(&mat(
            "2 4 1 3 0; 0 5 2 2 0; 0 0 0 0 1; 0 0 0 1 3; 0 0 0 0 2",
        ));
        assert_eq!(s.lambda.to_string(), "q^2 + 3q^3 + 2q^4");
        assert_eq!(s.lambda.eval_at_one(), s.csum_dim());
        assert_eq!(s.index, 3);
    }

    #[test]
    fn wne_cells_are_unique_per_row_and_column() {
        for n in 1..=6 {
            for a in enumerate_fishburn_matrices(n) {
                let s = matrix_stats(&a);
                assert!(s.ne() >= 1, "every matrix has a wNE cell: {a}");
            }
        }
    }
}
