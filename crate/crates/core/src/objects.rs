//! Core object types for the three families — permutations, ascent
//! sequences, Fishburn matrices — plus the sparse statistic polynomial,
//! with validation, text/JSON forms, and exhaustive enumeration in a
//! fixed canonical order.
//!
//! Canonical enumeration orders (stable, so golden output never churns):
//! ascent sequences are lexicographic; matrices are ordered by dimension
//! and then lexicographically on their row-major entries.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::Error;

/// Permutation of {1,...,n} in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    elems: Vec<usize>,
}

impl Permutation {
    /// Validates that `elems` contains every value in 1..=n exactly once.
    pub fn new(elems: Vec<usize>) -> Result<Self, Error> {
        let n = elems.len();
        let mut seen = vec![false; n];
        for &v in &elems {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    detail: format!("value {v} out of range 1..={n}"),
                });
            }
            if seen[v - 1] {
                return Err(Error::NotAPermutation {
                    detail: format!("value {v} appears more than once"),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { elems })
    }

    pub(crate) fn from_elems_unchecked(elems: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(elems.clone()).is_ok());
        Permutation { elems }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            elems: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    /// 1-based position of the maximal entry n. Panics on the empty permutation.
    pub fn position_of_max(&self) -> usize {
        let n = self.len();
        self.elems.iter().position(|&v| v == n).expect("nonempty") + 1
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (pos, &v) in self.elems.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Permutation { elems: inv }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_spaced(f, &self.elems)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let elems = parse_spaced(s, "permutation")?;
        if elems.is_empty() {
            return Err(Error::Empty {
                context: "permutation",
            });
        }
        Permutation::new(elems)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.elems.serialize(s)
    }
}

/// Number of ascents of an arbitrary integer sequence.
pub fn ascent_count(xs: &[usize]) -> usize {
    xs.windows(2).filter(|w| w[0] < w[1]).count()
}

/// 1-based positions i with x_i < x_{i+1}.
pub fn ascent_positions(xs: &[usize]) -> Vec<usize> {
    xs.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] < w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Sequence x_1..x_n with x_1 = 0 and every later entry at most one more
/// than the ascent count of the prefix before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AscentSequence {
    elems: Vec<usize>,
}

/// First index (1-based) at which `xs` breaks the ascent-sequence
/// invariants, together with the offending value and its bound.
fn first_violation(xs: &[usize]) -> Option<(usize, usize, usize)> {
    if xs.first().is_some_and(|&x| x != 0) {
        return Some((1, xs[0], 0));
    }
    let mut asc = 0;
    for i in 1..xs.len() {
        let bound = asc + 1;
        if xs[i] > bound {
            return Some((i + 1, xs[i], bound));
        }
        if xs[i] > xs[i - 1] {
            asc += 1;
        }
    }
    None
}

/// True iff `xs` is a nonempty valid ascent sequence.
pub fn validate_ascent_sequence(xs: &[usize]) -> bool {
    !xs.is_empty() && first_violation(xs).is_none()
}

impl AscentSequence {
    pub fn new(elems: Vec<usize>) -> Result<Self, Error> {
        if elems.is_empty() {
            return Err(Error::Empty {
                context: "ascent sequence",
            });
        }
        if let Some((index, value, bound)) = first_violation(&elems) {
            return Err(Error::NotAnAscentSequence {
                index,
                value,
                bound,
            });
        }
        Ok(AscentSequence { elems })
    }

    pub(crate) fn from_elems_unchecked(elems: Vec<usize>) -> Self {
        debug_assert!(validate_ascent_sequence(&elems));
        AscentSequence { elems }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn asc(&self) -> usize {
        ascent_count(&self.elems)
    }

    pub fn last(&self) -> usize {
        *self.elems.last().expect("ascent sequences are nonempty")
    }
}

impl fmt::Display for AscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_spaced(f, &self.elems)
    }
}

impl FromStr for AscentSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        AscentSequence::new(parse_spaced(s, "ascent sequence")?)
    }
}

impl Serialize for AscentSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.elems.serialize(s)
    }
}

/// Upper-triangular grid of nonnegative integers with no zero row or
/// column. Rows are numbered from the top and columns from the left,
/// both starting at 1 in reports; storage is 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FishburnMatrix {
    cells: Vec<Vec<u64>>,
}

fn grid_violation(cells: &[Vec<u64>]) -> Option<String> {
    let k = cells.len();
    if k == 0 {
        return Some("grid is empty".to_string());
    }
    for (i, row) in cells.iter().enumerate() {
        if row.len() != k {
            return Some(format!(
                "row {} has {} entries, expected {k}",
                i + 1,
                row.len()
            ));
        }
    }
    for (i, row) in cells.iter().enumerate() {
        if let Some(j) = row[..i].iter().position(|&v| v != 0) {
            return Some(format!(
                "entry below the diagonal at row {}, column {} is nonzero",
                i + 1,
                j + 1
            ));
        }
        if row.iter().all(|&v| v == 0) {
            return Some(format!("row {} is zero", i + 1));
        }
    }
    if let Some(j) = (0..k).find(|&j| cells.iter().all(|row| row[j] == 0)) {
        return Some(format!("column {} is zero", j + 1));
    }
    None
}

/// True iff `grid` is square, upper triangular, and free of zero rows
/// and columns.
pub fn validate_fishburn_matrix(grid: &[Vec<u64>]) -> bool {
    grid_violation(grid).is_none()
}

impl FishburnMatrix {
    pub fn new(cells: Vec<Vec<u64>>) -> Result<Self, Error> {
        match grid_violation(&cells) {
            Some(detail) => Err(Error::NotAFishburnMatrix { detail }),
            None => Ok(FishburnMatrix { cells }),
        }
    }

    pub(crate) fn from_cells_unchecked(cells: Vec<Vec<u64>>) -> Self {
        debug_assert!(validate_fishburn_matrix(&cells));
        FishburnMatrix { cells }
    }

    /// The 1×1 matrix (1), the weight-1 base of every removal chain.
    pub fn unit() -> Self {
        FishburnMatrix {
            cells: vec![vec![1]],
        }
    }

    pub fn dim(&self) -> usize {
        self.cells.len()
    }

    pub fn weight(&self) -> u64 {
        self.cells.iter().flatten().sum()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.cells
    }

    /// Entry at 0-based (row, column).
    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.cells[row][col]
    }

    pub fn row_sum(&self, row: usize) -> u64 {
        self.cells[row].iter().sum()
    }

    pub fn col_sum(&self, col: usize) -> u64 {
        self.cells.iter().map(|r| r[col]).sum()
    }

    /// Smallest 1-based row whose last-column entry is nonzero.
    pub fn index(&self) -> usize {
        let last = self.dim() - 1;
        (0..self.dim())
            .position(|i| self.cells[i][last] != 0)
            .expect("the last column of a Fishburn matrix is nonzero")
            + 1
    }
}

impl fmt::Display for FishburnMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write_spaced(f, row)?;
        }
        Ok(())
    }
}

impl FromStr for FishburnMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut cells = Vec::new();
        for row_text in s.split(';') {
            cells.push(parse_spaced(row_text, "matrix row")?);
        }
        // A trailing semicolon would read as one empty final row.
        if cells.last().is_some_and(|r| r.is_empty()) && cells.len() > 1 {
            cells.pop();
        }
        FishburnMatrix::new(cells)
    }
}

impl Serialize for FishburnMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.cells.serialize(s)
    }
}

/// Sparse polynomial in q with positive integer coefficients; stores no
/// zero coefficient, so equality is exact term-by-term equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatPolynomial {
    coeffs: BTreeMap<usize, u64>,
}

impl StatPolynomial {
    pub fn zero() -> Self {
        StatPolynomial::default()
    }

    /// Sum of q^e over the given exponents, with multiplicity.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = StatPolynomial::zero();
        for e in exps {
            p.add_term(e, 1);
        }
        p
    }

    pub fn add_term(&mut self, exp: usize, coeff: u64) {
        if coeff > 0 {
            *self.coeffs.entry(exp).or_insert(0) += coeff;
        }
    }

    pub fn coeff(&self, exp: usize) -> u64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Ascending (exponent, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluation at q = 1, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for StatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&e, &c)) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            match (c, e) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "q^{e}")?,
                (_, 1) => write!(f, "{c}q")?,
                (_, _) => write!(f, "{c}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for StatPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in &self.coeffs {
            map.serialize_entry(&e.to_string(), c)?;
        }
        map.end()
    }
}

fn write_spaced<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_spaced<T: FromStr>(s: &str, context: &'static str) -> Result<Vec<T>, Error> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| Error::BadToken {
                token: tok.to_string(),
                context,
            })
        })
        .collect()
}

/// Lazy lexicographic stream over all ascent sequences of length n.
pub struct AscentSequences {
    next: Option<Vec<usize>>,
}

impl Iterator for AscentSequences {
    type Item = AscentSequence;

    fn next(&mut self) -> Option<AscentSequence> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if lex_advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(AscentSequence::from_elems_unchecked(cur))
    }
}

/// Steps to the lexicographic successor in place; false at the maximum.
fn lex_advance(xs: &mut [usize]) -> bool {
    for i in (1..xs.len()).rev() {
        let bound = ascent_count(&xs[..i]) + 1;
        if xs[i] < bound {
            xs[i] += 1;
            for x in &mut xs[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// Every ascent sequence of length n, in lexicographic order.
pub fn enumerate_ascent_sequences(n: usize) -> AscentSequences {
    AscentSequences {
        next: (n > 0).then(|| vec![0; n]),
    }
}

/// Stream over all weight-n Fishburn matrices, ordered by dimension and
/// then lexicographically on row-major entries. Matrices are generated
/// one dimension at a time by direct search over upper-triangular
/// fillings, independently of the addition operation.
pub struct FishburnMatrices {
    weight: usize,
    dim: usize,
    buf: std::vec::IntoIter<FishburnMatrix>,
}

impl Iterator for FishburnMatrices {
    type Item = FishburnMatrix;

    fn next(&mut self) -> Option<FishburnMatrix> {
        loop {
            if let Some(m) = self.buf.next() {
                return Some(m);
            }
            if self.dim >= self.weight {
                return None;
            }
            self.dim += 1;
            self.buf = matrices_of_dim(self.weight as u64, self.dim).into_iter();
        }
    }
}

/// Every Fishburn matrix of weight n, exactly once, in canonical order.
pub fn enumerate_fishburn_matrices(n: usize) -> FishburnMatrices {
    FishburnMatrices {
        weight: n,
        dim: 0,
        buf: Vec::new().into_iter(),
    }
}

fn matrices_of_dim(weight: u64, k: usize) -> Vec<FishburnMatrix> {
    let mut out = Vec::new();
    if k == 0 || (k as u64) > weight {
        return out;
    }
    let mut grid = vec![vec![0u64; k]; k];
    let mut covered = vec![false; k];
    fill_cells(0, 0, weight, 0, k, &mut grid, &mut covered, &mut out);
    out
}

/// Depth-first fill of the upper triangle in row-major order. Candidate
/// values ascend, so completed grids appear in row-major lex order.
/// Prunes on: one unit reserved per unfinished row; column i must be
/// covered once row i is done (no later row can reach it); remaining
/// weight must cover max(rows left, columns still uncovered).
#[allow(clippy::too_many_arguments)]
fn fill_cells(
    i: usize,
    j: usize,
    rem: u64,
    row_sum: u64,
    k: usize,
    grid: &mut Vec<Vec<u64>>,
    covered: &mut Vec<bool>,
    out: &mut Vec<FishburnMatrix>,
) {
    if j == k {
        if row_sum == 0 || !covered[i] {
            return;
        }
        if i + 1 == k {
            if rem == 0 {
                out.push(FishburnMatrix::from_cells_unchecked(grid.clone()));
            }
            return;
        }
        let rows_below = (k - 1 - i) as u64;
        let uncovered = covered[i + 1..].iter().filter(|c| !**c).count() as u64;
        if rem >= rows_below.max(uncovered) {
            fill_cells(i + 1, i + 1, rem, 0, k, grid, covered, out);
        }
        return;
    }
    let rows_below = (k - 1 - i) as u64;
    if rem < rows_below {
        return;
    }
    let hi = rem - rows_below;
    let lo = u64::from(j == k - 1 && row_sum == 0);
    for v in lo..=hi {
        grid[i][j] = v;
        let was_covered = covered[j];
        covered[j] = was_covered || v > 0;
        fill_cells(i, j + 1, rem - v, row_sum + v, k, grid, covered, out);
        covered[j] = was_covered;
    }
    grid[i][j] = 0;
}
