//! The maps between the three families: the insertion encoding of
//! avoiders as ascent sequences, the removal/addition recursion linking
//! sequences to matrices, the anti-diagonal flip, and the composite map
//! from avoiders to matrices.

use serde::Serialize;

use crate::error::Error;
use crate::objects::{AscentSequence, FishburnMatrix, Permutation};
use crate::patterns::{active_sites, find_pattern, insert_at_gap};

/// Encodes an avoider as the sequence of active-site labels at which
/// each value was inserted, recovered by stripping maxima.
pub fn sequence_from_permutation(p: &Permutation) -> Result<AscentSequence, Error> {
    if p.is_empty() {
        return Err(Error::Empty {
            context: "permutation",
        });
    }
    if let Some((i, j)) = find_pattern(p) {
        return Err(Error::ContainsPattern { i, j });
    }
    let n = p.len();
    let mut labels = vec![0usize; n];
    let mut cur = p.clone();
    for k in (2..=n).rev() {
        let pos = cur.position_of_max();
        let mut elems = cur.elems().to_vec();
        elems.remove(pos - 1);
        let shorter = Permutation::from_elems_unchecked(elems);
        let sites = active_sites(&shorter).expect("deleting the maximum preserves avoidance");
        labels[k - 1] = sites
            .label_of_gap(pos - 1)
            .expect("the gap a maximum came out of is active");
        cur = shorter;
    }
    Ok(AscentSequence::from_elems_unchecked(labels))
}

/// The permutations built by inserting 1, 2, ..., n at the labeled
/// sites, i.e. every step of the decoding of `x`. The last element is
/// the decoded permutation.
pub fn insertion_chain(x: &AscentSequence) -> Vec<Permutation> {
    let mut chain = Vec::with_capacity(x.len());
    let mut cur = Permutation::identity(1);
    chain.push(cur.clone());
    for &label in &x.elems()[1..] {
        let sites = active_sites(&cur).expect("every chain member avoids the pattern");
        let gap = sites
            .gap_of_label(label)
            .expect("the ascent bound keeps labels below the site count");
        cur = insert_at_gap(&cur, gap);
        chain.push(cur.clone());
    }
    chain
}

/// Decodes an ascent sequence back to its avoider.
pub fn permutation_from_sequence(x: &AscentSequence) -> Permutation {
    insertion_chain(x).pop().expect("chain is nonempty")
}

/// How a removal step transformed the matrix. Columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RemovalRule {
    /// The cell (index, dim) lost one unit.
    Decrement,
    /// The last row and column were dropped.
    DropLastRowCol,
    /// For each row above the pivot row, the entries in the listed
    /// columns each moved one column rightward (the last into column
    /// dim); then the pivot row and column were deleted.
    ShiftColumns { columns: Vec<usize> },
}

/// How an addition step transformed the matrix. Columns are 1-based in
/// the enlarged matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum AdditionRule {
    /// The cell (i+1, dim) gained one unit.
    Increment,
    /// A fresh unit diagonal cell was appended after the last row and
    /// column.
    ExtendDiagonal,
    /// A new row and column were inserted after position i, the new row
    /// carrying a single 1 in the last column; for each row above the
    /// new one, entries in the listed columns each moved one column
    /// leftward (the first into the new column), and the last column
    /// was zeroed above the new row.
    InsertRowCol { columns: Vec<usize> },
}

/// Removal step: peels one unit of weight off a matrix of weight >= 2
/// and reports which rule fired.
pub fn removal_with_rule(a: &FishburnMatrix) -> Result<(FishburnMatrix, RemovalRule), Error> {
    if a.weight() < 2 {
        return Err(Error::NoPredecessor);
    }
    let k = a.dim();
    let pivot = a.index() - 1;
    if a.row_sum(pivot) > 1 {
        let mut cells = a.rows().to_vec();
        cells[pivot][k - 1] -= 1;
        return Ok((
            FishburnMatrix::from_cells_unchecked(cells),
            RemovalRule::Decrement,
        ));
    }
    if pivot == k - 1 {
        let cells: Vec<Vec<u64>> = a.rows()[..k - 1]
            .iter()
            .map(|r| r[..k - 1].to_vec())
            .collect();
        return Ok((
            FishburnMatrix::from_cells_unchecked(cells),
            RemovalRule::DropLastRowCol,
        ));
    }
    // The pivot row holds a single 1 in the last column and lies above
    // the bottom. Columns at or right of the pivot column that are
    // nonzero strictly above the pivot row shift right simultaneously:
    // each empties into the next such column, the last into column dim.
    // All moves read the original matrix. The pivot column (always the
    // first shifted column) and pivot row then disappear.
    let shifted: Vec<usize> = (pivot..k)
        .filter(|&j| (0..pivot).any(|r| a.entry(r, j) != 0))
        .collect();
    debug_assert_eq!(shifted.first(), Some(&pivot));
    let mut cells = a.rows().to_vec();
    for (r, row) in cells.iter_mut().take(pivot).enumerate() {
        for (b, &src) in shifted.iter().enumerate() {
            let dst = if b + 1 < shifted.len() {
                shifted[b + 1]
            } else {
                k - 1
            };
            row[dst] = a.entry(r, src);
        }
    }
    cells.remove(pivot);
    for row in &mut cells {
        row.remove(pivot);
    }
    let columns = shifted.iter().map(|&j| j + 1).collect();
    Ok((
        FishburnMatrix::from_cells_unchecked(cells),
        RemovalRule::ShiftColumns { columns },
    ))
}

/// Removal step without the rule record.
pub fn removal(a: &FishburnMatrix) -> Result<FishburnMatrix, Error> {
    removal_with_rule(a).map(|(m, _)| m)
}

/// Addition step at position `i` in 0..=dim, reporting which rule
/// fired. The result always has index i+1.
pub fn addition_with_rule(
    a: &FishburnMatrix,
    i: usize,
) -> Result<(FishburnMatrix, AdditionRule), Error> {
    let k = a.dim();
    if i > k {
        return Err(Error::PositionOutOfRange {
            position: i,
            dim: k,
        });
    }
    let pivot = a.index() - 1;
    if i <= pivot {
        let mut cells = a.rows().to_vec();
        cells[i][k - 1] += 1;
        return Ok((
            FishburnMatrix::from_cells_unchecked(cells),
            AdditionRule::Increment,
        ));
    }
    if i == k {
        let mut cells: Vec<Vec<u64>> = a
            .rows()
            .iter()
            .map(|r| {
                let mut row = r.clone();
                row.push(0);
                row
            })
            .collect();
        let mut last = vec![0u64; k + 1];
        last[k] = 1;
        cells.push(last);
        return Ok((
            FishburnMatrix::from_cells_unchecked(cells),
            AdditionRule::ExtendDiagonal,
        ));
    }
    // New row and column at 0-based position i, the row all zero except
    // a 1 in the last column. Columns at or right of the new one that
    // are nonzero strictly above the new row shift left simultaneously:
    // the first empties into the new column, each later one into its
    // predecessor, and the freed last column is zeroed above the new
    // row. All moves read the just-enlarged matrix.
    let mut cells: Vec<Vec<u64>> = a
        .rows()
        .iter()
        .map(|r| {
            let mut row = r.clone();
            row.insert(i, 0);
            row
        })
        .collect();
    let mut new_row = vec![0u64; k + 1];
    new_row[k] = 1;
    cells.insert(i, new_row);
    let frozen = cells.clone();
    let shifted: Vec<usize> = (i..=k)
        .filter(|&j| (0..i).any(|r| frozen[r][j] != 0))
        .collect();
    debug_assert_eq!(shifted.last(), Some(&k));
    for (r, row) in cells.iter_mut().take(i).enumerate() {
        for (b, &src) in shifted.iter().enumerate() {
            let dst = if b == 0 { i } else { shifted[b - 1] };
            row[dst] = frozen[r][src];
        }
        row[k] = 0;
    }
    let columns = shifted.iter().map(|&j| j + 1).collect();
    Ok((
        FishburnMatrix::from_cells_unchecked(cells),
        AdditionRule::InsertRowCol { columns },
    ))
}

/// Addition step without the rule record.
pub fn addition(a: &FishburnMatrix, i: usize) -> Result<FishburnMatrix, Error> {
    addition_with_rule(a, i).map(|(m, _)| m)
}

/// The matrices built by folding addition along the sequence from the
/// unit matrix; entry k-1 has weight k. The last element is the image
/// of `x`.
pub fn matrix_chain(x: &AscentSequence) -> Vec<FishburnMatrix> {
    let mut chain = Vec::with_capacity(x.len());
    let mut cur = FishburnMatrix::unit();
    chain.push(cur.clone());
    for &v in &x.elems()[1..] {
        cur = addition(&cur, v).expect("the ascent bound keeps positions within the dimension");
        chain.push(cur.clone());
    }
    chain
}

/// Builds the weight-n matrix of an ascent sequence by repeated
/// addition.
pub fn matrix_from_sequence(x: &AscentSequence) -> FishburnMatrix {
    matrix_chain(x).pop().expect("chain is nonempty")
}

/// Recovers the ascent sequence of a matrix by repeated removal: the
/// k-th entry is one less than the index of the weight-k matrix in the
/// removal chain.
pub fn sequence_from_matrix(a: &FishburnMatrix) -> AscentSequence {
    let n = a.weight() as usize;
    let mut xs = vec![0usize; n];
    let mut cur = a.clone();
    for k in (1..=n).rev() {
        xs[k - 1] = cur.index() - 1;
        if k > 1 {
            cur = removal(&cur).expect("weight is at least 2 here");
        }
    }
    debug_assert_eq!(cur, FishburnMatrix::unit());
    AscentSequence::from_elems_unchecked(xs)
}

/// Transposition along the North-East diagonal: the flipped (i, j)
/// entry is the original (dim+1-j, dim+1-i) entry. An involution on
/// weight-n matrices.
pub fn flip(a: &FishburnMatrix) -> FishburnMatrix {
    let k = a.dim();
    let cells = (0..k)
        .map(|i| (0..k).map(|j| a.entry(k - 1 - j, k - 1 - i)).collect())
        .collect();
    FishburnMatrix::from_cells_unchecked(cells)
}

/// The composite bijection from avoiders to matrices: encode as a
/// sequence, build the matrix, flip.
pub fn matrix_from_permutation(p: &Permutation) -> Result<FishburnMatrix, Error> {
    Ok(flip(&matrix_from_sequence(&sequence_from_permutation(p)?)))
}

/// Inverse of the composite: flip, peel to a sequence, decode.
pub fn permutation_from_matrix(a: &FishburnMatrix) -> Permutation {
    permutation_from_sequence(&sequence_from_matrix(&flip(a)))
}
