//! Containment test for the forbidden pattern and the active-site
//! machinery that drives the insertion encoding.
//!
//! An occurrence of the pattern in π is a subsequence π_i π_{i+1} π_j
//! with j > i+1 such that π_i + 1 = π_j < π_{i+1}: the first two entries
//! adjacent in position, the first and third adjacent in value.

use crate::error::Error;
use crate::objects::Permutation;

/// 1-based (i, j) of the first occurrence in scan order, if any.
pub(crate) fn find_pattern(p: &Permutation) -> Option<(usize, usize)> {
    let v = p.elems();
    let n = v.len();
    for i in 0..n.saturating_sub(2) {
        for j in i + 2..n {
            if v[i] + 1 == v[j] && v[j] < v[i + 1] {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

/// True iff the permutation contains the pattern.
pub fn contains_pattern(p: &Permutation) -> bool {
    find_pattern(p).is_some()
}

/// The gaps of an avoider where the next maximal entry may be inserted,
/// with their right-to-left labels. Gap g sits between positions g and
/// g+1 (gap 0 is the front, gap n the end); the rightmost active gap is
/// labeled 0 and labels increase leftward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActiveSiteLabeling {
    sites: Vec<usize>,
}

impl ActiveSiteLabeling {
    /// Active gaps in ascending order.
    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    /// s(p), the number of active sites.
    pub fn count(&self) -> usize {
        self.sites.len()
    }

    pub fn label_of_gap(&self, gap: usize) -> Option<usize> {
        self.sites
            .iter()
            .position(|&g| g == gap)
            .map(|idx| self.sites.len() - 1 - idx)
    }

    pub fn gap_of_label(&self, label: usize) -> Option<usize> {
        let s = self.sites.len();
        (label < s).then(|| self.sites[s - 1 - label])
    }

    /// (gap, label) pairs left to right.
    pub fn labeled(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let s = self.sites.len();
        self.sites
            .iter()
            .enumerate()
            .map(move |(idx, &g)| (g, s - 1 - idx))
    }

    /// l(π_i): the largest label among active sites at or right of the
    /// 1-based position `pos`, i.e. the label of the leftmost active gap
    /// g >= pos. The end gap is always active, so this never fails for
    /// pos <= n.
    pub fn largest_label_right_of(&self, pos: usize) -> usize {
        let idx = self
            .sites
            .iter()
            .position(|&g| g >= pos)
            .expect("the end gap is always active");
        self.sites.len() - 1 - idx
    }
}

pub(crate) fn insert_at_gap(p: &Permutation, gap: usize) -> Permutation {
    let mut elems = p.elems().to_vec();
    elems.insert(gap, p.len() + 1);
    Permutation::from_elems_unchecked(elems)
}

/// Active sites of `p`, by trial insertion of n+1 at every gap. Errors
/// when `p` contains the pattern, since sites are defined only on
/// avoiders. The empty permutation has the single active gap 0.
pub fn active_sites(p: &Permutation) -> Result<ActiveSiteLabeling, Error> {
    if let Some((i, j)) = find_pattern(p) {
        return Err(Error::ContainsPattern { i, j });
    }
    let sites = (0..=p.len())
        .filter(|&gap| !contains_pattern(&insert_at_gap(p, gap)))
        .collect();
    Ok(ActiveSiteLabeling { sites })
}

/// Inserts n+1 into the active site of `p` carrying `label`.
pub fn insert_max(p: &Permutation, label: usize) -> Result<Permutation, Error> {
    let sites = active_sites(p)?;
    match sites.gap_of_label(label) {
        Some(gap) => Ok(insert_at_gap(p, gap)),
        None => Err(Error::LabelOutOfRange {
            label,
            sites: sites.count(),
        }),
    }
}

/// Every pattern-avoiding permutation of \[n\], exactly once, grown by
/// inserting maxima at active sites. Children are visited by ascending
/// label, so the output is ordered lexicographically by encoding
/// sequence.
pub fn enumerate_avoiders(n: usize) -> impl Iterator<Item = Permutation> {
    let mut out = Vec::new();
    if n > 0 {
        grow(&Permutation::identity(1), n, &mut out);
    }
    out.into_iter()
}

fn grow(p: &Permutation, n: usize, out: &mut Vec<Permutation>) {
    if p.len() == n {
        out.push(p.clone());
        return;
    }
    let sites = active_sites(p).expect("avoidance is preserved by construction");
    for label in 0..sites.count() {
        let gap = sites.gap_of_label(label).expect("label in range");
        grow(&insert_at_gap(p, gap), n, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_matches_worked_cases() {
        assert!(contains_pattern(&perm("4 2 5 1 3")));
        assert!(!contains_pattern(&perm("5 2 3 1 4")));
        assert!(!contains_pattern(&perm("1 2 3 4 5")));
        assert!(contains_pattern(&perm("1 3 2")));
        assert!(!contains_pattern(&perm("1")));
    }

    #[test]
    fn sites_of_the_chain_permutation() {
        let sites = active_sites(&perm("5 2 3 1 6 4 7")).unwrap();
        assert_eq!(sites.sites(), &[0, 4, 6, 7]);
        assert_eq!(sites.label_of_gap(0), Some(3));
        assert_eq!(sites.label_of_gap(4), Some(2));
        assert_eq!(sites.label_of_gap(6), Some(1));
        assert_eq!(sites.label_of_gap(7), Some(0));
        assert_eq!(sites.label_of_gap(2), None);
    }

    #[test]
    fn sites_of_the_statistics_permutation() {
        let sites = active_sites(&perm("4 2 1 7 8 5 3 6")).unwrap();
        assert_eq!(sites.sites(), &[0, 3, 5, 7, 8]);
        let labels: Vec<(usize, usize)> = sites.labeled().collect();
        assert_eq!(labels, [(0, 4), (3, 3), (5, 2), (7, 1), (8, 0)]);
    }

    #[test]
    fn sites_of_the_singleton() {
        let sites = active_sites(&perm("1")).unwrap();
        assert_eq!(sites.sites(), &[0, 1]);
        assert_eq!(sites.count(), 2);
    }

    #[test]
    fn sites_reject_pattern_containing_input() {
        let err = active_sites(&perm("4 2 5 1 3")).unwrap_err();
        assert_eq!(err, Error::ContainsPattern { i: 2, j: 5 });
    }

    #[test]
    fn a_gap_is_active_exactly_when_insertion_preserves_avoidance() {
        for n in 1..=7 {
            for p in enumerate_avoiders(n) {
                let sites = active_sites(&p).unwrap();
                for gap in 0..=p.len() {
                    let avoids = !contains_pattern(&insert_at_gap(&p, gap));
                    assert_eq!(
                        sites.label_of_gap(gap).is_some(),
                        avoids,
                        "gap {gap} of {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn insertion_follows_labels() {
        assert_eq!(
            insert_max(&perm("5 2 3 1 6 4 7"), 3).unwrap(),
            perm("8 5 2 3 1 6 4 7")
        );
        assert_eq!(insert_max(&perm("1"), 1).unwrap(), perm("2 1"));
        assert_eq!(insert_max(&perm("2 3 1"), 0).unwrap(), perm("2 3 1 4"));
        let err = insert_max(&perm("1"), 2).unwrap_err();
        assert_eq!(err, Error::LabelOutOfRange { label: 2, sites: 2 });
    }

    #[test]
    fn end_gap_and_gap_after_max_are_active() {
        for n in 1..=6 {
            for p in enumerate_avoiders(n) {
                let sites = active_sites(&p).unwrap();
                assert!(sites.label_of_gap(p.len()).is_some(), "end gap of {p}");
                assert!(
                    sites.label_of_gap(p.position_of_max()).is_some(),
                    "gap after max of {p}"
                );
            }
        }
    }

    #[test]
    fn avoiders_of_length_three() {
        let got: BTreeSet<String> = enumerate_avoiders(3).map(|p| p.to_string()).collect();
        let want: BTreeSet<String> = ["1 2 3", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]
            .into_iter()
            .map(String::from)
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn avoiders_of_length_one() {
        let got: Vec<Permutation> = enumerate_avoiders(1).collect();
        assert_eq!(got, vec![perm("1")]);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_avoiding() {
        for n in 1..=6 {
            let all: Vec<Permutation> = enumerate_avoiders(n).collect();
            let set: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            for p in &all {
                assert!(!contains_pattern(p));
            }
        }
    }

    #[test]
    fn eight_letter_example_is_enumerated() {
        assert!(enumerate_avoiders(8).any(|p| p.to_string() == "8 5 2 3 1 6 4 7"));
    }
}
