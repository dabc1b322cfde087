//! Exhaustive desk-scale verification: statistic transport along the
//! maps, joint-distribution symmetry tables, and the counterexample
//! showing the composite map does not commute with inversion.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bijections::{
    flip, matrix_from_permutation, matrix_from_sequence, permutation_from_sequence,
    sequence_from_permutation,
};
use crate::error::Error;
use crate::objects::{enumerate_ascent_sequences, enumerate_fishburn_matrices, Permutation};
use crate::oracle::{cross_check_counts, CountReport, FACTORIAL_CAP};
use crate::patterns::{contains_pattern, enumerate_avoiders};
use crate::statistics::{matrix_stats, modified_sequence, perm_stats, seq_stats};

/// One of the three Fishburn families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Avoiders,
    Sequences,
    Matrices,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Avoiders => "avoiders",
            Family::Sequences => "sequences",
            Family::Matrices => "matrices",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "avoiders" => Ok(Family::Avoiders),
            "sequences" => Ok(Family::Sequences),
            "matrices" => Ok(Family::Matrices),
            other => Err(Error::UnknownFamily {
                name: other.to_string(),
            }),
        }
    }
}

/// Scalar statistics available for joint tables, per family.
pub fn stat_names(family: Family) -> &'static [&'static str] {
    match family {
        Family::Avoiders => &["lrmax", "lrmin", "rlmax", "rlmin"],
        Family::Sequences => &["zero", "max", "rmin", "rmax", "rmaxhat", "asc"],
        Family::Matrices => &["rsum1", "csumdim", "ne", "tr", "dim", "index"],
    }
}

/// Exact joint distribution of two statistics over one family at one
/// size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointTable {
    pub family: Family,
    pub n: usize,
    pub stat_a: String,
    pub stat_b: String,
    pub counts: BTreeMap<(u64, u64), u64>,
}

impl JointTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.counts
            .iter()
            .all(|(&(a, b), &c)| self.counts.get(&(b, a)).copied().unwrap_or(0) == c)
    }
}

impl Serialize for JointTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Cell {
            a: u64,
            b: u64,
            count: u64,
        }
        let cells: Vec<Cell> = self
            .counts
            .iter()
            .map(|(&(a, b), &count)| Cell { a, b, count })
            .collect();
        let mut st = s.serialize_struct("JointTable", 7)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("stat_a", &self.stat_a)?;
        st.serialize_field("stat_b", &self.stat_b)?;
        st.serialize_field("total", &self.total())?;
        st.serialize_field("symmetric", &self.is_symmetric())?;
        st.serialize_field("counts", &cells)?;
        st.end()
    }
}

/// True iff counts(a, b) = counts(b, a) throughout.
pub fn check_symmetry(t: &JointTable) -> bool {
    t.is_symmetric()
}

fn unknown_stat(family: Family, name: &str) -> Error {
    Error::UnknownStatistic {
        name: name.to_string(),
        available: stat_names(family).join(", "),
    }
}

/// Exact counts of a statistic pair over the whole family at size n.
pub fn joint_table(
    family: Family,
    stat_a: &str,
    stat_b: &str,
    n: usize,
) -> Result<JointTable, Error> {
    if n > FACTORIAL_CAP {
        return Err(Error::BudgetExceeded {
            n,
            cap: FACTORIAL_CAP,
        });
    }
    for name in [stat_a, stat_b] {
        if !stat_names(family).contains(&name) {
            return Err(unknown_stat(family, name));
        }
    }
    let mut counts: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    let mut tally = |pair: (u64, u64)| *counts.entry(pair).or_insert(0) += 1;
    match family {
        Family::Avoiders => {
            for p in enumerate_avoiders(n) {
                let s = perm_stats(&p).expect("enumerated avoiders avoid the pattern");
                let value = |name: &str| match name {
                    "lrmax" => s.lrmax() as u64,
                    "lrmin" => s.lrmin() as u64,
                    "rlmax" => s.rlmax() as u64,
                    "rlmin" => s.rlmin() as u64,
                    _ => unreachable!("validated above"),
                };
                tally((value(stat_a), value(stat_b)));
            }
        }
        Family::Sequences => {
            for x in enumerate_ascent_sequences(n) {
                let raw = seq_stats(x.elems());
                let hat = seq_stats(&modified_sequence(&x));
                let value = |name: &str| match name {
                    "zero" => raw.zeros as u64,
                    "max" => raw.max_hits as u64,
                    "rmin" => raw.rmin() as u64,
                    "rmax" => raw.rmax() as u64,
                    "rmaxhat" => hat.rmax() as u64,
                    "asc" => x.asc() as u64,
                    _ => unreachable!("validated above"),
                };
                tally((value(stat_a), value(stat_b)));
            }
        }
        Family::Matrices => {
            for a in enumerate_fishburn_matrices(n) {
                let s = matrix_stats(&a);
                let value = |name: &str| match name {
                    "rsum1" => s.rsum1(),
                    "csumdim" => s.csum_dim(),
                    "ne" => s.ne() as u64,
                    "tr" => s.trace_nonzeros as u64,
                    "dim" => s.dim as u64,
                    "index" => s.index as u64,
                    _ => unreachable!("validated above"),
                };
                tally((value(stat_a), value(stat_b)));
            }
        }
    }
    Ok(JointTable {
        family,
        n,
        stat_a: stat_a.to_string(),
        stat_b: stat_b.to_string(),
        counts,
    })
}

/// A transported pair of statistic values that failed to agree, with
/// the full offending objects so the case can be replayed from the log.
#[derive(Debug, Clone, Serialize)]
pub struct TransportFailure {
    pub n: usize,
    pub permutation: String,
    pub sequence: String,
    pub modified: String,
    pub matrix: String,
    pub flipped: String,
    pub claim: &'static str,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransportReport {
    pub n_max: usize,
    pub objects_checked: u64,
    pub failure: Option<TransportFailure>,
}

impl TransportReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Walks every ascent sequence of every length up to `n_max`, follows
/// it to its avoider and its matrix, and checks each transported
/// statistic equality plus the polynomial identities. Stops at the
/// first counterexample.
pub fn check_transport(n_max: usize) -> TransportReport {
    let mut checked = 0u64;
    for n in 1..=n_max {
        for x in enumerate_ascent_sequences(n) {
            let p = permutation_from_sequence(&x);
            let a = matrix_from_sequence(&x);
            let m = flip(&a);
            let ps = perm_stats(&p).expect("decoded permutations avoid the pattern");
            let ss = seq_stats(x.elems());
            let hat = modified_sequence(&x);
            let hs = seq_stats(&hat);
            let ms = matrix_stats(&a);
            let fs = matrix_stats(&m);
            checked += 1;

            let rmaxl_values: std::collections::BTreeSet<usize> =
                ps.rmaxl.iter().copied().collect();
            let encoded = sequence_from_permutation(&p).expect("p avoids the pattern");

            let claims: [(&'static str, String, String); 17] = [
                ("encode(decode(x)) = x", encoded.to_string(), x.to_string()),
                (
                    "rlmin(p) = zero(x)",
                    ps.rlmin().to_string(),
                    ss.zeros.to_string(),
                ),
                (
                    "lrmin(p) = max(x)",
                    ps.lrmin().to_string(),
                    ss.max_hits.to_string(),
                ),
                (
                    "rmaxl(p) = rmin values(x)",
                    format!("{rmaxl_values:?}"),
                    format!("{:?}", ss.rmin_values),
                ),
                (
                    "delta(p) = chi(xhat)",
                    ps.delta.to_string(),
                    hs.chi.to_string(),
                ),
                (
                    "rlmax(p) = rmin(x)",
                    ps.rlmax().to_string(),
                    ss.rmin().to_string(),
                ),
                (
                    "lrmax(p) = rmax(xhat)",
                    ps.lrmax().to_string(),
                    hs.rmax().to_string(),
                ),
                (
                    "zero(x) = rsum1(A)",
                    ss.zeros.to_string(),
                    ms.rsum1().to_string(),
                ),
                (
                    "max(x) = tr(A)",
                    ss.max_hits.to_string(),
                    ms.trace_nonzeros.to_string(),
                ),
                (
                    "rmin values(x) = ne rows(A)",
                    format!("{:?}", ss.rmin_values),
                    format!("{:?}", ms.ne_rows),
                ),
                (
                    "chi(xhat) = lambda(A)",
                    hs.chi.to_string(),
                    ms.lambda.to_string(),
                ),
                (
                    "rmin(x) = ne(A)",
                    ss.rmin().to_string(),
                    ms.ne().to_string(),
                ),
                (
                    "rmax(xhat) = csumdim(A)",
                    hs.rmax().to_string(),
                    ms.csum_dim().to_string(),
                ),
                (
                    "lrmax(p) = rsum1(M)",
                    ps.lrmax().to_string(),
                    fs.rsum1().to_string(),
                ),
                (
                    "rlmin(p) = csumdim(M)",
                    ps.rlmin().to_string(),
                    fs.csum_dim().to_string(),
                ),
                (
                    "rlmax(p) = ne(M)",
                    ps.rlmax().to_string(),
                    fs.ne().to_string(),
                ),
                (
                    "lrmin(p) = tr(M)",
                    ps.lrmin().to_string(),
                    fs.trace_nonzeros.to_string(),
                ),
            ];
            for (claim, left, right) in claims {
                if left != right {
                    return TransportReport {
                        n_max,
                        objects_checked: checked,
                        failure: Some(TransportFailure {
                            n,
                            permutation: p.to_string(),
                            sequence: x.to_string(),
                            modified: hat
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" "),
                            matrix: a.to_string(),
                            flipped: m.to_string(),
                            claim,
                            left,
                            right,
                        }),
                    };
                }
            }
        }
    }
    TransportReport {
        n_max,
        objects_checked: checked,
        failure: None,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SymmetryRecord {
    pub family: Family,
    pub stat_a: &'static str,
    pub stat_b: &'static str,
    pub n: usize,
    pub total: u64,
    pub symmetric: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymmetryReport {
    pub n_max: usize,
    pub records: Vec<SymmetryRecord>,
    /// Whether, at each n, the three tables agree cell-for-cell once
    /// the statistic pairs are matched up along the maps.
    pub transported_tables_identical: bool,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.symmetric) && self.transported_tables_identical
    }
}

/// The three asserted symmetric joint distributions, checked for every
/// n up to `n_max`: (rsum1, ne) on matrices, (zero, rmin) on sequences,
/// (lrmax, rlmax) on avoiders. Also checks that the three count tables
/// coincide, as the statistic transport forces them to.
pub fn check_symmetries(n_max: usize) -> Result<SymmetryReport, Error> {
    let pairs: [(Family, &'static str, &'static str); 3] = [
        (Family::Matrices, "rsum1", "ne"),
        (Family::Sequences, "zero", "rmin"),
        (Family::Avoiders, "lrmax", "rlmax"),
    ];
    let mut records = Vec::new();
    let mut identical = true;
    for n in 1..=n_max {
        let mut tables = Vec::new();
        for &(family, stat_a, stat_b) in &pairs {
            let t = joint_table(family, stat_a, stat_b, n)?;
            records.push(SymmetryRecord {
                family,
                stat_a,
                stat_b,
                n,
                total: t.total(),
                symmetric: t.is_symmetric(),
            });
            tables.push(t);
        }
        identical &= tables[1..].iter().all(|t| t.counts == tables[0].counts);
    }
    Ok(SymmetryReport {
        n_max,
        records,
        transported_tables_identical: identical,
    })
}

/// What the composite map does to a permutation and its inverse.
#[derive(Debug, Clone, Serialize)]
pub struct RemarkReport {
    pub permutation: String,
    pub inverse: String,
    pub inverse_avoids: bool,
    pub sequence: String,
    pub inverse_sequence: Option<String>,
    pub asc: usize,
    pub inverse_asc: Option<usize>,
    pub dim: usize,
    pub inverse_dim: Option<usize>,
    /// Whether the image of the inverse equals the flip of the image.
    pub flip_commutes: Option<bool>,
}

/// Compares the composite image of `p.inverse()` with the flip of the
/// composite image of `p`. Errors when `p` itself contains the pattern;
/// an inverse that contains the pattern is reported, not an error.
pub fn check_remark(p: &Permutation) -> Result<RemarkReport, Error> {
    let x = sequence_from_permutation(p)?;
    let image = matrix_from_permutation(p).expect("p avoids the pattern");
    let inverse = p.inverse();
    if contains_pattern(&inverse) {
        return Ok(RemarkReport {
            permutation: p.to_string(),
            inverse: inverse.to_string(),
            inverse_avoids: false,
            sequence: x.to_string(),
            inverse_sequence: None,
            asc: x.asc(),
            inverse_asc: None,
            dim: image.dim(),
            inverse_dim: None,
            flip_commutes: None,
        });
    }
    let y = sequence_from_permutation(&inverse).expect("checked above");
    let inverse_image = matrix_from_permutation(&inverse).expect("checked above");
    Ok(RemarkReport {
        permutation: p.to_string(),
        inverse: inverse.to_string(),
        inverse_avoids: true,
        sequence: x.to_string(),
        inverse_sequence: Some(y.to_string()),
        asc: x.asc(),
        inverse_asc: Some(y.asc()),
        dim: image.dim(),
        inverse_dim: Some(inverse_image.dim()),
        flip_commutes: Some(inverse_image == flip(&image)),
    })
}

/// The remark check pinned to the eight-letter counterexample, with
/// every reported quantity compared against its known value.
pub fn check_remark_example() -> (RemarkReport, bool) {
    let p: Permutation = "8 5 2 3 1 6 4 7".parse().expect("well-formed literal");
    let report = check_remark(&p).expect("the example avoids the pattern");
    let ok = report.inverse == "5 3 4 7 2 6 8 1"
        && report.inverse_avoids
        && report.sequence == "0 1 1 0 2 1 0 3"
        && report.inverse_sequence.as_deref() == Some("0 1 2 2 3 1 3 1")
        && report.asc == 3
        && report.inverse_asc == Some(4)
        && report.dim == 4
        && report.inverse_dim == Some(5)
        && report.flip_commutes == Some(false);
    (report, ok)
}

/// Everything the harness runs, in one bundle.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub counts: CountReport,
    pub transport: TransportReport,
    pub symmetry: SymmetryReport,
    pub remark: RemarkReport,
    pub remark_ok: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counts.passed() && self.transport.passed() && self.symmetry.passed() && self.remark_ok
    }
}

/// Runs counts, transport, symmetry, and the remark example up to
/// `n_max`.
pub fn run_verification(n_max: usize) -> Result<VerifyReport, Error> {
    let counts = cross_check_counts(n_max)?;
    let transport = check_transport(n_max);
    let symmetry = check_symmetries(n_max)?;
    let (remark, remark_ok) = check_remark_example();
    Ok(VerifyReport {
        n_max,
        counts,
        transport,
        symmetry,
        remark,
        remark_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_table() {
        let t = joint_table(Family::Avoiders, "lrmax", "rlmax", 1).unwrap();
        assert_eq!(t.counts.len(), 1);
        assert_eq!(t.counts.get(&(1, 1)), Some(&1));
        assert!(t.is_symmetric());
    }

    #[test]
    fn matrix_table_at_three_is_symmetric_with_total_five() {
        let t = joint_table(Family::Matrices, "rsum1", "ne", 3).unwrap();
        assert_eq!(t.total(), 5);
        assert!(check_symmetry(&t));
    }

    #[test]
    fn sequence_tables_are_symmetric_with_fishburn_totals() {
        let t = joint_table(Family::Sequences, "zero", "rmin", 5).unwrap();
        assert_eq!(t.total(), 53);
        assert!(t.is_symmetric());
        let t = joint_table(Family::Sequences, "zero", "rmin", 6).unwrap();
        assert_eq!(t.total(), 217);
        assert!(t.is_symmetric());
    }

    #[test]
    fn unknown_statistic_is_reported_with_choices() {
        let err = joint_table(Family::Avoiders, "zero", "rlmax", 3).unwrap_err();
        assert_eq!(
            err,
            Error::UnknownStatistic {
                name: "zero".into(),
                available: "lrmax, lrmin, rlmax, rlmin".into()
            }
        );
    }

    #[test]
    fn transport_holds_at_small_sizes() {
        let report = check_transport(5);
        assert!(report.passed(), "failure: {:?}", report.failure);
        assert_eq!(report.objects_checked, 1 + 2 + 5 + 15 + 53);
    }

    #[test]
    fn symmetries_hold_at_small_sizes() {
        let report = check_symmetries(5).unwrap();
        assert!(report.passed());
        assert_eq!(report.records.len(), 15);
    }

    #[test]
    fn remark_example_reproduces_known_quantities() {
        let (report, ok) = check_remark_example();
        assert!(ok, "report: {report:?}");
    }

    #[test]
    fn remark_on_tiny_cases() {
        let r = check_remark(&"1".parse().unwrap()).unwrap();
        assert_eq!(r.flip_commutes, Some(true));
        let r = check_remark(&"1 2".parse().unwrap()).unwrap();
        assert_eq!(r.flip_commutes, Some(true));
        assert_eq!(r.sequence, "0 0");
    }

    #[test]
    fn full_run_passes_at_a_small_size() {
        let report = run_verification(4).unwrap();
        assert!(report.passed());
    }
}
