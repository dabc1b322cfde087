//! Independent ground truth: Fishburn numbers from the generating
//! function, brute-force family generation by filtering, and the count
//! cross-check harness.
//!
//! Nothing here calls the insertion encoding or the matrix recursion,
//! so agreement between these counts and the enumerators is a real
//! two-route check.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Error;
use crate::objects::Permutation;
use crate::patterns::contains_pattern;

/// Formal power series truncated at a fixed degree: exactly
/// `truncation + 1` coefficients are carried through every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(truncation: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::from(0); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = TruncatedSeries::zero(truncation);
        s.coeffs[0] = BigInt::from(1);
        s
    }

    /// The polynomial 1 - x, truncated.
    pub fn one_minus_x(truncation: usize) -> Self {
        let mut s = TruncatedSeries::one(truncation);
        if truncation >= 1 {
            s.coeffs[1] = BigInt::from(-1);
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        let trunc = self.truncation();
        let mut out = TruncatedSeries::zero(trunc);
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == BigInt::from(0) {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(trunc + 1 - i).enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

/// F_0..=F_N as the coefficients of sum over n of the partial products
/// prod_{k=1..n} (1 - (1-x)^k), truncated at degree N. Every factor has
/// zero constant term, so products with n > N contribute nothing below
/// degree N + 1 and the outer sum stops at N.
pub fn fishburn_numbers(n_max: usize) -> Vec<BigInt> {
    let one = TruncatedSeries::one(n_max);
    let one_minus_x = TruncatedSeries::one_minus_x(n_max);
    let mut pow = one.clone();
    let mut prod = one.clone();
    let mut sum = one.clone();
    for _ in 1..=n_max {
        pow = pow.mul(&one_minus_x);
        prod = prod.mul(&one.sub(&pow));
        sum = sum.add(&prod);
    }
    sum.coeffs
}

/// Single Fishburn number as u64; panics past the representable range,
/// which desk-scale callers never reach.
pub fn fishburn_number_u64(n: usize) -> u64 {
    let f = fishburn_numbers(n);
    u64::try_from(f[n].clone()).expect("Fishburn number exceeds u64")
}

/// Largest n accepted by the factorial-filter oracle and the count
/// cross-check.
pub const FACTORIAL_CAP: usize = 9;

/// All pattern-avoiding permutations of \[n\] obtained by filtering every
/// one of the n! permutations, in lexicographic order. The slow oracle
/// for `enumerate_avoiders`.
pub fn filter_avoiders(n: usize) -> Result<Vec<Permutation>, Error> {
    if n > FACTORIAL_CAP {
        return Err(Error::BudgetExceeded {
            n,
            cap: FACTORIAL_CAP,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fill_perm(n, &mut prefix, &mut used, &mut out);
    Ok(out)
}

fn fill_perm(n: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if prefix.len() == n {
        let p = Permutation::from_elems_unchecked(prefix.clone());
        if !contains_pattern(&p) {
            out.push(p);
        }
        return;
    }
    for v in 1..=n {
        if !used[v - 1] {
            used[v - 1] = true;
            prefix.push(v);
            fill_perm(n, prefix, used, out);
            prefix.pop();
            used[v - 1] = false;
        }
    }
}

/// One family count at one size, compared to the series value.
#[derive(Debug, Clone, Serialize)]
pub struct CountRecord {
    pub n: usize,
    pub family: &'static str,
    pub count: u64,
    pub expected: u64,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub n_max: usize,
    pub records: Vec<CountRecord>,
}

impl CountReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.ok)
    }

    /// Records that disagree with the series.
    pub fn failures(&self) -> impl Iterator<Item = &CountRecord> {
        self.records.iter().filter(|r| !r.ok)
    }
}

/// Counts all three families for every n up to `n_max` and compares each
/// against the series coefficient F_n.
pub fn cross_check_counts(n_max: usize) -> Result<CountReport, Error> {
    if n_max > FACTORIAL_CAP {
        return Err(Error::BudgetExceeded {
            n: n_max,
            cap: FACTORIAL_CAP,
        });
    }
    let expected = fishburn_numbers(n_max);
    let mut records = Vec::new();
    for (n, value) in expected.iter().enumerate().skip(1) {
        let want = u64::try_from(value.clone()).expect("desk-scale count fits u64");
        let families: [(&'static str, u64); 3] = [
            (
                "sequences",
                crate::objects::enumerate_ascent_sequences(n).count() as u64,
            ),
            (
                "matrices",
                crate::objects::enumerate_fishburn_matrices(n).count() as u64,
            ),
            (
                "avoiders",
                crate::patterns::enumerate_avoiders(n).count() as u64,
            ),
        ];
        for (family, count) in families {
            records.push(CountRecord {
                n,
                family,
                count,
                expected: want,
                ok: count == want,
            });
        }
    }
    Ok(CountReport { n_max, records })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_operations_respect_truncation() {
        let one_minus_x = TruncatedSeries::one_minus_x(4);
        let square = one_minus_x.mul(&one_minus_x);
        let ints: Vec<i64> = square
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c.clone()).unwrap())
            .collect();
        assert_eq!(ints, [1, -2, 1, 0, 0]);
        assert_eq!(square.truncation(), 4);
        assert_eq!(square.add(&square).coeffs().len(), 5);
        assert_eq!(square.sub(&square), TruncatedSeries::zero(4));
        // Degrees past the truncation never appear: x^4 * x^4 dies.
        let mut high = TruncatedSeries::zero(4);
        high = high.add(&TruncatedSeries::one(4));
        let shifted = high
            .mul(&one_minus_x)
            .mul(&one_minus_x)
            .mul(&one_minus_x)
            .mul(&one_minus_x);
        assert_eq!(shifted.mul(&shifted).coeffs().len(), 5);
    }

    #[test]
    fn small_series_values_match_the_listings() {
        let f = fishburn_numbers(8);
        let got: Vec<u64> = f
            .iter()
            .map(|v| u64::try_from(v.clone()).unwrap())
            .collect();
        assert_eq!(got, [1, 1, 2, 5, 15, 53, 217, 1014, 5335]);
    }

    #[test]
    fn series_is_prefix_stable() {
        let long = fishburn_numbers(20);
        for n in [3, 9, 14] {
            assert_eq!(fishburn_numbers(n), long[..=n]);
        }
    }

    #[test]
    fn series_agrees_with_sequence_enumeration_beyond_the_harness_range() {
        for n in 9..=10 {
            let count = crate::objects::enumerate_ascent_sequences(n).count();
            assert_eq!(BigInt::from(count), fishburn_numbers(n)[n]);
        }
    }

    #[test]
    fn filter_oracle_small_cases() {
        assert_eq!(filter_avoiders(1).unwrap().len(), 1);
        assert_eq!(filter_avoiders(3).unwrap().len(), 5);
        assert_eq!(filter_avoiders(7).unwrap().len(), 1014);
        assert_eq!(
            filter_avoiders(10).unwrap_err(),
            Error::BudgetExceeded {
                n: 10,
                cap: FACTORIAL_CAP
            }
        );
    }

    #[test]
    fn filter_and_growth_enumeration_agree() {
        use std::collections::BTreeSet;
        for n in 1..=7 {
            let filtered: BTreeSet<Permutation> = filter_avoiders(n).unwrap().into_iter().collect();
            let grown: BTreeSet<Permutation> = crate::patterns::enumerate_avoiders(n).collect();
            assert_eq!(filtered, grown, "n = {n}");
        }
    }

    #[test]
    fn cross_check_passes_at_small_sizes() {
        let report = cross_check_counts(5).unwrap();
        assert!(report.passed());
        assert_eq!(report.records.len(), 15);
        let per_n: Vec<u64> = report
            .records
            .iter()
            .filter(|r| r.n <= 3)
            .map(|r| r.count)
            .collect();
        assert_eq!(per_n, [1, 1, 1, 2, 2, 2, 5, 5, 5]);
        assert_eq!(
            cross_check_counts(10).unwrap_err(),
            Error::BudgetExceeded {
                n: 10,
                cap: FACTORIAL_CAP
            }
        );
    }
}
