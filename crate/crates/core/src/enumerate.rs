//! Exhaustive streams over binary operation tables at small `n`.
//!
//! Two families of streams: every table (the full composition monoid) and
//! every table whose rows are permutations (the invertible group). Both are
//! produced lazily in lexicographic order on the flattened entries, so runs
//! are reproducible and nothing is materialized. The census cross-checks the
//! invertibility criterion against the `(n!)^n` counting formula.

use num_bigint::BigUint;

use crate::error::Error;
use crate::family::invertible_op_count;
use crate::oracle::{brute_force_inverse, MAX_FULL_SEARCH};
use crate::perm::next_permutation;
use crate::point::PointSet;
use crate::table::BinaryOpTable;

/// Default cap on `n^(n²)`, the full-stream length: covers `n <= 3`.
pub const DEFAULT_ENUMERATION_GUARD: u64 = 19_683;

/// Default cap on `(n!)^n`, the invertible-stream length: covers `n <= 4`.
pub const DEFAULT_INVERTIBLE_GUARD: u64 = 331_776;

/// `n^(n²)` without overflow, or `None` when it does not fit in u128.
fn total_table_count(n: usize) -> Option<u128> {
    let base = n as u128;
    let mut acc: u128 = 1;
    for _ in 0..n * n {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// `(n!)^n` without overflow, or `None` when it does not fit in u128.
fn invertible_table_count(n: usize) -> Option<u128> {
    let mut factorial: u128 = 1;
    for k in 2..=n as u128 {
        factorial = factorial.checked_mul(k)?;
    }
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(factorial)?;
    }
    Some(acc)
}

fn check_guard(requested: Option<u128>, guard: u64) -> Result<(), Error> {
    let requested = requested.unwrap_or(u128::MAX);
    if requested > guard as u128 {
        return Err(Error::OrderGuardExceeded { requested, guard });
    }
    Ok(())
}

/// Lexicographic stream of every `n×n` table over `points`.
#[derive(Debug)]
pub struct AllOpsIter {
    points: PointSet,
    digits: Option<Vec<usize>>,
}

impl Iterator for AllOpsIter {
    type Item = BinaryOpTable;

    fn next(&mut self) -> Option<BinaryOpTable> {
        let digits = self.digits.as_mut()?;
        let n = self.points.len();
        let entries: Vec<Vec<usize>> = digits.chunks(n).map(|row| row.to_vec()).collect();
        let table = BinaryOpTable::new(self.points.clone(), entries).expect("digits are in range");
        // Advance the base-n odometer; most significant digit first.
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < n {
                break;
            }
            digits[pos] = 0;
        }
        Some(table)
    }
}

/// Lexicographic stream of every table whose rows are permutations.
#[derive(Debug)]
pub struct InvertibleOpsIter {
    points: PointSet,
    rows: Option<Vec<Vec<usize>>>,
    remaining: Option<u64>,
}

impl Iterator for InvertibleOpsIter {
    type Item = BinaryOpTable;

    fn next(&mut self) -> Option<BinaryOpTable> {
        if let Some(remaining) = self.remaining.as_mut() {
            if *remaining == 0 {
                return None;
            }
            *remaining -= 1;
        }
        let rows = self.rows.as_mut()?;
        let table = BinaryOpTable::new(self.points.clone(), rows.clone())
            .expect("permutation rows are in range");
        // Advance the last row to its next permutation, carrying leftward.
        let mut t = rows.len();
        loop {
            if t == 0 {
                self.rows = None;
                break;
            }
            t -= 1;
            if next_permutation(&mut rows[t]) {
                break;
            }
        }
        Some(table)
    }
}

pub(crate) fn all_tables_unchecked(points: PointSet) -> AllOpsIter {
    let cells = points.len() * points.len();
    AllOpsIter {
        points,
        digits: Some(vec![0; cells]),
    }
}

pub(crate) fn row_permutation_tables_unchecked(
    points: PointSet,
    limit: Option<u64>,
) -> InvertibleOpsIter {
    let n = points.len();
    InvertibleOpsIter {
        points,
        rows: Some(vec![(0..n).collect(); n]),
        remaining: limit,
    }
}

/// Streams all `n^(n²)` tables over the default point set, in lexicographic
/// order, provided the stream length fits the default guard.
pub fn enumerate_all_ops(n: usize) -> Result<AllOpsIter, Error> {
    enumerate_all_ops_with_guard(n, DEFAULT_ENUMERATION_GUARD)
}

/// As [`enumerate_all_ops`] with an explicit cap on the stream length.
pub fn enumerate_all_ops_with_guard(n: usize, guard: u64) -> Result<AllOpsIter, Error> {
    let points = PointSet::with_size(n)?;
    check_guard(total_table_count(n), guard)?;
    Ok(all_tables_unchecked(points))
}

/// Streams the `(n!)^n` row-permutation tables in lexicographic order.
///
/// Without a limit the stream length must fit the default guard; with a
/// limit any `n` is accepted and the stream truncates after `limit` tables.
pub fn enumerate_invertible(n: usize, limit: Option<u64>) -> Result<InvertibleOpsIter, Error> {
    enumerate_invertible_with_guard(n, limit, DEFAULT_INVERTIBLE_GUARD)
}

/// As [`enumerate_invertible`] with an explicit cap for the unbounded case.
pub fn enumerate_invertible_with_guard(
    n: usize,
    limit: Option<u64>,
    guard: u64,
) -> Result<InvertibleOpsIter, Error> {
    let points = PointSet::with_size(n)?;
    if limit.is_none() {
        check_guard(invertible_table_count(n), guard)?;
    }
    Ok(row_permutation_tables_unchecked(points, limit))
}

/// Counts produced by scanning every table at a given `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub n: usize,
    /// Number of tables scanned; equals `n^(n²)` on a completed scan.
    pub total_ops: BigUint,
    /// Tables whose every row is a permutation.
    pub row_permutation_ops: BigUint,
    /// Tables with a two-sided inverse found by exhaustive search; present
    /// only when the search was requested (and permitted).
    pub two_sided_invertible_ops: Option<BigUint>,
    /// The counting formula `(n!)^n`.
    pub formula_value: BigUint,
}

/// Scans every table at `n`, counting row-permutation tables and, when
/// `exhaustive_inverse` is set (permitted for `n <= 2`), tables with a
/// two-sided inverse found by brute-force search.
pub fn criterion_census(n: usize, exhaustive_inverse: bool) -> Result<CensusResult, Error> {
    criterion_census_with_guard(n, exhaustive_inverse, DEFAULT_ENUMERATION_GUARD)
}

/// As [`criterion_census`] with an explicit cap on the scan length.
pub fn criterion_census_with_guard(
    n: usize,
    exhaustive_inverse: bool,
    guard: u64,
) -> Result<CensusResult, Error> {
    if exhaustive_inverse && n > MAX_FULL_SEARCH {
        return Err(Error::SearchSpaceTooLarge {
            n,
            max: MAX_FULL_SEARCH,
        });
    }
    let stream = enumerate_all_ops_with_guard(n, guard)?;
    let mut total: u64 = 0;
    let mut row_perm: u64 = 0;
    let mut two_sided: u64 = 0;
    for table in stream {
        total += 1;
        if table.is_invertible() {
            row_perm += 1;
        }
        if exhaustive_inverse && brute_force_inverse(&table)?.is_some() {
            two_sided += 1;
        }
    }
    Ok(CensusResult {
        n,
        total_ops: BigUint::from(total),
        row_permutation_ops: BigUint::from(row_perm),
        two_sided_invertible_ops: exhaustive_inverse.then(|| BigUint::from(two_sided)),
        formula_value: invertible_op_count(n),
    })
}
