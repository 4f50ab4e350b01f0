//! Brute-force inverse search, independent of the slice-wise inverse.
//!
//! This searches for a two-sided compositional inverse by testing candidates
//! directly against `f ∘ g = g ∘ f = e`, never consulting
//! [`BinaryOpTable::invert`]. It exists to cross-check the invertibility
//! criterion: agreement between this search and the slice-wise route is one
//! of the library's acceptance properties.

use crate::enumerate::{all_tables_unchecked, row_permutation_tables_unchecked};
use crate::error::Error;
use crate::table::BinaryOpTable;

/// Largest `n` for which all `n^(n²)` candidate tables are searched.
pub const MAX_FULL_SEARCH: usize = 2;

/// Largest `n` searched at all; above [`MAX_FULL_SEARCH`] only the
/// `(n!)^n` row-permutation candidates are tried, which is enough because a
/// two-sided inverse forces every slice to be a bijection.
pub const MAX_ROW_PERMUTATION_SEARCH: usize = 3;

/// Searches for a two-sided inverse of `f`, returning it if one exists in
/// the searched candidate set.
///
/// For `n <= 2` the search is over every table; for `n = 3` it is restricted
/// to tables whose rows are permutations. Larger `n` is rejected with
/// [`Error::SearchSpaceTooLarge`].
pub fn brute_force_inverse(f: &BinaryOpTable) -> Result<Option<BinaryOpTable>, Error> {
    let n = f.n();
    if n > MAX_ROW_PERMUTATION_SEARCH {
        return Err(Error::SearchSpaceTooLarge {
            n,
            max: MAX_ROW_PERMUTATION_SEARCH,
        });
    }
    let identity = BinaryOpTable::identity(f.points().clone());
    let is_two_sided_inverse = |g: &BinaryOpTable| {
        f.compose(g).expect("same points") == identity
            && g.compose(f).expect("same points") == identity
    };
    if n <= MAX_FULL_SEARCH {
        for g in all_tables_unchecked(f.points().clone()) {
            if is_two_sided_inverse(&g) {
                return Ok(Some(g));
            }
        }
    } else {
        for g in row_permutation_tables_unchecked(f.points().clone(), None) {
            if is_two_sided_inverse(&g) {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::PointSet;

    fn table(n: usize, rows: Vec<Vec<usize>>) -> BinaryOpTable {
        BinaryOpTable::new(PointSet::with_size(n).unwrap(), rows).unwrap()
    }

    #[test]
    fn swap_parameterized_table_is_self_inverse() {
        let phi2 = table(2, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(brute_force_inverse(&phi2).unwrap(), Some(phi2));
    }

    #[test]
    fn non_bijective_slice_has_no_inverse() {
        let f = table(2, vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(brute_force_inverse(&f).unwrap(), None);
    }

    #[test]
    fn identity_is_its_own_inverse() {
        let e = BinaryOpTable::identity(PointSet::with_size(2).unwrap());
        assert_eq!(brute_force_inverse(&e).unwrap(), Some(e));
        let e1 = BinaryOpTable::identity(PointSet::with_size(1).unwrap());
        assert_eq!(brute_force_inverse(&e1).unwrap(), Some(e1));
    }

    #[test]
    fn search_agrees_with_slicewise_inverse_at_n3() {
        let f = table(3, vec![vec![1, 2, 0], vec![0, 1, 2], vec![2, 1, 0]]);
        let found = brute_force_inverse(&f).unwrap().unwrap();
        assert_eq!(found, f.invert().unwrap());
    }

    #[test]
    fn large_spaces_are_rejected() {
        let e = BinaryOpTable::identity(PointSet::with_size(4).unwrap());
        assert_eq!(
            brute_force_inverse(&e).unwrap_err(),
            Error::SearchSpaceTooLarge { n: 4, max: 3 }
        );
    }
}
