//! Subgroup closure of invertible tables, and conversion to a group table.

use std::collections::HashMap;
use std::collections::HashSet;

use crate::error::Error;
use crate::group::{validate_group, FiniteGroup};
use crate::table::BinaryOpTable;

/// Default cap on the number of elements a closure may reach.
pub const DEFAULT_CLOSURE_GUARD: u64 = 1_000_000;

/// The smallest set containing the identity and the generators that is
/// closed under composition and inversion, in canonical (lexicographic
/// entry) order.
pub fn closure(generators: &[BinaryOpTable]) -> Result<Vec<BinaryOpTable>, Error> {
    closure_with_guard(generators, DEFAULT_CLOSURE_GUARD)
}

/// As [`closure`] with an explicit cap on the closure size.
pub fn closure_with_guard(
    generators: &[BinaryOpTable],
    guard: u64,
) -> Result<Vec<BinaryOpTable>, Error> {
    let first = generators.first().ok_or(Error::EmptyDomain)?;
    for g in generators {
        if g.points() != first.points() {
            return Err(Error::PointSetMismatch);
        }
    }
    // Right-multiplying by generators and their inverses reaches every word.
    let mut multipliers = Vec::with_capacity(generators.len() * 2);
    for g in generators {
        let inverse = g.invert()?;
        multipliers.push(g.clone());
        multipliers.push(inverse);
    }

    let identity = BinaryOpTable::identity(first.points().clone());
    let mut seen: HashSet<BinaryOpTable> = HashSet::new();
    let mut frontier: Vec<BinaryOpTable> = Vec::new();
    for start in std::iter::once(&identity).chain(generators) {
        if seen.insert(start.clone()) {
            frontier.push(start.clone());
        }
    }
    while let Some(current) = frontier.pop() {
        for m in &multipliers {
            let next = current.compose(m).expect("same points");
            if seen.insert(next.clone()) {
                if seen.len() as u64 > guard {
                    return Err(Error::ClosureGuardExceeded { guard });
                }
                frontier.push(next);
            }
        }
    }

    let mut elements: Vec<BinaryOpTable> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

/// Converts a composition-closed set of tables into a validated group whose
/// elements are labeled by canonical position. Fails with [`Error::NotClosed`]
/// if some product escapes the set.
pub fn table_group(elements: &[BinaryOpTable]) -> Result<FiniteGroup, Error> {
    if elements.is_empty() {
        return Err(Error::EmptyDomain);
    }
    let mut sorted: Vec<BinaryOpTable> = elements.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let index: HashMap<&BinaryOpTable, usize> =
        sorted.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut table = Vec::with_capacity(sorted.len());
    for (i, a) in sorted.iter().enumerate() {
        let mut row = Vec::with_capacity(sorted.len());
        for (j, b) in sorted.iter().enumerate() {
            let product = a.compose(b)?;
            let k = *index
                .get(&product)
                .ok_or(Error::NotClosed { left: i, right: j })?;
            row.push(k);
        }
        table.push(row);
    }
    let labels = (0..sorted.len()).map(|i| i.to_string()).collect();
    validate_group(labels, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::point::PointSet;

    fn ab() -> PointSet {
        PointSet::from_labels(["a", "b"]).unwrap()
    }

    fn phi1() -> BinaryOpTable {
        BinaryOpTable::new(ab(), vec![vec![1, 0], vec![1, 0]]).unwrap()
    }

    fn phi2() -> BinaryOpTable {
        BinaryOpTable::new(ab(), vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn two_point_generators_close_to_four_elements() {
        let elements = closure(&[phi1(), phi2()]).unwrap();
        assert_eq!(elements.len(), 4);
        let expected = vec![
            BinaryOpTable::identity(ab()),
            phi2(),
            BinaryOpTable::new(ab(), vec![vec![1, 0], vec![0, 1]]).unwrap(),
            phi1(),
        ];
        assert_eq!(elements, expected);
    }

    #[test]
    fn identity_closes_to_itself() {
        let e = BinaryOpTable::identity(ab());
        assert_eq!(closure(std::slice::from_ref(&e)).unwrap(), vec![e]);
    }

    #[test]
    fn cycle_embeds_to_order_three() {
        let points = PointSet::with_size(3).unwrap();
        let cycle = Permutation::new(vec![1, 2, 0]).unwrap();
        let gen = BinaryOpTable::embed_permutation(points, &cycle).unwrap();
        assert_eq!(closure(&[gen]).unwrap().len(), 3);
    }

    #[test]
    fn guard_limits_growth() {
        assert_eq!(
            closure_with_guard(&[phi1(), phi2()], 2).unwrap_err(),
            Error::ClosureGuardExceeded { guard: 2 }
        );
    }

    #[test]
    fn non_invertible_generator_rejected() {
        let broken = BinaryOpTable::new(ab(), vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            closure(&[broken]).unwrap_err(),
            Error::NotInvertible { t: 0 }
        );
    }

    #[test]
    fn closure_converts_to_a_valid_group() {
        let elements = closure(&[phi1(), phi2()]).unwrap();
        let group = table_group(&elements).unwrap();
        assert_eq!(group.order(), 4);
        assert!(group.is_abelian());
    }

    #[test]
    fn unclosed_set_is_rejected() {
        let err = table_group(&[phi1()]).unwrap_err();
        assert_eq!(err, Error::NotClosed { left: 0, right: 0 });
    }
}
