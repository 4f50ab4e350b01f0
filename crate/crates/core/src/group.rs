//! Finite groups as validated multiplication tables.
//!
//! A [`FiniteGroup`] is constructed only through [`validate_group`], which
//! checks the Latin-square property, a two-sided identity, two-sided
//! inverses, and associativity over all triples, reporting the first witness
//! on failure. Constructors for the standard small groups (cyclic, dihedral,
//! dicyclic, symmetric, alternating, products) all go through the validator.

use crate::error::{Error, TableAxis};
use crate::perm::Permutation;

/// Default cap on the order of a materialized symmetric group (5!).
pub const DEFAULT_SYMMETRIC_GUARD: u64 = 120;

/// A finite group with element labels, multiplication table, identity and
/// inverse map. `table[i][j]` is the index of the product `i · j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// The product `i · j` by table lookup.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let m = self.order();
        (0..m).all(|i| (i..m).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Order of the element `i`: the least `k >= 1` with `i^k = e`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut power = i;
        let mut k = 1;
        while power != self.identity {
            power = self.mul(power, i);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders, an isomorphism invariant.
    pub fn element_order_multiset(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.order()).map(|i| self.element_order(i)).collect();
        orders.sort_unstable();
        orders
    }
}

/// Validates a multiplication table as a group, computing the identity and
/// inverse map. Checks run in the order: shape, Latin square, identity,
/// inverses, associativity; the returned error names the first witness.
pub fn validate_group(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup, Error> {
    let m = labels.len();
    if m == 0 {
        return Err(Error::EmptyDomain);
    }
    for (i, label) in labels.iter().enumerate() {
        if labels[..i].contains(label) {
            return Err(Error::DuplicateLabel {
                label: label.clone(),
            });
        }
    }
    if table.len() != m {
        return Err(Error::ShapeMismatch {
            expected: m,
            found: table.len(),
        });
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != m {
            return Err(Error::ShapeMismatch {
                expected: m,
                found: row.len(),
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= m {
                return Err(Error::OutOfRangeEntry {
                    row: i,
                    col: j,
                    value: v,
                    size: m,
                });
            }
        }
    }

    // Latin square: no repeats in any row or column.
    let mut seen = vec![usize::MAX; m];
    for (i, row) in table.iter().enumerate() {
        for &v in row {
            if seen[v] == i {
                return Err(Error::NotLatinSquare {
                    axis: TableAxis::Row,
                    index: i,
                    value: v,
                });
            }
            seen[v] = i;
        }
    }
    let mut seen = vec![usize::MAX; m];
    for j in 0..m {
        for row in &table {
            let v = row[j];
            if seen[v] == j {
                return Err(Error::NotLatinSquare {
                    axis: TableAxis::Column,
                    index: j,
                    value: v,
                });
            }
            seen[v] = j;
        }
    }

    let identity = (0..m)
        .find(|&e| (0..m).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or(Error::NoIdentity)?;

    let mut inverses = vec![0; m];
    for (i, inv) in inverses.iter_mut().enumerate() {
        *inv = (0..m)
            .find(|&x| table[i][x] == identity && table[x][i] == identity)
            .ok_or(Error::MissingInverse { element: i })?;
    }

    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
    }

    Ok(FiniteGroup {
        labels,
        table,
        identity,
        inverses,
    })
}

/// The cyclic group of order `n`, elements labeled `"0".."n-1"`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup, Error> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    validate_group(labels, table)
}

/// The dihedral group of order `2k`: rotations `r0..r{k-1}` and reflections
/// `r0s..r{k-1}s`.
pub fn dihedral_group(k: usize) -> Result<FiniteGroup, Error> {
    if k == 0 {
        return Err(Error::EmptyDomain);
    }
    let m = 2 * k;
    let labels: Vec<String> = (0..m)
        .map(|i| {
            if i < k {
                format!("r{i}")
            } else {
                format!("r{}s", i - k)
            }
        })
        .collect();
    // Element i + k*x is r^i s^x; s r^b = r^(-b) s.
    let idx = |rot: usize, flip: usize| (rot % k) + k * (flip % 2);
    let table = (0..m)
        .map(|lhs| {
            let (a, x) = (lhs % k, lhs / k);
            (0..m)
                .map(|rhs| {
                    let (b, y) = (rhs % k, rhs / k);
                    if x == 0 {
                        idx(a + b, y)
                    } else {
                        idx(a + k - b % k, x + y)
                    }
                })
                .collect()
        })
        .collect();
    validate_group(labels, table)
}

/// The dicyclic group of order `4k`: `a` of order `2k`, `b` with `b² = a^k`
/// and `b a = a⁻¹ b`. `dicyclic_group(2)` is the quaternion group.
pub fn dicyclic_group(k: usize) -> Result<FiniteGroup, Error> {
    if k == 0 {
        return Err(Error::EmptyDomain);
    }
    let half = 2 * k;
    let m = 4 * k;
    let labels: Vec<String> = (0..m)
        .map(|i| {
            if i < half {
                format!("a{i}")
            } else {
                format!("a{}b", i - half)
            }
        })
        .collect();
    let idx = |rot: usize, flip: usize| (rot % half) + half * (flip % 2);
    let table = (0..m)
        .map(|lhs| {
            let (i, x) = (lhs % half, lhs / half);
            (0..m)
                .map(|rhs| {
                    let (j, y) = (rhs % half, rhs / half);
                    if x == 0 {
                        idx(i + j, y)
                    } else if y == 0 {
                        idx(i + half - j % half, 1)
                    } else {
                        // (a^i b)(a^j b) = a^(i - j) b² = a^(i - j + k)
                        idx(i + half - j % half + k, 0)
                    }
                })
                .collect()
        })
        .collect();
    validate_group(labels, table)
}

/// The symmetric group on `n` points under map composition, elements in
/// lexicographic one-line order. Guarded by the resulting order `n!`.
pub fn symmetric_group(n: usize) -> Result<FiniteGroup, Error> {
    symmetric_group_with_guard(n, DEFAULT_SYMMETRIC_GUARD)
}

/// As [`symmetric_group`] with an explicit cap on the order.
pub fn symmetric_group_with_guard(n: usize, guard: u64) -> Result<FiniteGroup, Error> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let order = (2..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
    if order.unwrap_or(u128::MAX) > guard as u128 {
        return Err(Error::OrderGuardExceeded {
            requested: order.unwrap_or(u128::MAX),
            guard,
        });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    permutation_group(&perms)
}

/// The alternating group on `n` points: the even permutations.
pub fn alternating_group(n: usize) -> Result<FiniteGroup, Error> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let order = (2..=n as u128)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .map(|f| if n >= 2 { f / 2 } else { f });
    if order.unwrap_or(u128::MAX) > DEFAULT_SYMMETRIC_GUARD as u128 {
        return Err(Error::OrderGuardExceeded {
            requested: order.unwrap_or(u128::MAX),
            guard: DEFAULT_SYMMETRIC_GUARD,
        });
    }
    let perms: Vec<Permutation> = Permutation::all(n).filter(|p| p.parity() == 1).collect();
    permutation_group(&perms)
}

/// Builds a group from a composition-closed list of permutations, labeled by
/// one-line notation.
fn permutation_group(perms: &[Permutation]) -> Result<FiniteGroup, Error> {
    let labels: Vec<String> = perms.iter().map(Permutation::one_line).collect();
    let index_of = |p: &Permutation| -> Result<usize, Error> {
        perms
            .iter()
            .position(|q| q == p)
            .ok_or(Error::NotClosed { left: 0, right: 0 })
    };
    let mut table = Vec::with_capacity(perms.len());
    for (i, p) in perms.iter().enumerate() {
        let mut row = Vec::with_capacity(perms.len());
        for (j, q) in perms.iter().enumerate() {
            let k = index_of(&p.compose(q)).map_err(|_| Error::NotClosed { left: i, right: j })?;
            row.push(k);
        }
        table.push(row);
    }
    validate_group(labels, table)
}

/// The direct product `A × B`, elements labeled `"(a,b)"` and ordered with
/// the `A` coordinate major.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, Error> {
    let (ma, mb) = (a.order(), b.order());
    let labels = (0..ma * mb)
        .map(|i| format!("({},{})", a.label(i / mb), b.label(i % mb)))
        .collect();
    let table = (0..ma * mb)
        .map(|lhs| {
            (0..ma * mb)
                .map(|rhs| {
                    let prod_a = a.mul(lhs / mb, rhs / mb);
                    let prod_b = b.mul(lhs % mb, rhs % mb);
                    prod_a * mb + prod_b
                })
                .collect()
        })
        .collect();
    validate_group(labels, table)
}

/// The Klein four-group as the product of two 2-cycles.
pub fn klein_group() -> FiniteGroup {
    let c2 = cyclic_group(2).expect("order 2");
    direct_product(&c2, &c2).expect("product of valid groups")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lbl(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn two_element_group_validates() {
        let g = validate_group(lbl(&["e", "g"]), vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverse(1), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn repeated_value_is_not_latin() {
        let err = validate_group(lbl(&["e", "g"]), vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::NotLatinSquare {
                axis: TableAxis::Row,
                index: 1,
                value: 1
            }
        );
    }

    #[test]
    fn klein_group_is_all_involutions() {
        let v4 = klein_group();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        for i in 0..4 {
            assert_eq!(v4.inverse(i), i);
        }
        assert_eq!(v4.element_order_multiset(), vec![1, 2, 2, 2]);
    }

    #[test]
    fn missing_identity_reported() {
        // Latin square in which no row/column pair acts as an identity.
        let err = validate_group(
            lbl(&["x", "y", "z"]),
            vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]],
        )
        .unwrap_err();
        assert_eq!(err, Error::NoIdentity);
    }

    #[test]
    fn nonassociative_loop_names_first_triple() {
        // A Latin square with identity 0 and all elements self-inverse that
        // fails associativity first at (1·1)·2 != 1·(1·2).
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = validate_group(lbl(&["0", "1", "2", "3", "4"]), table).unwrap_err();
        assert_eq!(err, Error::NotAssociative { a: 1, b: 1, c: 2 });
    }

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(symmetric_group(1).unwrap().order(), 1);
        assert_eq!(symmetric_group(2).unwrap().order(), 2);
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(matches!(
            symmetric_group(6).unwrap_err(),
            Error::OrderGuardExceeded { .. }
        ));
    }

    #[test]
    fn alternating_group_a4() {
        let a4 = alternating_group(4).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(!a4.is_abelian());
        assert_eq!(
            a4.element_order_multiset(),
            vec![1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]
        );
    }

    #[test]
    fn dihedral_and_dicyclic_shapes() {
        let d4 = dihedral_group(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        assert_eq!(d4.element_order_multiset(), vec![1, 2, 2, 2, 2, 2, 4, 4]);

        let q8 = dicyclic_group(2).unwrap();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        // Q8 has a unique involution.
        assert_eq!(q8.element_order_multiset(), vec![1, 2, 4, 4, 4, 4, 4, 4]);

        let dic3 = dicyclic_group(3).unwrap();
        assert_eq!(dic3.order(), 12);
        assert_eq!(
            dic3.element_order_multiset(),
            vec![1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6]
        );
    }

    #[test]
    fn element_orders_in_cyclic_groups() {
        let c6 = cyclic_group(6).unwrap();
        assert_eq!(c6.element_order_multiset(), vec![1, 2, 3, 3, 6, 6]);
    }
}
