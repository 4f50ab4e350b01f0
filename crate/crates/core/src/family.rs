//! Families of permutations and their identification with invertible tables.
//!
//! A [`FunctionFamily`] assigns a permutation to every point; families
//! multiply pointwise, with the permutation product being composition. The
//! map sending a family to the table `entries[t][x] = members[t](x)` is a
//! group isomorphism onto the invertible tables — the family is just the
//! row-decomposition of the table — which is what makes the order formula
//! `(n!)^n` count both sides.

use num_bigint::BigUint;

use crate::error::Error;
use crate::group::{validate_group, FiniteGroup};
use crate::perm::Permutation;
use crate::point::PointSet;
use crate::table::BinaryOpTable;

/// Default cap on the order `(n!)^n` of a materialized family group.
pub const DEFAULT_FAMILY_GUARD: u64 = 216;

/// An `n`-tuple of permutations of `n` points; `members[t]` is the
/// permutation assigned to point `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctionFamily {
    members: Vec<Permutation>,
}

impl FunctionFamily {
    /// Builds a family after checking all members act on `len` points.
    pub fn new(members: Vec<Permutation>) -> Result<Self, Error> {
        let n = members.len();
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        for p in &members {
            if p.n() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    found: p.n(),
                });
            }
        }
        Ok(FunctionFamily { members })
    }

    /// The family that is the identity permutation everywhere.
    pub fn identity(n: usize) -> Self {
        FunctionFamily {
            members: vec![Permutation::identity(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    /// Pointwise product: `(fg)(t) = f(t) ∘ g(t)`, right member first.
    pub fn product(&self, other: &FunctionFamily) -> Result<FunctionFamily, Error> {
        if self.n() != other.n() {
            return Err(Error::ShapeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(FunctionFamily {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(p, q)| p.compose(q))
                .collect(),
        })
    }

    /// Pointwise inverse.
    pub fn inverse(&self) -> FunctionFamily {
        FunctionFamily {
            members: self.members.iter().map(Permutation::inverse).collect(),
        }
    }

    /// The table with `entries[t][x] = members[t](x)`; always invertible.
    pub fn to_table(&self, points: PointSet) -> Result<BinaryOpTable, Error> {
        if points.len() != self.n() {
            return Err(Error::ShapeMismatch {
                expected: self.n(),
                found: points.len(),
            });
        }
        let entries = self.members.iter().map(|p| p.images().to_vec()).collect();
        BinaryOpTable::new(points, entries)
    }

    /// Decomposes an invertible table into its slice permutations.
    pub fn from_table(table: &BinaryOpTable) -> Result<FunctionFamily, Error> {
        let members = table
            .slices()
            .into_iter()
            .enumerate()
            .map(|(t, s)| s.into_permutation().map_err(|_| Error::NotInvertible { t }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FunctionFamily { members })
    }

    fn label(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(Permutation::one_line).collect();
        parts.join("|")
    }
}

/// All `(n!)^n` families in lexicographic order of concatenated images.
fn all_families(n: usize) -> Vec<FunctionFamily> {
    let mut families = Vec::new();
    let mut members = vec![Permutation::identity(n); n];
    loop {
        families.push(FunctionFamily {
            members: members.clone(),
        });
        let mut t = n;
        let exhausted = loop {
            if t == 0 {
                break true;
            }
            t -= 1;
            if members[t].advance() {
                break false;
            }
        };
        if exhausted {
            return families;
        }
    }
}

/// The group of all permutation families of `n` points under pointwise
/// composition; its order is `(n!)^n`.
pub fn function_family_group(n: usize) -> Result<FiniteGroup, Error> {
    function_family_group_with_guard(n, DEFAULT_FAMILY_GUARD)
}

/// As [`function_family_group`] with an explicit cap on the order.
pub fn function_family_group_with_guard(n: usize, guard: u64) -> Result<FiniteGroup, Error> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let order = invertible_op_count(n);
    if order > BigUint::from(guard) {
        let requested = u128::try_from(&order).unwrap_or(u128::MAX);
        return Err(Error::OrderGuardExceeded { requested, guard });
    }
    let families = all_families(n);
    let labels = families.iter().map(FunctionFamily::label).collect();
    let index_of = |f: &FunctionFamily| {
        families
            .binary_search(f)
            .expect("products stay inside the full family group")
    };
    let table = families
        .iter()
        .map(|f| {
            families
                .iter()
                .map(|g| index_of(&f.product(g).expect("equal sizes")))
                .collect()
        })
        .collect();
    validate_group(labels, table)
}

/// The number of invertible binary operations on `n` points: `(n!)^n`.
pub fn invertible_op_count(n: usize) -> BigUint {
    let mut factorial = BigUint::from(1u32);
    for k in 2..=n {
        factorial *= BigUint::from(k);
    }
    factorial.pow(n as u32)
}
