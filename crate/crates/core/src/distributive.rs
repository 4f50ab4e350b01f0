//! Distributivity of invertible binary operations and the representation of
//! a finite group by such operations.
//!
//! A pair `(g, h)` is distributive when `g(h(x, x'), h(x, x'')) =
//! h(x, g(x', x''))` for all triples. For invertible tables this is
//! equivalent to the slice relation `g_t ∘ h_{t'} = h_{g(t,t')} ∘ g_t` for
//! all parameters, which is the cheaper check. Every finite group embeds as
//! a distributive subgroup by sending `g` to the table
//! `(h₁, h₂) -> h₁ g h₁⁻¹ h₂` over the group's own elements;
//! [`verify_representation`] certifies all of its promised properties
//! exhaustively.

use crate::closure::{closure, table_group};
use crate::error::Error;
use crate::group::FiniteGroup;
use crate::iso::{are_isomorphic_with_guard, identify_group};
use crate::point::PointSet;
use crate::table::BinaryOpTable;

/// Default cap on the order of a group handed to [`verify_representation`];
/// the distributivity scan is `|G|⁵` work.
pub const DEFAULT_REPRESENTATION_GUARD: u64 = 12;

fn require_same_points(g: &BinaryOpTable, h: &BinaryOpTable) -> Result<(), Error> {
    if g.points() != h.points() {
        return Err(Error::PointSetMismatch);
    }
    Ok(())
}

fn require_invertible(op: &BinaryOpTable) -> Result<(), Error> {
    op.invert().map(|_| ())
}

/// First triple `(x, x', x'')` violating the distributivity identity, in
/// lexicographic order.
fn first_nondistributive_triple(
    g: &BinaryOpTable,
    h: &BinaryOpTable,
) -> Option<(usize, usize, usize)> {
    let n = g.n();
    for x in 0..n {
        for x1 in 0..n {
            for x2 in 0..n {
                let left = g.apply(h.apply(x, x1), h.apply(x, x2));
                let right = h.apply(x, g.apply(x1, x2));
                if left != right {
                    return Some((x, x1, x2));
                }
            }
        }
    }
    None
}

/// Whether `g(h(x, x'), h(x, x'')) = h(x, g(x', x''))` over all `n³` triples.
pub fn is_distributive_pair(g: &BinaryOpTable, h: &BinaryOpTable) -> Result<bool, Error> {
    require_same_points(g, h)?;
    Ok(first_nondistributive_triple(g, h).is_none())
}

/// First parameter pair `(t, t')` violating the slice relation
/// `g_t ∘ h_{t'} = h_{g(t,t')} ∘ g_t`, in lexicographic order.
///
/// Both operations must be invertible: the relation is a statement about
/// subgroups of the invertible group, and is rejected outside that domain.
pub fn slice_relation_witness(
    g: &BinaryOpTable,
    h: &BinaryOpTable,
) -> Result<Option<(usize, usize)>, Error> {
    require_same_points(g, h)?;
    require_invertible(g)?;
    require_invertible(h)?;
    let n = g.n();
    for t in 0..n {
        let g_t = g.slice(t).expect("t < n");
        for t_prime in 0..n {
            let h_tp = h.slice(t_prime).expect("t' < n");
            let left = g_t.compose(&h_tp);
            let right = h
                .slice(g.apply(t, t_prime))
                .expect("entry < n")
                .compose(&g_t);
            if left != right {
                return Ok(Some((t, t_prime)));
            }
        }
    }
    Ok(None)
}

/// Whether the slice relation holds for all parameter pairs.
pub fn slice_relation_holds(g: &BinaryOpTable, h: &BinaryOpTable) -> Result<bool, Error> {
    Ok(slice_relation_witness(g, h)?.is_none())
}

/// Why a set of tables fails to be a distributive subgroup. Carries the
/// first witness in canonical order: subgroup defects first, then the first
/// non-distributive ordered pair with its first failing triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistributiveFailure {
    MissingIdentity,
    NotClosedUnderCompose {
        left: BinaryOpTable,
        right: BinaryOpTable,
    },
    NotClosedUnderInvert {
        element: BinaryOpTable,
    },
    NonDistributivePair {
        g: BinaryOpTable,
        h: BinaryOpTable,
        triple: (usize, usize, usize),
    },
}

/// Checks that the given tables form a subgroup of the invertible group that
/// is distributive over every ordered pair. Returns `None` when they do and
/// the first failure otherwise. Duplicate inputs are collapsed.
pub fn is_distributive_subgroup(
    elements: &[BinaryOpTable],
) -> Result<Option<DistributiveFailure>, Error> {
    let first = elements.first().ok_or(Error::EmptyDomain)?;
    for op in elements {
        if op.points() != first.points() {
            return Err(Error::PointSetMismatch);
        }
        require_invertible(op)?;
    }
    let mut set: Vec<BinaryOpTable> = elements.to_vec();
    set.sort_unstable();
    set.dedup();

    let identity = BinaryOpTable::identity(first.points().clone());
    if !set.contains(&identity) {
        return Ok(Some(DistributiveFailure::MissingIdentity));
    }
    for a in &set {
        for b in &set {
            let product = a.compose(b).expect("same points");
            if set.binary_search(&product).is_err() {
                return Ok(Some(DistributiveFailure::NotClosedUnderCompose {
                    left: a.clone(),
                    right: b.clone(),
                }));
            }
        }
    }
    for a in &set {
        let inverse = a.invert().expect("checked invertible");
        if set.binary_search(&inverse).is_err() {
            return Ok(Some(DistributiveFailure::NotClosedUnderInvert {
                element: a.clone(),
            }));
        }
    }
    for g in &set {
        for h in &set {
            if let Some(triple) = first_nondistributive_triple(g, h) {
                return Ok(Some(DistributiveFailure::NonDistributivePair {
                    g: g.clone(),
                    h: h.clone(),
                    triple,
                }));
            }
        }
    }
    Ok(None)
}

/// The table representing `g`: over the group's own elements as points,
/// `entries[h₁][h₂] = h₁ · g · h₁⁻¹ · h₂`. Position `i` holds the table for
/// element `i`.
pub fn binary_representation(group: &FiniteGroup) -> Vec<BinaryOpTable> {
    let points = PointSet::from_labels(group.labels().iter().cloned())
        .expect("group labels are nonempty and distinct");
    let m = group.order();
    (0..m)
        .map(|g| {
            let entries = (0..m)
                .map(|h1| {
                    let conjugate = group.mul(group.mul(h1, g), group.inverse(h1));
                    (0..m).map(|h2| group.mul(conjugate, h2)).collect()
                })
                .collect();
            BinaryOpTable::new(points.clone(), entries).expect("entries are group elements")
        })
        .collect()
}

/// Outcome of exhaustively verifying the representation of one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationReport {
    pub group_name: String,
    /// Distinct elements map to distinct tables.
    pub injective: bool,
    /// `i(g·k) = i(g) ∘ i(k)` over all pairs.
    pub homomorphism: bool,
    /// The image contains the identity and is closed under composition and
    /// inversion.
    pub image_is_subgroup: bool,
    /// Every ordered image pair satisfies the distributivity identity.
    pub image_distributive: bool,
    /// Size of the closure generated by the image.
    pub image_order: usize,
    /// The image, as a group under composition, is isomorphic to the source.
    pub isomorphic_to_source: bool,
}

impl RepresentationReport {
    /// True when every verified property holds.
    pub fn all_hold(&self) -> bool {
        self.injective
            && self.homomorphism
            && self.image_is_subgroup
            && self.image_distributive
            && self.isomorphic_to_source
    }
}

/// Exhaustively verifies the representation of `group` by invertible tables.
pub fn verify_representation(group: &FiniteGroup) -> Result<RepresentationReport, Error> {
    verify_representation_with_guard(group, DEFAULT_REPRESENTATION_GUARD)
}

/// As [`verify_representation`] with an explicit cap on the group order.
pub fn verify_representation_with_guard(
    group: &FiniteGroup,
    guard: u64,
) -> Result<RepresentationReport, Error> {
    let m = group.order();
    if m as u128 > guard as u128 {
        return Err(Error::OrderGuardExceeded {
            requested: m as u128,
            guard,
        });
    }
    let tables = binary_representation(group);

    let mut sorted = tables.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let injective = sorted.len() == m;

    let homomorphism = (0..m).all(|g| {
        (0..m).all(|k| {
            let composed = tables[g].compose(&tables[k]).expect("same points");
            composed == tables[group.mul(g, k)]
        })
    });

    let identity = BinaryOpTable::identity(tables[0].points().clone());
    let image_is_subgroup = sorted.binary_search(&identity).is_ok()
        && tables.iter().all(|a| {
            tables
                .iter()
                .all(|b| sorted.binary_search(&a.compose(b).expect("same points")).is_ok())
        })
        && tables
            .iter()
            .all(|a| sorted.binary_search(&a.invert().expect("invertible")).is_ok());

    let image_distributive = tables.iter().all(|g| {
        tables
            .iter()
            .all(|h| first_nondistributive_triple(g, h).is_none())
    });

    let closed = closure(&tables)?;
    let image_order = closed.len();

    let image_group = table_group(&closed)?;
    let isomorphic_to_source =
        are_isomorphic_with_guard(&image_group, group, guard.max(crate::iso::DEFAULT_ISO_GUARD))?
            .is_some();

    Ok(RepresentationReport {
        group_name: identify_group(group),
        injective,
        homomorphism,
        image_is_subgroup,
        image_distributive,
        image_order,
        isomorphic_to_source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::closure;
    use crate::group::{cyclic_group, klein_group, symmetric_group};
    use crate::perm::Permutation;

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
    fn constant_slice_pair_is_distributive() {
        assert!(is_distributive_pair(&phi1(), &phi1()).unwrap());
        let e = BinaryOpTable::identity(ab());
        assert!(is_distributive_pair(&e, &e).unwrap());
    }

    #[test]
    fn mixed_pair_fails_at_the_origin_triple() {
        assert!(!is_distributive_pair(&phi2(), &phi1()).unwrap());
        assert_eq!(
            first_nondistributive_triple(&phi2(), &phi1()),
            Some((0, 0, 0))
        );
        // Left side evaluates to 0, right side to 1 at that triple.
        let (g, h) = (phi2(), phi1());
        assert_eq!(g.apply(h.apply(0, 0), h.apply(0, 0)), 0);
        assert_eq!(h.apply(0, g.apply(0, 0)), 1);
    }

    #[test]
    fn slice_relation_examples() {
        assert!(slice_relation_holds(&phi1(), &phi1()).unwrap());
        assert_eq!(
            slice_relation_witness(&phi2(), &phi2()).unwrap(),
            Some((1, 0))
        );
        let e = BinaryOpTable::identity(ab());
        for h in [e.clone(), phi1(), phi2(), phi1().compose(&phi2()).unwrap()] {
            assert!(slice_relation_holds(&e, &h).unwrap());
        }
    }

    #[test]
    fn slice_relation_rejects_non_invertible_input() {
        let broken = BinaryOpTable::new(ab(), vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            slice_relation_holds(&broken, &phi1()).unwrap_err(),
            Error::NotInvertible { t: 0 }
        );
    }

    #[test]
    fn singleton_identity_is_a_distributive_subgroup() {
        let e = BinaryOpTable::identity(ab());
        assert_eq!(is_distributive_subgroup(&[e]).unwrap(), None);
    }

    #[test]
    fn swap_parameterized_subgroup_fails_distributivity() {
        let elements = closure(&[phi2()]).unwrap();
        assert_eq!(elements.len(), 2);
        let failure = is_distributive_subgroup(&elements).unwrap().unwrap();
        assert_eq!(
            failure,
            DistributiveFailure::NonDistributivePair {
                g: phi2(),
                h: phi2(),
                triple: (1, 0, 0),
            }
        );
    }

    #[test]
    fn missing_identity_is_reported_first() {
        let failure = is_distributive_subgroup(&[phi1()]).unwrap().unwrap();
        assert_eq!(failure, DistributiveFailure::MissingIdentity);
    }

    #[test]
    fn representation_of_two_cycle() {
        let c2 = cyclic_group(2).unwrap();
        let tables = binary_representation(&c2);
        assert_eq!(tables[1].rows(), &[vec![1, 0], vec![1, 0]]);
        assert_eq!(
            tables[0],
            BinaryOpTable::identity(tables[0].points().clone())
        );
        assert_eq!(is_distributive_subgroup(&tables).unwrap(), None);
    }

    #[test]
    fn representation_identity_element_is_identity_op() {
        let s3 = symmetric_group(3).unwrap();
        let tables = binary_representation(&s3);
        assert_eq!(
            tables[s3.identity()],
            BinaryOpTable::identity(tables[0].points().clone())
        );
        // All six tables are pairwise distinct.
        let mut sorted = tables.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
    }

    #[test]
    fn abelian_representation_collapses_to_translations() {
        let c4 = cyclic_group(4).unwrap();
        let points = PointSet::from_labels(c4.labels().iter().cloned()).unwrap();
        let tables = binary_representation(&c4);
        for g in 0..4 {
            let translation =
                Permutation::new((0..4).map(|h| c4.mul(g, h)).collect()).unwrap();
            let embedded =
                BinaryOpTable::embed_permutation(points.clone(), &translation).unwrap();
            assert_eq!(tables[g], embedded);
        }
    }

    #[test]
    fn verification_reports_all_true_for_small_groups() {
        for group in [cyclic_group(2).unwrap(), klein_group(), symmetric_group(3).unwrap()] {
            let report = verify_representation(&group).unwrap();
            assert!(report.all_hold(), "report failed: {report:?}");
            assert_eq!(report.image_order, group.order());
        }
    }

    #[test]
    fn verification_guard() {
        let big = crate::group::dihedral_group(7).unwrap();
        assert!(matches!(
            verify_representation(&big).unwrap_err(),
            Error::OrderGuardExceeded { .. }
        ));
        assert!(verify_representation_with_guard(&big, 14)
            .unwrap()
            .all_hold());
    }
}
