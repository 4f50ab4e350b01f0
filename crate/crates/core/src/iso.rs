//! Isomorphism testing and identification of small groups.
//!
//! The isomorphism search backtracks over images of a greedily chosen
//! generating sequence, pruning candidates by element order and checking the
//! partial map on each generated subgroup before descending. Identification
//! compares against a fixed catalog of the named groups of order at most 12
//! and falls back to an invariant summary.

use crate::error::Error;
use crate::group::{
    alternating_group, cyclic_group, dicyclic_group, dihedral_group, direct_product,
    symmetric_group, FiniteGroup,
};

/// Default cap on the order of groups fed to the isomorphism search.
pub const DEFAULT_ISO_GUARD: u64 = 60;

/// Largest order for which [`identify_group`] attempts a catalog name.
pub const IDENTIFY_ORDER_BOUND: usize = 12;

/// BFS enumeration of the subgroup generated by `gens`, with each element's
/// derivation `(parent, generator index)` so maps extend along products.
struct SubgroupSpan {
    elements: Vec<usize>,
    derivation: Vec<Option<(usize, usize)>>,
}

fn span(group: &FiniteGroup, gens: &[usize]) -> SubgroupSpan {
    let m = group.order();
    let mut position = vec![usize::MAX; m];
    let mut elements = vec![group.identity()];
    let mut derivation: Vec<Option<(usize, usize)>> = vec![None];
    position[group.identity()] = 0;
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head];
        for (gi, &g) in gens.iter().enumerate() {
            let y = group.mul(x, g);
            if position[y] == usize::MAX {
                position[y] = elements.len();
                elements.push(y);
                derivation.push(Some((head, gi)));
            }
        }
        head += 1;
    }
    SubgroupSpan {
        elements,
        derivation,
    }
}

/// Greedy generating sequence: each step adds the element that grows the
/// generated subgroup the most, so that few generators need backtracking.
fn generating_sequence(group: &FiniteGroup) -> Vec<usize> {
    let m = group.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = span(group, &gens).elements.len();
    while covered < m {
        let in_span = {
            let s = span(group, &gens);
            let mut flags = vec![false; m];
            for &x in &s.elements {
                flags[x] = true;
            }
            flags
        };
        let mut best: Option<(usize, usize)> = None;
        for candidate in 0..m {
            if in_span[candidate] {
                continue;
            }
            gens.push(candidate);
            let grown = span(group, &gens).elements.len();
            gens.pop();
            if best.is_none_or(|(size, _)| grown > size) {
                best = Some((grown, candidate));
            }
        }
        let (size, chosen) = best.expect("uncovered element exists");
        gens.push(chosen);
        covered = size;
    }
    gens
}

/// Extends generator images to the spanned subgroup and checks the result is
/// an injective homomorphism there. Returns the partial map on success.
fn extend_and_check(
    a: &FiniteGroup,
    b: &FiniteGroup,
    s: &SubgroupSpan,
    images: &[usize],
) -> Option<Vec<usize>> {
    let m = a.order();
    let mut map = vec![usize::MAX; m];
    map[a.identity()] = b.identity();
    for (pos, &x) in s.elements.iter().enumerate() {
        if let Some((parent_pos, gi)) = s.derivation[pos] {
            let parent = s.elements[parent_pos];
            map[x] = b.mul(map[parent], images[gi]);
        }
    }
    let mut hit = vec![false; b.order()];
    for &x in &s.elements {
        if hit[map[x]] {
            return None;
        }
        hit[map[x]] = true;
    }
    for &x in &s.elements {
        for &y in &s.elements {
            if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    spans: &[SubgroupSpan],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let depth = images.len();
    if depth == gens.len() {
        let full = extend_and_check(a, b, spans.last().expect("nonempty"), images)?;
        return Some(full);
    }
    let wanted_order = a.element_order(gens[depth]);
    for candidate in 0..b.order() {
        if b.element_order(candidate) != wanted_order {
            continue;
        }
        images.push(candidate);
        if extend_and_check(a, b, &spans[depth], images).is_some() {
            if let Some(found) = search(a, b, gens, spans, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

/// Returns a product-preserving bijection from `a` onto `b` as a vector of
/// `b`-indices, or `None` if the groups are not isomorphic.
pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Vec<usize>>, Error> {
    are_isomorphic_with_guard(a, b, DEFAULT_ISO_GUARD)
}

/// As [`are_isomorphic`] with an explicit cap on both orders.
pub fn are_isomorphic_with_guard(
    a: &FiniteGroup,
    b: &FiniteGroup,
    guard: u64,
) -> Result<Option<Vec<usize>>, Error> {
    let largest = a.order().max(b.order());
    if largest as u128 > guard as u128 {
        return Err(Error::OrderGuardExceeded {
            requested: largest as u128,
            guard,
        });
    }
    if a.order() != b.order() {
        return Ok(None);
    }
    if a.element_order_multiset() != b.element_order_multiset() {
        return Ok(None);
    }
    if a.order() == 1 {
        return Ok(Some(vec![b.identity()]));
    }
    let gens = generating_sequence(a);
    let spans: Vec<SubgroupSpan> = (1..=gens.len()).map(|k| span(a, &gens[..k])).collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(a, b, &gens, &spans, &mut images))
}

/// The named groups of a given order, in the precedence used for naming.
fn catalog(order: usize) -> Vec<(&'static str, FiniteGroup)> {
    let mut entries = Vec::new();
    if order == 1 {
        entries.push(("trivial", cyclic_group(1).expect("order 1")));
        return entries;
    }
    entries.push((
        match order {
            2 => "C2",
            3 => "C3",
            4 => "C4",
            5 => "C5",
            6 => "C6",
            7 => "C7",
            8 => "C8",
            9 => "C9",
            10 => "C10",
            11 => "C11",
            12 => "C12",
            _ => unreachable!("catalog is only consulted for order <= 12"),
        },
        cyclic_group(order).expect("small order"),
    ));
    match order {
        4 => {
            let c2 = cyclic_group(2).expect("order 2");
            entries.push(("V4", direct_product(&c2, &c2).expect("product")));
        }
        6 => entries.push(("S3", symmetric_group(3).expect("order 6"))),
        8 => {
            entries.push(("D4", dihedral_group(4).expect("order 8")));
            entries.push(("Q8", dicyclic_group(2).expect("order 8")));
        }
        10 => entries.push(("D5", dihedral_group(5).expect("order 10"))),
        12 => {
            entries.push(("A4", alternating_group(4).expect("order 12")));
            entries.push(("D6", dihedral_group(6).expect("order 12")));
            entries.push(("Dic3", dicyclic_group(3).expect("order 12")));
        }
        _ => {}
    }
    entries
}

/// Names the isomorphism class of `group` when its order is at most 12 and
/// it matches the catalog; otherwise returns a deterministic invariant
/// summary `order=.. abelian=.. element_orders=[..]`.
pub fn identify_group(group: &FiniteGroup) -> String {
    if group.order() <= IDENTIFY_ORDER_BOUND {
        for (name, candidate) in catalog(group.order()) {
            let found = are_isomorphic_with_guard(group, &candidate, DEFAULT_ISO_GUARD)
                .expect("catalog orders are far below the guard");
            if found.is_some() {
                return name.to_string();
            }
        }
    }
    let orders: Vec<String> = group
        .element_order_multiset()
        .iter()
        .map(|o| o.to_string())
        .collect();
    format!(
        "order={} abelian={} element_orders=[{}]",
        group.order(),
        group.is_abelian(),
        orders.join(",")
    )
}
