//! Self-maps and permutations of `{0..n-1}`.
//!
//! An [`EndoMap`] is an arbitrary self-map (what a table row gives you before
//! bijectivity is known); a [`Permutation`] is the bijective refinement.
//! Composition uses the convention `(p ∘ q)(x) = p(q(x))`: the right operand
//! is applied first.

use crate::error::Error;

/// A (not necessarily injective) map `{0..n-1} -> {0..n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoMap {
    images: Vec<usize>,
}

impl EndoMap {
    /// Builds a self-map from its image list; `n` is the list length.
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        for (x, &y) in images.iter().enumerate() {
            if y >= n {
                return Err(Error::OutOfRangeEntry {
                    row: 0,
                    col: x,
                    value: y,
                    size: n,
                });
            }
        }
        Ok(EndoMap { images })
    }

    pub fn identity(n: usize) -> Self {
        EndoMap {
            images: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// True when every point appears exactly once among the images.
    pub fn is_bijection(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        for &y in &self.images {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    /// `self ∘ other`, applying `other` first. Panics if sizes differ.
    pub fn compose(&self, other: &EndoMap) -> EndoMap {
        assert_eq!(self.n(), other.n(), "maps act on different sets");
        EndoMap {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// Refines into a permutation, or fails if some image repeats.
    pub fn into_permutation(self) -> Result<Permutation, Error> {
        if !self.is_bijection() {
            return Err(Error::NotBijective);
        }
        Ok(Permutation {
            images: self.images,
        })
    }
}

/// A bijection of `{0..n-1}`, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image list, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        EndoMap::new(images)?.into_permutation()
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// `self ∘ other`, applying `other` first. Panics if sizes differ.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "permutations act on different sets");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// Sign of the permutation: +1 for even, -1 for odd.
    pub fn parity(&self) -> i8 {
        let n = self.images.len();
        let mut inversions = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Advances to the next permutation in lexicographic image order,
    /// wrapping from the last back to the identity. Returns false on wrap.
    pub fn advance(&mut self) -> bool {
        next_permutation(&mut self.images)
    }

    /// All permutations of `{0..n-1}` in lexicographic image order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut current = Some(Permutation::identity(n));
        std::iter::from_fn(move || {
            let out = current.clone()?;
            let mut next = out.clone();
            current = if next.advance() { Some(next) } else { None };
            Some(out)
        })
    }

    /// One-line notation, e.g. `"120"` for `0->1, 1->2, 2->0`. Values are
    /// comma-separated once they stop being single digits.
    pub fn one_line(&self) -> String {
        if self.images.len() <= 10 {
            self.images.iter().map(|i| i.to_string()).collect()
        } else {
            let parts: Vec<String> = self.images.iter().map(|i| i.to_string()).collect();
            parts.join(",")
        }
    }
}

/// In-place lexicographic next permutation; false when the input was the
/// last one (it is then left sorted ascending, i.e. wrapped to the first).
pub fn next_permutation(items: &mut [usize]) -> bool {
    let n = items.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = n - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}
