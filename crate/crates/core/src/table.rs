//! Binary operation tables and their composition monoid.
//!
//! A binary operation on `n` points is an `n×n` table `entries[t][x]` holding
//! the point index `f(t, x)`. The first index is the parameter of the slice
//! `f_t: x -> f(t, x)`, so row `t` of the table is exactly the slice at `t`.
//! Composition is slice-wise: `(f ∘ g)(t, x) = f(t, g(t, x))`, with identity
//! `e(t, x) = x`. A table is invertible exactly when every slice is a
//! bijection, and the inverse inverts each slice.

use crate::error::Error;
use crate::perm::{EndoMap, Permutation};
use crate::point::PointSet;

/// A binary operation on a finite point set, as an `n×n` table of indices.
///
/// Two tables are equal when they are entry-wise equal over identical point
/// sets. Ordering is lexicographic on the point labels and then on the
/// flattened entries, which gives the canonical order used everywhere a
/// deterministic listing is needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryOpTable {
    points: PointSet,
    entries: Vec<Vec<usize>>,
}

impl BinaryOpTable {
    /// Builds a table after checking it is `n×n` with every entry in `0..n`.
    pub fn new(points: PointSet, entries: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = points.len();
        if entries.len() != n {
            return Err(Error::ShapeMismatch {
                expected: n,
                found: entries.len(),
            });
        }
        for (t, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (x, &value) in row.iter().enumerate() {
                if value >= n {
                    return Err(Error::OutOfRangeEntry {
                        row: t,
                        col: x,
                        value,
                        size: n,
                    });
                }
            }
        }
        Ok(BinaryOpTable { points, entries })
    }

    /// The identity operation `e(t, x) = x`.
    pub fn identity(points: PointSet) -> Self {
        let n = points.len();
        BinaryOpTable {
            points,
            entries: vec![(0..n).collect(); n],
        }
    }

    /// The operation constant in its parameter: every slice equals `p`.
    ///
    /// This embeds a permutation as an invertible binary operation.
    pub fn embed_permutation(points: PointSet, p: &Permutation) -> Result<Self, Error> {
        if points.len() != p.n() {
            return Err(Error::ShapeMismatch {
                expected: points.len(),
                found: p.n(),
            });
        }
        let row = p.images().to_vec();
        let n = points.len();
        Ok(BinaryOpTable {
            points,
            entries: vec![row; n],
        })
    }

    /// Reassembles a table from its slices, in parameter order.
    pub fn from_slices(points: PointSet, slices: &[EndoMap]) -> Result<Self, Error> {
        let n = points.len();
        if slices.len() != n {
            return Err(Error::ShapeMismatch {
                expected: n,
                found: slices.len(),
            });
        }
        for s in slices {
            if s.n() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    found: s.n(),
                });
            }
        }
        Ok(BinaryOpTable {
            points,
            entries: slices.iter().map(|s| s.images().to_vec()).collect(),
        })
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// The value `f(t, x)`.
    pub fn apply(&self, t: usize, x: usize) -> usize {
        self.entries[t][x]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// The slice `f_t`, i.e. row `t` of the table as a self-map.
    pub fn slice(&self, t: usize) -> Result<EndoMap, Error> {
        if t >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: t,
                size: self.n(),
            });
        }
        Ok(EndoMap::new(self.entries[t].clone()).expect("rows are range-checked on construction"))
    }

    /// All slices in parameter order.
    pub fn slices(&self) -> Vec<EndoMap> {
        (0..self.n())
            .map(|t| self.slice(t).expect("t < n"))
            .collect()
    }

    /// Slice-wise composition `(f ∘ g)(t, x) = f(t, g(t, x))`.
    pub fn compose(&self, other: &BinaryOpTable) -> Result<BinaryOpTable, Error> {
        if self.points != other.points {
            return Err(Error::PointSetMismatch);
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(f_t, g_t)| g_t.iter().map(|&x| f_t[x]).collect())
            .collect();
        Ok(BinaryOpTable {
            points: self.points.clone(),
            entries,
        })
    }

    /// The parameter index of the first slice that is not a bijection.
    fn first_non_bijective_slice(&self) -> Option<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        for (t, row) in self.entries.iter().enumerate() {
            seen.iter_mut().for_each(|s| *s = false);
            for &y in row {
                if seen[y] {
                    return Some(t);
                }
                seen[y] = true;
            }
        }
        None
    }

    /// True exactly when every slice is a bijection.
    pub fn is_invertible(&self) -> bool {
        self.first_non_bijective_slice().is_none()
    }

    /// The two-sided compositional inverse, inverting each slice.
    pub fn invert(&self) -> Result<BinaryOpTable, Error> {
        if let Some(t) = self.first_non_bijective_slice() {
            return Err(Error::NotInvertible { t });
        }
        let n = self.n();
        let entries = self
            .entries
            .iter()
            .map(|row| {
                let mut inv = vec![0; n];
                for (x, &y) in row.iter().enumerate() {
                    inv[y] = x;
                }
                inv
            })
            .collect();
        Ok(BinaryOpTable {
            points: self.points.clone(),
            entries,
        })
    }
}
