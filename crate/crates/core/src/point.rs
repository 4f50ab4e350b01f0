//! The finite point set an operation acts on.
//!
//! All algebra runs on integer indices `0..n`; labels exist only so that
//! parsed and serialized tables keep their original names.

use crate::error::Error;

/// An ordered set of `n` distinctly labeled points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    labels: Vec<String>,
}

impl PointSet {
    /// Point set of size `n` with the default labels `"0".."n-1"`.
    pub fn with_size(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        Ok(PointSet {
            labels: (0..n).map(|i| i.to_string()).collect(),
        })
    }

    /// Point set with explicit labels. Labels must be nonempty as a list and
    /// pairwise distinct.
    pub fn from_labels<I, S>(labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyDomain);
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(PointSet { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: construction rejects the empty set.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    /// Index of `label`, if it names a point.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}
