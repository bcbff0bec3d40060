use std::sync::Arc;

use indexmap::IndexSet;

use crate::error::{Axis, Error, Result};

/// An ordered, duplicate-free list of labels interned to dense ids.
///
/// Cloning is cheap; the table is shared.
#[derive(Clone, Default)]
pub struct LabelSet(Arc<IndexSet<String>>);

impl LabelSet {
    pub fn new<I, S>(labels: I, axis: Axis) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut set = IndexSet::new();
        for label in labels {
            let label = label.into();
            if set.contains(&label) {
                return Err(Error::DuplicateLabel { axis, label });
            }
            set.insert(label);
        }
        Ok(Self(Arc::new(set)))
    }

    /// Labels `prefix1, prefix2, ...`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self(Arc::new((1..=n).map(|i| format!("{prefix}{i}")).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, id: usize) -> &str {
        &self.0[id]
    }

    pub fn get(&self, id: usize) -> Option<&str> {
        self.0.get_index(id).map(String::as_str)
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.0.get_index_of(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> + '_ {
        self.0.iter().map(String::as_str)
    }

    pub fn to_vec(&self) -> Vec<String> {
        self.0.iter().cloned().collect()
    }
}

impl PartialEq for LabelSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.iter().eq(other.0.iter())
    }
}

impl Eq for LabelSet {}

impl std::fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}
