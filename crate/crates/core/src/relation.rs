//! Finite binary relations and the morphisms between them.
//!
//! A [`Relation`] is a pair of label tables plus a Boolean incidence matrix
//! whose rows are indexed by the x labels and whose columns are indexed by
//! the y labels. A [`RelMorphism`] is a pair of label maps `(f, g)` that sends
//! every related pair to a related pair; it is validated when built.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Axis, Error, Result, Witness};
use crate::labels::LabelSet;

#[derive(Clone, Debug)]
pub struct Relation {
    x: LabelSet,
    y: LabelSet,
    rows: Vec<Vec<bool>>,
}

impl Relation {
    /// Builds a relation, checking that the matrix has one row per x label
    /// and one column per y label.
    pub fn new(x: LabelSet, y: LabelSet, rows: Vec<Vec<bool>>) -> Result<Self> {
        if rows.len() != x.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} x labels but {} matrix rows",
                x.len(),
                rows.len()
            )));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != y.len()) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                y.len()
            )));
        }
        Ok(Self { x, y, rows })
    }

    /// Convenience constructor from label slices and a 0/1 matrix.
    pub fn from_matrix<S: AsRef<str>>(x: &[S], y: &[S], matrix: &[Vec<u8>]) -> Result<Self> {
        let x = LabelSet::new(x.iter().map(|s| s.as_ref().to_owned()), Axis::X)?;
        let y = LabelSet::new(y.iter().map(|s| s.as_ref().to_owned()), Axis::Y)?;
        let mut rows = Vec::with_capacity(matrix.len());
        for (i, row) in matrix.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => out.push(false),
                    1 => out.push(true),
                    other => {
                        return Err(Error::InvalidEntry {
                            row: i + 1,
                            col: j + 1,
                            entry: other.to_string(),
                        })
                    }
                }
            }
            rows.push(out);
        }
        Self::new(x, y, rows)
    }

    /// Builds the relation containing exactly the given labelled pairs.
    pub fn from_pairs(x: LabelSet, y: LabelSet, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut rows = vec![vec![false; y.len()]; x.len()];
        for &(a, b) in pairs {
            let i = x.id(a).ok_or_else(|| Error::UnknownLabel {
                axis: Axis::X,
                label: a.to_owned(),
            })?;
            let j = y.id(b).ok_or_else(|| Error::UnknownLabel {
                axis: Axis::Y,
                label: b.to_owned(),
            })?;
            rows[i][j] = true;
        }
        Self::new(x, y, rows)
    }

    pub fn empty() -> Self {
        Self {
            x: LabelSet::default(),
            y: LabelSet::default(),
            rows: Vec::new(),
        }
    }

    pub fn x_labels(&self) -> &LabelSet {
        &self.x
    }

    pub fn y_labels(&self) -> &LabelSet {
        &self.y
    }

    pub fn nx(&self) -> usize {
        self.x.len()
    }

    pub fn ny(&self) -> usize {
        self.y.len()
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.rows[x][y]
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    /// Column ids related to row `x`.
    pub fn row_support(&self, x: usize) -> BTreeSet<usize> {
        (0..self.ny()).filter(|&y| self.rows[x][y]).collect()
    }

    /// Row ids related to column `y`.
    pub fn column_support(&self, y: usize) -> Vec<usize> {
        (0..self.nx()).filter(|&x| self.rows[x][y]).collect()
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &v)| v)
                .map(move |(j, _)| (i, j))
        })
    }

    pub fn transpose(&self) -> Relation {
        let rows = (0..self.ny())
            .map(|j| (0..self.nx()).map(|i| self.rows[i][j]).collect())
            .collect();
        Relation {
            x: self.y.clone(),
            y: self.x.clone(),
            rows,
        }
    }

    /// Membership in the subcategory where every row and every column is
    /// related to something. Vacuously true for the empty relation.
    pub fn is_positive(&self) -> bool {
        self.rows.iter().all(|r| r.iter().any(|&v| v))
            && (0..self.ny()).all(|j| self.rows.iter().any(|r| r[j]))
    }

    /// Row labels whose rows are identically zero.
    pub fn zero_rows(&self) -> Vec<&str> {
        (0..self.nx())
            .filter(|&i| !self.rows[i].iter().any(|&v| v))
            .map(|i| self.x.label(i))
            .collect()
    }

    /// Removes row `x`, keeping everything else in order.
    pub fn without_row(&self, x: usize) -> Relation {
        let labels: Vec<String> = self
            .x
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != x)
            .map(|(_, l)| l.to_owned())
            .collect();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != x)
            .map(|(_, r)| r.clone())
            .collect();
        Relation {
            x: LabelSet::new(labels, Axis::X).expect("subset of distinct labels"),
            y: self.y.clone(),
            rows,
        }
    }

    /// Multiset of column supports, each written as a sorted list of row labels.
    pub fn column_multiset(&self) -> BTreeMap<Vec<String>, usize> {
        let mut out = BTreeMap::new();
        for j in 0..self.ny() {
            let mut support: Vec<String> = self
                .column_support(j)
                .into_iter()
                .map(|i| self.x.label(i).to_owned())
                .collect();
            support.sort();
            *out.entry(support).or_insert(0) += 1;
        }
        out
    }

    /// Equality up to a bijection on Y: same row labels and the same
    /// multiset of columns. Row order is irrelevant because rows are matched
    /// by label.
    pub fn equivalent_up_to_columns(&self, other: &Relation) -> bool {
        let mine: BTreeSet<&str> = self.x.iter().collect();
        let theirs: BTreeSet<&str> = other.x.iter().collect();
        mine == theirs && self.column_multiset() == other.column_multiset()
    }
}

/// Label-respecting equality: the same labelled pairs over the same label
/// sets, regardless of the order rows and columns are stored in.
impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        if self.x == other.x && self.y == other.y {
            return self.rows == other.rows;
        }
        let same_labels =
            |a: &LabelSet, b: &LabelSet| a.len() == b.len() && a.iter().all(|l| b.id(l).is_some());
        if !same_labels(&self.x, &other.x) || !same_labels(&self.y, &other.y) {
            return false;
        }
        self.x.iter().enumerate().all(|(i, xl)| {
            let oi = other.x.id(xl).unwrap();
            self.y
                .iter()
                .enumerate()
                .all(|(j, yl)| self.rows[i][j] == other.rows[oi][other.y.id(yl).unwrap()])
        })
    }
}

impl Eq for Relation {}

/// A validated morphism `(f, g)` between relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelMorphism {
    source: Relation,
    target: Relation,
    f: Vec<usize>,
    g: Vec<usize>,
}

impl RelMorphism {
    /// Validates the id-level maps `f: source.x -> target.x` and
    /// `g: source.y -> target.y`. Every violating pair is reported.
    pub fn new(source: Relation, target: Relation, f: Vec<usize>, g: Vec<usize>) -> Result<Self> {
        if f.len() != source.nx() {
            return Err(Error::NotTotal {
                map: "f",
                label: format!("{} of {} x labels", f.len(), source.nx()),
            });
        }
        if g.len() != source.ny() {
            return Err(Error::NotTotal {
                map: "g",
                label: format!("{} of {} y labels", g.len(), source.ny()),
            });
        }
        if let Some(&bad) = f.iter().find(|&&v| v >= target.nx()) {
            return Err(Error::UnknownVertex(bad));
        }
        if let Some(&bad) = g.iter().find(|&&v| v >= target.ny()) {
            return Err(Error::UnknownVertex(bad));
        }
        let witnesses: Vec<Witness> = source
            .pairs()
            .filter(|&(x, y)| !target.get(f[x], g[y]))
            .map(|(x, y)| Witness {
                x: source.x.label(x).to_owned(),
                y: source.y.label(y).to_owned(),
                fx: target.x.label(f[x]).to_owned(),
                gy: target.y.label(g[y]).to_owned(),
            })
            .collect();
        if !witnesses.is_empty() {
            return Err(Error::MorphismViolation(witnesses));
        }
        Ok(Self {
            source,
            target,
            f,
            g,
        })
    }

    /// Validates label-level maps. Both maps must be total on the source labels
    /// and take values among the target labels.
    pub fn from_label_maps(
        source: Relation,
        target: Relation,
        f: &BTreeMap<String, String>,
        g: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let resolve = |map: &'static str,
                       dom: &LabelSet,
                       cod: &LabelSet,
                       axis: Axis,
                       table: &BTreeMap<String, String>|
         -> Result<Vec<usize>> {
            if let Some(extra) = table.keys().find(|k| dom.id(k).is_none()) {
                return Err(Error::UnknownLabel {
                    axis,
                    label: extra.clone(),
                });
            }
            dom.iter()
                .map(|l| {
                    let image = table.get(l).ok_or_else(|| Error::NotTotal {
                        map,
                        label: l.to_owned(),
                    })?;
                    cod.id(image).ok_or_else(|| Error::UnknownLabel {
                        axis,
                        label: image.clone(),
                    })
                })
                .collect()
        };
        let fs = resolve("f", &source.x, &target.x, Axis::X, f)?;
        let gs = resolve("g", &source.y, &target.y, Axis::Y, g)?;
        Self::new(source, target, fs, gs)
    }

    pub fn identity(r: &Relation) -> Self {
        Self {
            source: r.clone(),
            target: r.clone(),
            f: (0..r.nx()).collect(),
            g: (0..r.ny()).collect(),
        }
    }

    pub fn source(&self) -> &Relation {
        &self.source
    }

    pub fn target(&self) -> &Relation {
        &self.target
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn g(&self) -> &[usize] {
        &self.g
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &RelMorphism) -> Result<RelMorphism> {
        if first.target != self.source {
            return Err(Error::EndpointMismatch(
                "target of the first morphism differs from source of the second".into(),
            ));
        }
        // Labels may be stored in a different order on the two sides.
        let remap_x: Vec<usize> = (0..first.target.nx())
            .map(|i| self.source.x.id(first.target.x.label(i)).unwrap())
            .collect();
        let remap_y: Vec<usize> = (0..first.target.ny())
            .map(|j| self.source.y.id(first.target.y.label(j)).unwrap())
            .collect();
        let f = first.f.iter().map(|&a| self.f[remap_x[a]]).collect();
        let g = first.g.iter().map(|&b| self.g[remap_y[b]]).collect();
        RelMorphism::new(first.source.clone(), self.target.clone(), f, g)
    }

    /// The morphism `(g, f)` between the transposed relations.
    pub fn transpose(&self) -> RelMorphism {
        RelMorphism {
            source: self.source.transpose(),
            target: self.target.transpose(),
            f: self.g.clone(),
            g: self.f.clone(),
        }
    }

    pub fn f_label(&self, x: &str) -> Option<&str> {
        self.source.x.id(x).map(|i| self.target.x.label(self.f[i]))
    }

    pub fn g_label(&self, y: &str) -> Option<&str> {
        self.source.y.id(y).map(|j| self.target.y.label(self.g[j]))
    }
}
