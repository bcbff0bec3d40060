//! Abstract simplicial complexes, the Dowker construction, face posets and
//! simplicial maps.
//!
//! Vertices are dense ids into a [`LabelSet`] (the complex's universe). A
//! complex stores every nonempty simplex explicitly together with its
//! inclusion-maximal simplices, so sizes grow as `2^k` in the largest simplex
//! dimension `k`; everything here is meant for relations with at most a
//! couple of dozen rows.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::labels::LabelSet;
use crate::relation::{RelMorphism, Relation};

/// A finite set of vertex ids, kept strictly sorted.
///
/// Ordered by cardinality first and lexicographically second, so iterating a
/// `BTreeSet<Simplex>` visits vertices, then edges, then triangles.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertex(v: usize) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// The simplex with vertex `v` removed.
    pub fn without(&self, v: usize) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn with(&self, v: usize) -> Simplex {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Simplex(out)
    }

    /// Every subset, including the empty one and the simplex itself.
    pub fn subsets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < usize::BITS as usize, "simplex too large to enumerate");
        (0usize..(1 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    /// Canonical string form, `v1,v2,...` in id order; the empty simplex is `()`.
    pub fn display<'a>(&'a self, labels: &'a LabelSet) -> SimplexDisplay<'a> {
        SimplexDisplay {
            simplex: self,
            labels,
        }
    }

    /// Comma-joined labels; empty string for the empty simplex.
    pub fn key(&self, labels: &LabelSet) -> String {
        self.0
            .iter()
            .map(|&v| labels.label(v))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn label_vec(&self, labels: &LabelSet) -> Vec<String> {
        self.0.iter().map(|&v| labels.label(v).to_owned()).collect()
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl FromIterator<usize> for Simplex {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Simplex::new(iter.into_iter().collect())
    }
}

pub struct SimplexDisplay<'a> {
    simplex: &'a Simplex,
    labels: &'a LabelSet,
}

impl fmt::Display for SimplexDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.simplex.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", self.simplex.key(self.labels))
        }
    }
}

/// Parses a canonical simplex string (`a,c,d`, with `()` or an empty string
/// for the empty simplex).
pub fn parse_simplex(text: &str, labels: &LabelSet) -> Result<Simplex> {
    let text = text.trim();
    if text.is_empty() || text == "()" {
        return Ok(Simplex::empty());
    }
    let text = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(text);
    text.split(',')
        .map(|l| {
            let l = l.trim();
            labels
                .id(l)
                .ok_or_else(|| Error::UnknownSimplex(text.to_owned()))
        })
        .collect()
}

/// Sort key for "decreasing cardinality, then lexicographic".
pub fn descending(s: &Simplex) -> (std::cmp::Reverse<usize>, Vec<usize>) {
    (std::cmp::Reverse(s.len()), s.0.clone())
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: LabelSet,
    simplices: BTreeSet<Simplex>,
    maximal: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    pub fn empty(universe: LabelSet) -> Self {
        Self {
            universe,
            simplices: BTreeSet::new(),
            maximal: BTreeSet::new(),
        }
    }

    /// The smallest complex containing every generator. Empty generators
    /// are ignored.
    pub fn from_generators<I>(universe: LabelSet, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut simplices = BTreeSet::new();
        for g in generators {
            if let Some(&bad) = g.vertices().iter().find(|&&v| v >= universe.len()) {
                return Err(Error::UnknownVertex(bad));
            }
            if g.is_empty() || simplices.contains(&g) {
                continue;
            }
            simplices.extend(g.subsets().filter(|s| !s.is_empty()));
        }
        Ok(Self::from_closed(universe, simplices))
    }

    /// Builds from an explicit simplex set, rejecting sets that are not
    /// closed under nonempty subsets.
    pub fn from_simplices(universe: LabelSet, simplices: BTreeSet<Simplex>) -> Result<Self> {
        for s in &simplices {
            if s.is_empty() {
                return Err(Error::Precondition(
                    "the empty simplex is not a member of a complex".into(),
                ));
            }
            if let Some(&bad) = s.vertices().iter().find(|&&v| v >= universe.len()) {
                return Err(Error::UnknownVertex(bad));
            }
            if s.len() > 1 {
                for &v in s.vertices() {
                    let face = s.without(v);
                    if !simplices.contains(&face) {
                        return Err(Error::UnknownSimplex(format!(
                            "{} (face of {})",
                            face.display(&universe),
                            s.display(&universe)
                        )));
                    }
                }
            }
        }
        Ok(Self::from_closed(universe, simplices))
    }

    fn from_closed(universe: LabelSet, simplices: BTreeSet<Simplex>) -> Self {
        let maximal = simplices
            .iter()
            .filter(|s| {
                // A simplex is maximal iff no one-vertex extension is present.
                !(0..universe.len())
                    .filter(|v| !s.contains(*v))
                    .any(|v| simplices.contains(&s.with(v)))
            })
            .cloned()
            .collect();
        Self {
            universe,
            simplices,
            maximal,
        }
    }

    /// Every nonempty subset of `vertices`.
    pub fn complete(universe: LabelSet, vertices: &BTreeSet<usize>) -> Result<Self> {
        Self::from_generators(universe, [vertices.iter().copied().collect::<Simplex>()])
    }

    pub fn universe(&self) -> &LabelSet {
        &self.universe
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub fn maximal(&self) -> &BTreeSet<Simplex> {
        &self.maximal
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.simplices
            .iter()
            .take_while(|s| s.len() == 1)
            .map(|s| s.vertices()[0])
            .collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Largest simplex dimension, `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.simplices
            .iter()
            .next_back()
            .map_or(-1, |s| s.len() as isize - 1)
    }

    /// Simplices of dimension `dim` (that is, with `dim + 1` vertices).
    pub fn simplices_of_dim(&self, dim: usize) -> Vec<&Simplex> {
        self.simplices
            .iter()
            .filter(|s| s.len() == dim + 1)
            .collect()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.maximal.iter().all(|s| other.contains(s))
    }

    /// Whether the complex is the full simplex on its vertex set.
    pub fn is_complete_simplex(&self) -> bool {
        self.maximal.len() <= 1
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.universe != other.universe {
            return Err(Error::Precondition(
                "union of complexes over different vertex universes".into(),
            ));
        }
        let simplices = self.simplices.union(&other.simplices).cloned().collect();
        Ok(Self::from_closed(self.universe.clone(), simplices))
    }

    /// Simplices as sorted label lists, for comparisons across universes.
    pub fn labelled_simplices(&self) -> BTreeSet<Vec<String>> {
        self.simplices
            .iter()
            .map(|s| {
                let mut v = s.label_vec(&self.universe);
                v.sort();
                v
            })
            .collect()
    }

    /// Re-expresses the complex over another universe that contains all of
    /// its labels.
    pub fn with_universe(&self, universe: LabelSet) -> Result<Self> {
        let remap: Vec<usize> = (0..self.universe.len())
            .map(|i| {
                universe
                    .id(self.universe.label(i))
                    .ok_or_else(|| Error::UnknownSimplex(self.universe.label(i).to_owned()))
            })
            .collect::<Result<_>>()?;
        let simplices = self
            .simplices
            .iter()
            .map(|s| s.vertices().iter().map(|&v| remap[v]).collect())
            .collect();
        Ok(Self::from_closed(universe, simplices))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .maximal
            .iter()
            .map(|s| format!("[{}]", s.display(&self.universe)))
            .collect();
        write!(f, "SimplicialComplex<{}>", gens.join(" "))
    }
}

/// Rows with at least one witness become vertices; the simplices are the
/// nonempty subsets of column supports.
pub fn dowker(r: &Relation) -> SimplicialComplex {
    let generators = (0..r.ny()).map(|y| Simplex::new(r.column_support(y)));
    SimplicialComplex::from_generators(r.x_labels().clone(), generators)
        .expect("column supports are valid row ids")
}

/// The columns related to every row of `s`. `s` may be any set of rows,
/// including the empty one, which yields every column.
pub fn y_sigma(r: &Relation, s: &Simplex) -> Result<BTreeSet<usize>> {
    if let Some(&bad) = s.vertices().iter().find(|&&x| x >= r.nx()) {
        return Err(Error::UnknownVertex(bad));
    }
    Ok((0..r.ny())
        .filter(|&y| s.vertices().iter().all(|&x| r.get(x, y)))
        .collect())
}

/// Simplices ordered by inclusion, stored as a Hasse diagram.
#[derive(Clone)]
pub struct FacePoset {
    universe: LabelSet,
    elements: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl FacePoset {
    fn from_parts(
        universe: LabelSet,
        elements: Vec<Simplex>,
        mut covers: Vec<(usize, usize)>,
    ) -> Self {
        covers.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut up = vec![Vec::new(); elements.len()];
        let mut down = vec![Vec::new(); elements.len()];
        for &(lo, hi) in &covers {
            up[lo].push(hi);
            down[hi].push(lo);
        }
        Self {
            universe,
            elements,
            index,
            covers,
            up,
            down,
        }
    }

    pub fn universe(&self) -> &LabelSet {
        &self.universe
    }

    /// Elements in canonical (cardinality, lexicographic) order.
    pub fn elements(&self) -> &[Simplex] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Simplex {
        &self.elements[i]
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Hasse edges `(lower, upper)` with `|upper| = |lower| + 1`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].is_face_of(&self.elements[j])
    }

    /// A saturated chain `lo = c0 ⋖ c1 ⋖ ... ⋖ ck = hi`, adding the missing
    /// vertices in increasing id order.
    pub fn chain(&self, lo: usize, hi: usize) -> Option<Vec<usize>> {
        if !self.leq(lo, hi) {
            return None;
        }
        let mut current = self.elements[lo].clone();
        let mut out = vec![lo];
        for &v in self.elements[hi].vertices() {
            if !current.contains(v) {
                current = current.with(v);
                out.push(self.index_of(&current)?);
            }
        }
        Some(out)
    }

    /// All comparable pairs `(i, j)` with `i ≤ j`, derived from the covers
    /// alone by breadth-first search.
    pub fn transitive_closure(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for start in 0..self.len() {
            let mut stack = vec![start];
            let mut seen = BTreeSet::new();
            while let Some(i) = stack.pop() {
                if seen.insert(i) {
                    out.insert((start, i));
                    stack.extend(self.up[i].iter().copied());
                }
            }
        }
        out
    }

    pub fn as_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_closed(
            self.universe.clone(),
            self.elements.iter().cloned().collect(),
        )
    }
}

impl PartialEq for FacePoset {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.elements == other.elements
            && self.covers == other.covers
    }
}

impl Eq for FacePoset {}

impl fmt::Debug for FacePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FacePoset")
            .field("elements", &self.elements.len())
            .field("covers", &self.covers.len())
            .finish()
    }
}

/// Hasse diagram of a complex's simplices under inclusion. Covers come
/// from deleting one vertex at a time.
pub fn face_poset(k: &SimplicialComplex) -> FacePoset {
    let elements: Vec<Simplex> = k.simplices().iter().cloned().collect();
    let index: HashMap<&Simplex, usize> =
        elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut covers = Vec::new();
    for (hi, s) in elements.iter().enumerate() {
        if s.len() < 2 {
            continue;
        }
        for &v in s.vertices() {
            covers.push((index[&s.without(v)], hi));
        }
    }
    FacePoset::from_parts(k.universe().clone(), elements, covers)
}

/// The poset of row sets sharing a witness, built straight from the
/// relation: elements come from column supports, covers from pairwise
/// comparison.
pub fn pos_rep(r: &Relation) -> FacePoset {
    let mut elements = BTreeSet::new();
    for y in 0..r.ny() {
        let support = Simplex::new(r.column_support(y));
        elements.extend(support.subsets().filter(|s| !s.is_empty()));
    }
    let elements: Vec<Simplex> = elements.into_iter().collect();
    let mut covers = Vec::new();
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            if b.len() == a.len() + 1 && a.is_face_of(b) {
                covers.push((i, j));
            }
        }
    }
    FacePoset::from_parts(r.x_labels().clone(), elements, covers)
}

/// A vertex map between complexes that sends simplices to simplices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    vertex_map: BTreeMap<usize, usize>,
}

impl SimplicialMap {
    /// Validates that `vertex_map` is total on the source vertices and that
    /// the image of every simplex (duplicates removed) is a target simplex.
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: BTreeMap<usize, usize>,
    ) -> Result<Self> {
        let vertices = source.vertices();
        if let Some(v) = vertices.iter().find(|v| !vertex_map.contains_key(v)) {
            return Err(Error::NotSimplicial(format!(
                "vertex `{}` has no image",
                source.universe().label(*v)
            )));
        }
        if let Some(k) = vertex_map.keys().find(|k| !vertices.contains(k)) {
            return Err(Error::NotSimplicial(format!(
                "map defined on `{}`, which is not a vertex",
                source.universe().get(*k).unwrap_or("?")
            )));
        }
        let map = Self {
            source,
            target,
            vertex_map,
        };
        // Images of faces are faces of images, so maximal simplices suffice.
        for s in map.source.maximal() {
            let image = map.apply(s);
            if !map.target.contains(&image) {
                return Err(Error::NotSimplicial(format!(
                    "[{}] maps to [{}], which is not a simplex of the target",
                    s.display(map.source.universe()),
                    image.display(map.target.universe())
                )));
            }
        }
        Ok(map)
    }

    pub fn identity(k: &SimplicialComplex) -> Self {
        Self {
            source: k.clone(),
            target: k.clone(),
            vertex_map: k.vertices().into_iter().map(|v| (v, v)).collect(),
        }
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<usize, usize> {
        &self.vertex_map
    }

    /// Image of a simplex with duplicate vertices removed. Vertices outside
    /// the domain are dropped.
    pub fn apply(&self, s: &Simplex) -> Simplex {
        s.vertices()
            .iter()
            .filter_map(|v| self.vertex_map.get(v).copied())
            .collect()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &SimplicialMap) -> Result<SimplicialMap> {
        if first.target != self.source {
            return Err(Error::EndpointMismatch(
                "simplicial maps are not composable".into(),
            ));
        }
        let vertex_map = first
            .vertex_map
            .iter()
            .map(|(&v, w)| (v, self.vertex_map[w]))
            .collect();
        SimplicialMap::new(first.source.clone(), self.target.clone(), vertex_map)
    }

    /// The induced order-preserving map between face posets, as element
    /// indices.
    pub fn face_map(&self, source: &FacePoset, target: &FacePoset) -> Vec<usize> {
        source
            .elements()
            .iter()
            .map(|s| {
                target
                    .index_of(&self.apply(s))
                    .expect("simplicial map images are target simplices")
            })
            .collect()
    }
}

/// The simplicial map `D(f)` induced by a relation morphism.
pub fn induced_simplicial_map(m: &RelMorphism) -> SimplicialMap {
    let source = dowker(m.source());
    let target = dowker(m.target());
    let vertex_map = source
        .vertices()
        .into_iter()
        .map(|x| (x, m.f()[x]))
        .collect();
    SimplicialMap::new(source, target, vertex_map)
        .expect("relation morphisms induce simplicial maps")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Axis;

    fn r2() -> Relation {
        Relation::from_matrix(
            &["a", "b", "c", "d"],
            &["1", "2", "3", "4", "5", "6"],
            &[
                vec![1, 0, 1, 0, 0, 1],
                vec![1, 1, 0, 0, 0, 0],
                vec![0, 1, 1, 1, 0, 1],
                vec![0, 0, 1, 0, 1, 0],
            ],
        )
        .unwrap()
    }

    fn s(r: &Relation, labels: &str) -> Simplex {
        parse_simplex(labels, r.x_labels()).unwrap()
    }

    #[test]
    fn r2_complex_generators() {
        let r = r2();
        let k = dowker(&r);
        let maximal: Vec<String> = k.maximal().iter().map(|m| m.key(k.universe())).collect();
        assert_eq!(maximal, ["a,b", "b,c", "a,c,d"]);
        assert_eq!(k.len(), 10);
        assert_eq!(k.dimension(), 2);
    }

    #[test]
    fn y_sigma_examples() {
        let r = r2();
        let ys = |l: &str| -> Vec<String> {
            y_sigma(&r, &s(&r, l))
                .unwrap()
                .into_iter()
                .map(|y| r.y_labels().label(y).to_owned())
                .collect()
        };
        assert_eq!(ys("a,c"), ["3", "6"]);
        assert_eq!(ys("c"), ["2", "3", "4", "6"]);
        assert_eq!(ys("()"), ["1", "2", "3", "4", "5", "6"]);
        assert!(matches!(
            y_sigma(&r, &Simplex::vertex(9)),
            Err(Error::UnknownVertex(9))
        ));
    }

    #[test]
    fn zero_matrix_has_empty_complex() {
        let r = Relation::from_matrix(&["a", "b"], &["1", "2"], &[vec![0, 0], vec![0, 0]]).unwrap();
        assert!(dowker(&r).is_empty());
        assert!(pos_rep(&r).is_empty());
        assert!(pos_rep(&Relation::empty()).is_empty());
    }

    #[test]
    fn face_poset_small_cases() {
        let u = LabelSet::new(["p", "q", "r"], Axis::X).unwrap();
        let point = SimplicialComplex::from_generators(u.clone(), [Simplex::vertex(0)]).unwrap();
        let p = face_poset(&point);
        assert_eq!((p.len(), p.covers().len()), (1, 0));

        let full = SimplicialComplex::from_generators(u, [Simplex::new(vec![0, 1, 2])]).unwrap();
        let p = face_poset(&full);
        // Brute force: nonempty subsets of a 3-set and the one-element-larger pairs.
        let subsets: Vec<u32> = (1u32..8).collect();
        let covers = subsets
            .iter()
            .flat_map(|&a| subsets.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a & b == a && b.count_ones() == a.count_ones() + 1)
            .count();
        assert_eq!(p.len(), subsets.len());
        assert_eq!(p.covers().len(), covers);
        assert_eq!(covers, 9);
    }

    #[test]
    fn r2_hasse_diagram_matches_golden_covers() {
        let r = r2();
        let p = face_poset(&dowker(&r));
        let covers: BTreeSet<(String, String)> = p
            .covers()
            .iter()
            .map(|&(lo, hi)| {
                (
                    p.element(lo).key(r.x_labels()),
                    p.element(hi).key(r.x_labels()),
                )
            })
            .collect();
        let golden: BTreeSet<(String, String)> = [
            ("a,c", "a,c,d"),
            ("a,d", "a,c,d"),
            ("c,d", "a,c,d"),
            ("b", "a,b"),
            ("b", "b,c"),
            ("a", "a,b"),
            ("a", "a,c"),
            ("a", "a,d"),
            ("c", "b,c"),
            ("c", "a,c"),
            ("c", "c,d"),
            ("d", "a,d"),
            ("d", "c,d"),
        ]
        .iter()
        .map(|&(a, b)| (a.to_owned(), b.to_owned()))
        .collect();
        assert_eq!(covers, golden);
        assert_eq!(p.len(), 10);
    }

    #[test]
    fn closure_of_covers_is_inclusion() {
        let p = face_poset(&dowker(&r2()));
        let closure = p.transitive_closure();
        for i in 0..p.len() {
            for j in 0..p.len() {
                assert_eq!(closure.contains(&(i, j)), p.leq(i, j));
            }
        }
    }

    #[test]
    fn pos_rep_agrees_with_face_poset() {
        assert_eq!(pos_rep(&r2()), face_poset(&dowker(&r2())));
    }

    #[test]
    fn from_simplices_rejects_open_sets() {
        let u = LabelSet::new(["p", "q"], Axis::X).unwrap();
        let open: BTreeSet<Simplex> = [Simplex::new(vec![0, 1]), Simplex::vertex(0)].into();
        assert!(SimplicialComplex::from_simplices(u, open).is_err());
    }

    #[test]
    fn simplicial_map_rejects_non_simplicial_images() {
        let u = LabelSet::new(["p", "q"], Axis::X).unwrap();
        let edge =
            SimplicialComplex::from_generators(u.clone(), [Simplex::new(vec![0, 1])]).unwrap();
        let two_points =
            SimplicialComplex::from_generators(u, [Simplex::vertex(0), Simplex::vertex(1)])
                .unwrap();
        let id: BTreeMap<usize, usize> = [(0, 0), (1, 1)].into();
        assert!(SimplicialMap::new(edge.clone(), two_points.clone(), id.clone()).is_err());
        assert!(SimplicialMap::new(two_points, edge, id).is_ok());
    }
}
