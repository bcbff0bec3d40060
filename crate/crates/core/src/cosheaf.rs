//! Cosheaves of sets on face posets, their morphisms, and global cosections.
//!
//! Extensions are stored on Hasse covers only. Longer extensions are
//! composed along a saturated chain, and the composition law is checked on
//! every two-step diamond when a cosheaf is built (face-poset intervals are
//! Boolean lattices, so diamonds generate every chain).

use std::collections::{BTreeMap, BTreeSet};

use petgraph::unionfind::UnionFind;

use crate::complex::{dowker, face_poset, induced_simplicial_map, y_sigma, FacePoset, Simplex};
use crate::error::{Error, Result};
use crate::labels::LabelSet;
use crate::relation::{RelMorphism, Relation};

pub type SetMap = BTreeMap<usize, usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCosheaf {
    base: FacePoset,
    fiber: LabelSet,
    costalks: Vec<BTreeSet<usize>>,
    /// Keyed by cover `(lower, upper)`; maps `costalk(upper) -> costalk(lower)`.
    extensions: BTreeMap<(usize, usize), SetMap>,
}

fn compose_maps(outer: &SetMap, inner: &SetMap) -> SetMap {
    inner.iter().map(|(&k, v)| (k, outer[v])).collect()
}

impl SetCosheaf {
    pub fn new(
        base: FacePoset,
        fiber: LabelSet,
        costalks: Vec<BTreeSet<usize>>,
        extensions: BTreeMap<(usize, usize), SetMap>,
    ) -> Result<Self> {
        let name = |i: usize| base.element(i).display(base.universe()).to_string();
        if costalks.len() != base.len() {
            return Err(Error::InvalidCosheaf(format!(
                "{} costalks for {} base elements",
                costalks.len(),
                base.len()
            )));
        }
        if let Some(&bad) = costalks.iter().flatten().find(|&&e| e >= fiber.len()) {
            return Err(Error::UnknownVertex(bad));
        }
        let covers: BTreeSet<(usize, usize)> = base.covers().iter().copied().collect();
        let keys: BTreeSet<(usize, usize)> = extensions.keys().copied().collect();
        if covers != keys {
            return Err(Error::InvalidCosheaf(
                "extensions must be given on exactly the Hasse covers".into(),
            ));
        }
        for (&(lo, hi), map) in &extensions {
            let domain: BTreeSet<usize> = map.keys().copied().collect();
            if domain != costalks[hi] {
                return Err(Error::InvalidCosheaf(format!(
                    "extension [{}] -> [{}] is not defined on the whole costalk",
                    name(hi),
                    name(lo)
                )));
            }
            if map.values().any(|v| !costalks[lo].contains(v)) {
                return Err(Error::InvalidCosheaf(format!(
                    "extension [{}] -> [{}] leaves the target costalk",
                    name(hi),
                    name(lo)
                )));
            }
            let image: BTreeSet<usize> = map.values().copied().collect();
            if image.len() != map.len() {
                return Err(Error::InvalidCosheaf(format!(
                    "extension [{}] -> [{}] is not injective",
                    name(hi),
                    name(lo)
                )));
            }
        }
        let c = Self {
            base,
            fiber,
            costalks,
            extensions,
        };
        c.check_diamonds()?;
        Ok(c)
    }

    fn check_diamonds(&self) -> Result<()> {
        for hi in 0..self.base.len() {
            let mids = self.base.lower_covers(hi);
            for (a, &m1) in mids.iter().enumerate() {
                for &m2 in &mids[a + 1..] {
                    for &lo in self.base.lower_covers(m1) {
                        if !self.base.lower_covers(m2).contains(&lo) {
                            continue;
                        }
                        let p1 =
                            compose_maps(&self.extensions[&(lo, m1)], &self.extensions[&(m1, hi)]);
                        let p2 =
                            compose_maps(&self.extensions[&(lo, m2)], &self.extensions[&(m2, hi)]);
                        if p1 != p2 {
                            return Err(Error::InvalidCosheaf(format!(
                                "composition law fails between [{}] and [{}]",
                                self.name(lo),
                                self.name(hi)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn name(&self, i: usize) -> String {
        self.base
            .element(i)
            .display(self.base.universe())
            .to_string()
    }

    /// A single-point base carrying `costalk`.
    pub fn point(base_label: &str, fiber: LabelSet, costalk: BTreeSet<usize>) -> Result<Self> {
        let universe = LabelSet::new([base_label], crate::error::Axis::X)?;
        let k = crate::complex::SimplicialComplex::from_generators(universe, [Simplex::vertex(0)])?;
        Self::new(face_poset(&k), fiber, vec![costalk], BTreeMap::new())
    }

    pub fn base(&self) -> &FacePoset {
        &self.base
    }

    pub fn fiber(&self) -> &LabelSet {
        &self.fiber
    }

    pub fn costalk(&self, i: usize) -> &BTreeSet<usize> {
        &self.costalks[i]
    }

    pub fn costalks(&self) -> &[BTreeSet<usize>] {
        &self.costalks
    }

    pub fn cover_extension(&self, lo: usize, hi: usize) -> Option<&SetMap> {
        self.extensions.get(&(lo, hi))
    }

    /// The extension `costalk(hi) -> costalk(lo)` for any `lo ≤ hi`.
    pub fn extension(&self, lo: usize, hi: usize) -> Option<SetMap> {
        let chain = self.base.chain(lo, hi)?;
        let mut map: SetMap = self.costalks[hi].iter().map(|&e| (e, e)).collect();
        for w in chain.windows(2).rev() {
            map = compose_maps(&self.extensions[&(w[0], w[1])], &map);
        }
        Some(map)
    }

    /// Checks `ext(x ≤ z) = ext(x ≤ y) ∘ ext(y ≤ z)` for every triple.
    pub fn verify_composition_law(&self) -> bool {
        let n = self.base.len();
        for x in 0..n {
            for z in 0..n {
                let Some(xz) = self.extension(x, z) else {
                    continue;
                };
                for y in 0..n {
                    if self.base.leq(x, y) && self.base.leq(y, z) {
                        let via = compose_maps(
                            &self.extension(x, y).unwrap(),
                            &self.extension(y, z).unwrap(),
                        );
                        if via != xz {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether every extension is a set inclusion.
    pub fn is_inclusion(&self) -> bool {
        self.extensions
            .values()
            .all(|m| m.iter().all(|(k, v)| k == v))
    }
}

/// The cosheaf `σ ↦ Y_σ` on the face poset of the Dowker complex, with
/// inclusions as extensions.
pub fn coshv_rep0(r: &Relation) -> SetCosheaf {
    let base = face_poset(&dowker(r));
    let costalks: Vec<BTreeSet<usize>> = base
        .elements()
        .iter()
        .map(|s| y_sigma(r, s).expect("base simplices are rows of r"))
        .collect();
    let extensions = base
        .covers()
        .iter()
        .map(|&(lo, hi)| ((lo, hi), costalks[hi].iter().map(|&y| (y, y)).collect()))
        .collect();
    SetCosheaf::new(base, r.y_labels().clone(), costalks, extensions)
        .expect("representation cosheaves are valid")
}

/// Equivalence classes of the disjoint union of costalks under the
/// identifications made by extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosectionSet {
    /// Each class lists its `(base element, costalk element)` pairs in order.
    classes: Vec<Vec<(usize, usize)>>,
    lookup: BTreeMap<(usize, usize), usize>,
}

impl CosectionSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<(usize, usize)>] {
        &self.classes
    }

    /// The smallest `(base element, costalk element)` pair of a class.
    pub fn representative(&self, class: usize) -> (usize, usize) {
        self.classes[class][0]
    }

    pub fn class_of(&self, element: usize, value: usize) -> Option<usize> {
        self.lookup.get(&(element, value)).copied()
    }

    /// Distinct costalk values appearing in a class.
    pub fn values(&self, class: usize) -> BTreeSet<usize> {
        self.classes[class].iter().map(|&(_, v)| v).collect()
    }
}

/// Union-find over `(simplex, element)` pairs.
pub fn global_cosections(c: &SetCosheaf) -> CosectionSet {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (i, costalk) in c.costalks.iter().enumerate() {
        for &e in costalk {
            ids.insert((i, e), pairs.len());
            pairs.push((i, e));
        }
    }
    let mut uf = UnionFind::<usize>::new(pairs.len());
    for (&(lo, hi), map) in &c.extensions {
        for (e, v) in map {
            uf.union(ids[&(hi, *e)], ids[&(lo, *v)]);
        }
    }
    let mut grouped: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (k, &p) in pairs.iter().enumerate() {
        grouped.entry(uf.find(k)).or_default().push(p);
    }
    let mut classes: Vec<Vec<(usize, usize)>> = grouped.into_values().collect();
    for class in &mut classes {
        class.sort_unstable();
    }
    classes.sort_unstable();
    let lookup = classes
        .iter()
        .enumerate()
        .flat_map(|(i, cl)| cl.iter().map(move |&p| (p, i)))
        .collect();
    CosectionSet { classes, lookup }
}

/// A cosheaf morphism along an order-preserving base map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCosheafMorphism {
    source: SetCosheaf,
    target: SetCosheaf,
    base_map: Vec<usize>,
    components: Vec<SetMap>,
}

impl SetCosheafMorphism {
    pub fn new(
        source: SetCosheaf,
        target: SetCosheaf,
        base_map: Vec<usize>,
        components: Vec<SetMap>,
    ) -> Result<Self> {
        let n = source.base.len();
        if base_map.len() != n || components.len() != n {
            return Err(Error::InvalidMorphism(
                "base map and components must cover every base element".into(),
            ));
        }
        if base_map.iter().any(|&j| j >= target.base.len()) {
            return Err(Error::InvalidMorphism(
                "base map leaves the target poset".into(),
            ));
        }
        for &(lo, hi) in source.base.covers() {
            if !target.base.leq(base_map[lo], base_map[hi]) {
                return Err(Error::InvalidMorphism(format!(
                    "base map is not order preserving at [{}] <= [{}]",
                    source.name(lo),
                    source.name(hi)
                )));
            }
        }
        for (i, comp) in components.iter().enumerate() {
            let domain: BTreeSet<usize> = comp.keys().copied().collect();
            if &domain != source.costalk(i) {
                return Err(Error::InvalidMorphism(format!(
                    "component at [{}] is not defined on the whole costalk",
                    source.name(i)
                )));
            }
            if comp
                .values()
                .any(|v| !target.costalk(base_map[i]).contains(v))
            {
                return Err(Error::InvalidMorphism(format!(
                    "component at [{}] leaves the target costalk",
                    source.name(i)
                )));
            }
        }
        for &(lo, hi) in source.base.covers() {
            let down_then_across = compose_maps(&components[lo], &source.extensions[&(lo, hi)]);
            let target_ext = target
                .extension(base_map[lo], base_map[hi])
                .expect("order preserving");
            let across_then_down = compose_maps(&target_ext, &components[hi]);
            if down_then_across != across_then_down {
                return Err(Error::InvalidMorphism(format!(
                    "square at [{}] <= [{}] does not commute",
                    source.name(lo),
                    source.name(hi)
                )));
            }
        }
        Ok(Self {
            source,
            target,
            base_map,
            components,
        })
    }

    pub fn identity(c: &SetCosheaf) -> Self {
        Self {
            source: c.clone(),
            target: c.clone(),
            base_map: (0..c.base.len()).collect(),
            components: c
                .costalks
                .iter()
                .map(|s| s.iter().map(|&e| (e, e)).collect())
                .collect(),
        }
    }

    pub fn source(&self) -> &SetCosheaf {
        &self.source
    }

    pub fn target(&self) -> &SetCosheaf {
        &self.target
    }

    pub fn base_map(&self) -> &[usize] {
        &self.base_map
    }

    pub fn component(&self, i: usize) -> &SetMap {
        &self.components[i]
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &SetCosheafMorphism) -> Result<SetCosheafMorphism> {
        if first.target != self.source {
            return Err(Error::EndpointMismatch(
                "cosheaf morphisms are not composable".into(),
            ));
        }
        let base_map = first.base_map.iter().map(|&j| self.base_map[j]).collect();
        let components = first
            .components
            .iter()
            .zip(&first.base_map)
            .map(|(inner, &j)| compose_maps(&self.components[j], inner))
            .collect();
        SetCosheafMorphism::new(
            first.source.clone(),
            self.target.clone(),
            base_map,
            components,
        )
    }

    /// The induced function on global cosections, as class indices. Fails if
    /// two members of a class land in different target classes.
    pub fn cosection_map(&self) -> Result<Vec<usize>> {
        let src = global_cosections(&self.source);
        let tgt = global_cosections(&self.target);
        src.classes()
            .iter()
            .map(|class| {
                let images: BTreeSet<usize> = class
                    .iter()
                    .map(|&(i, e)| {
                        tgt.class_of(self.base_map[i], self.components[i][&e])
                            .expect("components land in target costalks")
                    })
                    .collect();
                if images.len() == 1 {
                    Ok(*images.iter().next().unwrap())
                } else {
                    Err(Error::InvalidMorphism(
                        "cosection map is not well defined".into(),
                    ))
                }
            })
            .collect()
    }
}

/// The cosheaf morphism with base map `D(f)` and components `g|Y_σ`.
pub fn induced_cosheaf_morphism0(m: &RelMorphism) -> SetCosheafMorphism {
    let source = coshv_rep0(m.source());
    let target = coshv_rep0(m.target());
    let base_map = induced_simplicial_map(m).face_map(source.base(), target.base());
    let components = source
        .costalks()
        .iter()
        .map(|ys| ys.iter().map(|&y| (y, m.g()[y])).collect())
        .collect();
    SetCosheafMorphism::new(source, target, base_map, components)
        .expect("relation morphisms induce cosheaf morphisms")
}

/// For two morphisms out of a relation whose rows and columns are all
/// nonempty: true iff equal induced cosheaf morphisms force equal
/// morphisms.
pub fn faithfulness_witness(m: &RelMorphism, other: &RelMorphism) -> Result<bool> {
    if m.source() != other.source() || m.target() != other.target() {
        return Err(Error::Precondition(
            "both morphisms must share source and target".into(),
        ));
    }
    if !m.source().is_positive() {
        return Err(Error::Precondition(
            "source relation has an empty row or column".into(),
        ));
    }
    let same_image = induced_cosheaf_morphism0(m) == induced_cosheaf_morphism0(other);
    Ok(!same_image || m == other)
}
