//! Cosheaves of simplicial complexes with inclusion extensions, the full
//! representation of a relation, and the `Dual` functor that swaps base and
//! global cosections.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{dowker, face_poset, y_sigma, FacePoset, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::labels::LabelSet;
use crate::relation::{RelMorphism, Relation};

pub type VertexMap = BTreeMap<usize, usize>;

/// A cosheaf on a face poset whose costalks are complexes on a shared fiber
/// and whose extensions are inclusions `costalk(τ) ⊆ costalk(σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexCosheaf {
    base: FacePoset,
    fiber: LabelSet,
    costalks: Vec<SimplicialComplex>,
}

impl ComplexCosheaf {
    /// Extensions are implicit inclusions; checks that each is well defined.
    pub fn new(base: FacePoset, fiber: LabelSet, costalks: Vec<SimplicialComplex>) -> Result<Self> {
        if costalks.len() != base.len() {
            return Err(Error::InvalidCosheaf(format!(
                "{} costalks for {} base elements",
                costalks.len(),
                base.len()
            )));
        }
        if costalks.iter().any(|k| k.universe() != &fiber) {
            return Err(Error::InvalidCosheaf(
                "costalk over a different fiber".into(),
            ));
        }
        for &(lo, hi) in base.covers() {
            if !costalks[hi].is_subcomplex_of(&costalks[lo]) {
                return Err(Error::NonInclusionExtension {
                    lower: base.element(lo).display(base.universe()).to_string(),
                    upper: base.element(hi).display(base.universe()).to_string(),
                });
            }
        }
        Ok(Self {
            base,
            fiber,
            costalks,
        })
    }

    /// As [`ComplexCosheaf::new`], but with explicit vertex functions on each
    /// cover, which must be identities on the upper costalk's vertices.
    pub fn with_extensions(
        base: FacePoset,
        fiber: LabelSet,
        costalks: Vec<SimplicialComplex>,
        extensions: &BTreeMap<(usize, usize), VertexMap>,
    ) -> Result<Self> {
        for (&(lo, hi), map) in extensions {
            let name = |i: usize| base.element(i).display(base.universe()).to_string();
            let domain: BTreeSet<usize> = map.keys().copied().collect();
            let inclusion = hi < costalks.len()
                && domain == costalks[hi].vertices()
                && map.iter().all(|(k, v)| k == v);
            if !inclusion {
                return Err(Error::NonInclusionExtension {
                    lower: name(lo),
                    upper: name(hi),
                });
            }
        }
        Self::new(base, fiber, costalks)
    }

    pub fn base(&self) -> &FacePoset {
        &self.base
    }

    pub fn fiber(&self) -> &LabelSet {
        &self.fiber
    }

    pub fn costalk(&self, i: usize) -> &SimplicialComplex {
        &self.costalks[i]
    }

    pub fn costalks(&self) -> &[SimplicialComplex] {
        &self.costalks
    }

    pub fn costalk_at(&self, s: &Simplex) -> Option<&SimplicialComplex> {
        self.base.index_of(s).map(|i| &self.costalks[i])
    }

    /// The base face poset as a complex.
    pub fn base_complex(&self) -> SimplicialComplex {
        self.base.as_complex()
    }
}

/// Each costalk is the complete simplex on `Y_σ`.
pub fn coshv_rep(r: &Relation) -> ComplexCosheaf {
    let base = face_poset(&dowker(r));
    let costalks = base
        .elements()
        .iter()
        .map(|s| {
            let ys = y_sigma(r, s).expect("base simplices are rows of r");
            SimplicialComplex::complete(r.y_labels().clone(), &ys).expect("ids are in range")
        })
        .collect();
    ComplexCosheaf::new(base, r.y_labels().clone(), costalks).expect("representations are valid")
}

/// The union of the costalks over `u`.
pub fn cosections_over(c: &ComplexCosheaf, u: &[Simplex]) -> Result<SimplicialComplex> {
    let mut acc = SimplicialComplex::empty(c.fiber.clone());
    for s in u {
        let k = c
            .costalk_at(s)
            .ok_or_else(|| Error::UnknownSimplex(s.display(c.base.universe()).to_string()))?;
        acc = acc.union(k)?;
    }
    Ok(acc)
}

pub fn global_cosection_complex(c: &ComplexCosheaf) -> SimplicialComplex {
    cosections_over(c, c.base.elements()).expect("base elements are known")
}

/// Base becomes the global cosection complex; the costalk at a cosection
/// simplex `τ` is generated by every base simplex whose costalk contains `τ`.
pub fn dual(c: &ComplexCosheaf) -> ComplexCosheaf {
    let base = face_poset(&global_cosection_complex(c));
    let universe = c.base.universe().clone();
    let costalks = base
        .elements()
        .iter()
        .map(|tau| {
            let gens = c
                .base
                .elements()
                .iter()
                .zip(&c.costalks)
                .filter(|(_, k)| k.contains(tau))
                .map(|(alpha, _)| alpha.clone());
            SimplicialComplex::from_generators(universe.clone(), gens)
                .expect("base simplices are valid")
        })
        .collect();
    ComplexCosheaf::new(base, universe, costalks).expect("duals of inclusion cosheaves are valid")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityMismatch {
    Base {
        dual: Vec<String>,
        transposed: Vec<String>,
    },
    Costalk {
        simplex: String,
        dual: Vec<Vec<String>>,
        transposed: Vec<Vec<String>>,
    },
}

/// Outcome of comparing `dual(coshv_rep(r))` with `coshv_rep(rᵀ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityCertificate {
    /// `(simplex, maximal simplices of the costalk)` for every matched costalk.
    pub matched: Vec<(String, Vec<String>)>,
    pub mismatch: Option<DualityMismatch>,
}

impl DualityCertificate {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn maximal_keys(k: &SimplicialComplex) -> Vec<String> {
    k.maximal().iter().map(|s| s.key(k.universe())).collect()
}

pub fn check_dowker_duality(r: &Relation) -> DualityCertificate {
    let lhs = dual(&coshv_rep(r));
    let rhs = coshv_rep(&r.transpose());
    let keys = |p: &FacePoset| -> Vec<String> {
        p.elements().iter().map(|s| s.key(p.universe())).collect()
    };
    if lhs.base != rhs.base {
        return DualityCertificate {
            matched: vec![],
            mismatch: Some(DualityMismatch::Base {
                dual: keys(&lhs.base),
                transposed: keys(&rhs.base),
            }),
        };
    }
    let mut matched = Vec::new();
    for (i, s) in lhs.base.elements().iter().enumerate() {
        let simplex = s.key(lhs.base.universe());
        if lhs.costalks[i] != rhs.costalks[i] {
            let labelled = |k: &SimplicialComplex| {
                k.labelled_simplices()
                    .into_iter()
                    .filter(|v| !v.is_empty())
                    .collect()
            };
            return DualityCertificate {
                matched,
                mismatch: Some(DualityMismatch::Costalk {
                    simplex,
                    dual: labelled(&lhs.costalks[i]),
                    transposed: labelled(&rhs.costalks[i]),
                }),
            };
        }
        matched.push((simplex, maximal_keys(&lhs.costalks[i])));
    }
    DualityCertificate {
        matched,
        mismatch: None,
    }
}

/// A morphism of complex cosheaves along a simplicial map of bases. Each
/// component is a vertex function on its costalk that must send simplices
/// to simplices of the target costalk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexCosheafMorphism {
    source: ComplexCosheaf,
    target: ComplexCosheaf,
    base_vertex_map: VertexMap,
    base_map: Vec<usize>,
    components: Vec<VertexMap>,
}

fn image(map: &VertexMap, s: &Simplex) -> Simplex {
    s.vertices().iter().map(|v| map[v]).collect()
}

impl ComplexCosheafMorphism {
    pub fn new(
        source: ComplexCosheaf,
        target: ComplexCosheaf,
        base_vertex_map: VertexMap,
        components: Vec<VertexMap>,
    ) -> Result<Self> {
        let base_vertex_map: VertexMap = {
            let used = source.base_complex().vertices();
            if let Some(v) = used.iter().find(|v| !base_vertex_map.contains_key(v)) {
                return Err(Error::InvalidMorphism(format!(
                    "base vertex {} has no image",
                    source.base.universe().label(*v)
                )));
            }
            base_vertex_map
                .into_iter()
                .filter(|(k, _)| used.contains(k))
                .collect()
        };
        let mut base_map = Vec::with_capacity(source.base.len());
        for s in source.base.elements() {
            let img = image(&base_vertex_map, s);
            let j = target.base.index_of(&img).ok_or_else(|| {
                Error::NotSimplicial(format!(
                    "base simplex [{}] maps outside the target base",
                    s.display(source.base.universe())
                ))
            })?;
            base_map.push(j);
        }
        if components.len() != source.base.len() {
            return Err(Error::InvalidMorphism(
                "components must cover every base element".into(),
            ));
        }
        for (i, comp) in components.iter().enumerate() {
            let name = || {
                source
                    .base
                    .element(i)
                    .display(source.base.universe())
                    .to_string()
            };
            let domain: BTreeSet<usize> = comp.keys().copied().collect();
            if domain != source.costalks[i].vertices() {
                return Err(Error::InvalidMorphism(format!(
                    "component at [{}] is not defined on the costalk's vertices",
                    name()
                )));
            }
            if let Some(f) =
                Self::first_failure(&source.costalks[i], &target.costalks[base_map[i]], comp)
            {
                return Err(Error::InvalidMorphism(format!(
                    "component at [{}] sends [{}] outside the target costalk",
                    name(),
                    f.display(source.fiber())
                )));
            }
        }
        for &(lo, hi) in source.base.covers() {
            let restricted: VertexMap = components[lo]
                .iter()
                .filter(|(k, _)| components[hi].contains_key(k))
                .map(|(&k, &v)| (k, v))
                .collect();
            if restricted != components[hi] {
                return Err(Error::InvalidMorphism(format!(
                    "square at [{}] <= [{}] does not commute",
                    source.base.element(lo).display(source.base.universe()),
                    source.base.element(hi).display(source.base.universe())
                )));
            }
        }
        Ok(Self {
            source,
            target,
            base_vertex_map,
            base_map,
            components,
        })
    }

    /// The first simplex of `domain` (canonical order) whose image is not a
    /// simplex of `codomain`.
    pub(crate) fn first_failure(
        domain: &SimplicialComplex,
        codomain: &SimplicialComplex,
        map: &VertexMap,
    ) -> Option<Simplex> {
        domain
            .simplices()
            .iter()
            .find(|s| !codomain.contains(&image(map, s)))
            .cloned()
    }

    pub fn identity(c: &ComplexCosheaf) -> Self {
        let base_vertex_map = c
            .base_complex()
            .vertices()
            .into_iter()
            .map(|v| (v, v))
            .collect();
        let components = c
            .costalks
            .iter()
            .map(|k| k.vertices().into_iter().map(|v| (v, v)).collect())
            .collect();
        Self::new(c.clone(), c.clone(), base_vertex_map, components).expect("identity is valid")
    }

    pub fn source(&self) -> &ComplexCosheaf {
        &self.source
    }

    pub fn target(&self) -> &ComplexCosheaf {
        &self.target
    }

    pub fn base_vertex_map(&self) -> &VertexMap {
        &self.base_vertex_map
    }

    pub fn base_map(&self) -> &[usize] {
        &self.base_map
    }

    pub fn component(&self, i: usize) -> &VertexMap {
        &self.components[i]
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ComplexCosheafMorphism) -> Result<ComplexCosheafMorphism> {
        if first.target != self.source {
            return Err(Error::EndpointMismatch(
                "cosheaf morphisms are not composable".into(),
            ));
        }
        let base_vertex_map = first
            .base_vertex_map
            .iter()
            .map(|(&k, v)| (k, self.base_vertex_map[v]))
            .collect();
        let components = first
            .components
            .iter()
            .zip(&first.base_map)
            .map(|(inner, &j)| {
                inner
                    .iter()
                    .map(|(&k, v)| (k, self.components[j][v]))
                    .collect()
            })
            .collect();
        Self::new(
            first.source.clone(),
            self.target.clone(),
            base_vertex_map,
            components,
        )
    }

    /// The glued fiber map on the global cosection complex. Fails if two
    /// components disagree on a shared vertex.
    pub fn cosection_vertex_map(&self) -> Result<VertexMap> {
        let mut glued = VertexMap::new();
        for comp in &self.components {
            for (&k, &v) in comp {
                if *glued.entry(k).or_insert(v) != v {
                    return Err(Error::InvalidMorphism(format!(
                        "components disagree at {}",
                        self.source.fiber.label(k)
                    )));
                }
            }
        }
        Ok(glued)
    }

    /// `Dual(m)`: the base map is the glued fiber map, and each component is
    /// the base vertex map restricted to the dual costalk.
    pub fn dual(&self) -> Result<ComplexCosheafMorphism> {
        let source = dual(&self.source);
        let target = dual(&self.target);
        let base_vertex_map = self.cosection_vertex_map()?;
        let components = source
            .costalks
            .iter()
            .map(|k| {
                k.vertices()
                    .into_iter()
                    .map(|v| (v, self.base_vertex_map[&v]))
                    .collect()
            })
            .collect();
        Self::new(source, target, base_vertex_map, components)
    }
}

/// The morphism `CoShvRep(m)` with base map `f` and components `g|Y_σ`.
pub fn induced_complex_cosheaf_morphism(m: &RelMorphism) -> ComplexCosheafMorphism {
    let source = coshv_rep(m.source());
    let target = coshv_rep(m.target());
    let base_vertex_map = m.f().iter().copied().enumerate().collect();
    let components = source
        .costalks
        .iter()
        .map(|k| k.vertices().into_iter().map(|y| (y, m.g()[y])).collect())
        .collect();
    ComplexCosheafMorphism::new(source, target, base_vertex_map, components)
        .expect("relation morphisms induce cosheaf morphisms")
}
