//! Sheaves of free ℤ-modules on face posets.
//!
//! A stalk is free on an ordered list of fiber ids. Restrictions run up the
//! order, `stalk(σ) -> stalk(τ)` for `σ ≤ τ`, and are stored on covers as
//! 0/1 matrices with at most one nonzero per column.

use std::collections::BTreeMap;

use nalgebra::DMatrix;

use crate::complex::{dowker, face_poset, induced_simplicial_map, y_sigma, FacePoset};
use crate::error::{Error, Result};
use crate::labels::LabelSet;
use crate::linalg::kernel_basis;
use crate::relation::{RelMorphism, Relation};

pub type Matrix = DMatrix<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSheaf {
    base: FacePoset,
    fiber: LabelSet,
    bases: Vec<Vec<usize>>,
    restrictions: BTreeMap<(usize, usize), Matrix>,
}

impl ModuleSheaf {
    pub fn new(
        base: FacePoset,
        fiber: LabelSet,
        bases: Vec<Vec<usize>>,
        restrictions: BTreeMap<(usize, usize), Matrix>,
    ) -> Result<Self> {
        if bases.len() != base.len() {
            return Err(Error::InvalidSheaf(format!(
                "{} stalks for {} base elements",
                bases.len(),
                base.len()
            )));
        }
        let keys: Vec<(usize, usize)> = restrictions.keys().copied().collect();
        if keys != base.covers() {
            return Err(Error::InvalidSheaf(
                "restrictions must be given on exactly the Hasse covers".into(),
            ));
        }
        for (&(lo, hi), m) in &restrictions {
            let name = base.element(lo).display(base.universe()).to_string();
            if m.nrows() != bases[hi].len() || m.ncols() != bases[lo].len() {
                return Err(Error::InvalidSheaf(format!(
                    "restriction from [{name}] has shape {}x{}",
                    m.nrows(),
                    m.ncols()
                )));
            }
            let projection_like = m.iter().all(|&v| v == 0 || v == 1)
                && m.column_iter()
                    .all(|c| c.iter().filter(|&&v| v == 1).count() <= 1);
            if !projection_like {
                return Err(Error::InvalidSheaf(format!(
                    "restriction from [{name}] is not a coordinate projection"
                )));
            }
        }
        let s = Self {
            base,
            fiber,
            bases,
            restrictions,
        };
        for hi in 0..s.base.len() {
            let mids = s.base.lower_covers(hi);
            for (a, &m1) in mids.iter().enumerate() {
                for &m2 in &mids[a + 1..] {
                    for &lo in s.base.lower_covers(m1) {
                        if s.base.lower_covers(m2).contains(&lo)
                            && &s.restrictions[&(m1, hi)] * &s.restrictions[&(lo, m1)]
                                != &s.restrictions[&(m2, hi)] * &s.restrictions[&(lo, m2)]
                        {
                            return Err(Error::InvalidSheaf("composition law fails".into()));
                        }
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn base(&self) -> &FacePoset {
        &self.base
    }

    pub fn fiber(&self) -> &LabelSet {
        &self.fiber
    }

    pub fn stalk_basis(&self, i: usize) -> &[usize] {
        &self.bases[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.bases[i].len()
    }

    /// The restriction `stalk(lo) -> stalk(hi)` for `lo ≤ hi`.
    pub fn restriction(&self, lo: usize, hi: usize) -> Option<Matrix> {
        let chain = self.base.chain(lo, hi)?;
        let n = self.bases[lo].len();
        let mut m = Matrix::identity(n, n);
        for w in chain.windows(2) {
            m = &self.restrictions[&(w[0], w[1])] * m;
        }
        Some(m)
    }

    pub fn verify_composition_law(&self) -> bool {
        let n = self.base.len();
        (0..n).all(|x| {
            (0..n).all(|z| match self.restriction(x, z) {
                None => true,
                Some(xz) => (0..n)
                    .filter(|&y| self.base.leq(x, y) && self.base.leq(y, z))
                    .all(|y| {
                        self.restriction(y, z).unwrap() * self.restriction(x, y).unwrap() == xz
                    }),
            })
        })
    }
}

/// The sheaf `σ ↦ span Y_σ` with coordinate projections as restrictions.
pub fn shv_rep0(r: &Relation) -> ModuleSheaf {
    let base = face_poset(&dowker(r));
    let bases: Vec<Vec<usize>> = base
        .elements()
        .iter()
        .map(|s| {
            y_sigma(r, s)
                .expect("base simplices are rows of r")
                .into_iter()
                .collect()
        })
        .collect();
    let restrictions = base
        .covers()
        .iter()
        .map(|&(lo, hi)| {
            let (src, dst) = (&bases[lo], &bases[hi]);
            let m = Matrix::from_fn(dst.len(), src.len(), |i, j| i64::from(dst[i] == src[j]));
            ((lo, hi), m)
        })
        .collect();
    ModuleSheaf::new(base, r.y_labels().clone(), bases, restrictions)
        .expect("representation sheaves are valid")
}

/// A sheaf morphism `domain -> codomain` lying over a base map from the
/// codomain's poset to the domain's poset. Component `x` is a matrix
/// `stalk_domain(f(x)) -> stalk_codomain(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafMorphism {
    domain: ModuleSheaf,
    codomain: ModuleSheaf,
    base_map: Vec<usize>,
    components: Vec<Matrix>,
}

impl SheafMorphism {
    pub fn new(
        domain: ModuleSheaf,
        codomain: ModuleSheaf,
        base_map: Vec<usize>,
        components: Vec<Matrix>,
    ) -> Result<Self> {
        let n = codomain.base.len();
        if base_map.len() != n || components.len() != n {
            return Err(Error::InvalidMorphism(
                "base map and components must cover every base element".into(),
            ));
        }
        if base_map.iter().any(|&j| j >= domain.base.len()) {
            return Err(Error::InvalidMorphism(
                "base map leaves the domain poset".into(),
            ));
        }
        for (x, m) in components.iter().enumerate() {
            if m.nrows() != codomain.rank(x) || m.ncols() != domain.rank(base_map[x]) {
                return Err(Error::InvalidMorphism(format!(
                    "component {x} has shape {}x{}",
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        for &(lo, hi) in codomain.base.covers() {
            let name = || {
                codomain
                    .base
                    .element(lo)
                    .display(codomain.base.universe())
                    .to_string()
            };
            let Some(down) = domain.restriction(base_map[lo], base_map[hi]) else {
                return Err(Error::InvalidMorphism(format!(
                    "base map is not order preserving above [{}]",
                    name()
                )));
            };
            if &codomain.restrictions[&(lo, hi)] * &components[lo] != &components[hi] * down {
                return Err(Error::InvalidMorphism(format!(
                    "square at [{}] does not commute",
                    name()
                )));
            }
        }
        Ok(Self {
            domain,
            codomain,
            base_map,
            components,
        })
    }

    pub fn identity(s: &ModuleSheaf) -> Self {
        Self {
            domain: s.clone(),
            codomain: s.clone(),
            base_map: (0..s.base.len()).collect(),
            components: s
                .bases
                .iter()
                .map(|b| Matrix::identity(b.len(), b.len()))
                .collect(),
        }
    }

    pub fn domain(&self) -> &ModuleSheaf {
        &self.domain
    }

    pub fn codomain(&self) -> &ModuleSheaf {
        &self.codomain
    }

    pub fn base_map(&self) -> &[usize] {
        &self.base_map
    }

    pub fn component(&self, x: usize) -> &Matrix {
        &self.components[x]
    }

    /// `self ∘ before`, where `before` ends at this morphism's domain.
    pub fn compose(&self, before: &SheafMorphism) -> Result<SheafMorphism> {
        if before.codomain != self.domain {
            return Err(Error::EndpointMismatch(
                "sheaf morphisms are not composable".into(),
            ));
        }
        let base_map = self.base_map.iter().map(|&j| before.base_map[j]).collect();
        let components = self
            .components
            .iter()
            .zip(&self.base_map)
            .map(|(m, &j)| m * &before.components[j])
            .collect();
        SheafMorphism::new(
            before.domain.clone(),
            self.codomain.clone(),
            base_map,
            components,
        )
    }
}

/// For `m: r -> s`, the morphism `ℛ⁰(s) -> ℛ⁰(r)` sending a basis vector `z`
/// at `f(σ)` to the sum of its `g`-preimages in `Y_σ`.
pub fn induced_sheaf_morphism0(m: &RelMorphism) -> SheafMorphism {
    let codomain = shv_rep0(m.source());
    let domain = shv_rep0(m.target());
    let base_map = induced_simplicial_map(m).face_map(codomain.base(), domain.base());
    let components = (0..codomain.base.len())
        .map(|x| {
            let rows = codomain.stalk_basis(x);
            let cols = domain.stalk_basis(base_map[x]);
            Matrix::from_fn(rows.len(), cols.len(), |i, j| {
                i64::from(m.g()[rows[i]] == cols[j])
            })
        })
        .collect();
    SheafMorphism::new(domain, codomain, base_map, components)
        .expect("relation morphisms induce sheaf morphisms")
}

/// A basis of the module of global sections. Each vector concatenates the
/// stalk coordinates in base order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionBasis {
    offsets: Vec<usize>,
    vectors: Vec<Vec<i64>>,
}

impl SectionBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    /// Coordinates of basis vector `v` in the stalk at base element `x`.
    pub fn at(&self, v: usize, x: usize) -> &[i64] {
        &self.vectors[v][self.offsets[x]..self.offsets[x + 1]]
    }
}

/// Solves `ρ(σ ≤ τ) s_σ = s_τ` over every cover.
pub fn sheaf_global_sections(s: &ModuleSheaf) -> SectionBasis {
    let mut offsets = vec![0];
    for b in &s.bases {
        offsets.push(offsets.last().unwrap() + b.len());
    }
    let n = *offsets.last().unwrap();
    let neq: usize = s.base.covers().iter().map(|&(_, hi)| s.rank(hi)).sum();
    let mut a = Matrix::zeros(neq, n);
    let mut row = 0;
    for (&(lo, hi), m) in &s.restrictions {
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                a[(row + i, offsets[lo] + j)] = m[(i, j)];
            }
            a[(row + i, offsets[hi] + i)] -= 1;
        }
        row += m.nrows();
    }
    SectionBasis {
        offsets,
        vectors: kernel_basis(&a),
    }
}
