//! The redundancy cosheaf and redundant-row detection.
//!
//! The costalk at `σ` is the Dowker complex of the columns `Y_σ` against the
//! rows outside `σ`. It is not functorial in the relation, so inducing a
//! morphism can fail; that failure is returned as a value.

use std::collections::BTreeSet;

use crate::complex::{dowker, face_poset, y_sigma, Simplex, SimplicialComplex};
use crate::duality::{ComplexCosheaf, ComplexCosheafMorphism};
use crate::error::Result;
use crate::relation::{RelMorphism, Relation};

pub fn redundancy_costalk(r: &Relation, s: &Simplex) -> Result<SimplicialComplex> {
    let ys = y_sigma(r, s)?;
    let gens: Vec<Simplex> = (0..r.nx())
        .filter(|x| !s.contains(*x))
        .map(|x| {
            r.row_support(x)
                .intersection(&ys)
                .copied()
                .collect::<Simplex>()
        })
        .filter(|g| !g.is_empty())
        .collect();
    SimplicialComplex::from_generators(r.y_labels().clone(), gens)
}

pub fn redundancy_cosheaf(r: &Relation) -> ComplexCosheaf {
    let base = face_poset(&dowker(r));
    let costalks = base
        .elements()
        .iter()
        .map(|s| redundancy_costalk(r, s).expect("base simplices are rows of r"))
        .collect();
    ComplexCosheaf::new(base, r.y_labels().clone(), costalks)
        .expect("redundancy extensions are inclusions")
}

/// A simplex where no component can exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub simplex: String,
    pub image: String,
    /// A face of the domain costalk whose image misses the target costalk.
    pub face: Vec<String>,
    pub domain: SimplicialComplex,
    pub target: SimplicialComplex,
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "no component at [{}]: [{}] has no image in the costalk at [{}]",
            self.simplex,
            self.face.join(","),
            self.image
        )?;
        if self.target.is_empty() {
            write!(f, ", which is empty")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum RedundancyMorphism {
    Morphism(ComplexCosheafMorphism),
    Obstruction(Obstruction),
}

/// Components are `g` restricted to each costalk. The first base simplex
/// (canonical order) with a face that `g` sends outside the target costalk
/// is reported.
pub fn try_induced_redundancy_morphism(m: &RelMorphism) -> RedundancyMorphism {
    let source = redundancy_cosheaf(m.source());
    let target = redundancy_cosheaf(m.target());
    let sx = m.source().x_labels();
    let tx = m.target().x_labels();
    let mut components = Vec::with_capacity(source.base().len());
    for (i, s) in source.base().elements().iter().enumerate() {
        let comp = source
            .costalk(i)
            .vertices()
            .into_iter()
            .map(|y| (y, m.g()[y]))
            .collect();
        let img: Simplex = s.vertices().iter().map(|&x| m.f()[x]).collect();
        let tk = target.costalk_at(&img).expect("D(f) is simplicial");
        if let Some(face) = ComplexCosheafMorphism::first_failure(source.costalk(i), tk, &comp) {
            return RedundancyMorphism::Obstruction(Obstruction {
                simplex: s.key(sx),
                image: img.key(tx),
                face: face.label_vec(m.source().y_labels()),
                domain: source.costalk(i).clone(),
                target: tk.clone(),
            });
        }
        components.push(comp);
    }
    let base_vertex_map = m.f().iter().copied().enumerate().collect();
    let morphism = ComplexCosheafMorphism::new(source, target, base_vertex_map, components)
        .expect("restrictions of g commute with inclusions");
    RedundancyMorphism::Morphism(morphism)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RedundantRow {
    pub row: String,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct RedundancyReport {
    /// Rows whose support is a proper subset of another row's support.
    pub redundant_rows: Vec<RedundantRow>,
    /// Groups of two or more rows with equal supports.
    pub duplicates: Vec<Vec<String>>,
}

impl RedundancyReport {
    pub fn is_empty(&self) -> bool {
        self.redundant_rows.is_empty()
    }
}

/// Pairwise support comparison. The witness is a largest dominating row,
/// earliest on ties.
pub fn redundant_rows(r: &Relation) -> RedundancyReport {
    let supports: Vec<BTreeSet<usize>> = (0..r.nx()).map(|x| r.row_support(x)).collect();
    let proper = |a: usize, b: usize| {
        supports[a].len() < supports[b].len() && supports[a].is_subset(&supports[b])
    };
    let mut report = RedundancyReport::default();
    for x in 0..r.nx() {
        let witness = (0..r.nx())
            .filter(|&w| proper(x, w))
            .max_by_key(|&w| (supports[w].len(), std::cmp::Reverse(w)));
        if let Some(w) = witness {
            report.redundant_rows.push(RedundantRow {
                row: r.x_labels().label(x).to_string(),
                witness: r.x_labels().label(w).to_string(),
            });
        }
    }
    let mut seen = vec![false; r.nx()];
    for x in 0..r.nx() {
        if seen[x] {
            continue;
        }
        let group: Vec<usize> = (x..r.nx())
            .filter(|&w| supports[w] == supports[x])
            .collect();
        for &w in &group {
            seen[w] = true;
        }
        if group.len() > 1 {
            report.duplicates.push(
                group
                    .iter()
                    .map(|&w| r.x_labels().label(w).to_string())
                    .collect(),
            );
        }
    }
    report
}
