//! Dowker complexes of finite binary relations, their weight functions,
//! and their cosheaf and sheaf representations.

pub mod complex;
pub mod cosheaf;
pub mod dot;
pub mod duality;
pub mod error;
pub mod format;
pub mod homology;
pub mod labels;
pub mod linalg;
pub mod redundancy;
pub mod relation;
pub mod sheaf;
pub mod weights;

pub use complex::{
    dowker, face_poset, induced_simplicial_map, pos_rep, y_sigma, FacePoset, Simplex,
    SimplicialComplex, SimplicialMap,
};
pub use cosheaf::{
    coshv_rep0, faithfulness_witness, global_cosections, induced_cosheaf_morphism0, CosectionSet,
    SetCosheaf, SetCosheafMorphism,
};
pub use duality::{
    check_dowker_duality, cosections_over, coshv_rep, dual, global_cosection_complex,
    induced_complex_cosheaf_morphism, ComplexCosheaf, ComplexCosheafMorphism, DualityCertificate,
};
pub use error::{Axis, Error, Result};
pub use homology::{betti, boundary_matrix, BettiVector, Gf2Matrix};
pub use labels::LabelSet;
pub use redundancy::{
    redundancy_cosheaf, redundant_rows, try_induced_redundancy_morphism, Obstruction,
    RedundancyMorphism, RedundancyReport,
};
pub use relation::{RelMorphism, Relation};
pub use sheaf::{
    induced_sheaf_morphism0, sheaf_global_sections, shv_rep0, ModuleSheaf, SectionBasis,
    SheafMorphism,
};
pub use weights::{
    differential_weight, reconstruct_from_differential, reconstruct_from_total, total_weight,
    WeightFunction, WeightKind,
};
