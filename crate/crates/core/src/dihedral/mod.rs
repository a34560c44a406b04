//! The representable model of the dihedral diagram category: objects carry
//! finitely many explicit stalks, an eventually-constant tail, an infinity
//! part, and a germ map into the tail. Morphisms are windowed families
//! satisfying the germ condition. On top of the raw category: truncated
//! box-plus functors, adjunctions, finite (co)limits, the closed symmetric
//! monoidal structure, and the model-structure apparatus.

mod adjunctions;
mod object;
mod morphism;
mod boxplus;
mod homs;
mod tensor;
mod limits;
mod model;


pub use adjunctions::{infinity_unit, sections_counit, sections_unit, stalk_counit, stalk_unit};
pub use boxplus::{boxplus, boxplus_fixed, boxplus_map, boxplus_splitting, boxplus_transition, BoxPlusDecomposition};
pub use homs::{germ_pairs, hom_growth, hom_space, HomGrowth};
pub use limits::{filtered_colimit, finite_colimit, finite_limit, pullback, pushout, ColimitResult, Diagram, FilteredColimit, LimitResult};
pub use model::{
    cone_object, constant_morphism, generating_maps, infinity_morphism, llp_solve_model,
    pushout_product, stalk_morphism, verify_certificate, CellCertificate, GeneratingMap,
    GeneratingMaps, PushoutProduct,
};
pub use morphism::DihedralMorphism;
pub use object::{at_infinity, at_stalk, constant, homology_object, DihedralObject};
pub use tensor::{
    associator_object, braiding_object, hom_internal, tensor, tensor_morphism, unit_left,
    unit_right, unit_object,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DihedralError {
    #[error("stalk {k} must carry an involution")]
    StalkNotEquivariant { k: usize },
    #[error("the tail must carry an involution")]
    TailNotEquivariant,
    #[error("the infinity part must not carry an involution")]
    InfinityEquivariant,
    #[error("sigma at degree {degree} has the wrong shape")]
    SigmaShape { degree: i32 },
    #[error("sigma does not commute with the differentials at degree {degree}")]
    SigmaNotChain { degree: i32 },
    #[error("sigma does not land in the fixed points at degree {degree}")]
    SigmaNotFixed { degree: i32 },
    #[error("morphism window is smaller than an endpoint window")]
    MorphismWindow,
    #[error("morphism component {which} has wrong endpoints")]
    ComponentEndpoints { which: String },
    #[error("germ condition fails at degree {degree}")]
    GermCondition { degree: i32 },
    #[error("morphisms do not compose: middle objects differ")]
    ComposeMismatch,
    #[error("internal hom source is neither tail-reduced nor zero-tailed; the hom leaves the representable class")]
    NonRepresentableHom,
    #[error("lifting square does not commute")]
    NonCommutingSquare,
    #[error("lifting square sides do not match the given maps")]
    SquareShape,
    #[error("diagram arrow {index} has endpoints outside the diagram")]
    BadDiagramArrow { index: usize },
    #[error("the maps at position {index} do not form a cocone over the diagram")]
    NotACocone { index: usize },
    #[error("the maps at position {index} do not form a cone over the diagram")]
    NotACone { index: usize },
    #[error(transparent)]
    Dg(#[from] super::dg::DgError),
}
