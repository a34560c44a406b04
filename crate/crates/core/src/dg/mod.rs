//! Bounded chain complexes over Q, optionally carrying an order-two
//! involution (a W-action), with homology, tensor/hom, cones, model-structure
//! generators, and a lifting-problem solver.

mod module;
mod map;
mod homology;
mod tensor;
mod homcx;
mod cone;
mod generators;
mod lifting;

pub use cone::{mapping_cone, mapping_cylinder, Cylinder};
pub use generators::{boundary_inclusion, disk, generators, sphere, GeneratorSet, Ring};
pub use homcx::HomComplex;
pub use homology::Homology;
pub use lifting::llp_solve;
pub use map::ChainMap;
pub use module::DgModule;
pub use tensor::{associator, braiding, left_unit, right_unit, tensor_map, TensorProduct};

#[cfg(test)]
mod tests;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DgError {
    #[error("differential at degree {degree} has shape {got:?}, expected {expected:?}")]
    DifferentialShape {
        degree: i32,
        got: (usize, usize),
        expected: (usize, usize),
    },
    #[error("d^2 != 0 entering degree {degree}")]
    DSquared { degree: i32 },
    #[error("involution at degree {degree} has wrong shape")]
    InvolutionShape { degree: i32 },
    #[error("involution at degree {degree} does not square to the identity")]
    InvolutionNotInvolutive { degree: i32 },
    #[error("involution does not commute with the differential at degree {degree}")]
    InvolutionDifferential { degree: i32 },
    #[error("chain map component at degree {degree} has wrong shape")]
    ComponentShape { degree: i32 },
    #[error("components do not commute with differentials at degree {degree}")]
    NotChainMap { degree: i32 },
    #[error("components do not commute with the involutions at degree {degree}")]
    NotEquivariant { degree: i32 },
    #[error("source and target disagree about carrying an involution")]
    EquivarianceMismatch,
    #[error("maps do not compose: inner modules differ")]
    ComposeMismatch,
    #[error("lifting square does not commute")]
    NonCommutingSquare,
    #[error("lifting square sides do not match the given maps")]
    SquareShape,
}
