use std::collections::BTreeMap;

use crate::linalg::QMatrix;

use super::{ChainMap, DgModule};

/// Ground ring for generating (acyclic) cofibrations: Q, or QW with the free
/// order-two action.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ring {
    Q,
    QW,
}

/// The swap involution on QW as a rank-one free module.
pub fn swap2() -> QMatrix {
    QMatrix::from_int_rows(&[&[0, 1], &[1, 0]])
}

/// Sphere: one copy of the ground ring in degree `deg`, zero differential.
pub fn sphere(ring: Ring, deg: i32) -> DgModule {
    match ring {
        Ring::Q => DgModule::single(deg, 1),
        Ring::QW => DgModule::single_w(deg, swap2()),
    }
}

/// Disk: ground ring in degrees `deg` and `deg - 1` with identity
/// differential; acyclic.
pub fn disk(ring: Ring, deg: i32) -> DgModule {
    let rank = match ring {
        Ring::Q => 1,
        Ring::QW => 2,
    };
    let mut dims = BTreeMap::new();
    dims.insert(deg, rank);
    dims.insert(deg - 1, rank);
    let mut d = BTreeMap::new();
    d.insert(deg, QMatrix::identity(rank));
    match ring {
        Ring::Q => DgModule::new(dims, d).expect("disk is a complex"),
        Ring::QW => {
            let mut w = BTreeMap::new();
            w.insert(deg, swap2());
            w.insert(deg - 1, swap2());
            DgModule::new_w(dims, d, w).expect("disk is a complex")
        }
    }
}

/// Boundary inclusion sphere(deg - 1) -> disk(deg).
pub fn boundary_inclusion(ring: Ring, deg: i32) -> ChainMap {
    let s = sphere(ring, deg - 1);
    let d = disk(ring, deg);
    let rank = match ring {
        Ring::Q => 1,
        Ring::QW => 2,
    };
    let mut comps = BTreeMap::new();
    comps.insert(deg - 1, QMatrix::identity(rank));
    ChainMap::new(s, d, comps).expect("boundary inclusion is a chain map")
}

/// Generating cofibrations (sphere -> disk) and acyclic cofibrations
/// (0 -> disk) for disks with top degree in the given range. The sphere at
/// the bottom of the range is taken to be zero, so the lowest cofibration
/// coincides with the acyclic one.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub cofibrations: Vec<ChainMap>,
    pub acyclic_cofibrations: Vec<ChainMap>,
}

impl GeneratorSet {
    pub fn all(&self) -> impl Iterator<Item = &ChainMap> {
        self.cofibrations.iter().chain(self.acyclic_cofibrations.iter())
    }
}

pub fn generators(min_deg: i32, max_deg: i32, ring: Ring) -> GeneratorSet {
    assert!(min_deg <= max_deg, "empty degree range");
    let mut cofibrations = Vec::new();
    let mut acyclic_cofibrations = Vec::new();
    for n in min_deg..=max_deg {
        let dn = disk(ring, n);
        if n == min_deg {
            let zero = DgModule::zero_module(ring == Ring::QW);
            cofibrations.push(ChainMap::zero(zero, dn.clone()));
        } else {
            cofibrations.push(boundary_inclusion(ring, n));
        }
        let zero = DgModule::zero_module(ring == Ring::QW);
        acyclic_cofibrations.push(ChainMap::zero(zero, dn));
    }
    GeneratorSet {
        cofibrations,
        acyclic_cofibrations,
    }
}
