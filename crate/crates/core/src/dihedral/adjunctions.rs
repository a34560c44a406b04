//! Units and counits of the four adjoint pairs: the stalk inclusion against
//! its projection (both ways), the infinity inclusion against its projection,
//! and the constant functor against truncated fixed global sections.

use std::collections::BTreeMap;

use crate::dg::{ChainMap, DgModule};
use crate::linalg::QMatrix;

use super::boxplus::boxplus_fixed;
use super::object::{at_infinity, at_stalk, constant, DihedralObject};
use super::DihedralMorphism;

/// Counit of the stalk adjunction: i_k p_k V -> V, identity at position k.
pub fn stalk_counit(k: usize, v: &DihedralObject) -> DihedralMorphism {
    let src = at_stalk(k, v.stalk_at(k));
    let window = k.max(v.window());
    let mut stalks = Vec::with_capacity(window);
    for j in 1..=window {
        if j == k {
            stalks.push(ChainMap::identity(v.stalk_at(k)));
        } else {
            stalks.push(ChainMap::zero(
                src.stalk_at(j).clone(),
                v.stalk_at(j).clone(),
            ));
        }
    }
    let f_tail = ChainMap::zero(src.tail().clone(), v.tail().clone());
    let f_inf = ChainMap::zero(src.infinity().clone(), v.infinity().clone());
    DihedralMorphism::new(src, v.clone(), stalks, f_tail, f_inf).expect("counit is a morphism")
}

/// Unit of the other stalk adjunction: V -> i_k p_k V.
pub fn stalk_unit(k: usize, v: &DihedralObject) -> DihedralMorphism {
    let tgt = at_stalk(k, v.stalk_at(k));
    let window = k.max(v.window());
    let mut stalks = Vec::with_capacity(window);
    for j in 1..=window {
        if j == k {
            stalks.push(ChainMap::identity(v.stalk_at(k)));
        } else {
            stalks.push(ChainMap::zero(
                v.stalk_at(j).clone(),
                tgt.stalk_at(j).clone(),
            ));
        }
    }
    let f_tail = ChainMap::zero(v.tail().clone(), tgt.tail().clone());
    let f_inf = ChainMap::zero(v.infinity().clone(), tgt.infinity().clone());
    DihedralMorphism::new(v.clone(), tgt, stalks, f_tail, f_inf).expect("unit is a morphism")
}

/// Unit of the infinity adjunction: V -> i_inf p_inf V.
pub fn infinity_unit(v: &DihedralObject) -> DihedralMorphism {
    let tgt = at_infinity(v.infinity());
    let stalks = (1..=v.window())
        .map(|j| ChainMap::zero(v.stalk_at(j).clone(), tgt.stalk_at(j).clone()))
        .collect();
    let f_tail = ChainMap::zero(v.tail().clone(), tgt.tail().clone());
    let f_inf = ChainMap::identity(v.infinity());
    DihedralMorphism::new(v.clone(), tgt, stalks, f_tail, f_inf).expect("unit is a morphism")
}

/// Unit of the constant/global-sections adjunction at a cutoff:
/// M -> truncation of the fixed box-plus of cM, the diagonal.
pub fn sections_unit(m: &DgModule, cutoff: usize) -> ChainMap {
    let cm = constant(m);
    let bp = boxplus_fixed(1, &cm, cutoff);
    let mut eta = bp.injections[0].clone();
    for k in 1..=cutoff {
        let part = &bp.window_parts[k - 1];
        let (_, incl) = cm.stalk_at(k).fixed_points();
        let mut comps = BTreeMap::new();
        for &n in m.support().iter() {
            if part.dim(n) == 0 {
                continue;
            }
            let c = incl[&n]
                .solve_matrix(&QMatrix::identity(m.dim(n)))
                .expect("trivial involution fixes everything");
            comps.insert(n, c);
        }
        let diag = ChainMap::new(m.clone(), part.clone(), comps).expect("diagonal is a chain map");
        eta = eta.add(&bp.injections[k].compose(&diag).expect("summand endpoints"));
    }
    eta
}

/// Counit of the constant/global-sections adjunction at a cutoff:
/// c(truncation) -> V.
pub fn sections_counit(v: &DihedralObject, cutoff: usize) -> (DihedralObject, DihedralMorphism) {
    let bp = boxplus_fixed(1, v, cutoff);
    let t = bp.truncation.clone();
    let ct = constant(&t);
    let mut stalks = Vec::with_capacity(cutoff);
    for k in 1..=cutoff {
        let part = &bp.window_parts[k - 1];
        let (_, incl) = v.stalk_at(k).fixed_points();
        let mut comps = BTreeMap::new();
        for &n in t.support().iter() {
            if part.dim(n) == 0 || v.stalk_at(k).dim(n) == 0 {
                continue;
            }
            let m = incl[&n].matmul(&bp.projections[k].component(n));
            if !m.is_zero() {
                comps.insert(n, m);
            }
        }
        stalks.push(
            ChainMap::new(ct.stalk_at(k).clone(), v.stalk_at(k).clone(), comps)
                .expect("projection lands in the fixed points"),
        );
    }
    let mut tail_comps = BTreeMap::new();
    for &n in t.support().iter() {
        let m = v.sigma(n).matmul(&bp.projections[0].component(n));
        if !m.is_zero() {
            tail_comps.insert(n, m);
        }
    }
    let f_tail = ChainMap::new(ct.tail().clone(), v.tail().clone(), tail_comps)
        .expect("germ map lands in the fixed points");
    let f_inf = ChainMap::new(
        ct.infinity().clone(),
        v.infinity().clone(),
        bp.projections[0].components().clone(),
    )
    .expect("projection is a chain map");
    let eps = DihedralMorphism::new(ct.clone(), v.clone(), stalks, f_tail, f_inf)
        .expect("counit is a morphism");
    (ct, eps)
}
