use std::collections::BTreeMap;

use crate::dg::{ChainMap, DgModule};
use crate::linalg::QMatrix;

use super::{DihedralMorphism, DihedralObject};

/// Truncated global-sections functor. The full object is the union over
/// cutoffs of
///   T_K = { (v, x_N..x_K) : v in V_infinity, x_k in V_k },
/// sequences beyond K being pinned to sigma(v). In these coordinates the
/// truncation is a plain biproduct; all the germ structure lives in the
/// section and in the maps that change N or K. `fixed` marks the W-fixed
/// variant: stalk summands are replaced by their fixed subcomplexes and the
/// truncation is a plain complex.
#[derive(Clone, Debug)]
pub struct BoxPlusDecomposition {
    pub start: usize,
    pub cutoff: usize,
    pub fixed: bool,
    pub infinity_part: DgModule,
    pub window_parts: Vec<DgModule>,
    pub tail_marker: DgModule,
    pub truncation: DgModule,
    /// Injections of [infinity_part, window_parts...] into the truncation.
    pub injections: Vec<ChainMap>,
    /// Matching projections.
    pub projections: Vec<ChainMap>,
    /// The splitting v -> (v, 0 .. 0, sigma v .. sigma v): zero within the
    /// object's window, the constant germ value beyond it.
    pub section: ChainMap,
}

fn sigma_into_part(v: &DihedralObject, k: usize, fixed: bool, part: &DgModule, inf: &DgModule) -> ChainMap {
    // Component of the section hitting position k: zero inside the window,
    // sigma beyond it.
    if k <= v.window() {
        return ChainMap::zero(inf.clone(), part.clone());
    }
    let mut comps: BTreeMap<i32, QMatrix> = BTreeMap::new();
    if fixed {
        let (_, incl) = v.tail().fixed_points();
        for &n in v.infinity().support().iter() {
            let s = v.sigma(n);
            if s.is_zero() || part.dim(n) == 0 {
                continue;
            }
            let coords = incl[&n]
                .solve_matrix(&s)
                .expect("sigma lands in the fixed points");
            comps.insert(n, coords);
        }
    } else {
        for &n in v.infinity().support().iter() {
            comps.insert(n, v.sigma(n));
        }
    }
    ChainMap::new(inf.clone(), part.clone(), comps).expect("sigma is a chain map into the tail")
}

fn build(n: usize, v: &DihedralObject, cutoff: usize, fixed: bool) -> BoxPlusDecomposition {
    assert!(n >= 1, "box-plus starts at position 1");
    assert!(cutoff >= v.window(), "cutoff below the object window");
    assert!(cutoff + 1 >= n, "cutoff too small for the start position");

    let infinity_part = if fixed {
        v.infinity().clone()
    } else {
        v.infinity().with_trivial_involution()
    };
    let mut window_parts = Vec::new();
    for k in n..=cutoff {
        let part = if fixed {
            v.stalk_at(k).fixed_points().0
        } else {
            v.stalk_at(k).clone()
        };
        window_parts.push(part);
    }
    let tail_marker = if fixed {
        v.tail().fixed_points().0
    } else {
        v.tail().clone()
    };

    let mut summands: Vec<&DgModule> = vec![&infinity_part];
    summands.extend(window_parts.iter());
    let (truncation, injections, projections) = DgModule::direct_sum(&summands);

    let mut section = injections[0].clone();
    for (idx, k) in (n..=cutoff).enumerate() {
        let comp = sigma_into_part(v, k, fixed, &window_parts[idx], &infinity_part);
        section = section.add(&injections[idx + 1].compose(&comp).expect("summand endpoints match"));
    }

    BoxPlusDecomposition {
        start: n,
        cutoff,
        fixed,
        infinity_part,
        window_parts,
        tail_marker,
        truncation,
        injections,
        projections,
        section,
    }
}

/// Truncation of box-plus_N at the cutoff, with its W-action.
pub fn boxplus(n: usize, v: &DihedralObject, cutoff: usize) -> BoxPlusDecomposition {
    build(n, v, cutoff, false)
}

/// W-fixed truncation: infinity part unchanged, stalk summands replaced by
/// their fixed subcomplexes.
pub fn boxplus_fixed(n: usize, v: &DihedralObject, cutoff: usize) -> BoxPlusDecomposition {
    build(n, v, cutoff, true)
}

/// Functoriality on morphisms: in split coordinates box-plus_N(f) is the
/// block diagonal of f_infinity and the stalk maps.
pub fn boxplus_map(n: usize, f: &DihedralMorphism, cutoff: usize, fixed: bool) -> ChainMap {
    let src = build(n, f.source(), cutoff, fixed);
    let tgt = build(n, f.target(), cutoff, fixed);
    let inf_map = if fixed {
        f.infinity_component().clone()
    } else {
        trivial_equivariant(f.infinity_component())
    };
    let mut out = tgt.injections[0]
        .compose(&inf_map)
        .expect("infinity endpoints match")
        .compose(&src.projections[0])
        .expect("infinity endpoints match");
    for (idx, k) in (n..=cutoff).enumerate() {
        let comp = if fixed {
            f.stalk_component(k).fixed_restriction()
        } else {
            f.stalk_component(k).clone()
        };
        let piece = tgt.injections[idx + 1]
            .compose(&comp)
            .expect("stalk endpoints match")
            .compose(&src.projections[idx + 1])
            .expect("stalk endpoints match");
        out = out.add(&piece);
    }
    out
}

pub(crate) fn trivial_equivariant(f: &ChainMap) -> ChainMap {
    ChainMap::new(
        f.source().with_trivial_involution(),
        f.target().with_trivial_involution(),
        f.components().clone(),
    )
    .expect("trivial actions commute with everything")
}

/// The split isomorphism box-plus_1 V = box-plus_N V + V_1 + .. + V_{N-1}
/// at a shared cutoff: mutually inverse chain maps in the split coordinates.
pub fn boxplus_splitting(
    n: usize,
    v: &DihedralObject,
    cutoff: usize,
    fixed: bool,
) -> (ChainMap, ChainMap) {
    assert!(n >= 1);
    let whole = build(1, v, cutoff, fixed);
    let upper = build(n, v, cutoff, fixed);
    let mut lower_parts: Vec<DgModule> = Vec::new();
    for k in 1..n {
        lower_parts.push(if fixed {
            v.stalk_at(k).fixed_points().0
        } else {
            v.stalk_at(k).clone()
        });
    }
    let mut summands: Vec<&DgModule> = vec![&upper.truncation];
    summands.extend(lower_parts.iter());
    let (_, rhs_inj, rhs_proj) = DgModule::direct_sum(&summands);

    // whole = infinity + V_1 .. V_cutoff; rhs = (infinity + V_n .. V_cutoff)
    // + V_1 .. V_{n-1}. Forward: route each summand of whole to its slot.
    let mut forward = rhs_inj[0]
        .compose(&upper.injections[0])
        .expect("infinity slots match")
        .compose(&whole.projections[0])
        .expect("infinity slots match");
    let mut backward = whole.injections[0]
        .compose(&upper.projections[0])
        .expect("infinity slots match")
        .compose(&rhs_proj[0])
        .expect("infinity slots match");
    for k in 1..=cutoff {
        let (to_rhs, from_rhs) = if k >= n {
            let idx = k - n + 1;
            (
                rhs_inj[0].compose(&upper.injections[idx]).expect("slot"),
                upper.projections[idx].compose(&rhs_proj[0]).expect("slot"),
            )
        } else {
            let idx = k; // rhs summand index for V_k, k < n
            (rhs_inj[idx].clone(), rhs_proj[idx].clone())
        };
        let fwd_piece = to_rhs.compose(&whole.projections[k]).expect("slot");
        forward = forward.add(&fwd_piece);
        let bwd_piece = whole.injections[k].compose(&from_rhs).expect("slot");
        backward = backward.add(&bwd_piece);
    }
    (forward, backward)
}

/// Canonical map box-plus_N -> box-plus_{N+1} at a shared cutoff: drop the
/// coordinate at position N.
pub fn boxplus_transition(n: usize, v: &DihedralObject, cutoff: usize, fixed: bool) -> ChainMap {
    let src = build(n, v, cutoff, fixed);
    let tgt = build(n + 1, v, cutoff, fixed);
    let mut out = tgt.injections[0]
        .compose(&src.projections[0])
        .expect("infinity slots match");
    for k in (n + 1)..=cutoff {
        let piece = tgt.injections[k - n]
            .compose(&src.projections[k - n + 1])
            .expect("slots match");
        out = out.add(&piece);
    }
    out
}
