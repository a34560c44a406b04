use std::collections::BTreeMap;

use crate::dg::{generators, llp_solve, mapping_cone, ChainMap, Ring};
use crate::linalg::{MatrixSystem, QMatrix};

use super::boxplus::trivial_equivariant;
use super::limits::{finite_colimit, ColimitResult, Diagram};
use super::tensor::tensor_morphism;
use super::{at_infinity, at_stalk, constant, DihedralError, DihedralMorphism, DihedralObject};

/// Shape witness carried along with a relative cell: the cell stays inside
/// the constant objects, or inside the objects supported at one stalk.
/// Either class is closed under the cell attachments used here, which is what
/// makes cofibrancy checkable without a retract argument.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellCertificate {
    Constant,
    StalkSupported { k: usize },
}

impl CellCertificate {
    /// Certificate for a construction mixing two certified cells (tensor
    /// product, pushout corner): constants combine, a stalk support absorbs
    /// constants, distinct stalks do not mix.
    pub fn combine(self, other: CellCertificate) -> Option<CellCertificate> {
        use CellCertificate::*;
        match (self, other) {
            (Constant, Constant) => Some(Constant),
            (Constant, s @ StalkSupported { .. }) => Some(s),
            (s @ StalkSupported { .. }, Constant) => Some(s),
            (StalkSupported { k }, StalkSupported { k: l }) if k == l => {
                Some(StalkSupported { k })
            }
            _ => None,
        }
    }
}

/// Checks that a map really is a cell of the certified shape: degreewise
/// injective with both endpoints in the certified class. Constant cells must
/// in addition act identically on every stalk and the tail.
pub fn verify_certificate(map: &DihedralMorphism, certificate: CellCertificate) -> bool {
    if !map.is_degreewise_injective() {
        return false;
    }
    match certificate {
        CellCertificate::Constant => {
            map.source().is_constant_like()
                && map.target().is_constant_like()
                && (1..=map.window()).all(|k| map.stalk_component(k) == map.tail_component())
        }
        CellCertificate::StalkSupported { k } => {
            map.source().is_stalk_supported(k) && map.target().is_stalk_supported(k)
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneratingMap {
    pub label: String,
    pub map: DihedralMorphism,
    pub certificate: CellCertificate,
}

/// Generating cofibrations and acyclic cofibrations: constant cells over Q
/// and single-stalk cells over QW, one family per stalk position.
#[derive(Clone, Debug)]
pub struct GeneratingMaps {
    pub cofibrations: Vec<GeneratingMap>,
    pub acyclic_cofibrations: Vec<GeneratingMap>,
}

impl GeneratingMaps {
    pub fn all(&self) -> impl Iterator<Item = &GeneratingMap> {
        self.cofibrations
            .iter()
            .chain(self.acyclic_cofibrations.iter())
    }
}

/// Constant objects applied to a map of plain complexes.
pub fn constant_morphism(f: &ChainMap) -> DihedralMorphism {
    let src = constant(f.source());
    let tgt = constant(f.target());
    DihedralMorphism::new(src, tgt, Vec::new(), trivial_equivariant(f), f.clone())
        .expect("constant cell is a morphism")
}

/// Infinity objects applied to a map of plain complexes.
pub fn infinity_morphism(f: &ChainMap) -> DihedralMorphism {
    let src = at_infinity(f.source());
    let tgt = at_infinity(f.target());
    let f_tail = ChainMap::zero(src.tail().clone(), tgt.tail().clone());
    DihedralMorphism::new(src, tgt, Vec::new(), f_tail, f.clone())
        .expect("infinity cell is a morphism")
}

/// Stalk-k objects applied to a map of involutive complexes.
pub fn stalk_morphism(k: usize, f: &ChainMap) -> DihedralMorphism {
    let src = at_stalk(k, f.source());
    let tgt = at_stalk(k, f.target());
    let mut stalks = Vec::with_capacity(k);
    for j in 1..=k {
        if j == k {
            stalks.push(f.clone());
        } else {
            stalks.push(ChainMap::zero(
                src.stalk_at(j).clone(),
                tgt.stalk_at(j).clone(),
            ));
        }
    }
    let f_tail = ChainMap::zero(src.tail().clone(), tgt.tail().clone());
    let f_inf = ChainMap::zero(src.infinity().clone(), tgt.infinity().clone());
    DihedralMorphism::new(src, tgt, stalks, f_tail, f_inf).expect("stalk cell is a morphism")
}

pub fn generating_maps(min_deg: i32, max_deg: i32, max_stalk: usize) -> GeneratingMaps {
    let q = generators(min_deg, max_deg, Ring::Q);
    let w = generators(min_deg, max_deg, Ring::QW);
    let mut cofibrations = Vec::new();
    let mut acyclic_cofibrations = Vec::new();
    for (idx, f) in q.cofibrations.iter().enumerate() {
        let n = min_deg + idx as i32;
        let label = if n == min_deg {
            format!("c(0 -> D^{n})")
        } else {
            format!("c(S^{} -> D^{n})", n - 1)
        };
        cofibrations.push(GeneratingMap {
            label,
            map: constant_morphism(f),
            certificate: CellCertificate::Constant,
        });
    }
    for k in 1..=max_stalk {
        for (idx, f) in w.cofibrations.iter().enumerate() {
            let n = min_deg + idx as i32;
            let label = if n == min_deg {
                format!("i_{k}(0 -> D^{n}W)")
            } else {
                format!("i_{k}(S^{}W -> D^{n}W)", n - 1)
            };
            cofibrations.push(GeneratingMap {
                label,
                map: stalk_morphism(k, f),
                certificate: CellCertificate::StalkSupported { k },
            });
        }
    }
    for (idx, f) in q.acyclic_cofibrations.iter().enumerate() {
        let n = min_deg + idx as i32;
        acyclic_cofibrations.push(GeneratingMap {
            label: format!("c(0 -> D^{n})"),
            map: constant_morphism(f),
            certificate: CellCertificate::Constant,
        });
    }
    for k in 1..=max_stalk {
        for (idx, f) in w.acyclic_cofibrations.iter().enumerate() {
            let n = min_deg + idx as i32;
            acyclic_cofibrations.push(GeneratingMap {
                label: format!("i_{k}(0 -> D^{n}W)"),
                map: stalk_morphism(k, f),
                certificate: CellCertificate::StalkSupported { k },
            });
        }
    }
    GeneratingMaps {
        cofibrations,
        acyclic_cofibrations,
    }
}

/// Corner map of i and j: the induced map from the pushout of
/// B&#8855;X <- A&#8855;X -> A&#8855;Y into B&#8855;Y.
pub struct PushoutProduct {
    pub map: DihedralMorphism,
    pub corner: ColimitResult,
}

pub fn pushout_product(
    i: &DihedralMorphism,
    j: &DihedralMorphism,
) -> Result<PushoutProduct, DihedralError> {
    let id_a = DihedralMorphism::identity(i.source());
    let id_b = DihedralMorphism::identity(i.target());
    let id_x = DihedralMorphism::identity(j.source());
    let id_y = DihedralMorphism::identity(j.target());
    let i_x = tensor_morphism(i, &id_x);
    let a_j = tensor_morphism(&id_a, j);
    let d = Diagram::new(
        vec![
            i_x.source().clone(),
            i_x.target().clone(),
            a_j.target().clone(),
        ],
        vec![(0, 1, i_x), (0, 2, a_j)],
    )?;
    let corner = finite_colimit(&d)?;
    let legs = vec![
        tensor_morphism(i, j),
        tensor_morphism(&id_b, j),
        tensor_morphism(i, &id_y),
    ];
    let map = corner.factor(&legs)?;
    Ok(PushoutProduct { map, corner })
}

/// Solve the lifting problem
///
/// ```text
///   A --top--> X
///   |i         |p
///   v          v
///   B -bottom-> Y
/// ```
///
/// for h: B -> X with h . i = top and p . h = bottom. Stalk components are
/// independent lifting problems of complexes; the infinity and tail
/// components are coupled by the germ condition, so those two are solved as
/// one linear system. Returns Ok(None) when no lift exists.
pub fn llp_solve_model(
    i: &DihedralMorphism,
    p: &DihedralMorphism,
    top: &DihedralMorphism,
    bottom: &DihedralMorphism,
) -> Result<Option<DihedralMorphism>, DihedralError> {
    if top.source() != i.source()
        || top.target() != p.source()
        || bottom.source() != i.target()
        || bottom.target() != p.target()
    {
        return Err(DihedralError::SquareShape);
    }
    if p.compose(top)? != bottom.compose(i)? {
        return Err(DihedralError::NonCommutingSquare);
    }
    let b = i.target();
    let x = p.source();

    let window = i
        .window()
        .max(p.window())
        .max(top.window())
        .max(bottom.window());
    let mut stalks = Vec::with_capacity(window);
    for k in 1..=window {
        match llp_solve(
            i.stalk_component(k),
            p.stalk_component(k),
            top.stalk_component(k),
            bottom.stalk_component(k),
        )? {
            Some(h) => stalks.push(h),
            None => return Ok(None),
        }
    }

    let binf = b.infinity();
    let xinf = x.infinity();
    let bt = b.tail();
    let xt = x.tail();
    let mut degrees: Vec<i32> = binf.support();
    degrees.extend(xinf.support());
    degrees.extend(bt.support());
    degrees.extend(xt.support());
    let lows: Vec<i32> = degrees.iter().map(|&n| n - 1).collect();
    degrees.extend(lows);
    degrees.sort_unstable();
    degrees.dedup();

    let mut sys = MatrixSystem::new();
    let mut hinf: BTreeMap<i32, usize> = BTreeMap::new();
    let mut ht: BTreeMap<i32, usize> = BTreeMap::new();
    for &n in &degrees {
        hinf.insert(n, sys.add_unknown(xinf.dim(n), binf.dim(n)));
        ht.insert(n, sys.add_unknown(xt.dim(n), bt.dim(n)));
    }
    for &n in &degrees {
        let gn = hinf[&n];
        let tn = ht[&n];
        if let Some(&gprev) = hinf.get(&(n - 1)) {
            sys.equation(
                vec![
                    (gprev, QMatrix::identity(xinf.dim(n - 1)), binf.d(n)),
                    (gn, -&xinf.d(n), QMatrix::identity(binf.dim(n))),
                ],
                QMatrix::zero(xinf.dim(n - 1), binf.dim(n)),
            );
        }
        if let Some(&tprev) = ht.get(&(n - 1)) {
            sys.equation(
                vec![
                    (tprev, QMatrix::identity(xt.dim(n - 1)), bt.d(n)),
                    (tn, -&xt.d(n), QMatrix::identity(bt.dim(n))),
                ],
                QMatrix::zero(xt.dim(n - 1), bt.dim(n)),
            );
        }
        sys.equation(
            vec![
                (tn, QMatrix::identity(xt.dim(n)), bt.w(n)),
                (tn, -&xt.w(n), QMatrix::identity(bt.dim(n))),
            ],
            QMatrix::zero(xt.dim(n), bt.dim(n)),
        );
        sys.equation(
            vec![(
                gn,
                QMatrix::identity(xinf.dim(n)),
                i.infinity_component().component(n),
            )],
            top.infinity_component().component(n),
        );
        sys.equation(
            vec![(
                tn,
                QMatrix::identity(xt.dim(n)),
                i.tail_component().component(n),
            )],
            top.tail_component().component(n),
        );
        sys.equation(
            vec![(
                gn,
                p.infinity_component().component(n),
                QMatrix::identity(binf.dim(n)),
            )],
            bottom.infinity_component().component(n),
        );
        sys.equation(
            vec![(
                tn,
                p.tail_component().component(n),
                QMatrix::identity(bt.dim(n)),
            )],
            bottom.tail_component().component(n),
        );
        // Germ condition: sigma_X . h_inf - h_tail . sigma_B = 0.
        sys.equation(
            vec![
                (gn, x.sigma(n), QMatrix::identity(binf.dim(n))),
                (tn, -&QMatrix::identity(xt.dim(n)), b.sigma(n)),
            ],
            QMatrix::zero(xt.dim(n), binf.dim(n)),
        );
    }

    let Some(sol) = sys.solve() else {
        return Ok(None);
    };
    let inf_comps: BTreeMap<i32, QMatrix> = degrees
        .iter()
        .map(|&n| (n, sol[hinf[&n]].clone()))
        .collect();
    let tail_comps: BTreeMap<i32, QMatrix> = degrees
        .iter()
        .map(|&n| (n, sol[ht[&n]].clone()))
        .collect();
    let f_inf = ChainMap::new(binf.clone(), xinf.clone(), inf_comps)?;
    let f_tail = ChainMap::new(bt.clone(), xt.clone(), tail_comps)?;
    let lift = DihedralMorphism::new(b.clone(), x.clone(), stalks, f_tail, f_inf)?;
    Ok(Some(lift))
}

/// Componentwise mapping cone; the germ map is the block sum of the target's
/// germ map and the shifted source's. A morphism is a weak equivalence
/// exactly when every component of its cone is acyclic.
pub fn cone_object(f: &DihedralMorphism) -> DihedralObject {
    let src = f.source();
    let tgt = f.target();
    let window = src.window().max(tgt.window());
    let stalks: Vec<_> = (1..=window)
        .map(|k| mapping_cone(f.stalk_component(k)))
        .collect();
    let tail = mapping_cone(f.tail_component());
    let infinity = mapping_cone(f.infinity_component());
    let mut sigma = BTreeMap::new();
    for &n in infinity.support().iter() {
        sigma.insert(n, tgt.sigma(n).direct_sum(&src.sigma(n - 1)));
    }
    DihedralObject::new(stalks, tail, infinity, sigma)
        .expect("cone of a morphism is a valid object")
}
