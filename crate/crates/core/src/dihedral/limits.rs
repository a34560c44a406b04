use std::collections::BTreeMap;

use crate::dg::{ChainMap, DgModule};
use crate::linalg::QMatrix;

use super::boxplus::{boxplus, boxplus_fixed, boxplus_map};
use super::{DihedralError, DihedralMorphism, DihedralObject};

/// Finite diagram: objects plus arrows (source index, target index, map).
#[derive(Clone, Debug)]
pub struct Diagram {
    objects: Vec<DihedralObject>,
    arrows: Vec<(usize, usize, DihedralMorphism)>,
}

impl Diagram {
    pub fn new(
        objects: Vec<DihedralObject>,
        arrows: Vec<(usize, usize, DihedralMorphism)>,
    ) -> Result<Diagram, DihedralError> {
        assert!(!objects.is_empty(), "empty diagram");
        for (idx, (s, t, f)) in arrows.iter().enumerate() {
            if *s >= objects.len()
                || *t >= objects.len()
                || f.source() != &objects[*s]
                || f.target() != &objects[*t]
            {
                return Err(DihedralError::BadDiagramArrow { index: idx });
            }
        }
        Ok(Diagram { objects, arrows })
    }

    pub fn objects(&self) -> &[DihedralObject] {
        &self.objects
    }

    pub fn arrows(&self) -> &[(usize, usize, DihedralMorphism)] {
        &self.arrows
    }

    fn window(&self) -> usize {
        let objs = self.objects.iter().map(|o| o.window()).max().unwrap_or(0);
        let arrs = self.arrows.iter().map(|(_, _, f)| f.window()).max().unwrap_or(0);
        objs.max(arrs)
    }
}

/// One component slot of a colimit: cokernel of the difference map out of the
/// arrow sum, with enough bookkeeping to factor cocones afterwards.
struct DgColimit {
    object: DgModule,
    proj: ChainMap,
    injections: Vec<ChainMap>,
    sum_injections: Vec<ChainMap>,
    sum_projections: Vec<ChainMap>,
    sections: BTreeMap<i32, QMatrix>,
}

fn dg_colimit(objects: &[&DgModule], arrows: &[(usize, usize, &ChainMap)]) -> DgColimit {
    let (sum, sum_injections, sum_projections) = DgModule::direct_sum(objects);
    let phi = if arrows.is_empty() {
        ChainMap::zero(DgModule::zero_module(sum.is_equivariant()), sum.clone())
    } else {
        let sources: Vec<&DgModule> = arrows.iter().map(|&(s, _, _)| objects[s]).collect();
        let (esum, _, eprojs) = DgModule::direct_sum(&sources);
        let mut phi = ChainMap::zero(esum, sum.clone());
        for (e, &(s, t, f)) in arrows.iter().enumerate() {
            let piece = sum_injections[t]
                .compose(f)
                .expect("arrow endpoints match the summands")
                .sub(&sum_injections[s])
                .compose(&eprojs[e])
                .expect("arrow endpoints match the summands");
            phi = phi.add(&piece);
        }
        phi
    };
    let (object, proj) = phi.cokernel_complex();
    let injections = sum_injections
        .iter()
        .map(|inj| proj.compose(inj).expect("summand endpoints match"))
        .collect();
    let mut sections = BTreeMap::new();
    for &n in object.support().iter() {
        let s = proj
            .component(n)
            .solve_matrix(&QMatrix::identity(object.dim(n)))
            .expect("quotient projection is onto");
        sections.insert(n, s);
    }
    DgColimit {
        object,
        proj,
        injections,
        sum_injections,
        sum_projections,
        sections,
    }
}

impl DgColimit {
    /// The unique map out of the colimit matching compatible legs.
    fn factor(&self, legs: &[&ChainMap], target: &DgModule) -> Result<ChainMap, DihedralError> {
        let mut combined = ChainMap::zero(self.proj.source().clone(), target.clone());
        for (o, leg) in legs.iter().enumerate() {
            combined = combined.add(
                &leg.compose(&self.sum_projections[o])
                    .expect("leg sources match the summands"),
            );
        }
        let mut comps = BTreeMap::new();
        for &n in self.object.support().iter() {
            let m = combined.component(n).matmul(&self.sections[&n]);
            if !m.is_zero() {
                comps.insert(n, m);
            }
        }
        ChainMap::new(self.object.clone(), target.clone(), comps).map_err(DihedralError::from)
    }
}

/// One component slot of a limit: kernel of the difference map into the
/// arrow-target sum.
struct DgLimit {
    object: DgModule,
    injections: Vec<ChainMap>,
    incl: ChainMap,
    projections: Vec<ChainMap>,
    retractions: BTreeMap<i32, QMatrix>,
}

fn dg_limit(objects: &[&DgModule], arrows: &[(usize, usize, &ChainMap)]) -> DgLimit {
    let (sum, sum_injections, sum_projections) = DgModule::direct_sum(objects);
    let psi = if arrows.is_empty() {
        ChainMap::zero(sum.clone(), DgModule::zero_module(sum.is_equivariant()))
    } else {
        let targets: Vec<&DgModule> = arrows.iter().map(|&(_, t, _)| objects[t]).collect();
        let (tsum, tinjs, _) = DgModule::direct_sum(&targets);
        let mut psi = ChainMap::zero(sum.clone(), tsum);
        for (e, &(s, t, f)) in arrows.iter().enumerate() {
            let diff = f
                .compose(&sum_projections[s])
                .expect("arrow endpoints match the summands")
                .sub(&sum_projections[t]);
            let piece = tinjs[e].compose(&diff).expect("target summands match");
            psi = psi.add(&piece);
        }
        psi
    };
    let (object, incl) = psi.kernel_complex();
    let projections = sum_projections
        .iter()
        .map(|p| p.compose(&incl).expect("summand endpoints match"))
        .collect();
    let mut retractions = BTreeMap::new();
    for &n in object.support().iter() {
        let x = incl
            .component(n)
            .transpose()
            .solve_matrix(&QMatrix::identity(object.dim(n)))
            .expect("kernel inclusion is injective");
        retractions.insert(n, x.transpose());
    }
    DgLimit {
        object,
        injections: sum_injections,
        incl,
        projections,
        retractions,
    }
}

impl DgLimit {
    /// The unique map into the limit matching compatible legs.
    fn factor(&self, legs: &[&ChainMap], source: &DgModule) -> Result<ChainMap, DihedralError> {
        let mut combined = ChainMap::zero(source.clone(), self.incl.target().clone());
        for (o, leg) in legs.iter().enumerate() {
            combined = combined.add(
                &self.injections[o]
                    .compose(leg)
                    .expect("leg targets match the summands"),
            );
        }
        let mut comps = BTreeMap::new();
        for &n in source.support().iter() {
            if self.object.dim(n) == 0 {
                continue;
            }
            let m = self.retractions[&n].matmul(&combined.component(n));
            if !m.is_zero() {
                comps.insert(n, m);
            }
        }
        ChainMap::new(source.clone(), self.object.clone(), comps).map_err(DihedralError::from)
    }
}

pub struct ColimitResult {
    pub object: DihedralObject,
    pub injections: Vec<DihedralMorphism>,
    diagram: Diagram,
    stalk_slots: Vec<DgColimit>,
    tail_slot: DgColimit,
    inf_slot: DgColimit,
}

/// Componentwise colimit; the germ map is induced through any degreewise
/// section of the infinity-slot projection (the choice drops out because the
/// summandwise germ maps carry relations to relations).
pub fn finite_colimit(diagram: &Diagram) -> Result<ColimitResult, DihedralError> {
    let k_max = diagram.window();
    let objs = diagram.objects();
    let mut stalk_slots = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let parts: Vec<&DgModule> = objs.iter().map(|o| o.stalk_at(k)).collect();
        let arrs: Vec<(usize, usize, &ChainMap)> = diagram
            .arrows()
            .iter()
            .map(|(s, t, f)| (*s, *t, f.stalk_component(k)))
            .collect();
        stalk_slots.push(dg_colimit(&parts, &arrs));
    }
    let tails: Vec<&DgModule> = objs.iter().map(|o| o.tail()).collect();
    let tail_arrs: Vec<(usize, usize, &ChainMap)> = diagram
        .arrows()
        .iter()
        .map(|(s, t, f)| (*s, *t, f.tail_component()))
        .collect();
    let tail_slot = dg_colimit(&tails, &tail_arrs);
    let infs: Vec<&DgModule> = objs.iter().map(|o| o.infinity()).collect();
    let inf_arrs: Vec<(usize, usize, &ChainMap)> = diagram
        .arrows()
        .iter()
        .map(|(s, t, f)| (*s, *t, f.infinity_component()))
        .collect();
    let inf_slot = dg_colimit(&infs, &inf_arrs);

    let mut sigma = BTreeMap::new();
    for &n in inf_slot.object.support().iter() {
        if tail_slot.object.dim(n) == 0 {
            continue;
        }
        let mut diag = QMatrix::zero(
            tail_slot.proj.source().dim(n),
            inf_slot.proj.source().dim(n),
        );
        for (o, obj) in objs.iter().enumerate() {
            let term = tail_slot.sum_injections[o]
                .component(n)
                .matmul(&obj.sigma(n))
                .matmul(&inf_slot.sum_projections[o].component(n));
            diag = &diag + &term;
        }
        let m = tail_slot
            .proj
            .component(n)
            .matmul(&diag)
            .matmul(&inf_slot.sections[&n]);
        sigma.insert(n, m);
    }

    let object = DihedralObject::new(
        stalk_slots.iter().map(|s| s.object.clone()).collect(),
        tail_slot.object.clone(),
        inf_slot.object.clone(),
        sigma,
    )?;
    let mut injections = Vec::with_capacity(objs.len());
    for (o, src) in objs.iter().enumerate() {
        let stalks = (1..=k_max)
            .map(|k| stalk_slots[k - 1].injections[o].clone())
            .collect();
        injections.push(DihedralMorphism::new(
            src.clone(),
            object.clone(),
            stalks,
            tail_slot.injections[o].clone(),
            inf_slot.injections[o].clone(),
        )?);
    }
    Ok(ColimitResult {
        object,
        injections,
        diagram: diagram.clone(),
        stalk_slots,
        tail_slot,
        inf_slot,
    })
}

impl ColimitResult {
    /// Factors a compatible cocone uniquely through the colimit.
    pub fn factor(&self, cocone: &[DihedralMorphism]) -> Result<DihedralMorphism, DihedralError> {
        let objs = self.diagram.objects();
        assert_eq!(cocone.len(), objs.len(), "one leg per diagram object");
        let target = cocone[0].target().clone();
        for (i, leg) in cocone.iter().enumerate() {
            if leg.source() != &objs[i] || leg.target() != &target {
                return Err(DihedralError::NotACocone { index: i });
            }
        }
        for (idx, (s, t, f)) in self.diagram.arrows().iter().enumerate() {
            if cocone[*t].compose(f)? != cocone[*s] {
                return Err(DihedralError::NotACocone { index: idx });
            }
        }
        let window = self
            .object
            .window()
            .max(target.window())
            .max(cocone.iter().map(|c| c.window()).max().unwrap_or(0));
        let mut stalks = Vec::with_capacity(window);
        for k in 1..=window {
            let slot = if k <= self.stalk_slots.len() {
                &self.stalk_slots[k - 1]
            } else {
                &self.tail_slot
            };
            let legs: Vec<&ChainMap> = cocone.iter().map(|c| c.stalk_component(k)).collect();
            stalks.push(slot.factor(&legs, target.stalk_at(k))?);
        }
        let tails: Vec<&ChainMap> = cocone.iter().map(|c| c.tail_component()).collect();
        let f_tail = self.tail_slot.factor(&tails, target.tail())?;
        let infs: Vec<&ChainMap> = cocone.iter().map(|c| c.infinity_component()).collect();
        let f_inf = self.inf_slot.factor(&infs, target.infinity())?;
        DihedralMorphism::new(self.object.clone(), target, stalks, f_tail, f_inf)
    }
}

pub struct LimitResult {
    pub object: DihedralObject,
    pub projections: Vec<DihedralMorphism>,
    diagram: Diagram,
    stalk_slots: Vec<DgLimit>,
    tail_slot: DgLimit,
    inf_slot: DgLimit,
}

/// Componentwise limit. The infinity part is the limit of the infinity parts
/// with the germ map restricted from the summandwise one; for
/// eventually-constant objects this agrees with evaluating the colimit of
/// truncated fixed global sections, which stabilizes once the start position
/// clears every window in the diagram.
pub fn finite_limit(diagram: &Diagram) -> Result<LimitResult, DihedralError> {
    let k_max = diagram.window();
    let objs = diagram.objects();
    let mut stalk_slots = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let parts: Vec<&DgModule> = objs.iter().map(|o| o.stalk_at(k)).collect();
        let arrs: Vec<(usize, usize, &ChainMap)> = diagram
            .arrows()
            .iter()
            .map(|(s, t, f)| (*s, *t, f.stalk_component(k)))
            .collect();
        stalk_slots.push(dg_limit(&parts, &arrs));
    }
    let tails: Vec<&DgModule> = objs.iter().map(|o| o.tail()).collect();
    let tail_arrs: Vec<(usize, usize, &ChainMap)> = diagram
        .arrows()
        .iter()
        .map(|(s, t, f)| (*s, *t, f.tail_component()))
        .collect();
    let tail_slot = dg_limit(&tails, &tail_arrs);
    let infs: Vec<&DgModule> = objs.iter().map(|o| o.infinity()).collect();
    let inf_arrs: Vec<(usize, usize, &ChainMap)> = diagram
        .arrows()
        .iter()
        .map(|(s, t, f)| (*s, *t, f.infinity_component()))
        .collect();
    let inf_slot = dg_limit(&infs, &inf_arrs);

    let mut sigma = BTreeMap::new();
    for &n in inf_slot.object.support().iter() {
        if tail_slot.object.dim(n) == 0 {
            continue;
        }
        let mut combined = QMatrix::zero(tail_slot.incl.target().dim(n), inf_slot.object.dim(n));
        for (o, obj) in objs.iter().enumerate() {
            let term = tail_slot.injections[o]
                .component(n)
                .matmul(&obj.sigma(n))
                .matmul(&inf_slot.projections[o].component(n));
            combined = &combined + &term;
        }
        sigma.insert(n, tail_slot.retractions[&n].matmul(&combined));
    }

    let object = DihedralObject::new(
        stalk_slots.iter().map(|s| s.object.clone()).collect(),
        tail_slot.object.clone(),
        inf_slot.object.clone(),
        sigma,
    )?;
    let mut projections = Vec::with_capacity(objs.len());
    for (o, tgt) in objs.iter().enumerate() {
        let stalks = (1..=k_max)
            .map(|k| stalk_slots[k - 1].projections[o].clone())
            .collect();
        projections.push(DihedralMorphism::new(
            object.clone(),
            tgt.clone(),
            stalks,
            tail_slot.projections[o].clone(),
            inf_slot.projections[o].clone(),
        )?);
    }
    Ok(LimitResult {
        object,
        projections,
        diagram: diagram.clone(),
        stalk_slots,
        tail_slot,
        inf_slot,
    })
}

impl LimitResult {
    /// Factors a compatible cone uniquely through the limit.
    pub fn factor(&self, cone: &[DihedralMorphism]) -> Result<DihedralMorphism, DihedralError> {
        let objs = self.diagram.objects();
        assert_eq!(cone.len(), objs.len(), "one leg per diagram object");
        let source = cone[0].source().clone();
        for (i, leg) in cone.iter().enumerate() {
            if leg.target() != &objs[i] || leg.source() != &source {
                return Err(DihedralError::NotACone { index: i });
            }
        }
        for (idx, (s, t, f)) in self.diagram.arrows().iter().enumerate() {
            if f.compose(&cone[*s])? != cone[*t] {
                return Err(DihedralError::NotACone { index: idx });
            }
        }
        let window = self
            .object
            .window()
            .max(source.window())
            .max(cone.iter().map(|c| c.window()).max().unwrap_or(0));
        let mut stalks = Vec::with_capacity(window);
        for k in 1..=window {
            let slot = if k <= self.stalk_slots.len() {
                &self.stalk_slots[k - 1]
            } else {
                &self.tail_slot
            };
            let legs: Vec<&ChainMap> = cone.iter().map(|c| c.stalk_component(k)).collect();
            stalks.push(slot.factor(&legs, source.stalk_at(k))?);
        }
        let tails: Vec<&ChainMap> = cone.iter().map(|c| c.tail_component()).collect();
        let f_tail = self.tail_slot.factor(&tails, source.tail())?;
        let infs: Vec<&ChainMap> = cone.iter().map(|c| c.infinity_component()).collect();
        let f_inf = self.inf_slot.factor(&infs, source.infinity())?;
        DihedralMorphism::new(source, self.object.clone(), stalks, f_tail, f_inf)
    }
}

/// Pushout of f: A -> B and g: A -> C; injections are ordered [A, B, C].
pub fn pushout(
    f: &DihedralMorphism,
    g: &DihedralMorphism,
) -> Result<ColimitResult, DihedralError> {
    let d = Diagram::new(
        vec![f.source().clone(), f.target().clone(), g.target().clone()],
        vec![(0, 1, f.clone()), (0, 2, g.clone())],
    )?;
    finite_colimit(&d)
}

/// Pullback of f: B -> A and g: C -> A; projections are ordered [B, C, A].
pub fn pullback(
    f: &DihedralMorphism,
    g: &DihedralMorphism,
) -> Result<LimitResult, DihedralError> {
    let d = Diagram::new(
        vec![f.source().clone(), g.source().clone(), f.target().clone()],
        vec![(0, 2, f.clone()), (1, 2, g.clone())],
    )?;
    finite_limit(&d)
}

/// Colimit of a finite chain presenting a filtered system: the last object,
/// with the canonical maps from every stage.
pub struct FilteredColimit {
    pub object: DihedralObject,
    pub canonical: Vec<DihedralMorphism>,
    objects: Vec<DihedralObject>,
    maps: Vec<DihedralMorphism>,
}

pub fn filtered_colimit(
    objects: &[DihedralObject],
    maps: &[DihedralMorphism],
) -> Result<FilteredColimit, DihedralError> {
    assert!(!objects.is_empty(), "empty chain");
    if maps.len() + 1 != objects.len() {
        return Err(DihedralError::BadDiagramArrow { index: maps.len() });
    }
    for (i, f) in maps.iter().enumerate() {
        if f.source() != &objects[i] || f.target() != &objects[i + 1] {
            return Err(DihedralError::BadDiagramArrow { index: i });
        }
    }
    let object = objects.last().expect("nonempty").clone();
    let mut canonical = vec![DihedralMorphism::identity(&object)];
    for f in maps.iter().rev() {
        let next = canonical[0].compose(f)?;
        canonical.insert(0, next);
    }
    Ok(FilteredColimit {
        object,
        canonical,
        objects: objects.to_vec(),
        maps: maps.to_vec(),
    })
}

impl FilteredColimit {
    /// Checks that truncated global sections commute with the chain colimit:
    /// the honest dg colimit of the truncations is isomorphic to the
    /// truncation of the colimit, exhibited by explicit mutually inverse
    /// maps.
    pub fn canonical_map_check(&self, n: usize, cutoff: usize, fixed: bool) -> bool {
        let images: Vec<DgModule> = self
            .objects
            .iter()
            .map(|v| {
                if fixed {
                    boxplus_fixed(n, v, cutoff).truncation
                } else {
                    boxplus(n, v, cutoff).truncation
                }
            })
            .collect();
        let steps: Vec<ChainMap> = self
            .maps
            .iter()
            .map(|f| boxplus_map(n, f, cutoff, fixed))
            .collect();
        let parts: Vec<&DgModule> = images.iter().collect();
        let arrs: Vec<(usize, usize, &ChainMap)> =
            steps.iter().enumerate().map(|(i, f)| (i, i + 1, f)).collect();
        let col = dg_colimit(&parts, &arrs);

        let last = images.len() - 1;
        let mut legs: Vec<ChainMap> = vec![ChainMap::identity(&images[last])];
        for f in steps.iter().rev() {
            let next = legs[0].compose(f).expect("chain composes");
            legs.insert(0, next);
        }
        let leg_refs: Vec<&ChainMap> = legs.iter().collect();
        let Ok(u) = col.factor(&leg_refs, &images[last]) else {
            return false;
        };
        let v = &col.injections[last];
        u.compose(v).expect("endpoints match") == ChainMap::identity(&images[last])
            && v.compose(&u).expect("endpoints match") == ChainMap::identity(&col.object)
    }
}
