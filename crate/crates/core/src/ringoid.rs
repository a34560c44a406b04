//! Finite categories enriched in bounded complexes of Q-vector spaces:
//! validation of the enriched category laws, functors and quasi-equivalences,
//! homology categories, connective covers, right modules, and the extraction
//! of the endomorphism category of the dihedral generators together with its
//! Yoneda round trip.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::dg::{ChainMap, DgModule, Homology, TensorProduct};
use crate::dihedral::{hom_growth, hom_space, DihedralMorphism, DihedralObject, HomGrowth};
use crate::homotopy::{catalog, catalog_list, GeneratorExpression};
use crate::linalg::{QMatrix, Rational};
use crate::sample::Sampler;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingoidError {
    #[error("malformed category data: {0}")]
    Shape(String),
    #[error("unit of object {0} is not a degree-0 cycle")]
    UnitNotCycle(usize),
    #[error("unit law fails on hom({0}, {1})")]
    UnitLaw(usize, usize),
    #[error("malformed functor data: {0}")]
    FunctorShape(String),
    #[error("functor does not preserve the unit of object {0}")]
    UnitNotPreserved(usize),
    #[error("malformed module data: {0}")]
    ModuleShape(String),
    #[error("module is not representable by a catalog object")]
    NotRepresentable,
}

/// A finite category enriched in bounded complexes over Q. `homs[a][b]` is
/// the complex of maps a -> b; `compose[(a, b, c)]` acts as
/// hom(b, c) (x) hom(a, b) -> hom(a, c), with absent keys meaning zero.
/// Storing compositions as chain maps out of the tensor product makes the
/// Leibniz compatibility part of construction; unit laws are checked
/// exactly. Associativity is a separate check (`check_associativity`)
/// because exhaustive validation is cubic in the hom dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct DgCategory {
    labels: Vec<String>,
    homs: Vec<Vec<DgModule>>,
    compose: BTreeMap<(usize, usize, usize), ChainMap>,
    units: Vec<Vec<Rational>>,
}

fn basis_of(m: &DgModule) -> Vec<(i32, usize)> {
    let mut out = Vec::new();
    for &n in m.support().iter() {
        for j in 0..m.dim(n) {
            out.push((n, j));
        }
    }
    out
}

fn unit_vec(len: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[j] = Rational::one();
    v
}

impl DgCategory {
    pub fn new(
        labels: Vec<String>,
        homs: Vec<Vec<DgModule>>,
        compose: BTreeMap<(usize, usize, usize), ChainMap>,
        units: Vec<Vec<Rational>>,
    ) -> Result<Self, RingoidError> {
        let n = labels.len();
        if homs.len() != n || homs.iter().any(|row| row.len() != n) {
            return Err(RingoidError::Shape("hom grid is not square".into()));
        }
        if homs.iter().flatten().any(|m| m.is_equivariant()) {
            return Err(RingoidError::Shape("hom complexes must be plain".into()));
        }
        if units.len() != n {
            return Err(RingoidError::Shape("one unit per object".into()));
        }
        for (a, u) in units.iter().enumerate() {
            if u.len() != homs[a][a].dim(0) {
                return Err(RingoidError::Shape(format!(
                    "unit of object {a} has the wrong length"
                )));
            }
        }
        for (&(a, b, c), m) in &compose {
            if a >= n || b >= n || c >= n {
                return Err(RingoidError::Shape("composition key out of range".into()));
            }
            let t = TensorProduct::of(&homs[b][c], &homs[a][b]);
            if *m.source() != t.module || *m.target() != homs[a][c] {
                return Err(RingoidError::Shape(format!(
                    "composition tensor ({a}, {b}, {c}) has wrong endpoints"
                )));
            }
        }
        let cat = DgCategory { labels, homs, compose, units };
        for a in 0..n {
            let u = &cat.units[a];
            if !cat.homs[a][a].d(0).apply(u).iter().all(|x| x.is_zero()) {
                return Err(RingoidError::UnitNotCycle(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !cat.unit_law_holds(a, b) {
                    return Err(RingoidError::UnitLaw(a, b));
                }
            }
        }
        Ok(cat)
    }

    /// Post-composition with unit_b and pre-composition with unit_a are the
    /// identity of hom(a, b), checked as matrices by summing weighted
    /// columns of the composition tensors.
    fn unit_law_holds(&self, a: usize, b: usize) -> bool {
        for &deg in self.homs[a][b].support().iter() {
            let dim = self.homs[a][b].dim(deg);
            let left = self.unit_action(a, b, deg, true);
            let right = self.unit_action(a, b, deg, false);
            let id = QMatrix::identity(dim);
            if left != id || right != id {
                return false;
            }
        }
        true
    }

    fn unit_action(&self, a: usize, b: usize, deg: i32, post: bool) -> QMatrix {
        let dim = self.homs[a][b].dim(deg);
        let (key, outer) = if post { ((a, b, b), b) } else { ((a, a, b), a) };
        let unit = &self.units[outer];
        let map = match self.compose.get(&key) {
            Some(m) => m,
            None => return QMatrix::zero(dim, dim),
        };
        let t = if post {
            TensorProduct::of(&self.homs[b][b], &self.homs[a][b])
        } else {
            TensorProduct::of(&self.homs[a][b], &self.homs[a][a])
        };
        let comp = map.component(deg);
        QMatrix::from_fn(dim, dim, |r, j| {
            let mut acc = Rational::zero();
            for (i, ui) in unit.iter().enumerate() {
                if ui.is_zero() {
                    continue;
                }
                let col = if post { t.index(0, i, deg, j) } else { t.index(deg, j, 0, i) };
                acc += ui * comp.get(r, col);
            }
            acc
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn hom(&self, a: usize, b: usize) -> &DgModule {
        &self.homs[a][b]
    }

    pub fn unit(&self, a: usize) -> &[Rational] {
        &self.units[a]
    }

    pub fn composition(&self, a: usize, b: usize, c: usize) -> Option<&ChainMap> {
        self.compose.get(&(a, b, c))
    }

    /// Coordinates of g.f in hom(a, c), for g in hom(b, c) homogeneous of
    /// degree `dg` and f in hom(a, b) of degree `df`.
    pub fn compose_elements(
        &self,
        a: usize,
        b: usize,
        c: usize,
        dg: i32,
        g: &[Rational],
        df: i32,
        f: &[Rational],
    ) -> Vec<Rational> {
        assert_eq!(g.len(), self.homs[b][c].dim(dg), "outer element size");
        assert_eq!(f.len(), self.homs[a][b].dim(df), "inner element size");
        let out = self.homs[a][c].dim(dg + df);
        let map = match self.compose.get(&(a, b, c)) {
            Some(m) => m,
            None => return vec![Rational::zero(); out],
        };
        let t = TensorProduct::of(&self.homs[b][c], &self.homs[a][b]);
        let mut v = vec![Rational::zero(); t.module.dim(dg + df)];
        for (i, gi) in g.iter().enumerate() {
            if gi.is_zero() {
                continue;
            }
            for (j, fj) in f.iter().enumerate() {
                if fj.is_zero() {
                    continue;
                }
                v[t.index(dg, i, df, j)] = gi * fj;
            }
        }
        map.component(dg + df).apply(&v)
    }

    /// h.(g.f) == (h.g).f on basis triples. Exhaustive when a quadruple of
    /// objects carries at most `cap` triples, seeded-sampled otherwise.
    pub fn check_associativity(&self, cap: usize, seed: u64) -> bool {
        let mut s = Sampler::new(seed);
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let hb = basis_of(&self.homs[c][d]);
                        let gb = basis_of(&self.homs[b][c]);
                        let fb = basis_of(&self.homs[a][b]);
                        if hb.is_empty() || gb.is_empty() || fb.is_empty() {
                            continue;
                        }
                        let total = hb.len() * gb.len() * fb.len();
                        let probe = |h: (i32, usize), g: (i32, usize), f: (i32, usize)| {
                            let hv = unit_vec(self.homs[c][d].dim(h.0), h.1);
                            let gv = unit_vec(self.homs[b][c].dim(g.0), g.1);
                            let fv = unit_vec(self.homs[a][b].dim(f.0), f.1);
                            let gf = self.compose_elements(a, b, c, g.0, &gv, f.0, &fv);
                            let lhs = self.compose_elements(a, c, d, h.0, &hv, g.0 + f.0, &gf);
                            let hg = self.compose_elements(b, c, d, h.0, &hv, g.0, &gv);
                            let rhs = self.compose_elements(a, b, d, h.0 + g.0, &hg, f.0, &fv);
                            lhs == rhs
                        };
                        if total <= cap {
                            for &h in &hb {
                                for &g in &gb {
                                    for &f in &fb {
                                        if !probe(h, g, f) {
                                            return false;
                                        }
                                    }
                                }
                            }
                        } else {
                            for _ in 0..cap {
                                let h = hb[s.int(0, hb.len() as i64 - 1) as usize];
                                let g = gb[s.int(0, gb.len() as i64 - 1) as usize];
                                let f = fb[s.int(0, fb.len() as i64 - 1) as usize];
                                if !probe(h, g, f) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// A functor between finite dg-categories: an object map with hom-wise
/// chain maps. Unit preservation is validated here; composition
/// preservation has its own check for the same cost reason as
/// associativity.
#[derive(Clone, Debug)]
pub struct DgFunctor {
    source: DgCategory,
    target: DgCategory,
    object_map: Vec<usize>,
    maps: Vec<Vec<ChainMap>>,
}

impl DgFunctor {
    pub fn new(
        source: DgCategory,
        target: DgCategory,
        object_map: Vec<usize>,
        maps: Vec<Vec<ChainMap>>,
    ) -> Result<Self, RingoidError> {
        let n = source.len();
        if object_map.len() != n || object_map.iter().any(|&x| x >= target.len()) {
            return Err(RingoidError::FunctorShape("object map out of range".into()));
        }
        if maps.len() != n || maps.iter().any(|row| row.len() != n) {
            return Err(RingoidError::FunctorShape("one hom map per pair".into()));
        }
        for a in 0..n {
            for b in 0..n {
                let m = &maps[a][b];
                if m.source() != source.hom(a, b)
                    || m.target() != target.hom(object_map[a], object_map[b])
                {
                    return Err(RingoidError::FunctorShape(format!(
                        "hom map ({a}, {b}) has wrong endpoints"
                    )));
                }
            }
        }
        for a in 0..n {
            let image = maps[a][a].component(0).apply(source.unit(a));
            if image != target.unit(object_map[a]) {
                return Err(RingoidError::UnitNotPreserved(a));
            }
        }
        Ok(DgFunctor { source, target, object_map, maps })
    }

    pub fn identity(c: &DgCategory) -> Self {
        let n = c.len();
        let maps = (0..n)
            .map(|a| (0..n).map(|b| ChainMap::identity(c.hom(a, b))).collect())
            .collect();
        DgFunctor {
            source: c.clone(),
            target: c.clone(),
            object_map: (0..n).collect(),
            maps,
        }
    }

    pub fn source(&self) -> &DgCategory {
        &self.source
    }

    pub fn target(&self) -> &DgCategory {
        &self.target
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn map(&self, a: usize, b: usize) -> &ChainMap {
        &self.maps[a][b]
    }

    /// F(g.f) == F(g).F(f) on basis pairs; exhaustive up to `cap` pairs per
    /// object triple, seeded-sampled otherwise.
    pub fn check_functoriality(&self, cap: usize, seed: u64) -> bool {
        let mut s = Sampler::new(seed);
        let n = self.source.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let gb = basis_of(self.source.hom(b, c));
                    let fb = basis_of(self.source.hom(a, b));
                    if gb.is_empty() || fb.is_empty() {
                        continue;
                    }
                    let (fa, fb_obj, fc) =
                        (self.object_map[a], self.object_map[b], self.object_map[c]);
                    let probe = |g: (i32, usize), f: (i32, usize)| {
                        let gv = unit_vec(self.source.hom(b, c).dim(g.0), g.1);
                        let fv = unit_vec(self.source.hom(a, b).dim(f.0), f.1);
                        let gf = self.source.compose_elements(a, b, c, g.0, &gv, f.0, &fv);
                        let lhs = self.maps[a][c].component(g.0 + f.0).apply(&gf);
                        let tg = self.maps[b][c].component(g.0).apply(&gv);
                        let tf = self.maps[a][b].component(f.0).apply(&fv);
                        let rhs =
                            self.target.compose_elements(fa, fb_obj, fc, g.0, &tg, f.0, &tf);
                        lhs == rhs
                    };
                    if gb.len() * fb.len() <= cap {
                        for &g in &gb {
                            for &f in &fb {
                                if !probe(g, f) {
                                    return false;
                                }
                            }
                        }
                    } else {
                        for _ in 0..cap {
                            let g = gb[s.int(0, gb.len() as i64 - 1) as usize];
                            let f = fb[s.int(0, fb.len() as i64 - 1) as usize];
                            if !probe(g, f) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Objects biject and every hom-wise map is a quasi-isomorphism.
    pub fn is_quasi_equivalence(&self) -> bool {
        if self.target.len() != self.source.len() {
            return false;
        }
        let mut seen = vec![false; self.target.len()];
        for &x in &self.object_map {
            if seen[x] {
                return false;
            }
            seen[x] = true;
        }
        self.maps.iter().flatten().all(|m| m.is_quasi_iso())
    }
}

/// Homwise homology with the induced composition; all differentials zero.
pub fn homology_category(e: &DgCategory) -> DgCategory {
    let n = e.len();
    let hs: Vec<Vec<Homology>> = (0..n)
        .map(|a| (0..n).map(|b| Homology::of(e.hom(a, b))).collect())
        .collect();
    let homs: Vec<Vec<DgModule>> = hs
        .iter()
        .map(|row| row.iter().map(|h| h.as_module()).collect())
        .collect();
    let mut compose = BTreeMap::new();
    for &(a, b, c) in e.compose.keys() {
        let t = TensorProduct::of(&homs[b][c], &homs[a][b]);
        let mut comps = BTreeMap::new();
        for &deg in t.module.support().iter() {
            let rows = homs[a][c].dim(deg);
            if rows == 0 {
                continue;
            }
            let mut m = QMatrix::zero(rows, t.module.dim(deg));
            for (p, q, _) in t.blocks(deg) {
                let reps_g = hs[b][c].representatives(p).expect("block degree is present");
                let reps_f = hs[a][b].representatives(q).expect("block degree is present");
                for i in 0..reps_g.cols() {
                    for j in 0..reps_f.cols() {
                        let w = e.compose_elements(
                            a,
                            b,
                            c,
                            p,
                            &reps_g.col_vec(i),
                            q,
                            &reps_f.col_vec(j),
                        );
                        let class = hs[a][c]
                            .class_of(deg, &w)
                            .expect("composite of cycles is a cycle");
                        let col = t.index(p, i, q, j);
                        for (r, x) in class.into_iter().enumerate() {
                            m.set(r, col, x);
                        }
                    }
                }
            }
            if !m.is_zero() {
                comps.insert(deg, m);
            }
        }
        let map = ChainMap::new(t.module, homs[a][c].clone(), comps)
            .expect("induced composition is a chain map");
        if !map.is_zero() {
            compose.insert((a, b, c), map);
        }
    }
    let units = (0..n)
        .map(|a| {
            hs[a][a]
                .class_of(0, e.unit(a))
                .expect("the unit is a cycle")
        })
        .collect();
    DgCategory::new(e.labels.clone(), homs, compose, units)
        .expect("homology inherits the category laws")
}

fn cover_module(m: &DgModule) -> (DgModule, ChainMap) {
    let z = m.d(0).kernel().basis_matrix().clone();
    let mut dims = BTreeMap::new();
    let mut d = BTreeMap::new();
    let mut incl = BTreeMap::new();
    for &n in m.support().iter() {
        if n > 0 {
            dims.insert(n, m.dim(n));
            incl.insert(n, QMatrix::identity(m.dim(n)));
            if n > 1 && m.dim(n - 1) > 0 && !m.d(n).is_zero() {
                d.insert(n, m.d(n));
            }
        }
    }
    if z.cols() > 0 {
        dims.insert(0, z.cols());
        incl.insert(0, z.clone());
        if m.dim(1) > 0 {
            let d1 = z.solve_matrix(&m.d(1)).expect("d lands in the cycles");
            if !d1.is_zero() {
                d.insert(1, d1);
            }
        }
    }
    let c = DgModule::new(dims, d).expect("truncation is a complex");
    let map = ChainMap::new(c.clone(), m.clone(), incl).expect("inclusion is a chain map");
    (c, map)
}

/// The (-1)-connective cover: degrees above 0 unchanged, degree 0 replaced
/// by the cycles, negative degrees dropped. Returns the cover together with
/// its inclusion functor into `e` and the projection functor onto the
/// homology category of `e`.
pub fn connective_cover(e: &DgCategory) -> (DgCategory, DgFunctor, DgFunctor) {
    let n = e.len();
    let h_cat = homology_category(e);
    let covers: Vec<Vec<(DgModule, ChainMap)>> = (0..n)
        .map(|a| (0..n).map(|b| cover_module(e.hom(a, b))).collect())
        .collect();
    let untouched = (0..n).all(|a| {
        (0..n).all(|b| covers[a][b].0 == *e.hom(a, b))
    });

    let homs: Vec<Vec<DgModule>> = covers
        .iter()
        .map(|row| row.iter().map(|(c, _)| c.clone()).collect())
        .collect();
    let mut compose = BTreeMap::new();
    if untouched {
        compose = e.compose.clone();
    } else {
        for &(a, b, c) in e.compose.keys() {
            let t = TensorProduct::of(&homs[b][c], &homs[a][b]);
            let mut comps = BTreeMap::new();
            for &deg in t.module.support().iter() {
                if deg < 0 || homs[a][c].dim(deg) == 0 {
                    continue;
                }
                let mut m = QMatrix::zero(homs[a][c].dim(deg), t.module.dim(deg));
                for (p, q, _) in t.blocks(deg) {
                    let gi = &covers[b][c].1;
                    let fi = &covers[a][b].1;
                    for i in 0..homs[b][c].dim(p) {
                        let gv = gi.component(p).apply(&unit_vec(homs[b][c].dim(p), i));
                        for j in 0..homs[a][b].dim(q) {
                            let fv = fi.component(q).apply(&unit_vec(homs[a][b].dim(q), j));
                            let w = e.compose_elements(a, b, c, p, &gv, q, &fv);
                            let out = if deg == 0 {
                                let wm = QMatrix::from_fn(w.len(), 1, |r, _| w[r].clone());
                                covers[a][c]
                                    .1
                                    .component(0)
                                    .solve_matrix(&wm)
                                    .expect("composite of cycles is a cycle")
                                    .col_vec(0)
                            } else {
                                w
                            };
                            let col = t.index(p, i, q, j);
                            for (r, x) in out.into_iter().enumerate() {
                                m.set(r, col, x);
                            }
                        }
                    }
                }
                if !m.is_zero() {
                    comps.insert(deg, m);
                }
            }
            let map = ChainMap::new(t.module, homs[a][c].clone(), comps)
                .expect("truncated composition is a chain map");
            if !map.is_zero() {
                compose.insert((a, b, c), map);
            }
        }
    }
    let units: Vec<Vec<Rational>> = if untouched {
        e.units.clone()
    } else {
        (0..n)
            .map(|a| {
                let u = e.unit(a);
                let um = QMatrix::from_fn(u.len(), 1, |r, _| u[r].clone());
                covers[a][a]
                    .1
                    .component(0)
                    .solve_matrix(&um)
                    .expect("the unit is a cycle")
                    .col_vec(0)
            })
            .collect()
    };
    let c0 = DgCategory::new(e.labels.clone(), homs, compose, units)
        .expect("the cover inherits the category laws");

    let incl_maps: Vec<Vec<ChainMap>> = covers
        .iter()
        .map(|row| row.iter().map(|(_, i)| i.clone()).collect())
        .collect();
    let i = DgFunctor::new(c0.clone(), e.clone(), (0..n).collect(), incl_maps)
        .expect("inclusion is a functor");

    let proj_maps: Vec<Vec<ChainMap>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let h = Homology::of(e.hom(a, b));
                    let z = &covers[a][b].1;
                    let mut comps = BTreeMap::new();
                    if c0.hom(a, b).dim(0) > 0 && h_cat.hom(a, b).dim(0) > 0 {
                        let m = QMatrix::from_fn(
                            h_cat.hom(a, b).dim(0),
                            c0.hom(a, b).dim(0),
                            |r, j| {
                                let cycle =
                                    z.component(0).apply(&unit_vec(c0.hom(a, b).dim(0), j));
                                h.class_of(0, &cycle).expect("columns are cycles")[r].clone()
                            },
                        );
                        if !m.is_zero() {
                            comps.insert(0, m);
                        }
                    }
                    ChainMap::new(c0.hom(a, b).clone(), h_cat.hom(a, b).clone(), comps)
                        .expect("classes of boundaries vanish")
                })
                .collect()
        })
        .collect();
    let p = DgFunctor::new(c0.clone(), h_cat, (0..n).collect(), proj_maps)
        .expect("projection is a functor");

    (c0, i, p)
}

/// Where the monoidal product of two extracted objects lands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductEntry {
    Object(usize),
    Zero,
    /// Same stalk, but the combined tensor power exceeds the extraction
    /// bound.
    ExceedsBound { k: usize, power: usize },
}

/// The endomorphism category of the generator catalog: the unit object and
/// the stalk powers, with hom complexes concentrated in degree 0.
#[derive(Clone, Debug)]
pub struct EaCategory {
    pub category: DgCategory,
    pub objects: Vec<GeneratorExpression>,
    /// hom(unit, unit) is stored truncated at this window.
    pub cutoff: usize,
    /// Exact growth law of hom(unit, unit) as the window widens.
    pub unit_growth: HomGrowth,
    pub products: BTreeMap<(usize, usize), ProductEntry>,
}

struct PairBasis {
    basis: Vec<DihedralMorphism>,
    window: usize,
    degs: Vec<i32>,
    /// Left inverse of the vectorized basis matrix; None when the basis is
    /// empty.
    coord: Option<QMatrix>,
}

fn pair_degrees(a: &DihedralObject, b: &DihedralObject, window: usize) -> Vec<i32> {
    let mut degs = Vec::new();
    {
        let mut slot = |s: &DgModule, t: &DgModule| {
            for &n in s.support().iter() {
                if t.dim(n) > 0 {
                    degs.push(n);
                }
            }
        };
        slot(a.infinity(), b.infinity());
        slot(a.tail(), b.tail());
        for k in 1..=window {
            slot(a.stalk_at(k), b.stalk_at(k));
        }
    }
    degs.sort_unstable();
    degs.dedup();
    degs
}

fn vectorize(f: &DihedralMorphism, window: usize, degs: &[i32]) -> Vec<Rational> {
    let mut v = Vec::new();
    let mut push = |c: &ChainMap| {
        for &n in degs {
            let m = c.component(n);
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    v.push(m.get(i, j).clone());
                }
            }
        }
    };
    push(f.infinity_component());
    push(f.tail_component());
    for k in 1..=window {
        push(f.stalk_component(k));
    }
    v
}

fn left_inverse(b: &QMatrix) -> QMatrix {
    let x = b
        .transpose()
        .solve_matrix(&QMatrix::identity(b.cols()))
        .expect("basis columns are independent");
    x.transpose()
}

/// Extract the full subcategory of the dihedral model on the unit and the
/// stalk powers up to the given bounds, with hom(unit, unit) truncated at
/// `cutoff`.
pub fn extract_ea(imax: usize, kmax: usize, cutoff: usize) -> EaCategory {
    assert!(imax >= 1 && kmax >= 1);
    let objects = catalog_list(imax, kmax);
    let labels: Vec<String> = objects.iter().map(|e| e.label()).collect();
    let models: Vec<DihedralObject> = objects.iter().map(|&e| catalog(e)).collect();
    let n = objects.len();

    let pairs: Vec<Vec<PairBasis>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let window = if a == 0 && b == 0 {
                        cutoff
                    } else {
                        models[a].window().max(models[b].window())
                    };
                    let basis = hom_space(&models[a], &models[b], window);
                    let degs = pair_degrees(&models[a], &models[b], window);
                    let coord = if basis.is_empty() {
                        None
                    } else {
                        let vecs: Vec<Vec<Rational>> =
                            basis.iter().map(|f| vectorize(f, window, &degs)).collect();
                        let b = QMatrix::from_fn(vecs[0].len(), vecs.len(), |i, j| {
                            vecs[j][i].clone()
                        });
                        Some(left_inverse(&b))
                    };
                    PairBasis { basis, window, degs, coord }
                })
                .collect()
        })
        .collect();

    let homs: Vec<Vec<DgModule>> = pairs
        .iter()
        .map(|row| row.iter().map(|p| DgModule::single(0, p.basis.len())).collect())
        .collect();

    let mut compose = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let bc = &pairs[b][c];
                let ab = &pairs[a][b];
                let ac = &pairs[a][c];
                if bc.basis.is_empty() || ab.basis.is_empty() {
                    continue;
                }
                let t = TensorProduct::of(&homs[b][c], &homs[a][b]);
                let mut m = QMatrix::zero(ac.basis.len(), t.module.dim(0));
                for (i, g) in bc.basis.iter().enumerate() {
                    for (j, f) in ab.basis.iter().enumerate() {
                        let gf = g.compose(f).expect("endpoints match");
                        match &ac.coord {
                            Some(p) => {
                                let coords = p.apply(&vectorize(&gf, ac.window, &ac.degs));
                                let col = t.index(0, i, 0, j);
                                for (r, x) in coords.into_iter().enumerate() {
                                    m.set(r, col, x);
                                }
                            }
                            None => debug_assert!(gf.is_zero(), "composite escapes a zero hom"),
                        }
                    }
                }
                if !m.is_zero() {
                    let map = ChainMap::new(t.module, homs[a][c].clone(), BTreeMap::from([(0, m)]))
                        .expect("degree-0 compositions are chain maps");
                    compose.insert((a, b, c), map);
                }
            }
        }
    }

    let units: Vec<Vec<Rational>> = (0..n)
        .map(|a| {
            let p = &pairs[a][a];
            let id = DihedralMorphism::identity(&models[a]);
            p.coord
                .as_ref()
                .expect("endomorphisms contain the identity")
                .apply(&vectorize(&id, p.window, &p.degs))
        })
        .collect();

    let category =
        DgCategory::new(labels, homs, compose, units).expect("extraction satisfies the laws");

    let mut products = BTreeMap::new();
    for (x, &ex) in objects.iter().enumerate() {
        for (y, &ey) in objects.iter().enumerate() {
            let entry = match (ex, ey) {
                (GeneratorExpression::Unit, _) => ProductEntry::Object(y),
                (_, GeneratorExpression::Unit) => ProductEntry::Object(x),
                (
                    GeneratorExpression::StalkPower { k, i },
                    GeneratorExpression::StalkPower { k: k2, i: i2 },
                ) => {
                    if k != k2 {
                        ProductEntry::Zero
                    } else if i + i2 <= imax {
                        let z = objects
                            .iter()
                            .position(|&o| o == GeneratorExpression::StalkPower { k, i: i + i2 })
                            .expect("power within bounds is listed");
                        ProductEntry::Object(z)
                    } else {
                        ProductEntry::ExceedsBound { k, power: i + i2 }
                    }
                }
            };
            products.insert((x, y), entry);
        }
    }

    let unit_growth = hom_growth(&models[0], &models[0]);
    EaCategory { category, objects, cutoff, unit_growth, products }
}

/// A right module over a dg-category: a complex per object and an action
/// value(b) (x) hom(a, b) -> value(a) per pair (absent keys zero), with
/// finite direct sums carried structurally.
#[derive(Clone, Debug)]
pub enum RightModule {
    Plain {
        values: Vec<DgModule>,
        action: BTreeMap<(usize, usize), ChainMap>,
    },
    Sum(Vec<RightModule>),
}

/// The module hom(-, x) with action by composition.
pub fn representable(e: &DgCategory, x: usize) -> RightModule {
    assert!(x < e.len(), "object index in range");
    let values = (0..e.len()).map(|a| e.hom(a, x).clone()).collect();
    let mut action = BTreeMap::new();
    for a in 0..e.len() {
        for b in 0..e.len() {
            if let Some(m) = e.composition(a, b, x) {
                action.insert((a, b), m.clone());
            }
        }
    }
    RightModule::Plain { values, action }
}

/// Realize a module as an object of the dihedral model by writing it as a
/// direct sum of representables: explicit sums map to biproducts, and a
/// plain module is matched against each catalog object by searching for a
/// degree-0 cycle whose action map hom(a, x) -> value(a) is an isomorphism
/// at every a.
pub fn tensor_with_generators(
    m: &RightModule,
    ea: &EaCategory,
    seed: u64,
) -> Result<DihedralObject, RingoidError> {
    match m {
        RightModule::Sum(parts) => {
            let mut resolved = Vec::new();
            for p in parts {
                resolved.push(tensor_with_generators(p, ea, seed)?);
            }
            let mut it = resolved.into_iter();
            let first = it
                .next()
                .unwrap_or_else(|| crate::dihedral::constant(&DgModule::single(0, 0)));
            Ok(it.fold(first, |acc, v| DihedralObject::biproduct(&acc, &v)))
        }
        RightModule::Plain { values, action } => {
            let e = &ea.category;
            let n = e.len();
            if values.len() != n {
                return Err(RingoidError::ModuleShape("one value per object".into()));
            }
            if values.iter().all(|v| v.total_dim() == 0) {
                // The zero module is the empty sum.
                return Ok(crate::dihedral::constant(&DgModule::single(0, 0)));
            }
            let mut s = Sampler::new(seed);
            for x in 0..n {
                if (0..n).any(|a| values[a].dims() != e.hom(a, x).dims()) {
                    continue;
                }
                let zx = values[x].d(0).kernel().basis_matrix().clone();
                let mut candidates: Vec<Vec<Rational>> =
                    (0..zx.cols()).map(|j| zx.col_vec(j)).collect();
                for _ in 0..4 {
                    if zx.cols() == 0 {
                        break;
                    }
                    let mut v = vec![Rational::zero(); zx.rows()];
                    for j in 0..zx.cols() {
                        let c = Rational::from_int(s.int(-3, 3));
                        for (r, entry) in zx.col_vec(j).into_iter().enumerate() {
                            v[r] += entry * c.clone();
                        }
                    }
                    candidates.push(v);
                }
                for xi in candidates {
                    if is_yoneda_witness(values, action, e, x, &xi) {
                        return Ok(catalog(ea.objects[x]));
                    }
                }
            }
            Err(RingoidError::NotRepresentable)
        }
    }
}

fn is_yoneda_witness(
    values: &[DgModule],
    action: &BTreeMap<(usize, usize), ChainMap>,
    e: &DgCategory,
    x: usize,
    xi: &[Rational],
) -> bool {
    for a in 0..e.len() {
        let hom = e.hom(a, x);
        let act = action.get(&(a, x));
        let t = TensorProduct::of(&values[x], hom);
        let mut comps = BTreeMap::new();
        for &deg in hom.support().iter() {
            let rows = values[a].dim(deg);
            let cols = hom.dim(deg);
            let m = QMatrix::from_fn(rows, cols, |r, j| {
                let mut acc = Rational::zero();
                if let Some(act) = act {
                    let comp = act.component(deg);
                    for (i, c) in xi.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        acc += c * comp.get(r, t.index(0, i, deg, j));
                    }
                }
                acc
            });
            if !m.is_zero() {
                comps.insert(deg, m);
            }
        }
        let phi = match ChainMap::new(hom.clone(), values[a].clone(), comps) {
            Ok(f) => f,
            Err(_) => return false,
        };
        if !(phi.is_injection() && phi.is_surjection()) {
            return false;
        }
    }
    true
}

/// One-object sample category: a unit in degree 0 plus a square-zero
/// generator in the given degree, zero differential. Nonzero `deg` gives
/// homology off degree 0, so the connective-cover comparisons must fail on
/// it; that makes it the standard negative control for those checks.
pub fn square_zero(deg: i32) -> DgCategory {
    let hom = DgModule::new(BTreeMap::from([(0, 1), (deg, 1)]), BTreeMap::new()).unwrap();
    let t = TensorProduct::of(&hom, &hom);
    let mut c0 = QMatrix::zero(1, t.module.dim(0));
    c0.set(0, t.index(0, 0, 0, 0), Rational::one());
    let mut cd = QMatrix::zero(1, t.module.dim(deg));
    cd.set(0, t.index(0, 0, deg, 0), Rational::one());
    cd.set(0, t.index(deg, 0, 0, 0), Rational::one());
    let compose = BTreeMap::from([(
        (0usize, 0usize, 0usize),
        ChainMap::new(
            t.module.clone(),
            hom.clone(),
            BTreeMap::from([(0, c0), (deg, cd)]),
        )
        .unwrap(),
    )]);
    DgCategory::new(
        vec!["*".into()],
        vec![vec![hom]],
        compose,
        vec![vec![Rational::one()]],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use crate::dihedral::tensor;

    use super::*;

    fn trivial() -> DgCategory {
        let hom = DgModule::single(0, 1);
        let t = TensorProduct::of(&hom, &hom);
        let compose = BTreeMap::from([(
            (0usize, 0usize, 0usize),
            ChainMap::new(
                t.module.clone(),
                hom.clone(),
                BTreeMap::from([(0, QMatrix::identity(1))]),
            )
            .unwrap(),
        )]);
        DgCategory::new(
            vec!["*".into()],
            vec![vec![hom]],
            compose,
            vec![vec![Rational::one()]],
        )
        .unwrap()
    }

    // One object; endomorphisms 1, b in degree 0 and a in degree 1 with
    // d(a) = b, all products of a and b zero.
    fn acyclic_summand() -> DgCategory {
        let hom = DgModule::new(
            BTreeMap::from([(0, 2), (1, 1)]),
            BTreeMap::from([(1, QMatrix::from_int_rows(&[&[0], &[1]]))]),
        )
        .unwrap();
        let t = TensorProduct::of(&hom, &hom);
        let mut c0 = QMatrix::zero(2, t.module.dim(0));
        // 1.1 = 1, 1.b = b, b.1 = b, b.b = 0.
        c0.set(0, t.index(0, 0, 0, 0), Rational::one());
        c0.set(1, t.index(0, 0, 0, 1), Rational::one());
        c0.set(1, t.index(0, 1, 0, 0), Rational::one());
        let mut c1 = QMatrix::zero(1, t.module.dim(1));
        // 1.a = a = a.1, b.a = a.b = 0.
        c1.set(0, t.index(0, 0, 1, 0), Rational::one());
        c1.set(0, t.index(1, 0, 0, 0), Rational::one());
        let compose = BTreeMap::from([(
            (0usize, 0usize, 0usize),
            ChainMap::new(t.module.clone(), hom.clone(), BTreeMap::from([(0, c0), (1, c1)]))
                .unwrap(),
        )]);
        DgCategory::new(
            vec!["*".into()],
            vec![vec![hom]],
            compose,
            vec![vec![Rational::one(), Rational::zero()]],
        )
        .unwrap()
    }

    // One object, hom spanned by 1, x, x^2 in degree 0 with x^3 = 0.
    fn truncated_polynomials() -> DgCategory {
        let hom = DgModule::single(0, 3);
        let t = TensorProduct::of(&hom, &hom);
        let mut c0 = QMatrix::zero(3, t.module.dim(0));
        for (i, j) in [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)] {
            if i + j <= 2 {
                c0.set(i + j, t.index(0, i, 0, j), Rational::one());
            }
        }
        let compose = BTreeMap::from([(
            (0usize, 0usize, 0usize),
            ChainMap::new(t.module.clone(), hom.clone(), BTreeMap::from([(0, c0)])).unwrap(),
        )]);
        DgCategory::new(
            vec!["*".into()],
            vec![vec![hom]],
            compose,
            vec![vec![Rational::one(), Rational::zero(), Rational::zero()]],
        )
        .unwrap()
    }

    #[test]
    fn constructor_validates_laws() {
        let e = trivial();
        assert!(e.check_associativity(1000, 0));
        // Broken unit.
        let hom = DgModule::single(0, 1);
        let bad = DgCategory::new(
            vec!["*".into()],
            vec![vec![hom]],
            BTreeMap::new(),
            vec![vec![Rational::one()]],
        );
        assert_eq!(bad.unwrap_err(), RingoidError::UnitLaw(0, 0));
    }

    #[test]
    fn associativity_check_catches_errors() {
        // Basis 1, x, y with unit laws intact but x.x = y, x.y = x, y.x = 0:
        // then (x.x).x = y.x = 0 while x.(x.x) = x.y = x.
        let hom = DgModule::single(0, 3);
        let t = TensorProduct::of(&hom, &hom);
        let mut c0 = QMatrix::zero(3, t.module.dim(0));
        for j in 0..3 {
            c0.set(j, t.index(0, 0, 0, j), Rational::one());
        }
        c0.set(1, t.index(0, 1, 0, 0), Rational::one());
        c0.set(2, t.index(0, 2, 0, 0), Rational::one());
        c0.set(2, t.index(0, 1, 0, 1), Rational::one());
        c0.set(1, t.index(0, 1, 0, 2), Rational::one());
        let compose = BTreeMap::from([(
            (0usize, 0usize, 0usize),
            ChainMap::new(t.module.clone(), hom.clone(), BTreeMap::from([(0, c0)])).unwrap(),
        )]);
        let e = DgCategory::new(
            vec!["*".into()],
            vec![vec![hom]],
            compose,
            vec![vec![Rational::one(), Rational::zero(), Rational::zero()]],
        )
        .unwrap();
        assert!(!e.check_associativity(10_000, 0));
        assert!(truncated_polynomials().check_associativity(10_000, 0));
    }

    #[test]
    fn homology_kills_acyclic_summand() {
        let e = acyclic_summand();
        assert!(e.check_associativity(10_000, 0));
        let h = homology_category(&e);
        assert_eq!(h.hom(0, 0).dims(), &BTreeMap::from([(0, 1)]));
        assert_eq!(h.unit(0), &[Rational::one()]);
        assert_eq!(h, trivial());
    }

    #[test]
    fn cover_of_connective_category_is_identity() {
        let e = square_zero(1);
        let (c0, i, p) = connective_cover(&e);
        assert_eq!(c0, e);
        assert!(i.is_quasi_equivalence());
        assert!(i.check_functoriality(10_000, 0));
        // A class in degree 1 survives in the cover but dies under the
        // projection to homology.
        assert!(!p.is_quasi_equivalence());
        assert!(p.check_functoriality(10_000, 0));
    }

    #[test]
    fn cover_truncates_negative_classes() {
        let e = square_zero(-1);
        let (c0, i, p) = connective_cover(&e);
        assert_eq!(c0.hom(0, 0).dims(), &BTreeMap::from([(0, 1)]));
        assert!(!i.is_quasi_equivalence());
        assert!(!p.is_quasi_equivalence());
        // Homology of the cover is the non-negative part of the homology.
        let hc = homology_category(&c0);
        assert_eq!(hc.hom(0, 0).dims(), &BTreeMap::from([(0, 1)]));
        assert_eq!(
            homology_category(&e).hom(0, 0).dims(),
            &BTreeMap::from([(-1, 1), (0, 1)])
        );
    }

    #[test]
    fn cover_resolves_acyclic_summand() {
        let e = acyclic_summand();
        let (c0, i, p) = connective_cover(&e);
        // Degree 0 shrinks to the cycles: 1 and b are both cycles, a is not
        // present in degree 0; d(a) = b survives in the cover.
        assert_eq!(c0.hom(0, 0).dims(), e.hom(0, 0).dims());
        assert!(i.is_quasi_equivalence());
        assert!(p.is_quasi_equivalence());
        assert!(i.check_functoriality(10_000, 0));
        assert!(p.check_functoriality(10_000, 0));
    }

    #[test]
    fn functor_validation() {
        let e = trivial();
        let id = DgFunctor::identity(&e);
        assert!(id.is_quasi_equivalence());
        assert!(id.check_functoriality(100, 0));

        let bad = DgFunctor::new(
            e.clone(),
            e.clone(),
            vec![1],
            vec![vec![ChainMap::identity(e.hom(0, 0))]],
        );
        assert_eq!(
            bad.unwrap_err(),
            RingoidError::FunctorShape("object map out of range".into())
        );

        let doubler = ChainMap::new(
            e.hom(0, 0).clone(),
            e.hom(0, 0).clone(),
            BTreeMap::from([(0, QMatrix::from_int_rows(&[&[2]]))]),
        )
        .unwrap();
        let bad = DgFunctor::new(e.clone(), e.clone(), vec![0], vec![vec![doubler]]);
        assert_eq!(bad.unwrap_err(), RingoidError::UnitNotPreserved(0));
    }

    #[test]
    fn functoriality_check_catches_scaling() {
        let e = truncated_polynomials();
        // 1 -> 1, x -> 2x, x^2 -> 2x^2 preserves units and chain structure
        // but not multiplication: F(x.x) = 2x^2 while F(x).F(x) = 4x^2.
        let scale = ChainMap::new(
            e.hom(0, 0).clone(),
            e.hom(0, 0).clone(),
            BTreeMap::from([(
                0,
                QMatrix::from_int_rows(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
            )]),
        )
        .unwrap();
        let f = DgFunctor::new(e.clone(), e.clone(), vec![0], vec![vec![scale]]).unwrap();
        assert!(!f.check_functoriality(10_000, 0));
    }

    #[test]
    fn non_bijective_object_map_fails_quasi_equivalence() {
        let zero = DgModule::single(0, 0);
        let q = DgModule::single(0, 1);
        let mk_compose = |homs: &Vec<Vec<DgModule>>| {
            let mut compose = BTreeMap::new();
            for a in 0..2 {
                let t = TensorProduct::of(&homs[a][a], &homs[a][a]);
                compose.insert(
                    (a, a, a),
                    ChainMap::new(
                        t.module.clone(),
                        homs[a][a].clone(),
                        BTreeMap::from([(0, QMatrix::identity(1))]),
                    )
                    .unwrap(),
                );
            }
            compose
        };
        let homs = vec![vec![q.clone(), zero.clone()], vec![zero.clone(), q.clone()]];
        let e = DgCategory::new(
            vec!["p".into(), "q".into()],
            homs.clone(),
            mk_compose(&homs),
            vec![vec![Rational::one()], vec![Rational::one()]],
        )
        .unwrap();
        let maps = (0..2)
            .map(|a| {
                (0..2)
                    .map(|b| {
                        if a == b {
                            ChainMap::identity(e.hom(a, a))
                        } else {
                            ChainMap::zero(e.hom(a, b).clone(), e.hom(0, 0).clone())
                        }
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        // Collapse both objects onto the first.
        let maps = vec![
            vec![maps[0][0].clone(), ChainMap::zero(e.hom(0, 1).clone(), e.hom(0, 0).clone())],
            vec![ChainMap::zero(e.hom(1, 0).clone(), e.hom(0, 0).clone()), maps[1][1].clone()],
        ];
        let f = DgFunctor::new(e.clone(), e.clone(), vec![0, 0], maps).unwrap();
        assert!(!f.is_quasi_equivalence());
    }

    #[test]
    fn extraction_hom_table() {
        let ea = extract_ea(2, 2, 2);
        assert_eq!(ea.objects.len(), 5);
        let idx = |k: usize, i: usize| {
            ea.objects
                .iter()
                .position(|&o| o == GeneratorExpression::StalkPower { k, i })
                .unwrap()
        };
        // Same stalk: dim 2^(i+j-1), concentrated in degree 0.
        for k in 1..=2 {
            for i in 1..=2 {
                for j in 1..=2 {
                    let h = ea.category.hom(idx(k, i), idx(k, j));
                    assert_eq!(h.dims(), &BTreeMap::from([(0, 1usize << (i + j - 1))]));
                }
            }
        }
        // Cross stalk: zero.
        assert!(ea.category.hom(idx(1, 1), idx(2, 2)).is_zero());
        assert!(ea.category.hom(idx(2, 1), idx(1, 1)).is_zero());
        // Unit pairs.
        assert_eq!(ea.category.hom(0, 0).dims(), &BTreeMap::from([(0, 3)]));
        assert_eq!(ea.category.hom(0, idx(1, 2)).dim(0), 2);
        assert_eq!(ea.category.hom(idx(1, 2), 0).dim(0), 2);
        assert_eq!(ea.unit_growth.dim_at(7), 8);
        // Degree-0 concentration everywhere.
        for a in 0..5 {
            for b in 0..5 {
                let h = ea.category.hom(a, b);
                assert!(h.support().iter().all(|&n| n == 0));
            }
        }
        assert!(ea.category.check_associativity(600, 3));
    }

    #[test]
    fn extraction_product_table() {
        let ea = extract_ea(2, 2, 2);
        let idx = |k: usize, i: usize| {
            ea.objects
                .iter()
                .position(|&o| o == GeneratorExpression::StalkPower { k, i })
                .unwrap()
        };
        assert_eq!(ea.products[&(0, idx(2, 1))], ProductEntry::Object(idx(2, 1)));
        assert_eq!(ea.products[&(idx(1, 1), idx(1, 1))], ProductEntry::Object(idx(1, 2)));
        assert_eq!(ea.products[&(idx(1, 1), idx(2, 1))], ProductEntry::Zero);
        assert_eq!(
            ea.products[&(idx(1, 2), idx(1, 1))],
            ProductEntry::ExceedsBound { k: 1, power: 3 }
        );
        // In-bounds entries agree with the actual monoidal product.
        for ((x, y), entry) in &ea.products {
            if let ProductEntry::Object(z) = entry {
                let t = tensor(&catalog(ea.objects[*x]), &catalog(ea.objects[*y]));
                assert_eq!(t.normalize(), catalog(ea.objects[*z]).normalize());
            }
        }
    }

    #[test]
    fn extraction_is_its_own_homology() {
        let ea = extract_ea(2, 2, 2);
        let h = homology_category(&ea.category);
        assert_eq!(h, ea.category);
        let (c0, i, p) = connective_cover(&ea.category);
        assert_eq!(c0, ea.category);
        assert!(i.is_quasi_equivalence());
        assert!(p.is_quasi_equivalence());
    }

    #[test]
    fn morita_round_trip() {
        let ea = extract_ea(2, 2, 2);
        for x in 0..ea.objects.len() {
            let m = representable(&ea.category, x);
            let v = tensor_with_generators(&m, &ea, 7).unwrap();
            assert_eq!(v, catalog(ea.objects[x]), "object {x}");
        }
    }

    #[test]
    fn sums_resolve_to_biproducts() {
        let ea = extract_ea(2, 1, 2);
        let m = RightModule::Sum(vec![
            representable(&ea.category, 1),
            representable(&ea.category, 0),
        ]);
        let v = tensor_with_generators(&m, &ea, 7).unwrap();
        let expect =
            DihedralObject::biproduct(&catalog(ea.objects[1]), &catalog(ea.objects[0]));
        assert_eq!(v, expect);
    }

    #[test]
    fn twisted_module_is_rejected() {
        let ea = extract_ea(2, 1, 2);
        // Same value complexes as a representable, but the action forgotten:
        // no cycle can act as an isomorphism.
        if let RightModule::Plain { values, .. } = representable(&ea.category, 1) {
            let m = RightModule::Plain { values, action: BTreeMap::new() };
            assert_eq!(
                tensor_with_generators(&m, &ea, 7).unwrap_err(),
                RingoidError::NotRepresentable
            );
        } else {
            unreachable!();
        }
        // Mismatched value dimensions never match any object.
        let m = RightModule::Plain {
            values: vec![DgModule::single(0, 9); ea.category.len()],
            action: BTreeMap::new(),
        };
        assert_eq!(
            tensor_with_generators(&m, &ea, 7).unwrap_err(),
            RingoidError::NotRepresentable
        );
    }

    #[test]
    fn representable_values_match_hom_spaces() {
        let ea = extract_ea(2, 2, 2);
        let x = 3;
        if let RightModule::Plain { values, .. } = representable(&ea.category, x) {
            for a in 0..ea.category.len() {
                assert_eq!(values[a].dims(), ea.category.hom(a, x).dims());
            }
        } else {
            unreachable!();
        }
    }
}
