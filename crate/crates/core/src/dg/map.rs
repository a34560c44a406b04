use std::collections::BTreeMap;

use crate::linalg::{quotient, QMatrix, Rational, Subspace};

use super::{DgError, DgModule, Homology};

/// Degreewise linear map commuting with the differentials; when both ends
/// carry involutions it must also commute with those. Zero components are not
/// stored, so equality of maps is syntactic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainMap {
    source: DgModule,
    target: DgModule,
    components: BTreeMap<i32, QMatrix>,
}

impl ChainMap {
    pub fn new(
        source: DgModule,
        target: DgModule,
        components: BTreeMap<i32, QMatrix>,
    ) -> Result<Self, DgError> {
        if source.is_equivariant() != target.is_equivariant() {
            return Err(DgError::EquivarianceMismatch);
        }
        let mut comp = BTreeMap::new();
        for (n, m) in components {
            let expected = (target.dim(n), source.dim(n));
            if expected.0 == 0 || expected.1 == 0 {
                if !m.is_zero() {
                    return Err(DgError::ComponentShape { degree: n });
                }
                continue;
            }
            if (m.rows(), m.cols()) != expected {
                return Err(DgError::ComponentShape { degree: n });
            }
            if !m.is_zero() {
                comp.insert(n, m);
            }
        }
        let f = ChainMap { source, target, components: comp };
        let mut degrees: Vec<i32> = f.source.support();
        degrees.extend(f.target.support());
        degrees.sort_unstable();
        degrees.dedup();
        for &n in &degrees {
            let lhs = f.component(n - 1).matmul(&f.source.d(n));
            let rhs = f.target.d(n).matmul(&f.component(n));
            if lhs != rhs {
                return Err(DgError::NotChainMap { degree: n });
            }
            if f.source.is_equivariant() {
                let lw = f.component(n).matmul(&f.source.w(n));
                let rw = f.target.w(n).matmul(&f.component(n));
                if lw != rw {
                    return Err(DgError::NotEquivariant { degree: n });
                }
            }
        }
        Ok(f)
    }

    pub fn zero(source: DgModule, target: DgModule) -> Self {
        assert_eq!(
            source.is_equivariant(),
            target.is_equivariant(),
            "mixed equivariance in zero map"
        );
        ChainMap { source, target, components: BTreeMap::new() }
    }

    pub fn identity(m: &DgModule) -> Self {
        let comps = m.support().into_iter().map(|n| (n, QMatrix::identity(m.dim(n)))).collect();
        ChainMap {
            source: m.clone(),
            target: m.clone(),
            components: comps,
        }
    }

    pub fn source(&self) -> &DgModule {
        &self.source
    }

    pub fn target(&self) -> &DgModule {
        &self.target
    }

    pub fn component(&self, n: i32) -> QMatrix {
        self.components
            .get(&n)
            .cloned()
            .unwrap_or_else(|| QMatrix::zero(self.target.dim(n), self.source.dim(n)))
    }

    pub fn components(&self) -> &BTreeMap<i32, QMatrix> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// self after g.
    pub fn compose(&self, g: &ChainMap) -> Result<ChainMap, DgError> {
        if g.target != self.source {
            return Err(DgError::ComposeMismatch);
        }
        let mut comps = BTreeMap::new();
        for &n in g.source.support().iter() {
            let m = self.component(n).matmul(&g.component(n));
            if !m.is_zero() {
                comps.insert(n, m);
            }
        }
        Ok(ChainMap {
            source: g.source.clone(),
            target: self.target.clone(),
            components: comps,
        })
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert!(self.source == other.source && self.target == other.target, "shape mismatch");
        let mut comps = BTreeMap::new();
        let mut degrees: Vec<i32> = self.components.keys().chain(other.components.keys()).copied().collect();
        degrees.sort_unstable();
        degrees.dedup();
        for n in degrees {
            let m = &self.component(n) + &other.component(n);
            if !m.is_zero() {
                comps.insert(n, m);
            }
        }
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            components: comps,
        }
    }

    pub fn scale(&self, c: &Rational) -> ChainMap {
        if c.is_zero() {
            return ChainMap::zero(self.source.clone(), self.target.clone());
        }
        let comps = self.components.iter().map(|(&n, m)| (n, m.scale(c))).collect();
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            components: comps,
        }
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn is_surjection(&self) -> bool {
        self.target
            .support()
            .iter()
            .all(|&n| self.component(n).rank() == self.target.dim(n))
    }

    pub fn is_injection(&self) -> bool {
        self.source
            .support()
            .iter()
            .all(|&n| self.component(n).rank() == self.source.dim(n))
    }

    pub fn is_quasi_iso(&self) -> bool {
        let hs = Homology::of(&self.source);
        let ht = Homology::of(&self.target);
        Homology::induced_is_iso(self, &hs, &ht)
    }

    /// Degreewise kernel subcomplex with its inclusion.
    pub fn kernel_complex(&self) -> (DgModule, ChainMap) {
        let mut sub: BTreeMap<i32, Subspace> = BTreeMap::new();
        for &n in self.source.support().iter() {
            sub.insert(n, self.component(n).kernel());
        }
        let mut dims = BTreeMap::new();
        let mut d = BTreeMap::new();
        let mut w = BTreeMap::new();
        let mut incl = BTreeMap::new();
        for (&n, s) in &sub {
            if s.dim() == 0 {
                continue;
            }
            dims.insert(n, s.dim());
            incl.insert(n, s.basis_matrix().clone());
            let express = |mapped: &QMatrix, into: &Subspace, what: &str| {
                let mut coords = QMatrix::zero(into.dim(), mapped.cols());
                for j in 0..mapped.cols() {
                    let c = into.coordinates(&mapped.col_vec(j)).unwrap_or_else(|| panic!("{what} preserves the kernel"));
                    for (i, v) in c.into_iter().enumerate() {
                        coords.set(i, j, v);
                    }
                }
                coords
            };
            if let Some(prev) = sub.get(&(n - 1)) {
                if prev.dim() > 0 && self.source.dim(n - 1) > 0 {
                    let mapped = self.source.d(n).matmul(s.basis_matrix());
                    d.insert(n, express(&mapped, prev, "d"));
                }
            }
            if self.source.is_equivariant() {
                let mapped = self.source.w(n).matmul(s.basis_matrix());
                w.insert(n, express(&mapped, s, "w"));
            }
        }
        let ker = if self.source.is_equivariant() {
            DgModule::new_w(dims, d, w)
        } else {
            DgModule::new(dims, d)
        }
        .expect("restricted structure is valid");
        let inc = ChainMap::new(ker.clone(), self.source.clone(), incl).expect("inclusion is a chain map");
        (ker, inc)
    }

    /// Degreewise cokernel with its projection.
    pub fn cokernel_complex(&self) -> (DgModule, ChainMap) {
        let mut projs: BTreeMap<i32, (usize, QMatrix)> = BTreeMap::new();
        for &n in self.target.support().iter() {
            let im = self.component(n).image();
            projs.insert(n, quotient(self.target.dim(n), &im));
        }
        let mut dims = BTreeMap::new();
        let mut d = BTreeMap::new();
        let mut w = BTreeMap::new();
        let mut pr = BTreeMap::new();
        for (&n, (q, p)) in &projs {
            if *q == 0 {
                continue;
            }
            dims.insert(n, *q);
            pr.insert(n, p.clone());
            // Induced maps on the quotient: pick a section s of p, then
            // (induced) = p' . m . s is independent of the choice because m
            // preserves the image being killed.
            let section = p.solve_matrix(&QMatrix::identity(*q)).expect("projection is onto");
            if let Some((qprev, pprev)) = projs.get(&(n - 1)) {
                if *qprev > 0 && self.target.dim(n) > 0 {
                    let ind = pprev.matmul(&self.target.d(n)).matmul(&section);
                    d.insert(n, ind);
                }
            }
            if self.target.is_equivariant() {
                let ind = p.matmul(&self.target.w(n)).matmul(&section);
                w.insert(n, ind);
            }
        }
        let coker = if self.target.is_equivariant() {
            DgModule::new_w(dims, d, w)
        } else {
            DgModule::new(dims, d)
        }
        .expect("induced structure on the quotient is valid");
        let proj = ChainMap::new(self.target.clone(), coker.clone(), pr).expect("projection is a chain map");
        (coker, proj)
    }

    /// Restriction of an equivariant map to the W-fixed subcomplexes.
    pub fn fixed_restriction(&self) -> ChainMap {
        let (fa, ia) = self.source().fixed_points();
        let (fb, ib) = self.target().fixed_points();
        let mut comps = BTreeMap::new();
        for &n in fa.support().iter() {
            let mapped = self.component(n).matmul(&ia[&n]);
            if fb.dim(n) == 0 {
                assert!(mapped.is_zero(), "equivariant maps preserve fixed points");
                continue;
            }
            let m = ib[&n]
                .solve_matrix(&mapped)
                .expect("equivariant maps preserve fixed points");
            if !m.is_zero() {
                comps.insert(n, m);
            }
        }
        ChainMap::new(fa, fb, comps).expect("restriction of a chain map is a chain map")
    }

    /// Factor self along a degreewise-surjective map p with the same source:
    /// g with g . p = self, when self kills ker(p).
    pub fn factor_along(&self, p: &ChainMap) -> Option<ChainMap> {
        assert!(self.source == *p.source(), "sources differ");
        let mut comps = BTreeMap::new();
        for &n in p.target().support().iter() {
            let gt = p
                .component(n)
                .transpose()
                .solve_matrix(&self.component(n).transpose())?;
            let g = gt.transpose();
            if !g.is_zero() {
                comps.insert(n, g);
            }
        }
        let g = ChainMap::new(p.target().clone(), self.target.clone(), comps).ok()?;
        (g.compose(p).expect("sources agree") == *self).then_some(g)
    }

    /// Factor self through a degreewise-injective map j with the same target:
    /// g with j . g = self, when the image lands inside im(j).
    pub fn factor_through(&self, j: &ChainMap) -> Option<ChainMap> {
        assert!(self.target == *j.target(), "targets differ");
        let mut comps = BTreeMap::new();
        for &n in self.source.support().iter() {
            let g = j.component(n).solve_matrix(&self.component(n))?;
            if !g.is_zero() {
                comps.insert(n, g);
            }
        }
        ChainMap::new(self.source.clone(), j.source().clone(), comps).ok()
    }
}
