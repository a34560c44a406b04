use std::collections::BTreeMap;

use crate::linalg::{QMatrix, Subspace};

use super::{ChainMap, DgError};

/// Bounded chain complex over Q. Homological indexing: `d_n` maps degree n to
/// degree n-1 and `d * d = 0`. When `w` is present the complex carries an
/// order-two degreewise action commuting with `d` (a QW-module); the
/// involution is stored for every supported degree so equality is syntactic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DgModule {
    dims: BTreeMap<i32, usize>,
    d: BTreeMap<i32, QMatrix>,
    w: Option<BTreeMap<i32, QMatrix>>,
}

impl DgModule {
    pub fn new(dims: BTreeMap<i32, usize>, d: BTreeMap<i32, QMatrix>) -> Result<Self, DgError> {
        Self::build(dims, d, None)
    }

    pub fn new_w(
        dims: BTreeMap<i32, usize>,
        d: BTreeMap<i32, QMatrix>,
        w: BTreeMap<i32, QMatrix>,
    ) -> Result<Self, DgError> {
        Self::build(dims, d, Some(w))
    }

    fn build(
        dims: BTreeMap<i32, usize>,
        d: BTreeMap<i32, QMatrix>,
        w: Option<BTreeMap<i32, QMatrix>>,
    ) -> Result<Self, DgError> {
        let dims: BTreeMap<i32, usize> = dims.into_iter().filter(|&(_, n)| n > 0).collect();
        let dim = |n: i32| dims.get(&n).copied().unwrap_or(0);

        let mut diff = BTreeMap::new();
        for (n, m) in d {
            let expected = (dim(n - 1), dim(n));
            if expected.0 == 0 || expected.1 == 0 {
                if !m.is_zero() {
                    return Err(DgError::DifferentialShape {
                        degree: n,
                        got: (m.rows(), m.cols()),
                        expected,
                    });
                }
                continue;
            }
            if (m.rows(), m.cols()) != expected {
                return Err(DgError::DifferentialShape {
                    degree: n,
                    got: (m.rows(), m.cols()),
                    expected,
                });
            }
            if !m.is_zero() {
                diff.insert(n, m);
            }
        }
        for (&n, m) in &diff {
            if let Some(next) = diff.get(&(n - 1)) {
                if !next.matmul(m).is_zero() {
                    return Err(DgError::DSquared { degree: n - 2 });
                }
            }
        }

        let w = match w {
            None => None,
            Some(given) => {
                let mut full = BTreeMap::new();
                for (&n, &dn) in &dims {
                    let wn = given.get(&n).cloned().unwrap_or_else(|| QMatrix::identity(dn));
                    if (wn.rows(), wn.cols()) != (dn, dn) {
                        return Err(DgError::InvolutionShape { degree: n });
                    }
                    if !wn.matmul(&wn).is_identity() {
                        return Err(DgError::InvolutionNotInvolutive { degree: n });
                    }
                    full.insert(n, wn);
                }
                for (&n, m) in &diff {
                    let wn = &full[&n];
                    let wprev = &full[&(n - 1)];
                    if wprev.matmul(m) != m.matmul(wn) {
                        return Err(DgError::InvolutionDifferential { degree: n });
                    }
                }
                Some(full)
            }
        };

        Ok(DgModule { dims, d: diff, w })
    }

    /// Assembly for derived complexes (homs, tensors, sums) whose laws hold
    /// by construction; skips the quadratic validation but applies the same
    /// normalization as `build` so equality stays structural.
    pub(crate) fn assembled(
        dims: BTreeMap<i32, usize>,
        d: BTreeMap<i32, QMatrix>,
        w: Option<BTreeMap<i32, QMatrix>>,
    ) -> Self {
        let dims: BTreeMap<i32, usize> = dims.into_iter().filter(|&(_, n)| n > 0).collect();
        let d: BTreeMap<i32, QMatrix> = d
            .into_iter()
            .filter(|(n, m)| {
                dims.contains_key(n) && dims.contains_key(&(n - 1)) && !m.is_zero()
            })
            .collect();
        let w = w.map(|given| {
            dims.iter()
                .map(|(&n, &dn)| {
                    let wn = given
                        .get(&n)
                        .cloned()
                        .unwrap_or_else(|| QMatrix::identity(dn));
                    (n, wn)
                })
                .collect()
        });
        DgModule { dims, d, w }
    }

    pub fn zero_module(equivariant: bool) -> Self {
        DgModule {
            dims: BTreeMap::new(),
            d: BTreeMap::new(),
            w: if equivariant { Some(BTreeMap::new()) } else { None },
        }
    }

    /// Q^dim concentrated in one degree, trivial differential.
    pub fn single(deg: i32, dim: usize) -> Self {
        let mut dims = BTreeMap::new();
        if dim > 0 {
            dims.insert(deg, dim);
        }
        DgModule { dims, d: BTreeMap::new(), w: None }
    }

    /// One degree with a prescribed involution.
    pub fn single_w(deg: i32, w: QMatrix) -> Self {
        assert_eq!(w.rows(), w.cols(), "involution must be square");
        let dim = w.rows();
        let mut dims = BTreeMap::new();
        let mut ws = BTreeMap::new();
        if dim > 0 {
            dims.insert(deg, dim);
            ws.insert(deg, w);
        }
        let m = DgModule { dims, d: BTreeMap::new(), w: Some(ws) };
        debug_assert!(m.validate().is_ok());
        m
    }

    fn validate(&self) -> Result<(), DgError> {
        Self::build(self.dims.clone(), self.d.clone(), self.w.clone()).map(|_| ())
    }

    pub fn is_equivariant(&self) -> bool {
        self.w.is_some()
    }

    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.dims
    }

    pub fn dim(&self, n: i32) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn support(&self) -> Vec<i32> {
        self.dims.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.dims.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.dims.keys().last().copied()
    }

    /// Differential leaving degree n, materialized at full shape.
    pub fn d(&self, n: i32) -> QMatrix {
        self.d
            .get(&n)
            .cloned()
            .unwrap_or_else(|| QMatrix::zero(self.dim(n - 1), self.dim(n)))
    }

    /// Involution at degree n. Panics on a non-equivariant module.
    pub fn w(&self, n: i32) -> QMatrix {
        let ws = self.w.as_ref().expect("module carries no involution");
        ws.get(&n).cloned().unwrap_or_else(|| QMatrix::identity(self.dim(n)))
    }

    pub fn forget_involution(&self) -> DgModule {
        DgModule {
            dims: self.dims.clone(),
            d: self.d.clone(),
            w: None,
        }
    }

    pub fn with_trivial_involution(&self) -> DgModule {
        assert!(self.w.is_none(), "module already carries an involution");
        let w = self.dims.keys().map(|&n| (n, QMatrix::identity(self.dim(n)))).collect();
        DgModule {
            dims: self.dims.clone(),
            d: self.d.clone(),
            w: Some(w),
        }
    }

    /// Degree shift: shift(k) places degree n of self in degree n+k and
    /// twists the differential by (-1)^k.
    pub fn shift(&self, k: i32) -> DgModule {
        let dims = self.dims.iter().map(|(&n, &d)| (n + k, d)).collect();
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        let d = self
            .d
            .iter()
            .map(|(&n, m)| (n + k, m.scale(&crate::linalg::Rational::from_int(sign))))
            .collect();
        let w = self
            .w
            .as_ref()
            .map(|ws| ws.iter().map(|(&n, m)| (n + k, m.clone())).collect());
        DgModule { dims, d, w }
    }

    /// Biproduct with injections and projections.
    pub fn direct_sum(parts: &[&DgModule]) -> (DgModule, Vec<ChainMap>, Vec<ChainMap>) {
        assert!(!parts.is_empty(), "empty direct sum needs an equivariance flag");
        let equivariant = parts[0].is_equivariant();
        assert!(
            parts.iter().all(|p| p.is_equivariant() == equivariant),
            "mixed equivariance in direct sum"
        );
        let mut degrees: Vec<i32> = Vec::new();
        for p in parts {
            degrees.extend(p.support());
        }
        degrees.sort_unstable();
        degrees.dedup();

        let mut dims = BTreeMap::new();
        for &n in &degrees {
            let total: usize = parts.iter().map(|p| p.dim(n)).sum();
            dims.insert(n, total);
        }
        let mut d = BTreeMap::new();
        for &n in &degrees {
            let mut block = parts[0].d(n);
            for p in &parts[1..] {
                block = block.direct_sum(&p.d(n));
            }
            d.insert(n, block);
        }
        let w = if equivariant {
            let mut ws = BTreeMap::new();
            for &n in &degrees {
                let mut block = parts[0].w(n);
                for p in &parts[1..] {
                    block = block.direct_sum(&p.w(n));
                }
                ws.insert(n, block);
            }
            Some(ws)
        } else {
            None
        };
        let sum = Self::build(dims, d, w).expect("blockwise data stays valid");

        let mut injections = Vec::new();
        let mut projections = Vec::new();
        let mut offset_at: BTreeMap<i32, usize> = degrees.iter().map(|&n| (n, 0)).collect();
        for p in parts {
            let mut inj = BTreeMap::new();
            let mut proj = BTreeMap::new();
            for &n in &degrees {
                let off = offset_at[&n];
                let k = p.dim(n);
                let total = sum.dim(n);
                if k > 0 {
                    let m = QMatrix::from_fn(total, k, |i, j| {
                        if i == off + j {
                            crate::linalg::Rational::one()
                        } else {
                            crate::linalg::Rational::zero()
                        }
                    });
                    proj.insert(n, m.transpose());
                    inj.insert(n, m);
                }
                offset_at.insert(n, off + k);
            }
            injections.push(ChainMap::new((*p).clone(), sum.clone(), inj).expect("injection is a chain map"));
            projections.push(ChainMap::new(sum.clone(), (*p).clone(), proj).expect("projection is a chain map"));
        }
        (sum, injections, projections)
    }

    /// W-fixed subcomplex: degreewise kernel of (w - id). Returns the plain
    /// complex and the per-degree inclusion matrices into self.
    pub fn fixed_points(&self) -> (DgModule, BTreeMap<i32, QMatrix>) {
        assert!(self.is_equivariant(), "fixed points of a plain module");
        let mut sub: BTreeMap<i32, Subspace> = BTreeMap::new();
        for &n in self.dims.keys() {
            let wm = self.w(n);
            let m = &wm - &QMatrix::identity(self.dim(n));
            sub.insert(n, m.kernel());
        }
        let mut dims = BTreeMap::new();
        let mut d = BTreeMap::new();
        let mut incl = BTreeMap::new();
        for (&n, s) in &sub {
            if s.dim() == 0 {
                continue;
            }
            dims.insert(n, s.dim());
            incl.insert(n, s.basis_matrix().clone());
            if self.dim(n - 1) > 0 {
                if let Some(prev) = sub.get(&(n - 1)) {
                    if prev.dim() > 0 {
                        let mapped = self.d(n).matmul(s.basis_matrix());
                        let mut coords = QMatrix::zero(prev.dim(), s.dim());
                        for j in 0..s.dim() {
                            let c = prev
                                .coordinates(&mapped.col_vec(j))
                                .expect("d preserves fixed vectors");
                            for (i, v) in c.into_iter().enumerate() {
                                coords.set(i, j, v);
                            }
                        }
                        d.insert(n, coords);
                    }
                }
            }
        }
        let fixed = Self::build(dims, d, None).expect("restricted differential still squares to zero");
        (fixed, incl)
    }
}
