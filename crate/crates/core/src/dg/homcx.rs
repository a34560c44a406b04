use std::collections::BTreeMap;

use crate::linalg::{QMatrix, Rational};

use super::{ChainMap, DgModule};

/// Internal hom of bounded complexes: degree n is the product over k of
/// Hom(A_k, B_{k+n}) with differential (delta f) = d_B . f - (-1)^n f . d_A.
/// Blocks are ordered by k ascending; within a block Hom(A_k, B_{k+n}) is
/// flattened column-major (index = j * dim B_{k+n} + i for matrix entry
/// (i, j)), so conjugation by involutions is w_A^T kron w_B blockwise. The
/// result is equivariant when either argument is, missing actions read as
/// trivial; degree-0 cycles fixed by the involution are exactly the
/// equivariant chain maps A -> B.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub module: DgModule,
    a: DgModule,
    b: DgModule,
}

impl HomComplex {
    pub fn of(a: &DgModule, b: &DgModule) -> HomComplex {
        let equivariant = a.is_equivariant() || b.is_equivariant();
        let mut dims: BTreeMap<i32, usize> = BTreeMap::new();
        let degree_range: Vec<i32> = {
            let mut out = Vec::new();
            for &k in a.support().iter() {
                for &m in b.support().iter() {
                    out.push(m - k);
                }
            }
            out.sort_unstable();
            out.dedup();
            out
        };
        for &n in &degree_range {
            let total: usize = a.support().iter().map(|&k| a.dim(k) * b.dim(k + n)).sum();
            if total > 0 {
                dims.insert(n, total);
            }
        }

        let blocks = |n: i32| -> Vec<(i32, usize)> {
            let mut out = Vec::new();
            let mut off = 0;
            for &k in a.support().iter() {
                let sz = a.dim(k) * b.dim(k + n);
                if sz > 0 {
                    out.push((k, off));
                    off += sz;
                }
            }
            out
        };

        let mut d = BTreeMap::new();
        let degs: Vec<i32> = dims.keys().copied().collect();
        for &n in &degs {
            let rows = dims.get(&(n - 1)).copied().unwrap_or(0);
            let cols = dims[&n];
            if rows == 0 {
                continue;
            }
            let tgt = blocks(n - 1);
            let find = |k: i32| tgt.iter().find(|&&(tk, _)| tk == k).map(|&(_, o)| o);
            let mut m = QMatrix::zero(rows, cols);
            let sign = Rational::from_int(if n.rem_euclid(2) == 0 { -1 } else { 1 });
            for &(k, off) in &blocks(n) {
                // d_B . f_k contributes to target block k.
                if b.dim(k + n - 1) > 0 {
                    if let Some(toff) = find(k) {
                        let block = QMatrix::identity(a.dim(k)).kron(&b.d(k + n));
                        super::tensor::copy_block(&mut m, toff, off, &block);
                    }
                }
                // -(-1)^n f_k . d_{A,k+1} contributes to target block k+1.
                if a.dim(k + 1) > 0 && b.dim(k + n) > 0 {
                    if let Some(toff) = find(k + 1) {
                        let block = a.d(k + 1).transpose().kron(&QMatrix::identity(b.dim(k + n))).scale(&sign);
                        super::tensor::copy_block(&mut m, toff, off, &block);
                    }
                }
            }
            d.insert(n, m);
        }

        let w = if equivariant {
            let mut ws = BTreeMap::new();
            for &n in &degs {
                let total = dims[&n];
                let mut m = QMatrix::zero(total, total);
                for &(k, off) in &blocks(n) {
                    let wa = if a.is_equivariant() { a.w(k) } else { QMatrix::identity(a.dim(k)) };
                    let wb = if b.is_equivariant() { b.w(k + n) } else { QMatrix::identity(b.dim(k + n)) };
                    super::tensor::copy_block(&mut m, off, off, &wa.transpose().kron(&wb));
                }
                ws.insert(n, m);
            }
            Some(ws)
        } else {
            None
        };

        let module = DgModule::assembled(dims, d, w);
        HomComplex {
            module,
            a: a.clone(),
            b: b.clone(),
        }
    }

    pub fn source(&self) -> &DgModule {
        &self.a
    }

    pub fn target(&self) -> &DgModule {
        &self.b
    }

    /// Blocks (k, offset) of degree n; block k has shape
    /// dim B_{k+n} x dim A_k.
    pub fn blocks(&self, n: i32) -> Vec<(i32, usize)> {
        let mut out = Vec::new();
        let mut off = 0;
        for &k in self.a.support().iter() {
            let sz = self.a.dim(k) * self.b.dim(k + n);
            if sz > 0 {
                out.push((k, off));
                off += sz;
            }
        }
        out
    }

    /// Unflatten a degree-n element into its component matrices.
    pub fn unpack(&self, n: i32, v: &[Rational]) -> BTreeMap<i32, QMatrix> {
        assert_eq!(v.len(), self.module.dim(n), "element length mismatch");
        let mut out = BTreeMap::new();
        for (k, off) in self.blocks(n) {
            let rows = self.b.dim(k + n);
            let cols = self.a.dim(k);
            let m = QMatrix::from_fn(rows, cols, |i, j| v[off + j * rows + i].clone());
            out.insert(k, m);
        }
        out
    }

    /// Flatten component matrices into a degree-n element; missing blocks are
    /// zero.
    pub fn pack(&self, n: i32, comps: &BTreeMap<i32, QMatrix>) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.module.dim(n)];
        for (k, off) in self.blocks(n) {
            let rows = self.b.dim(k + n);
            let cols = self.a.dim(k);
            if let Some(m) = comps.get(&k) {
                assert_eq!((m.rows(), m.cols()), (rows, cols), "component shape mismatch");
                for j in 0..cols {
                    for i in 0..rows {
                        v[off + j * rows + i] = m.get(i, j).clone();
                    }
                }
            }
        }
        v
    }

    /// Pack a chain map A -> B as a degree-0 element.
    pub fn pack_map(&self, f: &ChainMap) -> Vec<Rational> {
        assert!(f.source() == &self.a && f.target() == &self.b, "map endpoints mismatch");
        self.pack(0, f.components())
    }

    /// Interpret a degree-0 cycle as a chain map A -> B. Fails when the
    /// element is not a cycle (or not equivariant for equivariant ends).
    pub fn unpack_map(&self, v: &[Rational]) -> Result<ChainMap, super::DgError> {
        let comps = self.unpack(0, v);
        let (src, tgt) = self.map_endpoints();
        ChainMap::new(src, tgt, comps)
    }

    /// Endpoint modules adjusted so both sides agree about equivariance:
    /// a plain side is upgraded to the trivial action when the other side is
    /// equivariant.
    pub fn map_endpoints(&self) -> (DgModule, DgModule) {
        match (self.a.is_equivariant(), self.b.is_equivariant()) {
            (true, false) => (self.a.clone(), self.b.with_trivial_involution()),
            (false, true) => (self.a.with_trivial_involution(), self.b.clone()),
            _ => (self.a.clone(), self.b.clone()),
        }
    }

    /// Basis of chain maps A -> B: degree-0 cycles, intersected with the
    /// fixed space of the conjugation action when equivariant.
    pub fn chain_map_basis(&self) -> Vec<ChainMap> {
        let n0 = self.module.dim(0);
        if n0 == 0 {
            return Vec::new();
        }
        let mut constraints = self.module.d(0);
        if self.module.is_equivariant() {
            let fix = &self.module.w(0) - &QMatrix::identity(n0);
            constraints = constraints.vstack(&fix);
        }
        constraints
            .kernel()
            .basis_vectors()
            .into_iter()
            .map(|v| self.unpack_map(&v).expect("cycle fixed by conjugation is a chain map"))
            .collect()
    }
}
