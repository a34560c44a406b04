use std::collections::BTreeMap;

use crate::linalg::{QMatrix, Rational};

use super::{ChainMap, DgModule};

/// Graded tensor product with the Koszul differential
/// d(x ox y) = dx ox y + (-1)^{|x|} x ox dy.
/// Degree n is the ordered sum of blocks A_p ox B_q over p + q = n with p
/// ascending; within a block the basis is (i, j) -> i * dim(B_q) + j. The
/// involution acts diagonally; a plain factor tensored against an equivariant
/// one is treated as carrying the trivial action.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: DgModule,
    a: DgModule,
    b: DgModule,
}

impl TensorProduct {
    pub fn of(a: &DgModule, b: &DgModule) -> TensorProduct {
        let equivariant = a.is_equivariant() || b.is_equivariant();
        let mut dims: BTreeMap<i32, usize> = BTreeMap::new();
        for &p in a.support().iter() {
            for &q in b.support().iter() {
                *dims.entry(p + q).or_insert(0) += a.dim(p) * b.dim(q);
            }
        }
        let degree_list: Vec<i32> = dims.keys().copied().collect();
        let layout = |n: i32| -> Vec<(i32, i32, usize)> {
            let mut blocks = Vec::new();
            let mut off = 0;
            for &p in a.support().iter() {
                let q = n - p;
                let sz = a.dim(p) * b.dim(q);
                if sz > 0 {
                    blocks.push((p, q, off));
                    off += sz;
                }
            }
            blocks
        };

        let mut d = BTreeMap::new();
        for &n in &degree_list {
            let rows = dims.get(&(n - 1)).copied().unwrap_or(0);
            let cols = dims[&n];
            if rows == 0 || cols == 0 {
                continue;
            }
            let src = layout(n);
            let tgt = layout(n - 1);
            let find = |p: i32, q: i32| tgt.iter().find(|&&(tp, tq, _)| tp == p && tq == q).map(|&(_, _, o)| o);
            let mut m = QMatrix::zero(rows, cols);
            for &(p, q, off) in &src {
                // d_A ox id lands in block (p-1, q).
                if a.dim(p - 1) > 0 {
                    if let Some(toff) = find(p - 1, q) {
                        let block = a.d(p).kron(&QMatrix::identity(b.dim(q)));
                        copy_block(&mut m, toff, off, &block);
                    }
                }
                // (-1)^p id ox d_B lands in block (p, q-1).
                if b.dim(q - 1) > 0 {
                    if let Some(toff) = find(p, q - 1) {
                        let sign = Rational::from_int(if p.rem_euclid(2) == 0 { 1 } else { -1 });
                        let block = QMatrix::identity(a.dim(p)).kron(&b.d(q)).scale(&sign);
                        copy_block(&mut m, toff, off, &block);
                    }
                }
            }
            d.insert(n, m);
        }

        let w = if equivariant {
            let mut ws = BTreeMap::new();
            for &n in &degree_list {
                let total = dims[&n];
                let mut m = QMatrix::zero(total, total);
                for &(p, q, off) in &layout(n) {
                    let wa = if a.is_equivariant() { a.w(p) } else { QMatrix::identity(a.dim(p)) };
                    let wb = if b.is_equivariant() { b.w(q) } else { QMatrix::identity(b.dim(q)) };
                    copy_block(&mut m, off, off, &wa.kron(&wb));
                }
                ws.insert(n, m);
            }
            Some(ws)
        } else {
            None
        };

        let module = match w {
            Some(ws) => DgModule::new_w(dims, d, ws),
            None => DgModule::new(dims, d),
        }
        .expect("Koszul differential squares to zero");
        TensorProduct {
            module,
            a: a.clone(),
            b: b.clone(),
        }
    }

    pub fn left(&self) -> &DgModule {
        &self.a
    }

    pub fn right(&self) -> &DgModule {
        &self.b
    }

    /// Blocks (p, q, offset) of degree n, p ascending.
    pub fn blocks(&self, n: i32) -> Vec<(i32, i32, usize)> {
        let mut blocks = Vec::new();
        let mut off = 0;
        for &p in self.a.support().iter() {
            let q = n - p;
            let sz = self.a.dim(p) * self.b.dim(q);
            if sz > 0 {
                blocks.push((p, q, off));
                off += sz;
            }
        }
        blocks
    }

    pub fn offset(&self, p: i32, q: i32) -> Option<usize> {
        self.blocks(p + q)
            .into_iter()
            .find(|&(bp, bq, _)| bp == p && bq == q)
            .map(|(_, _, o)| o)
    }

    /// Index of the pure tensor (basis i of A_p) ox (basis j of B_q).
    pub fn index(&self, p: i32, i: usize, q: i32, j: usize) -> usize {
        self.offset(p, q).expect("block exists") + i * self.b.dim(q) + j
    }
}

pub(crate) fn copy_block(m: &mut QMatrix, row0: usize, col0: usize, block: &QMatrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = block.get(i, j);
            if !v.is_zero() {
                m.set(row0 + i, col0 + j, v.clone());
            }
        }
    }
}

/// f ox g on the chosen layouts; degree-0 chain maps need no Koszul sign.
pub fn tensor_map(src: &TensorProduct, tgt: &TensorProduct, f: &ChainMap, g: &ChainMap) -> ChainMap {
    assert!(f.source() == src.left() && f.target() == tgt.left(), "f endpoints mismatch");
    assert!(g.source() == src.right() && g.target() == tgt.right(), "g endpoints mismatch");
    let mut comps = BTreeMap::new();
    for &n in src.module.support().iter() {
        let rows = tgt.module.dim(n);
        let cols = src.module.dim(n);
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut m = QMatrix::zero(rows, cols);
        for &(p, q, off) in &src.blocks(n) {
            if let Some(toff) = tgt.offset(p, q) {
                let block = f.component(p).kron(&g.component(q));
                copy_block(&mut m, toff, off, &block);
            }
        }
        comps.insert(n, m);
    }
    ChainMap::new(src.module.clone(), tgt.module.clone(), comps).expect("tensor of chain maps is a chain map")
}

/// (A ox B) ox C -> A ox (B ox C), a basis permutation with no signs.
pub fn associator(a: &DgModule, b: &DgModule, c: &DgModule) -> ChainMap {
    let ab = TensorProduct::of(a, b);
    let bc = TensorProduct::of(b, c);
    let left = TensorProduct::of(&ab.module, c);
    let right = TensorProduct::of(a, &bc.module);
    let mut comps = BTreeMap::new();
    for &n in left.module.support().iter() {
        let dim = left.module.dim(n);
        let mut m = QMatrix::zero(right.module.dim(n), dim);
        for &(pq, r, off_l) in &left.blocks(n) {
            for &(p, q, off_ab) in &ab.blocks(pq) {
                for i in 0..a.dim(p) {
                    for j in 0..b.dim(q) {
                        for k in 0..c.dim(r) {
                            let src = off_l + (off_ab + i * b.dim(q) + j) * c.dim(r) + k;
                            let tgt = right.offset(p, q + r).expect("block exists")
                                + i * bc.module.dim(q + r)
                                + bc.index(q, j, r, k);
                            m.set(tgt, src, Rational::one());
                        }
                    }
                }
            }
        }
        comps.insert(n, m);
    }
    ChainMap::new(left.module.clone(), right.module.clone(), comps).expect("associator is a chain map")
}

/// A ox B -> B ox A, x ox y -> (-1)^{|x||y|} y ox x.
pub fn braiding(a: &DgModule, b: &DgModule) -> ChainMap {
    let ab = TensorProduct::of(a, b);
    let ba = TensorProduct::of(b, a);
    let mut comps = BTreeMap::new();
    for &n in ab.module.support().iter() {
        let mut m = QMatrix::zero(ba.module.dim(n), ab.module.dim(n));
        for &(p, q, off) in &ab.blocks(n) {
            let sign = Rational::from_int(if (p * q).rem_euclid(2) == 0 { 1 } else { -1 });
            for i in 0..a.dim(p) {
                for j in 0..b.dim(q) {
                    let src = off + i * b.dim(q) + j;
                    let tgt = ba.index(q, j, p, i);
                    m.set(tgt, src, sign.clone());
                }
            }
        }
        comps.insert(n, m);
    }
    ChainMap::new(ab.module.clone(), ba.module.clone(), comps).expect("braiding is a chain map")
}

/// The tensor unit: Q in degree 0.
pub fn unit_module() -> DgModule {
    DgModule::single(0, 1)
}

/// 1 ox A -> A. With the chosen layout this is the identity matrix degreewise.
pub fn left_unit(a: &DgModule) -> ChainMap {
    let ua = TensorProduct::of(&unit_module(), a);
    let comps = a
        .support()
        .into_iter()
        .map(|n| (n, QMatrix::identity(a.dim(n))))
        .collect();
    ChainMap::new(ua.module.clone(), a.clone(), comps).expect("left unitor is a chain map")
}

/// A ox 1 -> A.
pub fn right_unit(a: &DgModule) -> ChainMap {
    let au = TensorProduct::of(a, &unit_module());
    let comps = a
        .support()
        .into_iter()
        .map(|n| (n, QMatrix::identity(a.dim(n))))
        .collect();
    ChainMap::new(au.module.clone(), a.clone(), comps).expect("right unitor is a chain map")
}
