use std::collections::BTreeMap;

use crate::linalg::{QMatrix, Rational};

use super::{ChainMap, DgModule};

/// cone(f)_n = B_n + A_{n-1}, d(b, a) = (d b + f a, -d a). A chain map is a
/// quasi-isomorphism exactly when its cone is acyclic.
pub fn mapping_cone(f: &ChainMap) -> DgModule {
    let a = f.source();
    let b = f.target();
    let mut degrees: Vec<i32> = b.support();
    degrees.extend(a.support().iter().map(|&n| n + 1));
    degrees.sort_unstable();
    degrees.dedup();

    let mut dims = BTreeMap::new();
    for &n in &degrees {
        let total = b.dim(n) + a.dim(n - 1);
        if total > 0 {
            dims.insert(n, total);
        }
    }
    let mut d = BTreeMap::new();
    for &n in &degrees {
        let rows = b.dim(n - 1) + a.dim(n - 2);
        let cols = b.dim(n) + a.dim(n - 1);
        if rows == 0 || cols == 0 {
            continue;
        }
        let top = b.d(n).hstack(&f.component(n - 1));
        let bottom = QMatrix::zero(a.dim(n - 2), b.dim(n))
            .hstack(&a.d(n - 1).scale(&Rational::from_int(-1)));
        d.insert(n, top.vstack(&bottom));
    }
    if a.is_equivariant() {
        let mut w = BTreeMap::new();
        for &n in &degrees {
            w.insert(n, b.w(n).direct_sum(&a.w(n - 1)));
        }
        DgModule::new_w(dims, d, w).expect("cone structure is valid")
    } else {
        DgModule::new(dims, d).expect("cone structure is valid")
    }
}

/// Mapping cylinder factorization f = p . j with j degreewise split injective
/// and p a surjective quasi-isomorphism.
pub struct Cylinder {
    pub cylinder: DgModule,
    pub j: ChainMap,
    pub p: ChainMap,
}

/// cyl(f)_n = A_n + A_{n-1} + B_n with d(a, a', b) = (d a + a', -d a',
/// d b - f a'); j includes A as the first summand, p collapses by
/// (a, a', b) -> f a + b.
pub fn mapping_cylinder(f: &ChainMap) -> Cylinder {
    let a = f.source();
    let b = f.target();
    let mut degrees: Vec<i32> = a.support();
    degrees.extend(a.support().iter().map(|&n| n + 1));
    degrees.extend(b.support());
    degrees.sort_unstable();
    degrees.dedup();

    let mut dims = BTreeMap::new();
    for &n in &degrees {
        let total = a.dim(n) + a.dim(n - 1) + b.dim(n);
        if total > 0 {
            dims.insert(n, total);
        }
    }
    let mut d = BTreeMap::new();
    for &n in &degrees {
        let rows = a.dim(n - 1) + a.dim(n - 2) + b.dim(n - 1);
        let cols = a.dim(n) + a.dim(n - 1) + b.dim(n);
        if rows == 0 || cols == 0 {
            continue;
        }
        let neg = Rational::from_int(-1);
        let row1 = a
            .d(n)
            .hstack(&QMatrix::identity(a.dim(n - 1)))
            .hstack(&QMatrix::zero(a.dim(n - 1), b.dim(n)));
        let row2 = QMatrix::zero(a.dim(n - 2), a.dim(n))
            .hstack(&a.d(n - 1).scale(&neg))
            .hstack(&QMatrix::zero(a.dim(n - 2), b.dim(n)));
        let row3 = QMatrix::zero(b.dim(n - 1), a.dim(n))
            .hstack(&f.component(n - 1).scale(&neg))
            .hstack(&b.d(n));
        d.insert(n, row1.vstack(&row2).vstack(&row3));
    }
    let cylinder = if a.is_equivariant() {
        let mut w = BTreeMap::new();
        for &n in &degrees {
            w.insert(n, a.w(n).direct_sum(&a.w(n - 1)).direct_sum(&b.w(n)));
        }
        DgModule::new_w(dims, d, w).expect("cylinder structure is valid")
    } else {
        DgModule::new(dims, d).expect("cylinder structure is valid")
    };

    let mut jc = BTreeMap::new();
    let mut pc = BTreeMap::new();
    for &n in &degrees {
        let an = a.dim(n);
        let an1 = a.dim(n - 1);
        let bn = b.dim(n);
        if an + an1 + bn == 0 {
            continue;
        }
        if an > 0 {
            let j = QMatrix::identity(an)
                .vstack(&QMatrix::zero(an1, an))
                .vstack(&QMatrix::zero(bn, an));
            jc.insert(n, j);
        }
        if bn > 0 {
            let p = f
                .component(n)
                .hstack(&QMatrix::zero(bn, an1))
                .hstack(&QMatrix::identity(bn));
            pc.insert(n, p);
        }
    }
    let j = ChainMap::new(a.clone(), cylinder.clone(), jc).expect("cylinder inclusion is a chain map");
    let p = ChainMap::new(cylinder.clone(), b.clone(), pc).expect("cylinder collapse is a chain map");
    Cylinder { cylinder, j, p }
}
