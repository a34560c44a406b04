use crate::dg::{ChainMap, HomComplex};
use crate::linalg::{QMatrix, Rational};

use super::{DihedralMorphism, DihedralObject};

/// Basis of the space of pairs (f_infinity, f_tail) satisfying the germ
/// condition sigma_b . f_infinity = f_tail . sigma_a. The stalk components of
/// a morphism are unconstrained, so this is the only coupled part of a hom
/// computation.
pub fn germ_pairs(a: &DihedralObject, b: &DihedralObject) -> Vec<(ChainMap, ChainMap)> {
    let inf_basis = HomComplex::of(a.infinity(), b.infinity()).chain_map_basis();
    let tail_basis = HomComplex::of(a.tail(), b.tail()).chain_map_basis();
    let mut degrees: Vec<i32> = a.infinity().support();
    degrees.extend(b.tail().support());
    degrees.sort_unstable();
    degrees.dedup();

    // One row per entry of (sigma_b f_inf - f_tail sigma_a)_n; columns are
    // the basis coefficients.
    let rows: usize = degrees
        .iter()
        .map(|&n| b.tail().dim(n) * a.infinity().dim(n))
        .sum();
    let cols = inf_basis.len() + tail_basis.len();
    let mut m = QMatrix::zero(rows, cols);
    let mut fill = |col: usize, per_degree: &dyn Fn(i32) -> QMatrix, sign: i64| {
        let mut row0 = 0;
        for &n in &degrees {
            let block = per_degree(n);
            for j in 0..block.cols() {
                for i in 0..block.rows() {
                    let v = block.get(i, j).clone() * Rational::from_int(sign);
                    if !v.is_zero() {
                        m.set(row0 + j * block.rows() + i, col, v);
                    }
                }
            }
            row0 += block.rows() * block.cols();
        }
    };
    for (idx, f) in inf_basis.iter().enumerate() {
        fill(idx, &|n| b.sigma(n).matmul(&f.component(n)), 1);
    }
    for (idx, g) in tail_basis.iter().enumerate() {
        fill(inf_basis.len() + idx, &|n| g.component(n).matmul(&a.sigma(n)), -1);
    }

    m.kernel()
        .basis_vectors()
        .into_iter()
        .map(|coef| {
            let mut f_inf = ChainMap::zero(a.infinity().clone(), b.infinity().clone());
            for (i, f) in inf_basis.iter().enumerate() {
                f_inf = f_inf.add(&f.scale(&coef[i]));
            }
            let mut f_tail = ChainMap::zero(a.tail().clone(), b.tail().clone());
            for (j, g) in tail_basis.iter().enumerate() {
                f_tail = f_tail.add(&g.scale(&coef[inf_basis.len() + j]));
            }
            (f_inf, f_tail)
        })
        .collect()
}

/// Basis of the space of morphisms a -> b with window at most `window`:
/// germ-compatible (f_infinity, f_tail) pairs with zero stalk maps, plus one
/// generator per basis element of each windowed equivariant stalk hom.
pub fn hom_space(a: &DihedralObject, b: &DihedralObject, window: usize) -> Vec<DihedralMorphism> {
    assert!(
        window >= a.window().max(b.window()),
        "window below the endpoint windows"
    );
    let mut basis = Vec::new();
    for (f_inf, f_tail) in germ_pairs(a, b) {
        let stalks = (1..=window)
            .map(|k| ChainMap::zero(a.stalk_at(k).clone(), b.stalk_at(k).clone()))
            .collect();
        basis.push(
            DihedralMorphism::new(a.clone(), b.clone(), stalks, f_tail, f_inf)
                .expect("germ pairs satisfy the germ condition"),
        );
    }
    for k in 1..=window {
        for f in HomComplex::of(a.stalk_at(k), b.stalk_at(k)).chain_map_basis() {
            let stalks = (1..=window)
                .map(|m| {
                    if m == k {
                        f.clone()
                    } else {
                        ChainMap::zero(a.stalk_at(m).clone(), b.stalk_at(m).clone())
                    }
                })
                .collect();
            basis.push(
                DihedralMorphism::new(
                    a.clone(),
                    b.clone(),
                    stalks,
                    ChainMap::zero(a.tail().clone(), b.tail().clone()),
                    ChainMap::zero(a.infinity().clone(), b.infinity().clone()),
                )
                .expect("stalk-only maps satisfy the germ condition"),
            );
        }
    }
    basis
}

/// How hom dimension depends on the window: it is exactly
/// base_dim + (K - base_window) * increment for K >= base_window.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HomGrowth {
    pub base_window: usize,
    pub base_dim: usize,
    pub increment: usize,
}

impl HomGrowth {
    pub fn dim_at(&self, window: usize) -> usize {
        assert!(window >= self.base_window, "window below stabilization");
        self.base_dim + (window - self.base_window) * self.increment
    }
}

pub fn hom_growth(a: &DihedralObject, b: &DihedralObject) -> HomGrowth {
    let base_window = a.window().max(b.window());
    let base_dim = hom_space(a, b, base_window).len();
    let increment = HomComplex::of(a.tail(), b.tail()).chain_map_basis().len();
    HomGrowth {
        base_window,
        base_dim,
        increment,
    }
}
