//! Seeded random generation of complexes, maps, and dihedral objects.
//! Everything is driven by ChaCha with an explicit u64 seed so runs are
//! reproducible byte for byte.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dg::{disk, sphere, ChainMap, DgModule, HomComplex, Ring};
use crate::dihedral::{hom_space, DihedralMorphism, DihedralObject};
use crate::linalg::{QMatrix, Rational};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn usize(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn bool(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// Small rational with numerator in [-4, 4] and denominator in [1, 3].
    pub fn rational(&mut self) -> Rational {
        Rational::new(self.int(-4, 4), self.int(1, 3))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> QMatrix {
        QMatrix::from_fn(rows, cols, |_, _| self.rational())
    }

    /// Random invertible matrix: unit upper triangular times unit lower
    /// triangular with a permutation, so determinant is never zero.
    pub fn invertible(&mut self, n: usize) -> QMatrix {
        let upper = QMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else if i < j {
                self.rational()
            } else {
                Rational::zero()
            }
        });
        let lower = QMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else if i > j {
                self.rational()
            } else {
                Rational::zero()
            }
        });
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.usize(0, i);
            perm.swap(i, j);
        }
        let p = QMatrix::from_fn(n, n, |i, j| {
            if perm[i] == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        upper.matmul(&lower).matmul(&p)
    }

    /// Random bounded complex: a direct sum of spheres and disks conjugated
    /// degreewise by random invertible matrices. Conjugation preserves d^2 = 0
    /// and, for QW, the involution identities.
    pub fn complex(&mut self, min_deg: i32, max_deg: i32, max_pieces: usize, ring: Ring) -> DgModule {
        let pieces = self.usize(0, max_pieces);
        let mut parts: Vec<DgModule> = Vec::new();
        for _ in 0..pieces {
            let deg = self.int(min_deg as i64, max_deg as i64) as i32;
            let part = if self.bool() {
                sphere(ring, deg)
            } else {
                disk(ring, deg)
            };
            parts.push(part);
        }
        if parts.is_empty() {
            return DgModule::zero_module(ring == Ring::QW);
        }
        let refs: Vec<&DgModule> = parts.iter().collect();
        let (sum, _, _) = DgModule::direct_sum(&refs);
        self.conjugate(&sum)
    }

    /// Conjugate a complex degreewise by random invertible matrices:
    /// d' = P d P^{-1}, w' = P w P^{-1}.
    pub fn conjugate(&mut self, m: &DgModule) -> DgModule {
        let mut p: BTreeMap<i32, QMatrix> = BTreeMap::new();
        let mut pinv: BTreeMap<i32, QMatrix> = BTreeMap::new();
        for &n in m.support().iter() {
            let mat = self.invertible(m.dim(n));
            pinv.insert(n, mat.inverse().expect("constructed invertible"));
            p.insert(n, mat);
        }
        let dims = m.dims().clone();
        let mut d = BTreeMap::new();
        for &n in m.support().iter() {
            if m.dim(n - 1) > 0 {
                d.insert(n, p[&(n - 1)].matmul(&m.d(n)).matmul(&pinv[&n]));
            }
        }
        if m.is_equivariant() {
            let mut w = BTreeMap::new();
            for &n in m.support().iter() {
                w.insert(n, p[&n].matmul(&m.w(n)).matmul(&pinv[&n]));
            }
            DgModule::new_w(dims, d, w).expect("conjugation preserves the axioms")
        } else {
            DgModule::new(dims, d).expect("conjugation preserves the axioms")
        }
    }

    /// Random chain map a -> b: a random rational combination of a basis of
    /// the space of (equivariant) chain maps.
    pub fn chain_map(&mut self, a: &DgModule, b: &DgModule) -> ChainMap {
        let hom = HomComplex::of(a, b);
        let basis = hom.chain_map_basis();
        let mut f = ChainMap::zero(
            hom.map_endpoints().0,
            hom.map_endpoints().1,
        );
        for g in &basis {
            f = f.add(&g.scale(&self.rational()));
        }
        f
    }

    /// Random representable object: involutive stalks and tail, plain
    /// infinity part, germ map a random chain map into the fixed points of
    /// the tail.
    pub fn dihedral_object(
        &mut self,
        window: usize,
        min_deg: i32,
        max_deg: i32,
        max_pieces: usize,
    ) -> DihedralObject {
        let stalks: Vec<DgModule> = (0..window)
            .map(|_| self.complex(min_deg, max_deg, max_pieces, Ring::QW))
            .collect();
        let tail = self.complex(min_deg, max_deg, max_pieces, Ring::QW);
        let infinity = self.complex(min_deg, max_deg, max_pieces, Ring::Q);
        let (fix, incl) = tail.fixed_points();
        let g = self.chain_map(&infinity, &fix);
        let mut sigma = BTreeMap::new();
        for &n in infinity.support().iter() {
            if fix.dim(n) == 0 {
                continue;
            }
            let m = incl[&n].matmul(&g.component(n));
            if !m.is_zero() {
                sigma.insert(n, m);
            }
        }
        DihedralObject::new(stalks, tail, infinity, sigma).expect("sampled germ data is valid")
    }

    /// Acyclic object made of disks in every slot, with a random germ map.
    pub fn acyclic_object(&mut self, window: usize) -> DihedralObject {
        let stalks: Vec<DgModule> = (0..window)
            .map(|_| disk(Ring::QW, self.int(0, 1) as i32))
            .collect();
        let tail = disk(Ring::QW, 1);
        let infinity = disk(Ring::Q, 1);
        let (fix, incl) = tail.fixed_points();
        let g = self.chain_map(&infinity, &fix);
        let mut sigma = BTreeMap::new();
        for &n in infinity.support().iter() {
            if fix.dim(n) == 0 {
                continue;
            }
            let m = incl[&n].matmul(&g.component(n));
            if !m.is_zero() {
                sigma.insert(n, m);
            }
        }
        DihedralObject::new(stalks, tail, infinity, sigma).expect("disk object is valid")
    }

    /// Random morphism a -> b: a random rational combination of a basis of
    /// the windowed hom space.
    pub fn dihedral_morphism(
        &mut self,
        a: &DihedralObject,
        b: &DihedralObject,
    ) -> DihedralMorphism {
        let window = a.window().max(b.window());
        let mut f = DihedralMorphism::zero(a, b);
        for g in &hom_space(a, b, window) {
            f = f.add(&g.scale(&self.rational()));
        }
        f
    }
}
