use std::collections::BTreeMap;

use crate::dg::{DgModule, Homology};
use crate::linalg::QMatrix;

use super::DihedralError;

/// Object of the representable dihedral category: explicit stalks V_1..V_N
/// (dg QW-modules), a tail module standing for every stalk beyond the window,
/// an infinity part over Q, and the germ map sigma from the infinity part to
/// the tail, landing degreewise in the fixed points of the tail involution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DihedralObject {
    window: usize,
    stalks: Vec<DgModule>,
    tail: DgModule,
    infinity: DgModule,
    sigma: BTreeMap<i32, QMatrix>,
}

impl DihedralObject {
    pub fn new(
        stalks: Vec<DgModule>,
        tail: DgModule,
        infinity: DgModule,
        sigma: BTreeMap<i32, QMatrix>,
    ) -> Result<Self, DihedralError> {
        for (i, s) in stalks.iter().enumerate() {
            if !s.is_equivariant() {
                return Err(DihedralError::StalkNotEquivariant { k: i + 1 });
            }
        }
        if !tail.is_equivariant() {
            return Err(DihedralError::TailNotEquivariant);
        }
        if infinity.is_equivariant() {
            return Err(DihedralError::InfinityEquivariant);
        }
        let mut sig = BTreeMap::new();
        for (n, m) in sigma {
            let expected = (tail.dim(n), infinity.dim(n));
            if expected.0 == 0 || expected.1 == 0 {
                if !m.is_zero() {
                    return Err(DihedralError::SigmaShape { degree: n });
                }
                continue;
            }
            if (m.rows(), m.cols()) != expected {
                return Err(DihedralError::SigmaShape { degree: n });
            }
            if !m.is_zero() {
                sig.insert(n, m);
            }
        }
        let obj = DihedralObject {
            window: stalks.len(),
            stalks,
            tail,
            infinity,
            sigma: sig,
        };
        let mut degrees: Vec<i32> = obj.infinity.support();
        degrees.extend(obj.tail.support());
        degrees.sort_unstable();
        degrees.dedup();
        for &n in &degrees {
            let lhs = obj.sigma(n - 1).matmul(&obj.infinity.d(n));
            let rhs = obj.tail.d(n).matmul(&obj.sigma(n));
            if lhs != rhs {
                return Err(DihedralError::SigmaNotChain { degree: n });
            }
            if obj.tail.dim(n) > 0 {
                let s = obj.sigma(n);
                if obj.tail.w(n).matmul(&s) != s {
                    return Err(DihedralError::SigmaNotFixed { degree: n });
                }
            }
        }
        Ok(obj)
    }

    pub fn zero() -> Self {
        DihedralObject {
            window: 0,
            stalks: Vec::new(),
            tail: DgModule::zero_module(true),
            infinity: DgModule::zero_module(false),
            sigma: BTreeMap::new(),
        }
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Stalk at position k >= 1; the tail beyond the window.
    pub fn stalk_at(&self, k: usize) -> &DgModule {
        assert!(k >= 1, "stalk positions start at 1");
        if k <= self.window {
            &self.stalks[k - 1]
        } else {
            &self.tail
        }
    }

    pub fn stalks(&self) -> &[DgModule] {
        &self.stalks
    }

    pub fn tail(&self) -> &DgModule {
        &self.tail
    }

    pub fn infinity(&self) -> &DgModule {
        &self.infinity
    }

    /// Germ map component at degree n, materialized at full shape.
    pub fn sigma(&self, n: i32) -> QMatrix {
        self.sigma
            .get(&n)
            .cloned()
            .unwrap_or_else(|| QMatrix::zero(self.tail.dim(n), self.infinity.dim(n)))
    }

    pub fn sigma_components(&self) -> &BTreeMap<i32, QMatrix> {
        &self.sigma
    }

    pub fn is_zero(&self) -> bool {
        self.stalks.iter().all(|s| s.is_zero())
            && self.tail.is_zero()
            && self.infinity.is_zero()
    }

    /// Shrinks the window while the outermost stalk is syntactically equal to
    /// the tail.
    pub fn normalize(&self) -> DihedralObject {
        let mut out = self.clone();
        while out.window >= 1 && out.stalks[out.window - 1] == out.tail {
            out.stalks.pop();
            out.window -= 1;
        }
        out
    }

    /// sigma is degreewise surjective onto the tail, so the tail carries no
    /// information beyond the infinity part's image.
    pub fn is_tail_reduced(&self) -> bool {
        self.tail
            .support()
            .iter()
            .all(|&n| self.sigma(n).rank() == self.tail.dim(n))
    }

    /// Constant-shaped: no proper window, germ map invertible degreewise and
    /// the tail carries the trivial action, so the object is isomorphic to
    /// c(infinity part).
    pub fn is_constant_like(&self) -> bool {
        let norm = self.normalize();
        norm.window == 0
            && norm.tail.dims() == norm.infinity.dims()
            && norm
                .infinity
                .support()
                .iter()
                .all(|&n| norm.sigma(n).inverse().is_some() && norm.tail.w(n).is_identity())
    }

    /// Concentrated at one stalk position: everything else is zero.
    pub fn is_stalk_supported(&self, k: usize) -> bool {
        self.infinity.is_zero()
            && self.tail.is_zero()
            && (1..=self.window).all(|m| m == k || self.stalk_at(m).is_zero())
    }

    /// Componentwise direct sum.
    pub fn biproduct(a: &DihedralObject, b: &DihedralObject) -> DihedralObject {
        let window = a.window.max(b.window);
        let mut stalks = Vec::with_capacity(window);
        for k in 1..=window {
            let (sum, _, _) = DgModule::direct_sum(&[a.stalk_at(k), b.stalk_at(k)]);
            stalks.push(sum);
        }
        let (tail, _, _) = DgModule::direct_sum(&[&a.tail, &b.tail]);
        let (infinity, _, _) = DgModule::direct_sum(&[&a.infinity, &b.infinity]);
        let mut degrees: Vec<i32> = infinity.support();
        degrees.extend(tail.support());
        degrees.sort_unstable();
        degrees.dedup();
        let mut sigma = BTreeMap::new();
        for n in degrees {
            sigma.insert(n, a.sigma(n).direct_sum(&b.sigma(n)));
        }
        DihedralObject::new(stalks, tail, infinity, sigma).expect("biproduct preserves the axioms")
    }
}

/// The functor c: window 0, tail = m with trivial action, infinity = m,
/// sigma = identity.
pub fn constant(m: &DgModule) -> DihedralObject {
    assert!(!m.is_equivariant(), "constant takes a plain complex");
    let sigma = m
        .support()
        .into_iter()
        .map(|n| (n, QMatrix::identity(m.dim(n))))
        .collect();
    DihedralObject::new(Vec::new(), m.with_trivial_involution(), m.clone(), sigma)
        .expect("constant object is valid")
}

/// The functor i_k: one stalk at position k, everything else zero.
pub fn at_stalk(k: usize, r: &DgModule) -> DihedralObject {
    assert!(k >= 1, "stalk positions start at 1");
    assert!(r.is_equivariant(), "stalks carry involutions");
    let mut stalks = vec![DgModule::zero_module(true); k];
    stalks[k - 1] = r.clone();
    DihedralObject::new(
        stalks,
        DgModule::zero_module(true),
        DgModule::zero_module(false),
        BTreeMap::new(),
    )
    .expect("stalk object is valid")
}

/// The functor i_infinity: only the infinity part, zero tail, zero sigma.
pub fn at_infinity(m: &DgModule) -> DihedralObject {
    assert!(!m.is_equivariant(), "infinity parts are plain complexes");
    DihedralObject::new(
        Vec::new(),
        DgModule::zero_module(true),
        m.clone(),
        BTreeMap::new(),
    )
    .expect("infinity object is valid")
}

/// Componentwise homology with zero differentials; sigma induces the germ map
/// on homology (classes of fixed cycles stay fixed).
pub fn homology_object(v: &DihedralObject) -> DihedralObject {
    let stalks: Vec<DgModule> = (1..=v.window())
        .map(|k| Homology::of(v.stalk_at(k)).as_module())
        .collect();
    let h_tail = Homology::of(v.tail());
    let h_inf = Homology::of(v.infinity());
    let mut sigma = BTreeMap::new();
    for &n in h_inf.as_module().support().iter() {
        let hi = h_inf.dim(n);
        let ht = h_tail.dim(n);
        if hi == 0 || ht == 0 {
            continue;
        }
        let reps = h_inf.representatives(n).expect("dim > 0");
        let mapped = v.sigma(n).matmul(reps);
        let mut m = QMatrix::zero(ht, hi);
        for j in 0..hi {
            let cls = h_tail
                .class_of(n, &mapped.col_vec(j))
                .expect("sigma sends cycles to cycles");
            for (i, val) in cls.into_iter().enumerate() {
                m.set(i, j, val);
            }
        }
        sigma.insert(n, m);
    }
    DihedralObject::new(stalks, h_tail.as_module(), h_inf.as_module(), sigma)
        .expect("homology object is valid")
}
