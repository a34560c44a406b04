use crate::dg::ChainMap;
use crate::linalg::Rational;

use super::{DihedralError, DihedralObject};

/// Morphism of dihedral objects: a window M at least as large as both
/// endpoint windows, stalk maps f_1..f_M, a tail map, and an infinity map
/// satisfying the germ condition
/// sigma_target . f_infinity = f_tail . sigma_source.
/// Beyond the window the stalk map is the tail map by convention; the
/// constructor shrinks the window accordingly so equality is syntactic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DihedralMorphism {
    source: DihedralObject,
    target: DihedralObject,
    window: usize,
    f_stalks: Vec<ChainMap>,
    f_tail: ChainMap,
    f_infinity: ChainMap,
}

impl DihedralMorphism {
    pub fn new(
        source: DihedralObject,
        target: DihedralObject,
        f_stalks: Vec<ChainMap>,
        f_tail: ChainMap,
        f_infinity: ChainMap,
    ) -> Result<Self, DihedralError> {
        let window = f_stalks.len();
        if window < source.window().max(target.window()) {
            return Err(DihedralError::MorphismWindow);
        }
        for (i, f) in f_stalks.iter().enumerate() {
            let k = i + 1;
            if f.source() != source.stalk_at(k) || f.target() != target.stalk_at(k) {
                return Err(DihedralError::ComponentEndpoints {
                    which: format!("stalk {k}"),
                });
            }
        }
        if f_tail.source() != source.tail() || f_tail.target() != target.tail() {
            return Err(DihedralError::ComponentEndpoints {
                which: "tail".into(),
            });
        }
        if f_infinity.source() != source.infinity() || f_infinity.target() != target.infinity() {
            return Err(DihedralError::ComponentEndpoints {
                which: "infinity".into(),
            });
        }
        // Germ condition, degree by degree.
        let mut degrees: Vec<i32> = source.infinity().support();
        degrees.extend(target.tail().support());
        degrees.extend(source.tail().support());
        degrees.sort_unstable();
        degrees.dedup();
        for &n in &degrees {
            let lhs = target.sigma(n).matmul(&f_infinity.component(n));
            let rhs = f_tail.component(n).matmul(&source.sigma(n));
            if lhs != rhs {
                return Err(DihedralError::GermCondition { degree: n });
            }
        }
        let mut m = DihedralMorphism {
            source,
            target,
            window,
            f_stalks,
            f_tail,
            f_infinity,
        };
        m.shrink();
        Ok(m)
    }

    fn shrink(&mut self) {
        let floor = self.source.window().max(self.target.window());
        while self.window > floor && self.f_stalks[self.window - 1] == self.f_tail {
            self.f_stalks.pop();
            self.window -= 1;
        }
    }

    pub fn zero(source: &DihedralObject, target: &DihedralObject) -> Self {
        let window = source.window().max(target.window());
        let f_stalks = (1..=window)
            .map(|k| ChainMap::zero(source.stalk_at(k).clone(), target.stalk_at(k).clone()))
            .collect();
        DihedralMorphism {
            source: source.clone(),
            target: target.clone(),
            window,
            f_stalks,
            f_tail: ChainMap::zero(source.tail().clone(), target.tail().clone()),
            f_infinity: ChainMap::zero(source.infinity().clone(), target.infinity().clone()),
        }
    }

    pub fn identity(v: &DihedralObject) -> Self {
        let f_stalks = (1..=v.window()).map(|k| ChainMap::identity(v.stalk_at(k))).collect();
        DihedralMorphism {
            source: v.clone(),
            target: v.clone(),
            window: v.window(),
            f_stalks,
            f_tail: ChainMap::identity(v.tail()),
            f_infinity: ChainMap::identity(v.infinity()),
        }
    }

    pub fn source(&self) -> &DihedralObject {
        &self.source
    }

    pub fn target(&self) -> &DihedralObject {
        &self.target
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Stalk component at any position, reading the tail map beyond the
    /// window.
    pub fn stalk_component(&self, k: usize) -> &ChainMap {
        assert!(k >= 1, "stalk positions start at 1");
        if k <= self.window {
            &self.f_stalks[k - 1]
        } else {
            &self.f_tail
        }
    }

    pub fn tail_component(&self) -> &ChainMap {
        &self.f_tail
    }

    pub fn infinity_component(&self) -> &ChainMap {
        &self.f_infinity
    }

    pub fn is_zero(&self) -> bool {
        self.f_infinity.is_zero()
            && self.f_tail.is_zero()
            && self.f_stalks.iter().all(|f| f.is_zero())
    }

    /// self after g. The germ condition for the composite follows from the
    /// factors' conditions; the constructor re-asserts it.
    pub fn compose(&self, g: &DihedralMorphism) -> Result<DihedralMorphism, DihedralError> {
        if g.target != self.source {
            return Err(DihedralError::ComposeMismatch);
        }
        let window = self.window.max(g.window);
        let mut f_stalks = Vec::with_capacity(window);
        for k in 1..=window {
            f_stalks.push(self.stalk_component(k).compose(g.stalk_component(k))?);
        }
        let f_tail = self.f_tail.compose(&g.f_tail)?;
        let f_infinity = self.f_infinity.compose(&g.f_infinity)?;
        DihedralMorphism::new(g.source.clone(), self.target.clone(), f_stalks, f_tail, f_infinity)
    }

    pub fn add(&self, other: &DihedralMorphism) -> DihedralMorphism {
        assert!(self.source == other.source && self.target == other.target, "endpoint mismatch");
        let window = self.window.max(other.window);
        let f_stalks = (1..=window)
            .map(|k| self.stalk_component(k).add(other.stalk_component(k)))
            .collect();
        let mut m = DihedralMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            window,
            f_stalks,
            f_tail: self.f_tail.add(&other.f_tail),
            f_infinity: self.f_infinity.add(&other.f_infinity),
        };
        m.shrink();
        m
    }

    pub fn scale(&self, c: &Rational) -> DihedralMorphism {
        let mut m = DihedralMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            window: self.window,
            f_stalks: self.f_stalks.iter().map(|f| f.scale(c)).collect(),
            f_tail: self.f_tail.scale(c),
            f_infinity: self.f_infinity.scale(c),
        };
        m.shrink();
        m
    }

    pub fn sub(&self, other: &DihedralMorphism) -> DihedralMorphism {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    /// Weak equivalence: every windowed stalk map, the tail map, and the
    /// infinity map are quasi-isomorphisms.
    pub fn is_weak_equivalence(&self) -> bool {
        self.f_infinity.is_quasi_iso()
            && self.f_tail.is_quasi_iso()
            && (1..=self.window).all(|k| self.stalk_component(k).is_quasi_iso())
    }

    /// Fibration: the same components are degreewise surjective.
    pub fn is_fibration(&self) -> bool {
        self.f_infinity.is_surjection()
            && self.f_tail.is_surjection()
            && (1..=self.window).all(|k| self.stalk_component(k).is_surjection())
    }

    pub fn is_degreewise_injective(&self) -> bool {
        self.f_infinity.is_injection()
            && self.f_tail.is_injection()
            && (1..=self.window).all(|k| self.stalk_component(k).is_injection())
    }

    /// Isomorphism in the category: every component degreewise invertible.
    pub fn is_isomorphism(&self) -> bool {
        let invertible = |f: &ChainMap| {
            let mut degs: Vec<i32> = f.source().support();
            degs.extend(f.target().support());
            degs.sort_unstable();
            degs.dedup();
            degs.iter().all(|&n| {
                f.source().dim(n) == f.target().dim(n)
                    && (f.source().dim(n) == 0 || f.component(n).inverse().is_some())
            })
        };
        invertible(&self.f_infinity)
            && invertible(&self.f_tail)
            && (1..=self.window).all(|k| invertible(self.stalk_component(k)))
    }

    /// Two-sided inverse of an isomorphism.
    pub fn inverse(&self) -> Option<DihedralMorphism> {
        if !self.is_isomorphism() {
            return None;
        }
        let invert = |f: &ChainMap| -> ChainMap {
            let comps = f
                .source()
                .support()
                .into_iter()
                .map(|n| (n, f.component(n).inverse().expect("checked invertible")))
                .collect();
            ChainMap::new(f.target().clone(), f.source().clone(), comps)
                .expect("inverse of an iso chain map is a chain map")
        };
        let f_stalks = (1..=self.window).map(|k| invert(self.stalk_component(k))).collect();
        DihedralMorphism::new(
            self.target.clone(),
            self.source.clone(),
            f_stalks,
            invert(&self.f_tail),
            invert(&self.f_infinity),
        )
        .ok()
    }
}
