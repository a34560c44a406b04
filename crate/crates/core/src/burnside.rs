//! The rational Burnside ring of O(2) in the function model, and its
//! identification with the endomorphisms of the monoidal unit.
//!
//! Elements are locally constant Q-valued functions on the space of
//! conjugacy classes of subgroups with finite Weyl group: one isolated
//! point for SO(2), one point per dihedral class D_2, D_4, ..., and their
//! limit point O(2). Local constancy means the dihedral values are
//! eventually equal to the value at the limit, so a finite window plus a
//! limit value is a faithful representation.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::dg::ChainMap;
use crate::dihedral::{unit_object, DihedralMorphism};
use crate::linalg::{QMatrix, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BurnsideError {
    /// Functions supported at SO(2) act by zero on the dihedral model.
    #[error("element has a nonzero value at SO(2); no dihedral endomorphism represents it")]
    NotDihedral,
    /// Only endomorphisms of the monoidal unit correspond to ring elements.
    #[error("morphism is not an endomorphism of the unit object")]
    NotUnitEndomorphism,
}

/// A locally constant function on the subgroup space, in canonical form:
/// the window never ends with an entry equal to the limit value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideElement {
    so2: Rational,
    window: Vec<Rational>,
    limit: Rational,
}

impl BurnsideElement {
    pub fn new(so2: Rational, window: Vec<Rational>, limit: Rational) -> Self {
        let mut e = BurnsideElement { so2, window, limit };
        e.canonicalize();
        e
    }

    fn canonicalize(&mut self) {
        while self.window.last() == Some(&self.limit) {
            self.window.pop();
        }
    }

    pub fn zero() -> Self {
        BurnsideElement::new(Rational::zero(), vec![], Rational::zero())
    }

    pub fn one() -> Self {
        BurnsideElement::new(Rational::one(), vec![], Rational::one())
    }

    pub fn so2_value(&self) -> &Rational {
        &self.so2
    }

    /// Value at the dihedral class D_{2k}, k >= 1.
    pub fn dihedral_value(&self, k: usize) -> &Rational {
        assert!(k >= 1, "dihedral classes are indexed from 1");
        self.window.get(k - 1).unwrap_or(&self.limit)
    }

    pub fn limit_value(&self) -> &Rational {
        &self.limit
    }

    pub fn window(&self) -> &[Rational] {
        &self.window
    }

    pub fn is_zero(&self) -> bool {
        self.so2.is_zero() && self.limit.is_zero() && self.window.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &BurnsideElement) -> BurnsideElement {
        self.pointwise(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &BurnsideElement) -> BurnsideElement {
        self.pointwise(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &BurnsideElement) -> BurnsideElement {
        self.pointwise(other, |a, b| a * b)
    }

    pub fn neg(&self) -> BurnsideElement {
        BurnsideElement::zero().sub(self)
    }

    pub fn scale(&self, c: &Rational) -> BurnsideElement {
        BurnsideElement::new(
            &self.so2 * c,
            self.window.iter().map(|v| v * c).collect(),
            &self.limit * c,
        )
    }

    fn pointwise(
        &self,
        other: &BurnsideElement,
        op: impl Fn(&Rational, &Rational) -> Rational,
    ) -> BurnsideElement {
        let len = self.window.len().max(other.window.len());
        let window = (1..=len)
            .map(|k| op(self.dihedral_value(k), other.dihedral_value(k)))
            .collect();
        BurnsideElement::new(
            op(&self.so2, &other.so2),
            window,
            op(&self.limit, &other.limit),
        )
    }

    /// Coefficients in the basis {e_C, e_D, e_1, e_2, ...}: the element is
    /// so2*e_C + limit*e_D + sum over k of (window_k - limit)*e_k, and this
    /// is the unique such expression.
    pub fn decompose(&self) -> (Rational, Rational, Vec<(usize, Rational)>) {
        let finite = self
            .window
            .iter()
            .enumerate()
            .filter_map(|(i, v)| {
                let c = v - &self.limit;
                if c.is_zero() {
                    None
                } else {
                    Some((i + 1, c))
                }
            })
            .collect();
        (self.so2.clone(), self.limit.clone(), finite)
    }

    /// Rebuild an element from basis coefficients; inverse to `decompose`.
    pub fn from_decomposition(
        c: &Rational,
        d: &Rational,
        finite: &[(usize, Rational)],
    ) -> BurnsideElement {
        let mut e = idempotent_so2().scale(c).add(&idempotent_dihedral().scale(d));
        for (k, coeff) in finite {
            e = e.add(&idempotent_class(*k).scale(coeff));
        }
        e
    }
}

impl fmt::Display for BurnsideElement {
    /// One line per marked point of the subgroup space, limit last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SO(2): {}", self.so2)?;
        for (i, v) in self.window.iter().enumerate() {
            write!(f, "  D_{}: {}", 2 * (i + 1), v)?;
        }
        write!(f, "  O(2): {}", self.limit)
    }
}

/// e_C: the characteristic function of the isolated point SO(2).
pub fn idempotent_so2() -> BurnsideElement {
    BurnsideElement::new(Rational::one(), vec![], Rational::zero())
}

/// e_D = 1 - e_C: the characteristic function of the dihedral part.
pub fn idempotent_dihedral() -> BurnsideElement {
    BurnsideElement::new(Rational::zero(), vec![], Rational::one())
}

/// e_k: the characteristic function of the class of D_{2k}, k >= 1.
pub fn idempotent_class(k: usize) -> BurnsideElement {
    assert!(k >= 1, "dihedral classes are indexed from 1");
    let mut window = vec![Rational::zero(); k];
    window[k - 1] = Rational::one();
    BurnsideElement::new(Rational::zero(), window, Rational::zero())
}

/// f_n = e_D - e_1 - ... - e_n.
pub fn idempotent_residual(n: usize) -> BurnsideElement {
    let mut e = idempotent_dihedral();
    for k in 1..=n {
        e = e.sub(&idempotent_class(k));
    }
    e
}

/// Parse an idempotent name: "e_C", "e_D", "e_3", "f_2".
pub fn idempotent_by_name(name: &str) -> Option<BurnsideElement> {
    match name {
        "e_C" => Some(idempotent_so2()),
        "e_D" => Some(idempotent_dihedral()),
        _ => {
            let (family, index) = name.split_once('_')?;
            let k: usize = index.parse().ok()?;
            if k == 0 {
                return None;
            }
            match family {
                "e" => Some(idempotent_class(k)),
                "f" => Some(idempotent_residual(k)),
                _ => None,
            }
        }
    }
}

fn scalar_map(m: &crate::dg::DgModule, c: &Rational) -> ChainMap {
    let mut comps = BTreeMap::new();
    if !c.is_zero() {
        for &n in m.support().iter() {
            comps.insert(n, QMatrix::identity(m.dim(n)).scale(c));
        }
    }
    ChainMap::new(m.clone(), m.clone(), comps).expect("scalar multiples are chain maps")
}

/// The dihedral part of an element as an endomorphism of the unit object:
/// the value at D_{2k} scales stalk k, the limit value scales the tail and
/// the infinity component. Fails when the SO(2) value is nonzero, since that
/// summand of the ring acts by zero on the dihedral model.
pub fn to_endomorphism(x: &BurnsideElement) -> Result<DihedralMorphism, BurnsideError> {
    if !x.so2.is_zero() {
        return Err(BurnsideError::NotDihedral);
    }
    let u = unit_object();
    let q = u.infinity().clone();
    let qt = u.tail().clone();
    let stalks: Vec<ChainMap> = (1..=x.window.len())
        .map(|k| scalar_map(&qt, x.dihedral_value(k)))
        .collect();
    let f_tail = scalar_map(&qt, &x.limit);
    let f_inf = scalar_map(&q, &x.limit);
    // Every slot of the unit object beyond the window is the tail, so the
    // stalk list may be wider than the endpoints' windows.
    DihedralMorphism::new(u.clone(), u, stalks, f_tail, f_inf)
        .map_err(|_| BurnsideError::NotDihedral)
}

/// Read a degree-0 unit endomorphism back as a Burnside function with zero
/// SO(2) value. Inverse to `to_endomorphism` on its image.
pub fn from_endomorphism(f: &DihedralMorphism) -> Result<BurnsideElement, BurnsideError> {
    let scalar_of = |g: &ChainMap| -> Result<Rational, BurnsideError> {
        if g.source() != g.target() {
            return Err(BurnsideError::NotUnitEndomorphism);
        }
        if g.source().dim(0) != 1 || g.source().total_dim() != 1 {
            return Err(BurnsideError::NotUnitEndomorphism);
        }
        Ok(g.component(0).get(0, 0).clone())
    };
    if f.source() != f.target() {
        return Err(BurnsideError::NotUnitEndomorphism);
    }
    if f.source().normalize() != unit_object() {
        return Err(BurnsideError::NotUnitEndomorphism);
    }
    let limit = scalar_of(f.tail_component())?;
    let inf = scalar_of(f.infinity_component())?;
    if inf != limit {
        // The germ square for cQ forces the infinity scalar to match the tail.
        return Err(BurnsideError::NotUnitEndomorphism);
    }
    let window = (1..=f.window())
        .map(|k| scalar_of(f.stalk_component(k)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BurnsideElement::new(Rational::zero(), window, limit))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use crate::sample::Sampler;

    use super::*;

    fn sample_element(s: &mut Sampler, width: usize) -> BurnsideElement {
        let window = (0..width).map(|_| s.rational()).collect();
        BurnsideElement::new(s.rational(), window, s.rational())
    }

    #[test]
    fn idempotent_relations() {
        let ec = idempotent_so2();
        let ed = idempotent_dihedral();
        assert_eq!(ec.add(&ed), BurnsideElement::one());
        assert_eq!(ec.mul(&ed), BurnsideElement::zero());
        for n in 1..=4 {
            let en = idempotent_class(n);
            assert_eq!(en.mul(&en), en);
            assert_eq!(ed.mul(&en), en);
            assert_eq!(ec.mul(&en), BurnsideElement::zero());
            for m in 1..=4 {
                if m != n {
                    assert_eq!(en.mul(&idempotent_class(m)), BurnsideElement::zero());
                }
            }
        }
        assert_eq!(ec.mul(&ec), ec);
        assert_eq!(ed.mul(&ed), ed);
    }

    #[test]
    fn dihedral_idempotent_values() {
        let ed = idempotent_dihedral();
        assert!(ed.so2_value().is_zero());
        assert!(ed.limit_value().is_one());
        for k in 1..=6 {
            assert!(ed.dihedral_value(k).is_one());
        }
    }

    #[test]
    fn residual_idempotents() {
        let f2 = idempotent_residual(2);
        assert!(f2.dihedral_value(1).is_zero());
        assert!(f2.dihedral_value(2).is_zero());
        assert!(f2.dihedral_value(3).is_one());
        assert!(f2.limit_value().is_one());
        assert_eq!(f2.mul(&f2), f2);
        assert_eq!(idempotent_residual(0), idempotent_dihedral());
    }

    #[test]
    fn names_resolve() {
        assert_eq!(idempotent_by_name("e_C"), Some(idempotent_so2()));
        assert_eq!(idempotent_by_name("e_D"), Some(idempotent_dihedral()));
        assert_eq!(idempotent_by_name("e_3"), Some(idempotent_class(3)));
        assert_eq!(idempotent_by_name("f_2"), Some(idempotent_residual(2)));
        assert_eq!(idempotent_by_name("e_0"), None);
        assert_eq!(idempotent_by_name("g_1"), None);
    }

    #[test]
    fn decomposition_round_trip() {
        let mut s = Sampler::new(7);
        for _ in 0..50 {
            let x = sample_element(&mut s, 5);
            let (c, d, finite) = x.decompose();
            assert_eq!(BurnsideElement::from_decomposition(&c, &d, &finite), x);
            // Uniqueness: coefficients are recovered from values.
            assert_eq!(&c, x.so2_value());
            assert_eq!(&d, x.limit_value());
            for (k, coeff) in &finite {
                assert_eq!(coeff, &(x.dihedral_value(*k) - x.limit_value()));
            }
        }
    }

    #[test]
    fn endomorphism_examples() {
        let ed = to_endomorphism(&idempotent_dihedral()).expect("dihedral element");
        assert_eq!(ed, DihedralMorphism::identity(&unit_object()));

        let e1 = to_endomorphism(&idempotent_class(1)).expect("dihedral element");
        assert!(e1.infinity_component().is_zero());
        assert!(e1.tail_component().is_zero());
        assert!(e1.stalk_component(1).component(0).is_identity());
        assert!(e1.stalk_component(2).is_zero());

        assert_eq!(
            to_endomorphism(&idempotent_so2()),
            Err(BurnsideError::NotDihedral)
        );
    }

    #[test]
    fn endomorphism_ring_isomorphism() {
        let mut s = Sampler::new(11);
        for _ in 0..40 {
            let mut x = sample_element(&mut s, 4);
            let mut y = sample_element(&mut s, 6);
            x.so2 = Rational::zero();
            y.so2 = Rational::zero();
            let fx = to_endomorphism(&x).expect("dihedral element");
            let fy = to_endomorphism(&y).expect("dihedral element");
            assert_eq!(from_endomorphism(&fx).expect("round trip"), x);
            let prod = from_endomorphism(&fx.compose(&fy).expect("same unit object"))
                .expect("round trip");
            assert_eq!(prod, x.mul(&y));
            let sum = from_endomorphism(&fx.add(&fy)).expect("round trip");
            assert_eq!(sum, x.add(&y));
        }
    }

    #[test]
    fn rejects_non_unit_endomorphisms() {
        let v = crate::dihedral::at_infinity(&crate::dg::DgModule::single(0, 1));
        let f = DihedralMorphism::identity(&v);
        assert_eq!(
            from_endomorphism(&f),
            Err(BurnsideError::NotUnitEndomorphism)
        );
    }

    fn arb_element() -> impl Strategy<Value = BurnsideElement> {
        (
            -5i64..6,
            proptest::collection::vec((-5i64..6, 1i64..4), 0..5),
            (-5i64..6, 1i64..4),
        )
            .prop_map(|(so2, win, (ln, ld))| {
                BurnsideElement::new(
                    Rational::from_int(so2),
                    win.into_iter().map(|(n, d)| Rational::new(n, d)).collect(),
                    Rational::new(ln, ld),
                )
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(x in arb_element(), y in arb_element(), z in arb_element()) {
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.mul(&BurnsideElement::one()), x.clone());
            prop_assert_eq!(x.add(&x.neg()), BurnsideElement::zero());
        }

        #[test]
        fn decomposition_is_faithful(x in arb_element()) {
            let (c, d, finite) = x.decompose();
            prop_assert_eq!(BurnsideElement::from_decomposition(&c, &d, &finite), x);
        }
    }
}
