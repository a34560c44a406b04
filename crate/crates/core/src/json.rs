//! JSON codecs. Rationals are "a/b" strings, matrices row-major nested
//! arrays, degree-indexed families objects with string keys. Decoding goes
//! through the validating constructors, so malformed data fails with the
//! offending component named; syntax errors carry the parser location.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::burnside::BurnsideElement;
use crate::dg::{ChainMap, DgModule};
use crate::dihedral::{DihedralMorphism, DihedralObject};
use crate::linalg::{QMatrix, Rational};
use crate::ringoid::{DgCategory, EaCategory, ProductEntry};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JsonError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

impl From<serde_json::Error> for JsonError {
    fn from(e: serde_json::Error) -> Self {
        JsonError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

fn invalid(component: &str, err: impl std::fmt::Display) -> JsonError {
    JsonError::Invalid(format!("{component}: {err}"))
}

fn encode_degrees(m: BTreeMap<i32, QMatrix>) -> BTreeMap<String, QMatrix> {
    m.into_iter().map(|(n, v)| (n.to_string(), v)).collect()
}

fn decode_degrees<T>(
    m: BTreeMap<String, T>,
    component: &str,
) -> Result<BTreeMap<i32, T>, JsonError> {
    let mut out = BTreeMap::new();
    for (k, v) in m {
        let n: i32 = k
            .parse()
            .map_err(|_| invalid(component, format_args!("bad degree key `{k}`")))?;
        out.insert(n, v);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct ModuleRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    support: Option<Vec<i32>>,
    dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    d: BTreeMap<String, QMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    w: Option<BTreeMap<String, QMatrix>>,
}

fn module_repr(m: &DgModule) -> ModuleRepr {
    let mut d = BTreeMap::new();
    for &n in m.support().iter() {
        let dn = m.d(n);
        if !dn.is_zero() {
            d.insert(n.to_string(), dn);
        }
    }
    let w = if m.is_equivariant() {
        let mut ws = BTreeMap::new();
        for &n in m.support().iter() {
            let wn = m.w(n);
            if !wn.is_identity() {
                ws.insert(n.to_string(), wn);
            }
        }
        Some(ws)
    } else {
        None
    };
    ModuleRepr {
        support: Some(m.support()),
        dims: m.dims().iter().map(|(n, &x)| (n.to_string(), x)).collect(),
        d,
        w,
    }
}

fn module_from_repr(r: ModuleRepr, component: &str) -> Result<DgModule, JsonError> {
    let dims = decode_degrees(r.dims, component)?;
    let d = decode_degrees(r.d, component)?;
    let m = match r.w {
        Some(w) => DgModule::new_w(dims, d, decode_degrees(w, component)?),
        None => DgModule::new(dims, d),
    }
    .map_err(|e| invalid(component, e))?;
    if let Some(mut support) = r.support {
        support.sort_unstable();
        support.dedup();
        if support != m.support() {
            return Err(invalid(component, "support does not match dims"));
        }
    }
    Ok(m)
}

pub fn module_to_value(m: &DgModule) -> Value {
    serde_json::to_value(module_repr(m)).expect("module serializes")
}

pub fn module_from_value(v: Value) -> Result<DgModule, JsonError> {
    module_from_repr(serde_json::from_value(v)?, "module")
}

pub fn module_from_str(s: &str) -> Result<DgModule, JsonError> {
    module_from_repr(serde_json::from_str(s)?, "module")
}

#[derive(Serialize, Deserialize)]
struct ObjectRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    window: Option<usize>,
    stalks: Vec<ModuleRepr>,
    tail: ModuleRepr,
    infinity: ModuleRepr,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    sigma: BTreeMap<String, QMatrix>,
}

fn object_repr(v: &DihedralObject) -> ObjectRepr {
    ObjectRepr {
        window: Some(v.window()),
        stalks: v.stalks().iter().map(module_repr).collect(),
        tail: module_repr(v.tail()),
        infinity: module_repr(v.infinity()),
        sigma: encode_degrees(v.sigma_components().clone()),
    }
}

fn object_from_repr(r: ObjectRepr) -> Result<DihedralObject, JsonError> {
    if let Some(w) = r.window {
        if w != r.stalks.len() {
            return Err(invalid("object", "window does not match the stalk list"));
        }
    }
    let mut stalks = Vec::with_capacity(r.stalks.len());
    for (i, s) in r.stalks.into_iter().enumerate() {
        stalks.push(module_from_repr(s, &format!("stalk {}", i + 1))?);
    }
    let tail = module_from_repr(r.tail, "tail")?;
    let infinity = module_from_repr(r.infinity, "infinity")?;
    let sigma = decode_degrees(r.sigma, "sigma")?;
    DihedralObject::new(stalks, tail, infinity, sigma).map_err(|e| invalid("object", e))
}

pub fn object_to_value(v: &DihedralObject) -> Value {
    serde_json::to_value(object_repr(v)).expect("object serializes")
}

pub fn object_from_value(v: Value) -> Result<DihedralObject, JsonError> {
    object_from_repr(serde_json::from_value(v)?)
}

pub fn object_from_str(s: &str) -> Result<DihedralObject, JsonError> {
    object_from_repr(serde_json::from_str(s)?)
}

#[derive(Serialize, Deserialize)]
struct MorphismRepr {
    source: ObjectRepr,
    target: ObjectRepr,
    #[serde(default)]
    f_k: Vec<BTreeMap<String, QMatrix>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    f_tail: BTreeMap<String, QMatrix>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    f_infinity: BTreeMap<String, QMatrix>,
}

fn components_repr(c: &ChainMap) -> BTreeMap<String, QMatrix> {
    encode_degrees(c.components().clone())
}

fn morphism_repr(f: &DihedralMorphism) -> MorphismRepr {
    MorphismRepr {
        source: object_repr(f.source()),
        target: object_repr(f.target()),
        f_k: (1..=f.window())
            .map(|k| components_repr(f.stalk_component(k)))
            .collect(),
        f_tail: components_repr(f.tail_component()),
        f_infinity: components_repr(f.infinity_component()),
    }
}

fn morphism_from_repr(r: MorphismRepr) -> Result<DihedralMorphism, JsonError> {
    let source = object_from_repr(r.source)?;
    let target = object_from_repr(r.target)?;
    let mut f_stalks = Vec::with_capacity(r.f_k.len());
    for (i, comps) in r.f_k.into_iter().enumerate() {
        let k = i + 1;
        let name = format!("f_{k}");
        let comps = decode_degrees(comps, &name)?;
        let map = ChainMap::new(source.stalk_at(k).clone(), target.stalk_at(k).clone(), comps)
            .map_err(|e| invalid(&name, e))?;
        f_stalks.push(map);
    }
    let f_tail = ChainMap::new(
        source.tail().clone(),
        target.tail().clone(),
        decode_degrees(r.f_tail, "f_tail")?,
    )
    .map_err(|e| invalid("f_tail", e))?;
    let f_infinity = ChainMap::new(
        source.infinity().clone(),
        target.infinity().clone(),
        decode_degrees(r.f_infinity, "f_infinity")?,
    )
    .map_err(|e| invalid("f_infinity", e))?;
    DihedralMorphism::new(source, target, f_stalks, f_tail, f_infinity)
        .map_err(|e| invalid("morphism", e))
}

pub fn morphism_to_value(f: &DihedralMorphism) -> Value {
    serde_json::to_value(morphism_repr(f)).expect("morphism serializes")
}

pub fn morphism_from_value(v: Value) -> Result<DihedralMorphism, JsonError> {
    morphism_from_repr(serde_json::from_value(v)?)
}

pub fn morphism_from_str(s: &str) -> Result<DihedralMorphism, JsonError> {
    morphism_from_repr(serde_json::from_str(s)?)
}

#[derive(Serialize, Deserialize)]
struct BurnsideRepr {
    so2: Rational,
    #[serde(default)]
    window: Vec<Rational>,
    limit: Rational,
}

pub fn burnside_to_value(x: &BurnsideElement) -> Value {
    serde_json::to_value(BurnsideRepr {
        so2: x.so2_value().clone(),
        window: x.window().to_vec(),
        limit: x.limit_value().clone(),
    })
    .expect("element serializes")
}

pub fn burnside_from_value(v: Value) -> Result<BurnsideElement, JsonError> {
    let r: BurnsideRepr = serde_json::from_value(v)?;
    Ok(BurnsideElement::new(r.so2, r.window, r.limit))
}

pub fn burnside_from_str(s: &str) -> Result<BurnsideElement, JsonError> {
    let r: BurnsideRepr = serde_json::from_str(s)?;
    Ok(BurnsideElement::new(r.so2, r.window, r.limit))
}

pub fn category_to_value(c: &DgCategory) -> Value {
    let n = c.len();
    let homs: Vec<Vec<Value>> = (0..n)
        .map(|a| (0..n).map(|b| module_to_value(c.hom(a, b))).collect())
        .collect();
    let mut compose = serde_json::Map::new();
    for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                if let Some(m) = c.composition(a, b, x) {
                    compose.insert(
                        format!("{a},{b},{x}"),
                        serde_json::to_value(components_repr(m)).expect("map serializes"),
                    );
                }
            }
        }
    }
    json!({
        "objects": c.labels(),
        "homs": homs,
        "compose": compose,
        "units": (0..n).map(|a| c.unit(a).to_vec()).collect::<Vec<_>>(),
    })
}

pub fn ea_to_value(ea: &EaCategory) -> Value {
    let products: BTreeMap<String, Value> = ea
        .products
        .iter()
        .map(|(&(x, y), entry)| {
            let v = match entry {
                ProductEntry::Object(z) => json!({
                    "kind": "object",
                    "index": z,
                    "label": ea.category.label(*z),
                }),
                ProductEntry::Zero => json!({ "kind": "zero" }),
                ProductEntry::ExceedsBound { k, power } => json!({
                    "kind": "exceeds-bound",
                    "stalk": k,
                    "power": power,
                }),
            };
            (format!("{x},{y}"), v)
        })
        .collect();
    json!({
        "cutoff": ea.cutoff,
        "unit_growth": {
            "base_window": ea.unit_growth.base_window,
            "base_dim": ea.unit_growth.base_dim,
            "increment": ea.unit_growth.increment,
        },
        "products": products,
        "category": category_to_value(&ea.category),
    })
}

#[cfg(test)]
mod tests {
    use crate::dg::Ring;
    use crate::sample::Sampler;

    use super::*;

    #[test]
    fn module_round_trip() {
        let mut s = Sampler::new(3);
        for ring in [Ring::Q, Ring::QW] {
            for _ in 0..10 {
                let m = s.complex(-2, 2, 3, ring);
                let v = module_to_value(&m);
                assert_eq!(module_from_value(v).unwrap(), m);
            }
        }
        let zero_w = DgModule::zero_module(true);
        let back = module_from_value(module_to_value(&zero_w)).unwrap();
        assert!(back.is_equivariant());
        let zero = DgModule::zero_module(false);
        assert!(!module_from_value(module_to_value(&zero)).unwrap().is_equivariant());
    }

    #[test]
    fn object_and_morphism_round_trip() {
        let mut s = Sampler::new(11);
        for _ in 0..8 {
            let a = s.dihedral_object(2, -1, 1, 2);
            let b = s.dihedral_object(2, -1, 1, 2);
            assert_eq!(object_from_value(object_to_value(&a)).unwrap(), a);
            let f = s.dihedral_morphism(&a, &b);
            assert_eq!(morphism_from_value(morphism_to_value(&f)).unwrap(), f);
        }
    }

    #[test]
    fn burnside_round_trip() {
        let x = BurnsideElement::new(
            Rational::new(2, 3),
            vec![Rational::one(), Rational::zero()],
            Rational::from_int(-1),
        );
        let v = burnside_to_value(&x);
        assert_eq!(burnside_from_value(v).unwrap(), x);
        let y = burnside_from_str(r#"{"so2":"0","window":["1","1"],"limit":"1"}"#).unwrap();
        assert_eq!(y, crate::burnside::idempotent_dihedral());
    }

    #[test]
    fn parse_errors_carry_location() {
        let err = module_from_str("{\"dims\": {\"0\": }}").unwrap_err();
        match err {
            JsonError::Parse { line, column, .. } => {
                assert_eq!(line, 1);
                assert!(column > 0);
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn validation_errors_name_the_component() {
        // d does not square to zero.
        let bad = r#"{
            "dims": {"0": 1, "1": 1, "2": 1},
            "d": {"1": [["1"]], "2": [["1"]]}
        }"#;
        let err = module_from_str(bad).unwrap_err();
        assert!(matches!(&err, JsonError::Invalid(m) if m.starts_with("module:")), "{err}");

        // A stalk without involution data.
        let obj = r#"{
            "stalks": [{"dims": {"0": 1}}],
            "tail": {"dims": {}, "w": {}},
            "infinity": {"dims": {}},
            "sigma": {}
        }"#;
        let err = object_from_str(obj).unwrap_err();
        assert!(matches!(&err, JsonError::Invalid(m) if m.contains("stalk 1")), "{err}");

        let err = module_from_str(r#"{"dims": {"x": 1}}"#).unwrap_err();
        assert!(matches!(&err, JsonError::Invalid(m) if m.contains("bad degree key")), "{err}");

        let err =
            module_from_str(r#"{"support": [0, 1], "dims": {"0": 1}}"#).unwrap_err();
        assert!(matches!(&err, JsonError::Invalid(m) if m.contains("support")), "{err}");

        let err = object_from_str(
            r#"{"window": 2, "stalks": [], "tail": {"dims": {}, "w": {}},
                "infinity": {"dims": {}}}"#,
        )
        .unwrap_err();
        assert!(matches!(&err, JsonError::Invalid(m) if m.contains("window")), "{err}");
    }

    #[test]
    fn category_dump_is_deterministic() {
        let ea = crate::ringoid::extract_ea(1, 1, 1);
        let a = serde_json::to_string(&ea_to_value(&ea)).unwrap();
        let b = serde_json::to_string(&ea_to_value(&crate::ringoid::extract_ea(1, 1, 1))).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("S_D"));
        assert!(a.contains("sigma_1^1"));
        assert!(a.contains("unit_growth"));
    }
}
