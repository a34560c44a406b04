//! Seeded verification suites. Each suite replays a family of algebraic
//! claims on reproducible random instances and reports one line per claim;
//! the command-line front end and the acceptance tests both run these, so a
//! failure shows up identically in either place.

use std::fmt;

use serde::Serialize;

use crate::burnside::{
    from_endomorphism, idempotent_class, idempotent_dihedral, idempotent_residual, idempotent_so2,
    to_endomorphism, BurnsideElement,
};
use crate::dg::{boundary_inclusion, sphere, ChainMap, DgModule, HomComplex, Homology, Ring};
use crate::dihedral::{
    associator_object, at_infinity, at_stalk, boxplus_fixed, boxplus_map, boxplus_splitting,
    braiding_object, cone_object, constant, constant_morphism, filtered_colimit, finite_limit,
    generating_maps, hom_space, infinity_morphism, infinity_unit, llp_solve_model,
    pushout_product, sections_counit, sections_unit, stalk_counit, stalk_morphism, stalk_unit,
    unit_left, unit_right, Diagram, DihedralMorphism, DihedralObject,
};
use crate::linalg::Rational;
use crate::ringoid::{connective_cover, extract_ea, homology_category, square_zero};
use crate::sample::Sampler;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str, seed: u64) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            seed,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} (seed {}): {}",
            self.suite,
            self.seed,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(
                f,
                "  {}  {:<width$}  {}",
                if c.passed { "pass" } else { "FAIL" },
                c.name,
                c.detail,
            )?;
        }
        Ok(())
    }
}

pub const SUITE_NAMES: [&str; 6] = [
    "adjunctions",
    "monoidal",
    "model",
    "boxplus",
    "burnside",
    "ringoid",
];

/// Run a named suite (or "all") at the default sample sizes.
pub fn run(suite: &str, seed: u64) -> Option<Vec<SuiteReport>> {
    match suite {
        "adjunctions" => Some(vec![adjunction_suite(seed, 50)]),
        "monoidal" => Some(vec![monoidal_suite(seed, 100, (-2, 3, 3))]),
        "model" => Some(vec![model_suite(seed, 300, (-2, 3, 3))]),
        "boxplus" => Some(vec![boxplus_suite(seed, 200)]),
        "burnside" => Some(vec![burnside_suite(seed, 1000, 500)]),
        "ringoid" => Some(vec![ringoid_suite(seed)]),
        "all" => Some(
            SUITE_NAMES
                .iter()
                .flat_map(|s| run(s, seed).expect("listed suite"))
                .collect(),
        ),
        _ => None,
    }
}

fn object_acyclic(v: &DihedralObject) -> bool {
    let trivial = |m: &DgModule| Homology::of(m).is_trivial();
    trivial(v.infinity())
        && trivial(v.tail())
        && (1..=v.window()).all(|k| trivial(v.stalk_at(k)))
}

/// Hom-set bijections and triangle identities for the four adjoint pairs,
/// with the bijections inverted explicitly on full hom bases.
pub fn adjunction_suite(seed: u64, per_pair: usize) -> SuiteReport {
    let mut r = SuiteReport::new("adjunctions", seed);
    let mut s = Sampler::new(seed);

    let mut ok = true;
    for _ in 0..per_pair {
        let k = s.usize(1, 3);
        let rm = s.complex(-1, 1, 2, Ring::QW);
        let w = s.usize(0, 2);
        let v = s.dihedral_object(w, -1, 1, 2);
        let ikr = at_stalk(k, &rm);
        let window = k.max(v.window());
        let basis = hom_space(&ikr, &v, window);
        let image = HomComplex::of(&rm, v.stalk_at(k)).chain_map_basis();
        ok &= basis.len() == image.len();
        let eps = stalk_counit(k, &v);
        for f in &basis {
            let g = f.stalk_component(k);
            let back = eps
                .compose(&stalk_morphism(k, g))
                .expect("endpoints align");
            ok &= &back == f;
        }
        ok &= eps.stalk_component(k) == &ChainMap::identity(v.stalk_at(k));
        ok &= stalk_counit(k, &ikr) == DihedralMorphism::identity(&ikr);
    }
    r.push(
        "stalk adjunction, inclusion on the left",
        ok,
        format!("{per_pair} instances"),
    );

    let mut ok = true;
    for _ in 0..per_pair {
        let k = s.usize(1, 3);
        let rm = s.complex(-1, 1, 2, Ring::QW);
        let w = s.usize(0, 2);
        let v = s.dihedral_object(w, -1, 1, 2);
        let ikr = at_stalk(k, &rm);
        let window = k.max(v.window());
        let basis = hom_space(&v, &ikr, window);
        let image = HomComplex::of(v.stalk_at(k), &rm).chain_map_basis();
        ok &= basis.len() == image.len();
        let eta = stalk_unit(k, &v);
        for f in &basis {
            let g = f.stalk_component(k);
            let back = stalk_morphism(k, g)
                .compose(&eta)
                .expect("endpoints align");
            ok &= &back == f;
        }
        ok &= eta.stalk_component(k) == &ChainMap::identity(v.stalk_at(k));
        ok &= stalk_unit(k, &ikr) == DihedralMorphism::identity(&ikr);
    }
    r.push(
        "stalk adjunction, inclusion on the right",
        ok,
        format!("{per_pair} instances"),
    );

    let mut ok = true;
    for _ in 0..per_pair {
        let m = s.complex(-1, 1, 2, Ring::Q);
        let w = s.usize(0, 2);
        let v = s.dihedral_object(w, -1, 1, 2);
        let im = at_infinity(&m);
        let basis = hom_space(&v, &im, v.window());
        let image = HomComplex::of(v.infinity(), &m).chain_map_basis();
        ok &= basis.len() == image.len();
        let eta = infinity_unit(&v);
        for f in &basis {
            let g = f.infinity_component();
            let back = infinity_morphism(g)
                .compose(&eta)
                .expect("endpoints align");
            ok &= &back == f;
        }
        ok &= eta.infinity_component() == &ChainMap::identity(v.infinity());
        ok &= infinity_unit(&im) == DihedralMorphism::identity(&im);
    }
    r.push(
        "infinity adjunction, inclusion on the right",
        ok,
        format!("{per_pair} instances"),
    );

    let mut ok = true;
    for _ in 0..per_pair {
        let m = s.complex(-1, 1, 2, Ring::Q);
        let w = s.usize(0, 2);
        let v = s.dihedral_object(w, -1, 1, 2);
        let cutoff = v.window() + 1;
        let cm = constant(&m);
        let basis = hom_space(&cm, &v, cutoff);
        let bp = boxplus_fixed(1, &v, cutoff);
        let image = HomComplex::of(&m, &bp.truncation).chain_map_basis();
        ok &= basis.len() == image.len();
        let eta_m = sections_unit(&m, cutoff);
        let (ct, eps) = sections_counit(&v, cutoff);
        for f in &basis {
            let g = boxplus_map(1, f, cutoff, true)
                .compose(&eta_m)
                .expect("endpoints align");
            let back = eps
                .compose(&constant_morphism(&g))
                .expect("endpoints align");
            ok &= &back == f;
        }
        // Triangles: eps_{cM} . c(eta_M) = id, boxplus(eps_V) . eta_T = id.
        let ceta = constant_morphism(&eta_m);
        let (_, eps_m) = sections_counit(&cm, cutoff);
        ok &= eps_m.compose(&ceta).expect("endpoints align")
            == DihedralMorphism::identity(&cm);
        let t = ct.infinity().clone();
        let beps = boxplus_map(1, &eps, cutoff, true);
        let eta_t = sections_unit(&t, cutoff);
        ok &= beps.compose(&eta_t).expect("endpoints align") == ChainMap::identity(&t);
    }
    r.push(
        "constant against truncated fixed sections",
        ok,
        format!("{per_pair} instances"),
    );

    r
}

/// Unit, associativity, and symmetry isomorphisms on random triples, plus
/// pushout products over all pairs of generating cells in the given range.
pub fn monoidal_suite(seed: u64, triples: usize, cells: (i32, i32, usize)) -> SuiteReport {
    let mut r = SuiteReport::new("monoidal", seed);
    let mut s = Sampler::new(seed);

    let mut ok = true;
    for _ in 0..triples {
        let (wa, wb, wc) = (s.usize(0, 2), s.usize(0, 2), s.usize(0, 1));
        let a = s.dihedral_object(wa, -1, 1, 1);
        let b = s.dihedral_object(wb, -1, 1, 1);
        let c = s.dihedral_object(wc, 0, 1, 1);
        let assoc = associator_object(&a, &b, &c);
        ok &= assoc.is_isomorphism();
        match assoc.inverse() {
            Some(inv) => {
                ok &= assoc.compose(&inv).expect("endpoints align")
                    == DihedralMorphism::identity(assoc.target());
                ok &= inv.compose(&assoc).expect("endpoints align")
                    == DihedralMorphism::identity(assoc.source());
            }
            None => ok = false,
        }
        let braid = braiding_object(&a, &b);
        ok &= braid.is_isomorphism();
        ok &= braiding_object(&b, &a)
            .compose(&braid)
            .expect("endpoints align")
            == DihedralMorphism::identity(braid.source());
        ok &= unit_left(&a) == DihedralMorphism::identity(&a);
        ok &= unit_right(&b) == DihedralMorphism::identity(&b);
    }
    r.push(
        "unit, associator, braiding are isomorphisms",
        ok,
        format!("{triples} triples"),
    );

    let (lo, hi, max_stalk) = cells;
    let gens = generating_maps(lo, hi, max_stalk);
    let all: Vec<_> = gens.all().collect();
    let mut ok = true;
    let mut pairs = 0usize;
    for g in &all {
        for h in &all {
            let pp = match pushout_product(&g.map, &h.map) {
                Ok(pp) => pp,
                Err(_) => {
                    ok = false;
                    continue;
                }
            };
            ok &= pp.map.is_degreewise_injective();
            match g.certificate.combine(h.certificate) {
                Some(cert) => ok &= crate::dihedral::verify_certificate(&pp.map, cert),
                // Cells at distinct stalks tensor to zero.
                None => ok &= pp.map.source().is_zero() && pp.map.target().is_zero(),
            }
            pairs += 1;
        }
    }
    r.push(
        "pushout products of generating cells stay cellular",
        ok,
        format!("{pairs} pairs"),
    );

    r
}

/// Generating acyclic cofibrations, lifting against surjective weak
/// equivalences, reported non-lifts, and cone-detects-equivalence.
pub fn model_suite(seed: u64, maps: usize, cells: (i32, i32, usize)) -> SuiteReport {
    let mut r = SuiteReport::new("model", seed);
    let mut s = Sampler::new(seed);
    let (lo, hi, max_stalk) = cells;
    let gens = generating_maps(lo, hi, max_stalk);

    let mut ok = true;
    let mut count = 0usize;
    for g in &gens.acyclic_cofibrations {
        ok &= g.map.is_weak_equivalence();
        ok &= g.map.is_degreewise_injective();
        ok &= crate::dihedral::verify_certificate(&g.map, g.certificate);
        count += 1;
    }
    r.push(
        "generating acyclic cofibrations are trivial cofibrations",
        ok,
        format!("{count} cells"),
    );

    let mut ok = true;
    let mut squares = 0usize;
    for _ in 0..4 {
        let v = s.dihedral_object(1, -1, 1, 2);
        let acy = s.acyclic_object(1);
        let d = Diagram::new(vec![v, acy], vec![]).expect("product diagram");
        let lim = finite_limit(&d).expect("product exists");
        let p = &lim.projections[0];
        ok &= p.is_fibration() && p.is_weak_equivalence();
        for g in gens.all() {
            let h = s.dihedral_morphism(g.map.target(), &lim.object);
            let top = h.compose(&g.map).expect("composable");
            let bottom = p.compose(&h).expect("composable");
            match llp_solve_model(&g.map, p, &top, &bottom) {
                Ok(Some(lift)) => {
                    ok &= lift.compose(&g.map).expect("composable") == top;
                    ok &= p.compose(&lift).expect("composable") == bottom;
                }
                _ => ok = false,
            }
            squares += 1;
        }
    }
    r.push(
        "lifts found against surjective weak equivalences",
        ok,
        format!("{squares} squares"),
    );

    let mut ok = true;
    let i = constant_morphism(&boundary_inclusion(Ring::Q, 1));
    let cs0 = constant(&sphere(Ring::Q, 0));
    let z = constant(&DgModule::zero_module(false));
    let p = DihedralMorphism::zero(&cs0, &z);
    let top = DihedralMorphism::identity(&cs0);
    let bottom = DihedralMorphism::zero(i.target(), &z);
    ok &= matches!(llp_solve_model(&i, &p, &top, &bottom), Ok(None));
    let wrong_bottom = DihedralMorphism::zero(i.target(), &cs0);
    ok &= llp_solve_model(&i, &p, &top, &wrong_bottom).is_err();
    r.push(
        "unsolvable and malformed squares are reported",
        ok,
        "2 probes".to_string(),
    );

    let mut ok = true;
    for idx in 0..maps {
        let f = match idx % 10 {
            0 => {
                let v = s.dihedral_object(1, -1, 1, 2);
                DihedralMorphism::identity(&v)
            }
            1 => {
                let v = s.acyclic_object(1);
                let z = constant(&DgModule::zero_module(false));
                DihedralMorphism::zero(&v, &z)
            }
            _ => {
                let (wa, wb) = (s.usize(0, 2), s.usize(0, 2));
                let a = s.dihedral_object(wa, -1, 1, 2);
                let b = s.dihedral_object(wb, -1, 1, 2);
                s.dihedral_morphism(&a, &b)
            }
        };
        ok &= f.is_weak_equivalence() == object_acyclic(&cone_object(&f));
    }
    r.push(
        "mapping cone acyclicity detects weak equivalences",
        ok,
        format!("{maps} maps"),
    );

    r
}

/// Splitting of first sections into window parts plus a truncation, and
/// commutation of truncated sections with filtered colimits, over random
/// chains.
pub fn boxplus_suite(seed: u64, chains: usize) -> SuiteReport {
    let mut r = SuiteReport::new("boxplus", seed);
    let mut s = Sampler::new(seed);

    let mut split_ok = true;
    let mut colim_ok = true;
    for _ in 0..chains {
        let len = s.usize(2, 6);
        let w0 = s.usize(0, 4);
        let mut objects = vec![s.dihedral_object(w0, -1, 1, 3)];
        let mut maps = Vec::new();
        for i in 1..len {
            let wi = s.usize(0, 4);
            let next = s.dihedral_object(wi, -1, 1, 3);
            maps.push(s.dihedral_morphism(&objects[i - 1], &next));
            objects.push(next);
        }
        let fc = filtered_colimit(&objects, &maps).expect("chain is a diagram");
        let cutoff = objects.iter().map(|v| v.window()).max().unwrap_or(0) + 1;
        let n = s.usize(1, cutoff);
        colim_ok &= fc.canonical_map_check(n, cutoff, false);
        colim_ok &= fc.canonical_map_check(n, cutoff, true);

        let v = objects.last().expect("nonempty chain");
        let start = s.usize(1, cutoff + 1);
        for fixed in [false, true] {
            let (fwd, bwd) = boxplus_splitting(start, v, cutoff, fixed);
            split_ok &= fwd.compose(&bwd).expect("endpoints align")
                == ChainMap::identity(fwd.target());
            split_ok &= bwd.compose(&fwd).expect("endpoints align")
                == ChainMap::identity(fwd.source());
        }
    }
    r.push(
        "first sections split into window parts and truncation",
        split_ok,
        format!("{chains} chains"),
    );
    r.push(
        "truncated sections preserve filtered colimits",
        colim_ok,
        format!("{chains} chains"),
    );

    r
}

/// Idempotent relations, unique basis decomposition, and the isomorphism
/// onto the endomorphism ring of the unit object.
pub fn burnside_suite(seed: u64, elements: usize, pairs: usize) -> SuiteReport {
    let mut r = SuiteReport::new("burnside", seed);
    let mut s = Sampler::new(seed);

    let ec = idempotent_so2();
    let ed = idempotent_dihedral();
    let mut ok = ec.add(&ed) == BurnsideElement::one();
    ok &= ec.mul(&ed).is_zero();
    for n in 1..=8 {
        let en = idempotent_class(n);
        ok &= en.mul(&en) == en;
        ok &= ed.mul(&en) == en;
        ok &= ec.mul(&en).is_zero();
        for m in 1..=8 {
            if m != n {
                ok &= en.mul(&idempotent_class(m)).is_zero();
            }
        }
        let res = idempotent_residual(n);
        ok &= res.mul(&res) == res;
        ok &= en.mul(&res).is_zero();
    }
    r.push(
        "idempotent relations hold",
        ok,
        "e_C, e_D, e_1..e_8, f_1..f_8".to_string(),
    );

    let mut ok = true;
    for _ in 0..elements {
        let wlen = s.usize(0, 6);
        let x = BurnsideElement::new(
            s.rational(),
            (0..wlen).map(|_| s.rational()).collect(),
            s.rational(),
        );
        let (c, d, finite) = x.decompose();
        let y = BurnsideElement::from_decomposition(&c, &d, &finite);
        ok &= y == x;
        let again = y.decompose();
        ok &= again.0 == c && again.1 == d && again.2 == finite;
        ok &= &c == x.so2_value() && &d == x.limit_value();
    }
    r.push(
        "basis decomposition round-trips uniquely",
        ok,
        format!("{elements} elements"),
    );

    let mut ok = true;
    for _ in 0..pairs {
        let wlen = s.usize(0, 12);
        let x = BurnsideElement::new(
            Rational::zero(),
            (0..wlen).map(|_| s.rational()).collect(),
            s.rational(),
        );
        let wlen = s.usize(0, 12);
        let y = BurnsideElement::new(
            Rational::zero(),
            (0..wlen).map(|_| s.rational()).collect(),
            s.rational(),
        );
        let fx = to_endomorphism(&x).expect("dihedral part embeds");
        let fy = to_endomorphism(&y).expect("dihedral part embeds");
        ok &= from_endomorphism(&fx).expect("scalar endomorphism") == x;
        let prod = fx.compose(&fy).expect("endomorphisms compose");
        ok &= from_endomorphism(&prod).expect("scalar endomorphism") == x.mul(&y);
        ok &= from_endomorphism(&fx.add(&fy)).expect("scalar endomorphism") == x.add(&y);
    }
    ok &= to_endomorphism(&idempotent_so2()).is_err();
    r.push(
        "unit endomorphisms realize the dihedral summand",
        ok,
        format!("{pairs} pairs"),
    );

    r
}

/// Extraction of the small catalog endomorphism category and the
/// connective-cover comparisons, with nonformal negative controls.
pub fn ringoid_suite(seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("ringoid", seed);

    let ea = extract_ea(2, 2, 2);
    let n = ea.category.len();
    let mut ok = true;
    for a in 0..n {
        for b in 0..n {
            ok &= ea.category.hom(a, b).support().iter().all(|&d| d == 0);
        }
    }
    ok &= ea.category.check_associativity(500, seed);
    r.push(
        "extracted category is associative with degree-0 homs",
        ok,
        format!("{n} objects"),
    );

    let (c0, i, p) = connective_cover(&ea.category);
    let mut ok = homology_category(&ea.category) == ea.category;
    ok &= c0 == ea.category;
    ok &= i.is_quasi_equivalence() && p.is_quasi_equivalence();
    ok &= i.check_functoriality(200, seed);
    r.push(
        "extraction is formal: cover and homology change nothing",
        ok,
        "catalog bound 2".to_string(),
    );

    let mut ok = true;
    let bad = square_zero(1);
    let (_, bi, bp) = connective_cover(&bad);
    ok &= bi.is_quasi_equivalence() && !bp.is_quasi_equivalence();
    let worse = square_zero(-1);
    let (_, wi, wp) = connective_cover(&worse);
    ok &= !wi.is_quasi_equivalence() && !wp.is_quasi_equivalence();
    r.push(
        "cover comparison fails on nonformal controls",
        ok,
        "2 controls".to_string(),
    );

    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjunction_suite_small() {
        let r = adjunction_suite(0, 3);
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 4);
    }

    #[test]
    fn monoidal_suite_small() {
        let r = monoidal_suite(1, 3, (0, 1, 2));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn model_suite_small() {
        let r = model_suite(2, 12, (0, 1, 2));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn boxplus_suite_small() {
        let r = boxplus_suite(3, 3);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn burnside_suite_small() {
        let r = burnside_suite(4, 40, 15);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn ringoid_suite_passes() {
        let r = ringoid_suite(5);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn reports_are_deterministic() {
        let a = burnside_suite(7, 20, 5).to_string();
        let b = burnside_suite(7, 20, 5).to_string();
        assert_eq!(a, b);
        assert!(a.starts_with("suite burnside (seed 7): PASS"));
    }

    #[test]
    fn run_dispatches_suites() {
        assert_eq!(run("burnside", 0).map(|r| r.len()), Some(1));
        assert!(run("frobnicate", 0).is_none());
        assert!(SUITE_NAMES.contains(&"model"));
    }
}
