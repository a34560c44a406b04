use std::collections::BTreeMap;

use crate::dg::{
    associator, braiding, tensor_map, ChainMap, DgModule, HomComplex, TensorProduct,
};
use crate::linalg::{QMatrix, Subspace};

use super::{constant, DihedralError, DihedralMorphism, DihedralObject};

/// Stalkwise, tailwise and infinity-wise tensor product; the germ map is
/// sigma_v ox sigma_w.
pub fn tensor(v: &DihedralObject, w: &DihedralObject) -> DihedralObject {
    let window = v.window().max(w.window());
    let stalks: Vec<DgModule> = (1..=window)
        .map(|k| TensorProduct::of(v.stalk_at(k), w.stalk_at(k)).module)
        .collect();
    let tail = TensorProduct::of(v.tail(), w.tail()).module;
    let inf = TensorProduct::of(v.infinity(), w.infinity());

    // sigma as a plain chain map into the involution-free tail, so the
    // Kronecker blocks can be assembled by tensor_map.
    let sv = ChainMap::new(
        v.infinity().clone(),
        v.tail().forget_involution(),
        v.sigma_components().clone(),
    )
    .expect("sigma commutes with the differentials");
    let sw = ChainMap::new(
        w.infinity().clone(),
        w.tail().forget_involution(),
        w.sigma_components().clone(),
    )
    .expect("sigma commutes with the differentials");
    let tail_plain = TensorProduct::of(&v.tail().forget_involution(), &w.tail().forget_involution());
    let sigma = tensor_map(&inf, &tail_plain, &sv, &sw);

    DihedralObject::new(stalks, tail, inf.module, sigma.components().clone())
        .expect("tensor product preserves the object axioms")
}

/// f ox g componentwise.
pub fn tensor_morphism(f: &DihedralMorphism, g: &DihedralMorphism) -> DihedralMorphism {
    let src = tensor(f.source(), g.source());
    let tgt = tensor(f.target(), g.target());
    let window = src.window().max(tgt.window()).max(f.window()).max(g.window());
    let stalks: Vec<ChainMap> = (1..=window)
        .map(|k| {
            tensor_map(
                &TensorProduct::of(f.source().stalk_at(k), g.source().stalk_at(k)),
                &TensorProduct::of(f.target().stalk_at(k), g.target().stalk_at(k)),
                f.stalk_component(k),
                g.stalk_component(k),
            )
        })
        .collect();
    let f_tail = tensor_map(
        &TensorProduct::of(f.source().tail(), g.source().tail()),
        &TensorProduct::of(f.target().tail(), g.target().tail()),
        f.tail_component(),
        g.tail_component(),
    );
    let f_inf = tensor_map(
        &TensorProduct::of(f.source().infinity(), g.source().infinity()),
        &TensorProduct::of(f.target().infinity(), g.target().infinity()),
        f.infinity_component(),
        g.infinity_component(),
    );
    DihedralMorphism::new(src, tgt, stalks, f_tail, f_inf)
        .expect("tensor of morphisms satisfies the germ condition")
}

/// The monoidal unit cQ.
pub fn unit_object() -> DihedralObject {
    constant(&DgModule::single(0, 1))
}

/// cQ ox V -> V. With the chosen coordinates the tensor is syntactically the
/// same object, so the unitor is an identity morphism.
pub fn unit_left(v: &DihedralObject) -> DihedralMorphism {
    let t = tensor(&unit_object(), v);
    assert!(t == *v, "unit tensor normalizes to the object itself");
    DihedralMorphism::identity(v)
}

/// V ox cQ -> V.
pub fn unit_right(v: &DihedralObject) -> DihedralMorphism {
    let t = tensor(v, &unit_object());
    assert!(t == *v, "unit tensor normalizes to the object itself");
    DihedralMorphism::identity(v)
}

/// (A ox B) ox C -> A ox (B ox C), componentwise regrouping.
pub fn associator_object(
    a: &DihedralObject,
    b: &DihedralObject,
    c: &DihedralObject,
) -> DihedralMorphism {
    let src = tensor(&tensor(a, b), c);
    let tgt = tensor(a, &tensor(b, c));
    let window = src.window().max(tgt.window());
    let stalks: Vec<ChainMap> = (1..=window)
        .map(|k| associator(a.stalk_at(k), b.stalk_at(k), c.stalk_at(k)))
        .collect();
    let f_tail = associator(a.tail(), b.tail(), c.tail());
    let f_inf = associator(a.infinity(), b.infinity(), c.infinity());
    DihedralMorphism::new(src, tgt, stalks, f_tail, f_inf)
        .expect("regrouping satisfies the germ condition")
}

/// A ox B -> B ox A with the Koszul sign, componentwise.
pub fn braiding_object(a: &DihedralObject, b: &DihedralObject) -> DihedralMorphism {
    let src = tensor(a, b);
    let tgt = tensor(b, a);
    let window = src.window().max(tgt.window());
    let stalks: Vec<ChainMap> = (1..=window)
        .map(|k| braiding(a.stalk_at(k), b.stalk_at(k)))
        .collect();
    let f_tail = braiding(a.tail(), b.tail());
    let f_inf = braiding(a.infinity(), b.infinity());
    DihedralMorphism::new(src, tgt, stalks, f_tail, f_inf)
        .expect("braiding satisfies the germ condition")
}

/// Internal hom. Stalks are the equivariant hom complexes hom(b_k, c_k); the
/// infinity part is the complex of pairs (g, t) with g in hom(b_inf, c_inf),
/// t in hom(b_tail, c_tail) and sigma_c . g = t . sigma_b, with germ map
/// (g, t) -> t. When sigma_b is degreewise surjective t is determined by g
/// and automatically commutes with the involutions; when the tail of b is
/// zero the pair constraint reads sigma_c . g = 0. Outside those two cases
/// the hom has no eventually-constant description and the call fails.
pub fn hom_internal(
    b: &DihedralObject,
    c: &DihedralObject,
) -> Result<DihedralObject, DihedralError> {
    if !(b.is_tail_reduced() || b.tail().is_zero()) {
        return Err(DihedralError::NonRepresentableHom);
    }
    let window = b.window().max(c.window());
    let stalks: Vec<DgModule> = (1..=window)
        .map(|k| HomComplex::of(b.stalk_at(k), c.stalk_at(k)).module)
        .collect();
    let tail_hom = HomComplex::of(b.tail(), c.tail());

    let inf_hom = HomComplex::of(b.infinity(), c.infinity());
    let tail_hom_plain = HomComplex::of(
        &b.tail().forget_involution(),
        &c.tail().forget_involution(),
    );
    let (pair_ambient, _, pair_projs) =
        DgModule::direct_sum(&[&inf_hom.module, &tail_hom_plain.module]);

    // Degreewise constraint sigma_c . g_m = t_m . sigma_b on the flattened
    // coordinates; both hom complexes flatten blocks column-major, so the two
    // sides become Kronecker blocks.
    let mut spaces: BTreeMap<i32, Subspace> = BTreeMap::new();
    for &n in pair_ambient.support().iter() {
        let cols = pair_ambient.dim(n);
        let mut row_blocks: Vec<(i32, usize)> = Vec::new();
        let mut rows = 0;
        for &m in b.infinity().support().iter() {
            let sz = b.infinity().dim(m) * c.tail().dim(m + n);
            if sz > 0 {
                row_blocks.push((m, rows));
                rows += sz;
            }
        }
        let mut constraint = QMatrix::zero(rows, cols);
        let g_cols = inf_hom.module.dim(n);
        for &(m, row0) in &row_blocks {
            if let Some((_, goff)) = inf_hom.blocks(n).into_iter().find(|&(k, _)| k == m) {
                let block = QMatrix::identity(b.infinity().dim(m)).kron(&c.sigma(m + n));
                copy_into(&mut constraint, row0, goff, &block);
            }
            if let Some((_, toff)) = tail_hom_plain.blocks(n).into_iter().find(|&(k, _)| k == m) {
                let block = b.sigma(m).transpose().kron(&QMatrix::identity(c.tail().dim(m + n)));
                copy_into(&mut constraint, row0, g_cols + toff, &block.scale(&(-crate::linalg::Rational::one())));
            }
        }
        spaces.insert(n, constraint.kernel());
    }
    let (infinity, incl) = subcomplex(&pair_ambient, &spaces);

    let mut sigma = BTreeMap::new();
    for (&n, basis) in &incl {
        sigma.insert(n, pair_projs[1].component(n).matmul(basis));
    }
    DihedralObject::new(stalks, tail_hom.module, infinity, sigma)
        .map_err(DihedralError::from)
}

fn copy_into(m: &mut QMatrix, row0: usize, col0: usize, block: &QMatrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = block.get(i, j);
            if !v.is_zero() {
                m.set(row0 + i, col0 + j, v.clone());
            }
        }
    }
}

/// Restrict a plain ambient complex to degreewise subspaces that are closed
/// under the differential. Returns the restricted complex and the inclusion
/// basis per degree.
fn subcomplex(
    ambient: &DgModule,
    spaces: &BTreeMap<i32, Subspace>,
) -> (DgModule, BTreeMap<i32, QMatrix>) {
    let mut dims = BTreeMap::new();
    let mut incl = BTreeMap::new();
    for (&n, s) in spaces {
        if s.dim() == 0 {
            continue;
        }
        dims.insert(n, s.dim());
        incl.insert(n, s.basis_matrix().clone());
    }
    let mut d = BTreeMap::new();
    for (&n, s) in spaces {
        if s.dim() == 0 {
            continue;
        }
        let mapped = ambient.d(n).matmul(s.basis_matrix());
        match spaces.get(&(n - 1)) {
            Some(prev) if prev.dim() > 0 => {
                let mut coords = QMatrix::zero(prev.dim(), s.dim());
                for j in 0..s.dim() {
                    let c = prev
                        .coordinates(&mapped.col_vec(j))
                        .expect("the subspaces are closed under the differential");
                    for (i, v) in c.into_iter().enumerate() {
                        coords.set(i, j, v);
                    }
                }
                if !coords.is_zero() {
                    d.insert(n, coords);
                }
            }
            _ => {
                assert!(mapped.is_zero(), "the subspaces are closed under the differential");
            }
        }
    }
    let module = DgModule::new(dims, d).expect("restricted differential squares to zero");
    (module, incl)
}
