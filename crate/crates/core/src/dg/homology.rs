use std::collections::BTreeMap;

use crate::linalg::{quotient, QMatrix, Rational, Subspace};

use super::{ChainMap, DgModule};

/// Homology of a bounded complex: graded dimensions plus enough cycle data to
/// compute classes, representatives, induced maps, and (for equivariant
/// complexes) the induced involution.
#[derive(Clone, Debug)]
pub struct Homology {
    data: BTreeMap<i32, HomologyDegree>,
    induced_w: Option<BTreeMap<i32, QMatrix>>,
}

#[derive(Clone, Debug)]
struct HomologyDegree {
    cycles: Subspace,
    class_proj: QMatrix,
    reps: QMatrix,
}

impl Homology {
    pub fn of(m: &DgModule) -> Homology {
        let mut data = BTreeMap::new();
        for &n in m.support().iter() {
            let z = m.d(n).kernel();
            let boundaries = m.d(n + 1).image();
            // Boundaries in cycle coordinates; d^2 = 0 guarantees membership.
            let b_in_z: Vec<Vec<Rational>> = boundaries
                .basis_vectors()
                .iter()
                .map(|v| z.coordinates(v).expect("boundaries are cycles"))
                .collect();
            let b_sub = Subspace::from_vectors(z.dim(), b_in_z);
            let (h, proj) = quotient(z.dim(), &b_sub);
            if h == 0 {
                continue;
            }
            let section = proj.solve_matrix(&QMatrix::identity(h)).expect("projection is onto");
            let reps = z.basis_matrix().matmul(&section);
            data.insert(
                n,
                HomologyDegree {
                    cycles: z,
                    class_proj: proj,
                    reps,
                },
            );
        }
        let induced_w = if m.is_equivariant() {
            let mut ws = BTreeMap::new();
            for (&n, deg) in &data {
                let mapped = m.w(n).matmul(&deg.reps);
                let mut wm = QMatrix::zero(deg.reps.cols(), deg.reps.cols());
                for j in 0..mapped.cols() {
                    let cls = Self::class_in(deg, &mapped.col_vec(j)).expect("w preserves cycles");
                    for (i, v) in cls.into_iter().enumerate() {
                        wm.set(i, j, v);
                    }
                }
                ws.insert(n, wm);
            }
            Some(ws)
        } else {
            None
        };
        Homology { data, induced_w }
    }

    fn class_in(deg: &HomologyDegree, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords = deg.cycles.coordinates(v)?;
        Some(deg.class_proj.apply(&coords))
    }

    pub fn dim(&self, n: i32) -> usize {
        self.data.get(&n).map_or(0, |d| d.reps.cols())
    }

    pub fn dims(&self) -> BTreeMap<i32, usize> {
        self.data.iter().map(|(&n, d)| (n, d.reps.cols())).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.data.values().map(|d| d.reps.cols()).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.data.is_empty()
    }

    pub fn support(&self) -> Vec<i32> {
        self.data.keys().copied().collect()
    }

    /// Class of a chain-level vector, or None when it is not a cycle.
    pub fn class_of(&self, n: i32, v: &[Rational]) -> Option<Vec<Rational>> {
        match self.data.get(&n) {
            Some(deg) => Self::class_in(deg, v),
            None => {
                // Zero homology: any cycle has the empty class.
                Some(Vec::new())
            }
        }
    }

    /// Chosen cycle representatives as columns, chain dim x homology dim.
    pub fn representatives(&self, n: i32) -> Option<&QMatrix> {
        self.data.get(&n).map(|d| &d.reps)
    }

    pub fn induced_involution(&self, n: i32) -> Option<QMatrix> {
        self.induced_w.as_ref().map(|ws| {
            ws.get(&n)
                .cloned()
                .unwrap_or_else(|| QMatrix::identity(self.dim(n)))
        })
    }

    /// Homology as a complex with zero differential, carrying the induced
    /// involution when the input was equivariant.
    pub fn as_module(&self) -> DgModule {
        let dims: BTreeMap<i32, usize> = self.dims();
        match &self.induced_w {
            Some(ws) => DgModule::new_w(dims, BTreeMap::new(), ws.clone()).expect("induced involution is valid"),
            None => DgModule::new(dims, BTreeMap::new()).expect("trivial differential"),
        }
    }

    /// Matrix of H(f) per degree, computed on the chosen representatives.
    pub fn induced_map(f: &ChainMap, hs: &Homology, ht: &Homology) -> BTreeMap<i32, QMatrix> {
        let mut out = BTreeMap::new();
        let mut degrees: Vec<i32> = hs.support();
        degrees.extend(ht.support());
        degrees.sort_unstable();
        degrees.dedup();
        for n in degrees {
            let (hsn, htn) = (hs.dim(n), ht.dim(n));
            let mut m = QMatrix::zero(htn, hsn);
            if hsn > 0 {
                let reps = hs.representatives(n).expect("dim > 0");
                let mapped = f.component(n).matmul(reps);
                for j in 0..hsn {
                    let cls = ht
                        .class_of(n, &mapped.col_vec(j))
                        .expect("chain maps send cycles to cycles");
                    for (i, v) in cls.into_iter().enumerate() {
                        m.set(i, j, v);
                    }
                }
            }
            out.insert(n, m);
        }
        out
    }

    pub fn induced_is_iso(f: &ChainMap, hs: &Homology, ht: &Homology) -> bool {
        let maps = Self::induced_map(f, hs, ht);
        maps.iter().all(|(&n, m)| {
            hs.dim(n) == ht.dim(n) && (m.rows() == 0 || m.inverse().is_some())
        })
    }
}
