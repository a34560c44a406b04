use std::collections::BTreeMap;

use crate::linalg::{MatrixSystem, QMatrix};

use super::{ChainMap, DgError};

/// Solve the lifting problem
///
/// ```text
///   A --top--> X
///   |i         |p
///   v          v
///   B -bottom-> Y
/// ```
///
/// for h: B -> X with h . i = top and p . h = bottom. The lift must be a
/// chain map (and equivariant when the square is); everything reduces to one
/// finite linear system, solved deterministically with free variables zero.
/// Returns Ok(None) when the system is inconsistent.
pub fn llp_solve(
    i: &ChainMap,
    p: &ChainMap,
    top: &ChainMap,
    bottom: &ChainMap,
) -> Result<Option<ChainMap>, DgError> {
    if top.source() != i.source()
        || top.target() != p.source()
        || bottom.source() != i.target()
        || bottom.target() != p.target()
    {
        return Err(DgError::SquareShape);
    }
    if p.compose(top)? != bottom.compose(i)? {
        return Err(DgError::NonCommutingSquare);
    }
    let b = i.target();
    let x = p.source();
    let equivariant = b.is_equivariant();
    if equivariant != x.is_equivariant() {
        return Err(DgError::EquivarianceMismatch);
    }

    let mut degrees: Vec<i32> = b.support();
    degrees.extend(x.support());
    let lows: Vec<i32> = degrees.iter().map(|&n| n - 1).collect();
    degrees.extend(lows);
    degrees.sort_unstable();
    degrees.dedup();

    let mut sys = MatrixSystem::new();
    let mut unknown: BTreeMap<i32, usize> = BTreeMap::new();
    for &n in &degrees {
        unknown.insert(n, sys.add_unknown(x.dim(n), b.dim(n)));
    }

    for &n in &degrees {
        let hn = unknown[&n];
        // Chain condition: h_{n-1} d^B_n - d^X_n h_n = 0.
        if let Some(&hprev) = unknown.get(&(n - 1)) {
            sys.equation(
                vec![
                    (hprev, QMatrix::identity(x.dim(n - 1)), b.d(n)),
                    (hn, -&x.d(n), QMatrix::identity(b.dim(n))),
                ],
                QMatrix::zero(x.dim(n - 1), b.dim(n)),
            );
        }
        if equivariant {
            sys.equation(
                vec![
                    (hn, QMatrix::identity(x.dim(n)), b.w(n)),
                    (hn, -&x.w(n), QMatrix::identity(b.dim(n))),
                ],
                QMatrix::zero(x.dim(n), b.dim(n)),
            );
        }
        // h . i = top.
        sys.equation(
            vec![(hn, QMatrix::identity(x.dim(n)), i.component(n))],
            top.component(n),
        );
        // p . h = bottom.
        sys.equation(
            vec![(hn, p.component(n), QMatrix::identity(b.dim(n)))],
            bottom.component(n),
        );
    }

    let Some(solution) = sys.solve() else {
        return Ok(None);
    };
    let comps: BTreeMap<i32, QMatrix> = degrees
        .iter()
        .map(|&n| (n, solution[unknown[&n]].clone()))
        .collect();
    let lift = ChainMap::new(b.clone(), x.clone(), comps)?;
    Ok(Some(lift))
}
