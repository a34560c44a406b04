//! Exact rational linear algebra: dense matrices over Q, canonical subspaces,
//! solving. Everything downstream reduces to these primitives.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Arbitrary-precision rational scalar. Always in lowest terms, denominator
/// positive; arithmetic never rounds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn inv(&self) -> Rational {
        assert!(!self.is_zero(), "inverse of zero");
        Rational(self.0.recip())
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: BigInt = den.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(de::Error::custom)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

/// Dense matrix over Q, row-major. Empty shapes (0 x n, n x 0) are legal and
/// act as zero maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix { rows, cols, entries }
    }

    /// Panics on ragged input. `cols` is taken from the first row; a rowless
    /// matrix gets 0 columns.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        QMatrix { rows: r, cols: c, entries }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rational::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn column(v: &[Rational]) -> Self {
        QMatrix::from_fn(v.len(), 1, |i, _| v[i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == QMatrix::identity(self.rows)
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    if !self.get(i, j).is_zero() && !v[j].is_zero() {
                        acc += self.get(i, j) * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn matmul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = QMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + &(a * b);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product; block (i,j) of the result is `self[i,j] * rhs`.
    pub fn kron(&self, rhs: &QMatrix) -> QMatrix {
        let mut out = QMatrix::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        let b = rhs.get(p, q);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + p, j * rhs.cols + q, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, rhs.rows, "row count mismatch");
        QMatrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.cols, "column count mismatch");
        QMatrix::from_fn(self.rows + rhs.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                rhs.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn direct_sum(&self, rhs: &QMatrix) -> QMatrix {
        QMatrix::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                rhs.get(i - self.rows, j - self.cols).clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn submatrix(&self, row_range: std::ops::Range<usize>, col_range: std::ops::Range<usize>) -> QMatrix {
        QMatrix::from_fn(row_range.len(), col_range.len(), |i, j| {
            self.get(row_range.start + i, col_range.start + j).clone()
        })
    }

    /// Reduced row echelon form and pivot column indices. Rank = pivot count.
    /// The result is the canonical RREF, independent of pivot-row choice;
    /// rows at or below the working row are zero left of the working column,
    /// so elimination touches only the pivot row's nonzero columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let size = |x: &Rational| x.numer().bits() + x.denom().bits();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Smallest candidate entry limits coefficient growth.
            let Some(p) = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| size(m.get(i, c)))
            else {
                continue;
            };
            if p != r {
                for j in c..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            if !m.get(r, c).is_one() {
                let inv = m.get(r, c).inv();
                for j in c..m.cols {
                    if !m.get(r, j).is_zero() {
                        let v = m.get(r, j) * &inv;
                        m.set(r, j, v);
                    }
                }
            }
            let live: Vec<usize> = (c..m.cols).filter(|&j| !m.get(r, j).is_zero()).collect();
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for &j in &live {
                        let v = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical null space. `dim kernel + rank = cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.cols, basis)
    }

    /// Canonical column space.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<Rational>> = (0..self.cols).map(|j| self.col_vec(j)).collect();
        Subspace::from_vectors(self.rows, cols)
    }

    /// One solution of `self * x = b`, free variables pinned to zero, or None
    /// when inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let aug = self.hstack(&QMatrix::column(b));
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Columnwise solve: X with `self * X = rhs`, or None if any column is
    /// inconsistent.
    pub fn solve_matrix(&self, rhs: &QMatrix) -> Option<QMatrix> {
        assert_eq!(rhs.rows, self.rows, "rhs row mismatch");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = QMatrix::zero(self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve_matrix(&QMatrix::identity(self.rows))?;
        if self.matmul(&x).is_identity() {
            Some(x)
        } else {
            None
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row_vec(i)).collect();
        rows.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(de)?;
        let c = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != c) {
            return Err(de::Error::custom("ragged matrix rows"));
        }
        Ok(QMatrix::from_rows(rows))
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        QMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        QMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }
}

/// Linear subspace of Q^n held by a canonical basis: columns of `basis` are
/// the reduced column echelon representative, so two subspaces are equal iff
/// the structs are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: QMatrix,
    pivot_rows: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: QMatrix::zero(ambient_dim, 0),
            pivot_rows: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: QMatrix::identity(ambient_dim),
            pivot_rows: (0..ambient_dim).collect(),
        }
    }

    /// Canonicalizes a spanning set: rref of the vectors laid out as rows,
    /// nonzero rows become the basis columns.
    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector length mismatch");
        }
        let as_rows = QMatrix::from_rows(vectors);
        if as_rows.rows() == 0 {
            return Subspace::zero(ambient_dim);
        }
        let (r, pivots) = as_rows.rref();
        let k = pivots.len();
        let basis = QMatrix::from_fn(ambient_dim, k, |i, j| r.get(j, i).clone());
        Subspace {
            ambient_dim,
            basis,
            pivot_rows: pivots,
        }
    }

    pub fn from_matrix_columns(m: &QMatrix) -> Self {
        m.image()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Basis vectors as columns, ambient_dim x dim.
    pub fn basis_matrix(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|j| self.basis.col_vec(j)).collect()
    }

    /// Coordinates of `v` in the canonical basis, or None if outside. Pivot
    /// rows make this a lookup plus one membership check.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let coords: Vec<Rational> = self.pivot_rows.iter().map(|&p| v[p].clone()).collect();
        if self.basis.apply(&coords) == v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::from_vectors(self.ambient_dim, vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        // Kernel of [A | B] gives coefficient pairs with A a + B b = 0; the
        // intersection is spanned by the A a parts.
        let stacked = self.basis.hstack(&other.basis);
        let ker = stacked.kernel();
        let vs: Vec<Vec<Rational>> = ker
            .basis_vectors()
            .into_iter()
            .map(|coef| self.basis.apply(&coef[..self.dim()]))
            .collect();
        Subspace::from_vectors(self.ambient_dim, vs)
    }
}

/// Quotient of Q^ambient by `sub`: dimension and a projection matrix whose
/// kernel is exactly `sub`. The complement is spanned by the standard basis
/// vectors at non-pivot rows, taken in increasing order.
pub fn quotient(ambient_dim: usize, sub: &Subspace) -> (usize, QMatrix) {
    assert_eq!(sub.ambient_dim(), ambient_dim, "ambient mismatch");
    let k = sub.dim();
    let q = ambient_dim - k;
    if k == 0 {
        return (ambient_dim, QMatrix::identity(ambient_dim));
    }
    let mut complement = QMatrix::zero(ambient_dim, q);
    let mut idx = 0;
    for row in 0..ambient_dim {
        if !sub.pivot_rows.contains(&row) {
            complement.set(row, idx, Rational::one());
            idx += 1;
        }
    }
    // Invertible change of basis [sub basis | complement]; projection reads
    // off the complement coordinates.
    let change = sub.basis_matrix().hstack(&complement);
    let inv = change.inverse().expect("basis completion is invertible");
    let proj = inv.submatrix(k..ambient_dim, 0..ambient_dim);
    (q, proj)
}

/// Simultaneous linear equations in unknown matrix blocks H_k, each equation
/// of the form sum_j A_j H_{k_j} B_j = C. Solved by column-major
/// vectorization, vec(A H B) = (B^T kron A) vec(H), free variables pinned to
/// zero so solutions are deterministic.
pub struct MatrixSystem {
    shapes: Vec<(usize, usize)>,
    equations: Vec<(Vec<(usize, QMatrix, QMatrix)>, QMatrix)>,
}

impl MatrixSystem {
    pub fn new() -> Self {
        MatrixSystem {
            shapes: Vec::new(),
            equations: Vec::new(),
        }
    }

    pub fn add_unknown(&mut self, rows: usize, cols: usize) -> usize {
        self.shapes.push((rows, cols));
        self.shapes.len() - 1
    }

    /// Records sum_j A_j H_{k_j} B_j = rhs. Zero-size blocks contribute
    /// nothing; the equation then just constrains rhs to be zero.
    pub fn equation(&mut self, terms: Vec<(usize, QMatrix, QMatrix)>, rhs: QMatrix) {
        for (k, a, b) in &terms {
            let (r, c) = self.shapes[*k];
            assert_eq!(a.cols(), r, "left factor width mismatch");
            assert_eq!(b.rows(), c, "right factor height mismatch");
            assert_eq!(a.rows(), rhs.rows(), "equation row mismatch");
            assert_eq!(b.cols(), rhs.cols(), "equation col mismatch");
        }
        self.equations.push((terms, rhs));
    }

    fn vec_len(&self) -> usize {
        self.shapes.iter().map(|&(r, c)| r * c).sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut offs = Vec::with_capacity(self.shapes.len());
        let mut acc = 0;
        for &(r, c) in &self.shapes {
            offs.push(acc);
            acc += r * c;
        }
        offs
    }

    pub fn solve(&self) -> Option<Vec<QMatrix>> {
        let nvars = self.vec_len();
        let offs = self.offsets();
        let neqs: usize = self.equations.iter().map(|(_, c)| c.rows() * c.cols()).sum();
        let mut m = QMatrix::zero(neqs, nvars);
        let mut rhs = vec![Rational::zero(); neqs];
        let mut row0 = 0;
        for (terms, c) in &self.equations {
            let (cr, cc) = (c.rows(), c.cols());
            for j in 0..cc {
                for i in 0..cr {
                    rhs[row0 + j * cr + i] = c.get(i, j).clone();
                }
            }
            for (k, a, b) in terms {
                let (hr, _hc) = self.shapes[*k];
                let coef = b.transpose().kron(a);
                for r in 0..coef.rows() {
                    for cidx in 0..coef.cols() {
                        let v = coef.get(r, cidx);
                        if !v.is_zero() {
                            let cur = m.get(row0 + r, offs[*k] + cidx) + v;
                            m.set(row0 + r, offs[*k] + cidx, cur);
                        }
                    }
                }
                let _ = hr;
            }
            row0 += cr * cc;
        }
        let x = m.solve(&rhs)?;
        let mut out = Vec::with_capacity(self.shapes.len());
        for (k, &(r, c)) in self.shapes.iter().enumerate() {
            let mut h = QMatrix::zero(r, c);
            for j in 0..c {
                for i in 0..r {
                    h.set(i, j, x[offs[k] + j * r + i].clone());
                }
            }
            out.push(h);
        }
        Some(out)
    }
}

impl Default for MatrixSystem {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn rational_string_round_trip() {
        for s in ["0", "3", "-7", "1/2", "-22/7"] {
            let q: Rational = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap().to_string(), "2/3");
        assert_eq!("6/3".parse::<Rational>().unwrap().to_string(), "2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = QMatrix::identity(2);
        let (r2, p) = id.rref();
        assert_eq!(r2, id);
        assert_eq!(p, vec![0, 1]);

        let z = QMatrix::zero(3, 2);
        let (rz, pz) = z.rref();
        assert_eq!(rz, z);
        assert!(pz.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let (r2, p) = m.rref();
        assert_eq!(r2, QMatrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_cases() {
        assert_eq!(QMatrix::identity(3).kernel(), Subspace::zero(3));
        assert_eq!(QMatrix::zero(4, 4).kernel(), Subspace::full(4));
        let k = QMatrix::from_int_rows(&[&[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_vectors(), vec![vec![r(1), r(-1)]]);
    }

    #[test]
    fn image_cases() {
        assert_eq!(QMatrix::identity(3).image(), Subspace::full(3));
        assert_eq!(QMatrix::zero(2, 5).image(), Subspace::zero(2));
        let im = QMatrix::from_int_rows(&[&[1], &[2]]).image();
        assert_eq!(im.basis_vectors(), vec![vec![r(1), r(2)]]);
    }

    #[test]
    fn solve_cases() {
        let id = QMatrix::identity(3);
        let b = vec![r(5), r(-1), r(2)];
        assert_eq!(id.solve(&b).unwrap(), b);

        let z = QMatrix::zero(2, 3);
        assert_eq!(z.solve(&[r(1), r(0)]), None);

        let m = QMatrix::from_int_rows(&[&[1, 1]]);
        assert_eq!(m.solve(&[r(3)]).unwrap(), vec![r(3), r(0)]);
    }

    #[test]
    fn quotient_cases() {
        let (d, p) = quotient(3, &Subspace::zero(3));
        assert_eq!(d, 3);
        assert!(p.is_identity());

        let (d, _) = quotient(3, &Subspace::full(3));
        assert_eq!(d, 0);

        let line = Subspace::from_vectors(2, vec![vec![r(1), r(1)]]);
        let (d, p) = quotient(2, &line);
        assert_eq!(d, 1);
        assert!(p.apply(&[r(1), r(1)]).iter().all(Rational::is_zero));
        assert!(!p.apply(&[r(1), r(0)]).iter().all(Rational::is_zero));
    }

    #[test]
    fn canonical_basis_makes_equality_syntactic() {
        let a = Subspace::from_vectors(3, vec![vec![r(1), r(1), r(0)], vec![r(0), r(0), r(1)]]);
        let b = Subspace::from_vectors(3, vec![vec![r(2), r(2), r(2)], vec![r(-1), r(-1), r(3)]]);
        assert_eq!(a, b);
    }

    #[test]
    fn coordinates_recover_membership() {
        let s = Subspace::from_vectors(3, vec![vec![r(1), r(0), r(2)], vec![r(0), r(1), r(3)]]);
        let v = vec![r(2), r(-1), r(1)];
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.basis_matrix().apply(&c), v);
        assert!(s.coordinates(&[r(0), r(0), r(1)]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        assert!(QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kron_shapes_and_values() {
        let a = QMatrix::from_int_rows(&[&[1, 2]]);
        let b = QMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(k, QMatrix::from_int_rows(&[&[0, 1, 0, 2], &[1, 0, 2, 0]]));
    }

    #[test]
    fn empty_matrices_act_as_zero_maps() {
        let a = QMatrix::zero(0, 3);
        let b = QMatrix::zero(3, 0);
        assert_eq!(a.matmul(&b.transpose().transpose()).rows(), 0);
        let prod = b.matmul(&a);
        assert_eq!((prod.rows(), prod.cols()), (3, 3));
        assert!(prod.is_zero());
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r2, c)| {
            proptest::collection::vec(-4i64..5, r2 * c).prop_map(move |vals| {
                QMatrix::from_fn(r2, c, |i, j| Rational::from_int(vals[i * c + j]))
            })
        })
    }

    #[test]
    fn matrix_system_sylvester() {
        // Solve A H - H A = 0 together with a pinning equation H * e1 = e1.
        let a = QMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        let mut sys = MatrixSystem::new();
        let h = sys.add_unknown(2, 2);
        sys.equation(
            vec![
                (h, a.clone(), QMatrix::identity(2)),
                (h, -&QMatrix::identity(2), a.clone()),
            ],
            QMatrix::zero(2, 2),
        );
        let pin = QMatrix::from_int_rows(&[&[1], &[0]]);
        sys.equation(vec![(h, QMatrix::identity(2), pin.clone())], pin.clone());
        let sol = sys.solve().unwrap();
        assert_eq!(sol[h].matmul(&a), a.matmul(&sol[h]));
        assert_eq!(sol[h].matmul(&pin), pin);
    }

    #[test]
    fn matrix_system_inconsistent() {
        let mut sys = MatrixSystem::new();
        let h = sys.add_unknown(1, 1);
        sys.equation(vec![(h, QMatrix::zero(1, 1), QMatrix::identity(1))], QMatrix::identity(1));
        assert!(sys.solve().is_none());
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.kernel().dim() + m.image().dim(), m.cols());
        }

        #[test]
        fn solve_is_exact(m in small_matrix(), seed in proptest::collection::vec(-3i64..4, 1..5)) {
            let x: Vec<Rational> = (0..m.cols()).map(|j| Rational::from_int(*seed.get(j % seed.len()).unwrap())).collect();
            let b = m.apply(&x);
            let sol = m.solve(&b).expect("consistent by construction");
            prop_assert_eq!(m.apply(&sol), b);
        }

        #[test]
        fn kernel_vectors_annihilate(m in small_matrix()) {
            for v in m.kernel().basis_vectors() {
                prop_assert!(m.apply(&v).iter().all(Rational::is_zero));
            }
        }

        #[test]
        fn quotient_projection_kernel_is_sub(m in small_matrix()) {
            let sub = m.image();
            let (d, p) = quotient(m.rows(), &sub);
            prop_assert_eq!(d + sub.dim(), m.rows());
            prop_assert_eq!(p.matmul(sub.basis_matrix()).is_zero(), true);
            prop_assert_eq!(p.rank(), d);
        }
    }
}
