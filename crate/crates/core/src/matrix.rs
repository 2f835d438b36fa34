//! Dense matrices over a [`FieldSpec`] with exact row reduction.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{dim_check, Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Row-major dense matrix. A column vector is an `n × 1` matrix, but most
/// helpers also accept plain `&[Scalar]` slices for vectors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds from row-major data, checking every entry is canonical in `field`.
    pub fn from_data(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        dim_check("matrix entries", rows * cols, data.len())?;
        for x in &data {
            field.check(x)?;
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            dim_check("matrix row length", c, row.len())?;
            data.extend(row);
        }
        Self::from_data(field, r, c, data)
    }

    /// Integer entries reduced into `field`; convenient for constructors and tests.
    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix entry count");
        Matrix {
            field,
            rows,
            cols,
            data: data.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn column_vector(field: FieldSpec, v: &[Scalar]) -> Self {
        Matrix {
            field,
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    /// Adds `v` into entry `(i, j)`.
    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        let idx = i * self.cols + j;
        self.data[idx] = self.field.add(&self.data[idx], v);
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        dim_check("matrix product", self.cols, other.rows)?;
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        dim_check("matrix-vector product", self.cols, v.len())?;
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            f.check(x)?;
            if f.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !f.is_zero(a) {
                    *o = f.add(o, &f.mul(a, x));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        dim_check("matrix sum rows", self.rows, other.rows)?;
        dim_check("matrix sum cols", self.cols, other.cols)?;
        let f = self.field;
        Ok(Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    /// Kronecker product; with row-major tensor indices this is `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        let f = self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        dim_check("hstack rows", self.rows, other.rows)?;
        Ok(Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        dim_check("vstack cols", self.cols, other.cols)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    /// Applies `f` entrywise, producing a matrix over `target`.
    pub fn map_entries(&self, target: FieldSpec, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Matrix> {
        let data = self.data.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Matrix::from_data(target, self.rows, self.cols, data)
    }

    /// Entrywise embedding into an extension field.
    pub fn extend_to(&self, target: FieldSpec) -> Result<Matrix> {
        let src = self.field;
        self.map_entries(target, |x| src.embed(&target, x))
    }

    /// Gauss–Jordan elimination.
    pub fn echelon(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = f.mul(&m.data[idx], &inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let pv = &m.data[r * m.cols + j];
                    if f.is_zero(pv) {
                        continue;
                    }
                    let t = f.mul(&factor, pv);
                    let idx = i * m.cols + j;
                    m.data[idx] = f.sub(&m.data[idx], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the null space, one column per basis vector. Each basis vector
    /// has a 1 in one free column and zeros in the other free columns.
    pub fn kernel(&self) -> Matrix {
        let ech = self.echelon();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, f.one());
            for (r, &pc) in ech.pivots.iter().enumerate() {
                k.set(pc, j, f.neg(ech.matrix.get(r, fc)));
            }
        }
        k
    }

    /// Some `v` with `self · v = b`, or `None` when `b` is outside the column
    /// span. The returned solution sets every free variable to zero.
    pub fn solve_affine(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        dim_check("affine right-hand side", self.rows, b.len())?;
        for x in b {
            self.field.check(x)?;
        }
        let aug = self.hstack(&Matrix::column_vector(self.field, b))?;
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let f = self.field;
        let mut v = vec![f.zero(); self.cols];
        for (r, &pc) in ech.pivots.iter().enumerate() {
            v[pc] = ech.matrix.get(r, self.cols).clone();
        }
        Ok(Some(v))
    }

    /// Either a solution of `self · v = b`, or a vector `y` with
    /// `yᵀ · self = 0` and `yᵀ · b = 1` proving there is none.
    pub fn solve_or_certify(&self, b: &[Scalar]) -> Result<core::result::Result<Vec<Scalar>, Vec<Scalar>>> {
        if let Some(v) = self.solve_affine(b)? {
            return Ok(Ok(v));
        }
        let f = self.field;
        let stacked = self.transpose().vstack(&Matrix::from_data(f, 1, b.len(), b.to_vec())?)?;
        let mut rhs = vec![f.zero(); stacked.rows];
        rhs[stacked.rows - 1] = f.one();
        let y = stacked
            .solve_affine(&rhs)?
            .ok_or_else(|| Error::InvariantBreach("inconsistent system without certificate".into()))?;
        Ok(Err(y))
    }

    /// Whether `y` proves `self · v = b` infeasible: `yᵀ · self = 0`, `yᵀ · b = 1`.
    pub fn refuted_by(&self, b: &[Scalar], y: &[Scalar]) -> bool {
        let f = self.field;
        if y.len() != self.rows || b.len() != self.rows {
            return false;
        }
        let dot = y.iter().zip(b).fold(f.zero(), |acc, (u, v)| f.add(&acc, &f.mul(u, v)));
        if !f.is_one(&dot) {
            return false;
        }
        (0..self.cols).all(|c| {
            let s = (0..self.rows).fold(f.zero(), |acc, r| f.add(&acc, &f.mul(&y[r], self.get(r, c))));
            f.is_zero(&s)
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n)).ok()?;
        let ech = aug.echelon();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Some(ech.matrix.select_columns(&idx))
    }

    /// For a full-column-rank matrix, some `L` with `L · self = I`.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let ech = self.transpose().echelon();
        if ech.pivots.len() != self.cols {
            return None;
        }
        // the pivot rows of `self` form an invertible square block
        let block = self.select_rows(&ech.pivots);
        let inv = block.inverse()?;
        let mut l = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.cols {
            for (k, &r) in ech.pivots.iter().enumerate() {
                l.set(i, r, inv.get(i, k).clone());
            }
        }
        Some(l)
    }

    /// Basis (as columns) of the column space, taken from the pivot columns.
    pub fn column_space(&self) -> Matrix {
        let ech = self.echelon();
        self.select_columns(&ech.pivots)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A subspace of `field^ambient` with a fixed basis and a coordinate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    coords: Matrix,
}

impl Subspace {
    /// The span of the columns of `spanning` (need not be independent).
    pub fn span(spanning: &Matrix) -> Subspace {
        Self::from_basis(spanning.column_space()).expect("pivot columns are independent")
    }

    /// From an already independent set of columns.
    pub fn from_basis(basis: Matrix) -> Result<Subspace> {
        let coords = if basis.cols() == 0 {
            Matrix::zeros(basis.field(), 0, basis.rows())
        } else {
            basis
                .left_inverse()
                .ok_or_else(|| Error::InvariantBreach("subspace basis is dependent".into()))?
        };
        Ok(Subspace { basis, coords })
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(field, ambient, 0),
            coords: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn whole(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(field, ambient),
            coords: Matrix::identity(field, ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    /// Inclusion map, columns are the basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vector(&self, i: usize) -> Vec<Scalar> {
        self.basis.column(i)
    }

    /// Coordinates of `v` when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        let c = self.coords.apply(v)?;
        if self.basis.apply(&c)? == v {
            Ok(Some(c))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        matches!(self.coordinates(v), Ok(Some(_)))
    }

    /// Coordinate matrix of a map whose columns all lie in the subspace.
    pub fn coordinates_of(&self, m: &Matrix) -> Result<Matrix> {
        let c = self.coords.mul(m)?;
        if self.basis.mul(&c)? != *m {
            return Err(Error::InvariantBreach("columns leave the subspace".into()));
        }
        Ok(c)
    }

    pub fn contains_all(&self, m: &Matrix) -> bool {
        self.coordinates_of(m).is_ok()
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_all(&other.basis)
    }
}

/// Quotient `field^n / W`, realised on the complement spanned by the standard
/// basis vectors that are not pivots of `W`'s echelon form.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// `q × n`, kills `W`.
    pub projection: Matrix,
    /// `n × q`, standard basis vectors of the complement.
    pub section: Matrix,
    /// Indices of the standard basis vectors kept as the quotient basis.
    pub kept: Vec<usize>,
}

impl Quotient {
    pub fn new(sub: &Subspace) -> Quotient {
        let f = sub.field();
        let n = sub.ambient();
        let ech = sub.basis().transpose().echelon();
        let kept: Vec<usize> = (0..n).filter(|c| !ech.pivots.contains(c)).collect();
        let q = kept.len();
        let section = Matrix::from_fn(f, n, q, |i, j| if kept[j] == i { f.one() } else { f.zero() });
        // v ↦ v − Σ_r v[pivot_r] · w_r, then read off the kept coordinates
        let w = &ech.matrix;
        let mut projection = Matrix::zeros(f, q, n);
        for (j, &kc) in kept.iter().enumerate() {
            projection.set(j, kc, f.one());
            for (r, &pc) in ech.pivots.iter().enumerate() {
                let c = w.get(r, kc);
                if !f.is_zero(c) {
                    projection.set(j, pc, f.neg(c));
                }
            }
        }
        Quotient {
            projection,
            section,
            kept,
        }
    }

    pub fn dim(&self) -> usize {
        self.kept.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let k = Matrix::identity(f5(), 2).kernel();
        assert_eq!((k.rows(), k.cols()), (2, 0));
    }

    #[test]
    fn zero_row_has_full_kernel() {
        let q = FieldSpec::Rationals;
        let k = Matrix::zeros(q, 1, 2).kernel();
        assert_eq!(k.cols(), 2);
    }

    #[test]
    fn solve_affine_cases() {
        let f = f5();
        let b: Vec<Scalar> = [2, 3].iter().map(|&v| f.from_i64(v)).collect();
        assert_eq!(Matrix::identity(f, 2).solve_affine(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(f, 2, 2).solve_affine(&b).unwrap(), None);
    }

    #[test]
    fn surjectivity() {
        let f = f5();
        assert!(Matrix::identity(f, 3).is_surjective());
        assert!(!Matrix::from_i64(f, 2, 1, &[1, 2]).is_surjective());
    }

    #[test]
    fn certificate_refutes() {
        let f2 = FieldSpec::prime(2).unwrap();
        // 2c = 1 over F_2, written as the rows c + c = 1
        let m = Matrix::from_i64(f2, 2, 1, &[1, 1]);
        let b = [f2.one(), f2.zero()];
        let y = m.solve_or_certify(&b).unwrap().unwrap_err();
        assert!(m.transpose().apply(&y).unwrap().iter().all(|x| f2.is_zero(x)));
        let yb = y.iter().zip(&b).fold(f2.zero(), |acc, (a, c)| f2.add(&acc, &f2.mul(a, c)));
        assert!(f2.is_one(&yb));
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let f = f5();
        let w = Subspace::span(&Matrix::from_i64(f, 3, 1, &[1, 2, 3]));
        let q = Quotient::new(&w);
        assert_eq!(q.dim(), 2);
        assert!(q.projection.mul(w.basis()).unwrap().is_zero());
        assert_eq!(q.projection.mul(&q.section).unwrap(), Matrix::identity(f, 2));
    }

    #[test]
    fn left_inverse_and_inverse() {
        let f = FieldSpec::Rationals;
        let m = Matrix::from_i64(f, 3, 2, &[1, 2, 0, 1, 4, 4]);
        let l = m.left_inverse().unwrap();
        assert_eq!(l.mul(&m).unwrap(), Matrix::identity(f, 2));
        let sq = Matrix::from_i64(f, 2, 2, &[2, 1, 1, 1]);
        assert_eq!(sq.mul(&sq.inverse().unwrap()).unwrap(), Matrix::identity(f, 2));
        assert!(Matrix::from_i64(f, 2, 2, &[1, 1, 1, 1]).inverse().is_none());
    }
}
