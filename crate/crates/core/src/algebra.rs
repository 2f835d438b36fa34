//! Finite-dimensional commutative algebras given by structure constants.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{dim_check, Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{Matrix, Subspace};

/// Unital commutative associative algebra. `mult` is `n × n²`: column
/// `i·n + j` holds the coordinates of `eᵢ·eⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Vec<Scalar>,
    pub labels: Vec<String>,
}

/// Axioms of a commutative algebra, as named in validation reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraLaw {
    Associativity,
    Unitality,
    Commutativity,
}

impl Algebra {
    /// Checked constructor: rejects inconsistent shapes and any failed law.
    pub fn new(field: FieldSpec, mult: Matrix, unit: Vec<Scalar>, labels: Vec<String>) -> Result<Self> {
        let a = Self::new_unchecked(field, mult, unit, labels)?;
        let bad = a.failed_laws();
        if let Some(law) = bad.first() {
            return Err(Error::InvalidStructure(format!("algebra fails {law:?}")));
        }
        Ok(a)
    }

    /// Shape checks only.
    pub fn new_unchecked(field: FieldSpec, mult: Matrix, unit: Vec<Scalar>, labels: Vec<String>) -> Result<Self> {
        let n = unit.len();
        if mult.field() != field {
            return Err(Error::FieldMismatch);
        }
        dim_check("algebra multiplication rows", n, mult.rows())?;
        dim_check("algebra multiplication cols", n * n, mult.cols())?;
        dim_check("algebra labels", n, labels.len())?;
        for x in &unit {
            field.check(x)?;
        }
        Ok(Algebra {
            field,
            dim: n,
            mult,
            unit,
            labels,
        })
    }

    pub fn failed_laws(&self) -> Vec<AlgebraLaw> {
        let n = self.dim;
        let f = self.field;
        let mut out = Vec::new();
        let mut assoc = true;
        let mut comm = true;
        'outer: for i in 0..n {
            for j in 0..n {
                let eij = self.mult.column(i * n + j);
                if comm && eij != self.mult.column(j * n + i) {
                    comm = false;
                }
                for k in 0..n {
                    let left = self.mul(&eij, &basis_vector(f, n, k));
                    let right = self.mul(&basis_vector(f, n, i), &self.mult.column(j * n + k));
                    if left != right {
                        assoc = false;
                        if !comm {
                            break 'outer;
                        }
                    }
                }
            }
        }
        if !assoc {
            out.push(AlgebraLaw::Associativity);
        }
        let unital = (0..n).all(|i| {
            let e = basis_vector(f, n, i);
            self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e
        });
        if !unital {
            out.push(AlgebraLaw::Unitality);
        }
        if !comm {
            out.push(AlgebraLaw::Commutativity);
        }
        out
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field, self.dim, i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (t, o) in out.iter_mut().enumerate() {
                    let m = self.mult.get(t, i * n + j);
                    if !f.is_zero(m) {
                        *o = f.add(o, &f.mul(&c, m));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[Scalar], mut e: u128) -> Vec<Scalar> {
        let mut base = x.to_vec();
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        r
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn is_idempotent(&self, x: &[Scalar]) -> bool {
        self.mul(x, x) == x
    }

    pub fn is_zero(&self, x: &[Scalar]) -> bool {
        x.iter().all(|v| self.field.is_zero(v))
    }

    pub fn add(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    /// Whether `matrix` (`dim × dim` over the same field) is a unital algebra morphism `self → self`.
    pub fn is_endomorphism(&self, matrix: &Matrix) -> bool {
        if matrix.rows() != self.dim || matrix.cols() != self.dim {
            return false;
        }
        let image = |v: &[Scalar]| matrix.apply(v).expect("shape checked");
        if image(&self.unit) != self.unit {
            return false;
        }
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| {
                let lhs = image(&self.mult.column(i * self.dim + j));
                let rhs = self.mul(&matrix.column(i), &matrix.column(j));
                lhs == rhs
            })
        })
    }

    /// `self ⊗ other`, basis `eᵢ ⊗ fⱼ` at index `i·m + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = self.field;
        let (n, m) = (self.dim, other.dim);
        let d = n * m;
        let mut mult = Matrix::zeros(f, d, d * d);
        for i in 0..n {
            for k in 0..n {
                let ik = self.mult.column(i * n + k);
                for j in 0..m {
                    for l in 0..m {
                        let jl = other.mult.column(j * m + l);
                        let col = (i * m + j) * d + (k * m + l);
                        for (s, a) in ik.iter().enumerate() {
                            if f.is_zero(a) {
                                continue;
                            }
                            for (t, b) in jl.iter().enumerate() {
                                if !f.is_zero(b) {
                                    mult.set(s * m + t, col, f.mul(a, b));
                                }
                            }
                        }
                    }
                }
            }
        }
        let unit = kron_vec(f, &self.unit, &other.unit);
        let mut labels = Vec::with_capacity(d);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        Ok(Algebra {
            field: f,
            dim: d,
            mult,
            unit,
            labels,
        })
    }

    /// Structure constants of a subalgebra spanned by `sub` (checked for closure).
    pub fn subalgebra(&self, sub: &Subspace, labels: Vec<String>) -> Result<Algebra> {
        let d = sub.dim();
        let f = self.field;
        let unit = sub
            .coordinates(&self.unit)?
            .ok_or_else(|| Error::InvalidStructure("subspace does not contain 1".into()))?;
        let mut mult = Matrix::zeros(f, d, d * d);
        for i in 0..d {
            for j in 0..d {
                let p = self.mul(&sub.vector(i), &sub.vector(j));
                let c = sub
                    .coordinates(&p)?
                    .ok_or_else(|| Error::InvalidStructure("subspace not closed under multiplication".into()))?;
                mult.set_column(i * d + j, &c);
            }
        }
        Algebra::new_unchecked(f, mult, unit, labels)
    }

    /// Whether the span of `sub` is an ideal.
    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis(i);
            (0..sub.dim()).all(|j| sub.contains(&self.mul(&e, &sub.vector(j))))
        })
    }

    /// The ideal generated by `gens`: in a finite-dimensional commutative
    /// algebra this is the span of all products `gₖ·eᵢ`.
    pub fn ideal_generated(&self, gens: &[Vec<Scalar>]) -> Subspace {
        let mut cols = Vec::new();
        for g in gens {
            for i in 0..self.dim {
                cols.push(self.mul(g, &self.basis(i)));
            }
        }
        Subspace::span(&Matrix::from_columns(self.field, self.dim, &cols))
    }

    /// Whether every element of `sub` is nilpotent as an ideal: `sub^k = 0` for some `k ≤ dim`.
    pub fn ideal_is_nilpotent(&self, sub: &Subspace) -> bool {
        let mut power = sub.clone();
        for _ in 0..=self.dim {
            if power.dim() == 0 {
                return true;
            }
            let mut cols = Vec::new();
            for i in 0..power.dim() {
                for j in 0..sub.dim() {
                    cols.push(self.mul(&power.vector(i), &sub.vector(j)));
                }
            }
            power = Subspace::span(&Matrix::from_columns(self.field, self.dim, &cols));
        }
        power.dim() == 0
    }

    pub fn extend_to(&self, target: FieldSpec) -> Result<Algebra> {
        let unit = self
            .unit
            .iter()
            .map(|x| self.field.embed(&target, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Algebra {
            field: target,
            dim: self.dim,
            mult: self.mult.extend_to(target)?,
            unit,
            labels: self.labels.clone(),
        })
    }

    /// Functions on a finite set: idempotent basis, pointwise product.
    pub fn functions_on(field: FieldSpec, labels: Vec<String>) -> Algebra {
        let n = labels.len();
        let mut mult = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            mult.set(i, i * n + i, field.one());
        }
        Algebra {
            field,
            dim: n,
            mult,
            unit: vec![field.one(); n],
            labels,
        }
    }

    /// `k[x]/(f)` for monic `f` (constant term first) in the basis 1, x, …, x^{d−1}.
    pub fn polynomial_quotient(field: FieldSpec, monic: &[Scalar], var: &str) -> Result<Algebra> {
        let d = monic.len().checked_sub(1).filter(|&d| d >= 1).ok_or_else(|| {
            Error::InvalidStructure("polynomial quotient needs degree at least 1".into())
        })?;
        if !field.is_one(&monic[d]) {
            return Err(Error::InvalidStructure("modulus must be monic".into()));
        }
        // reduce x^k for k < 2d − 1
        let mut powers: Vec<Vec<Scalar>> = Vec::with_capacity(2 * d);
        for k in 0..d {
            powers.push(basis_vector(field, d, k));
        }
        for k in d..(2 * d - 1) {
            // x^k = x · x^{k−1}, with x^d = −Σ fᵢ xⁱ
            let prev = &powers[k - 1];
            let mut next = vec![field.zero(); d];
            next[1..d].clone_from_slice(&prev[..d - 1]);
            let top = &prev[d - 1];
            for (i, slot) in next.iter_mut().enumerate() {
                *slot = field.sub(slot, &field.mul(top, &monic[i]));
            }
            powers.push(next);
        }
        let mut mult = Matrix::zeros(field, d, d * d);
        for i in 0..d {
            for j in 0..d {
                mult.set_column(i * d + j, &powers[i + j]);
            }
        }
        let labels = (0..d)
            .map(|k| match k {
                0 => String::from("1"),
                1 => String::from(var),
                k => format!("{var}^{k}"),
            })
            .collect();
        Algebra::new(field, mult, basis_vector(field, d, 0), labels)
    }

    /// Direct product `A₁ × … × Aᵣ` (block-diagonal structure constants).
    pub fn product(parts: &[Algebra]) -> Result<Algebra> {
        let field = parts
            .first()
            .map(|a| a.field)
            .ok_or_else(|| Error::InvalidStructure("empty product".into()))?;
        if parts.iter().any(|a| a.field != field) {
            return Err(Error::FieldMismatch);
        }
        let n: usize = parts.iter().map(|a| a.dim).sum();
        let mut mult = Matrix::zeros(field, n, n * n);
        let mut unit = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        let mut off = 0;
        for (pi, a) in parts.iter().enumerate() {
            for i in 0..a.dim {
                for j in 0..a.dim {
                    for t in 0..a.dim {
                        let v = a.mult.get(t, i * a.dim + j);
                        if !field.is_zero(v) {
                            mult.set(off + t, (off + i) * n + off + j, v.clone());
                        }
                    }
                }
            }
            unit.extend(a.unit.iter().cloned());
            labels.extend(a.labels.iter().map(|l| format!("{l}#{pi}")));
            off += a.dim;
        }
        Ok(Algebra {
            field,
            dim: n,
            mult,
            unit,
            labels,
        })
    }
}

pub fn basis_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// `x ⊗ y` with index `i·|y| + j`.
pub fn kron_vec(field: FieldSpec, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(field.mul(a, b));
        }
    }
    out
}

/// Product in `B ⊗ A` of two tensors, without materialising the tensor algebra.
pub fn tensor_mul(b: &Algebra, a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let f = b.field;
    let (nb, na) = (b.dim, a.dim);
    let mut out = vec![f.zero(); nb * na];
    for i in 0..nb {
        for p in 0..na {
            let xv = &x[i * na + p];
            if f.is_zero(xv) {
                continue;
            }
            for j in 0..nb {
                for q in 0..na {
                    let yv = &y[j * na + q];
                    if f.is_zero(yv) {
                        continue;
                    }
                    let c = f.mul(xv, yv);
                    for s in 0..nb {
                        let bm = b.mult.get(s, i * nb + j);
                        if f.is_zero(bm) {
                            continue;
                        }
                        let cb = f.mul(&c, bm);
                        for t in 0..na {
                            let am = a.mult.get(t, p * na + q);
                            if !f.is_zero(am) {
                                let idx = s * na + t;
                                out[idx] = f.add(&out[idx], &f.mul(&cb, am));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_quotient_mod_five_splits() {
        let f = FieldSpec::prime(5).unwrap();
        let b = Algebra::polynomial_quotient(f, &[f.one(), f.zero(), f.one()], "x").unwrap();
        // e = 3 − x is the idempotent at the root x = 2
        let e = vec![f.from_i64(3), f.from_i64(-1)];
        assert!(b.is_idempotent(&e));
        let x = b.basis(1);
        assert_eq!(b.mul(&x, &x), vec![f.from_i64(-1), f.zero()]);
    }

    #[test]
    fn broken_associativity_detected() {
        let f = FieldSpec::prime(3).unwrap();
        let mut a = Algebra::functions_on(f, vec!["a".into(), "b".into()]);
        a.mult.set(1, 0, f.one());
        assert!(a.failed_laws().contains(&AlgebraLaw::Associativity));
    }

    #[test]
    fn tensor_product_matches_tensor_mul() {
        let f = FieldSpec::prime(7).unwrap();
        let b = Algebra::polynomial_quotient(f, &[f.from_i64(-1), f.zero(), f.one()], "x").unwrap();
        let a = Algebra::functions_on(f, vec!["p".into(), "q".into()]);
        let t = b.tensor(&a).unwrap();
        assert!(t.failed_laws().is_empty());
        let x: Vec<Scalar> = [1, 2, 3, 4].iter().map(|&v| f.from_i64(v)).collect();
        let y: Vec<Scalar> = [5, 0, 6, 1].iter().map(|&v| f.from_i64(v)).collect();
        assert_eq!(t.mul(&x, &y), tensor_mul(&b, &a, &x, &y));
    }
}
