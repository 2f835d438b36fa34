//! Exact base fields: ℚ, 𝔽_p and 𝔽_p[t]/(f).
//!
//! Scalars are stored in canonical form (lowest terms, reduced residues,
//! reduced polynomial remainders) so that structural equality is field
//! equality. All arithmetic goes through the [`FieldSpec`] that owns the
//! scalar, which is how a matrix of scalars knows its modulus.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest extension degree accepted by [`FieldSpec::extension`].
pub const MAX_EXT_DEGREE: usize = 8;

/// Primes are kept below 2³¹ so products fit comfortably in `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

/// Bound on the number of candidate factors the irreducibility search may visit.
const IRREDUCIBILITY_SEARCH_LIMIT: u128 = 1 << 22;

/// Largest field that [`FieldSpec::elements`] will enumerate.
pub const ENUMERATION_LIMIT: u128 = 1 << 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ExtensionSpec {
    p: u64,
    degree: usize,
    /// Monic modulus, low degree first; entries past `degree` are zero.
    modulus: [u64; MAX_EXT_DEGREE + 1],
}

impl ExtensionSpec {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of the modulus, constant term first, leading 1 included.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus[..=self.degree]
    }
}

/// Description of an exact field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    Extension(ExtensionSpec),
}

/// An element of some [`FieldSpec`], always in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Prime(u64),
    /// Polynomial coefficients of degree below the modulus degree; unused slots are zero.
    Ext([u64; MAX_EXT_DEGREE]),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime(v) => write!(f, "{v}"),
            Scalar::Ext(c) => {
                let last = c.iter().rposition(|&x| x != 0).unwrap_or(0);
                write!(f, "[")?;
                for (i, x) in c[..=last].iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::Extension(e) => {
                write!(f, "F_{}[t]/(", e.p)?;
                let mut first = true;
                for (i, &c) in e.modulus().iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    match (i, c) {
                        (0, c) => write!(f, "{c}")?,
                        (1, 1) => write!(f, "t")?,
                        (1, c) => write!(f, "{c}t")?,
                        (i, 1) => write!(f, "t^{i}")?,
                        (i, c) => write!(f, "{c}t^{i}")?,
                    }
                }
                write!(f, ")")
            }
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// --- polynomials over F_p, low degree first, trimmed ------------------------

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

/// Quotient and remainder of `a` by nonzero trimmed `b`.
fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r[r.len() - 1] * lead_inv % p;
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

/// Exhaustive factor search: `f` (monic, degree ≥ 1) is irreducible iff no
/// monic polynomial of degree 1..=deg/2 divides it.
pub(crate) fn is_irreducible_exhaustive(f: &[u64], p: u64) -> Result<bool> {
    let d = f.len() - 1;
    if d == 1 {
        return Ok(true);
    }
    let half = d / 2;
    let mut budget: u128 = 0;
    for k in 1..=half {
        budget += (p as u128).pow(k as u32);
    }
    if budget > IRREDUCIBILITY_SEARCH_LIMIT {
        return Err(Error::InvalidField(format!(
            "irreducibility search over F_{p} in degree {d} exceeds the exhaustive-search bound"
        )));
    }
    for k in 1..=half {
        let count = (p as u128).pow(k as u32);
        for idx in 0..count {
            let mut g = vec![0u64; k + 1];
            let mut rest = idx;
            for slot in g.iter_mut().take(k) {
                *slot = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            g[k] = 1;
            let (_, r) = poly_divmod(f, &g, p);
            if r.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// 𝔽_p[t]/(f) for a monic irreducible `f`, given constant term first.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Self> {
        FieldSpec::prime(p)?;
        let f: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        let f = trim(f);
        if f.len() < 2 {
            return Err(Error::InvalidField("modulus must have degree at least 1".into()));
        }
        let d = f.len() - 1;
        if d > MAX_EXT_DEGREE {
            return Err(Error::InvalidField(format!(
                "modulus degree {d} exceeds the supported maximum {MAX_EXT_DEGREE}"
            )));
        }
        if f[d] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if !is_irreducible_exhaustive(&f, p)? {
            return Err(Error::InvalidField(format!("modulus is reducible over F_{p}")));
        }
        let mut m = [0u64; MAX_EXT_DEGREE + 1];
        m[..=d].copy_from_slice(&f);
        Ok(FieldSpec::Extension(ExtensionSpec {
            p,
            degree: d,
            modulus: m,
        }))
    }

    /// 0 for ℚ.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
            FieldSpec::Extension(e) => e.p,
        }
    }

    /// Degree over the prime field (1 for ℚ and 𝔽_p).
    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::Extension(e) => e.degree,
            _ => 1,
        }
    }

    /// Number of elements, `None` for ℚ or when it does not fit in `u128`.
    pub fn order(&self) -> Option<u128> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p as u128),
            FieldSpec::Extension(e) => (e.p as u128).checked_pow(e.degree as u32),
        }
    }

    pub fn prime_subfield(&self) -> FieldSpec {
        match self {
            FieldSpec::Rationals => FieldSpec::Rationals,
            FieldSpec::Prime(p) => FieldSpec::Prime(*p),
            FieldSpec::Extension(e) => FieldSpec::Prime(e.p),
        }
    }

    /// True when `self` is `base`, or an extension field over the prime field `base`.
    pub fn extends(&self, base: &FieldSpec) -> bool {
        if self == base {
            return true;
        }
        matches!((self, base), (FieldSpec::Extension(e), FieldSpec::Prime(p)) if e.p == *p)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Prime(0),
            FieldSpec::Extension(_) => Scalar::Ext([0; MAX_EXT_DEGREE]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Prime(v.rem_euclid(*p as i64) as u64),
            FieldSpec::Extension(e) => {
                let mut c = [0u64; MAX_EXT_DEGREE];
                c[0] = v.rem_euclid(e.p as i64) as u64;
                Scalar::Ext(c)
            }
        }
    }

    /// Canonical rational `num/den`.
    pub fn rational(&self, num: BigInt, den: BigInt) -> Result<Scalar> {
        if *self != FieldSpec::Rationals {
            return Err(Error::FieldMismatch);
        }
        if den.is_zero() {
            return Err(Error::InvalidScalar("zero denominator".into()));
        }
        Ok(Scalar::Rational(BigRational::new(num, den)))
    }

    /// Element of an extension field from polynomial coefficients (reduced mod f).
    pub fn from_poly(&self, coeffs: &[i64]) -> Result<Scalar> {
        match self {
            FieldSpec::Extension(e) => {
                let a: Vec<u64> = coeffs
                    .iter()
                    .map(|&c| c.rem_euclid(e.p as i64) as u64)
                    .collect();
                Ok(self.ext_from_vec(e, &a))
            }
            FieldSpec::Prime(_) if coeffs.len() <= 1 => {
                Ok(self.from_i64(coeffs.first().copied().unwrap_or(0)))
            }
            _ => Err(Error::InvalidScalar(
                "polynomial coefficients given for a non-extension field".into(),
            )),
        }
    }

    /// The class of t in 𝔽_p[t]/(f).
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            FieldSpec::Extension(e) => Some(self.ext_from_vec(e, &[0, 1])),
            _ => None,
        }
    }

    fn ext_from_vec(&self, e: &ExtensionSpec, a: &[u64]) -> Scalar {
        let a = trim(a.iter().map(|&c| c % e.p).collect());
        let (_, r) = poly_divmod(&a, e.modulus(), e.p);
        let mut c = [0u64; MAX_EXT_DEGREE];
        c[..r.len()].copy_from_slice(&r);
        Scalar::Ext(c)
    }

    fn ext_vec(e: &ExtensionSpec, c: &[u64; MAX_EXT_DEGREE]) -> Vec<u64> {
        trim(c[..e.degree].to_vec())
    }

    /// Whether `x` is a canonical element of this field.
    pub fn contains(&self, x: &Scalar) -> bool {
        match (self, x) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::Prime(p), Scalar::Prime(v)) => v < p,
            (FieldSpec::Extension(e), Scalar::Ext(c)) => {
                c.iter().all(|&v| v < e.p) && c[e.degree..].iter().all(|&v| v == 0)
            }
            _ => false,
        }
    }

    pub fn check(&self, x: &Scalar) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::InvalidScalar(format!("{x} is not a canonical element of {self}")))
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime(v) => *v == 0,
            Scalar::Ext(c) => c.iter().all(|&v| v == 0),
        }
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        *x == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (_, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (FieldSpec::Prime(p), Scalar::Prime(x), Scalar::Prime(y)) => Scalar::Prime((x + y) % p),
            (FieldSpec::Extension(e), Scalar::Ext(x), Scalar::Ext(y)) => {
                let mut c = [0u64; MAX_EXT_DEGREE];
                for i in 0..e.degree {
                    c[i] = (x[i] + y[i]) % e.p;
                }
                Scalar::Ext(c)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (_, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldSpec::Prime(p), Scalar::Prime(x)) => Scalar::Prime((p - x) % p),
            (FieldSpec::Extension(e), Scalar::Ext(x)) => {
                let mut c = [0u64; MAX_EXT_DEGREE];
                for i in 0..e.degree {
                    c[i] = (e.p - x[i]) % e.p;
                }
                Scalar::Ext(c)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (_, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (FieldSpec::Prime(p), Scalar::Prime(x), Scalar::Prime(y)) => Scalar::Prime(x * y % p),
            (FieldSpec::Extension(e), Scalar::Ext(x), Scalar::Ext(y)) => {
                let prod = poly_mul(&Self::ext_vec(e, x), &Self::ext_vec(e, y), e.p);
                self.ext_from_vec(e, &prod)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        Some(match (self, a) {
            (_, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (FieldSpec::Prime(p), Scalar::Prime(x)) => Scalar::Prime(mod_inv(*x, *p)),
            (FieldSpec::Extension(e), Scalar::Ext(x)) => {
                // extended Euclid in F_p[t]: s·a + u·f = 1
                let p = e.p;
                let mut r0 = e.modulus().to_vec();
                let mut r1 = Self::ext_vec(e, x);
                let mut s0: Vec<u64> = Vec::new();
                let mut s1: Vec<u64> = vec![1];
                while !r1.is_empty() {
                    let (q, r) = poly_divmod(&r0, &r1, p);
                    let s2 = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
                    r0 = r1;
                    r1 = r;
                    s0 = s1;
                    s1 = s2;
                }
                // r0 is a nonzero constant since f is irreducible
                let c = mod_inv(r0[0], p);
                let s: Vec<u64> = s0.iter().map(|&v| v * c % p).collect();
                self.ext_from_vec(e, &s)
            }
            _ => panic!("scalar does not belong to {self}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &Scalar, mut e: u128) -> Scalar {
        let mut base = a.clone();
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

    /// Image of `x ∈ self` in `target`, which must extend `self`.
    pub fn embed(&self, target: &FieldSpec, x: &Scalar) -> Result<Scalar> {
        if self == target {
            return Ok(x.clone());
        }
        match (self, target, x) {
            (FieldSpec::Prime(p), FieldSpec::Extension(e), Scalar::Prime(v)) if e.p == *p => {
                let mut c = [0u64; MAX_EXT_DEGREE];
                c[0] = *v;
                Ok(Scalar::Ext(c))
            }
            _ => Err(Error::CharacteristicMismatch(format!(
                "{target} is not an extension of {self}"
            ))),
        }
    }

    /// Coordinates of `x` over the prime subfield, in the power basis 1, t, t², ….
    pub fn prime_coordinates(&self, x: &Scalar) -> Vec<Scalar> {
        match (self, x) {
            (FieldSpec::Extension(e), Scalar::Ext(c)) => {
                c[..e.degree].iter().map(|&v| Scalar::Prime(v)).collect()
            }
            _ => vec![x.clone()],
        }
    }

    /// Inverse of [`FieldSpec::prime_coordinates`].
    pub fn from_prime_coordinates(&self, coords: &[Scalar]) -> Result<Scalar> {
        match self {
            FieldSpec::Extension(e) => {
                if coords.len() != e.degree {
                    return Err(Error::DimensionMismatch {
                        context: "prime coordinates",
                        expected: e.degree,
                        found: coords.len(),
                    });
                }
                let mut c = [0u64; MAX_EXT_DEGREE];
                for (slot, v) in c.iter_mut().zip(coords) {
                    match v {
                        Scalar::Prime(v) if *v < e.p => *slot = *v,
                        _ => return Err(Error::FieldMismatch),
                    }
                }
                Ok(Scalar::Ext(c))
            }
            _ => {
                if coords.len() != 1 {
                    return Err(Error::DimensionMismatch {
                        context: "prime coordinates",
                        expected: 1,
                        found: coords.len(),
                    });
                }
                self.check(&coords[0])?;
                Ok(coords[0].clone())
            }
        }
    }

    /// Every element of a finite field of order at most [`ENUMERATION_LIMIT`].
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        let q = self.order()?;
        if q > ENUMERATION_LIMIT {
            return None;
        }
        let q = q as u64;
        Some(match self {
            FieldSpec::Prime(_) => (0..q).map(Scalar::Prime).collect(),
            FieldSpec::Extension(e) => (0..q)
                .map(|mut idx| {
                    let mut c = [0u64; MAX_EXT_DEGREE];
                    for slot in c.iter_mut().take(e.degree) {
                        *slot = idx % e.p;
                        idx /= e.p;
                    }
                    Scalar::Ext(c)
                })
                .collect(),
            FieldSpec::Rationals => unreachable!(),
        })
    }

    /// Integer representative of a prime-field scalar, or the numerator/denominator
    /// pair of a rational; used by the serializers.
    pub fn rational_parts(x: &Scalar) -> Option<(BigInt, BigInt)> {
        match x {
            Scalar::Rational(q) => Some((q.numer().clone(), q.denom().clone())),
            _ => None,
        }
    }

    pub fn is_negative(x: &Scalar) -> bool {
        matches!(x, Scalar::Rational(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldSpec {
        FieldSpec::extension(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn rejects_composite_and_reducible() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        // t^2 + 1 = (t + 1)^2 over F_2
        assert!(FieldSpec::extension(2, &[1, 0, 1]).is_err());
        // not monic
        assert!(FieldSpec::extension(3, &[1, 0, 2]).is_err());
        assert!(FieldSpec::extension(3, &[1, 0, 1]).is_ok());
    }

    #[test]
    fn irreducibility_matches_known_counts() {
        // number of monic irreducibles of degree 3 over F_2 is 2, degree 4 is 3
        for (d, expected) in [(2usize, 1usize), (3, 2), (4, 3)] {
            let mut count = 0;
            for idx in 0..(1u64 << d) {
                let mut f: Vec<u64> = (0..d).map(|i| (idx >> i) & 1).collect();
                f.push(1);
                if is_irreducible_exhaustive(&f, 2).unwrap() {
                    count += 1;
                }
            }
            assert_eq!(count, expected, "degree {d}");
        }
    }

    #[test]
    fn extension_arithmetic() {
        let k = f4();
        let t = k.generator().unwrap();
        // t^2 = t + 1
        let t2 = k.mul(&t, &t);
        assert_eq!(t2, k.from_poly(&[1, 1]).unwrap());
        // t^3 = 1 in F_4
        assert_eq!(k.pow(&t, 3), k.one());
        for x in k.elements().unwrap() {
            if let Some(xi) = k.inv(&x) {
                assert!(k.is_one(&k.mul(&x, &xi)));
            } else {
                assert!(k.is_zero(&x));
            }
        }
    }

    #[test]
    fn rationals_are_canonical() {
        let q = FieldSpec::Rationals;
        let a = q.rational(BigInt::from(2), BigInt::from(4)).unwrap();
        let b = q.rational(BigInt::from(-1), BigInt::from(-2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(alloc::string::ToString::to_string(&a), "1/2");
    }

    #[test]
    fn embedding_and_coordinates() {
        let k = FieldSpec::prime(5).unwrap();
        let k25 = FieldSpec::extension(5, &[3, 0, 1]).unwrap();
        assert!(k25.extends(&k));
        let x = k.embed(&k25, &k.from_i64(3)).unwrap();
        assert_eq!(k25.prime_coordinates(&x), vec![Scalar::Prime(3), Scalar::Prime(0)]);
        assert!(k25.embed(&k, &x).is_err());
        assert_eq!(k25.elements().unwrap().len(), 25);
    }
}
