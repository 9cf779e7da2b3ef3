//! Arithmetic in GF(p) for odd primes p < 2^31, and the univariate
//! polynomial tools used to split commutative semisimple algebras.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{IncrementalBasis, Matrix};

/// Number of randomized gcd splitting rounds before giving up.
pub const ROOT_RETRY_BUDGET: usize = 16;
/// Below this modulus, root finding falls back to evaluating at every element.
pub const EXHAUSTIVE_ROOT_LIMIT: u64 = 1 << 12;

/// The prime field GF(p). Elements are plain `u64` values in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeField {
    p: u64,
}

impl TryFrom<u64> for PrimeField {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u64 {
    fn from(f: PrimeField) -> u64 {
        f.p
    }
}

fn is_prime(n: u64) -> bool {
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

impl PrimeField {
    /// Rejects 2, composites, and moduli whose products would overflow `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.p - 2))
    }

    pub fn elem(self, value: u64) -> FieldElement {
        FieldElement {
            value: value % self.p,
            field: self,
        }
    }

    /// Uniform random element.
    pub fn random<R: Rng>(self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// A single element of GF(p) carrying its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    field: PrimeField,
}

impl FieldElement {
    pub fn new(value: u64, p: u64) -> Result<Self> {
        Ok(PrimeField::new(p)?.elem(value))
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Self> {
        Ok(FieldElement {
            value: self.field.inv(self.value)?,
            field: self.field,
        })
    }

    pub fn pow(self, e: u64) -> Self {
        FieldElement {
            value: self.field.pow(self.value, e),
            field: self.field,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.field.p)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                assert_eq!(self.field, rhs.field, "mixed moduli");
                FieldElement {
                    value: self.field.$method(self.value, rhs.value),
                    field: self.field,
                }
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

/// Univariate polynomial over GF(p), coefficients lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient vector and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn new(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let mut p = Polynomial {
            field,
            coeffs: coeffs.into_iter().map(|c| c % field.p).collect(),
        };
        p.trim();
        p
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Self::new(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: PrimeField) -> Self {
        Self::new(field, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading");
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(
            self.field,
            self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                f.add(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Self::new(f, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                f.sub(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Self::new(f, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, i as u64 % f.p))
            .collect();
        Self::new(f, coeffs)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let g = self.gcd(&self.derivative());
                g.degree() == Some(0)
            }
        }
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::constant(self.field, 1).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// All roots of a squarefree polynomial that splits into distinct linear
/// factors over GF(p), in increasing order.
///
/// First checks `f | x^p - x`, then splits with `gcd(f, (x+a)^((p-1)/2) - 1)`
/// for random `a`. Small fields fall back to exhaustive evaluation if the
/// random rounds run out.
pub fn roots_of_split_squarefree(f: &Polynomial, seed: u64) -> Result<Vec<u64>> {
    let field = f.field();
    let degree = f.degree().ok_or(Error::DivisionByZero)?;
    if degree == 0 {
        return Ok(Vec::new());
    }
    let f = f.monic();
    let x = Polynomial::x(field);
    let frob = x.pow_mod(field.modulus(), &f)?;
    let linear_part = f.gcd(&frob.sub(&x));
    let split_degree = linear_part.degree().unwrap_or(0);
    if split_degree < degree {
        return Err(Error::NotSplit {
            found: split_degree,
            degree,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pending = vec![f.clone()];
    let mut roots = Vec::with_capacity(degree);
    let mut rounds = 0;
    while let Some(g) = pending.pop() {
        match g.degree() {
            Some(0) | None => continue,
            Some(1) => {
                // g = x + c, root -c
                roots.push(field.neg(g.coeffs()[0]));
                continue;
            }
            Some(_) => {}
        }
        if rounds >= ROOT_RETRY_BUDGET {
            pending.push(g);
            break;
        }
        rounds += 1;
        let a = field.random(&mut rng);
        let shifted = Polynomial::new(field, vec![a, 1]);
        let h = shifted
            .pow_mod((field.modulus() - 1) / 2, &g)?
            .sub(&Polynomial::constant(field, 1));
        let d = g.gcd(&h);
        match d.degree() {
            Some(k) if k > 0 && k < g.degree().unwrap() => {
                let (q, _) = g.divrem(&d)?;
                pending.push(q);
                pending.push(d);
            }
            _ => pending.push(g),
        }
    }

    if !pending.is_empty() {
        if field.modulus() <= EXHAUSTIVE_ROOT_LIMIT {
            roots = (0..field.modulus()).filter(|&r| f.eval(r) == 0).collect();
        } else {
            return Err(Error::NotSplit {
                found: roots.len(),
                degree,
            });
        }
    }
    roots.sort_unstable();
    roots.dedup();
    if roots.len() != degree || roots.iter().any(|&r| f.eval(r) != 0) {
        return Err(Error::NotSplit {
            found: roots.len(),
            degree,
        });
    }
    Ok(roots)
}

/// Monic generator of the annihilator of `start` under repeated application
/// of `step`: the first linear dependency among `start, step(start), ...`.
pub(crate) fn first_dependency<F>(field: PrimeField, start: Vec<u64>, mut step: F) -> Polynomial
where
    F: FnMut(&[u64]) -> Vec<u64>,
{
    let mut basis = IncrementalBasis::new(field, start.len());
    let mut current = start;
    loop {
        match basis.insert(&current) {
            Ok(()) => current = step(&current),
            Err(coeffs) => {
                // current = sum coeffs[i] * v_i, so x^k - sum coeffs[i] x^i kills it
                let mut poly: Vec<u64> = coeffs.iter().map(|&c| field.neg(c)).collect();
                poly.push(1);
                return Polynomial::new(field, poly);
            }
        }
    }
}

/// Minimal polynomial of a square matrix, found as the first linear
/// dependency among `I, m, m^2, ...`.
pub fn minimal_polynomial(m: &Matrix) -> Result<Polynomial> {
    if m.rows() != m.cols() {
        return Err(Error::ShapeMismatch(format!(
            "minimal polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let field = m.field();
    let identity = Matrix::identity(field, n);
    Ok(first_dependency(field, identity.data().to_vec(), |v| {
        let cur = Matrix::from_vec(field, n, n, v.to_vec());
        m.mul(&cur).data().to_vec()
    }))
}
