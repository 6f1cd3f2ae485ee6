//! Dense univariate polynomials over GF(q).

use std::fmt;

use super::field::{Fp, PrimeField};
use super::ring::{CommutativeRing, RingElement};
use crate::error::{Error, Result};

/// Operand length above which multiplication switches to Karatsuba.
pub const KARATSUBA_CROSSOVER: usize = 32;

/// Polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<Fp>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}X")?,
                _ => write!(f, "{c}X^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn new(field: PrimeField, coeffs: Vec<Fp>) -> Self {
        let mut p = Polynomial { field, coeffs };
        p.normalize();
        p
    }

    pub fn from_u64(field: PrimeField, coeffs: &[u64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.elem(c)).collect())
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.elem_i64(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Fp) -> Self {
        Self::new(c.field(), vec![c])
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field.one())
    }

    /// The monomial c·X^k.
    pub fn monomial(c: Fp, k: usize) -> Self {
        let mut coeffs = vec![c.field().zero(); k + 1];
        coeffs[k] = c;
        Self::new(c.field(), coeffs)
    }

    pub fn x(field: PrimeField) -> Self {
        Self::monomial(field.one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    pub fn coeff_values(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    pub fn coeff(&self, i: usize) -> Fp {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficients padded (or truncated) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<Fp> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn leading(&self) -> Option<Fp> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: Fp) -> Fp {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    /// Reduction modulo X^m.
    pub fn truncate(&self, m: usize) -> Self {
        Self::new(self.field, self.coeffs.iter().take(m).copied().collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { field: self.field, coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(inv)
            }
        }
    }

    /// Euclidean division: `self = q·divisor + r` with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let lc = divisor.leading().ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let lc_inv = if lc.is_one() { lc } else { lc.inv()? };
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return Ok((Polynomial::zero(self.field), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![self.field.zero(); rem.len() - dd + 1];
        for k in (0..quo.len()).rev() {
            let c = rem[k + dd - 1] * lc_inv;
            quo[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * dc;
            }
        }
        rem.truncate(dd - 1);
        Ok((Polynomial::new(self.field, quo), Polynomial::new(self.field, rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.coeffs.is_empty() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns (g, s, t) with s·self + t·other = g, g monic.
    pub fn ext_gcd(&self, other: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(f), Polynomial::zero(f));
        let (mut t0, mut t1) = (Polynomial::zero(f), Polynomial::one(f));
        while !r1.coeffs.is_empty() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero");
                (r0.scale(inv), s0.scale(inv), t0.scale(inv))
            }
        }
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Polynomial) -> Result<Polynomial> {
        let mut base = self.rem(modulus)?;
        let mut acc = Polynomial::one(self.field).rem(modulus)?;
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

/// Product of two coefficient slices (schoolbook below the crossover,
/// Karatsuba above).
pub fn mul_coeffs(a: &[Fp], b: &[Fp]) -> Vec<Fp> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) <= KARATSUBA_CROSSOVER {
        return schoolbook(a, b);
    }
    karatsuba(a, b)
}

pub(crate) fn schoolbook(a: &[Fp], b: &[Fp]) -> Vec<Fp> {
    let field = a[0].field();
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_into(dst: &mut [Fp], src: &[Fp]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

fn karatsuba(a: &[Fp], b: &[Fp]) -> Vec<Fp> {
    let field = a[0].field();
    let n = a.len().max(b.len());
    let half = n.div_ceil(2);
    let split = |v: &[Fp]| -> (Vec<Fp>, Vec<Fp>) {
        let lo: Vec<Fp> = v.iter().take(half).copied().collect();
        let hi: Vec<Fp> = v.iter().skip(half).copied().collect();
        (lo, hi)
    };
    let (a0, a1) = split(a);
    let (b0, b1) = split(b);
    let z0 = mul_coeffs(&a0, &b0);
    let z2 = mul_coeffs(&a1, &b1);
    let sum = |x: &[Fp], y: &[Fp]| -> Vec<Fp> {
        (0..x.len().max(y.len()))
            .map(|i| {
                let xv = x.get(i).copied().unwrap_or(field.zero());
                let yv = y.get(i).copied().unwrap_or(field.zero());
                xv + yv
            })
            .collect()
    };
    let mut z1 = mul_coeffs(&sum(&a0, &a1), &sum(&b0, &b1));
    for (i, &c) in z0.iter().enumerate() {
        z1[i] -= c;
    }
    for (i, &c) in z2.iter().enumerate() {
        z1[i] -= c;
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    add_into(&mut out, &z0);
    let z1_len = z1.len().min(out.len() - half);
    add_into(&mut out[half..], &z1[..z1_len]);
    if !z2.is_empty() {
        add_into(&mut out[2 * half..], &z2);
    }
    out
}

impl RingElement for Polynomial {
    fn base_field(&self) -> PrimeField {
        self.field
    }
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.field)
    }
    fn one_like(&self) -> Self {
        Polynomial::one(self.field)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(self.field, (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(self.field, (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
    fn neg(&self) -> Self {
        Polynomial { field: self.field, coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Polynomial::new(self.field, mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
    fn scale(&self, c: Fp) -> Self {
        Polynomial::new(self.field, self.coeffs.iter().map(|&x| x * c).collect())
    }
}

impl CommutativeRing for Polynomial {}
