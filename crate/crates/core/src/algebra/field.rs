//! Prime field GF(q) with a runtime modulus below 2^62.

use std::cell::Cell;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest admissible modulus (exclusive). Products of two reduced elements
/// fit comfortably in a `u128`.
pub const MODULUS_BOUND: u64 = 1 << 62;

thread_local! {
    static FIELD_OPS: Cell<u64> = const { Cell::new(0) };
}

/// Number of GF(q) operations executed on the current thread so far.
///
/// The engine reads this counter around local computations to attribute
/// internal complexity to players.
pub fn field_ops() -> u64 {
    FIELD_OPS.with(|c| c.get())
}

#[inline]
fn tick() {
    FIELD_OPS.with(|c| c.set(c.get().wrapping_add(1)));
}

/// Descriptor of the prime field GF(q).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    q: u64,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if q >= MODULUS_BOUND {
            return Err(Error::domain(format!("modulus {q} is not below 2^62")));
        }
        if !is_prime(q) {
            return Err(Error::domain(format!("modulus {q} is not prime")));
        }
        Ok(PrimeField { q })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// Bits needed to broadcast one element: ceil(log2 q).
    pub fn element_bits(&self) -> u64 {
        64 - u64::from((self.q - 1).leading_zeros())
    }

    /// Element from an arbitrary integer, reduced mod q.
    pub fn elem(&self, v: u64) -> Fp {
        Fp { value: v % self.q, field: *self }
    }

    /// Element from a signed integer, reduced mod q.
    pub fn elem_i64(&self, v: i64) -> Fp {
        let q = self.q as i128;
        let r = ((v as i128 % q) + q) % q;
        Fp { value: r as u64, field: *self }
    }

    /// Element from a value already known to be in [0, q).
    pub fn try_elem(&self, v: u64) -> Result<Fp> {
        if v >= self.q {
            return Err(Error::domain(format!("{v} is not reduced modulo {}", self.q)));
        }
        Ok(Fp { value: v, field: *self })
    }

    pub fn zero(&self) -> Fp {
        Fp { value: 0, field: *self }
    }

    pub fn one(&self) -> Fp {
        Fp { value: 1 % self.q, field: *self }
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fp {
        Fp { value: rng.gen_range(0..self.q), field: *self }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fp {
        Fp { value: rng.gen_range(1..self.q), field: *self }
    }

    /// All elements in increasing order (only sensible for tiny fields).
    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.q).map(move |v| Fp { value: v, field: *self })
    }
}

/// An element of GF(q). Carries its field descriptor so values can be combined
/// without an ambient context.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    field: PrimeField,
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    #[inline]
    fn check(&self, other: &Fp) {
        debug_assert_eq!(self.field, other.field, "mixed moduli");
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm; counts
    /// as one field operation.
    pub fn inv(self) -> Result<Fp> {
        if self.value == 0 {
            return Err(Error::domain("inversion of zero"));
        }
        tick();
        let q = self.field.q as i64;
        let (mut r0, mut r1) = (q, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let k = r0 / r1;
            (r0, r1) = (r1, r0 - k * r1);
            (t0, t1) = (t1, t0 - k * t1);
        }
        Ok(Fp { value: t0.rem_euclid(q) as u64, field: self.field })
    }
}

impl std::ops::Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        tick();
        let q = self.field.q;
        let s = self.value + rhs.value;
        Fp { value: if s >= q { s - q } else { s }, field: self.field }
    }
}

impl std::ops::Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        tick();
        let q = self.field.q;
        let v = if self.value >= rhs.value { self.value - rhs.value } else { self.value + q - rhs.value };
        Fp { value: v, field: self.field }
    }
}

impl std::ops::Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        tick();
        let q = self.field.q;
        let v = if q <= u32::MAX as u64 {
            self.value * rhs.value % q
        } else {
            ((self.value as u128 * rhs.value as u128) % q as u128) as u64
        };
        Fp { value: v, field: self.field }
    }
}

impl std::ops::Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        tick();
        let v = if self.value == 0 { 0 } else { self.field.q - self.value };
        Fp { value: v, field: self.field }
    }
}

impl std::ops::AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl std::ops::SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl std::ops::MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn small_examples() {
        let f = gf(7);
        assert_eq!((f.elem(3) + f.elem(5)).value(), 1);
        assert_eq!(f.elem(3).inv().unwrap().value(), 5);
        assert_eq!((-f.zero()).value(), 0);
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn rejects_composites_and_large() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(MODULUS_BOUND + 1).is_err());
        assert!(PrimeField::new((1 << 61) - 1).is_ok());
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..2000u64 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), trial, "n={n}");
        }
    }

    #[test]
    fn element_bits() {
        assert_eq!(gf(101).element_bits(), 7);
        assert_eq!(gf(7).element_bits(), 3);
        assert_eq!(gf(65537).element_bits(), 17);
        assert_eq!(gf(2).element_bits(), 1);
        assert_eq!(gf(127).element_bits(), 7);
    }

    #[test]
    fn large_modulus_inverse() {
        let f = gf((1 << 61) - 1);
        let a = f.elem(123_456_789_012_345);
        assert!((a * a.inv().unwrap()).is_one());
    }

    #[test]
    fn op_counter_advances() {
        let f = gf(11);
        let before = field_ops();
        let _ = f.elem(3) * f.elem(4) + f.elem(1);
        assert_eq!(field_ops() - before, 2);
    }
}
