//! Irreducibility testing and random irreducible generation over GF(q).

use rand::Rng;

use super::field::PrimeField;
use super::poly::Polynomial;
use super::ring::RingElement;

/// A polynomial f of degree k is irreducible iff gcd(X^{q^i} − X, f) = 1
/// for every 1 ≤ i ≤ k/2.
pub fn is_irreducible(f: &Polynomial) -> bool {
    let k = f.degree();
    if k < 1 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let field = f.field();
    let q = field.modulus();
    let x = Polynomial::x(field);
    let mut h = x.rem(f).expect("nonzero modulus");
    for _ in 1..=(k / 2) {
        h = h.pow_mod(q, f).expect("nonzero modulus");
        let g = h.sub(&x).gcd(f);
        if g.degree() != 0 {
            return false;
        }
    }
    true
}

/// Draws uniformly random monic polynomials of the given degree until one
/// is irreducible.
pub fn irreducible_poly<R: Rng + ?Sized>(field: PrimeField, degree: usize, rng: &mut R) -> Polynomial {
    assert!(degree >= 1, "degree must be positive");
    loop {
        let mut coeffs: Vec<_> = (0..degree).map(|_| field.random(rng)).collect();
        coeffs.push(field.one());
        let f = Polynomial::new(field, coeffs);
        if is_irreducible(&f) {
            return f;
        }
    }
}
