//! Additive secret sharing: dealing, reconstruction, local linear algebra
//! on shares and non-interactive random shares.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::algebra::{interpolate::interpolate_coeffs, FiniteRing, Fp, Matrix, PolyMatrix, Polynomial, RingElement};
use crate::engine::{as_player, ProtocolContext};
use crate::error::{Error, Result};

/// One player's additive share.
#[derive(Clone, Debug, PartialEq)]
pub struct Share<T> {
    /// 1-based player index.
    pub owner: usize,
    pub value: T,
}

/// The shares of one secret held by all N players, indexed by player.
#[derive(Clone, Debug, PartialEq)]
pub struct Shared<T> {
    values: Vec<T>,
}

impl<T> Shared<T> {
    pub fn from_values(values: Vec<T>) -> Self {
        assert!(!values.is_empty(), "a sharing needs at least one player");
        Shared { values }
    }

    pub fn players(&self) -> usize {
        self.values.len()
    }

    /// Share of player `player` (1-based).
    pub fn value(&self, player: usize) -> &T {
        &self.values[player - 1]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

impl<T: Clone> Shared<T> {
    pub fn shares(&self) -> Vec<Share<T>> {
        self.values.iter().enumerate().map(|(i, v)| Share { owner: i + 1, value: v.clone() }).collect()
    }

    pub fn share(&self, player: usize) -> Share<T> {
        Share { owner: player, value: self.values[player - 1].clone() }
    }
}

impl<T: RingElement> Shared<T> {
    /// Player-local map; each player's work is charged to that player.
    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Shared<U> {
        let values = self.values.iter().enumerate().map(|(i, v)| as_player(i, || f(v))).collect();
        Shared { values }
    }

    pub fn try_map<U>(&self, mut f: impl FnMut(&T) -> Result<U>) -> Result<Shared<U>> {
        let values = self.values.iter().enumerate().map(|(i, v)| as_player(i, || f(v))).collect::<Result<_>>()?;
        Ok(Shared { values })
    }

    pub fn zip_map<U, V>(&self, other: &Shared<U>, mut f: impl FnMut(&T, &U) -> V) -> Shared<V> {
        assert_eq!(self.players(), other.players(), "sharings among different player sets");
        let values =
            self.values.iter().zip(&other.values).enumerate().map(|(i, (a, b))| as_player(i, || f(a, b))).collect();
        Shared { values }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_map(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_map(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| a.neg())
    }

    pub fn scale(&self, c: Fp) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Adds a public constant; only player 1 adjusts its share.
    pub fn add_public(&self, c: &T) -> Self {
        let mut values = self.values.clone();
        values[0] = as_player(0, || values[0].add(c));
        Shared { values }
    }

    /// [a]·c for public c.
    pub fn mul_public(&self, c: &T) -> Self {
        self.map(|a| a.mul(c))
    }

    /// c·[a] for public c.
    pub fn public_mul(&self, c: &T) -> Self {
        self.map(|a| c.mul(a))
    }

    /// Σ of all shares, with no metering. Test and simulation helper.
    pub fn open(&self) -> T {
        let (first, rest) = self.values.split_first().expect("non-empty");
        rest.iter().fold(first.clone(), |acc, v| acc.add(v))
    }

    /// Σ_j c_j·[v_j] for public scalars.
    pub fn linear_combination(terms: &[(Fp, &Shared<T>)]) -> Result<Self> {
        let (c, s) = terms.first().ok_or_else(|| Error::domain("empty linear combination"))?;
        let mut acc = s.scale(*c);
        for (c, s) in &terms[1..] {
            acc = acc.add(&s.scale(*c));
        }
        Ok(acc)
    }

    /// Σ_j c_j·[v_j] for public ring coefficients.
    pub fn ring_combination(terms: &[(T, &Shared<T>)]) -> Result<Self> {
        let (c, s) = terms.first().ok_or_else(|| Error::domain("empty linear combination"))?;
        let mut acc = s.public_mul(c);
        for (c, s) in &terms[1..] {
            acc = acc.add(&s.public_mul(c));
        }
        Ok(acc)
    }
}

impl<T: RingElement> Shared<Matrix<T>> {
    /// Assembles a shared matrix from shared entries, row-major.
    pub fn from_entries(n: usize, entries: &[Shared<T>]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::domain(format!("expected {} shared entries", n * n)));
        }
        let players = entries[0].players();
        let values = (0..players)
            .map(|p| Matrix::new(n, entries.iter().map(|e| e.values[p].clone()).collect()))
            .collect::<Result<_>>()?;
        Ok(Shared { values })
    }

    pub fn entry(&self, i: usize, j: usize) -> Shared<T> {
        Shared { values: self.values.iter().map(|m| m.get(i, j).clone()).collect() }
    }
}

/// Trusted dealer for secrets known to a third party.
pub struct Dealer {
    rng: ChaCha20Rng,
}

impl Dealer {
    pub fn new(seed: u64) -> Self {
        Dealer { rng: ChaCha20Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha20Rng {
        &mut self.rng
    }

    /// Uniform first N−1 shares; the last completes the sum.
    pub fn deal<T: FiniteRing>(&mut self, secret: &T, players: usize) -> Result<Shared<T>> {
        if players < 2 {
            return Err(Error::domain("dealing needs at least two players"));
        }
        let shape = secret.shape();
        let randomness = (1..players).map(|_| T::random(&shape, &mut self.rng)).collect();
        deal_with_randomness(secret, randomness)
    }
}

/// Sharing whose first N−1 shares are `randomness`.
pub fn deal_with_randomness<T: RingElement>(secret: &T, randomness: Vec<T>) -> Result<Shared<T>> {
    if randomness.is_empty() {
        return Err(Error::domain("dealing needs at least two players"));
    }
    let last = randomness.iter().fold(secret.clone(), |acc, r| acc.sub(r));
    let mut values = randomness;
    values.push(last);
    Ok(Shared { values })
}

/// Σ of a complete set of shares, one per owner 1..=N.
pub fn reconstruct_local<T: FiniteRing>(shares: &[Share<T>], players: usize) -> Result<T> {
    if shares.len() != players {
        return Err(Error::domain(format!("expected {players} shares, found {}", shares.len())));
    }
    let mut slots: Vec<Option<&T>> = vec![None; players];
    for s in shares {
        let slot = slots
            .get_mut(s.owner.wrapping_sub(1))
            .ok_or_else(|| Error::domain(format!("owner {} out of range", s.owner)))?;
        if slot.replace(&s.value).is_some() {
            return Err(Error::domain(format!("owner {} appears twice", s.owner)));
        }
    }
    let shape = shares[0].value.shape();
    if shares.iter().any(|s| s.value.shape() != shape) {
        return Err(Error::domain("shares belong to different rings"));
    }
    Ok(shares[1..].iter().fold(shares[0].value.clone(), |acc, s| acc.add(&s.value)))
}

/// Local evaluation of a shared polynomial matrix at a public point.
pub fn share_polymatrix_eval(a: &Shared<PolyMatrix>, alpha: Fp) -> Shared<Matrix<Fp>> {
    a.map(|m| m.eval(alpha))
}

/// Local interpolation through shared values at public abscissae.
pub fn share_interpolate_public(points: &[(Fp, Shared<Matrix<Fp>>)]) -> Result<Shared<PolyMatrix>> {
    let first = points.first().ok_or_else(|| Error::domain("interpolation needs at least one point"))?;
    let players = first.1.players();
    let values = (0..players)
        .map(|p| {
            let pts: Vec<(Fp, Matrix<Fp>)> = points.iter().map(|(x, s)| (*x, s.values[p].clone())).collect();
            as_player(p, || crate::algebra::interpolate_matrix(&pts))
        })
        .collect::<Result<_>>()?;
    Ok(Shared { values })
}

/// Local interpolation of shared field values into a shared polynomial.
pub fn share_interpolate_field(points: &[(Fp, Shared<Fp>)]) -> Result<Shared<Polynomial>> {
    let first = points.first().ok_or_else(|| Error::domain("interpolation needs at least one point"))?;
    let field = first.0.field();
    let players = first.1.players();
    let values = (0..players)
        .map(|p| {
            let pts: Vec<(Fp, Fp)> = points.iter().map(|(x, s)| (*x, s.values[p])).collect();
            as_player(p, || interpolate_coeffs(&pts).map(|c| Polynomial::new(field, c)))
        })
        .collect::<Result<_>>()?;
    Ok(Shared { values })
}

/// Uniform shared element: every player draws its share locally.
pub fn rand_share<T: FiniteRing>(ctx: &mut ProtocolContext, shape: &T::Shape) -> Shared<T> {
    let values = (1..=ctx.players()).map(|p| T::random(shape, ctx.player_rng(p))).collect();
    Shared { values }
}

/// Sharing of a public value: player 1 holds it, the others hold zero.
pub fn share_public<T: RingElement>(value: &T, players: usize) -> Shared<T> {
    let mut values = vec![value.zero_like(); players];
    values[0] = value.clone();
    Shared { values }
}
