use std::collections::{BTreeMap, VecDeque};

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use super::dealer::{deal_words, plain_triple};
use super::TripleKind;
use crate::algebra::PrimeField;
use crate::engine::derive_seed;
use crate::error::{Error, Result};

/// How a store reacts when a queue runs dry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Supply {
    /// Only preloaded triples; running out is an error.
    Preloaded,
    /// The trusted dealer produces triples on demand.
    Dealer,
}

/// One stored triple: per-player share words laid out as x‖y‖z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTriple {
    pub id: u64,
    pub kind: TripleKind,
    pub shares: Vec<Vec<u64>>,
}

pub struct TripleStore {
    field: PrimeField,
    players: usize,
    supply: Supply,
    queues: BTreeMap<TripleKind, VecDeque<RawTriple>>,
    next_id: u64,
    rng: ChaCha20Rng,
}

impl std::fmt::Debug for TripleStore {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TripleStore")
            .field("field", &self.field)
            .field("players", &self.players)
            .field("supply", &self.supply)
            .field("queues", &self.inventory())
            .finish()
    }
}

impl TripleStore {
    fn with_supply(field: PrimeField, players: usize, seed: u64, supply: Supply) -> Self {
        TripleStore {
            field,
            players,
            supply,
            queues: BTreeMap::new(),
            next_id: 0,
            rng: ChaCha20Rng::from_seed(derive_seed(seed, usize::MAX, "dealer")),
        }
    }

    pub fn dealer(field: PrimeField, players: usize, seed: u64) -> Self {
        Self::with_supply(field, players, seed, Supply::Dealer)
    }

    /// Empty strict store; `seed` drives [`preload`](Self::preload).
    pub fn preloaded(field: PrimeField, players: usize, seed: u64) -> Self {
        Self::with_supply(field, players, seed, Supply::Preloaded)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn supply(&self) -> Supply {
        self.supply
    }

    pub fn remaining(&self, kind: &TripleKind) -> usize {
        self.queues.get(kind).map_or(0, |q| q.len())
    }

    /// Queued triples per kind.
    pub fn inventory(&self) -> Vec<(TripleKind, usize)> {
        self.queues.iter().filter(|(_, q)| !q.is_empty()).map(|(k, q)| (k.clone(), q.len())).collect()
    }

    pub fn fresh_id(&mut self) -> u64 {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    /// Appends externally produced shares, checking their layout.
    pub fn push(&mut self, kind: TripleKind, shares: Vec<Vec<u64>>) -> Result<u64> {
        if shares.len() != self.players {
            return Err(Error::domain(format!("expected {} share vectors, found {}", self.players, shares.len())));
        }
        let width = kind.words_per_player();
        let q = self.field.modulus();
        for s in &shares {
            if s.len() != width {
                return Err(Error::domain(format!("{kind} triple needs {width} words per player")));
            }
            if s.iter().any(|&w| w >= q) {
                return Err(Error::domain("triple word not reduced modulo q"));
            }
        }
        let id = self.fresh_id();
        self.queues.entry(kind.clone()).or_default().push_back(RawTriple { id, kind, shares });
        Ok(id)
    }

    fn generate(&mut self, kind: &TripleKind) -> Result<RawTriple> {
        let words = plain_triple(kind, self.field, &mut self.rng)?;
        let shares = deal_words(&words, self.field, self.players, &mut self.rng);
        Ok(RawTriple { id: self.fresh_id(), kind: kind.clone(), shares })
    }

    /// Fills the queue of `kind` with `count` dealer triples.
    pub fn preload(&mut self, kind: &TripleKind, count: usize) -> Result<()> {
        for _ in 0..count {
            let t = self.generate(kind)?;
            self.queues.entry(kind.clone()).or_default().push_back(t);
        }
        Ok(())
    }

    pub fn take(&mut self, kind: &TripleKind) -> Result<RawTriple> {
        if let Some(t) = self.queues.get_mut(kind).and_then(|q| q.pop_front()) {
            return Ok(t);
        }
        match self.supply {
            Supply::Preloaded => Err(Error::PreprocessingExhausted(kind.clone())),
            Supply::Dealer => self.generate(kind),
        }
    }

    /// Removes and returns every queued triple of `kind`.
    pub fn drain(&mut self, kind: &TripleKind) -> Vec<RawTriple> {
        self.queues.remove(kind).map(Vec::from).unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preloaded_store_runs_dry() {
        let f = PrimeField::new(7).unwrap();
        let mut s = TripleStore::preloaded(f, 3, 1);
        s.preload(&TripleKind::Field, 2).unwrap();
        assert!(s.take(&TripleKind::Field).is_ok());
        assert!(s.take(&TripleKind::Field).is_ok());
        let err = s.take(&TripleKind::Field).unwrap_err();
        assert!(matches!(err, Error::PreprocessingExhausted(TripleKind::Field)));
        assert!(err.to_string().contains("field"));
    }

    #[test]
    fn dealer_store_never_runs_dry() {
        let f = PrimeField::new(7).unwrap();
        let mut s = TripleStore::dealer(f, 2, 1);
        let a = s.take(&TripleKind::Matrix { n: 2 }).unwrap();
        let b = s.take(&TripleKind::Matrix { n: 2 }).unwrap();
        assert_ne!(a.id, b.id);
        assert_eq!(a.shares[0].len(), 12);
    }

    #[test]
    fn push_checks_layout() {
        let f = PrimeField::new(7).unwrap();
        let mut s = TripleStore::preloaded(f, 2, 1);
        assert!(s.push(TripleKind::Field, vec![vec![1, 2, 3], vec![0, 0, 0]]).is_ok());
        assert!(s.push(TripleKind::Field, vec![vec![1, 2], vec![0, 0]]).is_err());
        assert!(s.push(TripleKind::Field, vec![vec![1, 2, 9], vec![0, 0, 0]]).is_err());
    }
}
