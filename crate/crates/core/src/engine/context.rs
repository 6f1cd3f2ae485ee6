use std::collections::{HashMap, HashSet};

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

use super::meter::{counted, player_ops_snapshot, CostMeter};
use super::transcript::{Transcript, TranscriptEvent};
use crate::algebra::PrimeField;
use crate::error::{Error, Result};
use crate::triples::{TripleKind, TripleStore};

/// Default statistical parameter for Las Vegas oversampling.
pub const DEFAULT_LAMBDA: u32 = 40;

/// Derives a 32-byte stream seed from the master seed, a stream index
/// (0 is the public coin, i ≥ 1 is player i) and an instance path.
pub fn derive_seed(master: u64, stream: usize, path: &str) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update((stream as u64).to_le_bytes());
    h.update(path.as_bytes());
    h.finalize().into()
}

struct Frame {
    path: String,
    children: HashMap<String, u32>,
    key: Option<[u8; 32]>,
    rngs: Vec<Option<ChaCha20Rng>>,
}

impl Frame {
    fn new(path: String, players: usize) -> Self {
        Frame { path, children: HashMap::new(), key: None, rngs: (0..=players).map(|_| None).collect() }
    }
}

/// Collects one round of broadcasts.
#[derive(Debug)]
pub struct RoundBuilder {
    tag: String,
    payloads: Vec<Option<Vec<u64>>>,
}

impl RoundBuilder {
    /// Submits player `player`'s (1-based) payload for this round.
    pub fn submit(&mut self, player: usize, words: Vec<u64>) -> Result<()> {
        let slot = self
            .payloads
            .get_mut(player.wrapping_sub(1))
            .ok_or_else(|| Error::bug(format!("unknown player {player}")))?;
        if slot.is_some() {
            return Err(Error::bug(format!("player {player} submitted twice in round '{}'", self.tag)));
        }
        *slot = Some(words);
        Ok(())
    }
}

/// Shared state of one simulated multi-party execution.
///
/// Sub-protocols run inside named scopes; each scope has its own per-player
/// random streams, derived from the master seed and the scope path, so
/// results do not depend on execution order. Parallel compositions restart
/// the round clock for every branch and keep the latest finish.
pub struct ProtocolContext {
    players: usize,
    field: PrimeField,
    seed: u64,
    lambda: u32,
    clock: u64,
    frames: Vec<Frame>,
    meter: CostMeter,
    public_ops: u64,
    ops_baseline: Vec<u64>,
    transcript: Transcript,
    store: TripleStore,
    used_triples: HashSet<u64>,
}

impl ProtocolContext {
    /// Context with an on-demand dealer supplying triples.
    pub fn new(players: usize, field: PrimeField, seed: u64) -> Result<Self> {
        if players == 0 {
            return Err(Error::domain("at least one player is required"));
        }
        let store = TripleStore::dealer(field, players, seed);
        Ok(ProtocolContext {
            players,
            field,
            seed,
            lambda: DEFAULT_LAMBDA,
            clock: 0,
            frames: vec![Frame::new(String::new(), players)],
            meter: CostMeter::new(players),
            public_ops: 0,
            ops_baseline: player_ops_snapshot(players),
            transcript: Transcript::new(),
            store,
            used_triples: HashSet::new(),
        })
    }

    pub fn with_store(mut self, store: TripleStore) -> Result<Self> {
        if store.field() != self.field || store.players() != self.players {
            return Err(Error::domain("triple store was prepared for another field or player count"));
        }
        self.store = store;
        Ok(self)
    }

    pub fn with_lambda(mut self, lambda: u32) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn clock(&self) -> u64 {
        self.clock
    }

    pub fn path(&self) -> &str {
        &self.frames.last().expect("root frame").path
    }

    pub fn store(&self) -> &TripleStore {
        &self.store
    }

    pub fn store_mut(&mut self) -> &mut TripleStore {
        &mut self.store
    }

    pub fn into_store(self) -> TripleStore {
        self.store
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    /// Current totals, with field operations resolved per player.
    pub fn meter(&self) -> CostMeter {
        let mut m = self.meter.clone();
        let now = player_ops_snapshot(self.players);
        m.ops = now.iter().zip(&self.ops_baseline).map(|(a, b)| a - b + self.public_ops).collect();
        m
    }

    /// Runs `f` in a child scope named `label`.
    pub fn scope<R>(&mut self, label: &str, f: impl FnOnce(&mut Self) -> R) -> R {
        let parent = self.frames.last_mut().expect("root frame");
        let k = parent.children.entry(label.to_string()).or_insert(0);
        let path = format!("{}/{}#{}", parent.path, label, k);
        *k += 1;
        self.frames.push(Frame::new(path, self.players));
        let out = f(self);
        self.frames.pop();
        out
    }

    /// Runs one independent instance per item, all starting in the same round.
    pub fn par_map<I, R>(
        &mut self,
        label: &str,
        items: impl IntoIterator<Item = I>,
        mut f: impl FnMut(&mut Self, usize, I) -> R,
    ) -> Vec<R> {
        let start = self.clock;
        let mut end = start;
        let mut out = Vec::new();
        for (j, item) in items.into_iter().enumerate() {
            self.clock = start;
            out.push(self.scope(&format!("{label}[{j}]"), |ctx| f(ctx, j, item)));
            end = end.max(self.clock);
        }
        self.clock = end;
        out
    }

    /// Parallel composition of named branches. Two branches with the same
    /// name would share random streams, which is rejected.
    #[allow(clippy::type_complexity)]
    pub fn par_compose<'a, R>(&mut self, branches: Vec<(&str, Box<dyn FnOnce(&mut Self) -> R + 'a>)>) -> Result<Vec<R>> {
        let mut seen = HashSet::new();
        for (label, _) in &branches {
            if !seen.insert(*label) {
                return Err(Error::bug(format!("parallel branches share the instance name '{label}'")));
            }
        }
        let start = self.clock;
        let mut end = start;
        let mut out = Vec::with_capacity(branches.len());
        for (label, f) in branches {
            self.clock = start;
            out.push(self.scope(label, f));
            end = end.max(self.clock);
        }
        self.clock = end;
        Ok(out)
    }

    /// Two branches in parallel.
    pub fn par2<A, B>(&mut self, fa: impl FnOnce(&mut Self) -> A, fb: impl FnOnce(&mut Self) -> B) -> (A, B) {
        let start = self.clock;
        let a = self.scope("left", fa);
        let end_a = self.clock;
        self.clock = start;
        let b = self.scope("right", fb);
        self.clock = self.clock.max(end_a);
        (a, b)
    }

    fn stream(&mut self, idx: usize) -> &mut ChaCha20Rng {
        let (seed, frame) = (self.seed, self.frames.last_mut().expect("root frame"));
        let path = &frame.path;
        let key = *frame.key.get_or_insert_with(|| derive_seed(seed, 0, path));
        frame.rngs[idx].get_or_insert_with(|| {
            // one key per scope, one ChaCha stream per player (0 is the coin)
            let mut rng = ChaCha20Rng::from_seed(key);
            rng.set_stream(idx as u64);
            rng
        })
    }

    /// Private random stream of player `player` (1-based) in this scope.
    pub fn player_rng(&mut self, player: usize) -> &mut ChaCha20Rng {
        assert!((1..=self.players).contains(&player), "unknown player {player}");
        self.stream(player)
    }

    /// Public coin of this scope, seen identically by every player.
    pub fn coin(&mut self) -> &mut ChaCha20Rng {
        self.stream(0)
    }

    pub fn open_round(&self, tag: &str) -> RoundBuilder {
        RoundBuilder { tag: tag.to_string(), payloads: vec![None; self.players] }
    }

    /// Closes a round: every player must have submitted. Returns all
    /// payloads, indexed by player.
    pub fn deliver(&mut self, round: RoundBuilder) -> Result<Vec<Vec<u64>>> {
        if round.payloads.iter().all(|p| p.is_none()) {
            return Err(Error::bug(format!("round '{}' has no payloads", round.tag)));
        }
        if let Some(i) = round.payloads.iter().position(|p| p.is_none()) {
            return Err(Error::bug(format!("player {} is absent from round '{}'", i + 1, round.tag)));
        }
        self.clock += 1;
        self.meter.rounds = self.meter.rounds.max(self.clock);
        let bits = self.field.element_bits();
        let mut out = Vec::with_capacity(self.players);
        for (i, p) in round.payloads.into_iter().enumerate() {
            let words = p.expect("checked above");
            let b = words.len() as u64 * bits;
            self.meter.bits[i] += b;
            self.transcript.record(TranscriptEvent { round: self.clock, sender: i + 1, tag: round.tag.clone(), bits: b });
            out.push(words);
        }
        Ok(out)
    }

    /// One round in which every player broadcasts the given words.
    pub fn broadcast(&mut self, tag: &str, payloads: Vec<Vec<u64>>) -> Result<Vec<Vec<u64>>> {
        let mut round = self.open_round(tag);
        for (i, p) in payloads.into_iter().enumerate() {
            round.submit(i + 1, p)?;
        }
        self.deliver(round)
    }

    /// Computation on public data, performed by every player.
    pub fn public<R>(&mut self, f: impl FnOnce() -> R) -> R {
        let (out, spent) = counted(f);
        self.public_ops += spent;
        out
    }

    /// Marks triple `id` as consumed.
    pub fn consume_triple(&mut self, id: u64, kind: &TripleKind) -> Result<()> {
        if !self.used_triples.insert(id) {
            return Err(Error::TripleReuse(id));
        }
        *self.meter.triples.entry(kind.clone()).or_insert(0) += 1;
        self.meter.field_equivalent += kind.field_equivalent();
        Ok(())
    }

    pub fn note_retry(&mut self) {
        self.meter.retries += 1;
    }

    pub fn note_leak(&mut self) {
        self.meter.leaks += 1;
    }

    /// Runs `f` and returns its result with the costs it incurred.
    pub fn measure<R>(&mut self, f: impl FnOnce(&mut Self) -> R) -> (R, CostMeter) {
        let before = self.meter();
        let clock = self.clock;
        let out = f(self);
        let mut delta = self.meter().since(&before);
        delta.rounds = self.clock - clock;
        (out, delta)
    }
}

/// Result of [`run`].
#[derive(Debug)]
pub struct RunOutput<R> {
    pub output: R,
    pub meter: CostMeter,
    pub transcript: Transcript,
}

/// Runs a protocol on a fresh context and finalizes its meter.
pub fn run<R>(
    players: usize,
    field: PrimeField,
    seed: u64,
    store: Option<TripleStore>,
    f: impl FnOnce(&mut ProtocolContext) -> Result<R>,
) -> Result<RunOutput<R>> {
    let mut ctx = ProtocolContext::new(players, field, seed)?;
    if let Some(s) = store {
        ctx = ctx.with_store(s)?;
    }
    let output = f(&mut ctx)?;
    Ok(RunOutput { output, meter: ctx.meter(), transcript: ctx.transcript.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn ctx(n: usize) -> ProtocolContext {
        ProtocolContext::new(n, PrimeField::new(101).unwrap(), 7).unwrap()
    }

    #[test]
    fn broadcast_meters_one_round() {
        let mut c = ctx(3);
        c.broadcast("x", vec![vec![1], vec![2], vec![3]]).unwrap();
        let m = c.meter();
        assert_eq!(m.rounds, 1);
        assert_eq!(m.bits, vec![7, 7, 7]);
        assert_eq!(c.transcript().len(), 3);
    }

    #[test]
    fn empty_round_rejected() {
        let mut c = ctx(3);
        let r = c.open_round("nothing");
        assert!(matches!(c.deliver(r), Err(Error::ProtocolBug(_))));
    }

    #[test]
    fn double_submission_rejected() {
        let c = ctx(2);
        let mut r = c.open_round("twice");
        r.submit(1, vec![1]).unwrap();
        assert!(matches!(r.submit(1, vec![2]), Err(Error::ProtocolBug(_))));
    }

    #[test]
    fn absent_player_rejected() {
        let mut c = ctx(3);
        let mut r = c.open_round("partial");
        r.submit(1, vec![1]).unwrap();
        r.submit(3, vec![1]).unwrap();
        assert!(matches!(c.deliver(r), Err(Error::ProtocolBug(_))));
    }

    #[test]
    fn parallel_rounds_take_the_max() {
        let mut c = ctx(2);
        c.par_map("p", 0..2, |c, _, _| {
            c.broadcast("one", vec![vec![1], vec![1]]).unwrap();
        });
        assert_eq!(c.meter().rounds, 1);
        assert_eq!(c.meter().bits, vec![14, 14]);
        let empty: Vec<u8> = Vec::new();
        let (_, d) = c.measure(|c| c.par_map("none", empty, |_, _, _| ()));
        assert_eq!(d.rounds, 0);
        assert_eq!(d.bits, vec![0, 0]);
    }

    #[test]
    fn duplicate_branch_names_rejected() {
        let mut c = ctx(2);
        let branches: Vec<(&str, Box<dyn FnOnce(&mut ProtocolContext)>)> =
            vec![("a", Box::new(|_| ())), ("a", Box::new(|_| ()))];
        assert!(matches!(c.par_compose(branches), Err(Error::ProtocolBug(_))));
    }

    #[test]
    fn streams_depend_on_scope_not_order() {
        let mut a = ctx(2);
        let x: u64 = a.scope("s", |c| c.player_rng(1).gen());
        let y: u64 = a.scope("s", |c| c.player_rng(1).gen());
        assert_ne!(x, y);
        let mut b = ctx(2);
        let _: u64 = b.scope("other", |c| c.player_rng(2).gen());
        let x2: u64 = b.scope("s", |c| c.player_rng(1).gen());
        assert_eq!(x, x2);
    }
}
