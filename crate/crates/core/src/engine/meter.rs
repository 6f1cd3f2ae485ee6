//! Cost metering: rounds, per-player bits, triples by kind, field operations.

use std::cell::{Cell, RefCell};
use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::field_ops;
use crate::triples::{TripleCategory, TripleKind};

thread_local! {
    static PLAYER_OPS: RefCell<Vec<u64>> = const { RefCell::new(Vec::new()) };
    static ATTRIBUTING: Cell<bool> = const { Cell::new(false) };
}

/// Runs `f` as local computation of player `i` (0-based), charging the
/// field operations it performs to that player.
pub fn as_player<R>(i: usize, f: impl FnOnce() -> R) -> R {
    if ATTRIBUTING.with(|a| a.get()) {
        return f();
    }
    ATTRIBUTING.with(|a| a.set(true));
    let before = field_ops();
    let out = f();
    let spent = field_ops() - before;
    ATTRIBUTING.with(|a| a.set(false));
    PLAYER_OPS.with(|p| {
        let mut p = p.borrow_mut();
        if p.len() <= i {
            p.resize(i + 1, 0);
        }
        p[i] += spent;
    });
    out
}

/// Runs `f` and returns the field operations it performed, without
/// charging them to any player.
pub(crate) fn counted<R>(f: impl FnOnce() -> R) -> (R, u64) {
    let nested = ATTRIBUTING.with(|a| a.replace(true));
    let before = field_ops();
    let out = f();
    let spent = field_ops() - before;
    ATTRIBUTING.with(|a| a.set(nested));
    (out, if nested { 0 } else { spent })
}

pub(crate) fn player_ops_snapshot(n: usize) -> Vec<u64> {
    PLAYER_OPS.with(|p| {
        let p = p.borrow();
        (0..n).map(|i| p.get(i).copied().unwrap_or(0)).collect()
    })
}

/// Running totals kept by a protocol context.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CostMeter {
    pub rounds: u64,
    pub bits: Vec<u64>,
    pub triples: BTreeMap<TripleKind, u64>,
    /// Field triples needed to build the consumed triples with the
    /// interactive generators.
    pub field_equivalent: u64,
    pub ops: Vec<u64>,
    pub retries: u64,
    pub leaks: u64,
}

impl CostMeter {
    pub fn new(players: usize) -> Self {
        CostMeter { bits: vec![0; players], ops: vec![0; players], ..Default::default() }
    }

    pub fn triples_in(&self, cat: TripleCategory) -> u64 {
        self.triples.iter().filter(|(k, _)| k.category() == cat).map(|(_, c)| c).sum()
    }

    /// Costs accrued since `earlier`.
    pub fn since(&self, earlier: &CostMeter) -> CostMeter {
        let diff = |a: &[u64], b: &[u64]| a.iter().zip(b).map(|(x, y)| x - y).collect();
        let mut triples = BTreeMap::new();
        for (k, &c) in &self.triples {
            let d = c - earlier.triples.get(k).copied().unwrap_or(0);
            if d > 0 {
                triples.insert(k.clone(), d);
            }
        }
        CostMeter {
            rounds: self.rounds - earlier.rounds,
            bits: diff(&self.bits, &earlier.bits),
            triples,
            field_equivalent: self.field_equivalent - earlier.field_equivalent,
            ops: diff(&self.ops, &earlier.ops),
            retries: self.retries - earlier.retries,
            leaks: self.leaks - earlier.leaks,
        }
    }

    pub fn report(&self, protocol: &str) -> CostReport {
        CostReport {
            protocol: protocol.to_string(),
            rounds: self.rounds,
            bits_per_player: self.bits.iter().copied().max().unwrap_or(0),
            triples_field: self.triples_in(TripleCategory::Field),
            triples_series: self.triples_in(TripleCategory::Series),
            triples_mat: self.triples_in(TripleCategory::Mat),
            triples_polymat: self.triples_in(TripleCategory::PolyMat),
            triples_extfield: self.triples_in(TripleCategory::ExtField),
            field_ops: self.ops.iter().copied().max().unwrap_or(0),
        }
    }
}

/// One row of a cost report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub protocol: String,
    pub rounds: u64,
    pub bits_per_player: u64,
    pub triples_field: u64,
    pub triples_series: u64,
    pub triples_mat: u64,
    pub triples_polymat: u64,
    pub triples_extfield: u64,
    pub field_ops: u64,
}

impl CostReport {
    pub const CSV_HEADER: &'static str =
        "protocol,rounds,bits_per_player,triples_field,triples_series,triples_mat,triples_polymat,triples_extfield,field_ops";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.protocol,
            self.rounds,
            self.bits_per_player,
            self.triples_field,
            self.triples_series,
            self.triples_mat,
            self.triples_polymat,
            self.triples_extfield,
            self.field_ops
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    #[test]
    fn player_attribution() {
        let f = PrimeField::new(7).unwrap();
        let before = player_ops_snapshot(3);
        as_player(1, || {
            let _ = f.elem(2) * f.elem(3);
            as_player(2, || f.elem(1) + f.elem(1));
        });
        let after = player_ops_snapshot(3);
        assert_eq!(after[1] - before[1], 2);
        assert_eq!(after[2] - before[2], 0);
        assert_eq!(after[0], before[0]);
    }

    #[test]
    fn csv_row_layout() {
        let mut m = CostMeter::new(2);
        m.rounds = 3;
        m.bits = vec![14, 7];
        m.triples.insert(TripleKind::Field, 2);
        m.triples.insert(TripleKind::Matrix { n: 2 }, 1);
        m.triples.insert(TripleKind::Matrix { n: 3 }, 1);
        assert_eq!(m.report("x").csv_row(), "x,3,14,2,0,2,0,0,0");
        assert_eq!(CostReport::CSV_HEADER.split(',').count(), 9);
    }
}
