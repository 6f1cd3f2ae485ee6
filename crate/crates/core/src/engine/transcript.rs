use std::io::{self, Write};

use serde::{Deserialize, Serialize};

/// One broadcast by one player.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptEvent {
    pub round: u64,
    /// 1-based player index.
    pub sender: usize,
    pub tag: String,
    pub bits: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    events: Vec<TranscriptEvent>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn record(&mut self, event: TranscriptEvent) {
        self.events.push(event);
    }

    /// Events in round order; ties keep execution order.
    pub fn events(&self) -> Vec<TranscriptEvent> {
        let mut ev = self.events.clone();
        ev.sort_by_key(|e| e.round);
        ev
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        for e in self.events() {
            serde_json::to_writer(&mut w, &e)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("json is utf-8")
    }
}
