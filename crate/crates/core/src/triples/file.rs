//! Binary triple-store files.
//!
//! Layout, little-endian:
//! `"PDTS"`, version u32, q u64, players u32, kind tag u8, kind parameters,
//! count u64, words per player u64, then `count × players × words` share
//! words, then a SHA-256 digest of everything before it.

use std::io::{Read, Write};

use sha2::{Digest, Sha256};

use super::{RawTriple, TripleKind, TripleStore};
use crate::algebra::PrimeField;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"PDTS";
const VERSION: u32 = 1;
const DIGEST_LEN: usize = 32;

/// Decoded contents of a triple file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleFile {
    pub q: u64,
    pub players: usize,
    pub kind: TripleKind,
    /// Per triple, per player, the words x‖y‖z.
    pub triples: Vec<Vec<Vec<u64>>>,
}

impl TripleFile {
    pub fn from_raw(field: PrimeField, players: usize, kind: TripleKind, raw: &[RawTriple]) -> Self {
        TripleFile { q: field.modulus(), players, kind, triples: raw.iter().map(|t| t.shares.clone()).collect() }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut b = Vec::new();
        b.extend_from_slice(MAGIC);
        b.extend_from_slice(&VERSION.to_le_bytes());
        b.extend_from_slice(&self.q.to_le_bytes());
        b.extend_from_slice(&(self.players as u32).to_le_bytes());
        let put = |b: &mut Vec<u8>, v: usize| b.extend_from_slice(&(v as u64).to_le_bytes());
        match &self.kind {
            TripleKind::Field => b.push(0),
            TripleKind::Series { m } => {
                b.push(1);
                put(&mut b, *m);
            }
            TripleKind::Matrix { n } => {
                b.push(2);
                put(&mut b, *n);
            }
            TripleKind::PolyMatrix { n, d } => {
                b.push(3);
                put(&mut b, *n);
                put(&mut b, *d);
            }
            TripleKind::ExtField { modulus } => {
                b.push(4);
                put(&mut b, modulus.len());
                for &c in modulus {
                    b.extend_from_slice(&c.to_le_bytes());
                }
            }
        }
        put(&mut b, self.triples.len());
        put(&mut b, self.kind.words_per_player());
        for t in &self.triples {
            for share in t {
                for &w in share {
                    b.extend_from_slice(&w.to_le_bytes());
                }
            }
        }
        let digest = Sha256::digest(&b);
        b.extend_from_slice(&digest);
        b
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < DIGEST_LEN + MAGIC.len() {
            return Err(Error::Checksum("file too short".into()));
        }
        let (body, digest) = bytes.split_at(bytes.len() - DIGEST_LEN);
        if Sha256::digest(body).as_slice() != digest {
            return Err(Error::Checksum("digest mismatch".into()));
        }
        let mut r = Reader { buf: body, pos: 0 };
        if r.take(4)? != MAGIC {
            return Err(Error::Checksum("bad magic".into()));
        }
        let version = u32::from_le_bytes(r.take(4)?.try_into().expect("4 bytes"));
        if version != VERSION {
            return Err(Error::Input(format!("unsupported triple file version {version}")));
        }
        let q = r.u64()?;
        let players = u32::from_le_bytes(r.take(4)?.try_into().expect("4 bytes")) as usize;
        let kind = match r.take(1)?[0] {
            0 => TripleKind::Field,
            1 => TripleKind::Series { m: r.usize()? },
            2 => TripleKind::Matrix { n: r.usize()? },
            3 => TripleKind::PolyMatrix { n: r.usize()?, d: r.usize()? },
            4 => {
                let len = r.usize()?;
                TripleKind::ExtField { modulus: (0..len).map(|_| r.u64()).collect::<Result<_>>()? }
            }
            t => return Err(Error::Input(format!("unknown triple kind tag {t}"))),
        };
        let count = r.usize()?;
        let width = r.usize()?;
        if width != kind.words_per_player() {
            return Err(Error::Input(format!("{kind} triples need {} words per player", kind.words_per_player())));
        }
        let expected = count.checked_mul(players).and_then(|c| c.checked_mul(width)).and_then(|c| c.checked_mul(8));
        if expected != Some(body.len() - r.pos) {
            return Err(Error::Checksum("body length does not match header".into()));
        }
        let triples = (0..count)
            .map(|_| (0..players).map(|_| (0..width).map(|_| r.u64()).collect()).collect())
            .collect::<Result<_>>()?;
        Ok(TripleFile { q, players, kind, triples })
    }

    pub fn write<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(&self.to_bytes())?;
        Ok(())
    }

    pub fn read<R: Read>(mut r: R) -> Result<Self> {
        let mut bytes = Vec::new();
        r.read_to_end(&mut bytes)?;
        Self::from_bytes(&bytes)
    }

    /// Strict store holding these triples.
    pub fn into_store(self, seed: u64) -> Result<TripleStore> {
        let field = PrimeField::new(self.q)?;
        let mut store = TripleStore::preloaded(field, self.players, seed);
        for t in self.triples {
            store.push(self.kind.clone(), t)?;
        }
        Ok(store)
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, k: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(k).filter(|&e| e <= self.buf.len());
        let end = end.ok_or_else(|| Error::Checksum("unexpected end of file".into()))?;
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }

    fn usize(&mut self) -> Result<usize> {
        usize::try_from(self.u64()?).map_err(|_| Error::Input("header value out of range".into()))
    }
}
