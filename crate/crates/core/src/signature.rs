//! Clique signatures and the registry of current maximal cliques.
//!
//! A signature is the low 64 bits of MurmurHash3 (x64, 128-bit variant,
//! seed [`SIGNATURE_SEED`]) over the clique's canonical string: decimal ids
//! in ascending order joined by `,`.
//!
//! The registry normally stores only signatures. In verifying mode it keeps
//! the canonical string next to each hash so a collision becomes an error
//! instead of a silent false membership.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::io::Cursor;

use thiserror::Error;

use crate::clique::{check_canonical, Clique, CliqueError};
use crate::graph::VertexId;

pub const SIGNATURE_SEED: u32 = 0;

/// Magic bytes opening a registry snapshot.
pub const SNAPSHOT_MAGIC: &[u8; 8] = b"DCQREG01";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueSignature(pub u64);

impl fmt::Display for CliqueSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("clique {0} is already registered")]
    AlreadyRegistered(String),
    #[error("clique {0} is not registered")]
    NotRegistered(String),
    #[error("signature collision on {sig}: {first} vs {second}")]
    Collision { sig: CliqueSignature, first: String, second: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnapshotError {
    #[error("snapshot does not start with the registry magic header")]
    BadMagic,
    #[error("snapshot truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("snapshot has {0} trailing bytes")]
    TrailingBytes(usize),
    #[error("snapshot hashes are not strictly ascending")]
    Unsorted,
}

/// Canonical byte form: ascending decimal ids joined by a single comma.
pub fn canonical_string(vs: &[VertexId]) -> Result<String, CliqueError> {
    check_canonical(vs)?;
    let mut s = String::with_capacity(vs.len() * 4);
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&v.0.to_string());
    }
    Ok(s)
}

pub fn hash_bytes(bytes: &[u8]) -> CliqueSignature {
    let h = murmur3::murmur3_x64_128(&mut Cursor::new(bytes), SIGNATURE_SEED).expect("reading from memory cannot fail");
    CliqueSignature(h as u64)
}

pub fn signature(c: &Clique) -> CliqueSignature {
    hash_bytes(c.to_string().as_bytes())
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Store {
    Hashes(HashSet<CliqueSignature>),
    Verified(HashMap<CliqueSignature, String>),
}

/// Signature set standing for the maximal cliques of the current graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueRegistry {
    store: Store,
}

impl Default for CliqueRegistry {
    fn default() -> Self {
        Self::new()
    }
}

impl CliqueRegistry {
    pub fn new() -> Self {
        CliqueRegistry { store: Store::Hashes(HashSet::new()) }
    }

    /// Registry that keeps canonical strings and reports collisions.
    pub fn verifying() -> Self {
        CliqueRegistry { store: Store::Verified(HashMap::new()) }
    }

    pub fn is_verifying(&self) -> bool {
        matches!(self.store, Store::Verified(_))
    }

    pub fn from_cliques<'a, I>(cliques: I, verifying: bool) -> Result<Self, RegistryError>
    where
        I: IntoIterator<Item = &'a Clique>,
    {
        let mut r = if verifying { Self::verifying() } else { Self::new() };
        for c in cliques {
            r.insert(c)?;
        }
        Ok(r)
    }

    pub fn len(&self) -> usize {
        match &self.store {
            Store::Hashes(s) => s.len(),
            Store::Verified(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains_signature(&self, sig: CliqueSignature) -> bool {
        match &self.store {
            Store::Hashes(s) => s.contains(&sig),
            Store::Verified(m) => m.contains_key(&sig),
        }
    }

    /// Membership test. In verifying mode a hash match with a different
    /// canonical string is reported as a collision.
    pub fn contains(&self, c: &Clique) -> Result<bool, RegistryError> {
        match &self.store {
            Store::Hashes(s) => Ok(s.contains(&signature(c))),
            Store::Verified(m) => {
                let text = c.to_string();
                let sig = hash_bytes(text.as_bytes());
                match m.get(&sig) {
                    None => Ok(false),
                    Some(stored) if *stored == text => Ok(true),
                    Some(stored) => Err(RegistryError::Collision { sig, first: stored.clone(), second: text }),
                }
            }
        }
    }

    pub fn insert(&mut self, c: &Clique) -> Result<(), RegistryError> {
        let text = c.to_string();
        let sig = hash_bytes(text.as_bytes());
        match &mut self.store {
            Store::Hashes(s) => {
                if !s.insert(sig) {
                    return Err(RegistryError::AlreadyRegistered(text));
                }
            }
            Store::Verified(m) => match m.get(&sig) {
                Some(stored) if *stored == text => return Err(RegistryError::AlreadyRegistered(text)),
                Some(stored) => return Err(RegistryError::Collision { sig, first: stored.clone(), second: text }),
                None => {
                    m.insert(sig, text);
                }
            },
        }
        Ok(())
    }

    /// Replaces the signatures of `removed` by those of `added`.
    ///
    /// Every removed clique must be registered and no added clique may be.
    /// On error the registry is left as it was.
    pub fn update(&mut self, removed: &[Clique], added: &[Clique]) -> Result<(), RegistryError> {
        for c in removed {
            if !self.contains(c)? {
                return Err(RegistryError::NotRegistered(c.to_string()));
            }
        }
        let mut fresh = HashSet::with_capacity(added.len());
        for c in added {
            if self.contains(c)? || !fresh.insert(signature(c)) {
                return Err(RegistryError::AlreadyRegistered(c.to_string()));
            }
        }
        for c in removed {
            let sig = signature(c);
            match &mut self.store {
                Store::Hashes(s) => {
                    s.remove(&sig);
                }
                Store::Verified(m) => {
                    m.remove(&sig);
                }
            }
        }
        for c in added {
            self.insert(c).expect("checked above");
        }
        Ok(())
    }

    /// Signatures in ascending order.
    pub fn signatures(&self) -> Vec<CliqueSignature> {
        let mut v: Vec<CliqueSignature> = match &self.store {
            Store::Hashes(s) => s.iter().copied().collect(),
            Store::Verified(m) => m.keys().copied().collect(),
        };
        v.sort_unstable();
        v
    }

    /// Layout: 8 magic bytes, count as u64 LE, then `count` u64 LE hashes
    /// in ascending order.
    pub fn snapshot(&self) -> Vec<u8> {
        let sigs = self.signatures();
        let mut out = Vec::with_capacity(16 + 8 * sigs.len());
        out.extend_from_slice(SNAPSHOT_MAGIC);
        out.extend_from_slice(&(sigs.len() as u64).to_le_bytes());
        for s in sigs {
            out.extend_from_slice(&s.0.to_le_bytes());
        }
        out
    }

    /// Inverse of [`snapshot`](Self::snapshot). The result stores hashes only.
    pub fn restore(bytes: &[u8]) -> Result<Self, SnapshotError> {
        if bytes.len() < SNAPSHOT_MAGIC.len() {
            return if SNAPSHOT_MAGIC.starts_with(bytes) {
                Err(SnapshotError::Truncated { expected: 16, found: bytes.len() })
            } else {
                Err(SnapshotError::BadMagic)
            };
        }
        if &bytes[..8] != SNAPSHOT_MAGIC {
            return Err(SnapshotError::BadMagic);
        }
        if bytes.len() < 16 {
            return Err(SnapshotError::Truncated { expected: 16, found: bytes.len() });
        }
        let count = u64::from_le_bytes(bytes[8..16].try_into().expect("8 bytes"));
        let expected = usize::try_from(count)
            .ok()
            .and_then(|c| c.checked_mul(8))
            .and_then(|b| b.checked_add(16))
            .unwrap_or(usize::MAX);
        if bytes.len() < expected {
            return Err(SnapshotError::Truncated { expected, found: bytes.len() });
        }
        if bytes.len() > expected {
            return Err(SnapshotError::TrailingBytes(bytes.len() - expected));
        }
        let mut set = HashSet::with_capacity(count as usize);
        let mut prev: Option<u64> = None;
        for chunk in bytes[16..].chunks_exact(8) {
            let h = u64::from_le_bytes(chunk.try_into().expect("8 bytes"));
            if prev.is_some_and(|p| p >= h) {
                return Err(SnapshotError::Unsorted);
            }
            prev = Some(h);
            set.insert(CliqueSignature(h));
        }
        Ok(CliqueRegistry { store: Store::Hashes(set) })
    }

    /// True if both registries hold the same signatures, whatever the mode.
    pub fn same_signatures(&self, other: &CliqueRegistry) -> bool {
        self.signatures() == other.signatures()
    }
}
