//! Exhaustive distance tables indexed by Lehmer rank.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::{CutPoints, Permutation};
use crate::rank::{factorial, rank, rank_images, unrank_images};

/// Largest `n` for which a full table is built.
pub const TABLE_MAX_N: usize = 10;

const MAGIC: &[u8; 4] = b"BTDT";
const VERSION: u8 = 1;
const UNSEEN: u8 = u8::MAX;

/// `distances[rank(π)] = d(π)` for every `π` in `Sym_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    distances: Vec<u8>,
}

impl std::fmt::Debug for DistanceTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DistanceTable")
            .field("n", &self.n)
            .field("entries", &self.distances.len())
            .finish()
    }
}

fn check_table_n(n: usize) -> Result<()> {
    if (1..=TABLE_MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::out_of_range("n", n as i64, format!("1..={TABLE_MAX_N}")))
    }
}

/// Cut points as slice bounds `(i, j, k)` for in-place rotation.
fn generator_bounds(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

impl DistanceTable {
    /// Breadth-first search from the identity over right actions.
    ///
    /// Early levels expand the frontier; once the frontier is large, each
    /// unvisited permutation instead looks for a neighbour on the current
    /// level, which stops at the first hit.
    pub fn build(n: usize) -> Result<Self> {
        check_table_n(n)?;
        let total = factorial(n) as usize;
        let mut distances = vec![UNSEEN; total];
        distances[0] = 0;
        let gens = generator_bounds(n);
        let mut frontier = 1usize;
        let mut unvisited = total - 1;
        let mut level = 0u8;
        let mut cur = [0u8; TABLE_MAX_N];
        let mut next = [0u8; TABLE_MAX_N];
        while frontier > 0 && unvisited > 0 {
            let mut found = 0usize;
            let bottom_up = frontier.saturating_mul(4) > unvisited;
            for r in 0..total {
                let d = distances[r];
                if bottom_up {
                    if d != UNSEEN {
                        continue;
                    }
                } else if d != level {
                    continue;
                }
                unrank_images(r as u64, &mut cur[..n]);
                for &(i, j, k) in &gens {
                    next[..n].copy_from_slice(&cur[..n]);
                    next[i..k].rotate_left(j - i);
                    let nr = rank_images(&next[..n]) as usize;
                    if bottom_up {
                        if distances[nr] == level {
                            distances[r] = level + 1;
                            found += 1;
                            break;
                        }
                    } else if distances[nr] == UNSEEN {
                        distances[nr] = level + 1;
                        found += 1;
                    }
                }
            }
            unvisited -= found;
            frontier = found;
            level += 1;
        }
        if unvisited != 0 {
            return Err(Error::Contract(format!("{unvisited} permutations unreachable for n = {n}")));
        }
        Ok(Self { n, distances })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distances(&self) -> &[u8] {
        &self.distances
    }

    pub fn get(&self, pi: &Permutation) -> Result<u8> {
        if pi.n() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: pi.n(),
            });
        }
        Ok(self.distances[rank(pi) as usize])
    }

    pub(crate) fn get_images(&self, images: &[u8]) -> u8 {
        self.distances[rank_images(images) as usize]
    }

    pub fn diameter(&self) -> u8 {
        self.distances.iter().copied().max().unwrap_or(0)
    }

    /// `histogram[d]` counts permutations at distance `d`.
    pub fn histogram(&self) -> Vec<u64> {
        let mut h = vec![0u64; self.diameter() as usize + 1];
        for &d in &self.distances {
            h[d as usize] += 1;
        }
        h
    }

    /// Lexicographically first shortest sorting word (right actions).
    pub fn optimal_word(&self, pi: &Permutation) -> Result<Vec<CutPoints>> {
        let n = self.n;
        let mut cur = pi.clone();
        let mut d = self.get(pi)?;
        let mut word = Vec::with_capacity(d as usize);
        let gens = crate::perm::enumerate_block_transpositions(n.max(2))?;
        while d > 0 {
            let step = gens
                .iter()
                .map(|cp| (cp, cur.apply_block_move(cp).expect("same n")))
                .find(|(_, next)| self.distances[rank(next) as usize] + 1 == d)
                .ok_or_else(|| Error::Contract(format!("no descending neighbour of {cur}")))?;
            word.push(*step.0);
            cur = step.1;
            d -= 1;
        }
        Ok(word)
    }

    /// Writes the table as `BTDT`, version, `n`, little-endian entry count,
    /// then one byte per permutation; the file is replaced atomically.
    pub fn save(&self, path: &Path) -> Result<()> {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(MAGIC)?;
        tmp.write_all(&[VERSION, self.n as u8])?;
        tmp.write_all(&(self.distances.len() as u64).to_le_bytes())?;
        tmp.write_all(&self.distances)?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let mut bytes = Vec::new();
        fs::File::open(path)?.read_to_end(&mut bytes)?;
        Self::from_bytes(&bytes)
    }

    fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < 14 || &bytes[..4] != MAGIC {
            return Err(Error::CacheFormat("bad magic".into()));
        }
        if bytes[4] != VERSION {
            return Err(Error::CacheFormat(format!("unsupported version {}", bytes[4])));
        }
        let n = bytes[5] as usize;
        check_table_n(n).map_err(|_| Error::CacheFormat(format!("unsupported n = {n}")))?;
        let count = u64::from_le_bytes(bytes[6..14].try_into().expect("8 bytes"));
        let expected = factorial(n);
        if count != expected || (bytes.len() - 14) as u64 != expected {
            return Err(Error::CacheFormat(format!(
                "expected {expected} entries for n = {n}, header says {count}, file holds {}",
                bytes.len() - 14
            )));
        }
        Ok(Self {
            n,
            distances: bytes[14..].to_vec(),
        })
    }
}

static TABLES: [OnceLock<Arc<DistanceTable>>; TABLE_MAX_N + 1] = [const { OnceLock::new() }; TABLE_MAX_N + 1];

/// The table for `n`, built once per process and shared afterwards.
pub fn distance_table(n: usize) -> Result<Arc<DistanceTable>> {
    check_table_n(n)?;
    if let Some(t) = TABLES[n].get() {
        return Ok(Arc::clone(t));
    }
    let built = Arc::new(DistanceTable::build(n)?);
    Ok(Arc::clone(TABLES[n].get_or_init(|| built)))
}

/// Like [`distance_table`], but reads the table from `path` when present and
/// valid, and writes it there otherwise.
pub fn distance_table_cached(n: usize, path: &Path) -> Result<Arc<DistanceTable>> {
    check_table_n(n)?;
    if path.exists() {
        let table = DistanceTable::load(path)?;
        if table.n != n {
            return Err(Error::CacheFormat(format!("cache holds n = {}, wanted {n}", table.n)));
        }
        let table = Arc::new(table);
        return Ok(Arc::clone(TABLES[n].get_or_init(|| table)));
    }
    let table = distance_table(n)?;
    table.save(path)?;
    Ok(table)
}
