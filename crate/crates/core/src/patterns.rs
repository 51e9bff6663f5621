//! Classical, vincular and left-anchored permutation patterns.
//!
//! Syntax: letters are single digits. Text without any `-` is a classical
//! pattern (`"312"`). Once a `-` appears, each dash-free group is a block
//! whose letters must sit at adjacent host positions (`"13-2"`). A leading
//! `|` anchors the occurrence at the start of the host.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const MAX_PATTERN_LENGTH: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternSpec {
    letters: Vec<u8>,
    /// Block lengths, in order; they sum to `letters.len()`.
    blocks: Vec<usize>,
    anchored: bool,
}

impl PatternSpec {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Blocks as 1-based inclusive position ranges.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut start = 1;
        self.blocks
            .iter()
            .map(|&len| {
                let b = (start, start + len - 1);
                start += len;
                b
            })
            .collect()
    }

    pub fn is_anchored(&self) -> bool {
        self.anchored
    }

    pub fn is_classical(&self) -> bool {
        !self.anchored && self.blocks.iter().all(|&b| b == 1)
    }

    /// `adjacent[p]` is true when pattern positions `p` and `p + 1`
    /// (0-based) must be matched at consecutive host positions.
    ///
    /// An anchored pattern pins its first two letters to host positions 1
    /// and 2; the pair (2, 3) is then free, so `|1-23` counts
    /// `σ_1 < σ_2 < σ_j` for any `j > 2`.
    fn adjacency(&self) -> Vec<bool> {
        let k = self.len();
        let mut adj = vec![false; k.saturating_sub(1)];
        let mut p = 0;
        for &len in &self.blocks {
            for q in p..p + len - 1 {
                adj[q] = true;
            }
            p += len;
        }
        if self.anchored && k >= 3 {
            adj[1] = false;
        }
        adj
    }
}

pub fn parse_pattern(text: &str) -> Result<PatternSpec> {
    let bad = |why: &'static str| Error::MalformedPattern(text.to_string(), why);
    let (anchored, body) = match text.strip_prefix('|') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    if body.is_empty() {
        return Err(bad("empty pattern"));
    }
    let groups: Vec<&str> = body.split('-').collect();
    let mut letters = Vec::new();
    let mut blocks = Vec::new();
    for g in &groups {
        if g.is_empty() {
            return Err(bad("empty block"));
        }
        for c in g.chars() {
            let d = c.to_digit(10).ok_or_else(|| bad("non-digit character"))?;
            letters.push(d as u8);
        }
        blocks.push(g.len());
    }
    let k = letters.len();
    if k > MAX_PATTERN_LENGTH {
        return Err(bad("pattern longer than 6"));
    }
    let mut seen = [false; 10];
    for &l in &letters {
        if l == 0 || l as usize > k {
            return Err(bad("letters must be 1..k"));
        }
        if std::mem::replace(&mut seen[l as usize], true) {
            return Err(bad("repeated letter"));
        }
    }
    if groups.len() == 1 {
        blocks = vec![1; k];
    }
    if anchored && k < 2 {
        return Err(bad("anchored pattern needs at least two letters"));
    }
    Ok(PatternSpec {
        letters,
        blocks,
        anchored,
    })
}

impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pattern(s)
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.anchored {
            f.write_str("|")?;
        }
        if self.is_classical() {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            return Ok(());
        }
        let mut p = 0;
        for (b, &len) in self.blocks.iter().enumerate() {
            if b > 0 {
                f.write_str("-")?;
            }
            for l in &self.letters[p..p + len] {
                write!(f, "{l}")?;
            }
            p += len;
        }
        Ok(())
    }
}

/// Number of occurrences of `p` in `sigma`.
pub fn count_occurrences(sigma: &Permutation, p: &PatternSpec) -> u64 {
    let host = sigma.as_bytes();
    let k = p.len();
    if k > host.len() {
        return 0;
    }
    let adj = p.adjacency();
    let mut chosen = Vec::with_capacity(k);
    let mut total = 0;
    extend(host, p, &adj, &mut chosen, &mut total);
    total
}

/// Convenience wrapper that parses `pattern` first.
pub fn count(sigma: &Permutation, pattern: &str) -> Result<u64> {
    Ok(count_occurrences(sigma, &parse_pattern(pattern)?))
}

fn extend(host: &[u8], p: &PatternSpec, adj: &[bool], chosen: &mut Vec<usize>, total: &mut u64) {
    let t = chosen.len();
    let k = p.len();
    if t == k {
        *total += 1;
        return;
    }
    let n = host.len();
    let (lo, hi) = match chosen.last() {
        None if p.anchored => (0, 0),
        None => (0, n - k),
        Some(&prev) if adj[t - 1] || (p.anchored && t == 1) => (prev + 1, prev + 1),
        Some(&prev) => (prev + 1, n - (k - t)),
    };
    if hi >= n {
        return;
    }
    for pos in lo..=hi {
        let v = host[pos];
        let fits = chosen
            .iter()
            .enumerate()
            .all(|(s, &q)| (p.letters[s] < p.letters[t]) == (host[q] < v));
        if fits {
            chosen.push(pos);
            extend(host, p, adj, chosen, total);
            chosen.pop();
        }
    }
}
