//! Lehmer code, major code, and lexicographic rank.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Values};

/// Largest degree for which `rank` fits in a `u64` (20! < 2^63).
pub const MAX_RANK_DEGREE: usize = 20;

macro_rules! code_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            entries: Values,
        }

        impl $name {
            /// Builds a code, checking `0 <= entries[i] <= n - i` (1-based `i`).
            pub fn new(entries: &[usize]) -> Result<Self> {
                check_bounds(entries)?;
                Ok($name {
                    entries: entries.iter().map(|&e| e as u8).collect(),
                })
            }

            pub fn degree(&self) -> usize {
                self.entries.len()
            }

            pub fn entries(&self) -> Vec<usize> {
                self.entries.iter().map(|&e| e as usize).collect()
            }

            /// Entry at 1-based position `i`.
            pub fn at(&self, i: usize) -> usize {
                self.entries[i - 1] as usize
            }

            pub fn sum(&self) -> usize {
                self.entries.iter().map(|&e| e as usize).sum()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_tuple(f, &self.entries)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}", stringify!($name), self)
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                $name::new(&parse_tuple(s)?)
            }
        }
    };
}

code_type!(
    /// `L(σ)_i = #{j > i : σ_j < σ_i}`.
    LehmerCode
);

code_type!(
    /// Successive major-index differences of the value deletions of σ,
    /// stored with `n` entries (the last is always 0).
    MajorCode
);

fn check_bounds(entries: &[usize]) -> Result<()> {
    let n = entries.len();
    if n == 0 {
        return Err(Error::CodeOutOfRange("empty code".into()));
    }
    if n > crate::perm::MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            bound: crate::perm::MAX_DEGREE,
        });
    }
    for (k, &e) in entries.iter().enumerate() {
        if e > n - 1 - k {
            return Err(Error::CodeOutOfRange(format!(
                "entry {} at position {} exceeds {}",
                e,
                k + 1,
                n - 1 - k
            )));
        }
    }
    Ok(())
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[u8]) -> fmt::Result {
    f.write_str("(")?;
    for (k, e) in entries.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str(")")
}

fn parse_tuple(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::CodeOutOfRange(format!("cannot parse {s:?}"));
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(bad)?;
    inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
        .collect()
}

pub(crate) fn lehmer_bytes(v: &[u8]) -> Values {
    let n = v.len();
    let mut out: Values = SmallVec::from_elem(0, n);
    for i in 0..n {
        out[i] = v[i + 1..].iter().filter(|&&x| x < v[i]).count() as u8;
    }
    out
}

pub(crate) fn lehmer_decode_bytes(code: &[u8]) -> Values {
    let n = code.len();
    let mut unused: SmallVec<[u8; 16]> = (1..=n as u8).collect();
    code.iter().map(|&c| unused.remove(c as usize)).collect()
}

pub fn lehmer_encode(sigma: &Permutation) -> LehmerCode {
    LehmerCode {
        entries: lehmer_bytes(sigma.as_bytes()),
    }
}

pub fn lehmer_decode(code: &LehmerCode) -> Permutation {
    Permutation::from_values_unchecked(lehmer_decode_bytes(&code.entries))
}

fn maj_of(seq: impl Iterator<Item = u8>) -> usize {
    let mut maj = 0;
    let mut prev: Option<u8> = None;
    for (k, x) in seq.enumerate() {
        if let Some(p) = prev {
            if p > x {
                maj += k;
            }
        }
        prev = Some(x);
    }
    maj
}

pub(crate) fn major_bytes(v: &[u8]) -> Values {
    let n = v.len();
    // maj(del_i) for i = 1..=n+1; del_{n+1} is empty.
    let majs: Vec<usize> = (1..=n + 1)
        .map(|i| maj_of(v.iter().copied().filter(|&x| x as usize >= i)))
        .collect();
    (0..n).map(|k| (majs[k] - majs[k + 1]) as u8).collect()
}

pub(crate) fn major_decode_bytes(code: &[u8]) -> Option<Values> {
    let n = code.len();
    if code[n - 1] != 0 {
        return None;
    }
    // Rebuild del_{n}, del_{n-1}, …, del_1, each time inserting a new minimum.
    let mut cur: Vec<u8> = vec![1];
    for i in (0..n - 1).rev() {
        let old = maj_of(cur.iter().copied());
        let target = old + code[i] as usize;
        let shifted: Vec<u8> = cur.iter().map(|&x| x + 1).collect();
        let mut found = None;
        for slot in 0..=shifted.len() {
            let candidate = shifted[..slot]
                .iter()
                .copied()
                .chain(std::iter::once(1))
                .chain(shifted[slot..].iter().copied());
            if maj_of(candidate) == target {
                found = Some(slot);
                break;
            }
        }
        let slot = found?;
        cur = shifted;
        cur.insert(slot, 1);
    }
    Some(cur.into_iter().collect())
}

pub fn major_encode(sigma: &Permutation) -> MajorCode {
    MajorCode {
        entries: major_bytes(sigma.as_bytes()),
    }
}

pub fn major_decode(code: &MajorCode) -> Result<Permutation> {
    major_decode_bytes(&code.entries)
        .map(Permutation::from_values_unchecked)
        .ok_or_else(|| Error::CodeOutOfRange(format!("{code} is not a major code")))
}

/// `n!` for `n <= 20`.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Rank of a one-line notation of degree `n <= 20`, 1-based.
pub(crate) fn rank_bytes(v: &[u8]) -> u64 {
    let n = v.len();
    let mut r = 0u64;
    let mut fact = 1u64;
    for i in (0..n).rev() {
        let l = v[i + 1..].iter().filter(|&&x| x < v[i]).count() as u64;
        r += l * fact;
        fact *= (n - i) as u64;
    }
    r + 1
}

/// Position of σ in the lexicographic enumeration of `S_n`, starting at 1.
pub fn rank(sigma: &Permutation) -> Result<u64> {
    let n = sigma.degree();
    if n > MAX_RANK_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            bound: MAX_RANK_DEGREE,
        });
    }
    Ok(rank_bytes(sigma.as_bytes()))
}

pub fn unrank(n: usize, r: u64) -> Result<Permutation> {
    if n == 0 || n > MAX_RANK_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            bound: MAX_RANK_DEGREE,
        });
    }
    if r == 0 || r > factorial(n) {
        return Err(Error::RankOutOfRange { degree: n, rank: r });
    }
    let mut rest = r - 1;
    let mut code: Values = SmallVec::from_elem(0, n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        code[i] = (rest / f) as u8;
        rest %= f;
    }
    Ok(Permutation::from_values_unchecked(lehmer_decode_bytes(
        &code,
    )))
}
