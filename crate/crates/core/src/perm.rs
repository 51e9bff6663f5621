//! Permutations of `[n]` in one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest degree `enumerate` will walk. 10! = 3 628 800 permutations.
pub const MAX_ENUM_DEGREE: usize = 10;

/// Largest degree a `Permutation` can hold (values are stored as bytes).
pub const MAX_DEGREE: usize = 255;

pub(crate) type Values = SmallVec<[u8; 16]>;

/// A bijection of `{1, …, n}` stored as its one-line notation.
///
/// Ordering is lexicographic on the one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Values,
}

impl Permutation {
    /// Validates and wraps a one-line notation.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::NotAPermutation("empty sequence".into()));
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: n,
                bound: MAX_DEGREE,
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            values: values.iter().map(|&v| v as u8).collect(),
        })
    }

    /// Wraps values already known to be a permutation.
    pub(crate) fn from_values_unchecked(values: Values) -> Self {
        debug_assert!(is_permutation(&values));
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
        Permutation {
            values: (1..=n as u8).collect(),
        }
    }

    /// The long cycle `2 3 … n 1`.
    pub fn long_cycle(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
        let values = (2..=n as u8).chain(std::iter::once(1)).collect();
        Permutation { values }
    }

    /// `n (n-1) … 1`.
    pub fn decreasing(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
        Permutation {
            values: (1..=n as u8).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    /// `σ_i` for 1-based `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    /// The one-line notation as bytes, 0-indexed positions holding 1-based values.
    #[inline]
    pub fn as_bytes(&self) -> &[u8] {
        &self.values
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut out: Values = SmallVec::from_elem(0, self.degree());
        for (i, &v) in self.values.iter().enumerate() {
            out[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { values: out }
    }

    /// `outer ∘ inner`, composed right to left: `result_i = outer_{inner_i}`.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if outer.degree() != inner.degree() {
            return Err(Error::DegreeMismatch(outer.degree(), inner.degree()));
        }
        let values = inner
            .values
            .iter()
            .map(|&v| outer.values[v as usize - 1])
            .collect();
        Ok(Permutation { values })
    }

    /// Rearranges into the next permutation in lexicographic order.
    /// Returns false (leaving `self` untouched) at the last one.
    pub fn advance(&mut self) -> bool {
        next_lex(&mut self.values)
    }

    /// All of `S_n` in lexicographic order.
    pub fn enumerate(n: usize) -> Result<Enumerate> {
        if n == 0 {
            return Err(Error::NotAPermutation("degree 0".into()));
        }
        if n > MAX_ENUM_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: n,
                bound: MAX_ENUM_DEGREE,
            });
        }
        Ok(Enumerate {
            next: Some(Permutation::identity(n)),
        })
    }
}

fn is_permutation(values: &[u8]) -> bool {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    values.iter().all(|&v| {
        let v = v as usize;
        v >= 1 && v <= n && !std::mem::replace(&mut seen[v], true)
    })
}

fn next_lex(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] > v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] < v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Iterator returned by [`Permutation::enumerate`].
#[derive(Clone, Debug)]
pub struct Enumerate {
    next: Option<Permutation>,
}

impl Iterator for Enumerate {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.advance() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for &v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str("[")?;
            for (k, &v) in self.values.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `52134` or `[5,2,1,3,4]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::NotAPermutation(s.to_string());
        let values: Vec<usize> = if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(bad)?;
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
