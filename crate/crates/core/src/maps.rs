//! Bijections `S_n → S_n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::codes::{lehmer_bytes, lehmer_decode_bytes, major_bytes, major_decode_bytes};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Values};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapId {
    /// Each Lehmer code entry `L_i` goes to `(L_i + 1) mod (n - i + 1)`.
    LehmerRotation,
    /// Each `L_i` goes to `(L_i - 1) mod (n - i + 1)`.
    LehmerRotationInverse,
    Reverse,
    Complement,
    Foata,
    FoataInverse,
    /// The permutation whose major code is the Lehmer code of σ.
    LcodeToMcode,
    /// The permutation whose Lehmer code is the major code of σ.
    McodeToLcode,
    /// `c ∘ σ⁻¹` with `c = 2 3 … n 1`.
    Kreweras,
    /// `σ⁻¹ ∘ c`.
    KrewerasInverse,
    Inverse,
}

impl MapId {
    pub const ALL: [MapId; 11] = [
        MapId::LehmerRotation,
        MapId::LehmerRotationInverse,
        MapId::Reverse,
        MapId::Complement,
        MapId::Foata,
        MapId::FoataInverse,
        MapId::LcodeToMcode,
        MapId::McodeToLcode,
        MapId::Kreweras,
        MapId::KrewerasInverse,
        MapId::Inverse,
    ];

    /// FindStat map number, if the map has one.
    pub fn code(self) -> Option<u32> {
        Some(match self {
            MapId::LehmerRotation => 149,
            MapId::Reverse => 64,
            MapId::Complement => 69,
            MapId::Foata => 67,
            MapId::FoataInverse => 175,
            MapId::LcodeToMcode => 62,
            MapId::McodeToLcode => 73,
            MapId::Kreweras => 88,
            MapId::KrewerasInverse => 89,
            MapId::LehmerRotationInverse | MapId::Inverse => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            MapId::LehmerRotation => "lehmer_rotation",
            MapId::LehmerRotationInverse => "lehmer_rotation_inverse",
            MapId::Reverse => "reverse",
            MapId::Complement => "complement",
            MapId::Foata => "foata",
            MapId::FoataInverse => "foata_inverse",
            MapId::LcodeToMcode => "lcode_to_mcode",
            MapId::McodeToLcode => "mcode_to_lcode",
            MapId::Kreweras => "kreweras",
            MapId::KrewerasInverse => "kreweras_inverse",
            MapId::Inverse => "inverse_map",
        }
    }

    pub fn inverse_map(self) -> MapId {
        match self {
            MapId::LehmerRotation => MapId::LehmerRotationInverse,
            MapId::LehmerRotationInverse => MapId::LehmerRotation,
            MapId::Reverse => MapId::Reverse,
            MapId::Complement => MapId::Complement,
            MapId::Foata => MapId::FoataInverse,
            MapId::FoataInverse => MapId::Foata,
            MapId::LcodeToMcode => MapId::McodeToLcode,
            MapId::McodeToLcode => MapId::LcodeToMcode,
            MapId::Kreweras => MapId::KrewerasInverse,
            MapId::KrewerasInverse => MapId::Kreweras,
            MapId::Inverse => MapId::Inverse,
        }
    }

    pub fn apply(self, sigma: &Permutation) -> Permutation {
        Permutation::from_values_unchecked(self.apply_bytes(sigma.as_bytes()))
    }

    pub fn apply_inverse(self, sigma: &Permutation) -> Permutation {
        self.inverse_map().apply(sigma)
    }

    pub(crate) fn apply_bytes(self, v: &[u8]) -> Values {
        match self {
            MapId::LehmerRotation => rotate_code(v, true),
            MapId::LehmerRotationInverse => rotate_code(v, false),
            MapId::Reverse => v.iter().rev().copied().collect(),
            MapId::Complement => {
                let m = v.len() as u8 + 1;
                v.iter().map(|&x| m - x).collect()
            }
            MapId::Foata => foata(v),
            MapId::FoataInverse => foata_inverse(v),
            MapId::LcodeToMcode => {
                major_decode_bytes(&lehmer_bytes(v)).expect("Lehmer codes are major codes")
            }
            MapId::McodeToLcode => lehmer_decode_bytes(&major_bytes(v)),
            MapId::Kreweras => {
                let n = v.len() as u8;
                inverse(v).iter().map(|&x| x % n + 1).collect()
            }
            MapId::KrewerasInverse => {
                let inv = inverse(v);
                let n = v.len();
                (0..n).map(|k| inv[(k + 1) % n]).collect()
            }
            MapId::Inverse => inverse(v),
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.code() {
            Some(c) => write!(f, "Mp{c:05}"),
            None => f.write_str(self.name()),
        }
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "inverse" {
            return Ok(MapId::Inverse);
        }
        let digits = t.strip_prefix("Mp").unwrap_or(t);
        if let Ok(code) = digits.parse::<u32>() {
            return MapId::ALL
                .into_iter()
                .find(|m| m.code() == Some(code))
                .ok_or_else(|| Error::UnknownMap(s.to_string()));
        }
        MapId::ALL
            .into_iter()
            .find(|m| m.name() == t)
            .ok_or_else(|| Error::UnknownMap(s.to_string()))
    }
}

impl Serialize for MapId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MapId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn inverse(v: &[u8]) -> Values {
    let mut out: Values = SmallVec::from_elem(0, v.len());
    for (k, &x) in v.iter().enumerate() {
        out[x as usize - 1] = (k + 1) as u8;
    }
    out
}

fn rotate_code(v: &[u8], forward: bool) -> Values {
    let n = v.len();
    let mut code = lehmer_bytes(v);
    for (k, c) in code.iter_mut().enumerate() {
        let m = (n - k) as u8;
        *c = if forward {
            (*c + 1) % m
        } else {
            (*c + m - 1) % m
        };
    }
    lehmer_decode_bytes(&code)
}

/// Cuts `word` into blocks that each end at an element satisfying `ends`.
fn blocks_ending(word: &[u8], ends: impl Fn(u8) -> bool) -> Vec<&[u8]> {
    let mut out = Vec::new();
    let mut start = 0;
    for (k, &x) in word.iter().enumerate() {
        if ends(x) {
            out.push(&word[start..=k]);
            start = k + 1;
        }
    }
    debug_assert_eq!(start, word.len());
    out
}

/// Cuts `word` into blocks that each start at an element satisfying `starts`.
fn blocks_starting(word: &[u8], starts: impl Fn(u8) -> bool) -> Vec<&[u8]> {
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..word.len() {
        if starts(word[k]) {
            out.push(&word[start..k]);
            start = k;
        }
    }
    out.push(&word[start..]);
    out
}

fn foata(v: &[u8]) -> Values {
    let mut tau: Values = SmallVec::new();
    tau.push(v[0]);
    for &x in &v[1..] {
        let last = *tau.last().unwrap();
        let blocks = if x > last {
            blocks_ending(&tau, |t| t < x)
        } else {
            blocks_ending(&tau, |t| t > x)
        };
        let mut next: Values = SmallVec::with_capacity(tau.len() + 1);
        for block in blocks {
            next.push(block[block.len() - 1]);
            next.extend_from_slice(&block[..block.len() - 1]);
        }
        next.push(x);
        tau = next;
    }
    tau
}

fn foata_inverse(v: &[u8]) -> Values {
    let mut rho: Values = v.iter().copied().collect();
    let mut tail: Values = SmallVec::new();
    while rho.len() > 1 {
        let x = rho.pop().unwrap();
        let blocks = if rho[0] < x {
            blocks_starting(&rho, |t| t < x)
        } else {
            blocks_starting(&rho, |t| t > x)
        };
        let mut prev: Values = SmallVec::with_capacity(rho.len());
        for block in blocks {
            prev.extend_from_slice(&block[1..]);
            prev.push(block[0]);
        }
        rho = prev;
        tail.push(x);
    }
    rho.extend(tail.into_iter().rev());
    rho
}

/// `K^j(σ)` by the closed form for entries of Kreweras powers; `j` may be
/// negative. Residues are taken in `1..=n`.
pub fn kreweras_power(sigma: &Permutation, j: i64) -> Permutation {
    let n = sigma.degree() as i64;
    let j = j.rem_euclid(2 * n);
    let wrap = |x: i64| (x - 1).rem_euclid(n) + 1;
    let (source, shift, add) = if j % 2 == 0 {
        (sigma.clone(), j / 2, j / 2)
    } else {
        (sigma.inverse(), (j - 1) / 2, (j + 1) / 2)
    };
    let values: Vec<usize> = (1..=n)
        .map(|i| wrap(source.at(wrap(i - shift) as usize) as i64 + add) as usize)
        .collect();
    Permutation::from_one_line(&values).expect("closed form yields a permutation")
}
