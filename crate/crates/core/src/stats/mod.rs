//! Catalog of permutation statistics, addressable by FindStat number,
//! short name, or parametric family.

pub mod defs;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::Rational;

type Eval = fn(&[u8]) -> i64;

/// One row of the built-in catalog.
#[derive(Clone, Copy)]
pub struct CatalogEntry {
    pub code: u32,
    pub name: &'static str,
    pub description: &'static str,
    /// Values are `eval(σ) / denominator`.
    pub denominator: i64,
    eval: Eval,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "St{:06} {}", self.code, self.name)
    }
}

macro_rules! entry {
    ($code:literal, $name:literal, $desc:literal, $f:path) => {
        entry!($code, $name, $desc, $f, 1)
    };
    ($code:literal, $name:literal, $desc:literal, $f:path, $den:literal) => {
        CatalogEntry {
            code: $code,
            name: $name,
            description: $desc,
            denominator: $den,
            eval: $f,
        }
    };
}

use defs as d;

static CATALOG: &[CatalogEntry] = &[
    entry!(4, "maj", "major index: sum of descent positions", d::maj),
    entry!(7, "rtl_max", "right-to-left maxima", d::rtl_maxima),
    entry!(18, "inv", "inversions", d::inv),
    entry!(20, "rank", "lexicographic rank", d::rank),
    entry!(21, "des", "descents", d::des),
    entry!(23, "peaks", "inner peaks", d::peaks),
    entry!(
        35,
        "left_outer_peaks",
        "peaks, plus 1 if position 1 is a descent",
        d::left_outer_peaks
    ),
    entry!(54, "first", "first entry", d::first_entry),
    entry!(
        55,
        "inv_sum",
        "sum of b - a over inversions (a, b)",
        d::inversion_sum
    ),
    entry!(
        92,
        "outer_peaks",
        "peaks, plus a descent at 1, plus an ascent at n-1",
        d::outer_peaks
    ),
    entry!(
        99,
        "boundary_valleys",
        "valleys, plus an ascent at 1, plus a descent at n-1",
        d::boundary_valleys
    ),
    entry!(155, "exc", "exceedances: sigma_i > i", d::exceedances),
    entry!(245, "asc", "ascents", d::asc),
    entry!(246, "noninv", "non-inversions", d::noninv),
    entry!(
        304,
        "load",
        "major index of the reverse of the inverse",
        d::load
    ),
    entry!(305, "imaj", "major index of the inverse", d::inverse_maj),
    entry!(325, "tree_width", "width of the permutation tree", d::runs),
    entry!(
        341,
        "noninv_sum",
        "sum of b - a over non-inversions (a, b)",
        d::noninversion_sum
    ),
    entry!(342, "cosine", "sum of i * sigma_i", d::cosine),
    entry!(353, "valleys", "inner valleys", d::valleys),
    entry!(
        354,
        "recoils",
        "recoils: descents of the inverse",
        d::recoils
    ),
    entry!(355, "p21_3", "occurrences of 21-3", d::pat_21_3),
    entry!(356, "p13_2", "occurrences of 13-2", d::pat_13_2),
    entry!(357, "p12_3", "occurrences of 12-3", d::pat_12_3),
    entry!(358, "p31_2", "occurrences of 31-2", d::pat_31_2),
    entry!(359, "p23_1", "occurrences of 23-1", d::pat_23_1),
    entry!(360, "p32_1", "occurrences of 32-1", d::pat_32_1),
    entry!(365, "double_asc", "double ascents", d::double_ascents),
    entry!(366, "double_des", "double descents", d::double_descents),
    entry!(423, "p123_132", "occurrences of 123 or 132", d::pat_123_132),
    entry!(435, "p213_231", "occurrences of 213 or 231", d::pat_213_231),
    entry!(437, "p312_321", "occurrences of 312 or 321", d::pat_312_321),
    entry!(446, "disorder", "disorder", d::disorder),
    entry!(
        457,
        "p132_213_321",
        "occurrences of 132, 213 or 321",
        d::pat_132_213_321
    ),
    entry!(470, "runs", "runs", d::runs),
    entry!(483, "switches", "peaks plus valleys", d::switches),
    entry!(
        494,
        "inv_dist3",
        "inversions at distance at most 3",
        d::inversions_dist_le_3
    ),
    entry!(
        495,
        "inv_dist2",
        "inversions at distance at most 2",
        d::inversions_dist_le_2
    ),
    entry!(
        538,
        "even_inv",
        "inversions (i, j) with i = j mod 2",
        d::even_inversions
    ),
    entry!(
        539,
        "odd_inv",
        "inversions (i, j) with i != j mod 2",
        d::odd_inversions
    ),
    entry!(
        616,
        "inv_index",
        "sum of sigma_i over inversions (i, j)",
        d::inversion_index
    ),
    entry!(619, "cdes", "cyclic descents", d::cyclic_descents),
    entry!(638, "up_down_runs", "up-down runs", d::up_down_runs),
    entry!(
        662,
        "staircase",
        "staircase size of the Lehmer code",
        d::staircase_size
    ),
    entry!(
        677,
        "bialt",
        "standardized bi-alternating inversion number",
        d::bi_alternating_std_x2,
        2
    ),
    entry!(
        692,
        "stat",
        "13-2 + 21-3 + 32-1 + descents",
        d::mahonian_stat
    ),
    entry!(
        702,
        "wdef",
        "weak deficiencies: sigma_i <= i",
        d::weak_deficiencies
    ),
    entry!(
        709,
        "p14_2_3",
        "occurrences of 14-2-3 or 14-3-2",
        d::pat_14_2_3_14_3_2
    ),
    entry!(740, "last", "last entry", d::last_entry),
    entry!(
        796,
        "stat_prime",
        "13-2 + 31-2 + 32-1 + descents",
        d::mahonian_stat_prime
    ),
    entry!(798, "makl", "1-32 + 31-2 + 32-1 + descents", d::makl),
    entry!(
        824,
        "des_recoils",
        "descents plus recoils",
        d::des_plus_recoils
    ),
    entry!(828, "spearman", "sum of (sigma_i - i)^2", d::spearman),
    entry!(833, "comaj", "comajor index: n * des - maj", d::comajor),
    entry!(
        834,
        "right_outer_peaks",
        "peaks, plus 1 if position n-1 is an ascent",
        d::right_outer_peaks
    ),
    entry!(
        836,
        "des_dist2",
        "sigma_i > sigma_{i+2}",
        d::descents_dist_2
    ),
    entry!(837, "asc_dist2", "sigma_i < sigma_{i+2}", d::ascents_dist_2),
    entry!(991, "rtl_min", "right-to-left minima", d::rtl_minima),
    entry!(
        1084,
        "p_anchored_1_23",
        "occurrences of |1-23",
        d::pat_anchored_1_23
    ),
    entry!(
        1114,
        "odd_des",
        "descents at odd positions",
        d::odd_descents
    ),
    entry!(
        1115,
        "even_des",
        "descents at even positions",
        d::even_descents
    ),
    entry!(
        1332,
        "walk_nonneg",
        "steps of the ascent/descent walk on the non-negative side",
        d::nonneg_walk_steps
    ),
    entry!(
        1377,
        "maj_minus_inv",
        "major index minus inversions",
        d::maj_minus_inv
    ),
    entry!(
        1379,
        "maj_plus_inv",
        "major index plus inversions",
        d::maj_plus_inv
    ),
    entry!(
        1520,
        "strict_3des",
        "sigma_i > sigma_{i+3}",
        d::strict_3_descents
    ),
    entry!(
        1556,
        "invs_third",
        "inversions of the third entry",
        d::invs_third
    ),
    entry!(
        1557,
        "invs_second",
        "inversions of the second entry",
        d::invs_second
    ),
    entry!(
        1640,
        "qualified_ascent_tops",
        "ascent tops with every smaller value to their left",
        d::qualified_ascent_tops
    ),
];

/// Statistics outside the FindStat numbering, used as controls.
static EXTRAS: &[CatalogEntry] = &[
    entry!(0, "ltr_min", "left-to-right minima", d::ltr_minima),
    entry!(0, "ltr_max", "left-to-right maxima", d::ltr_maxima),
];

pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn extras() -> &'static [CatalogEntry] {
    EXTRAS
}

pub fn lookup(code: u32) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.code == code)
}

/// Identifies a statistic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatId {
    FindStat(u32),
    /// `L(σ)_i`.
    InvsAt(usize),
    /// 1 when `i` is a descent.
    DescentAt(usize),
    /// `σ_i`.
    Entry(usize),
    Extra(&'static str),
}

impl fmt::Display for StatId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatId::FindStat(c) => write!(f, "St{c:06}"),
            StatId::InvsAt(i) => write!(f, "invs_at:{i}"),
            StatId::DescentAt(i) => write!(f, "descent_at:{i}"),
            StatId::Entry(i) => write!(f, "entry:{i}"),
            StatId::Extra(name) => f.write_str(name),
        }
    }
}

impl FromStr for StatId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let unknown = || Error::UnknownStatistic(s.to_string());
        if let Some((family, idx)) = t.split_once(':') {
            let i: usize = idx.trim().parse().map_err(|_| unknown())?;
            if i == 0 {
                return Err(unknown());
            }
            return match family.trim() {
                "invs_at" => Ok(StatId::InvsAt(i)),
                "descent_at" => Ok(StatId::DescentAt(i)),
                "entry" => Ok(StatId::Entry(i)),
                _ => Err(unknown()),
            };
        }
        let digits = t.strip_prefix("St").unwrap_or(t);
        if let Ok(code) = digits.parse::<u32>() {
            return lookup(code)
                .map(|e| StatId::FindStat(e.code))
                .ok_or_else(unknown);
        }
        if let Some(e) = CATALOG.iter().find(|e| e.name == t) {
            return Ok(StatId::FindStat(e.code));
        }
        EXTRAS
            .iter()
            .find(|e| e.name == t)
            .map(|e| StatId::Extra(e.name))
            .ok_or_else(unknown)
    }
}

impl Serialize for StatId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for StatId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

type CustomEval = Arc<dyn Fn(&[u8]) -> i64 + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Plain(Eval),
    Family(fn(&[u8], usize) -> i64, usize, Family),
    Custom(CustomEval),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    InvsAt,
    DescentAt,
    Entry,
}

impl Family {
    fn max_index(self, n: usize) -> usize {
        match self {
            Family::InvsAt | Family::Entry => n,
            Family::DescentAt => n.saturating_sub(1),
        }
    }
}

/// An evaluable statistic. Values are exact rationals, computed as an
/// integer numerator over a fixed per-statistic denominator.
#[derive(Clone)]
pub struct Statistic {
    label: String,
    description: String,
    denominator: i64,
    kind: Kind,
}

impl fmt::Debug for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Statistic({})", self.label)
    }
}

impl Statistic {
    pub fn new(id: &StatId) -> Result<Self> {
        let label = id.to_string();
        let from_entry = |e: &CatalogEntry| Statistic {
            label: label.clone(),
            description: e.description.to_string(),
            denominator: e.denominator,
            kind: Kind::Plain(e.eval),
        };
        let family = |f: fn(&[u8], usize) -> i64, i: usize, fam: Family, what: &str| Statistic {
            label: label.clone(),
            description: format!("{what} at position {i}"),
            denominator: 1,
            kind: Kind::Family(f, i, fam),
        };
        Ok(match *id {
            StatId::FindStat(code) => {
                from_entry(lookup(code).ok_or_else(|| Error::UnknownStatistic(label.clone()))?)
            }
            StatId::Extra(name) => from_entry(
                EXTRAS
                    .iter()
                    .find(|e| e.name == name)
                    .ok_or_else(|| Error::UnknownStatistic(label.clone()))?,
            ),
            StatId::InvsAt(i) => family(d::invs_at, i, Family::InvsAt, "inversions of the entry"),
            StatId::DescentAt(i) => {
                family(d::descent_at, i, Family::DescentAt, "descent indicator")
            }
            StatId::Entry(i) => family(d::entry, i, Family::Entry, "entry"),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Statistic::new(&text.parse()?)
    }

    /// A statistic from an arbitrary integer-valued function.
    pub fn custom(
        label: impl Into<String>,
        f: impl Fn(&Permutation) -> i64 + Send + Sync + 'static,
    ) -> Self {
        Statistic {
            label: label.into(),
            description: "custom".into(),
            denominator: 1,
            kind: Kind::Custom(Arc::new(move |v| {
                f(&Permutation::from_values_unchecked(
                    v.iter().copied().collect(),
                ))
            })),
        }
    }

    /// `Σ a_k f_k` for integer coefficients.
    pub fn linear_combination(terms: &[(i64, Statistic)]) -> Self {
        let den = terms
            .iter()
            .fold(1i64, |acc, (_, s)| acc.lcm(&s.denominator));
        let label = terms
            .iter()
            .map(|(a, s)| format!("{a}*{}", s.label))
            .collect::<Vec<_>>()
            .join("+");
        let parts: Vec<(i64, Statistic)> = terms
            .iter()
            .map(|(a, s)| (a * (den / s.denominator), s.clone()))
            .collect();
        Statistic {
            label,
            description: "linear combination".into(),
            denominator: den,
            kind: Kind::Custom(Arc::new(move |v| {
                parts.iter().map(|(a, s)| a * s.scaled_unchecked(v)).sum()
            })),
        }
    }

    /// The same statistic, except that its value on the identity is off by
    /// one. Used to check that a corrupted evaluator is caught.
    pub fn with_fault(self) -> Self {
        let inner = self.clone();
        Statistic {
            label: self.label,
            description: format!("{} (faulty)", self.description),
            denominator: self.denominator,
            kind: Kind::Custom(Arc::new(move |v| {
                let is_identity = v.iter().enumerate().all(|(k, &x)| x as usize == k + 1);
                inner.scaled_unchecked(v) + is_identity as i64
            })),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    /// Fails when a positional family has no such position at degree `n`.
    pub fn check_degree(&self, n: usize) -> Result<()> {
        if let Kind::Family(_, i, fam) = self.kind {
            if i == 0 || i > fam.max_index(n) {
                return Err(Error::ParameterOutOfRange {
                    stat: self.label.clone(),
                    param: i,
                    degree: n,
                });
            }
        }
        Ok(())
    }

    /// Numerator of the value; the caller has already run `check_degree`.
    #[inline]
    pub fn scaled_unchecked(&self, v: &[u8]) -> i64 {
        match &self.kind {
            Kind::Plain(f) => f(v),
            Kind::Family(f, i, _) => f(v, *i),
            Kind::Custom(f) => f(v),
        }
    }

    pub fn evaluate(&self, sigma: &Permutation) -> Result<Rational> {
        self.check_degree(sigma.degree())?;
        Ok(Rational::new(
            self.scaled_unchecked(sigma.as_bytes()) as i128,
            self.denominator as i128,
        ))
    }
}

/// Every catalog statistic, in catalog order.
pub fn all_findstat() -> Vec<StatId> {
    CATALOG.iter().map(|e| StatId::FindStat(e.code)).collect()
}
