//! The table of known homomesies with their closed-form constants.
//!
//! Shipped as `data/homomesies.csv` with columns
//! `maps,stat,constant,n_min,group`. `maps` is a space-separated list;
//! `stat` is a statistic id or a family pattern (`invs_at:i`,
//! `descent_at:i`, `entry:i` for every valid `i`, `entry:n/2` for even `n`).
//! Below `n_min` a row only requires homomesy, not the closed form.

use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::maps::MapId;
use crate::stats::StatId;
use crate::Rational;

const DEFAULT_TABLE: &str = include_str!("../data/homomesies.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatPattern {
    Fixed(u32),
    InvsAtEach,
    DescentAtEach,
    EntryEach,
    EntryHalf,
}

impl StatPattern {
    fn parse(text: &str) -> Result<Self> {
        Ok(match text {
            "invs_at:i" => StatPattern::InvsAtEach,
            "descent_at:i" => StatPattern::DescentAtEach,
            "entry:i" => StatPattern::EntryEach,
            "entry:n/2" => StatPattern::EntryHalf,
            other => match other.parse::<StatId>()? {
                StatId::FindStat(c) => StatPattern::Fixed(c),
                _ => return Err(Error::UnknownStatistic(other.to_string())),
            },
        })
    }

    /// Concrete statistics this pattern stands for at degree `n`, with the
    /// family index where there is one.
    pub fn instances(self, n: usize) -> Vec<(StatId, Option<usize>)> {
        match self {
            StatPattern::Fixed(c) => vec![(StatId::FindStat(c), None)],
            StatPattern::InvsAtEach => (1..=n).map(|i| (StatId::InvsAt(i), Some(i))).collect(),
            StatPattern::DescentAtEach => (1..n).map(|i| (StatId::DescentAt(i), Some(i))).collect(),
            StatPattern::EntryEach => (1..=n).map(|i| (StatId::Entry(i), Some(i))).collect(),
            StatPattern::EntryHalf if n.is_multiple_of(2) => {
                vec![(StatId::Entry(n / 2), Some(n / 2))]
            }
            StatPattern::EntryHalf => Vec::new(),
        }
    }

    fn matches(self, stat: &StatId, n: usize) -> bool {
        match (self, stat) {
            (StatPattern::Fixed(c), StatId::FindStat(d)) => c == *d,
            (StatPattern::InvsAtEach, StatId::InvsAt(i)) => *i <= n,
            (StatPattern::DescentAtEach, StatId::DescentAt(i)) => *i < n,
            (StatPattern::EntryEach, StatId::Entry(i)) => *i <= n,
            (StatPattern::EntryHalf, StatId::Entry(i)) => n.is_multiple_of(2) && *i == n / 2,
            _ => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub maps: Vec<MapId>,
    pub stat_text: String,
    pub stat: StatPattern,
    pub constant: Formula,
    pub n_min: usize,
    pub group: String,
}

impl TableRow {
    /// `maps stat` as written in the table, e.g. `Mp00149 St000018`.
    pub fn label(&self) -> String {
        let maps: Vec<String> = self.maps.iter().map(|m| m.to_string()).collect();
        format!("{} {}", maps.join("+"), self.stat_text)
    }

    /// The expected constant for one instance, or `None` below `n_min`
    /// (where only homomesy itself is required).
    pub fn expected(&self, n: usize, index: Option<usize>) -> Result<Option<Rational>> {
        if n < self.n_min {
            return Ok(None);
        }
        self.constant.eval(n, index).map(Some)
    }
}

#[derive(Deserialize)]
struct RawRow {
    maps: String,
    stat: String,
    constant: String,
    n_min: usize,
    group: String,
}

#[derive(Clone, Debug)]
pub struct ExpectedResultsTable {
    rows: Vec<TableRow>,
}

impl ExpectedResultsTable {
    /// The table compiled into the crate.
    pub fn builtin() -> Self {
        Self::from_reader(DEFAULT_TABLE.as_bytes()).expect("built-in table parses")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_reader(std::fs::File::open(path)?)
    }

    pub fn from_reader(reader: impl Read) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(reader);
        let mut rows = Vec::new();
        for (k, rec) in rdr.deserialize::<RawRow>().enumerate() {
            let line = k + 2;
            let bad = |reason: String| Error::MalformedTable { line, reason };
            let raw = rec.map_err(|e| bad(e.to_string()))?;
            let maps = raw
                .maps
                .split_whitespace()
                .map(|m| m.parse::<MapId>())
                .collect::<Result<Vec<_>>>()
                .map_err(|e| bad(e.to_string()))?;
            if maps.is_empty() {
                return Err(bad("no maps".into()));
            }
            let stat = StatPattern::parse(raw.stat.trim()).map_err(|e| bad(e.to_string()))?;
            let constant = Formula::parse(&raw.constant).map_err(|e| bad(e.to_string()))?;
            let indexed = matches!(
                stat,
                StatPattern::InvsAtEach | StatPattern::DescentAtEach | StatPattern::EntryEach
            );
            if constant.uses_index() && !indexed {
                return Err(bad(
                    "constant uses i but the statistic is not a family".into()
                ));
            }
            rows.push(TableRow {
                maps,
                stat_text: raw.stat.trim().to_string(),
                stat,
                constant,
                n_min: raw.n_min,
                group: raw.group,
            });
        }
        Ok(ExpectedResultsTable { rows })
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The row covering `(map, stat)` at degree `n`, with the instance's
    /// family index.
    pub fn lookup(
        &self,
        map: MapId,
        stat: &StatId,
        n: usize,
    ) -> Option<(&TableRow, Option<usize>)> {
        let index = match stat {
            StatId::InvsAt(i) | StatId::DescentAt(i) | StatId::Entry(i) => Some(*i),
            _ => None,
        };
        self.rows
            .iter()
            .find(|r| r.maps.contains(&map) && r.stat.matches(stat, n))
            .map(|r| (r, index))
    }
}
