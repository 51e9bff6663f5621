//! Orbit decomposition and exact homomesy checks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::codes::{factorial, rank_bytes};
use crate::error::{Error, Result};
use crate::maps::MapId;
use crate::perm::{Permutation, Values, MAX_ENUM_DEGREE};
use crate::stats::Statistic;
use crate::Rational;

/// One orbit of a map, represented by its lexicographically smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub map: MapId,
    pub representative: Permutation,
    pub size: u64,
}

impl Orbit {
    /// Elements in iteration order, starting at the representative.
    pub fn elements(&self) -> OrbitIter {
        OrbitIter {
            map: self.map,
            next: Some(self.representative.as_bytes().iter().copied().collect()),
            remaining: self.size,
        }
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.elements().any(|x| &x == sigma)
    }

    fn scaled_sum(&self, stat: &Statistic) -> i128 {
        let mut x: Values = self.representative.as_bytes().iter().copied().collect();
        let mut total = 0i128;
        for _ in 0..self.size {
            total += stat.scaled_unchecked(&x) as i128;
            x = self.map.apply_bytes(&x);
        }
        total
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

pub struct OrbitIter {
    map: MapId,
    next: Option<Values>,
    remaining: u64,
}

impl Iterator for OrbitIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let cur = self.next.take()?;
        self.next = Some(self.map.apply_bytes(&cur));
        Some(Permutation::from_values_unchecked(cur))
    }
}

/// The orbit of `sigma` under `map`.
pub fn orbit_of(map: MapId, sigma: &Permutation) -> Result<Orbit> {
    let n = sigma.degree();
    let bound = if n <= 20 { factorial(n) } else { u64::MAX };
    let start: Values = sigma.as_bytes().iter().copied().collect();
    let mut x = map.apply_bytes(&start);
    let mut size = 1u64;
    let mut rep = start.clone();
    while x != start {
        if x < rep {
            rep = x.clone();
        }
        size += 1;
        if size > bound {
            return Err(Error::NonClosure(sigma.to_string()));
        }
        x = map.apply_bytes(&x);
    }
    Ok(Orbit {
        map,
        representative: Permutation::from_values_unchecked(rep),
        size,
    })
}

/// Average of `stat` over one orbit.
pub fn orbit_average(orbit: &Orbit, stat: &Statistic) -> Result<Rational> {
    stat.check_degree(orbit.representative.degree())?;
    Ok(Rational::new(
        orbit.scaled_sum(stat),
        orbit.size as i128 * stat.denominator() as i128,
    ))
}

fn check_enum_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUM_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            bound: MAX_ENUM_DEGREE,
        });
    }
    Ok(())
}

/// All orbits of `map` on `S_n`, sorted by representative.
///
/// Walks `S_n` in lexicographic order with a visited bitset indexed by
/// rank, so the first unvisited element of each orbit is its minimum.
pub fn decompose(map: MapId, n: usize) -> Result<Vec<Orbit>> {
    check_enum_degree(n)?;
    let total = factorial(n);
    let mut visited = vec![0u64; total.div_ceil(64) as usize];
    let mut mark = |r: u64| {
        let (w, b) = ((r - 1) / 64, (r - 1) % 64);
        let word = &mut visited[w as usize];
        let was = *word >> b & 1 == 1;
        *word |= 1 << b;
        was
    };
    let mut orbits = Vec::new();
    let mut sigma = Permutation::identity(n);
    let mut r = 1u64;
    loop {
        if !mark(r) {
            let start: Values = sigma.as_bytes().iter().copied().collect();
            let mut x = map.apply_bytes(&start);
            let mut size = 1u64;
            while x != start {
                size += 1;
                if size > total || mark(rank_bytes(&x)) {
                    return Err(Error::NonClosure(sigma.to_string()));
                }
                x = map.apply_bytes(&x);
            }
            orbits.push(Orbit {
                map,
                representative: sigma.clone(),
                size,
            });
        }
        if !sigma.advance() {
            break;
        }
        r += 1;
    }
    Ok(orbits)
}

/// Number of worker threads used for statistic evaluation. Output never
/// depends on it.
#[derive(Clone, Default)]
pub struct Engine {
    pool: Option<Arc<rayon::ThreadPool>>,
    jobs: usize,
}

impl fmt::Debug for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Engine(jobs={})", self.jobs)
    }
}

impl Engine {
    /// `jobs = 0` uses rayon's global pool; `jobs = 1` runs inline.
    pub fn new(jobs: usize) -> Self {
        let pool = (jobs > 1).then(|| {
            Arc::new(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .expect("thread pool"),
            )
        });
        Engine { pool, jobs }
    }

    pub fn sequential() -> Self {
        Engine::new(1)
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    fn sums(&self, orbits: &[Orbit], stat: &Statistic) -> Vec<i128> {
        match (&self.pool, self.jobs) {
            (_, 1) => orbits.iter().map(|o| o.scaled_sum(stat)).collect(),
            (Some(pool), _) => {
                pool.install(|| orbits.par_iter().map(|o| o.scaled_sum(stat)).collect())
            }
            (None, _) => orbits.par_iter().map(|o| o.scaled_sum(stat)).collect(),
        }
    }

    /// Checks `stat` against an existing decomposition of `S_n`.
    pub fn verdict(
        &self,
        map: MapId,
        n: usize,
        orbits: &[Orbit],
        stat: &Statistic,
    ) -> Result<HomomesyVerdict> {
        stat.check_degree(n)?;
        let den = stat.denominator() as i128;
        let sums = self.sums(orbits, stat);
        let total: i128 = sums.iter().sum();
        let global = Rational::new(total, factorial(n) as i128 * den);
        let averages: Vec<Rational> = sums
            .iter()
            .zip(orbits)
            .map(|(&s, o)| Rational::new(s, o.size as i128 * den))
            .collect();
        let outcome = match averages.iter().position(|a| *a != global) {
            None => Outcome::Homomesic(global),
            Some(bad) => {
                let witness = |k: usize| Witness {
                    representative: orbits[k].representative.clone(),
                    size: orbits[k].size,
                    average: averages[k],
                };
                let mut witnesses = vec![witness(bad)];
                if let Some(good) = averages.iter().position(|a| *a == global) {
                    witnesses.push(witness(good));
                }
                Outcome::Violated { witnesses }
            }
        };
        Ok(HomomesyVerdict {
            map,
            stat: stat.label().to_string(),
            n,
            outcome,
            global_average: global,
            per_orbit_averages: averages,
        })
    }

    pub fn check(&self, map: MapId, stat: &Statistic, n: usize) -> Result<HomomesyVerdict> {
        stat.check_degree(n)?;
        let orbits = decompose(map, n)?;
        self.verdict(map, n, &orbits, stat)
    }
}

/// An orbit quoted as evidence in a violated verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub representative: Permutation,
    pub size: u64,
    pub average: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Homomesic(Rational),
    /// The first orbit whose average differs from the global average, then
    /// (if any) the first orbit whose average equals it.
    Violated {
        witnesses: Vec<Witness>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomesyVerdict {
    pub map: MapId,
    pub stat: String,
    pub n: usize,
    pub outcome: Outcome,
    pub global_average: Rational,
    /// One entry per orbit, in representative order.
    pub per_orbit_averages: Vec<Rational>,
}

impl HomomesyVerdict {
    pub fn is_homomesic(&self) -> bool {
        matches!(self.outcome, Outcome::Homomesic(_))
    }

    pub fn constant(&self) -> Option<Rational> {
        match self.outcome {
            Outcome::Homomesic(c) => Some(c),
            Outcome::Violated { .. } => None,
        }
    }

    pub fn witnesses(&self) -> &[Witness] {
        match &self.outcome {
            Outcome::Homomesic(_) => &[],
            Outcome::Violated { witnesses } => witnesses,
        }
    }

    pub fn distinct_averages(&self) -> BTreeSet<Rational> {
        self.per_orbit_averages.iter().copied().collect()
    }
}

/// Sequential convenience wrapper around [`Engine::check`].
pub fn check_homomesy(map: MapId, stat: &Statistic, n: usize) -> Result<HomomesyVerdict> {
    Engine::sequential().check(map, stat, n)
}

/// Verdicts of one (map, statistic) pair over a degree range.
#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub map: MapId,
    pub stat: String,
    /// Degrees where a positional family has no such position are skipped.
    pub verdicts: Vec<HomomesyVerdict>,
}

impl ScanEntry {
    pub fn homomesic_throughout(&self) -> bool {
        !self.verdicts.is_empty() && self.verdicts.iter().all(|v| v.is_homomesic())
    }
}

/// Every (map, stat) pair at every degree in `degrees`.
pub fn scan_matrix(
    engine: &Engine,
    maps: &[MapId],
    stats: &[Statistic],
    degrees: std::ops::RangeInclusive<usize>,
) -> Result<Vec<ScanEntry>> {
    let mut entries: Vec<ScanEntry> = maps
        .iter()
        .flat_map(|&map| {
            stats.iter().map(move |s| ScanEntry {
                map,
                stat: s.label().to_string(),
                verdicts: Vec::new(),
            })
        })
        .collect();
    for n in degrees {
        for (mi, &map) in maps.iter().enumerate() {
            let orbits = decompose(map, n)?;
            for (si, stat) in stats.iter().enumerate() {
                if stat.check_degree(n).is_err() {
                    continue;
                }
                let v = engine.verdict(map, n, &orbits, stat)?;
                entries[mi * stats.len() + si].verdicts.push(v);
            }
        }
    }
    Ok(entries)
}

/// Orbit sizes with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSizeDistribution {
    pub map: MapId,
    pub n: usize,
    pub counts: BTreeMap<u64, u64>,
}

impl OrbitSizeDistribution {
    pub fn from_orbits(map: MapId, n: usize, orbits: &[Orbit]) -> Self {
        let mut counts = BTreeMap::new();
        for o in orbits {
            *counts.entry(o.size).or_insert(0) += 1;
        }
        OrbitSizeDistribution { map, n, counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|(s, c)| s * c).sum()
    }

    pub fn orbit_count(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// `[1, 2^(2), 5^(5), 10^(9)]`: each size, with its count as an exponent
/// when above one.
impl fmt::Display for OrbitSizeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (size, count)) in self.counts.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if *count == 1 {
                write!(f, "{size}")?;
            } else {
                write!(f, "{size}^({count})")?;
            }
        }
        f.write_str("]")
    }
}

pub fn orbit_size_distribution(map: MapId, n: usize) -> Result<OrbitSizeDistribution> {
    Ok(OrbitSizeDistribution::from_orbits(
        map,
        n,
        &decompose(map, n)?,
    ))
}

/// Number of Kreweras orbits of size `2k` on `S_n`, for `k | n`.
///
/// `K^{2k}` fixes exactly `(n/k)^k k!` permutations; removing those in
/// orbits whose size is a proper divisor of `2k` and dividing by `2k`
/// gives the count. Even proper divisors recurse; odd orbit sizes never
/// occur for even `n` and are read off the decomposition for odd `n`.
pub fn kreweras_even_orbit_count(n: usize, k: usize) -> Result<u64> {
    if k == 0 || n == 0 || !n.is_multiple_of(k) {
        return Err(Error::NotADivisor { n, k });
    }
    let odd = if n % 2 == 1 {
        orbit_size_distribution(MapId::Kreweras, n)?
            .counts
            .into_iter()
            .filter(|(s, _)| s % 2 == 1)
            .collect()
    } else {
        BTreeMap::new()
    };
    Ok(even_count(n, k, &odd))
}

fn even_count(n: usize, k: usize, odd: &BTreeMap<u64, u64>) -> u64 {
    let fixed = ((n / k) as u128).pow(k as u32) * factorial(k) as u128;
    let mut t: u128 = 0;
    for d in 1..2 * k {
        if !(2 * k).is_multiple_of(d) {
            continue;
        }
        let count = if d % 2 == 0 {
            even_count(n, d / 2, odd) as u128
        } else {
            *odd.get(&(d as u64)).unwrap_or(&0) as u128
        };
        t += d as u128 * count;
    }
    ((fixed - t) / (2 * k) as u128) as u64
}
