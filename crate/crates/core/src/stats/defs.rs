//! Statistic evaluators on raw one-line notation (`v[k] = σ_{k+1}`).

use std::sync::LazyLock;

use crate::codes;
use crate::patterns::{count_occurrences, parse_pattern, PatternSpec};
use crate::perm::Permutation;

type V<'a> = &'a [u8];

#[inline]
fn des_at(v: V, i: usize) -> bool {
    i >= 1 && i < v.len() && v[i - 1] > v[i]
}

#[inline]
fn asc_at(v: V, i: usize) -> bool {
    i >= 1 && i < v.len() && v[i - 1] < v[i]
}

fn b(x: bool) -> i64 {
    x as i64
}

fn inverse(v: V) -> Vec<u8> {
    let mut out = vec![0; v.len()];
    for (k, &x) in v.iter().enumerate() {
        out[x as usize - 1] = (k + 1) as u8;
    }
    out
}

pub fn maj(v: V) -> i64 {
    (1..v.len())
        .filter(|&i| des_at(v, i))
        .map(|i| i as i64)
        .sum()
}

pub fn des(v: V) -> i64 {
    (1..v.len()).filter(|&i| des_at(v, i)).count() as i64
}

pub fn asc(v: V) -> i64 {
    (1..v.len()).filter(|&i| asc_at(v, i)).count() as i64
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

pub fn inv(v: V) -> i64 {
    pairs(v.len()).filter(|&(a, b)| v[a] > v[b]).count() as i64
}

pub fn noninv(v: V) -> i64 {
    pairs(v.len()).filter(|&(a, b)| v[a] < v[b]).count() as i64
}

pub fn rtl_maxima(v: V) -> i64 {
    let mut best = 0;
    let mut count = 0;
    for &x in v.iter().rev() {
        if x > best {
            best = x;
            count += 1;
        }
    }
    count
}

pub fn rtl_minima(v: V) -> i64 {
    let mut best = u8::MAX;
    let mut count = 0;
    for &x in v.iter().rev() {
        if x < best {
            best = x;
            count += 1;
        }
    }
    count
}

pub fn ltr_minima(v: V) -> i64 {
    let mut best = u8::MAX;
    let mut count = 0;
    for &x in v {
        if x < best {
            best = x;
            count += 1;
        }
    }
    count
}

pub fn ltr_maxima(v: V) -> i64 {
    let mut best = 0;
    let mut count = 0;
    for &x in v {
        if x > best {
            best = x;
            count += 1;
        }
    }
    count
}

pub fn rank(v: V) -> i64 {
    codes::rank_bytes(v) as i64
}

pub fn peaks(v: V) -> i64 {
    v.windows(3).filter(|w| w[0] < w[1] && w[1] > w[2]).count() as i64
}

pub fn valleys(v: V) -> i64 {
    v.windows(3).filter(|w| w[0] > w[1] && w[1] < w[2]).count() as i64
}

pub fn double_ascents(v: V) -> i64 {
    v.windows(3).filter(|w| w[0] < w[1] && w[1] < w[2]).count() as i64
}

pub fn double_descents(v: V) -> i64 {
    v.windows(3).filter(|w| w[0] > w[1] && w[1] > w[2]).count() as i64
}

pub fn left_outer_peaks(v: V) -> i64 {
    peaks(v) + b(des_at(v, 1))
}

pub fn right_outer_peaks(v: V) -> i64 {
    peaks(v) + b(asc_at(v, v.len().saturating_sub(1)))
}

pub fn outer_peaks(v: V) -> i64 {
    peaks(v) + b(des_at(v, 1)) + b(asc_at(v, v.len().saturating_sub(1)))
}

pub fn boundary_valleys(v: V) -> i64 {
    valleys(v) + b(asc_at(v, 1)) + b(des_at(v, v.len().saturating_sub(1)))
}

pub fn first_entry(v: V) -> i64 {
    v[0] as i64
}

pub fn last_entry(v: V) -> i64 {
    v[v.len() - 1] as i64
}

pub fn inversion_sum(v: V) -> i64 {
    pairs(v.len())
        .filter(|&(a, b)| v[a] > v[b])
        .map(|(a, b)| (b - a) as i64)
        .sum()
}

pub fn noninversion_sum(v: V) -> i64 {
    pairs(v.len())
        .filter(|&(a, b)| v[a] < v[b])
        .map(|(a, b)| (b - a) as i64)
        .sum()
}

pub fn exceedances(v: V) -> i64 {
    v.iter()
        .enumerate()
        .filter(|&(k, &x)| x as usize > k + 1)
        .count() as i64
}

pub fn weak_deficiencies(v: V) -> i64 {
    v.iter()
        .enumerate()
        .filter(|&(k, &x)| x as usize <= k + 1)
        .count() as i64
}

pub fn load(v: V) -> i64 {
    let mut w = inverse(v);
    w.reverse();
    maj(&w)
}

pub fn inverse_maj(v: V) -> i64 {
    maj(&inverse(v))
}

pub fn runs(v: V) -> i64 {
    des(v) + 1
}

pub fn cosine(v: V) -> i64 {
    v.iter()
        .enumerate()
        .map(|(k, &x)| (k as i64 + 1) * x as i64)
        .sum()
}

pub fn recoils(v: V) -> i64 {
    des(&inverse(v))
}

pub fn switches(v: V) -> i64 {
    peaks(v) + valleys(v)
}

fn inversions_within(v: V, dist: usize) -> i64 {
    pairs(v.len())
        .filter(|&(a, b)| b - a <= dist && v[a] > v[b])
        .count() as i64
}

pub fn inversions_dist_le_3(v: V) -> i64 {
    inversions_within(v, 3)
}

pub fn inversions_dist_le_2(v: V) -> i64 {
    inversions_within(v, 2)
}

pub fn even_inversions(v: V) -> i64 {
    pairs(v.len())
        .filter(|&(a, b)| (b - a) % 2 == 0 && v[a] > v[b])
        .count() as i64
}

pub fn odd_inversions(v: V) -> i64 {
    pairs(v.len())
        .filter(|&(a, b)| (b - a) % 2 == 1 && v[a] > v[b])
        .count() as i64
}

pub fn inversion_index(v: V) -> i64 {
    pairs(v.len())
        .filter(|&(a, b)| v[a] > v[b])
        .map(|(a, _)| v[a] as i64)
        .sum()
}

/// Descents plus a descent at position `n` when `σ_n > σ_1`.
pub fn cyclic_descents(v: V) -> i64 {
    let n = v.len();
    des(v) + b(n >= 2 && v[n - 1] > v[0])
}

/// One more than peaks plus valleys, plus one when position 1 is a descent.
pub fn up_down_runs(v: V) -> i64 {
    1 + peaks(v) + valleys(v) + b(des_at(v, 1))
}

/// Largest `k` with positions `i_k < … < i_1` and `L_{i_j} >= j`.
pub fn staircase_size(v: V) -> i64 {
    let code = codes::lehmer_bytes(v);
    let mut j = 1;
    for &c in code.iter().rev() {
        if c as usize >= j {
            j += 1;
        }
    }
    j as i64 - 1
}

/// Twice the standardized bi-alternating inversion number.
pub fn bi_alternating_std_x2(v: V) -> i64 {
    let n = v.len();
    let mut j = 0i64;
    for (y, x) in pairs(n) {
        let sign = if v[x] > v[y] { 1 } else { -1 };
        let parity = if (x + y) % 2 == 0 { 1 } else { -1 };
        j += parity * sign;
    }
    let h = (n / 2) as i64;
    j + h * h
}

/// Repeated left-to-right passes removing `1, 2, …, n` in order; counts
/// every visit to a position that is not removed on that visit.
pub fn disorder(v: V) -> i64 {
    let n = v.len();
    let mut alive = vec![true; n];
    let mut next = 1u8;
    let mut skipped = 0;
    while (next as usize) <= n {
        for k in 0..n {
            if !alive[k] {
                continue;
            }
            if v[k] == next {
                alive[k] = false;
                next += 1;
            } else {
                skipped += 1;
            }
        }
    }
    skipped
}

pub fn nonneg_walk_steps(v: V) -> i64 {
    let mut height = 0i64;
    let mut count = 0;
    for w in v.windows(2) {
        let next = if w[0] < w[1] { height + 1 } else { height - 1 };
        if height >= 0 && next >= 0 {
            count += 1;
        }
        height = next;
    }
    count
}

pub fn comajor(v: V) -> i64 {
    v.len() as i64 * des(v) - maj(v)
}

pub fn descents_dist_2(v: V) -> i64 {
    v.windows(3).filter(|w| w[0] > w[2]).count() as i64
}

pub fn ascents_dist_2(v: V) -> i64 {
    v.windows(3).filter(|w| w[0] < w[2]).count() as i64
}

pub fn strict_3_descents(v: V) -> i64 {
    v.windows(4).filter(|w| w[0] > w[3]).count() as i64
}

pub fn odd_descents(v: V) -> i64 {
    (1..v.len()).filter(|&i| i % 2 == 1 && des_at(v, i)).count() as i64
}

pub fn even_descents(v: V) -> i64 {
    (1..v.len()).filter(|&i| i % 2 == 0 && des_at(v, i)).count() as i64
}

pub fn maj_minus_inv(v: V) -> i64 {
    maj(v) - inv(v)
}

pub fn maj_plus_inv(v: V) -> i64 {
    maj(v) + inv(v)
}

pub fn spearman(v: V) -> i64 {
    v.iter()
        .enumerate()
        .map(|(k, &x)| {
            let d = x as i64 - k as i64 - 1;
            d * d
        })
        .sum()
}

pub fn des_plus_recoils(v: V) -> i64 {
    des(v) + recoils(v)
}

/// Positions `i >= 2` with `σ_{i-1} < σ_i` and every smaller value left of `i`.
pub fn qualified_ascent_tops(v: V) -> i64 {
    (1..v.len())
        .filter(|&k| v[k - 1] < v[k] && v[k + 1..].iter().all(|&x| x > v[k]))
        .count() as i64
}

pub fn invs_at(v: V, i: usize) -> i64 {
    if i == 0 || i > v.len() {
        return 0;
    }
    v[i..].iter().filter(|&&x| x < v[i - 1]).count() as i64
}

pub fn descent_at(v: V, i: usize) -> i64 {
    b(des_at(v, i))
}

pub fn entry(v: V, i: usize) -> i64 {
    v[i - 1] as i64
}

pub fn invs_third(v: V) -> i64 {
    invs_at(v, 3)
}

pub fn invs_second(v: V) -> i64 {
    invs_at(v, 2)
}

fn pattern_sum(v: V, specs: &[PatternSpec]) -> i64 {
    // Pattern counting wants a validated Permutation; the evaluator
    // contract guarantees `v` already is one.
    let sigma = Permutation::from_values_unchecked(v.iter().copied().collect());
    specs
        .iter()
        .map(|p| count_occurrences(&sigma, p) as i64)
        .sum()
}

macro_rules! pattern_stat {
    ($name:ident, [$($p:literal),+ $(,)?]) => {
        pub fn $name(v: V) -> i64 {
            static SPECS: LazyLock<Vec<PatternSpec>> = LazyLock::new(|| {
                vec![$(parse_pattern($p).expect("built-in pattern")),+]
            });
            pattern_sum(v, &SPECS)
        }
    };
}

pattern_stat!(pat_21_3, ["21-3"]);
pattern_stat!(pat_13_2, ["13-2"]);
pattern_stat!(pat_12_3, ["12-3"]);
pattern_stat!(pat_31_2, ["31-2"]);
pattern_stat!(pat_23_1, ["23-1"]);
pattern_stat!(pat_32_1, ["32-1"]);
pattern_stat!(pat_123_132, ["123", "132"]);
pattern_stat!(pat_213_231, ["213", "231"]);
pattern_stat!(pat_312_321, ["312", "321"]);
pattern_stat!(pat_132_213_321, ["132", "213", "321"]);
pattern_stat!(pat_14_2_3_14_3_2, ["14-2-3", "14-3-2"]);
pattern_stat!(pat_anchored_1_23, ["|1-23"]);

pub fn mahonian_stat(v: V) -> i64 {
    pattern_stat!(part, ["13-2", "21-3", "32-1"]);
    part(v) + des(v)
}

pub fn mahonian_stat_prime(v: V) -> i64 {
    pattern_stat!(part, ["13-2", "31-2", "32-1"]);
    part(v) + des(v)
}

pub fn makl(v: V) -> i64 {
    pattern_stat!(part, ["1-32", "31-2", "32-1"]);
    part(v) + des(v)
}
