//! Counting kernels: the number of all common subsequences of a pair or a set
//! of orderings, the normalized concordance, feature-space distances and
//! judge outlier scores.
//!
//! Counts are exact [`BigUint`]s; the count for a single n-long permutation
//! is 2^n - 1 and outgrows machine words quickly.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::index::{build_position_index, build_truth_table, truth_row, TruthTable};
use crate::lcs::psi_lengths;
use crate::model::{BucketOrdering, OrderingSet};

/// Number of common subsequences of `x` and `y`.
///
/// Walks `x` left to right keeping, per position, the number of common
/// subsequences ending there. Only `y`'s label lookup and one count per
/// position of `x` are held.
pub fn kappa_pair(x: &BucketOrdering, y: &BucketOrdering) -> BigUint {
    let in_y: HashMap<&str, u32> = y
        .symbols()
        .iter()
        .zip(y.labels())
        .map(|(s, &l)| (s.as_str(), l))
        .collect();
    let x_labels = x.labels();
    let y_labels: Vec<Option<u32>> = x
        .symbols()
        .iter()
        .map(|s| in_y.get(s.as_str()).copied())
        .collect();

    let mut ending: Vec<BigUint> = Vec::with_capacity(x.len());
    let mut total = BigUint::zero();
    for m in 0..x.len() {
        let count = match y_labels[m] {
            None => BigUint::zero(),
            Some(ym) => {
                let mut c = BigUint::one();
                for j in 0..m {
                    if let Some(yj) = y_labels[j] {
                        if x_labels[j] < x_labels[m] && yj < ym {
                            c += &ending[j];
                        }
                    }
                }
                c
            }
        };
        total += &count;
        ending.push(count);
    }
    total
}

/// `kappa_pair(x, x)` in closed form: a subsequence takes at most one item
/// from each bucket, so the count is `prod (1 + |bucket|) - 1`.
pub fn self_kernel(x: &BucketOrdering) -> BigUint {
    let prod: BigUint = x
        .buckets()
        .iter()
        .map(|b| BigUint::from(b.len() + 1))
        .product();
    prod - BigUint::one()
}

/// Per-reference-symbol counts of common subsequences ending on that symbol:
/// `c[m] = T[m][m] * (1 + sum_{j<m} c[j] * T[m][j])`.
pub fn per_symbol_counts(t: &TruthTable) -> Vec<BigUint> {
    let m = t.size();
    let mut counts: Vec<BigUint> = Vec::with_capacity(m);
    for j in 0..m {
        counts.push(count_from_row(t.row(j), j, &counts));
    }
    counts
}

fn count_from_row(row: &[bool], j: usize, earlier: &[BigUint]) -> BigUint {
    if !row[j] {
        return BigUint::zero();
    }
    let mut c = BigUint::one();
    for (k, prev) in earlier.iter().enumerate().take(j) {
        if row[k] {
            c += prev;
        }
    }
    c
}

/// Concordance summary of an ordering set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConcordanceReport {
    #[serde(serialize_with = "decimal")]
    pub kappa: BigUint,
    #[serde(serialize_with = "decimal_vec")]
    pub per_symbol: Vec<BigUint>,
    #[serde(serialize_with = "six_places")]
    pub normalized: f64,
    pub llcs: usize,
    /// Length of the reference ordering.
    pub n: usize,
    /// Number of orderings.
    #[serde(rename = "N")]
    pub orderings: usize,
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

fn decimal_vec<S: Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_str_radix(10)))
}

pub(crate) fn six_places<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round6(*v))
}

pub(crate) fn round6(v: f64) -> f64 {
    (v * 1e6).round() / 1e6
}

/// Number of all common subsequences of the set, with per-symbol counts,
/// normalized concordance and the longest common subsequence length.
pub fn kappa_set(set: &OrderingSet) -> ConcordanceReport {
    let t = build_truth_table(&build_position_index(set));
    let per_symbol = per_symbol_counts(&t);
    let llcs = psi_lengths(&t).llcs;
    report(set, per_symbol, llcs)
}

/// Same result as [`kappa_set`] without materializing the truth table: each
/// row is derived from the position index when it is needed.
pub fn kappa_set_low_memory(set: &OrderingSet) -> ConcordanceReport {
    let index = build_position_index(set);
    let m = index.cols();
    let mut row = vec![false; m];
    let mut per_symbol: Vec<BigUint> = Vec::with_capacity(m);
    let mut psi: Vec<usize> = Vec::with_capacity(m);
    for j in 0..m {
        truth_row(&index, j, &mut row);
        per_symbol.push(count_from_row(&row, j, &per_symbol));
        let best = (0..j).filter(|&k| row[k]).map(|k| psi[k]).max().unwrap_or(0);
        psi.push(if row[j] { best + 1 } else { 0 });
    }
    let llcs = psi.into_iter().max().unwrap_or(0);
    report(set, per_symbol, llcs)
}

fn report(set: &OrderingSet, per_symbol: Vec<BigUint>, llcs: usize) -> ConcordanceReport {
    let kappa: BigUint = per_symbol.iter().sum();
    let self_kernels: Vec<BigUint> = set.orderings().iter().map(self_kernel).collect();
    ConcordanceReport {
        normalized: normalize(&kappa, &self_kernels),
        kappa,
        per_symbol,
        llcs,
        n: set.reference().len(),
        orderings: set.len(),
    }
}

/// Natural log of a big integer, accurate to f64 precision at any size.
fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        v.to_f64().unwrap_or(f64::INFINITY).ln()
    } else {
        let shift = bits - 64;
        let top = (v >> shift).to_f64().unwrap_or(f64::INFINITY);
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// `kappa / (prod self_kernels)^(1/N)`, clamped to [0, 1].
pub fn normalize(kappa: &BigUint, self_kernels: &[BigUint]) -> f64 {
    if kappa.is_zero() || self_kernels.is_empty() {
        return 0.0;
    }
    let mean_ln =
        self_kernels.iter().map(ln_big).sum::<f64>() / self_kernels.len() as f64;
    (ln_big(kappa) - mean_ln).exp().clamp(0.0, 1.0)
}

/// Normalized concordance: the set count divided by the geometric mean of the
/// self-kernels of its orderings.
pub fn normalized_concordance(set: &OrderingSet) -> f64 {
    kappa_set(set).normalized
}

/// Exact squared feature-space distance `k(x,x) + k(y,y) - 2 k(x,y)`, i.e.
/// the size of the symmetric difference of the two subsequence sets.
pub fn squared_distance(x: &BucketOrdering, y: &BucketOrdering) -> BigUint {
    let xx = self_kernel(x);
    let yy = self_kernel(y);
    let xy = kappa_pair(x, y);
    xx + yy - (xy << 1u32)
}

/// Euclidean distance between the subsequence feature vectors of `x` and `y`.
pub fn distance(x: &BucketOrdering, y: &BucketOrdering) -> f64 {
    sqrt_big(&squared_distance(x, y))
}

fn sqrt_big(v: &BigUint) -> f64 {
    match v.to_f64() {
        Some(f) if f.is_finite() => f.sqrt(),
        _ => (0.5 * ln_big(v)).exp(),
    }
}

/// Symmetric N x N distance matrix labelled by judge.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceMatrix {
    pub judges: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

pub fn distance_matrix(set: &OrderingSet) -> DistanceMatrix {
    let list = set.orderings();
    let n = list.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let computed: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| distance(&list[i], &list[j]))
        .collect();
    let mut values = vec![vec![0.0; n]; n];
    for (&(i, j), d) in pairs.iter().zip(computed) {
        values[i][j] = d;
        values[j][i] = d;
    }
    DistanceMatrix {
        judges: (0..n).map(|k| set.judge_label(k)).collect(),
        values,
    }
}

/// Mean distance of one judge to all others.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutlierScore {
    pub judge: String,
    #[serde(serialize_with = "six_places")]
    pub score: f64,
}

/// Mean distance of every judge to the others, most distant first.
pub fn outlier_scores(set: &OrderingSet) -> Result<Vec<OutlierScore>> {
    let n = set.len();
    if n < 2 {
        return Err(Error::TooFewJudges(n));
    }
    let m = distance_matrix(set);
    let mut scores: Vec<OutlierScore> = m
        .values
        .iter()
        .zip(m.judges)
        .map(|(row, judge)| OutlierScore {
            judge,
            score: row.iter().sum::<f64>() / (n - 1) as f64,
        })
        .collect();
    scores.sort_by(|a, b| b.score.total_cmp(&a.score));
    Ok(scores)
}

/// Maximum number of distinct k-long common subsequences of two n-long
/// sequences: `prod_{i=0}^{k-1} floor((n + i) / k)`.
pub fn max_common_count(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::InvalidLength { n, k });
    }
    Ok((0..k).map(|i| BigUint::from((n + i) / k)).product())
}
